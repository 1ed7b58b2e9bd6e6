//! Case-analysis engine: candidate generation, canonical forms, pruning and
//! certificates.

pub mod canon;
pub mod engine;
pub mod lemmas;
pub mod partners;
pub mod shapes;
pub mod spec;

pub use canon::{graph_code, pair_code, Code};
pub use engine::{run_case, run_case_scheduled, run_case_with, CaseReport};
pub use spec::CaseSpec;
