//! Enumeration and certification engine for pairs of labelled intersection
//! graphs on tori.

pub mod check;
pub mod cli;
pub mod cycles;
pub mod enumerate;
pub mod homology;
pub mod io;
pub mod pairgraph;
pub mod surfmap;
