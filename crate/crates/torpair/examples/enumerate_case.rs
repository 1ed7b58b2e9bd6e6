//! Run a case and print its elimination certificate.
//!
//!     cargo run --release --example enumerate_case -- "case s=2 t=4 branch=p1=t/2"

use torpair::enumerate::{run_case, CaseSpec};

fn main() {
    let line = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "case s=2 t=2 delta=5 assume=klein_free_beta,distance=5 expect=empty".into());
    let spec = match CaseSpec::parse_line(&line, 1) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(2);
        }
    };
    let r = run_case(&spec);
    print!("{}", r.to_text());
    eprintln!("{} ms", r.millis);
}
