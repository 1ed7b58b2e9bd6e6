//! Exhaustive check of the small reduced-graph lemmas.

fn main() {
    let t = std::time::Instant::now();
    let r = torpair::enumerate::lemmas::verify_small_reduced_lemmas();
    print!("{}", r.to_text());
    eprintln!("{:?}", t.elapsed());
    std::process::exit(if r.pass() { 0 } else { 1 });
}
