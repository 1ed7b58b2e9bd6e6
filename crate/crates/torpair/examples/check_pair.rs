//! Load pair files and run every constraint on them.

use torpair::enumerate::engine::{check_pair, default_pipeline};
use torpair::enumerate::CaseSpec;
use torpair::homology::pair_homology;
use torpair::io::parse_pair;

fn main() {
    let mut spec = CaseSpec::new(2, 2, 5);
    spec.klein_free_beta = true;
    spec.distance = Some(5);
    for name in ["p3_t2.pair", "worst_t4.pair", "parity_violation.pair"] {
        let text = std::fs::read_to_string(format!("{}/data/{name}", env!("CARGO_MANIFEST_DIR"))).unwrap();
        let p = parse_pair(&text).unwrap();
        spec.t = p.gs.q;
        let (a, b) = pair_homology(&p).unwrap();
        println!("{name}  H1 = ({a}, {b})");
        for l in default_pipeline() {
            let c = check_pair(l, &p, &spec);
            if !c.pass {
                println!("  {c}");
            }
        }
    }
}
