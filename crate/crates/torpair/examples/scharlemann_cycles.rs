//! Scharlemann cycles and extended S-cycles in the partner of the worst case.

use torpair::cycles::{find_extended_s_cycles, find_s_cycles, find_scharlemann};
use torpair::io::parse_pair;

fn main() {
    let p = parse_pair(include_str!("../data/worst_t4.pair")).unwrap();
    for g in [&p.gs, &p.gt] {
        let name = |es: &[usize]| es.iter().map(|&e| g.edge_name(e).to_string()).collect::<Vec<_>>().join(" ");
        println!("{} (q={})", g.name, g.q);
        for c in find_scharlemann(g) {
            println!("  scharlemann {:?} length {}: {}", c.label_pair, c.length, name(&c.edges));
        }
        println!("  s-cycles: {}", find_s_cycles(g).len());
        for x in find_extended_s_cycles(g) {
            println!("  extended {:?}: {}", x.label_pair, name(&x.edges));
        }
    }
}
