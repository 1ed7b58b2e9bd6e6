//! Face tracing, Euler characteristic and parallel families of one graph.

use torpair::io::parse_pair;

fn main() {
    let text = include_str!("../data/worst_t4.pair");
    let p = parse_pair(text).expect("fixture parses");
    for g in [&p.gs, &p.gt] {
        let faces = g.trace_faces();
        println!(
            "{}: V={} E={} F={} chi={} genus={}",
            g.name,
            g.vertex_count(),
            g.edge_count(),
            faces.len(),
            g.euler_characteristic(),
            g.map_genus()
        );
        let lens: Vec<usize> = faces.iter().map(|f| f.len()).collect();
        println!("  face lengths {lens:?}");
        for f in g.parallel_families() {
            let names: Vec<&str> = f.edges.iter().map(|&e| g.edge_name(e)).collect();
            let sign = if f.positive { '+' } else { '-' };
            println!("  family {sign} {:?}: {}", f.ends, names.join(" "));
        }
    }
}
