//! The permutation a full negative family induces on labels, over the
//! p1=t/2 shapes, with how many jumping partners each one has.

use torpair::enumerate::engine::enumerate_two_vertex_shapes;
use torpair::enumerate::partners::jumping_partners;
use torpair::enumerate::spec::Branch;
use torpair::enumerate::CaseSpec;
use torpair::pairgraph::sigma_of_family;

fn main() {
    for t in [4, 6, 8] {
        let mut spec = CaseSpec::new(2, t, 5);
        spec.branch = Some(Branch::HalfT);
        for (id, _, g) in enumerate_two_vertex_shapes(&spec) {
            if g.euler_characteristic() != 0 || !g.trivial_loops().is_empty() {
                continue;
            }
            let Some(fam) = g.parallel_families().into_iter().find(|f| !f.positive && f.size() == t) else {
                continue;
            };
            match sigma_of_family(&g, &fam) {
                Ok(s) => println!(
                    "t={t} {id}: sigma(1)={} involution={} identity={} partners={}",
                    s.apply(1),
                    s.is_involution(),
                    s.is_identity(),
                    jumping_partners(&g).len()
                ),
                Err(e) => println!("t={t} {id}: {e}"),
            }
        }
    }
}
