//! Two-vertex shapes: every graph with two vertices on the torus whose
//! reduced graph has at most six edges is a sub-shape of one template.
//!
//! Around u1: loops (east ends), P2, P3, loops (west ends, reversed), P4
//! reversed, P5 reversed. Around u2: loops (east), P4, P5, loops (west,
//! reversed), P2 reversed, P3 reversed. A parallel family meets its two
//! ends in opposite orders.

use crate::surfmap::LabelledGraph;

pub type PTuple = [usize; 5];

/// All (p1..p5) with p1 >= 1 and 2 p1 + p2 + .. + p5 = delta * t.
pub fn ptuples(t: usize, delta: usize) -> Vec<PTuple> {
    let tot = delta * t;
    let mut out = Vec::new();
    for p1 in 1..=tot / 2 {
        let r = tot - 2 * p1;
        for p2 in 0..=r {
            for p3 in 0..=r - p2 {
                for p4 in 0..=r - p2 - p3 {
                    out.push([p1, p2, p3, p4, r - p2 - p3 - p4]);
                }
            }
        }
    }
    out
}

/// The template graph with label offsets `o1`, `o2` (the label at slot 0
/// of u1 is `o1 + 1`; of u2 it is `o2 + 1`).
pub fn figure_t2(t: usize, delta: usize, p: PTuple, o1: usize, o2: usize) -> LabelledGraph {
    let [p1, p2, p3, p4, p5] = p;
    let fwd = |tag: &str, n: usize| -> Vec<String> { (1..=n).map(|k| format!("{tag}{k}")).collect() };
    let rev = |tag: &str, n: usize| -> Vec<String> { (1..=n).rev().map(|k| format!("{tag}{k}")).collect() };
    let u1: Vec<String> = [fwd("a", p1), fwd("c", p2), fwd("d", p3), rev("a", p1), rev("e", p4), rev("f", p5)].concat();
    let u2: Vec<String> = [fwd("b", p1), fwd("e", p4), fwd("f", p5), rev("b", p1), rev("c", p2), rev("d", p3)].concat();
    let r1: Vec<(String, u32)> = u1.into_iter().enumerate().map(|(k, e)| (e, ((k + o1) % t + 1) as u32)).collect();
    let n2 = u2.len();
    let r2: Vec<(String, u32)> =
        u2.into_iter().enumerate().map(|(k, e)| (e, ((o2 + n2 * t - k) % t + 1) as u32)).collect();
    let name = format!("p{}{}{}{}{}o{}{}", p1, p2, p3, p4, p5, o1, o2);
    let mut g = LabelledGraph::from_rotations(&name, t, delta, &[r1, r2]).expect("template is well formed");
    // One side of the template is empty: the two faces that meet it are
    // the ends of an annulus.
    let d1 = 2 * p1 + p2 + p3 + p4 + p5;
    let last1 = g.dart(1, d1 - 1);
    let last2 = g.dart(2, d1 - 1);
    if p4 + p5 == 0 {
        let y2 = g.dart(2, p1 - 1);
        g.set_annulus(Some((g.inv(last1), g.inv(y2))));
    } else if p2 + p3 == 0 {
        let y1 = g.dart(1, p1 - 1);
        g.set_annulus(Some((g.inv(y1), g.inv(last2))));
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tuple_count_matches_closed_form() {
        // for fixed p1 the rest is a composition of r into 4 parts: C(r+3, 3)
        let want: usize = (1..=5)
            .map(|p1| {
                let r = 10 - 2 * p1;
                (r + 1) * (r + 2) * (r + 3) / 6
            })
            .sum();
        assert_eq!(ptuples(2, 5).len(), want);
    }

    #[test]
    fn template_is_a_torus_map() {
        let g = figure_t2(2, 5, [3, 2, 0, 2, 2], 0, 0);
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edge_count(), 12);
        assert_eq!(g.euler_characteristic(), 0);
        assert_eq!(g.face_count(), 10);
    }

    #[test]
    fn empty_side_becomes_annulus() {
        let g = figure_t2(2, 5, [3, 2, 2, 0, 0], 0, 0);
        assert!(g.annulus().is_some());
        assert_eq!(g.euler_characteristic(), 0);
        assert!(g.trivial_loops().is_empty());
        let g = figure_t2(2, 5, [3, 0, 0, 2, 2], 0, 0);
        assert_eq!(g.euler_characteristic(), 0);
        assert!(g.trivial_loops().is_empty());
    }

    #[test]
    fn families_have_template_sizes() {
        let g = figure_t2(2, 5, [3, 2, 1, 1, 0], 0, 0);
        let mut sizes: Vec<usize> = g.parallel_families().iter().map(|f| f.size()).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 1, 2, 3, 3]);
    }
}
