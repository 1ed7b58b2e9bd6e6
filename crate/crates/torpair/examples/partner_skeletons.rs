//! Partner skeleton classes for the s=2, t=4 shape with p1=t/2.

use torpair::enumerate::partners::{parity_labelings, partner_edge_types, skeleton_classes, skeleton_edges};
use torpair::enumerate::shapes::figure_t2;

fn main() {
    let g = figure_t2(4, 5, [2, 4, 4, 4, 4], 0, 3);
    for ((a, b, pos), n) in partner_edge_types(&g) {
        println!("type {a}-{b} {} x{n}", if pos { "positive" } else { "negative" });
    }
    let edges = skeleton_edges(&g).expect("two families per type");
    for (i, c) in skeleton_classes(4, 2, 5, &edges).iter().enumerate() {
        let ok = parity_labelings(4, 2, 5, c, &edges);
        println!("G_T({}) faces {:?} x{} parity-consistent labelings {}", i + 1, c.faces, c.multiplicity, ok.len());
    }
}
