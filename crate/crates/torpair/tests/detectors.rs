//! The cycle and family detectors against brute force on every map with
//! at most two vertices and six edges.

mod common;

use common::{all_maps, brute_extended, brute_faces, brute_families, brute_scharlemann};
use std::collections::BTreeSet;
use torpair::cycles::{find_extended_s_cycles, find_scharlemann};
use torpair::surfmap::LabelledGraph;

fn small_maps() -> impl Iterator<Item = LabelledGraph> {
    (1..=2).flat_map(|n| (1..=6).flat_map(move |m| [2, 4].into_iter().flat_map(move |q| all_maps(n, m, q))))
}

#[test]
fn faces_agree() {
    for g in small_maps() {
        let mine: BTreeSet<Vec<usize>> = brute_faces(&g)
            .into_iter()
            .map(|mut f| {
                f.sort();
                f
            })
            .collect();
        let theirs: BTreeSet<Vec<usize>> = g
            .trace_faces()
            .into_iter()
            .map(|f| {
                let mut d = f.darts;
                d.sort();
                d
            })
            .collect();
        assert_eq!(mine, theirs);
    }
}

#[test]
fn scharlemann_agrees() {
    let mut hits = 0;
    for g in small_maps() {
        let got: BTreeSet<(Vec<usize>, (u32, u32))> = find_scharlemann(&g)
            .into_iter()
            .map(|c| {
                let mut e = c.edges;
                e.sort();
                (e, c.label_pair)
            })
            .map(|(e, (a, b))| (e, (a.min(b), a.max(b))))
            .collect();
        let want = brute_scharlemann(&g);
        hits += want.len();
        assert_eq!(got, want);
    }
    assert!(hits > 0);
}

#[test]
fn parallel_families_agree() {
    for g in small_maps() {
        let fams = g.parallel_families();
        let got: BTreeSet<(Vec<usize>, bool)> = fams
            .iter()
            .map(|f| {
                let mut e = f.edges.clone();
                e.sort();
                (e, f.positive)
            })
            .collect();
        assert_eq!(got, brute_families(&g));
        // listed in order: neighbours in a family share a bigon
        let adj = common::bigon_adjacency(&g);
        for f in &fams {
            let path = f.edges.windows(2).all(|w| adj[w[0]].contains(&w[1]));
            let is_cycle = f.edges.iter().all(|&e| adj[e].len() == 2);
            assert!(path || is_cycle, "{:?}", f.edges);
        }
    }
}

#[test]
fn extended_s_cycles_agree() {
    let mut hits = 0;
    for g in small_maps() {
        let got: BTreeSet<[usize; 4]> = find_extended_s_cycles(&g)
            .into_iter()
            .map(|x| {
                let w = x.edges;
                if w[0] < w[3] {
                    w
                } else {
                    [w[3], w[2], w[1], w[0]]
                }
            })
            .collect();
        let want = brute_extended(&g);
        hits += want.len();
        assert_eq!(got, want);
    }
    assert!(hits > 0);
}
