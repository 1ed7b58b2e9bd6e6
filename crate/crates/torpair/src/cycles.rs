//! Scharlemann cycles, S-cycles and extended S-cycles, and the pruning
//! rules built on them. The rules themselves are taken as given; their
//! proofs are 3-manifold arguments.

use crate::check::{Check, Lemma};
use crate::pairgraph::GraphPair;
use crate::surfmap::{Component, LabelledGraph, Surface};
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScharlemannCycle {
    /// Edges in boundary order.
    pub edges: Vec<usize>,
    pub length: usize,
    /// `(i, i+1 mod q)`; for q = 2 always `(1, 2)`.
    pub label_pair: (u32, u32),
    /// Index into `trace_faces`.
    pub face: usize,
}

/// Normalised label pair of an edge if its two labels are consecutive.
pub fn edge_label_pair(g: &LabelledGraph, e: usize) -> Option<(u32, u32)> {
    let (a, b) = g.edge_darts(e);
    let (x, y) = (g.label(a), g.label(b));
    let q = g.q as u32;
    let nx = |l: u32| l % q + 1;
    if q == 2 {
        return (x != y).then_some((1, 2));
    }
    if nx(x) == y {
        Some((x, y))
    } else if nx(y) == x {
        Some((y, x))
    } else {
        None
    }
}

/// Faces bounded entirely by positive edges sharing one label pair.
pub fn find_scharlemann(g: &LabelledGraph) -> Vec<ScharlemannCycle> {
    let (faces, fid) = g.faces_with_index();
    let ann = g.annular_faces(&fid);
    let mut out = Vec::new();
    for (i, f) in faces.iter().enumerate() {
        if ann.is_some_and(|(a, b)| a == i || b == i) {
            continue;
        }
        let edges: Vec<usize> = f.darts.iter().map(|&d| g.edge(d)).collect();
        if !edges.iter().all(|&e| g.is_positive(e)) {
            continue;
        }
        let pairs: Vec<Option<(u32, u32)>> = edges.iter().map(|&e| edge_label_pair(g, e)).collect();
        if let Some(Some(p0)) = pairs.first() {
            if pairs.iter().all(|p| *p == Some(*p0)) {
                out.push(ScharlemannCycle { length: edges.len(), edges, label_pair: *p0, face: i });
            }
        }
    }
    out
}

pub fn find_s_cycles(g: &LabelledGraph) -> Vec<ScharlemannCycle> {
    find_scharlemann(g).into_iter().filter(|c| c.length == 2).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtendedSCycle {
    pub edges: [usize; 4],
    pub label_pair: (u32, u32),
}

fn is_s_pair(g: &LabelledGraph, a: usize, b: usize) -> Option<(u32, u32)> {
    if a == b || !g.is_positive(a) || !g.is_positive(b) {
        return None;
    }
    let p = edge_label_pair(g, a)?;
    (edge_label_pair(g, b) == Some(p)).then_some(p)
}

/// Four consecutive parallel positive edges whose middle two form an
/// S-cycle.
pub fn find_extended_s_cycles(g: &LabelledGraph) -> Vec<ExtendedSCycle> {
    if g.q < 4 {
        return vec![];
    }
    let mut out = Vec::new();
    for f in g.parallel_families() {
        if !f.positive || f.size() < 4 {
            continue;
        }
        for w in f.edges.windows(4) {
            if let Some(p) = is_s_pair(g, w[1], w[2]) {
                out.push(ExtendedSCycle { edges: [w[0], w[1], w[2], w[3]], label_pair: p });
            }
        }
    }
    out
}

fn disjoint(a: (u32, u32), b: (u32, u32)) -> bool {
    a.0 != b.0 && a.0 != b.1 && a.1 != b.0 && a.1 != b.1
}

/// Clauses: (1) no extended S-cycle; (2) for q = 4, no two S-cycles with
/// disjoint label pairs; (3) no three with mutually disjoint pairs; (4) two
/// disjoint pairs {i,i+1}, {j,j+1} have i and j of equal parity.
pub fn scharlemann_constraints(g: &LabelledGraph, q: usize) -> Check {
    if q < 4 {
        return Check::pass(Lemma::Scharlemann).note("q < 4");
    }
    if let Some(x) = find_extended_s_cycles(g).first() {
        let w = x.edges.iter().map(|&e| g.edge_name(e).to_string()).collect();
        return Check::fail(Lemma::Scharlemann, w).clause("1");
    }
    let mut pairs: Vec<(u32, u32)> = find_s_cycles(g).iter().map(|c| c.label_pair).collect();
    pairs.sort();
    pairs.dedup();
    let fmt = |p: &[(u32, u32)]| p.iter().map(|(a, b)| format!("{{{a},{b}}}")).collect::<Vec<_>>();
    for i in 0..pairs.len() {
        for j in i + 1..pairs.len() {
            if !disjoint(pairs[i], pairs[j]) {
                continue;
            }
            if q == 4 {
                return Check::fail(Lemma::Scharlemann, fmt(&[pairs[i], pairs[j]])).clause("2");
            }
            for k in j + 1..pairs.len() {
                if disjoint(pairs[i], pairs[k]) && disjoint(pairs[j], pairs[k]) {
                    return Check::fail(Lemma::Scharlemann, fmt(&[pairs[i], pairs[j], pairs[k]])).clause("3");
                }
            }
            if pairs[i].0 % 2 != pairs[j].0 % 2 {
                return Check::fail(Lemma::Scharlemann, fmt(&[pairs[i], pairs[j]])).clause("4");
            }
        }
    }
    Check::pass(Lemma::Scharlemann)
}

/// Positive families hold at most q/2+1 edges, and a family of exactly
/// q/2+1 ends in an S-cycle; negative families hold at most q edges.
pub fn family_bounds(g: &LabelledGraph, q: usize) -> Check {
    if q < 4 {
        return Check::pass(Lemma::FamilyBounds).note("q < 4");
    }
    for f in g.parallel_families() {
        let names = || f.edges.iter().map(|&e| g.edge_name(e).to_string()).collect::<Vec<_>>();
        if f.positive {
            if f.size() > q / 2 + 1 {
                return Check::fail(Lemma::FamilyBounds, names()).clause("1");
            }
            if f.size() == q / 2 + 1 {
                let n = f.size();
                let ends = is_s_pair(g, f.edges[0], f.edges[1]).is_some()
                    || is_s_pair(g, f.edges[n - 2], f.edges[n - 1]).is_some();
                if !ends {
                    return Check::fail(Lemma::FamilyBounds, names()).clause("1-extremal");
                }
            }
        } else if f.size() > q {
            return Check::fail(Lemma::FamilyBounds, names()).clause("2");
        }
    }
    Check::pass(Lemma::FamilyBounds)
}

/// For each Scharlemann cycle of one graph, its edges must not lie in a
/// disk of the partner torus. Both directions are checked.
pub fn schsupp_check(p: &GraphPair) -> Check {
    let mut w = schsupp_side(p, "G_S");
    w.extend(schsupp_side(&p.swap(), "G_T"));
    Check::from_witness(Lemma::Schsupp, w)
}

fn schsupp_side(p: &GraphPair, tag: &str) -> Vec<String> {
    let mut w = Vec::new();
    for c in find_scharlemann(&p.gs) {
        let mut edges: Vec<usize> = c.edges.iter().map(|&e| p.t_edge(e)).collect();
        edges.sort();
        edges.dedup();
        let mut vertices: Vec<usize> = edges
            .iter()
            .flat_map(|&e| {
                let (a, b) = p.gt.edge_ends(e);
                [a, b]
            })
            .collect();
        vertices.sort();
        vertices.dedup();
        let comp = Component { vertices, edges };
        match p.gt.classify_support(&comp) {
            Ok(s) if s.kind == Surface::Disk => {
                let names: Vec<String> = c.edges.iter().map(|&e| p.gs.edge_name(e).to_string()).collect();
                w.push(format!("{tag}:{}", names.join("+")));
            }
            _ => {}
        }
    }
    w
}

/// No vertex has four consecutive maximal positive families each of size
/// q/2+1 (only meaningful for q = 4).
pub fn consec_check(g: &LabelledGraph, q: usize) -> Check {
    if q != 4 {
        return Check::pass(Lemma::Consec).note("q != 4");
    }
    let fams = g.parallel_families();
    let mut fam_of = vec![0; g.edge_count()];
    for (k, f) in fams.iter().enumerate() {
        for &e in &f.edges {
            fam_of[e] = k;
        }
    }
    for v in 1..=g.vertex_count() {
        // family sequence around v, runs collapsed
        let mut seq: Vec<usize> = Vec::new();
        for d in g.darts_at(v) {
            let k = fam_of[g.edge(d)];
            if seq.last() != Some(&k) {
                seq.push(k);
            }
        }
        if seq.len() > 1 && seq.first() == seq.last() {
            seq.pop();
        }
        let big = |k: usize| fams[k].positive && fams[k].size() == q / 2 + 1;
        let n = seq.len();
        if n < 4 {
            continue;
        }
        for s in 0..n {
            if (0..4).all(|i| big(seq[(s + i) % n])) {
                return Check::fail(Lemma::Consec, vec![format!("vertex {v}")]);
            }
        }
    }
    Check::pass(Lemma::Consec)
}

/// `k(s/2+1) + (6-k)s >= 5s`, with the stated consequences.
pub fn key_inequality(k: usize, s: usize) -> bool {
    k * (s / 2 + 1) + (6usize.saturating_sub(k)) * s >= 5 * s && k <= 6
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn key_examples() {
        assert!(!key_inequality(5, 4));
        assert!(key_inequality(4, 4));
        assert!(!key_inequality(3, 8));
        assert!(key_inequality(3, 6));
        assert!(!key_inequality(4, 6));
    }
}
