//! Shared by the integration tests: an exhaustive generator of small
//! labelled maps and brute-force versions of the detectors.
#![allow(dead_code)]

use std::collections::BTreeSet;
use torpair::surfmap::LabelledGraph;

/// Every map with `n` vertices and `m` edges whose degrees are positive
/// multiples of `q`. Labels run 1..q from slot 0, ascending at odd vertices
/// and descending at even ones.
pub fn all_maps(n: usize, m: usize, q: usize) -> Vec<LabelledGraph> {
    let mut out = Vec::new();
    for degs in compositions(2 * m, n, q) {
        let mut labels = Vec::new();
        for (v, &d) in degs.iter().enumerate() {
            for s in 0..d {
                let l = if v % 2 == 0 { s % q } else { (q - s % q) % q };
                labels.push(l as u32 + 1);
            }
        }
        for inv in matchings(2 * m) {
            out.push(LabelledGraph::from_parts("g", q, 1, &degs, inv, labels.clone()));
        }
    }
    out
}

fn compositions(total: usize, parts: usize, q: usize) -> Vec<Vec<usize>> {
    if parts == 1 {
        return if total >= q && total.is_multiple_of(q) { vec![vec![total]] } else { vec![] };
    }
    let mut out = Vec::new();
    let mut d = q;
    while d < total {
        for mut rest in compositions(total - d, parts - 1, q) {
            rest.insert(0, d);
            out.push(rest);
        }
        d += q;
    }
    out
}

/// All fixed-point-free involutions on `0..k`.
pub fn matchings(k: usize) -> Vec<Vec<usize>> {
    fn go(inv: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let Some(a) = inv.iter().position(|&x| x == usize::MAX) else {
            out.push(inv.clone());
            return;
        };
        for b in a + 1..inv.len() {
            if inv[b] == usize::MAX {
                inv[a] = b;
                inv[b] = a;
                go(inv, out);
                inv[a] = usize::MAX;
                inv[b] = usize::MAX;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut vec![usize::MAX; k], &mut out);
    out
}

/// Faces as dart cycles, traced from raw slot arithmetic.
pub fn brute_faces(g: &LabelledGraph) -> Vec<Vec<usize>> {
    let mut start = vec![0];
    for v in 1..=g.vertex_count() {
        start.push(start[v - 1] + g.degree(v));
    }
    let owner = |d: usize| start.iter().rposition(|&s| s <= d).unwrap();
    let next = |d: usize| {
        let v = owner(d);
        if d + 1 == start[v + 1] {
            start[v]
        } else {
            d + 1
        }
    };
    let n = g.dart_count();
    let mut seen = vec![false; n];
    let mut faces = Vec::new();
    for d0 in 0..n {
        if seen[d0] {
            continue;
        }
        let mut f = Vec::new();
        let mut d = d0;
        while !seen[d] {
            seen[d] = true;
            f.push(d);
            d = next(g.inv(d));
        }
        faces.push(f);
    }
    faces
}

fn ends(g: &LabelledGraph, e: usize) -> (usize, usize) {
    let (a, b) = g.edge_darts(e);
    (g.vertex(a), g.vertex(b))
}

fn positive(g: &LabelledGraph, e: usize) -> bool {
    let (a, b) = ends(g, e);
    a % 2 == b % 2
}

/// `{i, i+1}` as a sorted pair when the two labels of `e` are adjacent mod q.
fn consecutive(g: &LabelledGraph, e: usize) -> Option<(u32, u32)> {
    let (a, b) = g.edge_darts(e);
    let (x, y) = (g.label(a) as usize, g.label(b) as usize);
    let q = g.q;
    if x == y {
        return None;
    }
    if (x % q) + 1 == y || (y % q) + 1 == x {
        Some((x.min(y) as u32, x.max(y) as u32))
    } else {
        None
    }
}

/// (sorted edges, sorted label pair) of every face whose edges are all
/// positive with one shared consecutive label pair.
pub fn brute_scharlemann(g: &LabelledGraph) -> BTreeSet<(Vec<usize>, (u32, u32))> {
    let mut out = BTreeSet::new();
    for f in brute_faces(g) {
        let mut es: Vec<usize> = f.iter().map(|&d| g.edge(d)).collect();
        if !es.iter().all(|&e| positive(g, e)) {
            continue;
        }
        let ps: BTreeSet<Option<(u32, u32)>> = es.iter().map(|&e| consecutive(g, e)).collect();
        if ps.len() == 1 {
            if let Some(Some(p)) = ps.into_iter().next() {
                es.sort();
                out.insert((es, p));
            }
        }
    }
    out
}

/// Edges joined when they are the two sides of a bigon face.
pub fn bigon_adjacency(g: &LabelledGraph) -> Vec<BTreeSet<usize>> {
    let mut adj = vec![BTreeSet::new(); g.edge_count()];
    for f in brute_faces(g) {
        if f.len() == 2 {
            let (a, b) = (g.edge(f[0]), g.edge(f[1]));
            if a != b {
                adj[a].insert(b);
                adj[b].insert(a);
            }
        }
    }
    adj
}

/// Components of the bigon relation, as sorted edge sets with their sign.
pub fn brute_families(g: &LabelledGraph) -> BTreeSet<(Vec<usize>, bool)> {
    let adj = bigon_adjacency(g);
    let mut seen = vec![false; g.edge_count()];
    let mut out = BTreeSet::new();
    for e in 0..g.edge_count() {
        if seen[e] {
            continue;
        }
        let mut stack = vec![e];
        let mut comp = Vec::new();
        seen[e] = true;
        while let Some(x) = stack.pop() {
            comp.push(x);
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        comp.sort();
        out.insert((comp, positive(g, e)));
    }
    out
}

/// Paths e0-e1-e2-e3 of distinct positive edges through bigons, with e1, e2
/// sharing a consecutive label pair. Each path is stored in the orientation
/// with the smaller first edge.
pub fn brute_extended(g: &LabelledGraph) -> BTreeSet<[usize; 4]> {
    let mut out = BTreeSet::new();
    if g.q < 4 {
        return out;
    }
    let adj = bigon_adjacency(g);
    let m = g.edge_count();
    for a in 0..m {
        for &b in &adj[a] {
            for &c in &adj[b] {
                for &d in &adj[c] {
                    let w = [a, b, c, d];
                    let distinct: BTreeSet<usize> = w.iter().copied().collect();
                    if distinct.len() < 4 || !w.iter().all(|&e| positive(g, e)) {
                        continue;
                    }
                    let p = consecutive(g, b);
                    if p.is_none() || consecutive(g, c) != p {
                        continue;
                    }
                    out.insert(if a < d { w } else { [d, c, b, a] });
                }
            }
        }
    }
    out
}
