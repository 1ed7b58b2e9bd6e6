//! Partner graphs for a fixed G_S.
//!
//! Two generators. `jumping_partners` places the shared points on each
//! v_j as the jumping data dictates and keeps the torus maps. The skeleton
//! generator builds every G_T map from its reduced edge multiset, which is
//! read off G_S, assuming each vertex pair carries two parallel families.

use crate::enumerate::canon::{bfs_code, Code};
use crate::pairgraph::{jumping_partner, parity_violations, GraphPair};
use crate::surfmap::LabelledGraph;
use std::collections::BTreeMap;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct JumpingData {
    pub eps: i64,
    /// `c[i][j]`; row 0 is all zero.
    pub c: Vec<Vec<usize>>,
}

impl JumpingData {
    pub fn tag(&self) -> String {
        let rows: Vec<String> =
            self.c.iter().skip(1).map(|r| r.iter().map(|x| x.to_string()).collect::<String>()).collect();
        format!("eps{}c{}", if self.eps > 0 { "+" } else { "-" }, rows.join("."))
    }
}

fn is_torus_partner(p: &GraphPair) -> bool {
    p.gt.annulus().is_none() && p.gt.euler_characteristic() == 0 && p.gt.trivial_loops().is_empty()
}

/// Every choice of jumping data whose partner is a torus map without
/// trivial loops. Trivial loops at v_j depend only on column j of `c`, so
/// columns are filtered first.
pub fn jumping_partners(gs: &LabelledGraph) -> Vec<(JumpingData, GraphPair)> {
    let s = gs.vertex_count();
    let t = gs.q;
    let delta = gs.delta;
    let mut out = Vec::new();
    for eps in [1i64, -1] {
        // allowed values of c[i][j], column by column
        let mut allowed: Vec<Vec<Vec<usize>>> = vec![vec![vec![0]; t]; s];
        for j in 0..t {
            let mut ok_cols: Vec<Vec<usize>> = Vec::new();
            let mut col = vec![0; s - 1];
            loop {
                let mut c = vec![vec![0; t]; s];
                for i in 1..s {
                    c[i][j] = col[i - 1];
                }
                let p = jumping_partner(gs, eps, &c);
                let bad = p.gt.trivial_loops().iter().any(|&e| p.gt.edge_ends(e).0 == j + 1);
                if !bad {
                    ok_cols.push(col.clone());
                }
                if !bump(&mut col, delta) {
                    break;
                }
            }
            for i in 1..s {
                let mut v: Vec<usize> = ok_cols.iter().map(|c| c[i - 1]).collect();
                v.sort();
                v.dedup();
                allowed[i][j] = v;
            }
        }
        let slots: Vec<(usize, usize)> = (1..s).flat_map(|i| (0..t).map(move |j| (i, j))).collect();
        if slots.iter().any(|&(i, j)| allowed[i][j].is_empty()) {
            continue;
        }
        let sizes: Vec<usize> = slots.iter().map(|&(i, j)| allowed[i][j].len()).collect();
        let mut idx = vec![0usize; slots.len()];
        loop {
            let mut c = vec![vec![0; t]; s];
            for (k, &(i, j)) in slots.iter().enumerate() {
                c[i][j] = allowed[i][j][idx[k]];
            }
            let p = jumping_partner(gs, eps, &c);
            if is_torus_partner(&p) {
                out.push((JumpingData { eps, c }, p));
            }
            if !odometer(&mut idx, |k| sizes[k]) {
                break;
            }
        }
    }
    out
}

fn bump(v: &mut [usize], base: usize) -> bool {
    odometer(v, |_| base)
}

fn odometer(v: &mut [usize], size: impl Fn(usize) -> usize) -> bool {
    for k in (0..v.len()).rev() {
        v[k] += 1;
        if v[k] < size(k) {
            return true;
        }
        v[k] = 0;
    }
    false
}

/// Reduced G_T edge types forced by G_S: (v_a, v_b, positive) with a <= b,
/// and how many G_S edges land on each.
pub fn partner_edge_types(gs: &LabelledGraph) -> BTreeMap<(usize, usize, bool), usize> {
    let mut m = BTreeMap::new();
    for e in 0..gs.edge_count() {
        let (x, y) = gs.edge_darts(e);
        let (a, b) = (gs.label(x) as usize, gs.label(y) as usize);
        *m.entry((a.min(b), a.max(b), a % 2 == b % 2)).or_insert(0) += 1;
    }
    m
}

#[derive(Clone, Debug)]
pub struct SkeletonEdge {
    pub name: String,
    pub ends: (usize, usize),
    pub positive: bool,
    pub weight: usize,
    /// index into the type list; equal for the two halves of one type
    pub kind: usize,
}

/// Split every type into two families of equal weight.
pub fn skeleton_edges(gs: &LabelledGraph) -> Option<Vec<SkeletonEdge>> {
    let mut out = Vec::new();
    for (k, (&(a, b, pos), &n)) in partner_edge_types(gs).iter().enumerate() {
        if n % 2 == 1 {
            return None;
        }
        for half in ["a", "b"] {
            out.push(SkeletonEdge {
                name: format!("{}{a}{b}{half}", if pos { "P" } else { "N" }),
                ends: (a, b),
                positive: pos,
                weight: n / 2,
                kind: k,
            });
        }
    }
    Some(out)
}

#[derive(Clone, Debug)]
pub struct SkeletonClass {
    /// Rotation per vertex as (skeleton edge, end) pairs.
    pub rotation: Vec<Vec<(usize, usize)>>,
    pub code: Code,
    /// Face lengths of the skeleton map, in trace order.
    pub faces: Vec<usize>,
    /// How many rotation systems fell into this class.
    pub multiplicity: usize,
}

fn cyclic_orders(items: &[(usize, usize)]) -> Vec<Vec<(usize, usize)>> {
    fn perms(rest: &mut Vec<(usize, usize)>, cur: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        if rest.is_empty() {
            out.push(cur.clone());
            return;
        }
        for k in 0..rest.len() {
            let x = rest.remove(k);
            cur.push(x);
            perms(rest, cur, out);
            cur.pop();
            rest.insert(k, x);
        }
    }
    if items.is_empty() {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    let mut cur = vec![items[0]];
    let mut rest = items[1..].to_vec();
    perms(&mut rest, &mut cur, &mut out);
    out
}

/// The map with one edge per skeleton edge (weights ignored).
fn skeleton_map(
    t: usize,
    s: usize,
    delta: usize,
    rot: &[Vec<(usize, usize)>],
    edges: &[SkeletonEdge],
) -> LabelledGraph {
    expand(s, delta, rot, edges, &vec![0; t], false)
}

/// Blow each skeleton edge up into `weight` parallel edges. Labels follow
/// the ascending direction from `offset[v-1] + 1` at slot 0.
pub fn expand(
    s: usize,
    delta: usize,
    rot: &[Vec<(usize, usize)>],
    edges: &[SkeletonEdge],
    offset: &[usize],
    weighted: bool,
) -> LabelledGraph {
    let w = |k: usize| if weighted { edges[k].weight } else { 1 };
    let mut seq: Vec<Vec<(usize, usize, usize)>> = Vec::new();
    for r in rot {
        let mut v = Vec::new();
        for &(k, end) in r {
            let n = w(k);
            if end == 0 {
                v.extend((0..n).map(|i| (k, i, end)));
            } else {
                v.extend((0..n).rev().map(|i| (k, i, end)));
            }
        }
        seq.push(v);
    }
    let mut start = vec![0];
    for v in &seq {
        start.push(start.last().unwrap() + v.len());
    }
    let mut at = BTreeMap::new();
    for (vi, v) in seq.iter().enumerate() {
        for (sl, &x) in v.iter().enumerate() {
            at.insert(x, start[vi] + sl);
        }
    }
    let n = *start.last().unwrap();
    let mut inv = vec![0; n];
    let mut label = vec![0u32; n];
    let mut names = BTreeMap::new();
    for (&(k, i, end), &d) in &at {
        inv[d] = at[&(k, i, 1 - end)];
        if end == 0 {
            names.insert(d, if weighted { format!("{}.{}", edges[k].name, i + 1) } else { edges[k].name.clone() });
        }
    }
    for (vi, v) in seq.iter().enumerate() {
        let deg = v.len();
        for sl in 0..deg {
            let asc = if (vi + 1) % 2 == 1 { sl } else { (deg - sl) % deg };
            label[start[vi] + sl] = ((asc + offset[vi]) % s + 1) as u32;
        }
    }
    let degs: Vec<usize> = seq.iter().map(|v| v.len()).collect();
    let mut g = LabelledGraph::from_parts("GT", s, delta, &degs, inv, label);
    let en = (0..g.edge_count())
        .map(|e| {
            let (a, b) = g.edge_darts(e);
            names.get(&a).or_else(|| names.get(&b)).cloned().unwrap_or_default()
        })
        .collect();
    g.set_edge_names(en);
    g
}

/// Code of a map whose vertices keep their names; `kind[e]` colours edges.
/// Reflection is allowed.
pub fn fixed_vertex_code(g: &LabelledGraph, kind: &[usize]) -> Code {
    let n = g.dart_count();
    let r: Vec<usize> = (0..n).map(|d| g.rho(d)).collect();
    let ri: Vec<usize> = (0..n).map(|d| g.rho_inv(d)).collect();
    let iv: Vec<usize> = (0..n).map(|d| g.inv(d)).collect();
    let colour: Vec<u32> = (0..n).map(|d| (g.vertex(d) * 1024 + kind[g.edge(d)]) as u32).collect();
    let mut best: Option<Code> = None;
    for rr in [&r, &ri] {
        for st in 0..n {
            if let Some(c) = bfs_code(&[rr, &iv], &colour, st, best.as_ref()) {
                if best.as_ref().is_none_or(|b| c < *b) {
                    best = Some(c);
                }
            }
        }
    }
    best.unwrap_or_default()
}

/// Edge kind of a partner's reduced edge, matched against the skeleton
/// types by endpoints and sign.
pub fn reduced_kinds(g: &LabelledGraph, edges: &[SkeletonEdge]) -> Option<Vec<usize>> {
    (0..g.edge_count())
        .map(|e| {
            let (a, b) = g.edge_ends(e);
            let key = (a.min(b), a.max(b), g.is_positive(e));
            edges.iter().find(|x| (x.ends.0, x.ends.1, x.positive) == key).map(|x| x.kind)
        })
        .collect()
}

/// All skeleton rotation systems of genus one in which the two halves of
/// a positive type do not cobound a bigon, up to reflection.
pub fn skeleton_classes(t: usize, s: usize, delta: usize, edges: &[SkeletonEdge]) -> Vec<SkeletonClass> {
    let mut at: Vec<Vec<(usize, usize)>> = vec![vec![]; t];
    for (k, e) in edges.iter().enumerate() {
        at[e.ends.0 - 1].push((k, 0));
        at[e.ends.1 - 1].push((k, 1));
    }
    let orders: Vec<Vec<Vec<(usize, usize)>>> = at.iter().map(|a| cyclic_orders(a)).collect();
    let mut classes: BTreeMap<Code, SkeletonClass> = BTreeMap::new();
    let mut idx = vec![0usize; t];
    loop {
        let rot: Vec<Vec<(usize, usize)>> = (0..t).map(|v| orders[v][idx[v]].clone()).collect();
        let g = skeleton_map(t, s, delta, &rot, edges);
        if g.is_connected() && g.euler_characteristic() == 0 && !merged_positive(&g, edges) {
            let kinds = reduced_kinds(&g, edges).expect("skeleton edges have known kinds");
            let code = fixed_vertex_code(&g, &kinds);
            classes.entry(code.clone()).and_modify(|c| c.multiplicity += 1).or_insert_with(|| SkeletonClass {
                faces: g.trace_faces().iter().map(|f| f.len()).collect(),
                rotation: rot,
                code,
                multiplicity: 1,
            });
        }
        let mut v = t;
        loop {
            if v == 0 {
                return classes.into_values().collect();
            }
            v -= 1;
            idx[v] += 1;
            if idx[v] < orders[v].len() {
                break;
            }
            idx[v] = 0;
        }
    }
}

fn merged_positive(g: &LabelledGraph, edges: &[SkeletonEdge]) -> bool {
    let kind_of = |e: usize| {
        let name = g.edge_name(e);
        edges.iter().find(|x| x.name == name).unwrap()
    };
    g.trace_faces().iter().any(|f| {
        if f.len() != 2 {
            return false;
        }
        let (a, b) = (kind_of(g.edge(f.darts[0])), kind_of(g.edge(f.darts[1])));
        a.name != b.name && a.kind == b.kind && a.positive
    })
}

/// Label offsets of a class's full map that pass the parity rule.
pub fn parity_labelings(
    t: usize,
    s: usize,
    delta: usize,
    class: &SkeletonClass,
    edges: &[SkeletonEdge],
) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut off = vec![0usize; t];
    loop {
        let g = expand(s, delta, &class.rotation, edges, &off, true);
        if parity_violations(&g).is_empty() {
            out.push(off.clone());
        }
        if !bump(&mut off, s) {
            return out;
        }
    }
}
