//! The pair (G_S, G_T) with its shared edges, and the cross-graph checks.
//!
//! An endpoint of an edge lies on both boundaries: `u_i` in G_S (label j)
//! and `v_j` in G_T (label i). `s2t` maps each G_S dart to the G_T dart at
//! the same point.

use crate::check::{Check, Lemma};
use crate::surfmap::{Component, Dart, LabelledGraph, ParallelFamily, Surface};
use serde::Serialize;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PairError {
    #[error("graph sizes do not match: G_S has {s} vertices and {sq} labels, G_T has {t} vertices and {tq} labels")]
    Sizes { s: usize, sq: usize, t: usize, tq: usize },
    #[error("edge `{0}` is missing from G_T")]
    MissingEdge(String),
    #[error("edge `{0}` violates label/vertex duality")]
    Duality(String),
    #[error("delta differs between the two graphs")]
    Delta,
    #[error("family has {0} edges but a full family needs {1}")]
    NotFull(usize, usize),
    #[error("family is positive; permutations are defined for negative families")]
    Positive,
    #[error("family labels do not differ by a constant shift")]
    NotShift,
    #[error("shift {0} is odd")]
    OddShift(usize),
}

#[derive(Clone, Debug)]
pub struct GraphPair {
    pub gs: LabelledGraph,
    pub gt: LabelledGraph,
    pub delta: usize,
    s2t: Vec<Dart>,
    t2s: Vec<Dart>,
}

impl GraphPair {
    /// Pair two graphs by edge name, checking the label/vertex duality.
    pub fn new(gs: LabelledGraph, gt: LabelledGraph) -> Result<Self, PairError> {
        if gs.q != gt.vertex_count() || gt.q != gs.vertex_count() {
            return Err(PairError::Sizes { s: gs.vertex_count(), sq: gs.q, t: gt.vertex_count(), tq: gt.q });
        }
        if gs.delta != gt.delta {
            return Err(PairError::Delta);
        }
        if gs.edge_count() != gt.edge_count() {
            let extra = (0..gt.edge_count())
                .map(|e| gt.edge_name(e))
                .find(|n| gs.edge_index(n).is_none())
                .or_else(|| (0..gs.edge_count()).map(|e| gs.edge_name(e)).find(|n| gt.edge_index(n).is_none()))
                .unwrap_or("?");
            return Err(PairError::MissingEdge(extra.to_string()));
        }
        let mut s2t = vec![usize::MAX; gs.dart_count()];
        for e in 0..gs.edge_count() {
            let name = gs.edge_name(e);
            let f = gt.edge_index(name).ok_or_else(|| PairError::MissingEdge(name.to_string()))?;
            let (a, b) = gs.edge_darts(e);
            let (c, d) = gt.edge_darts(f);
            let fits = |x: Dart, y: Dart| gt.vertex(y) == gs.label(x) as usize && gt.label(y) as usize == gs.vertex(x);
            if fits(a, c) && fits(b, d) {
                s2t[a] = c;
                s2t[b] = d;
            } else if fits(a, d) && fits(b, c) {
                s2t[a] = d;
                s2t[b] = c;
            } else {
                return Err(PairError::Duality(name.to_string()));
            }
        }
        Ok(Self::from_correspondence(gs, gt, s2t))
    }

    /// Pair two graphs through an explicit dart correspondence.
    pub fn from_correspondence(gs: LabelledGraph, gt: LabelledGraph, s2t: Vec<Dart>) -> Self {
        let mut t2s = vec![usize::MAX; gt.dart_count()];
        for (d, &x) in s2t.iter().enumerate() {
            t2s[x] = d;
        }
        let delta = gs.delta;
        GraphPair { gs, gt, delta, s2t, t2s }
    }

    pub fn s2t(&self, d: Dart) -> Dart {
        self.s2t[d]
    }
    pub fn t2s(&self, d: Dart) -> Dart {
        self.t2s[d]
    }
    pub fn s2t_all(&self) -> &[Dart] {
        &self.s2t
    }

    /// Roles of the two graphs exchanged.
    pub fn swap(&self) -> GraphPair {
        GraphPair {
            gs: self.gt.clone(),
            gt: self.gs.clone(),
            delta: self.delta,
            s2t: self.t2s.clone(),
            t2s: self.s2t.clone(),
        }
    }

    /// G_T edge index of a G_S edge.
    pub fn t_edge(&self, e: usize) -> usize {
        self.gt.edge(self.s2t[self.gs.edge_darts(e).0])
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ValidationReport {
    pub ok: bool,
    pub issues: Vec<String>,
}

/// Degrees, label cyclicity and the degree identity on both sides. Duality
/// itself is enforced when the pair is built.
pub fn validate_pair(p: &GraphPair) -> ValidationReport {
    let mut issues = Vec::new();
    for (tag, g) in [("G_S", &p.gs), ("G_T", &p.gt)] {
        for v in 1..=g.vertex_count() {
            if g.degree(v) != p.delta * g.q {
                issues.push(format!("{tag} vertex {v} has degree {}, expected {}", g.degree(v), p.delta * g.q));
            }
        }
        for (v, s) in g.label_cyclicity_violations() {
            issues.push(format!("{tag} vertex {v} slot {s} breaks label order"));
        }
    }
    ValidationReport { ok: issues.is_empty(), issues }
}

/// Parity rule on a single graph: the partner endpoints of an edge are the
/// vertices named by its labels, so the partner sign is label parity.
pub fn parity_violations(g: &LabelledGraph) -> Vec<usize> {
    (0..g.edge_count())
        .filter(|&e| {
            let (a, b) = g.edge_darts(e);
            let here = g.is_positive(e);
            let there = g.label(a) % 2 == g.label(b) % 2;
            here == there
        })
        .collect()
}

pub fn check_parity_rule(p: &GraphPair) -> Check {
    let w = (0..p.gs.edge_count())
        .filter(|&e| p.gs.is_positive(e) == p.gt.is_positive(p.t_edge(e)))
        .map(|e| p.gs.edge_name(e).to_string())
        .collect();
    Check::from_witness(Lemma::ParityRule, w)
}

/// Darts at vertex `v` with label `l`, in ascending order from slot 0.
pub fn occurrences(g: &LabelledGraph, v: usize, l: u32) -> Vec<Dart> {
    let deg = g.degree(v);
    if deg == 0 {
        return vec![];
    }
    let mut out = Vec::new();
    let mut d = g.dart(v, 0);
    for _ in 0..deg {
        if g.label(d) == l {
            out.push(d);
        }
        d = g.ascend(d);
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JumpingSolution {
    pub eps: i8,
    /// `shift[(i, j)]`: occurrence k at u_i is occurrence eps*k + shift at v_j.
    pub shift: BTreeMap<(usize, u32), usize>,
}

/// For each (u_i, v_j): the shared points must appear in the same cyclic
/// order on both boundaries, up to rotation and one reflection common to
/// every pair.
pub fn check_jumping(p: &GraphPair) -> (Check, Option<JumpingSolution>) {
    let mut allowed = [true, true];
    let mut per: BTreeMap<(usize, u32), [Option<usize>; 2]> = BTreeMap::new();
    let mut bad = Vec::new();
    for i in 1..=p.gs.vertex_count() {
        for j in 1..=p.gs.q as u32 {
            let a = occurrences(&p.gs, i, j);
            let b = occurrences(&p.gt, j as usize, i as u32);
            if a.len() != b.len() {
                bad.push(format!("u{i}/v{j}: {} vs {} points", a.len(), b.len()));
                continue;
            }
            let m = a.len();
            if m == 0 {
                continue;
            }
            let pi: Vec<usize> =
                a.iter().map(|&d| b.iter().position(|&x| x == p.s2t[d]).expect("dual point")).collect();
            let mut opts = [None, None];
            for (k, eps) in [1i64, -1].iter().enumerate() {
                let c = pi[0];
                let ok = (0..m).all(|x| pi[x] as i64 == (eps * x as i64 + c as i64).rem_euclid(m as i64));
                if ok {
                    opts[k] = Some(c);
                }
            }
            if opts == [None, None] {
                bad.push(format!("u{i}/v{j}"));
            }
            for k in 0..2 {
                allowed[k] &= opts[k].is_some();
            }
            per.insert((i, j), opts);
        }
    }
    if !bad.is_empty() {
        return (Check::fail(Lemma::Jumping, bad).note("order not cyclic"), None);
    }
    for (k, eps) in [(0usize, 1i8), (1, -1)] {
        if allowed[k] {
            let shift = per.iter().map(|(key, o)| (*key, o[k].unwrap())).collect();
            return (Check::pass(Lemma::Jumping), Some(JumpingSolution { eps, shift }));
        }
    }
    let w = per.iter().map(|((i, j), o)| format!("u{i}/v{j}:{}", if o[0].is_some() { "+" } else { "-" })).collect();
    (Check::fail(Lemma::Jumping, w).note("no common orientation"), None)
}

/// Corner arcs of u_i from label j to j+1 run across the annulus of the
/// partner solid torus between v_j and v_{j+1}. Disjoint spanning arcs keep
/// their order, so moving along them is a fixed rotation. Checked from both
/// sides.
pub fn check_arc_order(p: &GraphPair) -> Check {
    let mut w = arc_order_witness(&p.gs, &p.gt, &p.s2t, "G_S");
    w.extend(arc_order_witness(&p.gt, &p.gs, &p.t2s, "G_T"));
    Check::from_witness(Lemma::ArcOrder, w)
}

fn arc_order_witness(g: &LabelledGraph, h: &LabelledGraph, map: &[Dart], tag: &str) -> Vec<String> {
    let mut shift: BTreeMap<u32, (usize, Dart)> = BTreeMap::new();
    let mut bad = Vec::new();
    for d in 0..g.dart_count() {
        let j = g.label(d);
        let nx = g.ascend(d);
        let (a, b) = (map[d], map[nx]);
        let deg = h.degree(h.vertex(b));
        if deg == 0 {
            continue;
        }
        let sh = (h.ascending_pos(b) + deg - h.ascending_pos(a) % deg) % deg;
        match shift.get(&j) {
            None => {
                shift.insert(j, (sh, d));
            }
            Some(&(s0, d0)) if s0 != sh => {
                let msg = format!(
                    "{tag} label {j}->{}: arcs at {} and {}",
                    j as usize % g.q + 1,
                    dart_tag(g, d0),
                    dart_tag(g, d)
                );
                if !bad.contains(&msg) && bad.len() < 4 {
                    bad.push(msg);
                }
            }
            _ => {}
        }
    }
    bad
}

fn dart_tag(g: &LabelledGraph, d: Dart) -> String {
    format!("{}@v{}", g.edge_name(g.edge(d)), g.vertex(d))
}

pub fn check_no_both_parallel(p: &GraphPair) -> Check {
    let ft = p.gt.parallel_families();
    let mut fam_t = vec![0; p.gt.edge_count()];
    for (k, f) in ft.iter().enumerate() {
        for &e in &f.edges {
            fam_t[e] = k;
        }
    }
    let mut w = Vec::new();
    for f in p.gs.parallel_families() {
        let mut seen: BTreeMap<usize, usize> = BTreeMap::new();
        for &e in &f.edges {
            let k = fam_t[p.t_edge(e)];
            if let Some(&e0) = seen.get(&k) {
                w.push(format!("{}~{}", p.gs.edge_name(e0), p.gs.edge_name(e)));
                break;
            }
            seen.insert(k, e);
        }
    }
    Check::from_witness(Lemma::BothParallel, w)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyPermutation {
    pub q: usize,
    /// sigma(i) = i + shift (mod q)
    pub shift: usize,
    /// sigma as a list: `sigma[i-1]` is the image of label i.
    pub sigma: Vec<u32>,
    pub orbits: Vec<Vec<u32>>,
}

impl FamilyPermutation {
    pub fn from_shift(q: usize, shift: usize) -> Self {
        let sigma: Vec<u32> = (0..q).map(|i| ((i + shift) % q + 1) as u32).collect();
        let mut seen = vec![false; q + 1];
        let mut orbits = Vec::new();
        for i in 1..=q as u32 {
            if seen[i as usize] {
                continue;
            }
            let mut o = vec![];
            let mut x = i;
            while !seen[x as usize] {
                seen[x as usize] = true;
                o.push(x);
                x = sigma[x as usize - 1];
            }
            orbits.push(o);
        }
        FamilyPermutation { q, shift, sigma, orbits }
    }
    pub fn is_identity(&self) -> bool {
        self.shift == 0
    }
    pub fn is_involution(&self) -> bool {
        (2 * self.shift).is_multiple_of(self.q)
    }
    pub fn apply(&self, i: u32) -> u32 {
        self.sigma[i as usize - 1]
    }
}

/// The label permutation across a full family of negative edges, read from
/// the lower-numbered end to the other.
pub fn sigma_of_family(g: &LabelledGraph, f: &ParallelFamily) -> Result<FamilyPermutation, PairError> {
    if f.positive {
        return Err(PairError::Positive);
    }
    if f.size() != g.q {
        return Err(PairError::NotFull(f.size(), g.q));
    }
    let lo = f.ends.0.min(f.ends.1);
    let mut shift = None;
    let mut seen = vec![false; g.q + 1];
    for &e in &f.edges {
        let (a, b) = g.edge_darts(e);
        let (x, y) = if g.vertex(a) == lo { (a, b) } else { (b, a) };
        let (li, lj) = (g.label(x) as usize, g.label(y) as usize);
        if seen[li] {
            return Err(PairError::NotShift);
        }
        seen[li] = true;
        let r = (lj + g.q - li) % g.q;
        if *shift.get_or_insert(r) != r {
            return Err(PairError::NotShift);
        }
    }
    let r = shift.unwrap_or(0);
    if r % 2 == 1 {
        return Err(PairError::OddShift(r));
    }
    Ok(FamilyPermutation::from_shift(g.q, r))
}

#[derive(Clone, Debug, Serialize)]
pub struct OrbitCycle {
    pub orbit: Vec<u32>,
    pub edges: Vec<String>,
    pub support: Surface,
    pub essential: bool,
}

/// Each orbit of sigma picks out edges that form a cycle in the partner
/// graph. Those cycles are disjoint, so on the torus they are essential and
/// then automatically parallel; essentiality is what gets checked.
pub fn orbit_cycles(p: &GraphPair, f: &ParallelFamily, sigma: &FamilyPermutation) -> Vec<OrbitCycle> {
    let g = &p.gs;
    let lo = f.ends.0.min(f.ends.1);
    let mut out = Vec::new();
    for orb in &sigma.orbits {
        let mut edges = Vec::new();
        let mut names = Vec::new();
        for &e in &f.edges {
            let (a, b) = g.edge_darts(e);
            let x = if g.vertex(a) == lo { a } else { b };
            if orb.contains(&g.label(x)) {
                edges.push(p.t_edge(e));
                names.push(g.edge_name(e).to_string());
            }
        }
        let comp = Component { vertices: orb.iter().map(|&l| l as usize).collect(), edges };
        let support = p.gt.classify_support(&comp).map(|c| c.kind).unwrap_or(Surface::Torus);
        out.push(OrbitCycle { orbit: orb.clone(), edges: names, support, essential: support != Surface::Disk });
    }
    out
}

/// Orbit constraints for one family: at least two orbits, and every orbit
/// cycle essential in the partner.
pub fn check_sigma_orbits(p: &GraphPair, f: &ParallelFamily) -> Check {
    let sigma = match sigma_of_family(&p.gs, f) {
        Ok(s) => s,
        Err(PairError::OddShift(r)) => return Check::fail(Lemma::ParityRule, vec![format!("shift {r}")]),
        Err(e) => return Check::fail(Lemma::SigmaOrbits, vec![e.to_string()]),
    };
    if sigma.orbits.len() < 2 {
        return Check::fail(Lemma::SigmaOrbits, vec![format!("shift {}", sigma.shift)]).note("single orbit");
    }
    let w: Vec<String> = orbit_cycles(p, f, &sigma)
        .into_iter()
        .filter(|c| !c.essential)
        .map(|c| format!("orbit {:?} inessential", c.orbit))
        .collect();
    Check::from_witness(Lemma::SigmaOrbits, w)
}

/// Build the partner graph forced by a choice of jumping data.
///
/// Occurrence `k` of label j at u_i goes to occurrence `eps*k + c[i][j]`
/// (mod delta) at v_j. Points on v_j are ordered by occurrence, then by i.
/// `c[0][*]` can be taken as zero by rotating each v_j.
pub fn jumping_partner(gs: &LabelledGraph, eps: i64, c: &[Vec<usize>]) -> GraphPair {
    let s = gs.vertex_count();
    let t = gs.q;
    let delta = gs.delta as i64;
    let deg = delta as usize * s;
    let degs = vec![deg; t];
    let mut s2t = vec![0; gs.dart_count()];
    let mut label = vec![0u32; t * deg];
    for i in 1..=s {
        let off = gs.label(gs.dart(i, 0)) as usize - 1;
        let di = gs.degree(i);
        for d in gs.darts_at(i) {
            let j = gs.label(d) as usize;
            let k = ((gs.ascending_pos(d) + off) % di) / t;
            let kk = (eps * k as i64 + c[i - 1][j - 1] as i64).rem_euclid(delta) as usize;
            let pos = s * kk + (i - 1);
            let slot = if j % 2 == 1 { pos } else { (deg - pos) % deg };
            let x = (j - 1) * deg + slot;
            s2t[d] = x;
            label[x] = i as u32;
        }
    }
    let mut inv = vec![0; t * deg];
    for d in 0..gs.dart_count() {
        inv[s2t[d]] = s2t[gs.inv(d)];
    }
    let mut gt = LabelledGraph::from_parts("GT", s, gs.delta, &degs, inv, label);
    let names = (0..gt.edge_count())
        .map(|f| {
            let x = gt.edge_darts(f).0;
            let d = s2t.iter().position(|&y| y == x).unwrap();
            gs.edge_name(gs.edge(d)).to_string()
        })
        .collect();
    gt.set_edge_names(names);
    GraphPair::from_correspondence(gs.clone(), gt, s2t)
}
