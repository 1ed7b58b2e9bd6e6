//! Exhaustive checks of the small reduced-graph lemmas.
//!
//! A component with a disk or annulus support is a connected plane map with
//! one or two faces marked outer. Reduced means every other face has at
//! least three sides. Plane maps are grown from a single vertex by adding
//! pendant edges and chords inside faces, deduplicated at each size.

use super::canon::{bfs_code, marked_code, Code};
use crate::surfmap::UnionFind;
use serde::Serialize;
use std::collections::BTreeMap;

/// Plane map on darts: `rot` is the anticlockwise successor at a vertex.
#[derive(Clone, Debug)]
pub struct PlaneMap {
    pub rot: Vec<usize>,
    pub inv: Vec<usize>,
    pub vert: Vec<usize>,
    pub vertices: usize,
}

impl PlaneMap {
    pub fn edges(&self) -> usize {
        self.rot.len() / 2
    }

    /// Face id per dart; the corner from d to rot(d) lies in face `fid[rot d]`.
    pub fn faces(&self) -> (usize, Vec<usize>) {
        let n = self.rot.len();
        let mut fid = vec![usize::MAX; n];
        let mut k = 0;
        for d in 0..n {
            if fid[d] != usize::MAX {
                continue;
            }
            let mut x = d;
            while fid[x] == usize::MAX {
                fid[x] = k;
                x = self.rot[self.inv[x]];
            }
            k += 1;
        }
        (k, fid)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.vert.iter().filter(|&&x| x == v).count()
    }

    fn code(&self) -> Code {
        let n = self.rot.len();
        let mut rinv = vec![0; n];
        for d in 0..n {
            rinv[self.rot[d]] = d;
        }
        let col = vec![0u32; n];
        let mut best: Option<Code> = None;
        for r in [&self.rot, &rinv] {
            for s in 0..n {
                if let Some(c) = bfs_code(&[r, &self.inv], &col, s, best.as_ref()) {
                    if best.as_ref().is_none_or(|b| c < *b) {
                        best = Some(c);
                    }
                }
            }
        }
        let mut c = best.unwrap_or_default();
        c.insert(0, self.vertices as u32);
        c
    }

    /// New darts `a` after corner `x` and `b` after corner `y`.
    fn with_edge(&self, x: Option<usize>, y: Option<usize>) -> PlaneMap {
        let mut m = self.clone();
        let (a, b) = (m.rot.len(), m.rot.len() + 1);
        m.rot.extend([a, b]);
        m.inv.extend([b, a]);
        m.vert.extend([0, 0]);
        let place = |m: &mut PlaneMap, d: usize, at: Option<usize>| match at {
            Some(c) => {
                m.vert[d] = m.vert[c];
                m.rot[d] = m.rot[c];
                m.rot[c] = d;
            }
            None => {
                m.vert[d] = m.vertices;
                m.vertices += 1;
            }
        };
        place(&mut m, a, x);
        // a loop at one corner goes after a so the two ends are adjacent
        let y = if y == x && x.is_some() { Some(a) } else { y };
        place(&mut m, b, y);
        m
    }
}

/// Every connected plane map with at most `max_v` vertices and exactly
/// `e` edges, one per isomorphism class (reflections identified).
pub fn plane_maps(max_v: usize, max_e: usize) -> Vec<Vec<PlaneMap>> {
    let single = PlaneMap { rot: vec![], inv: vec![], vert: vec![], vertices: 1 };
    let mut levels = vec![vec![single]];
    for _ in 0..max_e {
        let mut next: BTreeMap<Code, PlaneMap> = BTreeMap::new();
        for m in levels.last().unwrap() {
            let n = m.rot.len();
            let (_, fid) = m.faces();
            if n == 0 {
                // a bridge or a loop on the lone vertex
                let bridge = PlaneMap { rot: vec![0, 1], inv: vec![1, 0], vert: vec![0, 1], vertices: 2 };
                let lp = PlaneMap { rot: vec![1, 0], inv: vec![1, 0], vert: vec![0, 0], vertices: 1 };
                for g in [bridge, lp] {
                    if g.vertices <= max_v {
                        next.entry(g.code()).or_insert(g);
                    }
                }
                continue;
            }
            if m.vertices < max_v {
                for c in 0..n {
                    let g = m.with_edge(Some(c), None);
                    next.entry(g.code()).or_insert(g);
                }
            }
            for x in 0..n {
                for y in x..n {
                    if fid[m.rot[x]] == fid[m.rot[y]] {
                        let g = m.with_edge(Some(x), Some(y));
                        next.entry(g.code()).or_insert(g);
                    }
                }
            }
        }
        levels.push(next.into_values().collect());
    }
    levels
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Role {
    pub degree: usize,
    pub outer: bool,
    pub cut: bool,
    pub pinched: bool,
    pub good: bool,
}

/// A plane map with its outer faces; one face for a disk, two for an
/// annulus.
#[derive(Clone, Debug)]
pub struct Supported {
    pub map: PlaneMap,
    pub outer: Vec<usize>,
}

impl Supported {
    pub fn annulus(&self) -> bool {
        self.outer.len() == 2
    }

    pub fn corner_marks(&self) -> Vec<u32> {
        let (_, fid) = self.map.faces();
        (0..self.map.rot.len()).map(|d| self.outer.contains(&fid[self.map.rot[d]]) as u32).collect()
    }

    pub fn code(&self) -> Code {
        let mut c = marked_code(&self.map.rot, &self.map.inv, &self.corner_marks());
        c.splice(0..0, [self.map.vertices as u32, self.outer.len() as u32]);
        c
    }

    pub fn roles(&self) -> Vec<Role> {
        let m = &self.map;
        let (_, fid) = m.faces();
        (0..m.vertices)
            .map(|v| {
                let touch = |f: usize| (0..m.rot.len()).any(|d| m.vert[d] == v && fid[m.rot[d]] == f);
                let outer = self.outer.iter().any(|&f| touch(f));
                let pinched = self.annulus() && self.outer.iter().all(|&f| touch(f));
                let cut = is_cut(m, v);
                Role { degree: m.degree(v), outer, cut, pinched, good: !cut && !pinched }
            })
            .collect()
    }

    pub fn is_cycle(&self) -> bool {
        self.map.edges() == self.map.vertices && (0..self.map.vertices).all(|v| self.map.degree(v) == 2)
    }
}

fn is_cut(m: &PlaneMap, x: usize) -> bool {
    if m.vertices < 3 {
        return false;
    }
    let mut uf = UnionFind::new(m.vertices);
    for d in 0..m.rot.len() {
        let (a, b) = (m.vert[d], m.vert[m.inv[d]]);
        if a != x && b != x {
            uf.union(a, b);
        }
    }
    let rest: Vec<usize> = (0..m.vertices).filter(|&v| v != x).collect();
    let r = uf.find(rest[0]);
    rest.iter().any(|&v| uf.find(v) != r)
}

/// Reduced disk (`k = 1`) or annulus (`k = 2`) supported components built
/// on the given maps, one per marked isomorphism class.
pub fn supported(maps: &[PlaneMap], k: usize) -> Vec<Supported> {
    let mut out: BTreeMap<Code, Supported> = BTreeMap::new();
    for m in maps {
        let (nf, fid) = m.faces();
        let mut len = vec![0; nf];
        for &f in &fid {
            len[f] += 1;
        }
        let choices: Vec<Vec<usize>> = if k == 1 {
            (0..nf).map(|a| vec![a]).collect()
        } else {
            (0..nf).flat_map(|a| (a + 1..nf).map(move |b| vec![a, b])).collect()
        };
        for outer in choices {
            if (0..nf).any(|f| !outer.contains(&f) && len[f] < 3) {
                continue;
            }
            let s = Supported { map: m.clone(), outer };
            out.entry(s.code()).or_insert(s);
        }
    }
    out.into_values().collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct LemmaCheck {
    pub name: String,
    pub classes: usize,
    pub pass: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub counterexamples: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct LemmaReport {
    pub format: u32,
    pub checks: Vec<LemmaCheck>,
}

impl LemmaReport {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
    pub fn get(&self, name: &str) -> Option<&LemmaCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for c in &self.checks {
            s += &format!("{}: {} ({} classes)\n", c.name, if c.pass { "pass" } else { "FAIL" }, c.classes);
            for x in &c.counterexamples {
                s += &format!("  {x}\n");
            }
        }
        s
    }
}

fn describe(s: &Supported) -> String {
    let r = s.roles();
    let d: Vec<String> = r.iter().map(|x| format!("{}{}", x.degree, if x.good { "g" } else { "" })).collect();
    format!("V={} E={} degrees [{}]", s.map.vertices, s.map.edges(), d.join(" "))
}

/// Largest edge count of a reduced component with `v` vertices: inner
/// faces have three sides, outer ones at least one.
pub fn euler_edge_bound(v: usize, outer: usize) -> usize {
    // F = E - V + 2 and 3 (F - k) + k <= 2E
    3 * v + 2 * outer - 6
}

pub fn verify_small_reduced_lemmas() -> LemmaReport {
    let max_e = euler_edge_bound(4, 1).max(euler_edge_bound(3, 2));
    let levels = plane_maps(4, max_e);
    let with_v = |v: usize, e_max: usize| -> Vec<PlaneMap> {
        levels.iter().take(e_max + 1).flatten().filter(|m| m.vertices == v).cloned().collect()
    };
    let mut checks = Vec::new();

    // two vertices, annulus, no interior vertex
    let two: Vec<Supported> = supported(&with_v(2, euler_edge_bound(2, 2)), 2)
        .into_iter()
        .filter(|s| s.roles().iter().all(|r| r.outer))
        .collect();
    checks.push(LemmaCheck {
        name: "2vertex".into(),
        classes: two.len(),
        pass: two.len() == 5,
        counterexamples: if two.len() == 5 { vec![] } else { two.iter().map(describe).collect() },
    });

    // three vertices, annulus, not a cycle, no interior vertex
    let three: Vec<Supported> = supported(&with_v(3, euler_edge_bound(3, 2)), 2)
        .into_iter()
        .filter(|s| !s.is_cycle() && s.roles().iter().all(|r| r.outer))
        .collect();
    let bad: Vec<String> =
        three.iter().filter(|s| !s.roles().iter().any(|r| r.good && r.degree <= 3)).map(describe).collect();
    checks.push(LemmaCheck {
        name: "3vertex".into(),
        classes: three.len(),
        pass: bad.is_empty(),
        counterexamples: bad,
    });

    // disk supports up to four vertices
    let mut disk = Vec::new();
    for v in 2..=4 {
        disk.extend(supported(&with_v(v, euler_edge_bound(v, 1)), 1));
    }
    let good_at_most = |s: &Supported, d: usize| s.roles().iter().filter(|r| r.good && r.degree <= d).count();
    let c1: Vec<&Supported> = disk.iter().filter(|s| s.roles().iter().all(|r| r.outer || r.degree >= 6)).collect();
    let bad1: Vec<String> = c1.iter().filter(|s| good_at_most(s, 3) < 2).map(|s| describe(s)).collect();
    checks.push(LemmaCheck { name: "dsupp-1".into(), classes: c1.len(), pass: bad1.is_empty(), counterexamples: bad1 });
    let c2: Vec<&Supported> = disk.iter().filter(|s| s.roles().iter().all(|r| r.outer)).collect();
    let bad2: Vec<String> = c2.iter().filter(|s| good_at_most(s, 2) < 2).map(|s| describe(s)).collect();
    checks.push(LemmaCheck { name: "dsupp-2".into(), classes: c2.len(), pass: bad2.is_empty(), counterexamples: bad2 });

    // annulus, not a cycle, interior degree >= 6, up to three vertices
    let mut ann = Vec::new();
    for v in 1..=3 {
        ann.extend(supported(&with_v(v, euler_edge_bound(v, 2)), 2));
    }
    let ca: Vec<&Supported> = ann
        .iter()
        .filter(|s| s.map.edges() > 0 && !s.is_cycle() && s.roles().iter().all(|r| r.outer || r.degree >= 6))
        .collect();
    let bada: Vec<String> =
        ca.iter().filter(|s| !s.roles().iter().any(|r| r.good && r.degree <= 4)).map(|s| describe(s)).collect();
    checks.push(LemmaCheck { name: "asupp".into(), classes: ca.len(), pass: bada.is_empty(), counterexamples: bada });

    LemmaReport { format: super::engine::FORMAT, checks }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        // plane maps with one edge: a bridge and a loop
        let l = plane_maps(2, 2);
        assert_eq!(l[1].len(), 2);
        // with two edges: path, digon, bridge+loop (two ways), two loops (two ways)
        assert!(l[2].iter().all(|m| m.edges() == 2));
    }

    #[test]
    fn euler_bound() {
        assert_eq!(euler_edge_bound(3, 2), 7);
        assert_eq!(euler_edge_bound(4, 1), 8);
    }
}
