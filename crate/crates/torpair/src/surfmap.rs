//! Labelled fat-vertex graphs on surfaces, stored as combinatorial maps.
//!
//! A dart is an edge endpoint on the boundary of a fat vertex. Darts of a
//! vertex are contiguous and ordered anticlockwise, so the rotation is
//! "next slot". Faces are orbits of `phi = rho . iota`.
//!
//! Label direction: labels ascend anticlockwise around odd vertices and
//! descend around even ones. Orientations of the meridian disks alternate
//! along the solid torus, and this is where that shows up.

use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use thiserror::Error;

pub type Dart = usize;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SurfError {
    #[error("edge `{0}` has {1} endpoints, expected 2")]
    EdgeArity(String, usize),
    #[error("label {label} at vertex {vertex} slot {slot} is outside 1..={q}")]
    LabelRange { vertex: usize, slot: usize, label: u32, q: usize },
    #[error("dart index {0} out of range")]
    BadDart(usize),
    #[error("component is not connected")]
    Disconnected,
    #[error("{0}")]
    Usage(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Surface {
    Torus,
    Disk,
    Annulus,
}

impl Surface {
    pub fn name(self) -> &'static str {
        match self {
            Surface::Torus => "torus",
            Surface::Disk => "disk",
            Surface::Annulus => "annulus",
        }
    }
}

#[derive(Clone, Debug)]
pub struct LabelledGraph {
    pub name: String,
    pub surface: Surface,
    pub q: usize,
    pub delta: usize,
    start: Vec<usize>,
    vert: Vec<usize>,
    inv: Vec<Dart>,
    label: Vec<u32>,
    edge: Vec<usize>,
    edge_names: Vec<String>,
    edge_darts: Vec<(Dart, Dart)>,
    annulus: Option<(Dart, Dart)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub darts: Vec<Dart>,
}

impl Face {
    pub fn len(&self) -> usize {
        self.darts.len()
    }
    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParallelFamily {
    pub edges: Vec<usize>,
    pub ends: (usize, usize),
    pub positive: bool,
}

impl ParallelFamily {
    pub fn size(&self) -> usize {
        self.edges.len()
    }
}

impl LabelledGraph {
    /// Build from per-vertex rotations. `rot[v]` lists `(edge name, label)`
    /// anticlockwise for vertex `v + 1`.
    pub fn from_rotations(name: &str, q: usize, delta: usize, rot: &[Vec<(String, u32)>]) -> Result<Self, SurfError> {
        let degs: Vec<usize> = rot.iter().map(|r| r.len()).collect();
        let mut names: Vec<String> = Vec::new();
        let mut idx = std::collections::HashMap::new();
        let mut ends: Vec<Vec<Dart>> = Vec::new();
        let mut labels = Vec::new();
        let mut d = 0;
        for (v, r) in rot.iter().enumerate() {
            for (slot, (e, l)) in r.iter().enumerate() {
                if *l < 1 || *l as usize > q {
                    return Err(SurfError::LabelRange { vertex: v + 1, slot, label: *l, q });
                }
                let k = *idx.entry(e.clone()).or_insert_with(|| {
                    names.push(e.clone());
                    ends.push(Vec::new());
                    names.len() - 1
                });
                ends[k].push(d);
                labels.push(*l);
                d += 1;
            }
        }
        let mut inv = vec![0; d];
        for (k, ds) in ends.iter().enumerate() {
            if ds.len() != 2 {
                return Err(SurfError::EdgeArity(names[k].clone(), ds.len()));
            }
            inv[ds[0]] = ds[1];
            inv[ds[1]] = ds[0];
        }
        let mut g = Self::from_parts(name, q, delta, &degs, inv, labels);
        g.edge_names = names;
        Ok(g)
    }

    /// Build from raw arrays: degrees, the involution and dart labels. Darts
    /// are numbered vertex by vertex. Edges are named `e1, e2, ...` in order
    /// of their first dart.
    pub fn from_parts(name: &str, q: usize, delta: usize, degs: &[usize], inv: Vec<Dart>, label: Vec<u32>) -> Self {
        let mut start = Vec::with_capacity(degs.len() + 1);
        let mut vert = Vec::new();
        let mut s = 0;
        for (v, &k) in degs.iter().enumerate() {
            start.push(s);
            vert.extend(std::iter::repeat_n(v + 1, k));
            s += k;
        }
        start.push(s);
        assert_eq!(inv.len(), s, "involution length");
        assert_eq!(label.len(), s, "label length");
        let mut edge = vec![usize::MAX; s];
        let mut edge_darts = Vec::new();
        for d in 0..s {
            assert!(inv[d] != d && inv[inv[d]] == d, "not a fixed-point-free involution");
            if edge[d] == usize::MAX {
                edge[d] = edge_darts.len();
                edge[inv[d]] = edge_darts.len();
                edge_darts.push((d, inv[d]));
            }
        }
        let edge_names = (1..=edge_darts.len()).map(|k| format!("e{k}")).collect();
        LabelledGraph {
            name: name.to_string(),
            surface: Surface::Torus,
            q,
            delta,
            start,
            vert,
            inv,
            label,
            edge,
            edge_names,
            edge_darts,
            annulus: None,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.start.len() - 1
    }
    pub fn dart_count(&self) -> usize {
        self.inv.len()
    }
    pub fn edge_count(&self) -> usize {
        self.edge_darts.len()
    }
    /// Degree of vertex `v` (1-based).
    pub fn degree(&self, v: usize) -> usize {
        self.start[v] - self.start[v - 1]
    }
    pub fn darts_at(&self, v: usize) -> std::ops::Range<Dart> {
        self.start[v - 1]..self.start[v]
    }
    pub fn vertex(&self, d: Dart) -> usize {
        self.vert[d]
    }
    pub fn slot(&self, d: Dart) -> usize {
        d - self.start[self.vert[d] - 1]
    }
    pub fn dart(&self, v: usize, slot: usize) -> Dart {
        self.start[v - 1] + slot
    }
    pub fn inv(&self, d: Dart) -> Dart {
        self.inv[d]
    }
    pub fn label(&self, d: Dart) -> u32 {
        self.label[d]
    }
    pub fn labels(&self) -> &[u32] {
        &self.label
    }
    pub fn edge(&self, d: Dart) -> usize {
        self.edge[d]
    }
    pub fn edge_name(&self, e: usize) -> &str {
        &self.edge_names[e]
    }
    pub fn edge_names(&self) -> &[String] {
        &self.edge_names
    }
    pub fn edge_index(&self, name: &str) -> Option<usize> {
        self.edge_names.iter().position(|n| n == name)
    }
    pub fn set_edge_names(&mut self, names: Vec<String>) {
        assert_eq!(names.len(), self.edge_count());
        self.edge_names = names;
    }
    pub fn edge_darts(&self, e: usize) -> (Dart, Dart) {
        self.edge_darts[e]
    }
    pub fn edge_ends(&self, e: usize) -> (usize, usize) {
        let (a, b) = self.edge_darts[e];
        (self.vert[a], self.vert[b])
    }
    /// Anticlockwise successor around the vertex.
    pub fn rho(&self, d: Dart) -> Dart {
        let v = self.vert[d];
        if d + 1 == self.start[v] {
            self.start[v - 1]
        } else {
            d + 1
        }
    }
    pub fn rho_inv(&self, d: Dart) -> Dart {
        let v = self.vert[d];
        if d == self.start[v - 1] {
            self.start[v] - 1
        } else {
            d - 1
        }
    }
    pub fn phi(&self, d: Dart) -> Dart {
        self.rho(self.inv[d])
    }
    /// Vertex parity: 1 for odd vertex numbers, 0 for even.
    pub fn parity(v: usize) -> usize {
        v % 2
    }
    pub fn is_positive(&self, e: usize) -> bool {
        let (a, b) = self.edge_ends(e);
        a % 2 == b % 2
    }
    pub fn is_loop(&self, e: usize) -> bool {
        let (a, b) = self.edge_ends(e);
        a == b
    }

    /// Position of a dart along its vertex in the label-ascending direction,
    /// counted from slot 0.
    pub fn ascending_pos(&self, d: Dart) -> usize {
        let v = self.vert[d];
        let deg = self.degree(v);
        let s = self.slot(d);
        if v % 2 == 1 {
            s
        } else {
            (deg - s) % deg
        }
    }
    /// The dart after `d` in the label-ascending direction.
    pub fn ascend(&self, d: Dart) -> Dart {
        if self.vert[d] % 2 == 1 {
            self.rho(d)
        } else {
            self.rho_inv(d)
        }
    }

    /// Mark two faces (given by a dart in each) as the two ends of one
    /// annular region. Used for shapes whose embedding is not cellular.
    pub fn set_annulus(&mut self, pair: Option<(Dart, Dart)>) {
        self.annulus = pair;
    }
    pub fn annulus(&self) -> Option<(Dart, Dart)> {
        self.annulus
    }

    pub fn trace_faces(&self) -> Vec<Face> {
        self.faces_with_index().0
    }

    /// Faces together with the face index of every dart.
    pub fn faces_with_index(&self) -> (Vec<Face>, Vec<usize>) {
        let n = self.dart_count();
        let mut fid = vec![usize::MAX; n];
        let mut faces = Vec::new();
        for d0 in 0..n {
            if fid[d0] != usize::MAX {
                continue;
            }
            let mut f = Vec::new();
            let mut d = d0;
            while fid[d] == usize::MAX {
                fid[d] = faces.len();
                f.push(d);
                d = self.phi(d);
            }
            faces.push(Face { darts: f });
        }
        (faces, fid)
    }

    /// Face indices (into `trace_faces`) that form the annular region.
    pub fn annular_faces(&self, fid: &[usize]) -> Option<(usize, usize)> {
        self.annulus.map(|(a, b)| (fid[a], fid[b]))
    }

    pub fn face_count(&self) -> usize {
        self.trace_faces().len()
    }

    /// Euler characteristic of the ambient surface as cut by the graph. An
    /// annular face pair counts as one cell of characteristic zero.
    pub fn euler_characteristic(&self) -> i64 {
        let f = self.face_count() as i64;
        let corr = if self.annulus.is_some() { 2 } else { 0 };
        self.vertex_count() as i64 - self.edge_count() as i64 + f - corr
    }

    /// Genus of the map itself (as a cellular embedding), summed over
    /// connected components.
    pub fn map_genus(&self) -> usize {
        let comps = self.dart_components();
        let f = self.face_count() as i64;
        let isolated = (1..=self.vertex_count()).filter(|&v| self.degree(v) == 0).count() as i64;
        let chi = self.vertex_count() as i64 - isolated - self.edge_count() as i64 + f;
        ((2 * comps as i64 - chi) / 2) as usize
    }

    fn dart_components(&self) -> usize {
        let n = self.dart_count();
        let mut seen = vec![false; n];
        let mut c = 0;
        for d0 in 0..n {
            if seen[d0] {
                continue;
            }
            c += 1;
            let mut st = vec![d0];
            seen[d0] = true;
            while let Some(d) = st.pop() {
                for x in [self.rho(d), self.inv[d]] {
                    if !seen[x] {
                        seen[x] = true;
                        st.push(x);
                    }
                }
            }
        }
        c
    }

    pub fn is_connected(&self) -> bool {
        self.dart_components() <= 1
            && (self.dart_count() > 0 || self.vertex_count() <= 1)
            && (1..=self.vertex_count()).all(|v| self.degree(v) > 0 || self.vertex_count() == 1)
    }

    /// Edges bounding a face of length one, excluding annular faces.
    pub fn trivial_loops(&self) -> Vec<usize> {
        let (faces, fid) = self.faces_with_index();
        let ann = self.annular_faces(&fid);
        let mut out = Vec::new();
        for (i, f) in faces.iter().enumerate() {
            if let Some((a, b)) = ann {
                if i == a || i == b {
                    continue;
                }
            }
            if f.len() == 1 {
                out.push(self.edge[f.darts[0]]);
            }
        }
        out.sort();
        out.dedup();
        out
    }

    /// Labels around every vertex run through 1..q in the vertex's
    /// ascending direction. Returns offending `(vertex, slot)` pairs.
    pub fn label_cyclicity_violations(&self) -> Vec<(usize, usize)> {
        let mut bad = Vec::new();
        for v in 1..=self.vertex_count() {
            for d in self.darts_at(v) {
                let nx = self.ascend(d);
                let want = self.label[d] as usize % self.q + 1;
                if self.degree(v) > 1 && self.label[nx] as usize != want {
                    bad.push((v, self.slot(d)));
                }
            }
        }
        bad
    }

    /// Sub-map keeping only the chosen edges (all vertices retained). The
    /// rotation is inherited. Returns the map and the old dart of each new
    /// dart.
    pub fn submap(&self, keep: &[bool]) -> (LabelledGraph, Vec<Dart>) {
        let mut newid = vec![usize::MAX; self.dart_count()];
        let mut old = Vec::new();
        let mut degs = Vec::new();
        for v in 1..=self.vertex_count() {
            let mut k = 0;
            for d in self.darts_at(v) {
                if keep[self.edge[d]] {
                    newid[d] = old.len();
                    old.push(d);
                    k += 1;
                }
            }
            degs.push(k);
        }
        let inv: Vec<Dart> = old.iter().map(|&d| newid[self.inv[d]]).collect();
        let label: Vec<u32> = old.iter().map(|&d| self.label[d]).collect();
        let mut g = LabelledGraph::from_parts(&self.name, self.q, self.delta, &degs, inv, label);
        let names = (0..g.edge_count()).map(|e| self.edge_names[self.edge[old[g.edge_darts[e].0]]].clone()).collect();
        g.edge_names = names;
        g.surface = self.surface;
        (g, old)
    }

    /// Maximal chains of edges pairwise cobounding bigon faces.
    pub fn parallel_families(&self) -> Vec<ParallelFamily> {
        let (faces, fid) = self.faces_with_index();
        let ann = self.annular_faces(&fid);
        let m = self.edge_count();
        let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); m];
        for (i, f) in faces.iter().enumerate() {
            if ann.is_some_and(|(a, b)| i == a || i == b) || f.len() != 2 {
                continue;
            }
            let (a, b) = (self.edge[f.darts[0]], self.edge[f.darts[1]]);
            if a != b {
                adj[a].insert(b);
                adj[b].insert(a);
            }
        }
        let mut seen = vec![false; m];
        let mut fams = Vec::new();
        for e0 in 0..m {
            if seen[e0] {
                continue;
            }
            // collect component, then walk it from an end
            let mut comp = vec![e0];
            seen[e0] = true;
            let mut i = 0;
            while i < comp.len() {
                for &x in &adj[comp[i]] {
                    if !seen[x] {
                        seen[x] = true;
                        comp.push(x);
                    }
                }
                i += 1;
            }
            let first = comp
                .iter()
                .copied()
                .filter(|&e| adj[e].len() <= 1)
                .min()
                .unwrap_or_else(|| *comp.iter().min().unwrap());
            let mut order = vec![first];
            let mut used: BTreeSet<usize> = [first].into();
            loop {
                let last = *order.last().unwrap();
                match adj[last].iter().find(|x| !used.contains(x)) {
                    Some(&x) => {
                        used.insert(x);
                        order.push(x);
                    }
                    None => break,
                }
            }
            for &e in &comp {
                if !used.contains(&e) {
                    order.push(e);
                }
            }
            fams.push(ParallelFamily {
                ends: self.edge_ends(order[0]),
                positive: self.is_positive(order[0]),
                edges: order,
            });
        }
        fams
    }

    /// Sub-map of positive edges.
    pub fn positive_subgraph(&self) -> LabelledGraph {
        let keep: Vec<bool> = (0..self.edge_count()).map(|e| self.is_positive(e)).collect();
        self.submap(&keep).0
    }

    /// Amalgamate each parallel family into one weighted edge.
    pub fn reduce(&self) -> ReducedGraph {
        let fams = self.parallel_families();
        let mut keep = vec![false; self.edge_count()];
        let mut rep_family = vec![usize::MAX; self.edge_count()];
        for (i, f) in fams.iter().enumerate() {
            keep[f.edges[0]] = true;
            rep_family[f.edges[0]] = i;
        }
        let (map, old) = self.submap(&keep);
        let mut weight = vec![0; map.edge_count()];
        let mut family = vec![0; map.edge_count()];
        for e in 0..map.edge_count() {
            let oe = self.edge[old[map.edge_darts[e].0]];
            family[e] = rep_family[oe];
            weight[e] = fams[rep_family[oe]].size();
        }
        ReducedGraph { map, weight, family, families: fams }
    }

    /// Connected components as (vertices, edges), vertices 1-based.
    pub fn components(&self) -> Vec<Component> {
        let n = self.vertex_count();
        let mut uf = UnionFind::new(n + 1);
        for e in 0..self.edge_count() {
            let (a, b) = self.edge_ends(e);
            uf.union(a, b);
        }
        let mut roots: Vec<usize> = Vec::new();
        let mut out: Vec<Component> = Vec::new();
        for v in 1..=n {
            let r = uf.find(v);
            match roots.iter().position(|&x| x == r) {
                Some(i) => out[i].vertices.push(v),
                None => {
                    roots.push(r);
                    out.push(Component { vertices: vec![v], edges: vec![] });
                }
            }
        }
        for e in 0..self.edge_count() {
            let r = uf.find(self.edge_ends(e).0);
            let i = roots.iter().position(|&x| x == r).unwrap();
            out[i].edges.push(e);
        }
        out
    }

    /// Support of a connected component, judged inside this (ambient) map.
    pub fn classify_support(&self, comp: &Component) -> Result<SupportClass, SurfError> {
        Ok(self.support_detail(comp)?.class)
    }

    /// Support plus the supported sub-map with its outer faces marked.
    pub fn support_detail(&self, comp: &Component) -> Result<SupportedComponent, SurfError> {
        if comp.vertices.is_empty() {
            return Err(SurfError::Usage("empty component".into()));
        }
        let mut keep = vec![false; self.edge_count()];
        for &e in &comp.edges {
            keep[e] = true;
        }
        let (sub, old) = self.submap(&keep);
        let inside: BTreeSet<usize> = comp.vertices.iter().copied().collect();
        for &e in &comp.edges {
            let (a, b) = self.edge_ends(e);
            if !inside.contains(&a) || !inside.contains(&b) {
                return Err(SurfError::Usage("edge leaves the component".into()));
            }
        }
        // connectivity of the component itself
        let mut uf = UnionFind::new(self.vertex_count() + 1);
        for &e in &comp.edges {
            let (a, b) = self.edge_ends(e);
            uf.union(a, b);
        }
        let r0 = uf.find(comp.vertices[0]);
        if comp.vertices.iter().any(|&v| uf.find(v) != r0) {
            return Err(SurfError::Disconnected);
        }
        let (sfaces, _) = sub.faces_with_index();
        let vset: Vec<usize> = comp.vertices.clone();
        if comp.edges.is_empty() {
            return Ok(SupportedComponent {
                map: sub,
                vertices: vset,
                outer: vec![],
                class: SupportClass { kind: Surface::Disk, witness: vec![] },
            });
        }
        let chi_sub = comp.vertices.len() as i64 - comp.edges.len() as i64 + sfaces.len() as i64;
        if chi_sub < 2 {
            return Ok(SupportedComponent {
                map: sub,
                vertices: vset,
                outer: vec![],
                class: SupportClass { kind: Surface::Torus, witness: vec![] },
            });
        }
        // Regions of the complement: ambient faces glued across dropped edges.
        let (afaces, afid) = self.faces_with_index();
        let mut uf = UnionFind::new(afaces.len());
        let mut dropped = vec![0i64; afaces.len()];
        for e in 0..self.edge_count() {
            if !keep[e] {
                let (a, b) = self.edge_darts[e];
                uf.union(afid[a], afid[b]);
            }
        }
        let ann = self.annular_faces(&afid);
        if let Some((a, b)) = ann {
            uf.union(a, b);
        }
        let mut chi = vec![0i64; afaces.len()];
        for i in 0..afaces.len() {
            chi[uf.find(i)] += 1;
        }
        if let Some((a, _)) = ann {
            chi[uf.find(a)] -= 2;
        }
        for e in 0..self.edge_count() {
            if !keep[e] {
                dropped[uf.find(afid[self.edge_darts[e].0])] += 1;
            }
        }
        for v in 1..=self.vertex_count() {
            if !inside.contains(&v) && self.degree(v) > 0 {
                let d = self.start[v - 1];
                chi[uf.find(afid[d])] += 1;
            }
        }
        let mut region = |f: &Face| uf.find(afid[old[f.darts[0]]]);
        let mut per_region = std::collections::BTreeMap::<usize, Vec<usize>>::new();
        for (i, f) in sfaces.iter().enumerate() {
            per_region.entry(region(f)).or_default().push(i);
        }
        let mut outer = Vec::new();
        for (r, fs) in &per_region {
            let c = chi[*r] - dropped[*r];
            if fs.len() > 1 || c != 1 {
                outer.extend(fs.iter().copied());
            }
        }
        let kind = match outer.len() {
            0 => return Err(SurfError::Usage("ambient map has no handle; mark outer faces explicitly".into())),
            1 => Surface::Disk,
            2 => Surface::Annulus,
            _ => Surface::Torus,
        };
        let witness = if kind == Surface::Annulus {
            let mut w: Vec<usize> = sfaces[outer[0]].darts.iter().map(|&d| self.edge[old[d]]).collect();
            w.sort();
            w.dedup();
            w
        } else {
            vec![]
        };
        Ok(SupportedComponent { map: sub, vertices: vset, outer, class: SupportClass { kind, witness } })
    }
}

#[derive(Clone, Debug)]
pub struct Component {
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SupportClass {
    pub kind: Surface,
    /// For annulus support: edges of one boundary walk, an essential cycle.
    pub witness: Vec<usize>,
}

/// A genus-zero map with one (disk) or two (annulus) outer faces marked.
/// Vertices outside `vertices` are ignored (they have degree zero here).
#[derive(Clone, Debug)]
pub struct SupportedComponent {
    pub map: LabelledGraph,
    pub vertices: Vec<usize>,
    pub outer: Vec<usize>,
    pub class: SupportClass,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct VertexRole {
    pub vertex: usize,
    pub degree: usize,
    pub outer: bool,
    pub interior: bool,
    pub cut: bool,
    pub pinched: bool,
    pub good: bool,
}

impl SupportedComponent {
    /// Per-vertex roles. Interior here means "not outer", which is what the
    /// definitions give for an extremal component.
    pub fn vertex_roles(&self) -> Result<Vec<VertexRole>, SurfError> {
        let kind = self.class.kind;
        if kind == Surface::Torus {
            return Err(SurfError::Usage("outer vertices need disk or annulus support".into()));
        }
        let g = &self.map;
        let (faces, _) = g.faces_with_index();
        let mut touches: Vec<Vec<bool>> = vec![vec![false; self.outer.len()]; g.vertex_count() + 1];
        for (k, &fi) in self.outer.iter().enumerate() {
            for &d in &faces[fi].darts {
                touches[g.vertex(d)][k] = true;
            }
        }
        let single = self.vertices.len() == 1 && g.edge_count() == 0;
        let mut out = Vec::new();
        for &v in &self.vertices {
            let outer = single || touches[v].iter().any(|&b| b);
            let pinched = kind == Surface::Annulus && touches[v].iter().all(|&b| b);
            let cut = is_cut_vertex(g, &self.vertices, v);
            let good = !cut && !pinched;
            out.push(VertexRole { vertex: v, degree: g.degree(v), outer, interior: !outer, cut, pinched, good });
        }
        Ok(out)
    }

    /// Edges whose two sides lie on the two different outer faces.
    pub fn pinched_edges(&self) -> Vec<usize> {
        if self.outer.len() != 2 {
            return vec![];
        }
        let (_, fid) = self.map.faces_with_index();
        let (f0, f1) = (self.outer[0], self.outer[1]);
        (0..self.map.edge_count())
            .filter(|&e| {
                let (a, b) = self.map.edge_darts(e);
                let s = (fid[a], fid[b]);
                s == (f0, f1) || s == (f1, f0)
            })
            .collect()
    }

    pub fn is_cycle(&self) -> bool {
        let g = &self.map;
        g.edge_count() == self.vertices.len() && self.vertices.iter().all(|&v| g.degree(v) == 2)
    }
}

fn is_cut_vertex(g: &LabelledGraph, verts: &[usize], x: usize) -> bool {
    let rest: Vec<usize> = verts.iter().copied().filter(|&v| v != x).collect();
    if rest.len() <= 1 {
        return false;
    }
    let mut uf = UnionFind::new(g.vertex_count() + 1);
    for e in 0..g.edge_count() {
        let (a, b) = g.edge_ends(e);
        if a != x && b != x {
            uf.union(a, b);
        }
    }
    let r = uf.find(rest[0]);
    rest.iter().any(|&v| uf.find(v) != r)
}

#[derive(Clone, Debug)]
pub struct ReducedGraph {
    pub map: LabelledGraph,
    /// Family size carried by each reduced edge.
    pub weight: Vec<usize>,
    /// Index into `families` for each reduced edge.
    pub family: Vec<usize>,
    pub families: Vec<ParallelFamily>,
}

impl ReducedGraph {
    /// Multiset of (sorted endpoints, weight, sign), sorted.
    pub fn edge_multiset(&self) -> Vec<((usize, usize), usize, bool)> {
        let mut v: Vec<_> = (0..self.map.edge_count())
            .map(|e| {
                let (a, b) = self.map.edge_ends(e);
                ((a.min(b), a.max(b)), self.weight[e], self.map.is_positive(e))
            })
            .collect();
        v.sort();
        v
    }
}

#[derive(Clone, Debug)]
pub(crate) struct UnionFind {
    p: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind { p: (0..n).collect() }
    }
    pub(crate) fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.p[r] != r {
            r = self.p[r];
        }
        let mut y = x;
        while self.p[y] != r {
            let n = self.p[y];
            self.p[y] = r;
            y = n;
        }
        r
    }
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (a, b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        self.p[a.max(b)] = a.min(b);
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(rot: &[&[(&str, u32)]], q: usize) -> LabelledGraph {
        let r: Vec<Vec<(String, u32)>> =
            rot.iter().map(|v| v.iter().map(|(e, l)| (e.to_string(), *l)).collect()).collect();
        LabelledGraph::from_rotations("t", q, 1, &r).unwrap()
    }

    #[test]
    fn two_loops_one_face() {
        let m = g(&[&[("a", 1), ("b", 1), ("a", 1), ("b", 1)]], 1);
        assert_eq!(m.face_count(), 1);
        assert_eq!(m.euler_characteristic(), 0);
        assert_eq!(m.map_genus(), 1);
    }

    #[test]
    fn adjacent_loop_is_trivial() {
        let m = g(&[&[("a", 1), ("a", 1)]], 1);
        assert_eq!(m.trivial_loops(), vec![0]);
    }

    #[test]
    fn edge_arity_is_checked() {
        let r = vec![vec![("a".to_string(), 1), ("b".to_string(), 1), ("a".to_string(), 1)]];
        assert!(matches!(LabelledGraph::from_rotations("x", 1, 1, &r), Err(SurfError::EdgeArity(_, 1))));
    }

    #[test]
    fn parallel_loops_form_one_family() {
        // a b b a on one vertex: loops a and b cobound a bigon
        let m = g(&[&[("a", 1), ("b", 1), ("b", 1), ("a", 1)]], 1);
        let f = m.parallel_families();
        assert!(f.iter().any(|f| f.size() == 2));
        let r = m.reduce();
        assert_eq!(r.map.edge_count(), 1);
        assert_eq!(r.weight, vec![2]);
    }

    #[test]
    fn path_middle_is_cut() {
        let m = g(
            &[
                &[("a", 1)],
                &[("a", 1), ("b", 1)],
                &[("b", 1), ("x", 1)],
                &[("x", 1), ("c", 1), ("d", 1), ("c", 1), ("d", 1)],
            ],
            1,
        );
        let c = Component { vertices: vec![1, 2, 3], edges: vec![0, 1] };
        let sc = m.support_detail(&c).unwrap();
        assert_eq!(sc.class.kind, Surface::Disk);
        let roles = sc.vertex_roles().unwrap();
        assert!(roles[1].cut && !roles[0].cut && !roles[2].cut);
    }

    #[test]
    fn isolated_vertex_is_disk_and_good() {
        let m = g(&[&[("a", 1), ("b", 1), ("a", 1), ("b", 1)], &[]], 1);
        let comps = m.components();
        let lone = comps.iter().find(|c| c.vertices == vec![2]).unwrap();
        let sc = m.support_detail(lone).unwrap();
        assert_eq!(sc.class.kind, Surface::Disk);
        let r = sc.vertex_roles().unwrap();
        assert!(r[0].outer && r[0].good && r[0].degree == 0);
    }

    #[test]
    fn one_loop_of_torus_pair_is_annulus() {
        let m = g(&[&[("a", 1), ("b", 1), ("a", 1), ("b", 1)]], 1);
        let c = Component { vertices: vec![1], edges: vec![0] };
        assert_eq!(m.classify_support(&c).unwrap().kind, Surface::Annulus);
        let c = Component { vertices: vec![1], edges: vec![0, 1] };
        assert_eq!(m.classify_support(&c).unwrap().kind, Surface::Torus);
    }
}
