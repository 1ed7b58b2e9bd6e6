//! `run_case`: generate, prune in pipeline order, and write the certificate.
//!
//! Two-vertex G_S shapes come from the template. Shape-level checks
//! (structure, parity, and jumping in the sense that no partner map
//! realises the jumping data) run first; the rest run per pair. For s = 2,
//! t >= 4 on the p1 = t/2 branch, candidates are the partner skeleton
//! classes instead, each carrying its realisations as pairs.

use super::canon::{graph_code, pair_code, Code};
use super::partners::{
    expand, fixed_vertex_code, jumping_partners, parity_labelings, reduced_kinds, skeleton_classes, skeleton_edges,
};
use super::shapes::{figure_t2, ptuples, PTuple};
use super::spec::{Branch, CaseSpec};
use crate::check::{Check, Lemma};
use crate::cycles::{consec_check, family_bounds, scharlemann_constraints, schsupp_check};
use crate::homology::{klein_bottle_constraints, pair_homology, surgery_constraints, AbelianGroup};
use crate::pairgraph::{
    check_arc_order, check_jumping, check_no_both_parallel, check_parity_rule, check_sigma_orbits, parity_violations,
    validate_pair, GraphPair,
};
use crate::surfmap::LabelledGraph;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};

pub const FORMAT: u32 = 1;

/// Cheapest first.
pub fn default_pipeline() -> Vec<Lemma> {
    vec![
        Lemma::Structure,
        Lemma::ParityRule,
        Lemma::FamilyBounds,
        Lemma::BothParallel,
        Lemma::Jumping,
        Lemma::ArcOrder,
        Lemma::SigmaOrbits,
        Lemma::Scharlemann,
        Lemma::Consec,
        Lemma::Schsupp,
        Lemma::KleinBottle,
        Lemma::Surgery,
    ]
}

#[derive(Clone, Debug, Serialize)]
pub struct Homology {
    pub alpha: String,
    pub beta: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Entry {
    /// Rebuilds the candidate: template tuple, label offsets, jumping data
    /// or skeleton class.
    pub id: String,
    pub level: &'static str,
    pub p1: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub check: Option<Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub homology: Option<Homology>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub realisations: Vec<Entry>,
    #[serde(skip)]
    pub code: Code,
}

impl Entry {
    pub fn lemma(&self) -> Option<Lemma> {
        self.check.as_ref().filter(|c| !c.pass).map(|c| c.lemma)
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct BranchSummary {
    pub candidates: usize,
    pub eliminated: usize,
    pub survivors: usize,
    pub by_lemma: BTreeMap<String, usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CaseReport {
    pub format: u32,
    pub spec: String,
    pub pipeline: Vec<Lemma>,
    /// Bounds applied while generating, and other completeness notes.
    pub generation: Vec<String>,
    pub candidates: usize,
    pub eliminations: Vec<Entry>,
    pub survivors: Vec<Entry>,
    pub branches: BTreeMap<usize, BranchSummary>,
    #[serde(skip)]
    pub millis: u128,
}

impl CaseReport {
    pub fn survivor_ids(&self) -> BTreeSet<String> {
        self.survivors.iter().map(|e| e.id.clone()).collect()
    }

    pub fn count_by_lemma(&self) -> BTreeMap<Lemma, usize> {
        let mut m = BTreeMap::new();
        for e in &self.eliminations {
            if let Some(l) = e.lemma() {
                *m.entry(l).or_insert(0) += 1;
            }
        }
        m
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises") + "\n"
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{}\npipeline: {}\n", self.spec, join(&self.pipeline));
        for g in &self.generation {
            s += &format!("generation: {g}\n");
        }
        s += &format!(
            "candidates {}  eliminated {}  survivors {}\n",
            self.candidates,
            self.eliminations.len(),
            self.survivors.len()
        );
        for (p1, b) in &self.branches {
            let by: Vec<String> = b.by_lemma.iter().map(|(k, v)| format!("{k} {v}")).collect();
            s += &format!(
                "branch p1={p1}: {} candidates, {} eliminated ({})\n",
                b.candidates,
                b.eliminated,
                by.join(", ")
            );
        }
        for e in &self.eliminations {
            write_entry(&mut s, e, 0);
        }
        for e in &self.survivors {
            s += &format!("SURVIVOR {}\n", e.id);
        }
        s
    }
}

fn join(p: &[Lemma]) -> String {
    p.iter().map(|l| l.id()).collect::<Vec<_>>().join(" > ")
}

fn write_entry(s: &mut String, e: &Entry, depth: usize) {
    let pad = "  ".repeat(depth);
    match &e.check {
        Some(c) => *s += &format!("{pad}{} [{}] {c}", e.id, e.level),
        None => *s += &format!("{pad}{} [{}] survives", e.id, e.level),
    }
    if let Some(h) = &e.homology {
        *s += &format!(" H1=({}, {})", h.alpha, h.beta);
    }
    s.push('\n');
    for r in &e.realisations {
        write_entry(s, r, depth + 1);
    }
}

/// Any lemma, run on a complete pair. Each check stands alone so the
/// certificate can be re-verified one entry at a time.
pub fn check_pair(lemma: Lemma, p: &GraphPair, spec: &CaseSpec) -> Check {
    match lemma {
        Lemma::Structure => {
            let mut w = validate_pair(p).issues;
            for (tag, g) in [("G_S", &p.gs), ("G_T", &p.gt)] {
                if g.euler_characteristic() != 0 {
                    w.push(format!("{tag} has euler characteristic {}", g.euler_characteristic()));
                }
                for e in g.trivial_loops() {
                    w.push(format!("{tag} trivial loop {}", g.edge_name(e)));
                }
            }
            Check::from_witness(Lemma::Structure, w)
        }
        Lemma::ParityRule => check_parity_rule(p),
        Lemma::FamilyBounds => first_fail([family_bounds(&p.gs, p.gs.q), family_bounds(&p.gt, p.gt.q)], lemma),
        Lemma::BothParallel => first_fail([check_no_both_parallel(p), check_no_both_parallel(&p.swap())], lemma),
        Lemma::Jumping => check_jumping(p).0,
        Lemma::ArcOrder => check_arc_order(p),
        Lemma::SigmaOrbits => {
            let mut out = Check::pass(lemma);
            'sides: for side in [p.clone(), p.swap()] {
                for f in side.gs.parallel_families() {
                    if !f.positive && f.size() == side.gs.q {
                        let c = check_sigma_orbits(&side, &f);
                        if !c.pass {
                            out = c;
                            break 'sides;
                        }
                    }
                }
            }
            out
        }
        Lemma::Scharlemann => {
            first_fail([scharlemann_constraints(&p.gs, p.gs.q), scharlemann_constraints(&p.gt, p.gt.q)], lemma)
        }
        Lemma::Consec => first_fail([consec_check(&p.gs, p.gs.q), consec_check(&p.gt, p.gt.q)], lemma),
        Lemma::Schsupp => schsupp_check(p),
        Lemma::KleinBottle => {
            if spec.klein_free_beta {
                klein_bottle_constraints(p)
            } else {
                Check::pass(lemma).note("not assumed")
            }
        }
        Lemma::Surgery => match pair_homology(p) {
            Ok((a, b)) => surgery_check(&a, &b, spec.distance),
            Err(e) => Check::pass(lemma).note(format!("no homology: {e}")),
        },
    }
}

fn first_fail<const N: usize>(cs: [Check; N], lemma: Lemma) -> Check {
    cs.into_iter().find(|c| !c.pass).unwrap_or_else(|| Check::pass(lemma))
}

/// Surgery constraint; with no distance assumed only cyclicity is used.
pub fn surgery_check(a: &AbelianGroup, b: &AbelianGroup, distance: Option<i64>) -> Check {
    match distance {
        Some(d) => surgery_constraints(a, b, d),
        None => {
            let c = surgery_constraints(a, b, 0);
            if c.clause.as_deref() == Some("cyclic") {
                Check { witness: vec![format!("({a}, {b})")], ..c }
            } else {
                Check::pass(Lemma::Surgery)
            }
        }
    }
}

/// Shape-level check on G_S alone; `None` when the lemma needs a partner.
fn check_shape(lemma: Lemma, g: &LabelledGraph, partners: &mut dyn FnMut() -> usize) -> Option<Check> {
    match lemma {
        Lemma::Structure => {
            let mut w = Vec::new();
            if g.euler_characteristic() != 0 {
                w.push(format!("euler characteristic {}", g.euler_characteristic()));
            }
            w.extend(g.trivial_loops().into_iter().map(|e| format!("trivial loop {}", g.edge_name(e))));
            Some(Check::from_witness(lemma, w))
        }
        Lemma::ParityRule => {
            let w = parity_violations(g).into_iter().map(|e| g.edge_name(e).to_string()).collect();
            Some(Check::from_witness(lemma, w))
        }
        Lemma::Jumping => Some(if partners() == 0 {
            Check::fail(lemma, vec![g.name.clone()]).clause("no-partner").note("no jumping data gives a torus partner")
        } else {
            Check::pass(lemma)
        }),
        _ => None,
    }
}

/// Template tuples allowed by the case bounds, with notes describing them.
pub fn admissible_tuples(spec: &CaseSpec) -> (Vec<PTuple>, Vec<String>) {
    let (t, delta) = (spec.t, spec.delta);
    let mut notes = Vec::new();
    let all = ptuples(t, delta);
    let keep: Box<dyn Fn(&PTuple) -> bool> = if t == 2 {
        notes.push("p1 <= 3 (a loop family of four gives a Klein bottle)".into());
        notes.push("p_i <= 2 for i > 1 (three parallel edges are parallel in both graphs)".into());
        Box::new(|p: &PTuple| p[0] <= 3 && p[1..].iter().all(|&x| x <= 2))
    } else {
        notes.push(format!("p1 in {{{}, {}}} and p_i <= t for i > 1 (family bounds)", t / 2, t / 2 + 1));
        Box::new(move |p: &PTuple| (p[0] == t / 2 || p[0] == t / 2 + 1) && p[1..].iter().all(|&x| x <= t))
    };
    let mut v: Vec<PTuple> = all.into_iter().filter(|p| keep(p)).collect();
    if let Some(b) = &spec.branch {
        let p1 = b.p1(t);
        notes.push(format!("branch {b}: p1 = {p1}"));
        v.retain(|p| p[0] == p1);
    }
    (v, notes)
}

struct Shape {
    id: String,
    p: PTuple,
    g: LabelledGraph,
    code: Code,
}

/// Template shapes, one per equivalence class, in canonical order.
pub fn enumerate_two_vertex_shapes(spec: &CaseSpec) -> Vec<(String, PTuple, LabelledGraph)> {
    shapes(spec).into_iter().map(|s| (s.id, s.p, s.g)).collect()
}

fn shapes(spec: &CaseSpec) -> Vec<Shape> {
    let (tuples, _) = admissible_tuples(spec);
    let mut seen: BTreeMap<Code, Shape> = BTreeMap::new();
    for p in tuples {
        for o1 in 0..spec.t {
            for o2 in 0..spec.t {
                let g = figure_t2(spec.t, spec.delta, p, o1, o2);
                let code = graph_code(&g);
                seen.entry(code.clone()).or_insert(Shape { id: g.name.clone(), p, g, code });
            }
        }
    }
    seen.into_values().collect()
}

/// Run the case with the default pipeline.
pub fn run_case(spec: &CaseSpec) -> CaseReport {
    run_case_with(spec, &default_pipeline(), 1)
}

pub fn run_case_with(spec: &CaseSpec, pipeline: &[Lemma], jobs: usize) -> CaseReport {
    run_case_scheduled(spec, pipeline, jobs, None)
}

/// `seed` shuffles the order shapes are handed to workers. Entries are
/// sorted afterwards, so the report does not depend on it.
pub fn run_case_scheduled(spec: &CaseSpec, pipeline: &[Lemma], jobs: usize, seed: Option<u64>) -> CaseReport {
    let start = std::time::Instant::now();
    let (_, mut generation) = admissible_tuples(spec);
    let shapes = shapes(spec);
    let skeleton = spec.s == 2 && spec.t >= 4 && spec.branch == Some(Branch::HalfT);
    if spec.s != 2 {
        generation.push(format!("s = {} is outside the two-vertex template; nothing generated", spec.s));
    }
    if skeleton {
        generation.push("partners: skeleton classes, two parallel families per partner edge type".into());
    } else {
        generation.push("partners: all jumping data (eps, c) giving torus partners".into());
    }
    generation.push("homology from the cellular faces of both graphs; no crossing data needed".into());
    let mut work: Vec<&Shape> = if spec.s == 2 { shapes.iter().collect() } else { vec![] };
    if let Some(seed) = seed {
        work.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    }
    let results = parallel_map(&work, jobs, |sh| run_shape(sh, spec, pipeline, skeleton));
    let mut entries: Vec<Entry> = Vec::new();
    let mut seen = BTreeSet::new();
    for r in results {
        for e in r {
            if seen.insert((e.level, e.code.clone())) {
                entries.push(e);
            }
        }
    }
    entries.sort_by(|a, b| (a.p1, a.level, &a.code).cmp(&(b.p1, b.level, &b.code)));
    let mut branches: BTreeMap<usize, BranchSummary> = BTreeMap::new();
    let (mut eliminations, mut survivors) = (Vec::new(), Vec::new());
    for e in entries {
        let b = branches.entry(e.p1.unwrap_or(0)).or_default();
        b.candidates += 1;
        match e.lemma() {
            Some(l) => {
                b.eliminated += 1;
                *b.by_lemma.entry(l.id().to_string()).or_insert(0) += 1;
                eliminations.push(e);
            }
            None => {
                b.survivors += 1;
                survivors.push(e);
            }
        }
    }
    CaseReport {
        format: FORMAT,
        spec: spec.to_string(),
        pipeline: pipeline.to_vec(),
        generation,
        candidates: eliminations.len() + survivors.len(),
        eliminations,
        survivors,
        branches,
        millis: start.elapsed().as_millis(),
    }
}

fn parallel_map<T: Sync, R: Send>(items: &[T], jobs: usize, f: impl Fn(&T) -> R + Sync) -> Vec<R> {
    let jobs = jobs.max(1).min(items.len().max(1));
    if jobs == 1 {
        return items.iter().map(&f).collect();
    }
    let chunk = items.len().div_ceil(jobs);
    std::thread::scope(|sc| {
        let hs: Vec<_> = items.chunks(chunk).map(|c| sc.spawn(|| c.iter().map(&f).collect::<Vec<R>>())).collect();
        hs.into_iter().flat_map(|h| h.join().expect("worker")).collect()
    })
}

fn run_shape(sh: &Shape, spec: &CaseSpec, pipeline: &[Lemma], skeleton: bool) -> Vec<Entry> {
    let mut partners = None;
    let mut count = || partners.get_or_insert_with(|| jumping_partners(&sh.g)).len();
    for &l in pipeline {
        if let Some(c) = check_shape(l, &sh.g, &mut count) {
            if !c.pass {
                return vec![Entry {
                    id: sh.id.clone(),
                    level: "shape",
                    p1: Some(sh.p[0]),
                    check: Some(c),
                    homology: None,
                    realisations: vec![],
                    code: sh.code.clone(),
                }];
            }
        }
    }
    let partners = partners.unwrap_or_else(|| jumping_partners(&sh.g));
    let pairs: Vec<Entry> = partners
        .iter()
        .map(|(jd, p)| pair_entry(format!("{}/{}", sh.id, jd.tag()), sh.p[0], p, spec, pipeline))
        .collect();
    if !skeleton {
        return pairs;
    }
    skeleton_entries(sh, spec, pipeline, &partners, pairs)
}

fn pair_entry(id: String, p1: usize, p: &GraphPair, spec: &CaseSpec, pipeline: &[Lemma]) -> Entry {
    let mut check = None;
    for &l in pipeline {
        let c = check_pair(l, p, spec);
        if !c.pass {
            check = Some(c);
            break;
        }
    }
    let homology = pair_homology(p).ok().map(|(a, b)| Homology { alpha: a.to_string(), beta: b.to_string() });
    Entry { id, level: "pair", p1: Some(p1), check, homology, realisations: vec![], code: pair_code(p) }
}

fn skeleton_entries(
    sh: &Shape,
    spec: &CaseSpec,
    pipeline: &[Lemma],
    partners: &[(super::partners::JumpingData, GraphPair)],
    pairs: Vec<Entry>,
) -> Vec<Entry> {
    let Some(edges) = skeleton_edges(&sh.g) else {
        return pairs;
    };
    let (t, s) = (spec.t, spec.s);
    let classes = skeleton_classes(t, s, spec.delta, &edges);
    // classes are compared on the full maps: two halves of a type that
    // cobound a bigon form one family in the partner
    let full_code = |g: &LabelledGraph| reduced_kinds(g, &edges).map(|k| fixed_vertex_code(g, &k));
    let class_codes: Vec<Option<Code>> =
        classes.iter().map(|c| full_code(&expand(s, spec.delta, &c.rotation, &edges, &vec![0; t], true))).collect();
    let mut by_class: BTreeMap<usize, Vec<Entry>> = BTreeMap::new();
    let mut stray = Vec::new();
    for ((_, p), e) in partners.iter().zip(pairs) {
        let code = full_code(&p.gt);
        match class_codes.iter().position(|c| c.is_some() && *c == code) {
            Some(k) => by_class.entry(k).or_default().push(e),
            None => stray.push(e),
        }
    }
    let mut out = Vec::new();
    for (n, class) in classes.iter().enumerate() {
        let id = format!("{}/G_T({}) faces {:?}", sh.id, n + 1, class.faces);
        let reals = by_class.remove(&n).unwrap_or_default();
        let mut check = None;
        for &l in pipeline {
            let c = match l {
                Lemma::ParityRule => {
                    let ok = parity_labelings(t, s, spec.delta, class, &edges);
                    if ok.is_empty() {
                        let g = expand(s, spec.delta, &class.rotation, &edges, &vec![0; t], true);
                        let bad = parity_violations(&g);
                        Check::fail(l, bad.iter().take(4).map(|&e| g.edge_name(e).to_string()).collect())
                            .note(format!("all {} labelings break the parity rule", s.pow(t as u32)))
                    } else {
                        Check::pass(l)
                    }
                }
                Lemma::Jumping if reals.is_empty() => {
                    Check::fail(l, vec![]).clause("no-partner").note("no jumping data realises this partner")
                }
                _ => {
                    // decided by the realisations: fails when all of them fail here
                    let fails: Vec<&Check> =
                        reals.iter().filter_map(|r| r.check.as_ref()).filter(|c| c.lemma == l).collect();
                    if !reals.is_empty() && fails.len() == reals.len() {
                        let mut c = fails[0].clone();
                        c.note =
                            format!("all {} realisations; {}", reals.len(), c.note).trim_end_matches("; ").to_string();
                        c
                    } else {
                        Check::pass(l)
                    }
                }
            };
            if !c.pass {
                check = Some(c);
                break;
            }
        }
        // mixed eliminations across realisations
        if check.is_none() && !reals.is_empty() && reals.iter().all(|r| r.check.is_some()) {
            let mut ls: Vec<Lemma> = reals.iter().filter_map(|r| r.lemma()).collect();
            ls.sort();
            ls.dedup();
            check = Some(
                Check::fail(ls[0], reals.iter().map(|r| r.id.clone()).collect())
                    .note(format!("realisations fail {}", join(&ls))),
            );
        }
        let homology = reals.iter().find_map(|r| r.homology.clone());
        out.push(Entry {
            id,
            level: "partner",
            p1: Some(sh.p[0]),
            check,
            homology,
            realisations: reals,
            code: class.code.clone(),
        });
    }
    // realisations whose reduced partner is not a skeleton class stay
    // as plain pairs
    out.extend(stray);
    out
}
