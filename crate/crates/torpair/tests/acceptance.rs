//! One line per acceptance criterion. Runs without the test harness so the
//! lines always show; exits non-zero if any criterion fails.

mod common;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;
use std::time::{Duration, Instant};
use torpair::check::Lemma;
use torpair::cycles::{find_extended_s_cycles, find_scharlemann};
use torpair::enumerate::engine::{default_pipeline, enumerate_two_vertex_shapes};
use torpair::enumerate::lemmas::verify_small_reduced_lemmas;
use torpair::enumerate::partners::jumping_partners;
use torpair::enumerate::spec::Branch;
use torpair::enumerate::{run_case, run_case_with, CaseSpec};
use torpair::homology::{smith_normal_form, IntegerMatrix, RelatorPresentation};
use torpair::pairgraph::sigma_of_family;

type Outcome = Result<String, String>;

fn main() {
    let criteria: [(&str, fn() -> Outcome); 7] = [
        ("1 snf oracle", snf_oracle),
        ("2 s=t=2 case", case_t2),
        ("3 t=4 p1=t/2 branch", case_t4),
        ("4 permutation lemmas", sigma_lemmas),
        ("5 reduced-graph lemmas", reduced_lemmas),
        ("6 detector oracles", detector_oracles),
        ("7 properties", properties),
    ];
    let mut failed = 0;
    for (name, f) in criteria {
        let t = Instant::now();
        let r = f();
        let ms = t.elapsed().as_millis();
        match r {
            Ok(m) => println!("criterion {name}: PASS ({m}; {ms} ms)"),
            Err(m) => {
                failed += 1;
                println!("criterion {name}: FAIL ({m}; {ms} ms)");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn factors(text: &str) -> (Vec<i64>, usize, Duration) {
    let p = RelatorPresentation::parse(text).unwrap();
    let mut best = Duration::MAX;
    let mut g = None;
    for _ in 0..5 {
        let t = Instant::now();
        g = Some(p.group().unwrap());
        best = best.min(t.elapsed());
    }
    let g = g.unwrap();
    (g.invariant_factors, g.free_rank, best)
}

fn snf_oracle() -> Outcome {
    let (a, ra, ta) = factors("generators: l m x y\nrelator: 2x+l\nrelator: 2m\nrelator: 2y-l-m\nrelator: 2l+4m\n");
    let (b, rb, tb) = factors("generators: l m x y\nrelator: 2x+l\nrelator: 2m\nrelator: y-2m-l\nrelator: 3m+l\n");
    ensure(a == vec![4, 4] && ra == 0, format!("first gave {a:?} rank {ra}"))?;
    ensure(b == vec![4] && rb == 0, format!("second gave {b:?} rank {rb}"))?;
    let limit = Duration::from_millis(1);
    ensure(ta < limit && tb < limit, format!("too slow: {ta:?}, {tb:?}"))?;
    Ok(format!("(4,4) in {ta:?}, (4) in {tb:?}"))
}

fn case_t2() -> Outcome {
    let spec = CaseSpec::parse_line("case s=2 t=2 delta=5 assume=klein_free_beta,distance=5 expect=empty", 1).unwrap();
    let t = Instant::now();
    let r = run_case(&spec);
    let el = t.elapsed();
    ensure(r.survivors.is_empty(), format!("survivors {:?}", r.survivor_ids()))?;
    let keys: Vec<usize> = r.branches.keys().copied().collect();
    ensure(keys == vec![1, 2, 3], format!("branches {keys:?}"))?;
    let hit = r.eliminations.iter().any(|e| {
        e.p1 == Some(3)
            && e.check
                .as_ref()
                .is_some_and(|c| c.lemma == Lemma::Surgery && c.witness.iter().any(|w| w == "(Z4, Z11, 5)"))
    });
    ensure(hit, "no (Z4, Z11, 5) surgery elimination at p1=3")?;
    ensure(el < Duration::from_secs(300), format!("took {el:?}"))?;
    Ok(format!("{} candidates, 0 survivors, branches 1,2,3", r.candidates))
}

fn case_t4() -> Outcome {
    let spec = CaseSpec::parse_line("case s=2 t=4 delta=5 branch=p1=t/2 expect=empty", 1).unwrap();
    let r = run_case(&spec);
    ensure(r.survivors.is_empty(), format!("survivors {:?}", r.survivor_ids()))?;
    let partners: Vec<_> = r.eliminations.iter().filter(|e| e.level == "partner").collect();
    ensure(partners.len() == 7, format!("{} partner configurations", partners.len()))?;
    let parity = partners.iter().filter(|e| e.lemma() == Some(Lemma::ParityRule)).count();
    ensure(parity == 4, format!("{parity} killed by parity"))?;
    let z4z4 = partners.iter().any(|e| {
        e.check.as_ref().is_some_and(|c| {
            c.lemma == Lemma::Surgery
                && c.clause.as_deref() == Some("cyclic")
                && c.witness.iter().any(|w| w.contains("Z4+Z4"))
        })
    });
    ensure(z4z4, "no non-cyclic Z4+Z4 elimination")?;
    Ok("7 partners, 4 by parity, Z4+Z4 present, 0 survivors".into())
}

fn sigma_lemmas() -> Outcome {
    let mut notes = Vec::new();
    for t in [4, 6, 8] {
        let mut spec = CaseSpec::new(2, t, 5);
        spec.branch = Some(Branch::HalfT);
        let (mut survive, mut ident) = (0, 0);
        for (id, _, g) in enumerate_two_vertex_shapes(&spec) {
            let Some(fam) = g.parallel_families().into_iter().find(|f| !f.positive && f.size() == t) else {
                continue;
            };
            let n = jumping_partners(&g).len();
            match sigma_of_family(&g, &fam) {
                Ok(s) if s.is_identity() => {
                    ident += 1;
                    ensure(n == 0, format!("t={t} {id}: identity sigma with {n} partners"))?;
                }
                Ok(s) if n > 0 => {
                    survive += 1;
                    ensure(
                        s.is_involution() && s.apply(1) as usize == t / 2 + 1,
                        format!("t={t} {id}: sigma(1)={} involution={}", s.apply(1), s.is_involution()),
                    )?;
                }
                Ok(_) => {}
                Err(e) => ensure(n == 0, format!("t={t} {id}: {e} yet {n} partners"))?,
            }
        }
        notes.push(format!("t={t}: {survive} surviving, {ident} identity"));
    }
    Ok(notes.join(", "))
}

fn reduced_lemmas() -> Outcome {
    let t = Instant::now();
    let r = verify_small_reduced_lemmas();
    let el = t.elapsed();
    let two = r.get("2vertex").map(|c| c.classes);
    ensure(two == Some(5), format!("2vertex classes {two:?}"))?;
    for c in &r.checks {
        ensure(c.pass, format!("{} fails: {:?}", c.name, c.counterexamples))?;
    }
    ensure(el < Duration::from_secs(60), format!("took {el:?}"))?;
    Ok(format!("{} checks, 2vertex 5 classes", r.checks.len()))
}

fn detector_oracles() -> Outcome {
    let mut n = 0;
    for v in 1..=2 {
        for m in 1..=6 {
            for q in [2, 4] {
                for g in common::all_maps(v, m, q) {
                    n += 1;
                    let sch: BTreeSet<(Vec<usize>, (u32, u32))> = find_scharlemann(&g)
                        .into_iter()
                        .map(|c| {
                            let mut e = c.edges;
                            e.sort();
                            let (a, b) = c.label_pair;
                            (e, (a.min(b), a.max(b)))
                        })
                        .collect();
                    ensure(sch == common::brute_scharlemann(&g), "find_scharlemann disagrees")?;
                    let fams: BTreeSet<(Vec<usize>, bool)> = g
                        .parallel_families()
                        .into_iter()
                        .map(|f| {
                            let mut e = f.edges;
                            e.sort();
                            (e, f.positive)
                        })
                        .collect();
                    ensure(fams == common::brute_families(&g), "parallel_families disagrees")?;
                    let ext: BTreeSet<[usize; 4]> = find_extended_s_cycles(&g)
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
                    ensure(ext == common::brute_extended(&g), "find_extended_s_cycles disagrees")?;
                }
            }
        }
    }
    Ok(format!("{n} maps"))
}

/// Determinant by cofactor expansion, exact in i128.
fn det(m: &[Vec<i64>]) -> i128 {
    if m.len() == 1 {
        return m[0][0] as i128;
    }
    (0..m.len())
        .map(|j| {
            let minor: Vec<Vec<i64>> = m[1..]
                .iter()
                .map(|r| r.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, x)| *x).collect())
                .collect();
            let s = if j % 2 == 0 { 1 } else { -1 };
            s * m[0][j] as i128 * det(&minor)
        })
        .sum()
}

fn properties() -> Outcome {
    // Euler: every map the engine builds is a torus map
    let mut maps = 0;
    for t in [2, 4] {
        for (id, _, g) in enumerate_two_vertex_shapes(&CaseSpec::new(2, t, 5)) {
            if g.euler_characteristic() != 0 || !g.trivial_loops().is_empty() {
                continue;
            }
            for (jd, p) in jumping_partners(&g) {
                maps += 1;
                let chi =
                    p.gt.vertex_count() as i64 - p.gt.edge_count() as i64 + common::brute_faces(&p.gt).len() as i64;
                ensure(chi == 0 && p.gt.euler_characteristic() == 0, format!("{id}/{}: chi {chi}", jd.tag()))?;
            }
        }
    }
    for g in (1..=2).flat_map(|v| (1..=4).flat_map(move |m| common::all_maps(v, m, 2))) {
        if g.map_genus() == 1 && g.is_connected() {
            maps += 1;
            let chi = g.vertex_count() as i64 - g.edge_count() as i64 + common::brute_faces(&g).len() as i64;
            ensure(chi == 0, "genus one map with nonzero chi")?;
        }
    }

    // SNF: divisibility and |det|
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..1000 {
        let rows: Vec<Vec<i64>> = (0..4).map(|_| (0..4).map(|_| rng.gen_range(-5..=5)).collect()).collect();
        let g = smith_normal_form(&IntegerMatrix::new(4, rows.clone()).unwrap()).unwrap();
        let d = &g.invariant_factors;
        ensure(d.windows(2).all(|w| w[1] % w[0] == 0), format!("{rows:?}: {d:?} not a divisor chain"))?;
        let dt = det(&rows).abs();
        if dt == 0 {
            ensure(g.free_rank > 0, format!("{rows:?}: singular but finite"))?;
        } else {
            let prod: i128 = d.iter().map(|&x| x as i128).product();
            ensure(g.free_rank == 0 && prod == dt, format!("{rows:?}: product {prod} vs |det| {dt}"))?;
        }
    }

    // survivors do not depend on the pipeline order
    for line in ["case s=2 t=2 delta=5 assume=klein_free_beta,distance=5", "case s=2 t=2 delta=5"] {
        let spec = CaseSpec::parse_line(line, 1).unwrap();
        let base = run_case(&spec).survivor_ids();
        let mut pipe = default_pipeline();
        for _ in 0..6 {
            pipe.shuffle(&mut rng);
            let got = run_case_with(&spec, &pipe, 2).survivor_ids();
            ensure(got == base, format!("{line}: survivors {got:?} under {pipe:?}, expected {base:?}"))?;
        }
    }
    Ok(format!("{maps} torus maps, 1000 matrices, 12 pipeline orders"))
}
