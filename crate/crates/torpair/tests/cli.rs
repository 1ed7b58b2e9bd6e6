use std::process::Command;

fn torpair(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_torpair"))
        .args(args)
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

#[test]
fn check_exit_codes() {
    assert_eq!(torpair(&["check", "data/worst_t4.pair"]).0, 0);
    let (code, out, _) = torpair(&["check", "data/parity_violation.pair"]);
    assert_eq!(code, 1);
    assert!(out.contains("parity-rule: FAIL"));
    let (code, _, err) = torpair(&["check", "data/bad_arity.pair"]);
    assert_eq!(code, 2);
    assert!(err.contains("line 3, column 31") && err.contains("`d1` appears 1 time"), "{err}");
    assert_eq!(torpair(&["check", "data/missing.pair"]).0, 2);
}

#[test]
fn homology_prints_factors() {
    assert_eq!(torpair(&["homology", "data/worst2.pres"]), (0, "4 4\n".into(), String::new()));
    assert_eq!(torpair(&["homology", "data/three_loop.pres"]).1, "4\n");
    assert_eq!(torpair(&["homology", "data/free2.pres"]).1, "free_rank 2\n");
    let (code, _, err) = torpair(&["homology", "data/non_integer.pres"]);
    assert_eq!(code, 2);
    assert!(err.contains("non-integer"));
}

#[test]
fn constraints_on_one_pair() {
    let (code, out, _) = torpair(&["constraints", "data/p3_t2.pair", "--assume", "klein_free_beta,distance=5"]);
    assert_eq!(code, 1);
    assert!(out.contains("surgery: FAIL (clause distance) [(Z4, Z11, 5)]"), "{out}");
    assert_eq!(torpair(&["constraints", "data/p3_t2.pair", "--assume", "bogus"]).0, 2);
}

#[test]
fn enumerate_specs() {
    let dir = std::env::temp_dir().join(format!("torpair-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let (a, b) = (dir.join("a.json"), dir.join("b.json"));
    let (code, out, _) = torpair(&["enumerate", "data/t2.spec", "--json", a.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.contains("survivors 0"));
    let (code, _, _) =
        torpair(&["enumerate", "data/t2.spec", "--json", b.to_str().unwrap(), "--jobs", "3", "--seed", "99"]);
    assert_eq!(code, 0);
    let (ja, jb) = (std::fs::read_to_string(&a).unwrap(), std::fs::read_to_string(&b).unwrap());
    assert_eq!(ja, jb, "seed and jobs must not change the report");
    assert!(ja.contains("\"format\": 1"));

    assert_eq!(torpair(&["enumerate", "data/t2_no_klein.spec"]).0, 0);
    assert_eq!(torpair(&["enumerate", "data/t4_half.spec"]).0, 0);
    let (code, _, err) = torpair(&["enumerate", "data/unknown_toggle.spec"]);
    assert_eq!(code, 2);
    assert!(err.contains("hyperbolic"));

    // survivors without an emptiness claim: exit 1 and the dump names them
    let spec = dir.join("open.spec");
    std::fs::write(&spec, "case s=2 t=2 delta=5\n").unwrap();
    let (code, out, _) = torpair(&["enumerate", spec.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(out.contains("survivors 2"), "{out}");
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn lemmas_and_usage() {
    let (code, out, _) = torpair(&["lemmas"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("2vertex: pass (5 classes)"));
    assert_eq!(torpair(&["frobnicate"]).0, 2);
}
