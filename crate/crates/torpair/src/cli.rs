//! Command-line front end. `run` returns the process exit code:
//! 0 when everything holds, 1 on a semantic failure, 2 on bad input.

use crate::check::{Check, Lemma};
use crate::enumerate::engine::{check_pair, default_pipeline, FORMAT};
use crate::enumerate::lemmas::verify_small_reduced_lemmas;
use crate::enumerate::{run_case_scheduled, CaseSpec};
use crate::homology::presentation::RelatorPresentation;
use crate::io::{parse_pair, PairFileError};
use crate::pairgraph::{check_parity_rule, validate_pair, GraphPair};
use clap::{Parser, Subcommand};
use serde::Serialize;
use std::path::{Path, PathBuf};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "torpair", version, about = "Certify labelled intersection graph pairs on tori")]
pub struct Cli {
    #[command(subcommand)]
    pub cmd: Cmd,
    /// Write the JSON report here.
    #[arg(long, global = true, value_name = "PATH")]
    pub json: Option<PathBuf>,
    /// Write the text report here instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    pub text: Option<PathBuf>,
    #[arg(long, global = true, default_value_t = 1, value_name = "N")]
    pub jobs: usize,
    /// Shuffles work scheduling only; reports do not change.
    #[arg(long, global = true, value_name = "N")]
    pub seed: Option<u64>,
}

#[derive(Subcommand, Debug)]
pub enum Cmd {
    /// Validate a pair file: duality, degrees, labels, parity rule.
    Check { pair: PathBuf },
    /// Run every constraint on one pair.
    Constraints {
        pair: PathBuf,
        /// Same toggles as a spec file, e.g. `klein_free_beta,distance=5`.
        #[arg(long)]
        assume: Option<String>,
    },
    /// Invariant factors of an abelian group presentation.
    Homology { presentation: PathBuf },
    /// Run every case of a spec file.
    Enumerate { spec: PathBuf },
    /// Exhaustive checks of the small reduced-graph lemmas.
    Lemmas,
}

#[derive(Serialize)]
struct PairReport {
    format: u32,
    file: String,
    ok: bool,
    checks: Vec<Check>,
}

struct Out {
    text: String,
    json: Option<String>,
    code: i32,
}

pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    let out = match dispatch(&cli) {
        Ok(o) => o,
        Err(msg) => {
            eprintln!("torpair: {msg}");
            return EXIT_INPUT;
        }
    };
    if let Err(e) = emit(&cli, &out) {
        eprintln!("torpair: {e}");
        return EXIT_INPUT;
    }
    out.code
}

fn emit(cli: &Cli, out: &Out) -> std::io::Result<()> {
    match &cli.text {
        Some(p) => std::fs::write(p, &out.text)?,
        None => print!("{}", out.text),
    }
    if let (Some(p), Some(j)) = (&cli.json, &out.json) {
        std::fs::write(p, j)?;
    }
    Ok(())
}

fn read(p: &Path) -> Result<String, String> {
    std::fs::read_to_string(p).map_err(|e| format!("{}: {e}", p.display()))
}

fn dispatch(cli: &Cli) -> Result<Out, String> {
    match &cli.cmd {
        Cmd::Check { pair } => {
            let p = load_pair(pair)?;
            let v = validate_pair(&p);
            let mut checks =
                vec![if v.ok { Check::pass(Lemma::Structure) } else { Check::fail(Lemma::Structure, v.issues) }];
            checks.push(check_parity_rule(&p));
            Ok(pair_out(pair, checks))
        }
        Cmd::Constraints { pair, assume } => {
            let p = load_pair(pair)?;
            let mut line = format!("case s={} t={} delta={}", p.gt.q, p.gs.q, p.delta);
            if let Some(a) = assume {
                line += &format!(" assume={a}");
            }
            // reuse the spec grammar so toggles mean the same thing everywhere
            let spec = CaseSpec::parse_line(&line, 1).map_err(|e| format!("--assume: {}", e.msg))?;
            let checks = default_pipeline().into_iter().map(|l| check_pair(l, &p, &spec)).collect();
            Ok(pair_out(pair, checks))
        }
        Cmd::Homology { presentation } => {
            let text = read(presentation)?;
            let pr = RelatorPresentation::parse(&text).map_err(|e| format!("{}: {e}", presentation.display()))?;
            let g = pr.group().map_err(|e| format!("{}: {e}", presentation.display()))?;
            let mut words: Vec<String> = g.invariant_factors.iter().map(|d| d.to_string()).collect();
            if g.free_rank > 0 {
                words.push(format!("free_rank {}", g.free_rank));
            }
            let line = if words.is_empty() { "trivial".to_string() } else { words.join(" ") };
            let json = serde_json::json!({ "format": FORMAT, "file": presentation.display().to_string(), "group": g });
            Ok(Out { text: line + "\n", json: Some(pretty(&json)), code: EXIT_OK })
        }
        Cmd::Enumerate { spec } => {
            let text = read(spec)?;
            let cases = CaseSpec::parse_file(&text).map_err(|e| format!("{}: {e}", spec.display()))?;
            let mut code = EXIT_OK;
            let (mut texts, mut reports) = (String::new(), Vec::new());
            for c in &cases {
                let r = run_case_scheduled(c, &default_pipeline(), cli.jobs, cli.seed);
                // survivors fail the run whether or not emptiness was claimed
                if !r.survivors.is_empty() {
                    code = EXIT_FAIL;
                }
                texts += &r.to_text();
                reports.push(r);
            }
            let json = if reports.len() == 1 { pretty(&reports[0]) } else { pretty(&reports) };
            Ok(Out { text: texts, json: Some(json), code })
        }
        Cmd::Lemmas => {
            let r = verify_small_reduced_lemmas();
            let code = if r.pass() { EXIT_OK } else { EXIT_FAIL };
            Ok(Out { text: r.to_text(), json: Some(pretty(&r)), code })
        }
    }
}

fn load_pair(path: &Path) -> Result<GraphPair, String> {
    let text = read(path)?;
    parse_pair(&text).map_err(|e| match e {
        PairFileError::Parse(e) => format!("{}: {e}", path.display()),
        PairFileError::Pair(e) => format!("{}: not a dual pair: {e}", path.display()),
    })
}

fn pair_out(path: &Path, checks: Vec<Check>) -> Out {
    let ok = checks.iter().all(|c| c.pass);
    let text: String = checks.iter().map(|c| format!("{c}\n")).collect();
    let report = PairReport { format: FORMAT, file: path.display().to_string(), ok, checks };
    Out { text, json: Some(pretty(&report)), code: if ok { EXIT_OK } else { EXIT_FAIL } }
}

fn pretty<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("report serialises") + "\n"
}
