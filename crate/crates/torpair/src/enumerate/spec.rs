//! Case spec files.
//!
//! ```text
//! # the two-vertex, two-vertex case
//! case s=2 t=2 delta=5 assume=klein_free_beta,distance=5 expect=empty
//! case s=2 t=4 delta=5 branch=p1=t/2 expect=empty
//! ```

use crate::io::ParseError;
use serde::Serialize;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Branch {
    /// `p1=t/2`
    HalfT,
    /// `p1=t/2+1`
    HalfTPlusOne,
    P1(usize),
}

impl Branch {
    pub fn p1(&self, t: usize) -> usize {
        match self {
            Branch::HalfT => t / 2,
            Branch::HalfTPlusOne => t / 2 + 1,
            Branch::P1(n) => *n,
        }
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Branch::HalfT => write!(f, "p1=t/2"),
            Branch::HalfTPlusOne => write!(f, "p1=t/2+1"),
            Branch::P1(n) => write!(f, "p1={n}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaseSpec {
    pub s: usize,
    pub t: usize,
    pub delta: usize,
    /// Apply the Klein bottle constraint (K(beta) contains no Klein bottle).
    pub klein_free_beta: bool,
    /// Slope distance for the surgery constraint; `None` checks only that
    /// both groups are cyclic.
    pub distance: Option<i64>,
    pub irreducible: bool,
    pub branch: Option<Branch>,
    pub expect_empty: bool,
}

impl CaseSpec {
    pub fn new(s: usize, t: usize, delta: usize) -> Self {
        CaseSpec {
            s,
            t,
            delta,
            klein_free_beta: false,
            distance: None,
            irreducible: false,
            branch: None,
            expect_empty: false,
        }
    }

    pub fn assumptions(&self) -> Vec<String> {
        let mut v = Vec::new();
        if self.klein_free_beta {
            v.push("klein_free_beta".to_string());
        }
        if let Some(d) = self.distance {
            v.push(format!("distance={d}"));
        }
        if self.irreducible {
            v.push("irreducible".to_string());
        }
        v
    }

    pub fn parse_line(line: &str, lno: usize) -> Result<CaseSpec, ParseError> {
        let err = |col: usize, msg: String| ParseError { line: lno, col, msg };
        let mut words = tokens(line);
        match words.next() {
            Some((_, "case")) => {}
            Some((c, w)) => return Err(err(c, format!("expected `case`, found `{w}`"))),
            None => return Err(err(1, "empty case line".into())),
        }
        let (mut s, mut t, mut delta) = (None, None, 5usize);
        let mut spec = CaseSpec::new(0, 0, 5);
        for (col, w) in words {
            let Some((k, v)) = w.split_once('=') else {
                return Err(err(col, format!("expected key=value, found `{w}`")));
            };
            let num =
                |v: &str| v.parse::<usize>().map_err(|_| err(col + k.len() + 1, format!("`{v}` is not a number")));
            match k {
                "s" => s = Some(num(v)?),
                "t" => t = Some(num(v)?),
                "delta" => delta = num(v)?,
                "expect" => match v {
                    "empty" => spec.expect_empty = true,
                    "any" => spec.expect_empty = false,
                    _ => return Err(err(col, format!("unknown expectation `{v}`"))),
                },
                "branch" => {
                    spec.branch = Some(match v {
                        "p1=t/2" => Branch::HalfT,
                        "p1=t/2+1" => Branch::HalfTPlusOne,
                        _ => match v.strip_prefix("p1=").and_then(|n| n.parse().ok()) {
                            Some(n) => Branch::P1(n),
                            None => return Err(err(col, format!("unknown branch `{v}`"))),
                        },
                    })
                }
                "assume" => {
                    let mut c = col + 7;
                    for a in v.split(',') {
                        match a.split_once('=') {
                            None if a == "klein_free_beta" => spec.klein_free_beta = true,
                            None if a == "irreducible" => spec.irreducible = true,
                            Some(("distance", d)) => {
                                spec.distance = Some(d.parse().map_err(|_| err(c, format!("bad distance `{d}`")))?)
                            }
                            _ => return Err(err(c, format!("unknown assumption `{a}`"))),
                        }
                        c += a.len() + 1;
                    }
                }
                _ => return Err(err(col, format!("unknown key `{k}`"))),
            }
        }
        spec.s = s.ok_or_else(|| err(1, "missing s=".into()))?;
        spec.t = t.ok_or_else(|| err(1, "missing t=".into()))?;
        spec.delta = delta;
        if spec.s == 0 || spec.t == 0 || spec.s % 2 == 1 || spec.t % 2 == 1 {
            return Err(err(1, format!("s and t must be even and positive, got s={} t={}", spec.s, spec.t)));
        }
        if delta == 0 {
            return Err(err(1, "delta must be at least 1".into()));
        }
        Ok(spec)
    }

    /// Every `case` line of a spec file.
    pub fn parse_file(text: &str) -> Result<Vec<CaseSpec>, ParseError> {
        let mut out = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("");
            if line.trim().is_empty() {
                continue;
            }
            out.push(Self::parse_line(line, i + 1)?);
        }
        if out.is_empty() {
            return Err(ParseError { line: 1, col: 1, msg: "no `case` line".into() });
        }
        Ok(out)
    }
}

impl fmt::Display for CaseSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "case s={} t={} delta={}", self.s, self.t, self.delta)?;
        let a = self.assumptions();
        if !a.is_empty() {
            write!(f, " assume={}", a.join(","))?;
        }
        if let Some(b) = &self.branch {
            write!(f, " branch={b}")?;
        }
        if self.expect_empty {
            write!(f, " expect=empty")?;
        }
        Ok(())
    }
}

/// Whitespace separated words with their 1-based columns.
fn tokens(line: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s + 1, &line[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out.into_iter()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let s = CaseSpec::parse_line("case s=2 t=2 delta=5 assume=klein_free_beta,distance=5 expect=empty", 1).unwrap();
        assert!(s.klein_free_beta && s.expect_empty);
        assert_eq!(s.distance, Some(5));
        assert_eq!(CaseSpec::parse_line(&s.to_string(), 1).unwrap(), s);
        let b = CaseSpec::parse_line("case s=2 t=4 branch=p1=t/2", 1).unwrap();
        assert_eq!(b.branch.unwrap().p1(4), 2);
    }

    #[test]
    fn unknown_toggle_is_rejected() {
        let e = CaseSpec::parse_line("case s=2 t=2 assume=klein_free_beta,hyperbolic", 3).unwrap_err();
        assert_eq!(e.line, 3);
        assert!(e.msg.contains("hyperbolic"));
        assert_eq!(e.col, 37);
    }
}
