//! Abelian group presentations: named generators and integer relators.
//!
//! ```text
//! generators: l m x y
//! relator: 2x+l
//! relator: 0 2 0 0
//! ```
//! A relator is either coefficients in generator order or a linear form.

use super::snf::{smith_normal_form, AbelianGroup, IntegerMatrix, SnfError};
use crate::io::ParseError;
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelatorPresentation {
    pub generators: Vec<String>,
    pub relators: IntegerMatrix,
    /// Where each relator came from (a face name, or empty).
    pub provenance: Vec<String>,
}

impl RelatorPresentation {
    pub fn new(generators: Vec<String>) -> Self {
        let n = generators.len();
        RelatorPresentation { generators, relators: IntegerMatrix::zero(0, n), provenance: vec![] }
    }

    pub fn push(&mut self, row: Vec<i64>, from: impl Into<String>) {
        assert_eq!(row.len(), self.generators.len());
        self.relators.entries.push(row);
        self.relators.rows += 1;
        self.provenance.push(from.into());
    }

    pub fn group(&self) -> Result<AbelianGroup, SnfError> {
        smith_normal_form(&self.relators)
    }

    /// `2x+l` style rendering of one relator.
    pub fn render(&self, i: usize) -> String {
        let mut s = String::new();
        for (c, g) in self.relators.entries[i].iter().zip(&self.generators) {
            if *c == 0 {
                continue;
            }
            let sign = if *c < 0 {
                "-"
            } else if s.is_empty() {
                ""
            } else {
                "+"
            };
            let mag = c.unsigned_abs();
            if mag == 1 {
                s += &format!("{sign}{g}");
            } else {
                s += &format!("{sign}{mag}{g}");
            }
        }
        if s.is_empty() {
            "0".into()
        } else {
            s
        }
    }

    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut gens: Option<Vec<String>> = None;
        let mut p: Option<RelatorPresentation> = None;
        for (i, raw) in text.lines().enumerate() {
            let lno = i + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |col: usize, m: String| ParseError { line: lno, col, msg: m };
            if let Some(rest) = line.strip_prefix("generators:") {
                let g: Vec<String> = rest.split_whitespace().map(String::from).collect();
                if g.is_empty() {
                    return Err(err(1, "no generators".into()));
                }
                p = Some(RelatorPresentation::new(g.clone()));
                gens = Some(g);
            } else if let Some(rest) = line.strip_prefix("relator:") {
                let (Some(g), Some(pr)) = (gens.as_ref(), p.as_mut()) else {
                    return Err(err(1, "relator before generators".into()));
                };
                let col = raw.find("relator:").unwrap_or(0) + 9;
                let row = parse_relator(rest.trim(), g).map_err(|m| err(col, m))?;
                pr.push(row, format!("line {lno}"));
            } else {
                return Err(err(1, format!("unrecognised line `{line}`")));
            }
        }
        p.ok_or(ParseError { line: 1, col: 1, msg: "missing `generators:` line".into() })
    }
}

fn parse_relator(s: &str, gens: &[String]) -> Result<Vec<i64>, String> {
    let toks: Vec<&str> = s.split_whitespace().collect();
    if !toks.is_empty() && toks.iter().all(|t| t.parse::<i64>().is_ok()) {
        if toks.len() != gens.len() {
            return Err(format!("expected {} coefficients, got {}", gens.len(), toks.len()));
        }
        return Ok(toks.iter().map(|t| t.parse().unwrap()).collect());
    }
    if let Some(t) = toks.iter().find(|t| t.parse::<f64>().is_ok() && t.parse::<i64>().is_err()) {
        return Err(format!("non-integer entry `{t}`"));
    }
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut row = vec![0i64; gens.len()];
    let mut i = 0;
    let b = compact.as_bytes();
    if b.is_empty() {
        return Err("empty relator".into());
    }
    while i < b.len() {
        let mut sign = 1i64;
        if b[i] == b'+' || b[i] == b'-' {
            if b[i] == b'-' {
                sign = -1;
            }
            i += 1;
        }
        let st = i;
        while i < b.len() && b[i].is_ascii_digit() {
            i += 1;
        }
        let coef: i64 =
            if st == i { 1 } else { compact[st..i].parse().map_err(|_| "coefficient too large".to_string())? };
        if i < b.len() && b[i] == b'*' {
            i += 1;
        }
        let ns = i;
        while i < b.len() && b[i] != b'+' && b[i] != b'-' {
            i += 1;
        }
        let name = &compact[ns..i];
        if name.is_empty() {
            if st == i {
                return Err("dangling sign".into());
            }
            return Err(format!("constant term `{}` in relator", &compact[st..i]));
        }
        if name.contains('.') {
            return Err(format!("non-integer entry `{name}`"));
        }
        let k = gens.iter().position(|g| g == name).ok_or_else(|| format!("unknown generator `{name}`"))?;
        row[k] += sign * coef;
    }
    Ok(row)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symbolic_and_numeric_agree() {
        let a = RelatorPresentation::parse("generators: l m x y\nrelator: 2x+l\nrelator: 2y - l - m\n").unwrap();
        let b = RelatorPresentation::parse("generators: l m x y\nrelator: 1 0 2 0\nrelator: -1 -1 0 2\n").unwrap();
        assert_eq!(a.relators, b.relators);
        assert_eq!(a.render(1), "-l-m+2y");
    }

    #[test]
    fn unknown_generator() {
        let e = RelatorPresentation::parse("generators: l m\nrelator: 2z\n").unwrap_err();
        assert!(e.msg.contains("unknown generator"));
    }

    #[test]
    fn non_integer() {
        let e = RelatorPresentation::parse("generators: l m\nrelator: 1.5 0\n").unwrap_err();
        assert!(e.msg.contains("non-integer"));
    }
}
