//! Line-oriented text formats for graphs and graph pairs.
//!
//! ```text
//! graph GS surface=torus vertices=2 labels=2 delta=5
//! vertex 1: a:1 b:2 ...
//! vertex 2: ...
//! ```
//!
//! A pair file holds two blocks, G_S first, sharing edge ids.
//!
//! Darts are listed anticlockwise; the slot order is the file order. An
//! optional `annulus=<v>:<slot>,<v>:<slot>` key names one dart on each of
//! the two faces that bound an annular region.

use crate::pairgraph::{GraphPair, PairError};
use crate::surfmap::{LabelledGraph, SurfError, Surface};
use std::collections::HashMap;
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}, column {col}: {msg}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

fn perr(line: usize, col: usize, msg: impl Into<String>) -> ParseError {
    ParseError { line, col, msg: msg.into() }
}

struct Header {
    name: String,
    surface: Surface,
    n: usize,
    q: usize,
    delta: usize,
    annulus: Option<((usize, usize), (usize, usize))>,
    line: usize,
}

/// Column (1-based) of a token inside a raw line.
fn col_of(raw: &str, tok: &str) -> usize {
    let base = raw.as_ptr() as usize;
    let p = tok.as_ptr() as usize;
    if p >= base && p <= base + raw.len() {
        p - base + 1
    } else {
        1
    }
}

fn parse_vs(s: &str) -> Option<(usize, usize)> {
    let (a, b) = s.split_once(':')?;
    Some((a.parse().ok()?, b.parse().ok()?))
}

fn parse_header(raw: &str, lno: usize) -> Result<Header, ParseError> {
    let mut toks = raw.split_whitespace();
    toks.next();
    let name = toks.next().ok_or_else(|| perr(lno, 1, "graph name missing"))?;
    let mut h =
        Header { name: name.to_string(), surface: Surface::Torus, n: 0, q: 0, delta: 5, annulus: None, line: lno };
    let (mut got_n, mut got_q) = (false, false);
    for t in toks {
        let c = col_of(raw, t);
        let (k, v) = t.split_once('=').ok_or_else(|| perr(lno, c, format!("expected key=value, got `{t}`")))?;
        let num = || v.parse::<usize>().map_err(|_| perr(lno, c + k.len() + 1, format!("`{v}` is not a number")));
        match k {
            "surface" => {
                h.surface = match v {
                    "torus" => Surface::Torus,
                    "disk" => Surface::Disk,
                    "annulus" => Surface::Annulus,
                    _ => return Err(perr(lno, c, format!("unknown surface `{v}`"))),
                }
            }
            "vertices" => {
                h.n = num()?;
                got_n = true;
            }
            "labels" => {
                h.q = num()?;
                got_q = true;
            }
            "delta" => h.delta = num()?,
            "annulus" => {
                let (a, b) = v.split_once(',').ok_or_else(|| perr(lno, c, "annulus=<v>:<slot>,<v>:<slot>"))?;
                match (parse_vs(a), parse_vs(b)) {
                    (Some(x), Some(y)) => h.annulus = Some((x, y)),
                    _ => return Err(perr(lno, c, "annulus=<v>:<slot>,<v>:<slot>")),
                }
            }
            _ => return Err(perr(lno, c, format!("unknown key `{k}`"))),
        }
    }
    if !got_n || !got_q {
        return Err(perr(lno, 1, "header needs vertices= and labels="));
    }
    if h.q == 0 {
        return Err(perr(lno, 1, "labels must be positive"));
    }
    Ok(h)
}

type Rotations = Vec<Vec<(String, u32)>>;

/// Parse one or more graph blocks.
pub fn parse_graphs(text: &str) -> Result<Vec<LabelledGraph>, ParseError> {
    let mut out = Vec::new();
    // first position of every edge id, for arity diagnostics
    let mut seen: HashMap<String, (usize, usize)> = HashMap::new();
    let mut cur: Option<(Header, Rotations)> = None;
    let finish = |h: Header,
                  rot: Rotations,
                  seen: &HashMap<String, (usize, usize)>|
     -> Result<LabelledGraph, ParseError> {
        if rot.len() != h.n {
            return Err(perr(h.line, 1, format!("graph `{}` declares {} vertices, found {}", h.name, h.n, rot.len())));
        }
        let mut g = LabelledGraph::from_rotations(&h.name, h.q, h.delta, &rot).map_err(|e| match e {
            SurfError::EdgeArity(ref id, k) => {
                let (l, c) = seen.get(id).copied().unwrap_or((h.line, 1));
                perr(l, c, format!("graph `{}`: edge id `{id}` appears {k} time(s), expected 2", h.name))
            }
            other => perr(h.line, 1, other.to_string()),
        })?;
        g.surface = h.surface;
        if let Some(((v1, s1), (v2, s2))) = h.annulus {
            for &(v, s) in &[(v1, s1), (v2, s2)] {
                if v == 0 || v > g.vertex_count() || s >= g.degree(v) {
                    return Err(perr(h.line, 1, format!("annulus dart {v}:{s} does not exist")));
                }
            }
            g.set_annulus(Some((g.dart(v1, s1), g.dart(v2, s2))));
        }
        Ok(g)
    };
    for (i, raw) in text.lines().enumerate() {
        let lno = i + 1;
        let line = raw.split('#').next().unwrap_or("");
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        if trimmed.starts_with("graph ") || trimmed == "graph" {
            if let Some((h, rot)) = cur.take() {
                out.push(finish(h, rot, &seen)?);
            }
            seen.clear();
            cur = Some((parse_header(line, lno)?, Vec::new()));
        } else if let Some(rest) = trimmed.strip_prefix("vertex") {
            let (h, rot) = cur.as_mut().ok_or_else(|| perr(lno, 1, "vertex line before graph header"))?;
            let (idx, darts) =
                rest.split_once(':').ok_or_else(|| perr(lno, col_of(raw, rest), "expected `vertex <i>:`"))?;
            let v: usize = idx
                .trim()
                .parse()
                .map_err(|_| perr(lno, col_of(raw, idx), format!("bad vertex index `{}`", idx.trim())))?;
            if v != rot.len() + 1 {
                return Err(perr(lno, col_of(raw, idx), format!("expected vertex {}, got {v}", rot.len() + 1)));
            }
            let mut r = Vec::new();
            for t in darts.split_whitespace() {
                let c = col_of(raw, t);
                let (e, l) =
                    t.rsplit_once(':').ok_or_else(|| perr(lno, c, format!("expected <edge>:<label>, got `{t}`")))?;
                if e.is_empty() {
                    return Err(perr(lno, c, "empty edge id"));
                }
                let l: u32 = l.parse().map_err(|_| perr(lno, c + e.len() + 1, format!("bad label `{l}`")))?;
                if l == 0 || l as usize > h.q {
                    return Err(perr(lno, c + e.len() + 1, format!("label {l} outside 1..={}", h.q)));
                }
                seen.entry(e.to_string()).or_insert((lno, c));
                r.push((e.to_string(), l));
            }
            rot.push(r);
        } else {
            return Err(perr(lno, col_of(raw, trimmed), format!("unrecognised line `{trimmed}`")));
        }
    }
    if let Some((h, rot)) = cur.take() {
        out.push(finish(h, rot, &seen)?);
    }
    Ok(out)
}

pub fn parse_graph(text: &str) -> Result<LabelledGraph, ParseError> {
    let mut v = parse_graphs(text)?;
    match v.len() {
        1 => Ok(v.remove(0)),
        k => Err(perr(1, 1, format!("expected one graph block, found {k}"))),
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PairFileError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Pair(#[from] PairError),
}

/// Two graph blocks paired by edge id.
pub fn parse_pair(text: &str) -> Result<GraphPair, PairFileError> {
    let mut v = parse_graphs(text)?;
    if v.len() != 2 {
        return Err(perr(1, 1, format!("a pair file needs two graph blocks, found {}", v.len())).into());
    }
    let gt = v.pop().unwrap();
    let gs = v.pop().unwrap();
    Ok(GraphPair::new(gs, gt)?)
}

pub fn format_pair(p: &GraphPair) -> String {
    format_graph(&p.gs) + &format_graph(&p.gt)
}

pub fn format_graph(g: &LabelledGraph) -> String {
    let mut s = String::new();
    let _ = write!(
        s,
        "graph {} surface={} vertices={} labels={} delta={}",
        g.name,
        g.surface.name(),
        g.vertex_count(),
        g.q,
        g.delta
    );
    if let Some((a, b)) = g.annulus() {
        let _ = write!(s, " annulus={}:{},{}:{}", g.vertex(a), g.slot(a), g.vertex(b), g.slot(b));
    }
    s.push('\n');
    for v in 1..=g.vertex_count() {
        let _ = write!(s, "vertex {v}:");
        for d in g.darts_at(v) {
            let _ = write!(s, " {}:{}", g.edge_name(g.edge(d)), g.label(d));
        }
        s.push('\n');
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    const TWO_LOOPS: &str =
        "# one vertex on the torus\ngraph T surface=torus vertices=1 labels=1 delta=1\nvertex 1: a:1 b:1 a:1 b:1\n";

    #[test]
    fn round_trip() {
        let g = parse_graph(TWO_LOOPS).unwrap();
        assert_eq!(g.face_count(), 1);
        let again = parse_graph(&format_graph(&g)).unwrap();
        assert_eq!(format_graph(&again), format_graph(&g));
    }

    #[test]
    fn single_endpoint_reports_line() {
        let e = parse_graph("graph X vertices=1 labels=1\nvertex 1: a:1 b:1 a:1\n").unwrap_err();
        assert_eq!((e.line, e.col), (2, 15));
        assert!(e.msg.contains("`b` appears 1"));
    }

    #[test]
    fn bad_label_has_column() {
        let e = parse_graph("graph X vertices=1 labels=2\nvertex 1: a:1 a:7\n").unwrap_err();
        assert_eq!((e.line, e.col), (2, 17));
    }
}
