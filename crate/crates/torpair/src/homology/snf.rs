//! Smith normal form over the integers, with checked arithmetic.

use serde::Serialize;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SnfError {
    #[error("integer overflow during reduction")]
    Overflow,
    #[error("ragged matrix: row {0} has {1} entries, expected {2}")]
    Ragged(usize, usize, usize),
}

/// Rows are relators, columns are generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntegerMatrix {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<i64>>,
}

impl IntegerMatrix {
    pub fn new(cols: usize, entries: Vec<Vec<i64>>) -> Result<Self, SnfError> {
        for (i, r) in entries.iter().enumerate() {
            if r.len() != cols {
                return Err(SnfError::Ragged(i, r.len(), cols));
            }
        }
        Ok(IntegerMatrix { rows: entries.len(), cols, entries })
    }
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntegerMatrix { rows, cols, entries: vec![vec![0; cols]; rows] }
    }
}

/// A finitely generated abelian group `Z^r + Z/d1 + ... + Z/dk`, d1 | d2 | ...
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AbelianGroup {
    pub invariant_factors: Vec<i64>,
    pub free_rank: usize,
}

impl AbelianGroup {
    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }
    pub fn is_cyclic(&self) -> bool {
        self.invariant_factors.len() + self.free_rank <= 1
    }
    /// Group order, if finite.
    pub fn order(&self) -> Option<i64> {
        if self.free_rank > 0 {
            return None;
        }
        self.invariant_factors.iter().try_fold(1i64, |a, &d| a.checked_mul(d))
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.invariant_factors.iter().map(|d| format!("Z{d}")).collect();
        if self.free_rank > 0 {
            parts.push(if self.free_rank == 1 { "Z".into() } else { format!("Z^{}", self.free_rank) });
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join("+"))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    /// Nonzero diagonal entries (positive), in divisibility order.
    pub diagonal: Vec<i64>,
    pub rank: usize,
}

fn sub_mul(a: i64, q: i64, b: i64) -> Result<i64, SnfError> {
    q.checked_mul(b).and_then(|p| a.checked_sub(p)).ok_or(SnfError::Overflow)
}

/// Diagonalise by unimodular row and column operations. The pivot is always
/// an entry of least absolute value in the remaining block.
pub fn smith_form(m: &IntegerMatrix) -> Result<SmithForm, SnfError> {
    let mut a = m.entries.clone();
    let (nr, nc) = (m.rows, m.cols);
    let mut diag = Vec::new();
    let mut t = 0;
    while t < nr.min(nc) {
        // least nonzero entry in the block
        let mut best: Option<(usize, usize)> = None;
        for (i, row) in a.iter().enumerate().skip(t) {
            for (j, &x) in row.iter().enumerate().skip(t) {
                if x != 0 && best.is_none_or(|(bi, bj)| x.unsigned_abs() < a[bi][bj].unsigned_abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut dirty = false;
            for i in t + 1..nr {
                if a[i][t] != 0 {
                    let q = a[i][t] / a[t][t];
                    for j in t..nc {
                        a[i][j] = sub_mul(a[i][j], q, a[t][j])?;
                    }
                    if a[i][t] != 0 {
                        dirty = true;
                    }
                }
            }
            for j in t + 1..nc {
                if a[t][j] != 0 {
                    let q = a[t][j] / a[t][t];
                    for row in a.iter_mut().skip(t) {
                        row[j] = sub_mul(row[j], q, row[t])?;
                    }
                    if a[t][j] != 0 {
                        dirty = true;
                    }
                }
            }
            if dirty {
                // move the smallest leftover in row/column t to the pivot
                let mut bi = t;
                let mut bj = t;
                for i in t..nr {
                    if a[i][t] != 0 && a[i][t].unsigned_abs() < a[bi][bj].unsigned_abs() {
                        (bi, bj) = (i, t);
                    }
                }
                for j in t..nc {
                    if a[t][j] != 0 && a[t][j].unsigned_abs() < a[bi][bj].unsigned_abs() {
                        (bi, bj) = (t, j);
                    }
                }
                a.swap(t, bi);
                for row in a.iter_mut() {
                    row.swap(t, bj);
                }
                continue;
            }
            // divisibility of the remaining block by the pivot
            let p = a[t][t];
            let bad = (t + 1..nr).find(|&i| (t + 1..nc).any(|j| a[i][j] % p != 0));
            match bad {
                Some(i) => {
                    for j in t..nc {
                        a[t][j] = a[t][j].checked_add(a[i][j]).ok_or(SnfError::Overflow)?;
                    }
                }
                None => break,
            }
        }
        diag.push(a[t][t].checked_abs().ok_or(SnfError::Overflow)?);
        t += 1;
    }
    Ok(SmithForm { rank: diag.len(), diagonal: diag })
}

/// Cokernel of the relator matrix.
pub fn smith_normal_form(m: &IntegerMatrix) -> Result<AbelianGroup, SnfError> {
    let s = smith_form(m)?;
    Ok(AbelianGroup {
        invariant_factors: s.diagonal.iter().copied().filter(|&d| d > 1).collect(),
        free_rank: m.cols - s.rank,
    })
}

/// Rank over the rationals, by fraction-free elimination in i128.
pub fn rank(rows: &[Vec<i64>]) -> Result<usize, SnfError> {
    let Some(nc) = rows.first().map(|r| r.len()) else { return Ok(0) };
    let mut a: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let nr = a.len();
    let mut r = 0;
    let mut prev: i128 = 1;
    for c in 0..nc {
        let Some(p) = (r..nr).find(|&i| a[i][c] != 0) else { continue };
        a.swap(r, p);
        for i in r + 1..nr {
            for j in c + 1..nc {
                let v = a[r][c]
                    .checked_mul(a[i][j])
                    .zip(a[i][c].checked_mul(a[r][j]))
                    .and_then(|(x, y)| x.checked_sub(y))
                    .ok_or(SnfError::Overflow)?;
                a[i][j] = v / prev;
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        r += 1;
        if r == nr {
            break;
        }
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grp(cols: usize, rows: Vec<Vec<i64>>) -> AbelianGroup {
        smith_normal_form(&IntegerMatrix::new(cols, rows).unwrap()).unwrap()
    }

    #[test]
    fn two_by_two() {
        let g = grp(2, vec![vec![2, 0], vec![0, 2]]);
        assert_eq!(g.invariant_factors, vec![2, 2]);
        assert_eq!(g.free_rank, 0);
    }

    #[test]
    fn needs_divisibility_fix() {
        // diag(2,3) is Z6
        assert_eq!(grp(2, vec![vec![2, 0], vec![0, 3]]).invariant_factors, vec![6]);
    }

    #[test]
    fn empty_relators() {
        let g = grp(2, vec![]);
        assert_eq!((g.invariant_factors.len(), g.free_rank), (0, 2));
    }

    #[test]
    fn rank_small() {
        assert_eq!(rank(&[vec![1, 2], vec![2, 4]]).unwrap(), 1);
        assert_eq!(rank(&[vec![0, 1], vec![1, 0], vec![1, 1]]).unwrap(), 2);
    }
}
