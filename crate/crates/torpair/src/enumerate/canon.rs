//! Canonical codes for labelled maps and map pairs.
//!
//! A code is the breadth-first numbering of darts from a start dart,
//! written as the images under the map's permutations plus a colour. The
//! canonical code is the least code over all starts and all symmetries:
//! reflection, dihedral relabelling of the labels, and renumberings of the
//! vertices that keep or swap the parity classes.

use crate::pairgraph::GraphPair;
use crate::surfmap::LabelledGraph;

pub type Code = Vec<u32>;

/// BFS code from `start`. `perms[k][d]` is the k-th permutation applied to
/// dart d. Returns `None` when the darts reachable from `start` do not
/// cover everything, or as soon as the code exceeds `best`.
pub fn bfs_code(perms: &[&[usize]], colour: &[u32], start: usize, best: Option<&Code>) -> Option<Code> {
    let n = colour.len();
    let mut num = vec![u32::MAX; n];
    let mut order = Vec::with_capacity(n);
    num[start] = 0;
    order.push(start);
    let mut code = Vec::with_capacity(n * (perms.len() + 1));
    let mut i = 0;
    let mut tight = best.is_some();
    while i < order.len() {
        let d = order[i];
        i += 1;
        for p in perms {
            let x = p[d];
            if num[x] == u32::MAX {
                num[x] = order.len() as u32;
                order.push(x);
            }
            code.push(num[x]);
        }
        code.push(colour[d]);
        if tight {
            let b = best.unwrap();
            let k = code.len();
            match code[..k].cmp(&b[..k.min(b.len())]) {
                std::cmp::Ordering::Greater => return None,
                std::cmp::Ordering::Less => tight = false,
                _ => {}
            }
        }
    }
    if order.len() != n {
        return None;
    }
    Some(code)
}

fn least(perms: &[&[usize]], colour: &[u32], best: &mut Option<Code>) {
    for s in 0..colour.len() {
        if let Some(c) = bfs_code(perms, colour, s, best.as_ref()) {
            if best.as_ref().is_none_or(|b| c < *b) {
                *best = Some(c);
            }
        }
    }
}

fn rot_arrays(g: &LabelledGraph) -> (Vec<usize>, Vec<usize>, Vec<usize>) {
    let n = g.dart_count();
    let r: Vec<usize> = (0..n).map(|d| g.rho(d)).collect();
    let ri: Vec<usize> = (0..n).map(|d| g.rho_inv(d)).collect();
    let iv: Vec<usize> = (0..n).map(|d| g.inv(d)).collect();
    (r, ri, iv)
}

/// Canonical code of one labelled graph. Graphs must be connected.
pub fn graph_code(g: &LabelledGraph) -> Code {
    let (r, ri, iv) = rot_arrays(g);
    let q = g.q.max(1);
    let mut best: Option<Code> = None;
    let n = g.dart_count();
    for mirror in [false, true] {
        let rr = if mirror { &ri } else { &r };
        for sgn in [1i64, -1] {
            for a in 0..q as i64 {
                let lab: Vec<u32> =
                    (0..n).map(|d| ((sgn * (g.label(d) as i64 - 1) + a).rem_euclid(q as i64) + 1) as u32).collect();
                for start in 0..n {
                    let par = g.vertex(start) % 2;
                    let colour: Vec<u32> = (0..n).map(|d| lab[d] * 2 + ((g.vertex(d) % 2) ^ par) as u32).collect();
                    if let Some(c) = bfs_code(&[rr, &iv], &colour, start, best.as_ref()) {
                        if best.as_ref().is_none_or(|b| c < *b) {
                            best = Some(c);
                        }
                    }
                }
            }
        }
    }
    let mut out = best.unwrap_or_default();
    out.insert(0, g.vertex_count() as u32);
    out
}

/// Canonical code of a pair: darts carry the rotation of G_S, the shared
/// edge involution and the transported rotation of G_T. Each side may be
/// reflected independently.
pub fn pair_code(p: &GraphPair) -> Code {
    let gs = &p.gs;
    let gt = &p.gt;
    let n = gs.dart_count();
    let (rs, rsi, iv) = rot_arrays(gs);
    let rt: Vec<usize> = (0..n).map(|d| p.t2s(gt.rho(p.s2t(d)))).collect();
    let rti: Vec<usize> = (0..n).map(|d| p.t2s(gt.rho_inv(p.s2t(d)))).collect();
    let mut best: Option<Code> = None;
    for ms in [false, true] {
        for mt in [false, true] {
            let a = if ms { &rsi } else { &rs };
            let b = if mt { &rti } else { &rt };
            for start in 0..n {
                let ps = gs.vertex(start) % 2;
                let pt = gt.vertex(p.s2t(start)) % 2;
                let colour: Vec<u32> =
                    (0..n).map(|d| (((gs.vertex(d) % 2) ^ ps) * 2 + ((gt.vertex(p.s2t(d)) % 2) ^ pt)) as u32).collect();
                if let Some(c) = bfs_code(&[a, &iv, b], &colour, start, best.as_ref()) {
                    if best.as_ref().is_none_or(|x| c < *x) {
                        best = Some(c);
                    }
                }
            }
        }
    }
    let mut out = best.unwrap_or_default();
    out.splice(0..0, [gs.vertex_count() as u32, gt.vertex_count() as u32]);
    out
}

/// Canonical code of an unlabelled map with marked corners. `mark[d]`
/// colours the corner from dart d to its anticlockwise successor. Used for
/// maps in a disk or annulus, where the marks say which faces are outer.
pub fn marked_code(rot: &[usize], inv: &[usize], mark: &[u32]) -> Code {
    let n = rot.len();
    let mut rinv = vec![0; n];
    for d in 0..n {
        rinv[rot[d]] = d;
    }
    // reflected: the corner after d becomes the corner before rot(d)
    let mirrored: Vec<u32> = (0..n).map(|e| mark[rinv[e]]).collect();
    let mut best = None;
    least(&[rot, inv], mark, &mut best);
    least(&[&rinv, inv], &mirrored, &mut best);
    best.unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn early_exit_agrees_with_full_code() {
        // a map on 4 darts: two vertices of degree 2 joined by two edges
        let rot = [1, 0, 3, 2];
        let inv = [2, 3, 0, 1];
        let col = [0, 0, 0, 0];
        let full = bfs_code(&[&rot, &inv], &col, 0, None).unwrap();
        let again = bfs_code(&[&rot, &inv], &col, 1, Some(&full)).unwrap();
        assert_eq!(full, again);
    }
}
