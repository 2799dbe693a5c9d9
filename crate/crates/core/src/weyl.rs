//! Generalized Cartan entries, reflections of braiding matrices and degrees, and orbits.

use std::collections::{HashMap, VecDeque};

use serde::Serialize;

use crate::datum::{Datum, ScalarMatrix};
use crate::error::{Error, Result};
use crate::scalars::{Order, Scalar};

/// Default cap on the number of orbit nodes.
pub const DEFAULT_MAX_NODES: usize = 1024;

/// `a_pj`: `2` on the diagonal, `0` when `q_pj q_jp = 1`, and otherwise
/// `-min{n ≥ 0 : (n+1)_{q_pp} (q_pp^n q_pj q_jp − 1) = 0}`.
pub fn cartan_entry(q: &ScalarMatrix, p: usize, j: usize) -> Result<i64> {
    if p == j {
        return Ok(2);
    }
    let prod = q
        .get(p, j)
        .checked_mul(q.get(j, p))
        .ok_or_else(|| Error::SizeLimit("variable exponent overflow".into()))?;
    if prod.is_one() {
        return Ok(0);
    }
    let qpp = q.get(p, p);
    let n1 = qpp.solve_power(&prod.inv()).ok();
    let n2 = match qpp.order_of() {
        Order::Finite(m) if m > 1 => Some(m - 1),
        _ => None,
    };
    match (n1, n2) {
        (Some(a), Some(b)) => Ok(-(a.min(b) as i64)),
        (Some(a), None) | (None, Some(a)) => Ok(-(a as i64)),
        (None, None) => Err(Error::NotReflectable(p)),
    }
}

/// Row `p` of the generalized Cartan matrix.
pub fn cartan_row(q: &ScalarMatrix, p: usize) -> Result<Vec<i64>> {
    (0..q.rank()).map(|j| cartan_entry(q, p, j)).collect()
}

/// `q'_ij = q_ij q_pj^{-a_pi} q_ip^{-a_pj} q_pp^{a_pi a_pj}` for a given Cartan row.
///
/// Fails with [`Error::SizeLimit`] when a variable exponent leaves the `i64` range, which
/// can happen deep inside an infinite orbit.
pub fn reflect_with(q: &ScalarMatrix, p: usize, a: &[i64]) -> Result<ScalarMatrix> {
    let n = q.rank();
    let overflow = || Error::SizeLimit("variable exponent overflow".into());
    let entry = |i: usize, j: usize| -> Option<Scalar> {
        let x = q.get(i, j).checked_mul(&q.get(p, j).checked_pow(a[i].checked_neg()?)?)?;
        let x = x.checked_mul(&q.get(i, p).checked_pow(a[j].checked_neg()?)?)?;
        x.checked_mul(&q.get(p, p).checked_pow(a[i].checked_mul(a[j])?)?)
    };
    let rows = (0..n)
        .map(|i| (0..n).map(|j| entry(i, j).ok_or_else(overflow)).collect())
        .collect::<Result<_>>()?;
    Ok(ScalarMatrix(rows))
}

/// The reflected braiding matrix `s_p*(q)` (diagonal not validated).
pub fn reflect_matrix(q: &ScalarMatrix, p: usize) -> Result<ScalarMatrix> {
    let a = cartan_row(q, p)?;
    reflect_with(q, p, &a)
}

/// Reflects `q` and moves the degrees by `t'_i = t_i t_p^{-a_pi}`.
pub fn reflect_datum(d: &Datum, p: usize) -> Result<Datum> {
    let a = cartan_row(d.q(), p)?;
    let q2 = reflect_with(d.q(), p, &a)?;
    let g = d.group();
    let t2 = d
        .t()
        .iter()
        .zip(&a)
        .map(|(ti, &api)| g.op(ti, &g.pow(&d.t()[p], -api)))
        .collect();
    let out = Datum::new(q2, d.beta().clone(), t2)?;
    assert_eq!(
        out.qt(),
        &reflect_with(d.qt(), p, &a)?,
        "twisted braiding must transform by the same reflection"
    );
    Ok(out)
}

/// `s_p(s_p(d)) == d` at a reflectable vertex.
pub fn is_involutive_at(d: &Datum, p: usize) -> Result<bool> {
    let once = reflect_datum(d, p)?;
    Ok(reflect_datum(&once, p)? == *d)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitEdge {
    pub from: usize,
    pub vertex: usize,
    pub to: usize,
}

/// Nodes are data up to exact equality; node 0 is the start.
#[derive(Clone, Debug)]
pub struct OrbitGraph {
    pub nodes: Vec<Datum>,
    pub edges: Vec<OrbitEdge>,
    pub truncated: bool,
    /// `(node, vertex, reason)` for reflections that could not be performed.
    pub skipped: Vec<(usize, usize, String)>,
}

/// Breadth-first closure under all reflections, capped at `max_nodes`.
pub fn weyl_orbit(start: &Datum, max_nodes: usize) -> OrbitGraph {
    let mut nodes = vec![start.clone()];
    let mut index: HashMap<Datum, usize> = HashMap::from([(start.clone(), 0)]);
    let mut edges = Vec::new();
    let mut skipped = Vec::new();
    let mut truncated = false;
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for p in 0..start.rank() {
            let next = match reflect_datum(&nodes[i], p) {
                Ok(n) => n,
                Err(e) => {
                    skipped.push((i, p, e.to_string()));
                    continue;
                }
            };
            let j = match index.get(&next) {
                Some(&j) => j,
                None if nodes.len() >= max_nodes => {
                    truncated = true;
                    continue;
                }
                None => {
                    let j = nodes.len();
                    index.insert(next.clone(), j);
                    nodes.push(next);
                    queue.push_back(j);
                    j
                }
            };
            edges.push(OrbitEdge { from: i, vertex: p, to: j });
        }
    }
    OrbitGraph { nodes, edges, truncated, skipped }
}

/// Re-derives every edge's degrees and twisted braiding from its source node.
pub fn check_consistent_coloring(orbit: &OrbitGraph) -> bool {
    orbit.edges.iter().all(|e| {
        let src = &orbit.nodes[e.from];
        let dst = &orbit.nodes[e.to];
        let Ok(a) = cartan_row(src.q(), e.vertex) else { return false };
        let g = src.group();
        let t_ok = src
            .t()
            .iter()
            .zip(&a)
            .zip(dst.t())
            .all(|((ti, &api), di)| g.op(ti, &g.pow(&src.t()[e.vertex], -api)) == *di);
        t_ok && reflect_with(src.qt(), e.vertex, &a).as_ref() == Ok(dst.qt())
            && reflect_with(src.q(), e.vertex, &a).as_ref() == Ok(dst.q())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{Bicharacter, FinAbGroup};
    use crate::scalars::Rational01;

    #[test]
    fn cartan_conventions() {
        let q = ScalarMatrix::parse(&[&["-1", "q"], &["q^-1", "q"]]).unwrap();
        assert_eq!(cartan_entry(&q, 0, 0), Ok(2));
        assert_eq!(cartan_entry(&q, 0, 1), Ok(0));
        let q = ScalarMatrix::parse(&[&["q", "q^-1"], &["1", "q^2"]]).unwrap();
        assert_eq!(cartan_entry(&q, 0, 1), Ok(-1));
        assert_eq!(cartan_entry(&q, 1, 0), Err(Error::NotReflectable(1)));
        let q = ScalarMatrix::parse(&[&["-1", "q"], &["1", "r"]]).unwrap();
        assert_eq!(cartan_entry(&q, 0, 1), Ok(-1));
    }

    #[test]
    fn rank_one_orbit_is_a_point() {
        let g = FinAbGroup::cyclic(2);
        let beta = Bicharacter::new(g.clone(), vec![vec![Rational01::HALF]]).unwrap();
        let d = Datum::new(ScalarMatrix::parse(&[&["q"]]).unwrap(), beta, vec![g.generator(0)]).unwrap();
        let orbit = weyl_orbit(&d, 10);
        assert_eq!(orbit.nodes.len(), 1);
        assert_eq!(orbit.skipped.len(), 0);
        assert!(check_consistent_coloring(&orbit));
    }
}
