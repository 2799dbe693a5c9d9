use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::linear::{add_entry, axpy, LinearCombo, Tensor2, Tensor3};
use super::structure::StructBialgebra;
use crate::error::{Error, Result};

/// Plain bialgebra axioms, or the color version with the braided tensor product.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Plain,
    Color,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomResult {
    pub name: String,
    pub pass: bool,
    /// First failing basis tuple in lexicographic order.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub mode: Mode,
    pub axioms: Vec<AxiomResult>,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.axioms.iter().all(|a| a.pass)
    }

    pub fn get(&self, name: &str) -> Option<&AxiomResult> {
        self.axioms.iter().find(|a| a.name == name)
    }

    pub fn failures(&self) -> Vec<&str> {
        self.axioms.iter().filter(|a| !a.pass).map(|a| a.name.as_str()).collect()
    }
}

fn result(name: &str, counterexample: Option<Vec<usize>>) -> AxiomResult {
    AxiomResult { name: name.to_string(), pass: counterexample.is_none(), counterexample }
}

/// First index in `0..n` where `bad` holds, searched in parallel but reported in order.
fn first_bad(n: usize, bad: impl Fn(usize) -> Option<Vec<usize>> + Sync + Send) -> Option<Vec<usize>> {
    (0..n).into_par_iter().find_map_first(bad)
}

/// Checks every axiom exhaustively over basis tuples.
pub fn check_axioms(h: &StructBialgebra, mode: Mode) -> Result<AxiomReport> {
    if mode == Mode::Color && h.grading.is_none() {
        return Err(Error::Invalid("color mode needs a grading".into()));
    }
    let n = h.dim;
    let twisted = mode == Mode::Color;
    let mut axioms = Vec::new();

    axioms.push(result(
        "associativity",
        first_bad(n, |i| {
            for j in 0..n {
                let ij = h.mul_basis(i, j);
                for k in 0..n {
                    let left = h.mul(ij, &h.basis(k));
                    let right = h.mul(&h.basis(i), h.mul_basis(j, k));
                    if left != right {
                        return Some(vec![i, j, k]);
                    }
                }
            }
            None
        }),
    ));

    axioms.push(result(
        "unit",
        (0..n).find_map(|i| {
            let b = h.basis(i);
            (h.mul(&h.unit, &b) != b || h.mul(&b, &h.unit) != b).then(|| vec![i])
        }),
    ));

    axioms.push(result(
        "coassociativity",
        first_bad(n, |i| {
            let mut left: Tensor3 = BTreeMap::new();
            let mut right: Tensor3 = BTreeMap::new();
            for (&(a, b), c) in &h.comult[i] {
                for (&(x, y), d) in &h.comult[a] {
                    add_entry(&mut left, (x, y, b), &(c * d));
                }
                for (&(x, y), d) in &h.comult[b] {
                    add_entry(&mut right, (a, x, y), &(c * d));
                }
            }
            (left != right).then(|| vec![i])
        }),
    ));

    axioms.push(result(
        "counit",
        (0..n).find_map(|i| {
            let mut left: LinearCombo = BTreeMap::new();
            let mut right: LinearCombo = BTreeMap::new();
            for (&(a, b), c) in &h.comult[i] {
                add_entry(&mut left, b, &(c * &h.counit[a]));
                add_entry(&mut right, a, &(c * &h.counit[b]));
            }
            let b = h.basis(i);
            (left != b || right != b).then(|| vec![i])
        }),
    ));

    axioms.push(result(
        "comult_multiplicative",
        first_bad(n, |i| {
            for j in 0..n {
                let lhs = h.comult_of(h.mul_basis(i, j));
                let rhs = h.tensor_mul(&h.comult[i], &h.comult[j], twisted);
                if lhs != rhs {
                    return Some(vec![i, j]);
                }
            }
            None
        }),
    ));

    let one_one: Tensor2 = {
        let mut t = BTreeMap::new();
        for (&a, x) in &h.unit {
            for (&b, y) in &h.unit {
                add_entry(&mut t, (a, b), &(x * y));
            }
        }
        t
    };
    axioms.push(result("comult_unit", (h.comult_of(&h.unit) != one_one).then(Vec::new)));

    axioms.push(result(
        "counit_multiplicative",
        (0..n).find_map(|i| {
            (0..n)
                .find(|&j| h.counit_of(h.mul_basis(i, j)) != &h.counit[i] * &h.counit[j])
                .map(|j| vec![i, j])
        }),
    ));

    axioms.push(result("counit_unit", (!h.counit_of(&h.unit).is_one()).then(Vec::new)));

    if twisted {
        let g = h.grading.as_ref().unwrap();
        let grp = g.group();
        let deg = &g.degrees;
        axioms.push(result(
            "grading_mult",
            (0..n).find_map(|i| {
                (0..n)
                    .find(|&j| {
                        let d = grp.op(&deg[i], &deg[j]);
                        h.mul_basis(i, j).keys().any(|&k| deg[k] != d)
                    })
                    .map(|j| vec![i, j])
            }),
        ));
        axioms.push(result(
            "grading_comult",
            (0..n).find_map(|i| {
                h.comult[i].keys().any(|&(a, b)| grp.op(&deg[a], &deg[b]) != deg[i]).then(|| vec![i])
            }),
        ));
        axioms.push(result(
            "grading_unit",
            h.unit.keys().any(|&k| !grp.is_identity(&deg[k])).then(Vec::new),
        ));
        axioms.push(result(
            "grading_counit",
            (0..n).find_map(|i| (!h.counit[i].is_zero() && !grp.is_identity(&deg[i])).then(|| vec![i])),
        ));
    }
    Ok(AxiomReport { mode, axioms })
}

/// `f` is a bialgebra automorphism: bijective, multiplicative, unital, comultiplicative,
/// and counital.
pub fn is_bialgebra_automorphism(h: &StructBialgebra, f: &[LinearCombo]) -> bool {
    let n = h.dim;
    if f.len() != n || super::linear::invert_columns(f, h.conductor).is_err() {
        return false;
    }
    if h.apply(f, &h.unit) != h.unit {
        return false;
    }
    let mult_ok = first_bad(n, |i| {
        (0..n)
            .find(|&j| h.apply(f, h.mul_basis(i, j)) != h.mul(&f[i], &f[j]))
            .map(|j| vec![i, j])
    })
    .is_none();
    if !mult_ok {
        return false;
    }
    (0..n).all(|i| {
        let lhs = h.comult_of(&f[i]);
        let mut rhs: Tensor2 = BTreeMap::new();
        for (&(a, b), c) in &h.comult[i] {
            for (&x, u) in &f[a] {
                let cu = c * u;
                for (&y, v) in &f[b] {
                    add_entry(&mut rhs, (x, y), &(&cu * v));
                }
            }
        }
        lhs == rhs && h.counit_of(&f[i]) == h.counit[i]
    })
}

/// Image of `Σ c·b_a ⊗ b_b` under `b_a ⊗ b_b ↦ β(|a|, |b|)·b_b ⊗ b_a`.
pub fn braiding(h: &StructBialgebra, t: &Tensor2) -> Tensor2 {
    let mut out = BTreeMap::new();
    for (&(a, b), c) in t {
        add_entry(&mut out, (b, a), &(c * &h.root(h.braid_value(a, b))));
    }
    out
}

/// The braiding of the grading is the plain flip on every pair of basis vectors.
pub fn check_flip(h: &StructBialgebra) -> Result<bool> {
    if h.grading.is_none() {
        return Err(Error::Invalid("flip check needs a grading".into()));
    }
    let n = h.dim;
    Ok((0..n).all(|i| {
        (0..n).all(|j| {
            let t: Tensor2 = BTreeMap::from([((i, j), h.one())]);
            let flip: Tensor2 = BTreeMap::from([((j, i), h.one())]);
            braiding(h, &t) == flip
        })
    }))
}

pub(crate) fn convolve(h: &StructBialgebra, f: &[LinearCombo], g: &[LinearCombo]) -> Vec<LinearCombo> {
    (0..h.dim)
        .map(|i| {
            let mut out = BTreeMap::new();
            for (&(a, b), c) in &h.comult[i] {
                axpy(&mut out, c, &h.mul(&f[a], &g[b]));
            }
            out
        })
        .collect()
}
