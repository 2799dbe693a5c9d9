use std::collections::BTreeMap;

use serde::Serialize;

use super::axioms::{convolve, AxiomResult, Mode};
use super::linear::{add_entry, axpy, scaled, solve_unique, Echelon, LinearCombo, Tensor2};
use super::structure::StructBialgebra;
use crate::error::{Error, Result};

/// A solved antipode together with the laws it was checked against.
#[derive(Clone, Debug, Serialize)]
pub struct AntipodeReport {
    #[serde(skip)]
    pub matrix: Vec<LinearCombo>,
    pub laws: Vec<AxiomResult>,
}

impl AntipodeReport {
    pub fn all_pass(&self) -> bool {
        self.laws.iter().all(|l| l.pass)
    }
}

/// `η∘ε` as basis images.
fn unit_counit(h: &StructBialgebra) -> Vec<LinearCombo> {
    h.counit.iter().map(|e| scaled(e, &h.unit)).collect()
}

fn flatten(h: &StructBialgebra, f: &[LinearCombo]) -> LinearCombo {
    let mut out = BTreeMap::new();
    for (i, m) in f.iter().enumerate() {
        for (&k, c) in m {
            out.insert(i * h.dim + k, c.clone());
        }
    }
    out
}

/// Convolution inverse of the identity.
///
/// Builds the powers `id^0 = η∘ε, id^1, id^2, …` in the convolution algebra until the first
/// linear dependency `id^d = Σ_{j<d} a_j id^j`. The identity is invertible iff `a_0 ≠ 0`, and
/// then `S = a_0^{-1}(id^{d-1} − Σ_{j≥1} a_j id^{j-1})`.
pub fn convolution_inverse_of_identity(h: &StructBialgebra) -> Result<Vec<LinearCombo>> {
    let n = h.dim;
    let id: Vec<LinearCombo> = (0..n).map(|i| h.basis(i)).collect();
    let mut powers = vec![unit_counit(h)];
    let mut ech = Echelon::new(h.conductor);
    if ech.push(&flatten(h, &powers[0])).is_some() {
        return Err(Error::NoAntipode("counit is zero".into()));
    }
    loop {
        let next = convolve(h, powers.last().unwrap(), &id);
        if let Some(dep) = ech.push(&flatten(h, &next)) {
            let a0 = dep.get(&0).cloned().ok_or_else(|| {
                Error::NoAntipode("identity is a zero divisor under convolution".into())
            })?;
            let inv = a0.inv()?;
            let d = powers.len();
            let mut s: Vec<LinearCombo> = powers[d - 1].clone();
            for (&j, a) in dep.range(1..) {
                let neg = -a;
                for (si, pj) in s.iter_mut().zip(&powers[j - 1]) {
                    axpy(si, &neg, pj);
                }
            }
            return Ok(s.iter().map(|m| scaled(&inv, m)).collect());
        }
        powers.push(next);
    }
}

/// Direct solve of `m∘(S⊗id)∘Δ = η∘ε` with the `dim²` entries of `S` as unknowns.
/// Quadratic in memory; intended for small dimensions and as an independent cross-check.
pub fn solve_antipode_linear(h: &StructBialgebra) -> Result<Vec<LinearCombo>> {
    let n = h.dim;
    let target = unit_counit(h);
    // equation (i, m): Σ_{(a,b)} c Σ_k S[a][k] · (b_k b_b)[m] = target[i][m]
    let mut eqs: BTreeMap<(usize, usize), LinearCombo> = BTreeMap::new();
    for i in 0..n {
        for (&(a, b), c) in &h.comult[i] {
            for k in 0..n {
                for (&m, v) in h.mul_basis(k, b) {
                    add_entry(eqs.entry((i, m)).or_default(), a * n + k, &(c * v));
                }
            }
        }
    }
    let mut rows = Vec::new();
    for i in 0..n {
        for m in 0..n {
            let lhs = eqs.remove(&(i, m)).unwrap_or_default();
            let rhs = target[i].get(&m).cloned().unwrap_or_else(|| h.zero());
            if lhs.is_empty() && rhs.is_zero() {
                continue;
            }
            rows.push((lhs, rhs));
        }
    }
    let x = solve_unique(&rows, n * n, h.conductor)?;
    Ok((0..n)
        .map(|a| (0..n).filter(|&k| !x[a * n + k].is_zero()).map(|k| (k, x[a * n + k].clone())).collect())
        .collect())
}

fn law(name: &str, bad: Option<Vec<usize>>) -> AxiomResult {
    AxiomResult { name: name.to_string(), pass: bad.is_none(), counterexample: bad }
}

/// Checks both convolution laws, anti-multiplicativity and anti-comultiplicativity of `s`.
/// Color mode inserts the braiding `β(|x|,|y|)`; plain mode uses the flip.
pub fn check_antipode_laws(h: &StructBialgebra, s: &[LinearCombo], mode: Mode) -> Result<Vec<AxiomResult>> {
    if mode == Mode::Color && h.grading.is_none() {
        return Err(Error::Invalid("color mode needs a grading".into()));
    }
    let n = h.dim;
    let id: Vec<LinearCombo> = (0..n).map(|i| h.basis(i)).collect();
    let target = unit_counit(h);
    let left = convolve(h, s, &id);
    let right = convolve(h, &id, s);
    let braid = |i: usize, j: usize| match mode {
        Mode::Color => h.root(h.braid_value(i, j)),
        Mode::Plain => h.one(),
    };
    let mut laws = vec![
        law("antipode_left", (0..n).find(|&i| left[i] != target[i]).map(|i| vec![i])),
        law("antipode_right", (0..n).find(|&i| right[i] != target[i]).map(|i| vec![i])),
    ];
    laws.push(law(
        "antipode_anti_multiplicative",
        (0..n).find_map(|i| {
            (0..n)
                .find(|&j| {
                    let lhs = h.apply(s, h.mul_basis(i, j));
                    let rhs = scaled(&braid(i, j), &h.mul(&s[j], &s[i]));
                    lhs != rhs
                })
                .map(|j| vec![i, j])
        }),
    ));
    laws.push(law(
        "antipode_anti_comultiplicative",
        (0..n).find_map(|i| {
            let lhs = h.comult_of(&s[i]);
            let mut rhs: Tensor2 = BTreeMap::new();
            for (&(a, b), c) in &h.comult[i] {
                let coef = c * &braid(a, b);
                for (&x, u) in &s[b] {
                    let cu = &coef * u;
                    for (&y, v) in &s[a] {
                        add_entry(&mut rhs, (x, y), &(&cu * v));
                    }
                }
            }
            (lhs != rhs).then(|| vec![i])
        }),
    ));
    Ok(laws)
}

/// Solves for the antipode and verifies its laws in the given mode.
pub fn solve_antipode(h: &StructBialgebra, mode: Mode) -> Result<AntipodeReport> {
    let matrix = convolution_inverse_of_identity(h)?;
    let laws = check_antipode_laws(h, &matrix, mode)?;
    Ok(AntipodeReport { matrix, laws })
}

/// `S∘S`, for inspecting whether the antipode is involutive.
pub fn square(h: &StructBialgebra, s: &[LinearCombo]) -> Vec<LinearCombo> {
    s.iter().map(|m| h.apply(s, m)).collect()
}
