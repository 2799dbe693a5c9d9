//! Reduction of a commutation factor to a nondegenerate one with trivial diagonal, and the
//! associated 2-cocycle whose antisymmetrization recovers it.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groups::{Bicharacter, Element, FinAbGroup, Projection, Subgroup};
use crate::scalars::Rational01;

/// A normalized 2-cochain on a finite abelian group, `values[ix·|G| + iy] = γ(x, y)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CocycleTable {
    pub group: FinAbGroup,
    pub values: Vec<Rational01>,
}

impl CocycleTable {
    pub fn get(&self, x: &Element, y: &Element) -> Rational01 {
        let n = self.group.order() as usize;
        self.values[self.group.index(x) * n + self.group.index(y)]
    }

    /// `γ(x, y)γ(xy, z) = γ(y, z)γ(x, yz)` for all triples.
    pub fn is_cocycle(&self) -> bool {
        let g = &self.group;
        let els = g.elements();
        els.iter().all(|x| {
            els.iter().all(|y| {
                let xy = g.op(x, y);
                els.iter().all(|z| {
                    self.get(x, y) + self.get(&xy, z) == self.get(y, z) + self.get(x, &g.op(y, z))
                })
            })
        })
    }

    /// `γ(x, y)/γ(y, x) = β(x, y)` for all pairs.
    pub fn antisymmetrizes_to(&self, beta: &Bicharacter) -> bool {
        let els = self.group.elements();
        els.iter()
            .all(|x| els.iter().all(|y| self.get(x, y) - self.get(y, x) == beta.eval(x, y)))
    }

    /// Rows indexed by elements in group-index order.
    pub fn matrix(&self) -> Vec<Vec<Rational01>> {
        let n = self.group.order() as usize;
        self.values.chunks(n).map(|r| r.to_vec()).collect()
    }
}

/// `u(g) = β(g, g)`, a character of order at most 2, returned as dual residues.
pub fn drinfeld_u(beta: &Bicharacter) -> Result<Element> {
    if !beta.is_commutation_factor() {
        return Err(Error::NotCommutationFactor);
    }
    let g = beta.group();
    let u = Element(
        (0..g.rank())
            .map(|i| {
                let e = g.generator(i);
                let v = beta.eval(&e, &e);
                debug_assert!(v.is_zero() || v == Rational01::HALF);
                v.num() * (g.orders()[i] / v.den())
            })
            .collect(),
    );
    debug_assert!(g
        .elements()
        .iter()
        .all(|x| g.char_eval(&u, x) == beta.eval(x, &g.inv(x)) && g.char_eval(&u, x) == beta.eval(x, x)));
    Ok(u)
}

/// `κ(g, h) = -1` exactly when `u(g) = u(h) = -1`.
pub fn kappa_of(group: &FinAbGroup, u: &Element) -> Bicharacter {
    let sign = |i: usize| group.char_eval(u, &group.generator(i)) == Rational01::HALF;
    Bicharacter::from_generators(group.clone(), |i, j| {
        if sign(i) && sign(j) {
            Rational01::HALF
        } else {
            Rational01::ZERO
        }
    })
    .expect("sign bicharacter is well defined")
}

/// Everything produced by the reduction of a commutation factor.
#[derive(Clone, Debug)]
pub struct TriangularReduction {
    pub u: Element,
    pub kappa: Bicharacter,
    pub beta_kappa: Bicharacter,
    /// Radical of `βκ`.
    pub kernel: Subgroup,
    pub projection: Projection,
    /// The nondegenerate bicharacter induced on `G / kernel`.
    pub beta_prime: Bicharacter,
    /// Annihilator of the kernel, a subgroup of the character group.
    pub k: Subgroup,
}

pub fn reduce(beta: &Bicharacter) -> Result<TriangularReduction> {
    let g = beta.group();
    let u = drinfeld_u(beta)?;
    let kappa = kappa_of(g, &u);
    let beta_kappa = beta.mul(&kappa);
    let kernel = beta_kappa.radical();
    let projection = kernel.quotient();
    let gp = projection.target().clone();
    // preimages of the quotient generators
    let pre: Vec<Element> = (0..gp.rank())
        .map(|t| {
            let target = gp.generator(t);
            g.elements()
                .into_iter()
                .find(|x| projection.apply(x) == target)
                .expect("projection is onto")
        })
        .collect();
    let beta_prime = Bicharacter::from_generators(gp, |s, t| beta_kappa.eval(&pre[s], &pre[t]))?;
    let k = kernel.perp();
    Ok(TriangularReduction {
        u,
        kappa,
        beta_kappa,
        kernel,
        projection,
        beta_prime,
        k,
    })
}

/// `γ(x, y) = Π_{i>j} β(e_i, e_j)^{x_i y_j}` for a commutation factor with trivial diagonal.
pub fn scheunert_cocycle(beta: &Bicharacter) -> Result<CocycleTable> {
    if !beta.is_commutation_factor() {
        return Err(Error::NotCommutationFactor);
    }
    let g = beta.group();
    let r = g.rank();
    if (0..r).any(|i| !beta.matrix()[i][i].is_zero()) {
        return Err(Error::Domain("commutation factor has nontrivial diagonal".into()));
    }
    let els = g.elements();
    let mut values = Vec::with_capacity(els.len() * els.len());
    for x in &els {
        for y in &els {
            let mut acc = Rational01::ZERO;
            for i in 0..r {
                for j in 0..i {
                    acc = acc + beta.matrix()[i][j].mul_int((x.0[i] * y.0[j]) as i64);
                }
            }
            values.push(acc);
        }
    }
    Ok(CocycleTable { group: g.clone(), values })
}

/// Serializable summary of the pipeline.
#[derive(Clone, Debug, Serialize)]
pub struct TriangularReport {
    /// `u(g)` for every element of `G`, in index order.
    pub u: Vec<Rational01>,
    #[serde(rename = "G_prime")]
    pub g_prime: FinAbGroup,
    #[serde(rename = "K")]
    pub k: Vec<Element>,
    pub gamma_prime: Vec<Vec<Rational01>>,
    pub cocycle_ok: bool,
    pub antisymmetrization_ok: bool,
}

pub fn emit_triangular(beta: &Bicharacter) -> Result<TriangularReport> {
    let red = reduce(beta)?;
    let g = beta.group();
    let gamma = scheunert_cocycle(&red.beta_prime)?;
    Ok(TriangularReport {
        u: g.elements().iter().map(|x| g.char_eval(&red.u, x)).collect(),
        g_prime: red.projection.target().clone(),
        k: red.k.elements().to_vec(),
        cocycle_ok: gamma.is_cocycle(),
        antisymmetrization_ok: gamma.antisymmetrizes_to(&red.beta_prime),
        gamma_prime: gamma.matrix(),
    })
}
