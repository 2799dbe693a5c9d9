use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hopf::LinearCombo;
use crate::scalars::{Cyclotomic, Rational01};

/// A monomial linear map `b_j ↦ exp(2πi·coef[j])·b_{perm[j]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialMap {
    pub perm: Vec<usize>,
    pub coef: Vec<Rational01>,
}

/// `c` as `exp(2πi·r)` when it is a root of unity in its own field.
pub fn as_root_of_unity(c: &Cyclotomic) -> Option<Rational01> {
    let n = c.conductor();
    let m = num_integer::lcm(n, 2);
    (0..m as i64).map(|k| Rational01::new(k, m)).find(|&r| Cyclotomic::embed(r, m).map_or(false, |z| &z == c))
}

impl MonomialMap {
    pub fn new(perm: Vec<usize>, coef: Vec<Rational01>) -> Result<Self> {
        let n = perm.len();
        let mut seen = vec![false; n];
        if coef.len() != n || perm.iter().any(|&p| p >= n || std::mem::replace(&mut seen[p], true)) {
            return Err(Error::NonMonomialAction("image indices do not form a permutation".into()));
        }
        Ok(MonomialMap { perm, coef })
    }

    pub fn permutation(perm: Vec<usize>) -> Result<Self> {
        let n = perm.len();
        MonomialMap::new(perm, vec![Rational01::ZERO; n])
    }

    pub fn identity(n: usize) -> Self {
        MonomialMap { perm: (0..n).collect(), coef: vec![Rational01::ZERO; n] }
    }

    pub fn dim(&self) -> usize {
        self.perm.len()
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &MonomialMap) -> MonomialMap {
        let perm = other.perm.iter().map(|&p| self.perm[p]).collect();
        let coef = other.coef.iter().zip(&other.perm).map(|(&c, &p)| c + self.coef[p]).collect();
        MonomialMap { perm, coef }
    }

    pub fn pow(&self, k: u64) -> MonomialMap {
        (0..k).fold(MonomialMap::identity(self.dim()), |acc, _| self.compose(&acc))
    }

    pub fn is_identity(&self) -> bool {
        *self == MonomialMap::identity(self.dim())
    }

    pub fn to_columns(&self) -> Vec<LinearCombo> {
        self.perm
            .iter()
            .zip(&self.coef)
            .map(|(&p, &c)| BTreeMap::from([(p, Cyclotomic::embed(c, c.den()).expect("own denominator"))]))
            .collect()
    }

    /// Reads a matrix given by columns; every column must hold one root of unity.
    pub fn from_columns(cols: &[LinearCombo]) -> Result<Self> {
        let mut perm = Vec::with_capacity(cols.len());
        let mut coef = Vec::with_capacity(cols.len());
        for (j, col) in cols.iter().enumerate() {
            let mut it = col.iter();
            match (it.next(), it.next()) {
                (Some((&p, c)), None) => {
                    let r = as_root_of_unity(c)
                        .ok_or_else(|| Error::NonMonomialAction(format!("column {j} scalar {c} is not a root of unity")))?;
                    perm.push(p);
                    coef.push(r);
                }
                _ => return Err(Error::NonMonomialAction(format!("column {j} has {} nonzero entries", col.len()))),
            }
        }
        MonomialMap::new(perm, coef)
    }
}
