use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::linear::{add_entry, axpy, LinearCombo, Tensor2};
use crate::error::{Error, Result};
use crate::groups::{Bicharacter, Element, FinAbGroup};
use crate::scalars::{Cyclotomic, Rational01};

/// Degrees of the basis vectors together with the braiding bicharacter.
#[derive(Clone, Debug, PartialEq)]
pub struct Grading {
    pub degrees: Vec<Element>,
    pub beta: Bicharacter,
}

impl Grading {
    pub fn group(&self) -> &FinAbGroup {
        self.beta.group()
    }
}

/// A finite-dimensional algebra/coalgebra given by structure constants in a fixed basis.
///
/// All coefficients share one cyclotomic conductor, which also covers the braiding values.
#[derive(Clone, Debug)]
pub struct StructBialgebra {
    pub dim: usize,
    pub conductor: u64,
    /// `mult[i·dim + j] = b_i b_j`.
    pub mult: Vec<LinearCombo>,
    /// `comult[i] = Δ(b_i)`.
    pub comult: Vec<Tensor2>,
    pub unit: LinearCombo,
    pub counit: Vec<Cyclotomic>,
    /// `antipode[i] = S(b_i)`, when supplied or solved.
    pub antipode: Option<Vec<LinearCombo>>,
    pub grading: Option<Grading>,
}

impl StructBialgebra {
    /// Validates shapes and brings every coefficient to a common conductor.
    pub fn new(
        dim: usize,
        mult: Vec<LinearCombo>,
        comult: Vec<Tensor2>,
        unit: LinearCombo,
        counit: Vec<Cyclotomic>,
        grading: Option<Grading>,
    ) -> Result<Self> {
        if mult.len() != dim * dim || comult.len() != dim || counit.len() != dim {
            return Err(Error::DimensionMismatch(format!("structure tables do not match dim {dim}")));
        }
        let in_range = |k: usize| k < dim;
        if !mult.iter().all(|m| m.keys().all(|&k| in_range(k)))
            || !comult.iter().all(|t| t.keys().all(|&(a, b)| in_range(a) && in_range(b)))
            || !unit.keys().all(|&k| in_range(k))
        {
            return Err(Error::Invalid("basis index out of range".into()));
        }
        if let Some(g) = &grading {
            if g.degrees.len() != dim {
                return Err(Error::DimensionMismatch("one degree per basis vector required".into()));
            }
            for d in &g.degrees {
                g.group().check(d)?;
            }
        }
        let mut n = grading.as_ref().map_or(1, |g| g.beta.conductor());
        let mut bump = |c: &Cyclotomic| n = num_integer::lcm(n, c.conductor());
        mult.iter().flat_map(|m| m.values()).for_each(&mut bump);
        comult.iter().flat_map(|m| m.values()).for_each(&mut bump);
        unit.values().for_each(&mut bump);
        counit.iter().for_each(&mut bump);
        let lift1 = |m: LinearCombo| -> LinearCombo {
            m.into_iter().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (k, c.lift(n))).collect()
        };
        let lift2 = |m: Tensor2| -> Tensor2 {
            m.into_iter().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (k, c.lift(n))).collect()
        };
        Ok(StructBialgebra {
            dim,
            conductor: n,
            mult: mult.into_iter().map(lift1).collect(),
            comult: comult.into_iter().map(lift2).collect(),
            unit: lift1(unit),
            counit: counit.into_iter().map(|c| c.lift(n)).collect(),
            antipode: None,
            grading,
        })
    }

    pub fn with_antipode(mut self, s: Vec<LinearCombo>) -> Result<Self> {
        if s.len() != self.dim {
            return Err(Error::DimensionMismatch("antipode needs one image per basis vector".into()));
        }
        let n = self.conductor;
        self.antipode = Some(s.into_iter().map(|m| m.into_iter().map(|(k, c)| (k, c.lift(n))).collect()).collect());
        Ok(self)
    }

    pub fn zero(&self) -> Cyclotomic {
        Cyclotomic::zero(self.conductor)
    }

    pub fn one(&self) -> Cyclotomic {
        Cyclotomic::one(self.conductor)
    }

    /// The root of unity `exp(2πi·r)` in this algebra's coefficient field.
    pub fn root(&self, r: Rational01) -> Cyclotomic {
        Cyclotomic::embed(r, self.conductor).expect("conductor covers all braiding values")
    }

    pub fn basis(&self, i: usize) -> LinearCombo {
        BTreeMap::from([(i, self.one())])
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &LinearCombo {
        &self.mult[i * self.dim + j]
    }

    pub fn mul(&self, a: &LinearCombo, b: &LinearCombo) -> LinearCombo {
        let mut out = BTreeMap::new();
        for (&i, x) in a {
            for (&j, y) in b {
                axpy(&mut out, &(x * y), self.mul_basis(i, j));
            }
        }
        out
    }

    pub fn comult_of(&self, a: &LinearCombo) -> Tensor2 {
        let mut out = BTreeMap::new();
        for (&i, x) in a {
            axpy(&mut out, x, &self.comult[i]);
        }
        out
    }

    pub fn counit_of(&self, a: &LinearCombo) -> Cyclotomic {
        let mut acc = self.zero();
        for (&i, x) in a {
            acc = &acc + &(x * &self.counit[i]);
        }
        acc
    }

    /// `β(|b_i|, |b_j|)`, or 1 without a grading.
    pub fn braid_value(&self, i: usize, j: usize) -> Rational01 {
        match &self.grading {
            Some(g) => g.beta.eval(&g.degrees[i], &g.degrees[j]),
            None => Rational01::ZERO,
        }
    }

    /// Product in `H ⊗ H`; `twisted` inserts `β(|x₂|, |y₁|)` for the color tensor product.
    pub fn tensor_mul(&self, x: &Tensor2, y: &Tensor2, twisted: bool) -> Tensor2 {
        let mut out = BTreeMap::new();
        for (&(a, b), cx) in x {
            for (&(c, d), cy) in y {
                let mut coef = cx * cy;
                if twisted {
                    let r = self.braid_value(b, c);
                    if !r.is_zero() {
                        coef = &coef * &self.root(r);
                    }
                }
                let left = self.mul_basis(a, c);
                let right = self.mul_basis(b, d);
                for (&k, u) in left {
                    let cu = &coef * u;
                    for (&l, v) in right {
                        add_entry(&mut out, (k, l), &(&cu * v));
                    }
                }
            }
        }
        out
    }

    /// Applies a linear map given by basis images.
    pub fn apply(&self, f: &[LinearCombo], a: &LinearCombo) -> LinearCombo {
        let mut out = BTreeMap::new();
        for (&i, x) in a {
            axpy(&mut out, x, &f[i]);
        }
        out
    }

    pub fn to_json(&self) -> StructJson {
        let mut mult = Vec::new();
        for i in 0..self.dim {
            for j in 0..self.dim {
                for (&k, c) in self.mul_basis(i, j) {
                    mult.push((i, j, k, c.clone()));
                }
            }
        }
        let comult = self
            .comult
            .iter()
            .enumerate()
            .flat_map(|(i, t)| t.iter().map(move |(&(a, b), c)| (i, a, b, c.clone())))
            .collect();
        StructJson {
            dim: self.dim,
            mult,
            comult,
            unit: self.unit.iter().map(|(&k, c)| (k, c.clone())).collect(),
            counit: self.counit.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (k, c.clone())).collect(),
            antipode: self.antipode.as_ref().map(|s| {
                s.iter()
                    .enumerate()
                    .flat_map(|(i, m)| m.iter().map(move |(&k, c)| (i, k, c.clone())))
                    .collect()
            }),
            grading: self.grading.as_ref().map(|g| GradingJson {
                group: g.group().clone(),
                beta: g.beta.matrix().to_vec(),
                degrees: g.degrees.clone(),
            }),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GradingJson {
    pub group: FinAbGroup,
    pub beta: Vec<Vec<Rational01>>,
    pub degrees: Vec<Element>,
}

/// Wire format: sparse structure constants, each entry `[indices…, "coefficient"]`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct StructJson {
    pub dim: usize,
    /// `[i, j, k, c]`: `b_i b_j` has coefficient `c` on `b_k`.
    pub mult: Vec<(usize, usize, usize, Cyclotomic)>,
    /// `[i, a, b, c]`: `Δ(b_i)` has coefficient `c` on `b_a ⊗ b_b`.
    pub comult: Vec<(usize, usize, usize, Cyclotomic)>,
    pub unit: Vec<(usize, Cyclotomic)>,
    /// Nonzero counit values `[i, c]`.
    pub counit: Vec<(usize, Cyclotomic)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub antipode: Option<Vec<(usize, usize, Cyclotomic)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grading: Option<GradingJson>,
}

impl StructJson {
    pub fn build(&self) -> Result<StructBialgebra> {
        let n = self.dim;
        let oob = || Error::Invalid("basis index out of range".into());
        let mut mult = vec![BTreeMap::new(); n * n];
        for (i, j, k, c) in &self.mult {
            if *i >= n || *j >= n {
                return Err(oob());
            }
            add_entry(&mut mult[i * n + j], *k, c);
        }
        let mut comult = vec![BTreeMap::new(); n];
        for (i, a, b, c) in &self.comult {
            comult.get_mut(*i).ok_or_else(oob)?;
            add_entry(&mut comult[*i], (*a, *b), c);
        }
        let mut unit = BTreeMap::new();
        for (k, c) in &self.unit {
            add_entry(&mut unit, *k, c);
        }
        let mut counit = vec![Cyclotomic::zero(1); n];
        for (k, c) in &self.counit {
            *counit.get_mut(*k).ok_or_else(oob)? = c.clone();
        }
        let grading = match &self.grading {
            Some(g) => {
                let group = FinAbGroup::new(g.group.orders().to_vec())?;
                Some(Grading { degrees: g.degrees.clone(), beta: Bicharacter::new(group, g.beta.clone())? })
            }
            None => None,
        };
        let h = StructBialgebra::new(n, mult, comult, unit, counit, grading)?;
        match &self.antipode {
            Some(entries) => {
                let mut s = vec![BTreeMap::new(); n];
                for (i, k, c) in entries {
                    if *i >= n || *k >= n {
                        return Err(oob());
                    }
                    add_entry(&mut s[*i], *k, c);
                }
                h.with_antipode(s)
            }
            None => Ok(h),
        }
    }
}

/// The group algebra `kΓ` of a finite abelian group, basis in group-index order.
pub fn group_algebra(group: &FinAbGroup, grading: Option<Grading>) -> Result<StructBialgebra> {
    let els = group.elements();
    let n = els.len();
    let one = Cyclotomic::one(1);
    let mut mult = Vec::with_capacity(n * n);
    for a in &els {
        for b in &els {
            mult.push(BTreeMap::from([(group.index(&group.op(a, b)), one.clone())]));
        }
    }
    let comult = (0..n).map(|i| BTreeMap::from([((i, i), one.clone())])).collect();
    let unit = BTreeMap::from([(0, one.clone())]);
    let counit = vec![one; n];
    StructBialgebra::new(n, mult, comult, unit, counit, grading)
}
