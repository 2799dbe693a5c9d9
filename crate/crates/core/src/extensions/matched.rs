use std::collections::BTreeMap;

use serde::Serialize;

use super::finite_group::FiniteGroup;
use crate::error::{Error, Result};
use crate::hopf::{Grading, LinearCombo, StructBialgebra, Tensor2};
use crate::scalars::{Cyclotomic, Rational01};

/// Groups `L`, `Γ` with a right action `◁: L × Γ → L` and a left action `▷: L × Γ → Γ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchedPair {
    pub l: FiniteGroup,
    pub gamma: FiniteGroup,
    /// `lact[l][γ] = l ◁ γ`.
    pub lact: Vec<Vec<usize>>,
    /// `ract[l][γ] = l ▷ γ`.
    pub ract: Vec<Vec<usize>>,
}

/// One failed identity with the offending indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub identity: String,
    pub at: Vec<usize>,
}

impl MatchedPair {
    /// Checks table shapes only; see [`MatchedPair::violations`] for the identities.
    pub fn new(l: FiniteGroup, gamma: FiniteGroup, lact: Vec<Vec<usize>>, ract: Vec<Vec<usize>>) -> Result<Self> {
        let (nl, ng) = (l.order(), gamma.order());
        let shaped = |t: &Vec<Vec<usize>>, bound: usize| {
            t.len() == nl && t.iter().all(|r| r.len() == ng && r.iter().all(|&x| x < bound))
        };
        if !shaped(&lact, nl) || !shaped(&ract, ng) {
            return Err(Error::DimensionMismatch(format!("action tables must be {nl}×{ng} with valid entries")));
        }
        Ok(MatchedPair { l, gamma, lact, ract })
    }

    /// Both actions trivial.
    pub fn trivial(l: FiniteGroup, gamma: FiniteGroup) -> Self {
        let (nl, ng) = (l.order(), gamma.order());
        let lact = (0..nl).map(|x| vec![x; ng]).collect();
        let ract = (0..nl).map(|_| (0..ng).collect()).collect();
        MatchedPair { l, gamma, lact, ract }
    }

    /// `▷` trivial and `◁` given by a homomorphism `Γ → Aut L` (as permutations, `l ◁ γ = auts[γ][l]`).
    pub fn with_right_action(l: FiniteGroup, gamma: FiniteGroup, auts: &[Vec<usize>]) -> Result<Self> {
        let (nl, ng) = (l.order(), gamma.order());
        if auts.len() != ng {
            return Err(Error::DimensionMismatch("one permutation of L per element of Γ".into()));
        }
        let lact = (0..nl).map(|x| (0..ng).map(|g| auts[g][x]).collect()).collect();
        let ract = (0..nl).map(|_| (0..ng).collect()).collect();
        MatchedPair::new(l, gamma, lact, ract)
    }

    pub fn la(&self, l: usize, g: usize) -> usize {
        self.lact[l][g]
    }

    pub fn ra(&self, l: usize, g: usize) -> usize {
        self.ract[l][g]
    }

    pub fn is_ract_trivial(&self) -> bool {
        self.ract.iter().all(|r| r.iter().enumerate().all(|(g, &x)| g == x))
    }

    /// Every failed action law or matched-pair identity, first offending tuple per law.
    pub fn violations(&self) -> Vec<Violation> {
        let (lg, gg) = (&self.l, &self.gamma);
        let (nl, ng) = (lg.order(), gg.order());
        let (e_l, e_g) = (lg.identity(), gg.identity());
        let mut out = Vec::new();
        let mut law = |name: &str, found: Option<Vec<usize>>| {
            if let Some(at) = found {
                out.push(Violation { identity: name.into(), at });
            }
        };
        law("lact_unit", (0..nl).find(|&l| self.la(l, e_g) != l).map(|l| vec![l]));
        law(
            "lact_compose",
            iter3(nl, ng, ng).find(|v| self.la(self.la(v[0], v[1]), v[2]) != self.la(v[0], gg.op(v[1], v[2]))),
        );
        law("ract_unit", (0..ng).find(|&g| self.ra(e_l, g) != g).map(|g| vec![g]));
        law(
            "ract_compose",
            iter3(nl, nl, ng).find(|v| self.ra(v[0], self.ra(v[1], v[2])) != self.ra(lg.op(v[0], v[1]), v[2])),
        );
        // l▷γη = (l▷γ)((l◁γ)▷η)
        law(
            "ract_on_product",
            iter3(nl, ng, ng).find(|v| {
                let (l, x, y) = (v[0], v[1], v[2]);
                self.ra(l, gg.op(x, y)) != gg.op(self.ra(l, x), self.ra(self.la(l, x), y))
            }),
        );
        // lt◁γ = (l◁(t▷γ))(t◁γ)
        law(
            "lact_on_product",
            iter3(nl, nl, ng).find(|v| {
                let (l, t, x) = (v[0], v[1], v[2]);
                self.la(lg.op(l, t), x) != lg.op(self.la(l, self.ra(t, x)), self.la(t, x))
            }),
        );
        out
    }

    pub fn validate(&self) -> bool {
        self.violations().is_empty()
    }
}

fn iter3(a: usize, b: usize, c: usize) -> impl Iterator<Item = Vec<usize>> + Clone {
    (0..a).flat_map(move |x| (0..b).flat_map(move |y| (0..c).map(move |z| vec![x, y, z])))
}

/// `σ_l(γ, η)` stored as `values[l][γ][η]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Sigma {
    pub values: Vec<Vec<Vec<Rational01>>>,
}

/// `τ_γ(l, t)` stored as `values[γ][l][t]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Tau {
    pub values: Vec<Vec<Vec<Rational01>>>,
}

impl Sigma {
    pub fn trivial(mp: &MatchedPair) -> Self {
        let (nl, ng) = (mp.l.order(), mp.gamma.order());
        Sigma { values: vec![vec![vec![Rational01::ZERO; ng]; ng]; nl] }
    }

    pub fn new(mp: &MatchedPair, values: Vec<Vec<Vec<Rational01>>>) -> Result<Self> {
        let (nl, ng) = (mp.l.order(), mp.gamma.order());
        if values.len() != nl || values.iter().any(|a| a.len() != ng || a.iter().any(|b| b.len() != ng)) {
            return Err(Error::DimensionMismatch(format!("sigma must be {nl}×{ng}×{ng}")));
        }
        Ok(Sigma { values })
    }

    pub fn get(&self, l: usize, x: usize, y: usize) -> Rational01 {
        self.values[l][x][y]
    }

    /// `σ_1 ≡ 1` and `σ_l(1,·) = σ_l(·,1) = 1`.
    pub fn is_normalized(&self, mp: &MatchedPair) -> bool {
        let (e_l, e_g) = (mp.l.identity(), mp.gamma.identity());
        let ng = mp.gamma.order();
        self.values[e_l].iter().flatten().all(|r| r.is_zero())
            && self.values.iter().all(|s| (0..ng).all(|x| s[e_g][x].is_zero() && s[x][e_g].is_zero()))
    }

    /// `σ_l(x,y)σ_l(xy,z) = σ_{l◁x}(y,z)σ_l(x,yz)`, the associativity of the crossed product.
    pub fn is_cocycle(&self, mp: &MatchedPair) -> bool {
        let g = &mp.gamma;
        let ng = g.order();
        iter3(ng, ng, ng).all(|v| {
            let (x, y, z) = (v[0], v[1], v[2]);
            (0..mp.l.order()).all(|l| {
                self.get(l, x, y) + self.get(l, g.op(x, y), z) == self.get(mp.la(l, x), y, z) + self.get(l, x, g.op(y, z))
            })
        })
    }
}

impl Tau {
    pub fn trivial(mp: &MatchedPair) -> Self {
        let (nl, ng) = (mp.l.order(), mp.gamma.order());
        Tau { values: vec![vec![vec![Rational01::ZERO; nl]; nl]; ng] }
    }

    pub fn new(mp: &MatchedPair, values: Vec<Vec<Vec<Rational01>>>) -> Result<Self> {
        let (nl, ng) = (mp.l.order(), mp.gamma.order());
        if values.len() != ng || values.iter().any(|a| a.len() != nl || a.iter().any(|b| b.len() != nl)) {
            return Err(Error::DimensionMismatch(format!("tau must be {ng}×{nl}×{nl}")));
        }
        Ok(Tau { values })
    }

    pub fn get(&self, x: usize, l: usize, t: usize) -> Rational01 {
        self.values[x][l][t]
    }

    /// `τ_1 ≡ 1` and `τ_γ(1,·) = τ_γ(·,1) = 1`.
    pub fn is_normalized(&self, mp: &MatchedPair) -> bool {
        let (e_l, e_g) = (mp.l.identity(), mp.gamma.identity());
        let nl = mp.l.order();
        self.values[e_g].iter().flatten().all(|r| r.is_zero())
            && self.values.iter().all(|s| (0..nl).all(|x| s[e_l][x].is_zero() && s[x][e_l].is_zero()))
    }

    /// `τ_{t▷γ}(a,b)τ_γ(ab,t) = τ_γ(a,bt)τ_γ(b,t)`, the coassociativity of the crossed coproduct.
    pub fn is_cocycle(&self, mp: &MatchedPair) -> bool {
        let l = &mp.l;
        let nl = l.order();
        iter3(nl, nl, nl).all(|v| {
            let (a, b, t) = (v[0], v[1], v[2]);
            (0..mp.gamma.order()).all(|x| {
                self.get(mp.ra(t, x), a, b) + self.get(x, l.op(a, b), t) == self.get(x, a, l.op(b, t)) + self.get(x, b, t)
            })
        })
    }
}

/// Exhaustive check of the Kac compatibility between `σ` and `τ`:
/// `σ_{st}(x,y)τ_{xy}(s,t) = σ_s(t▷x,(t◁x)▷y) σ_t(x,y) τ_x(s,t) τ_y(s◁(t▷x), t◁x)`.
pub fn kac_condition(mp: &MatchedPair, sigma: &Sigma, tau: &Tau) -> bool {
    kac_violation(mp, sigma, tau).is_none()
}

/// First `(s, t, x, y)` where the Kac condition fails.
pub fn kac_violation(mp: &MatchedPair, sigma: &Sigma, tau: &Tau) -> Option<Vec<usize>> {
    let (lg, gg) = (&mp.l, &mp.gamma);
    let (nl, ng) = (lg.order(), gg.order());
    (0..nl).flat_map(|s| (0..nl).map(move |t| (s, t))).find_map(|(s, t)| {
        for x in 0..ng {
            for y in 0..ng {
                let lhs = sigma.get(lg.op(s, t), x, y) + tau.get(gg.op(x, y), s, t);
                let tx = mp.ra(t, x);
                let t_x = mp.la(t, x);
                let rhs = sigma.get(s, tx, mp.ra(t_x, y))
                    + sigma.get(t, x, y)
                    + tau.get(x, s, t)
                    + tau.get(y, mp.la(s, tx), t_x);
                if lhs != rhs {
                    return Some(vec![s, t, x, y]);
                }
            }
        }
        None
    })
}

/// Basis position of `δ_l e_γ`.
pub fn basis_index(mp: &MatchedPair, l: usize, g: usize) -> usize {
    l * mp.gamma.order() + g
}

pub(crate) fn root(r: Rational01) -> Cyclotomic {
    Cyclotomic::embed(r, r.den()).expect("denominator divides itself")
}

/// The crossed product algebra with crossed coproduct on `k^L ⊗ kΓ`.
#[derive(Clone, Debug)]
pub struct Bicrossed {
    pub algebra: StructBialgebra,
    /// Whether the Kac condition holds, i.e. whether this is expected to be a Hopf algebra.
    pub kac: bool,
}

/// Builds the structure tables in the basis `δ_l e_γ` (position `l·|Γ| + γ`):
/// `(δ_l e_γ)(δ_t e_η) = [l◁γ = t] σ_l(γ,η) δ_l e_{γη}` and
/// `Δ(δ_l e_γ) = Σ_u τ_γ(u, u⁻¹l) δ_u e_{(u⁻¹l)▷γ} ⊗ δ_{u⁻¹l} e_γ`.
pub fn build_bicrossed(mp: &MatchedPair, sigma: &Sigma, tau: &Tau, grading: Option<Grading>) -> Result<Bicrossed> {
    let (lg, gg) = (&mp.l, &mp.gamma);
    let (nl, ng) = (lg.order(), gg.order());
    let dim = nl * ng;
    let idx = |l: usize, g: usize| l * ng + g;
    let mut mult = vec![LinearCombo::new(); dim * dim];
    for l in 0..nl {
        for x in 0..ng {
            let t = mp.la(l, x);
            for y in 0..ng {
                let k = idx(l, gg.op(x, y));
                mult[idx(l, x) * dim + idx(t, y)] = BTreeMap::from([(k, root(sigma.get(l, x, y)))]);
            }
        }
    }
    let mut comult = vec![Tensor2::new(); dim];
    for l in 0..nl {
        for x in 0..ng {
            let slot = &mut comult[idx(l, x)];
            for u in 0..nl {
                let v = lg.op(lg.inv(u), l);
                slot.insert((idx(u, mp.ra(v, x)), idx(v, x)), root(tau.get(x, u, v)));
            }
        }
    }
    let one = Cyclotomic::one(1);
    let unit = (0..nl).map(|l| (idx(l, gg.identity()), one.clone())).collect();
    let counit = (0..dim)
        .map(|k| if k / ng == lg.identity() { one.clone() } else { Cyclotomic::zero(1) })
        .collect();
    let algebra = StructBialgebra::new(dim, mult, comult, unit, counit, grading)?;
    Ok(Bicrossed { algebra, kac: kac_condition(mp, sigma, tau) })
}
