use serde::Serialize;

use super::finite_group::FiniteGroup;
use super::matched::{MatchedPair, Sigma, Tau};
use crate::error::{Error, Result};
use crate::groups::{Bicharacter, Element, FinAbGroup};
use crate::hopf::Grading;
use crate::scalars::Rational01;

/// Degrees `z(l, γ) ∈ G` of the basis vectors `δ_l e_γ`, stored as `values[l][γ]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct ZMap {
    pub values: Vec<Vec<Element>>,
}

impl ZMap {
    pub fn new(mp: &MatchedPair, group: &FinAbGroup, values: Vec<Vec<Element>>) -> Result<Self> {
        let (nl, ng) = (mp.l.order(), mp.gamma.order());
        if values.len() != nl || values.iter().any(|r| r.len() != ng) {
            return Err(Error::DimensionMismatch(format!("z must be {nl}×{ng}")));
        }
        for e in values.iter().flatten() {
            group.check(e)?;
        }
        Ok(ZMap { values })
    }

    pub fn trivial(mp: &MatchedPair, group: &FinAbGroup) -> Self {
        ZMap { values: vec![vec![group.identity(); mp.gamma.order()]; mp.l.order()] }
    }

    /// `z(l, γ) = z̃(γ)(l)` from `ztilde[γ][l]`.
    pub fn from_tilde(ztilde: &[Vec<Element>]) -> Self {
        let ng = ztilde.len();
        let nl = ztilde.first().map_or(0, |r| r.len());
        ZMap { values: (0..nl).map(|l| (0..ng).map(|x| ztilde[x][l].clone()).collect()).collect() }
    }

    pub fn get(&self, l: usize, x: usize) -> &Element {
        &self.values[l][x]
    }

    pub fn grading(&self, mp: &MatchedPair, beta: &Bicharacter) -> Grading {
        let (nl, ng) = (mp.l.order(), mp.gamma.order());
        let degrees = (0..nl).flat_map(|l| (0..ng).map(move |x| (l, x))).map(|(l, x)| self.get(l, x).clone()).collect();
        Grading { degrees, beta: beta.clone() }
    }
}

/// `z(l,γη) = z(l,γ)z(l◁γ,η)` and `z(lt,γ) = z(l,t▷γ)z(t,γ)`: the structure maps are comodule maps.
pub fn validate_z(mp: &MatchedPair, group: &FinAbGroup, z: &ZMap) -> bool {
    let (lg, gg) = (&mp.l, &mp.gamma);
    let (nl, ng) = (lg.order(), gg.order());
    let first = (0..nl).all(|l| {
        (0..ng).all(|x| {
            (0..ng).all(|y| *z.get(l, gg.op(x, y)) == group.op(z.get(l, x), z.get(mp.la(l, x), y)))
        })
    });
    let second = (0..nl).all(|l| {
        (0..nl).all(|t| (0..ng).all(|x| *z.get(lg.op(l, t), x) == group.op(z.get(l, mp.ra(t, x)), z.get(t, x))))
    });
    first && second
}

/// The braided compatibility between `σ`, `τ`, `z` and `β`; requires `validate_z`.
///
/// `σ_{lt}(γ,η)τ_{γη}(l,t) = β(z(t,γ), z(l◁(t▷γ), (t◁γ)▷η)) τ_γ(l,t) τ_η(l◁(t▷γ), t◁γ)
///  σ_l(t▷γ, (t◁γ)▷η) σ_t(γ,η)`.
pub fn braided_compat(mp: &MatchedPair, sigma: &Sigma, tau: &Tau, z: &ZMap, beta: &Bicharacter) -> bool {
    if !validate_z(mp, beta.group(), z) {
        return false;
    }
    let (lg, gg) = (&mp.l, &mp.gamma);
    let (nl, ng) = (lg.order(), gg.order());
    (0..nl).all(|l| {
        (0..nl).all(|t| {
            (0..ng).all(|x| {
                (0..ng).all(|y| {
                    let tx = mp.ra(t, x);
                    let t_x = mp.la(t, x);
                    let l2 = mp.la(l, tx);
                    let y2 = mp.ra(t_x, y);
                    let lhs = sigma.get(lg.op(l, t), x, y) + tau.get(gg.op(x, y), l, t);
                    let rhs = beta.eval(z.get(t, x), z.get(l2, y2))
                        + tau.get(x, l, t)
                        + tau.get(y, l2, t_x)
                        + sigma.get(l, tx, y2)
                        + sigma.get(t, x, y);
                    lhs == rhs
                })
            })
        })
    })
}

/// Components of the criterion for `▷` trivial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TrivialRactReport {
    /// Each `z̃(γ)` is a homomorphism `L → G`.
    pub ztilde_homs: bool,
    /// `z̃(γη) = z̃(γ)·(γ⇀z̃(η))` with `(γ⇀φ)(l) = φ(l◁γ)`.
    pub ztilde_cocycle: bool,
    /// `σ_{lt}(γ,η) = β(z̃(γ)(t), z̃(η)(l◁γ)) σ_l(γ,η) σ_t(γ,η)`.
    pub sigma_compatible: bool,
    /// Each `τ_γ` is a normalized 2-cocycle on `L`.
    pub tau_values_cocycles: bool,
    /// `τ_{γη}(l,t) = τ_γ(l,t) τ_η(l◁γ, t◁γ)`.
    pub tau_cocycle: bool,
}

impl TrivialRactReport {
    /// The hypotheses hold and `τ̃` is a 1-cocycle, so the product is a color Hopf algebra.
    pub fn holds(&self) -> bool {
        self.ztilde_homs && self.ztilde_cocycle && self.sigma_compatible && self.tau_values_cocycles && self.tau_cocycle
    }

    /// The hypotheses on `z̃` and `σ` alone.
    pub fn hypotheses(&self) -> bool {
        self.ztilde_homs && self.ztilde_cocycle && self.sigma_compatible
    }
}

/// The color criterion specialized to `▷` trivial, with `z̃` given as `ztilde[γ][l]`.
pub fn trivial_ract_criterion(
    mp: &MatchedPair,
    sigma: &Sigma,
    tau: &Tau,
    ztilde: &[Vec<Element>],
    beta: &Bicharacter,
) -> Result<TrivialRactReport> {
    if !mp.is_ract_trivial() {
        return Err(Error::RactNotTrivial);
    }
    let (lg, gg) = (&mp.l, &mp.gamma);
    let (nl, ng) = (lg.order(), gg.order());
    let grp = beta.group();
    if ztilde.len() != ng || ztilde.iter().any(|r| r.len() != nl) {
        return Err(Error::DimensionMismatch(format!("z̃ must be {ng}×{nl}")));
    }
    let pairs_l = || (0..nl).flat_map(|l| (0..nl).map(move |t| (l, t)));
    let ztilde_homs = ztilde
        .iter()
        .all(|phi| pairs_l().all(|(l, t)| phi[lg.op(l, t)] == grp.op(&phi[l], &phi[t])));
    let ztilde_cocycle = (0..ng).all(|x| {
        (0..ng).all(|y| (0..nl).all(|l| ztilde[gg.op(x, y)][l] == grp.op(&ztilde[x][l], &ztilde[y][mp.la(l, x)])))
    });
    let sigma_compatible = (0..ng).all(|x| {
        (0..ng).all(|y| {
            pairs_l().all(|(l, t)| {
                sigma.get(lg.op(l, t), x, y)
                    == beta.eval(&ztilde[x][t], &ztilde[y][mp.la(l, x)]) + sigma.get(l, x, y) + sigma.get(t, x, y)
            })
        })
    });
    let e = lg.identity();
    let tau_values_cocycles = (0..ng).all(|x| {
        pairs_l().all(|(l, t)| tau.get(x, e, t).is_zero() && tau.get(x, l, e).is_zero())
            && pairs_l().all(|(a, b)| {
                (0..nl).all(|c| {
                    tau.get(x, a, b) + tau.get(x, lg.op(a, b), c) == tau.get(x, a, lg.op(b, c)) + tau.get(x, b, c)
                })
            })
    });
    let tau_cocycle = (0..ng).all(|x| {
        (0..ng).all(|y| {
            pairs_l().all(|(l, t)| tau.get(gg.op(x, y), l, t) == tau.get(x, l, t) + tau.get(y, mp.la(l, x), mp.la(t, x)))
        })
    });
    Ok(TrivialRactReport { ztilde_homs, ztilde_cocycle, sigma_compatible, tau_values_cocycles, tau_cocycle })
}

/// A finite associative unital ring: additive group plus multiplication table on its indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteRing {
    add: FinAbGroup,
    mul: Vec<Vec<usize>>,
    one: usize,
}

impl FiniteRing {
    pub fn new(add: FinAbGroup, mul: Vec<Vec<usize>>) -> Result<Self> {
        let n = add.order() as usize;
        if mul.len() != n || mul.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return Err(Error::DimensionMismatch(format!("multiplication table must be {n}×{n}")));
        }
        let els = add.elements();
        let plus = |a: usize, b: usize| add.index(&add.op(&els[a], &els[b]));
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if mul[mul[a][b]][c] != mul[a][mul[b][c]] {
                        return Err(Error::Invalid(format!("multiplication not associative at ({a},{b},{c})")));
                    }
                    if mul[a][plus(b, c)] != plus(mul[a][b], mul[a][c])
                        || mul[plus(a, b)][c] != plus(mul[a][c], mul[b][c])
                    {
                        return Err(Error::Invalid(format!("multiplication not distributive at ({a},{b},{c})")));
                    }
                }
            }
        }
        let one = (0..n)
            .find(|&e| (0..n).all(|a| mul[e][a] == a && mul[a][e] == a))
            .ok_or_else(|| Error::Invalid("ring has no unit".into()))?;
        Ok(FiniteRing { add, mul, one })
    }

    /// `Z/n`, indices equal to residues.
    pub fn zmod(n: u64) -> Self {
        let add = FinAbGroup::cyclic(n);
        let mul = (0..n).map(|a| (0..n).map(|b| ((a * b) % n) as usize).collect()).collect();
        FiniteRing::new(add, mul).expect("Z/n is a ring")
    }

    pub fn additive(&self) -> &FinAbGroup {
        &self.add
    }

    pub fn size(&self) -> usize {
        self.mul.len()
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        let els = self.add.elements();
        self.add.index(&self.add.op(&els[a], &els[b]))
    }

    pub fn is_unit(&self, a: usize) -> bool {
        (0..self.size()).any(|b| self.mul(a, b) == self.one && self.mul(b, a) == self.one)
    }

    pub fn element(&self, a: usize) -> Element {
        self.add.from_index(a)
    }
}

/// Inputs of the finite-ring family: `L = G = (R, +)`, `l◁γ = l·ν(γ)`, `▷` trivial.
#[derive(Clone, Debug)]
pub struct SommerInput {
    pub ring: FiniteRing,
    pub gamma: FiniteGroup,
    /// `ν: Γ → R×`, ring indices.
    pub nu: Vec<usize>,
    /// `ψ ∈ Z¹(Γ, L)`: `ψ(γη) = ψ(γ) + ν(γ)ψ(η)`.
    pub psi: Vec<usize>,
    /// `φ ∈ Z²(Γ, L)` as `phi[γ][η]`.
    pub phi: Vec<Vec<usize>>,
    /// Additive characters `L → μ`, one value per ring element.
    pub eta: Vec<Rational01>,
    pub theta: Vec<Rational01>,
}

#[derive(Clone, Debug)]
pub struct SommerData {
    pub mp: MatchedPair,
    pub sigma: Sigma,
    pub beta: Bicharacter,
    /// `z̃(γ)(l) = l·ψ(γ)` as `ztilde[γ][l]`.
    pub ztilde: Vec<Vec<Element>>,
    /// Whether `σ`, `β`, `z̃` satisfy the compatibility required by the trivial-`▷` criterion.
    pub compatible: bool,
}

/// Builds `σ_l(γ,v) = η(l·φ(γ,v))·θ(l²ν(γ)ψ(γ)ψ(v))`, `β(g,h) = θ(gh)²` and `z(l,γ) = lψ(γ)`.
pub fn sommer_family(input: &SommerInput) -> Result<SommerData> {
    let r = &input.ring;
    let gg = &input.gamma;
    let (n, ng) = (r.size(), gg.order());
    if input.nu.len() != ng
        || input.psi.len() != ng
        || input.phi.len() != ng
        || input.phi.iter().any(|row| row.len() != ng)
        || input.eta.len() != n
        || input.theta.len() != n
        || input.nu.iter().chain(&input.psi).chain(input.phi.iter().flatten()).any(|&x| x >= n)
    {
        return Err(Error::DimensionMismatch("ring family tables have the wrong shape".into()));
    }
    let (nu, psi, phi) = (&input.nu, &input.psi, &input.phi);
    let zero = r.additive().index(&r.additive().identity());
    if !nu.iter().all(|&u| r.is_unit(u)) || !(0..ng).all(|x| (0..ng).all(|y| nu[gg.op(x, y)] == r.mul(nu[x], nu[y]))) {
        return Err(Error::Invalid("ν is not a homomorphism into the units".into()));
    }
    if !(0..ng).all(|x| (0..ng).all(|y| psi[gg.op(x, y)] == r.add(psi[x], r.mul(nu[x], psi[y])))) {
        return Err(Error::Invalid("ψ is not a 1-cocycle".into()));
    }
    let phi_ok = (0..ng).all(|x| {
        phi[gg.identity()][x] == zero
            && phi[x][gg.identity()] == zero
            && (0..ng).all(|y| {
                (0..ng).all(|z| {
                    r.add(phi[x][y], phi[gg.op(x, y)][z]) == r.add(r.mul(nu[x], phi[y][z]), phi[x][gg.op(y, z)])
                })
            })
    });
    if !phi_ok {
        return Err(Error::Invalid("φ is not a normalized 2-cocycle".into()));
    }
    for (name, chi) in [("η", &input.eta), ("θ", &input.theta)] {
        if !(0..n).all(|a| (0..n).all(|b| chi[r.add(a, b)] == chi[a] + chi[b])) {
            return Err(Error::Invalid(format!("{name} is not an additive character")));
        }
    }
    let trace = (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| input.theta[r.mul(r.mul(a, b), c)] == input.theta[r.mul(r.mul(b, a), c)])));
    if !trace {
        return Err(Error::Invalid("θ(ltu) = θ(tlu) fails".into()));
    }

    let add = r.additive().clone();
    let beta_val = |g: usize, h: usize| input.theta[r.mul(g, h)].mul_int(2);
    let gens: Vec<usize> = (0..add.rank()).map(|i| add.index(&add.generator(i))).collect();
    let beta = Bicharacter::from_generators(add.clone(), |i, j| beta_val(gens[i], gens[j]))?;
    let els = add.elements();
    if !(0..n).all(|g| (0..n).all(|h| beta.eval(&els[g], &els[h]) == beta_val(g, h))) {
        return Err(Error::Domain("θ(gh)² is not a bicharacter".into()));
    }

    let lgroup = FiniteGroup::from_abelian(&add);
    let auts: Vec<Vec<usize>> = (0..ng).map(|x| (0..n).map(|l| r.mul(l, nu[x])).collect()).collect();
    let mp = MatchedPair::with_right_action(lgroup, gg.clone(), &auts)?;
    let values = (0..n)
        .map(|l| {
            let l2 = r.mul(l, l);
            (0..ng)
                .map(|x| {
                    (0..ng)
                        .map(|y| {
                            let quad = r.mul(r.mul(r.mul(l2, nu[x]), psi[x]), psi[y]);
                            input.eta[r.mul(l, phi[x][y])] + input.theta[quad]
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    let sigma = Sigma::new(&mp, values)?;
    let ztilde: Vec<Vec<Element>> = (0..ng).map(|x| (0..n).map(|l| els[r.mul(l, psi[x])].clone()).collect()).collect();
    let report = trivial_ract_criterion(&mp, &sigma, &Tau::trivial(&mp), &ztilde, &beta)?;
    Ok(SommerData { compatible: report.hypotheses(), mp, sigma, beta, ztilde })
}

/// `τ_γ = (γ·c)/c` for a normalized 2-cocycle `c` on `L`, with `(γ·c)(l,t) = c(l◁γ, t◁γ)`;
/// a 1-coboundary of `Γ` with values in `Z²(L, k×)`.
pub fn coboundary_tau(mp: &MatchedPair, c: &[Vec<Rational01>]) -> Result<Tau> {
    let (nl, ng) = (mp.l.order(), mp.gamma.order());
    if c.len() != nl || c.iter().any(|r| r.len() != nl) {
        return Err(Error::DimensionMismatch(format!("2-cochain must be {nl}×{nl}")));
    }
    let values =
        (0..ng).map(|x| (0..nl).map(|l| (0..nl).map(|t| c[mp.la(l, x)][mp.la(t, x)] - c[l][t]).collect()).collect()).collect();
    Tau::new(mp, values)
}

/// `c(l,t) = b(l)b(t)/b(lt)` for a normalized cochain `b: L → μ`.
pub fn coboundary_2cocycle(l: &FiniteGroup, b: &[Rational01]) -> Vec<Vec<Rational01>> {
    let n = l.order();
    (0..n).map(|x| (0..n).map(|y| b[x] + b[y] - b[l.op(x, y)]).collect()).collect()
}
