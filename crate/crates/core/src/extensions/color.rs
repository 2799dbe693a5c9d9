use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use super::autext::ExtAutomorphism;
use super::matched::MatchedPair;
use super::monomial::MonomialMap;
use crate::error::{Error, Result};
use crate::groups::{Bicharacter, Element, FinAbGroup};
use crate::hopf::linear::{add_entry, invert_columns, Echelon};
use crate::hopf::{is_bialgebra_automorphism, Grading, LinearCombo, StructBialgebra, Tensor2};
use crate::scalars::{Cyclotomic, Rational01};

/// An action of the character group `A = Ĝ` on a basis by monomial maps, given on the dual
/// generators. The grading it encodes puts `x` in degree `g` iff `a·x = a(g)x` for all `a`.
#[derive(Clone, Debug)]
pub struct ColorAction {
    beta: Bicharacter,
    generators: Vec<MonomialMap>,
    images: Vec<MonomialMap>,
    conductor: u64,
}

impl ColorAction {
    /// Checks that the generator images commute and have the orders of the dual generators.
    pub fn new(beta: Bicharacter, generators: Vec<MonomialMap>) -> Result<Self> {
        let group = beta.group().clone();
        if generators.len() != group.rank() {
            return Err(Error::DimensionMismatch(format!("{} generator images expected", group.rank())));
        }
        let dim = generators.first().map_or(0, |m| m.dim());
        if generators.iter().any(|m| m.dim() != dim) {
            return Err(Error::DimensionMismatch("generator images differ in dimension".into()));
        }
        for (i, a) in generators.iter().enumerate() {
            for b in &generators[i + 1..] {
                if a.compose(b) != b.compose(a) {
                    return Err(Error::NonCommutingAction);
                }
            }
            if !a.pow(group.orders()[i]).is_identity() {
                return Err(Error::Invalid(format!(
                    "image of dual generator {i} does not have order dividing {}",
                    group.orders()[i]
                )));
            }
        }
        let images = group
            .elements()
            .iter()
            .map(|a| {
                a.0.iter()
                    .zip(&generators)
                    .fold(MonomialMap::identity(dim), |acc, (&k, m)| acc.compose(&m.pow(k)))
            })
            .collect::<Vec<_>>();
        let conductor = images
            .iter()
            .flat_map(|m| m.coef.iter().map(|c| c.den()))
            .fold(group.exponent().max(1), num_integer::lcm);
        Ok(ColorAction { beta, generators, images, conductor })
    }

    pub fn group(&self) -> &FinAbGroup {
        self.beta.group()
    }

    pub fn beta(&self) -> &Bicharacter {
        &self.beta
    }

    pub fn dim(&self) -> usize {
        self.generators.first().map_or(0, |m| m.dim())
    }

    pub fn generators(&self) -> &[MonomialMap] {
        &self.generators
    }

    /// The map by which the character with residues `a` acts.
    pub fn image(&self, a: &Element) -> &MonomialMap {
        &self.images[self.group().index(a)]
    }

    /// Whether every generator acts by a bialgebra automorphism of `h`.
    pub fn acts_by_automorphisms(&self, h: &StructBialgebra) -> bool {
        self.generators.iter().all(|m| is_bialgebra_automorphism(h, &m.to_columns()))
    }

    /// `P_g(b_j) = |G|⁻¹ Σ_a a(g)⁻¹ ρ(a) b_j`.
    pub fn project(&self, g: &Element, j: usize) -> LinearCombo {
        let grp = self.group();
        let mut out = BTreeMap::new();
        for (a, m) in grp.elements().iter().zip(&self.images) {
            let r = m.coef[j] - grp.char_eval(a, g);
            add_entry(&mut out, m.perm[j], &Cyclotomic::embed(r, self.conductor).expect("conductor covers values"));
        }
        let scale = BigRational::new(BigInt::from(1), BigInt::from(grp.order()));
        out.into_iter().map(|(k, c)| (k, c.scale(&scale))).collect()
    }

    /// Degrees of the homogeneous components of `b_j`.
    pub fn degrees_of(&self, j: usize) -> Vec<Element> {
        self.group().elements().into_iter().filter(|g| !self.project(g, j).is_empty()).collect()
    }

    /// `sup H`: every degree with a nonzero component, in group index order.
    pub fn support(&self) -> Vec<Element> {
        self.group()
            .elements()
            .into_iter()
            .filter(|g| (0..self.dim()).any(|j| !self.project(g, j).is_empty()))
            .collect()
    }

    /// Rewrites `h` in a homogeneous basis: for each degree in index order, a maximal
    /// independent subset of the projected basis vectors.
    pub fn homogeneous_form(&self, h: &StructBialgebra) -> Result<(StructBialgebra, Vec<LinearCombo>)> {
        if h.dim != self.dim() {
            return Err(Error::DimensionMismatch("action and algebra dimensions differ".into()));
        }
        let n = num_integer::lcm(h.conductor, self.conductor);
        let mut cols = Vec::new();
        let mut degrees = Vec::new();
        for g in self.group().elements() {
            let mut ech = Echelon::new(n);
            for j in 0..h.dim {
                let v = self.project(&g, j);
                if !v.is_empty() && ech.push(&v).is_none() {
                    cols.push(v);
                    degrees.push(g.clone());
                }
            }
        }
        if cols.len() != h.dim {
            return Err(Error::Invalid("homogeneous components do not span the algebra".into()));
        }
        let inv = invert_columns(&cols, n)?;
        let coords = |v: &LinearCombo| -> LinearCombo {
            let mut out = BTreeMap::new();
            for (&k, c) in v {
                for (&i, d) in &inv[k] {
                    add_entry(&mut out, i, &(c * d));
                }
            }
            out
        };
        let d = h.dim;
        let mut mult = Vec::with_capacity(d * d);
        for i in 0..d {
            for j in 0..d {
                mult.push(coords(&h.mul(&cols[i], &cols[j])));
            }
        }
        let comult = cols
            .iter()
            .map(|c| {
                let t = h.comult_of(c);
                let mut out: Tensor2 = BTreeMap::new();
                for (&(a, b), x) in &t {
                    for (&p, u) in &inv[a] {
                        let xu = x * u;
                        for (&q, v) in &inv[b] {
                            add_entry(&mut out, (p, q), &(&xu * v));
                        }
                    }
                }
                out
            })
            .collect();
        let unit = coords(&h.unit);
        let counit = cols.iter().map(|c| h.counit_of(c)).collect();
        let grading = Grading { degrees, beta: self.beta.clone() };
        let out = StructBialgebra::new(d, mult, comult, unit, counit, Some(grading))?;
        Ok((out, cols))
    }
}

/// `β(g, h) = 1` for all `g, h` in the support.
pub fn is_color(support: &[Element], beta: &Bicharacter) -> bool {
    support.iter().all(|g| support.iter().all(|h| beta.eval(g, h).is_zero()))
}

/// Outcome of the three color matched-pair conditions, with the first failing
/// `(u, η, l, γ)` for each.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ColorMatchedPairReport {
    pub condition_i: bool,
    pub condition_ii: bool,
    pub condition_iii: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<(String, Vec<usize>)>,
}

impl ColorMatchedPairReport {
    pub fn holds(&self) -> bool {
        self.condition_i && self.condition_ii && self.condition_iii
    }
}

/// Evaluates the color matched-pair conditions for `ρ: A → Aut_ext H`, reading each `ρ(a)`
/// as `(a₁, a₂, ã)` and using `χ_g = β(·, g)`.
///
/// For all `u, l ∈ L` and `η, γ ∈ Γ`:
/// (i) `(G^u_η)^⊥ ⊂ A^l_γ`; (ii) some `a ∈ A^l_γ` restricts to `χ^u_η` on `G^u_η`;
/// (iii) every such `a` has `ã_γ(l) = 1`.
pub fn check_color_matched_pair_def(mp: &MatchedPair, action: &ColorAction) -> Result<ColorMatchedPairReport> {
    let grp = action.group();
    let beta = action.beta();
    let chars = grp.elements();
    let exts = chars
        .iter()
        .map(|a| ExtAutomorphism::from_map(mp, action.image(a)))
        .collect::<Result<Vec<_>>>()?;
    let (nl, ng) = (mp.l.order(), mp.gamma.order());
    // stab[l][γ][a]: a fixes δ_l and e_γ
    let stab: Vec<Vec<Vec<bool>>> = (0..nl)
        .map(|l| (0..ng).map(|x| exts.iter().map(|e| e.g[l] == l && e.h[x] == x).collect()).collect())
        .collect();
    let chi_index: Vec<usize> = chars.iter().map(|g| grp.index(&beta.chi_map(g))).collect();
    // G^l_γ as element indices
    let glg: Vec<Vec<Vec<usize>>> = (0..nl)
        .map(|l| (0..ng).map(|x| (0..chars.len()).filter(|&k| stab[l][x][chi_index[k]]).collect()).collect())
        .collect();

    let mut report =
        ColorMatchedPairReport { condition_i: true, condition_ii: true, condition_iii: true, first_failure: None };
    let fail = |report: &mut ColorMatchedPairReport, which: &str, at: Vec<usize>| {
        if report.first_failure.is_none() {
            report.first_failure = Some((which.to_string(), at));
        }
    };
    for u in 0..nl {
        for eta in 0..ng {
            let sub = &glg[u][eta];
            let perp: Vec<usize> = (0..chars.len())
                .filter(|&a| sub.iter().all(|&k| grp.char_eval(&chars[a], &chars[k]).is_zero()))
                .collect();
            // χ^u_η(k) = ã_η(u) for a = χ_k
            let target: Vec<Rational01> = sub.iter().map(|&k| exts[chi_index[k]].ftilde[eta][u]).collect();
            let matches: Vec<usize> = (0..chars.len())
                .filter(|&a| sub.iter().zip(&target).all(|(&k, &t)| grp.char_eval(&chars[a], &chars[k]) == t))
                .collect();
            for l in 0..nl {
                for x in 0..ng {
                    let at = vec![u, eta, l, x];
                    if !perp.iter().all(|&a| stab[l][x][a]) {
                        report.condition_i = false;
                        fail(&mut report, "i", at.clone());
                    }
                    let inter: Vec<usize> = matches.iter().copied().filter(|&a| stab[l][x][a]).collect();
                    if inter.is_empty() {
                        report.condition_ii = false;
                        fail(&mut report, "ii", at.clone());
                    }
                    if !inter.iter().all(|&a| exts[a].ftilde[x][l].is_zero()) {
                        report.condition_iii = false;
                        fail(&mut report, "iii", at);
                    }
                }
            }
        }
    }
    Ok(report)
}
