//! Presentations of the quantum doubles attached to a datum, their group-valued retractions,
//! and the color predicates for the resulting quotients.
//!
//! Nothing here is an algebra in memory: the doubles are infinite dimensional, so the module
//! keeps relation data (with exact coefficients) and decides the finite predicates.

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::datum::Datum;
use crate::error::{Error, Result};
use crate::groups::Element;
use crate::scalars::Scalar;

/// Largest number of candidate retractions we enumerate.
pub const MAX_RETRACTIONS: u64 = 1 << 20;

/// A formal group-like symbol acting by conjugation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "value")]
pub enum GroupSymbol {
    K(usize),
    L(usize),
    /// An element of the finite group `G` (generators only are emitted).
    Group(Element),
    /// A character of `G` (dual generators only are emitted).
    Character(Element),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Generator {
    E(usize),
    F(usize),
}

/// `x·target·x^{-1} = coeff·target`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjugationRelation {
    pub conjugator: GroupSymbol,
    pub target: Generator,
    pub coeff: Scalar,
}

/// `E_i F_j − F_j E_i = δ_ij (t_i K_i − ξ_i L_i)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CommutatorRelation {
    pub i: usize,
    pub j: usize,
    /// `(t_i, ξ_i)` when `i == j`, absent otherwise.
    pub rhs: Option<(Element, Element)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DoublePresentation {
    pub rank: usize,
    pub conjugations: Vec<ConjugationRelation>,
    pub commutators: Vec<CommutatorRelation>,
    pub coproducts: Vec<String>,
    /// `(left, right, value)` for the pairing on generators.
    pub pairing: Vec<(String, String, i64)>,
    /// Whether the presentation is taken modulo the ideal generated by `t·χ^o_t − 1`.
    pub modulo_ideal: bool,
}

fn residues(e: &Element) -> String {
    let p: Vec<String> = e.0.iter().map(|x| x.to_string()).collect();
    format!("({})", p.join(","))
}

fn sym(s: &GroupSymbol) -> String {
    match s {
        GroupSymbol::K(i) => format!("K{}", i + 1),
        GroupSymbol::L(i) => format!("L{}", i + 1),
        GroupSymbol::Group(e) => format!("g{}", residues(e)),
        GroupSymbol::Character(e) => format!("chi{}", residues(e)),
    }
}

fn gen(g: Generator) -> String {
    match g {
        Generator::E(i) => format!("E{}", i + 1),
        Generator::F(i) => format!("F{}", i + 1),
    }
}

impl DoublePresentation {
    /// One relation per line in a fixed order; the digest is taken over this text.
    pub fn canonical_text(&self) -> String {
        let mut out = String::new();
        for r in &self.conjugations {
            let x = sym(&r.conjugator);
            out.push_str(&format!("{x} {t} {x}^-1 = {c} {t}\n", t = gen(r.target), c = r.coeff));
        }
        for c in &self.commutators {
            let lhs = format!("E{i} F{j} - F{j} E{i}", i = c.i + 1, j = c.j + 1);
            match &c.rhs {
                Some((t, xi)) => out.push_str(&format!(
                    "{lhs} = g{t} K{i} - chi{xi} L{i}\n",
                    t = residues(t),
                    xi = residues(xi),
                    i = c.i + 1
                )),
                None => out.push_str(&format!("{lhs} = 0\n")),
            }
        }
        for c in &self.coproducts {
            out.push_str(c);
            out.push('\n');
        }
        for (a, b, v) in &self.pairing {
            out.push_str(&format!("mu({a}, {b}) = {v}\n"));
        }
        if self.modulo_ideal {
            out.push_str("modulo (g chi^o_g - 1)\n");
        }
        out
    }

    pub fn digest(&self) -> String {
        let h = Sha256::digest(self.canonical_text().as_bytes());
        h.iter().map(|b| format!("{b:02x}")).collect()
    }
}

/// The relation families of the double, with coefficients read off the datum.
pub fn presentation(d: &Datum, modulo_ideal: bool) -> DoublePresentation {
    let n = d.rank();
    let g = d.group();
    let qt = d.qt();
    let beta = d.beta();
    let mut conj = Vec::new();
    let root = Scalar::root_of_unity;
    for i in 0..n {
        for j in 0..n {
            conj.push(ConjugationRelation { conjugator: GroupSymbol::K(i), target: Generator::E(j), coeff: qt.get(i, j).clone() });
            conj.push(ConjugationRelation { conjugator: GroupSymbol::K(i), target: Generator::F(j), coeff: qt.get(i, j).inv() });
        }
    }
    for i in 0..n {
        for j in 0..n {
            conj.push(ConjugationRelation { conjugator: GroupSymbol::L(i), target: Generator::E(j), coeff: qt.get(j, i).inv() });
            conj.push(ConjugationRelation { conjugator: GroupSymbol::L(i), target: Generator::F(j), coeff: qt.get(j, i).clone() });
        }
    }
    for k in 0..g.rank() {
        let x = g.generator(k);
        for j in 0..n {
            let v = beta.eval(&x, &d.t()[j]);
            conj.push(ConjugationRelation { conjugator: GroupSymbol::Group(x.clone()), target: Generator::E(j), coeff: root(v) });
            conj.push(ConjugationRelation { conjugator: GroupSymbol::Group(x.clone()), target: Generator::F(j), coeff: root(-v) });
        }
    }
    for k in 0..g.rank() {
        let chi = g.generator(k);
        for j in 0..n {
            let v = g.char_eval(&chi, &d.t()[j]);
            conj.push(ConjugationRelation { conjugator: GroupSymbol::Character(chi.clone()), target: Generator::E(j), coeff: root(-v) });
            conj.push(ConjugationRelation { conjugator: GroupSymbol::Character(chi.clone()), target: Generator::F(j), coeff: root(v) });
        }
    }
    let mut commutators = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let rhs = (i == j).then(|| (d.t()[i].clone(), d.xi(i)));
            commutators.push(CommutatorRelation { i, j, rhs });
        }
    }
    let mut coproducts = Vec::new();
    for i in 0..n {
        coproducts.push(format!(
            "Delta(E{k}) = E{k} (x) 1 + K{k} g{t} (x) E{k}",
            k = i + 1,
            t = residues(&d.t()[i])
        ));
        coproducts.push(format!(
            "Delta(F{k}) = F{k} (x) L{k} chi{xi} + 1 (x) F{k}",
            k = i + 1,
            xi = residues(&d.xi(i))
        ));
    }
    let mut pairing = Vec::new();
    for i in 0..n {
        for j in 0..n {
            pairing.push((format!("E{}", i + 1), format!("F{}", j + 1), -((i == j) as i64)));
        }
    }
    for i in 0..n {
        pairing.push((format!("E{}", i + 1), "h".into(), 0));
        pairing.push(("g".into(), format!("F{}", i + 1), 0));
    }
    DoublePresentation { rank: n, conjugations: conj, commutators, coproducts, pairing, modulo_ideal }
}

/// A homomorphism from the free part to `G`, given by the images of the `K_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Retraction {
    pub images: Vec<Element>,
}

impl Retraction {
    pub fn pi_k(&self, i: usize) -> &Element {
        &self.images[i]
    }

    /// `π(L_i) = t_i · π̄(K_i) · χ^{-1}(ξ_i)`, with `χ^{-1}(ξ_i) = t_i`.
    pub fn pi_l(&self, d: &Datum, i: usize) -> Element {
        let g = d.group();
        let chi_inv = chi_inverse(d, &d.xi(i));
        g.op(&g.op(&d.t()[i], &self.images[i]), &chi_inv)
    }

    /// Relation `E_iF_i − F_iE_i = t_iK_i − ξ_iL_i` survives: `π(t_iK_i) = π(ξ_i)π(L_i)`,
    /// where characters map to `G` by `ξ ↦ χ^{-1}(ξ)^{-1}`.
    pub fn respects_commutators(&self, d: &Datum) -> bool {
        let g = d.group();
        (0..d.rank()).all(|i| {
            let lhs = g.op(&d.t()[i], &self.images[i]);
            let pi_xi = g.inv(&chi_inverse(d, &d.xi(i)));
            lhs == g.op(&pi_xi, &self.pi_l(d, i))
        })
    }
}

/// The unique `g` with `χ_g = ξ` (β is nondegenerate on a valid datum).
fn chi_inverse(d: &Datum, xi: &Element) -> Element {
    d.group()
        .elements()
        .into_iter()
        .find(|g| d.beta().chi_map(g) == *xi)
        .expect("χ is bijective for a nondegenerate bicharacter")
}

/// All `|G|^θ` retractions, in mixed-radix order over the image vector.
pub fn retractions(d: &Datum) -> Result<Vec<Retraction>> {
    if !d.beta().is_nondegenerate() {
        return Err(Error::DegenerateBeta);
    }
    let g = d.group();
    let n = d.rank() as u32;
    let total = g.order().checked_pow(n).filter(|&t| t <= MAX_RETRACTIONS);
    let total = total.ok_or_else(|| Error::SizeLimit(format!("|G|^θ exceeds {MAX_RETRACTIONS}")))?;
    let m = g.order() as usize;
    Ok((0..total as usize)
        .map(|mut idx| {
            let images = (0..n)
                .map(|_| {
                    let e = g.from_index(idx % m);
                    idx /= m;
                    e
                })
                .collect();
            Retraction { images }
        })
        .collect())
}

/// The quotient by a retraction is color exactly when every `π̄(K_i)` is trivial.
pub fn is_color_coinvariants(r: &Retraction) -> bool {
    r.images.iter().all(|e| e.0.iter().all(|&x| x == 0))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SingleCopyReport {
    pub symmetric: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub retraction_exists: Option<bool>,
    /// `π̄(K_i)` with `π̄(K_i)^2 = t_i^{-2}`, preferring `t_i^{-1}`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<Element>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub color: Option<bool>,
}

/// Predicates for the single-copy quotient; fields past `symmetric` are `None` when the
/// twisted matrix is not symmetric.
pub fn single_copy_color_check(d: &Datum) -> SingleCopyReport {
    if !d.qt().is_symmetric() {
        return SingleCopyReport { symmetric: false, retraction_exists: None, witness: None, color: None };
    }
    let g = d.group();
    let mut witness = Vec::new();
    for t in d.t() {
        let target = g.inv(&g.op(t, t));
        let pref = g.inv(t);
        let root = if g.op(&pref, &pref) == target {
            Some(pref)
        } else {
            g.elements().into_iter().find(|x| g.op(x, x) == target)
        };
        match root {
            Some(x) => witness.push(x),
            None => {
                return SingleCopyReport {
                    symmetric: true,
                    retraction_exists: Some(false),
                    witness: None,
                    color: Some(false),
                }
            }
        }
    }
    let color = d.t().iter().all(|t| g.is_identity(&g.op(t, t)));
    SingleCopyReport { symmetric: true, retraction_exists: Some(true), witness: Some(witness), color: Some(color) }
}

/// [`single_copy_color_check`] that fails with `NotSymmetric` instead of reporting it.
pub fn single_copy_color_check_strict(d: &Datum) -> Result<SingleCopyReport> {
    let r = single_copy_color_check(d);
    if r.symmetric {
        Ok(r)
    } else {
        Err(Error::NotSymmetric)
    }
}
