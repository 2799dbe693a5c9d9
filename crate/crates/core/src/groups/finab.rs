use std::fmt;

use serde::{Deserialize, Serialize};

use super::snf::smith_columns;
use crate::error::{Error, Result};
use crate::scalars::Rational01;

/// A finite abelian group `Z/n_0 ⊕ … ⊕ Z/n_{r-1}`.
///
/// The same type serves as the character group: a character is stored by its residues on
/// the dual generators, `χ(g) = Σ χ_i·g_i / n_i`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct FinAbGroup {
    orders: Vec<u64>,
}

/// Residue vector of a group element, one entry per cyclic factor.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Element(pub Vec<u64>);

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl FinAbGroup {
    pub fn new(orders: Vec<u64>) -> Result<Self> {
        if orders.iter().any(|&n| n == 0) {
            return Err(Error::Domain("cyclic factor of order 0".into()));
        }
        Ok(FinAbGroup { orders })
    }

    pub fn cyclic(n: u64) -> Self {
        FinAbGroup::new(vec![n]).expect("positive order")
    }

    pub fn trivial() -> Self {
        FinAbGroup { orders: vec![] }
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    pub fn order(&self) -> u64 {
        self.orders.iter().product()
    }

    pub fn exponent(&self) -> u64 {
        self.orders.iter().fold(1, |a, &b| num_integer::lcm(a, b))
    }

    pub fn identity(&self) -> Element {
        Element(vec![0; self.rank()])
    }

    pub fn generator(&self, i: usize) -> Element {
        let mut e = self.identity();
        e.0[i] = 1 % self.orders[i];
        e
    }

    /// Element with the given (possibly negative or unreduced) residues.
    pub fn element(&self, res: &[i64]) -> Result<Element> {
        if res.len() != self.rank() {
            return Err(Error::DimensionMismatch(format!(
                "element of length {} in a group of rank {}",
                res.len(),
                self.rank()
            )));
        }
        Ok(Element(
            res.iter()
                .zip(&self.orders)
                .map(|(&r, &n)| r.rem_euclid(n as i64) as u64)
                .collect(),
        ))
    }

    /// Checks that `e` is a reduced residue vector of this group.
    pub fn check(&self, e: &Element) -> Result<()> {
        if e.0.len() != self.rank() || e.0.iter().zip(&self.orders).any(|(&r, &n)| r >= n) {
            return Err(Error::Domain(format!("{e:?} is not an element of {:?}", self.orders)));
        }
        Ok(())
    }

    pub fn op(&self, a: &Element, b: &Element) -> Element {
        Element(
            a.0.iter()
                .zip(&b.0)
                .zip(&self.orders)
                .map(|((&x, &y), &n)| (x + y) % n)
                .collect(),
        )
    }

    pub fn inv(&self, a: &Element) -> Element {
        Element(a.0.iter().zip(&self.orders).map(|(&x, &n)| (n - x) % n).collect())
    }

    pub fn pow(&self, a: &Element, k: i64) -> Element {
        Element(
            a.0.iter()
                .zip(&self.orders)
                .map(|(&x, &n)| ((x as i128 * k as i128).rem_euclid(n as i128)) as u64)
                .collect(),
        )
    }

    pub fn is_identity(&self, a: &Element) -> bool {
        a.0.iter().all(|&x| x == 0)
    }

    pub fn element_order(&self, a: &Element) -> u64 {
        a.0.iter()
            .zip(&self.orders)
            .map(|(&x, &n)| n / num_integer::gcd(x, n))
            .fold(1, num_integer::lcm)
    }

    /// Mixed-radix index with the first coordinate varying fastest.
    pub fn index(&self, a: &Element) -> usize {
        let mut idx = 0usize;
        let mut stride = 1usize;
        for (&x, &n) in a.0.iter().zip(&self.orders) {
            idx += x as usize * stride;
            stride *= n as usize;
        }
        idx
    }

    pub fn from_index(&self, mut idx: usize) -> Element {
        Element(
            self.orders
                .iter()
                .map(|&n| {
                    let r = idx % n as usize;
                    idx /= n as usize;
                    r as u64
                })
                .collect(),
        )
    }

    /// All elements in index order.
    pub fn elements(&self) -> Vec<Element> {
        (0..self.order() as usize).map(|i| self.from_index(i)).collect()
    }

    /// Evaluates the character with residues `chi` at `g`.
    pub fn char_eval(&self, chi: &Element, g: &Element) -> Rational01 {
        chi.0
            .iter()
            .zip(&g.0)
            .zip(&self.orders)
            .map(|((&c, &x), &n)| Rational01::new((c * x % n) as i64, n))
            .sum()
    }

    /// Applies the endomorphism sending generator `i` to `images[i]`.
    pub fn apply_hom(&self, images: &[Element], g: &Element) -> Element {
        let mut acc = self.identity();
        for (x, img) in g.0.iter().zip(images) {
            acc = self.op(&acc, &self.pow(img, *x as i64));
        }
        acc
    }

    /// All automorphisms, each given by the images of the generators.
    pub fn automorphisms(&self) -> Vec<Vec<Element>> {
        let els = self.elements();
        let r = self.rank();
        let mut out = Vec::new();
        let mut cur: Vec<Element> = Vec::with_capacity(r);
        self.extend_autos(&els, &mut cur, &mut out);
        out.retain(|imgs| {
            let mut seen = std::collections::HashSet::new();
            els.iter().all(|g| seen.insert(self.apply_hom(imgs, g)))
        });
        out
    }

    fn extend_autos(&self, els: &[Element], cur: &mut Vec<Element>, out: &mut Vec<Vec<Element>>) {
        let i = cur.len();
        if i == self.rank() {
            out.push(cur.clone());
            return;
        }
        let n = self.orders[i];
        for e in els {
            // the image of a generator of order n must be killed by n
            if self.element_order(e) == self.element_order(&self.generator(i)) && self.is_identity(&self.pow(e, n as i64)) {
                cur.push(e.clone());
                self.extend_autos(els, cur, out);
                cur.pop();
            }
        }
    }

    /// Invariant-factor form of this group together with the images of its generators.
    pub fn normalize(&self) -> (FinAbGroup, Vec<Element>) {
        let r = self.rank();
        let rel: Vec<Vec<i128>> = (0..r)
            .map(|i| (0..r).map(|j| if i == j { self.orders[i] as i128 } else { 0 }).collect())
            .collect();
        let p = Projection::from_relations(r, &rel);
        let images = (0..r).map(|i| p.apply(&self.generator(i))).collect();
        (p.target.clone(), images)
    }
}

/// A surjection `Z^r → ⊕ Z/d_t` killing a relation lattice, read off a Smith normal form.
#[derive(Clone, Debug)]
pub struct Projection {
    v: Vec<Vec<i128>>,
    keep: Vec<usize>,
    target: FinAbGroup,
}

impl Projection {
    pub(crate) fn from_relations(r: usize, rel: &[Vec<i128>]) -> Self {
        let (diag, v) = smith_columns(rel, r);
        let keep: Vec<usize> = (0..r).filter(|&t| diag[t] != 1).collect();
        assert!(keep.iter().all(|&t| diag[t] > 0), "relation lattice must have full rank");
        let target = FinAbGroup {
            orders: keep.iter().map(|&t| diag[t] as u64).collect(),
        };
        Projection { v, keep, target }
    }

    pub fn target(&self) -> &FinAbGroup {
        &self.target
    }

    pub fn apply(&self, g: &Element) -> Element {
        Element(
            self.keep
                .iter()
                .zip(&self.target.orders)
                .map(|(&t, &d)| {
                    let s: i128 = g.0.iter().enumerate().map(|(i, &x)| x as i128 * self.v[i][t]).sum();
                    s.rem_euclid(d as i128) as u64
                })
                .collect(),
        )
    }
}
