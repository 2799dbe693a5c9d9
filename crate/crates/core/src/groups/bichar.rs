use serde::Serialize;

use super::{Element, FinAbGroup, Subgroup};
use crate::error::{Error, Result};
use crate::scalars::Rational01;

/// A bicharacter `β: G × G → k×`, stored by exponents on pairs of generators:
/// `β(g, h) = exp(2πi Σ g_i h_j B_ij)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct Bicharacter {
    #[serde(skip)]
    group: FinAbGroup,
    matrix: Vec<Vec<Rational01>>,
}

impl Bicharacter {
    /// Validates well-definedness: `n_i·B_ij` and `n_j·B_ij` must be integers.
    pub fn new(group: FinAbGroup, matrix: Vec<Vec<Rational01>>) -> Result<Self> {
        let r = group.rank();
        if matrix.len() != r || matrix.iter().any(|row| row.len() != r) {
            return Err(Error::DimensionMismatch(format!(
                "bicharacter matrix must be {r}×{r}"
            )));
        }
        let ord = group.orders();
        for i in 0..r {
            for j in 0..r {
                let b = matrix[i][j];
                if b.mul_int(ord[i] as i64) != Rational01::ZERO
                    || b.mul_int(ord[j] as i64) != Rational01::ZERO
                {
                    return Err(Error::Domain(format!(
                        "B[{i}][{j}] = {b} is not well defined on Z/{} × Z/{}",
                        ord[i], ord[j]
                    )));
                }
            }
        }
        Ok(Bicharacter { group, matrix })
    }

    pub fn trivial(group: FinAbGroup) -> Self {
        let r = group.rank();
        Bicharacter {
            group,
            matrix: vec![vec![Rational01::ZERO; r]; r],
        }
    }

    /// Builds the matrix from a function on pairs of generators.
    pub fn from_generators(group: FinAbGroup, f: impl Fn(usize, usize) -> Rational01) -> Result<Self> {
        let r = group.rank();
        let m = (0..r).map(|i| (0..r).map(|j| f(i, j)).collect()).collect();
        Bicharacter::new(group, m)
    }

    pub fn group(&self) -> &FinAbGroup {
        &self.group
    }

    pub fn matrix(&self) -> &[Vec<Rational01>] {
        &self.matrix
    }

    pub fn eval(&self, g: &Element, h: &Element) -> Rational01 {
        let mut acc = Rational01::ZERO;
        for (i, &gi) in g.0.iter().enumerate() {
            if gi == 0 {
                continue;
            }
            for (j, &hj) in h.0.iter().enumerate() {
                if hj != 0 {
                    acc = acc + self.matrix[i][j].mul_int((gi * hj) as i64);
                }
            }
        }
        acc
    }

    /// `χ_g = β(-, g)` as a character (residues on the dual generators).
    pub fn chi_map(&self, g: &Element) -> Element {
        self.character(|i| self.eval(&self.group.generator(i), g))
    }

    /// `χ^o_g = β(g, -)` as a character.
    pub fn chi_o_map(&self, g: &Element) -> Element {
        self.character(|i| self.eval(g, &self.group.generator(i)))
    }

    fn character(&self, value_on_gen: impl Fn(usize) -> Rational01) -> Element {
        Element(
            self.group
                .orders()
                .iter()
                .enumerate()
                .map(|(i, &n)| {
                    let v = value_on_gen(i);
                    v.num() * (n / v.den())
                })
                .collect(),
        )
    }

    /// `{g : β(g, h) = 1 for all h}`, by enumeration.
    pub fn radical(&self) -> Subgroup {
        let gens: Vec<Element> = (0..self.group.rank()).map(|j| self.group.generator(j)).collect();
        let elems = self
            .group
            .elements()
            .into_iter()
            .filter(|g| gens.iter().all(|h| self.eval(g, h).is_zero()))
            .collect();
        Subgroup::from_elements(self.group.clone(), elems)
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.radical().order() == 1
    }

    /// `β(g, h)·β(h, g) = 1` for all `g, h` (which forces `β(g, g) = ±1`).
    pub fn is_commutation_factor(&self) -> bool {
        let r = self.group.rank();
        (0..r).all(|i| (0..r).all(|j| (self.matrix[i][j] + self.matrix[j][i]).is_zero()))
    }

    pub fn mul(&self, o: &Bicharacter) -> Bicharacter {
        assert_eq!(self.group, o.group);
        let matrix = self
            .matrix
            .iter()
            .zip(&o.matrix)
            .map(|(a, b)| a.iter().zip(b).map(|(&x, &y)| x + y).collect())
            .collect();
        Bicharacter { group: self.group.clone(), matrix }
    }

    pub fn inv(&self) -> Bicharacter {
        Bicharacter {
            group: self.group.clone(),
            matrix: self.matrix.iter().map(|r| r.iter().map(|&x| -x).collect()).collect(),
        }
    }

    /// Automorphisms of the group (as generator images) that preserve `β`.
    pub fn automorphisms(&self) -> Vec<Vec<Element>> {
        let g = &self.group;
        let r = g.rank();
        g.automorphisms()
            .into_iter()
            .filter(|imgs| (0..r).all(|i| (0..r).all(|j| self.eval(&imgs[i], &imgs[j]) == self.matrix[i][j])))
            .collect()
    }

    /// Least common multiple of the orders of all values.
    pub fn conductor(&self) -> u64 {
        self.matrix.iter().flatten().fold(1, |a, b| num_integer::lcm(a, b.den()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: u64) -> Rational01 {
        Rational01::new(n, d)
    }

    #[test]
    fn rejects_ill_defined_matrix() {
        let g = FinAbGroup::new(vec![2, 4]).unwrap();
        assert!(Bicharacter::new(g.clone(), vec![vec![r(0, 1), r(1, 4)], vec![r(3, 4), r(0, 1)]]).is_err());
        assert!(Bicharacter::new(g, vec![vec![r(0, 1), r(1, 2)], vec![r(1, 2), r(0, 1)]]).is_ok());
    }

    #[test]
    fn sign_bicharacter_on_c4() {
        let g = FinAbGroup::cyclic(4);
        let b = Bicharacter::new(g.clone(), vec![vec![r(1, 2)]]).unwrap();
        let x = g.generator(0);
        assert_eq!(b.eval(&x, &x), Rational01::HALF);
        assert_eq!(g.char_eval(&b.chi_map(&x), &x), Rational01::HALF);
        assert!(b.is_commutation_factor());
        let rad = b.radical();
        assert_eq!(rad.order(), 2);
        assert!(rad.contains(&g.element(&[2]).unwrap()));
        assert!(!b.is_nondegenerate());
    }

    #[test]
    fn chi_and_chi_o_differ_for_asymmetric_beta() {
        let g = FinAbGroup::new(vec![2, 2]).unwrap();
        let b = Bicharacter::new(g.clone(), vec![vec![r(1, 2), r(1, 2)], vec![r(0, 1), r(1, 2)]]).unwrap();
        let s = g.generator(0);
        let n = g.generator(1);
        assert_eq!(g.char_eval(&b.chi_map(&s), &n), b.eval(&n, &s));
        assert_eq!(g.char_eval(&b.chi_o_map(&s), &n), b.eval(&s, &n));
        assert_ne!(b.chi_map(&s), b.chi_o_map(&s));
        assert!(b.is_nondegenerate());
        assert!(!b.is_commutation_factor());
    }

    #[test]
    fn automorphisms_preserving_beta() {
        let g = FinAbGroup::cyclic(3);
        assert_eq!(g.automorphisms().len(), 2);
        let b = Bicharacter::new(g, vec![vec![r(1, 3)]]).unwrap();
        assert_eq!(b.automorphisms().len(), 2);
        let k = FinAbGroup::new(vec![2, 2]).unwrap();
        assert_eq!(k.automorphisms().len(), 6);
        let asym = Bicharacter::new(k, vec![vec![r(1, 2), r(1, 2)], vec![r(0, 1), r(1, 2)]]).unwrap();
        assert_eq!(asym.automorphisms().len(), 3);
    }
}
