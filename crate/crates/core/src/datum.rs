//! Braiding matrices with group-valued degrees: the input data for reflections and diagrams.
//!
//! JSON form: `{"q": [["q", "q^-1"], ["1", "q^2"]], "group": {"orders": [3]},
//! "beta": [["1/3"]], "t": [[1], [0]]}`. A `"qt"` matrix (the twisted braiding) may be given
//! instead of `"q"`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groups::{Bicharacter, Element, FinAbGroup};
use crate::scalars::{Rational01, Scalar};

/// A square matrix of scalars.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ScalarMatrix(pub Vec<Vec<Scalar>>);

impl ScalarMatrix {
    pub fn new(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch("matrix is not square".into()));
        }
        Ok(ScalarMatrix(rows))
    }

    /// Parses a matrix of scalar strings.
    pub fn parse(rows: &[&[&str]]) -> Result<Self> {
        let m = rows
            .iter()
            .map(|r| r.iter().map(|s| s.parse()).collect::<Result<Vec<Scalar>>>())
            .collect::<Result<Vec<_>>>()?;
        ScalarMatrix::new(m)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.0[i][j]
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.rank();
        (0..n).all(|i| (0..i).all(|j| self.0[i][j] == self.0[j][i]))
    }

    /// `(i, j) ↦ self_ij · ζ^{f(i, j)}`.
    pub fn twisted(&self, f: impl Fn(usize, usize) -> Rational01) -> ScalarMatrix {
        let n = self.rank();
        ScalarMatrix(
            (0..n)
                .map(|i| (0..n).map(|j| self.0[i][j].mul_root(f(i, j))).collect())
                .collect(),
        )
    }
}

/// `(q, G, β, t)` with `q_ii ≠ 1` and `β` nondegenerate.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Datum {
    q: ScalarMatrix,
    beta: Bicharacter,
    t: Vec<Element>,
    qt: ScalarMatrix,
}

impl Datum {
    pub fn new(q: ScalarMatrix, beta: Bicharacter, t: Vec<Element>) -> Result<Self> {
        let n = q.rank();
        if t.len() != n {
            return Err(Error::DimensionMismatch(format!("{} degrees for rank {n}", t.len())));
        }
        for (i, row) in q.0.iter().enumerate() {
            if row[i].is_one() {
                return Err(Error::DiagonalOne(i + 1));
            }
        }
        if !beta.is_nondegenerate() {
            return Err(Error::DegenerateBeta);
        }
        for ti in &t {
            beta.group().check(ti)?;
        }
        let qt = q.twisted(|i, j| -beta.eval(&t[i], &t[j]));
        Ok(Datum { q, beta, t, qt })
    }

    /// Builds the datum whose twisted braiding is `qt`.
    pub fn from_twisted(qt: &ScalarMatrix, beta: Bicharacter, t: Vec<Element>) -> Result<Self> {
        if t.len() != qt.rank() {
            return Err(Error::DimensionMismatch(format!("{} degrees for rank {}", t.len(), qt.rank())));
        }
        let q = untwisted_matrix(qt, &beta, &t);
        Datum::new(q, beta, t)
    }

    pub fn rank(&self) -> usize {
        self.q.rank()
    }

    pub fn q(&self) -> &ScalarMatrix {
        &self.q
    }

    /// `q̃_ij = β(t_i, t_j)^{-1} q_ij`.
    pub fn qt(&self) -> &ScalarMatrix {
        &self.qt
    }

    pub fn beta(&self) -> &Bicharacter {
        &self.beta
    }

    pub fn group(&self) -> &FinAbGroup {
        self.beta.group()
    }

    pub fn t(&self) -> &[Element] {
        &self.t
    }

    /// `ξ_i = χ_{t_i} = β(-, t_i)` as a character.
    pub fn xi(&self, i: usize) -> Element {
        self.beta.chi_map(&self.t[i])
    }

    pub fn to_json(&self) -> DatumJson {
        DatumJson {
            q: Some(self.q.clone()),
            qt: Some(self.qt.clone()),
            group: self.group().clone(),
            beta: self.beta.matrix().to_vec(),
            t: self.t.clone(),
        }
    }
}

/// Recovers `q_ij = β(t_i, t_j) q̃_ij` from a twisted braiding.
pub fn untwisted_matrix(qt: &ScalarMatrix, beta: &Bicharacter, t: &[Element]) -> ScalarMatrix {
    qt.twisted(|i, j| beta.eval(&t[i], &t[j]))
}

/// Wire format of a [`Datum`].
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DatumJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<ScalarMatrix>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub qt: Option<ScalarMatrix>,
    pub group: FinAbGroup,
    pub beta: Vec<Vec<Rational01>>,
    pub t: Vec<Element>,
}

impl DatumJson {
    pub fn build(&self) -> Result<Datum> {
        let group = FinAbGroup::new(self.group.orders().to_vec())?;
        let beta = Bicharacter::new(group, self.beta.clone())?;
        match (&self.q, &self.qt) {
            (Some(q), None) => Datum::new(ScalarMatrix::new(q.0.clone())?, beta, self.t.clone()),
            (None, Some(qt)) => Datum::from_twisted(&ScalarMatrix::new(qt.0.clone())?, beta, self.t.clone()),
            (Some(q), Some(qt)) => {
                let d = Datum::new(ScalarMatrix::new(q.0.clone())?, beta, self.t.clone())?;
                if d.qt() != qt {
                    return Err(Error::Invalid("given qt does not match q".into()));
                }
                Ok(d)
            }
            (None, None) => Err(Error::Invalid("datum needs \"q\" or \"qt\"".into())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c3_datum() -> Datum {
        let g = FinAbGroup::cyclic(3);
        let beta = Bicharacter::new(g.clone(), vec![vec![Rational01::new(1, 3)]]).unwrap();
        let qt = ScalarMatrix::parse(&[&["1", "q^-1"], &["1", "q"]]).unwrap();
        Datum::from_twisted(&qt, beta, vec![g.generator(0), g.identity()]).unwrap()
    }

    #[test]
    fn twist_round_trip() {
        let d = c3_datum();
        assert_eq!(d.q().get(0, 0).to_string(), "zeta(3,1)");
        assert_eq!(d.qt().get(0, 0), &Scalar::one());
        assert_eq!(d.qt().get(0, 1).to_string(), "q^-1");
        let again = Datum::new(d.q().clone(), d.beta().clone(), d.t().to_vec()).unwrap();
        assert_eq!(again, d);
    }

    #[test]
    fn validation_errors() {
        let g = FinAbGroup::cyclic(3);
        let beta = Bicharacter::new(g.clone(), vec![vec![Rational01::new(1, 3)]]).unwrap();
        let q = ScalarMatrix::parse(&[&["1", "q"], &["q", "q"]]).unwrap();
        assert_eq!(
            Datum::new(q, beta.clone(), vec![g.identity(), g.identity()]).err(),
            Some(Error::DiagonalOne(1))
        );
        let q = ScalarMatrix::parse(&[&["q"]]).unwrap();
        assert!(matches!(
            Datum::new(q.clone(), beta, vec![]).err(),
            Some(Error::DimensionMismatch(_))
        ));
        let deg = Bicharacter::trivial(g.clone());
        assert_eq!(Datum::new(q, deg, vec![g.identity()]).err(), Some(Error::DegenerateBeta));
    }

    #[test]
    fn json_round_trip() {
        let d = c3_datum();
        let txt = serde_json::to_string(&d.to_json()).unwrap();
        let back: DatumJson = serde_json::from_str(&txt).unwrap();
        assert_eq!(back.build().unwrap(), d);
    }
}
