use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_integer::Integer;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A reduced fraction in `[0, 1)`, standing for the root of unity `exp(2πi·num/den)`.
///
/// Addition is multiplication of the roots, negation is inversion.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational01 {
    num: u64,
    den: u64,
}

impl Rational01 {
    pub const ZERO: Rational01 = Rational01 { num: 0, den: 1 };
    pub const HALF: Rational01 = Rational01 { num: 1, den: 2 };

    /// Reduces `num/den` modulo 1. Panics if `den == 0`.
    pub fn new(num: i64, den: u64) -> Self {
        assert!(den > 0, "zero denominator");
        let d = den as i128;
        let n = (num as i128).rem_euclid(d);
        let g = (n as u64).gcd(&den);
        let g = if g == 0 { den } else { g };
        Rational01 {
            num: n as u64 / g,
            den: den / g,
        }
    }

    pub fn num(self) -> u64 {
        self.num
    }

    pub fn den(self) -> u64 {
        self.den
    }

    pub fn is_zero(self) -> bool {
        self.num == 0
    }

    /// Multiplicative order of the root of unity.
    pub fn order(self) -> u64 {
        self.den
    }

    pub fn mul_int(self, k: i64) -> Self {
        let n = (self.num as i128 * k as i128).rem_euclid(self.den as i128);
        Rational01::new(n as i64, self.den)
    }

    /// `self · k / m` reduced; used to scale exponents by rational factors.
    pub fn scale(self, k: i64, m: u64) -> Self {
        let den = self.den as i128 * m as i128;
        let num = (self.num as i128 * k as i128).rem_euclid(den);
        let g = (num as u128).gcd(&(den as u128)) as i128;
        let g = if g == 0 { den } else { g };
        Rational01::new((num / g) as i64, (den / g) as u64)
    }

    pub fn to_f64(self) -> f64 {
        self.num as f64 / self.den as f64
    }

    /// Parses `"num/den"` or an integer.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = |msg: &str| Error::Parse {
            pos: 0,
            msg: format!("{msg}: {s:?}"),
        };
        match s.split_once('/') {
            Some((n, d)) => {
                let n: i64 = n.trim().parse().map_err(|_| bad("bad numerator"))?;
                let d: u64 = d.trim().parse().map_err(|_| bad("bad denominator"))?;
                if d == 0 {
                    return Err(bad("zero denominator"));
                }
                Ok(Rational01::new(n, d))
            }
            None => {
                let n: i64 = s.parse().map_err(|_| bad("bad rational"))?;
                Ok(Rational01::new(n, 1))
            }
        }
    }
}

impl Default for Rational01 {
    fn default() -> Self {
        Rational01::ZERO
    }
}

impl Add for Rational01 {
    type Output = Rational01;
    fn add(self, o: Rational01) -> Rational01 {
        let l = self.den.lcm(&o.den);
        let n = self.num * (l / self.den) + o.num * (l / o.den);
        Rational01::new((n % l) as i64, l)
    }
}

impl Neg for Rational01 {
    type Output = Rational01;
    fn neg(self) -> Rational01 {
        Rational01::new(-(self.num as i64), self.den)
    }
}

impl Sub for Rational01 {
    type Output = Rational01;
    fn sub(self, o: Rational01) -> Rational01 {
        self + (-o)
    }
}

impl std::iter::Sum for Rational01 {
    fn sum<I: Iterator<Item = Rational01>>(iter: I) -> Self {
        iter.fold(Rational01::ZERO, |a, b| a + b)
    }
}

impl fmt::Display for Rational01 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl fmt::Debug for Rational01 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl Serialize for Rational01 {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rational01 {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        Rational01::parse(&s).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduces_modulo_one() {
        assert_eq!(Rational01::new(5, 4), Rational01::new(1, 4));
        assert_eq!(Rational01::new(-1, 4), Rational01::new(3, 4));
        assert_eq!(Rational01::new(2, 4), Rational01::HALF);
        assert_eq!(Rational01::new(3, 3), Rational01::ZERO);
        assert_eq!(Rational01::ZERO.den(), 1);
    }

    #[test]
    fn group_law() {
        let a = Rational01::new(1, 3);
        let b = Rational01::new(1, 6);
        assert_eq!(a + b, Rational01::HALF);
        assert_eq!(a + (-a), Rational01::ZERO);
        assert_eq!(a.mul_int(3), Rational01::ZERO);
        assert_eq!(a.mul_int(-1), Rational01::new(2, 3));
        assert_eq!(Rational01::new(1, 2).scale(1, 2), Rational01::new(1, 4));
    }

    #[test]
    fn parses() {
        assert_eq!(Rational01::parse("3/4").unwrap(), Rational01::new(3, 4));
        assert_eq!(Rational01::parse("-1/2").unwrap(), Rational01::HALF);
        assert_eq!(Rational01::parse("0").unwrap(), Rational01::ZERO);
        assert!(Rational01::parse("1/0").is_err());
        assert!(Rational01::parse("x").is_err());
    }
}
