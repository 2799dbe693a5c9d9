use std::collections::BTreeMap;
use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::Rational01;
use crate::error::{Error, Result};

/// A root of unity times a Laurent monomial in independent generic variables.
///
/// Variables have infinite multiplicative order; exponents stored here are never zero.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Scalar {
    root: Rational01,
    exps: BTreeMap<String, i64>,
}

/// Multiplicative order of a [`Scalar`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Order {
    Finite(u64),
    Infinite,
}

impl Scalar {
    pub fn one() -> Self {
        Scalar::default()
    }

    pub fn minus_one() -> Self {
        Scalar::root_of_unity(Rational01::HALF)
    }

    pub fn root_of_unity(root: Rational01) -> Self {
        Scalar {
            root,
            exps: BTreeMap::new(),
        }
    }

    /// `exp(2πi·k/n)`.
    pub fn zeta(n: u64, k: i64) -> Self {
        Scalar::root_of_unity(Rational01::new(k, n))
    }

    /// A generic variable. Panics on names outside `[a-z][a-z0-9]*`.
    pub fn var(name: &str) -> Self {
        assert!(valid_var(name), "invalid variable name {name:?}");
        Scalar::one().with_exp(name, 1)
    }

    fn with_exp(mut self, name: &str, e: i64) -> Self {
        let v = self.exps.get(name).copied().unwrap_or(0) + e;
        if v == 0 {
            self.exps.remove(name);
        } else {
            self.exps.insert(name.to_string(), v);
        }
        self
    }

    pub fn root(&self) -> Rational01 {
        self.root
    }

    pub fn exponents(&self) -> &BTreeMap<String, i64> {
        &self.exps
    }

    pub fn is_one(&self) -> bool {
        self.root.is_zero() && self.exps.is_empty()
    }

    pub fn is_root_of_unity(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn inv(&self) -> Self {
        self.pow(-1)
    }

    pub fn pow(&self, k: i64) -> Self {
        Scalar {
            root: self.root.mul_int(k),
            exps: self
                .exps
                .iter()
                .filter(|_| k != 0)
                .map(|(v, e)| (v.clone(), e * k))
                .collect(),
        }
    }

    /// `self^k`, or `None` when an exponent overflows.
    pub fn checked_pow(&self, k: i64) -> Option<Self> {
        let mut exps = BTreeMap::new();
        if k != 0 {
            for (v, e) in &self.exps {
                exps.insert(v.clone(), e.checked_mul(k)?);
            }
        }
        Some(Scalar { root: self.root.mul_int(k), exps })
    }

    /// `self · o`, or `None` when an exponent overflows.
    pub fn checked_mul(&self, o: &Scalar) -> Option<Self> {
        let mut exps = self.exps.clone();
        for (v, e) in &o.exps {
            let x = exps.get(v).copied().unwrap_or(0).checked_add(*e)?;
            if x == 0 {
                exps.remove(v);
            } else {
                exps.insert(v.clone(), x);
            }
        }
        Some(Scalar { root: self.root + o.root, exps })
    }

    pub fn mul_root(&self, r: Rational01) -> Self {
        Scalar {
            root: self.root + r,
            exps: self.exps.clone(),
        }
    }

    pub fn order_of(&self) -> Order {
        if !self.exps.is_empty() {
            Order::Infinite
        } else {
            Order::Finite(self.root.order())
        }
    }

    /// Least `n ≥ 0` with `self^n == b`.
    pub fn solve_power(&self, b: &Scalar) -> Result<u64> {
        let n = if self.exps.is_empty() {
            if !b.exps.is_empty() {
                return Err(Error::NoSolution);
            }
            return solve_root_power(self.root, b.root);
        } else {
            let mut n: Option<i64> = None;
            for (v, &ea) in &self.exps {
                let eb = b.exps.get(v).copied().unwrap_or(0);
                if eb % ea != 0 {
                    return Err(Error::NoSolution);
                }
                let k = eb / ea;
                match n {
                    Some(m) if m != k => return Err(Error::NoSolution),
                    _ => n = Some(k),
                }
            }
            if b.exps.keys().any(|v| !self.exps.contains_key(v)) {
                return Err(Error::NoSolution);
            }
            n.unwrap()
        };
        if n < 0 || self.root.mul_int(n) != b.root {
            return Err(Error::NoSolution);
        }
        Ok(n as u64)
    }

    /// Renders with Unicode shorthand (`ω`, `i`, leading `-`) for diagram text output.
    pub fn pretty(&self) -> String {
        let mut vars = String::new();
        for (v, e) in &self.exps {
            if *e == 1 {
                vars.push_str(v);
            } else {
                vars.push_str(&format!("{v}^{e}"));
            }
        }
        let (num, den) = (self.root.num(), self.root.den());
        let root = match (num, den) {
            (0, 1) => String::new(),
            (1, 2) => "-".to_string(),
            (1, 3) => "ω".to_string(),
            (2, 3) => "ω²".to_string(),
            (1, 4) => "i".to_string(),
            (3, 4) => "-i".to_string(),
            _ => format!("ζ({den},{num})"),
        };
        match (root.as_str(), vars.is_empty()) {
            ("", true) => "1".to_string(),
            ("-", true) => "-1".to_string(),
            ("", false) => vars,
            ("-", false) => format!("-{vars}"),
            ("-i", false) => format!("-{vars}i"),
            (_, _) => format!("{vars}{root}"),
        }
    }
}

/// Least `n ≥ 0` with `n·a ≡ b (mod 1)`.
fn solve_root_power(a: Rational01, b: Rational01) -> Result<u64> {
    let q = a.den();
    if q % b.den() != 0 {
        return Err(Error::NoSolution);
    }
    if q == 1 {
        return if b.is_zero() { Ok(0) } else { Err(Error::NoSolution) };
    }
    let s = (b.num() * (q / b.den())) as i128;
    let p = a.num() as i128;
    let inv = modinv(p, q as i128);
    Ok(((s * inv).rem_euclid(q as i128)) as u64)
}

fn modinv(a: i128, m: i128) -> i128 {
    let e = a.extended_gcd(&m);
    debug_assert_eq!(e.gcd, 1);
    e.x.rem_euclid(m)
}

pub(crate) fn valid_var(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_lowercase())
        && chars.all(|c| c.is_ascii_lowercase() || c.is_ascii_digit())
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        let mut out = Scalar::root_of_unity(self.root + o.root);
        out.exps = self.exps.clone();
        for (v, e) in &o.exps {
            out = out.with_exp(v, *e);
        }
        out
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, o: Scalar) -> Scalar {
        &self * &o
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.root == Rational01::HALF {
            parts.push("-1".to_string());
        } else if !self.root.is_zero() {
            parts.push(format!("zeta({},{})", self.root.den(), self.root.num()));
        }
        for (v, e) in &self.exps {
            if *e == 1 {
                parts.push(v.clone());
            } else {
                parts.push(format!("{v}^{e}"));
            }
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

struct Cursor<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        })
    }

    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, lit: &str) -> bool {
        if self.s[self.pos..].starts_with(lit.as_bytes()) {
            self.pos += lit.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, lit: &str) -> Result<()> {
        if self.eat(lit) {
            Ok(())
        } else {
            self.err(&format!("expected {lit:?}"))
        }
    }

    fn int(&mut self) -> Result<i64> {
        let start = self.pos;
        if self.peek() == Some(b'-') {
            self.pos += 1;
        }
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        let txt = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
        txt.parse().or_else(|_| {
            self.pos = start;
            self.err("expected integer")
        })
    }

    fn ident(&mut self) -> Option<&'a str> {
        let start = self.pos;
        if !matches!(self.peek(), Some(c) if c.is_ascii_lowercase()) {
            return None;
        }
        while matches!(self.peek(), Some(c) if c.is_ascii_lowercase() || c.is_ascii_digit()) {
            self.pos += 1;
        }
        Some(std::str::from_utf8(&self.s[start..self.pos]).unwrap())
    }
}

/// Parses a `zeta(N,k)` literal at the cursor; shared with the cyclotomic grammar.
pub(crate) fn parse_zeta(s: &str, pos: &mut usize) -> Result<Rational01> {
    let mut c = Cursor { s: s.as_bytes(), pos: *pos };
    c.expect("zeta(")?;
    let n = c.int()?;
    if n <= 0 {
        return c.err("zeta order must be positive");
    }
    c.expect(",")?;
    let k = c.int()?;
    c.expect(")")?;
    *pos = c.pos;
    Ok(Rational01::new(k, n as u64))
}

impl FromStr for Scalar {
    type Err = Error;

    fn from_str(src: &str) -> Result<Scalar> {
        let s: String = src.chars().filter(|c| !c.is_whitespace()).collect();
        let mut c = Cursor { s: s.as_bytes(), pos: 0 };
        let mut out = Scalar::one();
        loop {
            if c.peek() == Some(b'-') || matches!(c.peek(), Some(b'1')) {
                let k = c.int()?;
                match k {
                    -1 => out = out.mul_root(Rational01::HALF),
                    1 => {}
                    _ => return c.err("only 1 and -1 are numeric factors"),
                }
            } else if s[c.pos..].starts_with("zeta(") {
                let mut p = c.pos;
                let r = parse_zeta(&s, &mut p)?;
                c.pos = p;
                out = out.mul_root(r);
            } else if let Some(name) = c.ident() {
                let e = if c.eat("^") { c.int()? } else { 1 };
                out = out.with_exp(name, e);
            } else {
                return c.err("expected factor");
            }
            if c.peek().is_none() {
                return Ok(out);
            }
            c.expect("*")?;
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(x: &str) -> Scalar {
        x.parse().unwrap()
    }

    #[test]
    fn parse_and_emit() {
        let a = s("-1*q^-1");
        assert_eq!(a.root(), Rational01::HALF);
        assert_eq!(a.exponents().get("q"), Some(&-1));
        assert_eq!(a.to_string(), "-1*q^-1");
        assert!(s("q^2*q^-2").is_one());
        assert_eq!(s("q^2*q^-2").to_string(), "1");
        assert_eq!(s("zeta(6,2)").to_string(), "zeta(3,1)");
        assert_eq!(s("r*zeta(4,1)*q").to_string(), "zeta(4,1)*q*r");
        assert_eq!(s("zeta(2,1)"), Scalar::minus_one());
    }

    #[test]
    fn parse_errors_carry_position() {
        match "q*?".parse::<Scalar>() {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 2),
            other => panic!("{other:?}"),
        }
        assert!("zeta(0,1)".parse::<Scalar>().is_err());
        assert!("2".parse::<Scalar>().is_err());
        assert!("Q".parse::<Scalar>().is_err());
    }

    #[test]
    fn orders() {
        assert_eq!(Scalar::one().order_of(), Order::Finite(1));
        assert_eq!(Scalar::minus_one().order_of(), Order::Finite(2));
        assert_eq!(s("zeta(3,1)").order_of(), Order::Finite(3));
        assert_eq!(s("q").order_of(), Order::Infinite);
    }

    #[test]
    fn solve_power_conventions() {
        let m = Scalar::minus_one();
        assert_eq!(m.solve_power(&Scalar::one()), Ok(0));
        assert_eq!(m.solve_power(&m), Ok(1));
        assert_eq!(s("q").solve_power(&s("q^3")), Ok(3));
        assert_eq!(s("q").solve_power(&s("q^-3")), Err(Error::NoSolution));
        assert_eq!(s("-1*q").solve_power(&s("q^2")), Ok(2));
        assert_eq!(s("-1*q").solve_power(&s("-1*q^2")), Err(Error::NoSolution));
        assert_eq!(s("zeta(3,1)").solve_power(&s("q")), Err(Error::NoSolution));
        assert_eq!(s("zeta(6,1)").solve_power(&s("zeta(3,2)")), Ok(4));
        assert_eq!(s("zeta(3,1)").solve_power(&m), Err(Error::NoSolution));
    }

    #[test]
    fn pretty_forms() {
        assert_eq!(s("zeta(3,1)").pretty(), "ω");
        assert_eq!(s("q^-1").pretty(), "q^-1");
        assert_eq!(s("-1*q^-1").pretty(), "-q^-1");
        assert_eq!(s("zeta(3,1)*q^-1").pretty(), "q^-1ω");
        assert_eq!(Scalar::one().pretty(), "1");
    }
}
