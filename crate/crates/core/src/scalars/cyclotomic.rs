use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::scalar::parse_zeta;
use super::Rational01;
use crate::error::{Error, Result};

/// Reduction data for one conductor: `Φ_n` and the remainders of `x^k mod Φ_n`.
struct FieldData {
    degree: usize,
    /// `powers[k]` = coefficients of `x^k mod Φ_n` for `0 ≤ k < n`.
    powers: Vec<Vec<i64>>,
}

fn field(n: u64) -> Arc<FieldData> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<FieldData>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(f) = cache.lock().unwrap().get(&n) {
        return f.clone();
    }
    let phi = cyclotomic_polynomial(n);
    let degree = phi.len() - 1;
    let mut powers = Vec::with_capacity(n as usize);
    let mut cur = vec![0i64; degree.max(1)];
    cur[0] = 1;
    if degree == 0 {
        unreachable!("cyclotomic polynomials have positive degree");
    }
    for _ in 0..n {
        powers.push(cur.clone());
        // multiply by x, reduce the overflow with the monic Φ_n
        let top = cur[degree - 1];
        for j in (1..degree).rev() {
            cur[j] = cur[j - 1];
        }
        cur[0] = 0;
        if top != 0 {
            for j in 0..degree {
                cur[j] -= top * phi[j];
            }
        }
    }
    let f = Arc::new(FieldData { degree, powers });
    cache.lock().unwrap().insert(n, f.clone());
    f
}

/// Integer coefficients of the n-th cyclotomic polynomial, lowest degree first.
pub fn cyclotomic_polynomial(n: u64) -> Vec<i64> {
    assert!(n > 0);
    let mut p = vec![0i64; n as usize + 1];
    p[0] = -1;
    p[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            p = exact_div(&p, &cyclotomic_polynomial(d));
        }
    }
    p
}

fn exact_div(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut r = num.to_vec();
    let dd = den.len() - 1;
    let qd = r.len() - 1 - dd;
    let mut q = vec![0i64; qd + 1];
    for k in (0..=qd).rev() {
        let c = r[k + dd];
        q[k] = c;
        for j in 0..=dd {
            r[k + j] -= c * den[j];
        }
    }
    debug_assert!(r.iter().all(|&c| c == 0));
    q
}

/// An element of `Q(ζ_n)`, stored in the power basis modulo `Φ_n`, so equality is exact.
#[derive(Clone)]
pub struct Cyclotomic {
    n: u64,
    coeffs: Vec<BigRational>,
}

impl Cyclotomic {
    pub fn zero(n: u64) -> Self {
        let d = field(n).degree;
        Cyclotomic {
            n,
            coeffs: vec![BigRational::zero(); d],
        }
    }

    pub fn one(n: u64) -> Self {
        Cyclotomic::from_rational(n, BigRational::one())
    }

    pub fn from_int(n: u64, k: i64) -> Self {
        Cyclotomic::from_rational(n, BigRational::from_integer(k.into()))
    }

    pub fn from_rational(n: u64, r: BigRational) -> Self {
        let mut z = Cyclotomic::zero(n);
        z.coeffs[0] = r;
        z
    }

    /// The root of unity `exp(2πi·r)` inside `Q(ζ_n)`; `r`'s denominator must divide `n`.
    pub fn embed(r: Rational01, n: u64) -> Result<Self> {
        if n % r.den() != 0 {
            return Err(Error::Domain(format!(
                "root of order {} does not live in conductor {n}",
                r.den()
            )));
        }
        let k = (r.num() * (n / r.den())) as usize;
        let f = field(n);
        Ok(Cyclotomic {
            n,
            coeffs: f.powers[k].iter().map(|&c| int(c)).collect(),
        })
    }

    pub fn conductor(&self) -> u64 {
        self.n
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// Re-expresses `self` in `Q(ζ_m)`; `m` must be a multiple of the conductor.
    pub fn lift(&self, m: u64) -> Self {
        if m == self.n {
            return self.clone();
        }
        assert!(m % self.n == 0, "cannot lift conductor {} to {m}", self.n);
        let step = (m / self.n) as usize;
        let f = field(m);
        let mut out = vec![BigRational::zero(); f.degree];
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (t, &p) in f.powers[j * step].iter().enumerate() {
                if p != 0 {
                    out[t] += c * int(p);
                }
            }
        }
        Cyclotomic { n: m, coeffs: out }
    }

    fn common(a: &Self, b: &Self) -> (Self, Self) {
        if a.n == b.n {
            return (a.clone(), b.clone());
        }
        let m = a.n.lcm(&b.n);
        (a.lift(m), b.lift(m))
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        Cyclotomic {
            n: self.n,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    fn mul_same(&self, o: &Self) -> Self {
        debug_assert_eq!(self.n, o.n);
        if self.is_rational() {
            return o.scale(&self.coeffs[0]);
        }
        if o.is_rational() {
            return self.scale(&o.coeffs[0]);
        }
        let f = field(self.n);
        let d = f.degree;
        let mut prod = vec![BigRational::zero(); 2 * d - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        let mut out: Vec<BigRational> = prod[..d].to_vec();
        let n = self.n as usize;
        for (k, c) in prod.iter().enumerate().skip(d) {
            if c.is_zero() {
                continue;
            }
            for (t, &p) in f.powers[k % n].iter().enumerate() {
                if p != 0 {
                    out[t] += c * int(p);
                }
            }
        }
        Cyclotomic { n: self.n, coeffs: out }
    }

    /// Multiplicative inverse via a linear solve against the multiplication matrix.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_rational() {
            return Ok(Cyclotomic::from_rational(self.n, self.coeffs[0].recip()));
        }
        let f = field(self.n);
        let d = f.degree;
        // column j = self · x^j
        let mut cols = Vec::with_capacity(d);
        let mut basis = Cyclotomic::zero(self.n);
        for j in 0..d {
            basis.coeffs.iter_mut().for_each(|c| *c = BigRational::zero());
            basis.coeffs[0] = BigRational::one();
            let xj = Cyclotomic {
                n: self.n,
                coeffs: f.powers[j].iter().map(|&c| int(c)).collect(),
            };
            cols.push(self.mul_same(&xj).coeffs);
        }
        let mut m: Vec<Vec<BigRational>> = (0..d)
            .map(|r| {
                let mut row: Vec<BigRational> = (0..d).map(|c| cols[c][r].clone()).collect();
                row.push(if r == 0 { BigRational::one() } else { BigRational::zero() });
                row
            })
            .collect();
        for col in 0..d {
            let piv = (col..d).find(|&r| !m[r][col].is_zero()).ok_or(Error::DivisionByZero)?;
            m.swap(col, piv);
            let pv = m[col][col].clone();
            for c in col..=d {
                m[col][c] = &m[col][c] / &pv;
            }
            for r in 0..d {
                if r != col && !m[r][col].is_zero() {
                    let fct = m[r][col].clone();
                    for c in col..=d {
                        let v = &m[col][c] * &fct;
                        m[r][c] -= v;
                    }
                }
            }
        }
        Ok(Cyclotomic {
            n: self.n,
            coeffs: m.into_iter().map(|row| row[d].clone()).collect(),
        })
    }

    pub fn pow(&self, k: u64) -> Self {
        let mut out = Cyclotomic::one(self.n);
        for _ in 0..k {
            out = out.mul_same(self);
        }
        out
    }

    /// Numerical value, for cross-checks.
    pub fn to_complex(&self) -> (f64, f64) {
        let mut re = 0.0;
        let mut im = 0.0;
        for (j, c) in self.coeffs.iter().enumerate() {
            let v = ratio_f64(c);
            let ang = 2.0 * std::f64::consts::PI * j as f64 / self.n as f64;
            re += v * ang.cos();
            im += v * ang.sin();
        }
        (re, im)
    }

    /// Parses `term (+ term)*` with `term := rational ("*" zeta(N,k))? | zeta(N,k)`.
    pub fn parse(src: &str) -> Result<Self> {
        let s: String = src.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse { pos: 0, msg: "empty coefficient".into() });
        }
        let mut acc = Cyclotomic::zero(1);
        let mut pos = 0;
        for term in s.split('+') {
            let start = pos;
            let (coef, zeta) = if let Some(i) = term.find("zeta(") {
                let c = term[..i].trim_end_matches('*');
                let mut p = i;
                let r = parse_zeta(term, &mut p).map_err(|e| shift(e, start))?;
                if p != term.len() {
                    return Err(Error::Parse { pos: start + p, msg: "trailing input".into() });
                }
                let c = match c {
                    "" => BigRational::one(),
                    "-" => -BigRational::one(),
                    c => parse_rational(c).ok_or(Error::Parse { pos: start, msg: "bad coefficient".into() })?,
                };
                (c, r)
            } else {
                let c = parse_rational(term).ok_or(Error::Parse { pos: start, msg: "bad coefficient".into() })?;
                (c, Rational01::ZERO)
            };
            let t = Cyclotomic::embed(zeta, zeta.den())?.scale(&coef);
            acc = &acc + &t;
            pos += term.len() + 1;
        }
        Ok(acc)
    }
}

fn shift(e: Error, by: usize) -> Error {
    match e {
        Error::Parse { pos, msg } => Error::Parse { pos: pos + by, msg },
        e => e,
    }
}

fn parse_rational(s: &str) -> Option<BigRational> {
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.parse().ok()?;
            let d: BigInt = d.parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(BigRational::new(n, d))
            }
        }
        None => Some(BigRational::from_integer(s.parse().ok()?)),
    }
}

fn ratio_f64(r: &BigRational) -> f64 {
    let n: f64 = r.numer().to_string().parse().unwrap_or(f64::NAN);
    let d: f64 = r.denom().to_string().parse().unwrap_or(f64::NAN);
    n / d
}

fn int(c: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(c))
}

impl PartialEq for Cyclotomic {
    fn eq(&self, o: &Self) -> bool {
        if self.n == o.n {
            return self.coeffs == o.coeffs;
        }
        let (a, b) = Cyclotomic::common(self, o);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyclotomic {}

impl Add for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, o: &Cyclotomic) -> Cyclotomic {
        if self.n != o.n {
            let (a, b) = Cyclotomic::common(self, o);
            return &a + &b;
        }
        Cyclotomic {
            n: self.n,
            coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, o: &Cyclotomic) -> Cyclotomic {
        self + &(-o)
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            n: self.n,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, o: &Cyclotomic) -> Cyclotomic {
        if self.n != o.n {
            let (a, b) = Cyclotomic::common(self, o);
            return a.mul_same(&b);
        }
        self.mul_same(o)
    }
}

macro_rules! owned_ops {
    ($tr:ident, $f:ident) => {
        impl $tr for Cyclotomic {
            type Output = Cyclotomic;
            fn $f(self, o: Cyclotomic) -> Cyclotomic {
                (&self).$f(&o)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if k == 0 {
                terms.push(c.to_string());
                continue;
            }
            let z = format!("zeta({},{})", self.n, k);
            if c.is_one() {
                terms.push(z);
            } else if c.is_negative() && (-c).is_one() {
                terms.push(format!("-{z}"));
            } else {
                terms.push(format!("{c}*{z}"));
            }
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for Cyclotomic {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Cyclotomic {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        Cyclotomic::parse(&s).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(2), vec![1, 1]);
        assert_eq!(cyclotomic_polynomial(3), vec![1, 1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn roots_sum_to_zero() {
        for n in [3u64, 5, 7, 12] {
            let mut acc = Cyclotomic::zero(n);
            for k in 0..n {
                acc = &acc + &Cyclotomic::embed(Rational01::new(k as i64, n), n).unwrap();
            }
            assert!(acc.is_zero(), "n = {n}");
        }
    }

    #[test]
    fn mixed_conductors() {
        let w = Cyclotomic::embed(Rational01::new(1, 3), 3).unwrap();
        let i = Cyclotomic::embed(Rational01::new(1, 4), 4).unwrap();
        let z12 = Cyclotomic::embed(Rational01::new(7, 12), 12).unwrap();
        assert_eq!(&w * &i, z12);
        let minus = Cyclotomic::from_int(1, -1);
        assert_eq!(&i * &i, minus);
    }

    #[test]
    fn products_of_roots_for_every_small_conductor() {
        for n in 1..=30u64 {
            let a = Cyclotomic::embed(Rational01::new(n as i64 - 1, n), n).unwrap();
            let sum = &a + &Cyclotomic::one(n);
            for k in 0..n as i64 {
                let z = Cyclotomic::embed(Rational01::new(k, n), n).unwrap();
                let expect = Cyclotomic::embed(Rational01::new(k + n as i64 - 1, n), n).unwrap();
                assert_eq!(&a * &z, expect, "n = {n}, k = {k}");
                assert_eq!(&sum * &z, &expect + &z, "n = {n}, k = {k}");
            }
        }
    }

    #[test]
    fn inverse() {
        let w = Cyclotomic::embed(Rational01::new(1, 3), 3).unwrap();
        let a = &Cyclotomic::one(3) + &w;
        let b = a.inv().unwrap();
        assert!((&a * &b).is_one());
        assert_eq!(Cyclotomic::zero(5).inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn text_round_trip() {
        let w = Cyclotomic::embed(Rational01::new(2, 3), 3).unwrap();
        assert_eq!(w.to_string(), "-1 + -zeta(3,1)");
        let back = Cyclotomic::parse(&w.to_string()).unwrap();
        assert_eq!(back, w);
        assert_eq!(Cyclotomic::parse("1/2*zeta(4,1)").unwrap().to_string(), "1/2*zeta(4,1)");
        assert!(Cyclotomic::parse("").is_err());
    }
}
