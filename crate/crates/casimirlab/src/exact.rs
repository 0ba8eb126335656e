//! Exact rationals and q-numbers.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serializer};

pub type Rational = BigRational;

pub fn rat(num: i64, den: i64) -> Result<Rational> {
    if den == 0 {
        return Err(Error::ZeroDenominator);
    }
    Ok(Rational::new(BigInt::from(num), BigInt::from(den)))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for literals known to have a nonzero denominator.
pub fn q(num: i64, den: i64) -> Rational {
    rat(num, den).expect("nonzero denominator")
}

/// Always "num/den", including integers ("5/1").
pub fn to_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// "num/den" for fractions, bare "num" for integers.
pub fn to_short_string(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        to_string(r)
    }
}

pub fn to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

pub fn parse(s: &str) -> Result<Rational> {
    let t = s.trim().replace('\u{2212}', "-");
    let bad = |m: &str| Error::Parse { pos: 0, msg: format!("{m}: {s:?}") };
    match t.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad("bad numerator"))?;
            let d: BigInt = d.trim().parse().map_err(|_| bad("bad denominator"))?;
            if d.is_zero() {
                return Err(Error::ZeroDenominator);
            }
            Ok(Rational::new(n, d))
        }
        None => {
            let n: BigInt = t.parse().map_err(|_| bad("bad integer"))?;
            Ok(Rational::from_integer(n))
        }
    }
}

pub fn pow(r: &Rational, e: u32) -> Rational {
    num_traits::pow(r.clone(), e as usize)
}

/// Integer power allowing negative exponents; `r` must be nonzero when `e < 0`.
pub fn powi(r: &Rational, e: i64) -> Rational {
    if e >= 0 {
        pow(r, e as u32)
    } else {
        pow(&r.recip(), (-e) as u32)
    }
}

pub fn sign_pow(e: usize) -> Rational {
    if e.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// a!/b! for integers that may be negative in the formal sense:
/// the product (b+1)(b+2)...a, or its reciprocal when a < b.
pub fn factorial_ratio(a: i64, b: i64) -> Rational {
    if a >= b {
        Rational::from_integer(((b + 1)..=a).fold(BigInt::one(), |acc, j| acc * BigInt::from(j)))
    } else {
        let d = ((a + 1)..=b).fold(BigInt::one(), |acc, j| acc * BigInt::from(j));
        if d.is_zero() {
            // formal pole; callers guard against this
            Rational::zero()
        } else {
            Rational::from_integer(d).recip()
        }
    }
}

/// Exact evaluation of the polynomial through `(xs[i], ys[i])` at `x`.
pub fn lagrange_eval(xs: &[Rational], ys: &[Rational], x: &Rational) -> Rational {
    let mut acc = Rational::zero();
    for (i, (xi, yi)) in xs.iter().zip(ys).enumerate() {
        let mut term = yi.clone();
        for (j, xj) in xs.iter().enumerate() {
            if i != j {
                term = term * (x - xj) / (xi - xj);
            }
        }
        acc += term;
    }
    acc
}

/// Evaluation point for q-numbers.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QPoint {
    q: Rational,
}

impl QPoint {
    pub fn new(q: Rational) -> Result<Self> {
        if q.is_zero() {
            return Err(Error::ZeroQ);
        }
        Ok(QPoint { q })
    }

    pub fn one() -> Self {
        QPoint { q: Rational::one() }
    }

    pub fn value(&self) -> &Rational {
        &self.q
    }

    pub fn inverse(&self) -> Self {
        QPoint { q: self.q.recip() }
    }
}

/// [A]_q = q^{A-1} + q^{A-3} + ... + q^{1-A}, with [-A]_q = -[A]_q.
pub fn qnum(a: i64, at: &QPoint) -> Rational {
    if a < 0 {
        return -qnum(-a, at);
    }
    let q = at.value();
    let mut acc = Rational::zero();
    let mut e = a - 1;
    while e >= 1 - a {
        acc += powi(q, e);
        e -= 2;
    }
    acc
}

pub fn is_negative(r: &Rational) -> bool {
    r.is_negative()
}

pub mod serde_str {
    use super::*;

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&to_string(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rational, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            S(String),
            I(i64),
        }
        match Raw::deserialize(d)? {
            Raw::S(s) => parse(&s).map_err(serde::de::Error::custom),
            Raw::I(i) => Ok(int(i)),
        }
    }
}
