//! Quadratic Casimir eigenvalues of classical-series irreps and split-Casimir eigenvalues.

use crate::composite::CompositePair;
use crate::error::{Error, Result};
use crate::exact::{int, q, Rational};
use crate::young::Partition;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    SL,
    SO,
    SP,
    G2,
    F4,
    E6,
    E7,
    E8,
}

impl Family {
    pub const ALL: [Family; 8] = [Family::SL, Family::SO, Family::SP, Family::G2, Family::F4, Family::E6, Family::E7, Family::E8];

    pub fn is_classical(self) -> bool {
        matches!(self, Family::SL | Family::SO | Family::SP)
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::SL => "sl",
            Family::SO => "so",
            Family::SP => "sp",
            Family::G2 => "g2",
            Family::F4 => "f4",
            Family::E6 => "e6",
            Family::E7 => "e7",
            Family::E8 => "e8",
        }
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::InvalidAlgebra(format!("unknown family {s:?}")))
    }
}

/// A simple Lie algebra: a classical series member with its N, or an exceptional algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AlgebraId {
    family: Family,
    n: Option<u32>,
}

impl AlgebraId {
    pub fn new(family: Family, n: Option<u32>) -> Result<Self> {
        match (family, n) {
            (Family::SL, Some(n)) if n >= 2 => {}
            (Family::SO, Some(n)) if n >= 5 => {}
            (Family::SP, Some(n)) if n >= 2 && n % 2 == 0 => {}
            (f, None) if !f.is_classical() => {}
            (f, Some(_)) if !f.is_classical() => {
                return Err(Error::InvalidAlgebra(format!("{} takes no N", f.name())))
            }
            (f, n) => {
                let rule = match f {
                    Family::SL => "N >= 2",
                    Family::SO => "N >= 5",
                    _ => "even N >= 2",
                };
                return Err(Error::InvalidAlgebra(format!("{}({}) needs {rule}", f.name(), n.map_or("?".into(), |n| n.to_string()))));
            }
        }
        Ok(AlgebraId { family, n })
    }

    pub fn sl(n: u32) -> Result<Self> {
        Self::new(Family::SL, Some(n))
    }
    pub fn so(n: u32) -> Result<Self> {
        Self::new(Family::SO, Some(n))
    }
    pub fn sp(n: u32) -> Result<Self> {
        Self::new(Family::SP, Some(n))
    }
    pub fn exceptional(f: Family) -> Result<Self> {
        Self::new(f, None)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// N for classical algebras.
    pub fn n(&self) -> Option<u32> {
        self.n
    }

    pub fn is_classical(&self) -> bool {
        self.family.is_classical()
    }

    pub fn rank(&self) -> usize {
        match (self.family, self.n) {
            (Family::SL, Some(n)) => n as usize - 1,
            (Family::SO | Family::SP, Some(n)) => n as usize / 2,
            (Family::G2, _) => 2,
            (Family::F4, _) => 4,
            (Family::E6, _) => 6,
            (Family::E7, _) => 7,
            (Family::E8, _) => 8,
            _ => unreachable!("classical algebra without N"),
        }
    }

    pub(crate) fn big_n(&self) -> usize {
        self.n.expect("classical algebra") as usize
    }
}

impl fmt::Display for AlgebraId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.n {
            Some(n) => write!(f, "{}({})", self.family.name(), n),
            None => write!(f, "{}", self.family.name()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CasimirValue {
    #[serde(with = "crate::exact::serde_str")]
    pub raw: Rational,
    #[serde(with = "crate::exact::serde_str")]
    pub normalized: Rational,
}

impl CasimirValue {
    pub fn new(raw: Rational, adjoint: &Rational) -> Self {
        let normalized = &raw / adjoint;
        CasimirValue { raw, normalized }
    }
}

fn weighted_rows(p: &Partition) -> (i64, i64, i64) {
    let mut sq = 0;
    let mut lin = 0;
    for (i, &r) in p.rows().iter().enumerate() {
        let r = r as i64;
        sq += r * r;
        lin += (i as i64 + 1) * r;
    }
    (sq, lin, p.size() as i64)
}

/// Σλ_ℓ² − 2Σℓλ_ℓ + (N+1)|λ| − |λ|²/N.
pub fn casimir_sl_rows(n: usize, p: &Partition) -> Rational {
    let (sq, lin, size) = weighted_rows(p);
    let n = n as i64;
    int(sq - 2 * lin + (n + 1) * size) - q(size * size, n)
}

/// −Σa_ℓ² + 2Σℓa_ℓ + (N−1)|λ| − |λ|²/N over the column heights a_ℓ.
pub fn casimir_sl_columns(n: usize, p: &Partition) -> Rational {
    let (sq, lin, size) = weighted_rows(&p.transpose());
    let n = n as i64;
    int(-sq + 2 * lin + (n - 1) * size) - q(size * size, n)
}

pub fn casimir_sl(n: usize, p: &Partition) -> Result<CasimirValue> {
    if n < 2 {
        return Err(Error::InvalidAlgebra(format!("sl({n})")));
    }
    if p.len() > n {
        return Err(Error::InvalidLabel(format!("{p} has more than {n} rows")));
    }
    let raw = casimir_sl_rows(n, p);
    debug_assert_eq!(raw, casimir_sl_columns(n, p));
    Ok(CasimirValue::new(raw, &int(2 * n as i64)))
}

pub fn casimir_sl_composite(n: usize, p: &CompositePair) -> Result<CasimirValue> {
    casimir_sl(n, &p.to_diagram(n)?)
}

/// Σ(λ_ℓ² + λ_ℓ(N − 2ℓ)), normalized by 2(N−2).
pub fn casimir_so(n: usize, p: &Partition) -> Result<CasimirValue> {
    if n < 5 {
        return Err(Error::InvalidAlgebra(format!("so({n})")));
    }
    if p.len() > n / 2 {
        return Err(Error::InvalidLabel(format!("{p} has more than {} rows", n / 2)));
    }
    let n = n as i64;
    let raw: i64 = p.rows().iter().enumerate().map(|(i, &r)| {
        let (r, l) = (r as i64, i as i64 + 1);
        r * r + r * (n - 2 * l)
    }).sum();
    Ok(CasimirValue::new(int(raw), &int(2 * (n - 2))))
}

/// ½Σ(λ_ℓ² + λ_ℓ(N + 2 − 2ℓ)), normalized by N+2.
pub fn casimir_sp(n: usize, p: &Partition) -> Result<CasimirValue> {
    if n < 2 || n % 2 == 1 {
        return Err(Error::InvalidAlgebra(format!("sp({n}) needs even N")));
    }
    if p.len() > n / 2 {
        return Err(Error::InvalidLabel(format!("{p} has more than {} rows", n / 2)));
    }
    let n = n as i64;
    let twice: i64 = p.rows().iter().enumerate().map(|(i, &r)| {
        let (r, l) = (r as i64, i as i64 + 1);
        r * r + r * (n + 2 - 2 * l)
    }).sum();
    Ok(CasimirValue::new(q(twice, 2), &int(n + 2)))
}

/// ½(c₂(Λ) − Σ c₂(Λᵢ)) on normalized values.
pub fn split_eigenvalue(total: &CasimirValue, parts: &[CasimirValue]) -> Rational {
    let s: Rational = parts.iter().map(|p| p.normalized.clone()).sum();
    (&total.normalized - s) / int(2)
}

/// Normalized value of the trivial representation, for symmetry of call sites.
pub fn trivial() -> CasimirValue {
    CasimirValue { raw: Rational::zero(), normalized: Rational::zero() }
}

pub fn adjoint_normalized() -> Rational {
    Rational::one()
}
