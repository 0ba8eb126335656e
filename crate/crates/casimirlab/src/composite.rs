//! Composite sl(N) representations (μ, λ).

use crate::error::{Error, Result};
use crate::exact::{int, lagrange_eval, sign_pow, Rational};
use crate::young::{dim_sl, Partition};
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::fmt;

/// The pair (μ, λ): μ sits on top of the complement of λ's columns.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CompositePair {
    pub upper: Partition,
    pub lower: Partition,
}

impl CompositePair {
    pub fn new(upper: Partition, lower: Partition) -> Self {
        CompositePair { upper, lower }
    }

    /// A pair with |μ| = |λ|, as arises in powers of the adjoint.
    pub fn balanced(upper: Partition, lower: Partition) -> Result<Self> {
        if upper.size() != lower.size() {
            return Err(Error::InvalidLabel(format!("({upper},{lower}) is not balanced")));
        }
        Ok(CompositePair { upper, lower })
    }

    pub fn trivial() -> Self {
        CompositePair::new(Partition::empty(), Partition::empty())
    }

    pub fn adjoint() -> Self {
        CompositePair::new(Partition::of(&[1]), Partition::of(&[1]))
    }

    pub fn is_balanced(&self) -> bool {
        self.upper.size() == self.lower.size()
    }

    pub fn swap(&self) -> Self {
        CompositePair::new(self.lower.clone(), self.upper.clone())
    }

    pub fn transpose(&self) -> Self {
        CompositePair::new(self.upper.transpose(), self.lower.transpose())
    }

    /// Smallest N for which the columns of μ and λ fit into one height-N column.
    pub fn min_n(&self) -> usize {
        (self.upper.len() + self.lower.len()).max(1)
    }

    pub fn to_diagram(&self, n: usize) -> Result<Partition> {
        to_diagram(self, n)
    }
}

impl fmt::Display for CompositePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.upper, self.lower)
    }
}

/// Λ with Λᵀ = [N−λ_r′, …, N−λ₁′, μ₁′, …, μ_s′].
pub fn to_diagram(p: &CompositePair, n: usize) -> Result<Partition> {
    if n < p.min_n() {
        return Err(Error::InsufficientN { given: n as i64, min: p.min_n() as i64 });
    }
    let lam_cols = p.lower.columns();
    let mut cols: Vec<usize> = lam_cols.iter().rev().map(|c| n - c).collect();
    cols.extend(p.upper.columns());
    Ok(Partition::new(cols)?.transpose())
}

/// Dynkin labels d_i = Λ_i − Λ_{i+1}, i = 1..N−1.
pub fn dynkin_labels(p: &CompositePair, n: usize) -> Result<Vec<usize>> {
    let d = to_diagram(p, n)?;
    Ok((0..n - 1).map(|i| d.row(i) - d.row(i + 1)).collect())
}

/// The displayed pattern (μ₁−μ₂, …, μ_q, 0…0, λ_p, …, λ₁−λ₂) read off directly.
pub fn dynkin_labels_direct(p: &CompositePair, n: usize) -> Result<Vec<usize>> {
    if n < p.min_n() {
        return Err(Error::InsufficientN { given: n as i64, min: p.min_n() as i64 });
    }
    let mut d = vec![0usize; n - 1];
    let (mu, lam) = (&p.upper, &p.lower);
    for (i, di) in d.iter_mut().enumerate().take(mu.len()) {
        *di += mu.row(i) - mu.row(i + 1);
    }
    for i in 0..lam.len() {
        d[n - 2 - i] += lam.row(i) - lam.row(i + 1);
    }
    Ok(d)
}

/// dim_sl(N, Λ); zero when N is too small for the pair.
pub fn dim_composite(p: &CompositePair, n: usize) -> Rational {
    match to_diagram(p, n) {
        Ok(d) => dim_sl(n, &d),
        Err(_) => Rational::zero(),
    }
}

/// dim(μ,λ) as the polynomial in N of degree |μ|+|λ| that the column formula defines for
/// large N, evaluated at any integer N. Below `min_n` it takes the values (possibly zero or
/// negative) that the N-dependent dimension formula continues to.
pub fn dim_composite_formal(p: &CompositePair, n: i64) -> Rational {
    let start = p.min_n().max(1);
    if n >= start as i64 {
        return dim_composite(p, n as usize);
    }
    let samples: Vec<usize> = (start..=start + p.upper.size() + p.lower.size()).collect();
    interpolate(p, &samples, n)
}

/// Polynomial in N through `samples`, evaluated at `at`.
fn interpolate(p: &CompositePair, samples: &[usize], at: i64) -> Rational {
    let xs: Vec<Rational> = samples.iter().map(|&n| int(n as i64)).collect();
    let ys: Vec<Rational> = samples.iter().map(|&n| dim_composite(p, n)).collect();
    lagrange_eval(&xs, &ys, &int(at))
}

/// Checks the N → −N dualities as polynomial identities in N.
///
/// Always checks dim(μ,λ)(−N) = (−1)^{|λ|+|μ|} dim(λᵀ,μᵀ)(N); for balanced pairs
/// also dim(μ,λ)(−N) = dim(μᵀ,λᵀ)(N).
pub fn check_duality(p: &CompositePair, n_range: &[usize]) -> Result<bool> {
    let min = p.min_n().max(p.transpose().min_n());
    let samples: Vec<usize> = n_range.iter().copied().filter(|&n| n >= min).collect();
    let required = p.upper.size() + p.lower.size() + 1;
    if samples.len() < required {
        return Err(Error::InsufficientSamples { required, given: samples.len() });
    }
    let signed_partner = CompositePair::new(p.lower.transpose(), p.upper.transpose());
    let sign = sign_pow(p.upper.size() + p.lower.size());
    for &n in &samples {
        let lhs = interpolate(p, &samples, -(n as i64));
        if lhs != &sign * dim_composite(&signed_partner, n) {
            return Ok(false);
        }
        if p.is_balanced() && lhs != dim_composite(&p.transpose(), n) {
            return Ok(false);
        }
    }
    Ok(true)
}
