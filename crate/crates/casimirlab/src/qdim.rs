//! q-deformed dimensions for the sl(N) □⊗Y_n branching and the two q-number
//! identities behind it.
//!
//! [A]_q = (q^A − q^{−A})/(q − q^{−1}). An identity between sums of products of
//! q-numbers is checked as a Laurent-polynomial identity: after clearing
//! denominators every term has exponents in [−d, d], so agreement at 2d+1 distinct
//! nonzero rational points proves it.

use crate::error::{Error, Result};
use crate::exact::{qnum, QPoint, Rational};
use crate::young::{self, Partition};
use num_traits::{One, Zero};
use serde::Serialize;
use std::collections::BTreeSet;

/// ∏[num]_q / ∏[den]_q.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QDimExpr {
    pub num: Vec<i64>,
    pub den: Vec<i64>,
}

/// Largest exponent of the Laurent polynomial [A]_q.
fn span(a: i64) -> i64 {
    (a.abs() - 1).max(0)
}

impl QDimExpr {
    pub fn new(num: Vec<i64>, den: Vec<i64>) -> Self {
        QDimExpr { num, den }
    }

    pub fn eval(&self, at: &QPoint) -> Result<Rational> {
        let mut r = Rational::one();
        for &a in &self.num {
            r *= qnum(a, at);
        }
        for &a in &self.den {
            let d = qnum(a, at);
            if d.is_zero() {
                return Err(Error::VanishingDenominator(format!("[{a}]_q at q = {}", at.value())));
            }
            r /= d;
        }
        Ok(r)
    }

    /// The q → 1 value ∏ num / ∏ den.
    pub fn classical(&self) -> Result<Rational> {
        self.eval(&QPoint::one())
    }

    pub fn times(&self, o: &QDimExpr) -> QDimExpr {
        QDimExpr {
            num: self.num.iter().chain(&o.num).copied().collect(),
            den: self.den.iter().chain(&o.den).copied().collect(),
        }
    }
}

/// Σ lhs = Σ rhs with every term a [`QDimExpr`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QIdentity {
    pub lhs: Vec<QDimExpr>,
    pub rhs: Vec<QDimExpr>,
}

impl QIdentity {
    /// d such that, after multiplying through by every denominator, all terms have
    /// exponents in [−d, d].
    pub fn half_degree(&self) -> i64 {
        let all_den: i64 = self.lhs.iter().chain(&self.rhs).flat_map(|t| t.den.iter()).map(|&a| span(a)).sum();
        self.lhs
            .iter()
            .chain(&self.rhs)
            .map(|t| {
                let own_den: i64 = t.den.iter().map(|&a| span(a)).sum();
                t.num.iter().map(|&a| span(a)).sum::<i64>() + all_den - own_den
            })
            .max()
            .unwrap_or(0)
    }

    /// Degree of q^d times the cleared difference: 2d.
    pub fn degree_bound(&self) -> usize {
        2 * self.half_degree() as usize
    }

    pub fn required_samples(&self) -> usize {
        self.degree_bound() + 1
    }

    /// Both sides at one point.
    pub fn sides_at(&self, at: &QPoint) -> Result<(Rational, Rational)> {
        let sum = |terms: &[QDimExpr]| -> Result<Rational> {
            let mut acc = Rational::zero();
            for t in terms {
                acc += t.eval(at)?;
            }
            Ok(acc)
        };
        Ok((sum(&self.lhs)?, sum(&self.rhs)?))
    }

    pub fn holds_at(&self, at: &QPoint) -> Result<bool> {
        let (l, r) = self.sides_at(at)?;
        Ok(l == r)
    }

    /// Pointwise agreement at every sample, without the sample-count requirement.
    pub fn holds_at_all(&self, samples: &[QPoint]) -> Result<bool> {
        for q in samples {
            if !self.holds_at(q)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Agreement at enough distinct samples to establish the Laurent identity.
    pub fn verify(&self, samples: &[QPoint]) -> Result<bool> {
        let distinct: BTreeSet<&Rational> = samples.iter().map(|q| q.value()).collect();
        let required = self.required_samples();
        if distinct.len() < required {
            return Err(Error::InsufficientSamples { required, given: distinct.len() });
        }
        self.holds_at_all(samples)
    }
}

/// `count` distinct nonzero rational points: 1, 2, 1/2, 3, 1/3, 3/2, 2/3, …
pub fn sample_points(count: usize) -> Vec<QPoint> {
    let mut out = Vec::with_capacity(count);
    let mut seen = BTreeSet::new();
    let mut s = 2i64;
    'outer: loop {
        for a in 1..s {
            let b = s - a;
            if num_integer::gcd(a, b) != 1 {
                continue;
            }
            let q = Rational::new(a.into(), b.into());
            if seen.insert(q.clone()) {
                out.push(QPoint::new(q).expect("nonzero"));
                if out.len() == count {
                    break 'outer;
                }
            }
        }
        s += 1;
    }
    out
}

fn check_sl(big_n: usize, n: usize) -> Result<()> {
    if big_n < 2 {
        return Err(Error::InsufficientN { given: big_n as i64, min: 2 });
    }
    if n == 0 {
        return Err(Error::OutOfRange("n must be at least 1".into()));
    }
    Ok(())
}

/// The three q-ratios dim_q(part)/dim_q(Y_n) of the sl(N) branching □⊗Y_n, for the
/// parts [2n+1, n^{N−2}], [2n, n+1, n^{N−3}] and [2n−1, (n−1)^{N−2}].
pub fn branch_ratio(big_n: usize, n: usize, part: usize) -> Result<QDimExpr> {
    check_sl(big_n, n)?;
    let (nn, n) = (big_n as i64, n as i64);
    match part {
        1 => Ok(QDimExpr::new(vec![nn + 2 * n, nn + n - 1], vec![nn + 2 * n - 1, n + 1])),
        2 => Ok(QDimExpr::new(vec![nn + n - 1, n, nn - 2], vec![n + 1, nn + n - 2])),
        3 => Ok(QDimExpr::new(vec![nn + 2 * n - 2, n], vec![nn + n - 2, nn + 2 * n - 1])),
        _ => Err(Error::OutOfRange(format!("part must be 1, 2 or 3, got {part}"))),
    }
}

/// Diagram of Y_n in sl(N): [2n, n^{N−2}].
pub fn yn_diagram(big_n: usize, n: usize) -> Partition {
    let mut rows = vec![2 * n];
    rows.extend(std::iter::repeat_n(n, big_n.saturating_sub(2)));
    Partition::new(rows).expect("weakly decreasing")
}

/// q-hook-content form ∏ [N + content]_q / [hook]_q over the cells of λ.
pub fn hook_content(big_n: usize, p: &Partition) -> QDimExpr {
    let mut num = Vec::new();
    let mut den = Vec::new();
    for (i, j) in p.cells() {
        num.push(big_n as i64 + j as i64 - i as i64);
        den.push(p.hook(i, j) as i64);
    }
    QDimExpr::new(num, den)
}

/// dim_q Y_n (normalization constant c = 0).
pub fn qdim_yn(big_n: usize, n: usize, at: &QPoint) -> Result<Rational> {
    check_sl(big_n, n)?;
    hook_content(big_n, &yn_diagram(big_n, n)).eval(at)
}

/// q-dimension of one part of □⊗Y_n: the q-ratio times dim_q Y_n.
pub fn qdim_branch(big_n: usize, n: usize, part: usize, at: &QPoint) -> Result<Rational> {
    let ratio = branch_ratio(big_n, n, part)?;
    Ok(ratio.eval(at)? * qdim_yn(big_n, n, at)?)
}

/// The diagram of each part, for comparison with classical dimensions. Part 2 needs
/// a third row and does not occur for N = 2 (its q-ratio carries the factor [N−2]_q).
pub fn branch_diagram(big_n: usize, n: usize, part: usize) -> Result<Option<Partition>> {
    check_sl(big_n, n)?;
    if part == 2 && big_n == 2 {
        return Ok(None);
    }
    let rest = big_n.saturating_sub(2);
    let rows: Vec<usize> = match part {
        1 => std::iter::once(2 * n + 1).chain(std::iter::repeat_n(n, rest)).collect(),
        2 => std::iter::once(2 * n)
            .chain(std::iter::once(n + 1))
            .chain(std::iter::repeat_n(n, big_n.saturating_sub(3)))
            .collect(),
        3 => std::iter::once(2 * n - 1).chain(std::iter::repeat_n(n - 1, rest)).collect(),
        _ => return Err(Error::OutOfRange(format!("part must be 1, 2 or 3, got {part}"))),
    };
    Partition::new(rows).map(Some)
}

/// Classical sl(N) dimension of a part (0 when the part does not occur).
pub fn classical_part_dim(big_n: usize, n: usize, part: usize) -> Result<Rational> {
    Ok(match branch_diagram(big_n, n, part)? {
        Some(p) => young::dim_sl(big_n, &p),
        None => Rational::zero(),
    })
}

/// [N]_q = Σ of the three branch ratios.
pub fn q_identity_1(big_n: usize, n: usize) -> Result<QIdentity> {
    Ok(QIdentity {
        lhs: vec![QDimExpr::new(vec![big_n as i64], vec![])],
        rhs: (1..=3).map(|p| branch_ratio(big_n, n, p)).collect::<Result<_>>()?,
    })
}

/// [N+M]_q [M+1]_q [N+1]_q = [N]_q [N+1]_q + [N+M+2]_q [M]_q [N]_q + [M]_q [M+1]_q.
pub fn q_identity_2(big_n: i64, m: i64) -> QIdentity {
    let t = |v: Vec<i64>| QDimExpr::new(v, vec![]);
    QIdentity {
        lhs: vec![t(vec![big_n + m, m + 1, big_n + 1])],
        rhs: vec![t(vec![big_n, big_n + 1]), t(vec![big_n + m + 2, m, big_n]), t(vec![m, m + 1])],
    }
}

pub fn verify_q_identity_1(big_n: usize, n: usize, samples: &[QPoint]) -> Result<bool> {
    q_identity_1(big_n, n)?.verify(samples)
}

/// Also checks that both sides are unchanged under N ↔ M at every sample.
pub fn verify_q_identity_2(big_n: i64, m: i64, samples: &[QPoint]) -> Result<bool> {
    let id = q_identity_2(big_n, m);
    if !id.verify(samples)? {
        return Ok(false);
    }
    let swapped = q_identity_2(m, big_n);
    for q in samples {
        if id.sides_at(q)? != swapped.sides_at(q)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// dim_q Y_n through the q-hook-content product agrees with the classical sl(N) value at q = 1.
pub fn classical_check(big_n: usize, n: usize) -> Result<bool> {
    let one = QPoint::one();
    if qdim_yn(big_n, n, &one)? != young::dim_sl(big_n, &yn_diagram(big_n, n)) {
        return Ok(false);
    }
    for part in 1..=3 {
        let classical = classical_part_dim(big_n, n, part)?;
        if qdim_branch(big_n, n, part, &one)? != classical {
            return Ok(false);
        }
    }
    Ok(true)
}
