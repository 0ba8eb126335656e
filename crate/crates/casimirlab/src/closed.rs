//! Per-algebra closed forms for Y_n, Y_n′ and the three non-empty parts of
//! □⊗Y_n and □⊗Y_n′. These are written independently of the Vogel-parameter
//! formulas and serve as one of their cross-checks.

use crate::casimir::{AlgebraId, Family};
use crate::error::{Error, Result};
use crate::exact::{factorial_ratio, int, q, Rational};
use crate::label::IrrepLabel;
use crate::vogel;
use crate::young::{self, Partition};

fn fac(a: i64) -> Rational {
    assert!(a >= 0, "factorial of a negative integer");
    factorial_ratio(a, 0)
}

fn binom(a: i64, b: i64) -> Rational {
    if b < 0 || b > a {
        return int(0);
    }
    fac(a) / (fac(b) * fac(a - b))
}

fn big_n(g: &AlgebraId) -> i64 {
    g.n().expect("classical") as i64
}

fn check_n(n: usize) -> Result<i64> {
    if n == 0 {
        Err(Error::OutOfRange("n must be at least 1".into()))
    } else {
        Ok(n as i64)
    }
}

/// dim Y_n from the per-family closed forms; exceptional algebras use the
/// general Y_k formula, as they have no separate one.
pub fn dim_yn(g: &AlgebraId, n: usize) -> Result<Rational> {
    let k = n as i64;
    match g.family() {
        Family::SL => {
            let nn = big_n(g);
            let r = fac(nn + k - 2) / (fac(k) * fac(nn - 2));
            Ok(&r * &r * q(nn + 2 * k - 1, nn - 1))
        }
        Family::SO => {
            let nn = big_n(g);
            Ok(fac(nn + k - 5) * fac(nn + k - 4) * fac(nn + 2 * k - 2)
                / (fac(k) * fac(k + 1) * fac(nn - 4) * fac(nn - 2) * fac(nn + 2 * k - 5)))
        }
        Family::SP => {
            let nn = big_n(g);
            Ok(binom(2 * k + nn - 1, 2 * k))
        }
        _ => vogel::dim_yk_universal(&vogel::params(g, false), n),
    }
}

/// dim Y_n′ for the classical families.
pub fn dim_yn_prime(g: &AlgebraId, n: usize) -> Result<Rational> {
    let k = n as i64;
    let nn = match g.n() {
        Some(v) => v as i64,
        None => return Err(Error::Unsupported(format!("Y_n' closed forms exist for the classical series only, not {g}"))),
    };
    match g.family() {
        Family::SL => {
            if 2 * k > nn {
                return Ok(int(0));
            }
            let r = fac(nn + 1) / (fac(k) * fac(nn - k + 1));
            Ok(&r * &r * q(nn - 2 * k + 1, nn + 1))
        }
        Family::SO => Ok(binom(nn, 2 * k)),
        Family::SP => {
            if k > nn / 2 {
                return Ok(int(0));
            }
            let r = fac(nn + 3) / (fac(k) * fac(nn - k + 3));
            Ok(int((nn + 2 - 2 * k) * (nn + 3 - 2 * k) * (nn + 4 - 2 * k)) / int((nn - k + 4) * (k + 1) * (nn + 2) * (nn + 3))
                * &r
                * &r)
        }
        _ => unreachable!(),
    }
}

/// The three non-empty components of □⊗Y_n with their closed-form dimensions,
/// in the order Λ₁, Λ₂, then the remaining non-empty multiplet.
pub fn box_yn(g: &AlgebraId, n: usize) -> Result<Vec<(IrrepLabel, Rational)>> {
    let k = check_n(n)?;
    let labels = vogel::box_yn_labels(g, n, false)?;
    let lab = |i: usize| labels[i].clone().expect("non-empty multiplet");
    let third = if labels[2].is_some() { lab(2) } else { lab(3) };
    let dy = dim_yn(g, n)?;
    let ratios: [Rational; 3] = match g.family() {
        Family::SL => {
            let nn = big_n(g);
            [
                q((nn + 2 * k) * (nn + k - 1), (nn + 2 * k - 1) * (k + 1)),
                q((nn + 2 * k - 2) * k, (nn + k - 2) * (nn + 2 * k - 1)),
                q((nn + k - 1) * k * (nn - 2), (k + 1) * (nn + k - 2)),
            ]
        }
        Family::SO => {
            let nn = big_n(g);
            [
                q(2 * (nn + 2 * k) * (nn + k - 3), (nn + 2 * k - 3) * (k + 2)),
                q(2 * k * (nn + 2 * k - 6), (nn + 2 * k - 3) * (nn + k - 5)),
                q(k * (nn - 4) * (nn + k - 3), (k + 2) * (nn + k - 5)),
            ]
        }
        Family::SP => {
            // no separate product formulas; the column formula for sp irreps
            let nn = g.n().unwrap() as usize;
            let parts = [lab(0), lab(1), third.clone()];
            let mut out = Vec::new();
            for l in parts {
                let IrrepLabel::Diagram(p) = &l else { unreachable!() };
                let d = young::dim_sp(nn, p)?;
                out.push((l, d));
            }
            return Ok(out);
        }
        Family::G2 => [
            q(4 * (k + 3) * (3 * k + 7), (2 * k + 3) * (3 * k + 4)),
            q(4 * k * (3 * k + 2), (2 * k + 3) * (3 * k + 5)),
            q(27 * k * (k + 3), (3 * k + 4) * (3 * k + 5)),
        ],
        Family::F4 => [
            q(3 * (k + 8) * (2 * k + 13), (k + 3) * (k + 4)),
            q(3 * k * (2 * k + 3), (k + 4) * (k + 5)),
            q(14 * k * (k + 8), (k + 3) * (k + 5)),
        ],
        Family::E6 => [
            q(12 * (k + 9) * (k + 11), (k + 4) * (2 * k + 11)),
            q(12 * k * (k + 2), (k + 7) * (2 * k + 11)),
            q(15 * k * (k + 11), (k + 4) * (k + 7)),
        ],
        Family::E7 => [
            q(24 * (k + 14) * (k + 17), (k + 6) * (2 * k + 17)),
            q(24 * k * (k + 3), (k + 11) * (2 * k + 17)),
            q(32 * k * (k + 17), (k + 6) * (k + 11)),
        ],
        Family::E8 => unreachable!("box_yn_labels rejects e8"),
    };
    let [r1, r2, r3] = ratios;
    Ok(vec![(lab(0), r1 * &dy), (lab(1), r2 * &dy), (third, r3 * &dy)])
}

/// Labels of □⊗Y_n′ for the classical families: the Y_{n+1}′-like part, the
/// mixed part and the Y_{n−1}′-like part.
pub fn box_yn_prime_labels(g: &AlgebraId, n: usize) -> Result<[IrrepLabel; 3]> {
    check_n(n)?;
    let ones = |m: usize| Partition::rect(m, 1);
    let hook = |rows: Vec<usize>| IrrepLabel::Diagram(Partition::new(rows).expect("valid rows"));
    match g.family() {
        Family::SL => Ok([
            IrrepLabel::Composite(crate::composite::CompositePair::new(ones(n + 1), ones(n))),
            IrrepLabel::Composite(crate::composite::CompositePair::new(
                Partition::new(std::iter::once(2).chain(std::iter::repeat_n(1, n - 1)).collect()).unwrap(),
                ones(n),
            )),
            IrrepLabel::Composite(crate::composite::CompositePair::new(ones(n), ones(n - 1))),
        ]),
        Family::SO => Ok([
            IrrepLabel::Diagram(ones(2 * n + 1)),
            hook(std::iter::once(2).chain(std::iter::repeat_n(1, 2 * n - 1)).collect()),
            IrrepLabel::Diagram(ones(2 * n - 1)),
        ]),
        Family::SP => Ok([
            hook(std::iter::once(3).chain(std::iter::repeat_n(2, n - 1)).collect()),
            hook(std::iter::repeat_n(2, n).chain(std::iter::once(1)).collect()),
            hook(std::iter::repeat_n(2, n - 1).chain(std::iter::once(1)).collect()),
        ]),
        _ => Err(Error::Unsupported(format!(
            "□⊗Y_n' has no universal three-term form for {g}; see the □⊗Y2' decompositions"
        ))),
    }
}

/// □⊗Y_n′ with closed-form dimensions (sl and so ratios; sp column formula).
pub fn box_yn_prime(g: &AlgebraId, n: usize) -> Result<Vec<(IrrepLabel, Rational)>> {
    let k = check_n(n)?;
    let labels = box_yn_prime_labels(g, n)?;
    let dy = dim_yn_prime(g, n)?;
    let nn = big_n(g);
    let ratios = match g.family() {
        Family::SL => [
            q((nn - 2 * k) * (nn - k + 1), (nn - 2 * k + 1) * (k + 1)),
            q((nn - k + 1) * k * (nn + 2), (k + 1) * (nn - k + 2)),
            q((nn - 2 * k + 2) * k, (nn - k + 2) * (nn - 2 * k + 1)),
        ],
        Family::SO => [
            q(nn - 2 * k, 2 * k + 1),
            q(2 * k * (nn - 2 * k) * (nn + 2), (2 * k + 1) * (nn - 2 * k + 1)),
            q(2 * k, nn - 2 * k + 1),
        ],
        _ => {
            let mut out = Vec::new();
            for l in labels {
                let IrrepLabel::Diagram(p) = &l else { unreachable!() };
                // a diagram with more than N/2 rows is absent at the edge of the range
                let d = if p.len() > nn as usize / 2 { int(0) } else { young::dim_sp(nn as usize, p)? };
                out.push((l, d));
            }
            return Ok(out);
        }
    };
    Ok(labels.into_iter().zip(ratios).map(|(l, r)| (l, r * &dy)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::label;

    #[test]
    fn yn_closed_forms_match_weyl() {
        for n in 1..=4 {
            for nn in 3..=9u32 {
                let g = AlgebraId::sl(nn).unwrap();
                assert_eq!(dim_yn(&g, n).unwrap(), label::weyl_dim(&g, &label::yn_label(&g, n)).unwrap());
            }
            for nn in 7..=12u32 {
                let g = AlgebraId::so(nn).unwrap();
                assert_eq!(dim_yn(&g, n).unwrap(), label::weyl_dim(&g, &label::yn_label(&g, n)).unwrap());
            }
            for nn in (4..=12u32).step_by(2) {
                let g = AlgebraId::sp(nn).unwrap();
                assert_eq!(dim_yn(&g, n).unwrap(), label::weyl_dim(&g, &label::yn_label(&g, n)).unwrap());
            }
        }
    }

    #[test]
    fn yn_prime_closed_forms_match_weyl() {
        for n in 1..=3 {
            for nn in (2 * n as u32 + 1)..=10 {
                let g = AlgebraId::sl(nn).unwrap();
                let l = label::yn_prime_label(&g, n).unwrap();
                assert_eq!(dim_yn_prime(&g, n).unwrap(), label::weyl_dim(&g, &l).unwrap(), "{g} n={n}");
            }
            for nn in (4 * n as u32 + 1)..=13 {
                let g = AlgebraId::so(nn).unwrap();
                let l = label::yn_prime_label(&g, n).unwrap();
                assert_eq!(dim_yn_prime(&g, n).unwrap(), label::weyl_dim(&g, &l).unwrap(), "{g} n={n}");
            }
            for nn in ((2 * n as u32)..=12).filter(|x| x % 2 == 0) {
                let g = AlgebraId::sp(nn).unwrap();
                let l = label::yn_prime_label(&g, n).unwrap();
                assert_eq!(dim_yn_prime(&g, n).unwrap(), label::weyl_dim(&g, &l).unwrap(), "{g} n={n}");
            }
        }
    }

    #[test]
    fn box_yn_parts_sum() {
        let gs = [AlgebraId::sl(5).unwrap(), AlgebraId::so(9).unwrap(), AlgebraId::sp(6).unwrap(), AlgebraId::exceptional(Family::F4).unwrap()];
        for g in gs {
            for n in 1..=4 {
                let total: Rational = box_yn(&g, n).unwrap().into_iter().map(|(_, d)| d).sum();
                assert_eq!(total, vogel::dim_box(&g) * dim_yn(&g, n).unwrap(), "{g} n={n}");
            }
        }
    }

    #[test]
    fn box_yn_prime_parts_match_weyl() {
        for (g, nmax) in [(AlgebraId::sl(7).unwrap(), 3), (AlgebraId::so(11).unwrap(), 2), (AlgebraId::sp(8).unwrap(), 4)] {
            for n in 1..=nmax {
                let parts = box_yn_prime(&g, n).unwrap();
                let mut total = int(0);
                for (l, d) in parts {
                    if d == int(0) {
                        continue;
                    }
                    assert_eq!(d, label::weyl_dim(&g, &l).unwrap(), "{g} n={n} {l}");
                    total += d;
                }
                assert_eq!(total, vogel::dim_box(&g) * dim_yn_prime(&g, n).unwrap());
            }
        }
    }
}
