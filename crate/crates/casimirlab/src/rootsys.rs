//! Root systems in explicit ambient coordinates, the Weyl dimension formula and
//! Casimir eigenvalues (Λ, Λ+2ρ).

use crate::casimir::{AlgebraId, CasimirValue, Family};
use crate::composite::CompositePair;
use crate::error::{Error, Result};
use crate::exact::{int, q, Rational};
use crate::linalg::Matrix;
use crate::young::Partition;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightVector {
    pub coords: Vec<Rational>,
}

impl Serialize for WeightVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<String> = self.coords.iter().map(crate::exact::to_string).collect();
        v.serialize(s)
    }
}

impl WeightVector {
    pub fn new(coords: Vec<Rational>) -> Self {
        WeightVector { coords }
    }

    pub fn zero(dim: usize) -> Self {
        WeightVector { coords: vec![Rational::zero(); dim] }
    }

    pub fn from_ints(v: &[i64]) -> Self {
        WeightVector { coords: v.iter().map(|&x| int(x)).collect() }
    }

    /// `v / den` for integer numerators.
    pub fn halves(v: &[i64], den: i64) -> Self {
        WeightVector { coords: v.iter().map(|&x| q(x, den)).collect() }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn add(&self, o: &WeightVector) -> WeightVector {
        WeightVector { coords: self.coords.iter().zip(&o.coords).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, o: &WeightVector) -> WeightVector {
        WeightVector { coords: self.coords.iter().zip(&o.coords).map(|(a, b)| a - b).collect() }
    }

    pub fn scale(&self, s: &Rational) -> WeightVector {
        WeightVector { coords: self.coords.iter().map(|a| a * s).collect() }
    }

    /// Euclidean product of coordinates (the metric scale is applied separately).
    pub fn dot(&self, o: &WeightVector) -> Rational {
        self.coords.iter().zip(&o.coords).map(|(a, b)| a * b).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RootSystem {
    #[serde(skip)]
    pub algebra: AlgebraId,
    pub positive_roots: Vec<WeightVector>,
    pub simple_roots: Vec<WeightVector>,
    /// Fundamental weights in the numbering used for labels.
    pub fundamental_weights: Vec<WeightVector>,
    pub rho: WeightVector,
    #[serde(serialize_with = "crate::exact::serde_str::serialize")]
    pub metric_scale: Rational,
}

fn unit(dim: usize, i: usize, c: i64) -> Vec<i64> {
    let mut v = vec![0; dim];
    v[i] = c;
    v
}

fn pm_pairs(dim: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for i in 0..dim {
        for j in (i + 1)..dim {
            for (a, b) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                let mut v = vec![0; dim];
                v[i] = a;
                v[j] = b;
                out.push(v);
            }
        }
    }
    out
}

/// Root sets as doubled integer vectors (so half-integers stay integral).
fn all_roots_doubled(g: &AlgebraId) -> Vec<Vec<i64>> {
    let dbl = |v: Vec<i64>| v.into_iter().map(|x| 2 * x).collect::<Vec<_>>();
    match g.family() {
        Family::SL => {
            let n = g.big_n();
            let mut out = Vec::new();
            for i in 0..n {
                for j in 0..n {
                    if i != j {
                        let mut v = vec![0; n];
                        v[i] = 2;
                        v[j] = -2;
                        out.push(v);
                    }
                }
            }
            out
        }
        Family::SO => {
            let n = g.big_n();
            let r = n / 2;
            let mut out: Vec<Vec<i64>> = pm_pairs(r).into_iter().map(dbl).collect();
            if n % 2 == 1 {
                for i in 0..r {
                    out.push(unit(r, i, 2));
                    out.push(unit(r, i, -2));
                }
            }
            out
        }
        Family::SP => {
            let r = g.big_n() / 2;
            let mut out: Vec<Vec<i64>> = pm_pairs(r).into_iter().map(dbl).collect();
            for i in 0..r {
                out.push(unit(r, i, 4));
                out.push(unit(r, i, -4));
            }
            out
        }
        Family::G2 => {
            let mut out = Vec::new();
            for i in 0..3 {
                for j in 0..3 {
                    if i != j {
                        let mut v = vec![0; 3];
                        v[i] = 2;
                        v[j] = -2;
                        out.push(v);
                    }
                }
                let mut w = vec![-2; 3];
                w[i] = 4;
                out.push(w.iter().map(|x| -x).collect());
                out.push(w);
            }
            out
        }
        Family::F4 => {
            let mut out: Vec<Vec<i64>> = pm_pairs(4).into_iter().map(dbl).collect();
            for i in 0..4 {
                out.push(unit(4, i, 2));
                out.push(unit(4, i, -2));
            }
            for mask in 0..16u32 {
                out.push((0..4).map(|b| if mask >> b & 1 == 1 { -1 } else { 1 }).collect());
            }
            out
        }
        Family::E6 | Family::E7 | Family::E8 => {
            let mut out: Vec<Vec<i64>> = pm_pairs(8).into_iter().map(dbl).collect();
            for mask in 0..256u32 {
                if mask.count_ones() % 2 == 0 {
                    out.push((0..8).map(|b| if mask >> b & 1 == 1 { -1 } else { 1 }).collect());
                }
            }
            let orth: Vec<Vec<i64>> = match g.family() {
                Family::E7 => vec![vec![1, 0, 0, 0, 0, 0, 0, 1]],
                Family::E6 => vec![vec![1, 0, 0, 0, 0, 0, 0, 1], vec![0, 1, 0, 0, 0, 0, 0, 1]],
                _ => vec![],
            };
            out.retain(|v| orth.iter().all(|o| v.iter().zip(o).map(|(a, b)| a * b).sum::<i64>() == 0));
            out
        }
    }
}

/// Weyl vector in the coordinates used for labels.
fn listed_rho(g: &AlgebraId) -> WeightVector {
    match g.family() {
        Family::SL => {
            let n = g.big_n() as i64;
            WeightVector::new((1..=n).map(|i| q(n + 1 - 2 * i, 2)).collect())
        }
        Family::SO => {
            let n = g.big_n() as i64;
            WeightVector::new((1..=n / 2).map(|i| q(n - 2 * i, 2)).collect())
        }
        Family::SP => {
            let n = g.big_n() as i64;
            WeightVector::new((1..=n / 2).map(|i| int(n / 2 - i + 1)).collect())
        }
        Family::G2 => WeightVector::from_ints(&[-1, -2, 3]),
        Family::F4 => WeightVector::halves(&[5, 3, 1, 11], 2),
        Family::E6 => WeightVector::from_ints(&[-4, -4, 4, 3, 2, 1, 0, 4]),
        Family::E7 => WeightVector::halves(&[-17, 10, 8, 6, 4, 2, 0, 17], 2),
        Family::E8 => WeightVector::from_ints(&[6, 5, 4, 3, 2, 1, 0, 23]),
    }
}

/// Fundamental weights of the exceptional algebras, λ_(1), λ_(2), ….
pub fn exceptional_fundamental_weights(f: Family) -> Vec<WeightVector> {
    let h = WeightVector::halves;
    match f {
        Family::G2 => vec![WeightVector::from_ints(&[0, -1, 1]), WeightVector::from_ints(&[-1, -1, 2])],
        Family::F4 => vec![
            h(&[2, 0, 0, 2], 2),
            h(&[2, 2, 0, 4], 2),
            h(&[1, 1, 1, 3], 2),
            h(&[0, 0, 0, 2], 2),
        ],
        Family::E6 => vec![
            h(&[-2, -2, 6, 0, 0, 0, 0, 2], 6),
            h(&[-4, -4, 6, 6, 0, 0, 0, 4], 6),
            h(&[-6, -6, 6, 6, 6, 0, 0, 6], 6),
            h(&[-5, -5, 3, 3, 3, 3, -3, 5], 6),
            h(&[-3, -3, 3, 3, 3, 3, 3, 3], 6),
            h(&[-4, -4, 0, 0, 0, 0, 0, 4], 6),
        ],
        Family::E7 => vec![
            h(&[-1, 2, 0, 0, 0, 0, 0, 1], 2),
            h(&[-2, 2, 2, 0, 0, 0, 0, 2], 2),
            h(&[-3, 2, 2, 2, 0, 0, 0, 3], 2),
            h(&[-4, 2, 2, 2, 2, 0, 0, 4], 2),
            h(&[-3, 1, 1, 1, 1, 1, -1, 3], 2),
            h(&[-2, 1, 1, 1, 1, 1, 1, 2], 2),
            h(&[-2, 0, 0, 0, 0, 0, 0, 2], 2),
        ],
        Family::E8 => vec![
            h(&[2, 0, 0, 0, 0, 0, 0, 2], 2),
            h(&[2, 2, 0, 0, 0, 0, 0, 4], 2),
            h(&[2, 2, 2, 0, 0, 0, 0, 6], 2),
            h(&[2, 2, 2, 2, 0, 0, 0, 8], 2),
            h(&[2, 2, 2, 2, 2, 0, 0, 10], 2),
            h(&[1, 1, 1, 1, 1, 1, -1, 7], 2),
            h(&[1, 1, 1, 1, 1, 1, 1, 5], 2),
            h(&[0, 0, 0, 0, 0, 0, 0, 4], 2),
        ],
        _ => Vec::new(),
    }
}

/// Index (0-based) of the fundamental weight of the defining representation □.
pub fn box_index(f: Family) -> usize {
    match f {
        Family::F4 => 3,
        _ => 0,
    }
}

/// Index (0-based) of the fundamental weight of the adjoint.
pub fn adjoint_index(f: Family) -> Option<usize> {
    match f {
        Family::G2 => Some(1),
        Family::F4 => Some(0),
        Family::E6 => Some(4),
        Family::E7 => Some(6),
        Family::E8 => Some(0),
        _ => None,
    }
}

pub fn metric_scale(g: &AlgebraId) -> Rational {
    match g.family() {
        Family::SP => q(1, 2),
        Family::G2 => q(1, 3),
        _ => Rational::one(),
    }
}

fn coroot_pairing(w: &WeightVector, a: &WeightVector) -> Rational {
    int(2) * w.dot(a) / a.dot(a)
}

/// Fundamental weights dual to `simple` inside the span of the roots.
fn dual_basis(simple: &[WeightVector]) -> Result<Vec<WeightVector>> {
    let r = simple.len();
    let cartan = Matrix::from_rows(
        (0..r).map(|i| (0..r).map(|j| coroot_pairing(&simple[i], &simple[j])).collect()).collect(),
    );
    let inv = cartan.inverse()?;
    Ok((0..r)
        .map(|i| {
            (0..r).fold(WeightVector::zero(simple[0].dim()), |acc, k| acc.add(&simple[k].scale(inv.get(i, k))))
        })
        .collect())
}

impl RootSystem {
    pub fn build(g: &AlgebraId) -> Result<RootSystem> {
        let rho_listed = listed_rho(g);
        let roots: Vec<WeightVector> = all_roots_doubled(g)
            .into_iter()
            .map(|v| WeightVector::halves(&v, 2))
            .collect();
        let positive: Vec<WeightVector> = roots.iter().filter(|a| a.dot(&rho_listed).is_positive()).cloned().collect();
        if positive.len() * 2 != roots.len() {
            return Err(Error::Spectrum(format!("{g}: Weyl vector is not regular")));
        }
        let simple: Vec<WeightVector> = positive
            .iter()
            .filter(|a| {
                !positive.iter().any(|b| {
                    let d = a.sub(b);
                    positive.contains(&d)
                })
            })
            .cloned()
            .collect();
        if simple.len() != g.rank() {
            return Err(Error::Spectrum(format!("{g}: found {} simple roots, rank is {}", simple.len(), g.rank())));
        }
        let half_sum = positive.iter().fold(WeightVector::zero(rho_listed.dim()), |acc, a| acc.add(a)).scale(&q(1, 2));
        let mut fundamental = match g.family() {
            f if f.is_classical() => classical_fundamental_weights(g, &simple)?,
            f => exceptional_fundamental_weights(f),
        };
        if !g.is_classical() {
            // each listed weight must pair to 1 with exactly one simple coroot and 0 with the rest
            let dual = dual_basis(&simple)?;
            for w in &fundamental {
                if !dual.contains(w) {
                    return Err(Error::Spectrum(format!("{g}: listed weight {:?} is not fundamental", w.coords)));
                }
            }
        }
        let rho_fund = fundamental.iter().fold(WeightVector::zero(rho_listed.dim()), |acc, w| acc.add(w));
        // sl weights carry a trace part; compare modulo the all-ones direction there
        let project = |v: &WeightVector| -> WeightVector {
            if g.family() == Family::SL {
                let n = v.dim() as i64;
                let mean: Rational = v.coords.iter().sum::<Rational>() / int(n);
                WeightVector::new(v.coords.iter().map(|c| c - &mean).collect())
            } else {
                v.clone()
            }
        };
        if half_sum != rho_listed || project(&rho_fund) != rho_listed {
            return Err(Error::Spectrum(format!("{g}: Weyl vector mismatch")));
        }
        if g.family() == Family::SL {
            fundamental = fundamental.iter().map(project).collect();
        }
        Ok(RootSystem {
            algebra: *g,
            positive_roots: positive,
            simple_roots: simple,
            fundamental_weights: fundamental,
            rho: rho_listed,
            metric_scale: metric_scale(g),
        })
    }

    /// Scaled inner product (·,·).
    pub fn inner(&self, a: &WeightVector, b: &WeightVector) -> Rational {
        a.dot(b) * &self.metric_scale
    }

    pub fn highest_root(&self) -> &WeightVector {
        self.positive_roots
            .iter()
            .max_by(|a, b| a.dot(&self.rho).cmp(&b.dot(&self.rho)))
            .expect("nonempty root system")
    }

    /// Σ cᵢ λ_(i) over the fundamental weights.
    pub fn weight_from_labels(&self, labels: &[u32]) -> Result<WeightVector> {
        if labels.len() != self.fundamental_weights.len() {
            return Err(Error::InvalidLabel(format!(
                "{} expects {} Dynkin labels, got {}",
                self.algebra,
                self.fundamental_weights.len(),
                labels.len()
            )));
        }
        Ok(labels
            .iter()
            .zip(&self.fundamental_weights)
            .fold(WeightVector::zero(self.rho.dim()), |acc, (&c, w)| acc.add(&w.scale(&int(c as i64)))))
    }

    pub fn dynkin_labels(&self, w: &WeightVector) -> Vec<Rational> {
        // labels follow the fundamental-weight numbering
        self.fundamental_weights
            .iter()
            .map(|f| {
                let a = self.simple_roots.iter().find(|a| coroot_pairing(f, a).is_one()).expect("dual basis");
                coroot_pairing(w, a)
            })
            .collect()
    }

    pub fn is_dominant_integral(&self, w: &WeightVector) -> bool {
        self.simple_roots.iter().all(|a| {
            let c = coroot_pairing(w, a);
            c.is_integer() && !c.is_negative()
        })
    }

    /// Weight of a classical Young diagram.
    pub fn weight_of_partition(&self, p: &Partition) -> Result<WeightVector> {
        let dim = self.rho.dim();
        match self.algebra.family() {
            Family::SL => {
                if p.len() > dim {
                    return Err(Error::InvalidLabel(format!("{p} has more than {dim} rows")));
                }
                let mean = q(p.size() as i64, dim as i64);
                Ok(WeightVector::new((0..dim).map(|i| int(p.row(i) as i64) - &mean).collect()))
            }
            Family::SO | Family::SP => {
                if p.len() > dim {
                    return Err(Error::InvalidLabel(format!("{p} has more than {dim} rows")));
                }
                Ok(WeightVector::new((0..dim).map(|i| int(p.row(i) as i64)).collect()))
            }
            _ => Err(Error::Unsupported(format!("{} labels are not partitions", self.algebra))),
        }
    }

    pub fn weight_of_composite(&self, p: &CompositePair) -> Result<WeightVector> {
        if self.algebra.family() != Family::SL {
            return Err(Error::Unsupported("composite labels are sl(N) only".into()));
        }
        self.weight_of_partition(&p.to_diagram(self.rho.dim())?)
    }

    pub fn reflect(&self, w: &WeightVector, a: &WeightVector) -> WeightVector {
        w.sub(&a.scale(&coroot_pairing(w, a)))
    }
}

fn classical_fundamental_weights(g: &AlgebraId, simple: &[WeightVector]) -> Result<Vec<WeightVector>> {
    // order the simple roots along the Dynkin diagram, starting from e1 - e2
    let dim = simple[0].dim();
    let mut ordered = Vec::new();
    for i in 0..dim.saturating_sub(1) {
        let mut v = vec![0; dim];
        v[i] = 2;
        v[i + 1] = -2;
        let a = WeightVector::halves(&v, 2);
        if simple.contains(&a) {
            ordered.push(a);
        }
    }
    for a in simple {
        if !ordered.contains(a) {
            ordered.push(a.clone());
        }
    }
    if ordered.len() != g.rank() {
        return Err(Error::Spectrum(format!("{g}: simple roots out of order")));
    }
    dual_basis(&ordered)
}

pub fn build(g: &AlgebraId) -> Result<RootSystem> {
    RootSystem::build(g)
}

pub fn weyl_dim(rs: &RootSystem, w: &WeightVector) -> Result<Rational> {
    if !rs.is_dominant_integral(w) {
        return Err(Error::NotDominant(format!("{:?}", w.coords.iter().map(crate::exact::to_string).collect::<Vec<_>>())));
    }
    let shifted = w.add(&rs.rho);
    Ok(rs.positive_roots.iter().fold(Rational::one(), |acc, a| acc * shifted.dot(a) / rs.rho.dot(a)))
}

pub fn casimir_weyl(rs: &RootSystem, w: &WeightVector) -> Result<CasimirValue> {
    if !rs.is_dominant_integral(w) {
        return Err(Error::NotDominant(format!("{:?}", w.coords.iter().map(crate::exact::to_string).collect::<Vec<_>>())));
    }
    let two_rho = rs.rho.scale(&int(2));
    let raw = rs.inner(w, &w.add(&two_rho));
    let ad = rs.highest_root();
    let ad_raw = rs.inner(ad, &ad.add(&two_rho));
    Ok(CasimirValue::new(raw, &ad_raw))
}

/// −(1/5!) ∏_{i<j} (λ′ᵢ−λ′ⱼ)(λ′ᵢ+λ′ⱼ) with λ′ = λ + (−1, −2, 3).
pub fn g2_det_dim(w: &WeightVector) -> Result<Rational> {
    if w.dim() != 3 || !w.coords.iter().sum::<Rational>().is_zero() {
        return Err(Error::InvalidLabel("g2 weights live in the plane x1+x2+x3 = 0".into()));
    }
    let l = w.add(&WeightVector::from_ints(&[-1, -2, 3])).coords;
    let mut prod = Rational::one();
    for i in 0..3 {
        for j in (i + 1)..3 {
            prod *= (&l[i] - &l[j]) * (&l[i] + &l[j]);
        }
    }
    Ok(-prod / int(120))
}
