//! Tensor-product decompositions: the composite-pair rule for powers of the sl(N)
//! adjoint, the a_k^(m) recurrence, □⊗Y_n and Y_n⊗Y₁ branchings, and the so(N)
//! candidate diagrams of ad^⊗k.

use crate::casimir::{AlgebraId, Family};
use crate::composite::CompositePair;
use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::fixtures::{FixtureStore, Term};
use crate::label::{self, IrrepLabel};
use crate::young::{self, Partition};
use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};
use std::collections::{BTreeMap, BTreeSet};

/// Irreducible labels with positive multiplicities, in canonical label order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Decomposition {
    terms: BTreeMap<IrrepLabel, u64>,
}

impl Decomposition {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn singleton(label: IrrepLabel) -> Self {
        let mut d = Self::new();
        d.add(label, 1);
        d
    }

    pub fn add(&mut self, label: IrrepLabel, multiplicity: u64) {
        if multiplicity > 0 {
            *self.terms.entry(label).or_insert(0) += multiplicity;
        }
    }

    pub fn get(&self, label: &IrrepLabel) -> u64 {
        self.terms.get(label).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&IrrepLabel, u64)> {
        self.terms.iter().map(|(l, &m)| (l, m))
    }

    /// Number of distinct labels.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum of multiplicities.
    pub fn total_multiplicity(&self) -> u64 {
        self.terms.values().sum()
    }

    /// Σ multiplicity · dim over the terms, for the algebra `g`.
    pub fn dimension_sum(&self, g: &AlgebraId) -> Result<Rational> {
        let mut acc = Rational::zero();
        for (l, m) in self.iter() {
            acc += label::dim(g, l)? * Rational::from_integer(m.into());
        }
        Ok(acc)
    }

    /// Σ multiplicity · dim(μ,λ)(N) with the polynomial continuation of the composite
    /// dimensions, so labels needing more than N rows contribute their formal value.
    pub fn formal_dimension_sum_sl(&self, n: i64) -> Result<Rational> {
        let mut acc = Rational::zero();
        for (l, m) in self.iter() {
            let p = match l {
                IrrepLabel::Composite(p) => p,
                other => return Err(Error::InvalidLabel(format!("{other} is not a composite pair"))),
            };
            acc += crate::composite::dim_composite_formal(p, n) * Rational::from_integer(m.into());
        }
        Ok(acc)
    }

    /// Reads fixture terms, normalizing weight labels for `g`.
    pub fn from_fixture(g: &AlgebraId, terms: &[Term]) -> Result<Self> {
        let mut d = Self::new();
        for t in terms {
            d.add(label::parse_for(g, &t.label.0)?, t.multiplicity);
        }
        Ok(d)
    }

    /// Reads fixture terms without an algebra (composite and diagram labels).
    pub fn from_terms(terms: &[Term]) -> Result<Self> {
        let mut d = Self::new();
        for t in terms {
            d.add(t.label.parse()?, t.multiplicity);
        }
        Ok(d)
    }
}

impl FromIterator<(IrrepLabel, u64)> for Decomposition {
    fn from_iter<I: IntoIterator<Item = (IrrepLabel, u64)>>(iter: I) -> Self {
        let mut d = Decomposition::new();
        for (l, m) in iter {
            d.add(l, m);
        }
        d
    }
}

impl Serialize for Decomposition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry {
            label: String,
            multiplicity: u64,
        }
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (l, &m) in &self.terms {
            seq.serialize_element(&Entry { label: l.to_string(), multiplicity: m })?;
        }
        seq.end()
    }
}

fn balanced_pair(l: &IrrepLabel) -> Result<&CompositePair> {
    match l {
        IrrepLabel::Composite(p) if p.is_balanced() => Ok(p),
        _ => Err(Error::InvalidLabel(format!("{l} is not a balanced composite pair"))),
    }
}

/// Multiplies by ad = ([1],[1]) through
/// (λ,μ)×([1],[1]) = (λ×[1], μ×[1]) + Σᵢ(λᵢ×[1], μ) + Σⱼ(λ, μⱼ×[1]) + Σᵢⱼ(λᵢ, μⱼ),
/// where λᵢ runs over λ with one box removed and ×[1] is the single-box Pieri rule.
pub fn mult_by_adjoint(d: &Decomposition) -> Result<Decomposition> {
    let mut out: BTreeMap<CompositePair, u64> = BTreeMap::new();
    let mut put = |u: &Partition, l: &Partition, m: u64| {
        *out.entry(CompositePair::new(u.clone(), l.clone())).or_insert(0) += m;
    };
    for (label, m) in d.iter() {
        let p = balanced_pair(label)?;
        let (lam, mu) = (&p.upper, &p.lower);
        let lam_plus = lam.add_box();
        let mu_plus = mu.add_box();
        let lam_minus = lam.remove_box();
        let mu_minus = mu.remove_box();
        for a in &lam_plus {
            for b in &mu_plus {
                put(a, b, m);
            }
        }
        for a in &lam_minus {
            for a1 in a.add_box() {
                put(&a1, mu, m);
            }
        }
        for b in &mu_minus {
            for b1 in b.add_box() {
                put(lam, &b1, m);
            }
        }
        for a in &lam_minus {
            for b in &mu_minus {
                put(a, b, m);
            }
        }
    }
    Ok(out.into_iter().map(|(p, m)| (IrrepLabel::Composite(p), m)).collect())
}

/// ad^⊗k as iterated products starting from ([1],[1]).
pub fn ad_power(k: usize) -> Result<Decomposition> {
    if k == 0 {
        return Err(Error::OutOfRange("k must be at least 1".into()));
    }
    let mut d = Decomposition::singleton(IrrepLabel::Composite(CompositePair::adjoint()));
    for _ in 1..k {
        d = mult_by_adjoint(&d)?;
    }
    Ok(d)
}

/// (a₀^(m), …, a_m^(m)) from a_k^(m+1) = a_{k−1}^(m) + 2k a_k^(m) + (k+1)² a_{k+1}^(m),
/// starting at a^(0) = (1).
pub fn a_coeffs(m: usize) -> Vec<BigUint> {
    let mut a = vec![BigUint::from(1u32)];
    for _ in 0..m {
        let get = |k: isize| -> BigUint {
            if k < 0 || k as usize >= a.len() {
                BigUint::zero()
            } else {
                a[k as usize].clone()
            }
        };
        let next = (0..=a.len() as isize)
            .map(|k| {
                let kk = BigUint::from(k as u64);
                get(k - 1) + BigUint::from(2u32) * &kk * get(k) + (&kk + 1u32) * (&kk + 1u32) * get(k + 1)
            })
            .collect();
        a = next;
    }
    a
}

/// Groups ad_power output by level |λ|: the multiplicity of (λ,μ) must be a_j f_λ f_μ
/// with f the number of standard tableaux, and every pair at a populated level present.
pub fn grouped_coefficients(d: &Decomposition) -> Result<Vec<u64>> {
    let mut levels: BTreeMap<usize, (u64, usize)> = BTreeMap::new();
    for (l, m) in d.iter() {
        let p = balanced_pair(l)?;
        let f = young::num_standard_tableaux(&p.upper) * young::num_standard_tableaux(&p.lower);
        let f = f.to_u64().ok_or_else(|| Error::OutOfRange("tableau count overflow".into()))?;
        if m % f != 0 {
            return Err(Error::InvalidLabel(format!("{l}: multiplicity {m} is not a multiple of f_λ f_μ = {f}")));
        }
        let a = m / f;
        let j = p.upper.size();
        let entry = levels.entry(j).or_insert((a, 0));
        if entry.0 != a {
            return Err(Error::InvalidLabel(format!("level {j}: coefficients {} and {a} disagree", entry.0)));
        }
        entry.1 += 1;
    }
    let top = levels.keys().next_back().copied().unwrap_or(0);
    let mut out = vec![0u64; top + 1];
    for (j, (a, count)) in levels {
        let np = young::partitions(j).len();
        if count != np * np {
            return Err(Error::InvalidLabel(format!("level {j}: {count} pairs present, expected {}", np * np)));
        }
        out[j] = a;
    }
    Ok(out)
}

pub const DERANGEMENT_LIMIT: usize = 9;

/// Permutations of m points without fixed points, by enumerating all m! of them.
pub fn derangements_bruteforce(m: usize) -> Result<u64> {
    if m > DERANGEMENT_LIMIT {
        return Err(Error::OutOfRange(format!("m = {m} exceeds the enumeration budget {DERANGEMENT_LIMIT}")));
    }
    let mut perm: Vec<usize> = (0..m).collect();
    let fixed_free = |p: &[usize]| p.iter().enumerate().all(|(i, &x)| i != x);
    let mut count = u64::from(fixed_free(&perm));
    // Heap's algorithm, iterative form
    let mut c = vec![0usize; m];
    let mut i = 0;
    while i < m {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            count += u64::from(fixed_free(&perm));
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    Ok(count)
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::OutOfRange("n must be at least 1".into()))
    } else {
        Ok(())
    }
}

fn e8_ad_yn(n: usize, store: &FixtureStore) -> Result<Decomposition> {
    let fixture = store.e8_ad_yn()?;
    let g = AlgebraId::exceptional(Family::E8)?;
    let mut d = Decomposition::new();
    for t in &fixture.terms {
        if let Some(w) = t.at(n as i64) {
            d.add(label::normalize(&g, &IrrepLabel::weight(w))?, t.multiplicity);
        }
    }
    Ok(d)
}

/// □⊗Y_n (or □⊗Y_n′ when `primed`) as the three-term universal decomposition.
///
/// e₈ (where □ = ad) returns its six-term ad⊗Y_n decomposition; the exceptional
/// □⊗Y_n′ is available only at n = 2, from the tabulated lines.
pub fn branch_box_yn(g: &AlgebraId, n: usize, primed: bool, store: &FixtureStore) -> Result<Decomposition> {
    check_n(n)?;
    match (g.family(), primed) {
        (Family::E8, false) => e8_ad_yn(n, store),
        (_, false) => {
            let labels = crate::vogel::box_yn_labels(g, n, false)?;
            Ok(labels.into_iter().flatten().map(|l| (l, 1)).collect())
        }
        (f, true) if f.is_classical() => Ok(crate::closed::box_yn_prime_labels(g, n)?.into_iter().map(|l| (l, 1)).collect()),
        (f, true) => {
            if n != 2 {
                return Err(Error::Unsupported(format!(
                    "□⊗Y_n' is not universal for the exceptional algebras; only n = 2 is tabulated for {g}"
                )));
            }
            let fixture = store.exceptional_box_y2prime()?;
            let line = fixture
                .line(f.name())
                .ok_or_else(|| Error::Fixture(format!("no □⊗Y2' line for {g}")))?;
            let mut d = Decomposition::new();
            for t in &line.terms {
                d.add(label::parse_for(g, &t.label.0)?, 1);
            }
            Ok(d)
        }
    }
}

/// One term of the sl(N) Y_n×Y₁ template with formal (possibly invalid) rows;
/// `dual` stands for the pair (upper, lower) + (lower, upper).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FormalTerm {
    pub upper: Vec<i64>,
    pub lower: Vec<i64>,
    pub multiplicity: u64,
    pub dual: bool,
}

/// ([n],[n])×([1],[1]) = ([n+1],[n+1]) + ([n,1],[n+1])_dual + ([n,1],[n,1])
///   + ([n],[n−1,1])_dual + 2([n],[n]) + ([n−1],[n−1]).
pub fn yn_times_ad_sl_formal(n: usize) -> Result<Vec<FormalTerm>> {
    check_n(n)?;
    let n = n as i64;
    let t = |upper: Vec<i64>, lower: Vec<i64>, multiplicity: u64, dual: bool| FormalTerm { upper, lower, multiplicity, dual };
    Ok(vec![
        t(vec![n + 1], vec![n + 1], 1, false),
        t(vec![n, 1], vec![n + 1], 1, true),
        t(vec![n, 1], vec![n, 1], 1, false),
        t(vec![n], vec![n - 1, 1], 1, true),
        t(vec![n], vec![n], 2, false),
        t(vec![n - 1], vec![n - 1], 1, false),
    ])
}

/// so(N): [n²]×[1²] = [(n+1)²] + [n+1,n,1] + [n²,1²] + [n,n−1,1] + [n²] + [n+1,n−1] + [(n−1)²].
pub fn yn_times_ad_so_formal(n: usize) -> Result<Vec<Vec<i64>>> {
    check_n(n)?;
    let n = n as i64;
    Ok(vec![
        vec![n + 1, n + 1],
        vec![n + 1, n, 1],
        vec![n, n, 1, 1],
        vec![n, n - 1, 1],
        vec![n, n],
        vec![n + 1, n - 1],
        vec![n - 1, n - 1],
    ])
}

/// sp(N): [2n]×[2] = [2n+2] + [2n+1,1] + [2n,2] + [2n−1,1] + [2n] + [2n−2].
pub fn yn_times_ad_sp_formal(n: usize) -> Result<Vec<Vec<i64>>> {
    check_n(n)?;
    let n = n as i64;
    Ok(vec![vec![2 * n + 2], vec![2 * n + 1, 1], vec![2 * n, 2], vec![2 * n - 1, 1], vec![2 * n], vec![2 * n - 2]])
}

/// Rows that form a Young diagram (non-negative, weakly decreasing), else `None`.
pub fn valid_partition(rows: &[i64]) -> Option<Partition> {
    if rows.iter().any(|&r| r < 0) || rows.windows(2).any(|w| w[0] < w[1]) {
        return None;
    }
    Partition::new(rows.iter().map(|&r| r as usize).collect()).ok()
}

/// Y_n⊗Y₁ with the terms that are not Young diagrams dropped.
pub fn yn_times_ad(g: &AlgebraId, n: usize, store: &FixtureStore) -> Result<Decomposition> {
    check_n(n)?;
    let mut d = Decomposition::new();
    match g.family() {
        Family::SL => {
            for t in yn_times_ad_sl_formal(n)? {
                let (Some(u), Some(l)) = (valid_partition(&t.upper), valid_partition(&t.lower)) else {
                    continue;
                };
                if t.dual {
                    d.add(IrrepLabel::Composite(CompositePair::new(l.clone(), u.clone())), t.multiplicity);
                }
                d.add(IrrepLabel::Composite(CompositePair::new(u, l)), t.multiplicity);
            }
        }
        Family::SO => {
            for rows in yn_times_ad_so_formal(n)? {
                if let Some(p) = valid_partition(&rows) {
                    d.add(IrrepLabel::Diagram(p), 1);
                }
            }
        }
        Family::SP => {
            for rows in yn_times_ad_sp_formal(n)? {
                if let Some(p) = valid_partition(&rows) {
                    d.add(IrrepLabel::Diagram(p), 1);
                }
            }
        }
        Family::E8 => return e8_ad_yn(n, store),
        _ => {
            return Err(Error::Unsupported(format!(
                "Y_n⊗Y_1 is tabulated only for the classical series and e8, not {g}"
            )))
        }
    }
    Ok(d)
}

/// Outcome of mapping the sl(N) Y_n×Y₁ terms to sp(N) by horizontal sums.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HorizontalSumReport {
    pub n: usize,
    /// (sl term, its image) for every matched copy.
    pub matched: Vec<(String, Partition)>,
    /// sl terms (one entry per copy) whose image is not in the sp decomposition.
    pub unmatched_sl: Vec<String>,
    /// sp terms not reached by any sl term.
    pub unmatched_sp: Vec<Partition>,
}

/// Applies (λ,μ)_dual → λ+μ and (λ,λ) → λ+λ to the sl template and matches the
/// images against the sp decomposition, copy by copy.
pub fn horizontal_sum_check(n: usize) -> Result<HorizontalSumReport> {
    let mut sp: Vec<Partition> = Vec::new();
    for rows in yn_times_ad_sp_formal(n)? {
        sp.push(young::horizontal_sum_formal(&rows, &[])?);
    }
    let mut matched = Vec::new();
    let mut unmatched_sl = Vec::new();
    for t in yn_times_ad_sl_formal(n)? {
        let image = young::horizontal_sum_formal(&t.upper, &t.lower)?;
        let name = format!(
            "({:?},{:?}){}",
            t.upper,
            t.lower,
            if t.dual { "_dual" } else { "" }
        );
        for _ in 0..t.multiplicity {
            match sp.iter().position(|p| *p == image) {
                Some(i) => {
                    sp.remove(i);
                    matched.push((name.clone(), image.clone()));
                }
                None => unmatched_sl.push(name.clone()),
            }
        }
    }
    Ok(HorizontalSumReport { n, matched, unmatched_sl, unmatched_sp: sp })
}

/// Partitions of 2m cells (m ≤ k, at most `max_cells` cells) with at most k columns:
/// an outer bound for the so(N) diagrams of ad^⊗k.
pub fn so_candidates(k: usize, max_cells: usize) -> BTreeSet<Partition> {
    let mut out = BTreeSet::new();
    for m in 0..=k {
        if 2 * m > max_cells {
            break;
        }
        for p in young::partitions(2 * m) {
            if p.width() <= k {
                out.insert(p);
            }
        }
    }
    out
}
