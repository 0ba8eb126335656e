//! Young diagrams and the closed-form dimensions of sl(N), so(N), sp(N) tensor irreps.

use crate::error::{Error, Result};
use crate::exact::{factorial, factorial_ratio, int, sign_pow, Rational};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize};
use std::fmt;

/// Weakly decreasing list of positive row lengths; the empty list is ∅.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize)]
#[serde(transparent)]
pub struct Partition {
    rows: Vec<usize>,
}

impl Partition {
    /// Trailing zero rows are dropped; anything else out of order is rejected.
    pub fn new(mut rows: Vec<usize>) -> Result<Self> {
        while rows.last() == Some(&0) {
            rows.pop();
        }
        if rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{rows:?} is not weakly decreasing")));
        }
        if rows.contains(&0) {
            return Err(Error::InvalidPartition(format!("{rows:?} has an interior zero")));
        }
        Ok(Partition { rows })
    }

    /// Panicking constructor for literals.
    pub fn of(rows: &[usize]) -> Self {
        Partition::new(rows.to_vec()).expect("valid partition literal")
    }

    pub fn empty() -> Self {
        Partition { rows: Vec::new() }
    }

    /// `rows` rows of length `cols`.
    pub fn rect(rows: usize, cols: usize) -> Self {
        if cols == 0 {
            return Partition::empty();
        }
        Partition { rows: vec![cols; rows] }
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    /// Row i (0-based), 0 beyond the last row.
    pub fn row(&self, i: usize) -> usize {
        self.rows.get(i).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn size(&self) -> usize {
        self.rows.iter().sum()
    }

    pub fn width(&self) -> usize {
        self.row(0)
    }

    pub fn transpose(&self) -> Partition {
        let cols = (0..self.width()).map(|j| self.rows.iter().filter(|&&r| r > j).count()).collect();
        Partition { rows: cols }
    }

    /// Column heights a_1 >= a_2 >= ... (the rows of the transpose).
    pub fn columns(&self) -> Vec<usize> {
        self.transpose().rows
    }

    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows.iter().enumerate().flat_map(|(i, &r)| (0..r).map(move |j| (i, j)))
    }

    pub fn hook(&self, i: usize, j: usize) -> usize {
        let arm = self.rows[i] - j - 1;
        let leg = self.rows[i + 1..].iter().filter(|&&r| r > j).count();
        arm + leg + 1
    }

    /// All diagrams with one box added (Pieri rule for a single box).
    pub fn add_box(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..=self.len() {
            if i == 0 || self.row(i) < self.row(i - 1) {
                let mut rows = self.rows.clone();
                if i == rows.len() {
                    rows.push(1);
                } else {
                    rows[i] += 1;
                }
                out.push(Partition { rows });
            }
        }
        out
    }

    /// All diagrams with one box removed.
    pub fn remove_box(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..self.len() {
            if self.row(i) > self.row(i + 1) {
                let mut rows = self.rows.clone();
                rows[i] -= 1;
                out.push(Partition::new(rows).expect("removing a corner keeps a partition"));
            }
        }
        out
    }

    /// Compact form with exponents: "[2^3,1^2]".
    pub fn to_power_string(&self) -> String {
        let mut parts = Vec::new();
        let mut i = 0;
        while i < self.rows.len() {
            let r = self.rows[i];
            let run = self.rows[i..].iter().take_while(|&&x| x == r).count();
            parts.push(if run == 1 { r.to_string() } else { format!("{r}^{run}") });
            i += run;
        }
        format!("[{}]", parts.join(","))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.rows.iter().map(|r| r.to_string()).collect();
        write!(f, "[{}]", s.join(","))
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<usize>::deserialize(d)?;
        Partition::new(rows).map_err(serde::de::Error::custom)
    }
}

pub fn transpose(p: &Partition) -> Partition {
    p.transpose()
}

/// All partitions of `n`, largest first part first.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn go(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition { rows: prefix.clone() });
            return;
        }
        for f in (1..=n.min(max)).rev() {
            prefix.push(f);
            go(n - f, f, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// f_λ = |λ|! / ∏ hooks.
pub fn num_standard_tableaux(p: &Partition) -> BigInt {
    let hooks = p.cells().fold(BigInt::one(), |acc, (i, j)| acc * BigInt::from(p.hook(i, j)));
    factorial(p.size() as u64) / hooks
}

/// Column-height product formula for sl(N); zero when Λ has more than N rows.
pub fn dim_sl(n: usize, p: &Partition) -> Rational {
    if p.len() > n {
        return Rational::zero();
    }
    let a = p.columns();
    let k = a.len() as i64;
    let n = n as i64;
    let mut r = Rational::one();
    for (idx, &ai) in a.iter().enumerate() {
        let i = idx as i64 + 1;
        let ai = ai as i64;
        r *= factorial_ratio(n + i - 1, n - ai + i - 1);
        r /= Rational::from_integer(factorial((ai + k - i) as u64));
    }
    for l in 0..a.len() {
        for j in (l + 1)..a.len() {
            r *= int(a[l] as i64 - a[j] as i64 + j as i64 - l as i64);
        }
    }
    r
}

/// ∏ (N + content) / hook over the cells of Λ.
pub fn dim_sl_hook_content(n: i64, p: &Partition) -> Rational {
    p.cells().fold(Rational::one(), |acc, (i, j)| acc * int(n + j as i64 - i as i64) / int(p.hook(i, j) as i64))
}

/// The so(N) column formula evaluated for any integer N, as a rational function of N.
pub fn dim_so_formal(n: i64, p: &Partition) -> Rational {
    let a: Vec<i64> = p.columns().into_iter().map(|x| x as i64).collect();
    let k = a.len() as i64;
    let mut r = Rational::one();
    for (idx, &ai) in a.iter().enumerate() {
        let i = idx as i64 + 1;
        r *= factorial_ratio(n + 2 * (i - 1), n - ai + k - 2 + i);
        r /= Rational::from_integer(factorial((ai + k - i) as u64));
    }
    for l in 0..a.len() {
        for j in (l + 1)..a.len() {
            let (lf, jf) = (l as i64 + 1, j as i64 + 1);
            r *= int(a[l] - a[j] + jf - lf) * int(n - (a[l] + a[j]) + lf + jf - 2);
        }
    }
    r
}

/// Dimension of the so(N) tensor irrep labelled by Λ.
///
/// For even N and exactly N/2 rows the value is that of the O(N) irrep,
/// i.e. the sum of the two associated so(N) irreps.
pub fn dim_so(n: usize, p: &Partition) -> Result<Rational> {
    if n < 5 {
        return Err(Error::InvalidAlgebra(format!("so({n}) needs N >= 5")));
    }
    if p.len() > n / 2 {
        return Err(Error::OutOfRange(format!("{p} has {} rows, so({n}) allows at most {}", p.len(), n / 2)));
    }
    let a = p.columns();
    let k = a.len() as i64;
    for (idx, &ai) in a.iter().enumerate() {
        let i = idx as i64 + 1;
        if (n as i64) - ai as i64 + k - 2 + i < 0 {
            return Err(Error::OutOfRange(format!("negative factorial argument in column {i} of {p}")));
        }
    }
    Ok(dim_so_formal(n as i64, p))
}

/// Dimension of the sp(N) irrep labelled by Λ, obtained from the so column formula
/// through dim_sp(N)(λ) = (-1)^{|λ|} dim_so(-N)(λᵀ).
pub fn dim_sp(n: usize, p: &Partition) -> Result<Rational> {
    if n < 2 || n % 2 == 1 {
        return Err(Error::InvalidAlgebra(format!("sp({n}) needs even N >= 2")));
    }
    if p.len() > n / 2 {
        return Err(Error::OutOfRange(format!("{p} has {} rows, sp({n}) allows at most {}", p.len(), n / 2)));
    }
    Ok(sign_pow(p.size()) * dim_so_formal(-(n as i64), &p.transpose()))
}

pub fn horizontal_sum(a: &Partition, b: &Partition) -> Partition {
    let len = a.len().max(b.len());
    Partition { rows: (0..len).map(|i| a.row(i) + b.row(i)).collect() }
}

/// Row-wise sum of formal row vectors (entries may be out of order);
/// the result must be a partition.
pub fn horizontal_sum_formal(a: &[i64], b: &[i64]) -> Result<Partition> {
    let len = a.len().max(b.len());
    let rows: Vec<i64> = (0..len)
        .map(|i| a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0))
        .collect();
    if rows.iter().any(|&r| r < 0) {
        return Err(Error::InvalidPartition(format!("{rows:?} has negative rows")));
    }
    Partition::new(rows.into_iter().map(|r| r as usize).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;
    use proptest::prelude::*;

    fn count_tableaux(p: &Partition) -> u64 {
        // fill with 1..n by repeatedly removing the largest entry
        if p.is_empty() {
            return 1;
        }
        p.remove_box().iter().map(count_tableaux).sum()
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(Partition::of(&[4, 2]).transpose(), Partition::of(&[2, 2, 1, 1]));
        assert_eq!(Partition::empty().transpose(), Partition::empty());
        assert_eq!(Partition::of(&[3, 1]).transpose(), Partition::of(&[2, 1, 1]));
    }

    #[test]
    fn invalid_partitions() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0, 1]).is_err());
        assert_eq!(Partition::new(vec![2, 1, 0, 0]).unwrap(), Partition::of(&[2, 1]));
    }

    #[test]
    fn tableaux_examples() {
        assert_eq!(num_standard_tableaux(&Partition::of(&[2, 1])), BigInt::from(2));
        assert_eq!(num_standard_tableaux(&Partition::of(&[1, 1, 1])), BigInt::from(1));
        assert_eq!(num_standard_tableaux(&Partition::of(&[2, 2])), BigInt::from(2));
        assert_eq!(count_tableaux(&Partition::of(&[2, 2])), 2);
        assert_eq!(num_standard_tableaux(&Partition::empty()), BigInt::from(1));
    }

    #[test]
    fn hook_formula_matches_enumeration() {
        for m in 0..=7 {
            for p in partitions(m) {
                assert_eq!(num_standard_tableaux(&p), BigInt::from(count_tableaux(&p)), "{p}");
            }
        }
    }

    #[test]
    fn sum_of_squares_is_group_order() {
        for m in 0..=8 {
            let s: BigInt = partitions(m).iter().map(|p| num_standard_tableaux(p).pow(2)).sum();
            assert_eq!(s, factorial(m as u64));
        }
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..10).map(|n| partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30]);
    }

    #[test]
    fn dim_sl_examples() {
        assert_eq!(dim_sl(5, &Partition::of(&[2, 1, 1, 1])), int(24));
        assert_eq!(dim_sl(7, &Partition::empty()), int(1));
        assert_eq!(dim_sl(4, &Partition::of(&[4, 2, 2])), int(84));
        assert_eq!(dim_sl(3, &Partition::of(&[1, 1, 1, 1])), int(0));
        assert_eq!(dim_sl(3, &Partition::of(&[1, 1, 1])), int(1));
    }

    #[test]
    fn dim_so_examples() {
        assert_eq!(dim_so(7, &Partition::of(&[1, 1])).unwrap(), int(21));
        assert_eq!(dim_so(9, &Partition::empty()).unwrap(), int(1));
        assert_eq!(dim_so(5, &Partition::of(&[2, 2])).unwrap(), int(35));
        assert_eq!(dim_so(7, &Partition::of(&[1])).unwrap(), int(7));
        assert_eq!(dim_so(10, &Partition::of(&[2])).unwrap(), int(54));
        assert!(dim_so(7, &Partition::of(&[1, 1, 1, 1])).is_err());
    }

    #[test]
    fn dim_sp_examples() {
        // sp(6): [1] = 6, [2] = 21 (adjoint), [1,1] = 14, [1,1,1] = 14
        assert_eq!(dim_sp(6, &Partition::of(&[1])).unwrap(), int(6));
        assert_eq!(dim_sp(6, &Partition::of(&[2])).unwrap(), int(21));
        assert_eq!(dim_sp(6, &Partition::of(&[1, 1])).unwrap(), int(14));
        assert_eq!(dim_sp(6, &Partition::of(&[1, 1, 1])).unwrap(), int(14));
        assert_eq!(dim_sp(4, &Partition::of(&[2, 2])).unwrap(), int(14));
        assert!(dim_sp(5, &Partition::of(&[1])).is_err());
    }

    #[test]
    fn horizontal_sum_examples() {
        assert_eq!(horizontal_sum(&Partition::of(&[3]), &Partition::of(&[3])), Partition::of(&[6]));
        let l = Partition::of(&[4, 2]);
        assert_eq!(horizontal_sum(&l, &Partition::empty()), l);
        assert_eq!(horizontal_sum(&l, &Partition::of(&[3, 1])), Partition::of(&[7, 3]));
        assert_eq!(horizontal_sum_formal(&[1], &[0, 1]).unwrap(), Partition::of(&[1, 1]));
    }

    #[test]
    fn power_string() {
        assert_eq!(Partition::of(&[2, 2, 2, 1, 1]).to_power_string(), "[2^3,1^2]");
        assert_eq!(Partition::empty().to_power_string(), "[]");
    }

    fn partition_strategy(max_size: usize) -> impl Strategy<Value = Partition> {
        (0..=max_size).prop_flat_map(|n| {
            let all = partitions(n);
            (0..all.len()).prop_map(move |i| all[i].clone())
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn column_formula_equals_hook_content(n in 1usize..=10, p in partition_strategy(10)) {
            let hc = if p.len() > n { int(0) } else { dim_sl_hook_content(n as i64, &p) };
            prop_assert_eq!(dim_sl(n, &p), hc);
        }

        #[test]
        fn dims_are_positive_integers(n in 5usize..=14, p in partition_strategy(8)) {
            if p.len() <= n {
                let d = dim_sl(n, &p);
                prop_assert!(d.is_integer() && d > int(0));
            }
            if p.len() <= n / 2 {
                let d = dim_so(n, &p).unwrap();
                prop_assert!(d.is_integer() && d > int(0));
                if n % 2 == 0 {
                    let d = dim_sp(n, &p).unwrap();
                    prop_assert!(d.is_integer() && d > int(0));
                }
            }
        }

        #[test]
        fn transpose_is_involution(p in partition_strategy(12)) {
            prop_assert_eq!(p.transpose().transpose(), p.clone());
            prop_assert_eq!(p.transpose().size(), p.size());
        }

        #[test]
        fn horizontal_sum_commutative_associative(a in partition_strategy(6), b in partition_strategy(6), c in partition_strategy(6)) {
            prop_assert_eq!(horizontal_sum(&a, &b), horizontal_sum(&b, &a));
            prop_assert_eq!(horizontal_sum(&horizontal_sum(&a, &b), &c), horizontal_sum(&a, &horizontal_sum(&b, &c)));
        }
    }
}
