//! Vogel parameters and the universal formulas built on them: dimensions of
//! Y_k, split-Casimir eigenvalues on □⊗Y_n, the four Casimir-subspace
//! dimensions, projectors, trace identities and ladder colour factors.

use crate::casimir::{AlgebraId, Family};
use crate::error::{Error, Result};
use crate::exact::{int, pow, q, serde_str, Rational};
use crate::label::IrrepLabel;
use crate::linalg::Matrix;
use crate::young::Partition;
use num_traits::{One, Zero};
use serde::Serialize;
use std::fmt;

/// Homogeneous and standard Vogel parameters of one algebra (or of a formal N).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VogelParams {
    pub family: Family,
    /// N for the classical series; may be any nonzero rational for formal evaluation.
    #[serde(skip_serializing_if = "Option::is_none", with = "opt_rat")]
    pub big_n: Option<Rational>,
    #[serde(with = "serde_str")]
    pub alpha: Rational,
    #[serde(with = "serde_str")]
    pub beta: Rational,
    #[serde(with = "serde_str")]
    pub gamma: Rational,
    #[serde(with = "serde_str")]
    pub t: Rational,
    #[serde(with = "serde_str")]
    pub alpha_hat: Rational,
    #[serde(with = "serde_str")]
    pub beta_hat: Rational,
    #[serde(with = "serde_str")]
    pub gamma_hat: Rational,
    /// β̂ and γ̂ exchanged (the β̂′, γ̂′ convention of the classical multiplet table).
    pub swapped: bool,
}

mod opt_rat {
    use crate::exact::{to_string, Rational};
    use serde::Serializer;

    pub fn serialize<S: Serializer>(r: &Option<Rational>, s: S) -> std::result::Result<S::Ok, S::Error> {
        match r {
            Some(r) => s.serialize_str(&to_string(r)),
            None => s.serialize_none(),
        }
    }
}

/// Standard (α, β, γ) with α = −2.
fn standard(family: Family, n: &Rational) -> (Rational, Rational, Rational) {
    let m2 = int(-2);
    match family {
        Family::SL => (m2, int(2), n.clone()),
        Family::SO => (m2, int(4), n - int(4)),
        Family::SP => (m2, int(1), n / int(2) + int(2)),
        Family::G2 => (m2, q(10, 3), q(8, 3)),
        Family::F4 => (m2, int(5), int(6)),
        Family::E6 => (m2, int(6), int(8)),
        Family::E7 => (m2, int(8), int(12)),
        Family::E8 => (m2, int(12), int(20)),
    }
}

impl VogelParams {
    /// Parameters for a classical family at a formal (possibly negative or
    /// fractional) N, or for an exceptional algebra when `n` is `None`.
    pub fn formal(family: Family, n: Option<Rational>, swapped: bool) -> Result<Self> {
        let nn = match (family.is_classical(), &n) {
            (true, Some(v)) => v.clone(),
            (true, None) => return Err(Error::InvalidAlgebra(format!("{} needs N", family.name()))),
            (false, _) => Rational::zero(),
        };
        let (alpha, beta, gamma) = standard(family, &nn);
        let t = &alpha + &beta + &gamma;
        if t.is_zero() {
            return Err(Error::VanishingDenominator(format!("t = α+β+γ vanishes for {} at N = {nn}", family.name())));
        }
        let two_t = &t * int(2);
        let (alpha_hat, mut beta_hat, mut gamma_hat) = (&alpha / &two_t, &beta / &two_t, &gamma / &two_t);
        let swapped = swapped && family.is_classical();
        if swapped {
            std::mem::swap(&mut beta_hat, &mut gamma_hat);
        }
        Ok(VogelParams {
            family,
            big_n: if family.is_classical() { n } else { None },
            alpha,
            beta,
            gamma,
            t,
            alpha_hat,
            beta_hat,
            gamma_hat,
            swapped,
        })
    }

    /// The same algebra without the β̂′/γ̂′ relabelling.
    pub fn plain(&self) -> Self {
        let mut p = self.clone();
        if p.swapped {
            std::mem::swap(&mut p.beta_hat, &mut p.gamma_hat);
            p.swapped = false;
        }
        p
    }

    /// α̂ ↔ β̂: turns every Y_k formula into its Y_k′ counterpart.
    pub fn exchange_alpha_beta(&self) -> Self {
        let mut p = self.clone();
        std::mem::swap(&mut p.alpha_hat, &mut p.beta_hat);
        p
    }

    /// α̂ ↔ γ̂: Y_k″.
    pub fn exchange_alpha_gamma(&self) -> Self {
        let mut p = self.clone();
        std::mem::swap(&mut p.alpha_hat, &mut p.gamma_hat);
        p
    }
}

impl fmt::Display for VogelParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "α̂={}, β̂={}, γ̂={}", self.alpha_hat, self.beta_hat, self.gamma_hat)
    }
}

/// Vogel parameters of `g`; `swapped` exchanges β̂ and γ̂ for classical algebras only.
pub fn params(g: &AlgebraId, swapped: bool) -> VogelParams {
    VogelParams::formal(g.family(), g.n().map(|n| int(n as i64)), swapped).expect("valid algebra has t ≠ 0")
}

/// The convention of the multiplet tables: swapped for classical, plain for exceptional.
pub fn table_params(g: &AlgebraId) -> VogelParams {
    params(g, g.is_classical())
}

/// The table data per algebra: dim □, dim g and the normalized c₂(□).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub algebra: AlgebraId,
    pub params: VogelParams,
    #[serde(with = "serde_str")]
    pub dim_box: Rational,
    #[serde(with = "serde_str")]
    pub dim_g: Rational,
    #[serde(with = "serde_str")]
    pub c2_box: Rational,
}

pub fn dim_box(g: &AlgebraId) -> Rational {
    match g.family() {
        Family::SL | Family::SO | Family::SP => int(g.n().unwrap() as i64),
        Family::G2 => int(7),
        Family::F4 => int(26),
        Family::E6 => int(27),
        Family::E7 => int(56),
        Family::E8 => int(248),
    }
}

pub fn dim_g(g: &AlgebraId) -> Rational {
    let n = g.n().map_or(0, |n| n as i64);
    match g.family() {
        Family::SL => int(n * n - 1),
        Family::SO => int(n * (n - 1) / 2),
        Family::SP => int(n * (n + 1) / 2),
        Family::G2 => int(14),
        Family::F4 => int(52),
        Family::E6 => int(78),
        Family::E7 => int(133),
        Family::E8 => int(248),
    }
}

/// Normalized Casimir of □ (the adjoint has value 1).
pub fn c2_box(g: &AlgebraId) -> Rational {
    let n = g.n().map_or(0, |n| n as i64);
    match g.family() {
        Family::SL => q(n * n - 1, 2 * n * n),
        Family::SO => q(n - 1, 2 * (n - 2)),
        Family::SP => q(n + 1, 2 * (n + 2)),
        Family::G2 => q(1, 2),
        Family::F4 => q(2, 3),
        Family::E6 => q(13, 18),
        Family::E7 => q(19, 24),
        Family::E8 => int(1),
    }
}

pub fn table_row(g: &AlgebraId) -> TableRow {
    TableRow { algebra: *g, params: params(g, false), dim_box: dim_box(g), dim_g: dim_g(g), c2_box: c2_box(g) }
}

fn nonzero(x: &Rational, what: &str) -> Result<()> {
    if x.is_zero() {
        Err(Error::VanishingDenominator(what.to_string()))
    } else {
        Ok(())
    }
}

/// dim g = (α̂−1)(β̂−1)(γ̂−1)/(α̂β̂γ̂).
pub fn dim_g_universal(p: &VogelParams) -> Result<Rational> {
    let (a, b, c) = (&p.alpha_hat, &p.beta_hat, &p.gamma_hat);
    nonzero(a, "α̂")?;
    nonzero(b, "β̂")?;
    nonzero(c, "γ̂")?;
    let one = Rational::one();
    Ok((a - &one) * (b - &one) * (c - &one) / (a * b * c))
}

/// dim Y_k(α̂); exchange the parameters first for Y_k′ or Y_k″.
pub fn dim_yk_universal(p: &VogelParams, k: usize) -> Result<Rational> {
    let (a, b, c) = (&p.alpha_hat, &p.beta_hat, &p.gamma_hat);
    let one = Rational::one();
    let kk = int(k as i64);
    if k > 0 {
        nonzero(a, "α̂")?;
    }
    let head_den = &one - (&kk - &one) * a;
    nonzero(&head_den, &format!("1 − (k−1)α̂ at k = {k}"))?;
    let mut num = &one - (&kk * int(2) - &one) * a;
    let mut den = head_den * pow(a, k as u32) * Rational::from(crate::exact::factorial(k as u64));
    for l in 0..k {
        let la = int(l as i64) * a;
        let db = b - &la;
        let dc = c - &la;
        nonzero(&db, &format!("β̂ − {l}α̂"))?;
        nonzero(&dc, &format!("γ̂ − {l}α̂"))?;
        num *= (&la - &one) * (b + &la - &one) * (c + &la - &one);
        den *= db * dc;
    }
    Ok(num / den)
}

/// Normalized c₂(Y_n) = n(1 − α̂n + α̂), or with β̂ for Y_n′.
pub fn c2_yn_universal(p: &VogelParams, n: usize, primed: bool) -> Rational {
    let x = if primed { &p.beta_hat } else { &p.alpha_hat };
    let n = int(n as i64);
    &n * (Rational::one() - x * &n + x)
}

/// c₂(□) = α̂β̂ dim g/(4(γ̂−1)) (classical branch) or α̂γ̂ dim g/(4(β̂−1)) (exceptional branch).
pub fn c2_box_formula(p: &VogelParams, classical_branch: bool) -> Result<Rational> {
    let dg = dim_g_universal(p)?;
    let one = Rational::one();
    let (x, y) = if classical_branch { (&p.beta_hat, &p.gamma_hat) } else { (&p.gamma_hat, &p.beta_hat) };
    let den = (y - &one) * int(4);
    nonzero(&den, "c₂(□) denominator")?;
    Ok(&p.alpha_hat * x * dg / den)
}

/// The four split-Casimir eigenvalues a₁..a₄ on □⊗Y_n.
pub fn eigenvalues(p: &VogelParams, n: usize) -> [Rational; 4] {
    let half = q(1, 2);
    let nn = int(n as i64);
    let one = Rational::one();
    [
        -&half * (&one + &p.alpha_hat * (&one - &nn)),
        -(&nn * &p.alpha_hat) * &half,
        -(&p.beta_hat * &half),
        -(&p.gamma_hat * &half),
    ]
}

/// Roots of the characteristic identity of Ĉ on □⊗Y_n (four roots) or, for
/// classical algebras, on □⊗Y_n′ (three roots, α̂ ↔ β̂).
pub fn char_identity_roots(p: &VogelParams, n: usize, primed: bool) -> Result<Vec<Rational>> {
    if n == 0 {
        return Err(Error::OutOfRange("n must be at least 1".into()));
    }
    if !primed {
        return Ok(eigenvalues(p, n).to_vec());
    }
    if !p.family.is_classical() {
        return Err(Error::Unsupported(format!(
            "{} has no universal characteristic identity on □⊗Y_n'",
            p.family.name()
        )));
    }
    let e = eigenvalues(&p.plain().exchange_alpha_beta(), n);
    Ok(vec![e[0].clone(), e[1].clone(), e[2].clone()])
}

/// Λ₁..Λ₄ of the universal decomposition □⊗Y_n = Λ₁ + Λ₂ + Λ₃ + Λ₄.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum MultipletIndex {
    #[serde(rename = "Λ1")]
    L1,
    #[serde(rename = "Λ2")]
    L2,
    #[serde(rename = "Λ3")]
    L3,
    #[serde(rename = "Λ4")]
    L4,
}

impl MultipletIndex {
    pub const ALL: [MultipletIndex; 4] = [MultipletIndex::L1, MultipletIndex::L2, MultipletIndex::L3, MultipletIndex::L4];

    /// Position (0-based) of the eigenvalue a_i that this multiplet carries:
    /// Λ₁ ↔ a₂, Λ₂ ↔ a₁, Λ₃ ↔ a₄, Λ₄ ↔ a₃.
    pub fn slot(self) -> usize {
        match self {
            MultipletIndex::L1 => 1,
            MultipletIndex::L2 => 0,
            MultipletIndex::L3 => 3,
            MultipletIndex::L4 => 2,
        }
    }
}

impl fmt::Display for MultipletIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let i = match self {
            MultipletIndex::L1 => 1,
            MultipletIndex::L2 => 2,
            MultipletIndex::L3 => 3,
            MultipletIndex::L4 => 4,
        };
        write!(f, "Λ{i}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UniversalMultiplet {
    pub index: MultipletIndex,
    #[serde(with = "serde_str")]
    pub eigenvalue: Rational,
    #[serde(with = "serde_str")]
    pub dimension: Rational,
    pub label: Option<IrrepLabel>,
}

/// Labels of Λ₁..Λ₄ for `g` at level n; `None` marks the empty multiplet.
/// Under the swapped convention the classical Λ₃ and Λ₄ exchange.
pub fn box_yn_labels(g: &AlgebraId, n: usize, swapped: bool) -> Result<[Option<IrrepLabel>; 4]> {
    if n == 0 {
        return Err(Error::OutOfRange("n must be at least 1".into()));
    }
    let d = |rows: &[usize]| Some(IrrepLabel::Diagram(Partition::of(rows)));
    let mut labels = match g.family() {
        Family::SL => [
            Some(IrrepLabel::composite(&[n + 1], &[n])),
            Some(IrrepLabel::composite(&[n], &[n - 1])),
            None,
            Some(IrrepLabel::composite(&[n, 1], &[n])),
        ],
        Family::SO => [d(&[n + 1, n]), d(&[n, n - 1]), None, d(&[n, n, 1])],
        Family::SP => [d(&[2 * n + 1]), d(&[2 * n - 1]), None, d(&[2 * n, 1])],
        Family::E8 => return Err(e8_guidance()),
        f => {
            let rank = g.rank();
            let ad = crate::rootsys::adjoint_index(f).expect("exceptional");
            let bx = crate::rootsys::box_index(f);
            let (x_index, x_coef) = match f {
                Family::G2 => (0, 2),
                Family::F4 => (2, 1),
                Family::E6 => (3, 1),
                Family::E7 => (5, 1),
                _ => unreachable!(),
            };
            let w = |ad_coef: usize, extra: (usize, u32)| {
                let mut v = vec![0u32; rank];
                v[ad] += ad_coef as u32;
                v[extra.0] += extra.1;
                Some(IrrepLabel::weight(v))
            };
            [w(n, (bx, 1)), w(n - 1, (bx, 1)), w(n - 1, (x_index, x_coef)), None]
        }
    };
    if swapped && g.is_classical() {
        labels.swap(2, 3);
    }
    Ok(labels)
}

fn e8_guidance() -> Error {
    Error::Unsupported(
        "e8 has □ = ad, so □⊗Y_n has no universal four-term form; use the e8 ad⊗Y_n decomposition (branch --algebra e8)".into(),
    )
}

/// dim V_{a₁}..dim V_{a₄} for the given parameters (slot order a₁..a₄).
///
/// When β̂ = γ̂ (so(8), sl(2)) the a₃ and a₄ subspaces coincide and the two
/// formulas become 0/0; the merged subspace then carries everything not in
/// V_{a₁} ⊕ V_{a₂}, assigned to the slot whose multiplet is non-empty.
pub fn slot_dims(g: &AlgebraId, p: &VogelParams, n: usize) -> Result<[Rational; 4]> {
    if g.family() == Family::E8 {
        return Err(e8_guidance());
    }
    if n == 0 {
        return Err(Error::OutOfRange("n must be at least 1".into()));
    }
    let (a, b, c) = (&p.alpha_hat, &p.beta_hat, &p.gamma_hat);
    let one = Rational::one();
    let nn = int(n as i64);
    let four = int(4);
    let c2 = c2_box(g);
    let dg = dim_g(g);
    let dy = dim_yk_universal(p, n)?;
    let common = &dy * dim_box(g) / &dg;
    let an = a * &nn;
    let ratio = |num: Rational, den: Rational, what: &str| -> Result<Rational> {
        nonzero(&den, what)?;
        Ok(num / den)
    };

    let v1 = ratio(
        (&four * a * (&an - a - &one) * (&nn - &one) * &c2 - a * b * c * &dg) * &nn * &common,
        (&an - a + c - &one) * (&an - a + b - &one) * (&one + a - &an * int(2)),
        "dim V_a1",
    )?;
    let lead = &one - &an + a;
    let v2 = ratio(
        &lead * (&four * &nn * (&one - &an) * &c2 + b * c * &dg) * &common,
        (c - &an) * (b - &an) * (&one + a - &an * int(2)),
        "dim V_a2",
    )?;
    let total = dim_box(g) * &dy;
    let (v3, v4) = if b == c {
        let rest = &total - &v1 - &v2;
        let labels = box_yn_labels(g, n, p.swapped)?;
        // slot a₃ carries Λ₄, slot a₄ carries Λ₃
        if labels[3].is_none() {
            (Rational::zero(), rest)
        } else {
            (rest, Rational::zero())
        }
    } else {
        let v3 = ratio(
            &lead * (&four * (&one - b) * &c2 + a * c * &dg) * &nn * &common,
            (c - b) * (&an - b) * (&one + a - &an - b),
            "dim V_a3",
        )?;
        let v4 = ratio(
            &lead * (&four * (&one - c) * &c2 + a * b * &dg) * &nn * &common,
            (b - c) * (&an - c) * (&one + a - &an - c),
            "dim V_a4",
        )?;
        (v3, v4)
    };
    Ok([v1, v2, v3, v4])
}

/// Whether a₃ = a₄ for these parameters (the β̂ = γ̂ locus).
pub fn is_degenerate(p: &VogelParams) -> bool {
    p.beta_hat == p.gamma_hat
}

/// The universal decomposition of □⊗Y_n in the multiplet-table convention
/// (swapped for classical algebras), listed Λ₁..Λ₄.
pub fn dims_box_yn(g: &AlgebraId, n: usize) -> Result<Vec<UniversalMultiplet>> {
    dims_box_yn_with(g, &table_params(g), n)
}

pub fn dims_box_yn_with(g: &AlgebraId, p: &VogelParams, n: usize) -> Result<Vec<UniversalMultiplet>> {
    let dims = slot_dims(g, p, n)?;
    let eig = eigenvalues(p, n);
    let labels = box_yn_labels(g, n, p.swapped)?;
    Ok(MultipletIndex::ALL
        .iter()
        .zip(labels)
        .map(|(&index, label)| UniversalMultiplet {
            index,
            eigenvalue: eig[index.slot()].clone(),
            dimension: dims[index.slot()].clone(),
            label,
        })
        .collect())
}

fn require_distinct(roots: &[Rational]) -> Result<()> {
    for i in 0..roots.len() {
        for j in i + 1..roots.len() {
            if roots[i] == roots[j] {
                return Err(Error::Degenerate(format!("a{} = a{} = {}", i + 1, j + 1, roots[i])));
            }
        }
    }
    Ok(())
}

/// Coefficients (ascending powers of x) of the Lagrange projector polynomials
/// P_i(x) = ∏_{j≠i} (x − a_j)/(a_i − a_j).
pub fn projector_coefficients(p: &VogelParams, n: usize) -> Result<[Vec<Rational>; 4]> {
    let roots = eigenvalues(p, n);
    require_distinct(&roots)?;
    Ok(std::array::from_fn(|i| lagrange_basis(&roots, i)))
}

/// Ascending coefficients of ∏_{j≠i} (x − r_j)/(r_i − r_j); roots must be distinct.
pub fn lagrange_basis(roots: &[Rational], i: usize) -> Vec<Rational> {
    let mut coeffs = vec![Rational::one()];
    let mut den = Rational::one();
    for (j, r) in roots.iter().enumerate() {
        if j == i {
            continue;
        }
        let mut next = vec![Rational::zero(); coeffs.len() + 1];
        for (k, c) in coeffs.iter().enumerate() {
            next[k + 1] += c;
            next[k] -= c * r;
        }
        coeffs = next;
        den *= &roots[i] - r;
    }
    coeffs.into_iter().map(|c| c / &den).collect()
}

pub fn eval_poly(coeffs: &[Rational], x: &Rational) -> Rational {
    coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
}

/// Tr₁₂ Ĉ^L on □⊗Y_n as the eigenvalue-weighted sum Σ a_i^L dim V_{a_i}.
pub fn trace_power(g: &AlgebraId, n: usize, l: u32) -> Result<Rational> {
    let p = table_params(g);
    let dims = slot_dims(g, &p, n)?;
    let eig = eigenvalues(&p, n);
    Ok(eig.iter().zip(&dims).map(|(a, d)| pow(a, l) * d).sum())
}

/// The closed forms of Tr₁₂ Ĉ^L for L = 0..3: dim□·dimY_n, 0,
/// c₂(□)c₂(Y_n)dim□dimY_n/dim g and −¼ of the latter.
pub fn trace_identity(g: &AlgebraId, n: usize, l: u32) -> Result<Rational> {
    if g.family() == Family::E8 {
        return Err(e8_guidance());
    }
    let p = params(g, false);
    let base = dim_box(g) * dim_yk_universal(&p, n)?;
    let sq = || c2_box(g) * c2_yn_universal(&p, n, false) * &base / dim_g(g);
    match l {
        0 => Ok(base),
        1 => Ok(Rational::zero()),
        2 => Ok(sq()),
        3 => Ok(-sq() / int(4)),
        _ => Err(Error::OutOfRange(format!("closed trace forms exist for L ≤ 3, got {l}"))),
    }
}

/// Solves the Vandermonde system Σ_ℓ a_ℓ^{k} dim_ℓ = Tr Ĉ^{k} (k = 0..3) for the
/// four subspace dimensions (slot order a₁..a₄).
pub fn vandermonde_dims(g: &AlgebraId, p: &VogelParams, n: usize) -> Result<[Rational; 4]> {
    let roots = eigenvalues(p, n);
    require_distinct(&roots)?;
    let a = Matrix::from_rows((0..4).map(|k| roots.iter().map(|r| pow(r, k)).collect()).collect());
    let rhs = (0..4).map(|k| trace_identity(g, n, k)).collect::<Result<Vec<_>>>()?;
    let x = a.solve(&rhs)?;
    Ok(std::array::from_fn(|i| x[i].clone()))
}

/// The scalar multiplying I₂ in Tr₁ Ĉ^L_{□⊗ad} (the L-rung ladder colour factor).
pub fn ladder_factor(g: &AlgebraId, l: u32) -> Result<Rational> {
    if g.family() == Family::E8 {
        return Err(e8_guidance());
    }
    let p = table_params(g);
    let (a, b, c) = (&p.alpha_hat, &p.beta_hat, &p.gamma_hat);
    let one = Rational::one();
    let half = q(1, 2);
    let den2 = a * b * (c - a);
    let den4 = c * b * (a - c);
    nonzero(&den2, "α̂β̂′(γ̂′−α̂)")?;
    nonzero(&den4, "γ̂′β̂′(α̂−γ̂′)")?;
    let w2 = (&one - a - b) * (c - &one) / den2;
    let w4 = (&one - b - c) * (a - &one) / den4;
    let s = pow(&-&half, l) + pow(&-(a * &half), l) * w2 + pow(&-(c * &half), l) * w4;
    Ok(dim_box(g) / dim_g(g) * s)
}
