//! Explicit sl(N) matrices: generators, structure constants, the Cartan–Killing
//! metric, split-Casimir operators, exact trace powers and projector ranks.
//!
//! Everything here is brute force and independent of the universal formulas, so it
//! serves as ground truth for sign and normalization conventions.

use crate::error::{Error, Result};
use crate::exact::{int, Rational};
use crate::linalg::Matrix;
use num_traits::{One, Zero};
use std::collections::BTreeSet;

pub const MAX_N: usize = 5;

/// Ambient dimension limit for the Cartan-power subspace construction.
pub const MAX_CARTAN_AMBIENT: usize = 100;

/// A representation: one matrix per basis element X_a of sl(N).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixRep {
    pub dim_rep: usize,
    pub generators: Vec<Matrix>,
}

/// Sparse structure constants: `f[a][b]` lists (d, X^d_ab) with [X_a, X_b] = Σ_d X^d_ab X_d.
#[derive(Debug, Clone)]
pub struct StructureConstants {
    pub f: Vec<Vec<Vec<(usize, Rational)>>>,
}

impl StructureConstants {
    pub fn dim(&self) -> usize {
        self.f.len()
    }

    fn dense(&self, a: usize, b: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.dim()];
        for (d, x) in &self.f[a][b] {
            v[*d] = x.clone();
        }
        v
    }
}

/// sl(N) with its defining and adjoint representations and the Killing metric.
#[derive(Debug, Clone)]
pub struct SlMatrices {
    pub n: usize,
    pub defining: MatrixRep,
    pub adjoint: MatrixRep,
    pub structure: StructureConstants,
    /// g_ab = Tr(ad X_a · ad X_b).
    pub killing: Matrix,
    /// g^ab.
    pub killing_inverse: Matrix,
}

/// Basis order: E_ij (i ≠ j, lexicographic), then H_k = E_kk − E_{k+1,k+1}.
fn sl_basis(n: usize) -> Vec<Matrix> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                let mut m = Matrix::zeros(n, n);
                m.set(i, j, Rational::one());
                out.push(m);
            }
        }
    }
    for k in 0..n - 1 {
        let mut m = Matrix::zeros(n, n);
        m.set(k, k, Rational::one());
        m.set(k + 1, k + 1, -Rational::one());
        out.push(m);
    }
    out
}

/// Coordinates of a traceless N×N matrix in [`sl_basis`].
fn sl_coords(n: usize, m: &Matrix) -> Result<Vec<Rational>> {
    let mut out = Vec::with_capacity(n * n - 1);
    for i in 0..n {
        for j in 0..n {
            if i != j {
                out.push(m.get(i, j).clone());
            }
        }
    }
    let mut acc = Rational::zero();
    for k in 0..n - 1 {
        acc += m.get(k, k);
        out.push(acc.clone());
    }
    if !(acc + m.get(n - 1, n - 1)).is_zero() {
        return Err(Error::Spectrum("matrix is not traceless".into()));
    }
    Ok(out)
}

/// Generators, structure constants and the Killing metric of sl(N), 2 ≤ N ≤ 5.
pub fn build_sl(n: usize) -> Result<SlMatrices> {
    if !(2..=MAX_N).contains(&n) {
        return Err(Error::OutOfRange(format!("explicit matrices need 2 <= N <= {MAX_N}, got {n}")));
    }
    let basis = sl_basis(n);
    let dim = basis.len();
    let mut f = vec![vec![Vec::new(); dim]; dim];
    for a in 0..dim {
        for b in 0..dim {
            let c = sl_coords(n, &basis[a].commutator(&basis[b]))?;
            f[a][b] = c.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect();
        }
    }
    let structure = StructureConstants { f };
    // (ad X_a)_{d b} = X^d_{ab}
    let adjoint_gens: Vec<Matrix> = (0..dim)
        .map(|a| {
            let mut m = Matrix::zeros(dim, dim);
            for b in 0..dim {
                for (d, x) in &structure.f[a][b] {
                    m.set(*d, b, x.clone());
                }
            }
            m
        })
        .collect();
    let mut killing = Matrix::zeros(dim, dim);
    for a in 0..dim {
        for b in a..dim {
            let v = adjoint_gens[a].trace_of_product(&adjoint_gens[b]);
            killing.set(a, b, v.clone());
            killing.set(b, a, v);
        }
    }
    let killing_inverse = killing.inverse().map_err(|_| Error::Spectrum("Killing metric is degenerate".into()))?;
    Ok(SlMatrices {
        n,
        defining: MatrixRep { dim_rep: n, generators: basis },
        adjoint: MatrixRep { dim_rep: dim, generators: adjoint_gens },
        structure,
        killing,
        killing_inverse,
    })
}

impl SlMatrices {
    pub fn dim_g(&self) -> usize {
        self.structure.dim()
    }

    /// Nonzero entries of g^{ab}.
    fn inverse_entries(&self) -> Vec<(usize, usize, Rational)> {
        let d = self.dim_g();
        let mut out = Vec::new();
        for a in 0..d {
            for b in 0..d {
                let x = self.killing_inverse.get(a, b);
                if !x.is_zero() {
                    out.push((a, b, x.clone()));
                }
            }
        }
        out
    }

    /// g^{ab} T(X_a) T(X_b).
    pub fn casimir_operator(&self, rep: &MatrixRep) -> Matrix {
        let mut acc = Matrix::zeros(rep.dim_rep, rep.dim_rep);
        for (a, b, x) in self.inverse_entries() {
            acc = acc.add(&rep.generators[a].mul(&rep.generators[b]).scale(&x));
        }
        acc
    }

    /// The scalar c₂ of an irreducible representation (error if the Casimir is not scalar).
    pub fn casimir_value(&self, rep: &MatrixRep) -> Result<Rational> {
        let c = self.casimir_operator(rep);
        let v = c.get(0, 0).clone();
        if c != Matrix::identity(rep.dim_rep).scale(&v) {
            return Err(Error::Spectrum("Casimir operator is not scalar".into()));
        }
        Ok(v)
    }

    /// d^(T) with Tr(T(X_a) T(X_b)) = d^(T) g_ab (error if not proportional).
    pub fn index(&self, rep: &MatrixRep) -> Result<Rational> {
        let d = self.dim_g();
        let mut ratio: Option<Rational> = None;
        for a in 0..d {
            for b in 0..d {
                let t = rep.generators[a].trace_of_product(&rep.generators[b]);
                let g = self.killing.get(a, b);
                if g.is_zero() {
                    if !t.is_zero() {
                        return Err(Error::Spectrum("trace form is not proportional to the Killing metric".into()));
                    }
                    continue;
                }
                let r = t / g;
                match &ratio {
                    None => ratio = Some(r),
                    Some(x) if *x != r => {
                        return Err(Error::Spectrum("trace form is not proportional to the Killing metric".into()))
                    }
                    _ => {}
                }
            }
        }
        ratio.ok_or_else(|| Error::Spectrum("empty metric".into()))
    }

    /// [[X_a,X_b],X_c] + [[X_b,X_c],X_a] + [[X_c,X_a],X_b] = 0 on all basis triples.
    pub fn check_jacobi(&self) -> bool {
        let d = self.dim_g();
        let f = &self.structure.f;
        let bracket = |coords: &[(usize, Rational)], c: usize, out: &mut [Rational]| {
            for (e, x) in coords {
                for (h, y) in &f[*e][c] {
                    out[*h] += x * y;
                }
            }
        };
        for a in 0..d {
            for b in 0..d {
                for c in 0..d {
                    let mut acc = vec![Rational::zero(); d];
                    bracket(&f[a][b], c, &mut acc);
                    bracket(&f[b][c], a, &mut acc);
                    bracket(&f[c][a], b, &mut acc);
                    if acc.iter().any(|x| !x.is_zero()) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// g([X_a,X_b],X_c) + g(X_b,[X_a,X_c]) = 0 on all basis triples.
    pub fn check_ad_invariance(&self) -> bool {
        let d = self.dim_g();
        for a in 0..d {
            for b in 0..d {
                let ab = self.structure.dense(a, b);
                for c in 0..d {
                    let ac = self.structure.dense(a, c);
                    let s: Rational = (0..d).map(|e| &ab[e] * self.killing.get(e, c) + self.killing.get(b, e) * &ac[e]).sum();
                    if !s.is_zero() {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Traceless generators with [T_a, T_b] = Σ_d X^d_ab T_d.
    pub fn check_closure(&self, rep: &MatrixRep) -> bool {
        let d = self.dim_g();
        if rep.generators.len() != d || rep.generators.iter().any(|t| !t.trace().is_zero()) {
            return false;
        }
        for a in 0..d {
            for b in 0..d {
                let lhs = rep.generators[a].commutator(&rep.generators[b]);
                let mut rhs = Matrix::zeros(rep.dim_rep, rep.dim_rep);
                for (e, x) in &self.structure.f[a][b] {
                    rhs = rhs.add(&rep.generators[*e].scale(x));
                }
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }

    /// Index of the highest-root vector E_{1N} in the basis.
    fn highest_root_index(&self) -> usize {
        // E_ij with i < j come in lexicographic order; E_{0,N-1} is the (N-1)-th off-diagonal entry of row 0
        self.n - 2
    }

    /// The Cartan power Y_n as the submodule of ad^⊗n generated by (E_1N)^⊗n.
    pub fn cartan_power(&self, n: usize) -> Result<MatrixRep> {
        if n == 0 {
            return Err(Error::OutOfRange("n must be at least 1".into()));
        }
        if n == 1 {
            return Ok(self.adjoint.clone());
        }
        let d = self.dim_g();
        let ambient = d.checked_pow(n as u32).filter(|&x| x <= MAX_CARTAN_AMBIENT).ok_or_else(|| {
            Error::OutOfRange(format!("ad^{n} of sl({}) exceeds the matrix budget {MAX_CARTAN_AMBIENT}", self.n))
        })?;
        let mut rep = self.adjoint.clone();
        for _ in 1..n {
            rep = tensor_rep(&rep, &self.adjoint);
        }
        debug_assert_eq!(rep.dim_rep, ambient);
        let top = self.highest_root_index();
        let mut index = 0;
        for _ in 0..n {
            index = index * d + top;
        }
        let mut seed = vec![Rational::zero(); ambient];
        seed[index] = Rational::one();
        cyclic_submodule(&rep, seed)
    }
}

/// T₁ ⊗ 1 + 1 ⊗ T₂ on the tensor product.
pub fn tensor_rep(r1: &MatrixRep, r2: &MatrixRep) -> MatrixRep {
    let i1 = Matrix::identity(r1.dim_rep);
    let i2 = Matrix::identity(r2.dim_rep);
    let generators = r1
        .generators
        .iter()
        .zip(&r2.generators)
        .map(|(a, b)| {
            let mut m = Matrix::kron(a, &i2);
            m.add_kron(&Rational::one(), &i1, b);
            m
        })
        .collect();
    MatrixRep { dim_rep: r1.dim_rep * r2.dim_rep, generators }
}

/// Incremental row-echelon span, used to grow submodules and express vectors in a basis.
struct Span {
    /// Echelon rows with their pivot columns (pivot entry normalized to 1).
    echelon: Vec<(usize, Vec<Rational>)>,
    basis: Vec<Vec<Rational>>,
}

impl Span {
    fn new() -> Self {
        Span { echelon: Vec::new(), basis: Vec::new() }
    }

    fn reduce(&self, v: &mut [Rational]) {
        for (p, row) in &self.echelon {
            if v[*p].is_zero() {
                continue;
            }
            let f = v[*p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x -= &f * r;
                }
            }
        }
    }

    fn try_add(&mut self, v: Vec<Rational>) -> bool {
        let mut w = v.clone();
        self.reduce(&mut w);
        let Some(p) = w.iter().position(|x| !x.is_zero()) else { return false };
        let piv = w[p].clone();
        for x in w.iter_mut() {
            *x /= &piv;
        }
        self.echelon.push((p, w));
        self.basis.push(v);
        true
    }
}

fn apply(m: &Matrix, v: &[Rational]) -> Vec<Rational> {
    (0..m.rows())
        .map(|i| {
            let mut acc = Rational::zero();
            for (j, x) in v.iter().enumerate() {
                if !x.is_zero() {
                    let a = m.get(i, j);
                    if !a.is_zero() {
                        acc += a * x;
                    }
                }
            }
            acc
        })
        .collect()
}

/// The smallest invariant subspace containing `seed`, with the restricted generators.
pub fn cyclic_submodule(rep: &MatrixRep, seed: Vec<Rational>) -> Result<MatrixRep> {
    let mut span = Span::new();
    let mut queue = vec![seed.clone()];
    span.try_add(seed);
    while let Some(v) = queue.pop() {
        for g in &rep.generators {
            let w = apply(g, &v);
            if span.try_add(w.clone()) {
                queue.push(w);
            }
        }
    }
    let r = span.basis.len();
    // rows where the basis matrix is invertible
    let mut rows = Span::new();
    let mut pivots = Vec::new();
    for i in 0..rep.dim_rep {
        let row: Vec<Rational> = span.basis.iter().map(|b| b[i].clone()).collect();
        if rows.try_add(row) {
            pivots.push(i);
        }
        if pivots.len() == r {
            break;
        }
    }
    let square = Matrix::from_rows(pivots.iter().map(|&i| span.basis.iter().map(|b| b[i].clone()).collect()).collect());
    let inv = square.inverse()?;
    let generators = rep
        .generators
        .iter()
        .map(|g| {
            let mut m = Matrix::zeros(r, r);
            for (j, b) in span.basis.iter().enumerate() {
                let image = apply(g, b);
                let picked: Vec<Rational> = pivots.iter().map(|&i| image[i].clone()).collect();
                let coords = apply(&inv, &picked);
                for (i, c) in coords.into_iter().enumerate() {
                    m.set(i, j, c);
                }
            }
            m
        })
        .collect();
    Ok(MatrixRep { dim_rep: r, generators })
}

/// Ĉ = g^{ab} T⁽¹⁾(X_a) ⊗ T⁽²⁾(X_b).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitCasimirMatrix {
    pub matrix: Matrix,
}

impl SplitCasimirMatrix {
    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }
}

pub fn split_casimir_matrix(r1: &MatrixRep, r2: &MatrixRep, killing_inverse: &Matrix) -> SplitCasimirMatrix {
    let mut m = Matrix::zeros(r1.dim_rep * r2.dim_rep, r1.dim_rep * r2.dim_rep);
    for a in 0..killing_inverse.rows() {
        for b in 0..killing_inverse.cols() {
            let x = killing_inverse.get(a, b);
            if !x.is_zero() {
                m.add_kron(x, &r1.generators[a], &r2.generators[b]);
            }
        }
    }
    SplitCasimirMatrix { matrix: m }
}

/// Ĉ on □⊗ad for sl(N).
pub fn box_times_adjoint(n: usize) -> Result<(SlMatrices, SplitCasimirMatrix)> {
    let sl = build_sl(n)?;
    let c = split_casimir_matrix(&sl.defining, &sl.adjoint, &sl.killing_inverse);
    Ok((sl, c))
}

/// Ĉ on □⊗Y_n for sl(N), with Y_n built as a Cartan-power subspace.
pub fn box_times_yn(big_n: usize, n: usize) -> Result<(SlMatrices, SplitCasimirMatrix)> {
    let sl = build_sl(big_n)?;
    let yn = sl.cartan_power(n)?;
    let c = split_casimir_matrix(&sl.defining, &yn, &sl.killing_inverse);
    Ok((sl, c))
}

/// Tr(Ĉ^L) for L = 0..=max_l, forming only powers up to ⌈max_l/2⌉.
pub fn trace_powers(c: &SplitCasimirMatrix, max_l: u32) -> Vec<Rational> {
    let half = max_l.div_ceil(2) as usize;
    let mut powers = vec![Matrix::identity(c.dim())];
    for k in 1..=half.max(1) {
        let next = powers[k - 1].mul_par(&c.matrix);
        powers.push(next);
    }
    (0..=max_l as usize)
        .map(|l| {
            let a = l / 2;
            powers[a].trace_of_product(&powers[l - a])
        })
        .collect()
}

pub fn trace_power_matrix(c: &SplitCasimirMatrix, l: u32) -> Rational {
    trace_powers(c, l).pop().expect("nonempty")
}

fn shifted(c: &SplitCasimirMatrix, r: &Rational) -> Matrix {
    c.matrix.shift(r)
}

/// ∏ (Ĉ − r) over `roots` vanishes.
pub fn annihilates(c: &SplitCasimirMatrix, roots: &[Rational]) -> bool {
    let Some((first, rest)) = roots.split_first() else { return c.dim() == 0 };
    let mut acc = shifted(c, first);
    for r in rest {
        acc = acc.mul_par(&shifted(c, r));
    }
    acc.is_zero()
}

fn require_distinct(roots: &[Rational]) -> Result<()> {
    let set: BTreeSet<&Rational> = roots.iter().collect();
    if set.len() != roots.len() {
        return Err(Error::Degenerate("candidate roots must be distinct".into()));
    }
    Ok(())
}

/// Multiplicity of each candidate as dim ker(Ĉ − r); errors unless they fill the space.
pub fn spectrum(c: &SplitCasimirMatrix, candidates: &[Rational]) -> Result<Vec<(Rational, usize)>> {
    require_distinct(candidates)?;
    let out: Vec<(Rational, usize)> = candidates.iter().map(|r| (r.clone(), c.dim() - shifted(c, r).rank())).collect();
    let total: usize = out.iter().map(|(_, m)| m).sum();
    if total != c.dim() {
        return Err(Error::Spectrum(format!(
            "candidate eigenvalues account for {total} of {} dimensions",
            c.dim()
        )));
    }
    Ok(out)
}

/// The candidates that actually occur, after checking that their product annihilates Ĉ
/// and that no factor can be dropped.
pub fn minimal_polynomial_roots(c: &SplitCasimirMatrix, candidates: &[Rational]) -> Result<Vec<Rational>> {
    let roots: Vec<Rational> = spectrum(c, candidates)?.into_iter().filter(|(_, m)| *m > 0).map(|(r, _)| r).collect();
    if !annihilates(c, &roots) {
        return Err(Error::Spectrum("Ĉ is not diagonalizable over the candidate roots".into()));
    }
    for i in 0..roots.len() {
        let fewer: Vec<Rational> = roots.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, r)| r.clone()).collect();
        if annihilates(c, &fewer) {
            return Err(Error::Spectrum(format!("factor for {} is redundant", roots[i])));
        }
    }
    Ok(roots)
}

/// The Lagrange projector ∏_{j≠i} (Ĉ − r_j)/(r_i − r_j).
pub fn projector(c: &SplitCasimirMatrix, roots: &[Rational], i: usize) -> Result<Matrix> {
    require_distinct(roots)?;
    if i >= roots.len() {
        return Err(Error::OutOfRange(format!("root index {i} of {}", roots.len())));
    }
    if !annihilates(c, roots) {
        return Err(Error::Spectrum("the roots miss an eigenvalue: their product does not annihilate Ĉ".into()));
    }
    let mut acc = Matrix::identity(c.dim());
    for (j, r) in roots.iter().enumerate() {
        if j != i {
            let s = (&roots[i] - r).recip();
            acc = acc.mul_par(&shifted(c, r).scale(&s));
        }
    }
    Ok(acc)
}

/// Rank (= trace) of the projector onto the eigenvalue `roots[i]`.
pub fn projector_rank(c: &SplitCasimirMatrix, roots: &[Rational], i: usize) -> Result<usize> {
    let p = projector(c, roots, i)?;
    let rank = p.rank();
    if p.trace() != int(rank as i64) {
        return Err(Error::Spectrum("projector trace differs from its rank".into()));
    }
    Ok(rank)
}
