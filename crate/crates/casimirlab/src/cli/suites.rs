//! The `verify` suites. Each suite expands into independent jobs that run in
//! parallel; results are concatenated in job order, so reports are deterministic.

use super::report::{params, Comparison, Entry, Recorder, VerifyReport};
use crate::casimir::{split_eigenvalue, AlgebraId, Family};
use crate::composite::{check_duality, CompositePair};
use crate::decomp::{a_coeffs, ad_power, derangements_bruteforce, grouped_coefficients};
use crate::error::{Error, Result};
use crate::exact::{int, pow, Rational};
use crate::fixtures::FixtureStore;
use crate::label;
use crate::matrixoracle as mo;
use crate::young::partitions;
use crate::{closed, qdim, vogel};
use num_bigint::BigUint;
use num_traits::Zero;
use rayon::prelude::*;
use std::collections::BTreeMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Dims,
    Casimir,
    Traces,
    Projectors,
    Decomp,
    Duality,
    Qdim,
    Oracle,
    All,
}

impl Suite {
    pub const EACH: [Suite; 8] =
        [Suite::Dims, Suite::Casimir, Suite::Traces, Suite::Projectors, Suite::Decomp, Suite::Duality, Suite::Qdim, Suite::Oracle];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Dims => "dims",
            Suite::Casimir => "casimir",
            Suite::Traces => "traces",
            Suite::Projectors => "projectors",
            Suite::Decomp => "decomp",
            Suite::Duality => "duality",
            Suite::Qdim => "qdim",
            Suite::Oracle => "oracle",
            Suite::All => "all",
        }
    }
}

/// Sweep selection shared by all suites.
#[derive(Debug, Clone, Default)]
pub struct SuiteOptions {
    pub quick: bool,
    pub families: Option<Vec<Family>>,
    /// Overrides the N values of the classical families (and the N range of decomp).
    pub big_n: Option<Vec<u32>>,
    pub n: Option<Vec<usize>>,
    pub k: Option<Vec<usize>>,
    pub timings: bool,
    pub store: FixtureStore,
}

impl SuiteOptions {
    fn levels(&self) -> Vec<usize> {
        self.n.clone().unwrap_or_else(|| if self.quick { (1..=3).collect() } else { (1..=5).collect() })
    }

    fn wants(&self, f: Family) -> bool {
        self.families.as_ref().is_none_or(|fs| fs.contains(&f))
    }

    /// Algebras of the per-algebra suites. e₈ appears only when requested by name.
    pub fn algebras(&self) -> Vec<AlgebraId> {
        let default_n = |f: Family| -> Vec<u32> {
            match (f, self.quick) {
                (Family::SL, false) => (3..=12).collect(),
                (Family::SO, false) => (7..=14).collect(),
                (Family::SP, false) => (4..=12).step_by(2).collect(),
                (Family::SL, true) => (3..=5).collect(),
                (Family::SO, true) => (7..=8).collect(),
                (Family::SP, true) => vec![4, 6],
                _ => Vec::new(),
            }
        };
        let mut out = Vec::new();
        for f in Family::ALL {
            let listed = self.families.as_ref().is_some_and(|fs| fs.contains(&f));
            if !self.wants(f) || (f == Family::E8 && !listed) {
                continue;
            }
            if f.is_classical() {
                let ns = self.big_n.clone().unwrap_or_else(|| default_n(f));
                out.extend(ns.into_iter().filter_map(|n| AlgebraId::new(f, Some(n)).ok()));
            } else if !(self.quick && matches!(f, Family::E6 | Family::E7)) || listed {
                out.push(AlgebraId::exceptional(f).expect("exceptional"));
            }
        }
        out
    }
}

type Job = Box<dyn Fn(&Recorder) -> Vec<Entry> + Send + Sync>;

pub fn run(suite: Suite, opts: &SuiteOptions) -> VerifyReport {
    let suites: Vec<Suite> = if suite == Suite::All { Suite::EACH.to_vec() } else { vec![suite] };
    let jobs: Vec<Job> = suites.iter().flat_map(|&s| jobs(s, opts)).collect();
    let rec = Recorder { timings: opts.timings };
    let entries: Vec<Entry> = jobs.par_iter().map(|j| j(&rec)).collect::<Vec<_>>().concat();
    VerifyReport::new(suite.name(), entries)
}

fn jobs(suite: Suite, opts: &SuiteOptions) -> Vec<Job> {
    let per_algebra = |f: fn(&Recorder, &AlgebraId, usize) -> Vec<Entry>| -> Vec<Job> {
        let mut out: Vec<Job> = Vec::new();
        for g in opts.algebras() {
            for n in opts.levels() {
                out.push(Box::new(move |r: &Recorder| f(r, &g, n)));
            }
        }
        out
    };
    match suite {
        Suite::Dims => per_algebra(dims),
        Suite::Casimir => per_algebra(casimir),
        Suite::Traces => per_algebra(traces),
        Suite::Projectors => per_algebra(projectors),
        Suite::Decomp => decomp_jobs(opts),
        Suite::Duality => duality_jobs(opts),
        Suite::Qdim => qdim_jobs(opts),
        Suite::Oracle => oracle_jobs(opts),
        Suite::All => unreachable!("expanded by run"),
    }
}

const E8_REASON: &str = "e8 has □ = ad; no universal □⊗Y_n form";

fn fail_entry(r: &Recorder, id: &str, g: &AlgebraId, n: usize, e: Error) -> Vec<Entry> {
    vec![r.check(id, g, params(&[("n", n)]), || Err(e))]
}

fn dims(r: &Recorder, g: &AlgebraId, n: usize) -> Vec<Entry> {
    let p = params(&[("n", n)]);
    let mut out = vec![
        r.check("dims.yn.universal", g, p.clone(), || {
            Ok(Comparison::eq(&closed::dim_yn(g, n)?, &vogel::dim_yk_universal(&vogel::params(g, false), n)?))
        }),
        r.check("dims.yn.weyl", g, p.clone(), || {
            Ok(Comparison::eq(&closed::dim_yn(g, n)?, &label::weyl_dim(g, &label::yn_label(g, n))?))
        }),
    ];
    if g.family() == Family::E8 {
        out.push(r.skip("dims.box_yn", g, p, E8_REASON));
        return out;
    }
    let mults = match vogel::dims_box_yn(g, n) {
        Ok(m) => m,
        Err(e) => return fail_entry(r, "dims.box_yn", g, n, e),
    };
    out.push(r.check("dims.sum", g, p.clone(), || {
        let sum: Rational = mults.iter().map(|m| m.dimension.clone()).sum();
        Ok(Comparison::eq(&sum, &(vogel::dim_box(g) * closed::dim_yn(g, n)?)))
    }));
    out.push(r.check("dims.closed", g, p.clone(), || {
        let nonzero_sorted = |v: Vec<Rational>| {
            let mut v: Vec<Rational> = v.into_iter().filter(|d| !d.is_zero()).collect();
            v.sort();
            v.iter().map(crate::exact::to_short_string).collect::<Vec<_>>()
        };
        let closed: Vec<Rational> = closed::box_yn(g, n)?.into_iter().map(|(_, d)| d).collect();
        let universal: Vec<Rational> = mults.iter().map(|m| m.dimension.clone()).collect();
        Ok(Comparison::eq_display(&nonzero_sorted(universal), &nonzero_sorted(closed)))
    }));
    for m in &mults {
        let Some(l) = &m.label else { continue };
        if m.dimension.is_zero() {
            continue;
        }
        let mp = params(&[("n", n.to_string()), ("multiplet", m.index.to_string()), ("label", l.to_string())]);
        out.push(r.check("dims.weyl", g, mp, || Ok(Comparison::eq(&m.dimension, &label::weyl_dim(g, l)?))));
    }
    out
}

fn casimir(r: &Recorder, g: &AlgebraId, n: usize) -> Vec<Entry> {
    let p = params(&[("n", n)]);
    let yn = label::yn_label(g, n);
    let mut out = vec![r.check("casimir.yn", g, p.clone(), || {
        Ok(Comparison::eq(&vogel::c2_yn_universal(&vogel::params(g, false), n, false), &label::casimir(g, &yn)?.normalized))
    })];
    if g.family() == Family::E8 {
        out.push(r.skip("casimir.eigenvalue", g, p, E8_REASON));
        return out;
    }
    let mults = match vogel::dims_box_yn(g, n) {
        Ok(m) => m,
        Err(e) => return fail_entry(r, "casimir.eigenvalue", g, n, e),
    };
    for m in &mults {
        let Some(l) = &m.label else { continue };
        let mp = params(&[("n", n.to_string()), ("multiplet", m.index.to_string()), ("label", l.to_string())]);
        out.push(r.check("casimir.eigenvalue", g, mp.clone(), || {
            let parts = [label::casimir(g, &label::box_label(g))?, label::casimir(g, &yn)?];
            Ok(Comparison::eq(&m.eigenvalue, &split_eigenvalue(&label::casimir(g, l)?, &parts)))
        }));
        if g.is_classical() && !m.dimension.is_zero() {
            out.push(r.check("casimir.weyl", g, mp, || {
                Ok(Comparison::eq(&label::casimir(g, l)?.normalized, &label::casimir_weyl(g, l)?.normalized))
            }));
        }
    }
    out
}

fn traces(r: &Recorder, g: &AlgebraId, n: usize) -> Vec<Entry> {
    if g.family() == Family::E8 {
        return vec![r.skip("traces", g, params(&[("n", n)]), E8_REASON)];
    }
    (0..=3u32)
        .map(|l| {
            let p = params(&[("n", n.to_string()), ("L", l.to_string())]);
            r.check("traces.identity", g, p, || Ok(Comparison::eq(&vogel::trace_power(g, n, l)?, &vogel::trace_identity(g, n, l)?)))
        })
        .collect()
}

fn projectors(r: &Recorder, g: &AlgebraId, n: usize) -> Vec<Entry> {
    let p = params(&[("n", n)]);
    if g.family() == Family::E8 {
        return vec![r.skip("projectors", g, p, E8_REASON)];
    }
    let vp = vogel::table_params(g);
    if vogel::is_degenerate(&vp) {
        return vec![r.skip("projectors.vandermonde", g, p, "β̂ = γ̂: a₃ = a₄, the Vandermonde system is singular")];
    }
    vec![
        r.check("projectors.vandermonde", g, p.clone(), || {
            let a: Vec<String> = vogel::vandermonde_dims(g, &vp, n)?.iter().map(crate::exact::to_short_string).collect();
            let b: Vec<String> = vogel::slot_dims(g, &vp, n)?.iter().map(crate::exact::to_short_string).collect();
            Ok(Comparison::eq_display(&a, &b))
        }),
        r.check("projectors.lagrange", g, p, || {
            let coeffs = vogel::projector_coefficients(&vp, n)?;
            let roots = vogel::eigenvalues(&vp, n);
            let mut ok = true;
            for (i, c) in coeffs.iter().enumerate() {
                for (j, a) in roots.iter().enumerate() {
                    ok &= vogel::eval_poly(c, a) == int((i == j) as i64);
                }
            }
            let mut sum = vec![Rational::zero(); 4];
            for c in &coeffs {
                for (s, x) in sum.iter_mut().zip(c) {
                    *s += x;
                }
            }
            ok &= sum == [int(1), int(0), int(0), int(0)];
            Ok(Comparison::holds("P_i(a_j) = δ_ij and Σ P_i = 1", ok))
        }),
    ]
}

fn decomp_jobs(opts: &SuiteOptions) -> Vec<Job> {
    let ks = opts.k.clone().unwrap_or_else(|| if opts.quick { (2..=4).collect() } else { (2..=5).collect() });
    let ns: Vec<u32> = opts.big_n.clone().unwrap_or_else(|| if opts.quick { vec![6, 7] } else { (6..=9).collect() });
    let store = opts.store.clone();
    let mut out: Vec<Job> = Vec::new();
    for k in ks {
        let (store, ns) = (store.clone(), ns.clone());
        out.push(Box::new(move |r: &Recorder| decomp_power(r, k, &ns, &store)));
    }
    out.push(Box::new(move |r: &Recorder| derangements(r, &store)));
    out
}

fn decomp_power(r: &Recorder, k: usize, ns: &[u32], store: &FixtureStore) -> Vec<Entry> {
    let p = params(&[("k", k)]);
    let d = match ad_power(k) {
        Ok(d) => d,
        Err(e) => return vec![r.check("decomp.ad_power", "sl", p, || Err(e))],
    };
    let biguints = |v: Vec<BigUint>| v.iter().map(|x| x.to_string()).collect::<Vec<_>>();
    let grouped = grouped_coefficients(&d).map(|v| v.iter().map(|x| x.to_string()).collect::<Vec<_>>());
    let mut out = vec![r.check("decomp.coefficients", "sl", p.clone(), || {
        Ok(Comparison::eq_display(&grouped.clone()?, &biguints(a_coeffs(k))))
    })];
    match store.sl_ad_powers() {
        Ok(f) => {
            if let Some(expected) = f.coefficients.get(&k.to_string()) {
                let expected: Vec<String> = expected.iter().map(|x| x.to_string()).collect();
                out.push(r.check("decomp.coefficients.fixture", "sl", p.clone(), || {
                    Ok(Comparison::eq_display(&grouped.clone()?, &expected))
                }));
            }
        }
        Err(e) => out.push(r.check("decomp.coefficients.fixture", "sl", p.clone(), || Err(e))),
    }
    for &nn in ns {
        let cp = params(&[("k", k as u64), ("N", nn as u64)]);
        out.push(r.check("decomp.conservation", format!("sl({nn})"), cp, || {
            let expected = pow(&int(nn as i64 * nn as i64 - 1), k as u32);
            Ok(Comparison::eq(&d.formal_dimension_sum_sl(nn as i64)?, &expected))
        }));
    }
    out
}

fn derangements(r: &Recorder, store: &FixtureStore) -> Vec<Entry> {
    let mut out = Vec::new();
    for m in 0..=8usize {
        out.push(r.check("decomp.derangements", "sl", params(&[("m", m)]), || {
            let recursion = Rational::from_integer(a_coeffs(m)[0].clone().into());
            Ok(Comparison::eq(&int(derangements_bruteforce(m)? as i64), &recursion))
        }));
    }
    out.push(r.check("decomp.a0_list", "sl", params::<u8>(&[]), || {
        let listed: Vec<String> = store.sl_ad_powers()?.a0.iter().map(|x| x.to_string()).collect();
        let computed: Vec<String> = (0..listed.len()).map(|m| a_coeffs(m)[0].to_string()).collect();
        Ok(Comparison::eq_display(&computed, &listed))
    }));
    out
}

/// All composite pairs with |μ| + |λ| ≤ max_cells.
pub fn composite_pairs(max_cells: usize) -> Vec<CompositePair> {
    let mut out = Vec::new();
    for total in 0..=max_cells {
        for a in 0..=total {
            for mu in partitions(a) {
                for lambda in partitions(total - a) {
                    out.push(CompositePair::new(mu.clone(), lambda));
                }
            }
        }
    }
    out
}

/// The so □⊗Y_n eigenvalues (a₁, a₂, a₃) at N and the sp □⊗Y_n′ roots at −N.
pub fn so_sp_triples(n: usize, big_n: i64) -> Result<(Vec<Rational>, Vec<Rational>)> {
    let so = vogel::VogelParams::formal(Family::SO, Some(int(big_n)), false)?;
    let sp = vogel::VogelParams::formal(Family::SP, Some(int(-big_n)), false)?;
    let e = vogel::eigenvalues(&so, n);
    Ok((e[..3].to_vec(), vogel::char_identity_roots(&sp, n, true)?))
}

fn duality_jobs(opts: &SuiteOptions) -> Vec<Job> {
    let max_cells = if opts.quick { 3 } else { 4 };
    let samples: Vec<usize> = (1..=40).collect();
    let mut out: Vec<Job> = composite_pairs(max_cells)
        .into_iter()
        .map(|pair| {
            let samples = samples.clone();
            Box::new(move |r: &Recorder| {
                vec![r.check("duality.composite", "sl", params(&[("pair", pair.to_string())]), || {
                    Ok(Comparison::holds(format!("dim{pair}(−N)"), check_duality(&pair, &samples)?))
                })]
            }) as Job
        })
        .collect();
    for n in opts.levels() {
        out.push(Box::new(move |r: &Recorder| {
            // Each eigenvalue is a ratio of polynomials of degree ≤ 1 in N, so the
            // cross-multiplied difference has degree ≤ 2: six samples decide it.
            vec![r.check("duality.so_sp", "so/sp", params(&[("n", n)]), || {
                let mut ok = true;
                for big_n in 7..=12 {
                    let (so, sp) = so_sp_triples(n, big_n)?;
                    ok &= so == sp;
                }
                Ok(Comparison::holds("so(N) □⊗Y_n roots = sp(−N) □⊗Y_n′ roots", ok))
            })]
        }));
    }
    out
}

fn qdim_jobs(opts: &SuiteOptions) -> Vec<Job> {
    let (n_max, lvl_max, m_max) = if opts.quick { (5, 2, 4) } else { (10, 5, 10) };
    let ns: Vec<usize> = opts.big_n.as_ref().map_or_else(|| (1..=n_max).collect(), |v| v.iter().map(|&x| x as usize).collect());
    let levels: Vec<usize> = opts.n.clone().unwrap_or_else(|| (1..=lvl_max).collect());
    let mut out: Vec<Job> = Vec::new();
    // the branching identity needs N ≥ 2; the second identity holds for every N ≥ 1
    for &big_n in ns.iter().filter(|&&n| n >= 2) {
        for &n in &levels {
            out.push(Box::new(move |r: &Recorder| {
                let p = params(&[("N", big_n), ("n", n)]);
                let alg = format!("sl({big_n})");
                vec![
                    r.check("qdim.identity1", &alg, p.clone(), || {
                        let id = qdim::q_identity_1(big_n, n)?;
                        let samples = qdim::sample_points(id.required_samples());
                        Ok(Comparison::holds(format!("[N]_q = Σ ratios at {} points", samples.len()), id.verify(&samples)?))
                    }),
                    r.check("qdim.classical", &alg, p, || Ok(Comparison::holds("q = 1 gives classical dims", qdim::classical_check(big_n, n)?))),
                ]
            }));
        }
    }
    for &big_n in &ns {
        for m in 1..=m_max {
            out.push(Box::new(move |r: &Recorder| {
                vec![r.check("qdim.identity2", "-", params(&[("N", big_n), ("M", m)]), || {
                    let id = qdim::q_identity_2(big_n as i64, m as i64);
                    let samples = qdim::sample_points(id.required_samples());
                    Ok(Comparison::holds(
                        format!("identity and N↔M symmetry at {} points", samples.len()),
                        qdim::verify_q_identity_2(big_n as i64, m as i64, &samples)?,
                    ))
                })]
            }));
        }
    }
    out
}

/// Eigenvalue → multiplicity predicted by the universal formulas, zero dimensions dropped.
pub fn predicted_spectrum(g: &AlgebraId, n: usize) -> Result<BTreeMap<Rational, Rational>> {
    let mut m: BTreeMap<Rational, Rational> = BTreeMap::new();
    for u in vogel::dims_box_yn(g, n)? {
        if !u.dimension.is_zero() {
            *m.entry(u.eigenvalue).or_insert_with(Rational::zero) += u.dimension;
        }
    }
    Ok(m)
}

fn render_spectrum(m: &BTreeMap<Rational, Rational>) -> Vec<String> {
    m.iter().map(|(e, d)| format!("{}:{}", crate::exact::to_short_string(e), crate::exact::to_short_string(d))).collect()
}

/// Explicit-matrix checks of □⊗Y_n for sl(N).
pub fn oracle_entries(r: &Recorder, big_n: usize, n: usize) -> Vec<Entry> {
    let g = match AlgebraId::sl(big_n as u32) {
        Ok(g) => g,
        Err(e) => return vec![r.check("oracle", format!("sl({big_n})"), params(&[("n", n)]), || Err(e))],
    };
    let p = params(&[("n", n)]);
    let (sl, c) = match mo::box_times_yn(big_n, n) {
        Ok(x) => x,
        Err(e) => return vec![r.check("oracle.build", g, p, || Err(e))],
    };
    let vp = vogel::table_params(&g);
    let roots = vogel::eigenvalues(&vp, n).to_vec();
    let mut out = vec![
        r.check("oracle.spectrum", g, p.clone(), || {
            let predicted = predicted_spectrum(&g, n)?;
            let candidates: Vec<Rational> = predicted.keys().cloned().collect();
            let found: BTreeMap<Rational, Rational> = mo::spectrum(&c, &candidates)?
                .into_iter()
                .filter(|(_, k)| *k > 0)
                .map(|(e, k)| (e, int(k as i64)))
                .collect();
            Ok(Comparison::eq_display(&render_spectrum(&found), &render_spectrum(&predicted)))
        }),
        r.check("oracle.annihilates", g, p.clone(), || {
            Ok(Comparison::holds("∏ (Ĉ − a_i) = 0", mo::annihilates(&c, &roots)))
        }),
    ];
    let max_l = if n == 1 { 6 } else { 3 };
    let traces = mo::trace_powers(&c, max_l);
    for l in 0..=max_l {
        let lp = params(&[("n", n as u32), ("L", l)]);
        out.push(r.check("oracle.trace", g, lp, || {
            let expected = if n == 1 {
                vogel::ladder_factor(&g, l)? * int(sl.dim_g() as i64)
            } else {
                vogel::trace_power(&g, n, l)?
            };
            Ok(Comparison::eq(&traces[l as usize], &expected))
        }));
    }
    if vogel::is_degenerate(&vp) {
        out.push(r.skip("oracle.projector_rank", g, p, "β̂ = γ̂: projectors are not separable"));
    } else {
        let dims = match vogel::slot_dims(&g, &vp, n) {
            Ok(d) => d,
            Err(e) => return [out, vec![r.check("oracle.projector_rank", g, p, || Err(e))]].concat(),
        };
        for (i, dim) in dims.iter().enumerate() {
            let ip = params(&[("n", n.to_string()), ("slot", format!("a{}", i + 1))]);
            out.push(r.check("oracle.projector_rank", g, ip, || {
                Ok(Comparison::eq(&int(mo::projector_rank(&c, &roots, i)? as i64), dim))
            }));
        }
    }
    out
}

fn oracle_jobs(opts: &SuiteOptions) -> Vec<Job> {
    let cases: Vec<(usize, usize)> = match (&opts.big_n, &opts.n) {
        (Some(ns), levels) => {
            let levels = levels.clone().unwrap_or_else(|| vec![1]);
            ns.iter().flat_map(|&nn| levels.iter().map(move |&k| (nn as usize, k))).collect()
        }
        (None, _) if opts.quick => vec![(2, 1), (3, 1)],
        (None, _) => vec![(2, 1), (3, 1), (4, 1), (2, 2), (3, 2)],
    };
    cases.into_iter().map(|(nn, n)| Box::new(move |r: &Recorder| oracle_entries(r, nn, n)) as Job).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick() -> SuiteOptions {
        SuiteOptions { quick: true, ..Default::default() }
    }

    #[test]
    fn quick_sweep_selection() {
        let names: Vec<String> = quick().algebras().iter().map(|g| g.to_string()).collect();
        assert_eq!(names, ["sl(3)", "sl(4)", "sl(5)", "so(7)", "so(8)", "sp(4)", "sp(6)", "g2", "f4"]);
        let full = SuiteOptions::default().algebras();
        assert_eq!(full.len(), 10 + 8 + 5 + 4);
        let only = SuiteOptions { families: Some(vec![Family::E8]), ..Default::default() };
        assert_eq!(only.algebras().len(), 1);
    }

    #[test]
    fn so8_projectors_are_skipped_not_failed() {
        let r = Recorder { timings: false };
        let e = projectors(&r, &AlgebraId::so(8).unwrap(), 2);
        assert_eq!(e.len(), 1);
        assert_eq!(e[0].status, super::super::report::Status::Skipped);
    }

    #[test]
    fn composite_pair_enumeration() {
        assert_eq!(composite_pairs(0).len(), 1);
        // totals 0,1,2: 1 + 2 + (2 + 1 + 2) = 8
        assert_eq!(composite_pairs(2).len(), 8);
    }

    #[test]
    fn so_sp_roots_coincide() {
        for n in 1..=4 {
            let (a, b) = so_sp_triples(n, 9).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn small_suites_pass() {
        for s in [Suite::Traces, Suite::Projectors, Suite::Duality] {
            let rep = run(s, &SuiteOptions { families: Some(vec![Family::SL, Family::G2]), ..quick() });
            assert!(rep.passed(), "{:?}", rep.entries.iter().filter(|e| e.status != super::super::report::Status::Pass).collect::<Vec<_>>());
        }
    }
}
