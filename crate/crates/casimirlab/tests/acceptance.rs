//! Acceptance sweep: one PASS/FAIL line per criterion, exact rational equality
//! throughout. Exits nonzero when any criterion fails.

use casimirlab::casimir::{AlgebraId, Family};
use casimirlab::composite::{check_duality, CompositePair};
use casimirlab::decomp::{self, a_coeffs, ad_power, derangements_bruteforce, grouped_coefficients};
use casimirlab::exact::{int, pow, to_short_string, Rational};
use casimirlab::fixtures::FixtureStore;
use casimirlab::label::{self, IrrepLabel};
use casimirlab::matrixoracle as mo;
use casimirlab::vogel::{self, VogelParams};
use casimirlab::young::{horizontal_sum, partitions, Partition};
use casimirlab::{closed, qdim};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Debug;
use std::time::Instant;

/// Counts exact comparisons and keeps a description of each one that fails.
#[derive(Default)]
struct Tally {
    checks: usize,
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Tally {
    fn eq<T: PartialEq + Debug>(&mut self, what: impl FnOnce() -> String, lhs: &T, rhs: &T) {
        self.checks += 1;
        if lhs != rhs {
            self.failures.push(format!("{}: {lhs:?} ≠ {rhs:?}", what()));
        }
    }

    fn rat(&mut self, what: impl FnOnce() -> String, lhs: &Rational, rhs: &Rational) {
        self.checks += 1;
        if lhs != rhs {
            self.failures.push(format!("{}: {} ≠ {}", what(), to_short_string(lhs), to_short_string(rhs)));
        }
    }

    fn holds(&mut self, what: impl FnOnce() -> String, ok: bool) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    /// Unwraps a library result, recording the error as a failed check.
    fn ok<T, E: std::fmt::Display>(&mut self, what: impl FnOnce() -> String, r: Result<T, E>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.checks += 1;
                self.failures.push(format!("{}: error: {e}", what()));
                None
            }
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.checks += other.checks;
        self.failures.extend(other.failures);
        self.notes.extend(other.notes);
        self
    }
}

/// The sweep of criteria 2 and 3.
fn sweep_algebras() -> Vec<AlgebraId> {
    let mut out: Vec<AlgebraId> = Vec::new();
    out.extend((3..=12).map(|n| AlgebraId::sl(n).unwrap()));
    out.extend((7..=14).map(|n| AlgebraId::so(n).unwrap()));
    out.extend((4..=12).step_by(2).map(|n| AlgebraId::sp(n).unwrap()));
    for f in [Family::G2, Family::F4, Family::E6, Family::E7] {
        out.push(AlgebraId::exceptional(f).unwrap());
    }
    out
}

fn sweep_cases() -> Vec<(AlgebraId, usize)> {
    sweep_algebras().into_iter().flat_map(|g| (1..=5).map(move |n| (g, n))).collect()
}

fn par_tally<T: Sync>(items: &[T], f: impl Fn(&T) -> Tally + Sync + Send) -> Tally {
    items.par_iter().map(f).reduce(Tally::default, Tally::merge)
}

fn table_one() -> Tally {
    let mut t = Tally::default();
    let store = FixtureStore::embedded();
    let Some(table) = t.ok(|| "table1".into(), store.table1()) else { return t };
    for f in Family::ALL {
        let count = table.rows.iter().filter(|r| r.algebra == f.name()).count();
        t.eq(|| format!("{} rows", f.name()), &count, &if f.is_classical() { 6 } else { 1 });
    }
    for row in &table.rows {
        let Some(family) = t.ok(|| row.algebra.clone(), row.algebra.parse::<Family>()) else { continue };
        let Some(g) = t.ok(|| row.algebra.clone(), AlgebraId::new(family, row.big_n)) else { continue };
        let p = vogel::params(&g, false);
        let at = |col: &str| format!("{g} {col}");
        t.rat(|| at("α"), &p.alpha, &row.alpha);
        t.rat(|| at("β"), &p.beta, &row.beta);
        t.rat(|| at("γ"), &p.gamma, &row.gamma);
        t.rat(|| at("t"), &p.t, &row.t);
        t.rat(|| at("α̂"), &p.alpha_hat, &row.alpha_hat);
        t.rat(|| at("β̂"), &p.beta_hat, &row.beta_hat);
        t.rat(|| at("γ̂"), &p.gamma_hat, &row.gamma_hat);
        t.rat(|| at("dim □"), &vogel::dim_box(&g), &row.dim_box);
        if let Some(dg) = t.ok(|| at("dim g"), vogel::dim_g_universal(&p)) {
            t.rat(|| at("dim g"), &dg, &row.dim_g);
        }
        if family == Family::E8 {
            // □ = ad: neither branch formula applies, c₂(□) is c₂(Y₁).
            for classical_branch in [true, false] {
                if let Some(c2) = t.ok(|| at("c₂(□) branch"), vogel::c2_box_formula(&p, classical_branch)) {
                    t.holds(|| at("branch formulas do not apply to e8"), c2 != row.c2_box);
                }
            }
            let c2 = vogel::c2_yn_universal(&p, 1, false);
            t.rat(|| at("c₂(□) = c₂(Y₁)"), &c2, &row.c2_box);
            t.rat(|| at("c₂(□)·dim □"), &(c2 * vogel::dim_box(&g)), &row.c2_box_times_dim_box);
            t.notes.push("e8: c₂(□) from c₂(Y₁) since □ = ad; both branch formulas give other values (31/50, 31/36)".into());
        } else if let Some(c2) = t.ok(|| at("c₂(□)"), vogel::c2_box_formula(&p, g.is_classical())) {
            t.rat(|| at("c₂(□)"), &c2, &row.c2_box);
            t.rat(|| at("c₂(□)·dim □"), &(c2 * vogel::dim_box(&g)), &row.c2_box_times_dim_box);
        }
        t.rat(|| at("c₂(□) closed form"), &vogel::c2_box(&g), &row.c2_box);
        if let Some(ad) = t.ok(|| at("C₂(ad)"), label::casimir_weyl(&g, &label::adjoint_label(&g))) {
            t.rat(|| at("t = C₂(ad)/2"), &(ad.raw / int(2)), &row.t);
        }
    }
    t
}

fn universal_dimensions() -> Tally {
    par_tally(&sweep_cases(), |(g, n)| {
        let (g, n) = (g, *n);
        let mut t = Tally::default();
        let at = |what: &str| format!("{g}, n = {n}: {what}");
        let Some(mults) = t.ok(|| at("dims_box_Yn"), vogel::dims_box_yn(g, n)) else { return t };
        let Some(closed) = t.ok(|| at("closed forms"), closed::box_yn(g, n)) else { return t };
        for (l, d) in &closed {
            match mults.iter().find(|m| m.label.as_ref() == Some(l)) {
                Some(m) => t.rat(|| at(&format!("{l} closed form")), &m.dimension, d),
                None => t.holds(|| at(&format!("{l} has no universal multiplet")), false),
            }
        }
        for m in mults.iter().filter(|m| !m.dimension.is_zero()) {
            let Some(l) = &m.label else {
                t.holds(|| at("non-empty multiplet without a label"), false);
                continue;
            };
            if let Some(w) = t.ok(|| at(&format!("{l} Weyl")), label::weyl_dim(g, l)) {
                t.rat(|| at(&format!("{l} Weyl")), &m.dimension, &w);
            }
        }
        let zeros = mults.iter().filter(|m| m.dimension.is_zero()).count();
        t.eq(|| at("empty multiplets"), &zeros, &1);
        let sum: Rational = mults.iter().map(|m| m.dimension.clone()).sum();
        if let Some(dy) = t.ok(|| at("dim Y_n"), closed::dim_yn(g, n)) {
            t.rat(|| at("Σ dim = dim □ · dim Y_n"), &sum, &(vogel::dim_box(g) * dy));
        }
        t
    })
}

fn trace_identities() -> Tally {
    par_tally(&sweep_cases(), |(g, n)| {
        let (g, n) = (g, *n);
        let mut t = Tally::default();
        let at = |what: String| format!("{g}, n = {n}: {what}");
        for l in 0..=3u32 {
            let pair = vogel::trace_power(g, n, l).and_then(|a| Ok((a, vogel::trace_identity(g, n, l)?)));
            if let Some((a, b)) = t.ok(|| at(format!("Tr Ĉ^{l}")), pair) {
                t.rat(|| at(format!("Tr Ĉ^{l}")), &a, &b);
            }
        }
        let p = vogel::table_params(g);
        if vogel::is_degenerate(&p) {
            if n == 1 {
                t.notes.push(format!("{g}: Vandermonde route skipped (β̂ = γ̂, a₃ = a₄)"));
            }
        } else {
            let pair = vogel::vandermonde_dims(g, &p, n).and_then(|a| Ok((a, vogel::slot_dims(g, &p, n)?)));
            if let Some((a, b)) = t.ok(|| at("Vandermonde".into()), pair) {
                t.eq(|| at("Vandermonde dimensions".into()), &a, &b);
            }
        }
        t
    })
}

fn matrix_oracle() -> Tally {
    let mut t = Tally::default();
    for big_n in [2u32, 3] {
        let g = AlgebraId::sl(big_n).unwrap();
        let at = |what: String| format!("{g}: {what}");
        let Some((sl, c)) = t.ok(|| at("matrices".into()), mo::box_times_adjoint(big_n as usize)) else { continue };
        t.holds(|| at("Jacobi identity".into()), sl.check_jacobi());
        let Some(roots) = t.ok(|| at("roots".into()), vogel::char_identity_roots(&vogel::table_params(&g), 1, false)) else {
            continue;
        };
        let distinct: Vec<Rational> = roots.iter().cloned().collect::<BTreeSet<_>>().into_iter().collect();
        let mut predicted: BTreeMap<Rational, usize> = BTreeMap::new();
        if let Some(mults) = t.ok(|| at("dims_box_Yn".into()), vogel::dims_box_yn(&g, 1)) {
            for m in mults.iter().filter(|m| !m.dimension.is_zero()) {
                let d: usize = m.dimension.to_integer().try_into().unwrap();
                *predicted.entry(m.eigenvalue.clone()).or_insert(0) += d;
            }
        }
        if let Some(found) = t.ok(|| at("spectrum".into()), mo::spectrum(&c, &distinct)) {
            let found: BTreeMap<Rational, usize> = found.into_iter().filter(|(_, k)| *k > 0).collect();
            t.eq(|| at("spectrum".into()), &found, &predicted);
        }
        t.holds(|| at("characteristic identity annihilates Ĉ".into()), mo::annihilates(&c, &distinct));
        let traces = mo::trace_powers(&c, 6);
        for l in 0..=6u32 {
            if let Some(f) = t.ok(|| at(format!("ladder L = {l}")), vogel::ladder_factor(&g, l)) {
                t.rat(|| at(format!("Tr Ĉ^{l} = ladder · dim g")), &traces[l as usize], &(f * int(sl.dim_g() as i64)));
            }
        }
    }
    t
}

fn adjoint_powers() -> Tally {
    let mut t = Tally::default();
    let expected: [&[u64]; 4] = [&[1, 2, 1], &[2, 9, 6, 1], &[9, 44, 42, 12, 1], &[44, 265, 320, 130, 20, 1]];
    for (k, e) in (2..=5).zip(expected) {
        let grouped = ad_power(k).and_then(|d| grouped_coefficients(&d));
        if let Some(g) = t.ok(|| format!("ad^{k}"), grouped) {
            t.eq(|| format!("ad^{k} coefficients"), &g, &e.to_vec());
        }
        let rec: Vec<String> = a_coeffs(k).iter().map(|x| x.to_string()).collect();
        let e: Vec<String> = e.iter().map(|x| x.to_string()).collect();
        t.eq(|| format!("a^({k}) recursion"), &rec, &e);
    }
    for m in 0..=8usize {
        if let Some(b) = t.ok(|| format!("derangements of {m}"), derangements_bruteforce(m)) {
            t.eq(|| format!("a₀^({m})"), &a_coeffs(m)[0].to_string(), &b.to_string());
        }
    }
    let list = [1u64, 0, 1, 2, 9, 44, 265, 1854, 14833, 133496];
    for (m, v) in list.iter().enumerate() {
        t.eq(|| format!("a₀^({m}) listed"), &a_coeffs(m)[0].to_string(), &v.to_string());
    }
    if let Some(f) = t.ok(|| "fixture".into(), FixtureStore::embedded().sl_ad_powers()) {
        t.eq(|| "fixture a₀ list".into(), &f.a0.iter().map(|x| x.to_string()).collect::<Vec<_>>(), &list.iter().map(|x| x.to_string()).collect::<Vec<_>>());
    }
    t
}

fn conservation() -> Tally {
    let mut t = Tally::default();
    for k in 2..=4usize {
        let Some(d) = t.ok(|| format!("ad^{k}"), ad_power(k)) else { continue };
        for big_n in 6..=9i64 {
            let expected = pow(&int(big_n * big_n - 1), k as u32);
            if let Some(s) = t.ok(|| format!("N = {big_n}, k = {k}"), d.formal_dimension_sum_sl(big_n)) {
                t.rat(|| format!("N = {big_n}, k = {k}: Σ mult·dim"), &s, &expected);
            }
            if big_n >= 2 * k as i64 {
                let g = AlgebraId::sl(big_n as u32).unwrap();
                if let Some(s) = t.ok(|| format!("{g}, k = {k}"), d.dimension_sum(&g)) {
                    t.rat(|| format!("{g}, k = {k}: Σ mult·dim over sl(N) irreps"), &s, &expected);
                }
            }
        }
    }
    t.notes.push("dimensions continue polynomially in N; the irrep-only sum is also checked where N ≥ 2k".into());
    t
}

fn random_partition(rng: &mut ChaCha8Rng, size: usize) -> Partition {
    let ps = partitions(size);
    ps[rng.gen_range(0..ps.len())].clone()
}

fn duality() -> Tally {
    let mut t = Tally::default();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_cafe);
    let samples: Vec<usize> = (1..=24).collect();
    let mut pairs = Vec::new();
    while pairs.len() < 25 {
        let s = rng.gen_range(0..=4);
        pairs.push(CompositePair::new(random_partition(&mut rng, s), random_partition(&mut rng, s)));
    }
    while pairs.len() < 50 {
        let (a, b) = (rng.gen_range(0..=4), rng.gen_range(0..=4));
        if a != b {
            pairs.push(CompositePair::new(random_partition(&mut rng, a), random_partition(&mut rng, b)));
        }
    }
    for p in &pairs {
        if let Some(ok) = t.ok(|| format!("{p}"), check_duality(p, &samples)) {
            t.holds(|| format!("{p}: dim(−N) duality"), ok);
        }
    }
    // Each eigenvalue has numerator and denominator of degree ≤ 1 in N, so the
    // cross-multiplied difference has degree ≤ 2; fourteen samples decide it.
    for n in 1..=5usize {
        for big_n in 7..=20i64 {
            let so = VogelParams::formal(Family::SO, Some(int(big_n)), false);
            let sp = VogelParams::formal(Family::SP, Some(int(-big_n)), false);
            let pair = so.and_then(|so| Ok((vogel::eigenvalues(&so, n)[..3].to_vec(), vogel::char_identity_roots(&sp?, n, true)?)));
            if let Some((a, b)) = t.ok(|| format!("so/sp n = {n}, N = {big_n}"), pair) {
                t.eq(|| format!("so({big_n}) □⊗Y_{n} ↔ sp(−{big_n}) □⊗Y_{n}′"), &a, &b);
            }
        }
    }
    t
}

fn exceptional_lines() -> Tally {
    let mut t = Tally::default();
    let Some(f) = t.ok(|| "fixture".into(), FixtureStore::embedded().exceptional_box_y2prime()) else { return t };
    t.eq(|| "number of lines".into(), &f.lines.len(), &5);
    for line in &f.lines {
        let Some(g) = t.ok(|| line.algebra.clone(), line.algebra.parse::<Family>().map_err(|e| e.to_string()).and_then(|f| AlgebraId::exceptional(f).map_err(|e| e.to_string()))) else {
            continue;
        };
        let weyl = |t: &mut Tally, text: &str| -> Option<Rational> {
            let l = t.ok(|| format!("{g}: {text}"), label::parse_for(&g, text))?;
            t.ok(|| format!("{g}: {text}"), label::weyl_dim(&g, &l))
        };
        if let Some(d) = weyl(&mut t, &line.y2prime.0) {
            t.rat(|| format!("{g}: dim Y₂′"), &d, &int(line.y2prime_dim as i64));
        }
        t.rat(|| format!("{g}: dim □"), &vogel::dim_box(&g), &int(line.box_dim as i64));
        for term in &line.terms {
            if let Some(d) = weyl(&mut t, &term.label.0) {
                t.rat(|| format!("{g}: {}", term.label.0), &d, &int(term.dim as i64));
            }
        }
        let sum: u64 = line.terms.iter().map(|x| x.dim).sum();
        t.eq(|| format!("{g}: Σ dim"), &sum, &(line.box_dim * line.y2prime_dim));
    }
    t
}

fn q_identities() -> Tally {
    let mut cases: Vec<(i64, i64, u8)> = Vec::new();
    cases.extend((2..=10).flat_map(|nn| (1..=5).map(move |n| (nn, n, 1))));
    cases.extend((1..=10).flat_map(|nn| (1..=10).map(move |m| (nn, m, 2))));
    par_tally(&cases, |&(big_n, x, which)| {
        let mut t = Tally::default();
        if which == 1 {
            let (nn, n) = (big_n as usize, x as usize);
            let Some(id) = t.ok(|| format!("identity 1, N = {nn}, n = {n}"), qdim::q_identity_1(nn, n)) else { return t };
            let samples = qdim::sample_points(id.required_samples());
            t.holds(|| format!("N = {nn}, n = {n}: samples exceed the degree bound"), samples.len() > id.degree_bound());
            if let Some(ok) = t.ok(|| format!("identity 1, N = {nn}, n = {n}"), id.verify(&samples)) {
                t.holds(|| format!("identity 1, N = {nn}, n = {n}"), ok);
            }
            if let Some(ok) = t.ok(|| format!("q = 1, N = {nn}, n = {n}"), qdim::classical_check(nn, n)) {
                t.holds(|| format!("q = 1 limit, N = {nn}, n = {n}"), ok);
            }
        } else {
            let id = qdim::q_identity_2(big_n, x);
            let samples = qdim::sample_points(id.required_samples());
            t.holds(|| format!("N = {big_n}, M = {x}: samples exceed the degree bound"), samples.len() > id.degree_bound());
            if let Some(ok) = t.ok(|| format!("identity 2, N = {big_n}, M = {x}"), qdim::verify_q_identity_2(big_n, x, &samples)) {
                t.holds(|| format!("identity 2, N = {big_n}, M = {x}"), ok);
            }
        }
        t
    })
}

fn composite_of(l: &IrrepLabel) -> Option<&CompositePair> {
    match l {
        IrrepLabel::Composite(p) => Some(p),
        _ => None,
    }
}

fn horizontal_sums() -> Tally {
    let mut t = Tally::default();
    let store = FixtureStore::embedded();
    let Some(table) = t.ok(|| "table_4_1".into(), store.table_4_1()) else { return t };
    let Some(yn_ad) = t.ok(|| "yn_times_ad".into(), store.yn_times_ad()) else { return t };
    let (sl, sp) = (AlgebraId::sl(12).unwrap(), AlgebraId::sp(12).unwrap());
    for n in 1..=5usize {
        let Some(rows) = table.levels.get(&n.to_string()) else {
            t.holds(|| format!("table_4_1 level {n}"), false);
            continue;
        };
        let (Some(a), Some(b)) = (rows.get("sl"), rows.get("sp")) else {
            t.holds(|| format!("level {n}: sl and sp rows"), false);
            continue;
        };
        let pairs = [("Λ1", &a.l1, &b.l1), ("Λ2", &a.l2, &b.l2), ("Λ4", &a.l4, &b.l4), ("Y_n", &a.yn, &b.yn)];
        for (name, x, y) in pairs {
            let parsed = label::parse_for(&sl, &x.0).and_then(|x| Ok((x, label::parse_for(&sp, &y.0)?)));
            let Some((x, y)) = t.ok(|| format!("n = {n}, {name}"), parsed) else { continue };
            match (composite_of(&x), &y) {
                (Some(p), IrrepLabel::Diagram(d)) => t.eq(|| format!("n = {n}, {name}: {x} ↦ {y}"), &horizontal_sum(&p.upper, &p.lower), d),
                _ => t.holds(|| format!("n = {n}, {name}: {x}, {y} are not composite/diagram"), false),
            }
        }
        let Some(r) = t.ok(|| format!("Y_{n}×Y₁"), decomp::horizontal_sum_check(n)) else { continue };
        t.eq(|| format!("n = {n}: unmatched sp terms"), &r.unmatched_sp, &Vec::new());
        let recorded: Vec<String> = yn_ad
            .horizontal_sum_exceptions
            .iter()
            .flat_map(|e| {
                let name = e.sl.replace("[n]", &format!("[{n}]"));
                std::iter::repeat_n(name, e.unmatched_copies as usize)
            })
            .collect();
        t.eq(|| format!("n = {n}: exceptions"), &r.unmatched_sl, &recorded);
    }
    t
}

type Criterion = (&'static str, fn() -> Tally);

fn main() {
    let criteria: [Criterion; 10] = [
        ("Vogel parameter table consistency", table_one),
        ("universal vs. closed-form and Weyl dimensions", universal_dimensions),
        ("trace identities", trace_identities),
        ("explicit split-Casimir matrices for sl(2), sl(3)", matrix_oracle),
        ("ad^⊗k coefficients and derangements", adjoint_powers),
        ("dimension conservation of ad^⊗k", conservation),
        ("N → −N duality", duality),
        ("exceptional □⊗Y₂′ lines", exceptional_lines),
        ("q-identities", q_identities),
        ("horizontal-sum correspondence", horizontal_sums),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let t0 = Instant::now();
        let t = run();
        let pass = t.failures.is_empty() && t.checks > 0;
        println!(
            "{} criterion {:>2}: {name} ({} exact checks, {:.1}s)",
            if pass { "PASS" } else { "FAIL" },
            i + 1,
            t.checks,
            t0.elapsed().as_secs_f64()
        );
        for note in &t.notes {
            println!("     note: {note}");
        }
        for f in t.failures.iter().take(20) {
            println!("     {f}");
        }
        if t.failures.len() > 20 {
            println!("     … {} more", t.failures.len() - 20);
        }
        failed += usize::from(!pass);
    }
    println!("acceptance: {} of {} criteria pass in {:.1}s", criteria.len() - failed, criteria.len(), start.elapsed().as_secs_f64());
    if failed > 0 {
        std::process::exit(1);
    }
}
