//! Independent oracles: tensor products by Racah–Speiser over explicit weight
//! systems, compared with the tabulated and universal decompositions; explicit
//! sl(N) matrices compared with the universal spectra.

use casimirlab::casimir::{AlgebraId, Family};
use casimirlab::decomp::{self, Decomposition};
use casimirlab::exact::{int, Rational};
use casimirlab::fixtures::FixtureStore;
use casimirlab::label::{self, IrrepLabel};
use casimirlab::matrixoracle as mo;
use casimirlab::rootsys::{weyl_dim, RootSystem, WeightVector};
use casimirlab::vogel;
use num_traits::{Signed, Zero};
use std::collections::{BTreeMap, BTreeSet};

type Dynkin = Vec<Rational>;

fn coroot(w: &WeightVector, a: &WeightVector) -> Rational {
    w.dot(a) * int(2) / a.dot(a)
}

/// Weyl orbit of a weight, by closure under simple reflections.
fn orbit(rs: &RootSystem, w: &WeightVector) -> Vec<WeightVector> {
    let mut seen: BTreeSet<Vec<Rational>> = BTreeSet::new();
    let mut stack = vec![w.clone()];
    let mut out = Vec::new();
    while let Some(v) = stack.pop() {
        if !seen.insert(v.coords.clone()) {
            continue;
        }
        for a in &rs.simple_roots {
            stack.push(v.sub(&a.scale(&coroot(&v, a))));
        }
        out.push(v);
    }
    out
}

/// Weights of a representation whose nonzero weights form one Weyl orbit (□ of
/// every simple algebra): the orbit of the highest weight plus the zero weight
/// with the remaining multiplicity.
fn one_orbit_weights(rs: &RootSystem, g: &AlgebraId, which: &IrrepLabel) -> Vec<WeightVector> {
    let (_, hw) = label::highest_weight(g, which).unwrap();
    let mut ws = orbit(rs, &hw);
    let zeros = weyl_dim(rs, &hw).unwrap() - int(ws.len() as i64);
    assert!(!zeros.is_negative());
    let z: usize = zeros.to_integer().try_into().unwrap();
    ws.extend(std::iter::repeat_n(WeightVector::zero(rs.rho.dim()), z));
    ws
}

/// Weights of ad: ± the positive roots and rank zero weights (two orbits for B, C, F, G).
fn adjoint_weights(rs: &RootSystem) -> Vec<WeightVector> {
    let mut ws: Vec<WeightVector> = rs.positive_roots.iter().flat_map(|a| [a.clone(), a.scale(&int(-1))]).collect();
    ws.extend(std::iter::repeat_n(WeightVector::zero(rs.rho.dim()), rs.simple_roots.len()));
    ws
}

/// V_λ ⊗ V (given by its weights) by Racah–Speiser: reflect λ+ν+ρ into the
/// dominant chamber, drop walls, sum signs.
fn racah_speiser(rs: &RootSystem, lambda: &WeightVector, weights: &[WeightVector]) -> BTreeMap<Dynkin, i64> {
    let mut acc: BTreeMap<Dynkin, i64> = BTreeMap::new();
    for nu in weights {
        let mut v = lambda.add(nu).add(&rs.rho);
        let mut sign = 1i64;
        while let Some(a) = rs.simple_roots.iter().find(|a| coroot(&v, a).is_negative()) {
            v = v.sub(&a.scale(&coroot(&v, a)));
            sign = -sign;
        }
        if rs.simple_roots.iter().any(|a| coroot(&v, a).is_zero()) {
            continue;
        }
        *acc.entry(rs.dynkin_labels(&v.sub(&rs.rho))).or_insert(0) += sign;
    }
    acc.retain(|_, m| *m != 0);
    assert!(acc.values().all(|&m| m > 0), "negative multiplicity left over");
    acc
}

fn dynkin_of(g: &AlgebraId, l: &IrrepLabel) -> Dynkin {
    let (rs, w) = label::highest_weight(g, l).unwrap();
    rs.dynkin_labels(&w)
}

fn as_dynkin(g: &AlgebraId, d: &Decomposition) -> BTreeMap<Dynkin, i64> {
    let mut out = BTreeMap::new();
    for (l, m) in d.iter() {
        // labels with too many rows for this N are absent
        if label::dim(g, l).map_or(true, |x| x.is_zero()) {
            continue;
        }
        *out.entry(dynkin_of(g, l)).or_insert(0) += m as i64;
    }
    out
}

fn tensor(g: &AlgebraId, a: &IrrepLabel, one_orbit: &IrrepLabel) -> BTreeMap<Dynkin, i64> {
    let rs = label::root_system(g).unwrap();
    let (_, hw) = label::highest_weight(g, a).unwrap();
    racah_speiser(&rs, &hw, &one_orbit_weights(&rs, g, one_orbit))
}

fn tensor_adjoint(g: &AlgebraId, a: &IrrepLabel) -> BTreeMap<Dynkin, i64> {
    let rs = label::root_system(g).unwrap();
    let (_, hw) = label::highest_weight(g, a).unwrap();
    racah_speiser(&rs, &hw, &adjoint_weights(&rs))
}

fn alg(f: Family, n: Option<u32>) -> AlgebraId {
    AlgebraId::new(f, n).unwrap()
}

#[test]
fn adjoint_weight_count() {
    for g in [alg(Family::SO, Some(9)), alg(Family::SP, Some(8)), alg(Family::G2, None), alg(Family::F4, None)] {
        let rs = label::root_system(&g).unwrap();
        assert_eq!(int(adjoint_weights(&rs).len() as i64), vogel::dim_g(&g), "{g}");
    }
}

#[test]
fn racah_speiser_sanity_on_sl3() {
    let g = AlgebraId::sl(3).unwrap();
    // 3 ⊗ 8 = 15 + 6̄ + 3
    let t = tensor(&g, &label::adjoint_label(&g), &label::box_label(&g));
    let dims: BTreeSet<String> = t.keys().map(|k| format!("{k:?}")).collect();
    assert_eq!(t.len(), 3, "{dims:?}");
    let total: Rational = t
        .iter()
        .map(|(k, m)| {
            let w: Vec<u32> = k.iter().map(|x| x.to_integer().try_into().unwrap()).collect();
            label::weyl_dim(&g, &IrrepLabel::weight(w)).unwrap() * int(*m)
        })
        .sum();
    assert_eq!(total, int(24));
}

#[test]
fn exceptional_box_times_y2_prime_lines() {
    let store = FixtureStore::embedded();
    let fixture = store.exceptional_box_y2prime().unwrap();
    for line in &fixture.lines {
        let f: Family = line.algebra.parse().unwrap();
        let g = alg(f, None);
        let y2p = label::parse_for(&g, &line.y2prime.0).unwrap();
        assert_eq!(label::weyl_dim(&g, &y2p).unwrap(), int(line.y2prime_dim as i64), "{}", line.algebra);
        let listed: BTreeMap<Dynkin, i64> =
            line.terms.iter().map(|t| (dynkin_of(&g, &label::parse_for(&g, &t.label.0).unwrap()), 1)).collect();
        assert_eq!(listed.len(), line.terms.len());
        let expected = tensor(&g, &y2p, &label::box_label(&g));
        assert_eq!(listed, expected, "{}", line.algebra);
        let sum: Rational = line.terms.iter().map(|t| int(t.dim as i64)).sum();
        assert_eq!(sum, int((line.box_dim * line.y2prime_dim) as i64), "{}", line.algebra);
    }
}

#[test]
fn box_times_yn_matches_racah_speiser() {
    let store = FixtureStore::embedded();
    let algebras = [
        alg(Family::SL, Some(4)),
        alg(Family::SL, Some(6)),
        alg(Family::SO, Some(7)),
        alg(Family::SO, Some(10)),
        alg(Family::SP, Some(6)),
        alg(Family::G2, None),
        alg(Family::F4, None),
        alg(Family::E6, None),
        alg(Family::E7, None),
    ];
    for g in algebras {
        for n in 1..=3 {
            let d = decomp::branch_box_yn(&g, n, false, &store).unwrap();
            let expected = tensor(&g, &label::yn_label(&g, n), &label::box_label(&g));
            assert_eq!(as_dynkin(&g, &d), expected, "{g}, n = {n}");
        }
    }
}

#[test]
fn classical_box_times_yn_prime_matches_racah_speiser() {
    let store = FixtureStore::embedded();
    for g in [alg(Family::SL, Some(7)), alg(Family::SO, Some(11)), alg(Family::SP, Some(8))] {
        for n in 1..=2 {
            let d = decomp::branch_box_yn(&g, n, true, &store).unwrap();
            let y = label::yn_prime_label(&g, n).unwrap();
            assert_eq!(as_dynkin(&g, &d), tensor(&g, &y, &label::box_label(&g)), "{g}, n = {n}");
        }
    }
}

#[test]
fn universal_multiplet_dimensions_match_racah_speiser() {
    for g in [alg(Family::SL, Some(5)), alg(Family::SO, Some(9)), alg(Family::SP, Some(6)), alg(Family::G2, None), alg(Family::F4, None)] {
        for n in 1..=3 {
            let rs = label::root_system(&g).unwrap();
            let t = tensor(&g, &label::yn_label(&g, n), &label::box_label(&g));
            let mut rs_dims: Vec<Rational> = t
                .iter()
                .map(|(k, m)| {
                    let w: Vec<u32> = k.iter().map(|x| x.to_integer().try_into().unwrap()).collect();
                    weyl_dim(&rs, &rs.weight_from_labels(&w).unwrap()).unwrap() * int(*m)
                })
                .collect();
            rs_dims.sort();
            let mut universal: Vec<Rational> =
                vogel::dims_box_yn(&g, n).unwrap().into_iter().map(|m| m.dimension).filter(|d| !d.is_zero()).collect();
            universal.sort();
            assert_eq!(universal, rs_dims, "{g}, n = {n}");
        }
    }
}

#[test]
fn yn_times_adjoint_matches_racah_speiser() {
    let store = FixtureStore::embedded();
    for (g, levels) in [
        (alg(Family::SL, Some(9)), 1..=2),
        (alg(Family::SO, Some(17)), 1..=2),
        (alg(Family::SP, Some(10)), 1..=2),
        (alg(Family::E8, None), 1..=2),
    ] {
        for n in levels {
            let d = decomp::yn_times_ad(&g, n, &store).unwrap();
            let expected = tensor_adjoint(&g, &label::yn_label(&g, n));
            assert_eq!(as_dynkin(&g, &d), expected, "{g}, n = {n}");
        }
    }
}

#[test]
fn sl5_box_times_adjoint_matrix() {
    let (sl, c) = mo::box_times_adjoint(5).unwrap();
    assert!(sl.check_jacobi());
    let g = AlgebraId::sl(5).unwrap();
    let roots = vogel::eigenvalues(&vogel::table_params(&g), 1).to_vec();
    assert!(mo::annihilates(&c, &roots));
    let traces = mo::trace_powers(&c, 4);
    for l in 0..=4u32 {
        assert_eq!(traces[l as usize], vogel::ladder_factor(&g, l).unwrap() * int(24), "L = {l}");
    }
    let dims = vogel::slot_dims(&g, &vogel::table_params(&g), 1).unwrap();
    for (i, dim) in dims.iter().enumerate() {
        assert_eq!(&int(mo::projector_rank(&c, &roots, i).unwrap() as i64), dim, "slot {i}");
    }
}
