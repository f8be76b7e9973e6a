use proptest::prelude::*;

use lefschetz_locus::bundle;
use lefschetz_locus::groebner::MonomialOrder;
use lefschetz_locus::jumping::{JumpingLines, LinePoint};
use lefschetz_locus::{DegreeData, GradedModule, GroebnerBasis, Matrix, Monomial, Polynomial, PrimeField, Ring};

fn f() -> PrimeField {
    PrimeField::default()
}

fn matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..7, 1usize..7).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(-3i64..=3, c), r)
    })
}

/// Homogeneous form of degree `deg` with a few random terms.
fn form(ring: Ring, deg: u32) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((0..=deg, 0..=deg, 1u32..65521), 1..5).prop_map(move |terms| {
        let terms = terms
            .into_iter()
            .map(|(i, j, c)| {
                let i = i.min(deg);
                let j = j.min(deg - i);
                (Monomial([i, j, deg - i - j]), c)
            })
            .collect();
        Polynomial::from_terms(f(), ring, terms)
    })
    .prop_filter("nonzero", |p| !p.is_zero())
}

fn ideal() -> impl Strategy<Value = Vec<Polynomial>> {
    prop::collection::vec((1u32..=3).prop_flat_map(|d| form(Ring::Dual, d)), 1..4)
}

fn point() -> impl Strategy<Value = [u32; 3]> {
    [0u32..65521, 0u32..65521, 0u32..65521].prop_filter("nonzero", |p| p.iter().any(|&c| c != 0))
}

fn ci_degrees() -> impl Strategy<Value = DegreeData> {
    (1i64..=4, 1i64..=4, 1i64..=4).prop_map(|(x, y, z)| {
        let mut a = [x, y, z];
        a.sort_unstable();
        DegreeData::complete_intersection(a).unwrap()
    })
}

fn n2_degrees() -> impl Strategy<Value = DegreeData> {
    (0i64..=1, prop::collection::vec(0i64..=2, 4)).prop_map(|(b2, offs)| {
        let mut a: Vec<i64> = offs.into_iter().map(|o| b2 + 1 + o).collect();
        a.sort_unstable();
        DegreeData::new(a, vec![0, b2]).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_is_transpose_invariant(rows in matrix()) {
        let m = Matrix::from_rows(f(), &rows);
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn rank_nullity(rows in matrix()) {
        let m = Matrix::from_rows(f(), &rows);
        let kernel = m.kernel_basis();
        prop_assert_eq!(m.rank() + kernel.len(), m.cols());
        for v in &kernel {
            prop_assert!(m.mul_vec(v).iter().all(|&x| x == 0));
        }
    }

    #[test]
    fn multiplication_matrices_compose(g in form(Ring::Primal, 2), h in form(Ring::Primal, 1), t in 0i64..4) {
        let direct = g.mul(&h).multiplication_matrix(t);
        let composed = g.multiplication_matrix(t + 1).mul(&h.multiplication_matrix(t));
        prop_assert_eq!(direct, composed);
    }

    #[test]
    fn restriction_to_a_line_is_a_ring_map(g in form(Ring::Primal, 2), h in form(Ring::Primal, 2), k in form(Ring::Primal, 3), p in point(), su in (0u32..65521, 0u32..65521)) {
        let line = LinePoint::new(f(), p).unwrap();
        let r = |x: &Polynomial| x.substitute_line(&line.param).unwrap();
        prop_assert_eq!(r(&g.mul(&k)), r(&g).mul(&r(&k)));
        let (s, u) = su;
        let sum = g.add(&h);
        if !sum.is_zero() {
            prop_assert_eq!(r(&sum).eval(s, u), f().add(r(&g).eval(s, u), r(&h).eval(s, u)));
        }
    }

    #[test]
    fn groebner_bases_are_reduced_and_closed(gens in ideal()) {
        let gb = GroebnerBasis::new(f(), &gens);
        prop_assert!(gb.is_reduced());
        prop_assert!(gb.satisfies_buchberger_criterion());
        for g in &gens {
            prop_assert!(gb.contains(g));
        }
    }

    #[test]
    fn measure_does_not_depend_on_the_order(gens in ideal()) {
        let base = GroebnerBasis::with_order(f(), &gens, MonomialOrder::DegLex);
        for order in [MonomialOrder::Lex, MonomialOrder::DegRevLex] {
            let other = GroebnerBasis::with_order(f(), &gens, order);
            prop_assert!(other.is_reduced());
            prop_assert_eq!(other.measure(), base.measure());
            prop_assert!(other.contains_ideal(&base) && base.contains_ideal(&other));
        }
    }

    #[test]
    fn intersection_lies_in_both(x in ideal(), y in ideal()) {
        let (a, b) = (GroebnerBasis::new(f(), &x), GroebnerBasis::new(f(), &y));
        let both = a.intersect(&b);
        prop_assert!(a.contains_ideal(&both) && b.contains_ideal(&both));
        for g in &x {
            for h in &y {
                prop_assert!(both.contains(&g.mul(h)));
            }
        }
    }

    #[test]
    fn saturation_routes_agree(gens in ideal()) {
        let gb = GroebnerBasis::new(f(), &gens);
        let sat = gb.saturate();
        prop_assert_eq!(&sat, &gb.saturate_by_iterated_colon());
        prop_assert!(sat.contains_ideal(&gb));
        prop_assert_eq!(sat.measure().projective_dimension, gb.measure().projective_dimension);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn euler_characteristic_three_ways(deg in prop_oneof![ci_degrees(), n2_degrees()], t in -10i64..=10) {
        let closed = bundle::euler_characteristic(&deg, t);
        prop_assert_eq!(closed, bundle::euler_characteristic_by_line_bundles(&deg, t));
        prop_assert_eq!(closed, bundle::euler_characteristic_by_riemann_roch(&deg, t));
        let h1 = bundle::h1(&deg, t).unwrap() as i64;
        let (h0, h2) = (bundle::h0(&deg, t).unwrap() as i64, bundle::h2(&deg, t).unwrap() as i64);
        prop_assert_eq!(h0 - h1 + h2, closed);
    }

    #[test]
    fn generic_modules_match_the_closed_form(deg in prop_oneof![ci_degrees(), n2_degrees()], seed in 0u64..1000) {
        let m = GradedModule::generic(f(), &deg, seed).unwrap();
        prop_assert!(m.hilbert_matches_closed_form());
        prop_assert!(m.is_unimodal());
        prop_assert!(m.is_symmetric());
        prop_assert_eq!(m.socle(), deg.expected_socle());
        for t in m.start()..=m.top() {
            prop_assert_eq!(m.h(t) as u64, bundle::h1(&deg, t).unwrap());
        }
    }

    #[test]
    fn generic_lines_split_as_predicted(deg in prop_oneof![ci_degrees(), n2_degrees()], seed in 0u64..1000) {
        let m = GradedModule::generic(f(), &deg, seed).unwrap();
        let stability = bundle::classify_stability(&deg).unwrap();
        let jl = JumpingLines::new(m.presentation(), seed).unwrap();
        prop_assert_eq!(jl.generic().twist(stability.t0), stability.generic_splitting());
    }
}
