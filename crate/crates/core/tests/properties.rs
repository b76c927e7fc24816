mod common;

use common::{arb_function, arb_unit_rational, negate};
use horizontal_chords::chordset::{chord_exists, chord_set};
use horizontal_chords::constructions::{make_mountain_valley, sn_intervals};
use horizontal_chords::family::{classify_closed_form, Case, realize, sample_params, SamplingConvention};
use horizontal_chords::hopf::{
    check_additive_complement, check_half_measure, half_measure_ratio, periodic_coincidence,
    signed_chord_exists, split_chord, PeriodicPL,
};
use horizontal_chords::interval::IntervalSet;
use horizontal_chords::plfunc::PLFunction;
use horizontal_chords::rational::Rational;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Endpoints of the set and the midpoints between consecutive endpoints;
/// membership at these decides the whole set.
fn probes(set: &IntervalSet) -> Vec<Rational> {
    let mut marks = set.endpoints();
    marks.push(Rational::zero());
    marks.push(Rational::one());
    marks.sort();
    marks.dedup();
    let mut out = marks.clone();
    out.extend(marks.windows(2).map(|w| w[0].midpoint(&w[1])));
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn engine_agrees_with_oracle(f in arb_function(12), ell in arb_unit_rational(997)) {
        let s = chord_set(&f);
        prop_assert_eq!(s.contains(&ell), chord_exists(&f, &ell).unwrap().is_some());
        for l in probes(&s) {
            prop_assert_eq!(s.contains(&l), chord_exists(&f, &l).unwrap().is_some(), "at {}", l);
        }
    }

    #[test]
    fn witnesses_verify(f in arb_function(12), ell in arb_unit_rational(240)) {
        if let Some(w) = chord_exists(&f, &ell).unwrap() {
            prop_assert!(w.verify(&f));
            prop_assert_eq!(f.evaluate(&w.s).unwrap(), f.evaluate(&(&w.s + &w.ell)).unwrap());
        }
    }

    #[test]
    fn contains_both_ends_and_is_canonical(f in arb_function(12)) {
        let s = chord_set(&f);
        prop_assert!(s.contains(&Rational::zero()) && s.contains(&Rational::one()));
        prop_assert_eq!(IntervalSet::from_intervals(s.intervals().to_vec()), s.clone());
        for w in s.intervals().windows(2) {
            prop_assert!(w[0].hi < w[1].lo);
        }
    }

    #[test]
    fn reflection_and_negation_invariance(f in arb_function(10)) {
        let s = chord_set(&f);
        prop_assert_eq!(chord_set(&f.reverse()), s.clone());
        prop_assert_eq!(chord_set(&negate(&f)), s);
    }

    #[test]
    fn mountain_range_theorem(f in arb_function(12)) {
        let s = chord_set(&f);
        for r in f.decompose().ranges {
            prop_assert!(s.contains_interval(&Rational::zero(), &r.width), "range {:?}", r);
        }
    }

    #[test]
    fn complement_is_additive(f in arb_function(12)) {
        prop_assert_eq!(check_additive_complement(&chord_set(&f)).unwrap(), None);
    }

    #[test]
    fn half_measure_bound(f in arb_function(12)) {
        let s = chord_set(&f);
        let half = Rational::new(1, 2);
        prop_assert!(check_half_measure(&s).min_ratio >= half);
        for gap in s.complement_in_unit() {
            let d = gap.lo.midpoint(&gap.hi);
            prop_assert!(half_measure_ratio(&s, &d) > half, "d = {}", d);
        }
    }

    #[test]
    fn split_chord_returns_a_or_b(f in arb_function(10), a in arb_unit_rational(60), b in arb_unit_rational(60)) {
        let total = &a + &b;
        prop_assume!(total <= 1);
        prop_assume!(chord_exists(&f, &total).unwrap().is_some());
        let w = split_chord(&f, &a, &b).unwrap();
        prop_assert!(w.ell == a || w.ell == b);
        prop_assert!(w.verify(&f));
    }

    #[test]
    fn signed_chords_are_symmetric_closure(f in arb_function(10), k in -120i64..=120) {
        let ell = Rational::new(k, 120);
        let forward = chord_exists(&f, &ell.abs()).unwrap().is_some();
        prop_assert_eq!(signed_chord_exists(&f, &ell).unwrap(), forward);
    }

    #[test]
    fn periodic_coincidence_persists_under_shifts(f in arb_function(10), a in arb_unit_rational(50), k in -3i64..=3) {
        let func = PeriodicPL::from_restriction(&f, &Rational::zero(), &Rational::one()).unwrap();
        let x0 = periodic_coincidence(&func, &a);
        let shift = func.period() * Rational::from_integer(k);
        let x = &x0 + &shift;
        prop_assert_eq!(func.evaluate(&(&x - &a)), func.evaluate(&x));
    }

    #[test]
    fn mountain_valley_has_no_long_chords(
        w1 in 1i64..=40, w2 in 1i64..=40, h in 1i64..=5, d in 1i64..=5,
    ) {
        let (w1, w2) = (Rational::new(w1, 80), Rational::new(w2, 80));
        let f = make_mountain_valley(&w1, &w2, &Rational::from_integer(h), &-Rational::from_integer(d)).unwrap();
        let s = chord_set(&f);
        let lo = Rational::one() - w1.min(w2);
        // lo itself joins two zeros, so only the open range is chord-free
        prop_assert!(s.contains(&lo));
        let inside: Vec<_> = s.restrict(&lo, &Rational::one()).intervals().to_vec();
        prop_assert!(inside.iter().all(|iv| iv.is_point() && (iv.lo == lo || iv.lo == 1)), "{:?}", inside);
        prop_assert!(s.contains(&Rational::one()));
    }

    #[test]
    fn classifier_matches_engine(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = sample_params(&mut rng, SamplingConvention::Default);
        let v = classify_closed_form(&p);
        let complement = chord_set(&realize(&p).unwrap()).complement_in_unit();
        prop_assert_eq!(v.full, complement.is_empty());
        prop_assert_eq!(v.predicted_complement(), complement);
    }

    #[test]
    fn classifier_is_mirror_consistent(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = sample_params(&mut rng, SamplingConvention::UniformBreakpoints);
        let v = classify_closed_form(&p);
        let m = classify_closed_form(&p.mirror());
        prop_assert_eq!(v.full, m.full);
        prop_assert_eq!(v.case1, m.case2);
        prop_assert_eq!(v.case2, m.case1);
        prop_assert_eq!(v.predicted_complement(), m.predicted_complement());
    }

    #[test]
    fn valley_shape_does_not_change_verdict(seed in any::<u64>(), frac in 1i64..100, depth in 1i64..=20) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = sample_params(&mut rng, SamplingConvention::Default);
        let q = p.with_valley(&p.w_v * &Rational::new(frac, 100), Rational::new(-depth, 4)).unwrap();
        prop_assert_eq!(classify_closed_form(&p).full, classify_closed_form(&q).full);
        prop_assert_eq!(
            chord_set(&realize(&p).unwrap()).complement_in_unit(),
            chord_set(&realize(&q).unwrap()).complement_in_unit()
        );
    }

    #[test]
    fn t1_and_t2_are_disjoint(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let v = classify_closed_form(&sample_params(&mut rng, SamplingConvention::Default));
        prop_assume!(v.case != Case::Neither);
        let m = v.intermediates;
        if let (Some(t1), Some(t2)) = (&m.t1, &m.t2) {
            prop_assert!(t1.hi < t2.lo);
        }
    }

    #[test]
    fn function_json_round_trip(f in arb_function(12)) {
        prop_assert_eq!(PLFunction::from_json(&f.to_json()).unwrap(), f);
    }
}

#[test]
fn sharp_sets_are_additive() {
    for n in 1..=40 {
        assert_eq!(check_additive_complement(&sn_intervals(n).unwrap()).unwrap(), None, "n = {n}");
    }
}

#[test]
fn condition_iii_equality_is_full() {
    // h_l a_r + 1 - w_r - a_l = w_v + w_r exactly: T1 ends at the right end of T
    use horizontal_chords::family::TwoMountainParams;
    let p = TwoMountainParams::from_fractions(
        [(1, 5), (1, 5), (3, 5)],
        [(1, 10), (1, 10), (5, 9)],
        [(9, 10), (-1, 2), (1, 1)],
    );
    let lhs = &p.h_l * &p.a_r + Rational::one() - &p.w_r - &p.a_l;
    assert_eq!(lhs, &p.w_v + &p.w_r);
    let v = classify_closed_form(&p);
    assert!(v.full);
    assert!(!v.case1.t1_short);
    let f = realize(&p).unwrap();
    assert_eq!(chord_set(&f), IntervalSet::unit());
    // the boundary length itself is a chord
    assert!(chord_exists(&f, &(&p.w_v + &p.w_r)).unwrap().is_some());
}
