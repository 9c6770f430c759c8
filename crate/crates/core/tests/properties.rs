//! Randomized and exhaustive invariants over small words, tables and series.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use proptest::prelude::*;
use rug::{Float, Rational};
use simsun::enumerate::{insertion_stream_rb, stream_hyperoctahedral, stream_symmetric, PROFILE_FAMILIES};
use simsun::permcore::FirstSign;
use simsun::series::expand_r;
use simsun::triangles::{table_dt, table_r, DtTriangles, RTriangles};
use simsun::{BruteForce, Caps, Family, IntPoly, ParityClass, SignedWord, UnsignedWord};

const CASES: u32 = 1000;

fn unsigned_word(max_n: usize) -> impl Strategy<Value = UnsignedWord> {
    (0..=max_n)
        .prop_flat_map(|n| Just((1..=n as i32).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|v| UnsignedWord::new(v).unwrap())
}

fn signed_word(max_n: usize) -> impl Strategy<Value = SignedWord> {
    (0..=max_n)
        .prop_flat_map(|n| {
            (
                Just((1..=n as i32).collect::<Vec<_>>()).prop_shuffle(),
                proptest::collection::vec(any::<bool>(), n),
            )
        })
        .prop_map(|(v, signs)| {
            let entries = v.into_iter().zip(signs).map(|(a, neg)| if neg { -a } else { a }).collect();
            SignedWord::new(entries).unwrap()
        })
}

fn config() -> ProptestConfig {
    ProptestConfig {
        cases: CASES,
        failure_persistence: None,
        ..ProptestConfig::default()
    }
}

fn tables() -> &'static (RTriangles, DtTriangles) {
    static T: OnceLock<(RTriangles, DtTriangles)> = OnceLock::new();
    T.get_or_init(|| (table_r(200), table_dt(200)))
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn positive_words_have_equal_descent_counts(w in unsigned_word(9)) {
        prop_assert_eq!(w.to_signed().des_b(), w.des_a());
    }

    #[test]
    fn simsun_descents_are_left_peaks(w in unsigned_word(9)) {
        if w.is_simsun() {
            prop_assert_eq!(w.des_a(), w.lpk());
        }
    }

    #[test]
    fn signed_simsun_is_closed_under_removal(w in signed_word(6)) {
        if w.is_simsun() {
            for k in 0..=w.len() {
                prop_assert!(w.remove_top(k).unwrap().is_simsun());
            }
        }
    }

    #[test]
    fn removal_composes(w in signed_word(8), a in 0usize..9, b in 0usize..9) {
        let n = w.len();
        if a + b <= n {
            prop_assert_eq!(w.remove_top(a).unwrap().remove_top(b).unwrap(), w.remove_top(a + b).unwrap());
        }
    }

    #[test]
    fn restriction_composes(w in unsigned_word(9), a in 0usize..10, b in 0usize..10) {
        let (k, j) = (a.max(b), a.min(b));
        if k <= w.len() {
            prop_assert_eq!(w.restrict(k).unwrap().restrict(j).unwrap(), w.restrict(j).unwrap());
        }
    }

    #[test]
    fn text_roundtrip(w in signed_word(9)) {
        let back: SignedWord = w.to_string().parse().unwrap();
        prop_assert_eq!(back, w);
    }

    #[test]
    fn parity_and_sign_agree_with_entries(w in signed_word(9)) {
        let negatives = w.entries().iter().filter(|&&e| e < 0).count();
        let want = if negatives % 2 == 0 { ParityClass::D } else { ParityClass::T };
        prop_assert_eq!(w.parity_class(), want);
        let sign = match w.entries().first() {
            None => FirstSign::Empty,
            Some(&e) if e > 0 => FirstSign::Positive,
            Some(_) => FirstSign::Negative,
        };
        prop_assert_eq!(w.first_sign(), sign);
    }

    #[test]
    fn class_membership_is_consistent(w in signed_word(7)) {
        let e = w.entries();
        let in_rb = Family::Rb.contains_signed(e);
        prop_assert_eq!(in_rb, w.is_simsun());
        prop_assert_eq!(in_rb, Family::Rd.contains_signed(e) || Family::Rt.contains_signed(e));
        prop_assert!(!(Family::Rd.contains_signed(e) && Family::Rt.contains_signed(e)));
        prop_assert_eq!(in_rb, Family::RbPlus.contains_signed(e) ^ Family::RbMinus.contains_signed(e));
    }

    #[test]
    fn degree_formulas(n in 1usize..=200) {
        let (r, _) = tables();
        prop_assert_eq!(r.plus.row(n).degree(), Some(n / 2));
        prop_assert_eq!(r.minus.row(n).degree(), Some(n.div_ceil(2)));
        prop_assert_eq!(r.total.row(n).degree(), Some(n.div_ceil(2)));
    }

    #[test]
    fn recurrence_parts_sum(n in 0usize..=200) {
        let (r, dt) = tables();
        prop_assert_eq!(&(r.plus.row(n) + r.minus.row(n)), r.total.row(n));
        prop_assert_eq!(&(dt.d.row(n) + dt.t.row(n)), r.total.row(n));
        prop_assert_eq!(&(dt.d_plus.row(n) + dt.t_plus.row(n)), r.plus.row(n));
        prop_assert_eq!(&(dt.d_minus.row(n) + dt.t_minus.row(n)), r.minus.row(n));
        prop_assert!(r.total.row(n).all_nonnegative());
    }
}

fn sample_x() -> impl Strategy<Value = Rational> {
    prop_oneof![
        Just(Rational::from(1)),
        Just(Rational::from(2)),
        Just(Rational::from(3)),
        Just(Rational::from((5, 2))),
        (1u32..=12, 1u32..=4)
            .prop_filter("x > 1/2", |(p, q)| 2 * p > *q)
            .prop_map(|(p, q)| Rational::from((p, q))),
    ]
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn series_additivity_and_precision_stability(x in sample_x(), order in 0usize..=10, digits in 30u32..=60) {
        let lo = expand_r(&x, order, digits).unwrap();
        let hi = expand_r(&x, order, 2 * digits).unwrap();
        let tol = lo.total.zero_threshold();
        let prec = lo.total.prec();
        for n in 0..=order {
            let gap = Float::with_val(prec, lo.total.coeff(n) - lo.plus.coeff(n)) - lo.minus.coeff(n);
            prop_assert!(gap.abs() < tol);
            // same value to within the lower precision, relative to max(1, |c|)
            let (a, b) = (lo.total.egf_coeff(n), hi.total.egf_coeff(n));
            let scale = Float::with_val(prec, b.abs_ref()).max(&Float::with_val(prec, 1));
            let drift = Float::with_val(prec, &a - &b).abs() / scale;
            prop_assert!(drift < tol, "x={} n={} drift={}", x, n, drift.to_f64());
        }
    }
}

#[test]
fn exhaustive_simsun_descents_are_left_peaks() {
    for n in 0..=8 {
        for w in stream_symmetric(n, Caps::default()).unwrap().filter(|w| w.is_simsun()) {
            assert_eq!(w.des_a(), w.lpk(), "{w}");
        }
    }
}

#[test]
fn exhaustive_removal_closure() {
    for n in 0..=6 {
        for w in stream_hyperoctahedral(n, Caps::default()).unwrap().filter(|w| w.is_simsun()) {
            for k in 0..=n {
                assert!(w.remove_top(k).unwrap().is_simsun(), "{w} k={k}");
            }
        }
    }
}

#[test]
fn exhaustive_partitions() {
    let brute = BruteForce::default();
    for n in 0..=6 {
        let p = brute.signed_profile(n).unwrap();
        let g = |f| p.get(f).unwrap().clone();
        assert_eq!(g(Family::RbPlus) + g(Family::RbMinus), g(Family::Rb));
        assert_eq!(g(Family::Rd) + g(Family::Rt), g(Family::Rb));
        assert_eq!(g(Family::RdPlus) + g(Family::RtPlus), g(Family::RbPlus));
        assert_eq!(g(Family::RdMinus) + g(Family::RtMinus), g(Family::RbMinus));
        let whole = g(Family::EulerianD) + g(Family::EulerianT);
        let fact: u64 = (1..=n as u64).product();
        assert_eq!(whole.total(), (1u64 << n) * fact);
        assert!(PROFILE_FAMILIES.iter().all(|&f| p.get(f).is_some()));
    }
}

#[test]
fn insertion_stream_is_duplicate_free_and_complete() {
    for n in 0..=7 {
        let generated: Vec<SignedWord> = insertion_stream_rb(n).collect();
        let set: BTreeSet<Vec<i32>> = generated.iter().map(|w| w.entries().to_vec()).collect();
        assert_eq!(set.len(), generated.len(), "duplicates at n={n}");
        let filtered: BTreeSet<Vec<i32>> = stream_hyperoctahedral(n, Caps::default())
            .unwrap()
            .filter(|w| w.is_simsun())
            .map(|w| w.entries().to_vec())
            .collect();
        assert_eq!(set, filtered, "n={n}");
    }
}

#[test]
fn worker_count_does_not_change_rows() {
    let one = BruteForce::new(Caps::default(), 1);
    let four = BruteForce::new(Caps::default(), 4);
    for f in [Family::Rb, Family::RtMinus, Family::Rs, Family::LeftPeakW] {
        for n in 0..=6 {
            assert_eq!(one.brute_polynomial(f, n).unwrap(), four.brute_polynomial(f, n).unwrap());
        }
    }
}

#[test]
fn row_sums_increase_and_constant_terms() {
    let (r, _) = tables();
    for n in 1..=200 {
        assert!(r.total.row(n).total() > r.total.row(n - 1).total());
        assert_eq!(r.total.row(n).coeff(0), 1);
        assert_eq!(r.minus.row(n).coeff(0), 0);
    }
    assert_eq!(r.total.row(0), &IntPoly::one());
}
