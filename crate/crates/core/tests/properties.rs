//! Property tests over random fuzzy sets on the corpus algebras.

use proptest::prelude::*;

use blfilter::algebra::parse_algebra;
use blfilter::corpus;
use blfilter::fuzzy::{level_set, FuzzySet};
use blfilter::taxonomy::{
    level_form_check, point_form_check, threshold_check, threshold_profile, Variant,
};
use blfilter::verify::generate_bl_algebras;
use blfilter::{FilterKind, FiniteBLAlgebra, UnitRational};

fn algebras() -> Vec<FiniteBLAlgebra> {
    let mut out: Vec<FiniteBLAlgebra> = corpus::ALGEBRAS
        .iter()
        .map(|s| parse_algebra(s).unwrap())
        .collect();
    out.extend(generate_bl_algebras(3).unwrap());
    out
}

fn q(p: u32, d: u32) -> UnitRational {
    UnitRational::from_ratio(i64::from(p), i64::from(d))
}

/// Algebra index, degrees over denominator 10, and a kind.
fn instance() -> impl Strategy<Value = (usize, Vec<u32>, usize)> {
    (
        0..algebras().len(),
        prop::collection::vec(0u32..=10, 5),
        0..4usize,
    )
}

fn fuzzy<'a>(alg: &'a FiniteBLAlgebra, raw: &[u32]) -> FuzzySet<'a> {
    FuzzySet::new(alg, raw[..alg.size()].iter().map(|&v| q(v, 10)).collect()).unwrap()
}

/// Ordered pair `lo < hi` on the grid `k/20`.
fn pair() -> impl Strategy<Value = (u32, u32)> {
    (0u32..20, 1u32..=20)
        .prop_map(|(a, b)| {
            if a < b {
                (a, b)
            } else {
                (b.saturating_sub(1), a.max(b))
            }
        })
        .prop_filter("strict", |(a, b)| a < b)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn shrinking_thresholds_preserves_verdict(
        (ai, raw, k) in instance(),
        (a, b) in pair(),
        (s, t) in (0u32..=20, 0u32..=20),
    ) {
        let algs = algebras();
        let alg = &algs[ai];
        let f = fuzzy(alg, &raw);
        let kind = FilterKind::ALL[k];
        // (a', b'] ⊆ (a, b]
        let a2 = a + s % (b - a);
        let b2 = a2 + 1 + t % (b - a2);
        if threshold_check(&f, &q(a, 20), &q(b, 20), kind).unwrap() {
            prop_assert!(threshold_check(&f, &q(a2, 20), &q(b2, 20), kind).unwrap());
        }
    }

    #[test]
    fn ordinary_embeds_in_both_variants((ai, raw, k) in instance()) {
        let algs = algebras();
        let f = fuzzy(&algs[ai], &raw);
        let kind = FilterKind::ALL[k];
        let check = |v: Variant| {
            let (a, b) = v.bounds();
            threshold_check(&f, &a, &b, kind).unwrap()
        };
        if check(Variant::Ordinary) {
            prop_assert!(check(Variant::EqVq) && check(Variant::Overline));
        }
        if kind != FilterKind::Plain {
            for v in Variant::NAMED {
                let (a, b) = v.bounds();
                if threshold_check(&f, &a, &b, kind).unwrap() {
                    prop_assert!(threshold_check(&f, &a, &b, FilterKind::Plain).unwrap());
                }
            }
        }
    }

    #[test]
    fn three_routes_agree((ai, raw, k) in instance(), (a, b) in pair()) {
        let algs = algebras();
        let f = fuzzy(&algs[ai], &raw);
        let kind = FilterKind::ALL[k];
        let (lo, hi) = (q(a, 20), q(b, 20));
        let by_inequality = threshold_check(&f, &lo, &hi, kind).unwrap();
        prop_assert_eq!(by_inequality, level_form_check(&f, &lo, &hi, kind).unwrap());
        prop_assert_eq!(by_inequality, threshold_profile(&f, kind).contains_interval(&lo, &hi));
    }

    #[test]
    fn point_forms_match_level_characterizations((ai, raw, _k) in instance()) {
        let algs = algebras();
        let f = fuzzy(&algs[ai], &raw);
        let (a, b) = Variant::Overline.bounds();
        prop_assert_eq!(
            point_form_check(&f, &Variant::Overline).unwrap(),
            threshold_check(&f, &a, &b, FilterKind::Plain).unwrap()
        );
        let (a, b) = Variant::EqVq.bounds();
        prop_assert_eq!(
            point_form_check(&f, &Variant::EqVq).unwrap(),
            level_form_check(&f, &a, &b, FilterKind::Plain).unwrap()
        );
    }
}

/// Point-form conditions evaluated at every `t, r` in a dense rational
/// sample, independent of the breakpoint grid.
fn point_form_dense(f: &FuzzySet<'_>, overline: bool, samples: &[UnitRational]) -> bool {
    let alg = f.algebra();
    let belongs = |e, t: &UnitRational| f.degree(e) >= t;
    let quasi = |e, t: &UnitRational| f.degree(e).sum_exceeds_one(t);
    for x in alg.elements() {
        for y in alg.elements() {
            let xy = alg.odot(x, y);
            for t in samples {
                for r in samples {
                    let m = t.min(r);
                    let ok = if overline {
                        belongs(xy, m)
                            || !belongs(x, t)
                            || !quasi(x, t)
                            || !belongs(y, r)
                            || !quasi(y, r)
                    } else {
                        !(belongs(x, t) && belongs(y, r)) || belongs(xy, m) || quasi(xy, m)
                    };
                    if !ok {
                        return false;
                    }
                }
                if alg.leq(x, y) {
                    let ok = if overline {
                        belongs(y, t) || !belongs(x, t) || !quasi(x, t)
                    } else {
                        !belongs(x, t) || belongs(y, t) || quasi(y, t)
                    };
                    if !ok {
                        return false;
                    }
                }
            }
        }
    }
    true
}

#[test]
fn point_form_grid_matches_dense_sampling() {
    // degrees on k/4; the sample k/20 contains every breakpoint and points
    // strictly inside every gap
    let samples: Vec<UnitRational> = (1..=20).map(|k| q(k, 20)).collect();
    let values: Vec<UnitRational> = (0..=4).map(|k| q(k, 4)).collect();
    for src in [corpus::L3_THEN_BOOLEAN, corpus::LUKASIEWICZ4] {
        let alg = parse_algebra(src).unwrap();
        for idx in 0..values.len().pow(alg.size() as u32) {
            let mut rest = idx;
            let degrees = (0..alg.size())
                .map(|_| {
                    let v = values[rest % values.len()].clone();
                    rest /= values.len();
                    v
                })
                .collect();
            let f = FuzzySet::new(&alg, degrees).unwrap();
            for (variant, overline) in [(Variant::EqVq, false), (Variant::Overline, true)] {
                assert_eq!(
                    point_form_check(&f, &variant).unwrap(),
                    point_form_dense(&f, overline, &samples),
                    "{variant} on {f:?}"
                );
            }
        }
    }
}

#[test]
fn level_sets_of_filters_profile_everything() {
    for alg in algebras() {
        let f = FuzzySet::constant(&alg, UnitRational::one());
        assert_eq!(
            level_set(&f, &UnitRational::half()).unwrap().len(),
            alg.size()
        );
        assert_eq!(
            threshold_profile(&f, FilterKind::Plain).to_string(),
            "(0,1]"
        );
    }
}
