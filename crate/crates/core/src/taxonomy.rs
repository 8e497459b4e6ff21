//! Classification of fuzzy sets into generalized fuzzy filters.
//!
//! Every variant is an instance of the thresholded family: for `α < β` a
//! fuzzy set `F` is a kind-`K` filter with thresholds `(α, β]` when
//!
//! * `max{F(x⊙y), α} ≥ min{F(x), F(y), β}` for all `x, y`;
//! * `max{F(y), α} ≥ min{F(x), β}` whenever `x ≤ y`;
//! * the kind's inequality holds for all `x, y, z`, e.g. for positive
//!   implicative filters `max{F(x→z), α} ≥ min{F(x→(y→z)), F(x→y), β}`.
//!
//! Ordinary fuzzy filters are `(0, 1]`, `(∈,∈∨q)`-fuzzy filters are
//! `(0, 1/2]` and `(∈̄,∈̄∨q̄)`-fuzzy filters are `(1/2, 1]`. The same verdicts
//! are reachable through level sets: `F` passes for `(α, β]` exactly when
//! every non-empty `U(F; t)` with `α < t ≤ β` is a kind-`K` filter.

use std::fmt;

use thiserror::Error;

use crate::algebra::{Elem, FiniteBLAlgebra};
use crate::filters::{filter_violation, CrispSubset, FilterKind, FilterViolation};
use crate::fuzzy::{critical_values, level_set_unchecked, FuzzySet};
use crate::interval::IntervalSet;
use crate::rational::UnitRational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TaxonomyError {
    #[error("thresholds need α < β; got ({0}, {1}]")]
    InvalidThresholds(String, String),
    #[error("variant `{0}` has no point-form definition")]
    NoPointForm(String),
    #[error("inequality and level-set routes disagree for {variant}.{kind}")]
    Inconsistent { variant: String, kind: FilterKind },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    Ordinary,
    /// `(∈, ∈∨q)`
    EqVq,
    /// `(∈̄, ∈̄∨q̄)`
    Overline,
    Thresholds(UnitRational, UnitRational),
}

impl Variant {
    pub const NAMED: [Variant; 3] = [Variant::Ordinary, Variant::EqVq, Variant::Overline];

    /// The `(α, β)` pair realizing this variant.
    pub fn bounds(&self) -> (UnitRational, UnitRational) {
        match self {
            Variant::Ordinary => (UnitRational::zero(), UnitRational::one()),
            Variant::EqVq => (UnitRational::zero(), UnitRational::half()),
            Variant::Overline => (UnitRational::half(), UnitRational::one()),
            Variant::Thresholds(a, b) => (a.clone(), b.clone()),
        }
    }

    /// Builds a thresholded variant, checking `α < β`.
    pub fn thresholds(alpha: UnitRational, beta: UnitRational) -> Result<Self, TaxonomyError> {
        if alpha >= beta {
            return Err(TaxonomyError::InvalidThresholds(
                alpha.to_string(),
                beta.to_string(),
            ));
        }
        Ok(Variant::Thresholds(alpha, beta))
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Variant::Ordinary => f.write_str("ordinary"),
            Variant::EqVq => f.write_str("eq_vq"),
            Variant::Overline => f.write_str("overline"),
            Variant::Thresholds(a, b) => write!(f, "thresholds({a},{b})"),
        }
    }
}

/// Which inequality of the thresholded family failed.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Condition {
    Product,
    Monotone,
    Implicative,
    PositiveImplicative,
    Fantastic,
}

impl Condition {
    pub fn token(self) -> &'static str {
        match self {
            Condition::Product => "product",
            Condition::Monotone => "monotone",
            Condition::Implicative => "implicative",
            Condition::PositiveImplicative => "positive_implicative",
            Condition::Fantastic => "fantastic",
        }
    }

    fn of_kind(kind: FilterKind) -> Option<Condition> {
        match kind {
            FilterKind::Plain => None,
            FilterKind::Implicative => Some(Condition::Implicative),
            FilterKind::PositiveImplicative => Some(Condition::PositiveImplicative),
            FilterKind::Fantastic => Some(Condition::Fantastic),
        }
    }
}

/// The first tuple (`x, y` or `x, y, z`) at which an inequality fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InequalityWitness {
    pub condition: Condition,
    pub tuple: Vec<Elem>,
}

impl InequalityWitness {
    /// `monotone x=a y=c`
    pub fn render(&self, alg: &FiniteBLAlgebra) -> String {
        let mut s = self.condition.token().to_string();
        for (var, e) in ["x", "y", "z"].iter().zip(&self.tuple) {
            s.push_str(&format!(" {var}={}", alg.elem_name(*e)));
        }
        s
    }
}

/// Degrees of `F` together with `α` and `β`, replaced by their ranks in the
/// sorted list of distinct values. Max/min comparisons only depend on order.
struct Ranked {
    deg: Vec<u32>,
    alpha: u32,
    beta: u32,
}

impl Ranked {
    fn new(f: &FuzzySet<'_>, alpha: &UnitRational, beta: &UnitRational) -> Self {
        let mut vals: Vec<&UnitRational> = f.degrees().iter().chain([alpha, beta]).collect();
        vals.sort();
        vals.dedup();
        let rank = |v: &UnitRational| vals.binary_search(&v).expect("value was inserted") as u32;
        Ranked {
            deg: f.degrees().iter().map(rank).collect(),
            alpha: rank(alpha),
            beta: rank(beta),
        }
    }

    #[inline]
    fn f(&self, e: Elem) -> u32 {
        self.deg[e.0]
    }

    /// `max{F(c), α} ≥ min{F(p…), β}`
    #[inline]
    fn holds(&self, conclusion: Elem, premises: &[Elem]) -> bool {
        let lhs = self.f(conclusion).max(self.alpha);
        let rhs = premises
            .iter()
            .map(|&p| self.f(p))
            .fold(self.beta, u32::min);
        lhs >= rhs
    }
}

fn check_thresholds(alpha: &UnitRational, beta: &UnitRational) -> Result<(), TaxonomyError> {
    if alpha >= beta {
        return Err(TaxonomyError::InvalidThresholds(
            alpha.to_string(),
            beta.to_string(),
        ));
    }
    Ok(())
}

/// First violated inequality of the kind-`kind` filter with thresholds
/// `(α, β]`, scanning product pairs, then monotone pairs, then the kind's
/// triples, each in lexicographic order.
pub fn threshold_violation(
    f: &FuzzySet<'_>,
    alpha: &UnitRational,
    beta: &UnitRational,
    kind: FilterKind,
) -> Result<Option<InequalityWitness>, TaxonomyError> {
    check_thresholds(alpha, beta)?;
    let alg = f.algebra();
    let r = Ranked::new(f, alpha, beta);
    let witness = |condition, tuple| Ok(Some(InequalityWitness { condition, tuple }));

    for x in alg.elements() {
        for y in alg.elements() {
            if !r.holds(alg.odot(x, y), &[x, y]) {
                return witness(Condition::Product, vec![x, y]);
            }
        }
    }
    for x in alg.elements() {
        for y in alg.elements() {
            if alg.leq(x, y) && !r.holds(y, &[x]) {
                return witness(Condition::Monotone, vec![x, y]);
            }
        }
    }
    let Some(condition) = Condition::of_kind(kind) else {
        return Ok(None);
    };
    let i = |a, b| alg.imp(a, b);
    for x in alg.elements() {
        for y in alg.elements() {
            for z in alg.elements() {
                let ok = match kind {
                    FilterKind::Implicative => r.holds(i(x, z), &[i(x, i(alg.neg(z), y)), i(y, z)]),
                    FilterKind::PositiveImplicative => r.holds(i(x, z), &[i(x, i(y, z)), i(x, y)]),
                    FilterKind::Fantastic => r.holds(i(i(i(x, y), y), x), &[i(z, i(y, x)), z]),
                    FilterKind::Plain => true,
                };
                if !ok {
                    return witness(condition, vec![x, y, z]);
                }
            }
        }
    }
    Ok(None)
}

/// Whether `F` is a kind-`kind` fuzzy filter with thresholds `(α, β]`.
pub fn threshold_check(
    f: &FuzzySet<'_>,
    alpha: &UnitRational,
    beta: &UnitRational,
    kind: FilterKind,
) -> Result<bool, TaxonomyError> {
    Ok(threshold_violation(f, alpha, beta, kind)?.is_none())
}

/// A failing instance of a point-form condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointWitness {
    pub condition: Condition,
    pub x: Elem,
    pub y: Elem,
    /// `t` for the product condition; unused (equal to `r`) for monotone.
    pub t: UnitRational,
    pub r: UnitRational,
}

/// Values of `t` that represent every region on which the point relations
/// are constant: the breakpoints `0, 1/2, 1, F(x), 1 − F(x)` lying in
/// `(0, 1]`, plus the midpoint of each pair of consecutive breakpoints.
pub fn point_grid(f: &FuzzySet<'_>) -> Vec<UnitRational> {
    let mut breaks = vec![
        UnitRational::zero(),
        UnitRational::half(),
        UnitRational::one(),
    ];
    for v in f.degrees() {
        breaks.push(v.clone());
        breaks.push(v.complement());
    }
    breaks.sort();
    breaks.dedup();
    let mut grid: Vec<UnitRational> = breaks.windows(2).map(|w| w[0].midpoint(&w[1])).collect();
    grid.extend(breaks.into_iter().filter(|v| !v.is_zero()));
    grid.sort();
    grid
}

/// Decides the point-form definitions of `(∈,∈∨q)`- and
/// `(∈̄,∈̄∨q̄)`-fuzzy filters, returning the first failing instance.
///
/// `(∈,∈∨q)`: `U(x;t) ∈ F` and `U(y;r) ∈ F` imply
/// `U(x⊙y; min{t,r}) ∈∨q F`, and `U(x;r) ∈ F` implies `U(y;r) ∈∨q F` for
/// `x ≤ y`.
///
/// `(∈̄,∈̄∨q̄)`: `U(x⊙y; min{t,r}) ∈̄ F` implies `U(x;t) ∈̄∨q̄ F` or
/// `U(y;r) ∈̄∨q̄ F`, and `U(y;r) ∈̄ F` implies `U(x;r) ∈̄∨q̄ F` for `x ≤ y`.
///
/// The quantifiers over `t, r ∈ (0,1]` range over [`point_grid`].
pub fn point_form_violation(
    f: &FuzzySet<'_>,
    variant: &Variant,
) -> Result<Option<PointWitness>, TaxonomyError> {
    let overline = match variant {
        Variant::EqVq => false,
        Variant::Overline => true,
        other => return Err(TaxonomyError::NoPointForm(other.to_string())),
    };
    let alg = f.algebra();
    let grid = point_grid(f);

    // rank every degree, complement and grid value in one ordered list
    let mut vals: Vec<UnitRational> = grid.clone();
    vals.extend(f.degrees().iter().cloned());
    vals.extend(f.degrees().iter().map(UnitRational::complement));
    vals.sort();
    vals.dedup();
    let rank = |v: &UnitRational| vals.binary_search(v).expect("value was inserted");
    let deg: Vec<usize> = f.degrees().iter().map(rank).collect();
    let comp: Vec<usize> = f.degrees().iter().map(|v| rank(&v.complement())).collect();
    let ts: Vec<usize> = grid.iter().map(rank).collect();

    // U(e; t) ∈ F  ⇔ F(e) ≥ t;   U(e; t) q F ⇔ t > 1 − F(e)
    let belongs = |e: Elem, t: usize| deg[e.0] >= t;
    let quasi = |e: Elem, t: usize| t > comp[e.0];
    let not_belongs_or_not_quasi = |e: Elem, t: usize| !belongs(e, t) || !quasi(e, t);

    let witness = |condition, x, y, ti: usize, ri: usize| {
        Ok(Some(PointWitness {
            condition,
            x,
            y,
            t: grid[ti].clone(),
            r: grid[ri].clone(),
        }))
    };

    for x in alg.elements() {
        for y in alg.elements() {
            let xy = alg.odot(x, y);
            for (ti, &t) in ts.iter().enumerate() {
                for (ri, &r) in ts.iter().enumerate() {
                    let m = t.min(r);
                    let ok = if overline {
                        belongs(xy, m)
                            || not_belongs_or_not_quasi(x, t)
                            || not_belongs_or_not_quasi(y, r)
                    } else {
                        !(belongs(x, t) && belongs(y, r)) || belongs(xy, m) || quasi(xy, m)
                    };
                    if !ok {
                        return witness(Condition::Product, x, y, ti, ri);
                    }
                }
            }
        }
    }
    for x in alg.elements() {
        for y in alg.elements() {
            if !alg.leq(x, y) {
                continue;
            }
            for (ri, &r) in ts.iter().enumerate() {
                let ok = if overline {
                    belongs(y, r) || not_belongs_or_not_quasi(x, r)
                } else {
                    !belongs(x, r) || belongs(y, r) || quasi(y, r)
                };
                if !ok {
                    return witness(Condition::Monotone, x, y, ri, ri);
                }
            }
        }
    }
    Ok(None)
}

pub fn point_form_check(f: &FuzzySet<'_>, variant: &Variant) -> Result<bool, TaxonomyError> {
    Ok(point_form_violation(f, variant)?.is_none())
}

/// A threshold `t` whose non-empty level set is not a filter of the kind.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelWitness {
    pub t: UnitRational,
    pub level_set: CrispSubset,
    pub violation: FilterViolation,
}

/// `{0} ∪ image(F) ∪ {1}`, ascending. Level sets are constant on each
/// `(p_i, p_{i+1}]`.
fn level_breakpoints(f: &FuzzySet<'_>) -> Vec<UnitRational> {
    let mut pts = critical_values(f);
    pts.push(UnitRational::zero());
    pts.push(UnitRational::one());
    pts.sort();
    pts.dedup();
    pts
}

/// Checks that every non-empty `U(F; t)` with `lo < t ≤ hi` is a kind-`kind`
/// filter, one representative `t` per constant piece.
pub fn level_form_violation(
    f: &FuzzySet<'_>,
    lo: &UnitRational,
    hi: &UnitRational,
    kind: FilterKind,
) -> Result<Option<LevelWitness>, TaxonomyError> {
    check_thresholds(lo, hi)?;
    let alg = f.algebra();
    for w in level_breakpoints(f).windows(2) {
        let (p, q) = (&w[0], &w[1]);
        if q <= lo || p >= hi {
            continue;
        }
        let t = if q < hi { q.clone() } else { hi.clone() };
        let set = level_set_unchecked(f, &t);
        if set.is_empty() {
            continue;
        }
        if let Some(violation) = filter_violation(alg, set, kind).expect("set is non-empty") {
            return Ok(Some(LevelWitness {
                t,
                level_set: set,
                violation,
            }));
        }
    }
    Ok(None)
}

pub fn level_form_check(
    f: &FuzzySet<'_>,
    lo: &UnitRational,
    hi: &UnitRational,
    kind: FilterKind,
) -> Result<bool, TaxonomyError> {
    Ok(level_form_violation(f, lo, hi, kind)?.is_none())
}

/// `J = { t ∈ (0,1] : U(F; t) is empty or a kind-`kind` filter }`.
pub fn threshold_profile(f: &FuzzySet<'_>, kind: FilterKind) -> IntervalSet {
    let alg = f.algebra();
    let good = level_breakpoints(f)
        .windows(2)
        .filter(|w| {
            let set = level_set_unchecked(f, &w[1]);
            set.is_empty()
                || filter_violation(alg, set, kind)
                    .expect("set is non-empty")
                    .is_none()
        })
        .map(|w| (w[0].clone(), w[1].clone()))
        .collect::<Vec<_>>();
    IntervalSet::from_intervals(good)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub variant: Variant,
    pub kind: FilterKind,
    pub holds: bool,
    /// First failing inequality when `holds` is false.
    pub witness: Option<InequalityWitness>,
}

/// The full classification of one fuzzy set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TaxonomyRecord {
    /// Named variants first (ordinary, eq_vq, overline), then any requested
    /// thresholds; kinds in [`FilterKind::ALL`] order within each variant.
    pub verdicts: Vec<Verdict>,
    /// Threshold profile per kind, in [`FilterKind::ALL`] order.
    pub profiles: Vec<(FilterKind, IntervalSet)>,
}

impl TaxonomyRecord {
    pub fn verdict(&self, variant: &Variant, kind: FilterKind) -> Option<&Verdict> {
        self.verdicts
            .iter()
            .find(|v| &v.variant == variant && v.kind == kind)
    }

    pub fn holds(&self, variant: &Variant, kind: FilterKind) -> Option<bool> {
        self.verdict(variant, kind).map(|v| v.holds)
    }

    pub fn profile(&self, kind: FilterKind) -> &IntervalSet {
        &self
            .profiles
            .iter()
            .find(|(k, _)| *k == kind)
            .expect("every kind has a profile")
            .1
    }
}

/// Classifies `F` under the three named variants and every kind.
pub fn classify(f: &FuzzySet<'_>) -> Result<TaxonomyRecord, TaxonomyError> {
    classify_with(f, &[])
}

/// Like [`classify`], additionally deciding the requested `(α, β)` pairs.
/// Each verdict is computed from the inequalities and cross-checked against
/// the level sets and the threshold profile.
pub fn classify_with(
    f: &FuzzySet<'_>,
    thresholds: &[(UnitRational, UnitRational)],
) -> Result<TaxonomyRecord, TaxonomyError> {
    let mut variants: Vec<Variant> = Variant::NAMED.to_vec();
    for (a, b) in thresholds {
        variants.push(Variant::thresholds(a.clone(), b.clone())?);
    }
    let profiles: Vec<(FilterKind, IntervalSet)> = FilterKind::ALL
        .iter()
        .map(|&k| (k, threshold_profile(f, k)))
        .collect();
    let mut verdicts = Vec::with_capacity(variants.len() * 4);
    for variant in variants {
        let (alpha, beta) = variant.bounds();
        for (kind, profile) in &profiles {
            let witness = threshold_violation(f, &alpha, &beta, *kind)?;
            let holds = witness.is_none();
            let by_levels = level_form_check(f, &alpha, &beta, *kind)?;
            if holds != by_levels || holds != profile.contains_interval(&alpha, &beta) {
                return Err(TaxonomyError::Inconsistent {
                    variant: variant.to_string(),
                    kind: *kind,
                });
            }
            verdicts.push(Verdict {
                variant: variant.clone(),
                kind: *kind,
                holds,
                witness,
            });
        }
    }
    Ok(TaxonomyRecord { verdicts, profiles })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_algebra;
    use crate::corpus;
    use crate::fuzzy::parse_fuzzy_set;

    fn q(p: i64, d: i64) -> UnitRational {
        UnitRational::from_ratio(p, d)
    }

    #[test]
    fn overline_example_inequalities() {
        let alg = parse_algebra(corpus::L3_THEN_BOOLEAN).unwrap();
        let f = parse_fuzzy_set(corpus::FUZZY_SETS[0].0, &alg).unwrap();
        assert!(threshold_check(&f, &q(1, 2), &q(1, 1), FilterKind::Plain).unwrap());
        let w = threshold_violation(&f, &q(0, 1), &q(1, 1), FilterKind::Plain)
            .unwrap()
            .unwrap();
        // max{F(a⊙a), 0} = F(0) = 1/5 < min{1/2, 1/2, 1}
        assert_eq!(w.render(&alg), "product x=a y=a");
        assert!(point_form_check(&f, &Variant::Overline).unwrap());
        assert!(!point_form_check(&f, &Variant::EqVq).unwrap());
        assert_eq!(
            threshold_profile(&f, FilterKind::Plain).to_string(),
            "(0,1/5] (1/2,1]"
        );
    }

    #[test]
    fn constant_top_passes_everything() {
        for src in corpus::ALGEBRAS {
            let alg = parse_algebra(src).unwrap();
            let f = FuzzySet::constant(&alg, UnitRational::one());
            let rec = classify_with(&f, &[(q(2, 5), q(3, 5))]).unwrap();
            assert!(rec.verdicts.iter().all(|v| v.holds && v.witness.is_none()));
            assert!(point_form_check(&f, &Variant::Overline).unwrap());
            assert!(point_form_check(&f, &Variant::EqVq).unwrap());
            for kind in FilterKind::ALL {
                assert_eq!(rec.profile(kind), &IntervalSet::full());
            }
        }
    }

    #[test]
    fn profile_example_level_form() {
        let alg = parse_algebra(corpus::L3_THEN_BOOLEAN).unwrap();
        let f = parse_fuzzy_set(corpus::FUZZY_SETS[1].0, &alg).unwrap();
        assert!(level_form_check(&f, &q(2, 5), &q(3, 5), FilterKind::Plain).unwrap());
        let w = level_form_violation(&f, &q(3, 5), &q(4, 5), FilterKind::Plain)
            .unwrap()
            .unwrap();
        assert_eq!(w.level_set.render(&alg), "{b}");
        assert!(level_form_check(&f, &q(4, 5), &q(1, 1), FilterKind::Fantastic).unwrap());
        assert_eq!(
            threshold_profile(&f, FilterKind::Plain).to_string(),
            "(0,1/5] (2/5,3/5] (4/5,1]"
        );
    }

    #[test]
    fn invalid_thresholds_and_variants() {
        let alg = parse_algebra(corpus::LUKASIEWICZ4).unwrap();
        let f = FuzzySet::constant(&alg, UnitRational::half());
        assert!(matches!(
            threshold_check(&f, &q(1, 2), &q(1, 2), FilterKind::Plain),
            Err(TaxonomyError::InvalidThresholds(..))
        ));
        assert!(level_form_check(&f, &q(3, 5), &q(1, 2), FilterKind::Plain).is_err());
        assert!(matches!(
            point_form_check(&f, &Variant::Ordinary),
            Err(TaxonomyError::NoPointForm(_))
        ));
        assert!(Variant::thresholds(q(1, 1), q(1, 2)).is_err());
    }

    #[test]
    fn diamond_positive_implicative_example() {
        let alg = parse_algebra(corpus::DIAMOND5).unwrap();
        let f = parse_fuzzy_set(corpus::FUZZY_SETS[4].0, &alg).unwrap();
        let rec = classify(&f).unwrap();
        assert_eq!(
            rec.holds(&Variant::Overline, FilterKind::PositiveImplicative),
            Some(true)
        );
        let ord = rec.verdict(&Variant::Ordinary, FilterKind::Plain).unwrap();
        assert!(!ord.holds);
        // a ≤ c but F(c) = 1/5 < F(a) = 2/5
        assert_eq!(
            ord.witness.as_ref().unwrap().render(&alg),
            "monotone x=a y=c"
        );
        assert_eq!(rec.holds(&Variant::EqVq, FilterKind::Plain), Some(false));
    }

    #[test]
    fn grid_contains_breakpoints_and_midpoints() {
        let alg = parse_algebra(corpus::L3_THEN_BOOLEAN).unwrap();
        let f = parse_fuzzy_set(corpus::FUZZY_SETS[0].0, &alg).unwrap();
        let got: Vec<String> = point_grid(&f).iter().map(ToString::to_string).collect();
        // breakpoints 0, 1/5, 2/5, 1/2, 3/5, 4/5, 1
        assert_eq!(
            got,
            [
                "1/10", "1/5", "3/10", "2/5", "9/20", "1/2", "11/20", "3/5", "7/10", "4/5", "9/10",
                "1"
            ]
        );
    }
}
