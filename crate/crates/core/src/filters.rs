//! Crisp filters of a finite BL-algebra: the four filter kinds, their
//! single-implication characterizations, exhaustive enumeration, and the
//! inclusion theorems relating the kinds.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use thiserror::Error;

use crate::algebra::{Elem, FiniteBLAlgebra};

/// Largest carrier [`enumerate_filters`] will search exhaustively.
pub const ENUMERATION_LIMIT: usize = 20;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FilterKind {
    Plain,
    Implicative,
    PositiveImplicative,
    Fantastic,
}

impl FilterKind {
    pub const ALL: [FilterKind; 4] = [
        FilterKind::Plain,
        FilterKind::Implicative,
        FilterKind::PositiveImplicative,
        FilterKind::Fantastic,
    ];

    pub fn token(self) -> &'static str {
        match self {
            FilterKind::Plain => "plain",
            FilterKind::Implicative => "implicative",
            FilterKind::PositiveImplicative => "positive_implicative",
            FilterKind::Fantastic => "fantastic",
        }
    }
}

impl fmt::Display for FilterKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for FilterKind {
    type Err = FilterError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FilterKind::ALL
            .into_iter()
            .find(|k| k.token() == s)
            .ok_or_else(|| FilterError::UnknownKind(s.to_string()))
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FilterError {
    #[error("filters are non-empty subsets; got the empty set")]
    EmptySubset,
    #[error("unknown filter kind `{0}` (expected plain, implicative, positive_implicative or fantastic)")]
    UnknownKind(String),
}

/// A subset of a carrier of at most 64 elements, bit `i` standing for the
/// element at position `i`. Ordering is by mask value.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CrispSubset(u64);

impl CrispSubset {
    pub const EMPTY: CrispSubset = CrispSubset(0);

    pub fn from_mask(mask: u64) -> Self {
        CrispSubset(mask)
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    /// The whole carrier of `alg`.
    pub fn full(alg: &FiniteBLAlgebra) -> Self {
        CrispSubset(full_mask(alg.size()))
    }

    pub fn contains(self, e: Elem) -> bool {
        self.0 >> e.0 & 1 == 1
    }

    pub fn with(self, e: Elem) -> Self {
        CrispSubset(self.0 | 1 << e.0)
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_subset(self, other: CrispSubset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = Elem> {
        (0..64).filter(move |i| self.0 >> i & 1 == 1).map(Elem)
    }

    /// Renders as `{x,y,...}` in declared element order.
    pub fn render(self, alg: &FiniteBLAlgebra) -> String {
        let names: Vec<&str> = self.iter().map(|e| alg.elem_name(e)).collect();
        format!("{{{}}}", names.join(","))
    }
}

impl FromIterator<Elem> for CrispSubset {
    fn from_iter<I: IntoIterator<Item = Elem>>(iter: I) -> Self {
        iter.into_iter().fold(CrispSubset::EMPTY, CrispSubset::with)
    }
}

fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A tuple at which a filter condition fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FilterViolation {
    pub kind: FilterKind,
    /// `[]` when the top element is missing, `[x, y]` for the filter-closure
    /// conditions, `[x, y, z]` for the kind conditions.
    pub witness: Vec<Elem>,
}

/// The first tuple violating the defining conditions of a kind-`kind`
/// filter, or `None` if `set` is one.
///
/// Plain: `1 ∈ A` and `x ∈ A, x → y ∈ A ⇒ y ∈ A`. The other kinds add, for
/// all `x, y, z`:
/// * implicative: `x → (z′ → y) ∈ A, y → z ∈ A ⇒ x → z ∈ A`;
/// * positive implicative: `x → (y → z) ∈ A, x → y ∈ A ⇒ x → z ∈ A`;
/// * fantastic: `z → (y → x) ∈ A, z ∈ A ⇒ ((x → y) → y) → x ∈ A`.
pub fn filter_violation(
    alg: &FiniteBLAlgebra,
    set: CrispSubset,
    kind: FilterKind,
) -> Result<Option<FilterViolation>, FilterError> {
    if set.is_empty() {
        return Err(FilterError::EmptySubset);
    }
    let fail = |k: FilterKind, witness: Vec<Elem>| Ok(Some(FilterViolation { kind: k, witness }));
    if !set.contains(alg.top()) {
        return fail(FilterKind::Plain, vec![]);
    }
    for x in set.iter() {
        for y in alg.elements() {
            if set.contains(alg.imp(x, y)) && !set.contains(y) {
                return fail(FilterKind::Plain, vec![x, y]);
            }
        }
    }
    let condition: fn(&FiniteBLAlgebra, CrispSubset, Elem, Elem, Elem) -> bool = match kind {
        FilterKind::Plain => return Ok(None),
        FilterKind::Implicative => |alg, s, x, y, z| {
            let i = |a, b| alg.imp(a, b);
            !(s.contains(i(x, i(alg.neg(z), y))) && s.contains(i(y, z))) || s.contains(i(x, z))
        },
        FilterKind::PositiveImplicative => |alg, s, x, y, z| {
            let i = |a, b| alg.imp(a, b);
            !(s.contains(i(x, i(y, z))) && s.contains(i(x, y))) || s.contains(i(x, z))
        },
        FilterKind::Fantastic => |alg, s, x, y, z| {
            let i = |a, b| alg.imp(a, b);
            !(s.contains(i(z, i(y, x))) && s.contains(z)) || s.contains(i(i(i(x, y), y), x))
        },
    };
    for x in alg.elements() {
        for y in alg.elements() {
            for z in alg.elements() {
                if !condition(alg, set, x, y, z) {
                    return fail(kind, vec![x, y, z]);
                }
            }
        }
    }
    Ok(None)
}

/// Decides whether `set` is a filter of the given kind, straight from the
/// definitions.
pub fn is_filter(
    alg: &FiniteBLAlgebra,
    set: CrispSubset,
    kind: FilterKind,
) -> Result<bool, FilterError> {
    Ok(filter_violation(alg, set, kind)?.is_none())
}

/// Decides the same question through the alternate characterizations: a
/// filter is a `⊙`-closed up-set, and each kind reduces to one implication
/// in two variables:
/// * implicative: `(x → y) → x ∈ A ⇒ x ∈ A`;
/// * positive implicative: `x → (x → y) ∈ A ⇒ x → y ∈ A`;
/// * fantastic: `y → x ∈ A ⇒ ((x → y) → y) → x ∈ A`.
pub fn filter_via_characterization(
    alg: &FiniteBLAlgebra,
    set: CrispSubset,
    kind: FilterKind,
) -> Result<bool, FilterError> {
    if set.is_empty() {
        return Err(FilterError::EmptySubset);
    }
    let closed = set
        .iter()
        .all(|x| set.iter().all(|y| set.contains(alg.odot(x, y))));
    let upward = set
        .iter()
        .all(|x| alg.elements().all(|y| !alg.leq(x, y) || set.contains(y)));
    if !(closed && upward) {
        return Ok(false);
    }
    let i = |a, b| alg.imp(a, b);
    let pairs = || {
        alg.elements()
            .flat_map(move |x| alg.elements().map(move |y| (x, y)))
    };
    Ok(match kind {
        FilterKind::Plain => true,
        FilterKind::Implicative => {
            pairs().all(|(x, y)| !set.contains(i(i(x, y), x)) || set.contains(x))
        }
        FilterKind::PositiveImplicative => {
            pairs().all(|(x, y)| !set.contains(i(x, i(x, y))) || set.contains(i(x, y)))
        }
        FilterKind::Fantastic => {
            pairs().all(|(x, y)| !set.contains(i(y, x)) || set.contains(i(i(i(x, y), y), x)))
        }
    })
}

/// All kind-`kind` filters of `alg`, sorted by subset mask.
///
/// # Panics
///
/// If the carrier exceeds [`ENUMERATION_LIMIT`] elements.
pub fn enumerate_filters(alg: &FiniteBLAlgebra, kind: FilterKind) -> Vec<CrispSubset> {
    let n = alg.size();
    assert!(
        n <= ENUMERATION_LIMIT,
        "exhaustive filter enumeration supports at most {ENUMERATION_LIMIT} elements, got {n}"
    );
    let top = 1u64 << alg.top().0;
    // every filter contains the top element
    (1..=full_mask(n))
        .into_par_iter()
        .filter(|m| m & top != 0)
        .map(CrispSubset)
        .filter(|&s| matches!(is_filter(alg, s, kind), Ok(true)))
        .collect()
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum FilterTheorem {
    /// Every implicative filter is positive implicative.
    ImplicativeIsPositiveImplicative,
    /// Every implicative filter is fantastic.
    ImplicativeIsFantastic,
    /// Implicative filters are exactly the positive implicative fantastic ones.
    ImplicativeIsIntersection,
}

impl FilterTheorem {
    pub const ALL: [FilterTheorem; 3] = [
        FilterTheorem::ImplicativeIsPositiveImplicative,
        FilterTheorem::ImplicativeIsFantastic,
        FilterTheorem::ImplicativeIsIntersection,
    ];

    pub fn token(self) -> &'static str {
        match self {
            FilterTheorem::ImplicativeIsPositiveImplicative => {
                "implicative_subset_positive_implicative"
            }
            FilterTheorem::ImplicativeIsFantastic => "implicative_subset_fantastic",
            FilterTheorem::ImplicativeIsIntersection => {
                "implicative_eq_positive_implicative_and_fantastic"
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremOutcome {
    pub theorem: FilterTheorem,
    pub counterexample: Option<CrispSubset>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremReport {
    pub outcomes: Vec<TheoremOutcome>,
    /// Number of filters of each kind, in [`FilterKind::ALL`] order.
    pub counts: [usize; 4],
}

impl TheoremReport {
    pub fn all_pass(&self) -> bool {
        self.outcomes.iter().all(|o| o.counterexample.is_none())
    }
}

/// Enumerates the filters of every kind and checks the inclusions between
/// implicative, positive implicative and fantastic filters.
pub fn check_filter_theorems(alg: &FiniteBLAlgebra) -> TheoremReport {
    let [plain, imp, pimp, fan] = FilterKind::ALL.map(|k| enumerate_filters(alg, k));
    let first_missing = |from: &[CrispSubset], into: &[CrispSubset]| {
        from.iter()
            .copied()
            .find(|s| into.binary_search(s).is_err())
    };
    let both: Vec<CrispSubset> = pimp
        .iter()
        .copied()
        .filter(|s| fan.binary_search(s).is_ok())
        .collect();
    let equality = first_missing(&imp, &both)
        .into_iter()
        .chain(first_missing(&both, &imp))
        .min();
    let outcomes = vec![
        TheoremOutcome {
            theorem: FilterTheorem::ImplicativeIsPositiveImplicative,
            counterexample: first_missing(&imp, &pimp),
        },
        TheoremOutcome {
            theorem: FilterTheorem::ImplicativeIsFantastic,
            counterexample: first_missing(&imp, &fan),
        },
        TheoremOutcome {
            theorem: FilterTheorem::ImplicativeIsIntersection,
            counterexample: equality,
        },
    ];
    TheoremReport {
        outcomes,
        counts: [plain.len(), imp.len(), pimp.len(), fan.len()],
    }
}
