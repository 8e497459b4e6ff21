//! Exhaustive equivalence checks over a grid of fuzzy sets.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::algebra::FiniteBLAlgebra;
use crate::filters::{check_filter_theorems, FilterKind, FilterTheorem};
use crate::fuzzy::FuzzySet;
use crate::rational::UnitRational;
use crate::taxonomy::{
    level_form_check, point_form_check, threshold_check, threshold_profile, Variant,
};

use super::grid::{fuzzy_set_at, GridSpec};

/// The `(α, β)` pairs every grid fuzzy set is checked against.
pub fn threshold_battery() -> Vec<(UnitRational, UnitRational)> {
    [
        (0, 1, 1, 1),
        (0, 1, 1, 2),
        (1, 2, 1, 1),
        (2, 5, 3, 5),
        (3, 10, 9, 10),
    ]
    .into_iter()
    .map(|(a, b, c, d)| {
        (
            UnitRational::from_ratio(a, b),
            UnitRational::from_ratio(c, d),
        )
    })
    .collect()
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Equivalence {
    /// Inequality form ⇔ every non-empty level set in `(α, β]` is a filter.
    LevelForm,
    /// Inequality form ⇔ `(α, β]` lies inside the threshold profile.
    Profile,
    /// `(∈̄,∈̄∨q̄)` point form ⇔ inequality form with `(1/2, 1]`.
    OverlinePointForm,
    /// `(∈,∈∨q)` point form ⇔ level sets in `(0, 1/2]` are filters.
    EqVqPointForm,
    /// Ordinary ⇒ both generalized variants.
    VariantEmbedding,
    /// `(∈̄,∈̄∨q̄)` implicative ⇔ positive implicative and fantastic.
    ImplicativeDecomposition,
    /// Crisp inclusions between filter kinds.
    Crisp(FilterTheorem),
}

impl Equivalence {
    /// Checks run by [`verify_equivalences`].
    pub const CHARACTERIZATIONS: [Equivalence; 5] = [
        Equivalence::LevelForm,
        Equivalence::Profile,
        Equivalence::OverlinePointForm,
        Equivalence::EqVqPointForm,
        Equivalence::VariantEmbedding,
    ];

    /// Checks run by [`verify_decomposition`].
    pub const DECOMPOSITION: [Equivalence; 4] = [
        Equivalence::ImplicativeDecomposition,
        Equivalence::Crisp(FilterTheorem::ImplicativeIsPositiveImplicative),
        Equivalence::Crisp(FilterTheorem::ImplicativeIsFantastic),
        Equivalence::Crisp(FilterTheorem::ImplicativeIsIntersection),
    ];

    pub fn all() -> impl Iterator<Item = Equivalence> {
        Self::CHARACTERIZATIONS
            .into_iter()
            .chain(Self::DECOMPOSITION)
    }

    pub fn token(self) -> &'static str {
        match self {
            Equivalence::LevelForm => "level_form",
            Equivalence::Profile => "profile",
            Equivalence::OverlinePointForm => "overline_point_form",
            Equivalence::EqVqPointForm => "eq_vq_point_form",
            Equivalence::VariantEmbedding => "variant_embedding",
            Equivalence::ImplicativeDecomposition => "implicative_decomposition",
            Equivalence::Crisp(t) => t.token(),
        }
    }

    fn is_crisp(self) -> bool {
        matches!(self, Equivalence::Crisp(_))
    }
}

impl fmt::Display for Equivalence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for Equivalence {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Equivalence::all()
            .find(|e| e.token() == s)
            .ok_or_else(|| format!("unknown theorem `{s}`"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    /// The offending fuzzy set (`0=1/2 a=0 …`) or crisp subset (`{b,1}`).
    pub subject: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceCheck {
    pub equivalence: Equivalence,
    pub instances: usize,
    pub counterexamples: Vec<Counterexample>,
}

impl EquivalenceCheck {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub algebra: String,
    pub grid: GridSpec,
    pub fuzzy_sets: usize,
    pub checks: Vec<EquivalenceCheck>,
}

impl EquivalenceReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(EquivalenceCheck::passed)
    }

    pub fn instances(&self) -> usize {
        self.checks.iter().map(|c| c.instances).sum()
    }
}

fn subject(f: &FuzzySet<'_>) -> String {
    let alg = f.algebra();
    alg.elements()
        .map(|e| format!("{}={}", alg.elem_name(e), f.degree(e)))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Instances checked and failure details for one fuzzy set and one check.
type Tally = (usize, Vec<String>);

fn check_one(f: &FuzzySet<'_>, eq: Equivalence, battery: &[(UnitRational, UnitRational)]) -> Tally {
    let mut instances = 0;
    let mut failures = Vec::new();
    let ok = |r: Result<bool, _>| r.expect("battery thresholds are admissible");
    match eq {
        Equivalence::LevelForm | Equivalence::Profile => {
            for kind in FilterKind::ALL {
                let profile = (eq == Equivalence::Profile).then(|| threshold_profile(f, kind));
                for (a, b) in battery {
                    instances += 1;
                    let lhs = ok(threshold_check(f, a, b, kind));
                    let rhs = match &profile {
                        Some(j) => j.contains_interval(a, b),
                        None => ok(level_form_check(f, a, b, kind)),
                    };
                    if lhs != rhs {
                        failures.push(format!("({a},{b}] {kind}: inequalities={lhs} other={rhs}"));
                    }
                }
            }
        }
        Equivalence::OverlinePointForm => {
            instances += 1;
            let lhs = ok(point_form_check(f, &Variant::Overline));
            let (a, b) = Variant::Overline.bounds();
            let rhs = ok(threshold_check(f, &a, &b, FilterKind::Plain));
            if lhs != rhs {
                failures.push(format!("point_form={lhs} inequalities={rhs}"));
            }
        }
        Equivalence::EqVqPointForm => {
            instances += 1;
            let lhs = ok(point_form_check(f, &Variant::EqVq));
            let (a, b) = Variant::EqVq.bounds();
            let rhs = ok(level_form_check(f, &a, &b, FilterKind::Plain));
            if lhs != rhs {
                failures.push(format!("point_form={lhs} level_form={rhs}"));
            }
        }
        Equivalence::VariantEmbedding => {
            for kind in FilterKind::ALL {
                instances += 1;
                let verdict = |v: &Variant| {
                    let (a, b) = v.bounds();
                    ok(threshold_check(f, &a, &b, kind))
                };
                if verdict(&Variant::Ordinary)
                    && !(verdict(&Variant::EqVq) && verdict(&Variant::Overline))
                {
                    failures.push(format!("ordinary {kind} without both generalized forms"));
                }
            }
        }
        Equivalence::ImplicativeDecomposition => {
            instances += 1;
            let (a, b) = Variant::Overline.bounds();
            let [imp, pimp, fan] = [
                FilterKind::Implicative,
                FilterKind::PositiveImplicative,
                FilterKind::Fantastic,
            ]
            .map(|k| ok(threshold_check(f, &a, &b, k)));
            if imp != (pimp && fan) {
                failures.push(format!(
                    "implicative={imp} positive_implicative={pimp} fantastic={fan}"
                ));
            }
        }
        Equivalence::Crisp(_) => unreachable!("crisp checks do not range over fuzzy sets"),
    }
    (instances, failures)
}

/// Runs the selected checks on every grid fuzzy set of `alg`, in parallel,
/// merging results in grid order.
pub fn verify_selected(
    alg: &FiniteBLAlgebra,
    grid: GridSpec,
    selection: &[Equivalence],
) -> EquivalenceReport {
    let battery = threshold_battery();
    let values = grid.values();
    let fuzzy: Vec<Equivalence> = selection
        .iter()
        .copied()
        .filter(|e| !e.is_crisp())
        .collect();
    let count = grid.count(alg);
    let per_set: Vec<Vec<(Tally, String)>> = (0..count)
        .into_par_iter()
        .map(|i| {
            let f = fuzzy_set_at(alg, &values, i);
            let name = subject(&f);
            fuzzy
                .iter()
                .map(|&eq| (check_one(&f, eq, &battery), name.clone()))
                .collect()
        })
        .collect();

    let crisp = selection
        .iter()
        .any(|e| e.is_crisp())
        .then(|| check_filter_theorems(alg));
    let checks = selection
        .iter()
        .map(|&eq| match eq {
            Equivalence::Crisp(theorem) => {
                let report = crisp.as_ref().expect("computed when selected");
                let outcome = report
                    .outcomes
                    .iter()
                    .find(|o| o.theorem == theorem)
                    .expect("every theorem is checked");
                EquivalenceCheck {
                    equivalence: eq,
                    instances: report.counts.iter().sum(),
                    counterexamples: outcome
                        .counterexample
                        .iter()
                        .map(|s| Counterexample {
                            subject: s.render(alg),
                            detail: theorem.token().to_string(),
                        })
                        .collect(),
                }
            }
            _ => {
                let slot = fuzzy.iter().position(|&e| e == eq).expect("selected");
                let mut check = EquivalenceCheck {
                    equivalence: eq,
                    instances: 0,
                    counterexamples: Vec::new(),
                };
                for row in &per_set {
                    let ((n, failures), name) = &row[slot];
                    check.instances += n;
                    check
                        .counterexamples
                        .extend(failures.iter().map(|d| Counterexample {
                            subject: name.clone(),
                            detail: d.clone(),
                        }));
                }
                check
            }
        })
        .collect();
    EquivalenceReport {
        algebra: alg.name().to_string(),
        grid,
        fuzzy_sets: count,
        checks,
    }
}

/// Checks that the inequality, level-set, profile and point forms of every
/// variant agree on every grid fuzzy set, for each kind and each pair of
/// [`threshold_battery`].
pub fn verify_equivalences(alg: &FiniteBLAlgebra, grid: GridSpec) -> EquivalenceReport {
    verify_selected(alg, grid, &Equivalence::CHARACTERIZATIONS)
}

/// Checks that a `(∈̄,∈̄∨q̄)`-fuzzy implicative filter is exactly one that
/// is both positive implicative and fantastic, on every grid fuzzy set, plus
/// the crisp inclusions on the filters of `alg`.
pub fn verify_decomposition(alg: &FiniteBLAlgebra, grid: GridSpec) -> EquivalenceReport {
    verify_selected(alg, grid, &Equivalence::DECOMPOSITION)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_algebra;
    use crate::algebra::tests::BOOLEAN2;
    use crate::corpus;

    #[test]
    fn mixed_chain_half_grid() {
        let alg = parse_algebra(corpus::L3_THEN_BOOLEAN).unwrap();
        let report = verify_equivalences(&alg, GridSpec::new(2).unwrap());
        assert_eq!(report.fuzzy_sets, 81);
        assert!(report.passed(), "{:?}", report.checks);
        let level = &report.checks[0];
        assert_eq!(level.equivalence, Equivalence::LevelForm);
        assert_eq!(level.instances, 81 * 4 * 5);
        assert!(verify_decomposition(&alg, GridSpec::new(2).unwrap()).passed());
    }

    #[test]
    fn boolean_quarter_grid() {
        let alg = parse_algebra(BOOLEAN2).unwrap();
        let grid = GridSpec::new(4).unwrap();
        assert!(verify_equivalences(&alg, grid).passed());
        assert!(verify_decomposition(&alg, grid).passed());
    }

    #[test]
    fn tokens_round_trip() {
        for e in Equivalence::all() {
            assert_eq!(e.token().parse::<Equivalence>(), Ok(e));
        }
        assert!("nonsense".parse::<Equivalence>().is_err());
    }
}
