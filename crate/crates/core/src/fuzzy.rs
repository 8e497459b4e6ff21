//! Fuzzy sets over a finite BL-algebra, fuzzy points, and level sets.

use std::fmt;

use thiserror::Error;

use crate::algebra::parse::tokens;
use crate::algebra::{Elem, FiniteBLAlgebra};
use crate::filters::CrispSubset;
use crate::rational::{RationalError, UnitRational};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FuzzyError {
    #[error("membership table has {found} entries for a carrier of {expected}")]
    WrongLength { expected: usize, found: usize },
    #[error("level threshold must lie in (0,1]; got 0")]
    ZeroThreshold,
    #[error("fuzzy point value must lie in (0,1]; got 0")]
    ZeroPoint,
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("line {line}: unknown element `{name}`")]
    UnknownElement { line: usize, name: String },
    #[error("line {line}: element `{name}` assigned twice")]
    DuplicateAssignment { line: usize, name: String },
    #[error("no membership degree given for element `{0}`")]
    MissingElement(String),
    #[error("fuzzy set is declared over `{declared}` but the algebra is `{actual}`")]
    AlgebraMismatch { declared: String, actual: String },
    #[error("line {line}: {source}")]
    Value {
        line: usize,
        #[source]
        source: RationalError,
    },
}

/// A total map from the carrier of `alg` to `[0,1]`.
#[derive(Clone, PartialEq, Eq)]
pub struct FuzzySet<'a> {
    alg: &'a FiniteBLAlgebra,
    name: String,
    membership: Vec<UnitRational>,
}

impl<'a> FuzzySet<'a> {
    /// `membership[i]` is the degree of the element at position `i`.
    pub fn new(
        alg: &'a FiniteBLAlgebra,
        membership: Vec<UnitRational>,
    ) -> Result<Self, FuzzyError> {
        if membership.len() != alg.size() {
            return Err(FuzzyError::WrongLength {
                expected: alg.size(),
                found: membership.len(),
            });
        }
        Ok(FuzzySet {
            alg,
            name: String::from("F"),
            membership,
        })
    }

    /// The fuzzy set with every degree equal to `value`.
    pub fn constant(alg: &'a FiniteBLAlgebra, value: UnitRational) -> Self {
        FuzzySet {
            alg,
            name: String::from("F"),
            membership: vec![value; alg.size()],
        }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn algebra(&self) -> &'a FiniteBLAlgebra {
        self.alg
    }

    pub fn degree(&self, e: Elem) -> &UnitRational {
        &self.membership[e.0]
    }

    pub fn degrees(&self) -> &[UnitRational] {
        &self.membership
    }

    /// Renders the set in the fuzzy-set file format.
    pub fn to_source(&self) -> String {
        let mut s = format!("fuzzyset {} over {}\n", self.name, self.alg.name());
        for e in self.alg.elements() {
            s.push_str(&format!("{} = {}\n", self.alg.elem_name(e), self.degree(e)));
        }
        s.push_str("end\n");
        s
    }
}

impl fmt::Debug for FuzzySet<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let entries: Vec<String> = self
            .alg
            .elements()
            .map(|e| format!("{}={}", self.alg.elem_name(e), self.degree(e)))
            .collect();
        write!(f, "{}({})", self.name, entries.join(", "))
    }
}

/// Parses the fuzzy-set file format:
///
/// ```text
/// fuzzyset <name> over <algebra-name>
/// <element> = <rational or decimal literal>
/// end
/// ```
///
/// Every carrier element must be assigned exactly once.
pub fn parse_fuzzy_set<'a>(
    text: &str,
    alg: &'a FiniteBLAlgebra,
) -> Result<FuzzySet<'a>, FuzzyError> {
    let syntax = |line, column, message: &str| FuzzyError::Syntax {
        line,
        column,
        message: message.to_string(),
    };
    let mut name: Option<String> = None;
    let mut degrees: Vec<Option<UnitRational>> = vec![None; alg.size()];
    let mut ended = false;
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let toks = tokens(raw);
        let Some(&(col, head)) = toks.first() else {
            continue;
        };
        last_line = line;
        if ended {
            return Err(syntax(line, col, "content after `end`"));
        }
        match (head, name.is_some()) {
            ("fuzzyset", false) => match toks.as_slice() {
                [_, (_, n), (_, "over"), (_, a)] => {
                    if *a != alg.name() {
                        return Err(FuzzyError::AlgebraMismatch {
                            declared: a.to_string(),
                            actual: alg.name().to_string(),
                        });
                    }
                    name = Some(n.to_string());
                }
                _ => {
                    return Err(syntax(
                        line,
                        col,
                        "expected `fuzzyset <name> over <algebra>`",
                    ))
                }
            },
            (_, false) => return Err(syntax(line, col, "expected `fuzzyset` header")),
            ("end", true) => {
                if let Some(&(c, _)) = toks.get(1) {
                    return Err(syntax(line, c, "unexpected token after `end`"));
                }
                ended = true;
            }
            (_, true) => {
                let [(_, elem), (_, "="), (_, value)] = toks.as_slice() else {
                    let c = toks.get(1).map_or(col, |t| t.0);
                    return Err(syntax(line, c, "expected `<element> = <value>`"));
                };
                let e = alg.elem(elem).map_err(|_| FuzzyError::UnknownElement {
                    line,
                    name: elem.to_string(),
                })?;
                if degrees[e.0].is_some() {
                    return Err(FuzzyError::DuplicateAssignment {
                        line,
                        name: elem.to_string(),
                    });
                }
                let v = value
                    .parse::<UnitRational>()
                    .map_err(|source| FuzzyError::Value { line, source })?;
                degrees[e.0] = Some(v);
            }
        }
    }
    let name = name.ok_or_else(|| syntax(last_line.max(1), 1, "missing `fuzzyset` header"))?;
    if !ended {
        return Err(syntax(last_line.max(1), 1, "missing `end`"));
    }
    let membership = degrees
        .into_iter()
        .enumerate()
        .map(|(i, d)| {
            d.ok_or_else(|| FuzzyError::MissingElement(alg.elem_name(Elem(i)).to_string()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(FuzzySet::new(alg, membership)?.with_name(name))
}

/// A fuzzy point `U(x; t)` with `t ∈ (0,1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FuzzyPoint {
    support: Elem,
    value: UnitRational,
}

impl FuzzyPoint {
    pub fn new(support: Elem, value: UnitRational) -> Result<Self, FuzzyError> {
        if value.is_zero() {
            return Err(FuzzyError::ZeroPoint);
        }
        Ok(FuzzyPoint { support, value })
    }

    pub fn support(&self) -> Elem {
        self.support
    }

    pub fn value(&self) -> &UnitRational {
        &self.value
    }
}

/// Relations between a fuzzy point and a fuzzy set. The negated forms are
/// pointwise: `NotBelongsOrNotQuasi` is the disjunction of the two negations.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum PointRelation {
    /// `F(x) ≥ t`
    Belongs,
    /// `F(x) + t > 1`
    Quasi,
    BelongsOrQuasi,
    /// `F(x) < t`
    NotBelongs,
    /// `F(x) + t ≤ 1`
    NotQuasi,
    NotBelongsOrNotQuasi,
}

impl PointRelation {
    pub const ALL: [PointRelation; 6] = [
        PointRelation::Belongs,
        PointRelation::Quasi,
        PointRelation::BelongsOrQuasi,
        PointRelation::NotBelongs,
        PointRelation::NotQuasi,
        PointRelation::NotBelongsOrNotQuasi,
    ];
}

pub fn point_relation(f: &FuzzySet<'_>, p: &FuzzyPoint, rel: PointRelation) -> bool {
    let fx = f.degree(p.support);
    let t = &p.value;
    let belongs = fx >= t;
    let quasi = fx.sum_exceeds_one(t);
    match rel {
        PointRelation::Belongs => belongs,
        PointRelation::Quasi => quasi,
        PointRelation::BelongsOrQuasi => belongs || quasi,
        PointRelation::NotBelongs => !belongs,
        PointRelation::NotQuasi => !quasi,
        PointRelation::NotBelongsOrNotQuasi => !belongs || !quasi,
    }
}

/// `U(F; t) = { x : F(x) ≥ t }` for `t ∈ (0,1]`.
pub fn level_set(f: &FuzzySet<'_>, t: &UnitRational) -> Result<CrispSubset, FuzzyError> {
    if t.is_zero() {
        return Err(FuzzyError::ZeroThreshold);
    }
    Ok(level_set_unchecked(f, t))
}

pub(crate) fn level_set_unchecked(f: &FuzzySet<'_>, t: &UnitRational) -> CrispSubset {
    f.alg.elements().filter(|&e| f.degree(e) >= t).collect()
}

/// The distinct degrees of `f`, ascending. Level sets are constant on every
/// interval between consecutive values (with 0 and 1 adjoined).
pub fn critical_values(f: &FuzzySet<'_>) -> Vec<UnitRational> {
    let mut vals = f.membership.clone();
    vals.sort();
    vals.dedup();
    vals
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_algebra;
    use crate::corpus;
    use proptest::prelude::*;

    fn q(p: i64, d: i64) -> UnitRational {
        UnitRational::from_ratio(p, d)
    }

    fn profile_set(alg: &FiniteBLAlgebra) -> FuzzySet<'_> {
        parse_fuzzy_set(corpus::FUZZY_SETS[1].0, alg).unwrap()
    }

    #[test]
    fn point_relation_boundaries() {
        let alg = parse_algebra(corpus::L3_THEN_BOOLEAN).unwrap();
        let a = alg.elem("a").unwrap();
        let f = FuzzySet::constant(&alg, UnitRational::half());
        let p = FuzzyPoint::new(a, UnitRational::half()).unwrap();
        assert!(point_relation(&f, &p, PointRelation::Belongs));
        assert!(!point_relation(&f, &p, PointRelation::Quasi));
        let g = parse_fuzzy_set(corpus::FUZZY_SETS[0].0, &alg).unwrap();
        assert_eq!(g.degree(alg.top()), &q(3, 5));
        let p = FuzzyPoint::new(alg.top(), UnitRational::half()).unwrap();
        assert!(point_relation(&g, &p, PointRelation::Quasi));
        assert_eq!(
            FuzzyPoint::new(a, UnitRational::zero()),
            Err(FuzzyError::ZeroPoint)
        );
    }

    #[test]
    fn level_sets_of_profile_example() {
        let alg = parse_algebra(corpus::L3_THEN_BOOLEAN).unwrap();
        let f = profile_set(&alg);
        assert_eq!(
            level_set(&f, &UnitRational::half()).unwrap().render(&alg),
            "{b,1}"
        );
        assert!(level_set(&f, &q(9, 10)).unwrap().is_empty());
        assert_eq!(level_set(&f, &q(1, 5)).unwrap(), CrispSubset::full(&alg));
        assert_eq!(
            level_set(&f, &UnitRational::zero()),
            Err(FuzzyError::ZeroThreshold)
        );
    }

    #[test]
    fn critical_values_are_distinct_ascending() {
        let alg = parse_algebra(corpus::L3_THEN_BOOLEAN).unwrap();
        assert_eq!(
            critical_values(&profile_set(&alg)),
            [q(1, 5), q(2, 5), q(3, 5), q(4, 5)]
        );
        let g = parse_fuzzy_set(corpus::FUZZY_SETS[0].0, &alg).unwrap();
        assert_eq!(critical_values(&g), [q(1, 5), q(1, 2), q(3, 5)]);
        assert_eq!(
            critical_values(&FuzzySet::constant(&alg, UnitRational::one())),
            [q(1, 1)]
        );
    }

    #[test]
    fn parse_errors() {
        let alg = parse_algebra(corpus::L3_THEN_BOOLEAN).unwrap();
        let cases = [
            ("fuzzyset f over other\nend\n", "over `other`"),
            (
                "fuzzyset f over l3_then_boolean\n0 = 0.2\nend\n",
                "element `a`",
            ),
            (
                "fuzzyset f over l3_then_boolean\n0 = 0.2\n0 = 0.3\nend\n",
                "twice",
            ),
            (
                "fuzzyset f over l3_then_boolean\nz = 0.2\nend\n",
                "unknown element",
            ),
            ("fuzzyset f over l3_then_boolean\n0 = 1.2\nend\n", "outside"),
            ("fuzzyset f over l3_then_boolean\n0 0.2\nend\n", "expected"),
            ("0 = 1\n", "header"),
        ];
        for (src, needle) in cases {
            let err = parse_fuzzy_set(src, &alg).unwrap_err().to_string();
            assert!(err.contains(needle), "{src:?}: {err}");
        }
    }

    #[test]
    fn source_round_trip() {
        for (src, alg_src) in corpus::FUZZY_SETS {
            let alg = parse_algebra(alg_src).unwrap();
            let f = parse_fuzzy_set(src, &alg).unwrap();
            assert_eq!(parse_fuzzy_set(&f.to_source(), &alg).unwrap(), f);
        }
    }

    fn degree() -> impl Strategy<Value = UnitRational> {
        (0i64..=12).prop_map(|k| q(k, 12))
    }

    proptest! {
        #[test]
        fn level_sets_are_antitone(ds in prop::collection::vec(degree(), 4), s in 1i64..=12, t in 1i64..=12) {
            let alg = parse_algebra(corpus::LUKASIEWICZ4).unwrap();
            let f = FuzzySet::new(&alg, ds).unwrap();
            let (lo, hi) = (s.min(t), s.max(t));
            let big = level_set(&f, &q(lo, 12)).unwrap();
            let small = level_set(&f, &q(hi, 12)).unwrap();
            prop_assert!(small.is_subset(big));
            // same level set as at the least critical value ≥ t
            let tq = q(hi, 12);
            match critical_values(&f).into_iter().find(|v| *v >= tq) {
                Some(v) => prop_assert_eq!(level_set(&f, &v).unwrap(), small),
                None => prop_assert!(small.is_empty()),
            }
        }

        #[test]
        fn relations_are_de_morgan_duals(ds in prop::collection::vec(degree(), 4), x in 0usize..4, t in 1i64..=12) {
            let alg = parse_algebra(corpus::LUKASIEWICZ4).unwrap();
            let f = FuzzySet::new(&alg, ds).unwrap();
            let p = FuzzyPoint::new(Elem(x), q(t, 12)).unwrap();
            let rel = |r| point_relation(&f, &p, r);
            use PointRelation::*;
            prop_assert_eq!(rel(NotBelongsOrNotQuasi), !(rel(Belongs) && rel(Quasi)));
            prop_assert_eq!(rel(BelongsOrQuasi), !(rel(NotBelongs) && rel(NotQuasi)));
            prop_assert_eq!(rel(Belongs), level_set(&f, p.value()).unwrap().contains(Elem(x)));
        }
    }
}
