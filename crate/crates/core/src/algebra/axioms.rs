//! BL axioms and the standard arithmetic consequences, checked by exhaustive
//! evaluation over all element tuples.

use std::fmt;

use itertools::Itertools;

use super::{AlgebraError, Elem, FiniteBLAlgebra};

/// One checkable law of a bounded lattice with a residuated commutative
/// monoid. The order of variants is the order of [`AxiomReport::violations`].
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Axiom {
    Reflexive,
    Antisymmetric,
    Transitive,
    Bounded,
    MeetExists,
    JoinExists,
    Commutative,
    Associative,
    Identity,
    Adjoint,
    Divisible,
    Prelinear,
}

impl Axiom {
    pub const ALL: [Axiom; 12] = [
        Axiom::Reflexive,
        Axiom::Antisymmetric,
        Axiom::Transitive,
        Axiom::Bounded,
        Axiom::MeetExists,
        Axiom::JoinExists,
        Axiom::Commutative,
        Axiom::Associative,
        Axiom::Identity,
        Axiom::Adjoint,
        Axiom::Divisible,
        Axiom::Prelinear,
    ];

    pub fn arity(self) -> usize {
        match self {
            Axiom::Reflexive | Axiom::Bounded | Axiom::Identity => 1,
            Axiom::Transitive | Axiom::Associative | Axiom::Adjoint => 3,
            _ => 2,
        }
    }

    pub fn token(self) -> &'static str {
        match self {
            Axiom::Reflexive => "reflexive",
            Axiom::Antisymmetric => "antisymmetric",
            Axiom::Transitive => "transitive",
            Axiom::Bounded => "bounded",
            Axiom::MeetExists => "meet_exists",
            Axiom::JoinExists => "join_exists",
            Axiom::Commutative => "commutative",
            Axiom::Associative => "associative",
            Axiom::Identity => "identity",
            Axiom::Adjoint => "adjoint",
            Axiom::Divisible => "divisible",
            Axiom::Prelinear => "prelinear",
        }
    }

    /// Evaluates the law at one tuple of `arity()` elements.
    pub fn holds_at(self, alg: &FiniteBLAlgebra, t: &[Elem]) -> bool {
        let top = alg.top();
        match (self, t) {
            (Axiom::Reflexive, &[x]) => alg.leq(x, x),
            (Axiom::Antisymmetric, &[x, y]) => !(alg.leq(x, y) && alg.leq(y, x)) || x == y,
            (Axiom::Transitive, &[x, y, z]) => !(alg.leq(x, y) && alg.leq(y, z)) || alg.leq(x, z),
            (Axiom::Bounded, &[x]) => alg.leq(alg.bottom(), x) && alg.leq(x, top),
            (Axiom::MeetExists, &[x, y]) => alg.meet(x, y).is_some(),
            (Axiom::JoinExists, &[x, y]) => alg.join(x, y).is_some(),
            (Axiom::Commutative, &[x, y]) => alg.odot(x, y) == alg.odot(y, x),
            (Axiom::Associative, &[x, y, z]) => {
                alg.odot(alg.odot(x, y), z) == alg.odot(x, alg.odot(y, z))
            }
            (Axiom::Identity, &[x]) => alg.odot(x, top) == x && alg.odot(top, x) == x,
            (Axiom::Adjoint, &[x, y, z]) => alg.leq(z, alg.imp(x, y)) == alg.leq(alg.odot(x, z), y),
            (Axiom::Divisible, &[x, y]) => alg.meet(x, y) == Some(alg.odot(x, alg.imp(x, y))),
            (Axiom::Prelinear, &[x, y]) => alg.join(alg.imp(x, y), alg.imp(y, x)) == Some(top),
            _ => panic!(
                "{self:?} expects {} elements, got {}",
                self.arity(),
                t.len()
            ),
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub axiom: Axiom,
    pub witness: Vec<Elem>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub violations: Vec<Violation>,
}

impl AxiomReport {
    pub fn valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violation(&self, axiom: Axiom) -> Option<&Violation> {
        self.violations.iter().find(|v| v.axiom == axiom)
    }
}

/// All `k`-tuples of carrier elements in lexicographic order of the
/// declared element order.
pub(crate) fn tuples(alg: &FiniteBLAlgebra, k: usize) -> impl Iterator<Item = Vec<Elem>> {
    (0..k).map(|_| alg.elements()).multi_cartesian_product()
}

fn first_failure<F>(alg: &FiniteBLAlgebra, arity: usize, holds: F) -> Option<Vec<Elem>>
where
    F: Fn(&[Elem]) -> bool,
{
    tuples(alg, arity).find(|t| !holds(t))
}

/// Checks every BL axiom and lattice well-formedness condition. Each failed
/// law contributes one violation carrying its lexicographically first
/// failing tuple.
pub fn validate_bl(alg: &FiniteBLAlgebra) -> AxiomReport {
    let violations = Axiom::ALL
        .iter()
        .filter_map(|&axiom| {
            first_failure(alg, axiom.arity(), |t| axiom.holds_at(alg, t))
                .map(|witness| Violation { axiom, witness })
        })
        .collect();
    AxiomReport { violations }
}

/// Arithmetic identities every BL-algebra satisfies.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum ArithmeticProperty {
    /// `x → y = 1` iff `x = y ⊙ z` for some `z`. The order is compared with
    /// the divisibility order of the monoid so the check is not circular.
    OrderViaDivisibility,
    /// `x → (y → z) = (x ⊙ y) → z = y → (x → z)`.
    Exchange,
    /// `x ⊙ y ≤ x ∧ y`.
    ProductBelowMeet,
    /// `x → y ≤ (z → x) → (z → y)` and `x → y ≤ (y → z) → (x → z)`.
    ImplicationMonotone,
    /// `x → x′ = x″ → x′`. The variant `x″ → x` on the right fails at
    /// `x = 1` in every algebra (`1 → 0 = 0` but `1 → 1 = 1`).
    NegationSwap,
    /// `x ∨ x′ = 1` implies `x ∧ x′ = 0`.
    ComplementDisjoint,
    /// `x ∨ y = ((x → y) → y) ∧ ((y → x) → x)`.
    JoinViaImplication,
}

impl ArithmeticProperty {
    pub const ALL: [ArithmeticProperty; 7] = [
        ArithmeticProperty::OrderViaDivisibility,
        ArithmeticProperty::Exchange,
        ArithmeticProperty::ProductBelowMeet,
        ArithmeticProperty::ImplicationMonotone,
        ArithmeticProperty::NegationSwap,
        ArithmeticProperty::ComplementDisjoint,
        ArithmeticProperty::JoinViaImplication,
    ];

    pub fn arity(self) -> usize {
        match self {
            ArithmeticProperty::Exchange | ArithmeticProperty::ImplicationMonotone => 3,
            ArithmeticProperty::NegationSwap | ArithmeticProperty::ComplementDisjoint => 1,
            _ => 2,
        }
    }

    pub fn token(self) -> &'static str {
        match self {
            ArithmeticProperty::OrderViaDivisibility => "order_via_divisibility",
            ArithmeticProperty::Exchange => "exchange",
            ArithmeticProperty::ProductBelowMeet => "product_below_meet",
            ArithmeticProperty::ImplicationMonotone => "implication_monotone",
            ArithmeticProperty::NegationSwap => "negation_swap",
            ArithmeticProperty::ComplementDisjoint => "complement_disjoint",
            ArithmeticProperty::JoinViaImplication => "join_via_implication",
        }
    }

    pub fn holds_at(self, alg: &FiniteBLAlgebra, t: &[Elem]) -> bool {
        let (imp, odot) = (|a, b| alg.imp(a, b), |a, b| alg.odot(a, b));
        match (self, t) {
            (ArithmeticProperty::OrderViaDivisibility, &[x, y]) => {
                let divides = alg.elements().any(|z| odot(y, z) == x);
                (imp(x, y) == alg.top()) == divides
            }
            (ArithmeticProperty::Exchange, &[x, y, z]) => {
                let lhs = imp(x, imp(y, z));
                lhs == imp(odot(x, y), z) && lhs == imp(y, imp(x, z))
            }
            (ArithmeticProperty::ProductBelowMeet, &[x, y]) => {
                alg.meet(x, y).is_some_and(|m| alg.leq(odot(x, y), m))
            }
            (ArithmeticProperty::ImplicationMonotone, &[x, y, z]) => {
                let xy = imp(x, y);
                alg.leq(xy, imp(imp(z, x), imp(z, y))) && alg.leq(xy, imp(imp(y, z), imp(x, z)))
            }
            (ArithmeticProperty::NegationSwap, &[x]) => {
                imp(x, alg.neg(x)) == imp(alg.neg(alg.neg(x)), alg.neg(x))
            }
            (ArithmeticProperty::ComplementDisjoint, &[x]) => {
                let nx = alg.neg(x);
                alg.join(x, nx) != Some(alg.top()) || alg.meet(x, nx) == Some(alg.bottom())
            }
            (ArithmeticProperty::JoinViaImplication, &[x, y]) => {
                let rhs = alg.meet(imp(imp(x, y), y), imp(imp(y, x), x));
                rhs.is_some() && alg.join(x, y) == rhs
            }
            _ => panic!(
                "{self:?} expects {} elements, got {}",
                self.arity(),
                t.len()
            ),
        }
    }
}

impl fmt::Display for ArithmeticProperty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyOutcome {
    pub property: ArithmeticProperty,
    pub witness: Option<Vec<Elem>>,
}

impl PropertyOutcome {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyReport {
    pub outcomes: Vec<PropertyOutcome>,
}

impl PropertyReport {
    pub fn all_pass(&self) -> bool {
        self.outcomes.iter().all(PropertyOutcome::passed)
    }
}

/// Evaluates the seven arithmetic properties over all tuples. Requires a
/// valid BL-algebra.
pub fn check_arithmetic_properties(alg: &FiniteBLAlgebra) -> Result<PropertyReport, AlgebraError> {
    if !validate_bl(alg).valid() {
        return Err(AlgebraError::NotBl(alg.name().to_string()));
    }
    let outcomes = ArithmeticProperty::ALL
        .iter()
        .map(|&property| PropertyOutcome {
            property,
            witness: first_failure(alg, property.arity(), |t| property.holds_at(alg, t)),
        })
        .collect();
    Ok(PropertyReport { outcomes })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_algebra;
    use crate::algebra::tests::BOOLEAN2;
    use crate::corpus;

    #[test]
    fn corpus_algebras_are_bl() {
        for src in corpus::ALGEBRAS.iter().chain([&BOOLEAN2]) {
            let alg = parse_algebra(src).unwrap();
            let report = validate_bl(&alg);
            assert!(report.valid(), "{}: {:?}", alg.name(), report.violations);
            assert!(check_arithmetic_properties(&alg).unwrap().all_pass());
        }
    }

    #[test]
    fn mutated_product_breaks_adjointness() {
        let src = corpus::L3_THEN_BOOLEAN.replacen("0 0 a a", "0 0 b a", 1);
        let alg = parse_algebra(&src).unwrap();
        let report = validate_bl(&alg);
        assert!(!report.valid());
        let v = report
            .violation(Axiom::Adjoint)
            .expect("adjointness must fail");
        // brute-force evaluation of z ≤ x→y ⇔ x⊙z ≤ y over all triples
        let names: Vec<&str> = v.witness.iter().map(|&e| alg.elem_name(e)).collect();
        assert_eq!(names, ["a", "a", "b"]);
        for viol in &report.violations {
            assert!(!viol.axiom.holds_at(&alg, &viol.witness));
        }
        assert!(check_arithmetic_properties(&alg).is_err());
    }

    #[test]
    fn exchange_instance_on_mixed_chain() {
        let alg = parse_algebra(corpus::L3_THEN_BOOLEAN).unwrap();
        let [z, a, b] = ["0", "a", "b"].map(|n| alg.elem(n).unwrap());
        assert_eq!(alg.imp(a, alg.imp(b, z)), a);
        assert_eq!(alg.imp(alg.odot(a, b), z), a);
    }

    #[test]
    fn negation_swap_on_lukasiewicz() {
        let alg = parse_algebra(corpus::LUKASIEWICZ4).unwrap();
        let a = alg.elem("a").unwrap();
        assert_eq!(alg.neg(a), alg.elem("b").unwrap());
        assert_eq!(alg.imp(a, alg.neg(a)), alg.top());
        assert_eq!(alg.imp(alg.neg(alg.neg(a)), alg.neg(a)), alg.top());
        let top = alg.top();
        assert_ne!(
            alg.imp(top, alg.neg(top)),
            alg.imp(alg.neg(alg.neg(top)), top)
        );
    }

    #[test]
    fn boolean_join_identity_all_pairs() {
        let alg = parse_algebra(BOOLEAN2).unwrap();
        for t in tuples(&alg, 2) {
            assert!(ArithmeticProperty::JoinViaImplication.holds_at(&alg, &t));
        }
    }

    #[test]
    fn diamond_order_follows_tables() {
        let alg = parse_algebra(corpus::DIAMOND5).unwrap();
        let [a, b, c] = ["a", "b", "c"].map(|n| alg.elem(n).unwrap());
        assert!(alg.leq(a, b));
        assert!(!alg.leq(b, c) && !alg.leq(c, b));
        assert_eq!(alg.meet(b, c), Some(a));
        assert_eq!(alg.join(b, c), Some(alg.top()));
        for x in alg.elements() {
            assert!(alg.leq(x, x));
        }
    }
}
