//! Finite BL-algebras given by their `⊙` and `→` Cayley tables.
//!
//! The order is never read from input: `x ≤ y` holds exactly when
//! `x → y` is the top element, and meets and joins are computed from that
//! order. A freshly constructed [`FiniteBLAlgebra`] is only guaranteed to have
//! well-shaped tables; [`validate_bl`] decides whether it actually is a
//! BL-algebra.

mod axioms;
pub(crate) mod parse;

use std::fmt;

use thiserror::Error;

pub use axioms::{
    check_arithmetic_properties, validate_bl, ArithmeticProperty, Axiom, AxiomReport,
    PropertyOutcome, PropertyReport, Violation,
};
pub use parse::{parse_algebra, ParseError};

/// Largest carrier the crate accepts. Subsets are stored as 64-bit masks.
pub const MAX_ELEMENTS: usize = 64;

/// An element of a finite carrier, identified by its position in the
/// declared element order.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Elem(pub usize);

impl Elem {
    pub fn index(self) -> usize {
        self.0
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("carrier needs at least 2 elements, got {0}")]
    TooSmall(usize),
    #[error("carrier of {0} elements exceeds the supported maximum of {MAX_ELEMENTS}")]
    TooLarge(usize),
    #[error("duplicate element `{0}`")]
    DuplicateElement(String),
    #[error("{table} table must be {n}x{n}")]
    TableShape { table: &'static str, n: usize },
    #[error("table entry {0} is out of range")]
    EntryOutOfRange(usize),
    #[error("bottom and top must be distinct elements")]
    DegenerateBounds,
    #[error("algebra `{0}` is not a BL-algebra")]
    NotBl(String),
}

/// A finite algebra `(L, ⊙, →, 0, 1)` with its derived order and lattice
/// operations. Immutable once built.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteBLAlgebra {
    name: String,
    names: Vec<String>,
    bottom: Elem,
    top: Elem,
    odot: Vec<Elem>,
    imp: Vec<Elem>,
    leq: Vec<bool>,
    meet: Vec<Option<Elem>>,
    join: Vec<Option<Elem>>,
}

impl FiniteBLAlgebra {
    /// Builds an algebra from row-major tables indexed by element position.
    /// Only shapes and ranges are checked here.
    pub fn from_tables(
        name: impl Into<String>,
        names: Vec<String>,
        bottom: Elem,
        top: Elem,
        odot: Vec<Vec<Elem>>,
        imp: Vec<Vec<Elem>>,
    ) -> Result<Self, AlgebraError> {
        let n = names.len();
        if n < 2 {
            return Err(AlgebraError::TooSmall(n));
        }
        if n > MAX_ELEMENTS {
            return Err(AlgebraError::TooLarge(n));
        }
        for (i, a) in names.iter().enumerate() {
            if names[..i].contains(a) {
                return Err(AlgebraError::DuplicateElement(a.clone()));
            }
        }
        if bottom == top {
            return Err(AlgebraError::DegenerateBounds);
        }
        for e in [bottom, top] {
            if e.0 >= n {
                return Err(AlgebraError::EntryOutOfRange(e.0));
            }
        }
        let flatten = |table: Vec<Vec<Elem>>, label: &'static str| {
            if table.len() != n || table.iter().any(|row| row.len() != n) {
                return Err(AlgebraError::TableShape { table: label, n });
            }
            let flat: Vec<Elem> = table.into_iter().flatten().collect();
            if let Some(bad) = flat.iter().find(|e| e.0 >= n) {
                return Err(AlgebraError::EntryOutOfRange(bad.0));
            }
            Ok(flat)
        };
        let odot = flatten(odot, "odot")?;
        let imp = flatten(imp, "imp")?;

        let leq: Vec<bool> = imp.iter().map(|&e| e == top).collect();
        let mut alg = FiniteBLAlgebra {
            name: name.into(),
            names,
            bottom,
            top,
            odot,
            imp,
            leq,
            meet: Vec::new(),
            join: Vec::new(),
        };
        alg.meet = alg.bound_table(true);
        alg.join = alg.bound_table(false);
        Ok(alg)
    }

    /// Greatest lower bounds (`lower = true`) or least upper bounds under the
    /// derived order; `None` where no unique bound exists.
    fn bound_table(&self, lower: bool) -> Vec<Option<Elem>> {
        let n = self.size();
        let below = |a: Elem, b: Elem| {
            if lower {
                self.leq(a, b)
            } else {
                self.leq(b, a)
            }
        };
        let mut out = Vec::with_capacity(n * n);
        for x in self.elements() {
            for y in self.elements() {
                let common: Vec<Elem> = self
                    .elements()
                    .filter(|&z| below(z, x) && below(z, y))
                    .collect();
                let best = common
                    .iter()
                    .copied()
                    .filter(|&z| common.iter().all(|&w| below(w, z)))
                    .collect::<Vec<_>>();
                out.push(if best.len() == 1 { Some(best[0]) } else { None });
            }
        }
        out
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn bottom(&self) -> Elem {
        self.bottom
    }

    pub fn top(&self) -> Elem {
        self.top
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + Clone {
        (0..self.names.len()).map(Elem)
    }

    pub fn element_names(&self) -> &[String] {
        &self.names
    }

    pub fn elem_name(&self, e: Elem) -> &str {
        &self.names[e.0]
    }

    /// Looks an element up by its symbolic name.
    pub fn elem(&self, name: &str) -> Result<Elem, AlgebraError> {
        self.names
            .iter()
            .position(|n| n == name)
            .map(Elem)
            .ok_or_else(|| AlgebraError::UnknownElement(name.to_string()))
    }

    #[inline]
    pub fn odot(&self, x: Elem, y: Elem) -> Elem {
        self.odot[x.0 * self.names.len() + y.0]
    }

    #[inline]
    pub fn imp(&self, x: Elem, y: Elem) -> Elem {
        self.imp[x.0 * self.names.len() + y.0]
    }

    /// `x ≤ y` iff `x → y = 1`.
    #[inline]
    pub fn leq(&self, x: Elem, y: Elem) -> bool {
        self.leq[x.0 * self.names.len() + y.0]
    }

    /// `x′ = x → 0`.
    pub fn neg(&self, x: Elem) -> Elem {
        self.imp(x, self.bottom)
    }

    pub fn meet(&self, x: Elem, y: Elem) -> Option<Elem> {
        self.meet[x.0 * self.names.len() + y.0]
    }

    pub fn join(&self, x: Elem, y: Elem) -> Option<Elem> {
        self.join[x.0 * self.names.len() + y.0]
    }

    /// Row-major copy of the `⊙` table.
    pub fn odot_table(&self) -> Vec<Vec<Elem>> {
        self.odot
            .chunks(self.size())
            .map(<[Elem]>::to_vec)
            .collect()
    }

    /// Row-major copy of the `→` table.
    pub fn imp_table(&self) -> Vec<Vec<Elem>> {
        self.imp.chunks(self.size()).map(<[Elem]>::to_vec).collect()
    }

    /// Renders the algebra in the line-oriented file format accepted by
    /// [`parse_algebra`].
    pub fn to_source(&self) -> String {
        use fmt::Write;
        let mut s = String::new();
        let width = self.names.iter().map(String::len).max().unwrap_or(1);
        let _ = writeln!(s, "algebra {}", self.name);
        let _ = writeln!(s, "elements {}", self.names.join(" "));
        let _ = writeln!(s, "bottom {}", self.elem_name(self.bottom));
        let _ = writeln!(s, "top {}", self.elem_name(self.top));
        for (label, table) in [("odot:", &self.odot), ("imp:", &self.imp)] {
            let _ = writeln!(s, "{label}");
            for row in table.chunks(self.size()) {
                let cells: Vec<String> = row
                    .iter()
                    .map(|&e| format!("{:<width$}", self.elem_name(e)))
                    .collect();
                let _ = writeln!(s, "{}", cells.join(" ").trim_end());
            }
        }
        s.push_str("end\n");
        s
    }

    /// A copy with a different algebra name.
    pub fn renamed(&self, name: impl Into<String>) -> Self {
        FiniteBLAlgebra {
            name: name.into(),
            ..self.clone()
        }
    }
}

impl fmt::Debug for FiniteBLAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_source())
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    pub(crate) const BOOLEAN2: &str = "\
algebra boolean2
elements 0 1
bottom 0
top 1
odot:
0 0
0 1
imp:
1 1
0 1
end
";

    #[test]
    fn boolean_order_and_lattice() {
        let alg = parse_algebra(BOOLEAN2).unwrap();
        let (z, o) = (alg.bottom(), alg.top());
        assert!(alg.leq(z, z) && alg.leq(z, o) && alg.leq(o, o));
        assert!(!alg.leq(o, z));
        assert_eq!(alg.meet(z, o), Some(z));
        assert_eq!(alg.join(z, o), Some(o));
        assert_eq!(alg.neg(z), o);
        assert_eq!(alg.neg(o), z);
    }

    #[test]
    fn from_tables_rejects_bad_shapes() {
        let names = vec!["0".to_string(), "1".to_string()];
        let ok = vec![vec![Elem(0), Elem(0)], vec![Elem(0), Elem(1)]];
        let short = vec![vec![Elem(0)], vec![Elem(0), Elem(1)]];
        let err =
            FiniteBLAlgebra::from_tables("x", names.clone(), Elem(0), Elem(1), short, ok.clone());
        assert_eq!(
            err.unwrap_err(),
            AlgebraError::TableShape {
                table: "odot",
                n: 2
            }
        );
        let err = FiniteBLAlgebra::from_tables(
            "x",
            names.clone(),
            Elem(1),
            Elem(1),
            ok.clone(),
            ok.clone(),
        );
        assert_eq!(err.unwrap_err(), AlgebraError::DegenerateBounds);
        let oob = vec![vec![Elem(0), Elem(2)], vec![Elem(0), Elem(1)]];
        let err = FiniteBLAlgebra::from_tables("x", names, Elem(0), Elem(1), ok, oob);
        assert_eq!(err.unwrap_err(), AlgebraError::EntryOutOfRange(2));
    }

    #[test]
    fn missing_bounds_in_non_lattice() {
        let src = "\
algebra v
elements 0 a b 1
bottom 0
top 1
odot:
0 0 0 0
0 a 0 a
0 0 b b
0 a b 1
imp:
1 0 1 1
0 1 0 1
0 0 1 1
0 0 0 1
end
";
        let alg = parse_algebra(src).unwrap();
        let (a, b) = (alg.elem("a").unwrap(), alg.elem("b").unwrap());
        // 0→a ≠ 1, so a and b share no lower bound
        assert_eq!(alg.meet(a, b), None);
        assert_eq!(alg.join(a, b), Some(alg.top()));
    }
}
