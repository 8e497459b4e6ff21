//! Exhaustive grids of fuzzy sets with values in `{0, 1/d, …, 1}`.

use thiserror::Error;

use crate::algebra::FiniteBLAlgebra;
use crate::fuzzy::FuzzySet;
use crate::rational::UnitRational;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("grid denominator must be at least 1; got {0}")]
pub struct GridError(pub u32);

/// Membership values `{0, 1/d, 2/d, …, 1}`.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct GridSpec {
    denominator: u32,
}

impl GridSpec {
    pub fn new(denominator: u32) -> Result<Self, GridError> {
        if denominator == 0 {
            return Err(GridError(denominator));
        }
        Ok(GridSpec { denominator })
    }

    pub fn denominator(self) -> u32 {
        self.denominator
    }

    /// The `d + 1` grid values, ascending.
    pub fn values(self) -> Vec<UnitRational> {
        let d = i64::from(self.denominator);
        (0..=d).map(|k| UnitRational::from_ratio(k, d)).collect()
    }

    /// `(d + 1)^n`.
    pub fn count(self, alg: &FiniteBLAlgebra) -> usize {
        (self.denominator as usize + 1)
            .checked_pow(alg.size() as u32)
            .expect("grid too large to index")
    }
}

/// The `index`-th fuzzy set in lexicographic order, element 0 being the most
/// significant digit.
pub fn fuzzy_set_at<'a>(
    alg: &'a FiniteBLAlgebra,
    values: &[UnitRational],
    index: usize,
) -> FuzzySet<'a> {
    let base = values.len();
    let mut digits = vec![0usize; alg.size()];
    let mut rest = index;
    for d in digits.iter_mut().rev() {
        *d = rest % base;
        rest /= base;
    }
    let membership = digits.into_iter().map(|d| values[d].clone()).collect();
    FuzzySet::new(alg, membership).expect("one value per element")
}

/// All `(d + 1)^n` grid fuzzy sets in lexicographic order, starting with
/// the constant-0 set.
pub fn enumerate_fuzzy_sets(
    alg: &FiniteBLAlgebra,
    grid: GridSpec,
) -> impl Iterator<Item = FuzzySet<'_>> {
    let values = grid.values();
    (0..grid.count(alg)).map(move |i| fuzzy_set_at(alg, &values, i))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_algebra;
    use crate::corpus;

    #[test]
    fn counts_and_order() {
        let alg = parse_algebra(corpus::L3_THEN_BOOLEAN).unwrap();
        assert_eq!(
            enumerate_fuzzy_sets(&alg, GridSpec::new(4).unwrap()).count(),
            625
        );
        let sets: Vec<_> = enumerate_fuzzy_sets(&alg, GridSpec::new(2).unwrap()).collect();
        assert_eq!(sets.len(), 81);
        assert!(sets[0].degrees().iter().all(UnitRational::is_zero));
        let second: Vec<String> = sets[1].degrees().iter().map(ToString::to_string).collect();
        assert_eq!(second, ["0", "0", "0", "1/2"]);
        assert!(sets[80].degrees().iter().all(UnitRational::is_one));
        let crisp = enumerate_fuzzy_sets(&alg, GridSpec::new(1).unwrap()).count();
        assert_eq!(crisp, 16);
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(GridSpec::new(0), Err(GridError(0)));
    }
}
