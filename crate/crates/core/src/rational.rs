//! Exact rationals restricted to the unit interval.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RationalError {
    #[error("`{0}` is not a rational or decimal literal")]
    Malformed(String),
    #[error("denominator must be positive")]
    ZeroDenominator,
    #[error("{0} lies outside [0,1]")]
    OutOfRange(String),
}

/// A reduced exact rational `p/q` with `0 ≤ p/q ≤ 1`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct UnitRational(BigRational);

impl UnitRational {
    pub fn zero() -> Self {
        UnitRational(BigRational::zero())
    }

    pub fn one() -> Self {
        UnitRational(BigRational::one())
    }

    pub fn half() -> Self {
        UnitRational::from_ratio(1, 2)
    }

    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Self, RationalError> {
        let denom = denom.into();
        if denom.is_zero() {
            return Err(RationalError::ZeroDenominator);
        }
        Self::from_big(BigRational::new(numer.into(), denom))
    }

    /// Infallible constructor for small literals.
    ///
    /// # Panics
    ///
    /// If `numer/denom` is not in `[0,1]`.
    pub fn from_ratio(numer: i64, denom: i64) -> Self {
        Self::new(numer, denom).unwrap_or_else(|e| panic!("{numer}/{denom}: {e}"))
    }

    pub fn from_big(value: BigRational) -> Result<Self, RationalError> {
        if value < BigRational::zero() || value > BigRational::one() {
            return Err(RationalError::OutOfRange(value.to_string()));
        }
        Ok(UnitRational(value))
    }

    pub fn as_big(&self) -> &BigRational {
        &self.0
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    /// `1 − self`.
    pub fn complement(&self) -> Self {
        UnitRational(BigRational::one() - &self.0)
    }

    /// Midpoint of `self` and `other`.
    pub fn midpoint(&self, other: &Self) -> Self {
        UnitRational((&self.0 + &other.0) / BigRational::from_integer(2.into()))
    }

    /// `self + other > 1`, the quasi-coincidence test.
    pub fn sum_exceeds_one(&self, other: &Self) -> bool {
        &self.0 + &other.0 > BigRational::one()
    }
}

impl FromStr for UnitRational {
    type Err = RationalError;

    /// Accepts `p/q`, integers, and decimals such as `0.2` or `.75`; decimals
    /// are converted exactly.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let malformed = || RationalError::Malformed(s.to_string());
        let digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
        if let Some((p, q)) = s.split_once('/') {
            if !digits(p) || !digits(q) {
                return Err(malformed());
            }
            let p: BigInt = p.parse().map_err(|_| malformed())?;
            let q: BigInt = q.parse().map_err(|_| malformed())?;
            return UnitRational::new(p, q);
        }
        let (int, frac) = s.split_once('.').unwrap_or((s, ""));
        if (int.is_empty() && frac.is_empty())
            || !(int.is_empty() || digits(int))
            || !(frac.is_empty() || digits(frac))
            || (s.contains('.') && frac.is_empty())
        {
            return Err(malformed());
        }
        let numer: BigInt = format!("{int}{frac}").parse().map_err(|_| malformed())?;
        let denom = num_traits::pow(BigInt::from(10), frac.len());
        UnitRational::new(numer, denom)
    }
}

impl fmt::Display for UnitRational {
    /// `p/q`, or a bare integer when the denominator is 1.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for UnitRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(s: &str) -> UnitRational {
        s.parse().unwrap()
    }

    #[test]
    fn decimals_convert_exactly() {
        assert_eq!(r("0.2"), UnitRational::from_ratio(1, 5));
        assert_eq!(r(".5"), UnitRational::half());
        assert_eq!(r("0.60"), UnitRational::from_ratio(3, 5));
        assert_eq!(r("1"), UnitRational::one());
        assert_eq!(r("1.0"), UnitRational::one());
        assert_eq!(r("0"), UnitRational::zero());
        assert_eq!(r("2/4").to_string(), "1/2");
    }

    #[test]
    fn rejects_bad_literals() {
        for bad in [
            "", ".", "1.", "-0.2", "1.5", "3/2", "1/0", "a", "0.2.1", "+1", "1/-2",
        ] {
            assert!(bad.parse::<UnitRational>().is_err(), "{bad:?} accepted");
        }
    }

    #[test]
    fn quasi_coincidence_boundary() {
        let h = UnitRational::half();
        assert!(!h.sum_exceeds_one(&h));
        assert!(r("3/5").sum_exceeds_one(&h));
        assert_eq!(r("1/5").complement(), r("4/5"));
        assert_eq!(r("1/5").midpoint(&r("2/5")), r("3/10"));
    }

    proptest! {
        #[test]
        fn display_parse_round_trip(q in 1i64..500, p in 0i64..500) {
            let p = p % (q + 1);
            let v = UnitRational::from_ratio(p, q);
            prop_assert_eq!(v.to_string().parse::<UnitRational>().unwrap(), v.clone());
            prop_assert!(v.numer() >= &BigInt::zero() && v.numer() <= v.denom());
        }
    }
}
