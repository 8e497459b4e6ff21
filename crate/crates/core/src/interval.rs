//! Finite unions of half-open rational intervals `(lo, hi]` inside `(0,1]`.

use std::fmt;

use crate::rational::UnitRational;

/// Sorted, pairwise disjoint, non-adjacent intervals `(lo, hi]`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IntervalSet {
    intervals: Vec<(UnitRational, UnitRational)>,
}

impl IntervalSet {
    pub fn empty() -> Self {
        IntervalSet::default()
    }

    /// `(0, 1]`.
    pub fn full() -> Self {
        IntervalSet {
            intervals: vec![(UnitRational::zero(), UnitRational::one())],
        }
    }

    /// Normalizes arbitrary intervals: empty ones are dropped, overlapping or
    /// touching ones merged.
    pub fn from_intervals<I>(intervals: I) -> Self
    where
        I: IntoIterator<Item = (UnitRational, UnitRational)>,
    {
        let mut pieces: Vec<_> = intervals.into_iter().filter(|(lo, hi)| lo < hi).collect();
        pieces.sort();
        let mut merged: Vec<(UnitRational, UnitRational)> = Vec::with_capacity(pieces.len());
        for (lo, hi) in pieces {
            match merged.last_mut() {
                Some((_, last_hi)) if lo <= *last_hi => {
                    if hi > *last_hi {
                        *last_hi = hi;
                    }
                }
                _ => merged.push((lo, hi)),
            }
        }
        IntervalSet { intervals: merged }
    }

    pub fn intervals(&self) -> &[(UnitRational, UnitRational)] {
        &self.intervals
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn contains(&self, t: &UnitRational) -> bool {
        self.intervals.iter().any(|(lo, hi)| lo < t && t <= hi)
    }

    /// Whether `(lo, hi]` lies inside the set. Vacuously true when `lo ≥ hi`.
    pub fn contains_interval(&self, lo: &UnitRational, hi: &UnitRational) -> bool {
        lo >= hi || self.intervals.iter().any(|(a, b)| a <= lo && hi <= b)
    }
}

impl fmt::Display for IntervalSet {
    /// `(0,1/5] (2/5,3/5]`, or `empty`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.intervals.is_empty() {
            return f.write_str("empty");
        }
        let parts: Vec<String> = self
            .intervals
            .iter()
            .map(|(lo, hi)| format!("({lo},{hi}]"))
            .collect();
        f.write_str(&parts.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64, d: i64) -> UnitRational {
        UnitRational::from_ratio(p, d)
    }

    #[test]
    fn merges_adjacent_and_overlapping() {
        let s = IntervalSet::from_intervals([
            (q(2, 5), q(3, 5)),
            (q(0, 1), q(1, 5)),
            (q(1, 5), q(3, 10)),
            (q(9, 10), q(9, 10)),
            (q(1, 2), q(7, 10)),
        ]);
        assert_eq!(s.to_string(), "(0,3/10] (2/5,7/10]");
        assert!(s.contains(&q(3, 10)));
        assert!(!s.contains(&q(2, 5)));
        assert!(s.contains_interval(&q(2, 5), &q(7, 10)));
        assert!(!s.contains_interval(&q(1, 5), &q(1, 2)));
        assert_eq!(IntervalSet::empty().to_string(), "empty");
        assert_eq!(IntervalSet::full().to_string(), "(0,1]");
    }
}
