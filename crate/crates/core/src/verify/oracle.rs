//! Brute-force evaluation of the thresholded filter inequalities in exact
//! rational arithmetic, written without the rank tricks of the classifier.
//! The auditor compares the two on every claim.

#![allow(clippy::needless_range_loop)]

use num_rational::BigRational;

use crate::algebra::FiniteBLAlgebra;
use crate::filters::FilterKind;

fn max(a: &BigRational, b: &BigRational) -> BigRational {
    if a >= b {
        a.clone()
    } else {
        b.clone()
    }
}

fn min3(a: &BigRational, b: &BigRational, c: &BigRational) -> BigRational {
    let m = if a <= b { a } else { b };
    if m <= c {
        m.clone()
    } else {
        c.clone()
    }
}

/// Whether `degrees` (indexed like the carrier) satisfies every inequality of
/// a kind-`kind` fuzzy filter with thresholds `(alpha, beta]`.
pub fn oracle_threshold_verdict(
    alg: &FiniteBLAlgebra,
    degrees: &[BigRational],
    alpha: &BigRational,
    beta: &BigRational,
    kind: FilterKind,
) -> bool {
    let n = alg.size();
    let f = |i: usize| &degrees[i];
    let one = BigRational::from_integer(1.into());
    let table = |t: Vec<Vec<crate::algebra::Elem>>| -> Vec<Vec<usize>> {
        t.into_iter()
            .map(|row| row.into_iter().map(|e| e.0).collect())
            .collect()
    };
    let odot_table = table(alg.odot_table());
    let imp_table = table(alg.imp_table());
    let imp = |x: usize, y: usize| imp_table[x][y];
    let top = alg.top().0;
    let bot = alg.bottom().0;

    for x in 0..n {
        for y in 0..n {
            // product
            if max(f(odot_table[x][y]), alpha) < min3(f(x), f(y), beta) {
                return false;
            }
            // x ≤ y ⇔ x → y = 1
            if imp(x, y) == top && max(f(y), alpha) < min3(f(x), &one, beta) {
                return false;
            }
            for z in 0..n {
                let fails = match kind {
                    FilterKind::Plain => false,
                    FilterKind::Implicative => {
                        let z_neg = imp(z, bot);
                        max(f(imp(x, z)), alpha)
                            < min3(f(imp(x, imp(z_neg, y))), f(imp(y, z)), beta)
                    }
                    FilterKind::PositiveImplicative => {
                        max(f(imp(x, z)), alpha) < min3(f(imp(x, imp(y, z))), f(imp(x, y)), beta)
                    }
                    FilterKind::Fantastic => {
                        let lhs = imp(imp(imp(x, y), y), x);
                        max(f(lhs), alpha) < min3(f(imp(z, imp(y, x))), f(z), beta)
                    }
                };
                if fails {
                    return false;
                }
            }
        }
    }
    true
}
