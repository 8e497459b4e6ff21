//! Exhaustive generation of small BL-algebras up to isomorphism.

#![allow(clippy::needless_range_loop)]

use std::collections::BTreeSet;

use itertools::Itertools;
use rayon::prelude::*;
use thiserror::Error;

use crate::algebra::{validate_bl, Elem, FiniteBLAlgebra};

pub const MIN_GENERATED: usize = 2;
pub const MAX_GENERATED: usize = 6;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("generation supports {MIN_GENERATED} to {MAX_GENERATED} elements; got {0}")]
pub struct GenerateError(pub usize);

/// Element names for an `n`-element carrier: `0`, `a`, `b`, …, `1`.
fn carrier_names(n: usize) -> Vec<String> {
    let mut names = vec!["0".to_string()];
    names.extend((0..n - 2).map(|i| ((b'a' + i as u8) as char).to_string()));
    names.push("1".to_string());
    names
}

/// Row-major `odot` followed by row-major `imp`, as element indices.
type TableKey = Vec<u8>;

fn key_of(alg: &FiniteBLAlgebra) -> TableKey {
    alg.odot_table()
        .into_iter()
        .chain(alg.imp_table())
        .flatten()
        .map(|e| e.0 as u8)
        .collect()
}

/// The lexicographically least table pair over all relabellings that fix
/// bottom and top. Assumes bottom is element 0 and top is element `n - 1`.
pub fn canonical_key(alg: &FiniteBLAlgebra) -> TableKey {
    let n = alg.size();
    assert!(
        alg.bottom().0 == 0 && alg.top().0 == n - 1,
        "canonical form expects bottom first and top last"
    );
    let odot = alg.odot_table();
    let imp = alg.imp_table();
    (1..n - 1)
        .permutations(n - 2)
        .map(|mid| {
            // perm[old] = new
            let mut perm = vec![0usize; n];
            perm[n - 1] = n - 1;
            for (new, &old) in mid.iter().enumerate() {
                perm[old] = new + 1;
            }
            let mut inv = vec![0usize; n];
            for (old, &new) in perm.iter().enumerate() {
                inv[new] = old;
            }
            let mut key = Vec::with_capacity(2 * n * n);
            for table in [&odot, &imp] {
                for x in 0..n {
                    for y in 0..n {
                        key.push(perm[table[inv[x]][inv[y]].0] as u8);
                    }
                }
            }
            key
        })
        .min()
        .unwrap_or_else(|| key_of(alg))
}

fn from_key(name: String, n: usize, key: &[u8]) -> FiniteBLAlgebra {
    let table = |part: &[u8]| -> Vec<Vec<Elem>> {
        part.chunks(n)
            .map(|row| row.iter().map(|&e| Elem(e as usize)).collect())
            .collect()
    };
    FiniteBLAlgebra::from_tables(
        name,
        carrier_names(n),
        Elem(0),
        Elem(n - 1),
        table(&key[..n * n]),
        table(&key[n * n..]),
    )
    .expect("generated tables are well shaped")
}

/// Partial orders on `0..n` with `0` least and `n - 1` greatest, where
/// `i ≤ j` only if `i ≤ j` as integers. Every finite poset has such a
/// labelling.
fn natural_orders(n: usize) -> Vec<Vec<Vec<bool>>> {
    let mid_pairs: Vec<(usize, usize)> = (1..n - 1).tuple_combinations().collect();
    let mut out = Vec::new();
    for bits in 0u32..(1 << mid_pairs.len()) {
        let mut leq = vec![vec![false; n]; n];
        for i in 0..n {
            leq[i][i] = true;
            leq[0][i] = true;
            leq[i][n - 1] = true;
        }
        for (k, &(i, j)) in mid_pairs.iter().enumerate() {
            if bits >> k & 1 == 1 {
                leq[i][j] = true;
            }
        }
        let transitive =
            (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| !(leq[i][j] && leq[j][k]) || leq[i][k])));
        if transitive {
            out.push(leq);
        }
    }
    out
}

/// Greatest lower bound under `leq`, if unique.
fn glb(leq: &[Vec<bool>], x: usize, y: usize) -> Option<usize> {
    let n = leq.len();
    let lower: Vec<usize> = (0..n).filter(|&z| leq[z][x] && leq[z][y]).collect();
    lower
        .iter()
        .copied()
        .find(|&z| lower.iter().all(|&w| leq[w][z]))
}

fn lub(leq: &[Vec<bool>], x: usize, y: usize) -> Option<usize> {
    let n = leq.len();
    let upper: Vec<usize> = (0..n).filter(|&z| leq[x][z] && leq[y][z]).collect();
    upper
        .iter()
        .copied()
        .find(|&z| upper.iter().all(|&w| leq[z][w]))
}

struct Lattice {
    leq: Vec<Vec<bool>>,
    meet: Vec<Vec<usize>>,
    join: Vec<Vec<usize>>,
}

fn as_lattice(leq: Vec<Vec<bool>>) -> Option<Lattice> {
    let n = leq.len();
    let mut meet = vec![vec![0; n]; n];
    let mut join = vec![vec![0; n]; n];
    for x in 0..n {
        for y in 0..n {
            meet[x][y] = glb(&leq, x, y)?;
            join[x][y] = lub(&leq, x, y)?;
        }
    }
    Some(Lattice { leq, meet, join })
}

/// Completes `odot` into a BL-algebra on `lat` if possible, returning the
/// residuum.
fn residuate(lat: &Lattice, odot: &[Vec<usize>]) -> Option<Vec<Vec<usize>>> {
    let n = odot.len();
    let le = |a: usize, b: usize| lat.leq[a][b];
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if odot[odot[x][y]][z] != odot[x][odot[y][z]] {
                    return None;
                }
                if le(y, z) && !le(odot[x][y], odot[x][z]) {
                    return None;
                }
            }
        }
    }
    let mut imp = vec![vec![0; n]; n];
    for x in 0..n {
        for y in 0..n {
            let below: Vec<usize> = (0..n).filter(|&z| le(odot[x][z], y)).collect();
            imp[x][y] = below
                .iter()
                .copied()
                .find(|&z| below.iter().all(|&w| le(w, z)))?;
        }
    }
    for x in 0..n {
        for y in 0..n {
            if odot[x][imp[x][y]] != lat.meet[x][y] || lat.join[imp[x][y]][imp[y][x]] != n - 1 {
                return None;
            }
        }
    }
    Some(imp)
}

/// All commutative `⊙` tables on `lat` with top as identity and
/// `x ⊙ y ≤ x ∧ y`, completed by backtracking over the middle cells.
fn monoid_tables(lat: &Lattice, emit: &mut dyn FnMut(&[Vec<usize>])) {
    let n = lat.leq.len();
    let top = n - 1;
    let mut odot = vec![vec![0usize; n]; n];
    for x in 0..n {
        odot[x][top] = x;
        odot[top][x] = x;
    }
    let cells: Vec<(usize, usize)> = (1..top)
        .tuple_combinations()
        .chain((1..top).map(|i| (i, i)))
        .collect();
    fn go(
        lat: &Lattice,
        odot: &mut Vec<Vec<usize>>,
        cells: &[(usize, usize)],
        emit: &mut dyn FnMut(&[Vec<usize>]),
    ) {
        let Some((&(x, y), rest)) = cells.split_first() else {
            emit(odot);
            return;
        };
        let bound = lat.meet[x][y];
        for z in 0..lat.leq.len() {
            if lat.leq[z][bound] {
                odot[x][y] = z;
                odot[y][x] = z;
                go(lat, odot, rest, emit);
            }
        }
    }
    go(lat, &mut odot, &cells, emit);
}

/// All BL-algebras on `n` elements up to isomorphism, sorted by canonical
/// table. Element 0 is bottom and element `n - 1` is top.
pub fn generate_bl_algebras(n: usize) -> Result<Vec<FiniteBLAlgebra>, GenerateError> {
    if !(MIN_GENERATED..=MAX_GENERATED).contains(&n) {
        return Err(GenerateError(n));
    }
    let names = carrier_names(n);
    let keys: BTreeSet<TableKey> = natural_orders(n)
        .into_par_iter()
        .filter_map(as_lattice)
        .flat_map_iter(|lat| {
            let mut found = Vec::new();
            monoid_tables(&lat, &mut |odot| {
                if let Some(imp) = residuate(&lat, odot) {
                    let table = |t: &[Vec<usize>]| {
                        t.iter()
                            .map(|r| r.iter().map(|&e| Elem(e)).collect())
                            .collect()
                    };
                    let alg = FiniteBLAlgebra::from_tables(
                        "candidate",
                        names.clone(),
                        Elem(0),
                        Elem(n - 1),
                        table(odot),
                        table(&imp),
                    )
                    .expect("generated tables are well shaped");
                    found.push(canonical_key(&alg));
                }
            });
            found
        })
        .collect();
    let algebras: Vec<FiniteBLAlgebra> = keys
        .iter()
        .enumerate()
        .map(|(i, key)| from_key(format!("bl{n}_{}", i + 1), n, key))
        .collect();
    debug_assert!(algebras.iter().all(|a| validate_bl(a).valid()));
    Ok(algebras)
}

/// Whether some bijection of the carriers carries one algebra's tables onto
/// the other's.
pub fn isomorphic(a: &FiniteBLAlgebra, b: &FiniteBLAlgebra) -> bool {
    let n = a.size();
    if n != b.size() {
        return false;
    }
    (0..n).permutations(n).any(|p| {
        let m = |e: Elem| Elem(p[e.0]);
        a.elements().all(|x| {
            a.elements().all(|y| {
                m(a.odot(x, y)) == b.odot(m(x), m(y)) && m(a.imp(x, y)) == b.imp(m(x), m(y))
            })
        })
    })
}
