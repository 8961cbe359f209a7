//! Smith normal form over `Z` and finitely generated abelian-group
//! invariants of integer relation matrices.
//!
//! Matrices here are small (truncated polynomial lattices of a dozen rows
//! or so), so the textbook pivot-and-reduce algorithm is plenty.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::Int;

/// Diagonal of the Smith normal form of `matrix` (entries `d1 | d2 | …`,
/// all non-negative, zeros trailing).  `matrix` is a list of equal-length
/// rows; an empty matrix has an empty diagonal.
pub fn smith_diagonal(matrix: &[Vec<Int>]) -> Vec<Int> {
    let rows = matrix.len();
    let cols = matrix.first().map_or(0, Vec::len);
    assert!(
        matrix.iter().all(|r| r.len() == cols),
        "rows must share a length"
    );
    let mut m: Vec<Vec<Int>> = matrix.to_vec();
    let n = rows.min(cols);
    let mut diag = Vec::with_capacity(n);

    for t in 0..n {
        // Every pass through this loop either finishes the pivot position
        // or strictly decreases the least magnitude in the block, so it
        // terminates.
        'place: loop {
            let pivot = (t..rows)
                .flat_map(|i| (t..cols).map(move |j| (i, j)))
                .filter(|&(i, j)| !m[i][j].is_zero())
                .min_by_key(|&(i, j)| m[i][j].abs());
            let Some((pi, pj)) = pivot else {
                break 'place; // remaining block is zero
            };
            m.swap(t, pi);
            for row in m.iter_mut() {
                row.swap(t, pj);
            }

            // reduce column t and row t against the pivot; leftover
            // remainders are smaller than the pivot and force a re-pivot
            let mut dirty = false;
            for i in t + 1..rows {
                if m[i][t].is_zero() {
                    continue;
                }
                let q = m[i][t].div_floor(&m[t][t]);
                for j in t..cols {
                    let sub = &q * &m[t][j];
                    m[i][j] -= sub;
                }
                dirty |= !m[i][t].is_zero();
            }
            for j in t + 1..cols {
                if m[t][j].is_zero() {
                    continue;
                }
                let q = m[t][j].div_floor(&m[t][t]);
                for i in t..rows {
                    let sub = &q * &m[i][t];
                    m[i][j] -= sub;
                }
                dirty |= !m[t][j].is_zero();
            }
            if dirty {
                continue 'place;
            }

            // divisibility chain: fold a non-divisible row into row t and
            // re-clear, which shrinks the pivot
            for i in t + 1..rows {
                if m[i]
                    .iter()
                    .skip(t + 1)
                    .any(|e| !(e % &m[t][t]).is_zero())
                {
                    for j in t..cols {
                        let add = m[i][j].clone();
                        m[t][j] += add;
                    }
                    continue 'place;
                }
            }
            break 'place;
        }
        diag.push(m[t][t].abs());
    }
    diag
}

/// Invariants of the abelian group `Z^n / (row span of relations)`:
/// the free rank and the invariant factors `> 1` (in divisibility order).
pub fn z_module_invariants(relations: &[Vec<Int>], n_generators: usize) -> (usize, Vec<Int>) {
    if relations.is_empty() {
        return (n_generators, Vec::new());
    }
    assert!(
        relations.iter().all(|r| r.len() == n_generators),
        "relation length must match the generator count"
    );
    let diag = smith_diagonal(relations);
    let nonzero = diag.iter().filter(|d| !d.is_zero()).count();
    let torsion = diag
        .iter()
        .filter(|d| !d.is_zero() && !d.is_one())
        .cloned()
        .collect();
    (n_generators - nonzero, torsion)
}

/// Renders `(rank, torsion)` as `Z^r + Z/d1 + Z/d2 + …` (`0` for the
/// trivial group).
pub fn render_invariants(rank: usize, torsion: &[Int]) -> String {
    let mut parts = Vec::new();
    match rank {
        0 => {}
        1 => parts.push("Z".to_string()),
        r => parts.push(format!("Z^{}", r)),
    }
    for d in torsion {
        parts.push(format!("Z/{}", d));
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ")
    }
}
