//! Exact rank of integer matrices by fraction-free (Bareiss) elimination.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// Rank over the rationals of an integer matrix, computed without
/// fractions: the one-step Bareiss update keeps every intermediate entry an
/// integer (a minor of the input), and the division by the previous pivot
/// is exact. Full pivoting on the smallest-magnitude nonzero entry keeps
/// growth down.
pub(crate) fn rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let steps = rows.min(cols);
    let mut prev = BigInt::from(1);
    let mut k = 0;
    while k < steps {
        let mut pivot: Option<(usize, usize)> = None;
        for r in k..rows {
            for c in k..cols {
                if m[r][c].is_zero() {
                    continue;
                }
                match pivot {
                    Some((pr, pc)) if m[pr][pc].abs() <= m[r][c].abs() => {}
                    _ => pivot = Some((r, c)),
                }
            }
        }
        let Some((pr, pc)) = pivot else {
            break;
        };
        m.swap(k, pr);
        if pc != k {
            for row in m.iter_mut() {
                row.swap(k, pc);
            }
        }
        let (head, tail) = m.split_at_mut(k + 1);
        let pivot_row = &head[k];
        let pivot_val = pivot_row[k].clone();
        for row in tail.iter_mut() {
            if row[k].is_zero() {
                // still rescale to keep the fraction-free invariant
                for entry in row.iter_mut().skip(k + 1) {
                    if !entry.is_zero() {
                        *entry = &*entry * &pivot_val / &prev;
                    }
                }
            } else {
                let factor = std::mem::take(&mut row[k]);
                for c in k + 1..cols {
                    row[c] = (&row[c] * &pivot_val - &factor * &pivot_row[c]) / &prev;
                }
            }
        }
        prev = pivot_val;
        k += 1;
    }
    k
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    #[test]
    fn small_ranks() {
        assert_eq!(rank(vec![]), 0);
        assert_eq!(rank(mat(&[&[0, 0], &[0, 0]])), 0);
        assert_eq!(rank(mat(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank(mat(&[&[1, 2], &[3, 4]])), 2);
        assert_eq!(rank(mat(&[&[2, 0, 1], &[0, 3, 1], &[2, 3, 2]])), 2);
        assert_eq!(rank(mat(&[&[1], &[0], &[7]])), 1);
    }

    #[test]
    fn rank_matches_structured_cases() {
        // Vandermonde-ish full-rank and a rank-deficient sum pattern
        assert_eq!(rank(mat(&[&[1, 1, 1], &[1, 2, 4], &[1, 3, 9]])), 3);
        assert_eq!(
            rank(mat(&[&[1, 2, 3], &[4, 5, 6], &[5, 7, 9], &[7, 8, 9]])),
            2
        );
    }

    #[test]
    fn rank_agrees_with_permutation_parity_matrix() {
        // identity with shuffled rows keeps full rank
        let mut m = vec![vec![BigInt::from(0); 6]; 6];
        for (i, j) in [(0, 3), (1, 5), (2, 0), (3, 1), (4, 4), (5, 2)] {
            m[i][j] = BigInt::from(1);
        }
        assert_eq!(rank(m), 6);
    }
}
