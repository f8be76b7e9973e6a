//! Exact rank over the rationals for audit runs.
//!
//! Matrices are integer lifts of `F_p` data (symmetric representatives).
//! Elimination is the fraction-free two-step (Bareiss) scheme, so every
//! intermediate value stays an integer and every division is exact.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::linalg::Matrix;

/// Integer lift of `m` using representatives in `(-p/2, p/2]`.
pub fn integer_lift(m: &Matrix) -> Vec<Vec<BigInt>> {
    let f = m.field();
    (0..m.rows())
        .map(|r| m.row(r).iter().map(|&v| BigInt::from(f.to_signed(v))).collect())
        .collect()
}

/// Rank of an integer matrix over `Q`.
pub fn rank_over_rationals(rows: &[Vec<BigInt>]) -> usize {
    let mut a: Vec<Vec<BigInt>> = rows.to_vec();
    let n_rows = a.len();
    if n_rows == 0 {
        return 0;
    }
    let n_cols = a[0].len();
    let mut prev = BigInt::from(1);
    let mut rank = 0;
    for c in 0..n_cols {
        if rank == n_rows {
            break;
        }
        // smallest nonzero pivot keeps the numbers short
        let Some(sel) = (rank..n_rows)
            .filter(|&r| !a[r][c].is_zero())
            .min_by_key(|&r| a[r][c].abs())
        else {
            continue;
        };
        a.swap(sel, rank);
        let pivot = a[rank][c].clone();
        for r in rank + 1..n_rows {
            let factor = a[r][c].clone();
            for k in c..n_cols {
                let v = (&pivot * &a[r][k] - &factor * &a[rank][k]) / &prev;
                a[r][k] = v;
            }
        }
        prev = pivot;
        rank += 1;
    }
    rank
}

pub fn rank_of_lift(m: &Matrix) -> usize {
    rank_over_rationals(&integer_lift(m))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
            .collect()
    }

    #[test]
    fn small_ranks() {
        assert_eq!(rank_over_rationals(&ints(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank_over_rationals(&ints(&[&[0, 0, 0]])), 0);
        assert_eq!(
            rank_over_rationals(&ints(&[&[2, 3, 5], &[7, 11, 13], &[17, 19, 23]])),
            3
        );
        // rank 2 over Q although every 2x2 minor is even
        assert_eq!(rank_over_rationals(&ints(&[&[2, 0], &[0, 2], &[2, 2]])), 2);
    }
}
