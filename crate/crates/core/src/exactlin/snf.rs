use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::matrix::{abs_lt, IntMatrix};
use crate::{Error, Result};

/// Smith normal form witness: `U · A · V = D` with `U`, `V` unimodular and
/// `D` diagonal, the diagonal forming a divisibility chain with zeros
/// trailing.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    /// Diagonal of `D`: d₁ | d₂ | …, each ≥ 0, length min(rows, cols).
    pub divisors: Vec<BigInt>,
}

/// Diagonalize an integer matrix by unimodular row and column operations.
///
/// Pivot rule: smallest nonzero magnitude in the remaining submatrix, ties
/// broken by lowest row, then lowest column. This makes the transforms
/// reproducible run to run.
pub fn smith_normal_form(a: &IntMatrix) -> Result<SmithForm> {
    if a.rows() == 0 || a.cols() == 0 {
        return Err(Error::EmptyMatrix);
    }
    let rows = a.rows();
    let cols = a.cols();
    let mut d = a.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    let steps = rows.min(cols);
    let mut t = 0;
    while t < steps {
        let Some((pi, pj)) = find_pivot(&d, t) else {
            break; // remaining submatrix is zero
        };
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);

        // Clear the pivot row and column; each round either finishes or
        // strictly shrinks the pivot magnitude, so this terminates.
        loop {
            let mut dirty = false;
            for r in t + 1..rows {
                if !d.at(r, t).is_zero() {
                    let q = -(d.at(r, t) / d.at(t, t));
                    d.add_row_multiple(r, t, &q);
                    u.add_row_multiple(r, t, &q);
                    if !d.at(r, t).is_zero() {
                        // remainder is smaller than the pivot: promote it
                        d.swap_rows(t, r);
                        u.swap_rows(t, r);
                        dirty = true;
                    }
                }
            }
            for c in t + 1..cols {
                if !d.at(t, c).is_zero() {
                    let q = -(d.at(t, c) / d.at(t, t));
                    d.add_col_multiple(c, t, &q);
                    v.add_col_multiple(c, t, &q);
                    if !d.at(t, c).is_zero() {
                        d.swap_cols(t, c);
                        v.swap_cols(t, c);
                        dirty = true;
                    }
                }
            }
            if dirty {
                continue;
            }
            // Row and column are clear. Enforce divisibility of the rest.
            if let Some(bad_row) = first_nondivisible_row(&d, t) {
                d.add_row_multiple(t, bad_row, &BigInt::from(1));
                u.add_row_multiple(t, bad_row, &BigInt::from(1));
                continue;
            }
            break;
        }
        if d.at(t, t).is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
        t += 1;
    }

    let divisors: Vec<BigInt> = (0..steps).map(|i| d.at(i, i).clone()).collect();
    debug_assert!(chain_ok(&divisors));
    Ok(SmithForm { u, d, v, divisors })
}

fn find_pivot(d: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for r in t..d.rows() {
        for c in t..d.cols() {
            if d.at(r, c).is_zero() {
                continue;
            }
            match best {
                None => best = Some((r, c)),
                Some((br, bc)) => {
                    if abs_lt(d.at(r, c), d.at(br, bc)) {
                        best = Some((r, c));
                    }
                }
            }
        }
    }
    best
}

fn first_nondivisible_row(d: &IntMatrix, t: usize) -> Option<usize> {
    let p = d.at(t, t);
    for r in t + 1..d.rows() {
        for c in t + 1..d.cols() {
            if !(d.at(r, c) % p).is_zero() {
                return Some(r);
            }
        }
    }
    None
}

fn chain_ok(divs: &[BigInt]) -> bool {
    let mut seen_zero = false;
    for w in divs.windows(2) {
        if w[0].is_zero() {
            seen_zero = true;
        }
        if seen_zero && !w[1].is_zero() {
            return false;
        }
        if !w[0].is_zero() && !(&w[1] % &w[0]).is_zero() {
            return false;
        }
    }
    divs.iter().all(|d| !d.is_negative())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn divisors_i64(m: &IntMatrix) -> Vec<i64> {
        smith_normal_form(m)
            .unwrap()
            .divisors
            .iter()
            .map(|d| i64::try_from(d).unwrap())
            .collect()
    }

    fn check_witness(a: &IntMatrix) {
        let snf = smith_normal_form(a).unwrap();
        let uav = snf.u.mul(a).unwrap().mul(&snf.v).unwrap();
        assert_eq!(uav, snf.d);
        assert!(snf.u.is_unimodular());
        assert!(snf.v.is_unimodular());
        assert!(chain_ok(&snf.divisors));
        for r in 0..snf.d.rows() {
            for c in 0..snf.d.cols() {
                if r != c {
                    assert!(snf.d.at(r, c).is_zero());
                }
            }
        }
    }

    #[test]
    fn identity_2x2() {
        let m = IntMatrix::identity(2);
        assert_eq!(divisors_i64(&m), vec![1, 1]);
        check_witness(&m);
    }

    #[test]
    fn two_by_two() {
        // gcd of entries gives d1 = 2, |det|/d1 = 8/2 gives d2 = 4
        let m = IntMatrix::from_rows(&[&[2, 4], &[6, 8]]);
        assert_eq!(divisors_i64(&m), vec![2, 4]);
        check_witness(&m);
    }

    #[test]
    fn diagonal_rebalanced() {
        // prime-factor rebalancing of diag(224, 24, 2):
        //   2-parts (2^5, 2^3, 2) sort into (2, 2^3, 2^5); the 3 and 7 go on top
        let m = IntMatrix::from_rows(&[&[-224, 0, 0], &[0, 24, 0], &[0, 0, -2]]);
        assert_eq!(divisors_i64(&m), vec![2, 8, 672]);
        check_witness(&m);
    }

    #[test]
    fn rectangular_and_rank_deficient() {
        let m = IntMatrix::from_rows(&[&[2, 4, 6], &[4, 8, 12]]);
        assert_eq!(divisors_i64(&m), vec![2, 0]);
        check_witness(&m);

        let z = IntMatrix::zero(3, 2);
        assert_eq!(divisors_i64(&z), vec![0, 0]);
        check_witness(&z);
    }

    #[test]
    fn empty_matrix_rejected() {
        assert_eq!(
            smith_normal_form(&IntMatrix::zero(0, 3)).unwrap_err(),
            Error::EmptyMatrix
        );
    }

    #[test]
    fn deterministic_transforms() {
        let m = IntMatrix::from_rows(&[&[6, 10, 15], &[10, 6, 4], &[0, 5, 5]]);
        let a = smith_normal_form(&m).unwrap();
        let b = smith_normal_form(&m).unwrap();
        assert_eq!(a.u, b.u);
        assert_eq!(a.v, b.v);
        check_witness(&m);
    }
}
