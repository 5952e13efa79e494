//! Small dense linear algebra over the rationals.
//!
//! Matrices are row-major `Vec<Vec<Scalar>>`. These routines serve the geometric
//! layer (bases of subspaces, frames, projectivities), where sizes stay below a
//! dozen rows; the large condition matrices use the integer backends in
//! `arrangements::rank`.

use super::scalar::{primitive_integer_vector, Scalar};
use num_bigint::BigInt;
use num_traits::{One, Zero};

pub type Matrix = Vec<Vec<Scalar>>;

/// Reduced row echelon form. Returns the nonzero rows and their pivot columns.
pub fn rref(m: &[Vec<Scalar>]) -> (Matrix, Vec<usize>) {
    let mut a: Matrix = m.to_vec();
    let ncols = a.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        if row == a.len() {
            break;
        }
        let Some(p) = (row..a.len()).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(row, p);
        let inv = a[row][col].recip();
        for x in a[row].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = a[row].clone();
        for (i, r) in a.iter_mut().enumerate() {
            if i == row || r[col].is_zero() {
                continue;
            }
            let f = r[col].clone();
            for (x, y) in r.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    a.truncate(row);
    (a, pivots)
}

pub fn rank(m: &[Vec<Scalar>]) -> usize {
    let rows: Vec<Vec<BigInt>> = m.iter().map(|r| primitive_integer_vector(r)).collect();
    integer_rank(&rows)
}

/// Determinant of a square integer matrix by fraction-free (Bareiss) elimination.
pub fn integer_det(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    let mut a = m.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return BigInt::zero();
        };
        if p != k {
            a.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (&a[k][k] * &a[i][j] - &a[i][k] * &a[k][j]) / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    if n == 0 {
        return BigInt::one();
    }
    sign * &a[n - 1][n - 1]
}

/// Rank of an integer matrix by fraction-free (Bareiss) elimination.
pub fn integer_rank(rows: &[Vec<BigInt>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = BigInt::one();
    for c in 0..ncols {
        if rank == m.len() {
            break;
        }
        let Some(piv) = (rank..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(rank, piv);
        let (top, rest) = m.split_at_mut(rank + 1);
        let prow = &top[rank];
        for row in rest.iter_mut() {
            let f = row[c].clone();
            for j in c + 1..ncols {
                let v = &prow[c] * &row[j] - &f * &prow[j];
                row[j] = if prev.is_one() { v } else { v / &prev };
            }
            row[c] = BigInt::zero();
        }
        prev = m[rank][c].clone();
        rank += 1;
    }
    rank
}

/// Basis of the right kernel `{x : m x = 0}` for a matrix with `ncols` columns.
pub fn nullspace(m: &[Vec<Scalar>], ncols: usize) -> Matrix {
    let (r, pivots) = rref(m);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Scalar::zero(); ncols];
            v[f] = Scalar::one();
            for (row, &p) in r.iter().zip(&pivots) {
                v[p] = -row[f].clone();
            }
            v
        })
        .collect()
}

pub fn transpose(m: &[Vec<Scalar>]) -> Matrix {
    let ncols = m.first().map_or(0, |r| r.len());
    (0..ncols).map(|j| m.iter().map(|r| r[j].clone()).collect()).collect()
}

pub fn mat_vec(m: &[Vec<Scalar>], v: &[Scalar]) -> Vec<Scalar> {
    m.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                .fold(Scalar::zero(), |acc, (a, b)| acc + a * b)
        })
        .collect()
}

pub fn mat_mul(a: &[Vec<Scalar>], b: &[Vec<Scalar>]) -> Matrix {
    let bt = transpose(b);
    a.iter().map(|row| mat_vec(&bt, row)).collect()
}

pub fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }).collect())
        .collect()
}

/// Inverse of a square matrix, or `None` when singular.
pub fn inverse(m: &[Vec<Scalar>]) -> Option<Matrix> {
    let n = m.len();
    let aug: Matrix = m
        .iter()
        .zip(identity(n))
        .map(|(r, e)| r.iter().cloned().chain(e).collect())
        .collect();
    let (r, pivots) = rref(&aug);
    if pivots.len() < n || pivots[n - 1] >= n {
        return None;
    }
    Some(r.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Solves `a x = b` for square nonsingular `a`.
pub fn solve(a: &[Vec<Scalar>], b: &[Scalar]) -> Option<Vec<Scalar>> {
    inverse(a).map(|inv| mat_vec(&inv, b))
}

pub fn det(m: &[Vec<Scalar>]) -> Scalar {
    let n = m.len();
    let mut a = m.to_vec();
    let mut d = Scalar::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&i| !a[i][col].is_zero()) else {
            return Scalar::zero();
        };
        if p != col {
            a.swap(p, col);
            d = -d;
        }
        d *= &a[col][col];
        let inv = a[col][col].recip();
        for i in col + 1..n {
            if a[i][col].is_zero() {
                continue;
            }
            let f = &a[i][col] * &inv;
            for j in col..n {
                let t = &f * &a[col][j];
                a[i][j] -= t;
            }
        }
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactgeom::scalar::{frac, int, ints};

    #[test]
    fn rref_and_rank_of_dependent_rows() {
        let m = vec![ints(&[1, 2, 3]), ints(&[2, 4, 6]), ints(&[0, 1, 1])];
        let (r, p) = rref(&m);
        assert_eq!(p, vec![0, 1]);
        assert_eq!(r, vec![ints(&[1, 0, 1]), ints(&[0, 1, 1])]);
        assert_eq!(rank(&m), 2);
    }

    #[test]
    fn nullspace_is_annihilated() {
        let m = vec![ints(&[1, 2, 3, 4]), ints(&[0, 1, -1, 2])];
        let ns = nullspace(&m, 4);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(mat_vec(&m, v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn inverse_and_det() {
        let m = vec![ints(&[2, 1]), ints(&[1, 1])];
        assert_eq!(det(&m), int(1));
        let inv = inverse(&m).unwrap();
        assert_eq!(inv, vec![ints(&[1, -1]), ints(&[-1, 2])]);
        assert_eq!(mat_mul(&m, &inv), identity(2));
        assert!(inverse(&[ints(&[1, 2]), ints(&[2, 4])]).is_none());
        assert_eq!(det(&[vec![frac(1, 2), int(0)], vec![int(3), int(4)]]), int(2));
    }
}
