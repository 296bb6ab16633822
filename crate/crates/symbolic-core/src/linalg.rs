//! Dense exact linear algebra by Gaussian elimination.

use crate::scalar::Scalar;
use crate::AlgebraError;

pub type Matrix<C> = Vec<Vec<C>>;

pub fn identity<C: Scalar>(n: usize) -> Matrix<C> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { C::one() } else { C::zero() }).collect())
        .collect()
}

pub fn transpose<C: Scalar>(m: &Matrix<C>) -> Matrix<C> {
    if m.is_empty() {
        return Vec::new();
    }
    (0..m[0].len()).map(|j| m.iter().map(|row| row[j].clone()).collect()).collect()
}

pub fn mul<C: Scalar>(a: &Matrix<C>, b: &Matrix<C>) -> Result<Matrix<C>, AlgebraError> {
    let inner = b.len();
    if a.iter().any(|r| r.len() != inner) {
        return Err(AlgebraError::Dimension("matrix product".into()));
    }
    let cols = b.first().map_or(0, |r| r.len());
    Ok(a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    row.iter()
                        .zip(b)
                        .fold(C::zero(), |acc, (x, brow)| acc + &(x.clone() * &brow[j]))
                })
                .collect()
        })
        .collect())
}

/// Row echelon form in place; returns pivot columns and the sign of the row permutation.
fn echelon<C: Scalar>(m: &mut Matrix<C>) -> (Vec<usize>, bool) {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut flipped = false;
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        if p != r {
            m.swap(p, r);
            flipped = !flipped;
        }
        let inv = m[r][c].inv().expect("pivot is non-zero");
        for i in r + 1..rows {
            if m[i][c].is_zero() {
                continue;
            }
            let f = m[i][c].clone() * &inv;
            for j in c..cols {
                let t = m[r][j].clone() * &f;
                m[i][j] = m[i][j].clone() - &t;
            }
        }
        pivots.push(c);
        r += 1;
    }
    (pivots, flipped)
}

pub fn det<C: Scalar>(m: &Matrix<C>) -> Result<C, AlgebraError> {
    let n = m.len();
    if m.iter().any(|r| r.len() != n) {
        return Err(AlgebraError::Dimension("determinant of non-square matrix".into()));
    }
    let mut a = m.clone();
    let (piv, flipped) = echelon(&mut a);
    if piv.len() < n {
        return Ok(C::zero());
    }
    let mut d = C::one();
    for (i, row) in a.iter().enumerate() {
        d = d * &row[i];
    }
    Ok(if flipped { -d } else { d })
}

pub fn rank<C: Scalar>(m: &Matrix<C>) -> usize {
    let mut a = m.clone();
    echelon(&mut a).0.len()
}

pub fn inverse<C: Scalar>(m: &Matrix<C>) -> Result<Matrix<C>, AlgebraError> {
    let n = m.len();
    if m.iter().any(|r| r.len() != n) {
        return Err(AlgebraError::Dimension("inverse of non-square matrix".into()));
    }
    let mut a: Matrix<C> = m
        .iter()
        .zip(identity::<C>(n))
        .map(|(r, id)| r.iter().cloned().chain(id).collect())
        .collect();
    let (piv, _) = echelon(&mut a);
    if piv.len() < n || piv[n - 1] >= n {
        return Err(AlgebraError::Singular);
    }
    // back substitution
    for i in (0..n).rev() {
        let inv = a[i][i].inv().ok_or(AlgebraError::Singular)?;
        for j in 0..2 * n {
            a[i][j] = a[i][j].clone() * &inv;
        }
        for k in 0..i {
            if a[k][i].is_zero() {
                continue;
            }
            let f = a[k][i].clone();
            for j in 0..2 * n {
                let t = a[i][j].clone() * &f;
                a[k][j] = a[k][j].clone() - &t;
            }
        }
    }
    Ok(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Solve m·x = b for square invertible m.
pub fn solve<C: Scalar>(m: &Matrix<C>, b: &[C]) -> Result<Vec<C>, AlgebraError> {
    let inv = inverse(m)?;
    Ok(inv
        .iter()
        .map(|row| row.iter().zip(b).fold(C::zero(), |acc, (x, y)| acc + &(x.clone() * y)))
        .collect())
}

/// Basis of {x : m·x = 0}.
pub fn nullspace<C: Scalar>(m: &Matrix<C>) -> Vec<Vec<C>> {
    let cols = m.first().map_or(0, |r| r.len());
    let mut a = m.clone();
    let (piv, _) = echelon(&mut a);
    // reduce to RREF
    for (r, &c) in piv.iter().enumerate().rev() {
        let inv = a[r][c].inv().expect("pivot");
        for j in 0..cols {
            a[r][j] = a[r][j].clone() * &inv;
        }
        for k in 0..r {
            if a[k][c].is_zero() {
                continue;
            }
            let f = a[k][c].clone();
            for j in 0..cols {
                let t = a[r][j].clone() * &f;
                a[k][j] = a[k][j].clone() - &t;
            }
        }
    }
    let free: Vec<usize> = (0..cols).filter(|c| !piv.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![C::zero(); cols];
            v[f] = C::one();
            for (r, &c) in piv.iter().enumerate() {
                v[c] = -a[r][f].clone();
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, Rational};

    fn m(rows: &[&[i64]]) -> Matrix<Rational> {
        rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
    }

    #[test]
    fn det_and_inverse() {
        let a = m(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        assert_eq!(det(&a).unwrap(), int(18));
        let inv = inverse(&a).unwrap();
        assert_eq!(mul(&a, &inv).unwrap(), identity(3));
        let swapped = m(&[&[0, 1], &[1, 0]]);
        assert_eq!(det(&swapped).unwrap(), int(-1));
    }

    #[test]
    fn singular_and_nullspace() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6]]);
        assert_eq!(rank(&a), 1);
        let ns = nullspace(&a);
        assert_eq!(ns.len(), 2);
        for v in ns {
            for row in &a {
                let s = row.iter().zip(&v).fold(int(0), |acc, (x, y)| acc + x * y);
                assert_eq!(s, int(0));
            }
        }
        assert!(inverse(&m(&[&[1, 2], &[2, 4]])).is_err());
    }
}
