use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};

/// Solves `m · x = b` exactly by Gaussian elimination over the rationals.
///
/// Returns [`Error::Singular`] when `m` has no inverse; callers that chose
/// the matrix at random are expected to resample.
pub fn solve_linear_exact(m: &[Vec<BigRational>], b: &[BigRational]) -> Result<Vec<BigRational>> {
    let n = m.len();
    if m.iter().any(|row| row.len() != n) {
        return Err(Error::arg("matrix is not square"));
    }
    if b.len() != n {
        return Err(Error::arg(format!(
            "right-hand side has length {}, expected {n}",
            b.len()
        )));
    }
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();

    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .ok_or(Error::Singular)?;
        a.swap(col, pivot);
        let (head, tail) = a.split_at_mut(col + 1);
        let prow = &head[col];
        for row in tail.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let factor = &row[col] / &prow[col];
            for k in col..=n {
                let delta = &factor * &prow[k];
                row[k] -= delta;
            }
        }
    }

    let mut x = vec![BigRational::zero(); n];
    for i in (0..n).rev() {
        let mut acc = a[i][n].clone();
        for k in i + 1..n {
            acc -= &a[i][k] * &x[k];
        }
        x[i] = acc / &a[i][i];
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn q(p: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(p))
    }

    fn mat(rows: &[&[i64]]) -> Vec<Vec<BigRational>> {
        rows.iter().map(|r| r.iter().map(|&v| q(v)).collect()).collect()
    }

    #[test]
    fn identity_returns_rhs() {
        let b = vec![q(3), q(-7), q(11)];
        let m = mat(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(solve_linear_exact(&m, &b).unwrap(), b);
    }

    #[test]
    fn scalar_inverse() {
        let x = solve_linear_exact(&mat(&[&[2]]), &[q(1)]).unwrap();
        assert_eq!(x, vec![BigRational::new(BigInt::from(1), BigInt::from(2))]);
    }

    #[test]
    fn singular_and_shape_errors() {
        let m = mat(&[&[1, 1], &[1, 1]]);
        assert!(matches!(solve_linear_exact(&m, &[q(1), q(2)]), Err(Error::Singular)));
        let rect = mat(&[&[1, 2, 3], &[4, 5, 6]]);
        assert!(matches!(solve_linear_exact(&rect, &[q(1), q(2)]), Err(Error::Argument(_))));
        assert!(matches!(solve_linear_exact(&m, &[q(1)]), Err(Error::Argument(_))));
    }

    #[test]
    fn needs_row_swap() {
        let m = mat(&[&[0, 1], &[1, 0]]);
        assert_eq!(solve_linear_exact(&m, &[q(5), q(6)]).unwrap(), vec![q(6), q(5)]);
    }

    proptest! {
        #[test]
        fn solution_reproduces_rhs(
            entries in prop::collection::vec(-20i64..20, 16),
            rhs in prop::collection::vec(-100i64..100, 4),
        ) {
            let m: Vec<Vec<BigRational>> = entries.chunks(4).map(|c| c.iter().map(|&v| q(v)).collect()).collect();
            let b: Vec<BigRational> = rhs.iter().map(|&v| q(v)).collect();
            match solve_linear_exact(&m, &b) {
                Ok(x) => {
                    for (row, bi) in m.iter().zip(&b) {
                        let lhs: BigRational = row.iter().zip(&x).map(|(a, xi)| a * xi).sum();
                        prop_assert_eq!(&lhs, bi);
                    }
                }
                Err(Error::Singular) => {
                    // cross-check with an integer determinant by cofactor expansion
                    prop_assert_eq!(det(&entries, 4), 0);
                }
                Err(e) => prop_assert!(false, "{e}"),
            }
        }
    }

    fn det(entries: &[i64], n: usize) -> i64 {
        if n == 1 {
            return entries[0];
        }
        (0..n)
            .map(|c| {
                let minor: Vec<i64> = (1..n)
                    .flat_map(|r| (0..n).filter(move |&k| k != c).map(move |k| (r, k)))
                    .map(|(r, k)| entries[r * n + k])
                    .collect();
                let sign = if c % 2 == 0 { 1 } else { -1 };
                sign * entries[c] * det(&minor, n - 1)
            })
            .sum()
    }
}
