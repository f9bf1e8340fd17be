//! Exact integer and rational linear algebra.
//!
//! Everything here is exact: determinants use fraction-free (Bareiss)
//! elimination over big integers, linear systems are solved by Gaussian
//! elimination over big rationals. No floating point anywhere.

use num::{BigInt, BigRational, One, Signed, Zero};

pub type Int = BigInt;
pub type Rat = BigRational;

pub fn rat_from_i64(v: i64) -> Rat {
    Rat::from_integer(Int::from(v))
}

pub fn rat_is_integer(r: &Rat) -> bool {
    r.denom().is_one()
}

/// Converts an exact rational to `i64`, panicking if it is not an integer or
/// does not fit. Callers check integrality first.
pub fn rat_to_i64(r: &Rat) -> i64 {
    assert!(rat_is_integer(r), "expected integer, got {r}");
    let n = r.numer();
    i64::try_from(n.clone()).unwrap_or_else(|_| panic!("integer {n} out of i64 range"))
}

/// Determinant of a square integer matrix by Bareiss fraction-free
/// elimination. All intermediate values are exact big integers.
pub fn det(matrix: &[Vec<i64>]) -> Int {
    let n = matrix.len();
    if n == 0 {
        return Int::one();
    }
    let mut m: Vec<Vec<Int>> = matrix
        .iter()
        .map(|row| {
            assert_eq!(row.len(), n, "determinant of non-square matrix");
            row.iter().map(|&v| Int::from(v)).collect()
        })
        .collect();
    let mut sign = 1i64;
    let mut prev = Int::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return Int::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

/// Solves the square system `a x = b` exactly over the rationals.
/// Returns `None` when the matrix is singular.
pub fn solve(a: &[Vec<i64>], b: &[Rat]) -> Option<Vec<Rat>> {
    let n = a.len();
    assert_eq!(b.len(), n);
    let mut m: Vec<Vec<Rat>> = (0..n)
        .map(|i| {
            assert_eq!(a[i].len(), n);
            let mut row: Vec<Rat> = a[i].iter().map(|&v| rat_from_i64(v)).collect();
            row.push(b[i].clone());
            row
        })
        .collect();
    for k in 0..n {
        let pivot_row = (k..n).find(|&r| !m[r][k].is_zero())?;
        m.swap(k, pivot_row);
        let pivot = m[k][k].clone();
        for j in k..=n {
            m[k][j] = &m[k][j] / &pivot;
        }
        for i in 0..n {
            if i != k && !m[i][k].is_zero() {
                let factor = m[i][k].clone();
                for j in k..=n {
                    let delta = &factor * &m[k][j];
                    m[i][j] = &m[i][j] - &delta;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[n].clone()).collect())
}

/// Solves `a x = b` and insists on an integral solution, converting to `i64`.
pub fn solve_integral(a: &[Vec<i64>], b: &[i64]) -> Option<Vec<i64>> {
    let rhs: Vec<Rat> = b.iter().map(|&v| rat_from_i64(v)).collect();
    let sol = solve(a, &rhs)?;
    if sol.iter().all(rat_is_integer) {
        Some(sol.iter().map(rat_to_i64).collect())
    } else {
        None
    }
}

pub fn gcd_i64(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}
