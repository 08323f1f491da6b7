use itertools::Itertools;
use lie_torsion::zlinalg::IntMat;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Fraction-free determinant.
pub fn det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// gcd of all `k x k` minors.
pub fn minors_gcd(m: &IntMat, k: usize) -> BigInt {
    let mut g = BigInt::zero();
    for rows in (0..m.rows()).combinations(k) {
        for cols in (0..m.cols()).combinations(k) {
            let sub: Vec<Vec<BigInt>> = rows
                .iter()
                .map(|&i| cols.iter().map(|&j| m.get(i, j).clone()).collect())
                .collect();
            g = g.gcd(&det(sub));
        }
    }
    g
}
