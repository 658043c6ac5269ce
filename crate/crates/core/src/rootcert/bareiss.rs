use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Determinant of a square integer matrix by Bareiss fraction-free
/// elimination with row pivoting. The empty matrix has determinant 1.
pub fn bareiss_det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Leading `j x j` minor of the Hankel matrix `[s_{r+c}]`.
pub fn hankel_leading_minor(s: &[BigInt], j: usize) -> BigInt {
    let m = (0..j)
        .map(|r| (0..j).map(|c| s[r + c].clone()).collect())
        .collect();
    bareiss_det(m)
}
