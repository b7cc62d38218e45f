use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{IntMatrix, LinalgError};

/// Exact determinant by Bareiss fraction-free elimination.
///
/// Every division performed is exact, so intermediate values stay integral
/// and bounded by minors of the input.
pub fn determinant(m: &IntMatrix) -> Result<BigInt, LinalgError> {
    if !m.is_square() {
        return Err(LinalgError::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut a = m.clone();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[(k, k)].is_zero() {
            match (k + 1..n).find(|&i| !a[(i, k)].is_zero()) {
                Some(i) => {
                    a.swap_rows(k, i);
                    negate = !negate;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)];
                a[(i, j)] = v / &prev;
            }
        }
        prev = a[(k, k)].clone();
    }
    let d = a[(n - 1, n - 1)].clone();
    Ok(if negate { -d } else { d })
}
