//! Exact counts of plane trees by edges, old leaves and young leaves, and
//! the bivariate generating function in truncated and closed form.

mod poly;
mod series;

pub use poly::{Coefficient, Monomial, MultiPoly, RationalPoly, Var};
pub use series::{gf_closed_eval, gf_series, gf_series_eval};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// `C(a, b)`, taken as 0 whenever `b < 0` or `b > a`.
pub fn binomial(a: i64, b: i64) -> BigInt {
    if b < 0 || a < 0 || b > a {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigInt::one();
    for k in 0..b {
        acc = acc * BigInt::from(a - k) / BigInt::from(k + 1);
    }
    acc
}

/// Divides, panicking if the division leaves a remainder.
pub(crate) fn exact_div(num: BigInt, den: &BigInt) -> BigInt {
    let (q, r) = num.div_rem(den);
    assert!(r.is_zero(), "inexact division by {den}");
    q
}

pub fn catalan(n: u64) -> BigInt {
    let n = n as i64;
    exact_div(binomial(2 * n, n), &BigInt::from(n + 1))
}

/// `M_n = sum_k C(n, 2k) C_k`.
pub fn motzkin(n: u64) -> BigInt {
    (0..=n / 2)
        .map(|k| binomial(n as i64, 2 * k as i64) * catalan(k))
        .sum()
}

/// `(1/n) C(n, k) C(n, k-1)`: trees with `n` edges and `k` leaves.
pub fn narayana(n: u64, k: u64) -> Result<BigInt> {
    if k < 1 || k > n {
        return Err(Error::OutOfRange(format!("narayana({n}, {k}) needs 1 <= k <= n")));
    }
    let (n, k) = (n as i64, k as i64);
    Ok(exact_div(binomial(n, k) * binomial(n, k - 1), &BigInt::from(n)))
}

/// Trees with `n` edges, `i` old leaves and `j` young leaves:
/// `(1/n) C(n, i) C(n-i, j) C(n-i-j, i-1)`.
pub fn count_old_young(n: u64, i: u64, j: u64) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::OutOfRange("count_old_young needs n >= 1".into()));
    }
    let (n, i, j) = (n as i64, i as i64, j as i64);
    let num = binomial(n, i) * binomial(n - i, j) * binomial(n - i - j, i - 1);
    Ok(exact_div(num, &BigInt::from(n)))
}

/// Trees with `n` edges and `k` old leaves:
/// `2^(n-2k+1) / k · C(n-1, 2k-2) C(2k-2, k-1)`.
pub fn count_old(n: u64, k: u64) -> Result<BigInt> {
    if n == 0 || k == 0 {
        return Err(Error::OutOfRange("count_old needs n >= 1 and k >= 1".into()));
    }
    let (n, k) = (n as i64, k as i64);
    let free = n - 2 * k + 1;
    if free < 0 {
        return Ok(BigInt::zero());
    }
    let num = (BigInt::one() << free as usize) * binomial(n - 1, 2 * k - 2) * binomial(2 * k - 2, k - 1);
    Ok(exact_div(num, &BigInt::from(k)))
}

/// Trees with `n` edges and `k` young leaves: `C(n-1, k) M_(n-k-1)`.
pub fn count_young(n: u64, k: u64) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::OutOfRange("count_young needs n >= 1".into()));
    }
    if k + 1 > n {
        return Ok(BigInt::zero());
    }
    Ok(binomial(n as i64 - 1, k as i64) * motzkin(n - k - 1))
}

/// Nonzero entries `(i, j) -> count_old_young(n, i, j)`, in `(i, j)` order.
pub fn old_young_table(n: u64) -> Result<Vec<((u64, u64), BigInt)>> {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in 0..=n {
            let c = count_old_young(n, i, j)?;
            if !c.is_zero() {
                out.push(((i, j), c));
            }
        }
    }
    Ok(out)
}
