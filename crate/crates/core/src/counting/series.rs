//! `G(t, s, z) = sum_T t^old s^young z^edges` as a truncated power series in
//! `z` with polynomial coefficients in `t, s`, and its closed form.

use num_bigint::BigInt;

use super::poly::{MultiPoly, Var};
use crate::error::{Error, Result};

type Poly = MultiPoly<BigInt>;

/// Product of two series, truncated to `len` coefficients.
fn mul(a: &[Poly], b: &[Poly], len: usize) -> Vec<Poly> {
    let mut out = vec![Poly::zero(); len];
    for (i, ai) in a.iter().enumerate().take(len) {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(len - i) {
            if !bj.is_zero() {
                out[i + j] = &out[i + j] + &(ai * bj);
            }
        }
    }
    out
}

/// Inverse of a series with constant term 1, truncated to `len` coefficients.
fn inverse(a: &[Poly], len: usize) -> Vec<Poly> {
    debug_assert!(a.first() == Some(&Poly::one()));
    let mut inv = vec![Poly::one()];
    for k in 1..len {
        let mut acc = Poly::zero();
        for j in 1..=k.min(a.len() - 1) {
            if !a[j].is_zero() {
                acc = &acc + &(&a[j] * &inv[k - j]);
            }
        }
        inv.push(-acc);
    }
    inv
}

/// One application of `G ↦ 1 + z(G - 1 + t) / (1 - z(G - 1 + s))`, keeping
/// coefficients of `z^0 … z^order`.
fn iterate(g: &[Poly], order: usize) -> Vec<Poly> {
    let len = order + 1;
    let coeff = |k: usize| g.get(k).cloned().unwrap_or_default();
    let shifted = |extra: Poly| -> Vec<Poly> {
        let mut v: Vec<Poly> = (0..len).map(coeff).collect();
        v[0] = &(&v[0] - &Poly::one()) + &extra;
        v
    };
    let numerator = shifted(Poly::var(Var::T));
    let inner = shifted(Poly::var(Var::S));
    // 1 - z·inner
    let mut denominator = vec![Poly::one()];
    denominator.extend(inner.iter().take(len - 1).map(|p| -p));
    let quotient = mul(&numerator, &inverse(&denominator, len), len);

    let mut out = vec![Poly::one()];
    out.extend(quotient.into_iter().take(len - 1));
    out
}

/// Coefficients `[z^0] … [z^N]` of `G(t, s, z)`, by fixed-point iteration of
/// its functional equation.
///
/// Round `r` is exact through `z^r`, so round `r` only keeps that many
/// coefficients; after `N` rounds one more full-order round must leave the
/// series unchanged.
pub fn gf_series(max_order: usize) -> Vec<Poly> {
    let mut g = vec![Poly::one()];
    for round in 1..=max_order {
        g = iterate(&g, round);
    }
    let again = iterate(&g, max_order);
    assert_eq!(again, g, "fixed-point iteration did not stabilize");
    g
}

/// `sum_n [z^n](t, s) · z^n` over the given coefficients.
pub fn gf_series_eval(series: &[Poly], t: f64, s: f64, z: f64) -> f64 {
    let mut total = 0.0;
    let mut zn = 1.0;
    for c in series {
        total += c.eval_f64([t, s, 0.0, 0.0, 0.0]) * zn;
        zn *= z;
    }
    total
}

/// `(1 + z - sz - sqrt(1 - 2(1+s)z + (1 - 4t + 2s + s²)z²)) / 2z`, with the
/// limit value 1 at `z = 0`.
pub fn gf_closed_eval(t: f64, s: f64, z: f64) -> Result<f64> {
    if z == 0.0 {
        return Ok(1.0);
    }
    let radicand = 1.0 - 2.0 * (1.0 + s) * z + (1.0 - 4.0 * t + 2.0 * s + s * s) * z * z;
    if radicand < 0.0 {
        return Err(Error::Domain(format!(
            "negative radicand {radicand} at (t, s, z) = ({t}, {s}, {z})"
        )));
    }
    Ok((1.0 + z - s * z - radicand.sqrt()) / (2.0 * z))
}
