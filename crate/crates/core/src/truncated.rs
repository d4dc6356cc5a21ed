//! Algorithms shared by [`Series`](crate::Series) and
//! [`GroupSeries`](crate::GroupSeries): exp/log by their defining series and
//! the weighted sums of twisted dilations behind every `E`/`L` operator.
//!
//! Callers check domains (constant terms, matching spaces) before reaching
//! this module.

use num_bigint::BigInt;
use num_traits::One;

use crate::arith::Rational;

pub(crate) trait Truncated: Sized {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn truncation(&self) -> u32;
    fn mul_trunc(&self, rhs: &Self) -> Self;
    fn add_scaled(&mut self, rhs: &Self, c: &Rational);
    fn dilate(&self, m: u64) -> Self;
}

/// `Σ_{k≥0} f^k / k!` for `f` without constant term.
pub(crate) fn exp<S: Truncated>(f: &S) -> S {
    let mut result = f.one_like();
    let mut power = f.one_like();
    let mut inv_factorial = Rational::one();
    let mut k = 1i64;
    loop {
        power = power.mul_trunc(f);
        if power.is_zero() {
            return result;
        }
        inv_factorial /= BigInt::from(k);
        result.add_scaled(&power, &inv_factorial);
        k += 1;
    }
}

/// `-Σ_{k≥1} (1 - f)^k / k` for `f` with constant term 1.
pub(crate) fn log<S: Truncated>(f: &S) -> S {
    let mut h = f.one_like();
    h.add_scaled(f, &-Rational::one());
    let mut result = f.zero_like();
    let mut power = f.one_like();
    let mut k = 1i64;
    loop {
        power = power.mul_trunc(&h);
        if power.is_zero() {
            return result;
        }
        result.add_scaled(&power, &-Rational::new(BigInt::one(), BigInt::from(k)));
        k += 1;
    }
}

/// `Σ_{m=1}^{N} (weight(m) / m) f^{[m]}`. Dilations by `m > N` vanish on a
/// series without constant term, so the finite sum is exact.
pub(crate) fn dilation_sum<S: Truncated>(f: &S, weight: impl Fn(u64) -> i64) -> S {
    let mut sum = f.zero_like();
    for m in 1..=u64::from(f.truncation()) {
        let w = weight(m);
        if w == 0 {
            continue;
        }
        let dilated = f.dilate(m);
        if dilated.is_zero() {
            continue;
        }
        sum.add_scaled(&dilated, &Rational::new(BigInt::from(w), BigInt::from(m)));
    }
    sum
}

/// `Σ_{n=1}^{N} (weight(n) / n) ln f^{[n]}` for `f` with constant term 1.
pub(crate) fn log_dilation_sum<S: Truncated>(f: &S, weight: impl Fn(u64) -> i64) -> S {
    let mut sum = f.zero_like();
    for n in 1..=u64::from(f.truncation()) {
        let w = weight(n);
        if w == 0 {
            continue;
        }
        let logged = log(&f.dilate(n));
        if logged.is_zero() {
            continue;
        }
        sum.add_scaled(&logged, &Rational::new(BigInt::from(w), BigInt::from(n)));
    }
    sum
}

