//! Exact integer and rational arithmetic plus the number-theoretic functions
//! that drive every dimension formula: `μ`, `μ_p`, `1_p`, divisors and
//! multinomial coefficients.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::One;

use crate::{Error, Result};

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

/// A prime number, validated at construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Prime(u64);

impl Prime {
    pub fn new(value: u64) -> Result<Self> {
        if is_prime(value) {
            Ok(Prime(value))
        } else {
            Err(Error::NotPrime(value))
        }
    }

    pub fn get(self) -> u64 {
        self.0
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl TryFrom<u64> for Prime {
    type Error = Error;

    fn try_from(value: u64) -> Result<Self> {
        Prime::new(value)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factorization by trial division as `(prime, exponent)` pairs.
fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut factors = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            factors.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        factors.push((n, 1));
    }
    factors
}

/// The classical Möbius function.
pub fn mobius(n: u64) -> Result<i64> {
    if n == 0 {
        return Err(Error::ZeroArgument);
    }
    let mut sign = 1;
    for (_, e) in factorize(n) {
        if e > 1 {
            return Ok(0);
        }
        sign = -sign;
    }
    Ok(sign)
}

/// `1_p(n)`: `1` when `p` does not divide `n`, `1 - p` otherwise.
pub fn one_p(n: u64, p: Prime) -> Result<i64> {
    if n == 0 {
        return Err(Error::ZeroArgument);
    }
    Ok(if n % p.0 == 0 { 1 - p.0 as i64 } else { 1 })
}

/// `μ_p(n)`: equals `μ(n)` when `p ∤ n`, and `μ(m)(p^s - p^(s-1))` when
/// `n = m·p^s` with `p ∤ m`, `s ≥ 1`.
pub fn mobius_p(n: u64, p: Prime) -> Result<i64> {
    if n == 0 {
        return Err(Error::ZeroArgument);
    }
    let p = p.0;
    let mut m = n;
    let mut power = 1u64;
    while m % p == 0 {
        m /= p;
        power *= p;
    }
    let mu = mobius(m)?;
    if power == 1 {
        Ok(mu)
    } else {
        Ok(mu * (power - power / p) as i64)
    }
}

/// All positive divisors of `n` in ascending order.
pub fn divisors(n: u64) -> Result<Vec<u64>> {
    if n == 0 {
        return Err(Error::ZeroArgument);
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Ok(small)
}

pub fn factorial(n: u32) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// `(Σ parts)! / Π parts_i!`.
pub fn multinomial(parts: &[u32]) -> BigUint {
    // Product of binomials avoids the full factorial quotient.
    let mut acc = BigUint::one();
    let mut running = 0u32;
    for &k in parts {
        for j in 1..=k {
            acc *= running + j;
            acc /= j;
        }
        running += k;
    }
    acc
}

/// `C(n + k - 1, k)` for a nonnegative integer `n`, i.e. the coefficient of
/// `x^k` in `(1 - x)^(-n)`.
pub fn multiset_coefficient(n: &BigUint, k: u32) -> BigUint {
    let mut acc = BigUint::one();
    for j in 0..k {
        acc *= n + j;
        acc /= j + 1;
    }
    acc
}

pub fn gcd(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

pub fn rational_from_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}
