//! Closed-form Witt-type dimension formulas, computed directly from Möbius
//! sums without going through the series pipeline.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Pow, Signed, Zero};

use crate::arith::{divisors, mobius, mobius_p, multinomial, Prime, Rational};
use crate::series::{GradingSpec, Multidegree, Parity, Series, SeriesSpace};
use crate::truncated::{self, Truncated};
use crate::{Error, Result};

/// Divides `sum` by `denominator` and checks the result is a dimension.
fn to_dimension(sum: BigInt, denominator: u64, at: &Multidegree) -> Result<BigUint> {
    let (q, r) = sum.div_rem(&BigInt::from(denominator));
    if !r.is_zero() || q.is_negative() {
        return Err(Error::NotADimension { at: at.clone(), value: Rational::new(sum, BigInt::from(denominator)) });
    }
    Ok(q.to_biguint().expect("nonnegative"))
}

fn check_alpha(spec: &GradingSpec, alpha: &Multidegree) -> Result<()> {
    spec.check_multidegree(alpha)?;
    if alpha.is_zero() {
        return Err(Error::ZeroMultidegree);
    }
    Ok(())
}

/// `multinomial(α/n) · Π s_i^{α_i/n}` for `n | α`.
fn weighted_multinomial(spec: &GradingSpec, alpha: &Multidegree, n: u32) -> BigInt {
    let reduced = alpha.divided(n).expect("n divides alpha");
    let mut term = BigInt::from(multinomial(reduced.exponents()));
    for (s, &a) in spec.multiplicities().zip(reduced.exponents()) {
        term *= BigInt::from(s).pow(a);
    }
    term
}

/// `dim L_α` of the free color Lie superalgebra:
/// `((-1)^{|α|_-}/|α|) Σ_{n|α} μ(n) (-1)^{|α|_-/n} multinomial(α/n) Π s_i^{α_i/n}`,
/// where `n | α` means `n` divides every component.
pub fn dim_multidegree(spec: &GradingSpec, alpha: &Multidegree) -> Result<BigUint> {
    check_alpha(spec, alpha)?;
    let odd = alpha.odd_part(spec.parities());
    let mut sum = BigInt::zero();
    for n in divisors(u64::from(alpha.gcd()))? {
        let mu = mobius(n)?;
        if mu == 0 {
            continue;
        }
        let n = n as u32;
        let mut term = weighted_multinomial(spec, alpha, n) * mu;
        if (odd / n) % 2 == 1 {
            term = -term;
        }
        sum += term;
    }
    if odd % 2 == 1 {
        sum = -sum;
    }
    to_dimension(sum, u64::from(alpha.total()), alpha)
}

/// `dim L_n = (1/n) Σ_{m|n} μ(m) (k - (-1)^m l)^{n/m}` for `k` even and `l`
/// odd generators.
pub fn dim_total_super(k: u64, l: u64, n: u32) -> Result<BigUint> {
    if k + l == 0 {
        return Err(Error::EmptyGeneratingSet);
    }
    if n == 0 {
        return Err(Error::ZeroArgument);
    }
    let mut sum = BigInt::zero();
    for m in divisors(u64::from(n))? {
        let mu = mobius(m)?;
        if mu == 0 {
            continue;
        }
        let base = if m % 2 == 0 { BigInt::from(k) - BigInt::from(l) } else { BigInt::from(k) + BigInt::from(l) };
        sum += base.pow((u64::from(n) / m) as u32) * mu;
    }
    to_dimension(sum, u64::from(n), &Multidegree::new(vec![n]))
}

/// Hilbert series of a free color Lie superalgebra on `k` even and `l` odd
/// generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperHilbertSeries {
    /// In `t_+` (even, first variable) and `t_-` (odd, second variable).
    pub bivariate: Series,
    /// The specialization `t_+ = t_- = t`.
    pub univariate: Series,
}

/// `-Σ_n (μ(n)/n) ln(1 - k t_+^n + l (-t_-)^n)` and its diagonal
/// `-Σ_n (μ(n)/n) ln(1 - (k - (-1)^n l) t^n)`, truncated at `max_degree`.
pub fn hilbert_series_super(k: u64, l: u64, max_degree: u32) -> Result<SuperHilbertSeries> {
    if k + l == 0 {
        return Err(Error::EmptyGeneratingSet);
    }
    let two = Arc::new(SeriesSpace::new(vec![Parity::Even, Parity::Odd], max_degree)?);
    let one = SeriesSpace::univariate(max_degree)?;
    let int = |v: BigInt| Rational::from_integer(v);

    let mut bivariate = Series::zero(&two);
    let mut univariate = Series::zero(&one);
    for n in 1..=max_degree {
        let mu = mobius(u64::from(n))?;
        if mu == 0 {
            continue;
        }
        let weight = -Rational::new(BigInt::from(mu), BigInt::from(n));
        let odd_sign = if n % 2 == 0 { BigInt::one() } else { -BigInt::one() };

        let inner = Series::from_terms(
            &two,
            [
                (Multidegree::zero(2), Rational::one()),
                (Multidegree::from([n, 0]), int(-BigInt::from(k))),
                (Multidegree::from([0, n]), int(BigInt::from(l) * &odd_sign)),
            ],
        )?;
        bivariate.add_scaled(&inner.log_u()?, &weight);

        let coefficient = BigInt::from(k) - odd_sign * BigInt::from(l);
        let inner = Series::from_terms(
            &one,
            [(Multidegree::zero(1), Rational::one()), (Multidegree::from([n]), int(-coefficient))],
        )?;
        univariate.add_scaled(&truncated::log(&inner), &weight);
    }
    bivariate.ensure_dimensions()?;
    univariate.ensure_dimensions()?;
    Ok(SuperHilbertSeries { bivariate, univariate })
}

/// `dim L_α` of the free restricted color Lie p-algebra:
/// `(1/|α|) Σ_{n|α} μ_p(n) multinomial(α/n) Π s_i^{α_i/n}`.
pub fn dim_multidegree_p(spec: &GradingSpec, alpha: &Multidegree, p: Prime) -> Result<BigUint> {
    if !spec.all_even() {
        return Err(Error::OddClassPresent);
    }
    check_alpha(spec, alpha)?;
    let mut sum = BigInt::zero();
    for n in divisors(u64::from(alpha.gcd()))? {
        let mu = mobius_p(n, p)?;
        if mu == 0 {
            continue;
        }
        sum += weighted_multinomial(spec, alpha, n as u32) * mu;
    }
    to_dimension(sum, u64::from(alpha.total()), alpha)
}

/// `dim L_n = (1/n) Σ_{m|n} μ_p(m) r^{n/m}`.
pub fn dim_total_p(r: u64, n: u32, p: Prime) -> Result<BigUint> {
    if r == 0 {
        return Err(Error::EmptyGeneratingSet);
    }
    if n == 0 {
        return Err(Error::ZeroArgument);
    }
    let mut sum = BigInt::zero();
    for m in divisors(u64::from(n))? {
        let mu = mobius_p(m, p)?;
        sum += BigInt::from(r).pow((u64::from(n) / m) as u32) * mu;
    }
    to_dimension(sum, u64::from(n), &Multidegree::new(vec![n]))
}

/// Closed-form dimensions of every multidegree with `1 ≤ |α| ≤ N`, in
/// graded order.
pub fn dimension_table(spec: &GradingSpec, p: Option<Prime>) -> Result<Vec<(Multidegree, BigUint)>> {
    let mut rows = Vec::new();
    for n in 1..=spec.max_degree() {
        for alpha in Multidegree::all_of_total(spec.arity(), n) {
            let dim = match p {
                Some(p) => dim_multidegree_p(spec, &alpha, p)?,
                None => dim_multidegree(spec, &alpha)?,
            };
            rows.push((alpha, dim));
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational_from_int;

    fn big(n: u32) -> BigUint {
        BigUint::from(n)
    }

    fn prime(p: u64) -> Prime {
        Prime::new(p).unwrap()
    }

    fn klein_four_spec() -> GradingSpec {
        GradingSpec::from_classes(&[(1, Parity::Even), (2, Parity::Even), (1, Parity::Odd), (1, Parity::Odd)], 12).unwrap()
    }

    #[test]
    fn example_components() {
        let spec = klein_four_spec();
        assert_eq!(dim_multidegree(&spec, &Multidegree::from([0, 3, 0, 0])).unwrap(), big(2));
        assert_eq!(dim_multidegree(&spec, &Multidegree::from([2, 1, 0, 0])).unwrap(), big(2));
        assert_eq!(dim_multidegree(&spec, &Multidegree::from([1, 0, 1, 1])).unwrap(), big(2));
    }

    #[test]
    fn multidegree_edge_cases() {
        let odd = GradingSpec::from_classes(&[(1, Parity::Odd)], 12).unwrap();
        assert_eq!(dim_multidegree(&odd, &Multidegree::from([2])).unwrap(), big(1));
        assert_eq!(dim_multidegree(&odd, &Multidegree::from([3])).unwrap(), big(0));
        assert_eq!(dim_multidegree(&odd, &Multidegree::from([0])), Err(Error::ZeroMultidegree));
        assert_eq!(dim_multidegree(&odd, &Multidegree::from([1, 1])), Err(Error::ArityMismatch { expected: 1, found: 2 }));
    }

    #[test]
    fn totals() {
        assert_eq!(dim_total_super(2, 0, 3).unwrap(), big(2));
        assert_eq!(dim_total_super(1, 1, 4).unwrap(), big(4));
        assert_eq!(dim_total_super(0, 1, 3).unwrap(), big(0));
        assert_eq!(dim_total_super(0, 0, 3), Err(Error::EmptyGeneratingSet));
        assert_eq!(dim_total_p(1, 4, prime(2)).unwrap(), big(1));
        assert_eq!(dim_total_p(2, 2, prime(2)).unwrap(), big(3));
        assert_eq!(dim_total_p(1, 3, prime(2)).unwrap(), big(0));
    }

    #[test]
    fn restricted_multidegrees() {
        let two = GradingSpec::from_classes(&[(1, Parity::Even), (1, Parity::Even)], 12).unwrap();
        assert_eq!(dim_multidegree_p(&two, &Multidegree::from([1, 1]), prime(2)).unwrap(), big(1));
        let one = GradingSpec::from_classes(&[(1, Parity::Even)], 12).unwrap();
        assert_eq!(dim_multidegree_p(&one, &Multidegree::from([2]), prime(2)).unwrap(), big(1));
        assert_eq!(dim_multidegree_p(&one, &Multidegree::from([2]), prime(3)).unwrap(), big(0));
        let odd = GradingSpec::from_classes(&[(1, Parity::Odd)], 12).unwrap();
        assert_eq!(dim_multidegree_p(&odd, &Multidegree::from([2]), prime(2)), Err(Error::OddClassPresent));
    }

    #[test]
    fn hilbert_series() {
        let h = hilbert_series_super(1, 1, 6).unwrap();
        let got = h.univariate.univariate_coefficients().unwrap();
        assert_eq!(got[1..5], [2, 2, 2, 4].map(rational_from_int));
        let h = hilbert_series_super(2, 0, 6).unwrap();
        assert_eq!(h.univariate.univariate_coefficients().unwrap()[1..], [2, 1, 2, 3, 6, 9].map(rational_from_int));
        assert_eq!(hilbert_series_super(0, 0, 6), Err(Error::EmptyGeneratingSet));
    }

    #[test]
    fn diagonal_of_bivariate_is_univariate() {
        for (k, l) in [(1, 1), (2, 1), (0, 3), (3, 0), (2, 2)] {
            let h = hilbert_series_super(k, l, 9).unwrap();
            for n in 1..=9u32 {
                let diagonal: Rational = h.bivariate.degree_slice(n).terms().map(|(_, c)| c.clone()).sum();
                let univariate = h.univariate.coefficient(&Multidegree::from([n]));
                assert_eq!(diagonal, univariate);
                assert_eq!(univariate, Rational::from_integer(dim_total_super(k, l, n).unwrap().into()));
            }
        }
    }
}
