//! The univariate `ε` operator on `Z[[t]]` and the Schreier-type formula
//! `H(Z) = (H(X) - 1) ε(H(L/K)) + 1` for free generators of a subalgebra of
//! a free Lie algebra.

use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::Zero;

use crate::arith::{multiset_coefficient, Rational};
use crate::series::{Multidegree, Series};
use crate::truncated::Truncated;
use crate::{Error, Result};

fn require_univariate(f: &Series) -> Result<()> {
    if f.space().arity() == 1 && f.space().all_even() {
        Ok(())
    } else {
        Err(Error::NotUnivariate)
    }
}

/// Coefficients of a univariate series as nonnegative integers.
fn natural_coefficients(f: &Series) -> Result<Vec<BigUint>> {
    f.univariate_coefficients()?
        .into_iter()
        .enumerate()
        .map(|(n, c)| {
            if c.is_integer() && c.numer().sign() != Sign::Minus {
                Ok(c.to_integer().to_biguint().expect("nonnegative"))
            } else {
                Err(Error::NotADimension { at: Multidegree::new(alloc::vec![n as u32]), value: c })
            }
        })
        .collect()
}

/// `ε(Σ a_i t^i) = Π_{i≥1} (1 - t^i)^{-a_i}` for nonnegative integers `a_i`
/// and `a_0 = 0`.
pub fn epsilon_univariate(f: &Series) -> Result<Series> {
    require_univariate(f)?;
    if !f.constant_term().is_zero() {
        return Err(Error::NonZeroConstantTerm);
    }
    let coefficients = natural_coefficients(f)?;
    let max = f.max_degree();
    let mut result = Series::one(f.space());
    for (i, a) in coefficients.iter().enumerate().skip(1) {
        if a.is_zero() {
            continue;
        }
        let i = i as u32;
        // (1 - t^i)^{-a} = Σ_k C(a + k - 1, k) t^{ik}
        let factor = Series::from_terms(
            f.space(),
            (0..=max / i).map(|k| {
                (Multidegree::new(alloc::vec![i * k]), Rational::from_integer(BigInt::from(multiset_coefficient(a, k))))
            }),
        )?;
        result = result.mul_trunc(&factor);
    }
    Ok(result)
}

/// `H(Z) = (H(X) - 1) ε(H(L/K)) + 1`, the generating function of a free
/// generating set `Z` of the subalgebra `K`.
pub fn schreier_generators_series(hx: &Series, hquot: &Series) -> Result<Series> {
    require_univariate(hx)?;
    require_univariate(hquot)?;
    if hx.space() != hquot.space() {
        return Err(Error::SpaceMismatch);
    }
    if !hx.constant_term().is_zero() {
        return Err(Error::NonZeroConstantTerm);
    }
    natural_coefficients(hx)?;
    let one = Series::one(hx.space());
    let hz = hx.sub(&one)?.mul(&epsilon_univariate(hquot)?)?.add(&one)?;
    natural_coefficients(&hz)?;
    Ok(hz)
}
