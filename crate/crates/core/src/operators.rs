//! The operator pairs `E`/`L` and `E_p`/`L_p`, characters of free color Lie
//! superalgebras and free restricted color Lie p-algebras, and the PBW
//! identities used as runtime self-checks.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{mobius, mobius_p, one_p, Prime, Rational};
use crate::series::{free_assoc_character, generator_character, GradingSpec, Multidegree, Series};
use crate::truncated::{self, Truncated};
use crate::{Error, Result};

fn require_zero_constant(f: &Series) -> Result<()> {
    if f.constant_term().is_zero() {
        Ok(())
    } else {
        Err(Error::NonZeroConstantTerm)
    }
}

fn require_unit_constant(f: &Series) -> Result<()> {
    if f.constant_term().is_one() {
        Ok(())
    } else {
        Err(Error::ConstantTermNotOne)
    }
}

fn require_even(f: &Series) -> Result<()> {
    if f.space().all_even() {
        Ok(())
    } else {
        Err(Error::OddClassPresent)
    }
}

/// `E(f) = exp(Σ_{m≥1} f^{[m]}/m)`.
pub fn op_e(f: &Series) -> Result<Series> {
    require_zero_constant(f)?;
    Ok(truncated::exp(&truncated::dilation_sum(f, |_| 1)))
}

/// `L(f) = Σ_{n≥1} (μ(n)/n) ln f^{[n]}`.
pub fn op_l(f: &Series) -> Result<Series> {
    require_unit_constant(f)?;
    Ok(truncated::log_dilation_sum(f, |n| mobius(n).expect("n >= 1")))
}

/// `E_p(f) = exp(Σ_{m≥1} (1_p(m)/m) f^{[m]})`, all variables even.
pub fn op_ep(f: &Series, p: Prime) -> Result<Series> {
    require_even(f)?;
    require_zero_constant(f)?;
    Ok(truncated::exp(&truncated::dilation_sum(f, |m| one_p(m, p).expect("m >= 1"))))
}

/// `L_p(f) = Σ_{n≥1} (μ_p(n)/n) ln f^{[n]}`, all variables even.
pub fn op_lp(f: &Series, p: Prime) -> Result<Series> {
    require_even(f)?;
    require_unit_constant(f)?;
    Ok(truncated::log_dilation_sum(f, |n| mobius_p(n, p).expect("n >= 1")))
}

/// `E_p` extended to mixed parity: the `1_p`-weighted factor on the even
/// part `f_+` times the plain `E` factor on the odd part `f_-`.
pub fn op_ep_mixed(f: &Series, p: Prime) -> Result<Series> {
    require_zero_constant(f)?;
    let (even, odd) = f.split_by_parity();
    let even_factor = truncated::exp(&truncated::dilation_sum(&even, |m| one_p(m, p).expect("m >= 1")));
    let odd_factor = truncated::exp(&truncated::dilation_sum(&odd, |_| 1));
    Ok(even_factor.mul_trunc(&odd_factor))
}

/// `-Σ_n (weight(n)/n) ln(1 - (ch X)^{[n]})`.
fn free_character(spec: &GradingSpec, weight: impl Fn(u64) -> i64) -> Series {
    let chx = generator_character(spec);
    let one = Series::one(spec.space());
    let mut sum = Series::zero(spec.space());
    for n in 1..=u64::from(spec.max_degree()) {
        let w = weight(n);
        if w == 0 {
            continue;
        }
        let inner = one.sub(&chx.dilate(n)).expect("same space");
        let logged = truncated::log(&inner);
        sum.add_scaled(&logged, &-Rational::new(BigInt::from(w), BigInt::from(n)));
    }
    sum
}

/// Character of the free color Lie superalgebra on `spec`; the coefficient
/// of `t^α` is `dim L_α`.
pub fn free_super_character(spec: &GradingSpec) -> Result<Series> {
    let ch = free_character(spec, |n| mobius(n).expect("n >= 1"));
    ch.ensure_dimensions()?;
    Ok(ch)
}

/// Character of the free restricted color Lie p-algebra on an all-even
/// `spec`.
pub fn free_restricted_character(spec: &GradingSpec, p: Prime) -> Result<Series> {
    if !spec.all_even() {
        return Err(Error::OddClassPresent);
    }
    let ch = free_character(spec, |n| mobius_p(n, p).expect("n >= 1"));
    ch.ensure_dimensions()?;
    Ok(ch)
}

/// Degree-`n` part of the free restricted character from the closed form
/// `(1/n) Σ_{k|n} μ_p(k) ((ch X)^{[k]})^{n/k}`.
pub fn homogeneous_character_p(spec: &GradingSpec, p: Prime, n: u32) -> Result<Series> {
    if !spec.all_even() {
        return Err(Error::OddClassPresent);
    }
    if n == 0 {
        return Err(Error::ZeroArgument);
    }
    if n > spec.max_degree() {
        return Err(Error::DegreeOutOfRange { degree: n, max: spec.max_degree() });
    }
    let chx = generator_character(spec);
    let mut sum = Series::zero(spec.space());
    for k in crate::arith::divisors(u64::from(n))? {
        let weight = mobius_p(k, p)?;
        if weight == 0 {
            continue;
        }
        let dilated = chx.dilate(k);
        let mut power = Series::one(spec.space());
        for _ in 0..(u64::from(n) / k) {
            power = power.mul_trunc(&dilated);
        }
        sum.add_scaled(&power, &Rational::from_integer(BigInt::from(weight)));
    }
    let slice = sum.scale(&Rational::new(BigInt::one(), BigInt::from(n)));
    slice.ensure_dimensions()?;
    Ok(slice)
}

/// First coefficient where an identity failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub multidegree: Multidegree,
    pub expected: Rational,
    pub actual: Rational,
}

/// Outcome of comparing two series coefficient by coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub max_degree: u32,
    /// Number of multidegrees with a nonzero coefficient on either side.
    pub compared: usize,
    pub mismatch: Option<Mismatch>,
}

impl VerificationReport {
    pub fn compare(expected: &Series, actual: &Series) -> Self {
        let mut keys: alloc::vec::Vec<&Multidegree> = expected.terms().map(|(a, _)| a).chain(actual.terms().map(|(a, _)| a)).collect();
        keys.sort();
        keys.dedup();
        let mismatch = expected.first_difference(actual).map(|(multidegree, expected, actual)| Mismatch { multidegree, expected, actual });
        VerificationReport { max_degree: expected.max_degree(), compared: keys.len(), mismatch }
    }

    pub fn passed(&self) -> bool {
        self.mismatch.is_none()
    }
}

/// Checks `E(ch L(X)) = 1/(1 - ch X)` up to the truncation degree.
pub fn pbw_verify(spec: &GradingSpec) -> Result<VerificationReport> {
    let lie = free_super_character(spec)?;
    let enveloping = op_e(&lie)?;
    Ok(VerificationReport::compare(&free_assoc_character(spec), &enveloping))
}

/// Checks `E_p(ch L(X)) = 1/(1 - ch X)` for the free restricted algebra.
pub fn pbw_verify_p(spec: &GradingSpec, p: Prime) -> Result<VerificationReport> {
    let lie = free_restricted_character(spec, p)?;
    let enveloping = op_ep(&lie, p)?;
    Ok(VerificationReport::compare(&free_assoc_character(spec), &enveloping))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational_from_int;
    use crate::series::{Parity, SeriesSpace};
    use alloc::sync::Arc;
    use alloc::vec;
    use alloc::vec::Vec;

    fn prime(p: u64) -> Prime {
        Prime::new(p).unwrap()
    }

    fn uni(n: u32, coeffs: &[i64]) -> Series {
        Series::univariate(n, coeffs).unwrap()
    }

    fn odd_var(n: u32) -> Series {
        let space = Arc::new(SeriesSpace::new(vec![Parity::Odd], n).unwrap());
        Series::variable(&space, 0).unwrap()
    }

    fn coeffs(s: &Series) -> Vec<Rational> {
        s.univariate_coefficients().unwrap()
    }

    #[test]
    fn e_examples() {
        let zero = uni(6, &[]);
        assert_eq!(op_e(&zero).unwrap(), uni(6, &[1]));
        assert_eq!(op_e(&uni(6, &[0, 1])).unwrap(), uni(6, &[1; 7]));
        let u = odd_var(6);
        assert_eq!(op_e(&u).unwrap(), Series::one(u.space()).add(&u).unwrap());
        assert_eq!(op_e(&uni(6, &[1])), Err(Error::NonZeroConstantTerm));
    }

    #[test]
    fn l_examples() {
        assert_eq!(op_l(&uni(6, &[1; 7])).unwrap(), uni(6, &[0, 1]));
        let u = odd_var(6);
        assert_eq!(op_l(&Series::one(u.space()).add(&u).unwrap()).unwrap(), u);
        // 1/(1-2t): coefficients are rank-2 Witt numbers.
        let geometric: Vec<i64> = (0..=8).map(|n| 1 << n).collect();
        let l = op_l(&uni(8, &geometric)).unwrap();
        assert_eq!(coeffs(&l), [0, 2, 1, 2, 3, 6, 9, 18, 30].map(rational_from_int));
        assert_eq!(op_l(&uni(6, &[2])), Err(Error::ConstantTermNotOne));
    }

    #[test]
    fn ep_lp_examples() {
        let p2 = prime(2);
        assert_eq!(op_ep(&uni(8, &[]), p2).unwrap(), uni(8, &[1]));
        // A single degree-one element with x^{[2]} = 0: (1 - t^2)/(1 - t).
        assert_eq!(op_ep(&uni(8, &[0, 1]), p2).unwrap(), uni(8, &[1, 1]));
        // One restricted generator: basis x^{[2^k]}; PBW monomials with
        // exponents < 2 give every degree exactly once, i.e. Π (1 + t^{2^k}).
        let by_hand = uni(8, &[1, 1])
            .mul(&uni(8, &[1, 0, 1]))
            .unwrap()
            .mul(&uni(8, &[1, 0, 0, 0, 1]))
            .unwrap()
            .mul(&uni(8, &[1, 0, 0, 0, 0, 0, 0, 0, 1]))
            .unwrap();
        let e = op_ep(&uni(8, &[0, 1, 1, 0, 1, 0, 0, 0, 1]), p2).unwrap();
        assert_eq!(e, by_hand);
        assert_eq!(e, uni(8, &[1; 9]));
        assert_eq!(op_lp(&uni(8, &[1; 9]), p2).unwrap(), uni(8, &[0, 1, 1, 0, 1, 0, 0, 0, 1]));
        assert_eq!(op_ep(&odd_var(4), p2), Err(Error::OddClassPresent));
        assert_eq!(op_lp(&uni(4, &[0, 1]), p2), Err(Error::ConstantTermNotOne));
    }

    #[test]
    fn ep_mixed_examples() {
        let p2 = prime(2);
        let t = uni(8, &[0, 1]);
        assert_eq!(op_ep_mixed(&t, p2).unwrap(), op_ep(&t, p2).unwrap());
        let u = odd_var(8);
        assert_eq!(op_ep_mixed(&u, p2).unwrap(), Series::one(u.space()).add(&u).unwrap());

        let space = Arc::new(SeriesSpace::new(vec![Parity::Even, Parity::Odd], 8).unwrap());
        let t = Series::variable(&space, 0).unwrap();
        let u = Series::variable(&space, 1).unwrap();
        let mixed = op_ep_mixed(&t.add(&u).unwrap(), p2).unwrap();
        let product = op_ep_mixed(&t, p2).unwrap().mul(&op_e(&u).unwrap()).unwrap();
        assert_eq!(mixed, product);
        // The t-only factor agrees with op_ep computed in a purely even space.
        let even_only = op_ep(&uni(8, &[0, 1]), p2).unwrap();
        for (alpha, c) in even_only.terms() {
            let lifted = Multidegree::from([alpha.exponents()[0], 0]);
            assert_eq!(op_ep_mixed(&t, p2).unwrap().coefficient(&lifted), c.clone());
        }
        assert_eq!(op_ep_mixed(&Series::one(&space), p2), Err(Error::NonZeroConstantTerm));
    }

    fn klein_four_spec(n: u32) -> GradingSpec {
        GradingSpec::from_classes(&[(1, Parity::Even), (2, Parity::Even), (1, Parity::Odd), (1, Parity::Odd)], n).unwrap()
    }

    #[test]
    fn free_super_character_examples() {
        let ch = free_super_character(&klein_four_spec(6)).unwrap();
        assert_eq!(ch.coefficient(&Multidegree::from([0, 3, 0, 0])), rational_from_int(2));
        assert_eq!(ch.coefficient(&Multidegree::from([2, 1, 0, 0])), rational_from_int(2));
        assert_eq!(ch.coefficient(&Multidegree::from([1, 0, 1, 1])), rational_from_int(2));

        let two = GradingSpec::from_classes(&[(1, Parity::Even), (1, Parity::Even)], 6).unwrap();
        assert_eq!(free_super_character(&two).unwrap().coefficient(&Multidegree::from([1, 1])), rational_from_int(1));

        let odd = GradingSpec::from_classes(&[(1, Parity::Odd)], 6).unwrap();
        let ch = free_super_character(&odd).unwrap();
        assert_eq!(coeffs(&ch), [0, 1, 1, 0, 0, 0, 0].map(rational_from_int));
    }

    #[test]
    fn free_restricted_character_examples() {
        let one = GradingSpec::from_classes(&[(1, Parity::Even)], 8).unwrap();
        let ch = free_restricted_character(&one, prime(2)).unwrap();
        assert_eq!(coeffs(&ch), [0, 1, 1, 0, 1, 0, 0, 0, 1].map(rational_from_int));

        let two = GradingSpec::from_classes(&[(2, Parity::Even)], 6).unwrap();
        let ch = free_restricted_character(&two, prime(2)).unwrap();
        assert_eq!(ch.coefficient(&Multidegree::from([2])), rational_from_int(3));
        let ch = free_restricted_character(&two, prime(3)).unwrap();
        assert_eq!(ch.coefficient(&Multidegree::from([3])), rational_from_int(4));

        let odd = GradingSpec::from_classes(&[(1, Parity::Odd)], 6).unwrap();
        assert_eq!(free_restricted_character(&odd, prime(2)), Err(Error::OddClassPresent));
    }

    #[test]
    fn homogeneous_slices() {
        let two = GradingSpec::from_classes(&[(1, Parity::Even), (1, Parity::Even)], 8).unwrap();
        let p2 = prime(2);
        let slice = homogeneous_character_p(&two, p2, 2).unwrap();
        let full = free_restricted_character(&two, p2).unwrap();
        assert_eq!(slice, full.degree_slice(2));
        let total: Rational = slice.terms().map(|(_, c)| c.clone()).sum();
        assert_eq!(total, rational_from_int(3));

        let spec = GradingSpec::from_classes(&[(2, Parity::Even), (3, Parity::Even)], 5).unwrap();
        assert_eq!(homogeneous_character_p(&spec, prime(3), 1).unwrap(), generator_character(&spec));

        let one = GradingSpec::from_classes(&[(1, Parity::Even)], 8).unwrap();
        assert!(homogeneous_character_p(&one, p2, 3).unwrap().is_zero());
        assert_eq!(homogeneous_character_p(&one, p2, 9), Err(Error::DegreeOutOfRange { degree: 9, max: 8 }));
        let odd = GradingSpec::from_classes(&[(1, Parity::Odd)], 6).unwrap();
        assert_eq!(homogeneous_character_p(&odd, p2, 2), Err(Error::OddClassPresent));
    }

    #[test]
    fn pbw_examples() {
        let two = GradingSpec::from_classes(&[(1, Parity::Even), (1, Parity::Even)], 8).unwrap();
        assert!(pbw_verify(&two).unwrap().passed());
        assert!(pbw_verify(&klein_four_spec(8)).unwrap().passed());
        let odd = GradingSpec::from_classes(&[(1, Parity::Odd)], 8).unwrap();
        assert!(pbw_verify(&odd).unwrap().passed());

        let one = GradingSpec::from_classes(&[(1, Parity::Even)], 10).unwrap();
        assert!(pbw_verify_p(&one, prime(2)).unwrap().passed());
        let three = GradingSpec::from_classes(&[(1, Parity::Even); 3], 8).unwrap();
        assert!(pbw_verify_p(&three, prime(3)).unwrap().passed());
        let two = GradingSpec::from_classes(&[(1, Parity::Even); 2], 8).unwrap();
        assert!(pbw_verify_p(&two, prime(5)).unwrap().passed());
    }

    #[test]
    fn report_points_at_first_difference() {
        let a = uni(4, &[1, 1, 1]);
        let b = uni(4, &[1, 1, 2]);
        let report = VerificationReport::compare(&a, &b);
        assert!(!report.passed());
        let mismatch = report.mismatch.unwrap();
        assert_eq!(mismatch.multidegree, Multidegree::from([2]));
        assert_eq!(mismatch.expected, rational_from_int(1));
        assert_eq!(mismatch.actual, rational_from_int(2));
    }
}
