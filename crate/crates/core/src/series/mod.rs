//! Truncated sparse multivariate power series over exact rationals.
//!
//! A [`Series`] lives in a [`SeriesSpace`]: one variable `t_i` per generator
//! class, each with a parity, and a global bound `N` on the total degree.
//! Terms above `N` are never stored, and neither are zero coefficients.

mod grading;
mod multidegree;

use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub use grading::{GeneratorClass, GradingSpec, DEFAULT_MAX_DEGREE};
pub use multidegree::Multidegree;

use crate::arith::Rational;
use crate::truncated::{self, Truncated};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    #[default]
    Even,
    Odd,
}

impl Parity {
    /// `+1` for even, `-1` for odd.
    pub fn sign(self) -> i64 {
        match self {
            Parity::Even => 1,
            Parity::Odd => -1,
        }
    }
}

/// Variables (with parities) and truncation degree shared by a family of
/// series.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SeriesSpace {
    parities: Vec<Parity>,
    max_degree: u32,
}

impl SeriesSpace {
    pub fn new(parities: Vec<Parity>, max_degree: u32) -> Result<Self> {
        if parities.is_empty() {
            return Err(Error::EmptySpec);
        }
        if max_degree == 0 {
            return Err(Error::ZeroTruncation);
        }
        Ok(SeriesSpace { parities, max_degree })
    }

    /// One even variable `t`.
    pub fn univariate(max_degree: u32) -> Result<Arc<Self>> {
        Ok(Arc::new(Self::new(alloc::vec![Parity::Even], max_degree)?))
    }

    pub fn parities(&self) -> &[Parity] {
        &self.parities
    }

    pub fn arity(&self) -> usize {
        self.parities.len()
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    pub fn all_even(&self) -> bool {
        self.parities.iter().all(|p| *p == Parity::Even)
    }
}

#[derive(Clone, Debug)]
pub struct Series {
    space: Arc<SeriesSpace>,
    terms: BTreeMap<Multidegree, Rational>,
}

impl PartialEq for Series {
    fn eq(&self, other: &Self) -> bool {
        same_space(&self.space, &other.space) && self.terms == other.terms
    }
}

impl Eq for Series {}

pub(crate) fn same_space(a: &Arc<SeriesSpace>, b: &Arc<SeriesSpace>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl Series {
    pub fn zero(space: &Arc<SeriesSpace>) -> Self {
        Series { space: space.clone(), terms: BTreeMap::new() }
    }

    pub fn one(space: &Arc<SeriesSpace>) -> Self {
        Self::constant(space, Rational::one())
    }

    pub fn constant(space: &Arc<SeriesSpace>, c: Rational) -> Self {
        let mut s = Self::zero(space);
        s.insert(Multidegree::zero(space.arity()), c);
        s
    }

    /// The variable `t_i`.
    pub fn variable(space: &Arc<SeriesSpace>, i: usize) -> Result<Self> {
        if i >= space.arity() {
            return Err(Error::ArityMismatch { expected: space.arity(), found: i + 1 });
        }
        Self::monomial(space, Multidegree::unit(space.arity(), i), Rational::one())
    }

    pub fn monomial(space: &Arc<SeriesSpace>, alpha: Multidegree, c: Rational) -> Result<Self> {
        Self::from_terms(space, [(alpha, c)])
    }

    /// Builds a series from `(multidegree, coefficient)` pairs, summing
    /// repeats and dropping terms above the truncation degree.
    pub fn from_terms(space: &Arc<SeriesSpace>, terms: impl IntoIterator<Item = (Multidegree, Rational)>) -> Result<Self> {
        let mut s = Self::zero(space);
        for (alpha, c) in terms {
            if alpha.arity() != space.arity() {
                return Err(Error::ArityMismatch { expected: space.arity(), found: alpha.arity() });
            }
            s.accumulate(alpha, &c);
        }
        Ok(s)
    }

    /// Univariate series `Σ coefficients[n] t^n` in one even variable.
    pub fn univariate(max_degree: u32, coefficients: &[i64]) -> Result<Self> {
        let space = SeriesSpace::univariate(max_degree)?;
        Self::from_terms(
            &space,
            coefficients
                .iter()
                .enumerate()
                .map(|(n, &c)| (Multidegree::new(alloc::vec![n as u32]), Rational::from_integer(BigInt::from(c)))),
        )
    }

    pub fn space(&self) -> &Arc<SeriesSpace> {
        &self.space
    }

    pub fn max_degree(&self) -> u32 {
        self.space.max_degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero terms in ascending (graded) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Multidegree, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, alpha: &Multidegree) -> Rational {
        self.terms.get(alpha).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coefficient(&Multidegree::zero(self.space.arity()))
    }

    /// Coefficients of a univariate series as `[c_0, …, c_N]`.
    pub fn univariate_coefficients(&self) -> Result<Vec<Rational>> {
        if self.space.arity() != 1 {
            return Err(Error::NotUnivariate);
        }
        Ok((0..=self.max_degree()).map(|n| self.coefficient(&Multidegree::new(alloc::vec![n]))).collect())
    }

    /// Terms of total degree exactly `n`.
    pub fn degree_slice(&self, n: u32) -> Series {
        Series {
            space: self.space.clone(),
            terms: self.terms.iter().filter(|(a, _)| a.total() == n).map(|(a, c)| (a.clone(), c.clone())).collect(),
        }
    }

    fn insert(&mut self, alpha: Multidegree, c: Rational) {
        if !c.is_zero() && alpha.total() <= self.space.max_degree {
            self.terms.insert(alpha, c);
        }
    }

    fn accumulate(&mut self, alpha: Multidegree, c: &Rational) {
        if c.is_zero() || alpha.total() > self.space.max_degree {
            return;
        }
        match self.terms.entry(alpha) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check_space(&self, other: &Series) -> Result<()> {
        if same_space(&self.space, &other.space) {
            Ok(())
        } else {
            Err(Error::SpaceMismatch)
        }
    }

    pub fn add(&self, other: &Series) -> Result<Series> {
        self.check_space(other)?;
        let mut out = self.clone();
        out.add_scaled(other, &Rational::one());
        Ok(out)
    }

    pub fn sub(&self, other: &Series) -> Result<Series> {
        self.check_space(other)?;
        let mut out = self.clone();
        out.add_scaled(other, &-Rational::one());
        Ok(out)
    }

    pub fn neg(&self) -> Series {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, c: &Rational) -> Series {
        if c.is_zero() {
            return Series::zero(&self.space);
        }
        Series { space: self.space.clone(), terms: self.terms.iter().map(|(a, v)| (a.clone(), v * c)).collect() }
    }

    /// Cauchy product truncated at total degree `N`.
    pub fn mul(&self, other: &Series) -> Result<Series> {
        self.check_space(other)?;
        Ok(self.mul_trunc(other))
    }

    /// `g` with `f·g = 1` up to degree `N`.
    pub fn inverse(&self) -> Result<Series> {
        let c0 = self.constant_term();
        if c0.is_zero() {
            return Err(Error::NotInvertible);
        }
        // f = c0 (1 - h) with h(0) = 0, so 1/f = c0^{-1} Σ h^k.
        let inv_c0 = c0.recip();
        let mut h = Series::one(&self.space);
        h.add_scaled(self, &-inv_c0.clone());
        let mut result = Series::one(&self.space);
        let mut power = Series::one(&self.space);
        loop {
            power = power.mul_trunc(&h);
            if power.is_zero() {
                break;
            }
            result.add_scaled(&power, &Rational::one());
        }
        Ok(result.scale(&inv_c0))
    }

    /// `exp(f) = Σ f^k / k!`; needs a zero constant term.
    pub fn exp_z(&self) -> Result<Series> {
        if !self.constant_term().is_zero() {
            return Err(Error::NonZeroConstantTerm);
        }
        Ok(truncated::exp(self))
    }

    /// `ln(f) = -Σ (1 - f)^k / k`; needs constant term exactly 1.
    pub fn log_u(&self) -> Result<Series> {
        if !self.constant_term().is_one() {
            return Err(Error::ConstantTermNotOne);
        }
        Ok(truncated::log(self))
    }

    /// The twisted dilation `f ↦ f^{[m]}`:
    /// `c·t^α ↦ (-1)^{(m+1)|α|_-} c·t^{mα}`.
    pub fn twisted_dilate(&self, m: u64) -> Result<Series> {
        if m == 0 {
            return Err(Error::ZeroArgument);
        }
        Ok(self.dilate(m))
    }

    /// Splits `f = f_+ + f_-` by the parity of `|α|_-` of each term.
    pub fn split_by_parity(&self) -> (Series, Series) {
        let mut even = Series::zero(&self.space);
        let mut odd = Series::zero(&self.space);
        for (alpha, c) in &self.terms {
            match alpha.parity(&self.space.parities) {
                Parity::Even => even.terms.insert(alpha.clone(), c.clone()),
                Parity::Odd => odd.terms.insert(alpha.clone(), c.clone()),
            };
        }
        (even, odd)
    }

    /// Checks that every coefficient is a nonnegative integer, i.e. that the
    /// series can be read as a table of dimensions.
    pub fn ensure_dimensions(&self) -> Result<()> {
        for (alpha, c) in &self.terms {
            if !c.is_integer() || c.is_negative() {
                return Err(Error::NotADimension { at: alpha.clone(), value: c.clone() });
            }
        }
        Ok(())
    }

    /// First multidegree (in graded order) where `self` and `other` differ.
    pub fn first_difference(&self, other: &Series) -> Option<(Multidegree, Rational, Rational)> {
        let mut keys: Vec<&Multidegree> = self.terms.keys().chain(other.terms.keys()).collect();
        keys.sort();
        keys.dedup();
        keys.into_iter().find_map(|alpha| {
            let a = self.coefficient(alpha);
            let b = other.coefficient(alpha);
            (a != b).then(|| (alpha.clone(), a, b))
        })
    }
}

impl Truncated for Series {
    fn zero_like(&self) -> Self {
        Series::zero(&self.space)
    }

    fn one_like(&self) -> Self {
        Series::one(&self.space)
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn truncation(&self) -> u32 {
        self.space.max_degree
    }

    fn mul_trunc(&self, rhs: &Self) -> Self {
        let max = self.space.max_degree;
        let mut out: BTreeMap<Multidegree, Rational> = BTreeMap::new();
        for (a, ca) in &self.terms {
            let budget = max - a.total();
            for (b, cb) in &rhs.terms {
                // Graded order: every later term is at least as heavy.
                if b.total() > budget {
                    break;
                }
                let prod = ca * cb;
                *out.entry(a.plus(b)).or_insert_with(Rational::zero) += prod;
            }
        }
        out.retain(|_, c| !c.is_zero());
        Series { space: self.space.clone(), terms: out }
    }

    fn add_scaled(&mut self, rhs: &Self, c: &Rational) {
        for (alpha, v) in &rhs.terms {
            self.accumulate(alpha.clone(), &(v * c));
        }
    }

    fn dilate(&self, m: u64) -> Self {
        let m = u32::try_from(m).unwrap_or(u32::MAX);
        let max = self.space.max_degree;
        let mut out = Series::zero(&self.space);
        for (alpha, c) in &self.terms {
            if u64::from(alpha.total()) * u64::from(m) > u64::from(max) {
                continue;
            }
            let flips = (u64::from(m) + 1) * u64::from(alpha.odd_part(&self.space.parities));
            let c = if flips % 2 == 1 { -c.clone() } else { c.clone() };
            out.terms.insert(alpha.scaled(m), c);
        }
        out
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (alpha, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}·t^{alpha}")?;
        }
        Ok(())
    }
}

/// `ch X = Σ s_i t_i`.
pub fn generator_character(spec: &GradingSpec) -> Series {
    let space = spec.space();
    let mut s = Series::zero(space);
    for (i, class) in spec.classes().iter().enumerate() {
        s.accumulate(Multidegree::unit(space.arity(), i), &Rational::from_integer(BigInt::from(class.multiplicity)));
    }
    s
}

/// Character of the free associative algebra on the generators,
/// `1 / (1 - ch X)`.
pub fn free_assoc_character(spec: &GradingSpec) -> Series {
    let space = spec.space();
    let f = Series::one(space).sub(&generator_character(spec)).expect("same space");
    f.inverse().expect("constant term is 1")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{multinomial, rational, rational_from_int};
    use alloc::vec;

    fn one_var(parity: Parity, n: u32) -> Arc<SeriesSpace> {
        Arc::new(SeriesSpace::new(vec![parity], n).unwrap())
    }

    fn uni(n: u32, coeffs: &[i64]) -> Series {
        Series::univariate(n, coeffs).unwrap()
    }

    #[test]
    fn product_of_conjugates() {
        let a = uni(6, &[1, 1]);
        let b = uni(6, &[1, -1]);
        assert_eq!(a.mul(&b).unwrap(), uni(6, &[1, 0, -1]));
        assert_eq!(a.mul(&Series::one(a.space())).unwrap(), a);
    }

    #[test]
    fn geometric_times_one_minus_t() {
        // 1/(1 - t) expanded by hand to degree 5.
        let geometric = uni(5, &[1, 1, 1, 1, 1, 1]);
        let one_minus_t = uni(5, &[1, -1]);
        assert_eq!(geometric.mul(&one_minus_t).unwrap(), Series::one(geometric.space()));
    }

    #[test]
    fn inverse_examples() {
        let f = uni(6, &[1, -2]);
        assert_eq!(f.inverse().unwrap(), uni(6, &[1, 2, 4, 8, 16, 32, 64]));
        let one = Series::one(f.space());
        assert_eq!(one.inverse().unwrap(), one);
        assert_eq!(Series::zero(f.space()).inverse(), Err(Error::NotInvertible));
    }

    #[test]
    fn inverse_counts_words_in_two_letters() {
        let space = Arc::new(SeriesSpace::new(vec![Parity::Even, Parity::Even], 5).unwrap());
        let f = Series::one(&space)
            .sub(&Series::variable(&space, 0).unwrap())
            .unwrap()
            .sub(&Series::variable(&space, 1).unwrap())
            .unwrap();
        let inv = f.inverse().unwrap();
        // Brute force: count words over {x, y} with a x's and b y's.
        for a in 0..=5u32 {
            for b in 0..=(5 - a) {
                let len = a + b;
                let count = (0u32..(1 << len)).filter(|w| w.count_ones() == b).count() as i64;
                assert_eq!(inv.coefficient(&Multidegree::from([a, b])), rational_from_int(count));
            }
        }
    }

    #[test]
    fn exp_log_examples() {
        let space = one_var(Parity::Even, 8);
        assert_eq!(Series::zero(&space).exp_z().unwrap(), Series::one(&space));
        assert_eq!(Series::one(&space).log_u().unwrap(), Series::zero(&space));
        let geometric = uni(8, &[1, 1, 1, 1, 1, 1, 1, 1, 1]);
        let log = geometric.log_u().unwrap();
        for n in 1..=8 {
            assert_eq!(log.coefficient(&Multidegree::from([n])), rational(1, n as i64));
        }
        assert_eq!(log.exp_z().unwrap(), geometric);
        assert_eq!(geometric.exp_z(), Err(Error::NonZeroConstantTerm));
        assert_eq!(log.log_u(), Err(Error::ConstantTermNotOne));
    }

    #[test]
    fn dilation_examples() {
        let t = Series::variable(&one_var(Parity::Even, 6), 0).unwrap();
        let t3 = Series::monomial(t.space(), Multidegree::from([3]), Rational::one()).unwrap();
        assert_eq!(t.twisted_dilate(3).unwrap(), t3);

        let u = Series::variable(&one_var(Parity::Odd, 6), 0).unwrap();
        let minus_u2 = Series::monomial(u.space(), Multidegree::from([2]), -Rational::one()).unwrap();
        assert_eq!(u.twisted_dilate(2).unwrap(), minus_u2);
        assert_eq!(u.twisted_dilate(3).unwrap(), Series::monomial(u.space(), Multidegree::from([3]), Rational::one()).unwrap());
        assert_eq!(u.twisted_dilate(0), Err(Error::ZeroArgument));
        // Dilation past the truncation vanishes.
        assert!(u.twisted_dilate(7).unwrap().is_zero());
    }

    fn example_spec(n: u32) -> GradingSpec {
        GradingSpec::from_classes(&[(1, Parity::Even), (2, Parity::Even), (1, Parity::Odd), (1, Parity::Odd)], n).unwrap()
    }

    #[test]
    fn dilated_generator_character_of_mixed_spec() {
        let spec = example_spec(6);
        let chx = generator_character(&spec);
        let want = Series::from_terms(
            spec.space(),
            [
                (Multidegree::from([2, 0, 0, 0]), rational_from_int(1)),
                (Multidegree::from([0, 2, 0, 0]), rational_from_int(2)),
                (Multidegree::from([0, 0, 2, 0]), rational_from_int(-1)),
                (Multidegree::from([0, 0, 0, 2]), rational_from_int(-1)),
            ],
        )
        .unwrap();
        assert_eq!(chx.twisted_dilate(2).unwrap(), want);
    }

    #[test]
    fn generator_characters() {
        let spec = GradingSpec::from_classes(&[(1, Parity::Even), (1, Parity::Even)], 4).unwrap();
        let s = generator_character(&spec);
        assert_eq!(s.len(), 2);
        assert_eq!(s.coefficient(&Multidegree::from([1, 0])), rational_from_int(1));

        let spec = example_spec(4);
        let s = generator_character(&spec);
        let got: Vec<_> = s.terms().map(|(_, c)| c.clone()).collect();
        // Graded-lex order lists t_4, t_3, t_2, t_1.
        assert_eq!(got, [1, 1, 2, 1].map(rational_from_int));

        let spec = GradingSpec::from_classes(&[(3, Parity::Odd)], 4).unwrap();
        assert_eq!(generator_character(&spec).coefficient(&Multidegree::from([1])), rational_from_int(3));
    }

    #[test]
    fn free_associative_characters() {
        let spec = GradingSpec::from_classes(&[(1, Parity::Even)], 7).unwrap();
        let f = free_assoc_character(&spec);
        for n in 0..=7 {
            assert_eq!(f.coefficient(&Multidegree::from([n])), rational_from_int(1));
        }

        let spec = GradingSpec::from_classes(&[(1, Parity::Even), (1, Parity::Even)], 7).unwrap();
        let f = free_assoc_character(&spec);
        for n in 0..=7u32 {
            let total = f.degree_slice(n).terms().fold(Rational::zero(), |acc, (_, c)| acc + c);
            assert_eq!(total, rational_from_int(1 << n));
        }

        let spec = GradingSpec::from_classes(&[(1, Parity::Even), (1, Parity::Odd)], 5).unwrap();
        let f = free_assoc_character(&spec);
        for a in 0..=5u32 {
            for b in 0..=(5 - a) {
                let want = Rational::from_integer(multinomial(&[a, b]).into());
                assert_eq!(f.coefficient(&Multidegree::from([a, b])), want);
            }
        }
    }

    #[test]
    fn mismatched_spaces() {
        let a = uni(4, &[1, 1]);
        let b = uni(5, &[1, 1]);
        assert_eq!(a.mul(&b), Err(Error::SpaceMismatch));
        assert_eq!(a.add(&b), Err(Error::SpaceMismatch));
    }

    #[test]
    fn truncation_drops_heavy_terms() {
        let s = Series::univariate(3, &[0, 0, 0, 0, 7]).unwrap();
        assert!(s.is_zero());
        let t = uni(3, &[0, 1]);
        let t2 = t.mul(&t).unwrap().mul(&t).unwrap().mul(&t).unwrap();
        assert!(t2.is_zero());
    }
}
