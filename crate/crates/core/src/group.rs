//! Finite abelian grading groups, series with group-algebra coefficients and
//! the `E_G`/`L_G` operator pair.
//!
//! A [`GroupSeries`] is an element of `Q[G][[t_1, …, t_r]]`; the coefficient
//! of `t^α` is a formal combination `Σ r_g [g]`. Terms are keyed by the pair
//! `(α, g)`.

use alloc::collections::btree_map::Entry;
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::arith::{mobius, Prime, Rational};
use crate::series::{same_space, GradingSpec, Multidegree, Parity, Series, SeriesSpace};
use crate::truncated::{self, Truncated};
use crate::{witt, Error, Result};

/// Largest group accepted; parity validation walks every element.
pub const MAX_GROUP_ORDER: u64 = 1 << 20;

/// Element of `Z_{m_1} ⊕ ⋯ ⊕ Z_{m_k}` as reduced residues.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement(Vec<u32>);

impl GroupElement {
    pub fn new(residues: Vec<u32>) -> Self {
        GroupElement(residues)
    }

    pub fn residues(&self) -> &[u32] {
        &self.0
    }
}

impl From<Vec<u32>> for GroupElement {
    fn from(residues: Vec<u32>) -> Self {
        GroupElement(residues)
    }
}

impl<const N: usize> From<[u32; N]> for GroupElement {
    fn from(residues: [u32; N]) -> Self {
        GroupElement(residues.to_vec())
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, r) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{r}")?;
        }
        f.write_str("]")
    }
}

/// Product of cyclic groups with a parity partition `G = G_+ ∪ G_-`.
///
/// The parity map `ν: G → {±1}` must be a homomorphism, so `G_+` is either
/// all of `G` or a subgroup of index two.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteAbelianGroup {
    moduli: Vec<u32>,
    negatives: BTreeSet<GroupElement>,
}

impl FiniteAbelianGroup {
    pub fn new(moduli: Vec<u32>, negatives: impl IntoIterator<Item = GroupElement>) -> Result<Self> {
        if let Some(m) = moduli.iter().find(|&&m| m < 2) {
            return Err(Error::InvalidGroup(format!("cyclic factor of order {m}")));
        }
        let order = moduli.iter().try_fold(1u64, |acc, &m| acc.checked_mul(u64::from(m)));
        match order {
            Some(order) if order <= MAX_GROUP_ORDER => {}
            _ => return Err(Error::InvalidGroup(format!("order exceeds {MAX_GROUP_ORDER}"))),
        }
        let group = FiniteAbelianGroup { moduli, negatives: BTreeSet::new() };
        let mut set = BTreeSet::new();
        for g in negatives {
            group.check(&g)?;
            set.insert(g);
        }
        let group = FiniteAbelianGroup { negatives: set, ..group };
        group.check_parity_homomorphism()?;
        Ok(group)
    }

    /// A group with every element even.
    pub fn even(moduli: Vec<u32>) -> Result<Self> {
        Self::new(moduli, [])
    }

    fn check_parity_homomorphism(&self) -> Result<()> {
        // ν is determined by its values on the cyclic generators e_i, and
        // ν(e_i)^{m_i} = 1 forces ν(e_i) = +1 when m_i is odd.
        let basis_odd: Vec<bool> = (0..self.moduli.len())
            .map(|i| {
                let mut e = alloc::vec![0; self.moduli.len()];
                e[i] = 1;
                self.negatives.contains(&GroupElement(e))
            })
            .collect();
        for (i, &odd) in basis_odd.iter().enumerate() {
            if odd && self.moduli[i] % 2 == 1 {
                return Err(Error::InvalidGroup(String::from("parity map is not a homomorphism")));
            }
        }
        for g in self.elements() {
            let flips: u32 = g.0.iter().zip(&basis_odd).filter(|(_, odd)| **odd).map(|(r, _)| *r).sum();
            let expected_odd = flips % 2 == 1;
            if self.negatives.contains(&g) != expected_odd {
                return Err(Error::InvalidGroup(String::from("parity map is not a homomorphism")));
            }
        }
        Ok(())
    }

    pub fn moduli(&self) -> &[u32] {
        &self.moduli
    }

    pub fn negatives(&self) -> impl Iterator<Item = &GroupElement> {
        self.negatives.iter()
    }

    pub fn order(&self) -> u64 {
        self.moduli.iter().map(|&m| u64::from(m)).product()
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement(alloc::vec![0; self.moduli.len()])
    }

    pub fn check(&self, g: &GroupElement) -> Result<()> {
        if g.0.len() != self.moduli.len() || g.0.iter().zip(&self.moduli).any(|(r, m)| r >= m) {
            return Err(Error::NotAGroupElement(format!("{g}")));
        }
        Ok(())
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        GroupElement(a.0.iter().zip(&b.0).zip(&self.moduli).map(|((x, y), m)| (x + y) % m).collect())
    }

    /// `g^m`, written additively as `m·g`.
    pub fn power(&self, g: &GroupElement, m: u64) -> GroupElement {
        GroupElement(
            g.0.iter().zip(&self.moduli).map(|(&r, &q)| ((u64::from(r) * (m % u64::from(q))) % u64::from(q)) as u32).collect(),
        )
    }

    pub fn parity(&self, g: &GroupElement) -> Parity {
        if self.negatives.contains(g) {
            Parity::Odd
        } else {
            Parity::Even
        }
    }

    /// All elements in lexicographic order of residues.
    pub fn elements(&self) -> Vec<GroupElement> {
        let mut out = alloc::vec![self.identity()];
        for (i, &m) in self.moduli.iter().enumerate() {
            let mut next = Vec::with_capacity(out.len() * m as usize);
            for g in &out {
                for r in 0..m {
                    let mut h = g.clone();
                    h.0[i] = r;
                    next.push(h);
                }
            }
            out = next;
        }
        out.sort();
        out
    }
}

type GroupKey = (Multidegree, GroupElement);

#[derive(Clone, Debug)]
pub struct GroupSeries {
    space: Arc<SeriesSpace>,
    group: Arc<FiniteAbelianGroup>,
    terms: BTreeMap<GroupKey, Rational>,
}

impl PartialEq for GroupSeries {
    fn eq(&self, other: &Self) -> bool {
        same_space(&self.space, &other.space)
            && (Arc::ptr_eq(&self.group, &other.group) || self.group == other.group)
            && self.terms == other.terms
    }
}

impl Eq for GroupSeries {}

impl GroupSeries {
    pub fn zero(space: &Arc<SeriesSpace>, group: &Arc<FiniteAbelianGroup>) -> Self {
        GroupSeries { space: space.clone(), group: group.clone(), terms: BTreeMap::new() }
    }

    /// `1 = [e]·t^0`.
    pub fn one(space: &Arc<SeriesSpace>, group: &Arc<FiniteAbelianGroup>) -> Self {
        let mut s = Self::zero(space, group);
        s.accumulate((Multidegree::zero(space.arity()), group.identity()), &Rational::one());
        s
    }

    /// `c·[g]·t^α`.
    pub fn monomial(
        space: &Arc<SeriesSpace>,
        group: &Arc<FiniteAbelianGroup>,
        alpha: Multidegree,
        g: GroupElement,
        c: Rational,
    ) -> Result<Self> {
        Self::from_terms(space, group, [(alpha, g, c)])
    }

    pub fn from_terms(
        space: &Arc<SeriesSpace>,
        group: &Arc<FiniteAbelianGroup>,
        terms: impl IntoIterator<Item = (Multidegree, GroupElement, Rational)>,
    ) -> Result<Self> {
        let mut s = Self::zero(space, group);
        for (alpha, g, c) in terms {
            if alpha.arity() != space.arity() {
                return Err(Error::ArityMismatch { expected: space.arity(), found: alpha.arity() });
            }
            group.check(&g)?;
            s.accumulate((alpha, g), &c);
        }
        Ok(s)
    }

    pub fn space(&self) -> &Arc<SeriesSpace> {
        &self.space
    }

    pub fn group(&self) -> &Arc<FiniteAbelianGroup> {
        &self.group
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Multidegree, &GroupElement, &Rational)> {
        self.terms.iter().map(|((a, g), c)| (a, g, c))
    }

    pub fn coefficient(&self, alpha: &Multidegree, g: &GroupElement) -> Rational {
        self.terms.get(&(alpha.clone(), g.clone())).cloned().unwrap_or_else(Rational::zero)
    }

    fn constant_part(&self) -> Vec<(&GroupElement, &Rational)> {
        self.terms.iter().filter(|((a, _), _)| a.is_zero()).map(|((_, g), c)| (g, c)).collect()
    }

    fn check(&self, other: &GroupSeries) -> Result<()> {
        if same_space(&self.space, &other.space) && (Arc::ptr_eq(&self.group, &other.group) || self.group == other.group) {
            Ok(())
        } else {
            Err(Error::SpaceMismatch)
        }
    }

    fn accumulate(&mut self, key: GroupKey, c: &Rational) {
        if c.is_zero() || key.0.total() > self.space.max_degree() {
            return;
        }
        match self.terms.entry(key) {
            Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &GroupSeries) -> Result<GroupSeries> {
        self.check(other)?;
        let mut out = self.clone();
        out.add_scaled(other, &Rational::one());
        Ok(out)
    }

    pub fn sub(&self, other: &GroupSeries) -> Result<GroupSeries> {
        self.check(other)?;
        let mut out = self.clone();
        out.add_scaled(other, &-Rational::one());
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> GroupSeries {
        let mut out = Self::zero(&self.space, &self.group);
        out.add_scaled(self, c);
        out
    }

    /// Cauchy product with group-algebra convolution of the coefficients.
    pub fn group_mul(&self, other: &GroupSeries) -> Result<GroupSeries> {
        self.check(other)?;
        Ok(self.mul_trunc(other))
    }

    /// `r·[g]·t^α ↦ ν(g)^{m+1} r·[g^m]·t^{mα}`.
    pub fn group_twisted_dilate(&self, m: u64) -> Result<GroupSeries> {
        if m == 0 {
            return Err(Error::ZeroArgument);
        }
        Ok(self.dilate(m))
    }

    /// Sums coefficients over `G`, mapping `Q[G][[t]]` onto `Q[[t]]`.
    pub fn forget_group(&self) -> Series {
        Series::from_terms(&self.space, self.terms.iter().map(|((a, _), c)| (a.clone(), c.clone())))
            .expect("same arity")
    }

    /// Color super dimension at `α`: `Σ_g ν(g)·c_{α,g}·[g]`.
    pub fn color_super_dimension(&self, alpha: &Multidegree) -> Vec<(GroupElement, Rational)> {
        self.terms
            .iter()
            .filter(|((a, _), _)| a == alpha)
            .map(|((_, g), c)| (g.clone(), c * BigInt::from(self.group.parity(g).sign())))
            .collect()
    }
}

impl Truncated for GroupSeries {
    fn zero_like(&self) -> Self {
        GroupSeries::zero(&self.space, &self.group)
    }

    fn one_like(&self) -> Self {
        GroupSeries::one(&self.space, &self.group)
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn truncation(&self) -> u32 {
        self.space.max_degree()
    }

    fn mul_trunc(&self, rhs: &Self) -> Self {
        let max = self.space.max_degree();
        let mut out: BTreeMap<GroupKey, Rational> = BTreeMap::new();
        for ((a, g), ca) in &self.terms {
            let budget = max - a.total();
            for ((b, h), cb) in &rhs.terms {
                if b.total() > budget {
                    break;
                }
                *out.entry((a.plus(b), self.group.add(g, h))).or_insert_with(Rational::zero) += ca * cb;
            }
        }
        out.retain(|_, c| !c.is_zero());
        GroupSeries { space: self.space.clone(), group: self.group.clone(), terms: out }
    }

    fn add_scaled(&mut self, rhs: &Self, c: &Rational) {
        for (key, v) in &rhs.terms {
            let entry = self.terms.entry(key.clone()).or_insert_with(Rational::zero);
            *entry += v * c;
        }
        self.terms.retain(|_, v| !v.is_zero());
    }

    fn dilate(&self, m: u64) -> Self {
        let max = u64::from(self.space.max_degree());
        let mut out = self.zero_like();
        for ((alpha, g), c) in &self.terms {
            if u64::from(alpha.total()) * m > max {
                continue;
            }
            let flip = self.group.parity(g) == Parity::Odd && (m + 1) % 2 == 1;
            let c = if flip { -c.clone() } else { c.clone() };
            // Distinct g can share g^m, so terms must be added, not replaced.
            out.accumulate((alpha.scaled(m as u32), self.group.power(g, m)), &c);
        }
        out
    }
}

/// `E_G(f) = exp(Σ_m f^{[m]}/m)`; needs a zero constant term.
pub fn op_eg(f: &GroupSeries) -> Result<GroupSeries> {
    if !f.constant_part().is_empty() {
        return Err(Error::NonZeroConstantTerm);
    }
    Ok(truncated::exp(&truncated::dilation_sum(f, |_| 1)))
}

/// `L_G(f) = Σ_n (μ(n)/n) ln f^{[n]}`; needs constant term `[e]`.
pub fn op_lg(f: &GroupSeries) -> Result<GroupSeries> {
    let constant = f.constant_part();
    let identity = f.group.identity();
    if constant.len() != 1 || *constant[0].0 != identity || !constant[0].1.is_one() {
        return Err(Error::ConstantTermNotOne);
    }
    Ok(truncated::log_dilation_sum(f, |n| mobius(n).expect("n >= 1")))
}

/// `Σ_i s_i [g_i] t_i` for a labelled spec.
pub fn group_generator_character(spec: &GradingSpec) -> Result<GroupSeries> {
    let group = spec.group().ok_or(Error::MissingGroupLabel { class: 0 })?;
    let arity = spec.arity();
    let terms = spec
        .classes()
        .iter()
        .enumerate()
        .map(|(i, class)| {
            let label = class.label.clone().ok_or(Error::MissingGroupLabel { class: i })?;
            Ok((Multidegree::unit(arity, i), label, Rational::from_integer(BigInt::from(class.multiplicity))))
        })
        .collect::<Result<Vec<_>>>()?;
    GroupSeries::from_terms(spec.space(), group, terms)
}

/// G-character of the free color Lie superalgebra:
/// `L_G(1 / (1 - Σ s_i [g_i] t_i))`.
pub fn g_character_free(spec: &GradingSpec) -> Result<GroupSeries> {
    let chx = group_generator_character(spec)?;
    // 1/(1 - chX) = Σ_k chX^k, finite because chX has no constant term.
    let mut geometric = chx.one_like();
    let mut power = chx.one_like();
    loop {
        power = power.mul_trunc(&chx);
        if power.is_zero() {
            break;
        }
        geometric.add_scaled(&power, &Rational::one());
    }
    let ch = op_lg(&geometric)?;
    for (alpha, _, c) in ch.terms() {
        if !c.is_integer() || *c < Rational::zero() {
            return Err(Error::NotADimension { at: alpha.clone(), value: c.clone() });
        }
    }
    Ok(ch)
}

/// All multidegrees `α` with `|α| = n` and `Π g_i^{α_i} = g`.
pub fn group_fiber(spec: &GradingSpec, n: u32, g: &GroupElement) -> Result<Vec<Multidegree>> {
    let group = spec.group().ok_or(Error::MissingGroupLabel { class: 0 })?;
    group.check(g)?;
    Ok(Multidegree::all_of_total(spec.arity(), n)
        .into_iter()
        .filter(|alpha| spec.group_degree(alpha).as_ref() == Some(g))
        .collect())
}

/// `dim L^{(n,g)}`: the sum of closed-form `dim L_α` over the whole fiber of
/// `(n, g)`. With `p` the restricted dimensions are summed instead.
pub fn dim_by_group_degree(spec: &GradingSpec, n: u32, g: &GroupElement, p: Option<Prime>) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::ZeroArgument);
    }
    if n > spec.max_degree() {
        return Err(Error::DegreeOutOfRange { degree: n, max: spec.max_degree() });
    }
    if p.is_some() && !spec.all_even() {
        return Err(Error::OddClassPresent);
    }
    let mut total = BigUint::zero();
    for alpha in group_fiber(spec, n, g)? {
        total += match p {
            Some(p) => witt::dim_multidegree_p(spec, &alpha, p)?,
            None => witt::dim_multidegree(spec, &alpha)?,
        };
    }
    Ok(total)
}
