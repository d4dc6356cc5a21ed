//! Invariant suites behind `colorwitt verify`.
//!
//! Each suite stops at the first failing check and reports it. Random
//! inputs come from a ChaCha stream keyed by the seed, so a failure can be
//! replayed exactly.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use colorwitt::arith::{divisors, mobius, mobius_p, one_p};
use colorwitt::group::{op_eg, op_lg};
use colorwitt::lyndon::{count_lyndon, oracle_dim_restricted, oracle_dim_restricted_multidegree};
use colorwitt::operators::{op_e, op_ep, op_l, op_lp, pbw_verify, pbw_verify_p};
use colorwitt::witt::{dim_multidegree, dim_multidegree_p, dim_total_p};
use colorwitt::{
    Error, FiniteAbelianGroup, GradingSpec, GroupElement, GroupSeries, Multidegree, Parity, Prime, Rational, Series,
    SeriesSpace, VerificationReport,
};
use num_bigint::{BigInt, BigUint};
use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    /// E(ch L) = ch U on random mixed-parity specs.
    Pbw,
    /// E_p(ch L) = ch U for p = 2, 3, 5 on even specs.
    PbwP,
    /// Closed-form dimensions against Lyndon word counts.
    Oracle,
    /// Möbius-type sums over divisors.
    Mobius,
    /// L∘E, L_p∘E_p and L_G∘E_G round trips on random series.
    Operators,
}

impl Suite {
    pub fn default_max_degree(self) -> u32 {
        match self {
            Suite::Pbw | Suite::PbwP => 10,
            Suite::Oracle | Suite::Operators => 8,
            Suite::Mobius => 500,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Pbw => "pbw",
            Suite::PbwP => "pbw-p",
            Suite::Oracle => "oracle",
            Suite::Mobius => "mobius",
            Suite::Operators => "operators",
        })
    }
}

/// Outcome of one suite run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub max_degree: u32,
    pub checks: u64,
    pub counterexample: Option<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

struct Tally {
    checks: u64,
    failure: Option<String>,
}

impl Tally {
    fn new() -> Self {
        Tally { checks: 0, failure: None }
    }

    /// Records one check; returns `false` once a failure is recorded.
    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) -> bool {
        self.checks += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(describe());
        }
        self.failure.is_none()
    }

    /// A non-integral dimension is a failed check, anything else is an error.
    fn absorb<T>(&mut self, result: Result<T, Error>, context: impl FnOnce() -> String) -> Result<Option<T>, Error> {
        match result {
            Ok(v) => Ok(Some(v)),
            Err(e @ Error::NotADimension { .. }) => {
                self.check(false, || format!("{}: {e}", context()));
                Ok(None)
            }
            Err(e) => Err(e),
        }
    }
}

pub fn run_suite(suite: Suite, seed: u64, max_degree: Option<u32>) -> Result<SuiteReport, Error> {
    let max_degree = max_degree.unwrap_or(suite.default_max_degree());
    if max_degree == 0 {
        return Err(Error::ZeroTruncation);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut tally = Tally::new();
    match suite {
        Suite::Pbw => pbw_suite(&mut rng, max_degree, &mut tally)?,
        Suite::PbwP => pbw_p_suite(&mut rng, max_degree, &mut tally)?,
        Suite::Oracle => oracle_suite(max_degree, &mut tally)?,
        Suite::Mobius => mobius_suite(max_degree, &mut tally)?,
        Suite::Operators => operators_suite(&mut rng, max_degree, &mut tally)?,
    }
    Ok(SuiteReport { suite, max_degree, checks: tally.checks, counterexample: tally.failure })
}

fn describe_spec(spec: &GradingSpec) -> String {
    let classes: Vec<String> = spec
        .classes()
        .iter()
        .map(|c| {
            let parity = if c.parity == Parity::Even { "even" } else { "odd" };
            format!("{}x{parity}", c.multiplicity)
        })
        .collect();
    format!("[{}]", classes.join(", "))
}

fn describe_report(spec: &GradingSpec, report: &VerificationReport) -> String {
    match &report.mismatch {
        Some(m) => format!(
            "spec {}: coefficient at {} is {} on the Lie side, {} on the associative side",
            describe_spec(spec),
            m.multidegree,
            m.actual,
            m.expected
        ),
        None => format!("spec {}: passed", describe_spec(spec)),
    }
}

/// Random spec with `r ≤ max_classes` classes of multiplicity at most
/// `max_mult`.
pub fn random_spec(
    rng: &mut impl Rng,
    max_classes: usize,
    max_mult: u32,
    mixed: bool,
    max_degree: u32,
) -> Result<GradingSpec, Error> {
    let r = rng.random_range(1..=max_classes);
    let classes: Vec<(u32, Parity)> = (0..r)
        .map(|_| {
            let parity = if mixed && rng.random_bool(0.5) { Parity::Odd } else { Parity::Even };
            (rng.random_range(1..=max_mult), parity)
        })
        .collect();
    GradingSpec::from_classes(&classes, max_degree)
}

/// Twenty random specs with up to four classes of multiplicity up to three.
fn pbw_suite(rng: &mut ChaCha8Rng, n: u32, tally: &mut Tally) -> Result<(), Error> {
    for _ in 0..20 {
        let spec = random_spec(rng, 4, 3, true, n)?;
        let Some(report) = tally.absorb(pbw_verify(&spec), || describe_spec(&spec))? else {
            return Ok(());
        };
        if !tally.check(report.passed(), || describe_report(&spec, &report)) {
            return Ok(());
        }
    }
    Ok(())
}

/// For each p in {2, 3, 5} and each r ≤ 3, one even spec with random
/// multiplicities.
fn pbw_p_suite(rng: &mut ChaCha8Rng, n: u32, tally: &mut Tally) -> Result<(), Error> {
    for p in [2, 3, 5] {
        let p = Prime::new(p)?;
        for r in 1..=3 {
            let classes: Vec<(u32, Parity)> = (0..r).map(|_| (rng.random_range(1..=3), Parity::Even)).collect();
            let spec = GradingSpec::from_classes(&classes, n)?;
            let Some(report) = tally.absorb(pbw_verify_p(&spec, p), || format!("p = {p}, {}", describe_spec(&spec)))?
            else {
                return Ok(());
            };
            if !tally.check(report.passed(), || format!("p = {p}, {}", describe_report(&spec, &report))) {
                return Ok(());
            }
        }
    }
    Ok(())
}

/// Every multiplicity vector in `{1..=max}^r`.
pub fn multiplicity_vectors(r: usize, max: u32) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..r {
        out = out.into_iter().flat_map(|v| (1..=max).map(move |s| [v.clone(), vec![s]].concat())).collect();
    }
    out
}

/// Every parity assignment of `r` classes.
pub fn parity_vectors(r: usize) -> Vec<Vec<Parity>> {
    (0..1u32 << r)
        .map(|mask| (0..r).map(|i| if mask >> i & 1 == 1 { Parity::Odd } else { Parity::Even }).collect())
        .collect()
}

/// Super-Lyndon oracle with Lyndon counts shared across parity
/// assignments: the count of Lyndon words ignores parity.
pub struct CachedOracle {
    lyndon: HashMap<(Vec<u32>, Multidegree), u64>,
}

impl CachedOracle {
    pub fn new() -> Self {
        CachedOracle { lyndon: HashMap::new() }
    }

    fn lyndon(&mut self, multiplicities: &[u32], alpha: &Multidegree) -> Result<u64, Error> {
        let key = (multiplicities.to_vec(), alpha.clone());
        if let Some(&c) = self.lyndon.get(&key) {
            return Ok(c);
        }
        let even: Vec<(u32, Parity)> = multiplicities.iter().map(|&s| (s, Parity::Even)).collect();
        let spec = GradingSpec::from_classes(&even, alpha.total().max(1))?;
        let c = count_lyndon(&spec, alpha)?;
        self.lyndon.insert(key, c);
        Ok(c)
    }

    /// Lyndon words of multidegree `α` plus squares of odd Lyndon words of
    /// multidegree `α/2`.
    pub fn dim_super(&mut self, spec: &GradingSpec, alpha: &Multidegree) -> Result<u64, Error> {
        let multiplicities: Vec<u32> = spec.multiplicities().collect();
        let mut dim = self.lyndon(&multiplicities, alpha)?;
        if let Some(half) = alpha.divided(2) {
            if !half.is_zero() && half.parity(spec.parities()) == Parity::Odd {
                dim += self.lyndon(&multiplicities, &half)?;
            }
        }
        Ok(dim)
    }
}

impl Default for CachedOracle {
    fn default() -> Self {
        Self::new()
    }
}

/// Super case over every spec with r ≤ 3, s_i ≤ 2 and every parity
/// assignment, then the restricted case for r ≤ 3 and p ∈ {2, 3}.
fn oracle_suite(n: u32, tally: &mut Tally) -> Result<(), Error> {
    let mut oracle = CachedOracle::new();
    for r in 1..=3 {
        for multiplicities in multiplicity_vectors(r, 2) {
            for parities in parity_vectors(r) {
                let classes: Vec<(u32, Parity)> = multiplicities.iter().copied().zip(parities.iter().copied()).collect();
                let spec = GradingSpec::from_classes(&classes, n)?;
                for total in 1..=n {
                    for alpha in Multidegree::all_of_total(r, total) {
                        let Some(closed) = tally.absorb(dim_multidegree(&spec, &alpha), || describe_spec(&spec))? else {
                            return Ok(());
                        };
                        let expected = BigUint::from(oracle.dim_super(&spec, &alpha)?);
                        let ok = tally.check(closed == expected, || {
                            format!("spec {}: dim at {alpha} is {closed} by formula, {expected} by Lyndon words", describe_spec(&spec))
                        });
                        if !ok {
                            return Ok(());
                        }
                    }
                }
            }
        }
    }
    for p in [2, 3] {
        let p = Prime::new(p)?;
        for r in 1..=3u32 {
            let spec = GradingSpec::from_classes(&vec![(1, Parity::Even); r as usize], n)?;
            for total in 1..=n {
                let closed = dim_total_p(u64::from(r), total, p)?;
                let expected = BigUint::from(oracle_dim_restricted(r, total, p)?);
                let ok = tally.check(closed == expected, || {
                    format!("restricted p = {p}, r = {r}: dim in degree {total} is {closed} by formula, {expected} by words")
                });
                if !ok {
                    return Ok(());
                }
                for alpha in Multidegree::all_of_total(r as usize, total) {
                    let closed = dim_multidegree_p(&spec, &alpha, p)?;
                    let expected = BigUint::from(oracle_dim_restricted_multidegree(&spec, &alpha, p)?);
                    let ok = tally.check(closed == expected, || {
                        format!("restricted p = {p}: dim at {alpha} is {closed} by formula, {expected} by words")
                    });
                    if !ok {
                        return Ok(());
                    }
                }
            }
        }
    }
    Ok(())
}

/// `Σ_{d|n} μ(d) = 0` and `Σ_{ab=n} 1_p(b) μ_p(a) = 0` for `2 ≤ n ≤ N`.
fn mobius_suite(n_max: u32, tally: &mut Tally) -> Result<(), Error> {
    for n in 2..=u64::from(n_max) {
        let ds = divisors(n)?;
        let plain: i64 = ds.iter().map(|&d| mobius(d)).sum::<Result<i64, _>>()?;
        if !tally.check(plain == 0, || format!("sum of mu(d) over d | {n} is {plain}")) {
            return Ok(());
        }
        for p in [2, 3, 5, 7] {
            let p = Prime::new(p)?;
            let mut sum = 0;
            for &a in &ds {
                sum += mobius_p(a, p)? * one_p(n / a, p)?;
            }
            if !tally.check(sum == 0, || format!("p = {p}: sum of 1_p(b) mu_p(a) over ab = {n} is {sum}")) {
                return Ok(());
            }
        }
    }
    Ok(())
}

fn random_alpha(rng: &mut impl Rng, arity: usize, max_degree: u32) -> Multidegree {
    let total = rng.random_range(1..=max_degree);
    let mut exps = vec![0u32; arity];
    for _ in 0..total {
        exps[rng.random_range(0..arity)] += 1;
    }
    Multidegree::new(exps)
}

fn random_rational(rng: &mut impl Rng) -> Rational {
    let mut num = 0;
    while num == 0 {
        num = rng.random_range(-3i64..=3);
    }
    Rational::new(BigInt::from(num), BigInt::from(rng.random_range(1i64..=3)))
}

/// A sparse series with zero constant term: up to five random terms.
pub fn random_series(rng: &mut impl Rng, space: &Arc<SeriesSpace>) -> Result<Series, Error> {
    let count = rng.random_range(1..=5);
    let terms: Vec<(Multidegree, Rational)> =
        (0..count).map(|_| (random_alpha(rng, space.arity(), space.max_degree()), random_rational(rng))).collect();
    Series::from_terms(space, terms)
}

/// `Z_{m_1} ⊕ ⋯` with up to two factors of order 2 to 4 and a random
/// parity homomorphism.
pub fn random_group(rng: &mut impl Rng) -> Result<FiniteAbelianGroup, Error> {
    let factors = rng.random_range(1..=2);
    let moduli: Vec<u32> = (0..factors).map(|_| rng.random_range(2..=4)).collect();
    // ν sends the generator of an even-order factor to ±1 at random.
    let odd_generators: Vec<bool> = moduli.iter().map(|m| m % 2 == 0 && rng.random_bool(0.5)).collect();
    let even = FiniteAbelianGroup::even(moduli.clone())?;
    let negatives: Vec<GroupElement> = even
        .elements()
        .into_iter()
        .filter(|g| g.residues().iter().zip(&odd_generators).filter(|(&r, &odd)| odd && r % 2 == 1).count() % 2 == 1)
        .collect();
    FiniteAbelianGroup::new(moduli, negatives)
}

pub fn random_group_series(
    rng: &mut impl Rng,
    space: &Arc<SeriesSpace>,
    group: &Arc<FiniteAbelianGroup>,
) -> Result<GroupSeries, Error> {
    let elements = group.elements();
    let count = rng.random_range(1..=5);
    let terms: Vec<(Multidegree, GroupElement, Rational)> = (0..count)
        .map(|_| {
            let alpha = random_alpha(rng, space.arity(), space.max_degree());
            let g = elements.choose(rng).expect("groups are nonempty").clone();
            (alpha, g, random_rational(rng))
        })
        .collect();
    GroupSeries::from_terms(space, group, terms)
}

fn random_space(rng: &mut impl Rng, mixed: bool, max_degree: u32) -> Result<Arc<SeriesSpace>, Error> {
    let r = rng.random_range(1..=3);
    let parities = (0..r).map(|_| if mixed && rng.random_bool(0.5) { Parity::Odd } else { Parity::Even }).collect();
    Ok(Arc::new(SeriesSpace::new(parities, max_degree)?))
}

fn describe_group_series(f: &GroupSeries) -> String {
    if f.is_zero() {
        return "0".into();
    }
    f.terms().map(|(alpha, g, c)| format!("{c}·{g}·t^{alpha}")).collect::<Vec<_>>().join(" + ")
}

/// Fifty random inputs for each of the three operator pairs.
fn operators_suite(rng: &mut ChaCha8Rng, n: u32, tally: &mut Tally) -> Result<(), Error> {
    for _ in 0..50 {
        let space = random_space(rng, true, n)?;
        let f = random_series(rng, &space)?;
        let back = op_l(&op_e(&f)?)?;
        if !tally.check(back == f, || format!("L(E(f)) != f for f = {f}; got {back}")) {
            return Ok(());
        }
    }
    for _ in 0..50 {
        let p = Prime::new(*[2, 3, 5].choose(rng).expect("nonempty"))?;
        let space = random_space(rng, false, n)?;
        let f = random_series(rng, &space)?;
        let back = op_lp(&op_ep(&f, p)?, p)?;
        if !tally.check(back == f, || format!("p = {p}: L_p(E_p(f)) != f for f = {f}; got {back}")) {
            return Ok(());
        }
    }
    for _ in 0..50 {
        let group = Arc::new(random_group(rng)?);
        let space = random_space(rng, false, n)?;
        let f = random_group_series(rng, &space, &group)?;
        let back = op_lg(&op_eg(&f)?)?;
        let ok = tally.check(back == f, || {
            format!(
                "L_G(E_G(f)) != f over moduli {:?} with negatives {:?}: f = {}; got {}",
                group.moduli(),
                group.negatives().map(|g| g.to_string()).collect::<Vec<_>>(),
                describe_group_series(&f),
                describe_group_series(&back)
            )
        });
        if !ok {
            return Ok(());
        }
    }
    Ok(())
}
