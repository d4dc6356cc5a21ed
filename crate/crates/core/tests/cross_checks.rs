//! Independent computations of the same dimensions must agree.

use colorwitt::group::{dim_by_group_degree, g_character_free};
use colorwitt::lyndon::{count_lyndon, count_lyndon_by_length, oracle_dim_super};
use colorwitt::operators::{free_restricted_character, free_super_character, homogeneous_character_p, op_e};
use colorwitt::schreier::{epsilon_univariate, schreier_generators_series};
use colorwitt::witt::{dim_multidegree, dim_multidegree_p, dim_total_p, dim_total_super, hilbert_series_super};
use colorwitt::{
    FiniteAbelianGroup, GeneratorClass, GradingSpec, GroupElement, Multidegree, Parity, Prime, Rational, Series,
};
use num_bigint::{BigInt, BigUint};
use proptest::prelude::*;

fn as_rational(d: &BigUint) -> Rational {
    Rational::from_integer(BigInt::from(d.clone()))
}

fn specs(max_r: usize, max_s: u32) -> Vec<Vec<(u32, Parity)>> {
    let mut out = vec![Vec::new()];
    let mut all = Vec::new();
    for _ in 0..max_r {
        let mut next = Vec::new();
        for prefix in &out {
            for s in 1..=max_s {
                for parity in [Parity::Even, Parity::Odd] {
                    let mut v: Vec<(u32, Parity)> = prefix.clone();
                    v.push((s, parity));
                    next.push(v);
                }
            }
        }
        all.extend(next.iter().cloned());
        out = next;
    }
    all
}

/// Möbius by trial division, kept separate from the library's.
fn naive_mobius(mut n: u64) -> i64 {
    let mut result = 1;
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            n /= d;
            if n % d == 0 {
                return 0;
            }
            result = -result;
        }
        d += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// `(1/n) Σ_{d|n} μ(d) r^{n/d}`.
fn necklace(r: u64, n: u64) -> u64 {
    let sum: i128 = (1..=n).filter(|d| n % d == 0).map(|d| naive_mobius(d) as i128 * (r as i128).pow((n / d) as u32)).sum();
    (sum / n as i128) as u64
}

#[test]
fn closed_form_matches_series_pipeline() {
    for classes in specs(3, 2) {
        let spec = GradingSpec::from_classes(&classes, 8).unwrap();
        let ch = free_super_character(&spec).unwrap();
        for n in 1..=8 {
            for alpha in Multidegree::all_of_total(spec.arity(), n) {
                let closed = dim_multidegree(&spec, &alpha).unwrap();
                assert_eq!(ch.coefficient(&alpha), as_rational(&closed), "{classes:?} at {alpha}");
            }
        }
    }
}

#[test]
fn multidegree_dims_sum_to_total() {
    for classes in specs(3, 2) {
        let spec = GradingSpec::from_classes(&classes, 8).unwrap();
        let (k, l) = spec.parity_counts();
        let hilbert = hilbert_series_super(k, l, 8).unwrap().univariate;
        for n in 1..=8 {
            let sum: BigUint = Multidegree::all_of_total(spec.arity(), n)
                .iter()
                .map(|alpha| dim_multidegree(&spec, alpha).unwrap())
                .sum();
            let total = dim_total_super(k, l, n).unwrap();
            assert_eq!(sum, total, "{classes:?} degree {n}");
            assert_eq!(hilbert.coefficient(&Multidegree::from([n])), as_rational(&total));
        }
    }
}

#[test]
fn restricted_closed_forms_match_series() {
    for p in [2, 3] {
        let p = Prime::new(p).unwrap();
        for r in 1..=3usize {
            for s in 1..=2 {
                let spec = GradingSpec::from_classes(&vec![(s, Parity::Even); r], 10).unwrap();
                let ch = free_restricted_character(&spec, p).unwrap();
                for n in 1..=10 {
                    let mut sum = BigUint::from(0u32);
                    for alpha in Multidegree::all_of_total(r, n) {
                        let d = dim_multidegree_p(&spec, &alpha, p).unwrap();
                        assert_eq!(ch.coefficient(&alpha), as_rational(&d), "p={p} r={r} s={s} {alpha}");
                        sum += d;
                    }
                    assert_eq!(sum, dim_total_p(r as u64 * u64::from(s), n, p).unwrap());
                    assert_eq!(ch.degree_slice(n), homogeneous_character_p(&spec, p, n).unwrap());
                }
            }
        }
    }
}

#[test]
fn classical_witt_is_lyndon_counting() {
    for r in 1..=3u64 {
        for n in 1..=10u32 {
            let witt = dim_total_super(r, 0, n).unwrap();
            assert_eq!(witt, BigUint::from(count_lyndon_by_length(r as u32, n).unwrap()), "r={r} n={n}");
        }
    }
}

#[test]
fn lyndon_counts_sum_to_necklace_values() {
    for r in 1..=3usize {
        let spec = GradingSpec::from_classes(&vec![(1, Parity::Even); r], 12).unwrap();
        for n in 1..=12 {
            let sum: u64 = Multidegree::all_of_total(r, n).iter().map(|a| count_lyndon(&spec, a).unwrap()).sum();
            assert_eq!(sum, necklace(r as u64, u64::from(n)), "r={r} n={n}");
        }
    }
}

#[test]
fn oracle_agrees_on_a_larger_spec() {
    let spec = GradingSpec::from_classes(&[(3, Parity::Odd), (1, Parity::Even)], 7).unwrap();
    for n in 1..=7 {
        for alpha in Multidegree::all_of_total(2, n) {
            assert_eq!(BigUint::from(oracle_dim_super(&spec, &alpha).unwrap()), dim_multidegree(&spec, &alpha).unwrap());
        }
    }
}

fn labelled(moduli: Vec<u32>, negatives: Vec<GroupElement>, labels: &[(&[u32], u32)], n: u32) -> GradingSpec {
    let group = FiniteAbelianGroup::new(moduli, negatives).unwrap();
    let classes = labels
        .iter()
        .map(|(g, s)| {
            let label = GroupElement::new(g.to_vec());
            GeneratorClass { multiplicity: *s, parity: group.parity(&label), label: Some(label) }
        })
        .collect();
    GradingSpec::with_group(group, classes, n).unwrap()
}

fn group_specs() -> Vec<GradingSpec> {
    vec![
        labelled(
            vec![2, 2],
            vec![GroupElement::from([0, 1]), GroupElement::from([1, 0])],
            &[(&[0, 0], 1), (&[1, 1], 2), (&[0, 1], 1), (&[1, 0], 1)],
            6,
        ),
        labelled(vec![3], vec![], &[(&[1], 2), (&[2], 1)], 7),
        labelled(
            vec![4],
            vec![GroupElement::from([1]), GroupElement::from([3])],
            &[(&[1], 1), (&[2], 1), (&[3], 2)],
            6,
        ),
    ]
}

#[test]
fn group_degrees_partition_each_degree() {
    for spec in group_specs() {
        let (k, l) = spec.parity_counts();
        let group = spec.group().unwrap().clone();
        for n in 1..=spec.max_degree() {
            let sum: BigUint = group.elements().iter().map(|g| dim_by_group_degree(&spec, n, g, None).unwrap()).sum();
            assert_eq!(sum, dim_total_super(k, l, n).unwrap());
        }
    }
}

#[test]
fn forgetting_labels_recovers_the_super_character() {
    for spec in group_specs() {
        let ch = g_character_free(&spec).unwrap();
        assert_eq!(ch.forget_group(), free_super_character(&spec).unwrap());
        for (alpha, g, _) in ch.terms() {
            assert_eq!(spec.group_degree(alpha).as_ref(), Some(g));
        }
    }
}

fn univariate_strategy() -> impl Strategy<Value = (u32, Vec<i64>)> {
    (1u32..=10).prop_flat_map(|n| (Just(n), prop::collection::vec(0i64..=3, 1..=(n as usize + 1))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn epsilon_is_e_on_even_univariate_input((n, mut coeffs) in univariate_strategy()) {
        coeffs[0] = 0;
        let f = Series::univariate(n, &coeffs).unwrap();
        prop_assert_eq!(epsilon_univariate(&f).unwrap(), op_e(&f).unwrap());
    }

    #[test]
    fn quotient_by_everything_keeps_generators((n, mut coeffs) in univariate_strategy()) {
        coeffs[0] = 0;
        let hx = Series::univariate(n, &coeffs).unwrap();
        let zero = Series::univariate(n, &[]).unwrap();
        prop_assert_eq!(schreier_generators_series(&hx, &zero).unwrap(), hx);
    }
}
