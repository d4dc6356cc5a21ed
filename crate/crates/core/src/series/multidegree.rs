use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use super::Parity;

/// Exponent vector `α ∈ N_0^r`, one entry per generator class.
///
/// Ordered by total degree first and lexicographically within a degree, so a
/// `BTreeMap` keyed by multidegrees iterates degree by degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Multidegree {
    exponents: Vec<u32>,
    total: u32,
}

impl Multidegree {
    pub fn new(exponents: Vec<u32>) -> Self {
        let total = exponents.iter().sum();
        Multidegree { exponents, total }
    }

    pub fn zero(arity: usize) -> Self {
        Multidegree { exponents: alloc::vec![0; arity], total: 0 }
    }

    /// The weight `λ_i` of a generator in class `i`.
    pub fn unit(arity: usize, i: usize) -> Self {
        let mut exponents = alloc::vec![0; arity];
        exponents[i] = 1;
        Multidegree { exponents, total: 1 }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn arity(&self) -> usize {
        self.exponents.len()
    }

    /// `|α|`.
    pub fn total(&self) -> u32 {
        self.total
    }

    pub fn is_zero(&self) -> bool {
        self.total == 0
    }

    /// `|α|_-`: the degree carried by odd classes.
    pub fn odd_part(&self, parities: &[Parity]) -> u32 {
        self.exponents
            .iter()
            .zip(parities)
            .filter(|(_, p)| **p == Parity::Odd)
            .map(|(a, _)| *a)
            .sum()
    }

    /// Parity of a homogeneous element of this multidegree.
    pub fn parity(&self, parities: &[Parity]) -> Parity {
        if self.odd_part(parities) % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn scaled(&self, m: u32) -> Self {
        Multidegree {
            exponents: self.exponents.iter().map(|a| a * m).collect(),
            total: self.total * m,
        }
    }

    /// `α / n` when `n` divides every component.
    pub fn divided(&self, n: u32) -> Option<Self> {
        if n == 0 || self.exponents.iter().any(|a| a % n != 0) {
            return None;
        }
        Some(Multidegree {
            exponents: self.exponents.iter().map(|a| a / n).collect(),
            total: self.total / n,
        })
    }

    /// gcd of all components; 0 for the zero multidegree.
    pub fn gcd(&self) -> u32 {
        self.exponents.iter().fold(0, |g, &a| num_integer::gcd(g, a))
    }

    pub fn plus(&self, other: &Multidegree) -> Self {
        debug_assert_eq!(self.arity(), other.arity());
        Multidegree {
            exponents: self.exponents.iter().zip(&other.exponents).map(|(a, b)| a + b).collect(),
            total: self.total + other.total,
        }
    }

    /// All multidegrees of the given arity with total degree exactly `n`,
    /// in ascending order.
    pub fn all_of_total(arity: usize, n: u32) -> Vec<Multidegree> {
        fn fill(out: &mut Vec<Multidegree>, current: &mut Vec<u32>, left: u32, arity: usize) {
            if current.len() + 1 == arity {
                current.push(left);
                out.push(Multidegree::new(current.clone()));
                current.pop();
                return;
            }
            for a in 0..=left {
                current.push(a);
                fill(out, current, left - a, arity);
                current.pop();
            }
        }
        let mut out = Vec::new();
        if arity == 0 {
            if n == 0 {
                out.push(Multidegree::zero(0));
            }
            return out;
        }
        fill(&mut out, &mut Vec::with_capacity(arity), n, arity);
        out
    }
}

impl Ord for Multidegree {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total.cmp(&other.total).then_with(|| self.exponents.cmp(&other.exponents))
    }
}

impl PartialOrd for Multidegree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<Vec<u32>> for Multidegree {
    fn from(exponents: Vec<u32>) -> Self {
        Multidegree::new(exponents)
    }
}

impl From<&[u32]> for Multidegree {
    fn from(exponents: &[u32]) -> Self {
        Multidegree::new(exponents.to_vec())
    }
}

impl<const N: usize> From<[u32; N]> for Multidegree {
    fn from(exponents: [u32; N]) -> Self {
        Multidegree::new(exponents.to_vec())
    }
}

impl fmt::Display for Multidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, a) in self.exponents.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str(")")
    }
}
