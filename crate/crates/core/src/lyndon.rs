//! Brute-force oracle for dimensions of free (color) Lie superalgebras and
//! free restricted Lie algebras, by enumerating words.
//!
//! A basis of the free Lie superalgebra is indexed by Lyndon words together
//! with the formal squares of odd Lyndon words. A basis of the free
//! restricted Lie algebra consists of the `p^s`-th powers of Lie basis
//! elements. Nothing here touches the series pipeline or Möbius sums.

use alloc::vec::Vec;

use crate::arith::Prime;
use crate::series::{GradingSpec, Multidegree, Parity};
use crate::{Error, Result};

/// Largest total degree the oracle enumerates by default.
pub const DEFAULT_ORACLE_CAP: u32 = 14;

/// One concrete generator: class `class`, copy `index` within the class.
/// Letters compare class-major.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub class: usize,
    pub index: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word { letters }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn multidegree(&self, arity: usize) -> Multidegree {
        let mut exps = alloc::vec![0u32; arity];
        for l in &self.letters {
            exps[l.class] += 1;
        }
        Multidegree::new(exps)
    }

    pub fn parity(&self, parities: &[Parity]) -> Parity {
        let odd = self.letters.iter().filter(|l| parities[l.class] == Parity::Odd).count();
        if odd % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn is_lyndon(&self) -> bool {
        is_lyndon(&self.letters)
    }
}

/// A nonempty word is Lyndon when it is strictly smaller than each of its
/// proper rotations.
pub fn is_lyndon<T: Ord>(w: &[T]) -> bool {
    let n = w.len();
    if n == 0 {
        return false;
    }
    (1..n).all(|k| {
        for i in 0..n {
            let a = &w[i];
            let b = &w[(i + k) % n];
            if a != b {
                return a < b;
            }
        }
        false
    })
}

fn check_cap(total: u32, cap: u32) -> Result<()> {
    if total > cap {
        Err(Error::OracleCapExceeded { total, cap })
    } else {
        Ok(())
    }
}

/// Number of Lyndon words of class multidegree `α`, expanding class `i` into
/// `s_i` distinct letters.
pub fn count_lyndon(spec: &GradingSpec, alpha: &Multidegree) -> Result<u64> {
    count_lyndon_with_cap(spec, alpha, DEFAULT_ORACLE_CAP)
}

pub fn count_lyndon_with_cap(spec: &GradingSpec, alpha: &Multidegree, cap: u32) -> Result<u64> {
    spec.check_multidegree(alpha)?;
    check_cap(alpha.total(), cap)?;
    if alpha.is_zero() {
        return Ok(0);
    }
    let multiplicities: Vec<u32> = spec.multiplicities().collect();
    let mut remaining = alpha.exponents().to_vec();
    let mut word = Vec::with_capacity(alpha.total() as usize);
    let mut count = 0;
    enumerate(&multiplicities, &mut remaining, &mut word, &mut count);
    Ok(count)
}

fn enumerate(multiplicities: &[u32], remaining: &mut [u32], word: &mut Vec<Letter>, count: &mut u64) {
    if remaining.iter().all(|&r| r == 0) {
        if is_lyndon(word) {
            *count += 1;
        }
        return;
    }
    for class in 0..remaining.len() {
        if remaining[class] == 0 {
            continue;
        }
        remaining[class] -= 1;
        for index in 0..multiplicities[class] {
            word.push(Letter { class, index });
            enumerate(multiplicities, remaining, word, count);
            word.pop();
        }
        remaining[class] += 1;
    }
}

/// `dim L_α` of the free color Lie superalgebra as Lyndon words of
/// multidegree `α` plus squares of odd Lyndon words of multidegree `α/2`.
pub fn oracle_dim_super(spec: &GradingSpec, alpha: &Multidegree) -> Result<u64> {
    let lyndon = count_lyndon(spec, alpha)?;
    let squares = match alpha.divided(2) {
        // All words of one multidegree share a parity.
        Some(half) if !half.is_zero() && half.parity(spec.parities()) == Parity::Odd => count_lyndon(spec, &half)?,
        _ => 0,
    };
    Ok(lyndon + squares)
}

/// Number of Lyndon words of length `n` over `letters` letters, by testing
/// every word.
pub fn count_lyndon_by_length(letters: u32, n: u32) -> Result<u64> {
    check_cap(n, DEFAULT_ORACLE_CAP)?;
    if n == 0 || letters == 0 {
        return Ok(0);
    }
    let mut word = alloc::vec![0u32; n as usize];
    let mut count = 0;
    loop {
        if is_lyndon(&word) {
            count += 1;
        }
        // Odometer increment.
        let mut i = word.len();
        loop {
            if i == 0 {
                return Ok(count);
            }
            i -= 1;
            word[i] += 1;
            if word[i] < letters {
                break;
            }
            word[i] = 0;
        }
    }
}

/// Exponents `s ≥ 0` with `p^s | n`, paired with `n / p^s`.
fn p_power_quotients(n: u32, p: Prime) -> Vec<u32> {
    let p = p.get() as u32;
    let mut out = alloc::vec![n];
    let mut m = n;
    while m % p == 0 {
        m /= p;
        out.push(m);
    }
    out
}

/// Degree-`n` dimension of the free restricted Lie algebra on `r`
/// generators: `Σ_{n = m·p^s} (Lyndon words of length m)`.
pub fn oracle_dim_restricted(r: u32, n: u32, p: Prime) -> Result<u64> {
    if n == 0 {
        return Err(Error::ZeroArgument);
    }
    check_cap(n, DEFAULT_ORACLE_CAP)?;
    p_power_quotients(n, p).into_iter().map(|m| count_lyndon_by_length(r, m)).sum()
}

/// Multidegree version: `Σ_{p^s | α} count_lyndon(α / p^s)` on an all-even
/// spec.
pub fn oracle_dim_restricted_multidegree(spec: &GradingSpec, alpha: &Multidegree, p: Prime) -> Result<u64> {
    if !spec.all_even() {
        return Err(Error::OddClassPresent);
    }
    spec.check_multidegree(alpha)?;
    check_cap(alpha.total(), DEFAULT_ORACLE_CAP)?;
    if alpha.is_zero() {
        return Ok(0);
    }
    let mut total = 0;
    let mut current = Some(alpha.clone());
    while let Some(beta) = current {
        total += count_lyndon(spec, &beta)?;
        current = beta.divided(p.get() as u32);
    }
    Ok(total)
}
