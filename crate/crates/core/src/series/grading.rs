use alloc::sync::Arc;
use alloc::vec::Vec;

use super::{Multidegree, Parity, SeriesSpace};
use crate::group::{FiniteAbelianGroup, GroupElement};
use crate::{Error, Result};

/// Default truncation degree.
pub const DEFAULT_MAX_DEGREE: u32 = 12;

/// A block `X_{g_i}` of `s_i` free generators sharing one weight.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GeneratorClass {
    pub multiplicity: u32,
    pub parity: Parity,
    pub label: Option<GroupElement>,
}

impl GeneratorClass {
    pub fn even(multiplicity: u32) -> Self {
        GeneratorClass { multiplicity, parity: Parity::Even, label: None }
    }

    pub fn odd(multiplicity: u32) -> Self {
        GeneratorClass { multiplicity, parity: Parity::Odd, label: None }
    }
}

/// Generator classes of a free algebra together with the truncation degree.
///
/// Class `i` gets the weight `λ_i`, so multidegrees live in `N_0^r`. When a
/// group is attached every class carries a label whose parity must match.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradingSpec {
    classes: Vec<GeneratorClass>,
    group: Option<Arc<FiniteAbelianGroup>>,
    space: Arc<SeriesSpace>,
}

impl GradingSpec {
    pub fn new(classes: Vec<GeneratorClass>, max_degree: u32) -> Result<Self> {
        if classes.iter().any(|c| c.label.is_some()) {
            return Err(Error::UnexpectedGroupLabel);
        }
        Self::build(classes, None, max_degree)
    }

    pub fn with_group(group: FiniteAbelianGroup, classes: Vec<GeneratorClass>, max_degree: u32) -> Result<Self> {
        for (i, class) in classes.iter().enumerate() {
            let label = class.label.as_ref().ok_or(Error::MissingGroupLabel { class: i })?;
            group.check(label)?;
            if group.parity(label) != class.parity {
                return Err(Error::LabelParityMismatch { class: i });
            }
        }
        Self::build(classes, Some(Arc::new(group)), max_degree)
    }

    /// Shorthand for unlabelled classes given as `(multiplicity, parity)`.
    pub fn from_classes(classes: &[(u32, Parity)], max_degree: u32) -> Result<Self> {
        Self::new(
            classes
                .iter()
                .map(|&(multiplicity, parity)| GeneratorClass { multiplicity, parity, label: None })
                .collect(),
            max_degree,
        )
    }

    fn build(classes: Vec<GeneratorClass>, group: Option<Arc<FiniteAbelianGroup>>, max_degree: u32) -> Result<Self> {
        if classes.is_empty() {
            return Err(Error::EmptySpec);
        }
        if let Some(i) = classes.iter().position(|c| c.multiplicity == 0) {
            return Err(Error::ZeroMultiplicity { class: i });
        }
        if max_degree == 0 {
            return Err(Error::ZeroTruncation);
        }
        let space = Arc::new(SeriesSpace::new(classes.iter().map(|c| c.parity).collect(), max_degree)?);
        Ok(GradingSpec { classes, group, space })
    }

    /// Same generators, different truncation degree.
    pub fn with_max_degree(&self, max_degree: u32) -> Result<Self> {
        Self::build(self.classes.clone(), self.group.clone(), max_degree)
    }

    pub fn classes(&self) -> &[GeneratorClass] {
        &self.classes
    }

    pub fn arity(&self) -> usize {
        self.classes.len()
    }

    pub fn multiplicities(&self) -> impl Iterator<Item = u32> + '_ {
        self.classes.iter().map(|c| c.multiplicity)
    }

    pub fn parities(&self) -> &[Parity] {
        self.space.parities()
    }

    pub fn max_degree(&self) -> u32 {
        self.space.max_degree()
    }

    pub fn space(&self) -> &Arc<SeriesSpace> {
        &self.space
    }

    pub fn group(&self) -> Option<&Arc<FiniteAbelianGroup>> {
        self.group.as_ref()
    }

    pub fn all_even(&self) -> bool {
        self.classes.iter().all(|c| c.parity == Parity::Even)
    }

    /// Number of even and odd generators, counted with multiplicity.
    pub fn parity_counts(&self) -> (u64, u64) {
        self.classes.iter().fold((0, 0), |(even, odd), c| match c.parity {
            Parity::Even => (even + u64::from(c.multiplicity), odd),
            Parity::Odd => (even, odd + u64::from(c.multiplicity)),
        })
    }

    pub fn check_multidegree(&self, alpha: &Multidegree) -> Result<()> {
        if alpha.arity() != self.arity() {
            return Err(Error::ArityMismatch { expected: self.arity(), found: alpha.arity() });
        }
        Ok(())
    }

    /// `Π g_i^{α_i}`, the group degree of the multidegree `α`.
    pub fn group_degree(&self, alpha: &Multidegree) -> Option<GroupElement> {
        let group = self.group.as_ref()?;
        let mut acc = group.identity();
        for (class, &a) in self.classes.iter().zip(alpha.exponents()) {
            let label = class.label.as_ref()?;
            acc = group.add(&acc, &group.power(label, u64::from(a)));
        }
        Some(acc)
    }
}
