use alloc::string::String;

use crate::arith::Rational;
use crate::series::Multidegree;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("argument must be a positive integer, got 0")]
    ZeroArgument,
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("grading spec needs at least one generator class")]
    EmptySpec,
    #[error("generator class {class} has multiplicity 0")]
    ZeroMultiplicity { class: usize },
    #[error("truncation degree must be at least 1")]
    ZeroTruncation,
    #[error("generator class {class}: parity disagrees with the parity of its group label")]
    LabelParityMismatch { class: usize },
    #[error("generator class {class} has no group label")]
    MissingGroupLabel { class: usize },
    #[error("group labels given without a group")]
    UnexpectedGroupLabel,
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("element {0} does not belong to the group")]
    NotAGroupElement(String),
    #[error("series belong to different spaces")]
    SpaceMismatch,
    #[error("multidegree has {found} entries, expected {expected}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("constant term must be zero")]
    NonZeroConstantTerm,
    #[error("constant term must be exactly 1")]
    ConstantTermNotOne,
    #[error("series with zero constant term is not invertible")]
    NotInvertible,
    #[error("operation requires all generator classes to be even")]
    OddClassPresent,
    #[error("multidegree must be nonzero")]
    ZeroMultidegree,
    #[error("degree {degree} exceeds the truncation degree {max}")]
    DegreeOutOfRange { degree: u32, max: u32 },
    #[error("coefficient {value} at {at} is not a nonnegative integer")]
    NotADimension { at: Multidegree, value: Rational },
    #[error("oracle cap exceeded: total degree {total} > {cap}")]
    OracleCapExceeded { total: u32, cap: u32 },
    #[error("generating set is empty")]
    EmptyGeneratingSet,
    #[error("expected a univariate series in one even variable")]
    NotUnivariate,
}
