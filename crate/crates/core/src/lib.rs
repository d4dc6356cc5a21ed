//! Exact characters, Hilbert series and homogeneous-component dimensions of
//! free color Lie superalgebras and free restricted color Lie p-algebras.
//!
//! Everything is computed over exact rationals on truncated multivariate
//! power series. The crate is `no_std` and only needs `alloc`.
//!
//! The layout mirrors the computation pipeline:
//!
//! * [`arith`]: Möbius-type functions, divisors, multinomials, [`Prime`].
//! * [`series`]: [`Multidegree`], [`GradingSpec`] and truncated [`Series`]
//!   with exp/log/inverse and the parity-twisted dilation.
//! * [`operators`]: the `E`/`L` and `E_p`/`L_p` operator pairs, characters of
//!   free (restricted) algebras and the PBW self-checks.
//! * [`group`]: finite abelian gradings, group-algebra valued series and the
//!   `E_G`/`L_G` pair.
//! * [`witt`]: closed-form Witt-type dimension formulas.
//! * [`schreier`]: the univariate `ε` operator and the Schreier-type formula.
//! * [`lyndon`]: a brute-force super-Lyndon oracle used for validation.

#![no_std]
#![deny(unsafe_code)]

extern crate alloc;

pub mod arith;
mod error;
pub mod group;
pub mod lyndon;
pub mod operators;
pub mod schreier;
pub mod series;
mod truncated;
pub mod witt;

pub use arith::{Prime, Rational};
pub use error::Error;
pub use group::{FiniteAbelianGroup, GroupElement, GroupSeries};
pub use operators::{Mismatch, VerificationReport};
pub use series::{GeneratorClass, GradingSpec, Multidegree, Parity, Series, SeriesSpace};

pub type Result<T, E = Error> = core::result::Result<T, E>;
