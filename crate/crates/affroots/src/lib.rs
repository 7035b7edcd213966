//! Root systems, shadow labelings and matrix models for the twisted affine
//! Lie superalgebras `A(2k,2l-1)^(2)`, `A(2k-1,2l-1)^(2)`, `A(2k,2l)^(4)`
//! and `D(k+1,l)^(2)`.
//!
//! Everything is exact: lattice data lives in `i64`, functionals in
//! [`Q`], and matrix entries in [`realization::Gq`].

pub mod cli;
pub mod error;
pub mod lattice;
pub mod par;
pub mod realization;
pub mod rootsys;
pub mod shadow;

pub use error::{Error, Result};
pub use lattice::{RationalFunctional, RootClass, RootVec, Q};
pub use rootsys::{AlgebraType, Family, Parity, Progression, Window};
