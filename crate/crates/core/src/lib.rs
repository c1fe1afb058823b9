//! Exact partition combinatorics, symmetric functions over truncated power
//! series, a λ-ring action engine, and verifiers for a family of
//! generating-function identities indexed by partitions.
//!
//! Everything is exact rational arithmetic; an identity either holds
//! coefficient by coefficient or fails with a witness monomial.

pub mod application;
pub mod cli;
pub mod combinat;
pub mod error;
pub mod exactring;
pub mod formulary;
pub mod identities;
pub mod lambdaring;
pub mod partitions;
pub mod pjk;
pub mod symfun;

pub use error::{Error, Result};
