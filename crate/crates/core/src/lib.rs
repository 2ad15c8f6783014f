//! Exact symbolic engine for the split discrete Clifford algebra, the
//! discrete spin group and its actions on discrete polynomials and
//! distributions.

pub mod action;
pub mod checks;
pub mod clifford;
pub mod dist;
pub mod error;
pub mod fault;
pub mod json;
pub mod linalg;
pub mod operator;
pub mod random;
pub mod repr;
pub mod scalar;
pub mod selftest;
pub mod spin;

pub use error::{Error, Result};
