//! Symbol-level analysis of constant-coefficient linear PDE systems.
//!
//! The pipeline takes the polynomial symbol matrix of a system, builds its
//! Douglis–Nirenberg principal part, a graded free resolution and the dual
//! complex, computes the characteristic variety and its dimension, checks
//! Ext vanishing below the codimension `m = n − dim V`, assembles the
//! Laplace-like operator `Ω`, and reports the largest dimension of a
//! submanifold across which solutions extend.

pub mod acceptance;
pub mod charvar;
pub mod flagcover;
pub mod groebner;
pub mod linalg;
pub mod omega;
pub mod oracle;
pub mod poly;
pub mod report;
pub mod resolution;
pub mod sampling;
pub mod symbol;
pub mod sysparse;

pub use poly::{GaussPoly, GaussRational, Monomial, Rational};
pub use symbol::{ShiftVector, ShiftedMatrix};
pub use sysparse::{emit, parse, SystemSpec};
