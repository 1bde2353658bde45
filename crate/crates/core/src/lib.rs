//! Exact Gysin pushforwards for flag bundles of the classical groups.
//!
//! Pushforwards are computed as Weyl-group symmetrizers over polynomials
//! with rational coefficients, by two independent routes (a coset sum of
//! fixed-point fractions and an alternant divided by the root product),
//! and checked against classical symmetric-function formulas.

pub mod arith;
pub mod cli;
pub mod error;
pub mod expr;
pub mod pushforward;
pub mod roots;
pub mod schubert;
pub mod verify;
pub mod weyl;

pub use arith::{Polynomial, Rational, RationalFunction};
pub use error::{Error, Result};
pub use pushforward::BundleSpec;
pub use roots::Convention;
pub use weyl::{Composition, Family, GroupSpec, WeylElement};
