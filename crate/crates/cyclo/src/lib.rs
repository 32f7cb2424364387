//! Exact arithmetic in cyclotomic fields `Q(zeta_N)`.
//!
//! The field elements ([`CycloNumber`]) are rational vectors on the power
//! basis reduced modulo the `N`-th cyclotomic polynomial, so equality and
//! zero tests are exact. [`QSpec`] fixes a root of unity `q = e^{z pi i/l}`
//! and provides `q`-powers with rational exponents and quantum integers.
//! Numeric output goes through rigorous interval evaluation
//! ([`numeric_value`], [`is_positive_real`]); nothing else touches
//! floating point.

pub mod conductor;
pub mod number;
pub mod numeric;
pub mod qspec;

pub use conductor::{conductor_table, euler_phi, ConductorTable};
pub use number::CycloNumber;
pub use numeric::{eval_interval, is_positive_real, numeric_value, FixInterval};
pub use qspec::QSpec;

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum CycloError {
    #[error("exponent denominator {denom} does not divide the Galois integer {d}")]
    Precision { denom: i64, d: i64 },
    #[error("gcd({t}, {n}) != 1: not a Galois automorphism")]
    NotCoprime { t: i64, n: u64 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid root-of-unity specification: {0}")]
    InvalidSpec(String),
}
