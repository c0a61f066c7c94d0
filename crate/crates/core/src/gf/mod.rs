//! Exact arithmetic in F_{q^n} = F_{p^{hn}}.
//!
//! Elements live in a single flat polynomial basis over F_p; the subfield
//! F_q is never given its own representation. Small fields (up to
//! [`field::TABLE_LIMIT`] elements) use log/antilog tables, larger ones fall
//! back to schoolbook multiplication modulo the defining polynomial.

mod exponent;
mod field;
pub(crate) mod fp_poly;
mod norm;
mod spec;

use thiserror::Error;

pub use exponent::FrobExponent;
pub use field::{Element, Field, TABLE_LIMIT};
pub use norm::CubeRoots;
pub use spec::{FieldSpec, MAX_CHARACTERISTIC};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GfError {
    #[error("p = {0} is not prime")]
    NonPrimeP(u64),
    #[error("gcd(s, n) must be 1 (s = {s}, n = {n})")]
    GcdViolation { s: usize, n: usize },
    #[error("field too large: p^(h*n) must not exceed 2^126 and p must be below 2^31")]
    FieldTooLarge,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("invalid modulus: {0}")]
    BadModulus(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("{t} does not divide n = {n}")]
    NonDivisor { t: usize, n: usize },
    #[error("x^2 + x + 1 has no root in this field")]
    NoRoot,
    #[error("packed value {0:#x} is not a field element")]
    NotAnElement(u128),
    #[error("expected {expected} coefficients, got {got}")]
    WrongLength { expected: usize, got: usize },
    #[error("coefficient {0} out of range")]
    CoefficientOutOfRange(u64),
    #[error("cannot parse element: {0}")]
    Parse(String),
}

/// Wire form of an element: its coefficient array, constant term first.
pub type ElementRecord = Vec<u64>;

impl Field {
    /// The `{p, h, n, s, modulus}` description record.
    pub fn record(&self) -> FieldSpec {
        self.spec().clone()
    }

    pub fn element_record(&self, x: Element) -> ElementRecord {
        self.coeffs(x)
    }

    /// Parses the hex form (packed little-endian base-p digits).
    pub fn parse_hex(&self, s: &str) -> Result<Element, GfError> {
        let t = s.trim().trim_start_matches("0x");
        let v = u128::from_str_radix(t, 16).map_err(|e| GfError::Parse(format!("{s}: {e}")))?;
        self.element(v)
    }
}
