//! Applications: minimum-weight counts of C_{d,n,σ} = ⟨x, x^σ, x^{σ^d}⟩,
//! quasi-subfield polynomials, and cyclic orbit subspace codes.

mod census;
mod orbit;
mod quasi;
mod subspace;

use thiserror::Error;

use crate::gf::GfError;
use crate::linpoly::LinPolyError;
use crate::trinomial::TrinomialError;

pub use census::{certified_min_weight_count, d_closed_form, weight_census, CensusSummary, DClosedForm, WeightCensus};
pub use orbit::{build_orbit_code, stabilizer_degree, OrbitCode, OrbitCodeRecord, OrbitOptions};
pub use quasi::{quasi_subfield_check, QuasiReport};
pub use subspace::{
    cyclic_shift, gap, gap_or_top, shifted_polynomial, subfield_fp_basis, subspace_distance, subspace_polynomial,
    Subspace, SubspaceRecord,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CodesError {
    #[error("not an F_q-subspace: {0}")]
    NotSubspace(String),
    #[error("subspace polynomials need s = 1, got s = {0}")]
    SigmaMismatch(usize),
    #[error("all coefficients below the top vanish (σ-degree {0})")]
    ZeroBelowTop(usize),
    #[error("division by zero")]
    DivisionByZero,
    #[error("orbit codes need dimension at least 2, got {0}")]
    DimensionTooSmall(usize),
    #[error("task needs {required} steps, budget is {budget}")]
    BudgetExceeded { required: u128, budget: u128 },
    #[error("malformed polynomial: {0}")]
    MalformedShape(String),
    #[error("parameters out of range: {0}")]
    Range(String),
    #[error(transparent)]
    Gf(#[from] GfError),
    #[error(transparent)]
    LinPoly(#[from] LinPolyError),
    #[error(transparent)]
    Trinomial(#[from] TrinomialError),
}
