use serde::Serialize;

use crate::gf::{Element, Field};
use crate::linpoly::{kernel_dim, SigmaPoly};

use super::CodesError;

/// Both clauses of the quasi-subfield test for f = x^{q^d} − λ(x).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuasiReport {
    pub d: usize,
    pub n: usize,
    /// log_q deg λ
    pub lambda_degree: usize,
    /// f has d-dimensional kernel, i.e. divides x^{q^n} − x.
    pub splits: bool,
    /// log_q deg λ < d²/n
    pub degree_bound: bool,
    pub quasi_subfield: bool,
}

pub fn quasi_subfield_check(field: &Field, f: &SigmaPoly) -> Result<QuasiReport, CodesError> {
    if field.s() != 1 {
        return Err(CodesError::SigmaMismatch(field.s()));
    }
    let d = f.sdegree();
    if f.leading() != Element::ONE {
        return Err(CodesError::MalformedShape("leading coefficient must be 1".into()));
    }
    let lambda_degree = (0..d)
        .rev()
        .find(|&i| !f.coeff(i).is_zero())
        .ok_or_else(|| CodesError::MalformedShape("λ is zero".into()))?;
    let n = field.n();
    let splits = kernel_dim(field, f) == d;
    let degree_bound = lambda_degree * n < d * d;
    Ok(QuasiReport { d, n, lambda_degree, splits, degree_bound, quasi_subfield: splits && degree_bound })
}
