//! σ-linearized polynomials Σ a_i x^{σ^i}: evaluation, kernels, the
//! σ-companion criterion, and the coefficient recursion for trinomials
//! ax + bx^σ − x^{σ^d}.

mod companion;
mod recursion;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::gf::{Element, Field, GfError};
use crate::linalg;

pub use companion::{
    companion_matrix, companion_product, has_max_kernel_companion, has_max_kernel_vector, MatrixExt,
};
pub use recursion::{
    binom_mod_p, c_coeff_closed, c_coeffs_recursive, commutation_holds, m_entry, z_recursion, MEntryTable,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinPolyError {
    #[error("the zero polynomial has no σ-degree")]
    ZeroPolynomial,
    #[error("leading coefficient must be exactly -1")]
    NotMonicNegated,
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("hypothesis a^(σ^d) b = a^σ b^(σ^d) does not hold")]
    HypothesisViolated,
    #[error("the two middle-case updates of z disagree at (j, i) = ({j}, {i})")]
    BranchMismatch { j: usize, i: usize },
    #[error(transparent)]
    Gf(#[from] GfError),
}

/// Σ_{i ≤ t} a_i x^{σ^i}, coefficients a_0 … a_t with a_t ≠ 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaPoly {
    coeffs: Vec<Element>,
}

impl SigmaPoly {
    /// Trailing zero coefficients are trimmed; all-zero input is rejected.
    pub fn new(mut coeffs: Vec<Element>) -> Result<Self, LinPolyError> {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            return Err(LinPolyError::ZeroPolynomial);
        }
        Ok(Self { coeffs })
    }

    /// x^{σ^k} − x
    pub fn subfield(field: &Field, k: usize) -> Self {
        let mut c = vec![Element::ZERO; k + 1];
        c[0] = field.neg(Element::ONE);
        c[k] = field.add(c[k], Element::ONE);
        Self::new(c).expect("nonzero")
    }

    /// ax + bx^σ − x^{σ^d}
    pub fn trinomial(field: &Field, a: Element, b: Element, d: usize) -> Self {
        let mut c = vec![Element::ZERO; d + 1];
        c[0] = a;
        c[1] = field.add(c[1], b);
        c[d] = field.neg(Element::ONE);
        Self::new(c).expect("leading coefficient is -1")
    }

    pub fn sdegree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Element] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Element {
        self.coeffs.get(i).copied().unwrap_or(Element::ZERO)
    }

    pub fn leading(&self) -> Element {
        *self.coeffs.last().unwrap()
    }

    /// Divides by −a_t so that the leading coefficient becomes −1.
    pub fn normalize_monic_negated(&self, field: &Field) -> Self {
        let scale = field.inv(field.neg(self.leading())).expect("leading coefficient is nonzero");
        Self { coeffs: self.coeffs.iter().map(|&c| field.mul(c, scale)).collect() }
    }

    /// Divides by a_t (monic form).
    pub fn normalize_monic(&self, field: &Field) -> Self {
        let scale = field.inv(self.leading()).expect("leading coefficient is nonzero");
        Self { coeffs: self.coeffs.iter().map(|&c| field.mul(c, scale)).collect() }
    }

    pub fn scaled(&self, field: &Field, eta: Element) -> Result<Self, LinPolyError> {
        Self::new(self.coeffs.iter().map(|&c| field.mul(c, eta)).collect())
    }

    pub fn record(&self, field: &Field) -> SigmaPolyRecord {
        SigmaPolyRecord {
            sdegree: self.sdegree(),
            coeffs: self.coeffs.iter().map(|&c| field.coeffs(c)).collect(),
        }
    }

    pub fn from_record(field: &Field, rec: &SigmaPolyRecord) -> Result<Self, LinPolyError> {
        let coeffs = rec
            .coeffs
            .iter()
            .map(|c| field.from_coeffs(c))
            .collect::<Result<Vec<_>, _>>()?;
        let poly = Self::new(coeffs)?;
        if poly.sdegree() != rec.sdegree {
            return Err(LinPolyError::IndexOutOfRange(format!(
                "record declares σ-degree {} but coefficients give {}",
                rec.sdegree,
                poly.sdegree()
            )));
        }
        Ok(poly)
    }
}

/// JSON form `{sdegree, coeffs: [[c_0, …, c_{m-1}], …]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SigmaPolyRecord {
    pub sdegree: usize,
    pub coeffs: Vec<Vec<u64>>,
}

/// Σ a_i σ^i(x)
pub fn evaluate(field: &Field, f: &SigmaPoly, x: Element) -> Element {
    f.coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .fold(Element::ZERO, |acc, (i, &c)| field.add(acc, field.mul(c, field.sigma(x, i as i64))))
}

/// Images f(θ^i) of the F_p-basis: the columns of f as an F_p-linear map.
pub fn map_columns(field: &Field, f: &SigmaPoly) -> Vec<Element> {
    (0..field.m())
        .map(|i| {
            f.coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .fold(Element::ZERO, |acc, (k, &c)| {
                    field.add(acc, field.mul(c, field.sigma_basis_row(k)[i]))
                })
        })
        .collect()
}

/// dim_{F_q} ker f, computed as F_p-nullity / h.
pub fn kernel_dim(field: &Field, f: &SigmaPoly) -> usize {
    let nullity = field.m() - linalg::rank(field, &map_columns(field, f));
    assert_eq!(nullity % field.h(), 0, "F_p-nullity {nullity} not divisible by h = {}", field.h());
    nullity / field.h()
}

/// F_p-basis of the kernel.
pub fn kernel_basis(field: &Field, f: &SigmaPoly) -> Vec<Element> {
    linalg::nullspace(field, &map_columns(field, f))
}

/// Rank weight n − dim ker f.
pub fn weight(field: &Field, f: &SigmaPoly) -> usize {
    field.n() - kernel_dim(field, f)
}

/// N(a_0) = (−1)^{nk} N(a_k), with k the σ-degree.
pub fn gow_norm_condition(field: &Field, f: &SigmaPoly) -> bool {
    let k = f.sdegree();
    let lhs = field.norm(f.coeff(0));
    let mut rhs = field.norm(f.leading());
    if (field.n() * k) % 2 == 1 {
        rhs = field.neg(rhs);
    }
    lhs == rhs
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn evaluate_identity_and_fixed_field() {
        let f = Field::new(3, 1, 5, 2).unwrap();
        let id = SigmaPoly::new(vec![Element::ONE]).unwrap();
        let frob = SigmaPoly::subfield(&f, 1);
        for x in f.elements().step_by(13) {
            assert_eq!(evaluate(&f, &id, x), x);
        }
        for c in 0..3 {
            assert!(evaluate(&f, &frob, f.scalar(c)).is_zero());
        }
    }

    #[test]
    fn additivity() {
        let f = Field::new(2, 2, 4, 3).unwrap();
        let poly = SigmaPoly::new(vec![f.element(7).unwrap(), f.element(200).unwrap(), Element::ONE]).unwrap();
        for x in f.elements().step_by(17) {
            for y in f.elements().step_by(29) {
                let lhs = evaluate(&f, &poly, f.add(x, y));
                let rhs = f.add(evaluate(&f, &poly, x), evaluate(&f, &poly, y));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn subfield_kernels() {
        for (p, h, n, s) in [(2, 1, 6, 1), (3, 1, 6, 5), (2, 2, 4, 3)] {
            let f = Field::new(p, h, n, s).unwrap();
            assert_eq!(kernel_dim(&f, &SigmaPoly::subfield(&f, 1)), 1);
            for d in (1..n).filter(|d| n % d == 0) {
                let g = SigmaPoly::subfield(&f, d);
                assert_eq!(kernel_dim(&f, &g), d);
                assert_eq!(weight(&f, &g), n - d);
                assert!(gow_norm_condition(&f, &g));
            }
            assert_eq!(weight(&f, &SigmaPoly::new(vec![Element::ONE]).unwrap()), n);
        }
    }

    #[test]
    fn kernel_basis_vectors_are_roots() {
        let f = Field::new(3, 2, 3, 1).unwrap();
        let g = SigmaPoly::subfield(&f, 1);
        let basis = kernel_basis(&f, &g);
        assert_eq!(basis.len(), 2);
        for v in basis {
            assert!(evaluate(&f, &g, v).is_zero());
        }
    }

    #[test]
    fn zero_polynomial_rejected() {
        assert_eq!(SigmaPoly::new(vec![Element::ZERO; 3]), Err(LinPolyError::ZeroPolynomial));
    }

    #[test]
    fn record_roundtrip() {
        let f = Field::new(2, 1, 7, 1).unwrap();
        let poly = SigmaPoly::trinomial(&f, f.element(5).unwrap(), f.element(9).unwrap(), 3);
        let json = serde_json::to_string(&poly.record(&f)).unwrap();
        let back: SigmaPolyRecord = serde_json::from_str(&json).unwrap();
        assert_eq!(SigmaPoly::from_record(&f, &back).unwrap(), poly);
    }
}
