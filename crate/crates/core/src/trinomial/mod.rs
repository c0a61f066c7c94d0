//! Maximum-kernel criteria for trinomials L(x) = ax + bx^σ − x^{σ^d}.
//!
//! Every characterization here is a total function returning a
//! [`ClassificationResult`]; [`enumerate_max_kernel`] is the brute-force
//! oracle they are tested against.

mod characterize;
mod enumerate;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::gf::{Element, Field, FieldSpec, GfError};
use crate::linpoly::{kernel_dim, LinPolyError, SigmaPoly};

pub use characterize::{
    check_case_c, classify_small_n, d3_characterize, d4_characterize, d4_n14_c31, d4_n14_c32, displayed_main_coeff,
    d4_n14_displayed_system, family_even, ladder_targets, main_system_check, necessary_conditions,
};
pub use enumerate::{
    enumerate_max_kernel, enumerate_with_necessary_pruning, trinomial_vector_check, EnumerateOptions, Oracle,
    DEFAULT_BUDGET,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TrinomialError {
    #[error("parameters out of range: {0}")]
    Range(String),
    #[error("preconditions failed: {}", .0.join("; "))]
    PreconditionFailed(Vec<String>),
    #[error("scan needs {required} kernel computations, budget is {budget}")]
    BudgetExceeded { required: u128, budget: u128 },
    #[error(transparent)]
    Gf(#[from] GfError),
    #[error(transparent)]
    LinPoly(#[from] LinPolyError),
}

/// The coefficients of ax + bx^σ − x^{σ^d}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TrinomialInstance {
    pub d: usize,
    pub a: Element,
    pub b: Element,
}

impl TrinomialInstance {
    pub fn new(d: usize, a: Element, b: Element) -> Self {
        Self { d, a, b }
    }

    pub fn poly(&self, field: &Field) -> SigmaPoly {
        SigmaPoly::trinomial(field, self.a, self.b, self.d)
    }

    pub fn kernel_dim(&self, field: &Field) -> usize {
        kernel_dim(field, &self.poly(field))
    }

    pub fn has_max_kernel(&self, field: &Field) -> bool {
        self.kernel_dim(field) == self.d
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    MaxKernel,
    NotMaxKernel,
}

impl Verdict {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Verdict::MaxKernel
        } else {
            Verdict::NotMaxKernel
        }
    }

    pub fn is_max(self) -> bool {
        self == Verdict::MaxKernel
    }
}

/// Which criterion produced a verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rule {
    /// n ≤ d(d−1), d ∤ n
    T13a,
    /// n ≤ d(d−1), d | n
    T13b,
    /// n = d(d−1) + 1
    T13c,
    /// coefficient ladder, n = d(d−1) + g
    T14System,
    /// σ-degree 3, the given n
    P61(usize),
    /// σ-degree 4, the given n
    P62(usize),
    BruteForce,
}

impl Rule {
    pub fn label(self) -> String {
        match self {
            Rule::T13a => "T13a".into(),
            Rule::T13b => "T13b".into(),
            Rule::T13c => "T13c".into(),
            Rule::T14System => "T14-system".into(),
            Rule::P61(n) => format!("P61-{n}"),
            Rule::P62(n) => format!("P62-{n}"),
            Rule::BruteForce => "BruteForce".into(),
        }
    }
}

impl Serialize for Rule {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.label())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationResult {
    pub verdict: Verdict,
    pub rule: Rule,
    /// Conditions that failed (empty for MaxKernel).
    pub witness: Vec<String>,
}

impl ClassificationResult {
    fn new(rule: Rule, witness: Vec<String>) -> Self {
        Self { verdict: Verdict::from_bool(witness.is_empty()), rule, witness }
    }

    fn not_max(rule: Rule, why: impl Into<String>) -> Self {
        Self { verdict: Verdict::NotMaxKernel, rule, witness: vec![why.into()] }
    }

    pub fn is_max(&self) -> bool {
        self.verdict.is_max()
    }
}

/// Brute-force verdict from the kernel dimension.
pub fn classify_brute_force(field: &Field, inst: &TrinomialInstance) -> ClassificationResult {
    let k = inst.kernel_dim(field);
    if k == inst.d {
        ClassificationResult::new(Rule::BruteForce, Vec::new())
    } else {
        ClassificationResult::not_max(Rule::BruteForce, format!("kernel dimension {k} < {}", inst.d))
    }
}

/// JSON form `{d, n, spec, a, b, verdict, rule, witness}`.
#[derive(Clone, Debug, Serialize)]
pub struct VerdictRecord {
    pub d: usize,
    pub n: usize,
    pub spec: FieldSpec,
    pub a: String,
    pub b: String,
    pub verdict: Verdict,
    pub rule: Rule,
    pub witness: Vec<String>,
}

impl VerdictRecord {
    pub fn new(field: &Field, inst: &TrinomialInstance, res: &ClassificationResult) -> Self {
        Self {
            d: inst.d,
            n: field.n(),
            spec: field.record(),
            a: inst.a.to_hex(),
            b: inst.b.to_hex(),
            verdict: res.verdict,
            rule: res.rule,
            witness: res.witness.clone(),
        }
    }
}

/// −1 raised to `e`, as a field element.
pub(crate) fn sign(field: &Field, e: usize) -> Element {
    if e % 2 == 0 {
        Element::ONE
    } else {
        field.neg(Element::ONE)
    }
}

/// True when x = p^i for some i ≥ 0.
pub fn is_power_of(mut x: u64, p: u64) -> bool {
    if x == 0 {
        return false;
    }
    while x % p == 0 {
        x /= p;
    }
    x == 1
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rule_labels() {
        assert_eq!(Rule::T14System.label(), "T14-system");
        assert_eq!(Rule::P61(8).label(), "P61-8");
        assert_eq!(serde_json::to_string(&Rule::P62(15)).unwrap(), "\"P62-15\"");
    }

    #[test]
    fn powers() {
        assert!(is_power_of(1, 2));
        assert!(is_power_of(8, 2));
        assert!(!is_power_of(6, 2));
        assert!(is_power_of(9, 3));
        assert!(!is_power_of(2, 3));
    }

    #[test]
    fn verdict_record_json() {
        let f = Field::new(2, 1, 7, 1).unwrap();
        let inst = TrinomialInstance::new(3, Element::ONE, Element::ONE);
        let res = classify_brute_force(&f, &inst);
        let json = serde_json::to_value(VerdictRecord::new(&f, &inst, &res)).unwrap();
        assert_eq!(json["rule"], "BruteForce");
        assert_eq!(json["n"], 7);
        assert!(json["spec"]["modulus"].is_array());
    }
}
