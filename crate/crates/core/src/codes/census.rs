use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::gf::{Element, Field, FieldSpec};
use crate::linpoly::{kernel_dim, SigmaPoly};
use crate::parallel::{map_chunks, map_indices, Exec};
use crate::trinomial::{is_power_of, TrinomialInstance};

use super::CodesError;

/// Rank-weight distribution of the nonzero codewords of
/// C_{d,n,σ} = ⟨x, x^σ, x^{σ^d}⟩.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightCensus {
    pub d: usize,
    pub n: usize,
    pub spec: FieldSpec,
    /// weight → number of codewords
    pub counts: BTreeMap<usize, u128>,
}

impl WeightCensus {
    pub fn total(&self) -> u128 {
        self.counts.values().sum()
    }

    /// Codewords of weight n − d.
    pub fn min_weight_count(&self) -> u128 {
        self.counts.get(&(self.n - self.d)).copied().unwrap_or(0)
    }

    pub fn min_weight(&self) -> Option<usize> {
        self.counts.keys().next().copied()
    }

    pub fn summary(&self, field: &Field) -> CensusSummary {
        let formula = d_closed_form(field, self.d);
        let observed = self.min_weight_count();
        CensusSummary {
            d: self.d,
            n: self.n,
            q: field.q(),
            d_observed: observed,
            d_formula: formula,
            agree: formula.agrees_with(observed),
        }
    }
}

/// Closed-form count of weight n − d codewords.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "value")]
pub enum DClosedForm {
    Exact(u128),
    LowerBound(u128),
    Unknown,
}

impl DClosedForm {
    /// None when there is nothing to compare against.
    pub fn agrees_with(self, observed: u128) -> Option<bool> {
        match self {
            DClosedForm::Exact(v) => Some(v == observed),
            DClosedForm::LowerBound(v) => Some(observed >= v),
            DClosedForm::Unknown => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusSummary {
    pub d: usize,
    pub n: usize,
    pub q: u128,
    #[serde(rename = "D_observed")]
    pub d_observed: u128,
    #[serde(rename = "D_formula")]
    pub d_formula: DClosedForm,
    pub agree: Option<bool>,
}

/// Known values of D, the number of weight n − d codewords.
pub fn d_closed_form(field: &Field, d: usize) -> DClosedForm {
    let (n, q, p) = (field.n(), field.q(), field.p());
    if d < 2 || d > n {
        return DClosedForm::Unknown;
    }
    let qn1 = q.pow(n as u32) - 1;
    let Some(sq) = qn1.checked_mul(qn1) else {
        return DClosedForm::Unknown;
    };
    let full = sq / (q - 1);
    if n <= d * (d - 1) {
        return DClosedForm::Exact(if n % d == 0 { sq / (q.pow(d as u32) - 1) } else { 0 });
    }
    if n == d * (d - 1) + 1 {
        return DClosedForm::Exact(if is_power_of(d as u64 - 1, p) { full } else { 0 });
    }
    match (d, n) {
        // one (a, b) class per root of x² + x + 1 in F_q, none when q ≡ 1 (mod 3)
        (3, 8) => DClosedForm::Exact(
            full * match q % 3 {
                0 => 1,
                1 => 0,
                _ => 2,
            },
        ),
        (4, 15) => DClosedForm::Exact(if p == 2 { full } else { 0 }),
        _ if n == d * d - 1 && d.is_power_of_two() && p == 2 => DClosedForm::LowerBound(full),
        _ => DClosedForm::Unknown,
    }
}

/// Exhaustive census. Codewords with c_d ≠ 0 are grouped by their
/// representative ax + bx^σ − x^{σ^d}; each class has q^n − 1 members of
/// equal weight. Codewords with c_d = 0 are ax − x^σ classes and the
/// multiples of x. `d = n` is accepted as a formal stratum where x^{σ^n}
/// acts as the identity.
pub fn weight_census(field: &Field, d: usize, budget: u128, exec: Exec) -> Result<WeightCensus, CodesError> {
    let n = field.n();
    if d < 2 || d > n {
        return Err(CodesError::Range(format!("need 2 <= d <= n, got d = {d}, n = {n}")));
    }
    let order = field.order();
    let required = order.saturating_mul(order).saturating_add(order);
    if required > budget {
        return Err(CodesError::BudgetExceeded { required, budget });
    }
    let class = order - 1;
    let elems: Vec<Element> = field.elements().collect();
    let per_a = map_chunks(exec, elems.len(), 1, |range| {
        let mut hist = vec![0u64; n + 1];
        for &a in &elems[range] {
            for &b in &elems {
                hist[n - kernel_dim(field, &SigmaPoly::trinomial(field, a, b, d))] += 1;
            }
            let pencil = SigmaPoly::new(vec![a, field.neg(Element::ONE)]).expect("nonzero");
            hist[n - kernel_dim(field, &pencil)] += 1;
        }
        hist
    });
    let mut counts = BTreeMap::new();
    for hist in per_a {
        for (w, &c) in hist.iter().enumerate() {
            if c > 0 {
                *counts.entry(w).or_insert(0u128) += c as u128 * class;
            }
        }
    }
    *counts.entry(n).or_insert(0) += class;
    Ok(WeightCensus { d, n, spec: field.record(), counts })
}

/// (q^n − 1) times the number of distinct instances verified to have
/// kernel dimension d: a certified lower bound on D.
pub fn certified_min_weight_count(field: &Field, instances: &[TrinomialInstance], exec: Exec) -> Result<u128, CodesError> {
    let distinct: Vec<TrinomialInstance> = instances.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
    let ok = map_indices(exec, distinct.len(), |i| distinct[i].has_max_kernel(field));
    if let Some(pos) = ok.iter().position(|&x| !x) {
        let bad = distinct[pos];
        return Err(CodesError::Range(format!(
            "instance a = {}, b = {} does not have maximum kernel",
            bad.a.to_hex(),
            bad.b.to_hex()
        )));
    }
    Ok((field.order() - 1) * distinct.len() as u128)
}
