use serde::Serialize;

use crate::gf::{Field, FieldSpec};
use crate::linalg::rank;
use crate::parallel::{map_chunks, Exec};

use super::subspace::subfield_fp_basis;
use super::{CodesError, Subspace};

/// The orbit {αV : α ∈ F_{q^n}^*}.
#[derive(Clone, Debug)]
pub struct OrbitCode {
    pub generator: Subspace,
    /// (q^n − 1)/(q^t − 1)
    pub size: u128,
    /// F_{q^t} is the stabilizer of the generator.
    pub t: usize,
    /// Certified minimum distance, when certification ran.
    pub min_distance: Option<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct OrbitCodeRecord {
    pub spec: FieldSpec,
    pub generator: Vec<String>,
    pub k: usize,
    pub size: u128,
    pub t: usize,
    pub min_distance: Option<usize>,
    pub certified: bool,
}

impl OrbitCode {
    pub fn record(&self) -> OrbitCodeRecord {
        let g = self.generator.record();
        OrbitCodeRecord {
            spec: g.spec,
            generator: g.basis,
            k: g.k,
            size: self.size,
            t: self.t,
            min_distance: self.min_distance,
            certified: self.min_distance.is_some(),
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct OrbitOptions {
    pub certify: bool,
    /// Cap on the number of shifts compared during certification.
    pub budget: u128,
    pub exec: Exec,
}

impl Default for OrbitOptions {
    fn default() -> Self {
        Self { certify: true, budget: crate::trinomial::DEFAULT_BUDGET, exec: Exec::default() }
    }
}

/// Largest t | n with F_{q^t}·V = V.
pub fn stabilizer_degree(field: &Field, v: &Subspace) -> usize {
    let n = field.n();
    (1..=n)
        .rev()
        .filter(|t| n % t == 0)
        .find(|&t| {
            let sub = subfield_fp_basis(field, t).expect("t divides n");
            sub.iter().all(|&l| v.fp_basis().iter().all(|&x| v.contains(field, field.mul(l, x))))
        })
        .unwrap_or(1)
}

/// Orbit size from the stabilizer, and optionally the minimum distance.
///
/// Distance is shift invariant, so comparing V against every other shift
/// covers all pairs. Shifts are g^i V for a primitive g and
/// 0 < i < size, one per coset of the stabilizer.
pub fn build_orbit_code(field: &Field, v: &Subspace, opts: &OrbitOptions) -> Result<OrbitCode, CodesError> {
    if v.dim() < 2 {
        return Err(CodesError::DimensionTooSmall(v.dim()));
    }
    let t = stabilizer_degree(field, v);
    let size = (field.order() - 1) / (field.q().pow(t as u32) - 1);
    let mut code = OrbitCode { generator: v.clone(), size, t, min_distance: None };
    if !opts.certify {
        return Ok(code);
    }
    if size > opts.budget {
        return Err(CodesError::BudgetExceeded { required: size, budget: opts.budget });
    }
    let g = field.primitive_element()?;
    let base = v.fp_basis();
    let fp_dim = base.len();
    const CHUNK: usize = 256;
    let mins = map_chunks(opts.exec, size as usize - 1, CHUNK, |range| {
        let mut alpha = field.pow(g, range.start as u128 + 1);
        let mut best = usize::MAX;
        let mut all = Vec::with_capacity(2 * fp_dim);
        for _ in range {
            all.clear();
            all.extend_from_slice(base);
            all.extend(base.iter().map(|&x| field.mul(alpha, x)));
            let dist = (2 * rank(field, &all) - 2 * fp_dim) / field.h();
            best = best.min(dist);
            alpha = field.mul(alpha, g);
        }
        best
    });
    code.min_distance = mins.into_iter().min();
    Ok(code)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subfield_orbit_size() {
        let f = Field::new(2, 1, 6, 1).unwrap();
        let v = Subspace::subfield(&f, 3).unwrap();
        let code = build_orbit_code(&f, &v, &OrbitOptions::default()).unwrap();
        assert_eq!((code.t, code.size), (3, 9));
        // distinct shifts of F_{q^3} meet only in 0
        assert_eq!(code.min_distance, Some(6));
        let v2 = Subspace::subfield(&f, 2).unwrap();
        assert_eq!(build_orbit_code(&f, &v2, &OrbitOptions::default()).unwrap().size, 21);
    }

    #[test]
    fn small_dimension_rejected() {
        let f = Field::new(2, 1, 6, 1).unwrap();
        let v = Subspace::subfield(&f, 1).unwrap();
        assert!(matches!(build_orbit_code(&f, &v, &OrbitOptions::default()), Err(CodesError::DimensionTooSmall(1))));
    }

    #[test]
    fn budget_applies_to_certification_only() {
        let f = Field::new(2, 1, 7, 1).unwrap();
        let v = Subspace::span(&f, &[f.basis(0), f.basis(1)]);
        let opts = OrbitOptions { budget: 10, ..Default::default() };
        assert!(matches!(build_orbit_code(&f, &v, &opts), Err(CodesError::BudgetExceeded { .. })));
        let code = build_orbit_code(&f, &v, &OrbitOptions { certify: false, ..opts }).unwrap();
        assert_eq!((code.size, code.min_distance), (127, None));
    }
}
