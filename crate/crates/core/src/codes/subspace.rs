use serde::{Deserialize, Serialize};

use crate::gf::{Element, Field, FieldSpec, GfError};
use crate::linalg::{nullspace, rank, span_basis};
use crate::linpoly::{evaluate, SigmaPoly};

use super::CodesError;

/// An F_q-subspace of F_{q^n}, stored as a reduced echelon F_p-basis of
/// h·k vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    spec: FieldSpec,
    basis: Vec<Element>,
    k: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubspaceRecord {
    pub spec: FieldSpec,
    pub k: usize,
    /// F_p-basis, hex encoded.
    pub basis: Vec<String>,
}

/// F_p-basis of the subfield F_{q^t}, the fixed points of x ↦ x^{q^t}.
pub fn subfield_fp_basis(field: &Field, t: usize) -> Result<Vec<Element>, GfError> {
    if t == 0 || field.n() % t != 0 {
        return Err(GfError::NonDivisor { t, n: field.n() });
    }
    let qt = field.q().pow(t as u32);
    let cols: Vec<Element> = (0..field.m())
        .map(|i| {
            let th = field.basis(i);
            field.sub(field.pow(th, qt), th)
        })
        .collect();
    Ok(nullspace(field, &cols))
}

impl Subspace {
    /// The F_q-span of `gens`.
    pub fn span(field: &Field, gens: &[Element]) -> Self {
        let scalars = subfield_fp_basis(field, 1).expect("1 divides n");
        let all: Vec<Element> = gens
            .iter()
            .flat_map(|&v| scalars.iter().map(move |&l| (l, v)))
            .map(|(l, v)| field.mul(l, v))
            .collect();
        Self::from_echelon(field, span_basis(field, &all))
    }

    /// Accepts an F_p-spanning set only if its span is closed under F_q-scaling.
    pub fn from_fp_vectors(field: &Field, vectors: &[Element]) -> Result<Self, CodesError> {
        let basis = span_basis(field, vectors);
        let scalars = subfield_fp_basis(field, 1)?;
        for &l in &scalars {
            for &v in &basis {
                let w = field.mul(l, v);
                if !contains_in(field, &basis, w) {
                    return Err(CodesError::NotSubspace(format!("{} · {} leaves the span", l.to_hex(), v.to_hex())));
                }
            }
        }
        if basis.len() % field.h() != 0 {
            return Err(CodesError::NotSubspace(format!("F_p-dimension {} not divisible by h", basis.len())));
        }
        Ok(Self::from_echelon(field, basis))
    }

    /// F_{q^t} viewed as an F_q-subspace.
    pub fn subfield(field: &Field, t: usize) -> Result<Self, CodesError> {
        Ok(Self::from_echelon(field, subfield_fp_basis(field, t)?))
    }

    pub fn zero(field: &Field) -> Self {
        Self::from_echelon(field, Vec::new())
    }

    fn from_echelon(field: &Field, basis: Vec<Element>) -> Self {
        let k = basis.len() / field.h();
        Self { spec: field.record(), basis, k }
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    /// F_q-dimension.
    pub fn dim(&self) -> usize {
        self.k
    }

    pub fn fp_dim(&self) -> usize {
        self.basis.len()
    }

    pub fn fp_basis(&self) -> &[Element] {
        &self.basis
    }

    /// An F_q-basis: k vectors picked greedily from the F_p-basis.
    pub fn fq_basis(&self, field: &Field) -> Vec<Element> {
        let mut picked: Vec<Element> = Vec::new();
        for &v in &self.basis {
            if picked.len() == self.k {
                break;
            }
            let cur = Subspace::span(field, &picked);
            if !cur.contains(field, v) {
                picked.push(v);
            }
        }
        picked
    }

    pub fn contains(&self, field: &Field, x: Element) -> bool {
        contains_in(field, &self.basis, x)
    }

    /// All p^{hk} elements, in the order of their F_p-coordinates.
    pub fn elements(&self, field: &Field) -> Vec<Element> {
        let mut out = vec![Element::ZERO];
        for &v in &self.basis {
            let mut next = Vec::with_capacity(out.len() * field.p() as usize);
            for c in 0..field.p() {
                let cv = field.mul(field.scalar(c as i64), v);
                next.extend(out.iter().map(|&x| field.add(x, cv)));
            }
            out = next;
        }
        out
    }

    pub fn record(&self) -> SubspaceRecord {
        SubspaceRecord {
            spec: self.spec.clone(),
            k: self.k,
            basis: self.basis.iter().map(|v| v.to_hex()).collect(),
        }
    }
}

fn contains_in(field: &Field, basis: &[Element], x: Element) -> bool {
    let mut vs = basis.to_vec();
    vs.push(x);
    rank(field, &vs) == basis.len()
}

/// d(U, V) = dim U + dim V − 2 dim(U ∩ V), in F_q-dimensions.
pub fn subspace_distance(field: &Field, u: &Subspace, v: &Subspace) -> usize {
    assert_eq!(u.spec, v.spec, "subspaces over different fields");
    let mut all = u.basis.clone();
    all.extend_from_slice(&v.basis);
    let sum = rank(field, &all);
    (2 * sum - u.basis.len() - v.basis.len()) / field.h()
}

/// αV.
pub fn cyclic_shift(field: &Field, v: &Subspace, alpha: Element) -> Result<Subspace, CodesError> {
    if alpha.is_zero() {
        return Err(CodesError::DivisionByZero);
    }
    let shifted: Vec<Element> = v.basis.iter().map(|&x| field.mul(alpha, x)).collect();
    Ok(Subspace::from_echelon(field, span_basis(field, &shifted)))
}

/// The monic q-polynomial of q-degree k whose roots are exactly V, built
/// one basis vector at a time: P_{V+⟨u⟩} = P_V^q − P_V(u)^{q−1} P_V.
pub fn subspace_polynomial(field: &Field, v: &Subspace) -> Result<SigmaPoly, CodesError> {
    if field.s() != 1 {
        return Err(CodesError::SigmaMismatch(field.s()));
    }
    let mut coeffs = vec![Element::ONE];
    for u in v.fq_basis(field) {
        let pu = evaluate(field, &SigmaPoly::new(coeffs.clone())?, u);
        if pu.is_zero() {
            return Err(CodesError::NotSubspace("basis vector already a root".into()));
        }
        let t = field.pow(pu, field.q() - 1);
        let mut next = vec![Element::ZERO; coeffs.len() + 1];
        for (i, &c) in coeffs.iter().enumerate() {
            next[i + 1] = field.add(next[i + 1], field.sigma(c, 1));
            next[i] = field.sub(next[i], field.mul(t, c));
        }
        coeffs = next;
    }
    Ok(SigmaPoly::new(coeffs)?)
}

/// α^{σ^k} P(α^{−1}x), coefficientwise.
pub fn shifted_polynomial(field: &Field, f: &SigmaPoly, alpha: Element) -> Result<SigmaPoly, CodesError> {
    let inv = field.inv(alpha)?;
    let top = field.sigma(alpha, f.sdegree() as i64);
    let coeffs = f
        .coeffs()
        .iter()
        .enumerate()
        .map(|(i, &c)| field.mul(field.mul(top, c), field.sigma(inv, i as i64)))
        .collect();
    Ok(SigmaPoly::new(coeffs)?)
}

/// k − i, with i the largest index below the σ-degree k carrying a
/// nonzero coefficient.
pub fn gap(f: &SigmaPoly) -> Result<usize, CodesError> {
    let k = f.sdegree();
    (0..k)
        .rev()
        .find(|&i| !f.coeff(i).is_zero())
        .map(|i| k - i)
        .ok_or(CodesError::ZeroBelowTop(k))
}

/// The gap, or k flagged `true` when nothing sits below the top.
pub fn gap_or_top(f: &SigmaPoly) -> (usize, bool) {
    match gap(f) {
        Ok(g) => (g, false),
        Err(_) => (f.sdegree(), true),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linpoly::kernel_dim;

    #[test]
    fn trivial_polynomials() {
        let f = Field::new(2, 1, 6, 1).unwrap();
        let p0 = subspace_polynomial(&f, &Subspace::zero(&f)).unwrap();
        assert_eq!(p0.coeffs(), &[Element::ONE]);
        let fq = Subspace::subfield(&f, 1).unwrap();
        assert_eq!(fq.dim(), 1);
        assert_eq!(subspace_polynomial(&f, &fq).unwrap(), SigmaPoly::subfield(&f, 1));
        let f3 = Subspace::subfield(&f, 3).unwrap();
        assert_eq!(subspace_polynomial(&f, &f3).unwrap(), SigmaPoly::subfield(&f, 3));
    }

    #[test]
    fn fq_structure_over_extension() {
        let f = Field::new(2, 2, 3, 1).unwrap();
        let v = Subspace::span(&f, &[f.basis(1)]);
        assert_eq!((v.dim(), v.fp_dim()), (1, 2));
        assert!(Subspace::from_fp_vectors(&f, &[f.basis(1)]).is_err());
        let p = subspace_polynomial(&f, &v).unwrap();
        assert_eq!(kernel_dim(&f, &p), 1);
        for x in v.elements(&f) {
            assert!(evaluate(&f, &p, x).is_zero());
        }
    }

    #[test]
    fn sigma_must_be_frobenius() {
        let f = Field::new(2, 1, 5, 2).unwrap();
        assert_eq!(subspace_polynomial(&f, &Subspace::zero(&f)), Err(CodesError::SigmaMismatch(2)));
    }

    #[test]
    fn gap_conventions() {
        let f = Field::new(2, 1, 7, 1).unwrap();
        let a = f.element(3).unwrap();
        let b = f.element(5).unwrap();
        assert_eq!(gap(&SigmaPoly::trinomial(&f, a, b, 3)), Ok(2));
        assert_eq!(gap(&SigmaPoly::trinomial(&f, a, Element::ZERO, 3)), Ok(3));
        assert_eq!(gap(&SigmaPoly::subfield(&f, 4)), Ok(4));
        let top_only = SigmaPoly::new(vec![Element::ZERO, Element::ZERO, Element::ONE]).unwrap();
        assert_eq!(gap(&top_only), Err(CodesError::ZeroBelowTop(2)));
        assert_eq!(gap_or_top(&top_only), (2, true));
    }

    #[test]
    fn distance_basics() {
        let f = Field::new(2, 1, 6, 1).unwrap();
        let u = Subspace::span(&f, &[f.basis(0), f.basis(1)]);
        let v = Subspace::span(&f, &[f.basis(2), f.basis(3)]);
        assert_eq!(subspace_distance(&f, &u, &u), 0);
        assert_eq!(subspace_distance(&f, &u, &v), 4);
        assert_eq!(cyclic_shift(&f, &u, Element::ONE).unwrap(), u);
        assert_eq!(cyclic_shift(&f, &u, Element::ZERO), Err(CodesError::DivisionByZero));
    }
}
