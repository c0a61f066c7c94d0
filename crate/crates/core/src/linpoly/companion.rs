use crate::gf::{Element, Field};

use super::{LinPolyError, SigmaPoly};

/// A dense matrix over F_{q^n}, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixExt {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Element>,
}

impl MatrixExt {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, entries: vec![Element::ZERO; rows * cols] }
    }

    pub fn identity(k: usize) -> Self {
        let mut m = Self::zeros(k, k);
        for i in 0..k {
            m.set(i, i, Element::ONE);
        }
        m
    }

    pub fn get(&self, r: usize, c: usize) -> Element {
        self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Element) {
        self.entries[r * self.cols + c] = v;
    }

    /// Applies σ^j entrywise.
    pub fn sigma(&self, field: &Field, j: i64) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|&x| field.sigma(x, j)).collect(),
        }
    }

    pub fn mul(&self, field: &Field, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut acc = Element::ZERO;
                for k in 0..self.cols {
                    let x = self.get(r, k);
                    if x.is_zero() {
                        continue;
                    }
                    acc = field.add(acc, field.mul(x, other.get(k, c)));
                }
                out.set(r, c, acc);
            }
        }
        out
    }

    pub fn column(&self, c: usize) -> Vec<Element> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }
}

fn check_normal_form(field: &Field, f: &SigmaPoly) -> Result<(), LinPolyError> {
    if f.sdegree() == 0 || f.leading() != field.neg(Element::ONE) {
        return Err(LinPolyError::NotMonicNegated);
    }
    Ok(())
}

/// The k×k σ-companion matrix: ones on the subdiagonal, last column
/// (a_0, …, a_{k-1})ᵀ.
pub fn companion_matrix(field: &Field, f: &SigmaPoly) -> Result<MatrixExt, LinPolyError> {
    check_normal_form(field, f)?;
    let k = f.sdegree();
    let mut c = MatrixExt::zeros(k, k);
    for r in 1..k {
        c.set(r, r - 1, Element::ONE);
    }
    for r in 0..k {
        c.set(r, k - 1, f.coeff(r));
    }
    Ok(c)
}

/// C · C^σ · … · C^{σ^{n−1}}.
pub fn companion_product(field: &Field, f: &SigmaPoly) -> Result<MatrixExt, LinPolyError> {
    let c = companion_matrix(field, f)?;
    let mut acc = c.clone();
    for i in 1..field.n() {
        acc = acc.mul(field, &c.sigma(field, i as i64));
    }
    Ok(acc)
}

pub fn has_max_kernel_companion(field: &Field, f: &SigmaPoly) -> Result<bool, LinPolyError> {
    let prod = companion_product(field, f)?;
    Ok(prod == MatrixExt::identity(f.sdegree()))
}

/// Tests only the first column: (C · C^σ ⋯ C^{σ^{n−1}}) e_0 = e_0, by n
/// matrix-vector sweeps from the right.
pub fn has_max_kernel_vector(field: &Field, f: &SigmaPoly) -> Result<bool, LinPolyError> {
    check_normal_form(field, f)?;
    let k = f.sdegree();
    let lower: Vec<(usize, Element)> =
        (0..k).map(|r| (r, f.coeff(r))).filter(|(_, c)| !c.is_zero()).collect();
    let mut v = vec![Element::ZERO; k];
    v[0] = Element::ONE;
    let mut next = vec![Element::ZERO; k];
    for i in (0..field.n()).rev() {
        let last = v[k - 1];
        next[0] = Element::ZERO;
        next[1..k].copy_from_slice(&v[..k - 1]);
        if !last.is_zero() {
            for &(r, c) in &lower {
                next[r] = field.add(next[r], field.mul(field.sigma(c, i as i64), last));
            }
        }
        std::mem::swap(&mut v, &mut next);
    }
    Ok(v[0] == Element::ONE && v[1..].iter().all(|x| x.is_zero()))
}
