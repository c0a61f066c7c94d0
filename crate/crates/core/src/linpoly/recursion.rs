//! Entries M_{l,k} of A_k = C_L C_L^σ ⋯ C_L^{σ^{k−1}} for
//! L = ax + bx^σ − x^{σ^d}, and the coefficients c^k_{j,t} of the j-fold
//! expansion M_{l,k} = Σ_t c^k_{j,t} M_{l,k−jd+t}.

use crate::gf::{Element, Field};

use super::LinPolyError;

/// Memoized M_{l,k}: the (l, d)-entry of A_k, extended to k ≤ 0 by
/// M_{l,l−d} = 1 and zero otherwise. Owned by one computation; not shared.
pub struct MEntryTable<'f> {
    field: &'f Field,
    a: Element,
    b: Element,
    d: usize,
    // values[l-1][k + d - 1] for k ≥ 1 - d
    values: Vec<Vec<Element>>,
}

impl<'f> MEntryTable<'f> {
    pub fn new(field: &'f Field, a: Element, b: Element, d: usize) -> Result<Self, LinPolyError> {
        if d < 2 {
            return Err(LinPolyError::IndexOutOfRange(format!("d = {d} must be at least 2")));
        }
        let values = (1..=d)
            .map(|l| {
                (1 - d as i64..=0)
                    .map(|k| if k == l as i64 - d as i64 { Element::ONE } else { Element::ZERO })
                    .collect()
            })
            .collect();
        Ok(Self { field, a, b, d, values })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn get(&mut self, l: usize, k: i64) -> Result<Element, LinPolyError> {
        if l == 0 || l > self.d {
            return Err(LinPolyError::IndexOutOfRange(format!("l = {l} outside 1..={}", self.d)));
        }
        let d = self.d as i64;
        if k < 1 - d {
            return Ok(Element::ZERO);
        }
        let row = &mut self.values[l - 1];
        let f = self.field;
        while (row.len() as i64) < k + d {
            let kk = row.len() as i64 - d + 1;
            let idx = |x: i64| (x + d - 1) as usize;
            let v = f.add(
                f.mul(row[idx(kk - d)], f.sigma(self.a, kk - 1)),
                f.mul(row[idx(kk - d + 1)], f.sigma(self.b, kk - 1)),
            );
            row.push(v);
        }
        Ok(row[(k + d - 1) as usize])
    }

    /// A_k as a d×d matrix (k ≥ d), entry (l, j) = M_{l, k−d+j}.
    pub fn matrix(&mut self, k: usize) -> Result<super::MatrixExt, LinPolyError> {
        if k < self.d {
            return Err(LinPolyError::IndexOutOfRange(format!("k = {k} < d = {}", self.d)));
        }
        let d = self.d;
        let mut out = super::MatrixExt::zeros(d, d);
        for l in 1..=d {
            for j in 1..=d {
                out.set(l - 1, j - 1, self.get(l, (k - d + j) as i64)?);
            }
        }
        Ok(out)
    }

    /// M_{1,n−d+1} = 1 and M_{l,n−d+1} = 0 for l ≥ 2, i.e. A_n e_0 = e_0.
    pub fn first_column_is_unit(&mut self) -> Result<bool, LinPolyError> {
        let k = self.field.n() as i64 - self.d as i64 + 1;
        if self.get(1, k)? != Element::ONE {
            return Ok(false);
        }
        for l in 2..=self.d {
            if !self.get(l, k)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// One-shot M_{l,k}.
pub fn m_entry(
    field: &Field,
    a: Element,
    b: Element,
    d: usize,
    l: usize,
    k: i64,
) -> Result<Element, LinPolyError> {
    MEntryTable::new(field, a, b, d)?.get(l, k)
}

/// c^k_{j,0}, …, c^k_{j,j} by pushing the path weights forward one step at a
/// time. The expansion is valid for k − (j−1)d ≥ 1.
pub fn c_coeffs_recursive(field: &Field, a: Element, b: Element, d: usize, j: usize, k: i64) -> Vec<Element> {
    let d = d as i64;
    let mut cur = vec![Element::ONE];
    for s in 0..j as i64 {
        let kappa = |t: i64| k - s * d + t;
        let mut next = vec![Element::ZERO; cur.len() + 1];
        for (t, &w) in cur.iter().enumerate() {
            if w.is_zero() {
                continue;
            }
            let e = kappa(t as i64) - 1;
            next[t] = field.add(next[t], field.mul(w, field.sigma(a, e)));
            next[t + 1] = field.add(next[t + 1], field.mul(w, field.sigma(b, e)));
        }
        cur = next;
    }
    cur
}

/// c^k_{j,t} as a sum over the ways (i_0, …, i_t) of splitting the j − t
/// left moves around the t right moves.
pub fn c_coeff_closed(
    field: &Field,
    a: Element,
    b: Element,
    d: usize,
    j: usize,
    t: usize,
    k: i64,
) -> Result<Element, LinPolyError> {
    if t > j {
        return Err(LinPolyError::IndexOutOfRange(format!("t = {t} > j = {j}")));
    }
    let mut parts = vec![0usize; t + 1];
    let mut total = Element::ZERO;
    compositions(&mut parts, 0, j - t, &mut |parts| {
        total = field.add(total, path_product(field, a, b, d as i64, k, parts));
    });
    Ok(total)
}

fn compositions(parts: &mut [usize], pos: usize, remaining: usize, visit: &mut impl FnMut(&[usize])) {
    if pos + 1 == parts.len() {
        parts[pos] = remaining;
        visit(parts);
        return;
    }
    for x in 0..=remaining {
        parts[pos] = x;
        compositions(parts, pos + 1, remaining - x, visit);
    }
}

fn path_product(field: &Field, a: Element, b: Element, d: i64, k: i64, parts: &[usize]) -> Element {
    let mut acc = Element::ONE;
    let mut prefix = 0i64;
    for (r, &ir) in parts.iter().enumerate() {
        let r = r as i64;
        for jr in 1..=ir as i64 {
            acc = field.mul(acc, field.sigma(a, k - (prefix + r + jr - 1) * d + r - 1));
        }
        prefix += ir as i64;
        // the b-factor after block r (there is none after the last block)
        if (r as usize) + 1 < parts.len() {
            acc = field.mul(acc, field.sigma(b, k - (prefix + r) * d + r - 1));
        }
    }
    acc
}

/// a^{σ^d} b = a^σ b^{σ^d}
pub fn commutation_holds(field: &Field, a: Element, b: Element, d: usize) -> bool {
    let d = d as i64;
    field.mul(field.sigma(a, d), b) == field.mul(field.sigma(a, 1), field.sigma(b, d))
}

/// z^k_{j,i} from the Pascal-type recursion; c^k_{j,i} = binom(j,i)·z^k_{j,i}.
/// Both updates of the middle case are computed and compared.
pub fn z_recursion(
    field: &Field,
    a: Element,
    b: Element,
    d: usize,
    j: usize,
    i: usize,
    k: i64,
) -> Result<Element, LinPolyError> {
    if !commutation_holds(field, a, b, d) {
        return Err(LinPolyError::HypothesisViolated);
    }
    if i > j {
        return Err(LinPolyError::IndexOutOfRange(format!("i = {i} > j = {j}")));
    }
    let di = d as i64;
    if k < di + 1 {
        return Err(LinPolyError::IndexOutOfRange(format!("k = {k} < d + 1")));
    }
    let mut row = vec![Element::ONE];
    for jj in 1..=j {
        let base = k - (jj as i64 - 1) * di;
        let mut next = vec![Element::ZERO; jj + 1];
        next[0] = field.mul(row[0], field.sigma(a, base - 1));
        for ii in 1..jj {
            let via_a = field.mul(row[ii], field.sigma(a, base + ii as i64 - 1));
            let via_b = field.mul(row[ii - 1], field.sigma(b, base + ii as i64 - 2));
            if via_a != via_b {
                return Err(LinPolyError::BranchMismatch { j: jj, i: ii });
            }
            next[ii] = via_a;
        }
        next[jj] = field.mul(row[jj - 1], field.sigma(b, base + jj as i64 - 2));
        row = next;
    }
    Ok(row[i])
}

/// binom(j, i) mod p by Lucas's theorem.
pub fn binom_mod_p(j: u64, i: u64, p: u64) -> u64 {
    if i > j {
        return 0;
    }
    let (mut j, mut i) = (j, i);
    let mut acc = 1u64;
    while j > 0 || i > 0 {
        let (jd, id) = (j % p, i % p);
        if id > jd {
            return 0;
        }
        acc = acc * small_binom(jd, id, p) % p;
        j /= p;
        i /= p;
    }
    acc
}

fn small_binom(n: u64, k: u64, p: u64) -> u64 {
    let k = k.min(n - k);
    let (mut num, mut den) = (1u128, 1u128);
    let pm = p as u128;
    for t in 0..k as u128 {
        num = num * ((n as u128 - t) % pm) % pm;
        den = den * ((t + 1) % pm) % pm;
    }
    (num * crate::gf::fp_poly::inv_mod_p(den as u64, p) as u128 % pm) as u64
}
