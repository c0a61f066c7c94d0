use crate::gf::{Element, Field, FrobExponent};
use crate::parallel::{map_chunks, Exec};

use super::{sign, TrinomialError, TrinomialInstance};

/// Default cap on (a, b) pairs examined by a scan.
pub const DEFAULT_BUDGET: u128 = 1 << 26;

/// Largest conjugate table (elements) kept in memory during a scan.
const CONJ_TABLE_LIMIT: u128 = 1 << 22;

/// Per-pair test used by a scan.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Oracle {
    /// σ-companion vector sweep, hits confirmed by kernel dimension.
    #[default]
    Vector,
    /// Kernel dimension for every pair.
    KernelDim,
}

pub struct EnumerateOptions<'a> {
    pub budget: u128,
    pub exec: Exec,
    pub oracle: Oracle,
    /// Restricts the scan to the a values it accepts.
    pub a_filter: Option<&'a (dyn Fn(Element) -> bool + Sync)>,
}

impl Default for EnumerateOptions<'_> {
    fn default() -> Self {
        Self { budget: DEFAULT_BUDGET, exec: Exec::default(), oracle: Oracle::default(), a_filter: None }
    }
}

/// C_L C_L^σ ⋯ C_L^{σ^{n−1}} e_0 = e_0 for L = ax + bx^σ − x^{σ^d}, given the
/// conjugates σ^i(a), σ^i(b) for i < n.
pub fn trinomial_vector_check(field: &Field, a_conj: &[Element], b_conj: &[Element], d: usize) -> bool {
    let n = a_conj.len();
    let mut v = [Element::ZERO; 64];
    assert!(d <= v.len(), "σ-degree too large for the vector sweep");
    v[0] = Element::ONE;
    for i in (0..n).rev() {
        let last = v[d - 1];
        for r in (1..d).rev() {
            v[r] = v[r - 1];
        }
        v[0] = field.mul(a_conj[i], last);
        if !last.is_zero() {
            v[1] = field.add(v[1], field.mul(b_conj[i], last));
        }
    }
    v[0] == Element::ONE && v[1..d].iter().all(|x| x.is_zero())
}

fn conjugates(field: &Field, x: Element) -> Vec<Element> {
    (0..field.n()).map(|i| field.sigma(x, i as i64)).collect()
}

/// The a values a scan visits: nonzero, passing the norm condition
/// N(a) = (−1)^{n(d+1)} forced by the leading coefficient −1, and the filter.
fn candidate_as(field: &Field, d: usize, opts: &EnumerateOptions) -> Result<Vec<Element>, TrinomialError> {
    let order = field.order();
    let q = field.q();
    let fiber = (order - 1) / (q - 1);
    if opts.a_filter.is_some() && order > opts.budget {
        return Err(TrinomialError::BudgetExceeded { required: fiber * order, budget: opts.budget });
    }
    if opts.a_filter.is_none() && fiber.saturating_mul(order) > opts.budget {
        return Err(TrinomialError::BudgetExceeded { required: fiber.saturating_mul(order), budget: opts.budget });
    }
    let target = sign(field, field.n() * (d + 1));
    let prune = d < field.n();
    Ok(field
        .nonzero_elements()
        .filter(|&a| !prune || field.norm(a) == target)
        .filter(|&a| opts.a_filter.is_none_or(|f| f(a)))
        .collect())
}

/// Every (a, b) with dim ker(ax + bx^σ − x^{σ^d}) = d, sorted by (a, b).
///
/// a = 0 never qualifies and is skipped. The number of pairs examined is
/// checked against the budget before any work starts.
pub fn enumerate_max_kernel(field: &Field, d: usize, opts: &EnumerateOptions) -> Result<Vec<TrinomialInstance>, TrinomialError> {
    if d < 2 || d >= field.n() {
        return Err(TrinomialError::Range(format!("need 2 <= d < n, got d = {d}, n = {}", field.n())));
    }
    let avals = candidate_as(field, d, opts)?;
    let required = avals.len() as u128 * field.order();
    if required > opts.budget {
        return Err(TrinomialError::BudgetExceeded { required, budget: opts.budget });
    }
    let order = field.order();
    let b_table: Option<Vec<Element>> = (opts.oracle == Oracle::Vector && order * field.n() as u128 <= CONJ_TABLE_LIMIT)
        .then(|| field.elements().flat_map(|b| conjugates(field, b)).collect());
    let n = field.n();

    let per_chunk = map_chunks(opts.exec, avals.len(), 1, |range| {
        let mut hits = Vec::new();
        for &a in &avals[range] {
            let a_conj = conjugates(field, a);
            for b in field.elements() {
                let b_conj_buf;
                let found = match opts.oracle {
                    Oracle::KernelDim => TrinomialInstance::new(d, a, b).has_max_kernel(field),
                    Oracle::Vector => {
                        let b_conj = match &b_table {
                            Some(t) => &t[b.packed() as usize * n..(b.packed() as usize + 1) * n],
                            None => {
                                b_conj_buf = conjugates(field, b);
                                &b_conj_buf[..]
                            }
                        };
                        trinomial_vector_check(field, &a_conj, b_conj, d)
                            && TrinomialInstance::new(d, a, b).has_max_kernel(field)
                    }
                };
                if found {
                    hits.push(TrinomialInstance::new(d, a, b));
                }
            }
        }
        hits
    });
    Ok(per_chunk.into_iter().flatten().collect())
}

/// All max-kernel pairs for n = d(d−1) + g, visiting only the b that solve
/// b^{S_g} = (−1)^g a^{S_g} a^{σ^g e_1} (S_g = Σ_{i<g} σ^i,
/// e_1 = Σ_{i≤d−2} σ^{id}), a condition every max-kernel pair satisfies.
/// Needs log tables. Budget counts a values plus candidate checks.
pub fn enumerate_with_necessary_pruning(
    field: &Field,
    d: usize,
    opts: &EnumerateOptions,
) -> Result<Vec<TrinomialInstance>, TrinomialError> {
    let n = field.n();
    if d < 3 || n <= d * (d - 1) || n >= d * d {
        return Err(TrinomialError::Range(format!("need n = d(d-1) + g with 1 <= g < d, got d = {d}, n = {n}")));
    }
    if !field.has_tables() {
        return Err(TrinomialError::Range("pruned enumeration needs a tabled field".into()));
    }
    let g = n - d * (d - 1);
    let big_n = (field.order() - 1) as u64;
    let sg = FrobExponent::sigma_ratio(g as u64);
    let e = (field.exponent_eval(&sg) % big_n as u128) as u64;
    let step = gcd(e, big_n);
    let required = field.order() * (1 + step as u128);
    if required > opts.budget {
        return Err(TrinomialError::BudgetExceeded { required, budget: opts.budget });
    }
    let avals = candidate_as(field, d, &EnumerateOptions { budget: u128::MAX, ..*opts })?;
    let du = d as u64;
    let rhs_exp = sg.clone() + FrobExponent::geometric(0, du, du - 1).shifted(g as u64);
    let modulus = big_n / step;
    let e_inv = mod_inverse(e / step % modulus, modulus);
    let per_chunk = map_chunks(opts.exec, avals.len(), 1, |range| {
        let mut hits = Vec::new();
        for &a in &avals[range] {
            let rhs = field.mul(sign(field, g), field.power_by_exponent(a, &rhs_exp).expect("a is nonzero"));
            let l = field.discrete_log(rhs).expect("rhs is nonzero");
            if l % step != 0 {
                continue;
            }
            let x0 = ((l / step) as u128 * e_inv as u128 % modulus as u128) as u64;
            let mut bs: Vec<Element> = (0..step)
                .map(|j| field.antilog(x0 + j * modulus).expect("tabled"))
                .collect();
            bs.sort();
            let a_conj = conjugates(field, a);
            for b in bs {
                if trinomial_vector_check(field, &a_conj, &conjugates(field, b), d)
                    && TrinomialInstance::new(d, a, b).has_max_kernel(field)
                {
                    hits.push(TrinomialInstance::new(d, a, b));
                }
            }
        }
        hits
    });
    Ok(per_chunk.into_iter().flatten().collect())
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn mod_inverse(x: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let (mut old_r, mut r) = (x as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let qt = old_r / r;
        (old_r, r) = (r, old_r - qt * r);
        (old_s, s) = (s, old_s - qt * s);
    }
    old_s.rem_euclid(m as i128) as u64
}
