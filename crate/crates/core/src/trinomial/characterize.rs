use crate::gf::{Element, Field, FrobExponent};
use crate::linpoly::c_coeffs_recursive;

use super::{is_power_of, sign, ClassificationResult, Rule, TrinomialError, TrinomialInstance};

fn pw(field: &Field, x: Element, e: &FrobExponent) -> Result<Element, TrinomialError> {
    Ok(field.power_by_exponent(x, e)?)
}

/// g with n = d(d−1) + g, 1 ≤ g ≤ d−1.
fn residue_g(d: usize, n: usize) -> Result<usize, TrinomialError> {
    if d < 3 {
        return Err(TrinomialError::Range(format!("d = {d} must be at least 3")));
    }
    let base = d * (d - 1);
    if n <= base || n >= base + d {
        return Err(TrinomialError::Range(format!("n = {n} is not d(d-1) + g with 1 <= g <= d-1 (d = {d})")));
    }
    Ok(n - base)
}

/// Regime n ≤ d(d−1): impossible unless d | n, in which case b = 0 and
/// N_{q^n/q^d}(a) = 1.
pub fn classify_small_n(field: &Field, inst: &TrinomialInstance) -> Result<ClassificationResult, TrinomialError> {
    let (d, n) = (inst.d, field.n());
    if d < 3 || n > d * (d - 1) {
        return Err(TrinomialError::Range(format!("need d >= 3 and n <= d(d-1), got d = {d}, n = {n}")));
    }
    if n % d != 0 {
        return Ok(ClassificationResult::not_max(Rule::T13a, format!("d = {d} does not divide n = {n}")));
    }
    let mut witness = Vec::new();
    if !inst.b.is_zero() {
        witness.push("b != 0".to_string());
    }
    if field.relative_norm(inst.a, d)? != Element::ONE {
        witness.push(format!("N_(q^{n}/q^{d})(a) != 1"));
    }
    Ok(ClassificationResult::new(Rule::T13b, witness))
}

/// Regime n = d(d−1) + 1: N(a) = (−1)^{d−1}, b = −a^{σ f_1} with
/// f_1 = Σ_{i<d} σ^{id}, and d − 1 a power of p.
pub fn check_case_c(field: &Field, inst: &TrinomialInstance) -> Result<ClassificationResult, TrinomialError> {
    let d = inst.d;
    if residue_g(d, field.n())? != 1 {
        return Err(TrinomialError::Range(format!("n = {} is not d(d-1) + 1", field.n())));
    }
    Ok(ClassificationResult::new(Rule::T13c, case_c_witness(field, inst.a, inst.b, d)?))
}

fn case_c_witness(field: &Field, a: Element, b: Element, d: usize) -> Result<Vec<String>, TrinomialError> {
    if a.is_zero() {
        return Ok(vec!["a = 0 violates the norm condition".into()]);
    }
    let mut witness = Vec::new();
    if field.norm(a) != sign(field, d - 1) {
        witness.push(format!("N(a) != (-1)^{}", d - 1));
    }
    let f1 = FrobExponent::geometric(1, d as u64, d as u64);
    if b != field.neg(pw(field, a, &f1)?) {
        witness.push("b != -a^(σ f_1)".into());
    }
    if !is_power_of(d as u64 - 1, field.p()) {
        witness.push(format!("d - 1 = {} is not a power of p = {}", d - 1, field.p()));
    }
    Ok(witness)
}

/// Required values of c_{d−1,t}, t = 0..d−1, at k = n−d+1 for n = d(d−1)+g
/// (a ≠ 0):
///   c_{d−1,d−g+u} = (−1)^u Π_{i<u} b^{σ^i} Π_{i≤u} a^{−σ^i},  0 ≤ u < g,
///   c_{d−1,0}     = (−1)^g Π_{i<g} b^{σ^i} a^{−σ^i},
///   zero otherwise.
pub fn ladder_targets(field: &Field, a: Element, b: Element, d: usize, g: usize) -> Result<Vec<Element>, TrinomialError> {
    let a_inv = field.inv(a)?;
    let mut out = vec![Element::ZERO; d];
    let mut run = Element::ONE; // Π_{i<u} b^{σ^i} a^{−σ^i}
    for u in 0..g {
        let ai = field.sigma(a_inv, u as i64);
        out[d - g + u] = field.mul(sign(field, u), field.mul(run, ai));
        run = field.mul(run, field.mul(field.sigma(b, u as i64), ai));
    }
    out[0] = field.mul(sign(field, g), run);
    Ok(out)
}

/// The coefficient ladder for n = d(d−1) + g: c_{d−1,t} from the recursion
/// engine compared against [`ladder_targets`].
pub fn main_system_check(field: &Field, inst: &TrinomialInstance) -> Result<ClassificationResult, TrinomialError> {
    let d = inst.d;
    let n = field.n();
    let g = residue_g(d, n)?;
    if inst.a.is_zero() {
        return Ok(ClassificationResult::not_max(Rule::T14System, "a = 0 violates the norm condition"));
    }
    let k = (n - d + 1) as i64;
    let c = c_coeffs_recursive(field, inst.a, inst.b, d, d - 1, k);
    let want = ladder_targets(field, inst.a, inst.b, d, g)?;
    let witness = (0..d)
        .filter(|&t| c[t] != want[t])
        .map(|t| format!("c_(d-1,{t}) = {} but the system requires {}", c[t].to_hex(), want[t].to_hex()))
        .collect();
    Ok(ClassificationResult::new(Rule::T14System, witness))
}

/// The two identities forced on (a, b) by the extreme ladder entries, with
/// e_1 = Σ_{i=0}^{d−2} σ^{id}, e_2 = Σ_{i=1}^{d−1} σ^{i(d−1)}, S_g = Σ_{i<g} σ^i:
///   b^{S_g} a^{−S_g} = (−1)^g a^{σ^g e_1},
///   b^{S_{g−1}} a^{−S_g} = (−1)^{g−1} b^{σ^{g−1} e_2}.
/// Returns false for a = 0.
pub fn necessary_conditions(field: &Field, inst: &TrinomialInstance) -> Result<bool, TrinomialError> {
    let (a, b, d) = (inst.a, inst.b, inst.d);
    let g = residue_g(d, field.n())?;
    if a.is_zero() {
        return Ok(false);
    }
    let du = d as u64;
    let sg = FrobExponent::sigma_ratio(g as u64);
    let sg1 = FrobExponent::sigma_ratio(g as u64 - 1);
    let e1 = FrobExponent::geometric(0, du, du - 1);
    let e2 = FrobExponent::geometric(du - 1, du - 1, du - 1);
    let a_neg_sg = pw(field, a, &(-sg.clone()))?;

    let lhs1 = field.mul(pw(field, b, &sg)?, a_neg_sg);
    let rhs1 = field.mul(sign(field, g), pw(field, a, &e1.shifted(g as u64))?);
    let lhs2 = field.mul(pw(field, b, &sg1)?, a_neg_sg);
    let rhs2 = field.mul(sign(field, g - 1), pw(field, b, &e2.shifted(g as u64 - 1))?);
    Ok(lhs1 == rhs1 && lhs2 == rhs2)
}

/// The even-characteristic family at n = d² − 1: d a power of 2 (d ≥ 4),
/// N(a) = 1 and b = a^{−σ^d e_1}.
pub fn family_even(field: &Field, d: usize, a: Element) -> Result<TrinomialInstance, TrinomialError> {
    let mut failed = Vec::new();
    if field.p() != 2 {
        failed.push(format!("q is odd (p = {})", field.p()));
    }
    if d < 4 || !d.is_power_of_two() {
        failed.push(format!("d = {d} is not a power of 2 with d >= 4"));
    }
    if d * d != field.n() + 1 {
        failed.push(format!("n = {} is not d^2 - 1", field.n()));
    }
    if field.norm(a) != Element::ONE {
        failed.push("N(a) != 1".into());
    }
    if !failed.is_empty() {
        return Err(TrinomialError::PreconditionFailed(failed));
    }
    let du = d as u64;
    let e = -FrobExponent::geometric(du, du, du - 1);
    Ok(TrinomialInstance::new(d, a, pw(field, a, &e)?))
}

/// σ-degree 3, n ∈ {3, …, 8}.
pub fn d3_characterize(field: &Field, a: Element, b: Element) -> Result<ClassificationResult, TrinomialError> {
    let n = field.n();
    let rule = Rule::P61(n);
    match n {
        4 | 5 => Ok(ClassificationResult::not_max(rule, "n <= 5 and n != 3")),
        3 | 6 => {
            let mut w = Vec::new();
            if !b.is_zero() {
                w.push("b != 0".to_string());
            }
            if field.relative_norm(a, 3)? != Element::ONE {
                w.push(format!("N_(q^{n}/q^3)(a) != 1"));
            }
            Ok(ClassificationResult::new(rule, w))
        }
        7 => {
            let mut w = case_c_witness(field, a, b, 3)?;
            for s in w.iter_mut().filter(|s| s.starts_with("d - 1")) {
                *s = "q is odd".into();
            }
            Ok(ClassificationResult::new(rule, w))
        }
        8 => {
            if a.is_zero() {
                return Ok(ClassificationResult::not_max(rule, "a = 0 violates the norm condition"));
            }
            let mut w = Vec::new();
            if field.norm(a) != Element::ONE {
                w.push("N(a) != 1".into());
            }
            if field.q() % 3 == 1 {
                w.push("q = 1 (mod 3)".into());
            }
            // α = −b·a^{σ^6+σ^3} must satisfy α² + α + 1 = 0
            let alpha = field.neg(field.mul(b, pw(field, a, &FrobExponent::from_terms([(1, 6), (1, 3)]))?));
            let val = field.add(field.add(field.mul(alpha, alpha), alpha), Element::ONE);
            if !val.is_zero() {
                w.push("-b a^(σ^6+σ^3) is not a root of x^2+x+1".into());
            }
            Ok(ClassificationResult::new(rule, w))
        }
        _ => Err(TrinomialError::Range(format!("d = 3 characterization covers 3 <= n <= 8, got {n}"))),
    }
}

/// c_{3,2} at n = 14 as displayed for σ-degree 4.
pub fn d4_n14_c32(field: &Field, a: Element, b: Element) -> Element {
    let s = |x: Element, i: i64| field.sigma(x, i);
    let t1 = field.mul(field.mul(s(a, 10), s(b, 6)), s(b, 3));
    let t2 = field.mul(field.mul(s(b, 10), s(a, 7)), s(b, 3));
    let t3 = field.mul(field.mul(s(b, 10), s(b, 7)), s(a, 4));
    field.add(field.add(t1, t2), t3)
}

/// c_{3,1} at n = 14 as displayed for σ-degree 4.
pub fn d4_n14_c31(field: &Field, a: Element, b: Element) -> Element {
    let s = |x: Element, i: i64| field.sigma(x, i);
    let t1 = field.mul(field.mul(s(a, 10), s(a, 6)), s(b, 2));
    let t2 = field.mul(field.mul(s(a, 10), s(b, 6)), s(a, 3));
    let t3 = field.mul(field.mul(s(b, 10), s(a, 7)), s(a, 3));
    field.add(field.add(t1, t2), t3)
}

/// The four n = 14 equations exactly as printed, including
/// a^{1+σ} b^{σ^6+σ^3} = −b for the second one (which disagrees with the
/// coefficient ladder; see [`d4_characterize`]).
pub fn d4_n14_displayed_system(field: &Field, a: Element, b: Element) -> Result<[bool; 4], TrinomialError> {
    let e = |t: &[(i64, u64)]| FrobExponent::from_terms(t.iter().copied());
    let a1s = pw(field, a, &e(&[(1, 0), (1, 1)]))?;
    Ok([
        field.mul(a, d4_n14_c32(field, a, b)) == Element::ONE,
        field.mul(a1s, pw(field, b, &e(&[(1, 6), (1, 3)]))?) == field.neg(b),
        pw(field, a, &e(&[(1, 0), (1, 1), (1, 2), (1, 6), (1, 10)]))? == pw(field, b, &e(&[(1, 0), (1, 1)]))?,
        d4_n14_c31(field, a, b).is_zero(),
    ])
}

/// σ-degree 4, n ∈ {4, …, 15}.
///
/// For n = 14 the second equation is taken from the coefficient ladder,
/// a^{1+σ} b^{σ^10+σ^7+σ^4} = −b (that is, c_{3,3} = −b a^{−1−σ}); the other
/// three are used as printed.
pub fn d4_characterize(field: &Field, a: Element, b: Element) -> Result<ClassificationResult, TrinomialError> {
    let n = field.n();
    let rule = Rule::P62(n);
    let e = |t: &[(i64, u64)]| FrobExponent::from_terms(t.iter().copied());
    match n {
        4 | 8 | 12 => {
            let mut w = Vec::new();
            if !b.is_zero() {
                w.push("b != 0".to_string());
            }
            if field.relative_norm(a, 4)? != Element::ONE {
                w.push(format!("N_(q^{n}/q^4)(a) != 1"));
            }
            Ok(ClassificationResult::new(rule, w))
        }
        5..=11 => Ok(ClassificationResult::not_max(rule, "n <= 11 and n not in {4, 8}")),
        13 => {
            let mut w = case_c_witness(field, a, b, 4)?;
            for s in w.iter_mut().filter(|s| s.starts_with("d - 1")) {
                *s = "q is not a power of 3".into();
            }
            Ok(ClassificationResult::new(rule, w))
        }
        14 => {
            if a.is_zero() {
                return Ok(ClassificationResult::not_max(rule, "a = 0 violates the norm condition"));
            }
            let mut w = Vec::new();
            if field.mul(a, d4_n14_c32(field, a, b)) != Element::ONE {
                w.push("a c_(3,2) != 1".into());
            }
            let lhs = field.mul(pw(field, a, &e(&[(1, 0), (1, 1)]))?, pw(field, b, &e(&[(1, 10), (1, 7), (1, 4)]))?);
            if lhs != field.neg(b) {
                w.push("a^(1+σ) b^(σ^10+σ^7+σ^4) != -b".into());
            }
            if pw(field, a, &e(&[(1, 0), (1, 1), (1, 2), (1, 6), (1, 10)]))? != pw(field, b, &e(&[(1, 0), (1, 1)]))? {
                w.push("a^(1+σ+σ^2+σ^6+σ^10) != b^(1+σ)".into());
            }
            if !d4_n14_c31(field, a, b).is_zero() {
                w.push("c_(3,1) != 0".into());
            }
            Ok(ClassificationResult::new(rule, w))
        }
        15 => {
            let mut w = Vec::new();
            if field.norm(a) != Element::ONE {
                w.push("N(a) != 1".into());
            }
            if field.p() != 2 {
                w.push("q is odd".into());
            }
            if a.is_zero() || field.mul(b, pw(field, a, &e(&[(1, 4), (1, 8), (1, 12)]))?) != Element::ONE {
                w.push("b != a^-(σ^4+σ^8+σ^12)".into());
            }
            Ok(ClassificationResult::new(rule, w))
        }
        _ => Err(TrinomialError::Range(format!("d = 4 characterization covers 4 <= n <= 15, got {n}"))),
    }
}

/// c_{d−1,t} at k = n−d+1 written directly in terms of g = n − d(d−1)
/// (the closed system's left-hand side, exponents pre-reduced).
pub fn displayed_main_coeff(field: &Field, a: Element, b: Element, d: usize, g: usize, t: usize) -> Element {
    let (di, gi) = (d as i64, g as i64);
    let mut total = Element::ZERO;
    let mut parts = vec![0usize; t + 1];
    fn walk(parts: &mut [usize], pos: usize, rem: usize, f: &mut impl FnMut(&[usize])) {
        if pos + 1 == parts.len() {
            parts[pos] = rem;
            f(parts);
            return;
        }
        for x in 0..=rem {
            parts[pos] = x;
            walk(parts, pos + 1, rem - x, f);
        }
    }
    walk(&mut parts, 0, d - 1 - t, &mut |parts| {
        let mut acc = Element::ONE;
        let mut prefix = 0i64;
        for (r, &ir) in parts.iter().enumerate() {
            let r = r as i64;
            for jr in 1..=ir as i64 {
                let e = if r as usize == t {
                    di * (ir as i64 - jr) + r + gi
                } else {
                    di * (di - 1 - prefix - r - jr) + gi + r
                };
                acc = field.mul(acc, field.sigma(a, e));
            }
            prefix += ir as i64;
            if (r as usize) < t {
                acc = field.mul(acc, field.sigma(b, di * (di - 2 - prefix - r) + r + gi));
            }
        }
        total = field.add(total, acc);
    });
    total
}
