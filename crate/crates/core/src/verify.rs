//! Verification campaigns: each target replays one family of identities
//! over a parameter grid (exhaustively when the budget allows, otherwise
//! on seeded samples) and reports every disagreement verbatim.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::gf::{Element, Field, GfError};
use crate::linpoly::{
    binom_mod_p, c_coeff_closed, c_coeffs_recursive, commutation_holds, gow_norm_condition, has_max_kernel_companion,
    has_max_kernel_vector, kernel_dim, z_recursion, LinPolyError, MEntryTable, SigmaPoly,
};
use crate::parallel::{map_chunks, map_indices, Exec};
use crate::trinomial::{
    check_case_c, classify_small_n, d3_characterize, d4_characterize, enumerate_max_kernel, family_even,
    main_system_check, necessary_conditions, ClassificationResult, EnumerateOptions, TrinomialError, TrinomialInstance,
};

/// Counterexamples kept verbatim in a report; further ones are only counted.
pub const MAX_REPORTED: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Target {
    Gow,
    Companion,
    MainSystem,
    McgAbc,
    EvenFamily,
    D3,
    D4,
    NecCond,
    Pascal,
    Prop33,
    Cor34,
}

impl Target {
    pub const ALL: [Target; 11] = [
        Target::Gow,
        Target::Companion,
        Target::MainSystem,
        Target::McgAbc,
        Target::EvenFamily,
        Target::D3,
        Target::D4,
        Target::NecCond,
        Target::Pascal,
        Target::Prop33,
        Target::Cor34,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Target::Gow => "gow",
            Target::Companion => "companion",
            Target::MainSystem => "main-system",
            Target::McgAbc => "mcg-abc",
            Target::EvenFamily => "even-family",
            Target::D3 => "d3",
            Target::D4 => "d4",
            Target::NecCond => "neccond",
            Target::Pascal => "pascal",
            Target::Prop33 => "prop33",
            Target::Cor34 => "cor34",
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Target {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Target::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| VerifyError::UnknownTarget(s.to_string()))
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VerifyError {
    #[error("unknown target {0:?}")]
    UnknownTarget(String),
    #[error("campaign needs {required} checks, budget is {budget}")]
    BudgetExceeded { required: u128, budget: u128 },
    #[error("parameters out of range: {0}")]
    Range(String),
    #[error(transparent)]
    Gf(#[from] GfError),
    #[error(transparent)]
    LinPoly(#[from] LinPolyError),
}

impl From<TrinomialError> for VerifyError {
    fn from(e: TrinomialError) -> Self {
        match e {
            TrinomialError::BudgetExceeded { required, budget } => VerifyError::BudgetExceeded { required, budget },
            TrinomialError::Gf(g) => VerifyError::Gf(g),
            TrinomialError::LinPoly(l) => VerifyError::LinPoly(l),
            other => VerifyError::Range(other.to_string()),
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyConfig {
    pub d: usize,
    /// Cap on the number of checks.
    pub budget: u128,
    pub seed: u64,
    /// Seeded sampling instead of an exhaustive sweep.
    pub samples: Option<usize>,
    pub exec: Exec,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self { d: 3, budget: crate::trinomial::DEFAULT_BUDGET, seed: 1, samples: None, exec: Exec::default() }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exhaustive,
    Sampled,
    Family,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub d: usize,
    pub a: String,
    pub b: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub target: String,
    pub mode: Mode,
    pub instances: u128,
    pub failures: u128,
    pub passed: bool,
    pub message: String,
    pub counterexamples: Vec<Counterexample>,
}

struct Outcome {
    mode: Mode,
    instances: u128,
    failures: Vec<Counterexample>,
    failure_count: u128,
}

impl Outcome {
    fn new(mode: Mode, instances: u128, all: Vec<Counterexample>) -> Self {
        let failure_count = all.len() as u128;
        let failures = all.into_iter().take(MAX_REPORTED).collect();
        Self { mode, instances, failures, failure_count }
    }
}

/// Runs one campaign.
pub fn run_verify(field: &Field, target: Target, cfg: &VerifyConfig) -> Result<VerifyReport, VerifyError> {
    let d = cfg.d;
    let family_what = format!("all kernel dim {d}");
    let (out, what): (Outcome, &str) = match target {
        Target::Gow => (gow(field, cfg)?, "Gow bound and norm condition hold"),
        Target::Companion => (pair_suite(field, cfg, |a, b| companion_check(field, a, b, d))?, "equivalence holds"),
        Target::MainSystem => {
            let g = residue(field, d)?;
            if g == 0 {
                return Err(VerifyError::Range("main-system needs n > d(d-1)".into()));
            }
            (pair_suite(field, cfg, |a, b| verdict_check(field, a, b, d, |i| main_system_check(field, i)))?, "coefficient ladder agrees with kernel dimension")
        }
        Target::McgAbc => {
            let g = residue(field, d)?;
            match g {
                0 => (pair_suite(field, cfg, |a, b| verdict_check(field, a, b, d, |i| classify_small_n(field, i)))?, "small-n regimes agree with kernel dimension"),
                1 => (pair_suite(field, cfg, |a, b| verdict_check(field, a, b, d, |i| check_case_c(field, i)))?, "n = d(d-1)+1 criterion agrees with kernel dimension"),
                _ => return Err(VerifyError::Range(format!("mcg-abc needs n <= d(d-1)+1, got n = {}", field.n()))),
            }
        }
        Target::EvenFamily => (even_family(field, cfg)?, family_what.as_str()),
        Target::D3 => {
            require_d(d, 3)?;
            (pair_suite(field, cfg, |a, b| verdict_check(field, a, b, 3, |i| d3_characterize(field, i.a, i.b)))?, "characterization agrees with kernel dimension")
        }
        Target::D4 => {
            require_d(d, 4)?;
            (pair_suite(field, cfg, |a, b| verdict_check(field, a, b, 4, |i| d4_characterize(field, i.a, i.b)))?, "characterization agrees with kernel dimension")
        }
        Target::NecCond => (neccond(field, cfg)?, "every maximum-kernel pair satisfies both identities"),
        Target::Pascal => (pascal(field, cfg)?, "closed form, forward recursion and Pascal recursion agree"),
        Target::Prop33 => (prop33(field, cfg)?, "low-index entries match the table"),
        Target::Cor34 => (pair_suite(field, cfg, |a, b| cor34_check(field, a, b, d))?, "unit first column iff maximum kernel"),
    };
    let passed = out.failure_count == 0;
    let noun = if target == Target::EvenFamily { "members" } else { "instances" };
    let message = if passed {
        format!("{} {noun}, {what}", out.instances)
    } else {
        format!("{} {noun}, {} counterexamples", out.instances, out.failure_count)
    };
    Ok(VerifyReport {
        target: target.name().into(),
        mode: out.mode,
        instances: out.instances,
        failures: out.failure_count,
        passed,
        message,
        counterexamples: out.failures,
    })
}

fn require_d(d: usize, want: usize) -> Result<(), VerifyError> {
    if d != want {
        return Err(VerifyError::Range(format!("this target needs d = {want}, got {d}")));
    }
    Ok(())
}

/// g with n = d(d−1) + g, or 0 when n ≤ d(d−1).
fn residue(field: &Field, d: usize) -> Result<usize, VerifyError> {
    let n = field.n();
    if d < 3 || d >= n {
        return Err(VerifyError::Range(format!("need 3 <= d < n, got d = {d}, n = {n}")));
    }
    let base = d * (d - 1);
    if n <= base {
        return Ok(0);
    }
    if n >= d * d {
        return Err(VerifyError::Range(format!("need n < d^2, got n = {n}")));
    }
    Ok(n - base)
}

fn cex(d: usize, a: Element, b: Element, detail: impl Into<String>) -> Counterexample {
    Counterexample { d, a: a.to_hex(), b: b.to_hex(), detail: detail.into() }
}

fn random_element(field: &Field, rng: &mut ChaCha8Rng) -> Element {
    field.element(rng.gen_range(0..field.order())).expect("in range")
}

fn random_nonzero(field: &Field, rng: &mut ChaCha8Rng) -> Element {
    field.element(rng.gen_range(1..field.order())).expect("in range")
}

/// Runs `check` on every pair (a, b), or on `cfg.samples` seeded pairs.
fn pair_suite<F>(field: &Field, cfg: &VerifyConfig, check: F) -> Result<Outcome, VerifyError>
where
    F: Fn(Element, Element) -> Option<Counterexample> + Sync + Send,
{
    if let Some(k) = cfg.samples {
        if k as u128 > cfg.budget {
            return Err(VerifyError::BudgetExceeded { required: k as u128, budget: cfg.budget });
        }
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        let pairs: Vec<(Element, Element)> =
            (0..k).map(|_| (random_element(field, &mut rng), random_element(field, &mut rng))).collect();
        let found: Vec<Counterexample> = map_indices(cfg.exec, k, |i| check(pairs[i].0, pairs[i].1)).into_iter().flatten().collect();
        return Ok(Outcome::new(Mode::Sampled, k as u128, found));
    }
    let order = field.order();
    let required = order.saturating_mul(order);
    if required > cfg.budget {
        return Err(VerifyError::BudgetExceeded { required, budget: cfg.budget });
    }
    let elems: Vec<Element> = field.elements().collect();
    let found: Vec<Counterexample> = map_chunks(cfg.exec, elems.len(), 1, |range| {
        let mut out = Vec::new();
        for &a in &elems[range] {
            out.extend(elems.iter().filter_map(|&b| check(a, b)));
        }
        out
    })
    .into_iter()
    .flatten()
    .collect();
    Ok(Outcome::new(Mode::Exhaustive, required, found))
}

fn companion_check(field: &Field, a: Element, b: Element, d: usize) -> Option<Counterexample> {
    let f = SigmaPoly::trinomial(field, a, b, d);
    let by_product = has_max_kernel_companion(field, &f).ok()?;
    let by_vector = has_max_kernel_vector(field, &f).ok()?;
    let by_kernel = kernel_dim(field, &f) == d;
    (by_product != by_vector || by_vector != by_kernel).then(|| {
        cex(d, a, b, format!("product {by_product}, vector {by_vector}, kernel {by_kernel}"))
    })
}

fn cor34_check(field: &Field, a: Element, b: Element, d: usize) -> Option<Counterexample> {
    let unit = match MEntryTable::new(field, a, b, d).and_then(|mut t| t.first_column_is_unit()) {
        Ok(u) => u,
        Err(e) => return Some(cex(d, a, b, e.to_string())),
    };
    let by_kernel = kernel_dim(field, &SigmaPoly::trinomial(field, a, b, d)) == d;
    (unit != by_kernel).then(|| cex(d, a, b, format!("first column unit {unit}, kernel {by_kernel}")))
}

fn verdict_check<C>(field: &Field, a: Element, b: Element, d: usize, classify: C) -> Option<Counterexample>
where
    C: Fn(&TrinomialInstance) -> Result<ClassificationResult, TrinomialError>,
{
    let inst = TrinomialInstance::new(d, a, b);
    let res = match classify(&inst) {
        Ok(r) => r,
        Err(e) => return Some(cex(d, a, b, e.to_string())),
    };
    let truth = inst.has_max_kernel(field);
    (res.is_max() != truth).then(|| {
        cex(d, a, b, format!("rule {} says {:?} ({}), kernel dimension says {truth}", res.rule.label(), res.verdict, res.witness.join("; ")))
    })
}

/// Random σ-polynomials of σ-degree 1..=d, plus x^{σ^k} − x: the kernel never
/// exceeds the σ-degree, and a full kernel forces N(a_0) = (−1)^{nk} N(a_k).
fn gow(field: &Field, cfg: &VerifyConfig) -> Result<Outcome, VerifyError> {
    let k = cfg.samples.unwrap_or(1000);
    let d = cfg.d.max(1);
    if (k + d) as u128 > cfg.budget {
        return Err(VerifyError::BudgetExceeded { required: (k + d) as u128, budget: cfg.budget });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut polys: Vec<SigmaPoly> = (1..=d).map(|t| SigmaPoly::subfield(field, t)).collect();
    for _ in 0..k {
        let deg = rng.gen_range(1..=d);
        let mut c: Vec<Element> = (0..deg).map(|_| random_element(field, &mut rng)).collect();
        c.push(random_nonzero(field, &mut rng));
        polys.push(SigmaPoly::new(c).expect("leading coefficient is nonzero"));
    }
    let found = map_indices(cfg.exec, polys.len(), |i| {
        let f = &polys[i];
        let kd = kernel_dim(field, f);
        let deg = f.sdegree();
        if kd > deg {
            Some(cex(deg, f.coeff(0), f.coeff(1), format!("kernel {kd} exceeds σ-degree {deg}")))
        } else if kd == deg && !gow_norm_condition(field, f) {
            Some(cex(deg, f.coeff(0), f.coeff(1), "maximum kernel without the norm condition"))
        } else {
            None
        }
    });
    Ok(Outcome::new(Mode::Sampled, polys.len() as u128, found.into_iter().flatten().collect()))
}

fn even_family(field: &Field, cfg: &VerifyConfig) -> Result<Outcome, VerifyError> {
    let d = cfg.d;
    // preconditions that do not depend on a
    if let Err(TrinomialError::PreconditionFailed(why)) = family_even(field, d, Element::ONE) {
        return Err(VerifyError::Range(why.join("; ")));
    }
    let members: Vec<Element> = match cfg.samples {
        None => {
            let fiber = (field.order() - 1) / (field.q() - 1);
            if fiber > cfg.budget {
                return Err(VerifyError::BudgetExceeded { required: fiber, budget: cfg.budget });
            }
            field.nonzero_elements().filter(|&a| field.norm(a) == Element::ONE).collect()
        }
        Some(k) => {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
            let mut out = Vec::with_capacity(k);
            while out.len() < k {
                let a = random_nonzero(field, &mut rng);
                if field.norm(a) == Element::ONE {
                    out.push(a);
                }
            }
            out
        }
    };
    let found = map_indices(cfg.exec, members.len(), |i| {
        let a = members[i];
        match family_even(field, d, a) {
            Ok(inst) => {
                let kd = inst.kernel_dim(field);
                (kd != d).then(|| cex(d, a, inst.b, format!("kernel dimension {kd}")))
            }
            Err(e) => Some(cex(d, a, Element::ZERO, e.to_string())),
        }
    });
    let mode = if cfg.samples.is_some() { Mode::Sampled } else { Mode::Family };
    Ok(Outcome::new(mode, members.len() as u128, found.into_iter().flatten().collect()))
}

fn neccond(field: &Field, cfg: &VerifyConfig) -> Result<Outcome, VerifyError> {
    let d = cfg.d;
    if residue(field, d)? == 0 {
        return Err(VerifyError::Range("neccond needs n > d(d-1)".into()));
    }
    let hits = enumerate_max_kernel(field, d, &EnumerateOptions { budget: cfg.budget, exec: cfg.exec, ..Default::default() })?;
    let found = map_indices(cfg.exec, hits.len(), |i| {
        let inst = hits[i];
        match necessary_conditions(field, &inst) {
            Ok(true) => None,
            Ok(false) => Some(cex(d, inst.a, inst.b, "identities fail")),
            Err(e) => Some(cex(d, inst.a, inst.b, e.to_string())),
        }
    });
    Ok(Outcome::new(Mode::Exhaustive, hits.len() as u128, found.into_iter().flatten().collect()))
}

/// A random pair with a^{σ^d} b = a^σ b^{σ^d}. In logarithms the condition
/// reads (σ^d − 1) log b = (σ^d − σ) log a, solved modulo p^m − 1.
pub fn random_commuting_pair(field: &Field, d: usize, rng: &mut ChaCha8Rng) -> Option<(Element, Element)> {
    if !field.has_tables() {
        return None;
    }
    let big_n = field.order() - 1;
    let qs = field.q().pow(field.s() as u32);
    let sd = mod_pow(qs, d as u128, big_n);
    let e = (sd + big_n - 1) % big_n;
    let g = gcd(e, big_n);
    loop {
        let a = random_nonzero(field, rng);
        let la = field.discrete_log(a)? as u128;
        let rhs = mul_mod(la, (sd + big_n - qs % big_n) % big_n, big_n);
        if rhs % g != 0 {
            continue;
        }
        let m = big_n / g;
        let x0 = mul_mod(rhs / g, mod_inverse((e / g) % m, m), m);
        let j = rng.gen_range(0..g);
        let b = field.antilog((x0 + j * m) as u64)?;
        debug_assert!(commutation_holds(field, a, b, d));
        return Some((a, b));
    }
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn mul_mod(a: u128, b: u128, m: u128) -> u128 {
    // operands stay below 2^64 for tabled fields
    (a % m) * (b % m) % m
}

fn mod_pow(mut b: u128, mut e: u128, m: u128) -> u128 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    acc
}

fn mod_inverse(x: u128, m: u128) -> u128 {
    if m == 1 {
        return 0;
    }
    let (mut old_r, mut r) = (x as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    old_s.rem_euclid(m as i128) as u128
}

/// Closed form against the forward recursion and the M-expansion on random
/// pairs, then c = binom·z on random commuting pairs.
fn pascal(field: &Field, cfg: &VerifyConfig) -> Result<Outcome, VerifyError> {
    let d = cfg.d;
    let n = field.n();
    if d < 2 || n < d + 1 {
        return Err(VerifyError::Range(format!("need 2 <= d < n, got d = {d}, n = {n}")));
    }
    if !field.has_tables() {
        return Err(VerifyError::Range("commuting pairs are drawn through log tables".into()));
    }
    let k = (n - d + 1) as i64;
    let samples = cfg.samples.unwrap_or(200);
    if 2 * samples as u128 > cfg.budget {
        return Err(VerifyError::BudgetExceeded { required: 2 * samples as u128, budget: cfg.budget });
    }
    let di = d as i64;
    // largest j with k − (j−1)d ≥ 1, capped at d − 1
    let jmax = (((k - 1) / di + 1) as usize).min(d - 1);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let free: Vec<(Element, Element)> =
        (0..samples).map(|_| (random_nonzero(field, &mut rng), random_nonzero(field, &mut rng))).collect();
    let commuting: Vec<(Element, Element)> =
        (0..samples).map(|_| random_commuting_pair(field, d, &mut rng).expect("tabled field")).collect();

    let p = field.p();
    let found = map_indices(cfg.exec, 2 * samples, |idx| {
        if idx < samples {
            let (a, b) = free[idx];
            let mut tab = MEntryTable::new(field, a, b, d).ok()?;
            for j in 0..=jmax {
                let fw = c_coeffs_recursive(field, a, b, d, j, k);
                for (t, &w) in fw.iter().enumerate() {
                    match c_coeff_closed(field, a, b, d, j, t, k) {
                        Ok(c) if c == w => {}
                        Ok(_) => return Some(cex(d, a, b, format!("closed form differs from recursion at j={j} t={t}"))),
                        Err(e) => return Some(cex(d, a, b, e.to_string())),
                    }
                }
                for l in 1..=d {
                    let mut sum = Element::ZERO;
                    for (t, &w) in fw.iter().enumerate() {
                        let m = tab.get(l, k - (j * d) as i64 + t as i64).ok()?;
                        sum = field.add(sum, field.mul(w, m));
                    }
                    if Some(sum) != tab.get(l, k).ok() {
                        return Some(cex(d, a, b, format!("expansion fails at j={j} l={l}")));
                    }
                }
            }
            None
        } else {
            let (a, b) = commuting[idx - samples];
            for j in 0..=jmax {
                for i in 0..=j {
                    let z = match z_recursion(field, a, b, d, j, i, k) {
                        Ok(z) => z,
                        Err(e) => return Some(cex(d, a, b, format!("j={j} i={i}: {e}"))),
                    };
                    let lhs = field.mul(field.scalar(binom_mod_p(j as u64, i as u64, p) as i64), z);
                    match c_coeff_closed(field, a, b, d, j, i, k) {
                        Ok(c) if c == lhs => {}
                        Ok(_) => return Some(cex(d, a, b, format!("binom·z differs from c at j={j} i={i}"))),
                        Err(e) => return Some(cex(d, a, b, e.to_string())),
                    }
                }
            }
            None
        }
    });
    Ok(Outcome::new(Mode::Sampled, 2 * samples as u128, found.into_iter().flatten().collect()))
}

/// Entries M_{l,k} for l ≥ 2 and |k| < d, and the zero runs in the first row.
fn prop33(field: &Field, cfg: &VerifyConfig) -> Result<Outcome, VerifyError> {
    let d = cfg.d;
    if d < 2 {
        return Err(VerifyError::Range(format!("need d >= 2, got {d}")));
    }
    let samples = cfg.samples.unwrap_or(100);
    if samples as u128 > cfg.budget {
        return Err(VerifyError::BudgetExceeded { required: samples as u128, budget: cfg.budget });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let pairs: Vec<(Element, Element)> =
        (0..samples).map(|_| (random_nonzero(field, &mut rng), random_nonzero(field, &mut rng))).collect();
    let di = d as i64;
    let found = map_indices(cfg.exec, samples, |idx| {
        let (a, b) = pairs[idx];
        let mut tab = MEntryTable::new(field, a, b, d).ok()?;
        for l in 2..=d {
            let li = l as i64;
            for k in (1 - di)..=(di - 1) {
                let expected = if k == li - di {
                    Element::ONE
                } else if k == li - 1 {
                    field.sigma(b, li - 2)
                } else if k == li {
                    field.sigma(a, li - 1)
                } else {
                    Element::ZERO
                };
                if tab.get(l, k).ok()? != expected {
                    return Some(cex(d, a, b, format!("M[{l},{k}] differs from the table")));
                }
            }
        }
        for i in 0..d.saturating_sub(2) {
            for j in (i * d + 2)..=((i + 1) * d - (i + 1)) {
                if !tab.get(1, j as i64).ok()?.is_zero() {
                    return Some(cex(d, a, b, format!("M[1,{j}] is nonzero")));
                }
            }
        }
        None
    });
    Ok(Outcome::new(Mode::Sampled, samples as u128, found.into_iter().flatten().collect()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn target_names_roundtrip() {
        for t in Target::ALL {
            assert_eq!(t.name().parse::<Target>().unwrap(), t);
        }
        assert_eq!("nope".parse::<Target>(), Err(VerifyError::UnknownTarget("nope".into())));
    }

    #[test]
    fn commuting_pairs_commute() {
        let f = Field::new(3, 1, 7, 2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..20 {
            let (a, b) = random_commuting_pair(&f, 3, &mut rng).unwrap();
            assert!(commutation_holds(&f, a, b, 3));
        }
    }

    #[test]
    fn small_campaigns_pass() {
        let f = Field::new(2, 1, 7, 1).unwrap();
        let cfg = VerifyConfig { d: 3, ..Default::default() };
        for t in [Target::Companion, Target::McgAbc, Target::D3, Target::Cor34, Target::NecCond, Target::MainSystem] {
            let r = run_verify(&f, t, &cfg).unwrap();
            assert!(r.passed, "{t}: {:?}", r.counterexamples);
        }
        let r = run_verify(&f, Target::Companion, &cfg).unwrap();
        assert_eq!(r.message, "16384 instances, equivalence holds");
    }

    #[test]
    fn budget_and_range_errors() {
        let f = Field::new(2, 1, 7, 1).unwrap();
        let cfg = VerifyConfig { d: 3, budget: 100, ..Default::default() };
        assert!(matches!(run_verify(&f, Target::Companion, &cfg), Err(VerifyError::BudgetExceeded { .. })));
        let cfg = VerifyConfig { d: 4, ..Default::default() };
        assert!(matches!(run_verify(&f, Target::D3, &cfg), Err(VerifyError::Range(_))));
        assert!(matches!(run_verify(&f, Target::EvenFamily, &cfg), Err(VerifyError::Range(_))));
    }
}
