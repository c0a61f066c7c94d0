use std::fmt::Write as _;

use anyhow::{bail, Context, Result};
use maxkernel::codes::{build_orbit_code, quasi_subfield_check, weight_census, OrbitOptions, Subspace};
use maxkernel::gf::{Element, Field};
use maxkernel::linpoly::{kernel_basis, SigmaPoly};
use maxkernel::parallel::Exec;
use maxkernel::trinomial::{enumerate_max_kernel, family_even, EnumerateOptions, Oracle, TrinomialInstance};
use maxkernel::verify::{run_verify, Target, VerifyConfig};
use serde::Serialize;
use serde_json::json;

use crate::{OracleArg, Output, RunConfig, Status};

fn csv_bytes<R: Serialize>(rows: impl IntoIterator<Item = R>) -> Result<Vec<u8>> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r)?;
    }
    Ok(w.into_inner().map_err(|e| anyhow::anyhow!("csv: {e}"))?)
}

fn parse_element(field: &Field, hex: &str, name: &str) -> Result<Element> {
    field.parse_hex(hex).with_context(|| format!("--{name}"))
}

/// Command line that reruns this verification.
fn repro_line(cfg: &RunConfig, target: &str, samples: Option<usize>) -> String {
    let mut s = format!(
        "maxkernel verify {target} --p {} --h {} --n {} --s {} --d {} --budget {} --seed {}",
        cfg.p, cfg.h, cfg.n, cfg.s, cfg.d, cfg.budget, cfg.seed
    );
    if let Some(k) = samples {
        write!(s, " --samples {k}").unwrap();
    }
    s
}

pub fn verify(field: &Field, cfg: &RunConfig, target: &str, samples: Option<usize>) -> Result<Output> {
    let t: Target = target.parse()?;
    let vc = VerifyConfig { d: cfg.d, budget: cfg.budget, seed: cfg.seed, samples, exec: Exec::default() };
    let report = run_verify(field, t, &vc)?;
    let repro = repro_line(cfg, t.name(), samples);

    let mut text = format!("{}: {}\n", report.target, report.message);
    for c in &report.counterexamples {
        writeln!(text, "  counterexample d={} a={} b={}: {}", c.d, c.a, c.b, c.detail).unwrap();
    }
    writeln!(text, "reproduce: {repro}").unwrap();

    #[derive(Serialize)]
    struct Row<'a> {
        target: &'a str,
        mode: &'a str,
        instances: u128,
        failures: u128,
        passed: bool,
    }
    let mode = serde_json::to_value(report.mode)?;
    let csv = csv_bytes([Row {
        target: &report.target,
        mode: mode.as_str().unwrap_or_default(),
        instances: report.instances,
        failures: report.failures,
        passed: report.passed,
    }])?;
    let mut json = serde_json::to_value(&report)?;
    json["reproduce"] = json!(repro);
    let status = if report.passed { Status::Pass } else { Status::Counterexample };
    Ok(Output { status, json, csv, text })
}

pub fn enumerate(field: &Field, cfg: &RunConfig, oracle: OracleArg) -> Result<Output> {
    let oracle = match oracle {
        OracleArg::Vector => Oracle::Vector,
        OracleArg::Kernel => Oracle::KernelDim,
    };
    let opts = EnumerateOptions { budget: cfg.budget, oracle, ..Default::default() };
    let hits = enumerate_max_kernel(field, cfg.d, &opts)?;
    let count = hits.len() as u128;

    #[derive(Serialize)]
    struct Pair {
        a: String,
        b: String,
    }
    let pairs: Vec<Pair> = hits.iter().map(|i| Pair { a: i.a.to_hex(), b: i.b.to_hex() }).collect();
    let mut text = format!("{count} maximum-kernel pairs (d = {}, n = {})\n", cfg.d, field.n());
    for p in &pairs {
        writeln!(text, "{} {}", p.a, p.b).unwrap();
    }
    let json = json!({
        "d": cfg.d,
        "n": field.n(),
        "spec": field.record(),
        "count": count,
        "D": count * (field.order() - 1),
        "pairs": pairs,
    });
    Ok(Output { status: Status::Pass, csv: csv_bytes(&pairs)?, json, text })
}

pub fn census(field: &Field, cfg: &RunConfig) -> Result<Output> {
    let c = weight_census(field, cfg.d, cfg.budget, Exec::default())?;
    let summary = c.summary(field);

    #[derive(Serialize)]
    struct Row {
        weight: usize,
        count: u128,
    }
    let rows: Vec<Row> = c.counts.iter().map(|(&weight, &count)| Row { weight, count }).collect();
    let mut text = format!("weight distribution of <x, x^s, x^s^{}> over n = {}\n", cfg.d, field.n());
    for r in &rows {
        writeln!(text, "{:>4} {}", r.weight, r.count).unwrap();
    }
    writeln!(text, "total {}", c.total()).unwrap();
    let formula = serde_json::to_value(summary.d_formula)?;
    writeln!(text, "D observed {}, closed form {}", summary.d_observed, formula).unwrap();
    let json = json!({
        "d": c.d,
        "n": c.n,
        "spec": c.spec,
        "counts": rows,
        "total": c.total(),
        "summary": summary,
    });
    let status = if summary.agree == Some(false) { Status::Counterexample } else { Status::Pass };
    Ok(Output { status, csv: csv_bytes(&rows)?, json, text })
}

/// Default generator: a member of the even-characteristic family when the
/// parameters admit one, else the first pair of a scan.
fn default_instance(field: &Field, cfg: &RunConfig) -> Result<TrinomialInstance> {
    if let Some(a) = field.nonzero_elements().find(|&x| field.norm(x) == Element::ONE) {
        if let Ok(inst) = family_even(field, cfg.d, a) {
            return Ok(inst);
        }
    }
    let opts = EnumerateOptions { budget: cfg.budget, ..Default::default() };
    match enumerate_max_kernel(field, cfg.d, &opts)?.first() {
        Some(&inst) => Ok(inst),
        None => bail!("no maximum-kernel trinomial with d = {} exists over this field", cfg.d),
    }
}

fn instance(field: &Field, cfg: &RunConfig, a: Option<&str>, b: Option<&str>) -> Result<TrinomialInstance> {
    let Some(a) = a else {
        if b.is_some() {
            bail!("--b requires --a");
        }
        return default_instance(field, cfg);
    };
    let a = parse_element(field, a, "a")?;
    match b {
        Some(b) => Ok(TrinomialInstance::new(cfg.d, a, parse_element(field, b, "b")?)),
        None => Ok(family_even(field, cfg.d, a).context("deriving b from a; pass --b explicitly")?),
    }
}

pub fn build_code(field: &Field, cfg: &RunConfig, certify: bool, a: Option<&str>, b: Option<&str>) -> Result<Output> {
    let inst = instance(field, cfg, a, b)?;
    let kdim = inst.kernel_dim(field);
    let v = Subspace::from_fp_vectors(field, &kernel_basis(field, &inst.poly(field)))?;
    let opts = OrbitOptions { certify, budget: cfg.budget, exec: Exec::default() };
    let code = build_orbit_code(field, &v, &opts)?;
    let rec = code.record();

    let mut text = format!(
        "trinomial a={} b={} d={}: kernel dim {kdim}\norbit code: size {}, stabilizer F_q^{}, ",
        inst.a, inst.b, inst.d, rec.size, rec.t
    );
    match rec.min_distance {
        Some(dist) => writeln!(text, "certified minimum distance {dist}").unwrap(),
        None => writeln!(text, "minimum distance not certified").unwrap(),
    }
    writeln!(text, "generator basis: {}", rec.generator.join(" ")).unwrap();

    #[derive(Serialize)]
    struct Row {
        a: String,
        b: String,
        d: usize,
        k: usize,
        size: u128,
        t: usize,
        min_distance: Option<usize>,
        certified: bool,
    }
    let csv = csv_bytes([Row {
        a: inst.a.to_hex(),
        b: inst.b.to_hex(),
        d: inst.d,
        k: rec.k,
        size: rec.size,
        t: rec.t,
        min_distance: rec.min_distance,
        certified: rec.certified,
    }])?;
    let json = json!({
        "a": inst.a.to_hex(),
        "b": inst.b.to_hex(),
        "d": inst.d,
        "kernel_dim": kdim,
        "code": rec,
    });
    let status = if kdim == inst.d { Status::Pass } else { Status::Counterexample };
    Ok(Output { status, json, csv, text })
}

pub fn quasi(field: &Field, cfg: &RunConfig, a: &str, b: Option<&str>) -> Result<Output> {
    let inst = instance(field, cfg, Some(a), b)?;
    let f = SigmaPoly::trinomial(field, inst.a, inst.b, inst.d).normalize_monic(field);
    let r = quasi_subfield_check(field, &f)?;
    let yn = |x: bool| if x { "yes" } else { "no" };
    let text = format!(
        "x^q^{} - {} x^q - {} x: quasi-subfield {}\n  splits in F_q^n: {}\n  {} < {}/{}: {}\n",
        r.d,
        inst.b,
        inst.a,
        r.quasi_subfield,
        yn(r.splits),
        r.lambda_degree,
        r.d * r.d,
        r.n,
        yn(r.degree_bound),
    );
    let mut json = serde_json::to_value(&r)?;
    json["a"] = json!(inst.a.to_hex());
    json["b"] = json!(inst.b.to_hex());
    let csv = csv_bytes([&r])?;
    let status = if r.quasi_subfield { Status::Pass } else { Status::Counterexample };
    Ok(Output { status, json, csv, text })
}

pub fn field_info(field: &Field) -> Result<Output> {
    let g = field.primitive_element()?;
    let spec = field.record();
    let modulus: Vec<String> = spec.modulus.iter().map(|c| c.to_string()).collect();
    let text = format!(
        "F_{}^{} over F_{} (q = {}), sigma = x^q^{}\norder {}, modulus (constant term first) [{}]\nprimitive element {}\n",
        field.p(),
        field.m(),
        field.q(),
        field.q(),
        field.s(),
        field.order(),
        modulus.join(", "),
        g,
    );
    #[derive(Serialize)]
    struct Row {
        p: u64,
        h: usize,
        n: usize,
        s: usize,
        m: usize,
        q: u128,
        order: u128,
        modulus: String,
        primitive_element: String,
    }
    let csv = csv_bytes([Row {
        p: field.p(),
        h: field.h(),
        n: field.n(),
        s: field.s(),
        m: field.m(),
        q: field.q(),
        order: field.order(),
        modulus: modulus.join(" "),
        primitive_element: g.to_hex(),
    }])?;
    let json = json!({
        "spec": spec,
        "m": field.m(),
        "q": field.q(),
        "order": field.order(),
        "tabled": field.has_tables(),
        "primitive_element": g.to_hex(),
    });
    Ok(Output { status: Status::Pass, json, csv, text })
}
