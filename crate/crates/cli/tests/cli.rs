use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_maxkernel")).args(args).output().expect("spawn maxkernel")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let o = run(&all);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn verify_companion_exhaustive() {
    let o = run(&["verify", "companion", "--p", "2", "--h", "1", "--n", "7", "--s", "1", "--d", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("16384 instances, equivalence holds"), "{out}");
    assert!(out.contains("reproduce: maxkernel verify companion --p 2"), "{out}");
}

#[test]
fn verify_even_family_sampled() {
    let v = json(&["verify", "even-family", "--n", "15", "--d", "4", "--samples", "1000"]);
    assert_eq!(v["schema"], "maxkernel/1");
    assert_eq!(v["result"]["message"], "1000 members, all kernel dim 4");
    assert_eq!(v["result"]["mode"], "sampled");
}

#[test]
fn verify_gow_odd_characteristic() {
    let o = run(&["verify", "gow", "--p", "3", "--n", "6", "--d", "3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn census_csv_row() {
    let o = run(&["census", "--p", "2", "--n", "8", "--d", "3", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let mut r = csv::Reader::from_reader(o.stdout.as_slice());
    let rows: Vec<(usize, u128)> = r.deserialize().map(|x| x.unwrap()).collect();
    assert!(rows.contains(&(5, 130050)), "{rows:?}");
    assert_eq!(rows.iter().map(|r| r.1).sum::<u128>(), (1u128 << 24) - 1);
}

#[test]
fn census_json_summary() {
    let v = json(&["census", "--n", "6", "--d", "3"]);
    let s = &v["result"]["summary"];
    assert_eq!(s["D_observed"], 567);
    assert_eq!(s["agree"], true);
}

#[test]
fn build_code_certified() {
    let v = json(&["build-code", "--p", "2", "--n", "7", "--d", "3", "--certify"]);
    let code = &v["result"]["code"];
    assert_eq!(code["size"], 127);
    assert_eq!(code["min_distance"], 4);
    assert_eq!(code["certified"], true);
}

#[test]
fn quasi_family_member() {
    let o = run(&["quasi", "--p", "2", "--n", "15", "--d", "4", "--a", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&["quasi", "--p", "2", "--n", "15", "--d", "4", "--a", "1"]);
    assert_eq!(v["result"]["quasi_subfield"], true);
    assert_eq!(v["result"]["splits"], true);
    assert_eq!(v["result"]["degree_bound"], true);
    // a b off the family: the property fails, which is a counterexample
    let o = run(&["quasi", "--n", "15", "--d", "4", "--a", "1", "--b", "3"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["verify", "no-such-target"]).status.code(), Some(2));
    assert_eq!(run(&["census", "--budget", "0"]).status.code(), Some(2));
    assert_eq!(run(&["field-info", "--p", "4"]).status.code(), Some(2));
    assert_eq!(run(&["quasi", "--a", "zz"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "companion", "--n", "7", "--budget", "10"]).status.code(), Some(3));
    assert_eq!(run(&["census", "--n", "8", "--budget", "1000"]).status.code(), Some(3));
}

#[test]
fn payload_independent_of_workers() {
    for args in [
        &["enumerate", "--n", "8", "--d", "3"][..],
        &["census", "--n", "6", "--d", "4"][..],
        &["verify", "pascal", "--n", "15", "--d", "4", "--seed", "7"][..],
        &["build-code", "--n", "8", "--d", "3", "--certify"][..],
    ] {
        let mut seen: Option<Value> = None;
        let mut csv: Option<Vec<u8>> = None;
        for w in ["1", "2", "4"] {
            let mut a = args.to_vec();
            a.extend(["--workers", w]);
            let mut v = json(&a);
            assert_eq!(v["runtime"]["workers"].as_u64(), Some(w.parse().unwrap()));
            v.as_object_mut().unwrap().remove("runtime");
            match &seen {
                Some(s) => assert_eq!(s, &v, "{args:?}"),
                None => seen = Some(v),
            }
            a.extend(["--format", "csv"]);
            let bytes = run(&a).stdout;
            match &csv {
                Some(c) => assert_eq!(c, &bytes, "{args:?}"),
                None => csv = Some(bytes),
            }
        }
    }
}

#[test]
fn out_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("enum.csv");
    let o = run(&["enumerate", "--n", "6", "--d", "3", "--format", "csv", "--out", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let body = std::fs::read_to_string(&path).unwrap();
    let lines: Vec<&str> = body.lines().collect();
    assert_eq!(lines[0], "a,b");
    assert_eq!(lines.len(), 10);
    assert!(lines[1..].iter().all(|l| l.ends_with(",0")));
}

#[test]
fn field_info_roundtrip() {
    let v = json(&["field-info", "--p", "3", "--h", "2", "--n", "3", "--s", "2"]);
    assert_eq!(v["result"]["order"], 729);
    assert_eq!(v["result"]["spec"]["modulus"].as_array().unwrap().len(), 7);
    assert_eq!(v["config"]["s"], 2);
}
