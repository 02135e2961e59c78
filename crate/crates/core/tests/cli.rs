use std::io::Write;
use std::process::Command;

use nakayama::cli::{run, Outcome};
use serde_json::Value;

fn cli(args: &[&str]) -> Outcome {
    run(std::iter::once("nakayama").chain(args.iter().copied()))
}

fn json(o: &Outcome) -> Value {
    serde_json::from_str(&o.stdout).unwrap_or_else(|e| panic!("bad json {e}: {}", o.stdout))
}

#[test]
fn validate_reports() {
    let o = cli(&["validate", "--preset", "kronecker"]);
    assert_eq!(o.code, 0);
    assert!(o.stdout.contains("special biserial: yes; band: a b^-1; representation-infinite"));
    let o = cli(&["validate", "--preset", "a_3_linear"]);
    assert!(o.stdout.starts_with("admissible N=3; special biserial: yes"));
    let v = json(&cli(&["validate", "--preset", "pentagon", "--format", "json"]));
    assert_eq!(v["nilpotency_bound"], 4);
    assert_eq!(v["representation_finite"], true);
}

#[test]
fn validate_syntax_error() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "vertices: 1 2\narrows: a: 1=>2").unwrap();
    let o = cli(&["validate", f.path().to_str().unwrap()]);
    assert_eq!(o.code, 2);
    assert!(o.stderr.contains("line 2"), "{}", o.stderr);
    let o = cli(&["validate", "--file", "/nonexistent/x.txt"]);
    assert_eq!(o.code, 2);
}

#[test]
fn file_input_matches_preset() {
    let p = nakayama::corpus::preset("pentagon").unwrap();
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(p.serialize().as_bytes()).unwrap();
    let a = cli(&["classify", "--file", f.path().to_str().unwrap()]);
    let b = cli(&["classify", "--preset", "pentagon"]);
    assert_eq!(a, b);
}

#[test]
fn classify_outputs() {
    let o = cli(&["classify", "--preset", "a_5_source_at_2", "--format", "json"]);
    assert_eq!(o.code, 0);
    assert!(o.stdout.starts_with("{\"index\":4,"));
    let v = json(&o);
    assert_eq!(v["agree"], true);
    assert_eq!(v["structure_suite"]["passed"], true);
    assert_eq!(v["schema_version"], 1);

    let v = json(&cli(&["classify", "--preset", "commutative_square"]));
    assert_eq!(v["index"], 3);
    assert_eq!(v["t5"]["verdict"], false);
    for c in ["iv_a", "iv_b", "iv_c"] {
        assert_eq!(v["t5"][c]["holds"], false);
    }
    assert!(v.get("structure_suite").is_none());

    let o = cli(&["classify", "--preset", "kronecker"]);
    assert!(o.stdout.starts_with("{\"index\":\"infinite\""));
    assert_eq!(json(&o)["witnesses"][0], "a b^-1");

    let o = cli(&["classify", "--preset", "a_5_source_at_2", "--walk-reading", "reduced", "--format", "text"]);
    assert_eq!(o.code, 0);
    assert!(o.stdout.starts_with("index: 4\n"));
    // reduced walks through a binomial relation are not strings; the classifiers then disagree
    let o = cli(&["classify", "--preset", "pentagon", "--walk-reading", "reduced"]);
    assert_eq!(o.code, 3);
    assert_eq!(json(&o)["agree"], false);
}

#[test]
fn modules_listing() {
    let o = cli(&["modules", "--preset", "d_sink"]);
    assert_eq!(o.code, 0);
    assert!(o.stdout.ends_with("6 modules; degrees: 1x5, 3x1\n"), "{}", o.stdout);
    let v = json(&cli(&["modules", "--preset", "a_2", "--format", "json"]));
    assert_eq!(v["count"], 3);
    for m in v["modules"].as_array().unwrap() {
        assert_eq!(m["degree"]["degree"], 1);
        assert_eq!(m["end_local"], true);
    }
    let o = cli(&["modules", "--preset", "kronecker"]);
    assert_eq!(o.code, 2);
    assert!(o.stderr.contains("band"));
}

#[test]
fn modules_caps() {
    let v = json(&cli(&["modules", "--preset", "pentagon", "--format", "json", "--cap-sub", "2", "--cap-end", "2"]));
    let mods = v["modules"].as_array().unwrap();
    assert!(mods.iter().any(|m| m["uniserial_lattice"].is_null()));
    assert!(mods.iter().any(|m| m["end_local"].is_null()));
    assert!(mods.iter().any(|m| m["end_local"] == true));
}

#[test]
fn ar_sequences() {
    let o = cli(&["ar", "--preset", "a_2", "--module", "e(1)"]);
    assert_eq!(o.code, 0);
    let v = json(&o);
    for k in ["exact", "non_split", "tau_matches", "oracle_middle", "right_almost_split"] {
        assert_eq!(v["verification"][k], true, "{k}");
    }
    assert_eq!(v["labels"]["left"], "e(2,+1)");
    assert_eq!(v["labels"]["middle"][0], "a");

    let o = cli(&["ar", "--preset", "a_2", "--module", "a"]);
    assert_eq!(o.code, 2);
    assert!(o.stderr.contains("projective"));

    let v = json(&cli(&["ar", "--preset", "pentagon", "--module", "a^-1 d"]));
    assert_eq!(v["route"], "t4");
    assert_eq!(v["verification"]["right_almost_split"], true);

    for sel in ["I(1)", "P(2)", "PI(a*b*c,d*e)"] {
        let o = cli(&["ar", "--preset", "pentagon", "--module", sel]);
        assert!(o.code == 0 || o.stderr.contains("projective"), "{sel}: {}", o.stderr);
    }
    let o = cli(&["ar", "--preset", "pentagon", "--module", "PI(a*b*c,d*e)"]);
    assert_eq!(o.code, 2);
    let o = cli(&["ar", "--preset", "pentagon", "--module", "a b c d"]);
    assert_eq!(o.code, 2);
}

#[test]
fn arquiver_dot() {
    let o = cli(&["arquiver", "--preset", "a_3_linear", "--format", "dot"]);
    assert_eq!(o.code, 0);
    assert!(o.stdout.starts_with("digraph ar {"));
    assert_eq!(o.stdout.matches("shape=").count(), 6);
    assert_eq!(o, cli(&["arquiver", "--preset", "a_3_linear", "--format", "dot"]));
    let v = json(&cli(&["arquiver", "--preset", "a_2", "--format", "json"]));
    assert_eq!(v["nodes"].as_array().unwrap().len(), 3);
    assert_eq!(v["arrows"].as_array().unwrap().len(), 2);
    assert_eq!(cli(&["classify", "--preset", "a_2", "--format", "dot"]).code, 2);
}

#[test]
fn verify_command() {
    let o = cli(&["verify", "--preset", "pentagon"]);
    assert_eq!(o.code, 0);
    assert_eq!(json(&o)["passed"], true);
    let o = cli(&["verify", "--preset", "commutative_square"]);
    assert_eq!(o.code, 2);
    assert!(o.stderr.contains("not right 4-Nakayama"));
    let o = cli(&["verify", "--corpus", "--seeds", "0..99"]);
    assert_eq!(o.code, 0, "{}", o.stdout);
    let v = json(&o);
    assert_eq!(v["attempted"], 99);
    assert_eq!(v["passed"], true);
    assert!(v["right4"].as_u64().unwrap() > 0);
    assert_eq!(o, cli(&["verify", "--corpus", "--seeds", "0..99"]));
}

#[test]
fn characteristic_flag() {
    let a = cli(&["classify", "--preset", "pentagon", "--char", "3"]);
    assert_eq!(a.code, 0);
    assert_eq!(json(&a)["index"], 4);
    assert_eq!(cli(&["classify", "--preset", "pentagon", "--char", "6"]).code, 2);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_nakayama");
    let out = Command::new(bin).args(["modules", "--preset", "kronecker"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = Command::new(bin).args(["arquiver", "--preset", "a_3_linear"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), cli(&["arquiver", "--preset", "a_3_linear"]).stdout);
    let out = Command::new(bin).args(["--help"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let out = Command::new(bin).args(["frobnicate"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}
