use std::path::Path;
use std::process::Command;

use hurwitz::factorize::minimal_k;
use hurwitz::perm::mu;
use hurwitz::wop::OperatorTermTable;
use hurwitz::Partition;
use hurwitz_cli::parse_partition;
use serde_json::Value;

/// Runs a binary with no budget override from the environment, inside `dir`.
fn run_in(dir: &Path, bin: &str, args: &[&str], budget: Option<&str>) -> (i32, String, String) {
    let mut cmd = Command::new(bin);
    cmd.args(args).current_dir(dir).env_remove("HURWITZ_BUDGET");
    if let Some(b) = budget {
        cmd.env("HURWITZ_BUDGET", b);
    }
    let out = cmd.output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn run(bin: &str, args: &[&str]) -> (i32, String, String) {
    let dir = tempfile::tempdir().unwrap();
    run_in(dir.path(), bin, args, None)
}

const HW: &str = env!("CARGO_BIN_EXE_hw");
const WOP: &str = env!("CARGO_BIN_EXE_wop");
const VERIFY: &str = env!("CARGO_BIN_EXE_verify");

#[test]
fn partitions_round_trip_through_text() {
    for alpha in Partition::all_up_to(8).into_iter().filter(|a| !a.is_empty()) {
        assert_eq!(parse_partition(&alpha.to_string()).unwrap(), alpha);
    }
}

#[test]
fn documented_examples() {
    let (code, out, _) = run(HW, &["min", "--d", "3", "--alpha", "3"]);
    assert_eq!((code, out.as_str()), (0, "{\"k\":1,\"h\":\"1\"}\n"));

    let (code, out, _) = run(HW, &["count", "--n", "3", "--d", "3", "--k", "1", "--alpha", "2,1"]);
    assert_eq!((code, out.as_str()), (0, "{\"count\":\"0\"}\n"));

    let (code, out, _) = run(VERIFY, &["gj-pde", "--N", "3"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["pass"], true);
    assert_eq!(v["id"], "gj_pde");
    assert_eq!(v["N"], 3);
    assert!(v["runtime_ms"].is_u64());
}

#[test]
fn min_agrees_with_the_library() {
    for alpha in ["3,1", "2,2", "5", "1,1,1,1"] {
        let (code, out, _) = run(HW, &["min", "--d", "3", "--alpha", alpha]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        let a: Partition = alpha.parse().unwrap();
        let (k, h) = minimal_k(a.weight(), 3, &a).unwrap().unwrap();
        assert_eq!(v["k"], k);
        assert_eq!(v["h"], h.to_string());
    }
    let (_, out, _) = run(HW, &["min", "--d", "3", "--alpha", "2"]);
    assert_eq!(out, "{\"k\":null,\"h\":\"0\"}\n");
}

#[test]
fn table_formats_agree() {
    let (code, json, _) = run(HW, &["table", "--d", "3", "--nmax", "5"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&json).unwrap();
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(v["budget"]["max_n"], 8);

    let (_, csv, _) = run(HW, &["table", "--d", "3", "--nmax", "5", "--format", "csv"]);
    let mut reader = csv::Reader::from_reader(csv.as_bytes());
    assert_eq!(reader.headers().unwrap(), vec!["n", "alpha", "mu", "h"]);
    let records: Vec<csv::StringRecord> = reader.records().map(Result::unwrap).collect();
    assert_eq!(records.len(), rows.len());
    for (rec, row) in records.iter().zip(rows) {
        let alpha: Vec<usize> = serde_json::from_value(row["alpha"].clone()).unwrap();
        let alpha = Partition::new(alpha).unwrap();
        assert_eq!(rec[1].parse::<Partition>().unwrap(), alpha);
        assert_eq!(rec[0], row["n"].to_string());
        assert_eq!(rec[2], *row["mu"].as_str().unwrap());
        assert_eq!(rec[3], *row["h"].as_str().unwrap());
        assert!(mu(3, &alpha).is_admissible());
    }
    // rows come in (n, α) order
    let keys: Vec<Partition> = records.iter().map(|r| r[1].parse().unwrap()).collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
}

#[test]
fn output_is_deterministic() {
    let cases: [(&str, &[&str]); 5] = [
        (HW, &["table", "--d", "2", "--nmax", "6"]),
        (WOP, &["apply", "--d", "3", "--alpha", "3,2,1"]),
        (WOP, &["table", "--d", "3", "--max-weight", "5"]),
        (VERIFY, &["--no-timing", "thm53", "--N", "5"]),
        (VERIFY, &["components", "--N", "4", "--no-timing"]),
    ];
    for (bin, args) in cases {
        let first = run(bin, args);
        assert_eq!(first.0, 0, "{args:?}: {}", first.2);
        assert_eq!(run(bin, args), first, "{args:?}");
    }
}

#[test]
fn apply_methods_agree() {
    for d in ["2", "3"] {
        for alpha in ["2,1", "3,1,1", "4,2"] {
            let outs: Vec<Value> = ["explicit", "groupalg", "reconstructed"]
                .iter()
                .map(|m| {
                    let (code, out, err) =
                        run(WOP, &["apply", "--d", d, "--alpha", alpha, "--method", m]);
                    assert_eq!(code, 0, "{err}");
                    serde_json::from_str(&out).unwrap()
                })
                .collect();
            assert_eq!(outs[0]["terms"], outs[1]["terms"], "d={d} {alpha}");
            assert_eq!(outs[1]["terms"], outs[2]["terms"], "d={d} {alpha}");
        }
    }
    let (code, _, err) = run(WOP, &["apply", "--d", "4", "--alpha", "4", "--method", "explicit"]);
    assert_eq!(code, 64);
    assert!(err.contains("usage"));
}

#[test]
fn coefficients_and_tables() {
    let (_, out, _) = run(WOP, &["coeff", "--d", "2", "--B", "1,1", "--A", "2"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!((v["c"].as_str(), v["N"].as_str(), v["aut"].as_str()), (Some("1/2"), Some("1"), Some("2")));

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("table.json");
    let path_text = path.to_str().unwrap();
    let (code, out, _) = run(WOP, &["table", "--d", "4", "--max-weight", "6", "--out", path_text]);
    assert_eq!(code, 0);
    let written: OperatorTermTable =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(written, OperatorTermTable::build(4, 6));
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["terms"], written.len());
}

#[test]
fn verification_exit_codes() {
    let (code, out, _) = run(VERIFY, &["thm55", "--N", "4", "--literal"]);
    assert_eq!(code, 1);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["pass"], false);
    assert!(!v["residual_terms"].as_array().unwrap().is_empty());

    let (code, out, _) = run(VERIFY, &["conjecture", "--d", "4", "--N", "5"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["experimental"], true);

    let (code, out, _) = run(VERIFY, &["closed-form", "--nmax", "5"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["rows"].as_array().unwrap().len(), 18);

    let (code, out, _) = run(VERIFY, &["components", "--N", "4"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["case4_total"], 0);
}

#[test]
fn budget_caps_come_from_file_then_environment() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["count", "--n", "9", "--d", "2", "--k", "1", "--alpha", "9"];

    let (code, _, err) = run_in(dir.path(), HW, &args, None);
    assert_eq!(code, 2);
    let e: Value = serde_json::from_str(&err).unwrap();
    assert_eq!((e["error"].as_str(), e["parameter"].as_str(), e["cap"].as_u64()), (Some("budget"), Some("n"), Some(8)));

    std::fs::write(dir.path().join("hurwitz.toml"), "max_n = 9\n").unwrap();
    let (code, out, _) = run_in(dir.path(), HW, &args, None);
    assert_eq!((code, out.as_str()), (0, "{\"count\":\"0\"}\n"));

    let (code, _, _) = run_in(dir.path(), HW, &args, Some("max_n=7"));
    assert_eq!(code, 2);

    let other = dir.path().join("other.toml");
    std::fs::write(&other, "max_n = 10\nmax_k = 20\n").unwrap();
    let (code, out, _) = run_in(
        dir.path(),
        VERIFY,
        &["--config", other.to_str().unwrap(), "--no-timing", "gj-pde", "--N", "3"],
        None,
    );
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["budget"]["max_n"], 10);

    let (code, out, _) = run_in(dir.path(), VERIFY, &["components", "--N", "5"], Some("max_tuples=100"));
    assert_eq!(code, 2);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert!(!v["skipped"].as_array().unwrap().is_empty());
}

#[test]
fn bad_arguments_are_usage_errors() {
    let cases: [(&str, &[&str]); 5] = [
        (HW, &["min", "--d", "3", "--alpha", "3,0"]),
        (HW, &["min", "--d", "1", "--alpha", "3"]),
        (HW, &["count", "--n", "4", "--d", "3", "--k", "1", "--alpha", "3"]),
        (VERIFY, &["gj-pde", "--N", "0"]),
        (WOP, &["frobnicate"]),
    ];
    for (bin, args) in cases {
        let (code, out, err) = run(bin, args);
        assert_eq!(code, 64, "{args:?}");
        assert!(out.is_empty() && !err.is_empty(), "{args:?}");
    }
    let (_, _, err) = run(HW, &["min", "--d", "3", "--alpha", "3,0"]);
    assert!(err.contains("`0`"), "{err}");
    let (code, out, _) = run(HW, &["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("count"));
}
