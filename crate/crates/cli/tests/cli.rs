use std::process::{Command, Output};

use serde_json::Value;

const GOLDEN: &str = include_str!("../../core/golden/first_78_triples.csv");

fn awspec(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_awspec"))
        .args(args)
        .output()
        .expect("run awspec")
}

fn stdout(args: &[&str]) -> String {
    let out = awspec(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn lines(s: &str) -> Vec<&str> {
    s.lines().collect()
}

#[test]
fn table_first_78_is_byte_identical_to_golden() {
    assert_eq!(stdout(&["table", "--first", "78"]), GOLDEN);
}

#[test]
fn table_is_deterministic_across_thread_counts() {
    for threads in ["1", "4"] {
        let out = Command::new(env!("CARGO_BIN_EXE_awspec"))
            .args(["table", "--first", "78"])
            .env("RAYON_NUM_THREADS", threads)
            .output()
            .unwrap();
        assert_eq!(String::from_utf8(out.stdout).unwrap(), GOLDEN);
        let a = Command::new(env!("CARGO_BIN_EXE_awspec"))
            .args(["spectrum", "--t0", "1/3", "--t1", "5/7", "--bound", "200"])
            .env("RAYON_NUM_THREADS", threads)
            .output()
            .unwrap();
        let b = stdout(&["spectrum", "--t0", "1/3", "--t1", "5/7", "--bound", "200"]);
        assert_eq!(String::from_utf8(a.stdout).unwrap(), b);
    }
}

#[test]
fn table_small_examples() {
    let out = stdout(&["table", "--first", "1"]);
    assert_eq!(lines(&out), ["z1,z2,z3,h,v,mult", "0,0,0,0,0,1"]);
    let out = stdout(&["table", "--first", "2"]);
    assert_eq!(lines(&out)[2], "2,1,0,12,0,8");
    let out = stdout(&["table", "--zmax", "2"]);
    assert_eq!(lines(&out).len(), 1 + 3);
    assert!(!awspec(&["table", "--first", "0"]).status.success());
    assert_eq!(awspec(&["table"]).status.code(), Some(2));
}

#[test]
fn spectrum_examples() {
    let out = stdout(&["spectrum", "--t0", "1/2", "--t1", "1", "--first", "2"]);
    assert_eq!(
        lines(&out),
        ["eigenvalue,mult,triples", "0,1,0:0:0", "16,24,2:1:1"]
    );
    let out = stdout(&["spectrum", "--t0", "1/2", "--t1", "1", "--bound", "0"]);
    assert_eq!(lines(&out), ["eigenvalue,mult,triples", "0,1,0:0:0"]);

    // at t₀ = t₁ the class totals 1, 32, 30+30, 243, 280+280 add up per eigenvalue
    let out = stdout(&["spectrum", "--t0", "2", "--t1", "2", "--first", "8"]);
    let mults: Vec<&str> = lines(&out)[1..]
        .iter()
        .map(|l| l.split(',').nth(1).unwrap())
        .collect();
    assert_eq!(mults[..5], ["1", "32", "60", "243", "560"]);
    assert!(lines(&out)[3].ends_with("3:0:1;3:3:1"));
}

#[test]
fn spectrum_rejects_bad_input() {
    let bad = awspec(&["spectrum", "--t0", "1/0", "--t1", "1", "--first", "2"]);
    assert_eq!(bad.status.code(), Some(2));
    let bad = awspec(&["spectrum", "--t0", "-1", "--t1", "1", "--first", "2"]);
    assert_eq!(bad.status.code(), Some(2));
    let both = awspec(&[
        "spectrum", "--t0", "1", "--t1", "1", "--first", "2", "--bound", "3",
    ]);
    assert_eq!(both.status.code(), Some(2));
}

#[test]
fn first_examples() {
    let first_field = |args: &[&str]| {
        stdout(args)
            .lines()
            .nth(1)
            .unwrap()
            .split(',')
            .next()
            .unwrap()
            .to_string()
    };
    assert_eq!(first_field(&["first", "--r0", "12", "--r1", "8"]), "1");
    assert_eq!(first_field(&["first", "--t0", "1/2", "--t1", "1/2"]), "24");
    assert_eq!(
        first_field(&["first", "--alpha", "1", "--delta", "1"]),
        "16"
    );
    let out = stdout(&["first", "--alpha", "1", "--delta", "1"]);
    assert_eq!(lines(&out)[1], "16,2:1:1,naturally_reductive_only,1/2,1");
    assert_eq!(awspec(&["first"]).status.code(), Some(2));
    assert_eq!(awspec(&["first", "--t0", "1"]).status.code(), Some(2));
    assert_eq!(
        awspec(&["first", "--t0", "1", "--t1", "1", "--r0", "1", "--r1", "2"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn convert_examples() {
    let out = stdout(&["convert", "--from", "r", "--to", "t", "12", "8"]);
    assert_eq!(lines(&out), ["t0,t1", "12,24/5"]);
    let out = stdout(&["convert", "--from", "sasaki", "--to", "t", "1", "1"]);
    assert_eq!(lines(&out), ["t0,t1", "1/2,1"]);
    let out = stdout(&["convert", "--from", "t", "--to", "sasaki", "1/2", "1"]);
    assert_eq!(lines(&out), ["alpha,delta", "1,1"]);
    let out = stdout(&["convert", "--from", "r", "--to", "t", "1", "-2"]);
    assert_eq!(lines(&out), ["t0,t1", "1,2"]);

    let err = awspec(&[
        "--format", "json", "convert", "--from", "t", "--to", "r", "1", "1",
    ]);
    assert_eq!(err.status.code(), Some(2));
    let v: Value = serde_json::from_slice(&err.stderr).unwrap();
    assert_eq!(v["error"]["kind"], "parallel_point");

    let err = awspec(&["convert", "--from", "r", "--to", "t", "1", "-1"]);
    assert_eq!(err.status.code(), Some(2));
    let err = awspec(&["convert", "--from", "t", "--to", "sasaki", "12", "24/5"]);
    assert!(String::from_utf8_lossy(&err.stderr).contains("not_a_rational_square"));
}

#[test]
fn check_suites() {
    let out = stdout(&["check", "--suite", "oracle", "--depth", "12"]);
    assert_eq!(lines(&out), ["suite,status,counterexample", "oracle,pass,"]);
    let out = stdout(&["check", "--suite", "urakawa"]);
    assert_eq!(lines(&out)[1], "urakawa,pass,");
    let out = stdout(&["check", "--suite", "sp2", "--depth", "10"]);
    assert_eq!(lines(&out)[1], "sp2,pass,");
    let out = stdout(&["check", "--suite", "estimates"]);
    assert_eq!(lines(&out)[1], "estimates,pass,");

    let over = Command::new(env!("CARGO_BIN_EXE_awspec"))
        .args(["check", "--suite", "oracle", "--depth", "8"])
        .env("AWSPEC_ORACLE_MAX_DEPTH", "5")
        .output()
        .unwrap();
    assert_eq!(over.status.code(), Some(2));
}

#[test]
fn curves_modes() {
    let out = stdout(&[
        "curves",
        "--t1-range",
        "1/4",
        "1",
        "--samples",
        "4",
        "--branches",
        "3",
    ]);
    let rows = lines(&out);
    assert_eq!(rows[0], "t0,t1,b_2_1_0,b_2_1_1,b_3_0_1");
    // at t₁ = t₀ = 1/2 the z₃ branches of (2,1) coincide
    assert_eq!(rows[2], "1/2,1/2,24,24,48");

    let out = stdout(&[
        "curves",
        "--mode",
        "estimates",
        "--t1-range",
        "1/10",
        "3/2",
        "--samples",
        "15",
        "--branches",
        "1",
    ]);
    let rows = lines(&out);
    assert_eq!(rows[0], "t0,t1,b_2_1_0,eta1,f1,f2,f2_valid");
    assert_eq!(rows.len(), 16);

    let out = stdout(&[
        "curves",
        "--mode",
        "constant_volume",
        "--t0",
        "1",
        "--s-range",
        "1/4",
        "4",
        "--samples",
        "5",
        "--branches",
        "1",
    ]);
    for row in &lines(&out)[1..] {
        let fields: Vec<&str> = row.split(',').collect();
        assert_eq!(fields[5], "1", "volume factor in {row}");
    }

    assert_eq!(
        awspec(&["curves", "--t1-range", "1", "1/2"]).status.code(),
        Some(2)
    );
    assert_eq!(
        awspec(&["curves", "--mode", "constant_volume"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn json_output_is_exact() {
    let out = stdout(&[
        "--format", "json", "convert", "--from", "r", "--to", "t", "12", "8",
    ]);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["schema"], "awspec.convert.v1");
    assert_eq!(v["columns"], serde_json::json!(["t0", "t1"]));
    assert_eq!(v["rows"][0]["t1"]["num"], "24");
    assert_eq!(v["rows"][0]["t1"]["den"], "5");

    let out = stdout(&[
        "--format", "json", "spectrum", "--t0", "1/2", "--t1", "1", "--first", "2",
    ]);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["rows"][1]["mult"], 24);
    assert_eq!(v["rows"][1]["triples"], "2:1:1");
}

#[test]
fn decimals_flag() {
    let out = stdout(&[
        "--decimals",
        "3",
        "convert",
        "--from",
        "r",
        "--to",
        "t",
        "12",
        "8",
    ]);
    assert_eq!(lines(&out)[1], "12.000,4.800");
}

#[test]
fn auxiliary_commands() {
    let out = stdout(&["sp2", "--max", "2", "--spherical-only"]);
    assert!(lines(&out)[1..].iter().all(|l| {
        let f: Vec<&str> = l.split(',').collect();
        f[0] == f[2]
    }));
    let out = stdout(&["bound", "--family", "g2", "--alpha", "1", "--delta", "1"]);
    assert_eq!(lines(&out)[1], "g2,1,1,1,24");
    assert_eq!(
        awspec(&["bound", "--family", "a5", "--alpha", "1", "--delta", "1"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn every_subcommand_emits_schema_tagged_json() {
    let cases: [&[&str]; 8] = [
        &["table", "--first", "3"],
        &["spectrum", "--t0", "1", "--t1", "1", "--first", "3"],
        &["first", "--t0", "1", "--t1", "2"],
        &[
            "curves",
            "--t1-range",
            "1/2",
            "1",
            "--samples",
            "2",
            "--branches",
            "2",
        ],
        &["check", "--suite", "urakawa"],
        &["convert", "--from", "t", "--to", "r", "1", "2"],
        &["sp2", "--max", "1"],
        &["bound", "--family", "e6", "--alpha", "1", "--delta", "2"],
    ];
    for args in cases {
        let mut full = vec!["--format", "json"];
        full.extend_from_slice(args);
        let v: Value = serde_json::from_str(&stdout(&full)).unwrap();
        let kind = args[0];
        assert!(
            v["schema"]
                .as_str()
                .unwrap()
                .starts_with(&format!("awspec.{kind}")),
            "{args:?}"
        );
        let columns: Vec<&str> = v["columns"]
            .as_array()
            .unwrap()
            .iter()
            .map(|c| c.as_str().unwrap())
            .collect();
        let rows = v["rows"].as_array().unwrap();
        assert!(!rows.is_empty(), "{args:?}");
        for row in rows {
            let keys: Vec<&str> = row
                .as_object()
                .unwrap()
                .keys()
                .map(String::as_str)
                .collect();
            assert_eq!(keys, columns, "{args:?}");
            for value in row.as_object().unwrap().values() {
                if let Some(obj) = value.as_object() {
                    let den: i64 = obj["den"].as_str().unwrap().parse().unwrap();
                    assert!(den > 0);
                    obj["num"].as_str().unwrap().parse::<i64>().unwrap();
                }
            }
        }
    }
}
