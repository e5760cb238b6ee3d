//! End-to-end checks of the binary: exit-code contract, determinism of
//! rendered reports, fault injection, and the subcommand surfaces.

use std::process::{Command, Output};

fn fibbern(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fibbern"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn verify_lemma1_family_exits_zero() {
    let out = fibbern(&[
        "verify", "--ids", "L1*", "--n-max", "10", "--j-max", "2", "--format", "json",
    ]);
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid JSON");
    let summaries = v["summaries"].as_array().unwrap();
    assert_eq!(summaries.len(), 3);
    assert_eq!(v["totals"]["unequal"], 0);
}

#[test]
fn unknown_identity_is_a_usage_error() {
    let out = fibbern(&["verify", "--ids", "NOSUCH"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("--ids"), "stderr: {}", err);
    assert!(err.contains("usage:"), "stderr: {}", err);
}

#[test]
fn injected_fault_flips_exit_code() {
    let args = [
        "verify",
        "--ids",
        "T9A,T9B",
        "--n-max",
        "6",
        "--j-max",
        "2",
        "--m-range",
        "0:1",
    ];
    let clean = fibbern(&args);
    assert_eq!(clean.status.code(), Some(0));
    let mut faulty_args = args.to_vec();
    faulty_args.extend(["--inject-fault", "T9A"]);
    let faulty = fibbern(&faulty_args);
    assert_eq!(faulty.status.code(), Some(1));
    assert!(stdout(&faulty).contains("UNEQUAL"));
}

#[test]
fn reports_are_byte_identical_across_jobs() {
    for format in ["json", "csv", "text"] {
        let run = |jobs: &str| {
            fibbern(&[
                "verify", "--ids", "T1*,C10*", "--n-max", "12", "--j-max", "3", "--format", format,
                "--jobs", jobs,
            ])
        };
        let a = run("1");
        let b = run("8");
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(
            a.stdout, b.stdout,
            "{} output differs between job counts",
            format
        );
    }
}

#[test]
fn table_prints_bernoulli_values() {
    let out = fibbern(&["table", "--seq", "bernoulli", "--max", "12"]);
    assert!(out.status.success());
    let text = stdout(&out);
    for line in [
        "0: 1",
        "1: -1/2",
        "2: 1/6",
        "3: 0",
        "4: -1/30",
        "12: -691/2730",
    ] {
        assert!(
            text.lines().any(|l| l == line),
            "missing '{}' in:\n{}",
            line,
            text
        );
    }
}

#[test]
fn table_rejects_unknown_sequence() {
    let out = fibbern(&["table", "--seq", "primes"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn series_confirms_functional_equation() {
    let out = fibbern(&["series", "--eq", "EGF_F_SQ", "--j", "1", "--order", "32"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("confirmed to order 32"));

    let bad = fibbern(&["series", "--eq", "NOSUCH"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn series_h_relation_takes_a_point() {
    let out = fibbern(&[
        "series",
        "--eq",
        "H_RELATION",
        "--j",
        "2",
        "--order",
        "16",
        "--x",
        "alpha",
    ]);
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert!(stdout(&out).contains("confirmed to order 16"));
}

#[test]
fn ledger_lists_the_corrections() {
    let out = fibbern(&["ledger"]);
    assert!(out.status.success());
    let text = stdout(&out);
    for key in [
        "LEM6_SIGNS",
        "T1C_POWER",
        "T11B_EVEN_TAIL",
        "C22A_MISSING_EQUALS",
        "EX_Q3_STRAY_X",
        "T2_CONSEQ_N0",
    ] {
        assert!(text.contains(key), "ledger missing {}", key);
    }
    assert!(text.contains("corrected matches oracle: true"));
}

#[test]
fn bench_reports_wall_times() {
    let out = fibbern(&["bench", "--bernoulli-max", "40", "--fib-max", "2000"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("fast doubling"));
    assert!(text.contains("akiyama-tanigawa"));
}

#[test]
fn verify_writes_csv_to_file() {
    let dir = std::env::temp_dir().join("fibbern-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.csv");
    let out = fibbern(&[
        "verify",
        "--ids",
        "L1A",
        "--n-max",
        "4",
        "--j-max",
        "1",
        "--format",
        "csv",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let written = std::fs::read_to_string(&path).unwrap();
    assert!(written.starts_with("identity,n,j,m,q,sign,z,x,status,lhs,rhs,note"));
    assert_eq!(written.lines().count(), 1 + 5); // header + n in [0,4]
    std::fs::remove_file(&path).ok();
}
