mod common;

use std::process::{Command, Output};

use invariant_set::cli::Report;

fn ist(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ist"))
        .args(args)
        .env_remove("IST_DEFAULT_P")
        .output()
        .expect("ist runs")
}

fn stdout(args: &[&str]) -> String {
    let out = ist(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn golden_outputs_are_byte_identical() {
    for (file, args) in common::GOLDEN_CASES {
        let expected = std::fs::read_to_string(common::golden_dir().join(file)).unwrap();
        assert_eq!(stdout(args), expected, "{file}");
    }
}

#[test]
fn golden_contents() {
    let mz: serde_json::Value = serde_json::from_str(&stdout(common::GOLDEN_CASES[0].1)).unwrap();
    assert_eq!(mz["verdicts"]["real"], "on_set");
    assert!(mz["verdicts"]["counterfactual"]["off_set"].is_object());
    let ens = stdout(common::GOLDEN_CASES[1].1);
    assert!(ens.contains("string: aaaabbbb\n") && ens.contains("frequency_a: 1/2\n"));
    let chsh = stdout(common::GOLDEN_CASES[2].1);
    assert!(chsh.contains("s_value: 14/5\n") && chsh.contains("disjoint: true\n"));
}

#[test]
fn exit_code_contract() {
    let cases: [(&[&str], i32); 8] = [
        (&["niven", "--turns", "1/8"], 0),
        (&["mz", "--angle", "1/7", "--performed", "0"], 0),
        (&["mz", "--cos", "3/5", "--angle", "1/4"], 2),
        (&["sg", "--cos", "2/5", "--order", "4,5"], 2),
        (&["sweep", "mz-exclusion", "--p", "1"], 2),
        (&["no-such-command"], 2),
        (
            &["chsh", "--cosines", "1/3,1/3,1/3,1/3", "--sizes", "5,5,5,5"],
            3,
        ),
        (&["padic", "--p", "5", "--digits", "0,7"], 3),
    ];
    for (args, code) in cases {
        let out = ist(args);
        assert_eq!(out.status.code(), Some(code), "ist {}", args.join(" "));
        if code != 0 {
            assert!(out.stdout.is_empty());
            assert!(!out.stderr.is_empty());
        }
    }
}

#[test]
fn out_flag_writes_the_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = ist(&[
        "mz",
        "--cos",
        "3/5",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let golden = std::fs::read_to_string(common::golden_dir().join("mz_json.json")).unwrap();
    assert_eq!(std::fs::read_to_string(&path).unwrap(), golden);

    let missing = dir.path().join("absent").join("report.json");
    let out = ist(&["mz", "--cos", "3/5", "--out", missing.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn json_round_trips_for_every_kind() {
    let runs: [&[&str]; 9] = [
        &["niven", "--cos", "-1/2"],
        &["mz", "--cos", "3/5"],
        &["sg", "--angle", "1/4", "--order", "3,2"],
        &[
            "chsh",
            "--cosines",
            "-7/10,7/10,-7/10,-7/10",
            "--sizes",
            "40,40,40,40",
            "--x",
            "1",
        ],
        &["ensemble", "--p", "12", "--n", "5", "--m", "3"],
        &["padic", "--p", "7", "--value", "-98"],
        &[
            "padic", "--p", "10", "--digits", "0,1,2,3", "--other", "0,1,9,3", "--flip", "2",
        ],
        &[
            "snap",
            "--resolution",
            "6",
            "--theta",
            "1.2",
            "--phi",
            "5.9",
            "--counterexample",
        ],
        &["sweep", "chsh", "--p", "10,100"],
    ];
    for args in runs {
        let mut with_json = args.to_vec();
        with_json.extend(["--format", "json"]);
        let text = stdout(&with_json);
        let report: Report = serde_json::from_str(&text).unwrap();
        assert_eq!(report.to_json(), text, "{}", args.join(" "));
    }
}

#[test]
fn output_is_deterministic() {
    let args = ["sweep", "mz-exclusion", "--p", "101,13,59"];
    assert_eq!(stdout(&args), stdout(&args));
    let a = stdout(&[
        "chsh",
        "--cosines",
        "-1,-1,-1,-1",
        "--sizes",
        "4,4,4,4",
        "--format",
        "csv",
    ]);
    let b = stdout(&[
        "chsh",
        "--cosines",
        "-1,-1,-1,-1",
        "--sizes",
        "4,4,4,4",
        "--format",
        "csv",
    ]);
    assert_eq!(a, b);
}

#[test]
fn sweep_tables() {
    let mz = stdout(&["sweep", "mz-exclusion", "--p", "101,1009,10007"]);
    let lines: Vec<_> = mz.lines().collect();
    assert_eq!(lines[0], "p,admissible,total,fraction,bound,within_bound");
    assert_eq!(lines[2], "1009,3,2019,1/673,5/2019,true");
    assert!(lines[1..].iter().all(|l| l.ends_with(",true")));
    assert!(!mz.contains('\r'));

    let chsh = stdout(&["sweep", "chsh", "--p", "100,1000,10000"]);
    assert_eq!(chsh.lines().count(), 4);
    assert!(chsh.lines().skip(1).all(|l| l.ends_with(",true")));

    assert_eq!(
        stdout(&["sweep", "mz-exclusion"]),
        "p,admissible,total,fraction,bound,within_bound\n"
    );
}

#[test]
fn default_p_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_ist"))
        .args(["ensemble", "--n", "3"])
        .env("IST_DEFAULT_P", "6")
        .output()
        .unwrap();
    assert!(String::from_utf8(out.stdout)
        .unwrap()
        .contains("string: aaabbb\n"));
    let fallback = stdout(&["ensemble", "--n", "0"]);
    assert!(fallback.contains("params.p: 1009\n"));
}
