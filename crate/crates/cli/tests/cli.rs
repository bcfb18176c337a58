use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_grassmoduli"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn decompose_table() {
    let o = run(&[
        "decompose",
        "--p",
        "2",
        "--q",
        "2",
        "--k",
        "1",
        "--format",
        "table",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let rows: Vec<&str> = out.lines().skip(1).collect();
    assert_eq!(rows.len(), 3);
    assert!(rows[0].starts_with("[2,2]") && rows[0].contains("sym") && rows[0].contains("-2/1"));
    assert!(rows[1].starts_with("[2,1,1]") && rows[1].contains("alt") && rows[1].contains("15"));
    assert!(rows[2].starts_with("[1,1,1,1]") && rows[2].ends_with("no"));
}

#[test]
fn decompose_single_row() {
    let o = run(&["decompose", "--p", "3", "--q", "1", "--k", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let firsts: Vec<String> = stdout(&o)
        .lines()
        .skip(1)
        .map(|l| l.split_whitespace().next().unwrap().to_string())
        .collect();
    assert_eq!(firsts, ["[4]", "[3,1]", "[2,2]"]);
}

#[test]
fn decompose_parity_filter() {
    let o = run(&[
        "decompose",
        "--p",
        "2",
        "--q",
        "2",
        "--k",
        "1",
        "--parity",
        "alt",
    ]);
    assert_eq!(stdout(&o).lines().count(), 2);
}

#[test]
fn decompose_rejects_q_above_p() {
    let o = run(&["decompose", "--p", "2", "--q", "3", "--k", "1"]);
    assert_eq!(o.status.code(), Some(2));
    let err = stderr(&o);
    assert!(err.contains("requires p ≥ q"));
    assert_eq!(err.lines().count(), 1);
}

#[test]
fn unknown_flag_rejected() {
    assert_eq!(
        run(&["decompose", "--p", "2", "--q", "2", "--k", "1", "--bogus"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["moduli", "--p", "2", "--q", "2", "--k", "-1"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn decompose_csv() {
    let o = run(&[
        "decompose",
        "--p",
        "2",
        "--q",
        "2",
        "--k",
        "1",
        "--format",
        "csv",
    ]);
    let out = stdout(&o);
    let mut lines = out.lines();
    assert!(lines.next().unwrap().starts_with("\"partition\",\"fund\""));
    assert!(lines.next().unwrap().starts_with("\"2,2\",\"0,2,0\""));
    assert!(lines.next().unwrap().starts_with("\"2,1,1\","));
}

#[test]
fn json_round_trips() {
    for args in [
        &[
            "decompose",
            "--p",
            "3",
            "--q",
            "2",
            "--k",
            "2",
            "--format",
            "json",
        ][..],
        &[
            "moduli", "--p", "3", "--q", "2", "--k", "2", "--format", "json",
        ][..],
        &[
            "verify", "--max-n", "4", "--max-k", "1", "--suite", "weights", "--format", "json",
        ][..],
    ] {
        let out = stdout(&run(args));
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(serde_json::to_string(&v).unwrap() + "\n", out);
    }
}

#[test]
fn moduli_json_fields() {
    let o = run(&[
        "moduli", "--p", "2", "--q", "2", "--k", "1", "--format", "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(
        keys,
        [
            "p",
            "q",
            "k",
            "dim_H0",
            "dim_sym_square",
            "dim_F2k",
            "dim_Vk",
            "N",
            "dim_image_moduli",
            "gs_sym_components",
            "flags"
        ]
    );
    assert_eq!(v["dim_Vk"], "1");
    assert_eq!(v["N"], "-1");
    assert_eq!(v["flags"]["routes_agree"], true);
    assert_eq!(v["flags"]["gs_singleton"], true);
    assert_eq!(v["flags"]["skew_label_matches_paper"], false);
}

#[test]
fn moduli_table_notes_and_values() {
    let out = stdout(&run(&["moduli", "--p", "2", "--q", "2", "--k", "1"]));
    assert!(out.contains("note: N = dim V_k − 2 = -1"));
    let out = stdout(&run(&[
        "moduli", "--p", "1", "--q", "1", "--k", "3", "--format", "csv",
    ]));
    let row: Vec<String> = out
        .lines()
        .nth(1)
        .unwrap()
        .split(',')
        .map(|s| s.trim_matches('"').to_string())
        .collect();
    assert_eq!(row[6], "3");
    let out = stdout(&run(&[
        "moduli", "--p", "2", "--q", "1", "--k", "1", "--format", "json",
    ]));
    assert!(out.contains("\"dim_Vk\":\"0\""));
}

#[test]
fn dim_command() {
    assert_eq!(
        stdout(&run(&["dim", "--n", "4", "--partition", "2,2"])),
        "20\n"
    );
    assert_eq!(
        stdout(&run(&["dim", "--n", "4", "--partition", "1,1"])),
        "6\n"
    );
    assert_eq!(
        run(&["dim", "--n", "3", "--partition", "2,1,1,1"])
            .status
            .code(),
        Some(2)
    );
    let o = run(&["dim", "--n", "3", "--partition", "2,1,1,1", "--allow-zero"]);
    assert_eq!((o.status.code(), stdout(&o)), (Some(0), "0\n".to_string()));
    assert_eq!(
        run(&["dim", "--n", "3", "--partition", "1,2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["dim", "--n", "3", "--partition", "x"]).status.code(),
        Some(2)
    );
}

#[test]
fn verify_subset_and_bounds() {
    let o = run(&[
        "verify", "--max-n", "4", "--max-k", "1", "--suite", "weights",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let checks: Vec<&str> = out
        .lines()
        .filter(|l| l.starts_with("PASS") || l.starts_with("FAIL"))
        .collect();
    assert!(!checks.is_empty());
    assert!(checks.iter().all(|l| l.starts_with("PASS  weights/")));
    // timing per check on stderr
    assert_eq!(stderr(&o).lines().count(), checks.len());
    assert_eq!(run(&["verify", "--max-n", "0"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--suite", "nope"]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let args = [
        "verify",
        "--max-n",
        "5",
        "--max-k",
        "2",
        "--suite",
        "rect,discrepancies",
    ];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let d = [
        "decompose",
        "--p",
        "4",
        "--q",
        "2",
        "--k",
        "3",
        "--format",
        "csv",
    ];
    assert_eq!(run(&d).stdout, run(&d).stdout);
}

#[test]
fn output_file() {
    let dir = std::env::temp_dir().join(format!("grassmoduli-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("m.json");
    let o = run(&[
        "moduli",
        "--p",
        "2",
        "--q",
        "2",
        "--k",
        "1",
        "--format",
        "json",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert!(written.starts_with("{\"p\":2"));
    std::fs::remove_dir_all(&dir).unwrap();
}
