//! End-to-end tests of the `maxcut` binary: flags, exit codes, output
//! formats, and determinism.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_maxcut"))
}

fn data_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data")
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn solve_gr17_stabilizer_reports_reference_row() {
    let input = data_dir().join("tsplib/gr17.tsp");
    let out = run(&[
        "solve",
        "--input",
        input.to_str().unwrap(),
        "--format",
        "tsplib",
        "--algorithm",
        "stabilizer",
    ]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "instance,n,algorithm,cut_weight,total_weight,ratio,optimal_weight,time_ms,policy"
    );
    let row = lines.next().unwrap();
    assert!(row.starts_with("gr17,17,stabilizer,24986,37346,0.669,,"), "row: {row}");
}

#[test]
fn solve_triangle_exact() {
    let input = data_dir().join("mcut/triangle.mcut");
    let out = run(&[
        "solve",
        "--input",
        input.to_str().unwrap(),
        "--format",
        "mcut",
        "--algorithm",
        "exact",
    ]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("triangle,3,exact,5,6,0.833,5,"), "got: {text}");
}

#[test]
fn invalid_flag_value_exits_2() {
    let out = run(&["solve", "--input", "x", "--format", "mcut", "--algorithm", "nosuch"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn parse_failure_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.mcut");
    std::fs::write(&bad, "2 1\n2 1 5\n").unwrap();
    let out = run(&[
        "solve",
        "--input",
        bad.to_str().unwrap(),
        "--format",
        "mcut",
        "--algorithm",
        "stabilizer",
    ]);
    assert_eq!(out.status.code(), Some(3));
    let err = String::from_utf8_lossy(&out.stderr).into_owned();
    assert!(err.contains("i < j"), "stderr: {err}");
}

#[test]
fn oracle_size_limit_exits_4() {
    let input = data_dir().join("tsplib/bayg29.tsp");
    let out = run(&[
        "solve",
        "--input",
        input.to_str().unwrap(),
        "--format",
        "tsplib",
        "--algorithm",
        "exact",
    ]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn verify_exit_codes() {
    let input = data_dir().join("tsplib/hk48.tsp");
    let ok = run(&[
        "verify",
        "--input",
        input.to_str().unwrap(),
        "--format",
        "tsplib",
        "--algorithm",
        "stabilizer",
        "--expect",
        "771712",
    ]);
    assert_eq!(ok.status.code(), Some(0), "stdout: {}", stdout_of(&ok));
    assert!(stdout_of(&ok).contains("computed 771712 expected 771712"));

    let gr17 = data_dir().join("tsplib/gr17.tsp");
    let bad = run(&[
        "verify",
        "--input",
        gr17.to_str().unwrap(),
        "--format",
        "tsplib",
        "--algorithm",
        "stabilizer",
        "--expect",
        "0",
    ]);
    assert_eq!(bad.status.code(), Some(1));

    let tri = data_dir().join("mcut/triangle.mcut");
    let exact = run(&[
        "verify",
        "--input",
        tri.to_str().unwrap(),
        "--format",
        "mcut",
        "--algorithm",
        "exact",
        "--expect",
        "5",
    ]);
    assert_eq!(exact.status.code(), Some(0));
}

#[test]
fn trace_flag_emits_steps() {
    let input = data_dir().join("mcut/triangle.mcut");
    let out = run(&[
        "solve",
        "--input",
        input.to_str().unwrap(),
        "--format",
        "mcut",
        "--algorithm",
        "stabilizer",
        "--trace",
    ]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    // Two contraction steps; first picks (2,3) with weight 3 and sign -1.
    assert!(text.contains("\n1 2 3 3 -1 3 2\n"), "got: {text}");
    assert!(text.contains("\n2 1 2 "), "got: {text}");
}

#[test]
fn bench_rows_are_deterministic_and_ordered() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["gr17.tsp", "bayg29.tsp"] {
        std::fs::copy(data_dir().join("tsplib").join(name), dir.path().join(name)).unwrap();
    }
    std::fs::write(dir.path().join("notes.txt"), "ignored").unwrap();
    let args = [
        "bench",
        "--dir",
        dir.path().to_str().unwrap(),
        "--algorithms",
        "stabilizer,sg3",
    ];
    let first = run(&args);
    assert!(first.status.success());
    let second = run(&args);
    let strip_time = |text: &str| -> Vec<String> {
        text.lines()
            .map(|line| {
                let fields: Vec<&str> = line.split(',').collect();
                if fields.len() == 9 {
                    let mut fields = fields;
                    fields[7] = "-";
                    fields.join(",")
                } else {
                    line.to_string()
                }
            })
            .collect()
    };
    assert_eq!(strip_time(&stdout_of(&first)), strip_time(&stdout_of(&second)));

    let text = stdout_of(&first);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 4);
    // Sorted by instance name, then by the given algorithm order.
    assert!(rows[0].starts_with("bayg29,29,stabilizer,42693,66313,0.644,"), "{}", rows[0]);
    assert!(rows[1].starts_with("bayg29,29,sg3,"), "{}", rows[1]);
    assert!(rows[2].starts_with("gr17,17,stabilizer,24986,37346,0.669,"), "{}", rows[2]);
    assert!(rows[3].starts_with("gr17,17,sg3,"), "{}", rows[3]);
}

#[test]
fn bench_five_reference_instances() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["gr17.tsp", "bayg29.tsp", "hk48.tsp", "berlin52.tsp", "brazil58.tsp"] {
        std::fs::copy(data_dir().join("tsplib").join(name), dir.path().join(name)).unwrap();
    }
    let out = run(&[
        "bench",
        "--dir",
        dir.path().to_str().unwrap(),
        "--algorithms",
        "stabilizer,sg3",
    ]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 10);
    for expected in [
        "gr17,17,stabilizer,24986,37346,",
        "bayg29,29,stabilizer,42693,66313,",
        "hk48,48,stabilizer,771712,1153784,",
        "berlin52,52,stabilizer,470726,762783,",
        "brazil58,58,stabilizer,2208793,3523646,",
    ] {
        assert!(rows.iter().any(|r| r.starts_with(expected)), "missing {expected} in:\n{text}");
    }
}

#[test]
fn bench_empty_directory_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&["bench", "--dir", dir.path().to_str().unwrap(), "--algorithms", "stabilizer"]);
    assert_eq!(out.status.code(), Some(3));
    let err = String::from_utf8_lossy(&out.stderr).into_owned();
    assert!(err.contains("no instances found"), "stderr: {err}");
}

#[test]
fn bench_reports_unparsable_file_and_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::copy(data_dir().join("tsplib/gr17.tsp"), dir.path().join("gr17.tsp")).unwrap();
    std::fs::write(dir.path().join("broken.mcut"), "not a header\n").unwrap();
    let out = run(&["bench", "--dir", dir.path().to_str().unwrap(), "--algorithms", "stabilizer"]);
    assert_eq!(out.status.code(), Some(3));
    let err = String::from_utf8_lossy(&out.stderr).into_owned();
    assert!(err.contains("broken.mcut"), "stderr: {err}");
}

#[test]
fn bench_out_file_and_markdown() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::copy(data_dir().join("tsplib/gr17.tsp"), dir.path().join("gr17.tsp")).unwrap();
    let out_path = dir.path().join("table.md");
    let out = run(&[
        "bench",
        "--dir",
        dir.path().to_str().unwrap(),
        "--algorithms",
        "stabilizer",
        "--output",
        "md",
        "--out-file",
        out_path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let table = std::fs::read_to_string(&out_path).unwrap();
    assert!(table.starts_with("| instance |"), "{table}");
    assert!(table.contains("| gr17 | 17 | stabilizer | 24986 |"), "{table}");
}

#[test]
fn output_formats_carry_identical_numbers() {
    let input = data_dir().join("tsplib/gr17.tsp");
    let base = [
        "solve",
        "--input",
        input.to_str().unwrap(),
        "--format",
        "tsplib",
        "--algorithm",
        "stabilizer",
        "--output",
    ];
    let csv = stdout_of(&run(&[&base[..], &["csv"]].concat()));
    let md = stdout_of(&run(&[&base[..], &["md"]].concat()));
    let json_text = stdout_of(&run(&[&base[..], &["json"]].concat()));
    let json: serde_json::Value = serde_json::from_str(&json_text).unwrap();
    assert_eq!(json[0]["cut_weight"], serde_json::json!(24986));
    assert_eq!(json[0]["total_weight"], serde_json::json!(37346));
    assert_eq!(json[0]["ratio"], serde_json::json!(0.669));
    let csv_row: Vec<&str> = csv.lines().nth(1).unwrap().split(',').collect();
    assert_eq!(csv_row[3], "24986");
    assert_eq!(csv_row[4], "37346");
    assert_eq!(csv_row[5], "0.669");
    assert!(md.contains("| 24986 | 37346 | 0.669 |"), "{md}");
}

#[test]
fn real_mode_instance_solves() {
    let input = data_dir().join("mcut/mixed_real.mcut");
    let out = run(&[
        "solve",
        "--input",
        input.to_str().unwrap(),
        "--format",
        "mcut",
        "--algorithm",
        "stabilizer",
        "--epsilon",
        "1e-9",
    ]);
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let text = stdout_of(&out);
    assert!(text.contains("mixed_real,4,stabilizer,"), "{text}");
    assert!(text.contains("eps=1e-9") || text.contains("eps=0.000000001"), "{text}");
}

#[test]
fn policy_flags_are_accepted() {
    let input = data_dir().join("tsplib/gr17.tsp");
    let out = run(&[
        "solve",
        "--input",
        input.to_str().unwrap(),
        "--format",
        "tsplib",
        "--algorithm",
        "stabilizer",
        "--tie-break",
        "revlex",
        "--survivor",
        "large",
        "--engine",
        "naive",
        "--repeat",
        "3",
    ]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("tie=revlex survivor=large engine=naive"), "{text}");
    assert!(text.contains(",24986,"), "{text}");

    let dec = run(&[
        "solve",
        "--input",
        input.to_str().unwrap(),
        "--format",
        "tsplib",
        "--algorithm",
        "dec",
        "--dec-direction",
        "keep-larger",
    ]);
    assert!(dec.status.success());
    assert!(stdout_of(&dec).contains("direction=keep-larger"), "{}", stdout_of(&dec));
}
