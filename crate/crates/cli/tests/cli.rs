//! End-to-end tests of the `cyclesys` binary.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_cyclesys"))
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("cyclesys-test-{}-{name}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn write(dir: &Path, name: &str, content: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, content).unwrap();
    p
}

fn stdout_of(out: &Output) -> String {
    assert!(
        out.status.success(),
        "exit {:?}, stderr: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout.clone()).unwrap()
}

const INTRO_EDGES: &str = "\
1 0 1
2 0 2
3 0 3
4 0 4
5 1 2
6 2 3
7 3 4
";

const INTRO_SYSTEM: &str = r#"{"cycles": [["3","4","7"], ["2","3","6"], ["1","2","5"]]}"#;

fn catalog(n: usize) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join(format!("../../data/connected_{n}.g6"))
}

#[test]
fn circuits_of_uniform_matroid() {
    let dir = scratch("u24");
    let input = write(&dir, "u24.json", r#"{"uniform": [2, 4]}"#);
    let out = bin().arg("circuits").arg(&input).output().unwrap();
    assert_eq!(stdout_of(&out).lines().count(), 4);
}

#[test]
fn circuits_of_tree_is_empty() {
    let dir = scratch("tree");
    let input = write(&dir, "tree.edges", "a 0 1\nb 1 2\n");
    let out = bin().arg("circuits").arg(&input).output().unwrap();
    assert_eq!(stdout_of(&out), "");
}

#[test]
fn search_counts_intro_systems() {
    let dir = scratch("search");
    let input = write(&dir, "intro.edges", INTRO_EDGES);
    let out = bin()
        .args(["search", input.to_str().unwrap(), "--count", "--check-theorems"])
        .output()
        .unwrap();
    assert_eq!(stdout_of(&out).trim(), "12");

    let out = bin()
        .args(["search", input.to_str().unwrap(), "--mode", "all"])
        .output()
        .unwrap();
    let text = stdout_of(&out);
    assert_eq!(text.lines().count(), 12);
    // the known system is among the hits
    let hit = text.lines().any(|l| {
        let v: serde_json::Value = serde_json::from_str(l).unwrap();
        let cycles: Vec<Vec<String>> =
            serde_json::from_value(v["cycles"].clone()).unwrap();
        let mut sets: Vec<Vec<String>> = cycles
            .into_iter()
            .map(|mut c| {
                c.sort();
                c
            })
            .collect();
        sets.sort();
        sets == vec![
            vec!["1".to_string(), "2".into(), "5".into()],
            vec!["2".to_string(), "3".into(), "6".into()],
            vec!["3".to_string(), "4".into(), "7".into()],
        ]
    });
    assert!(hit);
}

#[test]
fn search_budget_exhaustion_exits_3() {
    let dir = scratch("budget");
    // K33 as an edge list
    let mut edges = String::new();
    for u in 0..3 {
        for v in 3..6 {
            edges.push_str(&format!("{u}-{v} {u} {v}\n"));
        }
    }
    let input = write(&dir, "k33.edges", &edges);
    let out = bin()
        .args(["search", input.to_str().unwrap(), "--count", "--budget-ms", "0"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn parse_failure_exits_2() {
    let dir = scratch("parse");
    let input = write(&dir, "bad.edges", "not an edge list\n");
    let out = bin().arg("circuits").arg(&input).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn invalid_system_exits_4() {
    let dir = scratch("invalid");
    let input = write(&dir, "intro.edges", INTRO_EDGES);
    // two equal circuits: unique-union property fails
    let system = write(
        &dir,
        "bad.json",
        r#"{"cycles": [["3","4","7"], ["3","4","7"], ["1","2","5"]]}"#,
    );
    let out = bin()
        .args([
            "coparking",
            "enumerate",
            input.to_str().unwrap(),
            "--system",
            system.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn coparking_verify_reports_witness() {
    let dir = scratch("verify");
    let input = write(&dir, "intro.edges", INTRO_EDGES);
    let system = write(&dir, "system.json", INTRO_SYSTEM);
    let base = |vector: &str| {
        let out = bin()
            .args([
                "coparking",
                "verify",
                input.to_str().unwrap(),
                "--system",
                system.to_str().unwrap(),
                "--vector",
                vector,
            ])
            .output()
            .unwrap();
        serde_json::from_str::<serde_json::Value>(&stdout_of(&out)).unwrap()
    };
    assert_eq!(base("2,0,2")["coparking"], true);
    let rejected = base("2,2,0");
    assert_eq!(rejected["coparking"], false);
    assert_eq!(rejected["witness"], serde_json::json!([1, 2]));
}

#[test]
fn coparking_enumerate_lists_21_vectors() {
    let dir = scratch("enumerate");
    let input = write(&dir, "intro.edges", INTRO_EDGES);
    let system = write(&dir, "system.json", INTRO_SYSTEM);
    let out = bin()
        .args([
            "coparking",
            "enumerate",
            input.to_str().unwrap(),
            "--system",
            system.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert_eq!(stdout_of(&out).lines().count(), 21);

    let out = bin()
        .args([
            "coparking",
            "enumerate",
            input.to_str().unwrap(),
            "--system",
            system.to_str().unwrap(),
            "--format",
            "dot",
        ])
        .output()
        .unwrap();
    assert!(stdout_of(&out).starts_with("digraph"));
}

#[test]
fn bijection_round_trips() {
    let dir = scratch("bijection");
    let input = write(&dir, "intro.edges", INTRO_EDGES);
    let system = write(&dir, "system.json", INTRO_SYSTEM);
    let out = bin()
        .args([
            "bijection",
            "to-basis",
            input.to_str().unwrap(),
            "--system",
            system.to_str().unwrap(),
            "--vector",
            "2,0,2",
        ])
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    let basis: Vec<String> = serde_json::from_value(v["basis"].clone()).unwrap();

    let out = bin()
        .args([
            "bijection",
            "to-coparking",
            input.to_str().unwrap(),
            "--system",
            system.to_str().unwrap(),
            "--basis",
            &basis.join(","),
        ])
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(v["a"], serde_json::json!([2, 0, 2]));
}

#[test]
fn tutte_reports_h_vector() {
    let dir = scratch("tutte");
    let input = write(&dir, "intro.edges", INTRO_EDGES);
    let out = bin().arg("tutte").arg(&input).output().unwrap();
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(v["h_vector"], serde_json::json!([1, 3, 6, 7, 4]));
    assert_eq!(v["bases"], 21);
}

#[test]
fn report_bundles_everything() {
    let dir = scratch("report");
    let input = write(&dir, "intro.edges", INTRO_EDGES);
    let system = write(&dir, "system.json", INTRO_SYSTEM);
    let out = bin()
        .args([
            "report",
            input.to_str().unwrap(),
            "--system",
            system.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(v["degree_vector"], serde_json::json!([1, 3, 6, 7, 4]));
    assert_eq!(v["main_theorem"], true);
    assert_eq!(v["m_matrix"], true);
    assert_eq!(
        v["firing_matrix"],
        serde_json::json!([[3, -1, 0], [-1, 3, -1], [0, -1, 3]])
    );
    assert_eq!(v["bijection"].as_array().unwrap().len(), 21);
}

#[test]
fn dctree_formats() {
    let dir = scratch("dctree");
    let input = write(
        &dir,
        "fig5.edges",
        "a 0 1\nb 0 2\nc 1 2\nd 1 2\n",
    );
    let system = write(
        &dir,
        "system.json",
        r#"{"cycles": [["a","b","c"], ["c","d"]]}"#,
    );
    let args = |fmt: &str| {
        let out = bin()
            .args([
                "dctree",
                input.to_str().unwrap(),
                "--system",
                system.to_str().unwrap(),
                "--ordering",
                "a,b,c,d",
                "--format",
                fmt,
            ])
            .output()
            .unwrap();
        stdout_of(&out)
    };
    assert_eq!(args("json").lines().count(), 5);
    assert!(args("tsv").starts_with("basis\tcoparking\tdegree"));
    assert!(args("dot").starts_with("digraph"));

    let out = bin()
        .args([
            "dctree",
            input.to_str().unwrap(),
            "--system",
            system.to_str().unwrap(),
            "--generalized",
        ])
        .output()
        .unwrap();
    assert_eq!(stdout_of(&out).lines().count(), 5);
}

#[test]
fn census_is_deterministic_and_resumable() {
    let dir = scratch("census");
    let ckpt = dir.join("ckpt");
    let run = |checkpoint: bool| {
        let mut cmd = bin();
        cmd.arg("census").arg(catalog(4));
        if checkpoint {
            cmd.args(["--checkpoint", ckpt.to_str().unwrap()]);
        }
        stdout_of(&cmd.output().unwrap())
    };
    let strip_elapsed = |text: &str| -> Vec<Vec<String>> {
        text.lines()
            .map(|l| l.split('\t').take(5).map(str::to_string).collect())
            .collect()
    };
    let first = run(true);
    let resumed = run(true);
    // resumed rows are byte-identical (cached, elapsed included)
    assert_eq!(first, resumed);
    let fresh = run(false);
    assert_eq!(strip_elapsed(&first), strip_elapsed(&fresh));

    let rows = strip_elapsed(&first);
    assert_eq!(rows.len(), 7); // header + 6 graphs
    assert_eq!(
        rows[0],
        vec!["graph6", "corank", "circuits", "has_circuit_system", "has_fundamental"]
    );
    assert!(rows[1..].iter().all(|r| r[3] == "true"));
}

#[test]
fn census_records_malformed_lines_and_continues() {
    let dir = scratch("malformed");
    let input = write(&dir, "mixed.g6", "C~\n!!!bad\nCF\n");
    let out = bin().arg("census").arg(&input).output().unwrap();
    let text = stdout_of(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 4);
    assert!(lines[2].contains("error"));
    assert!(lines[1].split('\t').nth(3) == Some("true"));
    assert!(lines[3].split('\t').nth(3) == Some("true"));
}

#[test]
fn search_checkpoint_resumes() {
    let dir = scratch("ckpt-search");
    let input = write(&dir, "intro.edges", INTRO_EDGES);
    let ckpt = dir.join("search-ckpt");
    let run = || {
        bin()
            .args([
                "search",
                input.to_str().unwrap(),
                "--count",
                "--checkpoint",
                ckpt.to_str().unwrap(),
            ])
            .output()
            .unwrap()
    };
    let first = stdout_of(&run());
    assert!(ckpt.join("meta.json").exists());
    let second = stdout_of(&run());
    assert_eq!(first, second);
    assert_eq!(first.trim(), "12");
}
