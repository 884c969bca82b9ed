use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;
use tutte::bipoly::PolyJson;
use tutte::cli::TutteJson;
use tutte::BiPoly;

fn tutte(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tutte"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

const TRIANGLE: &str = "# triangle\np 3 3\n0 1\n1 2\n0 2\n";
const K4: &str = "p 4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n";
const U12: &str = r#"{"m":2,"r":1,"ranks":{"0":0,"1":1,"2":1,"3":1}}"#;

#[test]
fn tutte_text_format() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "tri.txt", TRIANGLE);
    let out = tutte(&["tutte", &f, "--engine", "delcon", "--format", "text"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "t[0][1]=1, t[1][0]=1, t[2][0]=1\n");
}

#[test]
fn tutte_latex_format() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "tri.txt", TRIANGLE);
    let out = tutte(&["tutte", &f, "--format", "latex"]);
    assert_eq!(stdout(&out), "x^{2} + x + y\n");
}

#[test]
fn tutte_rank_table_json() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "u12.json", U12);
    let out = tutte(&["tutte", &f, "--engine", "subset", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "{\"m\":2,\"r\":1,\"terms\":[{\"i\":0,\"j\":1,\"c\":\"1\"},{\"i\":1,\"j\":0,\"c\":\"1\"}]}\n"
    );
}

#[test]
fn tutte_empty_graph_every_engine() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "empty.txt", "p 1 0\n");
    for engine in ["subset", "delcon", "activities"] {
        let out = tutte(&["tutte", &f, "--engine", engine]);
        assert_eq!(out.status.code(), Some(0), "{engine}");
        assert_eq!(
            stdout(&out),
            "{\"m\":0,\"r\":0,\"terms\":[{\"i\":0,\"j\":0,\"c\":\"1\"}]}\n"
        );
    }
}

#[test]
fn subset_and_delcon_emit_identical_json() {
    let dir = TempDir::new().unwrap();
    for (name, text) in [
        ("tri", TRIANGLE),
        ("k4", K4),
        ("multi", "p 3 5\n0 1\n0 1\n1 2\n2 2\n0 2\n"),
    ] {
        let f = write(&dir, name, text);
        let a = tutte(&["tutte", &f, "--engine", "subset"]);
        let b = tutte(&["tutte", &f, "--engine", "delcon"]);
        let c = tutte(&["tutte", &f, "--engine", "activities"]);
        assert_eq!(a.stdout, b.stdout, "{name}");
        assert_eq!(a.stdout, c.stdout, "{name}");
    }
}

#[test]
fn emitted_json_reparses_to_same_polynomial() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "k4.txt", K4);
    let out = tutte(&["tutte", &f]);
    let parsed: TutteJson = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!((parsed.m, parsed.r), (6, 3));
    let t = BiPoly::from_json(&PolyJson {
        terms: parsed.terms,
    })
    .unwrap();
    let expected = BiPoly::from_terms([
        (3, 0, 1),
        (2, 0, 3),
        (1, 0, 2),
        (1, 1, 4),
        (0, 1, 2),
        (0, 2, 3),
        (0, 3, 1),
    ]);
    assert_eq!(t, expected);
}

#[test]
fn verify_k4_passes() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "k4.txt", K4);
    let out = tutte(&["verify", &f, "--hmax", "10"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["overall"], true);
    assert_eq!(report["entries"].as_array().unwrap().len(), 11);
    assert_eq!(report["entries"][6]["rhs"], "-1");
}

#[test]
fn verify_default_hmax_and_rank_table() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "u12.json", U12);
    let out = tutte(&["verify", &f]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["entries"].as_array().unwrap().len(), 9);
}

#[test]
fn verify_corrupted_coefficients_exits_one() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "k4.txt", K4);
    let good = stdout(&tutte(&["tutte", &f]));
    let bad = good.replace(r#"{"i":1,"j":1,"c":"4"}"#, r#"{"i":1,"j":1,"c":"5"}"#);
    assert_ne!(good, bad);
    let g = write(&dir, "bad.json", &bad);
    let out = tutte(&["verify", &g]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("FAIL at h=2"), "{}", stderr(&out));

    let g = write(&dir, "good.json", &good);
    assert_eq!(tutte(&["verify", &g]).status.code(), Some(0));
}

#[test]
fn bad_inputs_exit_two() {
    let dir = TempDir::new().unwrap();
    let bound = write(&dir, "bound.json", r#"{"m":1,"r":2,"ranks":{"0":0,"1":2}}"#);
    let out = tutte(&["verify", &bound]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("r(0b1) = 2"), "{}", stderr(&out));

    let malformed = write(&dir, "bad.txt", "p 2 1\n0 7\n");
    let out = tutte(&["tutte", &malformed]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line 2"), "{}", stderr(&out));

    let u12 = write(&dir, "u12.json", U12);
    assert_eq!(
        tutte(&["tutte", &u12, "--engine", "activities"])
            .status
            .code(),
        Some(2)
    );
    let disconnected = write(&dir, "two.txt", "p 2 0\n");
    assert_eq!(
        tutte(&["tutte", &disconnected, "--engine", "activities"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        tutte(&["tutte", "/nonexistent/file"]).status.code(),
        Some(2)
    );
    assert_eq!(tutte(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn gen_families() {
    let out = tutte(&["gen", "uniform", "--r", "1", "--m", "2"]);
    assert_eq!(stdout(&out), format!("{U12}\n"));
    let out = tutte(&["gen", "complete-graph", "--n", "4"]);
    assert_eq!(stdout(&out), K4);
    let out = tutte(&["gen", "cycle", "--n", "3"]);
    assert_eq!(stdout(&out), "p 3 3\n0 1\n1 2\n2 0\n");
    let out = tutte(&["gen", "theta", "--lengths", "1,2"]);
    assert_eq!(stdout(&out), "p 3 3\n0 1\n0 2\n2 1\n");
    let out = tutte(&[
        "gen",
        "random-multigraph",
        "--n",
        "3",
        "--m",
        "5",
        "--seed",
        "4",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("p 3 5\n"));
}

#[test]
fn gen_random_ranked_is_deterministic_and_verifiable() {
    let dir = TempDir::new().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for path in [&a, &b] {
        let out = tutte(&[
            "gen",
            "random-ranked",
            "--m",
            "6",
            "--r",
            "3",
            "--seed",
            "7",
            "-o",
            path.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0));
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert_eq!(
        tutte(&["verify", a.to_str().unwrap()]).status.code(),
        Some(0)
    );
    assert!(Path::new(&a).exists());
}

#[test]
fn gen_invalid_parameters_exit_two() {
    assert_eq!(
        tutte(&["gen", "uniform", "--r", "3", "--m", "2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(tutte(&["gen", "complete-graph"]).status.code(), Some(2));
    assert_eq!(tutte(&["gen", "theta"]).status.code(), Some(2));
    assert_eq!(tutte(&["gen", "cycle", "--n", "0"]).status.code(), Some(2));
}
