//! End-to-end tests of the command-line interface, run against the built
//! binary.

use std::io::Write;
use std::process::{Command, Output};

use orthorank::reps::c5_five_halves_fixture;
use orthorank::reps::certificates::CertificateFile;

fn orthorank(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_orthorank"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn gen_emits_canonical_graph6() {
    let out = orthorank(&["gen", "cycle:5"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "Dhc");
    let k5 = orthorank(&["gen", "complete:5"]);
    assert_eq!(stdout(&k5).trim(), "D~{");
}

#[test]
fn gen_rejects_bad_specs_with_exit_1() {
    for bad in ["kneser:3,2", "cycle:two", "frobnicate:9"] {
        let out = orthorank(&["gen", bad]);
        assert_eq!(out.status.code(), Some(1), "spec {bad:?}");
    }
}

#[test]
fn report_json_on_c5_contains_catalogue_values() {
    let out = orthorank(&["report", "cycle:5", "--json", "--restarts", "12", "--max-iters", "600"]);
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid JSON");
    assert_eq!(doc["bounds"]["inertial"], "5/2");
    assert_eq!(doc["exact"]["chi_f"], "5/2");
    assert_eq!(doc["exact"]["chi"]["value"], 3);
    assert_eq!(doc["xi"]["upper"], 3);
    assert_eq!(doc["graph"]["family"], "cycle:5");
}

#[test]
fn report_json_is_byte_identical_across_runs() {
    let args = ["report", "kneser:5,2", "--json", "--restarts", "8", "--max-iters", "400"];
    let a = stdout(&orthorank(&args));
    let b = stdout(&orthorank(&args));
    assert_eq!(a, b);
}

#[test]
fn report_reads_graph6_lines_and_files() {
    // Single line on the command line.
    let out = orthorank(&["report", "Dhc", "--json"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["graph"]["n"], 5);

    // Batch file preserves input order and exits cleanly.
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "A_").unwrap(); // K2
    writeln!(file, "Dhc").unwrap(); // C5
    writeln!(file, "D~{{").unwrap(); // K5
    let out = orthorank(&["report", file.path().to_str().unwrap(), "--json"]);
    assert!(out.status.success());
    let docs: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let docs = docs.as_array().expect("batch emits an array");
    assert_eq!(docs.len(), 3);
    assert_eq!(docs[0]["graph"]["n"], 2);
    assert_eq!(docs[1]["graph"]["n"], 5);
    assert_eq!(docs[2]["bounds"]["hoffman"], 5.0);
}

#[test]
fn report_rejects_malformed_graph6_with_exit_1() {
    let out = orthorank(&["report", "A_X"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("byte"));
}

#[test]
fn bounds_subcommand_skips_oracles() {
    let out = orthorank(&["bounds", "folded-cube:5", "--json"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["bounds"]["inertial"], "16/5");
    assert!(doc["exact"].is_null());
    assert_eq!(doc["xi"]["searched"], false);
}

#[test]
fn exact_subcommand_reports_oracle_values() {
    let out = orthorank(&["exact", "kneser:5,2", "--json"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["chi"], "3");
    assert_eq!(doc["alpha"], "4");
    assert_eq!(doc["chi_f"], "5/2");
}

#[test]
fn xi_subcommand_prints_the_interval() {
    let out = orthorank(&["xi", "cycle:5", "--restarts", "12", "--max-iters", "600"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("5/2"), "{text}");
    assert!(text.contains("3"), "{text}");
}

#[test]
fn verify_accepts_the_fixture_and_rejects_corruption() {
    let fixture = c5_five_halves_fixture();
    let c5 = orthorank::generate(&"cycle:5".parse().unwrap()).unwrap();
    let file = CertificateFile::from_projector(&fixture, Some(&c5));
    let mut path = tempfile::NamedTempFile::new().unwrap();
    path.write_all(file.to_json().unwrap().as_bytes()).unwrap();
    let out = orthorank(&["verify", path.path().to_str().unwrap()]);
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    assert!(stdout(&out).contains("xi^[2](G) <= 5"));

    // Rank-mismatched certificate must be rejected with exit 2.
    let mut corrupted = CertificateFile::from_projector(&fixture, Some(&c5));
    corrupted.rank = Some(1);
    let mut bad = tempfile::NamedTempFile::new().unwrap();
    bad.write_all(corrupted.to_json().unwrap().as_bytes()).unwrap();
    let out = orthorank(&["verify", bad.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_roundtrips_a_searched_certificate() {
    // Produce a certificate via the library, verify via the CLI.
    let g = orthorank::generate(&"cycle:5".parse().unwrap()).unwrap();
    let cfg = orthorank::reps::SearchConfig {
        restarts: 12,
        max_iters: 800,
        seed: 2,
        ..Default::default()
    };
    let rep = orthorank::reps::search_ortho_rep(&g, 3, &cfg).unwrap().unwrap();
    let file = CertificateFile::from_ortho(&rep, Some(&g));
    let mut path = tempfile::NamedTempFile::new().unwrap();
    path.write_all(file.to_json().unwrap().as_bytes()).unwrap();
    let out = orthorank(&["verify", path.path().to_str().unwrap()]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("xi <= d"), "{}", stdout(&out));
}

#[test]
fn batch_of_random_graphs_exits_clean() {
    use rand::prelude::*;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(12);
    let mut file = tempfile::NamedTempFile::new().unwrap();
    let mut count = 0;
    while count < 100 {
        let n = rng.random_range(2..=9usize);
        let mut edges = Vec::new();
        for v in 0..n as u32 {
            for w in (v + 1)..n as u32 {
                if rng.random::<f64>() < 0.4 {
                    edges.push((v, w));
                }
            }
        }
        let g = orthorank::Graph::new(n, edges).unwrap();
        writeln!(file, "{}", orthorank::serialize_graph6(&g)).unwrap();
        count += 1;
    }
    let out = orthorank(&[
        "report",
        file.path().to_str().unwrap(),
        "--json",
        "--restarts",
        "6",
        "--max-iters",
        "300",
    ]);
    assert_eq!(out.status.code(), Some(0), "soundness failures in batch");
    let docs: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(docs.as_array().unwrap().len(), 100);
}

#[test]
fn usage_errors_exit_1_and_help_exits_0() {
    let out = orthorank(&["report"]);
    assert_eq!(out.status.code(), Some(1));
    let out = orthorank(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    let out = orthorank(&["no-such-subcommand"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn stdin_input_via_dash() {
    use std::process::Stdio;
    let mut child = Command::new(env!("CARGO_BIN_EXE_orthorank"))
        .args(["bounds", "-", "--json"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(b"Dhc\nA_\n")
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    let docs: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(docs.as_array().unwrap().len(), 2);
}
