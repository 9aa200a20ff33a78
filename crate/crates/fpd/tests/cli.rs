//! End-to-end tests against the compiled binary.

use std::path::PathBuf;
use std::process::{Command, Output};

const CHAIN_FILE: &str = "\
vertices: 3
arrow x2: 1 -> 2
arrow x3: 2 -> 3
loops 2: 2
relations: rad2
";

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_fpd"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("spawn fpd")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf8 stderr")
}

/// Writes `content` to a fresh file under the target temp dir and returns
/// its path.
fn temp_file(name: &str, content: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("fpd-cli-{}-{name}", std::process::id()));
    std::fs::write(&path, content).expect("write temp quiver file");
    path
}

#[test]
fn compute_text_report() {
    let file = temp_file("chain.quiver", CHAIN_FILE);
    let out = run(&["compute", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(
        text.contains("quiver: 3 vertices, 4 arrows (2 loops)"),
        "{text}"
    );
    assert!(text.contains("bricks (5):"), "{text}");
    assert!(text.contains("fpd = 2 (exact: 2)"), "{text}");
    assert!(text.contains("{(1), (2), (3)}: rho = 2"), "{text}");
}

#[test]
fn compute_json_is_deterministic() {
    let file = temp_file("chain-json.quiver", CHAIN_FILE);
    let a = run(&["compute", file.to_str().unwrap(), "--json"]);
    let b = run(&["compute", file.to_str().unwrap(), "--json"]);
    assert_eq!(a.status.code(), Some(0), "stderr: {}", stderr(&a));
    assert_eq!(a.stdout, b.stdout, "JSON output must be byte-identical");

    let v: serde_json::Value = serde_json::from_str(&stdout(&a)).expect("valid JSON");
    let reprinted = format!("{}\n", serde_json::to_string_pretty(&v).unwrap());
    assert_eq!(
        stdout(&a),
        reprinted,
        "parse + re-serialize must reproduce the bytes"
    );
    assert_eq!(v["spec"]["vertices"], 3);
    assert_eq!(v["spec"]["relations"], "rad2");
    assert_eq!(v["fpd"]["value"], "2");
    assert_eq!(v["fpd"]["exact"], "2");
    assert_eq!(v["completeness"], "complete");
    assert_eq!(v["bricks"].as_array().map(Vec::len), Some(5));
    assert_eq!(v["hom_matrix"][3][0], 1);
    assert_eq!(
        v["maximal_brick_sets"][0]["indices"],
        serde_json::json!([0, 1, 2])
    );
}

#[test]
fn compute_writes_output_file() {
    let file = temp_file("chain-out.quiver", CHAIN_FILE);
    let dest = std::env::temp_dir().join(format!("fpd-cli-{}-report.json", std::process::id()));
    let out = run(&[
        "compute",
        file.to_str().unwrap(),
        "--json",
        "-o",
        dest.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    assert!(stdout(&out).is_empty());
    let body = std::fs::read_to_string(&dest).expect("report file");
    let v: serde_json::Value = serde_json::from_str(&body).expect("valid JSON");
    assert_eq!(v["fpd"]["exact"], "2");
}

#[test]
fn family_quadratic_irrational() {
    let out = run(&["family", "--type", "Qnm", "--loops", "1,2"]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("(exact: 3/2 + 1/2*sqrt(5))"), "{text}");
    assert!(text.contains("closed form: 3/2 + 1/2*sqrt(5)"), "{text}");
    assert!(text.contains("match: true"), "{text}");
}

#[test]
fn family_validates_parameters() {
    // D requires rank at least 4.
    let out = run(&["family", "--type", "D", "--n", "3", "--loops", "0,0,0"]);
    assert_eq!(out.status.code(), Some(2), "stdout: {}", stdout(&out));
    assert!(stderr(&out).contains("error:"), "{}", stderr(&out));

    // Qnm fixes the vertex count.
    let out = run(&["family", "--type", "Qnm", "--n", "2", "--loops", "1,1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(
        stderr(&out).contains("--n does not apply"),
        "{}",
        stderr(&out)
    );

    // Loop count must match the rank.
    let out = run(&["family", "--type", "A", "--n", "3", "--loops", "1,2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn thin_mode_rejects_oracle_flags() {
    let file = temp_file("chain-thin.quiver", CHAIN_FILE);
    let out = run(&["compute", file.to_str().unwrap(), "--max-dim", "4"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(
        stderr(&out).contains("--max-dim and --field only apply"),
        "{}",
        stderr(&out)
    );
}

#[test]
fn nonpositive_tolerance_is_a_usage_error() {
    let file = temp_file("chain-tol.quiver", CHAIN_FILE);
    let out = run(&["compute", file.to_str().unwrap(), "--tol=-1e-9"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(
        stderr(&out).contains("--tol must be positive"),
        "{}",
        stderr(&out)
    );
}

#[test]
fn oracle_mode_computes_small_cases() {
    let file = temp_file("chain-oracle.quiver", CHAIN_FILE);
    let out = run(&[
        "compute",
        file.to_str().unwrap(),
        "--mode",
        "oracle",
        "--max-dim",
        "4",
        "--field",
        "3",
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("fpd = 2 (exact: 2)"), "{text}");
}

#[test]
fn missing_file_is_a_usage_error() {
    let out = run(&["compute", "/nonexistent/algebra.quiver"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("error:"), "{}", stderr(&out));
}

#[test]
fn parse_errors_name_the_line() {
    let file = temp_file(
        "broken.quiver",
        "vertices: 2\narrow x: 1 -> 5\nrelations: rad2\n",
    );
    let out = run(&["compute", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line 2"), "{}", stderr(&out));
}

#[test]
fn bad_arguments_exit_two() {
    // clap rejects unknown subcommands and missing required flags with
    // usage errors on code 2.
    let out = run(&["frobenius"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["family", "--type", "A", "--n", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_quick_passes() {
    let out = run(&["verify", "--quick"]);
    assert_eq!(out.status.code(), Some(0), "stdout: {}", stdout(&out));
    let text = stdout(&out);
    assert!(text.contains("verification passed"), "{text}");
    assert!(
        text.lines().filter(|l| l.starts_with("[PASS]")).count() >= 6,
        "{text}"
    );
}

#[test]
fn verify_json_lists_criteria() {
    let out = run(&["verify", "--quick", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid JSON");
    let reports = v.as_array().expect("array");
    assert!(reports.len() >= 6);
    assert!(reports.iter().all(|r| r["passed"] == true));
}

#[test]
fn thread_pool_env_var_is_accepted() {
    let file = temp_file("chain-threads.quiver", CHAIN_FILE);
    let out = bin()
        .env("FPD_THREADS", "1")
        .args(["compute", file.to_str().unwrap()])
        .output()
        .expect("spawn fpd");
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    assert!(stdout(&out).contains("fpd = 2"), "{}", stdout(&out));
}
