//! End-to-end tests of the binary: documented exit codes, witness line
//! grammar, document round-trips and the environment order bound.

use std::io::Write as _;
use std::process::{Command, Output};

use starbrace_core::document::AlgebraDocument;

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_starbrace"));
    cmd.env_remove("STARBRACE_MAX_ORDER");
    cmd
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn text(bytes: &[u8]) -> String {
    String::from_utf8(bytes.to_vec()).expect("utf-8 output")
}

fn code(output: &Output) -> i32 {
    output.status.code().expect("no signal")
}

#[test]
fn proj_left_addition_on_the_rectangular_band_is_a_solution() {
    let out = run(&["check-ybe", "rect22", "--kind", "proj-left"]);
    assert_eq!(code(&out), 0, "stderr: {}", text(&out.stderr));
    let stdout = text(&out.stdout);
    assert!(stdout.lines().any(|l| l == "solution"), "{stdout}");
    assert!(stdout.contains("idempotent: true"));
}

#[test]
fn star_star_addition_on_the_cyclic_group_fails_with_a_witness() {
    let out = run(&["check-ybe", "c3", "--kind", "star-star"]);
    assert_eq!(code(&out), 1);
    let stdout = text(&out.stdout);
    assert!(stdout.lines().any(|l| l == "not a solution"), "{stdout}");
    let witness = stdout
        .lines()
        .find(|l| l.starts_with("WITNESS "))
        .expect("witness line printed");
    assert!(witness.contains("axiom=ybe-"), "{witness}");
    assert!(witness.contains(" tuple=("), "{witness}");
    assert!(witness.contains(" lhs="), "{witness}");
    assert!(witness.contains(" rhs="), "{witness}");
}

#[test]
fn a_missing_file_exits_with_code_two() {
    let out = run(&["classify", "missing-file.json"]);
    assert_eq!(code(&out), 2);
    assert!(text(&out.stderr).starts_with("error: "));
    assert!(text(&out.stdout).is_empty());
}

#[test]
fn classify_reports_the_rectangular_band_profile() {
    let out = run(&["classify", "rect22"]);
    assert_eq!(code(&out), 0);
    let stdout = text(&out.stdout);
    for line in [
        "completely-regular: true",
        "orthodox: true",
        "locally-inverse: true",
        "cro-li: true",
        "inverse: false",
        "clifford: false",
        "commutative: false",
        "identity: none",
    ] {
        assert!(stdout.lines().any(|l| l == line), "missing {line} in {stdout}");
    }
}

#[test]
fn every_catalog_entry_validates_except_the_designed_failure() {
    let list = run(&["catalog", "list"]);
    assert_eq!(code(&list), 0);
    let names: Vec<String> = text(&list.stdout)
        .lines()
        .map(|l| l.split(' ').next().unwrap().to_string())
        .collect();
    assert_eq!(names.len(), 10);
    for name in &names {
        let out = run(&["validate", name]);
        let stdout = text(&out.stdout);
        if name == "klein_rs" {
            assert_eq!(code(&out), 1, "{name}: {stdout}");
            assert!(stdout.contains("invalid"), "{stdout}");
            assert!(stdout.contains("WITNESS axiom="), "{stdout}");
        } else {
            assert_eq!(code(&out), 0, "{name}: {stdout}");
            assert!(stdout.starts_with("valid "), "{stdout}");
        }
    }
}

#[test]
fn derive_add_writes_a_document_the_other_commands_accept() {
    let dir = tempfile::tempdir().expect("tempdir");
    let path = dir.path().join("derived.json");
    let path_str = path.to_str().unwrap();
    let out = run(&["derive-add", "rect22", "--kind", "proj-left", "--out", path_str]);
    assert_eq!(code(&out), 0, "stderr: {}", text(&out.stderr));
    assert!(text(&out.stdout).starts_with("wrote "));

    let validated = run(&["validate", path_str]);
    assert_eq!(code(&validated), 0);
    assert!(text(&validated.stdout).contains("valid algebra: rect22+proj-left"));

    let ybe = run(&["check-ybe", path_str]);
    assert_eq!(code(&ybe), 0);
    assert!(text(&ybe.stdout).lines().any(|l| l == "solution"));
}

#[test]
fn derive_add_to_stdout_emits_parseable_json() {
    let out = run(&["derive-add", "sl2", "--kind", "mul"]);
    assert_eq!(code(&out), 0);
    let doc = AlgebraDocument::parse(&text(&out.stdout)).expect("valid document");
    assert_eq!(doc.name, "sl2+mul");
    assert_eq!(doc.add, Some(doc.mul.clone()));
}

#[test]
fn unknown_kind_tokens_are_rejected_with_the_valid_list() {
    let out = run(&["derive-add", "sl2", "--kind", "nonsense"]);
    assert_eq!(code(&out), 2);
    let stderr = text(&out.stderr);
    assert!(stderr.contains("unknown addition kind"), "{stderr}");
    assert!(stderr.contains("proj-left"), "{stderr}");
}

#[test]
fn check_ybe_without_kind_needs_an_addition_table() {
    let out = run(&["check-ybe", "c3"]);
    assert_eq!(code(&out), 2);
    assert!(text(&out.stderr).contains("no addition"));
}

#[test]
fn check_wsb_accepts_the_brace_entries_and_rejects_star_only_input() {
    let out = run(&["check-wsb", "z8_brace"]);
    assert_eq!(code(&out), 0);
    let stdout = text(&out.stdout);
    assert!(stdout.contains("weak left star-brace: z8_brace"));
    assert!(stdout.contains("associated map: solution"));

    let out = run(&["check-wsb", "c3"]);
    assert_eq!(code(&out), 2);

    let out = run(&["check-wsb", "klein_rs"]);
    assert_eq!(code(&out), 1);
    let stdout = text(&out.stdout);
    assert!(stdout.contains("not a weak left star-brace"));
    assert!(stdout.contains("WITNESS axiom="));
}

#[test]
fn malformed_documents_exit_two_but_axiom_failures_exit_one() {
    let dir = tempfile::tempdir().expect("tempdir");

    let garbage = dir.path().join("garbage.json");
    std::fs::write(&garbage, "{ not json").unwrap();
    let out = run(&["validate", garbage.to_str().unwrap()]);
    assert_eq!(code(&out), 2);

    let unknown_field = dir.path().join("unknown.json");
    std::fs::write(
        &unknown_field,
        r#"{"name":"x","order":1,"mul":[[0]],"star":[0],"extra":1}"#,
    )
    .unwrap();
    let out = run(&["validate", unknown_field.to_str().unwrap()]);
    assert_eq!(code(&out), 2);

    // Left zero times right zero is not associative with this star.
    let broken = dir.path().join("broken.json");
    let mut f = std::fs::File::create(&broken).unwrap();
    write!(
        f,
        r#"{{"name":"broken","order":2,"mul":[[0,1],[1,0]],"star":[1,0]}}"#
    )
    .unwrap();
    let out = run(&["validate", broken.to_str().unwrap()]);
    assert_eq!(code(&out), 1, "stderr: {}", text(&out.stderr));
    assert!(text(&out.stdout).contains("WITNESS axiom="));
}

#[test]
fn catalog_show_round_trips_and_renders_text() {
    let out = run(&["catalog", "show", "rect22"]);
    assert_eq!(code(&out), 0);
    let shown = text(&out.stdout);
    let doc = AlgebraDocument::parse(&shown).expect("valid document");
    assert_eq!(doc.emit_json(), shown);

    let out = run(&["catalog", "show", "rect22", "--format", "text"]);
    assert_eq!(code(&out), 0);
    assert!(text(&out.stdout).contains("mul"));

    let out = run(&["catalog", "show", "nothere"]);
    assert_eq!(code(&out), 2);

    let out = run(&["catalog", "show", "rect22", "--format", "yaml"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn search_output_is_deterministic_and_worker_independent() {
    let first = run(&["search", "--orders", "1..3", "--signature", "star"]);
    assert_eq!(code(&first), 0);
    let second = run(&["search", "--orders", "1..3", "--signature", "star"]);
    let parallel = run(&[
        "search", "--orders", "1..3", "--signature", "star", "--workers", "4",
    ]);
    assert_eq!(text(&first.stdout), text(&second.stdout));
    assert_eq!(text(&first.stdout), text(&parallel.stdout));
    let stdout = text(&first.stdout);
    assert_eq!(stdout.lines().last(), Some("found 8 models"));
    for line in stdout.lines().filter(|l| l.starts_with('{')) {
        AlgebraDocument::parse(line).expect("each model line parses");
    }
}

#[test]
fn search_filters_and_limits_apply() {
    // Every regular star-semigroup with fewer than four elements is
    // inverse, so forbidding inverse leaves nothing below order 4.
    let out = run(&[
        "search", "--orders", "1..3", "--signature", "star", "--forbid", "inverse",
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(text(&out.stdout), "found 0 models\n");

    let out = run(&[
        "search", "--orders", "1..4", "--signature", "star", "--forbid", "inverse",
    ]);
    assert_eq!(code(&out), 0);
    let stdout = text(&out.stdout);
    assert!(stdout.lines().filter(|l| l.starts_with('{')).count() >= 1);

    let out = run(&[
        "search", "--orders", "1..3", "--signature", "star", "--limit", "3",
    ]);
    let stdout = text(&out.stdout);
    assert_eq!(stdout.lines().count(), 4);
    assert_eq!(stdout.lines().last(), Some("found 3 models"));

    let out = run(&[
        "search", "--orders", "1..2", "--signature", "proj-left", "--require",
        "solution(proj-left)",
    ]);
    assert_eq!(code(&out), 0);
    let all = run(&["search", "--orders", "1..2", "--signature", "proj-left"]);
    assert_eq!(text(&out.stdout), text(&all.stdout));

    let out = run(&[
        "search", "--orders", "1..2", "--signature", "star", "--require", "bogus",
    ]);
    assert_eq!(code(&out), 2);
    assert!(text(&out.stderr).contains("unknown predicate"));

    let out = run(&["search", "--orders", "1..2", "--signature", "star", "--workers", "0"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn the_order_bound_env_variable_governs_search_and_verify() {
    let out = run(&["search", "--orders", "1..5", "--signature", "star"]);
    assert_eq!(code(&out), 2);
    assert!(text(&out.stderr).contains("STARBRACE_MAX_ORDER"));

    let out = bin()
        .args(["search", "--orders", "1..3", "--signature", "star"])
        .env("STARBRACE_MAX_ORDER", "2")
        .output()
        .unwrap();
    assert_eq!(code(&out), 2);

    let out = bin()
        .args(["search", "--orders", "1..2", "--signature", "star"])
        .env("STARBRACE_MAX_ORDER", "6")
        .output()
        .unwrap();
    assert_eq!(code(&out), 0);

    for bad in ["0", "7", "banana", ""] {
        let out = bin()
            .args(["search", "--orders", "1..2", "--signature", "star"])
            .env("STARBRACE_MAX_ORDER", bad)
            .output()
            .unwrap();
        assert_eq!(code(&out), 2, "bound {bad:?} should be rejected");
    }

    let out = bin()
        .args(["verify-prop", "L2.5", "--max-order", "4"])
        .env("STARBRACE_MAX_ORDER", "3")
        .output()
        .unwrap();
    assert_eq!(code(&out), 2);
}

#[test]
fn verify_prop_replays_registered_claims() {
    let out = run(&["verify-prop", "L2.5", "--max-order", "3"]);
    assert_eq!(code(&out), 0, "stderr: {}", text(&out.stderr));
    let stdout = text(&out.stdout);
    assert!(stdout.starts_with("claim L2.5: pass ("), "{stdout}");

    let out = run(&["verify-prop", "R4.10", "--max-order", "2", "--catalog", "rect22"]);
    assert_eq!(code(&out), 0);
    assert!(text(&out.stdout).contains("note: "));

    let out = run(&["verify-prop", "P4.1", "--max-order", "2", "--catalog", "none"]);
    assert_eq!(code(&out), 0);

    let out = run(&["verify-prop", "X9.9"]);
    assert_eq!(code(&out), 2);
    assert!(text(&out.stderr).contains("unknown claim"));

    let out = run(&["verify-prop", "P4.1", "--max-order", "2", "--catalog", "nope"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn help_and_bad_flags_use_the_documented_codes() {
    let out = run(&["--help"]);
    assert_eq!(code(&out), 0);
    assert!(text(&out.stdout).contains("starbrace"));

    let out = run(&["classify"]);
    assert_eq!(code(&out), 2);

    let out = run(&["frobnicate"]);
    assert_eq!(code(&out), 2);
}
