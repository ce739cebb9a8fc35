//! End-to-end runs of the binary: subcommand behavior, file round
//! trips and the documented exit codes.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_bmwchart"))
}

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    bin()
        .args(args)
        .env("NO_COLOR", "1")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn parse_canonicalizes_words() {
    let out = run(&["parse", "--degree", "4", "e1   e3"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "e1 e3\n");

    let out = run(&[
        "parse",
        "--degree",
        "4",
        "--file",
        data("words.txt").to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "e1 e3\ng1 G2 e3\n1\ng1 g2 g3 G2\n");
}

#[test]
fn parse_rejects_out_of_range_letters_with_exit_2() {
    let out = run(&["parse", "--degree", "2", "e3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_1() {
    let out = run(&["rewrite", "g1", "--degree", "2"]);
    assert_eq!(out.status.code(), Some(1)); // missing --rule

    let out = bin().arg("no-such-command").output().unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn validate_reports_and_exits() {
    let out = run(&[
        "validate",
        data("braid-triple.movie.json").to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("\"valid\": true"));

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.movie.json");
    std::fs::write(
        &bad,
        r#"{"degree":3,"start":"g1 g2","events":[{"position":0,"kind":"crossing","left":"g1","right":"g2"}]}"#,
    )
    .unwrap();
    let out = run(&["validate", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).contains("\"clause\": \"b\""));
}

#[test]
fn rewrite_applies_and_lists() {
    let out = run(&[
        "rewrite", "e1 e1", "--degree", "2", "--rule", "R12", "--i", "1", "--pos", "0",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "e1\n");

    let out = run(&[
        "rewrite",
        "1",
        "--degree",
        "2",
        "--list",
        "--categories",
        "band",
    ]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "R1(i=1,eps=+1) fwd @0\nR1(i=1,eps=-1) fwd @0\nR2(i=1) fwd @0\n"
    );
}

#[test]
fn expand_prints_a_verified_script() {
    let out = run(&[
        "expand", "D15", "--i", "1", "--j", "2", "--eps", "-1", "--degree", "3",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 7);
    assert!(String::from_utf8_lossy(&out.stderr).contains("verified"));
}

#[test]
fn conversion_round_trip_via_files() {
    let dir = tempfile::tempdir().unwrap();
    let chart = dir.path().join("chart.json");
    let back = dir.path().join("back.json");
    let movie = data("braid-triple.movie.json");

    let out = run(&[
        "chart-from-movie",
        movie.to_str().unwrap(),
        "--out",
        chart.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let out = run(&[
        "movie-from-chart",
        chart.to_str().unwrap(),
        "--out",
        back.to_str().unwrap(),
    ]);
    assert!(out.status.success());

    let a: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&movie).unwrap()).unwrap();
    let b: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&back).unwrap()).unwrap();
    assert_eq!(a, b, "slice-exact file round trip");
}

#[test]
fn invariants_line() {
    let out = run(&["invariants", data("hook-loop.movie.json").to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "chi=2 boundary=2 trivial=true intervals=2 circles=0\n"
    );
}

#[test]
fn search_finds_the_one_move_witness() {
    let out = run(&[
        "search",
        data("hook-loop.movie.json").to_str().unwrap(),
        data("hook-loop-replaced.movie.json").to_str().unwrap(),
        "--depth",
        "1",
    ]);
    assert!(out.status.success());
    let witness = stdout(&out);
    assert_eq!(witness.lines().count(), 1);
    assert!(witness.contains("tangle-c"));
}

#[test]
fn hopeless_search_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    std::fs::write(&a, r#"{"degree":2,"start":"g1","events":[]}"#).unwrap();
    std::fs::write(&b, r#"{"degree":2,"start":"e1","events":[]}"#).unwrap();
    // different boundary words can never be related by chart moves
    let out = run(&[
        "search",
        a.to_str().unwrap(),
        b.to_str().unwrap(),
        "--depth",
        "1",
        "--budget",
        "50",
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn moves_list_replays_as_a_log() {
    let dir = tempfile::tempdir().unwrap();
    let movie = data("hook-loop.movie.json");
    let out = run(&["moves", movie.to_str().unwrap()]);
    assert!(out.status.success());
    let line = stdout(&out)
        .lines()
        .find(|l| l.contains("tangle-c") && l.contains("[0,2]"))
        .expect("loop swap listed")
        .to_string();
    let log = dir.path().join("log.jsonl");
    std::fs::write(&log, format!("{line}\n")).unwrap();

    let rewritten = dir.path().join("out.json");
    let out = run(&[
        "moves",
        movie.to_str().unwrap(),
        "--apply-log",
        log.to_str().unwrap(),
        "--out",
        rewritten.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let expect = std::fs::read_to_string(data("hook-loop-replaced.movie.json")).unwrap();
    let got = std::fs::read_to_string(&rewritten).unwrap();
    let (a, b): (serde_json::Value, serde_json::Value) = (
        serde_json::from_str(&expect).unwrap(),
        serde_json::from_str(&got).unwrap(),
    );
    assert_eq!(a, b);
}

#[test]
fn coordinate_free_chart_loads_and_levels() {
    let out = run(&["movie-from-chart", data("saddle.chart.json").to_str().unwrap()]);
    assert!(out.status.success());
    let movie: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(movie["start"], "1");
    assert_eq!(movie["events"].as_array().unwrap().len(), 3);

    let dir = tempfile::tempdir().unwrap();
    let svg = dir.path().join("layout.svg");
    let out = run(&["render", data("saddle.chart.json").to_str().unwrap(), "--out", svg.to_str().unwrap()]);
    assert!(out.status.success(), "auto-layout render");
    let text = std::fs::read_to_string(&svg).unwrap();
    assert_eq!(text.matches("vertex-xmark").count(), 2); // hook dot and saddle
    assert_eq!(text.matches("vertex-black").count(), 1);
}

#[test]
fn render_is_deterministic_and_counts_glyphs() {
    let dir = tempfile::tempdir().unwrap();
    let one = dir.path().join("one.svg");
    let two = dir.path().join("two.svg");
    let movie = data("hook-loop-replaced.movie.json");
    for out_file in [&one, &two] {
        let out = run(&[
            "render",
            movie.to_str().unwrap(),
            "--out",
            out_file.to_str().unwrap(),
        ]);
        assert!(out.status.success());
    }
    let (a, b) = (std::fs::read(&one).unwrap(), std::fs::read(&two).unwrap());
    assert_eq!(a, b, "identical input and spec must give identical bytes");
    let text = String::from_utf8(a).unwrap();
    assert_eq!(text.matches("vertex-xmark").count(), 4); // two dots, two disks

    let strip = dir.path().join("strip.svg");
    let out = run(&[
        "render",
        movie.to_str().unwrap(),
        "--out",
        strip.to_str().unwrap(),
        "--target",
        "strip",
    ]);
    assert!(out.status.success());
    assert!(std::fs::read_to_string(&strip)
        .unwrap()
        .contains("label-slice"));
}

#[test]
fn no_color_disables_ansi_diagnostics() {
    let out = bin()
        .args(["parse", "--degree", "2", "e9"])
        .env("NO_COLOR", "1")
        .output()
        .unwrap();
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(
        err.starts_with("error:"),
        "plain diagnostics expected, got {err}"
    );
    assert!(!err.contains('\u{1b}'));
}
