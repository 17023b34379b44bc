mod common;

use std::io::Write;
use std::path::Path;
use std::process::{Command, Output};

use common::{QueryGenerator, GOLDEN_QUERIES};
use serde_json::Value;

fn qsq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qsq"))
        .args(args)
        .output()
        .unwrap()
}

fn write_corpus(dir: &Path, name: &str, lines: &[String]) -> String {
    let path = dir.join(name);
    let mut f = std::fs::File::create(&path).unwrap();
    for l in lines {
        writeln!(f, "{l}").unwrap();
    }
    path.to_str().unwrap().to_string()
}

fn json_lines(out: &Output) -> Vec<Value> {
    String::from_utf8(out.stdout.clone())
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

#[test]
fn parse_prints_tuple_and_diagnostics() {
    let out = qsq(&["parse", "When did I talk to Sally?"]);
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["tuple"]["tense"], "past");
    assert_eq!(v["tuple"]["times"][0]["source"], "inferred_last_occurrence");
    assert_eq!(v["diagnostics"]["overall_ok"], true);
    assert_eq!(v["diagnostics"]["time_defaulted"], true);
}

#[test]
fn parse_output_is_deterministic() {
    for q in GOLDEN_QUERIES {
        let a = qsq(&["parse", q]);
        let b = qsq(&["parse", q]);
        assert_eq!(a.stdout, b.stdout, "{q}");
    }
}

#[test]
fn parse_respects_mode() {
    let q = "Am I more active this month or last month?";
    let ivt: Value = serde_json::from_slice(&qsq(&["parse", q]).stdout).unwrap();
    let bl: Value = serde_json::from_slice(&qsq(&["--mode", "bl", "parse", q]).stdout).unwrap();
    assert_eq!(ivt["tuple"]["is_comparison"], true);
    assert_eq!(bl["tuple"]["is_comparison"], false);
    assert_eq!(bl["tuple"]["mode"], "bl");
    assert!(!qsq(&["--mode", "xyz", "parse", q]).status.success());
}

#[test]
fn parse_text_format() {
    let out = qsq(&["parse", "--format", "text", "how much yesterday"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("question word  how-much"));
    assert!(text.contains("[ red ] s"));
    assert!(text.contains("overall        incomplete"));
}

#[test]
fn empty_query_exits_2() {
    for q in ["", "   ", "the of and", "?!"] {
        let out = qsq(&["parse", q]);
        assert_eq!(out.status.code(), Some(2), "{q:?}");
        assert!(out.stdout.is_empty());
        assert!(String::from_utf8_lossy(&out.stderr).contains("no content words"));
    }
}

#[test]
fn lexicon_errors_exit_1() {
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("nope.json");
    let out = qsq(&[
        "--lexicon",
        missing.to_str().unwrap(),
        "parse",
        "how much sleep",
    ]);
    assert_eq!(out.status.code(), Some(1));

    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{ \"version\": \"x\",\n  \"categories\": [ }").unwrap();
    let out = qsq(&[
        "--lexicon",
        bad.to_str().unwrap(),
        "parse",
        "how much sleep",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
}

#[test]
fn explicit_lexicon_file_is_used() {
    let dir = tempfile::tempdir().unwrap();
    let mut lex: Value = serde_json::from_str(qsq_core::Lexicon::bundled_json()).unwrap();
    lex["version"] = "custom/2".into();
    lex["categories"]["subject"]
        .as_array_mut()
        .unwrap()
        .push("yoga".into());
    let path = dir.path().join("lex.json");
    std::fs::write(&path, lex.to_string()).unwrap();
    let out = qsq(&[
        "--lexicon",
        path.to_str().unwrap(),
        "parse",
        "how often do I do yoga",
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["tuple"]["subjects"][0], "yoga");
}

#[test]
fn batch_golden_corpus() {
    let dir = tempfile::tempdir().unwrap();
    let mut lines: Vec<String> = GOLDEN_QUERIES.iter().map(|q| q.to_string()).collect();
    lines.insert(3, String::new());
    lines.push("the and of".into());
    let path = write_corpus(dir.path(), "golden.txt", &lines);
    let out = qsq(&["batch", &path]);
    assert!(out.status.success());
    let rows = json_lines(&out);
    assert_eq!(rows.len(), GOLDEN_QUERIES.len() + 2);
    assert_eq!(rows[0]["line"], 1);
    assert_eq!(rows[0]["tuple"]["question_word"], "how-often");
    // line numbers skip the blank line but keep file numbering
    assert_eq!(rows[3]["line"], 5);
    assert!(rows[8]["error"].is_string());
    let summary = &rows.last().unwrap()["summary"];
    assert_eq!(summary["count"], 9);
    assert_eq!(summary["parsed"], 8);
    assert_eq!(summary["empty"], 1);
    assert_eq!(summary["missing"]["question_word"], 3);
    assert_eq!(summary["missing"]["subject"], 0);
}

#[test]
fn batch_empty_and_unreadable() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_corpus(dir.path(), "empty.txt", &[]);
    let out = qsq(&["batch", &path]);
    assert!(out.status.success());
    let rows = json_lines(&out);
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0]["summary"]["count"], 0);

    let out = qsq(&["batch", dir.path().join("absent.txt").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn batch_synthetic_corpus_missing_question_word_rate() {
    const LINES: usize = 716;
    let mut gen = QueryGenerator::new(716);
    let mut commands = 0;
    let lines: Vec<String> = (0..LINES)
        .map(|_| {
            let (q, command) = gen.corpus_line();
            commands += usize::from(command);
            q.text()
        })
        .collect();
    let dir = tempfile::tempdir().unwrap();
    let path = write_corpus(dir.path(), "corpus.txt", &lines);
    let out = qsq(&["batch", &path]);
    assert!(out.status.success());
    let rows = json_lines(&out);
    let summary = &rows.last().unwrap()["summary"];
    assert_eq!(summary["count"], LINES);
    assert_eq!(summary["parsed"], LINES);
    let missing = summary["missing"]["question_word"].as_u64().unwrap() as usize;
    assert_eq!(missing, commands);
    assert!(
        missing * 10 <= LINES,
        "{missing} of {LINES} lack a question word"
    );
    assert_eq!(summary["missing"]["subject"], 0);
}

#[test]
fn bench_single_query() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_corpus(dir.path(), "one.txt", &["how much did I sleep".into()]);
    let out = qsq(&["bench", &path, "--reps", "1"]);
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["query_count"], 1);
    assert_eq!(v["repetitions"], 1);
    assert_eq!(v["latencies_us"].as_array().unwrap().len(), 1);
    assert_eq!(v["median_us"], v["max_us"]);
    assert!(v["lexicon_load_us"].as_f64().unwrap() > 0.0);
}

#[test]
fn bench_rejects_bad_input() {
    let dir = tempfile::tempdir().unwrap();
    let out = qsq(&["bench", dir.path().join("absent.txt").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let path = write_corpus(dir.path(), "blank.txt", &["".into(), "  ".into()]);
    assert_eq!(qsq(&["bench", &path]).status.code(), Some(1));
    let path = write_corpus(dir.path(), "ok.txt", &["what did I eat".into()]);
    assert!(!qsq(&["bench", &path, "--reps", "0"]).status.success());
}
