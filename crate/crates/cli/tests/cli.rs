use std::path::PathBuf;
use std::process::{Command, Output};

use pathcheck::contraction::ceil_log2;
use pathcheck::semantics::eval_seq;
use pathcheck::trace::{load_trace, TraceFormat};
use pathcheck::Formula;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn pathcheck(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pathcheck"))
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

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn fixture_formulas() -> Vec<String> {
    std::fs::read_to_string(fixture("formulas.txt"))
        .unwrap()
        .lines()
        .map(str::to_owned)
        .collect()
}

fn line_value<'a>(out: &'a str, key: &str) -> &'a str {
    out.lines()
        .find_map(|l| l.strip_prefix(key))
        .unwrap_or_else(|| panic!("no `{key}` line in\n{out}"))
        .trim()
}

#[test]
fn check_satisfied_until() {
    let trace = fixture("until.csv");
    let rho = load_trace(&std::fs::read(&trace).unwrap(), TraceFormat::Csv).unwrap();
    assert!(eval_seq(&rho, &Formula::parse("a U b").unwrap()).unwrap().get(0));
    let o = pathcheck(&["check", "--formula", "a U b", "--trace", trace.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let out = stdout(&o);
    assert_eq!(out.lines().next(), Some("SATISFIED"));
    assert_eq!(line_value(&out, "engine:"), "circuit");
    line_value(&out, "stages:");
    line_value(&out, "wall time:");
}

#[test]
fn fixture_verdicts_match_oracle_for_both_engines_and_formats() {
    let csv = fixture("request_grant.csv");
    let jsonl = fixture("request_grant.jsonl");
    let rho = load_trace(&std::fs::read(&csv).unwrap(), TraceFormat::Csv).unwrap();
    for text in fixture_formulas() {
        let want = eval_seq(&rho, &Formula::parse(&text).unwrap()).unwrap();
        let mut seen = Vec::new();
        for (trace, format) in [(&csv, "csv"), (&jsonl, "jsonl")] {
            for engine in ["circuit", "naive"] {
                let o = pathcheck(&[
                    "check",
                    "--formula",
                    &text,
                    "--trace",
                    trace.to_str().unwrap(),
                    "--format",
                    format,
                    "--engine",
                    engine,
                    "--workers",
                    "3",
                    "--emit-sequence",
                ]);
                let out = stdout(&o);
                assert_eq!(code(&o), if want.get(0) { 0 } else { 1 }, "{text} {engine} {format}: {out}");
                assert_eq!(line_value(&out, "sequence:"), want.to_bit_string(), "{text} {engine} {format}");
                seen.push(out.lines().next().unwrap().to_owned());
            }
        }
        assert!(seen.windows(2).all(|w| w[0] == w[1]), "{text}: {seen:?}");
    }
}

#[test]
fn formula_file() {
    let o = pathcheck(&[
        "check",
        "--formula-file",
        fixture("response.ltl").to_str().unwrap(),
        "--trace",
        fixture("request_grant.csv").to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
}

#[test]
fn parse_error_reports_column() {
    let o = pathcheck(&["check", "--formula", "(", "--trace", fixture("until.csv").to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    assert!(stdout(&o).is_empty());
    let err = stderr(&o);
    assert!(err.contains("column 2"), "{err}");
    assert!(err.contains("   ^"), "{err}");
}

#[test]
fn input_errors_exit_2() {
    let until = fixture("until.csv");
    let until = until.to_str().unwrap();
    let empty = fixture("empty.csv");
    let empty = empty.to_str().unwrap();
    let cases: Vec<Vec<&str>> = vec![
        vec!["check", "--formula", "a", "--trace", "/nonexistent/trace.csv"],
        vec!["check", "--formula", "a", "--trace", empty],
        vec!["check", "--formula", "zzz", "--trace", until],
        vec!["check", "--formula", "a", "--trace", until, "--workers", "0"],
        vec!["check", "--formula", "a", "--trace", until, "--engine", "quantum"],
        vec!["check", "--trace", until],
        vec!["check", "--formula", "a", "--formula-file", "f.ltl", "--trace", until],
        vec!["check", "--formula", "a", "--trace", until, "--engine", "naive", "--emit-dot", "x.dot"],
        vec!["frobnicate"],
    ];
    for args in cases {
        let o = pathcheck(&args);
        assert_eq!(code(&o), 2, "{args:?}: {}", stdout(&o));
        assert!(!stderr(&o).is_empty(), "{args:?}");
    }
    let o = pathcheck(&["check", "--formula", "a", "--trace", empty]);
    assert!(stderr(&o).contains("empty trace"));
}

/// Output gate labels in interface order, and the edges leaving outputs.
fn dot_outputs(dot: &str) -> (Vec<String>, Vec<(usize, usize)>) {
    let mut outputs = Vec::new();
    let mut edges = Vec::new();
    for line in dot.lines().map(str::trim) {
        if let Some((from, to)) = line.strip_suffix(';').and_then(|l| l.split_once(" -> ")) {
            edges.push((from[1..].parse().unwrap(), to[1..].parse().unwrap()));
        } else if line.contains("xlabel=") && line.contains(" o") {
            let label = line.split("label=\"").nth(1).unwrap().split('"').next().unwrap();
            outputs.push(label.to_owned());
        }
    }
    (outputs, edges)
}

#[test]
fn dot_collapsed_bounded_until() {
    let o = pathcheck(&["dot", "--op", "U[3]", "--side", "right", "--seq", "0,1,0,0,0,0,0,1"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let dot = stdout(&o);
    assert!(dot.starts_with("digraph"));
    let (outputs, edges) = dot_outputs(&dot);
    assert_eq!(outputs, ["AND", "1", "0", "0", "AND", "AND", "AND", "1"]);
    let want: Vec<(usize, usize)> = [0, 4, 5, 6].into_iter().flat_map(|i| [(8 + i, i), (8 + i, 9 + i)]).collect();
    assert_eq!(edges, want);
    assert!(dot.contains("subgraph inputs { rank=same; g0; g1; g2; g3; g4; g5; g6; g7; }"));
}

#[test]
fn dot_bounded_until_grid() {
    let o = pathcheck(&["dot", "--op", "U[3]", "--side", "left", "--seq", "0,1,0,1,1,1,0,1"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let dot = stdout(&o);
    let gates = dot.lines().filter(|l| l.contains("xlabel=")).count();
    assert_eq!(gates, 32);
    // g(i, j) = j * 8 + i; rows 0..3 are computed, row 3 holds the inputs
    let s = [0, 1, 0, 1, 1, 1, 0, 1];
    for j in 0..3 {
        for (i, &si) in s.iter().enumerate() {
            let id = j * 8 + i;
            let line = dot.lines().find(|l| l.trim_start().starts_with(&format!("g{id} ["))).unwrap();
            let or = si == 1 && i < 7;
            assert!(line.contains(if or { "label=\"OR\"" } else { "label=\"ID\"" }), "g({i},{j}): {line}");
            let up = (j + 1) * 8 + i;
            assert!(dot.contains(&format!("g{id} -> g{up};")), "g({i},{j}) lacks its upper edge");
            if or {
                assert!(dot.contains(&format!("g{id} -> g{};", up + 1)));
            }
        }
    }
}

#[test]
fn dot_evaluated_and_output_file() {
    let out = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("collapsed.dot");
    let o = pathcheck(&[
        "dot",
        "--op",
        "U[3]",
        "--seq",
        "0,1,0,0,0,0,0,1",
        "--evaluated",
        "-o",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    assert!(stdout(&o).is_empty());
    let (outputs, _) = dot_outputs(&std::fs::read_to_string(&out).unwrap());
    assert_eq!(outputs, ["ID", "1", "0", "0", "AND", "AND", "ID", "1"]);
}

#[test]
fn dot_usage_errors() {
    for args in [
        vec!["dot", "--op", "U[3]", "--seq", "0,1,0", "--n", "4"],
        vec!["dot", "--op", "U[3]"],
        vec!["dot", "--op", "X[2]", "--n", "3"],
        vec!["dot", "--op", "Q", "--seq", "0,1"],
        vec!["dot", "--op", "U", "--seq", "0,2"],
        vec!["dot"],
    ] {
        let o = pathcheck(&args);
        assert_eq!(code(&o), 2, "{args:?}");
    }
    let o = pathcheck(&["dot", "--op", "wY", "--n", "3"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
}

#[test]
fn dot_contraction_stages() {
    let trace = fixture("request_grant.csv");
    let o = pathcheck(&[
        "dot",
        "--formula",
        "(req & (busy & grant)) & (err & req)",
        "--trace",
        trace.to_str().unwrap(),
        "--workers",
        "2",
    ]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let dot = stdout(&o);
    let names: Vec<&str> = dot
        .lines()
        .filter_map(|l| l.strip_prefix("digraph \""))
        .map(|l| l.trim_end_matches("\" {"))
        .collect();
    // the second stage's right half has nothing left to contract
    assert_eq!(names, ["initial", "stage 1 left", "stage 1 right", "stage 2 left"]);
    let leaves = |graph: &str| graph.matches("shape=box").count();
    let counts: Vec<usize> = dot.split("digraph").skip(1).map(leaves).collect();
    assert_eq!(counts, [5, 4, 2, 1]);
}

#[test]
fn check_emits_stage_dot() {
    let out = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("stages.dot");
    let _ = std::fs::remove_file(&out);
    let o = pathcheck(&[
        "check",
        "--formula",
        "(!req | F[3] grant) U err",
        "--trace",
        fixture("request_grant.csv").to_str().unwrap(),
        "--emit-dot",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let stages: usize = line_value(&stdout(&o), "stages:").parse().unwrap();
    let dot = std::fs::read_to_string(&out).unwrap();
    let graphs = dot.matches("digraph").count();
    assert!(graphs > stages && graphs <= 2 * stages + 1, "{graphs} graphs for {stages} stages");
    let last = dot.rsplit("digraph").next().unwrap();
    assert_eq!(last.matches("shape=box").count(), 1);
}

#[test]
fn selftest_passes_and_is_reproducible() {
    let args = ["selftest", "--seed", "7", "--cases", "300", "--max-len", "20", "--workers", "2"];
    let a = pathcheck(&args);
    let b = pathcheck(&args);
    assert_eq!(code(&a), 0, "{}", stdout(&a));
    assert_eq!(a.stdout, b.stdout);
    let out = stdout(&a);
    assert!(out.starts_with("seed 7 cases 300 "), "{out}");
    assert!(out.contains("PASS"));
}

#[test]
fn selftest_default_campaign() {
    let o = pathcheck(&["selftest"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(stdout(&o).starts_with("seed 0 cases 10000 "));
}

#[test]
fn selftest_reports_injected_fault() {
    let o = pathcheck(&["selftest", "--cases", "100", "--inject-fault", "swap-known-side"]);
    assert_eq!(code(&o), 1);
    let out = stdout(&o);
    assert!(out.contains("FAIL"), "{out}");
    let tail = out.split("minimized counterexample\n").nth(1).expect("counterexample printed");
    let mut lines = tail.lines();
    let text = lines.next().unwrap().strip_prefix("formula: ").unwrap();
    let f = Formula::parse(text).unwrap();
    assert_eq!(lines.next(), Some("trace:"));
    let csv: String = lines.map(|l| format!("{l}\n")).collect();
    let rho = load_trace(csv.as_bytes(), TraceFormat::Csv).unwrap();
    eval_seq(&rho, &f).unwrap();
}

#[test]
fn bench_table() {
    let o = pathcheck(&[
        "bench",
        "--sizes",
        "3,15,40",
        "--lengths",
        "8,40",
        "--workers",
        "1,8",
        "--seed",
        "3",
    ]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let mut reader = csv::Reader::from_reader(o.stdout.as_slice());
    let header: Vec<String> = reader.headers().unwrap().iter().map(str::to_owned).collect();
    assert_eq!(
        header,
        ["formula_size", "path_length", "leaves", "workers", "engine", "stages", "satisfied", "wall_us"]
    );
    let rows: Vec<csv::StringRecord> = reader.records().map(Result::unwrap).collect();
    // 3 sizes x 2 lengths x (2 circuit + 1 naive)
    assert_eq!(rows.len(), 18);
    for group in rows.chunks(3) {
        let verdicts: Vec<&str> = group.iter().map(|r| &r[6]).collect();
        assert!(verdicts.iter().all(|v| *v == verdicts[0]), "{group:?}");
        for r in group.iter().filter(|r| &r[4] == "circuit") {
            let leaves: usize = r[2].parse().unwrap();
            let stages: usize = r[5].parse().unwrap();
            assert!(stages <= ceil_log2(leaves), "{r:?}");
            r[7].parse::<u128>().unwrap();
        }
        assert_eq!(&group[0][3], "1");
        assert_eq!(&group[1][3], "8");
        assert_eq!(&group[2][4], "naive");
    }
}
