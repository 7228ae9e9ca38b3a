use pathcheck::semantics::eval_seq;
use pathcheck::trace::{load_trace, TraceFormat};
use pathcheck::Formula;
use pathcheck_wasm::demo;
use serde_json::Value;

const TRACE: &str = "req,grant,busy,err\n1,0,1,0\n1,0,1,0\n0,1,0,0\n0,0,0,0\n1,0,1,0\n0,1,0,0\n0,0,0,0\n0,0,0,1\n";

fn oracle(formula: &str) -> String {
    let rho = load_trace(TRACE.as_bytes(), TraceFormat::Csv).unwrap();
    eval_seq(&rho, &Formula::parse(formula).unwrap()).unwrap().to_bit_string()
}

fn balanced(svg: &str) {
    assert!(svg.starts_with("<svg") && svg.ends_with("</svg>"));
    assert_eq!(svg.matches("<g ").count(), svg.matches("</g>").count());
    assert_eq!(svg.matches("<text").count(), svg.matches("</text>").count());
}

#[test]
fn check_agrees_with_oracle() {
    for f in ["(!req | F[3] grant) U err", "G !err", "busy R[2] !grant", "O (grant & Y busy) S err"] {
        let r = demo::check_formula(f, TRACE, "csv").unwrap();
        assert_eq!(r.sequence, oracle(f), "{f}");
        assert_eq!(r.naive_sequence, r.sequence);
        assert_eq!(r.satisfied, r.sequence.starts_with('1'));
        assert!(Formula::parse(&r.pnf).unwrap().is_pnf());
    }
    let jsonl = "[\"a\"]\n[]\n[\"a\",\"b\"]\n";
    let r = demo::check_formula("F b", jsonl, "jsonl").unwrap();
    assert_eq!(r.sequence, "111");
}

#[test]
fn check_reports_errors() {
    assert!(demo::check_formula("(", TRACE, "csv").unwrap_err().contains("column"));
    assert!(demo::check_formula("a", "a\n", "csv").unwrap_err().contains("empty trace"));
    assert!(demo::check_formula("zz", TRACE, "csv").is_err());
    assert!(demo::check_formula("req", TRACE, "xml").is_err());
}

#[test]
fn circuit_drawings() {
    let svg = demo::circuit_svg("U[3]", "right", "0,1,0,0,0,0,0,1", false).unwrap();
    balanced(&svg);
    assert_eq!(svg.matches("<circle").count(), 16);
    assert_eq!(svg.matches("<line").count(), 8);
    assert_eq!(svg.matches(" output\"").count(), 8);
    assert!(svg.contains(">o7<"));

    let grid = demo::circuit_svg("U[3]", "left", "0,1,0,1,1,1,0,1", false).unwrap();
    balanced(&grid);
    assert_eq!(grid.matches("<circle").count(), 32);

    let dot = demo::circuit_dot("U[3]", "right", "0,1,0,0,0,0,0,1", true).unwrap();
    assert!(dot.starts_with("digraph"));
    assert!(dot.contains("label=\"ID\", xlabel=\"g8 o0\""));

    assert!(demo::circuit_svg("Q", "right", "0,1", false).is_err());
    assert!(demo::circuit_svg("U", "up", "0,1", false).is_err());
    assert!(demo::circuit_svg("U", "left", "", false).is_err());
}

#[test]
fn schedule_frames() {
    let f = "(req & (busy & grant)) & (err & req)";
    let s: Value = serde_json::from_str(&demo::contraction_schedule(f, TRACE, "csv").unwrap()).unwrap();
    assert_eq!(s["leaves"], 5);
    assert_eq!(s["stages"], 2);
    assert_eq!(s["bound"], 3);
    assert_eq!(s["sequence"], oracle(f).as_str());
    let frames = s["frames"].as_array().unwrap();
    let after: Vec<u64> = frames.iter().map(|f| f["leaves_after"].as_u64().unwrap()).collect();
    assert_eq!(after, [4, 2, 1, 1]);
    for frame in frames {
        let svg = frame["svg"].as_str().unwrap();
        balanced(svg);
        assert_eq!(svg.matches(" hot\"").count() as u64, frame["contracted"].as_u64().unwrap());
    }
    assert_eq!(frames.last().unwrap()["half"], "done");
    assert_eq!(frames.last().unwrap()["svg"].as_str().unwrap().matches("class=\"leaf").count(), 1);
}

#[test]
fn tree_labels_are_escaped() {
    let s: Value = serde_json::from_str(&demo::contraction_schedule("!req & grant", TRACE, "csv").unwrap()).unwrap();
    let first = s["frames"][0]["svg"].as_str().unwrap();
    balanced(first);
    assert!(first.contains(">&amp;</text>"));
    assert!(!first.contains(">&</text>"));
}
