//! Browser bindings. Each exported function wraps a plain Rust function of
//! the same name in [`demo`] that reports errors as strings, so the logic
//! can be tested off the browser.

use wasm_bindgen::prelude::*;

pub mod svg;

/// Result of checking one formula against one trace with both engines.
#[wasm_bindgen(getter_with_clone)]
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub satisfied: bool,
    /// Per-position values from the circuit engine, as a 0/1 string.
    pub sequence: String,
    /// The same from the naive evaluator.
    pub naive_sequence: String,
    pub pnf: String,
    pub leaves: usize,
    pub stages: usize,
    pub gates_built: usize,
}

pub mod demo {
    use std::collections::HashSet;

    use pathcheck::builder::{Operator, Side};
    use pathcheck::contraction::{check, ceil_log2, Engine};
    use pathcheck::trace::{load_trace, TraceFormat};
    use pathcheck::{BoolSeq, ContractionTree, Formula, Path, TransducerCircuit};
    use serde_json::json;

    use super::CheckReport;
    use crate::svg;

    fn inputs(formula: &str, trace: &str, format: &str) -> Result<(Formula, Path), String> {
        let f = Formula::parse(formula).map_err(|e| e.to_string())?;
        let format: TraceFormat = format.parse()?;
        let rho = load_trace(trace.as_bytes(), format).map_err(|e| e.to_string())?;
        Ok((f, rho))
    }

    pub fn check_formula(formula: &str, trace: &str, format: &str) -> Result<CheckReport, String> {
        let (f, rho) = inputs(formula, trace, format)?;
        let circuit = check(&f, &rho, Engine::Circuit, 1).map_err(|e| e.to_string())?;
        let naive = check(&f, &rho, Engine::Naive, 1).map_err(|e| e.to_string())?;
        Ok(CheckReport {
            satisfied: circuit.satisfied,
            sequence: circuit.sequence.to_bit_string(),
            naive_sequence: naive.sequence.to_bit_string(),
            pnf: f.to_pnf().prune_bounds(rho.len()).to_string(),
            leaves: circuit.leaves,
            stages: circuit.stages.len(),
            gates_built: circuit.gates_built,
        })
    }

    fn builder_circuit(op: &str, side: &str, seq: &str, evaluated: bool) -> Result<TransducerCircuit, String> {
        let op: Operator = op.parse()?;
        let side: Side = side.parse()?;
        let s: BoolSeq = seq.parse().map_err(|e: pathcheck::trace::TraceError| e.to_string())?;
        let built = if evaluated {
            op.build(s.len(), side, Some(&s))
        } else {
            op.layout(s.len(), side, Some(&s))
        };
        built.map_err(|e| e.to_string())
    }

    pub fn circuit_svg(op: &str, side: &str, seq: &str, evaluated: bool) -> Result<String, String> {
        builder_circuit(op, side, seq, evaluated).map(|t| svg::circuit(&t))
    }

    pub fn circuit_dot(op: &str, side: &str, seq: &str, evaluated: bool) -> Result<String, String> {
        builder_circuit(op, side, seq, evaluated).map(|t| t.to_dot(&format!("{op} {side}")))
    }

    /// JSON description of the contraction schedule: one frame for the tree
    /// before each half-stage, with the leaves about to be contracted
    /// highlighted, and a final frame for the contracted tree.
    pub fn contraction_schedule(formula: &str, trace: &str, format: &str) -> Result<String, String> {
        let (f, rho) = inputs(formula, trace, format)?;
        let pnf = f.to_pnf().prune_bounds(rho.len());
        let tree = ContractionTree::new(&pnf, &rho).map_err(|e| e.to_string())?;
        let leaves = tree.leaves().len();
        let mut snapshots = vec![tree.clone()];
        let (_, run) = tree.run(1, |t| snapshots.push(t.clone())).map_err(|e| e.to_string())?;
        let mut frames = Vec::new();
        let mut steps = 0;
        for (k, stage) in run.stages.iter().enumerate() {
            for (half, contracted, after) in [
                ("left", &stage.left, stage.leaves_after_left),
                ("right", &stage.right, stage.leaves_after),
            ] {
                if contracted.is_empty() {
                    continue;
                }
                let hot: HashSet<usize> = contracted.iter().copied().collect();
                frames.push(json!({
                    "stage": k + 1,
                    "half": half,
                    "contracted": contracted.len(),
                    "leaves_after": after,
                    "svg": svg::tree(&snapshots[steps], &hot),
                }));
                steps += contracted.len();
            }
        }
        frames.push(json!({
            "stage": run.stages.len(),
            "half": "done",
            "contracted": 0,
            "leaves_after": 1,
            "svg": svg::tree(&snapshots[steps], &HashSet::new()),
        }));
        Ok(json!({
            "pnf": pnf.to_string(),
            "leaves": leaves,
            "stages": run.stages.len(),
            "bound": ceil_log2(leaves),
            "sequence": run.sequence.to_bit_string(),
            "frames": frames,
        })
        .to_string())
    }
}

#[wasm_bindgen]
pub fn check_formula(formula: &str, trace: &str, format: &str) -> Result<CheckReport, JsError> {
    demo::check_formula(formula, trace, format).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn circuit_svg(op: &str, side: &str, seq: &str, evaluated: bool) -> Result<String, JsError> {
    demo::circuit_svg(op, side, seq, evaluated).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn circuit_dot(op: &str, side: &str, seq: &str, evaluated: bool) -> Result<String, JsError> {
    demo::circuit_dot(op, side, seq, evaluated).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn contraction_schedule(formula: &str, trace: &str, format: &str) -> Result<String, JsError> {
    demo::contraction_schedule(formula, trace, format).map_err(|e| JsError::new(&e))
}
