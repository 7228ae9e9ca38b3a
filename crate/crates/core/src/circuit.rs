//! Monotone Boolean circuits and transducer circuits.
//!
//! A [`Circuit`] is an arena of gates addressed by dense [`GateId`]s. A
//! [`TransducerCircuit`] adds an ordered input interface (exactly its
//! variable gates) and an ordered output interface, and so denotes a
//! function from `|I|` to `|O|` Boolean values.
//!
//! Evaluation propagates constants until every constant gate is a sink.
//! Gate ids never change under evaluation; only labels do.

use std::fmt::Write as _;

use thiserror::Error;

use crate::trace::BoolSeq;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GateId(pub usize);

impl GateId {
    pub fn index(self) -> usize {
        self.0
    }

    fn offset(self, by: usize) -> GateId {
        GateId(self.0 + by)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Gate {
    Const(bool),
    Var,
    And(GateId, GateId),
    Or(GateId, GateId),
    Id(GateId),
}

/// Gate label without operands, as shown in DOT output.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GateKind {
    Zero,
    One,
    Var,
    And,
    Or,
    Id,
}

impl GateKind {
    pub fn label(self) -> &'static str {
        match self {
            GateKind::Zero => "0",
            GateKind::One => "1",
            GateKind::Var => "VAR",
            GateKind::And => "AND",
            GateKind::Or => "OR",
            GateKind::Id => "ID",
        }
    }
}

impl Gate {
    pub fn kind(&self) -> GateKind {
        match self {
            Gate::Const(false) => GateKind::Zero,
            Gate::Const(true) => GateKind::One,
            Gate::Var => GateKind::Var,
            Gate::And(..) => GateKind::And,
            Gate::Or(..) => GateKind::Or,
            Gate::Id(_) => GateKind::Id,
        }
    }

    /// Gates this gate directly depends on.
    pub fn deps(&self) -> impl Iterator<Item = GateId> {
        let (a, b) = match *self {
            Gate::And(l, r) | Gate::Or(l, r) => (Some(l), Some(r)),
            Gate::Id(s) => (Some(s), None),
            Gate::Const(_) | Gate::Var => (None, None),
        };
        a.into_iter().chain(b)
    }

    pub fn is_const(&self) -> bool {
        matches!(self, Gate::Const(_))
    }

    fn offset(self, by: usize) -> Gate {
        match self {
            Gate::And(l, r) => Gate::And(l.offset(by), r.offset(by)),
            Gate::Or(l, r) => Gate::Or(l.offset(by), r.offset(by)),
            Gate::Id(s) => Gate::Id(s.offset(by)),
            other => other,
        }
    }

    fn remap(self, map: &[usize]) -> Gate {
        let m = |g: GateId| GateId(map[g.0]);
        match self {
            Gate::And(l, r) => Gate::And(m(l), m(r)),
            Gate::Or(l, r) => Gate::Or(m(l), m(r)),
            Gate::Id(s) => Gate::Id(m(s)),
            other => other,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CircuitError {
    #[error("circuit contains a dependency cycle through gate {0}")]
    Cycle(usize),
    #[error("gate {gate} refers to missing gate {target}")]
    DanglingReference { gate: usize, target: usize },
    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("invalid interface: {0}")]
    Interface(String),
    #[error("output {0} did not evaluate to a constant")]
    NotConstant(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Circuit {
    gates: Vec<Gate>,
}

impl Circuit {
    pub fn new() -> Self {
        Circuit::default()
    }

    pub fn from_gates(gates: Vec<Gate>) -> Result<Self, CircuitError> {
        let c = Circuit { gates };
        c.check_references()?;
        Ok(c)
    }

    pub fn push(&mut self, gate: Gate) -> GateId {
        self.gates.push(gate);
        GateId(self.gates.len() - 1)
    }

    /// Relabels an existing gate. Used by constructions that need forward
    /// references.
    pub fn set(&mut self, id: GateId, gate: Gate) {
        self.gates[id.0] = gate;
    }

    pub fn gate(&self, id: GateId) -> Gate {
        self.gates[id.0]
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    pub fn var_gates(&self) -> impl Iterator<Item = GateId> + '_ {
        self.gates
            .iter()
            .enumerate()
            .filter(|(_, g)| matches!(g, Gate::Var))
            .map(|(i, _)| GateId(i))
    }

    fn check_references(&self) -> Result<(), CircuitError> {
        for (i, g) in self.gates.iter().enumerate() {
            for d in g.deps() {
                if d.0 >= self.gates.len() {
                    return Err(CircuitError::DanglingReference { gate: i, target: d.0 });
                }
            }
        }
        Ok(())
    }

    /// Gates ordered so that every gate comes after the gates it depends on.
    pub fn topological_order(&self) -> Result<Vec<GateId>, CircuitError> {
        const NEW: u8 = 0;
        const OPEN: u8 = 1;
        const DONE: u8 = 2;
        let mut state = vec![NEW; self.gates.len()];
        let mut order = Vec::with_capacity(self.gates.len());
        let mut stack: Vec<(usize, bool)> = Vec::new();
        for root in 0..self.gates.len() {
            if state[root] != NEW {
                continue;
            }
            stack.push((root, false));
            while let Some((g, expanded)) = stack.pop() {
                if expanded {
                    state[g] = DONE;
                    order.push(GateId(g));
                    continue;
                }
                match state[g] {
                    DONE => continue,
                    OPEN => return Err(CircuitError::Cycle(g)),
                    _ => {}
                }
                state[g] = OPEN;
                stack.push((g, true));
                for d in self.gates[g].deps() {
                    match state[d.0] {
                        NEW => stack.push((d.0, false)),
                        OPEN => return Err(CircuitError::Cycle(d.0)),
                        _ => {}
                    }
                }
            }
        }
        Ok(order)
    }

    /// Gates that no other gate depends on.
    pub fn sinks(&self) -> Vec<bool> {
        let mut sink = vec![true; self.gates.len()];
        for g in &self.gates {
            for d in g.deps() {
                sink[d.0] = false;
            }
        }
        sink
    }

    /// Every constant gate is a sink.
    pub fn is_evaluated(&self) -> bool {
        self.gates
            .iter()
            .all(|g| g.deps().all(|d| !self.gates[d.0].is_const()))
    }

    /// Constant propagation in one topological pass. Ids pointing at
    /// constants become constants, And/Or with a neutral constant operand
    /// become Ids of the other operand, and Id chains are shortened to a
    /// single hop.
    pub fn evaluate(&self) -> Result<Circuit, CircuitError> {
        let order = self.topological_order()?;
        let mut out = self.gates.clone();
        for g in order {
            let skip = |out: &[Gate], x: GateId| match out[x.0] {
                Gate::Id(t) => t,
                _ => x,
            };
            out[g.0] = match self.gates[g.0] {
                gate @ (Gate::Const(_) | Gate::Var) => gate,
                Gate::Id(s) => match out[s.0] {
                    Gate::Const(v) => Gate::Const(v),
                    Gate::Id(t) => Gate::Id(t),
                    _ => Gate::Id(s),
                },
                Gate::And(l, r) => match (out[l.0], out[r.0]) {
                    (Gate::Const(false), _) | (_, Gate::Const(false)) => Gate::Const(false),
                    (Gate::Const(true), Gate::Const(true)) => Gate::Const(true),
                    (Gate::Const(true), _) => Gate::Id(skip(&out, r)),
                    (_, Gate::Const(true)) => Gate::Id(skip(&out, l)),
                    _ => Gate::And(l, r),
                },
                Gate::Or(l, r) => match (out[l.0], out[r.0]) {
                    (Gate::Const(true), _) | (_, Gate::Const(true)) => Gate::Const(true),
                    (Gate::Const(false), Gate::Const(false)) => Gate::Const(false),
                    (Gate::Const(false), _) => Gate::Id(skip(&out, r)),
                    (_, Gate::Const(false)) => Gate::Id(skip(&out, l)),
                    _ => Gate::Or(l, r),
                },
            };
        }
        Ok(Circuit { gates: out })
    }

    /// Evaluation by two substitutions: gates that are 0 with every
    /// variable set to 1 are constant 0, gates that are 1 with every
    /// variable set to 0 are constant 1, and the rest keep their label,
    /// with dependencies on constants turned into Ids.
    pub fn evaluate_by_substitution(&self) -> Result<Circuit, CircuitError> {
        let order = self.topological_order()?;
        let high = self.simulate_with(&order, |_| true);
        let low = self.simulate_with(&order, |_| false);
        let is_const = |g: GateId| !high[g.0] || low[g.0];
        let gates = (0..self.gates.len())
            .map(|i| {
                if !high[i] {
                    return Gate::Const(false);
                }
                if low[i] {
                    return Gate::Const(true);
                }
                match self.gates[i] {
                    Gate::And(l, r) | Gate::Or(l, r) if is_const(l) => Gate::Id(r),
                    Gate::And(l, r) | Gate::Or(l, r) if is_const(r) => Gate::Id(l),
                    other => other,
                }
            })
            .collect();
        Ok(Circuit { gates })
    }

    fn simulate_with(&self, order: &[GateId], var: impl Fn(GateId) -> bool) -> Vec<bool> {
        let mut value = vec![false; self.gates.len()];
        for &g in order {
            value[g.0] = match self.gates[g.0] {
                Gate::Const(v) => v,
                Gate::Var => var(g),
                Gate::And(l, r) => value[l.0] && value[r.0],
                Gate::Or(l, r) => value[l.0] || value[r.0],
                Gate::Id(s) => value[s.0],
            };
        }
        value
    }

    /// DOT rendering without interface annotations.
    pub fn to_dot(&self, name: &str) -> String {
        render_dot(self, name, &[], &[])
    }
}

/// A circuit with ordered input gates (its variable gates) and ordered
/// output gates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransducerCircuit {
    circuit: Circuit,
    inputs: Vec<GateId>,
    outputs: Vec<GateId>,
}

impl TransducerCircuit {
    pub fn new(circuit: Circuit, inputs: Vec<GateId>, outputs: Vec<GateId>) -> Result<Self, CircuitError> {
        let t = TransducerCircuit {
            circuit,
            inputs,
            outputs,
        };
        t.validate()?;
        Ok(t)
    }

    /// Checks references and interface invariants.
    pub fn validate(&self) -> Result<(), CircuitError> {
        self.circuit.check_references()?;
        let n = self.circuit.len();
        let mut seen = vec![false; n];
        for &i in &self.inputs {
            if i.0 >= n || !matches!(self.circuit.gate(i), Gate::Var) {
                return Err(CircuitError::Interface(format!("input {} is not a variable gate", i.0)));
            }
            if std::mem::replace(&mut seen[i.0], true) {
                return Err(CircuitError::Interface(format!("input {} listed twice", i.0)));
            }
        }
        if let Some(v) = self.circuit.var_gates().find(|v| !seen[v.0]) {
            return Err(CircuitError::Interface(format!("variable gate {} is not an input", v.0)));
        }
        let mut seen = vec![false; n];
        for &o in &self.outputs {
            if o.0 >= n {
                return Err(CircuitError::Interface(format!("output {} does not exist", o.0)));
            }
            if std::mem::replace(&mut seen[o.0], true) {
                return Err(CircuitError::Interface(format!("output {} listed twice", o.0)));
            }
        }
        Ok(())
    }

    /// The arity-`n` identity: `n` variable gates serving as both inputs and
    /// outputs.
    pub fn identity(n: usize) -> Self {
        let mut circuit = Circuit::new();
        let ids: Vec<GateId> = (0..n).map(|_| circuit.push(Gate::Var)).collect();
        TransducerCircuit {
            circuit,
            inputs: ids.clone(),
            outputs: ids,
        }
    }

    /// No inputs; output `i` is the constant `s_i`.
    pub fn constant(s: &BoolSeq) -> Self {
        let mut circuit = Circuit::new();
        let outputs = s.bits().iter().map(|&b| circuit.push(Gate::Const(b))).collect();
        TransducerCircuit {
            circuit,
            inputs: Vec::new(),
            outputs,
        }
    }

    pub fn circuit(&self) -> &Circuit {
        &self.circuit
    }

    pub fn inputs(&self) -> &[GateId] {
        &self.inputs
    }

    pub fn outputs(&self) -> &[GateId] {
        &self.outputs
    }

    pub fn input_arity(&self) -> usize {
        self.inputs.len()
    }

    pub fn output_arity(&self) -> usize {
        self.outputs.len()
    }

    pub fn gate_count(&self) -> usize {
        self.circuit.len()
    }

    pub fn is_evaluated(&self) -> bool {
        self.circuit.is_evaluated()
    }

    /// Labels of the output gates, in interface order.
    pub fn output_kinds(&self) -> Vec<GateKind> {
        self.outputs.iter().map(|&o| self.circuit.gate(o).kind()).collect()
    }

    /// Labels of the gates the outputs stand for, looking through Id gates.
    pub fn resolved_output_kinds(&self) -> Vec<GateKind> {
        self.outputs
            .iter()
            .map(|&o| {
                let mut g = o;
                while let Gate::Id(next) = self.circuit.gate(g) {
                    g = next;
                }
                self.circuit.gate(g).kind()
            })
            .collect()
    }

    /// The output values if every output gate is constant.
    pub fn constant_outputs(&self) -> Option<BoolSeq> {
        self.outputs
            .iter()
            .map(|&o| match self.circuit.gate(o) {
                Gate::Const(v) => Some(v),
                _ => None,
            })
            .collect::<Option<Vec<_>>>()
            .map(BoolSeq)
    }

    pub fn evaluate(&self) -> Result<Self, CircuitError> {
        Ok(TransducerCircuit {
            circuit: self.circuit.evaluate()?,
            inputs: self.inputs.clone(),
            outputs: self.outputs.clone(),
        })
    }

    pub fn evaluate_by_substitution(&self) -> Result<Self, CircuitError> {
        Ok(TransducerCircuit {
            circuit: self.circuit.evaluate_by_substitution()?,
            inputs: self.inputs.clone(),
            outputs: self.outputs.clone(),
        })
    }

    /// `self ⋄ next`: the outputs of `self` feed the inputs of `next`. The
    /// gates of `next` follow those of `self`, shifted by `self.gate_count()`.
    pub fn compose(&self, next: &TransducerCircuit) -> Result<Self, CircuitError> {
        if self.output_arity() != next.input_arity() {
            return Err(CircuitError::ArityMismatch {
                expected: next.input_arity(),
                found: self.output_arity(),
            });
        }
        let off = self.circuit.len();
        let mut gates = Vec::with_capacity(off + next.circuit.len());
        gates.extend_from_slice(&self.circuit.gates);
        gates.extend(next.circuit.gates.iter().map(|g| g.offset(off)));
        for (i, &input) in next.inputs.iter().enumerate() {
            gates[input.0 + off] = Gate::Id(self.outputs[i]);
        }
        Ok(TransducerCircuit {
            circuit: Circuit { gates },
            inputs: self.inputs.clone(),
            outputs: next.outputs.iter().map(|o| o.offset(off)).collect(),
        })
    }

    /// Evaluated composition of two evaluated circuits: constant outputs of
    /// `self` are first moved into `next` in place of the matching inputs,
    /// `next` is evaluated on its own, and only then are the two composed
    /// and evaluated.
    pub fn compose_evaluated(&self, next: &TransducerCircuit) -> Result<Self, CircuitError> {
        if self.output_arity() != next.input_arity() {
            return Err(CircuitError::ArityMismatch {
                expected: next.input_arity(),
                found: self.output_arity(),
            });
        }
        let mut moved = next.circuit.clone();
        let mut remaining_inputs = Vec::with_capacity(next.inputs.len());
        let mut remaining_outputs = Vec::with_capacity(self.outputs.len());
        for (i, &out) in self.outputs.iter().enumerate() {
            match self.circuit.gate(out) {
                Gate::Const(v) => moved.set(next.inputs[i], Gate::Const(v)),
                _ => {
                    remaining_inputs.push(next.inputs[i]);
                    remaining_outputs.push(out);
                }
            }
        }
        let next_reduced = TransducerCircuit {
            circuit: moved.evaluate()?,
            inputs: remaining_inputs,
            outputs: next.outputs.clone(),
        };
        let self_reduced = TransducerCircuit {
            circuit: self.circuit.clone(),
            inputs: self.inputs.clone(),
            outputs: remaining_outputs,
        };
        self_reduced.compose(&next_reduced)?.evaluate()
    }

    /// `f_T(s)`: composes the constant circuit for `s` with `self`,
    /// evaluates, and reads the outputs.
    pub fn apply(&self, s: &BoolSeq) -> Result<BoolSeq, CircuitError> {
        if s.len() != self.input_arity() {
            return Err(CircuitError::ArityMismatch {
                expected: self.input_arity(),
                found: s.len(),
            });
        }
        let evaluated = TransducerCircuit::constant(s).compose(self)?.evaluate()?;
        evaluated
            .outputs
            .iter()
            .enumerate()
            .map(|(i, &o)| match evaluated.circuit.gate(o) {
                Gate::Const(v) => Ok(v),
                _ => Err(CircuitError::NotConstant(i)),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(BoolSeq)
    }

    /// Direct Boolean simulation of `f_T(s)`, independent of the
    /// label-rewriting evaluator.
    pub fn simulate(&self, s: &BoolSeq) -> Result<BoolSeq, CircuitError> {
        if s.len() != self.input_arity() {
            return Err(CircuitError::ArityMismatch {
                expected: self.input_arity(),
                found: s.len(),
            });
        }
        let order = self.circuit.topological_order()?;
        let mut assignment = vec![false; self.circuit.len()];
        for (i, &input) in self.inputs.iter().enumerate() {
            assignment[input.0] = s.get(i);
        }
        let value = self.circuit.simulate_with(&order, |g| assignment[g.0]);
        Ok(BoolSeq(self.outputs.iter().map(|o| value[o.0]).collect()))
    }

    /// Drops gates that neither feed an output nor belong to the input
    /// interface. Surviving gates keep their relative order.
    pub fn compact(&self) -> Self {
        let n = self.circuit.len();
        let mut live = vec![false; n];
        let mut stack: Vec<GateId> = self.outputs.iter().chain(&self.inputs).copied().collect();
        while let Some(g) = stack.pop() {
            if std::mem::replace(&mut live[g.0], true) {
                continue;
            }
            stack.extend(self.circuit.gate(g).deps().filter(|d| !live[d.0]));
        }
        let mut map = vec![usize::MAX; n];
        let mut gates = Vec::new();
        for (i, gate) in self.circuit.gates.iter().enumerate() {
            if live[i] {
                map[i] = gates.len();
                gates.push(*gate);
            }
        }
        let gates = gates.into_iter().map(|g| g.remap(&map)).collect();
        TransducerCircuit {
            circuit: Circuit { gates },
            inputs: self.inputs.iter().map(|g| GateId(map[g.0])).collect(),
            outputs: self.outputs.iter().map(|g| GateId(map[g.0])).collect(),
        }
    }

    /// DOT rendering with inputs and outputs grouped in interface order.
    pub fn to_dot(&self, name: &str) -> String {
        render_dot(&self.circuit, name, &self.inputs, &self.outputs)
    }
}

fn render_dot(circuit: &Circuit, name: &str, inputs: &[GateId], outputs: &[GateId]) -> String {
    let mut tags: Vec<Vec<String>> = vec![Vec::new(); circuit.len()];
    for (i, g) in inputs.iter().enumerate() {
        tags[g.0].push(format!("i{i}"));
    }
    for (i, g) in outputs.iter().enumerate() {
        tags[g.0].push(format!("o{i}"));
    }
    let mut out = String::new();
    let _ = writeln!(out, "digraph \"{}\" {{", name.replace('"', "\\\""));
    let _ = writeln!(out, "  node [shape=circle, fontsize=10];");
    for (i, gate) in circuit.gates().iter().enumerate() {
        let mut xlabel = format!("g{i}");
        for t in &tags[i] {
            xlabel.push(' ');
            xlabel.push_str(t);
        }
        let _ = writeln!(out, "  g{i} [label=\"{}\", xlabel=\"{xlabel}\"];", gate.kind().label());
    }
    for (i, gate) in circuit.gates().iter().enumerate() {
        for d in gate.deps() {
            let _ = writeln!(out, "  g{i} -> g{};", d.0);
        }
    }
    for (group, ids) in [("inputs", inputs), ("outputs", outputs)] {
        if ids.is_empty() {
            continue;
        }
        let members: Vec<String> = ids.iter().map(|g| format!("g{}", g.0)).collect();
        let _ = writeln!(out, "  subgraph {group} {{ rank=same; {}; }}", members.join("; "));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(s: &str) -> BoolSeq {
        s.parse().unwrap()
    }

    #[test]
    fn constant_circuit_interface() {
        let c = TransducerCircuit::constant(&seq("1,0"));
        assert_eq!(c.input_arity(), 0);
        assert_eq!(c.output_arity(), 2);
        assert_eq!(c.output_kinds(), vec![GateKind::One, GateKind::Zero]);
        let empty = TransducerCircuit::constant(&BoolSeq::default());
        assert_eq!(empty.gate_count(), 0);
        assert_eq!(empty.output_arity(), 0);
    }

    #[test]
    fn and_of_constants_folds() {
        let c = Circuit::from_gates(vec![Gate::Const(true), Gate::Const(true), Gate::And(GateId(0), GateId(1))])
            .unwrap();
        assert_eq!(c.evaluate().unwrap().gate(GateId(2)), Gate::Const(true));
    }

    #[test]
    fn and_with_true_becomes_id() {
        let c = Circuit::from_gates(vec![Gate::Var, Gate::Const(true), Gate::And(GateId(0), GateId(1))]).unwrap();
        let e = c.evaluate().unwrap();
        assert_eq!(e.gate(GateId(2)), Gate::Id(GateId(0)));
        assert!(e.is_evaluated());
        assert!(!c.is_evaluated());
    }

    #[test]
    fn evaluate_is_idempotent() {
        let c = Circuit::from_gates(vec![
            Gate::Var,
            Gate::Const(false),
            Gate::Or(GateId(0), GateId(1)),
            Gate::Id(GateId(2)),
            Gate::Id(GateId(3)),
        ])
        .unwrap();
        let once = c.evaluate().unwrap();
        assert_eq!(once.gate(GateId(4)), Gate::Id(GateId(0)));
        assert_eq!(once.evaluate().unwrap(), once);
        assert_eq!(once.len(), c.len());
    }

    #[test]
    fn cycle_is_reported() {
        let c = Circuit::from_gates(vec![Gate::Id(GateId(1)), Gate::Id(GateId(0))]).unwrap();
        assert!(matches!(c.evaluate(), Err(CircuitError::Cycle(_))));
        assert!(matches!(
            Circuit::from_gates(vec![Gate::Id(GateId(3))]),
            Err(CircuitError::DanglingReference { gate: 0, target: 3 })
        ));
    }

    #[test]
    fn identity_apply() {
        let id = TransducerCircuit::identity(3);
        assert_eq!(id.apply(&seq("0,1,1")).unwrap(), seq("0,1,1"));
    }

    #[test]
    fn compose_arity_mismatch() {
        let g = TransducerCircuit::identity(3);
        let d = TransducerCircuit::identity(4);
        assert_eq!(
            g.compose(&d).unwrap_err(),
            CircuitError::ArityMismatch { expected: 4, found: 3 }
        );
        assert!(g.compose_evaluated(&d).is_err());
        assert!(g.apply(&seq("0,1")).is_err());
    }

    #[test]
    fn identity_composition_is_neutral() {
        let mut c = Circuit::new();
        let v0 = c.push(Gate::Var);
        let v1 = c.push(Gate::Var);
        let a = c.push(Gate::And(v0, v1));
        let o = c.push(Gate::Or(v0, v1));
        let t = TransducerCircuit::new(c, vec![v0, v1], vec![a, o]).unwrap();
        let composed = TransducerCircuit::identity(2).compose(&t).unwrap().evaluate().unwrap();
        for bits in ["0,0", "0,1", "1,0", "1,1"] {
            assert_eq!(composed.apply(&seq(bits)).unwrap(), t.apply(&seq(bits)).unwrap());
        }
        // Ids introduced by the composition stay one hop deep
        let after = composed.compose(&TransducerCircuit::identity(2)).unwrap().evaluate().unwrap();
        for &o in after.outputs() {
            if let Gate::Id(target) = after.circuit().gate(o) {
                assert!(!matches!(after.circuit().gate(target), Gate::Id(_)));
            }
        }
    }

    #[test]
    fn interface_validation() {
        let mut c = Circuit::new();
        let v = c.push(Gate::Var);
        let w = c.push(Gate::Var);
        assert!(TransducerCircuit::new(c.clone(), vec![v], vec![v]).is_err());
        assert!(TransducerCircuit::new(c.clone(), vec![v, v], vec![]).is_err());
        assert!(TransducerCircuit::new(c.clone(), vec![v, w], vec![w, w]).is_err());
        assert!(TransducerCircuit::new(c, vec![w, v], vec![v]).is_ok());
    }

    #[test]
    fn compact_keeps_function() {
        let mut c = Circuit::new();
        let v0 = c.push(Gate::Var);
        let dead = c.push(Gate::Const(true));
        let v1 = c.push(Gate::Var);
        let a = c.push(Gate::And(v0, v1));
        let _ = dead;
        let t = TransducerCircuit::new(c, vec![v0, v1], vec![a]).unwrap();
        let small = t.compact();
        assert_eq!(small.gate_count(), 3);
        for bits in ["0,0", "0,1", "1,0", "1,1"] {
            assert_eq!(small.apply(&seq(bits)).unwrap(), t.apply(&seq(bits)).unwrap());
        }
    }

    #[test]
    fn dot_for_constants() {
        let dot = TransducerCircuit::constant(&seq("1,0")).to_dot("c");
        assert!(dot.starts_with("digraph \"c\" {"));
        assert!(dot.contains("g0 [label=\"1\""));
        assert!(dot.contains("g1 [label=\"0\""));
        assert!(!dot.contains("->"));
    }
}
