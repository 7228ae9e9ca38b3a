//! Contraction trees and the staged contraction engine.
//!
//! A contraction tree has one node per binary operator and per literal
//! occurrence of a PNF formula, plus a root marker above the top operator.
//! Every edge carries an evaluated transducer circuit that maps the value
//! of the child to the value of the operand of the parent that contains
//! it. Unary shift operators are folded into these edge labels, so inner
//! nodes always have two children.
//!
//! Contracting a leaf evaluates it through its edge, builds the parent
//! operator's circuit with that side known, and composes the result into a
//! single edge from the grandparent to the sibling. Leaves are contracted in
//! stages: odd-numbered left children, then odd-numbered right children,
//! then the surviving leaves are renumbered.

use std::fmt::Write as _;
use std::sync::Arc;

use thiserror::Error;

use crate::builder::{self, BuildError, Side};
use crate::circuit::{CircuitError, TransducerCircuit};
use crate::formula::{BoolOp, Formula, Literal, TemporalOp};
use crate::pool;
use crate::semantics::eval_seq;
use crate::trace::{BoolSeq, Path, TraceError};

pub type NodeId = usize;

/// Id of the root marker in every tree.
pub const ROOT: NodeId = 0;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ContractionError {
    #[error("formula is not in positive normal form: {0}")]
    NotPnf(String),
    #[error("path is empty")]
    EmptyPath,
    #[error("node {0} is not a live leaf")]
    NotALeaf(NodeId),
    #[error("leaf {0} has no sibling")]
    NoSibling(NodeId),
    #[error("contractions scheduled in the same phase overlap at node {0}")]
    Overlap(NodeId),
    #[error("contraction did not finish after {0} stages")]
    Unfinished(usize),
    #[error("worker count must be at least 1")]
    NoWorkers,
    #[error("tree condition {condition} violated at node {node}: {detail}")]
    Invariant {
        condition: u8,
        node: NodeId,
        detail: String,
    },
    #[error(transparent)]
    Build(#[from] BuildError),
    #[error(transparent)]
    Circuit(#[from] CircuitError),
    #[error(transparent)]
    Trace(#[from] TraceError),
}

/// Binary operator at an inner node.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NodeOp {
    Bool(BoolOp),
    Temporal { op: TemporalOp, bound: Option<usize> },
}

impl NodeOp {
    pub fn symbol(&self) -> String {
        match self {
            NodeOp::Bool(op) => op.symbol().to_string(),
            NodeOp::Temporal { op, bound: None } => op.symbol().to_string(),
            NodeOp::Temporal { op, bound: Some(b) } => format!("{}[{b}]", op.symbol()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NodeKind {
    Root,
    Inner(NodeOp),
    /// A literal occurrence together with its value on the path.
    Leaf { literal: Literal, value: BoolSeq },
}

#[derive(Debug, Clone)]
pub struct Node {
    pub kind: NodeKind,
    /// Pre-order index of the occurrence in the PNF formula. The root
    /// marker has none.
    pub occurrence: Option<usize>,
    /// Occurrence whose value the incoming edge produces: the operand of the
    /// parent that contains this node.
    pub operand: usize,
    pub parent: Option<NodeId>,
    pub children: Vec<NodeId>,
    /// Label of the edge from the parent to this node.
    pub label: Option<Arc<TransducerCircuit>>,
    pub alive: bool,
}

/// Deliberate builder corruption, used to check that the differential
/// self-test notices broken circuits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fault {
    /// Build temporal circuits as if the other operand were the known one.
    SwapKnownSide,
}

#[derive(Debug, Clone)]
pub struct ContractionTree {
    n: usize,
    nodes: Vec<Node>,
    gates_built: usize,
    fault: Option<Fault>,
}

/// A contraction computed against a snapshot of the tree, ready to splice.
#[derive(Debug, Clone)]
pub struct PreparedStep {
    pub leaf: NodeId,
    pub parent: NodeId,
    pub sibling: NodeId,
    pub label: Arc<TransducerCircuit>,
    pub gates_built: usize,
}

/// What one stage of the schedule did. Nodes are given by occurrence index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StageRecord {
    pub leaves_before: usize,
    pub left: Vec<usize>,
    pub leaves_after_left: usize,
    pub right: Vec<usize>,
    pub leaves_after: usize,
}

#[derive(Debug, Clone)]
pub struct Contraction {
    pub sequence: BoolSeq,
    pub stages: Vec<StageRecord>,
    pub gates_built: usize,
}

fn identity_label(n: usize) -> Arc<TransducerCircuit> {
    Arc::new(TransducerCircuit::identity(n))
}

impl ContractionTree {
    /// Builds the initial tree for a PNF formula with pre-pruned bounds.
    pub fn new(f: &Formula, rho: &Path) -> Result<Self, ContractionError> {
        if rho.is_empty() {
            return Err(ContractionError::EmptyPath);
        }
        if !f.is_pnf() {
            return Err(ContractionError::NotPnf(f.to_string()));
        }
        let mut tree = ContractionTree {
            n: rho.len(),
            nodes: vec![Node {
                kind: NodeKind::Root,
                occurrence: None,
                operand: 0,
                parent: None,
                children: Vec::new(),
                label: None,
                alive: true,
            }],
            gates_built: 0,
            fault: None,
        };
        let mut next_occurrence = 0;
        let top = tree.grow(f, rho, ROOT, identity_label(rho.len()), &mut next_occurrence)?;
        tree.nodes[ROOT].children.push(top);
        Ok(tree)
    }

    /// Adds the node for `f` below `parent`. `label` maps the value of `f`
    /// to the operand the edge feeds; unary shifts are folded into it on the
    /// way down.
    fn grow(
        &mut self,
        f: &Formula,
        rho: &Path,
        parent: NodeId,
        label: Arc<TransducerCircuit>,
        next_occurrence: &mut usize,
    ) -> Result<NodeId, ContractionError> {
        let operand = *next_occurrence;
        let mut f = f;
        let mut label = label;
        while let Formula::Shift(op, child) = f {
            *next_occurrence += 1;
            let shift = builder::build_shift(self.n, *op)?;
            self.gates_built += shift.gate_count();
            label = Arc::new(shift.compose_evaluated(&label)?.compact());
            f = child;
        }
        let occurrence = *next_occurrence;
        // a negated literal is two occurrences, the negation and its atom
        *next_occurrence += if matches!(f, Formula::Not(_)) { 2 } else { 1 };
        let id = self.nodes.len();
        let (kind, children) = if let Some(literal) = f.as_literal() {
            let leaf = builder::build_literal(rho, &literal)?;
            self.gates_built += leaf.gate_count();
            let value = leaf.constant_outputs().expect("literal circuits are constant");
            (NodeKind::Leaf { literal, value }, None)
        } else {
            match f {
                Formula::Bool(op, l, r) => (NodeKind::Inner(NodeOp::Bool(*op)), Some((l, r))),
                Formula::Temporal {
                    op,
                    bound,
                    left,
                    right,
                } => (
                    NodeKind::Inner(NodeOp::Temporal {
                        op: *op,
                        bound: *bound,
                    }),
                    Some((left, right)),
                ),
                other => return Err(ContractionError::NotPnf(other.to_string())),
            }
        };
        self.nodes.push(Node {
            kind,
            occurrence: Some(occurrence),
            operand,
            parent: Some(parent),
            children: Vec::new(),
            label: Some(label),
            alive: true,
        });
        if let Some((l, r)) = children {
            let l = self.grow(l, rho, id, identity_label(self.n), next_occurrence)?;
            let r = self.grow(r, rho, id, identity_label(self.n), next_occurrence)?;
            self.nodes[id].children = vec![l, r];
        }
        Ok(id)
    }

    pub fn set_fault(&mut self, fault: Option<Fault>) {
        self.fault = fault;
    }

    pub fn path_len(&self) -> usize {
        self.n
    }

    pub fn node(&self, id: NodeId) -> &Node {
        &self.nodes[id]
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    /// Total gates produced by the per-operator builders so far.
    pub fn gates_built(&self) -> usize {
        self.gates_built
    }

    /// Gates currently held in live edge labels.
    pub fn label_gates(&self) -> usize {
        self.live()
            .filter_map(|id| self.nodes[id].label.as_ref())
            .map(|l| l.gate_count())
            .sum()
    }

    fn live(&self) -> impl Iterator<Item = NodeId> + '_ {
        (0..self.nodes.len()).filter(|&i| self.nodes[i].alive)
    }

    /// Live leaves from left to right.
    pub fn leaves(&self) -> Vec<NodeId> {
        let mut out = Vec::new();
        let mut stack = vec![ROOT];
        while let Some(id) = stack.pop() {
            let node = &self.nodes[id];
            if matches!(node.kind, NodeKind::Leaf { .. }) {
                out.push(id);
            }
            stack.extend(node.children.iter().rev());
        }
        out
    }

    pub fn is_contracted(&self) -> bool {
        let top = self.nodes[ROOT].children[0];
        matches!(self.nodes[top].kind, NodeKind::Leaf { .. })
    }

    fn side_of(&self, leaf: NodeId) -> Option<Side> {
        let parent = self.nodes[leaf].parent?;
        if parent == ROOT {
            return None;
        }
        Some(if self.nodes[parent].children[0] == leaf {
            Side::Left
        } else {
            Side::Right
        })
    }

    /// Computes the contraction of `leaf` without changing the tree.
    pub fn prepare_step(&self, leaf: NodeId) -> Result<PreparedStep, ContractionError> {
        let node = self.nodes.get(leaf).filter(|n| n.alive).ok_or(ContractionError::NotALeaf(leaf))?;
        let NodeKind::Leaf { value, .. } = &node.kind else {
            return Err(ContractionError::NotALeaf(leaf));
        };
        let side = self.side_of(leaf).ok_or(ContractionError::NoSibling(leaf))?;
        let parent = node.parent.expect("non-root nodes have a parent");
        let sibling = match side {
            Side::Left => self.nodes[parent].children[1],
            Side::Right => self.nodes[parent].children[0],
        };
        let known = node.label.as_ref().expect("live edges are labeled").apply(value)?;
        let NodeKind::Inner(op) = self.nodes[parent].kind else {
            unreachable!("parents of leaves are inner nodes")
        };
        let partial = match op {
            NodeOp::Bool(op) => builder::build_boolean(self.n, op, &known)?,
            NodeOp::Temporal { op, bound } => {
                let side = match (self.fault, side) {
                    (Some(Fault::SwapKnownSide), Side::Left) => Side::Right,
                    (Some(Fault::SwapKnownSide), Side::Right) => Side::Left,
                    (None, side) => side,
                };
                builder::build_temporal(self.n, op, bound, side, &known)?
            }
        };
        let above = self.nodes[parent].label.as_ref().expect("live edges are labeled");
        let below = self.nodes[sibling].label.as_ref().expect("live edges are labeled");
        let label = below.compose_evaluated(&partial.compose_evaluated(above)?)?.compact();
        Ok(PreparedStep {
            leaf,
            parent,
            sibling,
            label: Arc::new(label),
            gates_built: partial.gate_count(),
        })
    }

    /// Splices a prepared contraction into the tree: the sibling takes the
    /// parent's place under the grandparent with the new label.
    pub fn apply_step(&mut self, step: PreparedStep) {
        let PreparedStep {
            leaf,
            parent,
            sibling,
            label,
            gates_built,
        } = step;
        let grandparent = self.nodes[parent].parent.expect("inner nodes have a parent");
        for slot in &mut self.nodes[grandparent].children {
            if *slot == parent {
                *slot = sibling;
            }
        }
        let operand = self.nodes[parent].operand;
        let s = &mut self.nodes[sibling];
        s.parent = Some(grandparent);
        s.label = Some(label);
        s.operand = operand;
        for dead in [leaf, parent] {
            let d = &mut self.nodes[dead];
            d.alive = false;
            d.label = None;
            d.children.clear();
            d.parent = None;
        }
        self.gates_built += gates_built;
    }

    pub fn contract_step(&mut self, leaf: NodeId) -> Result<(), ContractionError> {
        let step = self.prepare_step(leaf)?;
        self.apply_step(step);
        Ok(())
    }

    /// Value of the formula once a single leaf remains.
    pub fn result(&self) -> Result<BoolSeq, ContractionError> {
        let top = self.nodes[ROOT].children[0];
        match &self.nodes[top].kind {
            NodeKind::Leaf { value, .. } => Ok(self.nodes[top]
                .label
                .as_ref()
                .expect("live edges are labeled")
                .apply(value)?),
            _ => Err(ContractionError::Unfinished(0)),
        }
    }

    /// Conditions 1 and 2: a regular binary tree under the root marker,
    /// literal leaves, and evaluated `n -> n` labels on every edge.
    pub fn check_structure(&self) -> Result<(), ContractionError> {
        let fail = |condition, node, detail: &str| {
            Err(ContractionError::Invariant {
                condition,
                node,
                detail: detail.to_string(),
            })
        };
        let root = &self.nodes[ROOT];
        if !root.alive || root.parent.is_some() || root.children.len() != 1 || root.kind != NodeKind::Root {
            return fail(1, ROOT, "root marker must have exactly one child and no parent");
        }
        let mut reached = 0;
        let mut stack = vec![ROOT];
        while let Some(id) = stack.pop() {
            reached += 1;
            let node = &self.nodes[id];
            if !node.alive {
                return fail(1, id, "dead node reachable");
            }
            for &c in &node.children {
                if self.nodes[c].parent != Some(id) {
                    return fail(1, c, "parent link does not match child list");
                }
                stack.push(c);
            }
            if id == ROOT {
                continue;
            }
            match node.kind {
                NodeKind::Inner(_) if node.children.len() != 2 => {
                    return fail(1, id, "inner node without exactly two children")
                }
                NodeKind::Leaf { .. } if !node.children.is_empty() => return fail(2, id, "leaf with children"),
                NodeKind::Root => return fail(1, id, "second root marker"),
                _ => {}
            }
            let Some(label) = &node.label else {
                return fail(2, id, "unlabeled edge");
            };
            if label.input_arity() != self.n || label.output_arity() != self.n {
                return fail(2, id, "edge label arity differs from path length");
            }
            if !label.is_evaluated() {
                return fail(2, id, "edge label is not evaluated");
            }
        }
        if reached != self.live().count() {
            return fail(1, ROOT, "live node not reachable from the root marker");
        }
        Ok(())
    }

    /// All three conditions. `f` must be the formula the tree was built
    /// from; condition 3 is decided with the reference evaluator.
    pub fn check_invariants(&self, f: &Formula, rho: &Path) -> Result<(), ContractionError> {
        self.check_structure()?;
        let occurrences = f.occurrences();
        let fail = |node, detail: String| {
            Err(ContractionError::Invariant {
                condition: 3,
                node,
                detail,
            })
        };
        for id in self.live().filter(|&id| id != ROOT) {
            let node = &self.nodes[id];
            let occ = node.occurrence.expect("formula nodes carry an occurrence");
            let parent = node.parent.expect("non-root nodes have a parent");
            let expected_parent = self.nodes[parent].occurrence;
            if occurrences[node.operand].parent != expected_parent {
                return fail(id, "edge operand is not a direct operand of the parent".into());
            }
            let mut up = Some(occ);
            while up.is_some_and(|u| u != node.operand) {
                up = occurrences[up.unwrap()].parent;
            }
            if up.is_none() {
                return fail(id, "edge operand does not contain the child".into());
            }
            let input = eval_seq(rho, occurrences[occ].formula).map_err(|e| ContractionError::Invariant {
                condition: 3,
                node: id,
                detail: e.to_string(),
            })?;
            let expected = eval_seq(rho, occurrences[node.operand].formula).map_err(|e| {
                ContractionError::Invariant {
                    condition: 3,
                    node: id,
                    detail: e.to_string(),
                }
            })?;
            let got = node.label.as_ref().expect("checked above").apply(&input)?;
            if got != expected {
                return fail(id, format!("label maps {input} to {got}, operand value is {expected}"));
            }
        }
        Ok(())
    }

    /// Runs the staged schedule to completion. `observe` is called after
    /// every applied contraction step.
    pub fn run(
        self,
        workers: usize,
        mut observe: impl FnMut(&ContractionTree),
    ) -> Result<(ContractionTree, Contraction), ContractionError> {
        if workers == 0 {
            return Err(ContractionError::NoWorkers);
        }
        let initial = self.leaves();
        let limit = ceil_log2(initial.len()).max(1) + 1;
        let work = |tree: &ContractionTree, &leaf: &NodeId| tree.prepare_step(leaf);
        let (tree, stages) = pool::scoped(workers, self, work, |pool| {
            let mut numbered = initial;
            let mut stages = Vec::new();
            while numbered.len() > 1 {
                if stages.len() >= limit {
                    return Err(ContractionError::Unfinished(stages.len()));
                }
                let leaves_before = numbered.len();
                let mut halves: [Vec<usize>; 2] = Default::default();
                let mut after = [0; 2];
                for (half, side) in [Side::Left, Side::Right].into_iter().enumerate() {
                    let selected: Vec<NodeId> = {
                        let tree = pool.state();
                        numbered
                            .iter()
                            .step_by(2)
                            .copied()
                            .filter(|&leaf| tree.side_of(leaf) == Some(side))
                            .collect()
                    };
                    let prepared = pool.map(selected);
                    let mut touched = std::collections::HashSet::new();
                    let mut tree = pool.state_mut();
                    for step in prepared {
                        let step = step?;
                        for id in [step.leaf, step.parent, step.sibling] {
                            if !touched.insert(id) {
                                return Err(ContractionError::Overlap(id));
                            }
                        }
                        halves[half].push(tree.nodes[step.leaf].occurrence.expect("leaves are occurrences"));
                        tree.apply_step(step);
                        observe(&tree);
                    }
                    after[half] = leaves_before - halves[0].len() - halves[1].len();
                }
                // Survivors are the even-numbered leaves; halving their
                // numbers keeps them consecutive.
                numbered = numbered.into_iter().skip(1).step_by(2).collect();
                debug_assert_eq!(numbered, pool.state().leaves());
                let [left, right] = halves;
                stages.push(StageRecord {
                    leaves_before,
                    left,
                    leaves_after_left: after[0],
                    right,
                    leaves_after: after[1],
                });
            }
            Ok(stages)
        });
        let stages = stages?;
        let sequence = tree.result()?;
        let gates_built = tree.gates_built;
        Ok((
            tree,
            Contraction {
                sequence,
                stages,
                gates_built,
            },
        ))
    }

    /// DOT rendering of the tree; edges are annotated with the gate count
    /// of their label.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph \"{}\" {{", name.replace('"', "\\\""));
        let mut stack = vec![ROOT];
        while let Some(id) = stack.pop() {
            let node = &self.nodes[id];
            let label = match &node.kind {
                NodeKind::Root => "root".to_string(),
                NodeKind::Inner(op) => op.symbol(),
                NodeKind::Leaf { literal, .. } => literal.to_string(),
            };
            let shape = if matches!(node.kind, NodeKind::Leaf { .. }) { "box" } else { "ellipse" };
            let _ = writeln!(out, "  n{id} [label=\"{}\", shape={shape}];", label.replace('"', "\\\""));
            for &c in &node.children {
                let gates = self.nodes[c].label.as_ref().map_or(0, |l| l.gate_count());
                let _ = writeln!(out, "  n{id} -> n{c} [label=\"{gates}\"];");
            }
            stack.extend(node.children.iter().rev());
        }
        out.push_str("}\n");
        out
    }
}

pub fn ceil_log2(n: usize) -> usize {
    if n <= 1 {
        0
    } else {
        (usize::BITS - (n - 1).leading_zeros()) as usize
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Engine {
    #[default]
    Circuit,
    Naive,
}

impl Engine {
    pub fn name(self) -> &'static str {
        match self {
            Engine::Circuit => "circuit",
            Engine::Naive => "naive",
        }
    }
}

impl std::str::FromStr for Engine {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "circuit" => Ok(Engine::Circuit),
            "naive" => Ok(Engine::Naive),
            other => Err(format!("unknown engine `{other}` (expected circuit or naive)")),
        }
    }
}

#[derive(Debug, Clone)]
pub struct CheckOptions {
    pub engine: Engine,
    pub workers: usize,
    /// Cap every bound at the path length before building the tree.
    pub prune: bool,
    pub fault: Option<Fault>,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            engine: Engine::Circuit,
            workers: 1,
            prune: true,
            fault: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub satisfied: bool,
    pub sequence: BoolSeq,
    pub engine: Engine,
    /// Leaves of the initial contraction tree (0 for the naive engine).
    pub leaves: usize,
    pub stages: Vec<StageRecord>,
    pub gates_built: usize,
}

/// Decides `rho |= f` and returns the value of `f` at every position.
pub fn check(f: &Formula, rho: &Path, engine: Engine, workers: usize) -> crate::Result<CheckOutcome> {
    check_with(
        f,
        rho,
        &CheckOptions {
            engine,
            workers,
            ..CheckOptions::default()
        },
    )
}

pub fn check_with(f: &Formula, rho: &Path, options: &CheckOptions) -> crate::Result<CheckOutcome> {
    if rho.is_empty() {
        return Err(ContractionError::EmptyPath.into());
    }
    let (sequence, leaves, stages, gates_built) = match options.engine {
        Engine::Naive => (eval_seq(rho, f)?, 0, Vec::new(), 0),
        Engine::Circuit => {
            let pnf = f.to_pnf();
            let pnf = if options.prune { pnf.prune_bounds(rho.len()) } else { pnf };
            let mut tree = ContractionTree::new(&pnf, rho)?;
            tree.set_fault(options.fault);
            let leaves = tree.leaves().len();
            let (_, run) = tree.run(options.workers, |_| {})?;
            (run.sequence, leaves, run.stages, run.gates_built)
        }
    };
    Ok(CheckOutcome {
        satisfied: sequence.get(0),
        sequence,
        engine: options.engine,
        leaves,
        stages,
        gates_built,
    })
}
