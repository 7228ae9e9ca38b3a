//! Per-operator circuit constructions.
//!
//! Each builder receives the path length and the evaluation `s` of one side
//! of an operator and returns an evaluated transducer circuit of arity
//! `n -> n` that maps the evaluation of the other side to the evaluation of
//! the whole operator. Literals need no input and produce constants.
//!
//! Gate ids are deterministic. Single-row constructions put the inputs
//! `v_i` at ids `0..n` and the outputs `o_i` at `n..2n`. Grid constructions
//! put gate `g(i, j)` at id `j * n + i`, so row 0 (the outputs) comes first
//! and row `b` (the inputs) last.

use thiserror::Error;

use crate::circuit::{Circuit, Gate, GateId, TransducerCircuit};
use crate::formula::{BoolOp, Literal, ShiftOp, TemporalOp};
use crate::trace::{BoolSeq, Path, TraceError};

/// Which operand of a binary operator has already been evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn name(self) -> &'static str {
        match self {
            Side::Left => "left",
            Side::Right => "right",
        }
    }
}

impl std::str::FromStr for Side {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "left" | "l" => Ok(Side::Left),
            "right" | "r" => Ok(Side::Right),
            other => Err(format!("unknown side `{other}` (expected left or right)")),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BuildError {
    #[error("circuits need a path length of at least 1")]
    EmptyPath,
    #[error("known sequence has length {found}, expected {expected}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("operator `{0}` needs the known operand's sequence")]
    MissingSequence(String),
}

fn check_len(n: usize, s: &BoolSeq) -> Result<(), BuildError> {
    if n == 0 {
        return Err(BuildError::EmptyPath);
    }
    if s.len() != n {
        return Err(BuildError::ArityMismatch {
            expected: n,
            found: s.len(),
        });
    }
    Ok(())
}

fn evaluated(t: TransducerCircuit) -> TransducerCircuit {
    t.evaluate().expect("builder layouts are acyclic")
}

/// Constant circuit holding the literal's value at every position.
pub fn build_literal(rho: &Path, literal: &Literal) -> Result<TransducerCircuit, TraceError> {
    Ok(TransducerCircuit::constant(&rho.atom_sequence(literal)?))
}

pub fn build_shift(n: usize, op: ShiftOp) -> Result<TransducerCircuit, BuildError> {
    if n == 0 {
        return Err(BuildError::EmptyPath);
    }
    Ok(layout::shift(n, op))
}

/// `∧`/`∨` with one side known. The construction does not depend on which
/// side that is.
pub fn build_boolean(n: usize, op: BoolOp, s: &BoolSeq) -> Result<TransducerCircuit, BuildError> {
    check_len(n, s)?;
    Ok(layout::boolean(op, s))
}

pub fn build_unbounded(n: usize, op: TemporalOp, side: Side, s: &BoolSeq) -> Result<TransducerCircuit, BuildError> {
    check_len(n, s)?;
    Ok(evaluated(match side {
        Side::Right => layout::chain_right(op, s),
        Side::Left => layout::chain_left(op, s),
    }))
}

pub fn build_bounded(
    n: usize,
    op: TemporalOp,
    bound: usize,
    side: Side,
    s: &BoolSeq,
) -> Result<TransducerCircuit, BuildError> {
    check_len(n, s)?;
    Ok(evaluated(match side {
        Side::Right => layout::collapsed(op, bound, s),
        Side::Left => layout::grid(op, bound, s),
    }))
}

/// Dispatches to [`build_bounded`] or [`build_unbounded`].
pub fn build_temporal(
    n: usize,
    op: TemporalOp,
    bound: Option<usize>,
    side: Side,
    s: &BoolSeq,
) -> Result<TransducerCircuit, BuildError> {
    match bound {
        Some(b) => build_bounded(n, op, b, side, s),
        None => build_unbounded(n, op, side, s),
    }
}

/// A single operator as written in formulas: `U[3]`, `wX`, `&`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Operator {
    Shift(ShiftOp),
    Bool(BoolOp),
    Temporal(TemporalOp, Option<usize>),
}

impl std::str::FromStr for Operator {
    type Err = String;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let text = text.trim();
        let bad = || format!("unknown operator `{text}`");
        let (name, bound) = match text.split_once('[') {
            Some((name, rest)) => {
                let digits = rest.strip_suffix(']').ok_or_else(bad)?.trim();
                let b = digits
                    .parse()
                    .map_err(|_| format!("bound `{digits}` is not a natural number"))?;
                (name.trim(), Some(b))
            }
            None => (text, None),
        };
        if let Some(op) = TemporalOp::ALL.into_iter().find(|op| op.symbol() == name) {
            return Ok(Operator::Temporal(op, bound));
        }
        if bound.is_some() {
            return Err(format!("operator `{name}` does not take a bound"));
        }
        if let Some(op) = ShiftOp::ALL.into_iter().find(|op| op.symbol() == name) {
            return Ok(Operator::Shift(op));
        }
        [BoolOp::And, BoolOp::Or]
            .into_iter()
            .find(|op| op.symbol() == name)
            .map(Operator::Bool)
            .ok_or_else(bad)
    }
}

impl std::fmt::Display for Operator {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Operator::Shift(op) => f.write_str(op.symbol()),
            Operator::Bool(op) => f.write_str(op.symbol()),
            Operator::Temporal(op, None) => f.write_str(op.symbol()),
            Operator::Temporal(op, Some(b)) => write!(f, "{}[{b}]", op.symbol()),
        }
    }
}

impl Operator {
    /// The raw construction for this operator on a path of length `n`.
    /// Shifts ignore `side` and `s`; the others need `s` of length `n`.
    /// Bounds above `n` are capped.
    pub fn layout(self, n: usize, side: Side, s: Option<&BoolSeq>) -> Result<TransducerCircuit, BuildError> {
        if n == 0 {
            return Err(BuildError::EmptyPath);
        }
        if let Operator::Shift(op) = self {
            return Ok(layout::shift(n, op));
        }
        let s = s.ok_or_else(|| BuildError::MissingSequence(self.to_string()))?;
        check_len(n, s)?;
        Ok(match (self, side) {
            (Operator::Shift(_), _) => unreachable!("handled above"),
            (Operator::Bool(op), _) => layout::boolean(op, s),
            (Operator::Temporal(op, None), Side::Right) => layout::chain_right(op, s),
            (Operator::Temporal(op, None), Side::Left) => layout::chain_left(op, s),
            (Operator::Temporal(op, Some(b)), Side::Right) => layout::collapsed(op, b.min(n), s),
            (Operator::Temporal(op, Some(b)), Side::Left) => layout::grid(op, b.min(n), s),
        })
    }

    /// The builder's evaluated circuit for this operator.
    pub fn build(self, n: usize, side: Side, s: Option<&BoolSeq>) -> Result<TransducerCircuit, BuildError> {
        self.layout(n, side, s).map(evaluated)
    }
}

/// The constructions exactly as laid out, before constant propagation.
///
/// Some of them are not evaluated: in the collapsed bounded form an `∧`
/// chain ends in a constant 1 output, which evaluation turns into an Id.
/// The `build_*` functions run these through evaluation.
pub mod layout {
    use super::*;

    /// Index stepping toward the operator's direction, `None` at the
    /// boundary.
    fn step(past: bool, n: usize, i: usize) -> Option<usize> {
        if past {
            i.checked_sub(1)
        } else if i + 1 < n {
            Some(i + 1)
        } else {
            None
        }
    }

    fn binary(and: bool, l: GateId, r: GateId) -> Gate {
        if and {
            Gate::And(l, r)
        } else {
            Gate::Or(l, r)
        }
    }

    /// Inputs `v_i` at `0..n`, outputs `o_i` at `n..2n`, labels from `label`.
    fn single_row(n: usize, label: impl Fn(usize) -> Gate) -> TransducerCircuit {
        let mut c = Circuit::new();
        let inputs: Vec<GateId> = (0..n).map(|_| c.push(Gate::Var)).collect();
        let outputs: Vec<GateId> = (0..n).map(|i| c.push(label(i))).collect();
        TransducerCircuit::new(c, inputs, outputs).expect("single-row layout is well formed")
    }

    fn v(i: usize) -> GateId {
        GateId(i)
    }

    fn o(n: usize, i: usize) -> GateId {
        GateId(n + i)
    }

    pub fn shift(n: usize, op: ShiftOp) -> TransducerCircuit {
        single_row(n, |i| match step(op.is_past(), n, i) {
            Some(k) => Gate::Id(v(k)),
            None => Gate::Const(op.boundary_value()),
        })
    }

    pub fn boolean(op: BoolOp, s: &BoolSeq) -> TransducerCircuit {
        // ∨ is decided by a known 1, ∧ by a known 0
        let decisive = op == BoolOp::Or;
        single_row(s.len(), |i| {
            if s.get(i) == decisive {
                Gate::Const(decisive)
            } else {
                Gate::Id(v(i))
            }
        })
    }

    /// Unbounded operator, right side known, inputs are the left side.
    pub fn chain_right(op: TemporalOp, s: &BoolSeq) -> TransducerCircuit {
        let n = s.len();
        let e = op.is_existential();
        single_row(n, |i| match step(op.is_past(), n, i) {
            None => Gate::Const(s.get(i)),
            Some(_) if s.get(i) == e => Gate::Const(e),
            Some(k) => binary(e, v(i), o(n, k)),
        })
    }

    /// Unbounded operator, left side known, inputs are the right side.
    pub fn chain_left(op: TemporalOp, s: &BoolSeq) -> TransducerCircuit {
        let n = s.len();
        let e = op.is_existential();
        single_row(n, |i| match step(op.is_past(), n, i) {
            Some(k) if s.get(i) == e => binary(!e, v(i), o(n, k)),
            _ => Gate::Id(v(i)),
        })
    }

    /// Bounded operator, right side known: one row of outputs, constant
    /// where the window around `i` already decides the value.
    pub fn collapsed(op: TemporalOp, bound: usize, s: &BoolSeq) -> TransducerCircuit {
        let n = s.len();
        let e = op.is_existential();
        let past = op.is_past();
        // prefix[k] = number of positions j < k with s_j == e
        let mut prefix = vec![0usize; n + 1];
        for i in 0..n {
            prefix[i + 1] = prefix[i] + usize::from(s.get(i) == e);
        }
        single_row(n, |i| {
            let (lo, hi) = if past {
                (i.saturating_sub(bound), i)
            } else {
                (i, i.saturating_add(bound).min(n - 1))
            };
            if s.get(i) == e {
                Gate::Const(e)
            } else if prefix[hi + 1] == prefix[lo] {
                Gate::Const(!e)
            } else {
                let k = step(past, n, i).expect("a witness inside the window lies beyond i");
                binary(e, v(i), o(n, k))
            }
        })
    }

    /// Bounded operator, left side known: `bound + 1` rows where row `j`
    /// holds the value for remaining bound `bound - j`. Row `bound` is the
    /// input row, row 0 the output row.
    pub fn grid(op: TemporalOp, bound: usize, s: &BoolSeq) -> TransducerCircuit {
        let n = s.len();
        let e = op.is_existential();
        let past = op.is_past();
        let g = |i: usize, j: usize| GateId(j * n + i);
        let mut c = Circuit::new();
        for j in 0..=bound {
            for i in 0..n {
                let gate = if j == bound {
                    Gate::Var
                } else {
                    match step(past, n, i) {
                        Some(k) if s.get(i) == e => binary(!e, g(i, j + 1), g(k, j + 1)),
                        _ => Gate::Id(g(i, j + 1)),
                    }
                };
                c.push(gate);
            }
        }
        let inputs = (0..n).map(|i| g(i, bound)).collect();
        let outputs = (0..n).map(|i| g(i, 0)).collect();
        TransducerCircuit::new(c, inputs, outputs).expect("grid layout is well formed")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::GateKind;
    use crate::formula::Formula;
    use crate::semantics::eval_seq;
    use proptest::prelude::*;

    fn seq(s: &str) -> BoolSeq {
        s.parse().unwrap()
    }

    #[test]
    fn operator_text() {
        for text in ["U", "R[0]", "S[2]", "T", "X", "wX", "Y", "wY", "&", "|"] {
            let op: Operator = text.parse().unwrap();
            assert_eq!(op.to_string(), text);
        }
        assert_eq!("U [ 3 ]".parse(), Ok(Operator::Temporal(TemporalOp::Until, Some(3))));
        for bad in ["X[2]", "Q", "U[x]", "U[3", ""] {
            assert!(bad.parse::<Operator>().is_err(), "{bad}");
        }
    }

    #[test]
    fn operator_build_matches_builders() {
        let s = seq("0,1,0,0,1,0,0,1");
        for side in [Side::Left, Side::Right] {
            for op in TemporalOp::ALL {
                for bound in [None, Some(0), Some(3), Some(20)] {
                    let want = build_temporal(8, op, bound.map(|b| b.min(8)), side, &s).unwrap();
                    assert_eq!(Operator::Temporal(op, bound).build(8, side, Some(&s)).unwrap(), want);
                }
            }
        }
        assert_eq!(
            Operator::Bool(BoolOp::Or).build(8, Side::Left, Some(&s)).unwrap(),
            build_boolean(8, BoolOp::Or, &s).unwrap()
        );
        assert_eq!(
            Operator::Shift(ShiftOp::YesterdayWeak).build(8, Side::Left, None).unwrap(),
            build_shift(8, ShiftOp::YesterdayWeak).unwrap()
        );
        assert_eq!(
            Operator::Temporal(TemporalOp::Until, None).build(8, Side::Left, None),
            Err(BuildError::MissingSequence("U".into()))
        );
        assert!(Operator::Bool(BoolOp::And).build(7, Side::Left, Some(&s)).is_err());
        assert_eq!(Operator::Shift(ShiftOp::NextStrong).build(0, Side::Left, None), Err(BuildError::EmptyPath));
    }

    fn all_seqs(n: usize) -> impl Iterator<Item = BoolSeq> {
        (0..1u32 << n).map(move |m| BoolSeq((0..n).map(|i| m >> i & 1 == 1).collect()))
    }

    /// Oracle value of `l op r` where the operand sequences are realized as
    /// fresh atoms.
    fn oracle_temporal(op: TemporalOp, bound: Option<usize>, l: &BoolSeq, r: &BoolSeq) -> BoolSeq {
        let rho = Path::from_columns(&[("l", l), ("r", r)]).unwrap();
        let f = Formula::temporal(op, bound, Formula::atom("l"), Formula::atom("r"));
        eval_seq(&rho, &f).unwrap()
    }

    fn check_temporal(op: TemporalOp, bound: Option<usize>, side: Side, known: &BoolSeq, input: &BoolSeq) {
        let n = known.len();
        let t = build_temporal(n, op, bound, side, known).unwrap();
        assert!(t.is_evaluated());
        assert_eq!((t.input_arity(), t.output_arity()), (n, n));
        let (l, r) = match side {
            Side::Left => (known, input),
            Side::Right => (input, known),
        };
        assert_eq!(
            t.apply(input).unwrap(),
            oracle_temporal(op, bound, l, r),
            "{op:?} bound={bound:?} side={side:?} known={known} input={input}"
        );
    }

    #[test]
    fn temporal_exhaustive_small() {
        for n in 1..=6 {
            let seqs: Vec<BoolSeq> = all_seqs(n).collect();
            for op in TemporalOp::ALL {
                for bound in std::iter::once(None).chain((0..=n).map(Some)) {
                    for side in [Side::Left, Side::Right] {
                        for known in &seqs {
                            for input in &seqs {
                                check_temporal(op, bound, side, known, input);
                            }
                        }
                    }
                }
            }
        }
    }

    proptest! {
        #[test]
        fn temporal_random(
            n in 1usize..=50,
            bits in proptest::collection::vec(any::<(bool, bool)>(), 50),
            op in 0usize..4,
            bound in proptest::option::of(0usize..=50),
            left in any::<bool>(),
        ) {
            let known = BoolSeq(bits[..n].iter().map(|b| b.0).collect());
            let input = BoolSeq(bits[..n].iter().map(|b| b.1).collect());
            let side = if left { Side::Left } else { Side::Right };
            check_temporal(TemporalOp::ALL[op], bound.map(|b| b.min(n)), side, &known, &input);
        }

        #[test]
        fn past_mirrors_future(
            n in 1usize..=20,
            bits in proptest::collection::vec(any::<(bool, bool)>(), 20),
            pair in 0usize..2,
            bound in proptest::option::of(0usize..=20),
            left in any::<bool>(),
        ) {
            let known = BoolSeq(bits[..n].iter().map(|b| b.0).collect());
            let input = BoolSeq(bits[..n].iter().map(|b| b.1).collect());
            let side = if left { Side::Left } else { Side::Right };
            let (future, past) = [(TemporalOp::Until, TemporalOp::Since), (TemporalOp::Release, TemporalOp::Trigger)][pair];
            let bound = bound.map(|b| b.min(n));
            let p = build_temporal(n, past, bound, side, &known).unwrap();
            let f = build_temporal(n, future, bound, side, &known.reversed()).unwrap();
            let mut mirrored = f.output_kinds();
            mirrored.reverse();
            prop_assert_eq!(p.output_kinds(), mirrored);
            prop_assert_eq!(p.apply(&input).unwrap(), f.apply(&input.reversed()).unwrap().reversed());
        }

        #[test]
        fn gate_count_bounds(
            n in 1usize..=40,
            bits in proptest::collection::vec(any::<bool>(), 40),
            op in 0usize..4,
            bound in 0usize..=40,
        ) {
            let s = BoolSeq(bits[..n].to_vec());
            let op = TemporalOp::ALL[op];
            for side in [Side::Left, Side::Right] {
                prop_assert!(build_unbounded(n, op, side, &s).unwrap().gate_count() <= 2 * n);
            }
            prop_assert!(build_bounded(n, op, bound, Side::Right, &s).unwrap().gate_count() <= 2 * n);
            prop_assert!(build_bounded(n, op, bound, Side::Left, &s).unwrap().gate_count() <= (bound + 1) * n);
            for bop in [BoolOp::And, BoolOp::Or] {
                prop_assert!(build_boolean(n, bop, &s).unwrap().gate_count() <= 2 * n);
            }
            for sop in ShiftOp::ALL {
                prop_assert!(build_shift(n, sop).unwrap().gate_count() <= 2 * n);
            }
        }
    }

    #[test]
    fn shift_examples() {
        let x = build_shift(3, ShiftOp::NextStrong).unwrap();
        assert_eq!(x.apply(&seq("0,1,1")).unwrap(), seq("1,1,0"));
        let wx = build_shift(1, ShiftOp::NextWeak).unwrap();
        assert_eq!(wx.apply(&seq("0")).unwrap(), seq("1"));
        let wy = build_shift(3, ShiftOp::YesterdayWeak).unwrap();
        assert_eq!(wy.apply(&seq("1,0,1")).unwrap(), seq("1,1,0"));
        assert_eq!(build_shift(0, ShiftOp::NextStrong).unwrap_err(), BuildError::EmptyPath);
    }

    #[test]
    fn shift_matches_oracle() {
        for n in 1..=6 {
            for t in all_seqs(n) {
                for op in ShiftOp::ALL {
                    let rho = Path::from_columns(&[("p", &t)]).unwrap();
                    let f = Formula::shift(op, Formula::atom("p"));
                    let c = build_shift(n, op).unwrap();
                    assert!(c.is_evaluated());
                    assert_eq!(c.apply(&t).unwrap(), eval_seq(&rho, &f).unwrap());
                }
            }
        }
    }

    #[test]
    fn boolean_examples() {
        let all = build_boolean(3, BoolOp::Or, &seq("1,1,1")).unwrap();
        assert_eq!(all.output_kinds(), vec![GateKind::One; 3]);
        let id = build_boolean(3, BoolOp::And, &seq("1,1,1")).unwrap();
        for t in all_seqs(3) {
            assert_eq!(id.apply(&t).unwrap(), t);
        }
        let or = build_boolean(3, BoolOp::Or, &seq("0,1,0")).unwrap();
        assert_eq!(or.apply(&seq("1,0,0")).unwrap(), seq("1,1,0"));
        assert_eq!(
            build_boolean(3, BoolOp::Or, &seq("0,1")).unwrap_err(),
            BuildError::ArityMismatch { expected: 3, found: 2 }
        );
    }

    #[test]
    fn literal_reads_back() {
        let rho = Path::from_columns(&[("p", &seq("1,1,1")), ("q", &seq("0,1,0"))]).unwrap();
        let pos = build_literal(&rho, &Literal::positive("p")).unwrap();
        assert_eq!(pos.output_kinds(), vec![GateKind::One; 3]);
        assert_eq!(pos.input_arity(), 0);
        let neg = build_literal(&rho, &Literal::negative("q")).unwrap();
        assert_eq!(neg.constant_outputs().unwrap(), seq("1,0,1"));
        assert!(build_literal(&rho, &Literal::positive("c")).is_err());
    }

    #[test]
    fn until_right_known_small() {
        let t = build_unbounded(3, TemporalOp::Until, Side::Right, &seq("0,0,1")).unwrap();
        let c = t.circuit();
        let o: Vec<Gate> = t.outputs().iter().map(|&g| c.gate(g)).collect();
        assert_eq!(o[0], Gate::And(GateId(0), GateId(4)));
        assert_eq!(o[1], Gate::Id(GateId(1)));
        assert_eq!(o[2], Gate::Const(true));
        assert_eq!(t.apply(&seq("1,1,0")).unwrap(), seq("1,1,1"));
    }

    #[test]
    fn until_left_known_false_is_right() {
        let t = build_unbounded(4, TemporalOp::Until, Side::Left, &seq("0,0,0,0")).unwrap();
        for (i, &g) in t.outputs().iter().enumerate() {
            assert_eq!(t.circuit().gate(g), Gate::Id(t.inputs()[i]));
        }
    }

    #[test]
    fn release_right_known_small() {
        let t = build_unbounded(3, TemporalOp::Release, Side::Right, &seq("1,1,0")).unwrap();
        let o: Vec<Gate> = t.outputs().iter().map(|&g| t.circuit().gate(g)).collect();
        assert_eq!(o[2], Gate::Const(false));
        assert_eq!(o[1], Gate::Id(GateId(1)));
        assert_eq!(o[0], Gate::Or(GateId(0), GateId(4)));
    }

    #[test]
    fn zero_bound_is_right_operand() {
        for op in TemporalOp::ALL {
            for known in all_seqs(4) {
                for input in all_seqs(4) {
                    let left = build_bounded(4, op, 0, Side::Left, &known).unwrap();
                    assert_eq!(left.apply(&input).unwrap(), input);
                    let right = build_bounded(4, op, 0, Side::Right, &known).unwrap();
                    assert_eq!(right.apply(&input).unwrap(), known);
                }
            }
        }
    }

    #[test]
    fn collapsed_layout_golden() {
        use GateKind::*;
        let s = seq("0,1,0,0,0,0,0,1");
        let raw = layout::collapsed(TemporalOp::Until, 3, &s);
        assert_eq!(raw.output_kinds(), vec![And, One, Zero, Zero, And, And, And, One]);
        // chains end in the constant outputs, which evaluation folds away
        let built = build_bounded(8, TemporalOp::Until, 3, Side::Right, &s).unwrap();
        assert_eq!(built.output_kinds(), vec![Id, One, Zero, Zero, And, And, Id, One]);
        assert_eq!(built.gate_count(), raw.gate_count());
        for t in all_seqs(8) {
            assert_eq!(built.apply(&t).unwrap(), raw.apply(&t).unwrap());
        }
    }

    #[test]
    fn grid_layout_golden() {
        let s = seq("0,1,0,1,1,1,0,1");
        let raw = layout::grid(TemporalOp::Until, 3, &s);
        let built = build_bounded(8, TemporalOp::Until, 3, Side::Left, &s).unwrap();
        assert_eq!(built.gate_count(), 32);
        for j in 0..=3 {
            for i in 0..8 {
                let id = GateId(j * 8 + i);
                let expected = if j == 3 {
                    Gate::Var
                } else if s.get(i) && i < 7 {
                    Gate::Or(GateId((j + 1) * 8 + i), GateId((j + 1) * 8 + i + 1))
                } else {
                    Gate::Id(GateId((j + 1) * 8 + i))
                };
                assert_eq!(raw.circuit().gate(id), expected, "g({i},{j})");
                assert_eq!(built.circuit().gate(id).kind(), expected.kind(), "g({i},{j})");
            }
        }
        for t in all_seqs(8) {
            assert_eq!(built.apply(&t).unwrap(), raw.apply(&t).unwrap());
        }
    }
}
