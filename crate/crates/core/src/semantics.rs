//! Reference evaluator.
//!
//! Each temporal clause is decided by enumerating its quantifiers over the
//! values of the direct subformulas. Nothing here is shared with the circuit
//! engine, so the two can be compared against each other.

use crate::formula::{Formula, ShiftOp, TemporalOp};
use crate::trace::{BoolSeq, Path};
use crate::{Error, Result};

/// `(rho, i) |= f`.
pub fn holds_at(rho: &Path, f: &Formula, i: usize) -> Result<bool> {
    if i >= rho.len() {
        return Err(Error::PositionOutOfRange {
            position: i,
            len: rho.len(),
        });
    }
    match f {
        Formula::Atom(p) => Ok(rho.holds(p, i)?),
        Formula::Not(x) => Ok(!holds_at(rho, x, i)?),
        Formula::Bool(op, l, r) => Ok(op.apply(holds_at(rho, l, i)?, holds_at(rho, r, i)?)),
        Formula::Shift(op, x) => Ok(shift_clause(*op, &eval_seq(rho, x)?.0, i)),
        Formula::Temporal {
            op,
            bound,
            left,
            right,
        } => {
            let l = eval_seq(rho, left)?;
            let r = eval_seq(rho, right)?;
            Ok(temporal_clause(*op, *bound, &l.0, &r.0, i))
        }
    }
}

/// The value of `f` at every position of `rho`.
pub fn eval_seq(rho: &Path, f: &Formula) -> Result<BoolSeq> {
    let n = rho.len();
    let bits = match f {
        Formula::Atom(p) => (0..n).map(|i| rho.holds(p, i)).collect::<Result<Vec<_>, _>>()?,
        Formula::Not(x) => eval_seq(rho, x)?.0.into_iter().map(|b| !b).collect(),
        Formula::Bool(op, l, r) => {
            let l = eval_seq(rho, l)?;
            let r = eval_seq(rho, r)?;
            (0..n).map(|i| op.apply(l.0[i], r.0[i])).collect()
        }
        Formula::Shift(op, x) => {
            let s = eval_seq(rho, x)?;
            (0..n).map(|i| shift_clause(*op, &s.0, i)).collect()
        }
        Formula::Temporal {
            op,
            bound,
            left,
            right,
        } => {
            let l = eval_seq(rho, left)?;
            let r = eval_seq(rho, right)?;
            (0..n)
                .map(|i| temporal_clause(*op, *bound, &l.0, &r.0, i))
                .collect()
        }
    };
    Ok(BoolSeq(bits))
}

fn shift_clause(op: ShiftOp, s: &[bool], i: usize) -> bool {
    let n = s.len();
    match op {
        ShiftOp::NextStrong => i + 1 < n && s[i + 1],
        ShiftOp::NextWeak => i + 1 == n || s[i + 1],
        ShiftOp::YesterdayStrong => i >= 1 && s[i - 1],
        ShiftOp::YesterdayWeak => i == 0 || s[i - 1],
    }
}

fn temporal_clause(op: TemporalOp, bound: Option<usize>, l: &[bool], r: &[bool], i: usize) -> bool {
    let n = l.len();
    match op {
        TemporalOp::Until | TemporalOp::Release => {
            let last = match bound {
                Some(b) => i.saturating_add(b).min(n - 1),
                None => n - 1,
            };
            if op == TemporalOp::Until {
                // exists j in [i, last]: r_j and forall k in [i, j): l_k
                (i..=last).any(|j| r[j] && (i..j).all(|k| l[k]))
            } else {
                // forall j in [i, last]: r_j or exists k in [i, j): l_k
                (i..=last).all(|j| r[j] || (i..j).any(|k| l[k]))
            }
        }
        TemporalOp::Since | TemporalOp::Trigger => {
            let first = match bound {
                Some(b) => i.saturating_sub(b),
                None => 0,
            };
            if op == TemporalOp::Since {
                // exists j in [first, i]: r_j and forall k in (j, i]: l_k
                (first..=i).any(|j| r[j] && (j + 1..=i).all(|k| l[k]))
            } else {
                // forall j in [first, i]: r_j or exists k in (j, i]: l_k
                (first..=i).all(|j| r[j] || (j + 1..=i).any(|k| l[k]))
            }
        }
    }
}
