//! Path checking for linear-time temporal logic with past-time and bounded
//! operators.
//!
//! A formula is brought into positive normal form, its bounds are pruned to
//! the path length, and the resulting syntax tree is turned into a
//! contraction tree whose edges carry evaluated monotone transducer circuits.
//! Leaves are contracted into their parents stage by stage until a single
//! circuit remains; reading off its outputs yields the value of the formula
//! at every path position.
//!
//! The [`semantics`] module is a deliberately naive evaluator that serves as
//! the reference for every other route.

pub mod builder;
pub mod circuit;
pub mod contraction;
pub mod formula;
pub mod generate;
mod pool;
pub mod selftest;
pub mod semantics;
pub mod trace;

pub use circuit::{Circuit, Gate, GateId, TransducerCircuit};
pub use contraction::{check, CheckOutcome, ContractionTree, Engine};
pub use formula::Formula;
pub use trace::{BoolSeq, Path};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] formula::ParseError),
    #[error(transparent)]
    Trace(#[from] trace::TraceError),
    #[error(transparent)]
    Circuit(#[from] circuit::CircuitError),
    #[error(transparent)]
    Build(#[from] builder::BuildError),
    #[error(transparent)]
    Contraction(#[from] contraction::ContractionError),
    #[error("position {position} out of range for path of length {len}")]
    PositionOutOfRange { position: usize, len: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
