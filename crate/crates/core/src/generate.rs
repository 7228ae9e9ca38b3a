//! Seeded random formulas, paths, and circuits.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::circuit::{Circuit, Gate, GateId, TransducerCircuit};
use crate::formula::{BoolOp, Formula, ShiftOp, TemporalOp};
use crate::trace::Path;

pub const ALPHABET: [&str; 4] = ["a", "b", "c", "d"];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenConfig {
    /// Upper bound on formula nodes (bounds do not count).
    pub max_nodes: usize,
    pub max_len: usize,
    pub max_bound: usize,
}

impl Default for GenConfig {
    fn default() -> Self {
        GenConfig {
            max_nodes: 20,
            max_len: 50,
            max_bound: 10,
        }
    }
}

/// Probability of drawing a bounded temporal operator at an inner node.
const BOUNDED_BIAS: f64 = 0.2;
/// Probability that a leaf is `true` or `false` rather than a proposition.
const CONSTANT_LEAF: f64 = 0.05;

pub struct Generator {
    rng: ChaCha8Rng,
    config: GenConfig,
}

impl Generator {
    pub fn new(seed: u64, config: GenConfig) -> Self {
        Generator {
            rng: ChaCha8Rng::seed_from_u64(seed),
            config,
        }
    }

    /// Generator for case `index` of a campaign. Cases are independent of
    /// each other, so any case can be regenerated on its own.
    pub fn for_case(seed: u64, index: u64, config: GenConfig) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(index);
        Generator { rng, config }
    }

    pub fn config(&self) -> GenConfig {
        self.config
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    /// A formula with between 1 and `max_nodes` nodes.
    pub fn formula(&mut self) -> Formula {
        let nodes = self.rng.gen_range(1..=self.config.max_nodes.max(1));
        self.formula_with(nodes)
    }

    /// A formula with exactly `nodes` nodes.
    pub fn formula_with(&mut self, nodes: usize) -> Formula {
        if nodes <= 1 {
            return self.leaf();
        }
        let rest = nodes - 1;
        if rest >= 2 && self.rng.gen_bool(BOUNDED_BIAS) {
            let op = *TemporalOp::ALL.choose(&mut self.rng).unwrap();
            let bound = self.rng.gen_range(0..=self.config.max_bound);
            let (l, r) = self.split(rest);
            return Formula::temporal(op, Some(bound), l, r);
        }
        // unary: Not and the four shifts; binary: two Boolean and four temporal
        let choice = if rest >= 2 {
            self.rng.gen_range(0..11)
        } else {
            self.rng.gen_range(0..5)
        };
        match choice {
            0 => Formula::not(self.formula_with(rest)),
            1..=4 => Formula::shift(ShiftOp::ALL[choice - 1], self.formula_with(rest)),
            5 | 6 => {
                let op = if choice == 5 { BoolOp::And } else { BoolOp::Or };
                let (l, r) = self.split(rest);
                Formula::Bool(op, Box::new(l), Box::new(r))
            }
            _ => {
                let (l, r) = self.split(rest);
                Formula::temporal(TemporalOp::ALL[choice - 7], None, l, r)
            }
        }
    }

    fn split(&mut self, nodes: usize) -> (Formula, Formula) {
        let left = self.rng.gen_range(1..nodes);
        (self.formula_with(left), self.formula_with(nodes - left))
    }

    fn leaf(&mut self) -> Formula {
        if self.rng.gen_bool(CONSTANT_LEAF) {
            Formula::constant(self.rng.gen())
        } else {
            Formula::atom(*ALPHABET.choose(&mut self.rng).unwrap())
        }
    }

    /// A path of length between 1 and `max_len` over [`ALPHABET`].
    pub fn path(&mut self) -> Path {
        let len = self.rng.gen_range(1..=self.config.max_len.max(1));
        self.path_with(len)
    }

    pub fn path_with(&mut self, len: usize) -> Path {
        let rows = (0..len)
            .map(|_| (0..ALPHABET.len()).map(|_| self.rng.gen()).collect())
            .collect();
        Path::from_rows(ALPHABET.iter().map(|s| s.to_string()).collect(), rows).expect("generated paths are valid")
    }

    /// A formula whose syntax tree has exactly `leaves` literal leaves joined
    /// by Boolean and temporal operators, with a random shape.
    pub fn tree_formula(&mut self, leaves: usize) -> Formula {
        if leaves <= 1 {
            return self.leaf();
        }
        let left = self.rng.gen_range(1..leaves);
        let l = self.tree_formula(left);
        let r = self.tree_formula(leaves - left);
        match self.rng.gen_range(0..3) {
            0 => Formula::and(l, r),
            1 => Formula::or(l, r),
            _ => Formula::temporal(*TemporalOp::ALL.choose(&mut self.rng).unwrap(), None, l, r),
        }
    }

    /// A random monotone transducer with the given interface sizes and
    /// `extra` non-variable gates. Outputs are distinct gates. The result
    /// is not necessarily evaluated.
    pub fn transducer(&mut self, inputs: usize, outputs: usize, extra: usize) -> TransducerCircuit {
        let mut c = Circuit::new();
        let mut ids: Vec<GateId> = Vec::new();
        let mut ins = Vec::with_capacity(inputs);
        for _ in 0..inputs {
            let v = c.push(Gate::Var);
            ins.push(v);
            ids.push(v);
        }
        let total = extra.max(outputs.saturating_sub(inputs));
        for _ in 0..total {
            let gate = if ids.is_empty() || self.rng.gen_bool(0.1) {
                Gate::Const(self.rng.gen())
            } else {
                let a = *ids.choose(&mut self.rng).unwrap();
                let b = *ids.choose(&mut self.rng).unwrap();
                match self.rng.gen_range(0..3) {
                    0 => Gate::And(a, b),
                    1 => Gate::Or(a, b),
                    _ => Gate::Id(a),
                }
            };
            ids.push(c.push(gate));
        }
        let mut pool = ids.clone();
        pool.shuffle(&mut self.rng);
        pool.truncate(outputs);
        TransducerCircuit::new(c, ins, pool).expect("generated transducer is well formed")
    }
}
