use std::path::PathBuf;
use std::process::ExitCode;

use clap::Args;
use pathcheck::builder::{Operator, Side};
use pathcheck::{BoolSeq, TransducerCircuit};

use crate::check::stage_dots;
use crate::{resolve_workers, write, CliError, FormulaSource, TraceSource};

#[derive(Args, Debug)]
pub struct DotArgs {
    /// Builder operator: U, R, S, T with optional bound (`U[3]`), X, wX,
    /// Y, wY, `&` or `|`.
    #[arg(long, conflicts_with_all = ["formula", "formula_file", "trace"])]
    pub op: Option<String>,
    /// Which operand's sequence is known.
    #[arg(long, default_value = "right")]
    pub side: Side,
    /// Known operand sequence, e.g. 0,1,0,0.
    #[arg(long)]
    pub seq: Option<BoolSeq>,
    /// Path length; must match the length of --seq when both are given.
    #[arg(long)]
    pub n: Option<usize>,
    /// Emit the builder's evaluated output instead of the raw construction.
    #[arg(long)]
    pub evaluated: bool,
    #[command(flatten)]
    pub formula: FormulaSource,
    #[command(flatten)]
    pub trace: TraceSource,
    #[arg(long)]
    pub workers: Option<usize>,
    /// Output file; stdout when absent.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

fn builder_circuit(args: &DotArgs, op: &str) -> Result<TransducerCircuit, CliError> {
    let op: Operator = op.parse().map_err(CliError::Usage)?;
    let n = match (&args.seq, args.n) {
        (Some(s), Some(n)) if s.len() != n => {
            return Err(CliError::Usage(format!("--seq has length {}, but --n is {n}", s.len())));
        }
        (Some(s), _) => s.len(),
        (None, Some(n)) => n,
        (None, None) => return Err(CliError::Usage("one of --seq or --n is required".into())),
    };
    let built = if args.evaluated {
        op.build(n, args.side, args.seq.as_ref())
    } else {
        op.layout(n, args.side, args.seq.as_ref())
    };
    built.map_err(|e| CliError::Usage(e.to_string()))
}

pub fn run(args: &DotArgs) -> Result<ExitCode, CliError> {
    let dot = match &args.op {
        Some(op) => {
            let name = format!("{op} {} {}", args.side.name(), args.seq.as_ref().map_or(String::new(), |s| s.to_string()));
            builder_circuit(args, op)?.to_dot(name.trim())
        }
        None if args.formula.is_given() => {
            let f = args.formula.load()?;
            let rho = args.trace.load()?;
            stage_dots(&f, &rho, resolve_workers(args.workers)?)?.0.concat()
        }
        None => return Err(CliError::Usage("give either --op or --formula with --trace".into())),
    };
    match &args.output {
        Some(path) => write(path, &dot)?,
        None => print!("{dot}"),
    }
    Ok(ExitCode::SUCCESS)
}

#[cfg(test)]
mod tests {
    use super::*;
    use pathcheck::builder;
    use pathcheck::formula::TemporalOp;

    #[test]
    fn evaluated_matches_builder() {
        let s: BoolSeq = "0,1,0,0,0,0,0,1".parse().unwrap();
        for side in [Side::Left, Side::Right] {
            let args = DotArgs {
                op: Some("U[3]".into()),
                side,
                seq: Some(s.clone()),
                n: None,
                evaluated: true,
                formula: FormulaSource::default(),
                trace: TraceSource {
                    trace: None,
                    format: Default::default(),
                },
                workers: None,
                output: None,
            };
            let built = builder::build_bounded(8, TemporalOp::Until, 3, side, &s).unwrap();
            assert_eq!(builder_circuit(&args, "U[3]").unwrap(), built);
        }
    }
}
