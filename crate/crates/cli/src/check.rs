use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::Args;
use pathcheck::contraction::{check_with, CheckOptions, Contraction, ContractionTree, Engine};
use pathcheck::{Formula, Path};

use crate::{write, CliError, EngineArgs, FormulaSource, TraceSource};

#[derive(Args, Debug)]
pub struct CheckArgs {
    #[command(flatten)]
    pub formula: FormulaSource,
    #[command(flatten)]
    pub trace: TraceSource,
    #[command(flatten)]
    pub engine: EngineArgs,
    /// Also print the formula's value at every position.
    #[arg(long)]
    pub emit_sequence: bool,
    /// Write the contraction tree after every half-stage as DOT.
    #[arg(long, value_name = "PATH")]
    pub emit_dot: Option<PathBuf>,
}

pub fn run(args: &CheckArgs) -> Result<ExitCode, CliError> {
    let f = args.formula.load()?;
    let rho = args.trace.load()?;
    let workers = args.engine.workers()?;
    if args.emit_dot.is_some() && args.engine.engine != Engine::Circuit {
        return Err(CliError::Usage("--emit-dot needs the circuit engine".into()));
    }
    let options = CheckOptions {
        engine: args.engine.engine,
        workers,
        ..CheckOptions::default()
    };
    let start = Instant::now();
    let out = check_with(&f, &rho, &options)?;
    let elapsed = start.elapsed();

    println!("{}", if out.satisfied { "SATISFIED" } else { "VIOLATED" });
    println!("engine: {}", out.engine.name());
    if out.engine == Engine::Circuit {
        println!("workers: {workers}");
        println!("leaves: {}", out.leaves);
        println!("gates built: {}", out.gates_built);
    }
    println!("stages: {}", out.stages.len());
    println!("wall time: {:.3} ms", elapsed.as_secs_f64() * 1e3);
    if args.emit_sequence {
        println!("sequence: {}", out.sequence.to_bit_string());
    }
    if let Some(path) = &args.emit_dot {
        let (dots, _) = stage_dots(&f, &rho, workers)?;
        write(path, &dots.concat())?;
    }
    Ok(ExitCode::from(if out.satisfied { 0 } else { 1 }))
}

/// One DOT digraph for the initial contraction tree and one after each
/// half-stage.
pub fn stage_dots(f: &Formula, rho: &Path, workers: usize) -> Result<(Vec<String>, Contraction), CliError> {
    let pnf = f.to_pnf().prune_bounds(rho.len());
    let tree = ContractionTree::new(&pnf, rho).map_err(pathcheck::Error::from)?;
    let mut dots = vec![tree.to_dot("initial")];
    let mut snapshots = Vec::new();
    let (_, run) = tree
        .run(workers, |t| snapshots.push(t.to_dot("")))
        .map_err(pathcheck::Error::from)?;
    let mut steps = 0;
    for (k, stage) in run.stages.iter().enumerate() {
        for (half, count) in [("left", stage.left.len()), ("right", stage.right.len())] {
            if count == 0 {
                continue;
            }
            steps += count;
            let name = format!("stage {} {half}", k + 1);
            dots.push(snapshots[steps - 1].replacen("digraph \"\"", &format!("digraph \"{name}\""), 1));
        }
    }
    Ok((dots, run))
}
