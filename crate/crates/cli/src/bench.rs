use std::io;
use std::process::ExitCode;
use std::time::Instant;

use clap::Args;
use pathcheck::contraction::{check_with, CheckOptions, Engine};
use pathcheck::generate::{GenConfig, Generator};

use crate::CliError;

pub const HEADER: [&str; 8] = [
    "formula_size",
    "path_length",
    "leaves",
    "workers",
    "engine",
    "stages",
    "satisfied",
    "wall_us",
];

#[derive(Args, Debug)]
pub struct BenchArgs {
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Formula sizes in syntax-tree nodes.
    #[arg(long, value_delimiter = ',', default_value = "5,20,80")]
    pub sizes: Vec<usize>,
    /// Path lengths.
    #[arg(long, value_delimiter = ',', default_value = "16,64,256")]
    pub lengths: Vec<usize>,
    #[arg(long, value_delimiter = ',', default_value = "1,2,4,8")]
    pub workers: Vec<usize>,
    #[arg(long, value_delimiter = ',', default_value = "circuit,naive")]
    pub engines: Vec<Engine>,
    /// Largest bound drawn for bounded operators.
    #[arg(long, default_value_t = 10)]
    pub max_bound: usize,
}

pub fn run(args: &BenchArgs) -> Result<ExitCode, CliError> {
    if args.workers.contains(&0) || args.lengths.contains(&0) || args.sizes.contains(&0) {
        return Err(CliError::Usage("sizes, lengths and workers must be positive".into()));
    }
    let cfg = GenConfig {
        max_bound: args.max_bound,
        ..GenConfig::default()
    };
    let mut g = Generator::new(args.seed, cfg);
    let mut out = csv::Writer::from_writer(io::stdout().lock());
    let csv_err = |e: csv::Error| CliError::Output(e.to_string());
    out.write_record(HEADER).map_err(csv_err)?;
    for &size in &args.sizes {
        for &len in &args.lengths {
            let f = g.formula_with(size);
            let rho = g.path_with(len);
            for &engine in &args.engines {
                // the naive engine ignores workers
                let workers: &[usize] = if engine == Engine::Naive { &[1] } else { &args.workers };
                for &w in workers {
                    let options = CheckOptions {
                        engine,
                        workers: w,
                        ..CheckOptions::default()
                    };
                    let start = Instant::now();
                    let o = check_with(&f, &rho, &options)?;
                    let us = start.elapsed().as_micros();
                    out.write_record([
                        f.size().to_string(),
                        len.to_string(),
                        o.leaves.to_string(),
                        w.to_string(),
                        engine.name().to_string(),
                        o.stages.len().to_string(),
                        o.satisfied.to_string(),
                        us.to_string(),
                    ])
                    .map_err(csv_err)?;
                }
            }
        }
    }
    out.flush().map_err(|e| CliError::Output(e.to_string()))?;
    Ok(ExitCode::SUCCESS)
}
