use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, ValueEnum};
use pathcheck::contraction::Fault;
use pathcheck::generate::GenConfig;
use pathcheck::selftest::Campaign;

use crate::{resolve_workers, CliError};

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum FaultArg {
    SwapKnownSide,
}

#[derive(Args, Debug)]
pub struct SelftestArgs {
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 10_000)]
    pub cases: u64,
    /// Maximum formula size in syntax-tree nodes.
    #[arg(long, default_value_t = 20)]
    pub max_nodes: usize,
    /// Maximum path length.
    #[arg(long, default_value_t = 50)]
    pub max_len: usize,
    /// Maximum bound of bounded operators.
    #[arg(long, default_value_t = 10)]
    pub max_bound: usize,
    #[arg(long)]
    pub workers: Option<usize>,
    /// Skip the contraction-tree condition checks after every step.
    #[arg(long)]
    pub no_invariants: bool,
    /// Corrupt the circuit builders on purpose.
    #[arg(long, hide = true)]
    pub inject_fault: Option<FaultArg>,
}

pub fn run(args: &SelftestArgs) -> Result<ExitCode, CliError> {
    if args.max_len == 0 || args.max_nodes == 0 {
        return Err(CliError::Usage("--max-len and --max-nodes must be at least 1".into()));
    }
    let campaign = Campaign {
        seed: args.seed,
        cases: args.cases,
        gen: GenConfig {
            max_nodes: args.max_nodes,
            max_len: args.max_len,
            max_bound: args.max_bound,
        },
        workers: resolve_workers(args.workers)?,
        fault: args.inject_fault.map(|FaultArg::SwapKnownSide| Fault::SwapKnownSide),
        check_invariants: !args.no_invariants,
        max_failures: 1,
    };
    let start = Instant::now();
    let report = campaign.run_with(|case, _| {
        if (case.index + 1) % 1000 == 0 {
            eprintln!("  {} cases", case.index + 1);
        }
    });
    eprintln!("{:.1} s", start.elapsed().as_secs_f64());
    println!(
        "seed {} cases {} satisfied at position 0: {}",
        report.seed, report.cases_run, report.satisfied
    );
    let Some(d) = report.discrepancies.first() else {
        println!("PASS: circuit and naive engines agree on every case");
        return Ok(ExitCode::SUCCESS);
    };
    println!("FAIL: case {} disagrees", d.case.index);
    println!("formula: {}", d.case.formula);
    match &d.circuit {
        Ok(s) => println!("circuit: {s}"),
        Err(e) => println!("circuit: error: {e}"),
    }
    println!("naive:   {}", d.naive);
    let (f, rho) = &d.minimized;
    println!("minimized counterexample");
    println!("formula: {f}");
    println!("trace:");
    print!("{}", rho.to_csv());
    Ok(ExitCode::from(1))
}
