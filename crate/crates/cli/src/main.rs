// Copyright 2026 The unum-rs Authors
// SPDX-License-Identifier: Apache-2.0

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use unum::alu::AluState;
use unum::axpy::{footprint_report, run_axpy_with, AxpySchedule, Lane, LaneResult};
use unum::oracle::{run_suite, Suite, SuiteOptions};
use unum::{CoverPolicy, Environment};

#[derive(Parser)]
#[command(name = "unum", version, about = "Unum arithmetic tools")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the y <- a*x + y accumulation study and write per-iteration CSV.
    Axpy(AxpyArgs),
    /// Check the operations against brute-force ground truth.
    Oracle(OracleArgs),
    /// Execute an ALU command script ("-" reads standard input).
    Alu {
        script: PathBuf,
        /// Environment of the register file.
        #[arg(long, default_value = "4,5")]
        env: Environment,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Cover {
    FewestBits,
    Narrowest,
}

#[derive(clap::Args)]
struct AxpyArgs {
    #[arg(long, value_delimiter = ',', default_value = "f16,f32,u3.4,u4.5")]
    lanes: Vec<Lane>,
    /// Iterations in phases I, II and III.
    #[arg(long, value_delimiter = ',', default_value = "40,40,40")]
    iters: Vec<usize>,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Unify the unum accumulators every K iterations.
    #[arg(long, value_name = "K")]
    unify_every: Option<usize>,
    /// How unify ranks competing covers.
    #[arg(long, value_enum, default_value = "fewest-bits")]
    cover: Cover,
    /// CSV destination; "-" writes to standard output.
    #[arg(long)]
    out: PathBuf,
    /// Print the per-phase footprint summary to standard error.
    #[arg(long)]
    report: bool,
}

#[derive(clap::Args)]
struct OracleArgs {
    #[arg(long, default_value = "2,2")]
    env: Environment,
    #[arg(long, default_value = "all")]
    suite: Suite,
    /// Operand pairs for sampled add checks.
    #[arg(long, default_value_t = 100_000)]
    samples: u64,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Enumerate all operand pairs for add even in larger environments.
    #[arg(long)]
    exhaustive: bool,
}

fn write_csv<W: Write>(w: W, results: &[LaneResult]) -> csv::Result<()> {
    let mut out = csv::Writer::from_writer(w);
    out.write_record(["lane", "iteration", "phase", "bits", "rel_error", "interval_width", "overflow"])?;
    for r in results {
        let lane = r.lane.to_string();
        for s in &r.samples {
            out.write_record([
                lane.clone(),
                s.iteration.to_string(),
                s.phase.to_string(),
                s.bits.to_string(),
                format!("{:e}", s.rel_error),
                format!("{:e}", s.width_f64()),
                s.overflow.to_string(),
            ])?;
        }
    }
    out.flush()?;
    Ok(())
}

fn axpy(args: AxpyArgs) -> Result<(), String> {
    if args.iters.len() != 3 {
        return Err(format!("--iters takes three counts, got {}", args.iters.len()));
    }
    let schedule = AxpySchedule {
        iters: [args.iters[0], args.iters[1], args.iters[2]],
        seed: args.seed,
        ..Default::default()
    };
    let policy = match args.cover {
        Cover::FewestBits => CoverPolicy::FewestBits,
        Cover::Narrowest => CoverPolicy::Narrowest,
    };
    let results =
        run_axpy_with(&schedule, &args.lanes, args.unify_every, policy).map_err(|e| e.to_string())?;
    let written = if args.out.as_os_str() == "-" {
        write_csv(io::stdout().lock(), &results)
    } else {
        let file = fs::File::create(&args.out).map_err(|e| format!("{}: {e}", args.out.display()))?;
        write_csv(file, &results)
    };
    written.map_err(|e| e.to_string())?;
    if args.report {
        eprintln!("lane   phase  mean_bits  vs_f32  mean_rel_error  error_vs_f32");
        for row in footprint_report(&results) {
            eprintln!(
                "{:<6} {:<6} {:>9.2} {:>7.3} {:>15.3e} {:>13}",
                row.lane.to_string(),
                row.phase.to_string(),
                row.mean_bits,
                row.bits_vs_f32,
                row.mean_rel_error,
                row.error_vs_f32.map_or("-".to_string(), |r| format!("{r:.3e}")),
            );
        }
    }
    Ok(())
}

fn oracle(args: OracleArgs) -> Result<bool, String> {
    let opts = SuiteOptions { samples: args.samples, seed: args.seed, exhaustive: args.exhaustive };
    let reports = run_suite(args.env, args.suite, opts).map_err(|e| e.to_string())?;
    for r in &reports {
        println!("{r}");
    }
    Ok(reports.iter().all(|r| r.passed()))
}

fn alu(script: PathBuf, env: Environment) -> Result<(), String> {
    let text = if script.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(|e| e.to_string())?;
        s
    } else {
        fs::read_to_string(&script).map_err(|e| format!("{}: {e}", script.display()))?
    };
    let mut state = AluState::new(env);
    let out = state.run_script(&text).map_err(|e| e.to_string())?;
    for r in out {
        println!("{r}");
    }
    eprintln!("cycles: {}", state.cycles());
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Axpy(args) => axpy(args).map(|()| true),
        Command::Oracle(args) => oracle(args),
        Command::Alu { script, env } => alu(script, env).map(|()| true),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
