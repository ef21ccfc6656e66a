use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use sat_compat::harness::{compare, mine, GenParams, MineOptions};
use sat_compat::oracle::DEFAULT_VAR_LIMIT;
use sat_compat::{
    brute_force_sat, parse_dimacs, reduce_to_1sat, reduce_to_2sat, run_formula, CnfFormula, Outcome,
};

#[derive(Parser)]
#[command(
    name = "sat-compat",
    version,
    about = "SAT reduction via compatibility matrices, refereed by brute force"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    #[value(name = "2sat")]
    TwoSat,
    #[value(name = "1sat")]
    OneSat,
}

#[derive(Subcommand)]
enum Command {
    /// Emit the 2-SAT or 1-SAT reduction as DIMACS
    Reduce {
        input: PathBuf,
        #[arg(long)]
        to: Target,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Engine verdict; exit 10 = SAT, 20 = UNSAT
    Solve {
        input: PathBuf,
        /// Print the elimination trace
        #[arg(long)]
        trace: bool,
    },
    /// Brute-force verdict; exit 10 = SAT, 20 = UNSAT
    Oracle { input: PathBuf },
    /// Mine counterexamples over generated instances
    Mine {
        #[arg(long)]
        vars: u32,
        #[arg(long)]
        clauses: usize,
        #[arg(long)]
        width: usize,
        #[arg(long, conflicts_with = "exhaustive", requires = "count")]
        seed: Option<u64>,
        #[arg(long, conflicts_with = "exhaustive", requires = "seed")]
        count: Option<usize>,
        #[arg(long, required_unless_present = "seed")]
        exhaustive: bool,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Print one comparison record as JSON
    Verify { input: PathBuf },
}

fn read_cnf(path: &Path) -> Result<CnfFormula, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_dimacs(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn verdict_exit(outcome: Outcome) -> ExitCode {
    match outcome {
        Outcome::Sat => {
            println!("s SATISFIABLE");
            ExitCode::from(10)
        }
        Outcome::Unsat => {
            println!("s UNSATISFIABLE");
            ExitCode::from(20)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Reduce { input, to, output } => {
            let f = read_cnf(&input)?;
            let text = match to {
                Target::TwoSat => reduce_to_2sat(&f).to_dimacs(),
                Target::OneSat => reduce_to_1sat(&f).to_dimacs(),
            };
            fs::write(&output, text).map_err(|e| format!("{}: {e}", output.display()))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Solve { input, trace } => {
            let f = read_cnf(&input)?;
            let run = run_formula(&f);
            if trace {
                print!("{}", run.trace_text());
            }
            println!("c stage {}", run.verdict.stage);
            Ok(verdict_exit(run.outcome()))
        }
        Command::Oracle { input } => {
            let f = read_cnf(&input)?;
            let result = brute_force_sat(&f, DEFAULT_VAR_LIMIT).map_err(|e| e.to_string())?;
            if let Some(model) = &result.model {
                let lits: Vec<String> = model
                    .bindings()
                    .map(|(v, b)| if b { v.to_string() } else { format!("-{v}") })
                    .collect();
                println!("v {} 0", lits.join(" "));
            }
            Ok(verdict_exit(result.verdict))
        }
        Command::Mine {
            vars,
            clauses,
            width,
            seed,
            count,
            exhaustive,
            output,
        } => {
            let params = if exhaustive {
                GenParams::exhaustive(vars, clauses, width)
            } else {
                GenParams::random(vars, clauses, width, seed.unwrap_or(0), count.unwrap_or(0))
            };
            let report = mine(&params, &MineOptions::default()).map_err(|e| e.to_string())?;
            fs::write(&output, report.to_json()).map_err(|e| format!("{}: {e}", output.display()))?;
            eprintln!(
                "instances={} us={} iffClaimViolations={} counterexamples={}",
                report.totals.sum(),
                report.totals.us,
                report.iff_claim_violations,
                report.counterexample_total
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { input } => {
            let f = read_cnf(&input)?;
            let record = compare(&f, DEFAULT_VAR_LIMIT).map_err(|e| e.to_string())?;
            println!(
                "{}",
                serde_json::to_string_pretty(&record).expect("record serializes")
            );
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
