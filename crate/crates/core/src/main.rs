use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use su2_holevo::cli::{
    OutputFormat, SweepSpec, VerifyConfig, evaluate_point, render_csv, render_json, run_sweep,
    run_verify, uniform_grid,
};
use su2_holevo::holevo::LogBase;

#[derive(Parser)]
#[command(
    name = "su2-holevo",
    version,
    about = "Holevo quantity of SU(2)-invariant spin-j x spin-1/2 states under qubit measurements"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one (j, F) point and print a JSON summary
    Value {
        /// Spin as 2j (e.g. 1 for j = 1/2)
        #[arg(long = "two-j")]
        two_j: Option<u32>,
        /// Spin as a fraction or integer (e.g. 3/2 or 2); alternative to --two-j
        #[arg(long = "j", conflicts_with = "two_j")]
        j: Option<String>,
        /// State parameter F in [0, 1]
        #[arg(long)]
        f: f64,
        #[arg(long = "log-base", value_enum, default_value = "2")]
        log_base: LogBaseArg,
    },
    /// Tabulate chi over a uniform F grid for one or more spins
    Sweep {
        /// Comma-separated list of 2j values
        #[arg(long = "two-j", value_delimiter = ',', required = true)]
        two_j: Vec<u32>,
        #[arg(long = "f-min", default_value_t = 0.0)]
        f_min: f64,
        #[arg(long = "f-max", default_value_t = 1.0)]
        f_max: f64,
        /// Number of grid points including both endpoints
        #[arg(long, default_value_t = 101)]
        steps: usize,
        #[arg(long = "log-base", value_enum, default_value = "2")]
        log_base: LogBaseArg,
        #[arg(long, value_enum, default_value = "csv")]
        format: FormatArg,
        /// Write to this path instead of standard output
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Check closed-form vs numeric agreement, frame independence and
    /// SU(2) invariance over a grid of states and random measurement frames
    Verify {
        #[arg(long = "two-j", value_delimiter = ',', default_value = "1,2,3,4")]
        two_j: Vec<u32>,
        #[arg(long = "f-min", default_value_t = 0.0)]
        f_min: f64,
        #[arg(long = "f-max", default_value_t = 1.0)]
        f_max: f64,
        #[arg(long, default_value_t = 5)]
        steps: usize,
        /// Random measurement frames per grid point
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum LogBaseArg {
    #[value(name = "2")]
    Two,
    #[value(name = "e")]
    E,
}

impl From<LogBaseArg> for LogBase {
    fn from(arg: LogBaseArg) -> Self {
        match arg {
            LogBaseArg::Two => LogBase::Two,
            LogBaseArg::E => LogBase::E,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

impl From<FormatArg> for OutputFormat {
    fn from(arg: FormatArg) -> Self {
        match arg {
            FormatArg::Csv => OutputFormat::Csv,
            FormatArg::Json => OutputFormat::Json,
        }
    }
}

/// Parses "p/q" (q in {1, 2}) or a bare integer into 2j.
fn parse_two_j(text: &str) -> Result<u32, String> {
    let parse_part = |part: &str| {
        part.trim()
            .parse::<u32>()
            .map_err(|_| format!("cannot parse '{part}' as a positive integer"))
    };
    let two_j = match text.split_once('/') {
        None => 2 * parse_part(text)?,
        Some((num, den)) => {
            let num = parse_part(num)?;
            match parse_part(den)? {
                1 => 2 * num,
                2 => num,
                other => return Err(format!("denominator must be 1 or 2, got {other}")),
            }
        }
    };
    if two_j == 0 {
        return Err("j must be at least 1/2".into());
    }
    Ok(two_j)
}

fn run(cli: Cli) -> Result<u8, Box<dyn std::error::Error>> {
    match cli.command {
        Command::Value {
            two_j,
            j,
            f,
            log_base,
        } => {
            let two_j = match (two_j, j) {
                (Some(v), None) => v,
                (None, Some(text)) => parse_two_j(&text)?,
                (None, None) => return Err("one of --two-j or --j is required".into()),
                (Some(_), Some(_)) => unreachable!("clap rejects the conflict"),
            };
            let report = evaluate_point(two_j, f, log_base.into())?;
            println!("{}", serde_json::to_string(&report)?);
            Ok(0)
        }
        Command::Sweep {
            two_j,
            f_min,
            f_max,
            steps,
            log_base,
            format,
            output,
        } => {
            let spec = SweepSpec {
                two_j_list: two_j,
                f_min,
                f_max,
                steps,
                log_base: log_base.into(),
                output_format: format.into(),
            };
            let rows = run_sweep(&spec)?;
            let rendered = match spec.output_format {
                OutputFormat::Csv => render_csv(&rows),
                OutputFormat::Json => render_json(&spec, &rows),
            };
            match output {
                Some(path) => fs::write(&path, rendered)
                    .map_err(|e| format!("cannot write {}: {e}", path.display()))?,
                None => print!("{rendered}"),
            }
            Ok(0)
        }
        Command::Verify {
            two_j,
            f_min,
            f_max,
            steps,
            trials,
            seed,
            tol,
        } => {
            if steps < 2 {
                return Err("steps must be at least 2".into());
            }
            if !(0.0..=1.0).contains(&f_min) || !(0.0..=1.0).contains(&f_max) || f_min >= f_max {
                return Err("F bounds must satisfy 0 <= f_min < f_max <= 1".into());
            }
            let cfg = VerifyConfig {
                two_j_list: two_j,
                f_grid: uniform_grid(f_min, f_max, steps),
                trials,
                seed,
                tol,
            };
            let report = run_verify(&cfg)?;
            println!("{}", serde_json::to_string_pretty(&report)?);
            Ok(if report.pass { 0 } else { 2 })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(1)
        }
    }
}
