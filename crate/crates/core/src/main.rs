use std::io::{ErrorKind, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};

use jordan_strata::report::{self, parse_interval, Command, Format, ReportConfig, EXIT_USAGE};

#[derive(Debug, Clone, Copy, ValueEnum)]
enum CliCommand {
    /// Deviations of the classical upper and lower bounds
    Bounds,
    /// Minimax parameters and boundary constants
    Minimax,
    /// Exact sign certificates of the two polynomial lemmas
    Certify,
    /// Grid checks of the two-sided bounds
    Verify,
    /// Family curves for plotting
    PlotData,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum CliFormat {
    Csv,
    Markdown,
    Json,
}

/// Stratified Jordan-type bounds for sinc x on (0, pi/2).
#[derive(Debug, Parser)]
#[command(name = "jordan-strata", version)]
struct Cli {
    #[arg(value_enum)]
    command: CliCommand,
    /// Output format (markdown by default, csv for plot-data)
    #[arg(long, value_enum)]
    format: Option<CliFormat>,
    /// Root and extremum tolerance, in (0, 1e-3]
    #[arg(long, default_value_t = jordan_strata::solve::DEFAULT_TOL)]
    tol: f64,
    /// Sample count of the grid scans, in [64, 2^20]
    #[arg(long, default_value_t = jordan_strata::solve::DEFAULT_GRID_N)]
    grid_n: usize,
    /// Write the report here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    /// Significant digits of printed numbers
    #[arg(long, default_value_t = report::DEFAULT_DIGITS)]
    digits: usize,
    /// Seed for the random parameter draws of `verify`
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Certification interval `lo,hi` with rational endpoints
    #[arg(long, default_value = "0,8/5")]
    interval: String,
    /// Certify with a lowered truncation degree (negative control; must fail)
    #[arg(long)]
    tamper: bool,
}

fn config(cli: &Cli) -> Result<ReportConfig, report::ConfigError> {
    let command = match cli.command {
        CliCommand::Bounds => Command::Bounds,
        CliCommand::Minimax => Command::Minimax,
        CliCommand::Certify => Command::Certify,
        CliCommand::Verify => Command::Verify,
        CliCommand::PlotData => Command::PlotData,
    };
    let mut c = ReportConfig::new(command);
    if let Some(f) = cli.format {
        c.format = match f {
            CliFormat::Csv => Format::Csv,
            CliFormat::Markdown => Format::Markdown,
            CliFormat::Json => Format::Json,
        };
    }
    c.tol = cli.tol;
    c.grid_n = cli.grid_n;
    c.output_path = cli.out.clone();
    c.digits = cli.digits;
    c.seed = cli.seed;
    c.interval = parse_interval(&cli.interval)?;
    c.tamper = cli.tamper;
    Ok(c)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    let config = match config(&cli) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    let outcome = match report::run(&config) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    let text = outcome.render(&config);
    match &config.output_path {
        Some(path) => {
            if let Err(e) = std::fs::write(path, text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(EXIT_USAGE);
            }
        }
        None => {
            let mut out = std::io::stdout().lock();
            match out.write_all(text.as_bytes()).and_then(|()| out.flush()) {
                Ok(()) => {}
                Err(e) if e.kind() == ErrorKind::BrokenPipe => {}
                Err(e) => {
                    eprintln!("error: cannot write to stdout: {e}");
                    return ExitCode::from(EXIT_USAGE);
                }
            }
        }
    }
    ExitCode::from(outcome.exit)
}
