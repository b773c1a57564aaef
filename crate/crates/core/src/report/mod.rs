//! The `jordan-strata` command-line front end, as a library.
//!
//! Each command builds a [`Report`] and an exit status; rendering and I/O
//! are kept apart so the commands can be tested without a process.

mod commands;
mod render;

use std::path::PathBuf;

use num_rational::BigRational;
use thiserror::Error;

use crate::certify::default_interval;
use crate::solve::{DEFAULT_GRID_N, DEFAULT_TOL};

pub use commands::{cmd_bounds, cmd_certify, cmd_minimax, cmd_plot_data, cmd_verify, VERIFY_POINTS};
pub use render::{format_sig, render, Cell, Format, Report, Table};

pub const EXIT_OK: u8 = 0;
pub const EXIT_MISMATCH: u8 = 1;
pub const EXIT_CERTIFICATE: u8 = 2;
pub const EXIT_USAGE: u8 = 3;

pub const MAX_TOL: f64 = 1e-3;
pub const MIN_GRID_N: usize = 64;
pub const MAX_GRID_N: usize = 1 << 20;
pub const DEFAULT_DIGITS: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Command {
    Bounds,
    Minimax,
    Certify,
    Verify,
    PlotData,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Bounds => "bounds",
            Command::Minimax => "minimax",
            Command::Certify => "certify",
            Command::Verify => "verify",
            Command::PlotData => "plot-data",
        }
    }

    pub fn default_format(self) -> Format {
        match self {
            Command::PlotData => Format::Csv,
            _ => Format::Markdown,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConfigError {
    #[error("--tol must lie in (0, {MAX_TOL}], got {0}")]
    Tol(f64),
    #[error("--grid-n must lie in [{MIN_GRID_N}, {MAX_GRID_N}], got {0}")]
    GridN(usize),
    #[error("--digits must lie in [1, 17], got {0}")]
    Digits(usize),
    #[error("--interval must be `lo,hi` with rationals 0 <= lo < hi, got {0:?}")]
    Interval(String),
}

#[derive(Debug, Clone, PartialEq)]
pub struct ReportConfig {
    pub command: Command,
    pub format: Format,
    pub tol: f64,
    pub grid_n: usize,
    pub output_path: Option<PathBuf>,
    /// Significant digits of printed numbers.
    pub digits: usize,
    /// Seed of the random parameter draws in `verify`.
    pub seed: u64,
    /// Certification interval for `certify`.
    pub interval: (BigRational, BigRational),
    /// Runs `certify` with a deliberately lowered truncation degree, which
    /// must fail.
    pub tamper: bool,
}

impl ReportConfig {
    pub fn new(command: Command) -> Self {
        Self {
            command,
            format: command.default_format(),
            tol: DEFAULT_TOL,
            grid_n: DEFAULT_GRID_N,
            output_path: None,
            digits: DEFAULT_DIGITS,
            seed: 0,
            interval: default_interval(),
            tamper: false,
        }
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        if !(self.tol > 0.0 && self.tol <= MAX_TOL) {
            return Err(ConfigError::Tol(self.tol));
        }
        if !(MIN_GRID_N..=MAX_GRID_N).contains(&self.grid_n) {
            return Err(ConfigError::GridN(self.grid_n));
        }
        if !(1..=17).contains(&self.digits) {
            return Err(ConfigError::Digits(self.digits));
        }
        Ok(())
    }
}

/// Parses `lo,hi` with each side an integer or `n/d`.
pub fn parse_interval(s: &str) -> Result<(BigRational, BigRational), ConfigError> {
    let err = || ConfigError::Interval(s.to_string());
    let (a, b) = s.split_once(',').ok_or_else(err)?;
    let lo: BigRational = a.trim().parse().map_err(|_| err())?;
    let hi: BigRational = b.trim().parse().map_err(|_| err())?;
    if lo < BigRational::from_integer(0.into()) || lo >= hi {
        return Err(err());
    }
    Ok((lo, hi))
}

#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub report: Report,
    pub exit: u8,
}

impl Outcome {
    pub fn render(&self, config: &ReportConfig) -> String {
        render(&self.report, config.format, config.digits, config.command.name(), self.exit)
    }
}

/// Runs the configured command. Invalid configurations map to
/// [`EXIT_USAGE`] with the message in the error.
pub fn run(config: &ReportConfig) -> Result<Outcome, ConfigError> {
    config.validate()?;
    Ok(match config.command {
        Command::Bounds => cmd_bounds(config),
        Command::Minimax => cmd_minimax(config),
        Command::Certify => cmd_certify(config),
        Command::Verify => cmd_verify(config),
        Command::PlotData => cmd_plot_data(config),
    })
}
