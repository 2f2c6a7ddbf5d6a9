//! Command-line front end: argument parsing, subcommand dispatch and report
//! rendering for `nccr-core`.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use nccr_core::{ConeError, DecisionError, DimerError, GroupError};
use serde_json::Value;
use thiserror::Error;

mod commands;
mod render;

pub use commands::{cmd_dimer, cmd_generate, cmd_mckay, cmd_steady, cmd_toric};

#[derive(Debug, Parser)]
#[command(name = "nccr", version, about = "Decide steady and splitting NCCRs of toric and abelian quotient singularities")]
pub struct RunConfig {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Class group, quotient presentation and NCCR conditions of a cone file.
    Toric { input: PathBuf },
    /// Consistency, polygon and steady verdict of a dimer model file.
    Dimer(DimerArgs),
    /// Write the hexagonal dimer model of a diagonal SL(3) action.
    Generate(GenerateArgs),
    /// Print the McKay quiver of a diagonal SL(3) action as DOT.
    Mckay(GroupArgs),
    /// Test whether a set of classes is a subgroup and whether it generates.
    Steady(SteadyArgs),
}

#[derive(Debug, Args)]
pub struct DimerArgs {
    pub input: PathBuf,
    /// Write the dual quiver in DOT format.
    #[arg(long, value_name = "PATH")]
    pub emit_dot: Option<PathBuf>,
    /// Write the lattice points and hull of the polygon.
    #[arg(long, value_name = "PATH")]
    pub emit_polygon: Option<PathBuf>,
    /// Bound on the number of perfect matchings enumerated.
    #[arg(long, value_name = "N", value_parser = clap::value_parser!(u64).range(1..))]
    pub max_matchings: Option<u64>,
}

#[derive(Debug, Args)]
pub struct GroupArgs {
    /// Group as `Z/d1 + Z/d2 …` or a bare list of factors (`14`, `2,2`).
    #[arg(long)]
    pub group: String,
    /// Three weights, e.g. `1,5,8` or `(1,0),(0,1),(1,1)`.
    #[arg(long)]
    pub weights: String,
    #[arg(long, value_name = "PATH")]
    pub emit_dot: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[command(flatten)]
    pub action: GroupArgs,
    /// Destination of the dimer model file.
    #[arg(long, short, value_name = "PATH")]
    pub output: PathBuf,
}

#[derive(Debug, Args)]
pub struct SteadyArgs {
    #[arg(long)]
    pub group: String,
    /// Class list, e.g. `0,2` or `(0,0),(1,0)`.
    #[arg(long, allow_hyphen_values = true)]
    pub classes: String,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("internal fault: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Internal(_) => 1,
        }
    }
}

impl From<GroupError> for CliError {
    fn from(e: GroupError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<ConeError> for CliError {
    fn from(e: ConeError) -> Self {
        match e {
            ConeError::Internal(m) => CliError::Internal(m),
            e => CliError::Input(e.to_string()),
        }
    }
}

impl From<DimerError> for CliError {
    fn from(e: DimerError) -> Self {
        match e {
            DimerError::Cone(c) => c.into(),
            e => CliError::Input(e.to_string()),
        }
    }
}

impl From<DecisionError> for CliError {
    fn from(e: DecisionError) -> Self {
        match e {
            DecisionError::Internal(m) => CliError::Internal(m),
            DecisionError::Cone(c) => c.into(),
            DecisionError::Dimer(d) => d.into(),
            e => CliError::Input(e.to_string()),
        }
    }
}

/// A rendered report in both formats.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub text: String,
    pub json: Value,
}

impl Report {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text.clone(),
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("values serialize");
                s.push('\n');
                s
            }
        }
    }
}

pub fn run(config: &RunConfig) -> Result<String, CliError> {
    let report = match &config.command {
        Command::Toric { input } => cmd_toric(input)?,
        Command::Dimer(args) => cmd_dimer(args)?,
        Command::Generate(args) => cmd_generate(args)?,
        Command::Mckay(args) => cmd_mckay(args)?,
        Command::Steady(args) => cmd_steady(args)?,
    };
    Ok(report.render(config.format))
}

fn read_input(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))
}

fn write_output(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents).map_err(|e| CliError::Input(format!("cannot write {}: {e}", path.display())))
}
