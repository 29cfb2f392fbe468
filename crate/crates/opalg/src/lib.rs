//! File formats, JSON reports and the `opalg` command line on top of
//! [`opalg_core`].

pub mod cli;
pub mod commands;
pub mod error;
pub mod io;
pub mod report;

use std::fs;

use cli::{Cli, Command};
use error::{CliError, Result};
use report::Report;

pub fn run_command(cli: &Cli) -> Result<Report> {
    let g = &cli.global;
    if !(g.tol.is_finite() && g.tol > 0.0) {
        return Err(CliError::Usage(format!("--tol must be positive, got {}", g.tol)));
    }
    match &cli.command {
        Command::Manifold(a) => commands::manifold(a, g),
        Command::Clifford(a) => commands::clifford(a, g),
        Command::SolveEinstein(a) => commands::solve_einstein(a, g),
        Command::Gns(a) => commands::gns(a, g),
        Command::Dynamics(a) => commands::dynamics(a, g),
        Command::States(a) => commands::states(a, g),
        Command::Constants => Ok(commands::constants()),
    }
}

/// Runs the command, writes the report and returns the exit code.
pub fn run(cli: &Cli) -> Result<u8> {
    let report = run_command(cli)?;
    let text = report.render();
    match &cli.global.out {
        Some(path) => fs::write(path, text).map_err(|source| CliError::Write { path: path.clone(), source })?,
        None => print!("{text}"),
    }
    Ok(if report.pass() { 0 } else { 1 })
}
