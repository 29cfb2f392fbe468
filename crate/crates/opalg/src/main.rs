use std::process::ExitCode;

use clap::Parser;
use opalg::cli::Cli;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match opalg::run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("opalg: {e}");
            ExitCode::from(2)
        }
    }
}
