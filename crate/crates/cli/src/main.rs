mod args;
mod commands;
mod error;
mod output;
mod sweep;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};
use error::CliResult;

fn run(command: &Command) -> CliResult<String> {
    match command {
        Command::Equilibrium(a) => commands::equilibrium_cmd(a),
        Command::Simulate(a) => commands::simulate_cmd(a),
        Command::Stability(a) => commands::stability_cmd(a),
        Command::TwoPhase(a) => commands::two_phase_cmd(a),
        Command::Sweep(a) => sweep::sweep_cmd(a),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(&cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
