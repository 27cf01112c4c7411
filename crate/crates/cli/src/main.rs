use std::process::ExitCode;

use clap::Parser;
use coneproj_cli::args::Cli;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match coneproj_cli::run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
