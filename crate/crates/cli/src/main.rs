use std::process::ExitCode;

use clap::Parser;
use scmap_cli::{run, Args};

fn main() -> ExitCode {
    let args = Args::parse();
    match run(&args) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("scmap: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
