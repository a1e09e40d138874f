use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use sigperm_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let _ = std::io::stdout().write_all(out.stdout.as_bytes());
            let _ = std::io::stderr().write_all(out.stderr.as_bytes());
            ExitCode::from(out.outcome.exit_code())
        }
        Err(e) => {
            eprintln!("sigperm: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
