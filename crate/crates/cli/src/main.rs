use std::io::{self, Write};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use drg_spectral_cli::{run, Cli, EXIT_USAGE};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(EXIT_USAGE),
            };
        }
    };
    match run(&cli, &mut io::stdin().lock()) {
        Ok(outcome) => {
            let mut out = io::stdout().lock();
            if out
                .write_all(outcome.stdout.as_bytes())
                .and_then(|_| out.flush())
                .is_err()
            {
                return ExitCode::from(drg_spectral_cli::EXIT_SOFTWARE);
            }
            ExitCode::from(outcome.code)
        }
        Err(e) => {
            eprintln!("drg-spectral: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
