use std::io::Write;
use std::process::ExitCode;

use bisector_cli::args::Cli;
use bisector_cli::commands::{run, EXIT_CHECK_FAILED, EXIT_USAGE};
use clap::Parser;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    let outcome = run(&cli);
    let written = match &cli.out {
        Some(path) => std::fs::write(path, &outcome.stdout),
        None => std::io::stdout().write_all(outcome.stdout.as_bytes()),
    };
    eprint!("{}", outcome.stderr);
    if let Err(e) = written {
        eprintln!("error: cannot write report: {e}");
        return ExitCode::from(EXIT_CHECK_FAILED);
    }
    ExitCode::from(outcome.code)
}
