use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;
use stern_cli::{budget_from_env, run, Cli, CliError};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let result = budget_from_env().and_then(|budget| run(cli, &budget, &mut out));
    let _ = out.flush();
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(CliError::Verification) => ExitCode::from(1),
        Err(e) => {
            eprintln!("stern: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
