use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use lisword::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let code = match run(cli, &mut out) {
        Ok(outcome) => outcome.exit_code(),
        Err(err) => {
            let _ = out.flush();
            eprintln!("error: {err}");
            err.exit_code()
        }
    };
    let _ = out.flush();
    ExitCode::from(code)
}
