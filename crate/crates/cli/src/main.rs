use std::process::ExitCode;

use clap::Parser;
use homquiver_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli).and_then(|r| {
        match &cli.command.config().out_path {
            Some(path) => std::fs::write(path, &r.body)?,
            None => print!("{}", r.body),
        }
        Ok(r.status)
    });
    match result {
        Ok(status) => ExitCode::from(status as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
