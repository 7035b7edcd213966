use affroots::cli::{run, Cli};
use clap::Parser;
use std::process::ExitCode;

fn main() -> ExitCode {
    affroots::par::init_from_env();
    let cli = Cli::parse();
    let outcome = match run(cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("affroots: {}", e.0);
            return ExitCode::from(2);
        }
    };
    let written = match &outcome.out {
        Some(path) => std::fs::write(path, format!("{}\n", outcome.json)),
        None => {
            println!("{}", outcome.json);
            Ok(())
        }
    };
    if let Err(e) = written {
        eprintln!("affroots: cannot write output: {e}");
        return ExitCode::from(2);
    }
    if outcome.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
