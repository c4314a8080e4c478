use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use twogroups::cli::{self, RunConfig};

fn main() -> ExitCode {
    let outcome = match RunConfig::try_parse() {
        Ok(config) => {
            let outcome = cli::run(&config);
            if let (Some(path), 0 | 1) = (&config.output_path, outcome.code) {
                if let Err(e) = std::fs::write(path, &outcome.report) {
                    eprintln!("error: writing {}: {e}", path.display());
                    return ExitCode::from(2);
                }
                return ExitCode::from(outcome.code as u8);
            }
            outcome
        }
        Err(e) => e.exit(),
    };
    let code = outcome.code as u8;
    let written = if code == 2 {
        std::io::stderr().write_all(outcome.report.as_bytes())
    } else {
        std::io::stdout().write_all(outcome.report.as_bytes())
    };
    if written.is_err() {
        return ExitCode::from(2);
    }
    ExitCode::from(code)
}
