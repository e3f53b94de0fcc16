use std::io::Write;
use std::process::ExitCode;

use sostar_core::cli_io::{execute, parse_args};
use sostar_core::Error;

fn main() -> ExitCode {
    let cfg = match parse_args(std::env::args_os()) {
        Ok(cfg) => cfg,
        Err(e) => {
            let code = e.exit_code();
            if code == 0 {
                print!("{e}");
            } else {
                eprintln!("{e}");
            }
            return ExitCode::from(code as u8);
        }
    };

    let golden = match &cfg.golden {
        Some(path) => match std::fs::read_to_string(path) {
            Ok(text) => Some(text),
            Err(e) => {
                eprintln!("error: cannot read {}: {e}", path.display());
                return ExitCode::from(2);
            }
        },
        None => None,
    };

    let outcome = match execute(&cfg, golden.as_deref()) {
        Ok(o) => o,
        Err(e @ (Error::OracleUnavailable(_) | Error::Fixture { .. })) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };

    let written = match &cfg.output {
        Some(path) => std::fs::write(path, &outcome.output),
        None => std::io::stdout().write_all(&outcome.output),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(1);
    }
    ExitCode::from(outcome.exit_code as u8)
}
