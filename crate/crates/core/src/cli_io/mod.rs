//! Command-line front end and serializers.

pub mod config;
pub mod dot;
pub mod json;
pub mod table;
pub mod verify;

pub use config::{parse_args, ArgsError, EdgeSet, Format, RunConfig};
pub use dot::emit_dot;
pub use json::emit_json;
pub use table::emit_table;
pub use verify::{run_verify, VerifyReport};

use crate::error::Result;
use crate::multiplet::build_multiplet;

/// Output bytes and the process exit status they go with.
#[derive(Debug)]
pub struct Outcome {
    pub output: Vec<u8>,
    pub exit_code: i32,
}

/// Everything the binary does after argument parsing, minus the I/O.
pub fn execute(cfg: &RunConfig, golden_text: Option<&str>) -> Result<Outcome> {
    if cfg.verify {
        let report = run_verify(cfg, golden_text)?;
        return Ok(Outcome {
            exit_code: if report.passed() { 0 } else { 1 },
            output: report.to_string().into_bytes(),
        });
    }
    let m = build_multiplet(cfg.rank, &cfg.labels, cfg.algebra)?;
    let output = match cfg.format {
        Format::Json => emit_json(&m, cfg.edges)?,
        Format::Dot => emit_dot(&m, cfg.edges)?,
        Format::Table => emit_table(&m, cfg.edges)?,
    };
    Ok(Outcome {
        output,
        exit_code: 0,
    })
}
