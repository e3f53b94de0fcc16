use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, ValueEnum};

use crate::multiplet::AlgebraTag;
use crate::rootsys::Labels;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algebra {
    SoStar,
    SoSplit,
}

impl From<Algebra> for AlgebraTag {
    fn from(a: Algebra) -> Self {
        match a {
            Algebra::SoStar => AlgebraTag::SoStar,
            Algebra::SoSplit => AlgebraTag::SoSplit,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EdgeSet {
    /// Non-composite arrows only.
    Reduced,
    /// Every BGG arrow.
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
    Table,
}

/// Build, verify, and print main multiplets of so*(2n) and so(6,6).
#[derive(Debug, Parser)]
#[command(name = "sostar", version)]
struct Cli {
    /// Real form: so*(2n) or the split so(n,n).
    #[arg(long, value_enum, default_value = "so-star")]
    algebra: Algebra,

    /// Rank n of so(2n, C); even, at least 4.
    #[arg(long, default_value_t = 6)]
    rank: usize,

    /// `symbolic`, or a comma-separated list of n positive Dynkin labels.
    #[arg(long, default_value = "symbolic")]
    labels: String,

    #[arg(long, value_enum, default_value = "reduced")]
    edges: EdgeSet,

    #[arg(long, value_enum, default_value = "table")]
    format: Format,

    /// Run the brute-force and table checks instead of printing the multiplet.
    #[arg(long)]
    verify: bool,

    /// Signature table to check against in --verify (defaults to the built-in one).
    #[arg(long, value_name = "PATH")]
    golden: Option<PathBuf>,

    /// Write to this file instead of standard output.
    #[arg(long, short, value_name = "PATH")]
    output: Option<PathBuf>,

    /// Allow --algebra so-split at ranks other than 6.
    #[arg(long)]
    allow_any_split_rank: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub algebra: AlgebraTag,
    pub rank: usize,
    pub labels: Labels,
    pub edges: EdgeSet,
    pub format: Format,
    pub verify: bool,
    pub golden: Option<PathBuf>,
    pub output: Option<PathBuf>,
}

impl RunConfig {
    pub fn new(rank: usize, labels: Labels) -> Self {
        RunConfig {
            algebra: AlgebraTag::SoStar,
            rank,
            labels,
            edges: EdgeSet::Reduced,
            format: Format::Table,
            verify: false,
            golden: None,
            output: None,
        }
    }
}

#[derive(Debug)]
pub enum ArgsError {
    /// Includes `--help` and `--version`, which are not failures.
    Clap(clap::Error),
    Usage(String),
}

impl ArgsError {
    pub fn exit_code(&self) -> i32 {
        match self {
            ArgsError::Clap(e) if !e.use_stderr() => 0,
            _ => 2,
        }
    }
}

impl std::fmt::Display for ArgsError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ArgsError::Clap(e) => write!(f, "{e}"),
            ArgsError::Usage(msg) => write!(f, "error: {msg}"),
        }
    }
}

impl std::error::Error for ArgsError {}

fn parse_labels(s: &str, rank: usize) -> Result<Labels, String> {
    if s.trim() == "symbolic" {
        return Ok(Labels::Symbolic);
    }
    let values = s
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<u64>()
                .map_err(|_| format!("label {t:?} is not a nonnegative integer"))
        })
        .collect::<Result<Vec<u64>, String>>()?;
    if values.len() != rank {
        return Err(format!(
            "rank {rank} needs {rank} labels, got {}",
            values.len()
        ));
    }
    if let Some(i) = values.iter().position(|&m| m == 0) {
        return Err(format!(
            "label m{} = 0: only positive Dynkin labels are supported",
            i + 1
        ));
    }
    Ok(Labels::Numeric(values))
}

pub fn parse_args<I, T>(argv: I) -> Result<RunConfig, ArgsError>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = Cli::try_parse_from(argv).map_err(ArgsError::Clap)?;
    if cli.rank < 4 || cli.rank % 2 != 0 {
        return Err(ArgsError::Usage(format!(
            "rank must be even and at least 4 (got {})",
            cli.rank
        )));
    }
    if cli.algebra == Algebra::SoSplit && cli.rank != 6 && !cli.allow_any_split_rank {
        return Err(ArgsError::Usage(
            "so-split is only related to so*(12) at rank 6; pass --allow-any-split-rank to override"
                .into(),
        ));
    }
    let labels = parse_labels(&cli.labels, cli.rank).map_err(ArgsError::Usage)?;
    Ok(RunConfig {
        algebra: cli.algebra.into(),
        rank: cli.rank,
        labels,
        edges: cli.edges,
        format: cli.format,
        verify: cli.verify,
        golden: cli.golden,
        output: cli.output,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &str) -> Result<RunConfig, ArgsError> {
        parse_args(std::iter::once("sostar").chain(args.split_whitespace()))
    }

    #[test]
    fn defaults() {
        let cfg = parse("").unwrap();
        assert_eq!(cfg, RunConfig::new(6, Labels::Symbolic));
    }

    #[test]
    fn full_symbolic_table() {
        let cfg = parse("--algebra so-star --rank 6 --labels symbolic --format table").unwrap();
        assert_eq!(cfg.format, Format::Table);
        assert_eq!(cfg.labels, Labels::Symbolic);
    }

    #[test]
    fn numeric_json() {
        let cfg = parse("--rank 6 --labels 1,1,1,1,1,1 --format json").unwrap();
        assert_eq!(cfg.labels, Labels::Numeric(vec![1; 6]));
        assert_eq!(cfg.format, Format::Json);
    }

    #[test]
    fn usage_errors() {
        for bad in [
            "--rank 5",
            "--rank 2",
            "--labels 1,1,1",
            "--labels 1,1,0,1,1,1",
            "--labels a,b,c,d,e,f",
            "--format svg",
            "--algebra so-split --rank 8",
            "--bogus",
        ] {
            let err = parse(bad).unwrap_err();
            assert_eq!(err.exit_code(), 2, "{bad}");
        }
        assert!(parse("--algebra so-split --rank 8 --allow-any-split-rank").is_ok());
    }

    #[test]
    fn help_is_not_a_failure() {
        assert_eq!(parse("--help").unwrap_err().exit_code(), 0);
    }
}
