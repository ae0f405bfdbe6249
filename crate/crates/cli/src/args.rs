use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use p7_core::{Keyword, NormalizationPolicy};

/// Encode and decode Romanian text with the extended 7x7 Polybius square.
///
/// This is a classroom cipher, not a way to keep secrets.
#[derive(Debug, Parser)]
#[command(name = "p7", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Turn text into cipher numbers.
    Encode {
        #[command(flatten)]
        key: KeyArgs,
        /// What to do with characters outside the alphabet: error, skip or replace=TOKEN.
        #[arg(long, value_name = "POLICY", default_value = "error", value_parser = parse_policy)]
        on_unknown: NormalizationPolicy,
        /// Numbers per output line; 0 writes a single line.
        #[arg(long, value_name = "N", default_value_t = 16)]
        wrap: usize,
        /// Output file (default: standard output).
        #[arg(short = 'o', value_name = "OUT")]
        output: Option<PathBuf>,
        /// Input file (default: standard input).
        #[arg(value_name = "IN")]
        input: Option<PathBuf>,
    },
    /// Turn cipher numbers back into text.
    Decode {
        #[command(flatten)]
        key: KeyArgs,
        #[arg(short = 'o', value_name = "OUT")]
        output: Option<PathBuf>,
        #[arg(value_name = "IN")]
        input: Option<PathBuf>,
    },
    /// Check that a cipher sequence is admissible. Prints nothing when it is.
    Validate {
        #[command(flatten)]
        key: KeyArgs,
        #[arg(value_name = "IN")]
        input: Option<PathBuf>,
    },
    /// Show the square as a grid, or as a square file with --emit.
    Square {
        #[command(flatten)]
        key: KeyArgs,
        #[arg(long)]
        emit: bool,
    },
}

#[derive(Debug, Clone, Default, Args)]
pub struct KeyArgs {
    /// Derive the square from a keyword.
    #[arg(long, value_name = "K", conflicts_with = "square_file")]
    pub key: Option<String>,
    /// Load the square from a file (49 tokens, one per line).
    #[arg(long, value_name = "PATH")]
    pub square_file: Option<PathBuf>,
}

fn parse_policy(s: &str) -> Result<NormalizationPolicy, String> {
    s.parse().map_err(|e: p7_core::Error| e.to_string())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CommandKind {
    Encode,
    Decode,
    Validate,
    Square,
}

/// Where the square comes from.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub enum SquareSource {
    #[default]
    Canonical,
    Keyword(Keyword),
    File(PathBuf),
}

/// Fully resolved invocation.
#[derive(Debug, Clone)]
pub struct CliConfig {
    pub command: CommandKind,
    pub square: SquareSource,
    pub on_unknown: NormalizationPolicy,
    pub wrap: usize,
    pub emit: bool,
    /// `None` or `-` means standard input.
    pub input: Option<PathBuf>,
    /// `None` or `-` means standard output.
    pub output: Option<PathBuf>,
}

impl CliConfig {
    pub fn new(command: CommandKind) -> CliConfig {
        CliConfig {
            command,
            square: SquareSource::Canonical,
            on_unknown: NormalizationPolicy::Error,
            wrap: 16,
            emit: false,
            input: None,
            output: None,
        }
    }
}

impl From<KeyArgs> for SquareSource {
    fn from(k: KeyArgs) -> Self {
        match (k.key, k.square_file) {
            (Some(key), _) => SquareSource::Keyword(Keyword::new(key)),
            (None, Some(path)) => SquareSource::File(path),
            (None, None) => SquareSource::Canonical,
        }
    }
}

impl From<Cli> for CliConfig {
    fn from(cli: Cli) -> Self {
        match cli.command {
            Command::Encode {
                key,
                on_unknown,
                wrap,
                output,
                input,
            } => CliConfig {
                square: key.into(),
                on_unknown,
                wrap,
                output,
                input,
                ..CliConfig::new(CommandKind::Encode)
            },
            Command::Decode { key, output, input } => CliConfig {
                square: key.into(),
                output,
                input,
                ..CliConfig::new(CommandKind::Decode)
            },
            Command::Validate { key, input } => CliConfig {
                square: key.into(),
                input,
                ..CliConfig::new(CommandKind::Validate)
            },
            Command::Square { key, emit } => CliConfig {
                square: key.into(),
                emit,
                ..CliConfig::new(CommandKind::Square)
            },
        }
    }
}
