//! The `p7` command-line tool.
//!
//! Exit codes: 0 on success, 1 for data errors (unmappable characters,
//! malformed or inadmissible cipher text, invalid UTF-8), 2 for usage
//! errors (bad flags, unreadable files, malformed square files).

pub mod args;
mod chunks;

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Read, Write};
use std::path::Path;

use clap::Parser;
use p7_core::{
    format_square_file, parse_square_file, square_from_keyword, CipherFormatter, CipherLexer,
    Error, NormalizationPolicy, Normalizer, Renderer, Square, Validator, Violation, SIDE,
};

pub use args::{Cli, CliConfig, CommandKind, SquareSource};
use chunks::for_each_chunk;

pub const EXIT_OK: i32 = 0;
pub const EXIT_DATA: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Data(String),
    /// Violations already written as diagnostics.
    Reported,
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Data(_) | CliError::Reported => EXIT_DATA,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Data(e.to_string())
    }
}

fn write_failed(e: io::Error) -> CliError {
    CliError::Data(format!("write failed: {e}"))
}

/// Parses `args` (including the program name) and runs the command.
pub fn main_with_args<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = stderr.write_all(rendered.as_bytes());
            } else {
                let _ = stdout.write_all(rendered.as_bytes());
            }
            return e.exit_code();
        }
    };
    run(&CliConfig::from(cli), stdin, stdout, stderr)
}

/// Runs a resolved configuration, returning the process exit code.
pub fn run(
    config: &CliConfig,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32 {
    match execute(config, stdin, stdout, stderr) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            match &e {
                CliError::Usage(msg) | CliError::Data(msg) => {
                    let _ = writeln!(stderr, "p7: {msg}");
                }
                CliError::Reported => {}
            }
            e.exit_code()
        }
    }
}

fn execute(
    config: &CliConfig,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<(), CliError> {
    let square = load_square(&config.square)?;
    match config.command {
        CommandKind::Square => {
            let text = if config.emit {
                format_square_file(&square)
            } else {
                format_grid(&square)
            };
            return stdout.write_all(text.as_bytes()).map_err(write_failed);
        }
        CommandKind::Validate => {
            let mut input = open_input(config.input.as_deref(), stdin)?;
            return validate(&square, &mut input, stderr);
        }
        CommandKind::Encode | CommandKind::Decode => {}
    }

    let mut input = open_input(config.input.as_deref(), stdin)?;
    let mut file_out;
    let output: &mut dyn Write = match config.output.as_deref() {
        Some(path) if path != Path::new("-") => {
            let f = File::create(path)
                .map_err(|e| CliError::Usage(format!("cannot create {}: {e}", path.display())))?;
            file_out = BufWriter::new(f);
            &mut file_out
        }
        _ => stdout,
    };
    let mut output = BufWriter::new(output);
    if config.command == CommandKind::Encode {
        encode(
            &square,
            config.on_unknown,
            config.wrap,
            &mut input,
            &mut output,
            stderr,
        )?;
    } else {
        decode(&square, &mut input, &mut output, stderr)?;
    }
    output.flush().map_err(write_failed)
}

fn load_square(source: &SquareSource) -> Result<Square, CliError> {
    match source {
        SquareSource::Canonical => Ok(Square::canonical()),
        SquareSource::Keyword(k) => Ok(square_from_keyword(k)),
        SquareSource::File(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
            parse_square_file(&text)
                .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
        }
    }
}

fn open_input<'a>(
    path: Option<&Path>,
    stdin: &'a mut dyn Read,
) -> Result<Box<dyn Read + 'a>, CliError> {
    match path {
        Some(p) if p != Path::new("-") => {
            let f = File::open(p)
                .map_err(|e| CliError::Usage(format!("cannot open {}: {e}", p.display())))?;
            Ok(Box::new(f))
        }
        _ => Ok(Box::new(stdin)),
    }
}

fn encode(
    square: &Square,
    policy: NormalizationPolicy,
    wrap: usize,
    input: &mut dyn Read,
    output: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<(), CliError> {
    let mut normalizer = Normalizer::new(policy)?;
    let mut formatter = CipherFormatter::new(wrap);
    let mut buf = String::new();
    for_each_chunk(input, |chunk| {
        normalizer.push_str(chunk, &mut |t| {
            formatter.push(square.code_of(t).value(), &mut buf)
        })?;
        output.write_all(buf.as_bytes()).map_err(write_failed)?;
        buf.clear();
        Ok(())
    })?;
    normalizer.finish(&mut |t| formatter.push(square.code_of(t).value(), &mut buf))?;
    buf.push('\n');
    output.write_all(buf.as_bytes()).map_err(write_failed)?;

    let unmapped = normalizer.unmapped();
    if unmapped > 0 {
        let action = match policy {
            NormalizationPolicy::Replace(t) => format!("replaced with {t}"),
            _ => "skipped".to_string(),
        };
        let _ = writeln!(stderr, "p7: {unmapped} unmappable character(s) {action}");
    }
    Ok(())
}

/// Reads numbers and checks admissibility, calling `on_token` for each
/// accepted code until the first violation. Returns every violation.
fn scan(
    square: &Square,
    input: &mut dyn Read,
    mut on_token: impl FnMut(p7_core::Token) -> Result<(), CliError>,
) -> Result<Vec<Violation>, CliError> {
    let mut lexer = CipherLexer::new();
    let mut validator = Validator::new(square);
    let mut violations = Vec::new();
    let mut step = |value: u8, violations: &mut Vec<Violation>| -> Result<(), CliError> {
        match validator.push(value) {
            Ok(t) if violations.is_empty() => on_token(t),
            Ok(_) => Ok(()),
            Err(v) => {
                violations.push(v);
                Ok(())
            }
        }
    };
    let mut pending: Result<(), CliError> = Ok(());
    for_each_chunk(input, |chunk| {
        lexer.push_str(chunk, &mut |v| {
            if pending.is_ok() {
                pending = step(v, &mut violations);
            }
        })?;
        std::mem::replace(&mut pending, Ok(()))
    })?;
    lexer.finish(&mut |v| {
        if pending.is_ok() {
            pending = step(v, &mut violations);
        }
    })?;
    pending?;
    violations.extend(validator.finish());
    Ok(violations)
}

fn report(violations: &[Violation], stderr: &mut dyn Write) -> Result<(), CliError> {
    if violations.is_empty() {
        return Ok(());
    }
    for v in violations {
        let _ = writeln!(stderr, "{v}");
    }
    Err(CliError::Reported)
}

fn decode(
    square: &Square,
    input: &mut dyn Read,
    output: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<(), CliError> {
    let mut renderer = Renderer::new();
    let mut buf = String::new();
    let violations = scan(square, input, |t| {
        renderer.push(t, &mut buf)?;
        if buf.len() >= 8192 {
            output.write_all(buf.as_bytes()).map_err(write_failed)?;
            buf.clear();
        }
        Ok(())
    })?;
    output.write_all(buf.as_bytes()).map_err(write_failed)?;
    report(&violations, stderr)?;
    Ok(renderer.finish()?)
}

fn validate(square: &Square, input: &mut dyn Read, stderr: &mut dyn Write) -> Result<(), CliError> {
    let violations = scan(square, input, |_| Ok(()))?;
    report(&violations, stderr)
}

/// Human-readable grid with row labels `L1..L7` and column labels `C1..C7`.
pub fn format_grid(square: &Square) -> String {
    let width = square
        .layout()
        .iter()
        .map(|t| t.name().chars().count())
        .max()
        .unwrap_or(1)
        + 2;
    let mut out = String::new();
    let mut line = format!("{:<4}", "");
    for col in 1..=SIDE {
        line.push_str(&format!("{:<width$}", format!("C{col}")));
    }
    out.push_str(line.trim_end());
    out.push('\n');
    for row in 1..=SIDE {
        let mut line = format!("{:<4}", format!("L{row}"));
        for t in square.row(row) {
            line.push_str(&format!("{:<width$}", t.name()));
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str], input: &str) -> (i32, String, String) {
        let mut stdin = input.as_bytes();
        let mut stdout = Vec::new();
        let mut stderr = Vec::new();
        let mut argv = vec!["p7"];
        argv.extend_from_slice(args);
        let code = main_with_args(argv, &mut stdin, &mut stdout, &mut stderr);
        (
            code,
            String::from_utf8(stdout).unwrap(),
            String::from_utf8(stderr).unwrap(),
        )
    }

    #[test]
    fn encode_romania() {
        assert_eq!(
            run_args(&["encode"], "România"),
            (0, "54 34 31 26 51 27 22 11\n".into(), String::new())
        );
    }

    #[test]
    fn encode_empty_input() {
        assert_eq!(run_args(&["encode"], ""), (0, "\n".into(), String::new()));
    }

    #[test]
    fn encode_wraps_at_sixteen_by_default() {
        let (code, out, _) = run_args(&["encode"], &"a".repeat(20));
        assert_eq!(code, 0);
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines.len(), 2);
        assert_eq!(lines[0].split(' ').count(), 16);
        let (_, out, _) = run_args(&["encode", "--wrap", "0"], &"a".repeat(20));
        assert_eq!(out.lines().count(), 1);
    }

    #[test]
    fn encode_unknown_character() {
        let (code, out, err) = run_args(&["encode"], "ab7");
        assert_eq!(code, 1);
        assert!(err.contains("index 2"), "{err}");
        assert!(!out.ends_with('\n'));
    }

    #[test]
    fn encode_skip_and_replace_report_counts() {
        let (code, out, err) = run_args(&["encode", "--on-unknown", "skip"], "a1b2");
        assert_eq!((code, out.as_str()), (0, "11 12\n"));
        assert_eq!(err, "p7: 2 unmappable character(s) skipped\n");
        let (code, out, err) = run_args(&["encode", "--on-unknown", "replace=QUESTION"], "a1");
        assert_eq!((code, out.as_str()), (0, "11 62\n"));
        assert!(err.contains("replaced with QUESTION"));
        let (code, _, _) = run_args(&["encode", "--on-unknown", "replace=UPPER"], "a");
        assert_eq!(code, 2);
    }

    #[test]
    fn decode_reports_bad_upper_target() {
        let (code, out, err) = run_args(&["decode"], "11 54 62 27 11");
        assert_eq!(code, 1);
        assert_eq!(out, "a");
        assert!(err.starts_with("index 2: BAD_UPPER_TARGET"), "{err}");
    }

    #[test]
    fn decode_ignores_trailing_whitespace() {
        assert_eq!(
            run_args(&["decode"], "54 34 31 26 51 27 22 11\n\n  "),
            (0, "România".into(), String::new())
        );
    }

    #[test]
    fn decode_malformed_number() {
        let (code, _, err) = run_args(&["decode"], "11 115");
        assert_eq!(code, 1);
        assert!(err.contains("token 1"), "{err}");
    }

    #[test]
    fn validate_outputs() {
        assert_eq!(
            run_args(&["validate"], "54 15 37 13 25 22 14"),
            (0, String::new(), String::new())
        );
        let (code, out, err) = run_args(&["validate"], "54 55 08 54");
        assert_eq!(code, 1);
        assert!(out.is_empty());
        let lines: Vec<&str> = err.lines().collect();
        assert_eq!(lines.len(), 3);
        assert!(lines[0].starts_with("index 1: BAD_UPPER_TARGET"));
        assert!(lines[1].starts_with("index 2: BAD_DIGITS"));
        assert!(lines[2].starts_with("index 3: TRAILING_UPPER"));
    }

    #[test]
    fn keyed_round_trip() {
        let (_, cipher, _) = run_args(&["encode", "--key", "Polybius"], "Șase și „ceva”!");
        assert_ne!(cipher, run_args(&["encode"], "Șase și „ceva”!").1);
        let (code, text, _) = run_args(&["decode", "--key", "Polybius"], &cipher);
        assert_eq!((code, text.as_str()), (0, "Șase și „ceva”!"));
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_args(&["frobnicate"], "").0, 2);
        assert_eq!(run_args(&["encode", "--wrap", "-1"], "").0, 2);
        assert_eq!(
            run_args(&["encode", "--key", "k", "--square-file", "f"], "").0,
            2
        );
        assert_eq!(run_args(&["validate", "--wrap", "3"], "").0, 2);
        assert_eq!(run_args(&["decode", "/nonexistent/in.txt"], "").0, 2);
        assert_eq!(
            run_args(&["square", "--square-file", "/nonexistent"], "").0,
            2
        );
        assert_eq!(run_args(&["--help"], "").0, 0);
    }

    #[test]
    fn square_grid() {
        let (code, out, _) = run_args(&["square"], "");
        assert_eq!(code, 0);
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines.len(), 8);
        assert!(lines[0].starts_with("    C1"));
        assert!(lines[1].starts_with("L1  a "));
        assert!(lines[5].contains("UPPER"));
        // columns line up: "C4" sits above "UPPER"
        let column = |line: &str, needle: &str| line[..line.find(needle).unwrap()].chars().count();
        assert_eq!(column(lines[5], "UPPER"), column(lines[0], "C4"));
    }

    #[test]
    fn square_emit_loads_back() {
        let (code, out, _) = run_args(&["square", "--emit", "--key", "zebra"], "");
        assert_eq!(code, 0);
        let sq = parse_square_file(&out).unwrap();
        assert_eq!(sq, square_from_keyword(&"zebra".into()));
    }
}
