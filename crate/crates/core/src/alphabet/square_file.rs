//! Text format for explicit square layouts.
//!
//! One token per line in row-major order, 49 entries. Letters are written
//! as their lowercase character, symbols by name (`UPPER`, `SPACE`, ...).
//! Blank lines and lines starting with `#` are ignored.

use unicode_normalization::UnicodeNormalization;

use super::square::{Position, Square};
use super::token::{Token, ALPHABET_SIZE};
use crate::error::{Error, SquareFileError};

fn parse_entry(entry: &str) -> Option<Token> {
    Token::from_name(entry).or_else(|| {
        // Accept decomposed and cedilla spellings of the letters.
        let composed: String = entry.nfc().collect();
        let mut chars = composed.chars();
        match (chars.next(), chars.next()) {
            (Some('ş'), None) => Some(Token::SComma),
            (Some('ţ'), None) => Some(Token::TComma),
            (Some(c), None) => Token::from_letter_char(c),
            _ => None,
        }
    })
}

/// Parses a square file. Line numbers in errors are 1-based.
pub fn parse_square_file(text: &str) -> Result<Square, Error> {
    let mut cells = Vec::with_capacity(ALPHABET_SIZE);
    let mut seen_at = [0usize; ALPHABET_SIZE];
    let mut last_line = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        last_line = line;
        let entry = raw.trim();
        if entry.is_empty() || entry.starts_with('#') {
            continue;
        }
        let token = parse_entry(entry).ok_or_else(|| SquareFileError::UnknownToken {
            line,
            entry: entry.to_string(),
        })?;
        if cells.len() == ALPHABET_SIZE {
            return Err(SquareFileError::TooManyEntries { line }.into());
        }
        let first = seen_at[token.index()];
        if first != 0 {
            return Err(SquareFileError::Duplicate {
                line,
                token,
                first_line: first,
            }
            .into());
        }
        seen_at[token.index()] = line;
        cells.push(token);
    }
    if cells.len() < ALPHABET_SIZE {
        let missing = Token::ALL
            .into_iter()
            .find(|t| seen_at[t.index()] == 0)
            .expect("fewer than 49 distinct tokens");
        return Err(SquareFileError::Missing {
            line: last_line + 1,
            found: cells.len(),
            token: missing,
        }
        .into());
    }
    Square::from_layout(&cells)
}

/// Writes `square` in the file format, with a comment header.
pub fn format_square_file(square: &Square) -> String {
    let mut out = String::from("# 7x7 square, one token per line, row-major\n");
    for p in Position::all() {
        if p.col() == 1 {
            out.push_str(&format!("# row {}\n", p.row()));
        }
        out.push_str(&square.token_at(p).name());
        out.push('\n');
    }
    out
}
