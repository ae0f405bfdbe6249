//! Cipher text wire format: two-digit decimal numbers separated by whitespace.

use super::sequence::CipherSequence;
use crate::error::Error;

/// Longest lexeme kept verbatim for diagnostics.
const MAX_LEXEME: usize = 32;

/// Incremental whitespace-separated number reader.
///
/// A number split across two chunks is held until the next whitespace or
/// [`CipherLexer::finish`].
#[derive(Debug, Clone, Default)]
pub struct CipherLexer {
    partial: String,
    truncated: bool,
    index: usize,
}

impl CipherLexer {
    pub fn new() -> CipherLexer {
        CipherLexer::default()
    }

    /// Number of complete lexemes read.
    pub fn count(&self) -> usize {
        self.index
    }

    pub fn push_str<F: FnMut(u8)>(&mut self, chunk: &str, emit: &mut F) -> Result<(), Error> {
        for c in chunk.chars() {
            if c.is_whitespace() {
                self.end_lexeme(emit)?;
            } else if self.partial.len() < MAX_LEXEME {
                self.partial.push(c);
            } else {
                self.truncated = true;
            }
        }
        Ok(())
    }

    pub fn finish<F: FnMut(u8)>(&mut self, emit: &mut F) -> Result<(), Error> {
        self.end_lexeme(emit)
    }

    fn end_lexeme<F: FnMut(u8)>(&mut self, emit: &mut F) -> Result<(), Error> {
        if self.partial.is_empty() {
            return Ok(());
        }
        let index = self.index;
        self.index += 1;
        match self.partial.as_bytes() {
            [a @ b'0'..=b'9', b @ b'0'..=b'9'] if !self.truncated => {
                emit((a - b'0') * 10 + (b - b'0'));
                self.partial.clear();
                Ok(())
            }
            _ => {
                let mut lexeme = std::mem::take(&mut self.partial);
                if std::mem::take(&mut self.truncated) {
                    lexeme.push('…');
                }
                Err(Error::MalformedNumber { lexeme, index })
            }
        }
    }
}

/// Splits on any whitespace; every piece must be exactly two ASCII digits.
/// The digit range is not checked here.
pub fn parse_cipher_text(text: &str) -> Result<CipherSequence, Error> {
    let mut values = Vec::with_capacity(text.len() / 3 + 1);
    let mut lexer = CipherLexer::new();
    let mut emit = |v| values.push(v);
    lexer.push_str(text, &mut emit)?;
    lexer.finish(&mut emit)?;
    Ok(CipherSequence::new(values))
}

/// Incremental formatter: single spaces between numbers and a line break
/// after every `wrap` numbers (`wrap == 0` means one line).
#[derive(Debug, Clone)]
pub struct CipherFormatter {
    wrap: usize,
    count: usize,
}

impl CipherFormatter {
    pub fn new(wrap: usize) -> CipherFormatter {
        CipherFormatter { wrap, count: 0 }
    }

    pub fn push(&mut self, value: u8, out: &mut String) {
        if self.count > 0 {
            if self.wrap > 0 && self.count.is_multiple_of(self.wrap) {
                out.push('\n');
            } else {
                out.push(' ');
            }
        }
        self.count += 1;
        out.push(char::from(b'0' + value / 10 % 10));
        out.push(char::from(b'0' + value % 10));
    }

    pub fn count(&self) -> usize {
        self.count
    }
}

/// Formats without a trailing line break.
pub fn format_cipher_text(sequence: &CipherSequence, wrap: usize) -> String {
    let mut out = String::with_capacity(sequence.len() * 3);
    let mut formatter = CipherFormatter::new(wrap);
    for &v in sequence.values() {
        formatter.push(v, &mut out);
    }
    out
}
