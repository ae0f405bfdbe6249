//! Mapping between Unicode text and token streams.
//!
//! [`Normalizer`] turns text into tokens one chunk at a time; [`Renderer`]
//! does the reverse. Both keep only a few bytes of state between chunks so
//! they can sit behind a streaming reader.

use std::fmt;
use std::str::FromStr;

use unicode_normalization::char::is_combining_mark;
use unicode_normalization::UnicodeNormalization;

use super::token::Token;
use crate::error::Error;

/// What to do with a character that has no token.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum NormalizationPolicy {
    /// Abort with [`Error::UnknownCharacter`].
    #[default]
    Error,
    /// Drop the character.
    Skip,
    /// Emit the given token instead. Must not be [`Token::Upper`].
    Replace(Token),
}

impl NormalizationPolicy {
    pub fn check(self) -> Result<Self, Error> {
        match self {
            NormalizationPolicy::Replace(Token::Upper) => Err(Error::InvalidPolicy),
            p => Ok(p),
        }
    }
}

impl fmt::Display for NormalizationPolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NormalizationPolicy::Error => f.write_str("error"),
            NormalizationPolicy::Skip => f.write_str("skip"),
            NormalizationPolicy::Replace(t) => write!(f, "replace={t}"),
        }
    }
}

/// Parses `error`, `skip` or `replace=TOKEN`.
impl FromStr for NormalizationPolicy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "error" => Ok(NormalizationPolicy::Error),
            "skip" => Ok(NormalizationPolicy::Skip),
            _ => match s.strip_prefix("replace=") {
                Some(name) => NormalizationPolicy::Replace(name.parse()?).check(),
                None => Err(Error::InvalidPolicySyntax(s.to_string())),
            },
        }
    }
}

/// Result of mapping one composed character.
enum Mapped {
    Token(Token),
    Capital(Token),
    Nothing,
    Unknown,
}

fn fold_cedilla(c: char) -> char {
    match c {
        'ş' => 'ș',
        'ţ' => 'ț',
        'Ş' => 'Ș',
        'Ţ' => 'Ț',
        c => c,
    }
}

fn capital_letter(c: char) -> Option<Token> {
    let index = match c {
        'A'..='Z' => c as usize - 'A' as usize,
        'Ă' => 26,
        'Î' => 27,
        'Â' => 28,
        'Ș' => 29,
        'Ț' => 30,
        _ => return None,
    };
    Token::from_index(index)
}

fn symbol(c: char) -> Option<Token> {
    Some(match c {
        ' ' | '\t' => Token::Space,
        '/' => Token::Newline,
        ',' => Token::Comma,
        '-' | '\u{2010}' | '\u{2011}' => Token::Hyphen,
        '?' => Token::Question,
        '!' => Token::Exclam,
        '\u{201E}' | '\u{201C}' => Token::QuoteOpen,
        '\u{201D}' => Token::QuoteClose,
        ';' => Token::Semicolon,
        '\u{2013}' | '\u{2014}' => Token::Dash,
        '.' => Token::Period,
        ':' => Token::Colon,
        '\'' | '\u{2019}' => Token::Apostrophe,
        '(' => Token::ParenOpen,
        ')' => Token::ParenClose,
        '&' => Token::Ampersand,
        '@' => Token::At,
        _ => return None,
    })
}

/// Incremental text-to-token converter.
///
/// Input is composed (NFC) one combining sequence at a time, so a base
/// character is held back until the next non-combining character or
/// [`Normalizer::finish`].
#[derive(Debug, Clone)]
pub struct Normalizer {
    policy: NormalizationPolicy,
    cluster: String,
    cluster_start: usize,
    next_index: usize,
    after_cr: bool,
    quote_open: bool,
    unmapped: usize,
}

impl Normalizer {
    pub fn new(policy: NormalizationPolicy) -> Result<Normalizer, Error> {
        Ok(Normalizer {
            policy: policy.check()?,
            cluster: String::new(),
            cluster_start: 0,
            next_index: 0,
            after_cr: false,
            quote_open: false,
            unmapped: 0,
        })
    }

    /// Number of characters dropped or replaced so far.
    pub fn unmapped(&self) -> usize {
        self.unmapped
    }

    /// Feeds a chunk of text. Chunks may split combining sequences and CRLF pairs.
    pub fn push_str<F: FnMut(Token)>(&mut self, text: &str, emit: &mut F) -> Result<(), Error> {
        for c in text.chars() {
            self.push_char(c, emit)?;
        }
        Ok(())
    }

    pub fn push_char<F: FnMut(Token)>(&mut self, c: char, emit: &mut F) -> Result<(), Error> {
        let index = self.next_index;
        self.next_index += 1;
        if !self.cluster.is_empty() && is_combining_mark(c) {
            self.cluster.push(c);
            return Ok(());
        }
        self.flush(emit)?;
        self.cluster.push(c);
        self.cluster_start = index;
        Ok(())
    }

    /// Flushes the held-back character. The normalizer can keep being used
    /// afterwards; quote pairing state carries over.
    pub fn finish<F: FnMut(Token)>(&mut self, emit: &mut F) -> Result<(), Error> {
        self.flush(emit)
    }

    fn flush<F: FnMut(Token)>(&mut self, emit: &mut F) -> Result<(), Error> {
        if self.cluster.is_empty() {
            return Ok(());
        }
        let cluster = std::mem::take(&mut self.cluster);
        let mut chars = cluster.chars();
        let result = match (chars.next(), chars.next()) {
            (Some(c), None) if c.is_ascii() => self.map_one(c, emit),
            _ => cluster
                .nfc()
                .try_for_each(|c| self.map_one(fold_cedilla(c), emit)),
        };
        // Reuse the allocation.
        self.cluster = cluster;
        self.cluster.clear();
        result
    }

    fn map_one<F: FnMut(Token)>(&mut self, c: char, emit: &mut F) -> Result<(), Error> {
        let after_cr = std::mem::replace(&mut self.after_cr, false);
        let mapped = match c {
            '\n' if after_cr => Mapped::Nothing,
            '\n' => Mapped::Token(Token::Newline),
            '\r' => {
                self.after_cr = true;
                Mapped::Token(Token::Newline)
            }
            '"' if self.quote_open => Mapped::Token(Token::QuoteClose),
            '"' => Mapped::Token(Token::QuoteOpen),
            c => {
                if let Some(t) = Token::from_letter_char(c) {
                    Mapped::Token(t)
                } else if let Some(t) = capital_letter(c) {
                    Mapped::Capital(t)
                } else if let Some(t) = symbol(c) {
                    Mapped::Token(t)
                } else {
                    Mapped::Unknown
                }
            }
        };
        match mapped {
            Mapped::Token(t) => self.emit(t, emit),
            Mapped::Capital(t) => {
                emit(Token::Upper);
                emit(t);
            }
            Mapped::Nothing => {}
            Mapped::Unknown => match self.policy {
                NormalizationPolicy::Error => {
                    return Err(Error::UnknownCharacter {
                        ch: c,
                        index: self.cluster_start,
                    })
                }
                NormalizationPolicy::Skip => self.unmapped += 1,
                NormalizationPolicy::Replace(t) => {
                    self.unmapped += 1;
                    self.emit(t, emit);
                }
            },
        }
        Ok(())
    }

    fn emit<F: FnMut(Token)>(&mut self, t: Token, emit: &mut F) {
        match t {
            Token::QuoteOpen => self.quote_open = true,
            Token::QuoteClose => self.quote_open = false,
            _ => {}
        }
        emit(t);
    }
}

/// Converts a whole string to tokens.
///
/// Uppercase letters become `[Upper, letter]`; `\n`, `\r\n` and `/` become
/// `Newline`; cedilla forms of ș and ț are folded to comma-below.
pub fn normalize(text: &str, policy: NormalizationPolicy) -> Result<Vec<Token>, Error> {
    let mut normalizer = Normalizer::new(policy)?;
    let mut tokens = Vec::with_capacity(text.len());
    let mut emit = |t| tokens.push(t);
    normalizer.push_str(text, &mut emit)?;
    normalizer.finish(&mut emit)?;
    Ok(tokens)
}

/// Canonical output character of a non-`Upper` token.
pub fn render_char(t: Token) -> Option<char> {
    if let Some(c) = t.letter_char() {
        return Some(c);
    }
    Some(match t {
        Token::Space => ' ',
        Token::Newline => '\n',
        Token::Comma => ',',
        Token::Hyphen => '-',
        Token::Question => '?',
        Token::Exclam => '!',
        Token::QuoteOpen => '\u{201E}',
        Token::QuoteClose => '\u{201D}',
        Token::Semicolon => ';',
        Token::Dash => '\u{2013}',
        Token::Period => '.',
        Token::Colon => ':',
        Token::Apostrophe => '\u{2019}',
        Token::ParenOpen => '(',
        Token::ParenClose => ')',
        Token::Ampersand => '&',
        Token::At => '@',
        _ => return None,
    })
}

/// Incremental token-to-text converter. Holds back at most one `Upper`.
#[derive(Debug, Clone, Default)]
pub struct Renderer {
    pending_upper: Option<usize>,
    index: usize,
}

impl Renderer {
    pub fn new() -> Renderer {
        Renderer::default()
    }

    pub fn push(&mut self, t: Token, out: &mut String) -> Result<(), Error> {
        let index = self.index;
        self.index += 1;
        if self.pending_upper.take().is_some() {
            return match t.upper_char() {
                Some(c) => {
                    out.push(c);
                    Ok(())
                }
                None => Err(Error::InvalidTokenStream { index }),
            };
        }
        match render_char(t) {
            Some(c) => out.push(c),
            None => self.pending_upper = Some(index),
        }
        Ok(())
    }

    /// Fails if the stream ended on `Upper`.
    pub fn finish(&mut self) -> Result<(), Error> {
        match self.pending_upper.take() {
            Some(index) => Err(Error::InvalidTokenStream { index }),
            None => Ok(()),
        }
    }
}

/// Renders a token stream as text, capitalising the letter after each `Upper`.
pub fn render(tokens: &[Token]) -> Result<String, Error> {
    let mut renderer = Renderer::new();
    let mut out = String::with_capacity(tokens.len());
    for &t in tokens {
        renderer.push(t, &mut out)?;
    }
    renderer.finish()?;
    Ok(out)
}
