use std::fmt;

use crate::alphabet::{normalize, render, Code, NormalizationPolicy, Token};
use crate::error::Error;

/// An ordered list of two-digit cipher numbers.
///
/// Values are kept as parsed (`0..=99`) so that an out-of-range number can
/// still be located and reported by [`validate`](super::validate).
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct CipherSequence(Vec<u8>);

impl CipherSequence {
    pub fn new(values: Vec<u8>) -> CipherSequence {
        CipherSequence(values)
    }

    pub fn values(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, code: Code) {
        self.0.push(code.value());
    }

    pub fn into_values(self) -> Vec<u8> {
        self.0
    }
}

impl From<Vec<Code>> for CipherSequence {
    fn from(codes: Vec<Code>) -> Self {
        CipherSequence(codes.into_iter().map(Code::value).collect())
    }
}

impl FromIterator<Code> for CipherSequence {
    fn from_iter<I: IntoIterator<Item = Code>>(iter: I) -> Self {
        CipherSequence(iter.into_iter().map(Code::value).collect())
    }
}

/// Space-separated, single line.
impl fmt::Display for CipherSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::format_cipher_text(self, 0))
    }
}

/// A normalized message: tokens with every capital expanded to `[Upper, letter]`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<Token>);

impl Word {
    /// Checks that every `Upper` is followed by a letter.
    pub fn new(tokens: Vec<Token>) -> Result<Word, Error> {
        let mut after_upper = false;
        for (index, &t) in tokens.iter().enumerate() {
            if after_upper && !t.is_letter() {
                return Err(Error::InvalidTokenStream { index });
            }
            after_upper = t == Token::Upper;
        }
        if after_upper {
            return Err(Error::InvalidTokenStream {
                index: tokens.len() - 1,
            });
        }
        Ok(Word(tokens))
    }

    /// Normalizes `text` into a word.
    pub fn from_text(text: &str, policy: NormalizationPolicy) -> Result<Word, Error> {
        Word::new(normalize(text, policy)?)
    }

    pub fn tokens(&self) -> &[Token] {
        &self.0
    }

    pub fn into_tokens(self) -> Vec<Token> {
        self.0
    }

    /// Number of capitals, i.e. `Upper` tokens.
    pub fn capitals(&self) -> usize {
        self.0.iter().filter(|&&t| t == Token::Upper).count()
    }

    /// Length of the message in characters: tokens minus capitals.
    pub fn char_len(&self) -> usize {
        self.0.len() - self.capitals()
    }

    pub fn render(&self) -> String {
        render(&self.0).expect("word invariant guarantees a renderable stream")
    }
}

impl TryFrom<Vec<Token>> for Word {
    type Error = Error;

    fn try_from(tokens: Vec<Token>) -> Result<Self, Self::Error> {
        Word::new(tokens)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Token::*;

    #[test]
    fn word_invariant() {
        assert!(Word::new(vec![]).is_ok());
        assert!(Word::new(vec![Upper, A, B]).is_ok());
        assert_eq!(
            Word::new(vec![A, Upper]),
            Err(Error::InvalidTokenStream { index: 1 })
        );
        assert_eq!(
            Word::new(vec![Upper, Comma]),
            Err(Error::InvalidTokenStream { index: 1 })
        );
    }

    #[test]
    fn word_counts() {
        let w = Word::from_text("U.V.T.", NormalizationPolicy::Error).unwrap();
        assert_eq!(w.char_len(), 6);
        assert_eq!(w.capitals(), 3);
        assert_eq!(w.tokens().len(), 9);
        let w = Word::from_text("Diana și Ana", NormalizationPolicy::Error).unwrap();
        assert_eq!((w.char_len(), w.tokens().len()), (12, 14));
        assert_eq!(w.to_string(), "Diana și Ana");
    }
}
