//! Keyed squares: rearrangements of the 49 tokens.
//!
//! A keyword square puts the keyword's distinct letters first, then the
//! remaining tokens in canonical order. Only letters move under a keyword;
//! symbols keep their canonical relative order after the letters.

use crate::alphabet::{normalize, NormalizationPolicy, Square, Token, ALPHABET_SIZE};
use crate::error::Error;

/// A raw keyword. Case, symbols and characters outside the alphabet are
/// ignored when deriving the square; the empty keyword gives the canonical one.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Keyword(String);

impl Keyword {
    pub fn new(raw: impl Into<String>) -> Keyword {
        Keyword(raw.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// Distinct letters of the keyword in first-occurrence order.
    pub fn letters(&self) -> Vec<Token> {
        let tokens =
            normalize(&self.0, NormalizationPolicy::Skip).expect("the skip policy never fails");
        let mut seen = [false; ALPHABET_SIZE];
        tokens
            .into_iter()
            .filter(|t| t.is_letter() && !std::mem::replace(&mut seen[t.index()], true))
            .collect()
    }
}

impl From<&str> for Keyword {
    fn from(s: &str) -> Self {
        Keyword::new(s)
    }
}

pub fn square_from_keyword(keyword: &Keyword) -> Square {
    let mut layout = keyword.letters();
    let mut used = [false; ALPHABET_SIZE];
    for t in &layout {
        used[t.index()] = true;
    }
    layout.extend(Token::ALL.into_iter().filter(|t| !used[t.index()]));
    Square::from_layout(&layout).expect("keyword layout is a permutation")
}

/// `tokens[k]` goes to row `k / 7 + 1`, column `k % 7 + 1`.
pub fn square_from_permutation(tokens: &[Token]) -> Result<Square, Error> {
    Square::from_layout(tokens)
}
