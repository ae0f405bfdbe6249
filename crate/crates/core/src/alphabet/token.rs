use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// One of the 49 symbols of the extended Polybius alphabet.
///
/// The discriminant is the token's index in canonical row-major order, so
/// `Token::ALL[t as usize] == t`. The first 31 tokens are the lowercase
/// Romanian letters; the remaining 18 are punctuation and action symbols.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[repr(u8)]
pub enum Token {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
    H,
    I,
    J,
    K,
    L,
    M,
    N,
    O,
    P,
    Q,
    R,
    S,
    T,
    U,
    V,
    W,
    X,
    Y,
    Z,
    /// ă
    ABreve,
    /// î
    ICirc,
    /// â
    ACirc,
    /// ș
    SComma,
    /// ț
    TComma,
    /// Action: the following letter is uppercase.
    Upper,
    Space,
    /// Action: start a new line.
    Newline,
    Comma,
    /// Intra-word hyphen (cratimă).
    Hyphen,
    Question,
    Exclam,
    QuoteOpen,
    QuoteClose,
    Semicolon,
    /// Pause or dialogue dash.
    Dash,
    Period,
    Colon,
    Apostrophe,
    ParenOpen,
    ParenClose,
    Ampersand,
    At,
}

/// Number of tokens in the alphabet.
pub const ALPHABET_SIZE: usize = 49;

/// Number of letter tokens.
pub const LETTER_COUNT: usize = 31;

const LETTER_CHARS: [char; LETTER_COUNT] = [
    'a', 'b', 'c', 'd', 'e', 'f', 'g', 'h', 'i', 'j', 'k', 'l', 'm', 'n', 'o', 'p', 'q', 'r', 's',
    't', 'u', 'v', 'w', 'x', 'y', 'z', 'ă', 'î', 'â', 'ș', 'ț',
];

const UPPER_LETTER_CHARS: [char; LETTER_COUNT] = [
    'A', 'B', 'C', 'D', 'E', 'F', 'G', 'H', 'I', 'J', 'K', 'L', 'M', 'N', 'O', 'P', 'Q', 'R', 'S',
    'T', 'U', 'V', 'W', 'X', 'Y', 'Z', 'Ă', 'Î', 'Â', 'Ș', 'Ț',
];

const SYMBOL_NAMES: [&str; ALPHABET_SIZE - LETTER_COUNT] = [
    "UPPER",
    "SPACE",
    "NEWLINE",
    "COMMA",
    "HYPHEN",
    "QUESTION",
    "EXCLAM",
    "QUOTE_OPEN",
    "QUOTE_CLOSE",
    "SEMICOLON",
    "DASH",
    "PERIOD",
    "COLON",
    "APOSTROPHE",
    "PAREN_OPEN",
    "PAREN_CLOSE",
    "AMPERSAND",
    "AT",
];

impl Token {
    /// All tokens in canonical row-major order.
    pub const ALL: [Token; ALPHABET_SIZE] = [
        Token::A,
        Token::B,
        Token::C,
        Token::D,
        Token::E,
        Token::F,
        Token::G,
        Token::H,
        Token::I,
        Token::J,
        Token::K,
        Token::L,
        Token::M,
        Token::N,
        Token::O,
        Token::P,
        Token::Q,
        Token::R,
        Token::S,
        Token::T,
        Token::U,
        Token::V,
        Token::W,
        Token::X,
        Token::Y,
        Token::Z,
        Token::ABreve,
        Token::ICirc,
        Token::ACirc,
        Token::SComma,
        Token::TComma,
        Token::Upper,
        Token::Space,
        Token::Newline,
        Token::Comma,
        Token::Hyphen,
        Token::Question,
        Token::Exclam,
        Token::QuoteOpen,
        Token::QuoteClose,
        Token::Semicolon,
        Token::Dash,
        Token::Period,
        Token::Colon,
        Token::Apostrophe,
        Token::ParenOpen,
        Token::ParenClose,
        Token::Ampersand,
        Token::At,
    ];

    /// Index in canonical order, `0..49`.
    #[inline]
    pub fn index(self) -> usize {
        self as usize
    }

    #[inline]
    pub fn from_index(index: usize) -> Option<Token> {
        Token::ALL.get(index).copied()
    }

    /// True for the 31 lowercase letters, the only tokens allowed after `Upper`.
    #[inline]
    pub fn is_letter(self) -> bool {
        self.index() < LETTER_COUNT
    }

    /// The lowercase character of a letter token.
    pub fn letter_char(self) -> Option<char> {
        LETTER_CHARS.get(self.index()).copied()
    }

    /// The uppercase character of a letter token.
    pub fn upper_char(self) -> Option<char> {
        UPPER_LETTER_CHARS.get(self.index()).copied()
    }

    /// Letter token for a lowercase character, in canonical codepoints only.
    pub fn from_letter_char(c: char) -> Option<Token> {
        let index = match c {
            'a'..='z' => c as usize - 'a' as usize,
            'ă' => 26,
            'î' => 27,
            'â' => 28,
            'ș' => 29,
            'ț' => 30,
            _ => return None,
        };
        Some(Token::ALL[index])
    }

    /// Name used in square files and on the command line.
    ///
    /// Letters are named by their lowercase character, symbols by their
    /// uppercase identifier (`UPPER`, `SPACE`, ...).
    pub fn name(self) -> String {
        match self.letter_char() {
            Some(c) => c.to_string(),
            None => SYMBOL_NAMES[self.index() - LETTER_COUNT].to_string(),
        }
    }

    /// Inverse of [`Token::name`].
    pub fn from_name(name: &str) -> Option<Token> {
        let mut chars = name.chars();
        if let (Some(c), None) = (chars.next(), chars.next()) {
            if let Some(t) = Token::from_letter_char(c) {
                return Some(t);
            }
        }
        SYMBOL_NAMES
            .iter()
            .position(|&n| n == name)
            .map(|i| Token::ALL[LETTER_COUNT + i])
    }

    /// Iterator over the 31 letter tokens in canonical order.
    pub fn letters() -> impl Iterator<Item = Token> {
        Token::ALL[..LETTER_COUNT].iter().copied()
    }
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.letter_char() {
            Some(c) => write!(f, "{c}"),
            None => f.write_str(SYMBOL_NAMES[self.index() - LETTER_COUNT]),
        }
    }
}

impl FromStr for Token {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Token::from_name(s).ok_or_else(|| Error::UnknownTokenName(s.to_string()))
    }
}
