//! # p7-core
//!
//! Lossless encoding of Romanian text with an extended 7×7 Polybius square.
//!
//! The square holds the 31 lowercase Romanian letters and 18 punctuation and
//! action symbols. Each symbol is written as the two-digit number formed by
//! its row and column; a capital letter is written as the `UPPER` action
//! (`54` in the canonical square) followed by the lowercase letter.
//!
//! This is a classroom cipher. It is a fixed substitution and offers no
//! confidentiality against anyone who cares to look.
//!
//! ```
//! use p7_core::{decode, encode, parse_cipher_text, NormalizationPolicy, Square, Word};
//!
//! let square = Square::canonical();
//! let word = Word::from_text("România", NormalizationPolicy::Error).unwrap();
//! let cipher = encode(&square, &word);
//! assert_eq!(cipher.to_string(), "54 34 31 26 51 27 22 11");
//!
//! let back = decode(&square, &parse_cipher_text("54 34 31 26 51 27 22 11").unwrap()).unwrap();
//! assert_eq!(back.render(), "România");
//! ```

pub mod alphabet;
pub mod codec;
pub mod error;
pub mod keying;

pub use alphabet::{
    format_square_file, normalize, parse_square_file, render, Code, NormalizationPolicy,
    Normalizer, Position, Renderer, Square, Token, SIDE,
};
pub use codec::{
    decode, encode, encode_token, format_cipher_text, parse_cipher_text, validate, CipherFormatter,
    CipherLexer, CipherSequence, Rule, ValidationReport, Validator, Violation, Word,
};
pub use error::{Error, SquareFileError};
pub use keying::{square_from_keyword, square_from_permutation, Keyword};
