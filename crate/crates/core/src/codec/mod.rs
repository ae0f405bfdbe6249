//! Encoding and decoding between words and cipher sequences.
//!
//! Every token maps to the two-digit number `10 * row + col` of its cell.
//! A capital is written as the `Upper` code followed by the code of the
//! lowercase letter, so a message of `n` characters with `q` capitals
//! encodes to `n + q` numbers.

mod sequence;
mod text;
mod validate;

pub use sequence::{CipherSequence, Word};
pub use text::{format_cipher_text, parse_cipher_text, CipherFormatter, CipherLexer};
pub use validate::{validate, Rule, ValidationReport, Validator, Violation};

use crate::alphabet::{Code, Square, Token};
use crate::error::Error;

pub fn encode_token(square: &Square, t: Token) -> Code {
    square.code_of(t)
}

pub fn encode(square: &Square, word: &Word) -> CipherSequence {
    word.tokens()
        .iter()
        .map(|&t| encode_token(square, t))
        .collect()
}

/// Strict decode: the sequence must be admissible, otherwise the full
/// report is returned inside [`Error::NotAdmissible`].
pub fn decode(square: &Square, sequence: &CipherSequence) -> Result<Word, Error> {
    let mut validator = Validator::new(square);
    let mut tokens = Vec::with_capacity(sequence.len());
    let mut violations = Vec::new();
    for &v in sequence.values() {
        match validator.push(v) {
            Ok(t) => tokens.push(t),
            Err(violation) => violations.push(violation),
        }
    }
    violations.extend(validator.finish());
    if !violations.is_empty() {
        return Err(Error::NotAdmissible(Box::new(
            ValidationReport::from_violations(violations),
        )));
    }
    Ok(Word::new(tokens).expect("admissible sequences decode to valid words"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::{normalize, NormalizationPolicy};

    fn sq() -> Square {
        Square::canonical()
    }

    fn word(text: &str) -> Word {
        Word::from_text(text, NormalizationPolicy::Error).unwrap()
    }

    fn seq(text: &str) -> CipherSequence {
        parse_cipher_text(text).unwrap()
    }

    #[test]
    fn encode_token_examples() {
        assert_eq!(encode_token(&sq(), Token::N).value(), 27);
        assert_eq!(encode_token(&sq(), Token::SComma).value(), 52);
        assert_eq!(encode_token(&sq(), Token::A).value(), 11);
        assert_eq!(encode_token(&sq(), Token::W).value(), 42);
        assert_eq!(encode_token(&sq(), Token::Space).value(), 55);
    }

    #[test]
    fn capitals_from_the_code_table() {
        for (text, expected) in [("C", "54 13"), ("U", "54 37"), ("Ț", "54 53")] {
            assert_eq!(encode(&sq(), &word(text)).to_string(), expected);
        }
        for (codes, text) in [("54 45", "Z"), ("54 41", "V"), ("54 47", "Î")] {
            assert_eq!(decode(&sq(), &seq(codes)).unwrap().render(), text);
        }
    }

    #[test]
    fn encode_examples() {
        assert_eq!(
            encode(&sq(), &word("România")).to_string(),
            "54 34 31 26 51 27 22 11"
        );
        let w = word("teorema lui Pitagora");
        let s = encode(&sq(), &w);
        assert_eq!(
            s.to_string(),
            "36 15 31 34 15 26 11 55 25 37 22 55 54 32 22 36 11 17 31 34 11"
        );
        assert_eq!((w.char_len(), s.len()), (20, 21));
        assert!(encode(&sq(), &Word::default()).is_empty());
    }

    #[test]
    fn decode_examples() {
        let w = decode(
            &sq(),
            &seq("12 22 27 31 26 37 25 55 25 37 22 55 54 27 15 42 36 31 27"),
        )
        .unwrap();
        assert_eq!(w.render(), "binomul lui Newton");
        assert_eq!(w.char_len(), 18);
        assert_eq!(
            decode(&sq(), &seq("35 31 34 22 27 77 15 61 37 41 36 71 34 31"))
                .unwrap()
                .render(),
            "sorin@e-uvt.ro"
        );
        assert_eq!(
            decode(&sq(), &CipherSequence::default()).unwrap(),
            Word::default()
        );
    }

    #[test]
    fn decode_is_strict() {
        let Err(Error::NotAdmissible(report)) = decode(&sq(), &seq("11 54 62 27 11")) else {
            panic!("expected NotAdmissible");
        };
        assert_eq!(report.violations.len(), 1);
        assert_eq!(report.violations[0].index, 2);
        assert_eq!(report.violations[0].rule, Rule::BadUpperTarget);
        assert!(decode(&sq(), &seq("11 54")).is_err());
        assert!(decode(&sq(), &seq("11 08")).is_err());
    }

    #[test]
    fn encode_token_is_a_bijection_onto_codes() {
        let mut codes: Vec<u8> = Token::ALL
            .iter()
            .map(|&t| encode_token(&sq(), t).value())
            .collect();
        codes.sort_unstable();
        let all: Vec<u8> = Code::all().map(Code::value).collect();
        assert_eq!(codes, all);
    }

    #[test]
    fn full_code_table() {
        // a..ț, UPPER, then the symbols, in order 11..17, 21..27, ..., 71..77.
        let table = "a b c d e f g h i j k l m n o p q r s t u v w x y z ă î â ș ț";
        let letters: Vec<Token> =
            normalize(&table.replace(' ', ""), NormalizationPolicy::Error).unwrap();
        let codes: Vec<u8> = Code::all().map(Code::value).collect();
        for (t, c) in letters.iter().zip(&codes) {
            assert_eq!(encode_token(&sq(), *t).value(), *c);
        }
        assert_eq!(encode_token(&sq(), Token::Upper).value(), 54);
        assert_eq!(encode_token(&sq(), Token::Newline).value(), 56);
        assert_eq!(encode_token(&sq(), Token::Comma).value(), 57);
        assert_eq!(encode_token(&sq(), Token::Hyphen).value(), 61);
        assert_eq!(encode_token(&sq(), Token::QuoteOpen).value(), 64);
        assert_eq!(encode_token(&sq(), Token::QuoteClose).value(), 65);
        assert_eq!(encode_token(&sq(), Token::Dash).value(), 67);
        assert_eq!(encode_token(&sq(), Token::Period).value(), 71);
        assert_eq!(encode_token(&sq(), Token::At).value(), 77);
    }
}
