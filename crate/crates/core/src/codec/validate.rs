use std::fmt;

use super::sequence::CipherSequence;
use crate::alphabet::{Code, Square, Token};

/// Which admissibility condition a code breaks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rule {
    /// The sequence ends with the `Upper` code.
    TrailingUpper,
    /// A code right after `Upper` is not a letter cell.
    BadUpperTarget,
    /// A digit lies outside `1..=7`.
    BadDigits,
}

impl Rule {
    pub fn name(self) -> &'static str {
        match self {
            Rule::TrailingUpper => "TRAILING_UPPER",
            Rule::BadUpperTarget => "BAD_UPPER_TARGET",
            Rule::BadDigits => "BAD_DIGITS",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Violation {
    /// 0-based index into the sequence.
    pub index: usize,
    pub rule: Rule,
    pub detail: String,
}

/// `index N: RULE detail`
impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "index {}: {} {}", self.index, self.rule, self.detail)
    }
}

/// Every violation found in a sequence, in index order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct ValidationReport {
    pub ok: bool,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn from_violations(violations: Vec<Violation>) -> ValidationReport {
        ValidationReport {
            ok: violations.is_empty(),
            violations,
        }
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.violations {
            writeln!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Incremental admissibility checker.
///
/// Each pushed value is either mapped to its token or rejected; the only
/// state carried between values is whether the previous one was `Upper`.
/// An `Upper` in target position is itself rejected and also arms the
/// check for the value after it.
#[derive(Debug, Clone)]
pub struct Validator<'a> {
    square: &'a Square,
    upper: Code,
    index: usize,
    /// Index of the last value if it was the `Upper` code.
    pending_upper: Option<usize>,
}

impl<'a> Validator<'a> {
    pub fn new(square: &'a Square) -> Validator<'a> {
        Validator {
            square,
            upper: square.upper_code(),
            index: 0,
            pending_upper: None,
        }
    }

    /// Number of values seen so far.
    pub fn position(&self) -> usize {
        self.index
    }

    pub fn push(&mut self, value: u8) -> Result<Token, Violation> {
        let index = self.index;
        self.index += 1;
        let after_upper = self.pending_upper.take().is_some();
        let Some(code) = Code::new(value) else {
            return Err(Violation {
                index,
                rule: Rule::BadDigits,
                detail: format!("{value:02} has a digit outside 1..7"),
            });
        };
        let token = self.square.token_for(code);
        if token == Token::Upper {
            self.pending_upper = Some(index);
        }
        if after_upper && !token.is_letter() {
            return Err(Violation {
                index,
                rule: Rule::BadUpperTarget,
                detail: format!(
                    "{code} ({token}) follows {} but is not a letter",
                    self.upper
                ),
            });
        }
        Ok(token)
    }

    /// Reports a trailing `Upper`, if any.
    pub fn finish(&mut self) -> Option<Violation> {
        self.pending_upper.take().map(|index| Violation {
            index,
            rule: Rule::TrailingUpper,
            detail: format!("sequence ends with {}", self.upper),
        })
    }
}

/// Checks a sequence against both admissibility conditions and the digit
/// range, collecting every violation in one pass.
pub fn validate(square: &Square, sequence: &CipherSequence) -> ValidationReport {
    let mut validator = Validator::new(square);
    let mut violations: Vec<Violation> = sequence
        .values()
        .iter()
        .filter_map(|&v| validator.push(v).err())
        .collect();
    violations.extend(validator.finish());
    ValidationReport::from_violations(violations)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(values: &[u8]) -> ValidationReport {
        validate(&Square::canonical(), &CipherSequence::new(values.to_vec()))
    }

    fn rules(report: &ValidationReport) -> Vec<(usize, Rule)> {
        report
            .violations
            .iter()
            .map(|v| (v.index, v.rule))
            .collect()
    }

    #[test]
    fn upper_before_question_mark() {
        let r = check(&[11, 54, 62, 27, 11]);
        assert!(!r.ok);
        assert_eq!(rules(&r), vec![(2, Rule::BadUpperTarget)]);
    }

    #[test]
    fn admissible_length_seven() {
        let r = check(&[54, 15, 37, 13, 25, 22, 14]);
        assert!(r.ok);
        assert!(r.violations.is_empty());
    }

    #[test]
    fn trailing_upper() {
        assert_eq!(rules(&check(&[11, 54])), vec![(1, Rule::TrailingUpper)]);
    }

    #[test]
    fn bad_digits() {
        assert_eq!(rules(&check(&[11, 8])), vec![(1, Rule::BadDigits)]);
        assert_eq!(
            rules(&check(&[80, 18, 0, 99])),
            vec![
                (0, Rule::BadDigits),
                (1, Rule::BadDigits),
                (2, Rule::BadDigits),
                (3, Rule::BadDigits)
            ]
        );
    }

    #[test]
    fn upper_upper() {
        assert_eq!(
            rules(&check(&[54, 54, 11])),
            vec![(1, Rule::BadUpperTarget)]
        );
        assert_eq!(
            rules(&check(&[54, 54])),
            vec![(1, Rule::BadUpperTarget), (1, Rule::TrailingUpper)]
        );
    }

    #[test]
    fn all_violations_collected() {
        let r = check(&[54, 55, 9, 54, 53, 54]);
        assert_eq!(
            rules(&r),
            vec![
                (1, Rule::BadUpperTarget),
                (2, Rule::BadDigits),
                (5, Rule::TrailingUpper)
            ]
        );
    }

    #[test]
    fn canonical_letter_test_matches_row_column_ranges() {
        // Letters are rows 1-4 (any column) and row 5 columns 1-3.
        let sq = Square::canonical();
        for code in Code::all() {
            let p = code.position();
            let by_range = (1..=4).contains(&p.row()) || (p.row() == 5 && p.col() <= 3);
            assert_eq!(check(&[54, code.value()]).ok, by_range, "{code}");
            assert_eq!(sq.token_for(code).is_letter(), by_range);
        }
    }

    #[test]
    fn empty_is_admissible() {
        assert!(check(&[]).ok);
    }

    #[test]
    fn diagnostic_line_format() {
        let r = check(&[11, 54, 62, 27, 11]);
        let line = r.violations[0].to_string();
        assert!(line.starts_with("index 2: BAD_UPPER_TARGET "), "{line}");
    }
}
