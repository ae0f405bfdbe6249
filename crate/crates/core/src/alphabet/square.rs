use std::fmt;

use super::token::{Token, ALPHABET_SIZE};
use crate::error::Error;

/// Side length of the square.
pub const SIDE: u8 = 7;

/// A cell of the square: row and column, both in `1..=7`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Position {
    row: u8,
    col: u8,
}

impl Position {
    pub fn new(row: u8, col: u8) -> Option<Position> {
        ((1..=SIDE).contains(&row) && (1..=SIDE).contains(&col)).then_some(Position { row, col })
    }

    /// Position of the `index`-th cell in row-major order (`0..49`).
    pub fn from_index(index: usize) -> Option<Position> {
        (index < ALPHABET_SIZE).then(|| Position {
            row: (index / SIDE as usize) as u8 + 1,
            col: (index % SIDE as usize) as u8 + 1,
        })
    }

    pub fn row(self) -> u8 {
        self.row
    }

    pub fn col(self) -> u8 {
        self.col
    }

    /// Row-major index, `0..49`.
    pub fn index(self) -> usize {
        (self.row as usize - 1) * SIDE as usize + (self.col as usize - 1)
    }

    /// Every position, row by row.
    pub fn all() -> impl Iterator<Item = Position> {
        (0..ALPHABET_SIZE).filter_map(Position::from_index)
    }
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// A two-digit cipher number `10 * row + col` with both digits in `1..=7`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Code(u8);

impl Code {
    /// Accepts only values whose tens and units digits are both in `1..=7`.
    pub fn new(value: u8) -> Option<Code> {
        Position::new(value / 10, value % 10).map(Code::from_position)
    }

    pub fn from_position(p: Position) -> Code {
        Code(p.row * 10 + p.col)
    }

    pub fn position(self) -> Position {
        Position {
            row: self.0 / 10,
            col: self.0 % 10,
        }
    }

    pub fn value(self) -> u8 {
        self.0
    }

    /// All 49 valid codes in increasing order.
    pub fn all() -> impl Iterator<Item = Code> {
        Position::all().map(Code::from_position)
    }
}

impl fmt::Display for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:02}", self.0)
    }
}

impl From<Code> for u8 {
    fn from(c: Code) -> u8 {
        c.0
    }
}

/// A bijection between the 49 tokens and the 49 cells of the square.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Square {
    /// Token at each row-major cell index.
    cells: [Token; ALPHABET_SIZE],
    /// Cell index of each token, indexed by token index.
    slots: [u8; ALPHABET_SIZE],
}

impl Square {
    /// The canonical layout: letters `a..ț` in the first 31 cells, then the
    /// 18 symbols, so that `a` is `11` and `@` is `77`.
    pub fn canonical() -> Square {
        let mut slots = [0u8; ALPHABET_SIZE];
        for (i, s) in slots.iter_mut().enumerate() {
            *s = i as u8;
        }
        Square {
            cells: Token::ALL,
            slots,
        }
    }

    /// Builds a square from its row-major cell contents.
    ///
    /// Checks the length first, then reports the first repeated token. With
    /// exactly 49 distinct tokens nothing can be missing.
    pub fn from_layout(cells: &[Token]) -> Result<Square, Error> {
        if cells.len() != ALPHABET_SIZE {
            return Err(Error::WrongLength(cells.len()));
        }
        let mut slots = [u8::MAX; ALPHABET_SIZE];
        for (i, &t) in cells.iter().enumerate() {
            if slots[t.index()] != u8::MAX {
                return Err(Error::DuplicateToken(t));
            }
            slots[t.index()] = i as u8;
        }
        let mut array = [Token::A; ALPHABET_SIZE];
        array.copy_from_slice(cells);
        Ok(Square {
            cells: array,
            slots,
        })
    }

    pub fn position_of(&self, t: Token) -> Position {
        Position::from_index(self.slots[t.index()] as usize).expect("slot in range")
    }

    pub fn token_at(&self, p: Position) -> Token {
        self.cells[p.index()]
    }

    pub fn code_of(&self, t: Token) -> Code {
        Code::from_position(self.position_of(t))
    }

    pub fn token_for(&self, code: Code) -> Token {
        self.token_at(code.position())
    }

    /// The code currently assigned to [`Token::Upper`].
    pub fn upper_code(&self) -> Code {
        self.code_of(Token::Upper)
    }

    /// Row-major cell contents.
    pub fn layout(&self) -> &[Token; ALPHABET_SIZE] {
        &self.cells
    }

    pub fn row(&self, row: u8) -> &[Token] {
        let start = (row as usize - 1) * SIDE as usize;
        &self.cells[start..start + SIDE as usize]
    }

    pub fn is_canonical(&self) -> bool {
        self.cells == Token::ALL
    }
}

impl Default for Square {
    fn default() -> Self {
        Square::canonical()
    }
}

impl fmt::Debug for Square {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut list = f.debug_list();
        for row in 1..=SIDE {
            let names: Vec<String> = self.row(row).iter().map(|t| t.name()).collect();
            list.entry(&names.join(" "));
        }
        list.finish()
    }
}
