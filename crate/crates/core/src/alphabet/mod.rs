//! The 49-token alphabet, square layouts, and the text boundary.

mod normalize;
mod square;
mod square_file;
mod token;

pub use normalize::{normalize, render, render_char, NormalizationPolicy, Normalizer, Renderer};
pub use square::{Code, Position, Square, SIDE};
pub use square_file::{format_square_file, parse_square_file};
pub use token::{Token, ALPHABET_SIZE, LETTER_COUNT};
