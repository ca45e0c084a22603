//! Exact arithmetic in B₄.

pub mod garside;
pub mod handle;
pub mod simple;
pub mod word;

pub use garside::{equals, is_power_of_x, x_power, x_word, NormalForm, DELTA_WORD};
pub use handle::{handle_reduce, handle_reduce_trivial};
pub use simple::SimpleFactor;
pub use word::{parse_word, w, ArtinLetter, ArtinWord, Generator, Letter, Sign, Word};
