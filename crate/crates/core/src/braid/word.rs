//! Words over the six generators `a..f` and their inverses.
//!
//! Text encoding: a lowercase letter is the generator, the matching uppercase
//! letter is its inverse. The empty string is the identity.

use std::fmt;
use std::str::FromStr;

use crate::error::ParseError;

/// One of the six generators. `A`, `B`, `C` are the Artin generators
/// (σ₁, σ₂, σ₃); `D`, `E`, `F` are conjugates of `b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    A,
    B,
    C,
    D,
    E,
    F,
}

impl Generator {
    pub const ALL: [Generator; 6] = [
        Generator::A,
        Generator::B,
        Generator::C,
        Generator::D,
        Generator::E,
        Generator::F,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Generator {
        Self::ALL[i]
    }

    pub fn to_char(self) -> char {
        (b'a' + self as u8) as char
    }

    /// Index of the Artin generator (0 for a, 1 for b, 2 for c).
    pub fn artin_index(self) -> Option<u8> {
        match self {
            Generator::A => Some(0),
            Generator::B => Some(1),
            Generator::C => Some(2),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

/// A signed generator.
///
/// Letters are totally ordered as `a<b<c<d<e<f<A<B<C<D<E<F`; this order fixes
/// the neighbor order of every vertex and the lexicographic order of
/// representative words.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    pub base: Generator,
    pub sign: Sign,
}

impl Letter {
    /// All twelve signed letters in canonical order.
    pub const ALL: [Letter; 12] = {
        let mut out = [Letter::pos(Generator::A); 12];
        let mut i = 0;
        while i < 6 {
            out[i] = Letter::pos(Generator::ALL[i]);
            out[i + 6] = Letter::neg(Generator::ALL[i]);
            i += 1;
        }
        out
    };

    pub const fn pos(base: Generator) -> Letter {
        Letter { base, sign: Sign::Plus }
    }

    pub const fn neg(base: Generator) -> Letter {
        Letter { base, sign: Sign::Minus }
    }

    pub fn inverse(self) -> Letter {
        Letter { base: self.base, sign: self.sign.flip() }
    }

    /// Position in the canonical order, `0..12`.
    pub fn index(self) -> usize {
        match self.sign {
            Sign::Plus => self.base.index(),
            Sign::Minus => self.base.index() + 6,
        }
    }

    pub fn from_index(i: usize) -> Letter {
        Self::ALL[i]
    }

    pub fn to_char(self) -> char {
        let c = self.base.to_char();
        match self.sign {
            Sign::Plus => c,
            Sign::Minus => c.to_ascii_uppercase(),
        }
    }

    pub fn from_char(c: char) -> Option<Letter> {
        let base = match c.to_ascii_lowercase() {
            'a' => Generator::A,
            'b' => Generator::B,
            'c' => Generator::C,
            'd' => Generator::D,
            'e' => Generator::E,
            'f' => Generator::F,
            _ => return None,
        };
        if c.is_ascii_lowercase() {
            Some(Letter::pos(base))
        } else {
            Some(Letter::neg(base))
        }
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Letter {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.index().cmp(&other.index())
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

/// A finite word in the twelve signed letters. The empty word is the identity.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn identity() -> Word {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Concatenation `self · other`.
    pub fn multiply(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    pub fn push(&mut self, l: Letter) {
        self.0.push(l);
    }

    /// Reversed word with every sign flipped.
    pub fn invert(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    /// `self` repeated `k` times; negative `k` repeats the inverse.
    pub fn pow(&self, k: i64) -> Word {
        let base = if k < 0 { self.invert() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.len() * k.unsigned_abs() as usize);
        for _ in 0..k.unsigned_abs() {
            letters.extend_from_slice(&base.0);
        }
        Word(letters)
    }

    /// Replaces `d`, `e`, `f` by their defining Artin words.
    pub fn expand(&self) -> ArtinWord {
        let mut out = Vec::with_capacity(self.len() * 3);
        for &l in &self.0 {
            expand_letter_into(l, &mut out);
        }
        ArtinWord(out)
    }

    /// Exponent sum of the Artin expansion. `d`, `e`, `f` each contribute ±1.
    pub fn exponent_sum(&self) -> i64 {
        // Every letter expands to a word of exponent sum equal to its sign.
        self.0.iter().map(|l| l.sign.value()).sum()
    }
}

fn expand_letter_into(l: Letter, out: &mut Vec<ArtinLetter>) {
    use ArtinLetter as L;
    // d = (ac)⁻¹ b (ac), e = a⁻¹ b a, f = c⁻¹ b c
    let positive: &[ArtinLetter] = match l.base {
        Generator::A => &[L::new(0, Sign::Plus)],
        Generator::B => &[L::new(1, Sign::Plus)],
        Generator::C => &[L::new(2, Sign::Plus)],
        Generator::D => &[
            L::new(2, Sign::Minus),
            L::new(0, Sign::Minus),
            L::new(1, Sign::Plus),
            L::new(0, Sign::Plus),
            L::new(2, Sign::Plus),
        ],
        Generator::E => &[L::new(0, Sign::Minus), L::new(1, Sign::Plus), L::new(0, Sign::Plus)],
        Generator::F => &[L::new(2, Sign::Minus), L::new(1, Sign::Plus), L::new(2, Sign::Plus)],
    };
    match l.sign {
        Sign::Plus => out.extend_from_slice(positive),
        Sign::Minus => out.extend(positive.iter().rev().map(|a| a.inverse())),
    }
}

impl FromStr for Word {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_word(s)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Parses `[a-fA-F]*`. Error positions are 1-based character positions.
pub fn parse_word(text: &str) -> Result<Word, ParseError> {
    text.chars()
        .enumerate()
        .map(|(i, c)| Letter::from_char(c).ok_or(ParseError { position: i + 1, found: c }))
        .collect::<Result<Vec<_>, _>>()
        .map(Word)
}

/// A signed Artin generator σᵢ^{±1}, `index` in `0..3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ArtinLetter {
    pub index: u8,
    pub sign: Sign,
}

impl ArtinLetter {
    pub const fn new(index: u8, sign: Sign) -> ArtinLetter {
        ArtinLetter { index, sign }
    }

    pub fn inverse(self) -> ArtinLetter {
        ArtinLetter { index: self.index, sign: self.sign.flip() }
    }

    pub fn to_letter(self) -> Letter {
        Letter { base: Generator::from_index(self.index as usize), sign: self.sign }
    }
}

/// A word in `a, b, c` and their inverses only.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct ArtinWord(pub Vec<ArtinLetter>);

impl ArtinWord {
    /// Fails if `w` uses any of `d, e, f`.
    pub fn from_word(w: &Word) -> Option<ArtinWord> {
        w.letters()
            .iter()
            .map(|l| l.base.artin_index().map(|i| ArtinLetter::new(i, l.sign)))
            .collect::<Option<Vec<_>>>()
            .map(ArtinWord)
    }

    pub fn letters(&self) -> &[ArtinLetter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn invert(&self) -> ArtinWord {
        ArtinWord(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    pub fn multiply(&self, other: &ArtinWord) -> ArtinWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        ArtinWord(v)
    }

    pub fn exponent_sum(&self) -> i64 {
        self.0.iter().map(|l| l.sign.value()).sum()
    }

    pub fn to_word(&self) -> Word {
        Word(self.0.iter().map(|a| a.to_letter()).collect())
    }
}

impl fmt::Display for ArtinWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_word())
    }
}

/// Shorthand for tests and fixtures: panics on malformed text.
pub fn w(text: &str) -> Word {
    parse_word(text).expect("malformed word literal")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_examples() {
        assert_eq!(parse_word("").unwrap(), Word::identity());
        let x = parse_word("bac").unwrap();
        assert_eq!(
            x.letters(),
            &[Letter::pos(Generator::B), Letter::pos(Generator::A), Letter::pos(Generator::C)]
        );
        let v = parse_word("CAbac").unwrap();
        assert_eq!(
            v.letters(),
            &[
                Letter::neg(Generator::C),
                Letter::neg(Generator::A),
                Letter::pos(Generator::B),
                Letter::pos(Generator::A),
                Letter::pos(Generator::C)
            ]
        );
    }

    #[test]
    fn parse_error_position() {
        let err = parse_word("g").unwrap_err();
        assert_eq!(err.position, 1);
        assert_eq!(err.found, 'g');
        assert_eq!(parse_word("abXc").unwrap_err().position, 3);
        assert_eq!(parse_word("ab c").unwrap_err().position, 3);
    }

    #[test]
    fn expansion_of_extra_generators() {
        assert_eq!(w("d").expand().to_string(), "CAbac");
        assert_eq!(w("e").expand().to_string(), "Aba");
        assert_eq!(w("f").expand().to_string(), "Cbc");
        assert_eq!(w("a").expand().to_string(), "a");
        assert_eq!(w("D").expand().to_string(), "CABac");
        assert_eq!(w("E").expand().to_string(), "ABa");
    }

    #[test]
    fn invert_and_exponent_sum() {
        assert_eq!(w("bac").invert(), w("CAB"));
        assert_eq!(w("bac").exponent_sum(), 3);
        assert_eq!(w("bac").pow(4).exponent_sum(), 12);
        assert_eq!(w("d").exponent_sum(), 1);
        assert_eq!(w("d").expand().exponent_sum(), 1);
        assert_eq!(w("DeF").exponent_sum(), -1);
        assert_eq!(w("bac").pow(-2), w("CABCAB"));
    }

    #[test]
    fn letter_order() {
        let s: String = Letter::ALL.iter().map(|l| l.to_char()).collect();
        assert_eq!(s, "abcdefABCDEF");
        assert!(Letter::from_char('f').unwrap() < Letter::from_char('A').unwrap());
        for (i, l) in Letter::ALL.iter().enumerate() {
            assert_eq!(l.index(), i);
            assert_eq!(Letter::from_index(i), *l);
        }
    }
}
