//! Permutation braids on four strands.
//!
//! A simple element is stored as a permutation `w` of `{0,1,2,3}` in one-line
//! notation, with the product `(u·v)(j) = u(v(j))`. The braid σᵢ corresponds to
//! the adjacent transposition `(i, i+1)`, so a positive braid is simple exactly
//! when the lengths of its factors add up.

use std::fmt;

pub const STRANDS: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleFactor([u8; STRANDS]);

impl SimpleFactor {
    pub const IDENTITY: SimpleFactor = SimpleFactor([0, 1, 2, 3]);
    /// The half twist Δ.
    pub const DELTA: SimpleFactor = SimpleFactor([3, 2, 1, 0]);

    /// Builds a factor from one-line notation; `None` if `perm` is not a
    /// permutation of `0..4`.
    pub fn from_perm(perm: [u8; STRANDS]) -> Option<SimpleFactor> {
        let mut seen = [false; STRANDS];
        for &p in &perm {
            if p as usize >= STRANDS || seen[p as usize] {
                return None;
            }
            seen[p as usize] = true;
        }
        Some(SimpleFactor(perm))
    }

    pub fn perm(&self) -> [u8; STRANDS] {
        self.0
    }

    /// The generator σᵢ, `i` in `0..3`.
    pub fn generator(i: u8) -> SimpleFactor {
        SimpleFactor::IDENTITY.times_generator(i)
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::IDENTITY
    }

    pub fn is_delta(&self) -> bool {
        *self == Self::DELTA
    }

    /// Number of crossings (inversions of the permutation).
    pub fn length(&self) -> u32 {
        let p = &self.0;
        let mut n = 0;
        for i in 0..STRANDS {
            for j in i + 1..STRANDS {
                if p[i] > p[j] {
                    n += 1;
                }
            }
        }
        n
    }

    pub fn inverse_perm(&self) -> SimpleFactor {
        let mut r = [0u8; STRANDS];
        for (i, &p) in self.0.iter().enumerate() {
            r[p as usize] = i as u8;
        }
        SimpleFactor(r)
    }

    /// Permutation product `self · other`. Only a braid product when the
    /// lengths add.
    pub fn compose(&self, other: &SimpleFactor) -> SimpleFactor {
        let mut r = [0u8; STRANDS];
        for (j, slot) in r.iter_mut().enumerate() {
            *slot = self.0[other.0[j] as usize];
        }
        SimpleFactor(r)
    }

    /// `self · sᵢ`: swap positions `i` and `i+1`.
    pub fn times_generator(&self, i: u8) -> SimpleFactor {
        let mut r = self.0;
        r.swap(i as usize, i as usize + 1);
        SimpleFactor(r)
    }

    /// `sᵢ · self`: swap values `i` and `i+1`.
    pub fn generator_times(&self, i: u8) -> SimpleFactor {
        let mut r = self.0;
        for v in r.iter_mut() {
            if *v == i {
                *v = i + 1;
            } else if *v == i + 1 {
                *v = i;
            }
        }
        SimpleFactor(r)
    }

    /// Finishing set: σᵢ with `self·σᵢ` not simple.
    pub fn right_descents(&self) -> u8 {
        let mut mask = 0;
        for i in 0..STRANDS - 1 {
            if self.0[i] > self.0[i + 1] {
                mask |= 1 << i;
            }
        }
        mask
    }

    /// Starting set: σᵢ that left-divide `self`.
    pub fn left_descents(&self) -> u8 {
        self.inverse_perm().right_descents()
    }

    /// Conjugation by Δ, which sends σᵢ to σ₍₂₋ᵢ₎.
    pub fn flip(&self) -> SimpleFactor {
        Self::DELTA.compose(self).compose(&Self::DELTA)
    }

    /// `Δ` right-complement: the simple `r` with `self · r = Δ`.
    pub fn right_complement(&self) -> SimpleFactor {
        self.inverse_perm().compose(&Self::DELTA)
    }

    /// A reduced word, peeling left descents with the smallest index first.
    pub fn artin_indices(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(self.length() as usize);
        let mut cur = *self;
        while !cur.is_identity() {
            let d = cur.left_descents();
            let i = d.trailing_zeros() as u8;
            out.push(i);
            cur = cur.generator_times(i);
        }
        out
    }

    /// All 24 permutation braids.
    pub fn all() -> Vec<SimpleFactor> {
        let mut out = Vec::with_capacity(24);
        for a in 0..4u8 {
            for b in 0..4u8 {
                for c in 0..4u8 {
                    for d in 0..4u8 {
                        if let Some(s) = SimpleFactor::from_perm([a, b, c, d]) {
                            out.push(s);
                        }
                    }
                }
            }
        }
        out
    }
}

/// One-line notation on `1..=4`, e.g. `[2134]` for σ₁.
impl fmt::Display for SimpleFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for &p in &self.0 {
            write!(f, "{}", p + 1)?;
        }
        write!(f, "]")
    }
}

/// Brings the pair `(s, t)` to left-weighted form in place: every starting
/// generator of `t` lies in the finishing set of `s`. Returns whether anything
/// moved.
pub fn left_weight(s: &mut SimpleFactor, t: &mut SimpleFactor) -> bool {
    let mut changed = false;
    loop {
        let movable = t.left_descents() & !s.right_descents();
        if movable == 0 {
            return changed;
        }
        let i = movable.trailing_zeros() as u8;
        *s = s.times_generator(i);
        *t = t.generator_times(i);
        changed = true;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twenty_four_simples() {
        let all = SimpleFactor::all();
        assert_eq!(all.len(), 24);
        assert_eq!(all.iter().map(|s| s.length()).max(), Some(6));
        assert_eq!(SimpleFactor::DELTA.length(), 6);
    }

    #[test]
    fn reduced_words_have_correct_length() {
        for s in SimpleFactor::all() {
            let word = s.artin_indices();
            assert_eq!(word.len() as u32, s.length());
            let mut acc = SimpleFactor::IDENTITY;
            for &i in &word {
                assert_eq!(acc.right_descents() & (1 << i), 0, "word for {s} not reduced");
                acc = acc.times_generator(i);
            }
            assert_eq!(acc, s);
        }
    }

    #[test]
    fn delta_word_is_abacba() {
        let mut acc = SimpleFactor::IDENTITY;
        for i in [0u8, 1, 0, 2, 1, 0] {
            assert_eq!(acc.right_descents() & (1 << i), 0);
            acc = acc.times_generator(i);
        }
        assert_eq!(acc, SimpleFactor::DELTA);
    }

    #[test]
    fn flip_swaps_outer_generators() {
        assert_eq!(SimpleFactor::generator(0).flip(), SimpleFactor::generator(2));
        assert_eq!(SimpleFactor::generator(1).flip(), SimpleFactor::generator(1));
        for s in SimpleFactor::all() {
            assert_eq!(s.flip().flip(), s);
            assert_eq!(s.compose(&s.right_complement()), SimpleFactor::DELTA);
            assert_eq!(s.length() + s.right_complement().length(), 6);
        }
    }

    #[test]
    fn left_weighting_preserves_product_and_length() {
        for a in SimpleFactor::all() {
            for b in SimpleFactor::all() {
                let (mut s, mut t) = (a, b);
                left_weight(&mut s, &mut t);
                assert_eq!(s.compose(&t), a.compose(&b));
                assert_eq!(s.length() + t.length(), a.length() + b.length());
                assert_eq!(t.left_descents() & !s.right_descents(), 0);
            }
        }
    }
}
