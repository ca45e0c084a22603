//! Left-greedy normal form `Δ^inf · s₁ ⋯ s_k` in B₄.
//!
//! Factors are permutation braids; none is `1` or `Δ`, and every adjacent pair
//! is left-weighted. Two braids are equal iff their normal forms are equal.

use std::fmt;

use super::simple::{left_weight, SimpleFactor};
use super::word::{ArtinLetter, ArtinWord, Sign, Word};

/// The half twist as an Artin word.
pub const DELTA_WORD: &str = "abacba";

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NormalForm {
    inf: i64,
    factors: Vec<SimpleFactor>,
}

impl Default for NormalForm {
    fn default() -> Self {
        NormalForm::identity()
    }
}

impl NormalForm {
    pub fn identity() -> NormalForm {
        NormalForm { inf: 0, factors: Vec::new() }
    }

    pub fn delta_power(p: i64) -> NormalForm {
        NormalForm { inf: p, factors: Vec::new() }
    }

    pub fn inf(&self) -> i64 {
        self.inf
    }

    pub fn factors(&self) -> &[SimpleFactor] {
        &self.factors
    }

    /// Canonical length `k` (number of non-Δ factors).
    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }

    pub fn is_identity(&self) -> bool {
        self.inf == 0 && self.factors.is_empty()
    }

    pub fn from_artin(w: &ArtinWord) -> NormalForm {
        let mut nf = NormalForm::identity();
        nf.mul_artin(w);
        nf
    }

    /// Normal form of the Artin expansion of `w`.
    pub fn from_word(w: &Word) -> NormalForm {
        NormalForm::from_artin(&w.expand())
    }

    pub fn mul_artin(&mut self, w: &ArtinWord) {
        for &l in w.letters() {
            self.mul_letter(l);
        }
    }

    pub fn mul_word(&mut self, w: &Word) {
        self.mul_artin(&w.expand());
    }

    /// Right multiplication by `xᵏ`; the `x⁴ = Δ²` part only shifts `inf`.
    pub fn mul_x_power(&mut self, k: i64) {
        self.inf += 2 * k.div_euclid(4);
        let r = k.rem_euclid(4);
        if r != 0 {
            self.mul_word(&x_power(r));
        }
    }

    pub fn mul_letter(&mut self, l: ArtinLetter) {
        match l.sign {
            Sign::Plus => self.mul_simple(SimpleFactor::generator(l.index)),
            Sign::Minus => {
                // x·σᵢ⁻¹ = x·Δ⁻¹·(Δσᵢ⁻¹) = Δ⁻¹·flip(x)·(Δσᵢ⁻¹)
                self.inf -= 1;
                for f in self.factors.iter_mut() {
                    *f = f.flip();
                }
                self.mul_simple(SimpleFactor::DELTA.times_generator(l.index));
            }
        }
    }

    /// Right multiplication by a simple element, restoring left-weightedness
    /// with a single right-to-left pass.
    pub fn mul_simple(&mut self, t: SimpleFactor) {
        if t.is_identity() {
            return;
        }
        self.factors.push(t);
        let mut j = self.factors.len() - 1;
        while j > 0 {
            let (head, tail) = self.factors.split_at_mut(j);
            if !left_weight(&mut head[j - 1], &mut tail[0]) {
                break;
            }
            j -= 1;
        }
        let leading = self.factors.iter().take_while(|f| f.is_delta()).count();
        if leading > 0 {
            self.factors.drain(..leading);
            self.inf += leading as i64;
        }
        while self.factors.last().is_some_and(|f| f.is_identity()) {
            self.factors.pop();
        }
        debug_assert!(self.is_valid());
    }

    /// Checks the structural invariants of a normal form.
    pub fn is_valid(&self) -> bool {
        self.factors.iter().all(|f| !f.is_identity() && !f.is_delta())
            && self
                .factors
                .windows(2)
                .all(|p| p[1].left_descents() & !p[0].right_descents() == 0)
    }

    /// `(Δᵖ·A)(Δ^q·B) = Δ^{p+q}·flip^q(A)·B`, then `B` one factor at a time.
    pub fn multiply(&self, other: &NormalForm) -> NormalForm {
        let mut out = self.clone();
        out.inf += other.inf;
        if other.inf.rem_euclid(2) == 1 {
            for f in out.factors.iter_mut() {
                *f = f.flip();
            }
        }
        for &f in &other.factors {
            out.mul_simple(f);
        }
        out
    }

    pub fn inverse(&self) -> NormalForm {
        NormalForm::from_artin(&self.to_artin_word().invert())
    }

    /// Artin exponent sum: 6 per Δ plus the length of each factor.
    pub fn exponent_sum(&self) -> i64 {
        6 * self.inf + self.factors.iter().map(|f| f.length() as i64).sum::<i64>()
    }

    /// A word representing this braid: `Δ^inf` spelled as `abacba` (or its
    /// inverse), then a reduced word for each factor.
    pub fn to_artin_word(&self) -> ArtinWord {
        let delta: Vec<ArtinLetter> = [0u8, 1, 0, 2, 1, 0]
            .iter()
            .map(|&i| ArtinLetter::new(i, Sign::Plus))
            .collect();
        let mut out = Vec::new();
        if self.inf >= 0 {
            for _ in 0..self.inf {
                out.extend_from_slice(&delta);
            }
        } else {
            let inv = ArtinWord(delta).invert();
            for _ in 0..(-self.inf) {
                out.extend_from_slice(inv.letters());
            }
        }
        for f in &self.factors {
            out.extend(f.artin_indices().into_iter().map(|i| ArtinLetter::new(i, Sign::Plus)));
        }
        ArtinWord(out)
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "inf={} factors=", self.inf)?;
        if self.factors.is_empty() {
            return write!(f, "none");
        }
        for s in &self.factors {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// Word problem in B₄: compares normal forms of the Artin expansions.
pub fn equals(u: &Word, v: &Word) -> bool {
    NormalForm::from_word(u) == NormalForm::from_word(v)
}

/// `Some(k)` iff `w = xᵏ` with `x = bac`.
pub fn is_power_of_x(w: &Word) -> Option<i64> {
    let s = w.exponent_sum();
    if s % 3 != 0 {
        return None;
    }
    let k = s / 3;
    equals(w, &x_power(k)).then_some(k)
}

/// `x = bac`.
pub fn x_word() -> Word {
    super::word::w("bac")
}

pub fn x_power(k: i64) -> Word {
    x_word().pow(k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::word::w;

    fn nf(text: &str) -> NormalForm {
        NormalForm::from_word(&w(text))
    }

    #[test]
    fn identity_and_delta() {
        assert!(nf("").is_identity());
        assert_eq!(nf("abacba"), NormalForm::delta_power(1));
        assert_eq!(nf("ABCABA"), NormalForm::delta_power(-1));
        assert!(nf("aA").is_identity());
        assert!(nf("Aa").is_identity());
        assert!(nf("abcCBA").is_identity());
    }

    #[test]
    fn artin_relations() {
        assert_eq!(nf("aba"), nf("bab"));
        assert_eq!(nf("bcb"), nf("cbc"));
        assert_eq!(nf("ac"), nf("ca"));
        assert_ne!(nf("ab"), nf("ba"));
        assert_ne!(nf("a"), nf("b"));
    }

    #[test]
    fn representative_word_round_trips() {
        for text in ["", "a", "ABcbA", "abacbaabacba", "CCCbaBAc", "dEfFD"] {
            let n = nf(text);
            assert_eq!(NormalForm::from_artin(&n.to_artin_word()), n, "{text}");
            assert_eq!(n.exponent_sum(), w(text).exponent_sum(), "{text}");
        }
    }

    #[test]
    fn negative_delta_normal_form() {
        // σ₁⁻¹ = Δ⁻¹ · (Δσ₁⁻¹)
        let n = nf("A");
        assert_eq!(n.inf(), -1);
        assert_eq!(n.factors().len(), 1);
        assert_eq!(n.factors()[0].length(), 5);
    }

    #[test]
    fn powers_of_x() {
        assert_eq!(is_power_of_x(&w("")), Some(0));
        assert_eq!(is_power_of_x(&w("bac")), Some(1));
        assert_eq!(is_power_of_x(&w("bacbac")), Some(2));
        assert_eq!(is_power_of_x(&w("CAB")), Some(-1));
        assert_eq!(is_power_of_x(&w("a")), None);
        assert_eq!(is_power_of_x(&w("abc")), None);
        // aec is another spelling of x
        assert_eq!(is_power_of_x(&w("aec")), Some(1));
    }

    #[test]
    fn x_to_the_fourth_is_delta_squared() {
        assert_eq!(nf("bacbacbacbac"), NormalForm::delta_power(2));
    }

    #[test]
    fn multiply_and_inverse() {
        let u = nf("abCdE");
        let v = nf("FFcab");
        assert_eq!(u.multiply(&v), nf("abCdEFFcab"));
        assert!(u.multiply(&u.inverse()).is_identity());
    }
}
