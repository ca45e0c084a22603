//! Vertices of `X₀`: left cosets `g⟨x⟩`.
//!
//! Since `x = bac` has exponent sum 3, every coset contains exactly one
//! element of exponent sum 0, 1 or 2. Its normal form is the coset key.

use std::fmt;

use crate::braid::{Letter, NormalForm, Word};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CosetKey(NormalForm);

impl CosetKey {
    /// The base vertex `⟨x⟩`.
    pub fn base() -> CosetKey {
        CosetKey(NormalForm::identity())
    }

    /// Moves `nf` into the exponent-sum window `{0,1,2}` by right
    /// multiplication with a power of `x`.
    pub fn from_normal_form(mut nf: NormalForm) -> CosetKey {
        let k = -nf.exponent_sum().div_euclid(3);
        nf.mul_x_power(k);
        debug_assert!((0..3).contains(&nf.exponent_sum()));
        CosetKey(nf)
    }

    pub fn normal_form(&self) -> &NormalForm {
        &self.0
    }

    /// The stored representative `h` with `v = h⟨x⟩`.
    pub fn representative(&self) -> Word {
        self.0.to_artin_word().to_word()
    }

    /// `v·ℓ`, i.e. the coset `hℓ⟨x⟩`.
    pub fn neighbor(&self, l: Letter) -> CosetKey {
        let mut nf = self.0.clone();
        nf.mul_word(&Word(vec![l]));
        CosetKey::from_normal_form(nf)
    }

    /// `g·v`, the coset `gh⟨x⟩`.
    pub fn left_translate(&self, g: &Word) -> CosetKey {
        let mut nf = NormalForm::from_word(g);
        nf.mul_artin(&self.0.to_artin_word());
        CosetKey::from_normal_form(nf)
    }
}

impl fmt::Display for CosetKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rep = self.representative();
        if rep.is_empty() {
            write!(f, "<x>")
        } else {
            write!(f, "{rep}<x>")
        }
    }
}

pub fn coset_key(w: &Word) -> CosetKey {
    CosetKey::from_normal_form(NormalForm::from_word(w))
}

/// The twelve neighbors `(ℓ, v·ℓ)` in letter order.
pub fn neighbors(v: &CosetKey) -> Vec<(Letter, CosetKey)> {
    Letter::ALL.iter().map(|&l| (l, v.neighbor(l))).collect()
}

/// A letter `ℓ` with `u·ℓ = v`, if the vertices are adjacent.
pub fn adjacent(u: &CosetKey, v: &CosetKey) -> Result<Option<Letter>> {
    if u == v {
        return Err(Error::SameVertex);
    }
    Ok(Letter::ALL.iter().copied().find(|&l| u.neighbor(l) == *v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{equals, is_power_of_x, w};

    #[test]
    fn x_fixes_the_coset() {
        assert_eq!(coset_key(&w("bac")), coset_key(&w("")));
        assert_eq!(coset_key(&w("abac")), coset_key(&w("a")));
        assert_eq!(coset_key(&w("CAB")), CosetKey::base());
        assert_ne!(coset_key(&w("a")), coset_key(&w("b")));
    }

    #[test]
    fn representative_lies_in_window_and_coset() {
        for text in ["", "a", "ab", "ABC", "dDeEfFaaa", "FEDcba"] {
            let word = w(text);
            let key = coset_key(&word);
            let rep = key.representative();
            assert!((0..3).contains(&rep.exponent_sum()));
            assert!(is_power_of_x(&rep.invert().multiply(&word)).is_some(), "{text}");
        }
    }

    #[test]
    fn adjacency_basics() {
        let base = CosetKey::base();
        let a = coset_key(&w("a"));
        assert_eq!(adjacent(&base, &a).unwrap(), Some(w("a").letters()[0]));
        assert_eq!(adjacent(&a, &base).unwrap(), Some(w("A").letters()[0]));
        assert!(matches!(adjacent(&base, &coset_key(&w("bacbac"))), Err(Error::SameVertex)));
    }

    #[test]
    fn adjacency_of_a_and_b_decided_exhaustively() {
        // a⟨x⟩ ~ b⟨x⟩ iff b⁻¹aℓ ∈ ⟨x⟩ for some signed letter ℓ.
        let (a, b) = (coset_key(&w("a")), coset_key(&w("b")));
        let witnesses: Vec<Letter> = Letter::ALL
            .iter()
            .copied()
            .filter(|&l| is_power_of_x(&w("Ba").multiply(&Word(vec![l]))).is_some())
            .collect();
        let found = adjacent(&a, &b).unwrap();
        assert_eq!(found.is_some(), !witnesses.is_empty());
        if let Some(l) = found {
            assert!(witnesses.contains(&l));
        }
    }

    #[test]
    fn twelve_distinct_neighbors() {
        let ns = neighbors(&CosetKey::base());
        assert_eq!(ns.len(), 12);
        for i in 0..12 {
            for j in i + 1..12 {
                assert_ne!(ns[i].1, ns[j].1, "{} and {}", ns[i].0, ns[j].0);
            }
        }
        assert_eq!(ns[0], (w("a").letters()[0], coset_key(&w("a"))));
    }

    #[test]
    fn conjugation_by_x_permutes_the_letters() {
        // x ℓ x⁻¹ is again a signed letter, so adjacency does not depend on
        // the choice of coset representative.
        let x = w("bac");
        for l in Letter::ALL {
            let conj = x.multiply(&Word(vec![l])).multiply(&x.invert());
            let hits = Letter::ALL.iter().filter(|&&m| equals(&conj, &Word(vec![m]))).count();
            assert_eq!(hits, 1, "x {l} x^-1");
        }
    }

    #[test]
    fn equivariance_of_neighbors() {
        let g = w("aBdE");
        let moved = CosetKey::base().left_translate(&g);
        for (l, n) in neighbors(&CosetKey::base()) {
            assert_eq!(moved.neighbor(l), n.left_translate(&g));
        }
    }
}
