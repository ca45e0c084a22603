//! Presentations of B₄ as data, and endomorphisms given by generator images.

use std::fmt;

use crate::braid::{equals, w, Generator, Letter, Sign, Word};
use crate::report::Report;

/// Generators plus relation chains `w₁ = w₂ = …`.
#[derive(Debug, Clone)]
pub struct Presentation {
    pub name: String,
    pub generators: Vec<Generator>,
    pub relations: Vec<Vec<Word>>,
}

impl Presentation {
    fn new(name: &str, generators: &[Generator], chains: &[&[&str]]) -> Presentation {
        let p = Presentation {
            name: name.to_string(),
            generators: generators.to_vec(),
            relations: chains.iter().map(|c| c.iter().map(|t| w(t)).collect()).collect(),
        };
        debug_assert!(p.is_well_formed());
        p
    }

    /// Every relation word uses only declared generators.
    pub fn is_well_formed(&self) -> bool {
        self.relations
            .iter()
            .flatten()
            .flat_map(|w| w.letters())
            .all(|l| self.generators.contains(&l.base))
    }

    /// Consecutive pairs of every chain, labelled `<chain>.<pair>` from 1.
    pub fn equalities(&self) -> Vec<(String, &Word, &Word)> {
        let mut out = Vec::new();
        for (ci, chain) in self.relations.iter().enumerate() {
            for (pi, pair) in chain.windows(2).enumerate() {
                out.push((format!("r{}.{}", ci + 1, pi + 1), &pair[0], &pair[1]));
            }
        }
        out
    }
}

/// The standard Artin presentation on `a, b, c`.
pub fn artin_presentation() -> Presentation {
    use Generator::*;
    Presentation::new("P1", &[A, B, C], &[&["aba", "bab"], &["bcb", "cbc"], &["ac", "ca"]])
}

/// The six-generator presentation on `a, …, f`.
pub fn six_generator_presentation() -> Presentation {
    Presentation::new(
        "P2",
        &Generator::ALL,
        &[
            &["ba", "ae", "eb"],
            &["de", "ec", "cd"],
            &["bc", "cf", "fb"],
            &["df", "fa", "ad"],
            &["ca", "ac"],
            &["ef", "fe"],
        ],
    )
}

pub fn builtin_presentations() -> (Presentation, Presentation) {
    (artin_presentation(), six_generator_presentation())
}

/// An endomorphism of B₄ determined by the images of `a, …, f`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorMap {
    images: [Word; 6],
}

impl GeneratorMap {
    pub fn new(images: [Word; 6]) -> GeneratorMap {
        GeneratorMap { images }
    }

    pub fn from_texts(images: [&str; 6]) -> GeneratorMap {
        GeneratorMap { images: images.map(w) }
    }

    pub fn identity() -> GeneratorMap {
        GeneratorMap::from_texts(["a", "b", "c", "d", "e", "f"])
    }

    pub fn image(&self, g: Generator) -> &Word {
        &self.images[g.index()]
    }

    pub fn apply_letter(&self, l: Letter) -> Word {
        match l.sign {
            Sign::Plus => self.images[l.base.index()].clone(),
            Sign::Minus => self.images[l.base.index()].invert(),
        }
    }

    pub fn apply(&self, word: &Word) -> Word {
        let mut out = Vec::with_capacity(word.len() * 3);
        for &l in word.letters() {
            out.extend_from_slice(self.apply_letter(l).letters());
        }
        Word(out)
    }

    /// `ℓ ↦ other(self(ℓ))`.
    pub fn then(&self, other: &GeneratorMap) -> GeneratorMap {
        GeneratorMap { images: Generator::ALL.map(|g| other.apply(self.image(g))) }
    }
}

impl fmt::Display for GeneratorMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, g) in Generator::ALL.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}->{}", g.to_char(), self.images[i])?;
        }
        Ok(())
    }
}

pub fn apply_map(m: &GeneratorMap, word: &Word) -> Word {
    m.apply(word)
}

/// The involution τ: a→A, b→D, c→C, d→B, e→F, f→E.
pub fn tau() -> GeneratorMap {
    GeneratorMap::from_texts(["A", "D", "C", "B", "F", "E"])
}

/// ι inverts `a, b, c`; `d, e, f` go through their Artin expansions.
pub fn iota() -> GeneratorMap {
    let artin_inverse = GeneratorMap::from_texts(["A", "B", "C", "d", "e", "f"]);
    GeneratorMap {
        images: Generator::ALL.map(|g| match g {
            Generator::A | Generator::B | Generator::C => artin_inverse.image(g).clone(),
            _ => artin_inverse.apply(&Word(vec![Letter::pos(g)]).expand().to_word()),
        }),
    }
}

/// Inner automorphism `w ↦ g⁻¹ w g`.
pub fn conj(g: &Word) -> GeneratorMap {
    let gi = g.invert();
    GeneratorMap {
        images: Generator::ALL.map(|x| gi.multiply(&Word(vec![Letter::pos(x)])).multiply(g)),
    }
}

/// Checks every consecutive equality of every relation chain after applying
/// `m`. Failures are recorded, not raised.
pub fn verify_homomorphism(m: &GeneratorMap, p: &Presentation) -> Report {
    let mut report = Report::new();
    for (id, lhs, rhs) in p.equalities() {
        let (ml, mr) = (m.apply(lhs), m.apply(rhs));
        report.check(
            format!("{}.{}", p.name, id),
            format!("image of {lhs} = image of {rhs}"),
            equals(&ml, &mr),
            format!("{ml} vs {mr}"),
        );
    }
    report
}

/// `m(m(ℓ)) = ℓ` for each of the six letters.
pub fn verify_involution(m: &GeneratorMap) -> bool {
    Generator::ALL.iter().all(|&g| {
        let l = Word(vec![Letter::pos(g)]);
        equals(&m.apply(&m.apply(&l)), &l)
    })
}

/// `τ(ℓ) = (ac)⁻¹ ι(ℓ) (ac)` for one letter.
pub fn tau_decomposition_holds(g: Generator) -> bool {
    let l = Word(vec![Letter::pos(g)]);
    let lhs = tau().apply(&l);
    let rhs = conj(&w("ac")).apply(&iota().apply(&l));
    equals(&lhs, &rhs)
}

/// τ equals ι followed by conjugation by `ac`, on every generator.
pub fn verify_tau_decomposition() -> bool {
    Generator::ALL.iter().all(|&g| tau_decomposition_holds(g))
}
