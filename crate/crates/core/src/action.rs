//! Isometries of `X₀` generated by left multiplications `φ_g` and the
//! involution `θ`, keyed as elements of `J/⟨x⁴⟩` with `J = B₄ ⋊ ⟨τ⟩`.
//!
//! A key `(ε, g)` acts by `h⟨x⟩ ↦ g·τ^ε(h)⟨x⟩`. Keys compose by
//! `(ε₁, g₁)∘(ε₂, g₂) = (ε₁+ε₂, g₁·τ^{ε₁}(g₂))`, and `g` is stored as the
//! normal form of the unique `g·x⁴ᵏ` with exponent sum in `0..12`.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use rand::Rng;
use rayon::prelude::*;

use crate::braid::{x_power, Letter, NormalForm, Word};
use crate::complex::{build_ball, link, Ball, CosetKey};
use crate::error::{Error, Result};
use crate::maps::tau;
use crate::report::Report;
use crate::sampling;

/// Exponent sum of `x⁴`.
const CENTER_EXPONENT: i64 = 12;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IsometryKey {
    eps: u8,
    rep: NormalForm,
}

impl IsometryKey {
    pub fn new(eps: u8, g: &Word) -> IsometryKey {
        Self::from_normal_form(eps, NormalForm::from_word(g))
    }

    fn from_normal_form(eps: u8, mut nf: NormalForm) -> IsometryKey {
        let k = -nf.exponent_sum().div_euclid(CENTER_EXPONENT);
        nf.mul_x_power(4 * k);
        IsometryKey { eps: eps % 2, rep: nf }
    }

    pub fn identity() -> IsometryKey {
        IsometryKey { eps: 0, rep: NormalForm::identity() }
    }

    pub fn eps(&self) -> u8 {
        self.eps
    }

    pub fn normal_form(&self) -> &NormalForm {
        &self.rep
    }

    pub fn group_word(&self) -> Word {
        self.rep.to_artin_word().to_word()
    }

    pub fn is_identity(&self) -> bool {
        self.eps == 0 && self.rep.is_identity()
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &IsometryKey) -> IsometryKey {
        let second = twist(self.eps, &other.group_word());
        let mut nf = self.rep.clone();
        nf.mul_word(&second);
        IsometryKey::from_normal_form(self.eps + other.eps, nf)
    }

    pub fn apply(&self, v: &CosetKey) -> CosetKey {
        act_nf(self.eps, &self.rep, v)
    }

    /// Smallest `n ≥ 1` with `selfⁿ = id`, searching up to `limit`.
    pub fn order(&self, limit: usize) -> Option<usize> {
        let mut acc = self.clone();
        for n in 1..=limit {
            if acc.is_identity() {
                return Some(n);
            }
            acc = self.compose(&acc);
        }
        None
    }
}

impl fmt::Display for IsometryKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = self.group_word();
        let g = if g.is_empty() { "1".to_string() } else { g.to_string() };
        if self.eps == 1 {
            write!(f, "phi({g})*theta")
        } else {
            write!(f, "phi({g})")
        }
    }
}

fn twist(eps: u8, g: &Word) -> Word {
    if eps % 2 == 1 {
        tau().apply(g)
    } else {
        g.clone()
    }
}

/// The action of the element `(ε, g)` of `J` itself, before any reduction
/// modulo `⟨x⁴⟩`.
pub fn act(eps: u8, g: &Word, v: &CosetKey) -> CosetKey {
    act_nf(eps, &NormalForm::from_word(g), v)
}

fn act_nf(eps: u8, g: &NormalForm, v: &CosetKey) -> CosetKey {
    if eps % 2 == 1 {
        let mut nf = g.clone();
        nf.mul_word(&twist(eps, &v.representative()));
        CosetKey::from_normal_form(nf)
    } else {
        CosetKey::from_normal_form(g.multiply(v.normal_form()))
    }
}

pub fn phi(g: &Word) -> IsometryKey {
    IsometryKey::new(0, g)
}

pub fn theta() -> IsometryKey {
    IsometryKey::new(1, &Word::identity())
}

pub fn apply(i: &IsometryKey, v: &CosetKey) -> CosetKey {
    i.apply(v)
}

pub fn compose(a: &IsometryKey, b: &IsometryKey) -> IsometryKey {
    a.compose(b)
}

/// A permutation of the twelve signed letters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LetterPerm([u8; 12]);

impl LetterPerm {
    pub fn identity() -> LetterPerm {
        let mut p = [0u8; 12];
        for (i, slot) in p.iter_mut().enumerate() {
            *slot = i as u8;
        }
        LetterPerm(p)
    }

    pub fn image(&self, l: Letter) -> Letter {
        Letter::from_index(self.0[l.index()] as usize)
    }

    /// Parses cycle notation such as `(a e c f)(b d)` or `(aA)(cC)`.
    pub fn from_cycles(text: &str) -> Option<LetterPerm> {
        let mut p = LetterPerm::identity();
        let mut seen = [false; 12];
        for group in text.split('(').skip(1) {
            let body = group.strip_suffix(')').or_else(|| group.trim_end().strip_suffix(')'))?;
            let cycle: Vec<Letter> = body
                .chars()
                .filter(|c| !c.is_whitespace())
                .map(Letter::from_char)
                .collect::<Option<_>>()?;
            for (k, l) in cycle.iter().enumerate() {
                if std::mem::replace(&mut seen[l.index()], true) {
                    return None;
                }
                p.0[l.index()] = cycle[(k + 1) % cycle.len()].index() as u8;
            }
        }
        Some(p)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LetterPerm) -> LetterPerm {
        let mut r = [0u8; 12];
        for (i, slot) in r.iter_mut().enumerate() {
            *slot = self.0[other.0[i] as usize];
        }
        LetterPerm(r)
    }

    pub fn is_identity(&self) -> bool {
        *self == LetterPerm::identity()
    }

    pub fn order(&self) -> usize {
        let mut acc = *self;
        let mut n = 1;
        while !acc.is_identity() {
            acc = self.compose(&acc);
            n += 1;
        }
        n
    }

    pub fn fixed_points(&self) -> usize {
        (0..12).filter(|&i| self.0[i] as usize == i).count()
    }
}

/// Cycle notation, cycles led by their smallest letter, fixed points omitted.
impl fmt::Display for LetterPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut done = [false; 12];
        let mut any = false;
        for start in 0..12 {
            if done[start] || self.0[start] as usize == start {
                continue;
            }
            any = true;
            write!(f, "(")?;
            let mut i = start;
            let mut first = true;
            while !done[i] {
                done[i] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{}", Letter::from_index(i))?;
                first = false;
                i = self.0[i] as usize;
            }
            write!(f, ")")?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

/// Closure of a set of permutations under composition.
pub fn generated_group(gens: &[LetterPerm]) -> BTreeSet<LetterPerm> {
    let mut group = BTreeSet::from([LetterPerm::identity()]);
    let mut frontier = vec![LetterPerm::identity()];
    while let Some(p) = frontier.pop() {
        for g in gens {
            let q = g.compose(&p);
            if group.insert(q) {
                frontier.push(q);
            }
        }
    }
    group
}

/// How an isometry fixing `v` permutes the link of `v`, in reaching letters.
pub fn link_permutation(i: &IsometryKey, v: &CosetKey) -> Result<LetterPerm> {
    if i.apply(v) != *v {
        return Err(Error::NotStabilizing { vertex: v.to_string() });
    }
    let lk = link(v);
    let mut p = [0u8; 12];
    for (l, key) in &lk.nodes {
        let image = i.apply(key);
        let target = lk.node_of(&image).ok_or(Error::LinkNotPreserved)?;
        p[l.index()] = lk.nodes[target].0.index() as u8;
    }
    Ok(LetterPerm(p))
}

/// The eight keys `(ε, xᵏ)`, `ε ∈ {0,1}`, `k ∈ 0..4`.
pub fn stabilizer_keys() -> Vec<IsometryKey> {
    (0..2u8).flat_map(|eps| (0..4).map(move |k| IsometryKey::new(eps, &x_power(k)))).collect()
}

/// Finite witnesses that `ρ` has kernel exactly `⟨x⁴⟩`.
pub fn verify_kernel(radius: usize) -> Result<Report> {
    if radius == 0 {
        return Err(Error::InvalidArgument("kernel check needs radius >= 1".into()));
    }
    let ball = build_ball(radius)?;
    let base = CosetKey::base();
    let mut report = Report::new();

    let x4 = x_power(4);
    let moved = ball.vertices.iter().filter(|v| act(0, &x4, &v.key) != v.key).count();
    report.check(
        "kernel.x4_fixes_ball",
        format!("x^4 fixes every vertex of the radius-{radius} ball"),
        moved == 0,
        format!("{} vertices, {moved} moved", ball.vertices.len()),
    );
    report.check(
        "kernel.x4_key",
        "phi(x^4) is the identity key",
        phi(&x4).is_identity(),
        phi(&x4).to_string(),
    );

    let perms: Vec<LetterPerm> =
        (1..4).map(|k| link_permutation(&phi(&x_power(k)), &base)).collect::<Result<_>>()?;
    let nontrivial = perms.iter().all(|p| !p.is_identity());
    let distinct = perms.iter().collect::<HashSet<_>>().len() == 3;
    report.check(
        "kernel.x_powers_distinct",
        "phi(x), phi(x^2), phi(x^3) act non-trivially and distinctly on the base link",
        nontrivial && distinct,
        perms.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" | "),
    );

    let theta_perm = link_permutation(&theta(), &base)?;
    let id = LetterPerm::identity();
    let differs = perms.iter().chain(std::iter::once(&id)).all(|p| *p != theta_perm);
    report.check(
        "kernel.theta_distinct",
        "theta differs from phi(x^k), k = 0..3, on the base link",
        differs,
        theta_perm.to_string(),
    );
    Ok(report)
}

/// Every vertex `h⟨x⟩` of the ball is `φ_h(⟨x⟩)`.
pub fn verify_transitivity(ball: &Ball) -> Report {
    let base = CosetKey::base();
    let mut report = Report::new();
    for (i, v) in ball.vertices.iter().enumerate() {
        let image = phi(&v.rep).apply(&base);
        let rep = if v.rep.is_empty() { "1".to_string() } else { v.rep.to_string() };
        report.check(
            format!("orbit.v{i}"),
            format!("phi({rep}) maps the base vertex to v{i}"),
            image == v.key,
            "",
        );
    }
    report
}

/// The stabilizer of the base vertex in `J/⟨x⁴⟩` acts faithfully on its link.
pub fn verify_stabilizer_order() -> Result<Report> {
    let base = CosetKey::base();
    let keys = stabilizer_keys();
    let mut report = Report::new();

    let fixers = keys.iter().filter(|k| k.apply(&base) == base).count();
    report.check("stab.fix_base", "all 8 keys (eps, x^k) fix the base vertex", fixers == 8, format!("{fixers}/8"));

    let distinct_keys = keys.iter().collect::<HashSet<_>>().len();
    report.check(
        "stab.distinct_keys",
        "the 8 keys are pairwise distinct",
        distinct_keys == 8,
        format!("{distinct_keys} distinct"),
    );

    let perms: Vec<LetterPerm> = keys.iter().map(|k| link_permutation(k, &base)).collect::<Result<_>>()?;
    let distinct_perms = perms.iter().collect::<HashSet<_>>().len();
    report.check(
        "stab.distinct_link_perms",
        "the 8 keys act by pairwise distinct link permutations",
        distinct_perms == 8,
        format!("{distinct_perms} distinct"),
    );

    let group = generated_group(&perms);
    report.check(
        "stab.group_order",
        "the link permutations generate a group of order 8",
        group.len() == 8,
        format!("order {}", group.len()),
    );
    Ok(report)
}

/// A random element `(ε, g)` of `J` with `|g| ≤ max_len`.
fn random_element<R: Rng>(rng: &mut R, max_len: usize) -> (u8, Word) {
    let eps = rng.gen_range(0..2u8);
    (eps, sampling::random_word_upto(rng, max_len))
}

/// Seeded check of the homomorphism laws on every vertex of a ball.
pub fn verify_action_homomorphism(samples: usize, radius: usize, seed: u64) -> Result<Report> {
    let ball = build_ball(radius)?;
    Ok(verify_action_homomorphism_on(&ball, samples, seed))
}

type SamplePair = ((u8, Word), (u8, Word));

pub fn verify_action_homomorphism_on(ball: &Ball, samples: usize, seed: u64) -> Report {
    let mut rng = sampling::rng(seed);
    let pairs: Vec<SamplePair> = (0..samples)
        .map(|_| {
            let mut a = random_element(&mut rng, 8);
            let mut b = random_element(&mut rng, 8);
            a.0 = 0;
            b.0 = 0;
            (a, b)
        })
        .collect();
    let mixed: Vec<SamplePair> =
        (0..samples).map(|_| (random_element(&mut rng, 8), random_element(&mut rng, 8))).collect();

    // (failing sample index, witness) per sample, in order
    let check = |pairs: &[SamplePair]| -> Vec<Option<String>> {
        pairs
            .par_iter()
            .map(|((e1, g1), (e2, g2))| {
                let k1 = IsometryKey::new(*e1, g1);
                let k2 = IsometryKey::new(*e2, g2);
                let product = k1.compose(&k2);
                // The element (e1,g1)(e2,g2) of J, multiplied out without keys.
                let raw = g1.multiply(&twist(*e1, g2));
                let raw_eps = (e1 + e2) % 2;
                if product != IsometryKey::new(raw_eps, &raw) {
                    return Some(format!("key mismatch for ({e1},{g1})({e2},{g2})"));
                }
                let (n1, n2, n_raw) =
                    (NormalForm::from_word(g1), NormalForm::from_word(g2), NormalForm::from_word(&raw));
                for v in &ball.vertices {
                    let stepwise = k1.apply(&k2.apply(&v.key));
                    if product.apply(&v.key) != stepwise
                        || act_nf(*e1, &n1, &act_nf(*e2, &n2, &v.key)) != stepwise
                        || act_nf(raw_eps, &n_raw, &v.key) != stepwise
                    {
                        return Some(format!("({e1},{g1})({e2},{g2}) at {}", v.key));
                    }
                }
                None
            })
            .collect()
    };

    let mut report = Report::new();
    for (id, description, set) in [
        ("hom.phi", "phi(g1) phi(g2) = phi(g1 g2) on every ball vertex", &pairs),
        ("hom.rho_prime", "composition law for (eps, g) keys on every ball vertex", &mixed),
    ] {
        let results = check(set);
        let failures: Vec<&String> = results.iter().flatten().collect();
        let witness = match failures.first() {
            Some(w) => format!("{} failures, first: {w}", failures.len()),
            None => format!("{} pairs x {} vertices, 0 failures", set.len(), ball.vertices.len()),
        };
        report.check(id, description, failures.is_empty(), witness);
    }
    report
}

/// Edges and triangles of `ball` whose images stay in the ball are mapped to
/// edges and triangles.
pub fn verify_simplicial(i: &IsometryKey, ball: &Ball) -> Report {
    let images: Vec<Option<usize>> =
        ball.vertices.par_iter().map(|v| ball.index_of(&i.apply(&v.key))).collect();
    let mut report = Report::new();

    let (mut checked, mut bad) = (0usize, Vec::new());
    for e in &ball.edges {
        if let (Some(a), Some(b)) = (images[e.i], images[e.j]) {
            checked += 1;
            if a == b || !ball.are_adjacent(a, b) {
                bad.push(format!("{}-{}", e.i, e.j));
            }
        }
    }
    report.check(
        format!("simplicial.{}.edges", i),
        format!("{i} maps edges to edges"),
        bad.is_empty(),
        format!("{checked} edges checked, {} broken{}", bad.len(), first(&bad)),
    );

    let (mut checked, mut bad) = (0usize, Vec::new());
    for t in &ball.triangles {
        if let (Some(a), Some(b), Some(c)) = (images[t[0]], images[t[1]], images[t[2]]) {
            checked += 1;
            if a == b || b == c || a == c || !ball.has_triangle([a, b, c]) {
                bad.push(format!("{}-{}-{}", t[0], t[1], t[2]));
            }
        }
    }
    report.check(
        format!("simplicial.{}.triangles", i),
        format!("{i} maps triangles to triangles"),
        bad.is_empty(),
        format!("{checked} triangles checked, {} broken{}", bad.len(), first(&bad)),
    );
    report
}

fn first(items: &[String]) -> String {
    items.first().map(|s| format!(", first {s}")).unwrap_or_default()
}
