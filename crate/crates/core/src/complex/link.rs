//! Vertex links, the spellings of `x`, and the link condition.

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;

use super::ball::Ball;
use super::coset::{coset_key, neighbors, CosetKey};
use super::girth::{shortest_cycle, SimpleGraph};
use crate::braid::{equals, x_word, Generator, Letter, Word};
use crate::report::Report;

/// Angle subtended by a link arc, in units of π.
pub const ARC_ANGLE_OVER_PI: f64 = 1.0 / 3.0;
/// Simple cycles in a link must reach 2π, i.e. at least six arcs.
pub const MIN_LINK_GIRTH: usize = 6;

/// The link of a vertex: its twelve neighbors, tagged by the letter reaching
/// each, and an arc for every pair of neighbors that are adjacent.
#[derive(Debug, Clone)]
pub struct LinkGraph {
    pub center: CosetKey,
    pub nodes: Vec<(Letter, CosetKey)>,
    /// `(i, j)` with `i < j`, sorted.
    pub arcs: Vec<(usize, usize)>,
}

impl LinkGraph {
    pub fn graph(&self) -> SimpleGraph {
        SimpleGraph::from_edges(self.nodes.len(), &self.arcs)
    }

    pub fn node_of(&self, key: &CosetKey) -> Option<usize> {
        self.nodes.iter().position(|(_, k)| k == key)
    }

    pub fn node_of_letter(&self, l: Letter) -> Option<usize> {
        self.nodes.iter().position(|(m, _)| *m == l)
    }

    pub fn degree_sum(&self) -> usize {
        2 * self.arcs.len()
    }

    /// Arcs as unordered letter pairs; two links with the same set are
    /// isomorphic by the letter labelling.
    pub fn letter_arcs(&self) -> BTreeSet<(Letter, Letter)> {
        self.arcs
            .iter()
            .map(|&(i, j)| {
                let (a, b) = (self.nodes[i].0, self.nodes[j].0);
                (a.min(b), a.max(b))
            })
            .collect()
    }

    /// Undirected DOT graph whose node identifiers are the reaching letters.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph link {\n");
        for (l, _) in &self.nodes {
            let _ = writeln!(s, "  {l};");
        }
        for &(i, j) in &self.arcs {
            let _ = writeln!(s, "  {} -- {};", self.nodes[i].0, self.nodes[j].0);
        }
        s.push_str("}\n");
        s
    }

    /// A summary line, then one line per node with its adjacent letters.
    pub fn to_text(&self) -> String {
        let g = self.graph();
        let mut s = String::new();
        let _ = writeln!(s, "LINK center={} nodes={} arcs={}", self.center, self.nodes.len(), self.arcs.len());
        for (i, (l, _)) in self.nodes.iter().enumerate() {
            let mut adj: Vec<Letter> = g.neighbors(i).iter().map(|&j| self.nodes[j].0).collect();
            adj.sort();
            let adj: String = adj.iter().map(|l| l.to_char()).collect();
            let _ = writeln!(s, "N {l} {adj}");
        }
        s
    }
}

/// The link of `v`, computed from adjacency tests alone.
pub fn link(v: &CosetKey) -> LinkGraph {
    let nodes = neighbors(v);
    let position: HashMap<&CosetKey, usize> =
        nodes.iter().enumerate().map(|(i, (_, k))| (k, i)).collect();
    let mut arcs = BTreeSet::new();
    for (i, (_, key)) in nodes.iter().enumerate() {
        for (_, second) in neighbors(key) {
            if let Some(&j) = position.get(&second) {
                arcs.insert((i.min(j), i.max(j)));
            }
        }
    }
    LinkGraph { center: v.clone(), nodes, arcs: arcs.into_iter().collect() }
}

/// Girth of the link graph; `None` is infinity.
pub fn link_girth(l: &LinkGraph) -> Option<usize> {
    super::girth::injective_girth(&l.graph())
}

/// Renders a cycle of link nodes as its letters, e.g. `a-e-c-…`.
pub fn cycle_letters(l: &LinkGraph, cycle: &[usize]) -> String {
    cycle.iter().map(|&i| l.nodes[i].0.to_string()).collect::<Vec<_>>().join("-")
}

/// The positive words `pqr` over `a..f` equal to `x = bac`, in lexicographic
/// order.
pub fn spellings_of_x() -> Vec<Word> {
    let x = x_word();
    let mut out = Vec::new();
    for p in Generator::ALL {
        for q in Generator::ALL {
            for r in Generator::ALL {
                let word = Word(vec![Letter::pos(p), Letter::pos(q), Letter::pos(r)]);
                if equals(&word, &x) {
                    out.push(word);
                }
            }
        }
    }
    out
}

/// For each spelling `pqr` of `x`, the triangle `{⟨x⟩, p⟨x⟩, pq⟨x⟩}` exists,
/// and spelling ↦ arc `{p⟨x⟩, pq⟨x⟩}` is a bijection onto the base link.
pub fn verify_spelling_edge_bijection() -> Report {
    let mut report = Report::new();
    let base = CosetKey::base();
    let lk = link(&base);
    let spellings = spellings_of_x();
    let mut image: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut all_mapped = true;
    for s in &spellings {
        let letters = s.letters();
        let p = coset_key(&Word(letters[..1].to_vec()));
        let pq = coset_key(&Word(letters[..2].to_vec()));
        let adjacent = base.neighbor(letters[0]) == p
            && p.neighbor(letters[1]) == pq
            && pq.neighbor(letters[2]) == base;
        let arc = match (lk.node_of(&p), lk.node_of(&pq)) {
            (Some(i), Some(j)) if i != j => Some((i.min(j), i.max(j))),
            _ => None,
        };
        let is_arc = arc.is_some_and(|a| lk.arcs.binary_search(&a).is_ok());
        all_mapped &= is_arc;
        if let Some(a) = arc {
            image.insert(a);
        }
        let witness = match arc {
            Some((i, j)) => format!("arc {}-{}", lk.nodes[i].0, lk.nodes[j].0),
            None => "no arc".to_string(),
        };
        report.check(
            format!("spelling.{s}"),
            format!("triangle <x>, {}<x>, {}<x> is pairwise adjacent", &s.to_string()[..1], &s.to_string()[..2]),
            adjacent && is_arc,
            witness,
        );
    }
    report.check(
        "spelling.injective",
        "distinct spellings give distinct link arcs",
        all_mapped && image.len() == spellings.len(),
        format!("{} spellings, {} distinct arcs", spellings.len(), image.len()),
    );
    report.check(
        "spelling.onto",
        "every arc of the base link comes from a spelling",
        image.len() == lk.arcs.len() && image.iter().all(|a| lk.arcs.binary_search(a).is_ok()),
        format!("{} of {} arcs", image.len(), lk.arcs.len()),
    );
    report
}

/// Checks, at every vertex of `ball`, that each simple cycle in the link has
/// at least six arcs, so total angle at least 6·π/3 = 2π.
pub fn verify_link_condition(ball: &Ball) -> Report {
    let mut report = Report::new();
    for (i, v) in ball.vertices.iter().enumerate() {
        let lk = link(&v.key);
        let cycle = shortest_cycle(&lk.graph());
        let (passed, witness) = match &cycle {
            None => (true, "girth=inf".to_string()),
            Some(c) => {
                let angle = c.len() as f64 * ARC_ANGLE_OVER_PI;
                (
                    c.len() >= MIN_LINK_GIRTH,
                    format!("girth={} angle={:.3}pi cycle={}", c.len(), angle, cycle_letters(&lk, c)),
                )
            }
        };
        report.check(format!("linkcond.v{i}"), "injective loops in the link reach 2pi", passed, witness);
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::w;
    use crate::complex::ball::build_ball;
    use crate::complex::girth::is_simple_cycle;

    #[test]
    fn base_link_counts() {
        let lk = link(&CosetKey::base());
        assert_eq!(lk.nodes.len(), 12);
        assert_eq!(lk.arcs.len(), 16);
        assert_eq!(lk.degree_sum(), 32);
        let g = lk.graph();
        assert_eq!((0..12).map(|i| g.degree(i)).sum::<usize>(), 32);
    }

    #[test]
    fn base_link_girth_is_exactly_six() {
        let lk = link(&CosetKey::base());
        let c = shortest_cycle(&lk.graph()).unwrap();
        assert_eq!(c.len(), 6);
        assert!(is_simple_cycle(&lk.graph(), &c));
        assert_eq!(link_girth(&lk), Some(6));
    }

    #[test]
    fn links_are_letter_isomorphic() {
        let base = link(&CosetKey::base()).letter_arcs();
        for text in ["a", "B", "cd", "EfA", "bacD"] {
            assert_eq!(link(&coset_key(&w(text))).letter_arcs(), base, "{text}");
        }
    }

    #[test]
    fn sixteen_spellings() {
        let s = spellings_of_x();
        assert_eq!(s.len(), 16);
        assert!(s.contains(&w("bac")));
        assert!(s.contains(&w("aec")));
        let r = verify_spelling_edge_bijection();
        assert!(r.passed(), "{:?}", r.failures().collect::<Vec<_>>());
    }

    #[test]
    fn spelling_bac_triangle() {
        let b = coset_key(&w("b"));
        let ba = coset_key(&w("ba"));
        let base = CosetKey::base();
        assert!(crate::complex::coset::adjacent(&base, &b).unwrap().is_some());
        assert!(crate::complex::coset::adjacent(&b, &ba).unwrap().is_some());
        assert!(crate::complex::coset::adjacent(&ba, &base).unwrap().is_some());
    }

    #[test]
    fn link_condition_small_balls() {
        assert!(verify_link_condition(&build_ball(0).unwrap()).passed());
        assert_eq!(verify_link_condition(&build_ball(0).unwrap()).len(), 1);
        assert!(verify_link_condition(&build_ball(1).unwrap()).passed());
    }

    #[test]
    fn dot_export() {
        let dot = link(&CosetKey::base()).to_dot();
        assert!(dot.starts_with("graph link {\n"));
        assert_eq!(dot.matches(" -- ").count(), 16);
        assert!(dot.ends_with("}\n"));
    }
}
