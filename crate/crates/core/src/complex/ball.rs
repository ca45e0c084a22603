//! Finite induced subcomplexes of `X₀` around the base vertex.

use std::collections::HashMap;
use std::fmt::Write as _;

use rayon::prelude::*;

use super::coset::{neighbors, CosetKey};
use crate::braid::{Letter, Word};
use crate::error::{Error, Result};

pub const DEFAULT_RADIUS_CAP: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BallVertex {
    pub key: CosetKey,
    pub depth: usize,
    /// The key's stored representative `h`, with this vertex equal to `h⟨x⟩`.
    pub rep: Word,
}

/// Edge `(i, j, ℓ)` with `i < j` and `hᵢℓ⟨x⟩ = vⱼ` for the stored
/// representative `hᵢ` of `vᵢ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BallEdge {
    pub i: usize,
    pub j: usize,
    pub label: Letter,
}

/// All vertices within `radius` of the base, with every edge and triangle
/// among them.
///
/// Vertices are ordered by depth, then representative length, then
/// representative in the letter order `a<…<f<A<…<F`; edges and triangles are
/// sorted by index.
#[derive(Debug, Clone)]
pub struct Ball {
    pub radius: usize,
    pub vertices: Vec<BallVertex>,
    pub edges: Vec<BallEdge>,
    pub triangles: Vec<[usize; 3]>,
    index: HashMap<CosetKey, usize>,
    adjacency: Vec<Vec<usize>>,
}

impl Ball {
    pub fn index_of(&self, key: &CosetKey) -> Option<usize> {
        self.index.get(key).copied()
    }

    pub fn contains(&self, key: &CosetKey) -> bool {
        self.index.contains_key(key)
    }

    /// Sorted indices of the ball vertices adjacent to `i`.
    pub fn adjacent_indices(&self, i: usize) -> &[usize] {
        &self.adjacency[i]
    }

    pub fn are_adjacent(&self, i: usize, j: usize) -> bool {
        self.adjacency[i].binary_search(&j).is_ok()
    }

    pub fn has_triangle(&self, mut t: [usize; 3]) -> bool {
        t.sort_unstable();
        self.triangles.binary_search(&t).is_ok()
    }

    /// Line-oriented text export.
    ///
    /// ```text
    /// BALL radius=<r> vertices=<n> edges=<m> triangles=<t>
    /// V <index> <depth> <word>
    /// E <i> <j> <letter>
    /// T <i> <j> <k>
    /// ```
    /// `<word>` is the stored representative; the empty word is written `1`.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "BALL radius={} vertices={} edges={} triangles={}",
            self.radius,
            self.vertices.len(),
            self.edges.len(),
            self.triangles.len()
        );
        for (i, v) in self.vertices.iter().enumerate() {
            let word = if v.rep.is_empty() { "1".to_string() } else { v.rep.to_string() };
            let _ = writeln!(s, "V {i} {} {word}", v.depth);
        }
        for e in &self.edges {
            let _ = writeln!(s, "E {} {} {}", e.i, e.j, e.label);
        }
        for t in &self.triangles {
            let _ = writeln!(s, "T {} {} {}", t[0], t[1], t[2]);
        }
        s
    }
}

pub fn build_ball(radius: usize) -> Result<Ball> {
    build_ball_with_cap(radius, DEFAULT_RADIUS_CAP)
}

pub fn build_ball_with_cap(radius: usize, cap: usize) -> Result<Ball> {
    if radius > cap {
        return Err(Error::RadiusCap { radius, cap });
    }
    let mut vertices = vec![BallVertex { key: CosetKey::base(), depth: 0, rep: Word::identity() }];
    let mut index = HashMap::from([(CosetKey::base(), 0usize)]);
    let mut nbrs: Vec<Vec<(Letter, CosetKey)>> = Vec::new();

    let mut layer_start = 0;
    for depth in 0..=radius {
        let layer_end = vertices.len();
        let layer: Vec<Vec<(Letter, CosetKey)>> =
            vertices[layer_start..layer_end].par_iter().map(|v| neighbors(&v.key)).collect();
        if depth < radius {
            let mut fresh: Vec<CosetKey> = layer
                .iter()
                .flatten()
                .filter(|(_, k)| !index.contains_key(k))
                .map(|(_, k)| k.clone())
                .collect();
            fresh.sort();
            fresh.dedup();
            let mut next: Vec<BallVertex> = fresh
                .into_par_iter()
                .map(|key| {
                    let rep = key.representative();
                    BallVertex { key, depth: depth + 1, rep }
                })
                .collect();
            next.sort_by(|a, b| (a.rep.len(), &a.rep).cmp(&(b.rep.len(), &b.rep)));
            for v in next {
                index.insert(v.key.clone(), vertices.len());
                vertices.push(v);
            }
        }
        nbrs.extend(layer);
        layer_start = layer_end;
    }

    let n = vertices.len();
    let mut edges = Vec::new();
    let mut adjacency = vec![Vec::new(); n];
    for (i, ns) in nbrs.iter().enumerate() {
        for (l, key) in ns {
            if let Some(&j) = index.get(key) {
                adjacency[i].push(j);
                if i < j {
                    edges.push(BallEdge { i, j, label: *l });
                }
            }
        }
    }
    for a in adjacency.iter_mut() {
        a.sort_unstable();
        a.dedup();
    }
    edges.sort();

    let mut triangles = Vec::new();
    for e in &edges {
        let (ai, aj) = (&adjacency[e.i], &adjacency[e.j]);
        for &k in ai.iter().filter(|&&k| k > e.j) {
            if aj.binary_search(&k).is_ok() {
                triangles.push([e.i, e.j, k]);
            }
        }
    }
    triangles.sort_unstable();

    Ok(Ball { radius, vertices, edges, triangles, index, adjacency })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{equals, x_power};
    use crate::complex::coset::{adjacent, coset_key};

    #[test]
    fn radius_zero() {
        let b = build_ball(0).unwrap();
        assert_eq!((b.vertices.len(), b.edges.len(), b.triangles.len()), (1, 0, 0));
        assert_eq!(b.to_text(), "BALL radius=0 vertices=1 edges=0 triangles=0\nV 0 0 1\n");
    }

    #[test]
    fn radius_one_has_thirteen_vertices() {
        let b = build_ball(1).unwrap();
        assert_eq!(b.vertices.len(), 13);
        let at_base = b.triangles.iter().filter(|t| t[0] == 0).count();
        assert_eq!(at_base, 16);
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(build_ball(5), Err(Error::RadiusCap { radius: 5, cap: 4 })));
        assert!(build_ball_with_cap(1, 0).is_err());
    }

    #[test]
    fn ordering_and_representatives() {
        let b = build_ball(2).unwrap();
        for pair in b.vertices.windows(2) {
            let (u, v) = (&pair[0], &pair[1]);
            assert!((u.depth, u.rep.len(), &u.rep) < (v.depth, v.rep.len(), &v.rep));
        }
        for (i, v) in b.vertices.iter().enumerate() {
            assert_eq!(coset_key(&v.rep), v.key);
            assert_eq!(b.index_of(&v.key), Some(i));
        }
    }

    #[test]
    fn depths_are_graph_distances() {
        let b = build_ball(2).unwrap();
        for (i, v) in b.vertices.iter().enumerate().skip(1) {
            let closer = b.adjacent_indices(i).iter().any(|&j| b.vertices[j].depth + 1 == v.depth);
            assert!(closer, "vertex {i} has no neighbor one step closer");
            assert!(b.adjacent_indices(i).iter().all(|&j| b.vertices[j].depth.abs_diff(v.depth) <= 1));
        }
    }

    #[test]
    fn edges_are_induced_and_labelled() {
        let b = build_ball(2).unwrap();
        for e in &b.edges {
            assert!(e.i < e.j);
            let (u, v) = (&b.vertices[e.i], &b.vertices[e.j]);
            assert_eq!(u.key.neighbor(e.label), v.key);
            // hᵤℓ = h_v xᵐ, so the reverse label is ℓ⁻¹ conjugated by xᵐ.
            let m = (u.rep.exponent_sum() + e.label.sign.value() - v.rep.exponent_sum()) / 3;
            let reverse = adjacent(&v.key, &u.key).unwrap().unwrap();
            let expected = x_power(m).multiply(&Word(vec![e.label.inverse()])).multiply(&x_power(-m));
            assert!(equals(&Word(vec![reverse]), &expected));
            if m == 0 {
                assert_eq!(reverse, e.label.inverse());
            }
        }
    }
}
