//! Betti numbers of a ball, with exact ranks over ℚ and over 𝔽₂.

use std::collections::HashMap;
use std::ops::{Mul, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::ball::Ball;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Homology {
    pub b0: usize,
    pub b1_rational: usize,
    pub b1_mod2: usize,
}

/// The two-element field.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Gf2(pub bool);

impl Zero for Gf2 {
    fn zero() -> Self {
        Gf2(false)
    }
    fn is_zero(&self) -> bool {
        !self.0
    }
}

impl One for Gf2 {
    fn one() -> Self {
        Gf2(true)
    }
}

// Addition in 𝔽₂ is xor, multiplication is and.
#[allow(clippy::suspicious_arithmetic_impl)]
impl std::ops::Add for Gf2 {
    type Output = Gf2;
    fn add(self, rhs: Gf2) -> Gf2 {
        Gf2(self.0 ^ rhs.0)
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Sub for Gf2 {
    type Output = Gf2;
    fn sub(self, rhs: Gf2) -> Gf2 {
        Gf2(self.0 ^ rhs.0)
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Mul for Gf2 {
    type Output = Gf2;
    fn mul(self, rhs: Gf2) -> Gf2 {
        Gf2(self.0 & rhs.0)
    }
}

/// Exact scalars for sparse elimination.
pub trait FieldElem: Clone + Zero + One + Sub<Output = Self> + Mul<Output = Self> {
    fn from_sign(negative: bool) -> Self;
    /// `self / other`, `other` non-zero.
    fn ratio(&self, other: &Self) -> Self;
}

impl FieldElem for Gf2 {
    fn from_sign(_: bool) -> Self {
        Gf2(true)
    }
    fn ratio(&self, _: &Self) -> Self {
        *self
    }
}

impl FieldElem for BigRational {
    fn from_sign(negative: bool) -> Self {
        BigRational::from_integer(BigInt::from(if negative { -1 } else { 1 }))
    }
    fn ratio(&self, other: &Self) -> Self {
        self / other
    }
}

type SparseRow<F> = Vec<(usize, F)>;

/// `row - factor · pivot`, both sorted by column.
fn axpy<F: FieldElem>(row: &SparseRow<F>, factor: &F, pivot: &SparseRow<F>) -> SparseRow<F> {
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot.len() {
        let take_row = j >= pivot.len() || (i < row.len() && row[i].0 < pivot[j].0);
        let take_pivot = i >= row.len() || (j < pivot.len() && pivot[j].0 < row[i].0);
        if take_row {
            out.push(row[i].clone());
            i += 1;
        } else if take_pivot {
            out.push((pivot[j].0, F::zero() - factor.clone() * pivot[j].1.clone()));
            j += 1;
        } else {
            let v = row[i].1.clone() - factor.clone() * pivot[j].1.clone();
            if !v.is_zero() {
                out.push((row[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Rank of a sparse matrix given as rows of `(column, ±1)` entries.
pub fn rank<F: FieldElem>(rows: &[Vec<(usize, bool)>]) -> usize {
    let mut pivots: HashMap<usize, SparseRow<F>> = HashMap::new();
    for r in rows {
        let mut row: SparseRow<F> = r.iter().map(|&(c, neg)| (c, F::from_sign(neg))).collect();
        row.sort_by_key(|e| e.0);
        while let Some((lead, value)) = row.first().cloned() {
            match pivots.get(&lead) {
                Some(p) => {
                    let factor = value.ratio(&p[0].1);
                    row = axpy(&row, &factor, p);
                }
                None => {
                    pivots.insert(lead, row);
                    break;
                }
            }
        }
    }
    pivots.len()
}

fn components(n: usize, edges: impl Iterator<Item = (usize, usize)>) -> usize {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut count = n;
    for (a, b) in edges {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra] = rb;
            count -= 1;
        }
    }
    count
}

/// Rows of ∂₂: triangle `[i,j,k]` maps to `[j,k] − [i,k] + [i,j]`, with edges
/// oriented from lower to higher index.
pub fn triangle_boundary_rows(ball: &Ball) -> Vec<Vec<(usize, bool)>> {
    let edge_index: HashMap<(usize, usize), usize> =
        ball.edges.iter().enumerate().map(|(n, e)| ((e.i, e.j), n)).collect();
    ball.triangles
        .iter()
        .map(|&[i, j, k]| {
            vec![(edge_index[&(j, k)], false), (edge_index[&(i, k)], true), (edge_index[&(i, j)], false)]
        })
        .collect()
}

/// `b₀` from components, `b₁ = dim ker ∂₁ − rank ∂₂` over ℚ and over 𝔽₂.
pub fn homology_evidence(ball: &Ball) -> Homology {
    let v = ball.vertices.len();
    let e = ball.edges.len();
    let b0 = components(v, ball.edges.iter().map(|e| (e.i, e.j)));
    let cycles = e - (v - b0);
    let rows = triangle_boundary_rows(ball);
    let rank_q = rank::<BigRational>(&rows);
    let rank_2 = rank::<Gf2>(&rows);
    Homology { b0, b1_rational: cycles - rank_q, b1_mod2: cycles - rank_2 }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::ball::build_ball;

    #[test]
    fn rank_small_matrices() {
        // Boundary of a hollow tetrahedron's faces: rank 3 over any field.
        let rows = vec![
            vec![(0, false), (1, true), (3, false)],
            vec![(0, false), (2, true), (4, false)],
            vec![(1, false), (2, true), (5, false)],
            vec![(3, false), (4, true), (5, false)],
        ];
        assert_eq!(rank::<BigRational>(&rows), 3);
        assert_eq!(rank::<Gf2>(&rows), 3);
    }

    #[test]
    fn rank_detects_two_torsion() {
        // [[1,1],[1,-1]] has rank 2 over ℚ but 1 over 𝔽₂.
        let rows = vec![vec![(0, false), (1, false)], vec![(0, false), (1, true)]];
        assert_eq!(rank::<BigRational>(&rows), 2);
        assert_eq!(rank::<Gf2>(&rows), 1);
    }

    #[test]
    fn small_balls_are_acyclic() {
        let h0 = homology_evidence(&build_ball(0).unwrap());
        assert_eq!(h0, Homology { b0: 1, b1_rational: 0, b1_mod2: 0 });
        let h1 = homology_evidence(&build_ball(1).unwrap());
        assert_eq!(h1, Homology { b0: 1, b1_rational: 0, b1_mod2: 0 });
    }
}
