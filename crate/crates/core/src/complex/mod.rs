//! The coset complex `X₀`: vertices `g⟨x⟩`, an edge for right multiplication
//! by a signed letter, a triangle on every 3-clique.

pub mod ball;
pub mod coset;
pub mod girth;
pub mod homology;
pub mod link;

pub use ball::{build_ball, build_ball_with_cap, Ball, BallEdge, BallVertex, DEFAULT_RADIUS_CAP};
pub use coset::{adjacent, coset_key, neighbors, CosetKey};
pub use girth::{injective_girth, shortest_cycle, SimpleGraph};
pub use homology::{homology_evidence, Homology};
pub use link::{
    link, link_girth, spellings_of_x, verify_link_condition, verify_spelling_edge_bijection,
    LinkGraph,
};
