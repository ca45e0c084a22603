//! The CAT(0) 2-complex `X₀` for the braid group B₄ and the action of
//! Aut(B₄) on it.
//!
//! * [`braid`]: words, Garside normal forms, handle reduction.
//! * [`maps`]: presentations and endomorphisms given by generator images.
//! * [`complex`]: coset vertices, balls, links, girth, homology.
//! * [`action`]: isometry keys for `J/⟨x⁴⟩` and their verification suites.
//! * [`suites`]: the aggregated check suites behind the CLI.

pub mod action;
pub mod braid;
pub mod complex;
pub mod error;
pub mod maps;
pub mod report;
pub mod sampling;
pub mod suites;

pub use error::{Error, ParseError, Result};
