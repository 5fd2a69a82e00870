//! Spectral theory of cactus graphs under the A_alpha matrix family
//! `A_alpha(G) = alpha D(G) + (1 - alpha) A(G)`.
//!
//! The crate covers four connected capabilities:
//!
//! - [`graph`] / [`linalg`] / [`spectral`]: simple-graph structure queries
//!   and a self-contained dense symmetric eigensolver stack, specialized to
//!   the A_alpha family (adjacency at alpha = 0, half the signless
//!   Laplacian at alpha = 1/2).
//! - [`transforms`]: radius-increasing rewrites on cacti (cycle shrinking,
//!   pendant-path contraction, cut-edge and cut-vertex merging) plus a
//!   greedy ascent that drives any cactus to the extremal one.
//! - [`extremal`]: the triangles-and-pendants extremal cactus, its cubic
//!   characteristic factor and closed-form spectrum, and a numeric check of
//!   the determinant factorization.
//! - [`enumeration`]: exhaustive generation of all small cactus isomorphism
//!   classes and the certification sweeps built on top of it.
//!
//! Start with the runnable examples (`cargo run --example spectrum`, etc.)
//! or the `cactus-spectra` binary, which surfaces everything as
//! subcommands.

pub mod cli;
pub mod enumeration;
pub mod error;
pub mod extremal;
pub mod graph;
pub mod linalg;
pub mod rng;
pub mod spectral;
pub mod transforms;

pub use enumeration::{CanonicalForm, ExtremalityReport, LemmaSweepReport};
pub use error::{Error, Result};
pub use extremal::{ExtremalParams, ExtremalSpectrum};
pub use graph::{Block, CactusProfile, Graph};
pub use linalg::{CubicPolynomial, SpectralResult, SymmetricMatrix};
pub use spectral::Alpha;
pub use transforms::{RewriteKind, RewriteStep};
