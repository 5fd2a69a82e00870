//! The A_alpha family: A_alpha(G) = alpha D(G) + (1 - alpha) A(G).
//!
//! At alpha = 0 this is the adjacency matrix; twice the alpha = 1/2 matrix
//! is the signless Laplacian Q = D + A; alpha = 1 degenerates to the degree
//! diagonal and is supported only where a spectrum (not a Perron vector)
//! is asked for.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::{SpectralResult, SymmetricMatrix};

/// Convex-combination weight in [0, 1].
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(try_from = "f64", into = "f64")]
pub struct Alpha(f64);

impl Alpha {
    pub fn new(value: f64) -> Result<Alpha> {
        if !(0.0..=1.0).contains(&value) || !value.is_finite() {
            return Err(Error::AlphaRange(value));
        }
        Ok(Alpha(value))
    }

    pub fn value(self) -> f64 {
        self.0
    }

    /// Guard for operations whose guarantees hold only for alpha < 1
    /// (Perron positivity, strict radius increase).
    pub fn require_strict(self, context: &'static str) -> Result<()> {
        if self.0 >= 1.0 {
            return Err(Error::AlphaNotStrict(context));
        }
        Ok(())
    }
}

impl TryFrom<f64> for Alpha {
    type Error = Error;
    fn try_from(v: f64) -> Result<Alpha> {
        Alpha::new(v)
    }
}

impl From<Alpha> for f64 {
    fn from(a: Alpha) -> f64 {
        a.0
    }
}

impl std::fmt::Display for Alpha {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// alpha * D + (1 - alpha) * A.
pub fn alpha_matrix(g: &Graph, alpha: Alpha) -> SymmetricMatrix {
    let a = alpha.value();
    let mut m = SymmetricMatrix::zeros(g.n());
    for (v, d) in g.degrees().into_iter().enumerate() {
        m.set(v, v, a * d as f64);
    }
    for (u, v) in g.edges() {
        m.set(u, v, 1.0 - a);
    }
    m
}

/// Q = D + A. Entrywise exactly twice the alpha = 1/2 matrix.
pub fn signless_laplacian(g: &Graph) -> SymmetricMatrix {
    let mut m = SymmetricMatrix::zeros(g.n());
    for (v, d) in g.degrees().into_iter().enumerate() {
        m.set(v, v, d as f64);
    }
    for (u, v) in g.edges() {
        m.set(u, v, 1.0);
    }
    m
}

/// The quadratic form X^T A_alpha X computed edge-wise:
/// alpha * sum d_i x_i^2 + 2 (1 - alpha) * sum over edges of x_i x_j.
pub fn quadratic_form(g: &Graph, alpha: Alpha, x: &[f64]) -> Result<f64> {
    if x.len() != g.n() {
        return Err(Error::Dimension {
            expected: g.n(),
            got: x.len(),
        });
    }
    let a = alpha.value();
    let degree_part: f64 = g
        .degrees()
        .into_iter()
        .zip(x)
        .map(|(d, xi)| d as f64 * xi * xi)
        .sum();
    let edge_part: f64 = g.edges().map(|(u, v)| x[u] * x[v]).sum();
    Ok(a * degree_part + 2.0 * (1.0 - a) * edge_part)
}

/// Largest eigenvalue of A_alpha with its positive unit eigenvector.
/// Requires a connected graph and alpha < 1 (Perron uniqueness fails for
/// the degree diagonal at alpha = 1).
pub fn spectral_radius(g: &Graph, alpha: Alpha) -> Result<(f64, Vec<f64>)> {
    alpha.require_strict("Perron vector extraction")?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let r = alpha_matrix(g, alpha).jacobi_eigen(false)?;
    Ok((r.perron_value, r.perron_vector))
}

/// Worst coordinate violation of the eigenequations:
/// max_i | lambda x_i - alpha d_i x_i - (1 - alpha) sum_{j ~ i} x_j |.
pub fn eigen_residual(g: &Graph, alpha: Alpha, lambda: f64, x: &[f64]) -> Result<f64> {
    if x.len() != g.n() {
        return Err(Error::Dimension {
            expected: g.n(),
            got: x.len(),
        });
    }
    let a = alpha.value();
    let deg = g.degrees();
    let adj = g.adjacency();
    let mut worst = 0.0f64;
    for i in 0..g.n() {
        let neighbor_sum: f64 = adj[i].iter().map(|&j| x[j]).sum();
        let r = lambda * x[i] - a * deg[i] as f64 * x[i] - (1.0 - a) * neighbor_sum;
        worst = worst.max(r.abs());
    }
    Ok(worst)
}

/// All eigenvalues of A_alpha, sorted descending. Valid for any graph and
/// the full closed interval of alpha.
pub fn full_spectrum(g: &Graph, alpha: Alpha) -> Result<SpectralResult> {
    alpha_matrix(g, alpha).jacobi_eigen(true)
}
