//! Self-contained dense symmetric linear algebra: cyclic Jacobi
//! eigendecomposition, shifted power iteration, LU determinant, and a
//! trigonometric real-cubic solver. Everything is plain `f64`.

use crate::error::{Error, Result};

/// Dense real symmetric matrix, full row-major storage. Construction
/// enforces exact symmetry and finiteness.
#[derive(Clone, Debug, PartialEq)]
pub struct SymmetricMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SymmetricMatrix {
    pub fn zeros(n: usize) -> SymmetricMatrix {
        SymmetricMatrix {
            n,
            data: vec![0.0; n * n],
        }
    }

    /// Build from full rows; rejects non-square, asymmetric, or non-finite
    /// input.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<SymmetricMatrix> {
        let n = rows.len();
        let mut m = SymmetricMatrix::zeros(n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Dimension {
                    expected: n,
                    got: row.len(),
                });
            }
            for (j, &v) in row.iter().enumerate() {
                if !v.is_finite() {
                    return Err(Error::NonFinite(i, j));
                }
                if rows[j][i] != v {
                    return Err(Error::NonFinite(j, i));
                }
                m.data[i * n + j] = v;
            }
        }
        Ok(m)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    /// Sets both (i, j) and (j, i).
    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.n + j] = v;
        self.data[j * self.n + i] = v;
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |acc, v| acc.max(v.abs()))
    }

    pub fn mat_vec(&self, x: &[f64]) -> Vec<f64> {
        assert_eq!(x.len(), self.n);
        self.data
            .chunks_exact(self.n.max(1))
            .map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// `M + delta * I`.
    pub fn shift_diagonal(&self, delta: f64) -> SymmetricMatrix {
        let mut m = self.clone();
        for i in 0..self.n {
            m.data[i * self.n + i] += delta;
        }
        m
    }

    /// Full eigendecomposition by cyclic Jacobi rotations. Eigenvalues come
    /// back sorted descending; eigenvectors are attached only when
    /// `want_vectors` is set, but the Perron pair is always populated.
    ///
    /// Convergence: the off-diagonal Frobenius norm drops below
    /// 1e-12 x the initial Frobenius norm (hard cap 100 sweeps; the cap is
    /// generous, symmetric Jacobi converges quadratically).
    pub fn jacobi_eigen(&self, want_vectors: bool) -> Result<SpectralResult> {
        let n = self.n;
        if let Some(pos) = self.data.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFinite(pos / n, pos % n));
        }
        if n == 0 {
            return Ok(SpectralResult {
                eigenvalues: vec![],
                eigenvectors: want_vectors.then(Vec::new),
                perron_value: 0.0,
                perron_vector: vec![],
            });
        }

        let mut a = self.clone();
        let mut v = SymmetricMatrix::zeros(n); // used as a plain square matrix
        for i in 0..n {
            v.data[i * n + i] = 1.0;
        }

        let target = 1e-12 * self.frobenius_norm();
        for _sweep in 0..100 {
            let mut off = 0.0;
            for p in 0..n {
                for q in (p + 1)..n {
                    off += 2.0 * a.get(p, q) * a.get(p, q);
                }
            }
            if off.sqrt() <= target {
                break;
            }
            for p in 0..n {
                for q in (p + 1)..n {
                    let apq = a.get(p, q);
                    if apq == 0.0 {
                        continue;
                    }
                    let app = a.get(p, p);
                    let aqq = a.get(q, q);
                    let theta = 0.5 * (aqq - app) / apq;
                    // Stable tangent of the rotation angle.
                    let t = if theta >= 0.0 {
                        1.0 / (theta + (1.0 + theta * theta).sqrt())
                    } else {
                        1.0 / (theta - (1.0 + theta * theta).sqrt())
                    };
                    let c = 1.0 / (1.0 + t * t).sqrt();
                    let s = t * c;

                    for k in 0..n {
                        let akp = a.get(k, p);
                        let akq = a.get(k, q);
                        a.data[k * n + p] = c * akp - s * akq;
                        a.data[k * n + q] = s * akp + c * akq;
                    }
                    for k in 0..n {
                        let apk = a.data[p * n + k];
                        let aqk = a.data[q * n + k];
                        a.data[p * n + k] = c * apk - s * aqk;
                        a.data[q * n + k] = s * apk + c * aqk;
                    }
                    a.data[p * n + q] = 0.0;
                    a.data[q * n + p] = 0.0;

                    for k in 0..n {
                        let vkp = v.data[k * n + p];
                        let vkq = v.data[k * n + q];
                        v.data[k * n + p] = c * vkp - s * vkq;
                        v.data[k * n + q] = s * vkp + c * vkq;
                    }
                }
            }
        }

        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&i, &j| {
            a.get(j, j)
                .partial_cmp(&a.get(i, i))
                .expect("eigenvalues are finite")
        });
        let eigenvalues: Vec<f64> = order.iter().map(|&i| a.get(i, i)).collect();
        let columns: Vec<Vec<f64>> = order
            .iter()
            .map(|&col| (0..n).map(|row| v.data[row * n + col]).collect())
            .collect();

        let perron_vector = normalize_sign(&columns[0]);
        Ok(SpectralResult {
            perron_value: eigenvalues[0],
            perron_vector,
            eigenvalues,
            eigenvectors: want_vectors.then_some(columns),
        })
    }

    /// Dominant eigenpair of a nonnegative irreducible matrix.
    ///
    /// Runs on `M + cI` with `c = 1 + max diagonal entry`, which makes the
    /// dominant eigenvalue simple and positive even when the spectrum is
    /// symmetric (bipartite adjacency), then subtracts the shift.
    pub fn power_iteration(&self, tol: f64, max_iters: usize) -> Result<(f64, Vec<f64>)> {
        let n = self.n;
        if n == 0 {
            return Err(Error::Dimension { expected: 1, got: 0 });
        }
        if self.data.iter().any(|&v| v < 0.0) {
            return Err(Error::RewritePrecondition(
                "power iteration requires a nonnegative matrix".into(),
            ));
        }
        let shift = 1.0 + (0..n).map(|i| self.get(i, i)).fold(0.0, f64::max);
        let mut v = vec![1.0 / (n as f64).sqrt(); n];
        let mut rayleigh = 0.0;
        let mut residual = f64::INFINITY;
        for _ in 0..max_iters {
            let mv = self.mat_vec(&v);
            rayleigh = dot(&v, &mv);
            residual = mv
                .iter()
                .zip(&v)
                .map(|(a, b)| (a - rayleigh * b).powi(2))
                .sum::<f64>()
                .sqrt();
            if residual <= tol {
                return Ok((rayleigh, v));
            }
            let mut w: Vec<f64> = mv.iter().zip(&v).map(|(a, b)| a + shift * b).collect();
            let norm = dot(&w, &w).sqrt();
            for x in &mut w {
                *x /= norm;
            }
            v = w;
        }
        Err(Error::PowerIterationStalled {
            iters: max_iters,
            residual,
            estimate: rayleigh,
            last_iterate: v,
        })
    }

    /// Determinant by LU elimination with partial pivoting.
    pub fn determinant(&self) -> f64 {
        let n = self.n;
        let mut a = self.data.clone();
        let mut det = 1.0;
        for col in 0..n {
            let pivot_row = (col..n)
                .max_by(|&i, &j| {
                    a[i * n + col]
                        .abs()
                        .partial_cmp(&a[j * n + col].abs())
                        .expect("finite entries")
                })
                .expect("nonempty range");
            let pivot = a[pivot_row * n + col];
            if pivot == 0.0 {
                return 0.0;
            }
            if pivot_row != col {
                for k in 0..n {
                    a.swap(col * n + k, pivot_row * n + k);
                }
                det = -det;
            }
            det *= pivot;
            for row in (col + 1)..n {
                let factor = a[row * n + col] / pivot;
                if factor == 0.0 {
                    continue;
                }
                for k in col..n {
                    a[row * n + k] -= factor * a[col * n + k];
                }
            }
        }
        det
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Flip the sign so the largest-magnitude entry is positive, and normalize.
fn normalize_sign(v: &[f64]) -> Vec<f64> {
    let norm = dot(v, v).sqrt();
    let lead = v
        .iter()
        .fold(0.0f64, |acc, &x| if x.abs() > acc.abs() { x } else { acc });
    let s = if lead < 0.0 { -1.0 } else { 1.0 };
    v.iter().map(|&x| s * x / norm).collect()
}

/// Sorted eigendecomposition output.
#[derive(Clone, Debug)]
pub struct SpectralResult {
    /// Descending.
    pub eigenvalues: Vec<f64>,
    /// `eigenvectors[i]` is the unit eigenvector for `eigenvalues[i]`.
    pub eigenvectors: Option<Vec<Vec<f64>>>,
    pub perron_value: f64,
    /// Unit vector, entrywise positive for nonnegative irreducible input.
    pub perron_vector: Vec<f64>,
}

/// `c3 x^3 + c2 x^2 + c1 x + c0` with `c3 != 0`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CubicPolynomial {
    pub c3: f64,
    pub c2: f64,
    pub c1: f64,
    pub c0: f64,
}

impl CubicPolynomial {
    pub fn new(c3: f64, c2: f64, c1: f64, c0: f64) -> Result<CubicPolynomial> {
        if c3 == 0.0 || !(c3.is_finite() && c2.is_finite() && c1.is_finite() && c0.is_finite()) {
            return Err(Error::NotCubic);
        }
        Ok(CubicPolynomial { c3, c2, c1, c0 })
    }

    pub fn eval(&self, x: f64) -> f64 {
        ((self.c3 * x + self.c2) * x + self.c1) * x + self.c0
    }

    fn eval_derivative(&self, x: f64) -> f64 {
        (3.0 * self.c3 * x + 2.0 * self.c2) * x + self.c1
    }

    pub fn max_abs_coefficient(&self) -> f64 {
        self.c3
            .abs()
            .max(self.c2.abs())
            .max(self.c1.abs())
            .max(self.c0.abs())
    }

    /// All three real roots, descending, with multiplicity. Errors when the
    /// discriminant is negative beyond tolerance (a genuine complex pair).
    ///
    /// Uses the trigonometric form for the casus irreducibilis, then one
    /// Newton step per root.
    pub fn solve_real(&self) -> Result<[f64; 3]> {
        // Monic reduction, then depress: x = t - b2/3.
        let b2 = self.c2 / self.c3;
        let b1 = self.c1 / self.c3;
        let b0 = self.c0 / self.c3;
        let p = b1 - b2 * b2 / 3.0;
        let q = 2.0 * b2 * b2 * b2 / 27.0 - b2 * b1 / 3.0 + b0;
        let offset = -b2 / 3.0;

        let scale = p.abs().powi(3).max(q * q).max(f64::MIN_POSITIVE);
        let discriminant = -4.0 * p * p * p - 27.0 * q * q;
        if discriminant < -1e-10 * scale {
            return Err(Error::ComplexRoots(discriminant));
        }

        let mut roots = if p >= 0.0 {
            // Discriminant >= 0 forces p <= 0 up to rounding, so p is a
            // numerical zero here: triple root.
            [offset; 3]
        } else {
            let m = 2.0 * (-p / 3.0).sqrt();
            let arg = (3.0 * q / (p * m)).clamp(-1.0, 1.0);
            let phi = arg.acos();
            [
                m * (phi / 3.0).cos() + offset,
                m * ((phi + 2.0 * std::f64::consts::PI) / 3.0).cos() + offset,
                m * ((phi + 4.0 * std::f64::consts::PI) / 3.0).cos() + offset,
            ]
        };

        for r in &mut roots {
            let d = self.eval_derivative(*r);
            if d.abs() > 1e-30 {
                let step = self.eval(*r) / d;
                if step.is_finite() && step.abs() < 1.0 {
                    *r -= step;
                }
            }
        }
        roots.sort_by(|a, b| b.partial_cmp(a).expect("finite roots"));
        Ok(roots)
    }
}
