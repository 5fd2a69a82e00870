//! The extremal cactus on n vertices with k cycles: k triangles and
//! t = n - 2k - 1 pendant edges all meeting at one center vertex. Its
//! characteristic polynomial factors as
//!
//! ```text
//! (a - x)^(t-1) (a - x + 1)^(k-1) (3a - x - 1)^k f(x)
//! ```
//!
//! with a cubic f; this module builds the graph, assembles the spectrum
//! from the factors (handling the t = 0 and k = 0 cancellations), and
//! checks the factorization against an LU determinant at random points.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::CubicPolynomial;
use crate::rng::SplitMix64;
use crate::spectral::{alpha_matrix, Alpha};

/// Feasible (n, k) pair with the pendant count t = n - 2k - 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ExtremalParams {
    pub n: usize,
    pub k: usize,
    pub t: usize,
}

impl ExtremalParams {
    pub fn new(n: usize, k: usize) -> Result<ExtremalParams> {
        if n == 0 || 2 * k + 1 > n {
            return Err(Error::Infeasible { n, k });
        }
        Ok(ExtremalParams {
            n,
            k,
            t: n - 2 * k - 1,
        })
    }

    /// Edge count: n - 1 + k.
    pub fn m(&self) -> usize {
        self.n - 1 + self.k
    }
}

/// Center vertex 0, triangles (0, 2i-1, 2i) for i = 1..k, pendant edges
/// (0, 2k+j) for j = 1..t.
pub fn build_cc(n: usize, k: usize) -> Result<Graph> {
    let p = ExtremalParams::new(n, k)?;
    let mut g = Graph::new(n);
    for i in 1..=k {
        g.add_edge(0, 2 * i - 1)?;
        g.add_edge(2 * i - 1, 2 * i)?;
        g.add_edge(0, 2 * i)?;
    }
    for j in 1..=p.t {
        g.add_edge(0, 2 * k + j)?;
    }
    debug_assert_eq!(g.m(), p.m());
    Ok(g)
}

/// The cubic factor of the characteristic polynomial, expanded in x:
/// (a - x)^3 + (na - 2a + 1)(a - x)^2
///   + [(1 - n)a^2 + (3n - 4)a + 1 - n](a - x) - t(1 - a)^2.
pub fn cc_cubic(p: ExtremalParams, alpha: Alpha) -> CubicPolynomial {
    let a = alpha.value();
    let n = p.n as f64;
    let t = p.t as f64;
    let b = n * a - 2.0 * a + 1.0;
    let c = (1.0 - n) * a * a + (3.0 * n - 4.0) * a + 1.0 - n;
    let tail = t * (1.0 - a) * (1.0 - a);
    CubicPolynomial::new(
        -1.0,
        3.0 * a + b,
        -(3.0 * a * a + 2.0 * a * b + c),
        a * a * a + b * a * a + c * a - tail,
    )
    .expect("leading coefficient is -1")
}

/// The same cubic in its product shape,
/// (na - a - x)(a - x)(a - x + 1) - t(1-a)^2 (a - x + 1) - 2k(1-a)^2 (a - x);
/// kept as a second route for cross-checking the expansion.
pub fn cc_cubic_product_eval(p: ExtremalParams, alpha: Alpha, x: f64) -> f64 {
    let a = alpha.value();
    let n = p.n as f64;
    let (t, k) = (p.t as f64, p.k as f64);
    let y = a - x;
    let w = (1.0 - a) * (1.0 - a);
    (n * a - a - x) * y * (y + 1.0) - t * w * (y + 1.0) - 2.0 * k * w * y
}

/// Which factor of the characteristic polynomial an eigenvalue came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    AlphaFactor,
    AlphaPlusOneFactor,
    TriangleFactor,
    Cubic,
}

#[derive(Clone, Debug, Serialize)]
pub struct SpectrumEntry {
    pub value: f64,
    pub multiplicity: usize,
    pub provenance: Provenance,
}

/// Closed-form eigenvalue multiset of the extremal cactus at one alpha.
#[derive(Clone, Debug, Serialize)]
pub struct ExtremalSpectrum {
    pub alpha: f64,
    pub entries: Vec<SpectrumEntry>,
}

impl ExtremalSpectrum {
    /// Flattened multiset, descending.
    pub fn sorted_values(&self) -> Vec<f64> {
        let mut out = Vec::new();
        for e in &self.entries {
            out.extend(std::iter::repeat_n(e.value, e.multiplicity));
        }
        out.sort_by(|a, b| b.partial_cmp(a).expect("finite eigenvalues"));
        out
    }

    pub fn total_multiplicity(&self) -> usize {
        self.entries.iter().map(|e| e.multiplicity).sum()
    }

    pub fn radius(&self) -> f64 {
        self.entries
            .iter()
            .map(|e| e.value)
            .fold(f64::NEG_INFINITY, f64::max)
    }
}

/// Remove one root numerically equal to `target` (a factor cancelled by a
/// zero exponent); loud error if it is missing, since that means the
/// coefficients are wrong.
fn cancel_root(roots: &mut Vec<f64>, target: f64) -> Result<()> {
    let (idx, dist) = roots
        .iter()
        .enumerate()
        .map(|(i, r)| (i, (r - target).abs()))
        .min_by(|a, b| a.1.partial_cmp(&b.1).expect("finite"))
        .expect("cubic always has three roots");
    if dist > 1e-7 {
        return Err(Error::MissingCancellation {
            expected: target,
            roots: roots.clone(),
        });
    }
    roots.remove(idx);
    Ok(())
}

/// Assemble the spectrum of the extremal cactus from the factorization:
/// alpha with multiplicity t-1, alpha+1 with multiplicity k-1 (k >= 2),
/// 3 alpha - 1 with multiplicity k, and the cubic roots, with one root
/// cancelled when t = 0 (the root alpha) or k = 0 (the root alpha + 1).
pub fn cc_spectrum(p: ExtremalParams, alpha: Alpha) -> Result<ExtremalSpectrum> {
    let a = alpha.value();
    if p.n == 1 {
        return Ok(ExtremalSpectrum {
            alpha: a,
            entries: vec![SpectrumEntry {
                value: 0.0,
                multiplicity: 1,
                provenance: Provenance::Cubic,
            }],
        });
    }

    let mut roots: Vec<f64> = cc_cubic(p, alpha).solve_real()?.to_vec();
    if p.t == 0 {
        cancel_root(&mut roots, a)?;
    }
    if p.k == 0 {
        cancel_root(&mut roots, a + 1.0)?;
    }

    let mut entries = Vec::new();
    if p.t >= 2 {
        entries.push(SpectrumEntry {
            value: a,
            multiplicity: p.t - 1,
            provenance: Provenance::AlphaFactor,
        });
    }
    if p.k >= 2 {
        entries.push(SpectrumEntry {
            value: a + 1.0,
            multiplicity: p.k - 1,
            provenance: Provenance::AlphaPlusOneFactor,
        });
    }
    if p.k >= 1 {
        entries.push(SpectrumEntry {
            value: 3.0 * a - 1.0,
            multiplicity: p.k,
            provenance: Provenance::TriangleFactor,
        });
    }
    for r in roots {
        entries.push(SpectrumEntry {
            value: r,
            multiplicity: 1,
            provenance: Provenance::Cubic,
        });
    }
    entries.sort_by(|x, y| y.value.partial_cmp(&x.value).expect("finite"));

    let spectrum = ExtremalSpectrum { alpha: a, entries };
    debug_assert_eq!(spectrum.total_multiplicity(), p.n);
    Ok(spectrum)
}

/// Star spectrum in radicals: alpha with multiplicity n - 2 and
/// (alpha n +- sqrt(alpha^2 n^2 + 4(n-1)(1-2 alpha))) / 2. Agrees with
/// `cc_spectrum` at k = 0 by construction of the factorization.
pub fn star_spectrum(n: usize, alpha: Alpha) -> Result<ExtremalSpectrum> {
    if n < 2 {
        return Err(Error::Infeasible { n, k: 0 });
    }
    let a = alpha.value();
    let nf = n as f64;
    let disc = a * a * nf * nf + 4.0 * (nf - 1.0) * (1.0 - 2.0 * a);
    debug_assert!(disc >= 0.0, "star discriminant is a square plus (n-2)^2 a^2");
    let root = disc.sqrt();
    let mut entries = Vec::new();
    entries.push(SpectrumEntry {
        value: (a * nf + root) / 2.0,
        multiplicity: 1,
        provenance: Provenance::Cubic,
    });
    if n >= 3 {
        entries.push(SpectrumEntry {
            value: a,
            multiplicity: n - 2,
            provenance: Provenance::AlphaFactor,
        });
    }
    entries.push(SpectrumEntry {
        value: (a * nf - root) / 2.0,
        multiplicity: 1,
        provenance: Provenance::Cubic,
    });
    entries.sort_by(|x, y| y.value.partial_cmp(&x.value).expect("finite"));
    Ok(ExtremalSpectrum { alpha: a, entries })
}

/// Largest eigenvalue of the extremal cactus; in practice always the top
/// cubic root, which the tests confirm.
pub fn cc_spectral_radius(p: ExtremalParams, alpha: Alpha) -> Result<f64> {
    Ok(cc_spectrum(p, alpha)?.radius())
}

#[derive(Clone, Debug, Serialize)]
pub struct CharpolyTrial {
    pub lambda: f64,
    pub determinant: f64,
    pub product: f64,
    pub rel_err: f64,
}

/// Outcome of the determinant-versus-factorization check.
#[derive(Clone, Debug, Serialize)]
pub struct CharpolyReport {
    pub n: usize,
    pub k: usize,
    pub t: usize,
    pub alpha: f64,
    pub seed: u64,
    pub max_rel_err: f64,
    pub pass: bool,
    pub trials: Vec<CharpolyTrial>,
}

/// Evaluate the full factored characteristic polynomial at `x`, using the
/// cancellation-adjusted shape when t = 0 or k = 0 so every exponent is
/// nonnegative.
pub fn charpoly_product_eval(p: ExtremalParams, alpha: Alpha, x: f64) -> f64 {
    let a = alpha.value();
    let n = p.n as f64;
    let w = (1.0 - a) * (1.0 - a);
    let y = a - x;
    if p.n == 1 {
        return -x;
    }
    if p.t == 0 {
        // f = (a - x) * [(na - a - x)(a - x + 1) - 2k w]
        let reduced = (n * a - a - x) * (y + 1.0) - 2.0 * p.k as f64 * w;
        (y + 1.0).powi(p.k as i32 - 1) * (3.0 * a - x - 1.0).powi(p.k as i32) * reduced
    } else if p.k == 0 {
        // f = (a - x + 1) * [(na - a - x)(a - x) - t w]
        let reduced = (n * a - a - x) * y - p.t as f64 * w;
        y.powi(p.t as i32 - 1) * reduced
    } else {
        y.powi(p.t as i32 - 1)
            * (y + 1.0).powi(p.k as i32 - 1)
            * (3.0 * a - x - 1.0).powi(p.k as i32)
            * cc_cubic(p, alpha).eval(x)
    }
}

/// Compare det(A_alpha - x I) from LU elimination against the factored
/// characteristic polynomial at `trials` random points drawn from
/// [-3, n+1], rejecting points within 1e-3 of an eigenvalue so the
/// relative comparison stays well-conditioned. Violations are recorded in
/// the report rather than thrown.
pub fn verify_charpoly_identity(
    p: ExtremalParams,
    alpha: Alpha,
    trials: usize,
    seed: u64,
) -> Result<CharpolyReport> {
    let g = build_cc(p.n, p.k)?;
    let matrix = alpha_matrix(&g, alpha);
    let eigenvalues = cc_spectrum(p, alpha)?.sorted_values();
    let mut rng = SplitMix64::new(seed);
    let mut out = Vec::with_capacity(trials);
    let mut max_rel_err = 0.0f64;
    for _ in 0..trials {
        let mut lambda = rng.uniform(-3.0, p.n as f64 + 1.0);
        let mut guard = 0;
        while eigenvalues.iter().any(|e| (e - lambda).abs() < 1e-3) {
            lambda = rng.uniform(-3.0, p.n as f64 + 1.0);
            guard += 1;
            assert!(guard < 10_000, "rejection sampling cannot stall");
        }
        let determinant = matrix.shift_diagonal(-lambda).determinant();
        let product = charpoly_product_eval(p, alpha, lambda);
        let rel_err = (determinant - product).abs() / determinant.abs().max(product.abs());
        max_rel_err = max_rel_err.max(rel_err);
        out.push(CharpolyTrial {
            lambda,
            determinant,
            product,
            rel_err,
        });
    }
    Ok(CharpolyReport {
        n: p.n,
        k: p.k,
        t: p.t,
        alpha: alpha.value(),
        seed,
        max_rel_err,
        pass: max_rel_err <= 1e-7,
        trials: out,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::{full_spectrum, signless_laplacian};

    fn a(x: f64) -> Alpha {
        Alpha::new(x).unwrap()
    }

    fn params(n: usize, k: usize) -> ExtremalParams {
        ExtremalParams::new(n, k).unwrap()
    }

    const ALPHA_GRID: [f64; 5] = [0.0, 0.25, 0.5, 0.75, 0.9];

    #[test]
    fn build_cc_bowtie_and_star() {
        let bowtie = build_cc(5, 2).unwrap();
        assert_eq!(bowtie, crate::graph::tests::bowtie());
        let star = build_cc(4, 0).unwrap();
        assert_eq!(star.degree(0), 3);
        assert_eq!(star.m(), 3);
        assert!(matches!(build_cc(4, 2), Err(Error::Infeasible { .. })));
    }

    #[test]
    fn build_cc_structural_profile() {
        for (n, k) in [(4, 0), (4, 1), (5, 2), (7, 2), (8, 3), (9, 0), (9, 4)] {
            let p = params(n, k);
            let g = build_cc(n, k).unwrap();
            let profile = g.cactus_profile();
            assert!(profile.is_cactus);
            assert_eq!(profile.cycle_count, k);
            assert!(profile.proper_cut_edges.is_empty());
            if n >= 4 && k + p.t >= 2 {
                assert_eq!(profile.cut_vertices, vec![0], "(n, k) = ({n}, {k})");
            }
            // All pendant paths are single edges at the center.
            assert!(profile.pendant_paths.iter().all(|s| s.len() == 2 && s[0] == 0));
            if 2 * k + p.t >= 3 {
                assert_eq!(profile.pendant_paths.len(), p.t);
            }
        }
    }

    #[test]
    fn cubic_bowtie_adjacency_coefficients() {
        let f = cc_cubic(params(5, 2), a(0.0));
        assert_eq!((f.c3, f.c2, f.c1, f.c0), (-1.0, 1.0, 4.0, 0.0));
    }

    #[test]
    fn cubic_expansion_matches_product_form() {
        let mut rng = SplitMix64::new(99);
        for (n, k) in [(3, 1), (5, 2), (6, 1), (9, 3), (12, 0), (30, 14)] {
            let p = params(n, k);
            for &av in &ALPHA_GRID {
                let alpha = a(av);
                let f = cc_cubic(p, alpha);
                for _ in 0..10 {
                    let x = rng.uniform(-4.0, n as f64 + 2.0);
                    let lhs = f.eval(x);
                    let rhs = cc_cubic_product_eval(p, alpha, x);
                    let scale = lhs.abs().max(rhs.abs()).max(1.0);
                    assert!(
                        (lhs - rhs).abs() <= 1e-10 * scale,
                        "n={n} k={k} alpha={av} x={x}: {lhs} vs {rhs}"
                    );
                }
            }
        }
    }

    #[test]
    fn cubic_roots_at_cancellation_points() {
        // t = 0 forces the root alpha; k = 0 forces the root alpha + 1.
        for &av in &ALPHA_GRID {
            let f = cc_cubic(params(7, 3), a(av));
            assert!(f.eval(av).abs() < 1e-10, "alpha={av}: f(alpha)={}", f.eval(av));
            let f = cc_cubic(params(7, 0), a(av));
            assert!(f.eval(av + 1.0).abs() < 1e-10);
        }
    }

    #[test]
    fn spectrum_triangle() {
        for &av in &ALPHA_GRID {
            let s = cc_spectrum(params(3, 1), a(av)).unwrap();
            let got = s.sorted_values();
            let mut want = vec![2.0, 3.0 * av - 1.0, 3.0 * av - 1.0];
            want.sort_by(|x, y| y.partial_cmp(x).unwrap());
            for (g, w) in got.iter().zip(&want) {
                assert!((g - w).abs() < 1e-10, "alpha={av}: {got:?}");
            }
        }
    }

    #[test]
    fn spectrum_bowtie_adjacency() {
        let s = cc_spectrum(params(5, 2), a(0.0)).unwrap();
        let s17 = 17f64.sqrt();
        let want = [(1.0 + s17) / 2.0, 1.0, -1.0, -1.0, (1.0 - s17) / 2.0];
        for (g, w) in s.sorted_values().iter().zip(want) {
            assert!((g - w).abs() < 1e-10);
        }
        // Provenance bookkeeping: one alpha+1, two triangle-factor copies,
        // two surviving cubic roots.
        let count = |p: Provenance| -> usize {
            s.entries
                .iter()
                .filter(|e| e.provenance == p)
                .map(|e| e.multiplicity)
                .sum()
        };
        assert_eq!(count(Provenance::AlphaFactor), 0);
        assert_eq!(count(Provenance::AlphaPlusOneFactor), 1);
        assert_eq!(count(Provenance::TriangleFactor), 2);
        assert_eq!(count(Provenance::Cubic), 2);
    }

    #[test]
    fn spectrum_matches_eigensolver_on_degenerate_shapes() {
        // t = 0, t = 1, k = 0, k = 1, and the alpha = 1/2 value collision.
        let shapes = [(5, 2), (7, 3), (4, 1), (6, 1), (6, 0), (2, 0), (3, 1)];
        for (n, k) in shapes {
            let p = params(n, k);
            let g = build_cc(n, k).unwrap();
            for &av in &[0.0, 0.25, 0.5, 0.75, 0.9] {
                let alpha = a(av);
                let closed = cc_spectrum(p, alpha).unwrap().sorted_values();
                let numeric = full_spectrum(&g, alpha).unwrap().eigenvalues;
                assert_eq!(closed.len(), numeric.len());
                for (c, m) in closed.iter().zip(&numeric) {
                    assert!(
                        (c - m).abs() <= 1e-8,
                        "n={n} k={k} alpha={av}: closed {c} vs numeric {m}"
                    );
                }
            }
        }
    }

    #[test]
    fn spectrum_trace_identity() {
        for (n, k) in [(8, 2), (9, 4), (11, 0), (30, 14)] {
            let p = params(n, k);
            for &av in &ALPHA_GRID {
                let s = cc_spectrum(p, a(av)).unwrap();
                let trace: f64 = s
                    .entries
                    .iter()
                    .map(|e| e.value * e.multiplicity as f64)
                    .sum();
                let want = 2.0 * p.m() as f64 * av;
                assert!((trace - want).abs() < 1e-8, "n={n} k={k} alpha={av}");
                assert_eq!(s.total_multiplicity(), n);
            }
        }
    }

    #[test]
    fn star_spectrum_known_values() {
        let s = star_spectrum(4, a(0.0)).unwrap();
        let v = s.sorted_values();
        let r3 = 3f64.sqrt();
        assert_eq!(v[0], r3, "sqrt 3 must be reproduced exactly");
        assert_eq!(v[1], 0.0);
        assert_eq!(v[2], 0.0);
        assert_eq!(v[3], -r3);

        let s = star_spectrum(2, a(0.3)).unwrap();
        let v = s.sorted_values();
        assert!((v[0] - 1.0).abs() < 1e-12);
        assert!((v[1] - (-0.4)).abs() < 1e-12);
    }

    #[test]
    fn star_doubled_at_half_is_signless_laplacian_of_s5() {
        let s = star_spectrum(5, a(0.5)).unwrap();
        let doubled: Vec<f64> = s.sorted_values().iter().map(|v| 2.0 * v).collect();
        // Q(S_n) has eigenvalues n, 1 (n - 2 times), 0.
        let want = [5.0, 1.0, 1.0, 1.0, 0.0];
        for (g, w) in doubled.iter().zip(want) {
            assert!((g - w).abs() < 1e-12);
        }
        let q = signless_laplacian(&build_cc(5, 0).unwrap());
        let numeric = q.jacobi_eigen(false).unwrap().eigenvalues;
        for (g, m) in doubled.iter().zip(&numeric) {
            assert!((g - m).abs() < 1e-9);
        }
    }

    #[test]
    fn star_equals_cc_spectrum_at_k_zero() {
        for n in 2..=20 {
            for &av in &ALPHA_GRID {
                let star = star_spectrum(n, a(av)).unwrap().sorted_values();
                let cc = cc_spectrum(params(n, 0), a(av)).unwrap().sorted_values();
                for (s, c) in star.iter().zip(&cc) {
                    assert!((s - c).abs() < 1e-9, "n={n} alpha={av}: {s} vs {c}");
                }
            }
        }
    }

    #[test]
    fn radius_comes_from_the_cubic() {
        for (n, k) in [(2, 0), (3, 1), (6, 2), (9, 0), (11, 5), (15, 3)] {
            let p = params(n, k);
            for &av in &ALPHA_GRID {
                let alpha = a(av);
                let s = cc_spectrum(p, alpha).unwrap();
                let top = &s.entries[0];
                assert_eq!(
                    top.provenance,
                    Provenance::Cubic,
                    "n={n} k={k} alpha={av}"
                );
                let rho = cc_spectral_radius(p, alpha).unwrap();
                assert_eq!(rho, s.sorted_values()[0]);
            }
        }
        assert!((cc_spectral_radius(params(3, 1), a(0.4)).unwrap() - 2.0).abs() < 1e-10);
        let rho = cc_spectral_radius(params(5, 2), a(0.0)).unwrap();
        assert!((rho - (1.0 + 17f64.sqrt()) / 2.0).abs() < 1e-10);
    }

    #[test]
    fn radius_monotone_in_k_observed() {
        // Not claimed by the factorization itself; recorded as observed.
        let mut violations = Vec::new();
        for n in 3..=15 {
            for k in 0..(n - 1) / 2 {
                for &av in &ALPHA_GRID {
                    let lo = cc_spectral_radius(params(n, k), a(av)).unwrap();
                    let hi = cc_spectral_radius(params(n, k + 1), a(av)).unwrap();
                    if hi <= lo {
                        violations.push((n, k, av, lo, hi));
                    }
                }
            }
        }
        if !violations.is_empty() {
            println!("radius monotonicity in k violated at: {violations:?}");
        }
    }

    #[test]
    fn charpoly_identity_samples() {
        let r = verify_charpoly_identity(params(6, 1), a(0.5), 20, 7).unwrap();
        assert!(r.pass, "max rel err {}", r.max_rel_err);
        let r = verify_charpoly_identity(params(3, 1), a(0.25), 20, 7).unwrap();
        assert!(r.pass);
        let r = verify_charpoly_identity(params(8, 2), a(0.3), 20, 11).unwrap();
        assert!(r.pass);
    }

    #[test]
    fn charpoly_product_vanishes_at_eigenvalues() {
        let p = params(6, 2);
        let alpha = a(0.25);
        let g = build_cc(6, 2).unwrap();
        let m = alpha_matrix(&g, alpha);
        for lambda in cc_spectrum(p, alpha).unwrap().sorted_values() {
            let det = m.shift_diagonal(-lambda).determinant();
            let prod = charpoly_product_eval(p, alpha, lambda);
            assert!(det.abs() < 1e-6, "det at eigenvalue: {det}");
            assert!(prod.abs() < 1e-6, "product at eigenvalue: {prod}");
        }
    }

    #[test]
    fn single_vertex_spectrum() {
        let s = cc_spectrum(params(1, 0), a(0.7)).unwrap();
        assert_eq!(s.sorted_values(), vec![0.0]);
        let g = build_cc(1, 0).unwrap();
        assert_eq!(full_spectrum(&g, a(0.7)).unwrap().eigenvalues, vec![0.0]);
    }
}
