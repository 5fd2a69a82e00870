//! Acceptance suite: one test per criterion, each printing a single
//! PASS/FAIL line (run with `cargo test --test acceptance -- --nocapture`
//! to see them). Tolerances are pinned in the assertions.

use cactus_spectra::enumeration::{canonical_form, enumerate_cacti, verify_extremal, verify_lemma_sweep};
use cactus_spectra::extremal::{
    build_cc, cc_spectrum, star_spectrum, verify_charpoly_identity, ExtremalParams,
};
use cactus_spectra::linalg::SymmetricMatrix;
use cactus_spectra::rng::SplitMix64;
use cactus_spectra::spectral::{alpha_matrix, full_spectrum, signless_laplacian, spectral_radius, Alpha};
use cactus_spectra::transforms::greedy_ascent;

fn alpha(v: f64) -> Alpha {
    Alpha::new(v).expect("test alphas are valid")
}

fn conclude(label: &str, failures: Vec<String>) {
    if failures.is_empty() {
        println!("ACCEPTANCE {label}: PASS");
    } else {
        println!("ACCEPTANCE {label}: FAIL ({} issues)", failures.len());
        for f in failures.iter().take(12) {
            println!("  - {f}");
        }
        panic!("{label} failed with {} issues", failures.len());
    }
}

fn feasible_ks(n: usize) -> impl Iterator<Item = usize> {
    0..=(n - 1) / 2
}

#[test]
fn criterion_1_extremality_exhaustive() {
    let mut failures = Vec::new();
    for n in 4..=7 {
        for k in feasible_ks(n) {
            for a in [0.0, 0.25, 0.5, 0.75] {
                let report = verify_extremal(n, k, alpha(a)).expect("sweep runs");
                if !report.pass {
                    failures.push(format!(
                        "(n={n}, k={k}, alpha={a}): max not at extremal class, counterexample {:?}",
                        report.counterexample
                    ));
                    continue;
                }
                if let Some(gap) = report.gap {
                    if gap <= 1e-7 {
                        failures.push(format!(
                            "(n={n}, k={k}, alpha={a}): runner-up gap {gap:.3e} not above 1e-7"
                        ));
                    }
                }
                if report.argmax_certificate != report.cc_certificate {
                    failures.push(format!("(n={n}, k={k}, alpha={a}): argmax is a different class"));
                }
            }
        }
    }
    conclude("1 extremality over all cacti n<=7", failures);
}

/// Extended run at the enumeration cap (188 classes at n = 8);
/// `cargo test --test acceptance -- --ignored --nocapture`.
#[test]
#[ignore = "extended run, minutes-scale"]
fn criterion_1_extended_extremality_n8() {
    let mut failures = Vec::new();
    for k in feasible_ks(8) {
        for a in [0.0, 0.25, 0.5, 0.75] {
            let report = verify_extremal(8, k, alpha(a)).expect("sweep runs");
            if !report.pass || report.gap.is_some_and(|g| g <= 1e-7) {
                failures.push(format!(
                    "(n=8, k={k}, alpha={a}): pass={}, gap={:?}",
                    report.pass, report.gap
                ));
            }
        }
    }
    conclude("1x extended extremality n=8", failures);
}

#[test]
fn criterion_2_closed_form_spectrum() {
    let mut failures = Vec::new();
    for n in 1..=30 {
        for k in feasible_ks(n) {
            let params = ExtremalParams::new(n, k).expect("feasible");
            let g = build_cc(n, k).expect("feasible");
            for i in 0..=9 {
                let a = i as f64 / 10.0;
                let closed = cc_spectrum(params, alpha(a)).expect("assembly").sorted_values();
                let numeric = full_spectrum(&g, alpha(a)).expect("eigensolver").eigenvalues;
                if closed.len() != numeric.len() {
                    failures.push(format!("(n={n}, k={k}, alpha={a}): length mismatch"));
                    continue;
                }
                for (c, m) in closed.iter().zip(&numeric) {
                    if (c - m).abs() > 1e-8 {
                        failures.push(format!(
                            "(n={n}, k={k}, alpha={a}): closed {c:.12} vs numeric {m:.12}"
                        ));
                        break;
                    }
                }
            }
        }
    }
    conclude("2 closed-form spectrum n<=30", failures);
}

#[test]
fn criterion_3_determinant_factorization() {
    let mut failures = Vec::new();
    let mut triples = 0usize;
    let mut saw_t0 = false;
    let mut saw_k0 = false;
    for n in [2usize, 3, 4, 5, 6, 7, 8, 9, 10, 12] {
        let kmax = (n - 1) / 2;
        let mut ks = vec![0, kmax, kmax / 2];
        ks.sort_unstable();
        ks.dedup();
        for k in ks {
            let params = ExtremalParams::new(n, k).expect("feasible");
            saw_t0 |= params.t == 0;
            saw_k0 |= k == 0;
            for a in [0.0, 0.3, 0.7] {
                triples += 1;
                let report = verify_charpoly_identity(params, alpha(a), 20, 20_260_808)
                    .expect("check runs");
                if !report.pass {
                    failures.push(format!(
                        "(n={n}, k={k}, alpha={a}): max relative error {:.3e}",
                        report.max_rel_err
                    ));
                }
            }
        }
    }
    assert!(triples >= 30, "grid has {triples} triples, need at least 30");
    assert!(saw_t0 && saw_k0, "grid must include t = 0 and k = 0 cells");
    conclude("3 determinant factorization", failures);
}

#[test]
fn criterion_4_star_spectrum_closed_form() {
    let mut failures = Vec::new();
    for n in 2..=50 {
        let star = build_cc(n, 0).expect("stars are feasible");
        for a in [0.0, 0.25, 0.5, 0.75] {
            let closed = star_spectrum(n, alpha(a)).expect("closed form").sorted_values();
            let numeric = full_spectrum(&star, alpha(a)).expect("eigensolver").eigenvalues;
            for (c, m) in closed.iter().zip(&numeric) {
                if (c - m).abs() > 1e-8 {
                    failures.push(format!(
                        "(n={n}, alpha={a}): closed {c:.12} vs numeric {m:.12}"
                    ));
                    break;
                }
            }
        }
    }
    let sqrt3 = star_spectrum(4, alpha(0.0)).expect("closed form").radius();
    if (sqrt3 - 3f64.sqrt()).abs() > 1e-12 {
        failures.push(format!("sqrt(3) reproduced as {sqrt3:.15}"));
    }
    conclude("4 star spectrum closed form n<=50", failures);
}

#[test]
fn criterion_5_alpha_specializations() {
    let mut failures = Vec::new();
    for n in 1..=7 {
        for k in feasible_ks(n) {
            for g in enumerate_cacti(n, k).expect("enumeration") {
                // alpha = 0 against the adjacency radius by an independent
                // route (shifted power iteration on A directly).
                let (rho0, _) = spectral_radius(&g, alpha(0.0)).expect("connected");
                let adjacency = alpha_matrix(&g, alpha(0.0));
                let (power_rho, _) = adjacency
                    .power_iteration(1e-11, 500_000)
                    .expect("power iteration converges");
                if (rho0 - power_rho).abs() > 1e-9 {
                    failures.push(format!(
                        "(n={n}, k={k}): adjacency {rho0:.12} vs power {power_rho:.12}"
                    ));
                }
                // Twice the alpha = 1/2 radius against the signless
                // Laplacian computed from Q = D + A.
                let (rho_half, _) = spectral_radius(&g, alpha(0.5)).expect("connected");
                let q_rho = signless_laplacian(&g)
                    .jacobi_eigen(false)
                    .expect("eigensolver")
                    .perron_value;
                if (2.0 * rho_half - q_rho).abs() > 1e-9 {
                    failures.push(format!(
                        "(n={n}, k={k}): 2 rho(1/2) = {:.12} vs rho(Q) = {q_rho:.12}",
                        2.0 * rho_half
                    ));
                }
            }
        }
    }
    conclude("5 adjacency and signless Laplacian specializations", failures);
}

#[test]
fn criterion_6_lemma_sweep() {
    let report = verify_lemma_sweep(6, &[0.0, 0.25, 0.5, 0.75], None).expect("sweep runs");
    let mut failures: Vec<String> = report
        .violations
        .iter()
        .map(|v| format!("{} at alpha {}: {}", v.check, v.alpha, v.detail))
        .collect();
    // The sweep must actually exercise every rewrite family.
    for (count, what) in [
        (report.shrink_sites, "shrink"),
        (report.contract_sites, "contract"),
        (report.merge_edge_sites, "merge-edge"),
        (report.merge_vertex_sites, "merge-vertices"),
        (report.monotonicity_sites, "monotonicity"),
    ] {
        if count == 0 {
            failures.push(format!("no {what} sites were exercised"));
        }
    }
    conclude("6 lemma sweep n<=6 with zero violations", failures);
}

#[test]
fn criterion_7_greedy_ascent() {
    let mut failures = Vec::new();
    for n in 1..=7 {
        for k in feasible_ks(n) {
            let cc_cert = canonical_form(&build_cc(n, k).expect("feasible")).expect("small");
            for g in enumerate_cacti(n, k).expect("enumeration") {
                for a in [0.0, 0.5] {
                    let (reached, steps) = match greedy_ascent(&g, alpha(a)) {
                        Ok(ok) => ok,
                        Err(e) => {
                            failures.push(format!("(n={n}, k={k}, alpha={a}): ascent error {e}"));
                            continue;
                        }
                    };
                    if steps.len() > g.n() + g.m() {
                        failures.push(format!(
                            "(n={n}, k={k}, alpha={a}): {} steps exceed n + m",
                            steps.len()
                        ));
                    }
                    if canonical_form(&reached).expect("small") != cc_cert {
                        failures.push(format!(
                            "(n={n}, k={k}, alpha={a}): fixed point is not the extremal cactus: {}",
                            reached.to_edge_list().replace('\n', "; ")
                        ));
                    }
                    let mut prev = f64::NEG_INFINITY;
                    for step in &steps {
                        if step.rho_after <= step.rho_before || step.rho_before < prev - 1e-9 {
                            failures.push(format!(
                                "(n={n}, k={k}, alpha={a}): trace not strictly increasing"
                            ));
                            break;
                        }
                        prev = step.rho_after;
                    }
                }
            }
        }
    }
    conclude("7 greedy ascent reaches the extremal cactus", failures);
}

#[test]
fn criterion_8_numerical_engine() {
    let mut failures = Vec::new();

    // Trace and Frobenius identities on 100 random symmetric matrices.
    let mut rng = SplitMix64::new(0x5eed);
    for trial in 0..100 {
        let n = 1 + rng.below(50);
        let mut m = SymmetricMatrix::zeros(n);
        for i in 0..n {
            for j in i..n {
                m.set(i, j, rng.uniform(-1.0, 1.0));
            }
        }
        let eig = m.jacobi_eigen(false).expect("eigensolver").eigenvalues;
        let scale = 1e-9 * n as f64 * m.max_abs().max(1.0);
        let trace_gap = (eig.iter().sum::<f64>() - m.trace()).abs();
        if trace_gap > scale {
            failures.push(format!("trial {trial} (n={n}): trace gap {trace_gap:.3e}"));
        }
        let frob_gap =
            (eig.iter().map(|v| v * v).sum::<f64>() - m.frobenius_norm().powi(2)).abs();
        if frob_gap > scale.max(1e-9 * n as f64 * m.max_abs().powi(2)) {
            failures.push(format!("trial {trial} (n={n}): frobenius gap {frob_gap:.3e}"));
        }
    }

    // Power iteration agrees with the dense solver on all test graphs.
    for n in 2..=6 {
        for k in feasible_ks(n) {
            for g in enumerate_cacti(n, k).expect("enumeration") {
                for a in [0.0, 0.25, 0.5, 0.75] {
                    let m = alpha_matrix(&g, alpha(a));
                    let dense = m.jacobi_eigen(false).expect("eigensolver").perron_value;
                    let (power, _) = m
                        .power_iteration(1e-11, 500_000)
                        .expect("power iteration converges");
                    if (dense - power).abs() > 1e-9 {
                        failures.push(format!(
                            "(n={n}, k={k}, alpha={a}): dense {dense:.12} vs power {power:.12}"
                        ));
                    }
                }
            }
        }
    }

    // The bowtie radius (1 + sqrt 17) / 2 at alpha = 0.
    let bowtie = build_cc(5, 2).expect("feasible");
    let (rho, _) = spectral_radius(&bowtie, alpha(0.0)).expect("connected");
    let want = (1.0 + 17f64.sqrt()) / 2.0;
    if (rho - want).abs() > 1e-9 {
        failures.push(format!("bowtie radius {rho:.12} vs {want:.12}"));
    }
    if (want - 2.5615528128).abs() > 1e-9 {
        failures.push("frozen bowtie constant drifted".into());
    }

    conclude("8 numerical engine self-checks", failures);
}
