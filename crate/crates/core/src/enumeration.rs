//! Exhaustive small-scale certification: generate one representative per
//! isomorphism class of connected cacti with n vertices and k cycles,
//! identify classes by a brute-force canonical form, and sweep the
//! extremality and rewrite claims over all of them.

use std::collections::BTreeMap;
use std::collections::BTreeSet;
use std::time::Instant;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::extremal::build_cc;
use crate::graph::Graph;
use crate::rng::SplitMix64;
use crate::spectral::{spectral_radius, Alpha};
use crate::transforms::{
    contract_pendant_path, merge_cut_edge, merge_cut_vertices, shrink_cycle,
};

/// Hard cap for exhaustive enumeration.
pub const ENUMERATION_CAP: usize = 8;
/// Hard cap for the brute-force canonical form.
pub const CANONICAL_CAP: usize = 10;

/// Permutation-invariant certificate: one byte of order followed by the
/// lexicographically smallest packed upper-triangle adjacency bitstring
/// over all degree-respecting relabelings. Equal certificates mean
/// isomorphic graphs, exactly, within the supported range.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CanonicalForm {
    pub certificate: Vec<u8>,
}

impl CanonicalForm {
    pub fn to_hex(&self) -> String {
        self.certificate.iter().map(|b| format!("{b:02x}")).collect()
    }

    /// Rebuild the canonically labeled representative.
    pub fn to_graph(&self) -> Graph {
        let n = self.certificate[0] as usize;
        let mut g = Graph::new(n);
        let mut bit = 0usize;
        for i in 0..n {
            for j in (i + 1)..n {
                let byte = self.certificate[1 + bit / 8];
                if byte & (0x80 >> (bit % 8)) != 0 {
                    g.add_edge(i, j).expect("certificate encodes a simple graph");
                }
                bit += 1;
            }
        }
        g
    }
}

/// Brute-force canonical form for graphs of order at most
/// [`CANONICAL_CAP`]. Vertices are bucketed by degree (an isomorphism
/// must respect degrees), and only assignments within buckets are tried.
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    let n = g.n();
    if n > CANONICAL_CAP {
        return Err(Error::AboveCap {
            n,
            cap: CANONICAL_CAP,
        });
    }
    if n == 0 {
        return Ok(CanonicalForm {
            certificate: vec![0],
        });
    }
    let bits_len = n * (n - 1) / 2;
    let bytes_len = bits_len.div_ceil(8);

    // Adjacency as bitmasks for cheap lookups during the search.
    let mut mask = vec![0u16; n];
    for (u, v) in g.edges() {
        mask[u] |= 1 << v;
        mask[v] |= 1 << u;
    }

    // Positions carry degrees sorted descending; vertices of equal degree
    // are interchangeable candidates for the same positions.
    let mut buckets: BTreeMap<std::cmp::Reverse<usize>, Vec<usize>> = BTreeMap::new();
    for (v, &d) in g.degrees().iter().enumerate() {
        buckets.entry(std::cmp::Reverse(d)).or_default().push(v);
    }
    let classes: Vec<Vec<usize>> = buckets.into_values().collect();

    let mut best: Option<Vec<u8>> = None;
    let mut assignment: Vec<usize> = Vec::with_capacity(n);
    assign_classes(
        &classes,
        0,
        &mut vec![false; n],
        &mut assignment,
        &mut |order: &[usize]| {
            let mut bytes = vec![0u8; bytes_len];
            let mut bit = 0usize;
            for i in 0..n {
                for j in (i + 1)..n {
                    if mask[order[i]] & (1 << order[j]) != 0 {
                        bytes[bit / 8] |= 0x80 >> (bit % 8);
                    }
                    bit += 1;
                }
            }
            match &best {
                Some(b) if *b <= bytes => {}
                _ => best = Some(bytes),
            }
        },
    );

    let mut certificate = vec![n as u8];
    certificate.extend(best.expect("at least one assignment exists"));
    Ok(CanonicalForm { certificate })
}

/// Enumerate all assignments that are products of permutations within each
/// degree class, feeding each completed vertex order to `emit`.
fn assign_classes(
    classes: &[Vec<usize>],
    class_idx: usize,
    used: &mut Vec<bool>,
    assignment: &mut Vec<usize>,
    emit: &mut impl FnMut(&[usize]),
) {
    if class_idx == classes.len() {
        emit(assignment);
        return;
    }
    let class = &classes[class_idx];
    for &v in class {
        if used[v] {
            continue;
        }
        used[v] = true;
        assignment.push(v);
        if class.iter().all(|&x| used[x]) {
            assign_classes(classes, class_idx + 1, used, assignment, emit);
        } else {
            assign_classes(classes, class_idx, used, assignment, emit);
        }
        assignment.pop();
        used[v] = false;
    }
}

fn attach_edge(g: &Graph, at: usize) -> Graph {
    let mut edges: Vec<_> = g.edges().collect();
    edges.push((at, g.n()));
    Graph::from_edges(g.n() + 1, &edges).expect("attachment is simple")
}

fn attach_cycle(g: &Graph, at: usize, len: usize) -> Graph {
    let mut edges: Vec<_> = g.edges().collect();
    let base = g.n();
    let added = len - 1;
    edges.push((at, base));
    for i in 0..added - 1 {
        edges.push((base + i, base + i + 1));
    }
    edges.push((base + added - 1, at));
    Graph::from_edges(g.n() + added, &edges).expect("attachment is simple")
}

/// One canonically labeled representative per isomorphism class of
/// connected cacti with `n` vertices and `k` cycles, sorted by
/// certificate. Cacti are grown by attaching a block (an edge or a cycle)
/// at an existing vertex; every cactus arises this way because removing a
/// leaf block of the block-cut tree yields a smaller cactus.
pub fn enumerate_cacti(n: usize, k: usize) -> Result<Vec<Graph>> {
    if n > ENUMERATION_CAP {
        return Err(Error::AboveCap {
            n,
            cap: ENUMERATION_CAP,
        });
    }
    if n == 0 || 2 * k + 1 > n {
        return Err(Error::Infeasible { n, k });
    }

    let mut seen: BTreeSet<Vec<u8>> = BTreeSet::new();
    let mut results: BTreeMap<Vec<u8>, Graph> = BTreeMap::new();
    let start = Graph::new(1);
    seen.insert(canonical_form(&start)?.certificate);
    let mut stack = vec![start];

    while let Some(g) = stack.pop() {
        let cycles = g.m() + 1 - g.n();
        if g.n() == n && cycles == k {
            let cert = canonical_form(&g)?;
            results
                .entry(cert.certificate.clone())
                .or_insert_with(|| cert.to_graph());
            continue;
        }
        if g.n() >= n {
            continue;
        }
        let room = n - g.n();
        let cycles_missing = k - cycles.min(k);
        for at in 0..g.n() {
            // An edge block spends one vertex; each outstanding cycle needs
            // two more.
            if room > 2 * cycles_missing {
                push_fresh(attach_edge(&g, at), &mut seen, &mut stack)?;
            }
            if cycles < k {
                for len in 3..=(room + 1) {
                    if room - (len - 1) >= 2 * (cycles_missing - 1) {
                        push_fresh(attach_cycle(&g, at, len), &mut seen, &mut stack)?;
                    }
                }
            }
        }
    }
    Ok(results.into_values().collect())
}

fn push_fresh(g: Graph, seen: &mut BTreeSet<Vec<u8>>, stack: &mut Vec<Graph>) -> Result<()> {
    let cert = canonical_form(&g)?;
    if seen.insert(cert.certificate) {
        stack.push(g);
    }
    Ok(())
}

/// Exhaustive extremality check for one (n, k, alpha) cell.
#[derive(Clone, Debug, Serialize)]
pub struct ExtremalityReport {
    pub n: usize,
    pub k: usize,
    pub alpha: f64,
    /// Isomorphism classes examined.
    pub num_cacti: usize,
    pub max_rho: f64,
    pub argmax_certificate: String,
    pub cc_certificate: String,
    pub cc_rho: f64,
    pub is_cc_unique_max: bool,
    /// Max rho minus the best non-extremal class; absent when the class is
    /// alone in its cell.
    pub gap: Option<f64>,
    pub runtime_seconds: f64,
    pub pass: bool,
    /// Edge list of a violating class, when one exists.
    pub counterexample: Option<String>,
}

/// Compute the radius of every class and check that the maximum is
/// attained exactly at the triangles-and-pendants cactus.
pub fn verify_extremal(n: usize, k: usize, alpha: Alpha) -> Result<ExtremalityReport> {
    alpha.require_strict("extremality comparison")?;
    let started = Instant::now();
    let classes = enumerate_cacti(n, k)?;
    let cc_cert = canonical_form(&build_cc(n, k)?)?;

    let mut scored = Vec::with_capacity(classes.len());
    for g in &classes {
        let cert = canonical_form(g)?;
        let (rho, _) = spectral_radius(g, alpha)?;
        scored.push((cert, rho, g));
    }
    let cc_rho = scored
        .iter()
        .find(|(cert, _, _)| *cert == cc_cert)
        .expect("the extremal class is always enumerated")
        .1;
    let (argmax, max_rho) = scored
        .iter()
        .map(|(cert, rho, _)| (cert.clone(), *rho))
        .max_by(|a, b| a.1.partial_cmp(&b.1).expect("finite radii"))
        .expect("at least one class");
    let second_best = scored
        .iter()
        .filter(|(cert, _, _)| *cert != cc_cert)
        .map(|(_, rho, _)| *rho)
        .fold(f64::NEG_INFINITY, f64::max);
    let counterexample = scored
        .iter()
        .find(|(_, rho, _)| *rho > cc_rho + 1e-9)
        .map(|(_, _, g)| g.to_edge_list());

    let gap = (classes.len() > 1).then_some(cc_rho - second_best);
    let pass = counterexample.is_none() && argmax == cc_cert;
    Ok(ExtremalityReport {
        n,
        k,
        alpha: alpha.value(),
        num_cacti: classes.len(),
        max_rho,
        argmax_certificate: argmax.to_hex(),
        cc_certificate: cc_cert.to_hex(),
        cc_rho,
        is_cc_unique_max: gap.is_none_or(|g| g > 1e-9),
        gap,
        runtime_seconds: started.elapsed().as_secs_f64(),
        pass,
        counterexample,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct LemmaViolation {
    pub check: String,
    pub graph: String,
    pub alpha: f64,
    pub detail: String,
}

/// Counts of rewrite sites exercised by [`verify_lemma_sweep`], plus any
/// violations (an applicable rewrite that failed to increase the radius by
/// the margin, or a non-monotone Perron pendant path).
#[derive(Clone, Debug, Serialize)]
pub struct LemmaSweepReport {
    pub n_max: usize,
    pub alphas: Vec<f64>,
    pub seed: Option<u64>,
    pub graphs_checked: usize,
    pub shrink_sites: usize,
    pub contract_sites: usize,
    pub merge_edge_sites: usize,
    pub merge_vertex_sites: usize,
    pub monotonicity_sites: usize,
    pub violations: Vec<LemmaViolation>,
    pub pass: bool,
}

const STRICT_INCREASE_MARGIN: f64 = 1e-7;

/// Apply every applicable rewrite at every site of every enumerated cactus
/// and confirm the strict radius increase, plus the Perron monotonicity
/// along pendant paths when rho > 2. Passing a seed jitters the alpha grid
/// slightly (within [0, 0.95]) for extra coverage.
pub fn verify_lemma_sweep(
    n_max: usize,
    alphas: &[f64],
    seed: Option<u64>,
) -> Result<LemmaSweepReport> {
    if n_max > ENUMERATION_CAP {
        return Err(Error::AboveCap {
            n: n_max,
            cap: ENUMERATION_CAP,
        });
    }
    let alphas: Vec<f64> = match seed {
        None => alphas.to_vec(),
        Some(s) => {
            let mut rng = SplitMix64::new(s);
            alphas
                .iter()
                .map(|a| (a + rng.uniform(-0.02, 0.02)).clamp(0.0, 0.95))
                .collect()
        }
    };

    let mut report = LemmaSweepReport {
        n_max,
        alphas: alphas.clone(),
        seed,
        graphs_checked: 0,
        shrink_sites: 0,
        contract_sites: 0,
        merge_edge_sites: 0,
        merge_vertex_sites: 0,
        monotonicity_sites: 0,
        violations: Vec::new(),
        pass: true,
    };

    let fail = |violations: &mut Vec<LemmaViolation>, check: &str, g: &Graph, a: f64, d: String| {
        violations.push(LemmaViolation {
            check: check.into(),
            graph: g.to_edge_list(),
            alpha: a,
            detail: d,
        });
    };

    for n in 1..=n_max {
        for k in 0..=(n.saturating_sub(1)) / 2 {
            for g in enumerate_cacti(n, k)? {
                report.graphs_checked += 1;
                let profile = g.cactus_profile();
                for &av in &alphas {
                    let alpha = Alpha::new(av)?;
                    let (rho, perron) = spectral_radius(&g, alpha)?;

                    for block in profile.long_cycles() {
                        report.shrink_sites += 1;
                        match shrink_cycle(&g, &block.vertices, alpha) {
                            Ok((_, step)) if step.rho_after - step.rho_before
                                > STRICT_INCREASE_MARGIN => {}
                            Ok((_, step)) => fail(
                                &mut report.violations,
                                "shrink_cycle",
                                &g,
                                av,
                                format!(
                                    "increase {:.3e} below margin",
                                    step.rho_after - step.rho_before
                                ),
                            ),
                            Err(e) => fail(
                                &mut report.violations,
                                "shrink_cycle",
                                &g,
                                av,
                                e.to_string(),
                            ),
                        }
                    }

                    for path in &profile.pendant_paths {
                        if rho > 2.0 {
                            report.monotonicity_sites += 1;
                            let decreasing = path
                                .windows(2)
                                .all(|w| perron[w[0]] > perron[w[1]]);
                            if !decreasing {
                                fail(
                                    &mut report.violations,
                                    "perron_monotonicity",
                                    &g,
                                    av,
                                    format!("entries along {path:?} are not decreasing"),
                                );
                            }
                        }
                        if path.len() >= 3 && rho > 2.0 {
                            report.contract_sites += 1;
                            match contract_pendant_path(&g, path, alpha) {
                                Ok((_, step)) if step.rho_after - step.rho_before
                                    > STRICT_INCREASE_MARGIN => {}
                                Ok((_, step)) => fail(
                                    &mut report.violations,
                                    "contract_pendant_path",
                                    &g,
                                    av,
                                    format!(
                                        "increase {:.3e} below margin",
                                        step.rho_after - step.rho_before
                                    ),
                                ),
                                Err(e) => fail(
                                    &mut report.violations,
                                    "contract_pendant_path",
                                    &g,
                                    av,
                                    e.to_string(),
                                ),
                            }
                        }
                    }

                    for &edge in &profile.proper_cut_edges {
                        report.merge_edge_sites += 1;
                        match merge_cut_edge(&g, edge, alpha) {
                            Ok((_, step)) if step.rho_after - step.rho_before
                                > STRICT_INCREASE_MARGIN => {}
                            Ok((_, step)) => fail(
                                &mut report.violations,
                                "merge_cut_edge",
                                &g,
                                av,
                                format!(
                                    "increase {:.3e} below margin",
                                    step.rho_after - step.rho_before
                                ),
                            ),
                            Err(e) => fail(
                                &mut report.violations,
                                "merge_cut_edge",
                                &g,
                                av,
                                e.to_string(),
                            ),
                        }
                    }

                    let cuts = &profile.cut_vertices;
                    for i in 0..cuts.len() {
                        for j in (i + 1)..cuts.len() {
                            let (u, v) = (cuts[i], cuts[j]);
                            let bridge_joined = g.has_edge(u, v)
                                && profile
                                    .blocks
                                    .iter()
                                    .any(|b| b.is_edge() && b.contains(u) && b.contains(v));
                            if bridge_joined {
                                continue; // that site belongs to merge_cut_edge
                            }
                            report.merge_vertex_sites += 1;
                            match merge_cut_vertices(&g, u, v, alpha) {
                                Ok((_, step)) if step.rho_after - step.rho_before
                                    > STRICT_INCREASE_MARGIN => {}
                                Ok((_, step)) => fail(
                                    &mut report.violations,
                                    "merge_cut_vertices",
                                    &g,
                                    av,
                                    format!(
                                        "increase {:.3e} below margin",
                                        step.rho_after - step.rho_before
                                    ),
                                ),
                                Err(e) => fail(
                                    &mut report.violations,
                                    "merge_cut_vertices",
                                    &g,
                                    av,
                                    e.to_string(),
                                ),
                            }
                        }
                    }
                }
            }
        }
    }
    report.pass = report.violations.is_empty();
    Ok(report)
}
