//! Radius-increasing rewrites on cacti. Each operation realizes one edge
//! rotation: a set S of edges at a vertex is re-attached to a vertex with a
//! Perron entry at least as large, which strictly increases the spectral
//! radius for alpha < 1. A greedy driver chains the rewrites until the
//! one-cut-vertex cactus of triangles and pendant edges is reached.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{CactusProfile, Graph};
use crate::spectral::{spectral_radius, Alpha};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RewriteKind {
    Rotate,
    ShrinkCycle,
    ContractPendantPath,
    MergeCutEdge,
    MergeCutVertices,
}

/// The eigenvector comparison that justifies a rewrite: edges move away
/// from `from` toward `to`, and the Perron entries satisfy
/// `x_to >= x_from`.
#[derive(Clone, Debug, Serialize)]
pub struct Witness {
    pub from: usize,
    pub to: usize,
    pub x_from: f64,
    pub x_to: f64,
}

/// One applied rewrite, with enough detail to replay or audit it.
#[derive(Clone, Debug, Serialize)]
pub struct RewriteStep {
    pub kind: RewriteKind,
    pub removed: Vec<(usize, usize)>,
    pub added: Vec<(usize, usize)>,
    pub rho_before: f64,
    pub rho_after: f64,
    pub witness: Witness,
}

struct Prepared {
    profile: CactusProfile,
    rho: f64,
    perron: Vec<f64>,
}

/// Common entry checks: alpha < 1 and a connected cactus, with its Perron
/// pair already computed.
fn prepare(g: &Graph, alpha: Alpha) -> Result<Prepared> {
    alpha.require_strict("radius-increasing rewrites")?;
    let profile = g.cactus_profile();
    if !profile.is_connected {
        return Err(Error::Disconnected);
    }
    if !profile.is_cactus {
        return Err(Error::NotCactus(
            "some block is neither an edge nor a cycle".into(),
        ));
    }
    let (rho, perron) = spectral_radius(g, alpha)?;
    Ok(Prepared {
        profile,
        rho,
        perron,
    })
}

/// Move the edges `{from, s}` for `s` in `moved` over to `{to, s}`, check
/// every precondition and postcondition, and package the step.
fn rotate_checked(
    g: &Graph,
    alpha: Alpha,
    kind: RewriteKind,
    from: usize,
    to: usize,
    moved: &[usize],
    prep: &Prepared,
) -> Result<(Graph, RewriteStep)> {
    if moved.is_empty() {
        return Err(Error::RewritePrecondition("the moved set S is empty".into()));
    }
    if from == to {
        return Err(Error::RewritePrecondition(
            "source and target vertices coincide".into(),
        ));
    }
    for &s in moved {
        if s == to {
            return Err(Error::RewritePrecondition(format!(
                "vertex {s} of S equals the target vertex"
            )));
        }
        if !g.has_edge(from, s) {
            return Err(Error::RewritePrecondition(format!(
                "vertex {s} of S is not a neighbor of {from}"
            )));
        }
        if g.has_edge(to, s) {
            return Err(Error::RewritePrecondition(format!(
                "vertex {s} of S is already a neighbor of {to}"
            )));
        }
    }
    let (x_from, x_to) = (prep.perron[from], prep.perron[to]);
    if x_to < x_from {
        return Err(Error::RewritePrecondition(format!(
            "Perron entry at target {to} ({x_to:.6}) is below source {from} ({x_from:.6})"
        )));
    }

    let removed: Vec<(usize, usize)> = moved.iter().map(|&s| (from, s)).collect();
    let added: Vec<(usize, usize)> = moved.iter().map(|&s| (to, s)).collect();
    let next = g.apply_edge_rewrite(&removed, &added)?;

    let after = next.cactus_profile();
    if !after.is_connected {
        return Err(Error::RewritePostcondition("result is disconnected".into()));
    }
    if !after.is_cactus {
        return Err(Error::RewritePostcondition("result is not a cactus".into()));
    }
    if after.cycle_count != prep.profile.cycle_count {
        return Err(Error::RewritePostcondition(format!(
            "cycle count changed from {} to {}",
            prep.profile.cycle_count, after.cycle_count
        )));
    }
    let (rho_after, _) = spectral_radius(&next, alpha)?;
    if rho_after <= prep.rho {
        return Err(Error::RewritePostcondition(format!(
            "spectral radius did not increase: {:.12} -> {rho_after:.12}",
            prep.rho
        )));
    }

    let step = RewriteStep {
        kind,
        removed,
        added,
        rho_before: prep.rho,
        rho_after,
        witness: Witness {
            from,
            to,
            x_from,
            x_to,
        },
    };
    Ok((next, step))
}

/// Re-attach the edges from `v` into `S` onto `w`. Requires
/// `S subset of N(v) \ (N(w) + {w})`, a nonempty `S`, and `x_w >= x_v`.
pub fn rotate_edges(
    g: &Graph,
    v: usize,
    w: usize,
    s: &[usize],
    alpha: Alpha,
) -> Result<(Graph, RewriteStep)> {
    let prep = prepare(g, alpha)?;
    rotate_checked(g, alpha, RewriteKind::Rotate, v, w, s, &prep)
}

/// Shorten a cycle block of length >= 4 by one, moving one cycle edge next
/// to the endpoint with the larger Perron entry.
pub fn shrink_cycle(g: &Graph, cycle: &[usize], alpha: Alpha) -> Result<(Graph, RewriteStep)> {
    let prep = prepare(g, alpha)?;
    let mut sorted = cycle.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let is_block = sorted.len() == cycle.len()
        && prep.profile.blocks.iter().any(|b| {
            if !b.is_cycle {
                return false;
            }
            let mut bv = b.vertices.clone();
            bv.sort_unstable();
            bv == sorted
        })
        && (0..cycle.len()).all(|i| g.has_edge(cycle[i], cycle[(i + 1) % cycle.len()]));
    if !is_block {
        return Err(Error::RewritePrecondition(
            "sequence is not a cycle block of the graph".into(),
        ));
    }
    if cycle.len() == 3 {
        return Err(Error::RewritePrecondition(
            "cycle is already a triangle".into(),
        ));
    }

    // Deterministic site: the lexicographically smallest cycle edge,
    // oriented so the kept endpoint has the larger Perron entry.
    let l = cycle.len();
    let (mut u, mut v) = (0..l)
        .map(|i| {
            let (a, b) = (cycle[i], cycle[(i + 1) % l]);
            if a < b {
                (a, b)
            } else {
                (b, a)
            }
        })
        .min()
        .expect("cycle has edges");
    if prep.perron[v] > prep.perron[u] {
        std::mem::swap(&mut u, &mut v);
    }
    // w is v's other neighbor on the cycle.
    let i = cycle.iter().position(|&x| x == v).expect("v lies on the cycle");
    let before = cycle[(i + l - 1) % l];
    let after = cycle[(i + 1) % l];
    let w = if before == u { after } else { before };
    debug_assert!(before == u || after == u);

    rotate_checked(g, alpha, RewriteKind::ShrinkCycle, v, u, &[w], &prep)
}

/// Replace the first edge of a pendant path of length >= 2 by a direct edge
/// from the anchor, shortening the path by one. `path` is anchor-first, as
/// produced by `Graph::pendant_paths`. Requires rho > 2 so the Perron
/// entries decrease along the path.
pub fn contract_pendant_path(
    g: &Graph,
    path: &[usize],
    alpha: Alpha,
) -> Result<(Graph, RewriteStep)> {
    let prep = prepare(g, alpha)?;
    if path.len() < 2 {
        return Err(Error::RewritePrecondition(
            "pendant path must list the anchor and at least one vertex".into(),
        ));
    }
    let anchor = path[0];
    if g.degree(anchor) < 3 {
        return Err(Error::RewritePrecondition(format!(
            "anchor {anchor} has degree {} < 3",
            g.degree(anchor)
        )));
    }
    for pair in path.windows(2) {
        if !g.has_edge(pair[0], pair[1]) {
            return Err(Error::RewritePrecondition(format!(
                "missing path edge {} {}",
                pair[0], pair[1]
            )));
        }
    }
    let interior_ok = path[1..path.len() - 1].iter().all(|&v| g.degree(v) == 2);
    let tip = *path.last().expect("nonempty path");
    if !interior_ok || g.degree(tip) != 1 {
        return Err(Error::RewritePrecondition(
            "sequence is not a pendant path".into(),
        ));
    }
    if path.len() == 2 {
        return Err(Error::RewritePrecondition(
            "pendant path already has length 1".into(),
        ));
    }
    if prep.rho <= 2.0 {
        return Err(Error::RewritePrecondition(format!(
            "spectral radius {:.6} is not above 2",
            prep.rho
        )));
    }
    rotate_checked(
        g,
        alpha,
        RewriteKind::ContractPendantPath,
        path[1],
        anchor,
        &[path[2]],
        &prep,
    )
}

/// Merge across a proper cut edge: every edge at the smaller-entry endpoint
/// except the cut edge itself is re-attached to the other endpoint, leaving
/// a pendant vertex.
pub fn merge_cut_edge(g: &Graph, e: (usize, usize), alpha: Alpha) -> Result<(Graph, RewriteStep)> {
    let prep = prepare(g, alpha)?;
    let (a, b) = if e.0 < e.1 { e } else { (e.1, e.0) };
    if !prep.profile.proper_cut_edges.contains(&(a, b)) {
        return Err(Error::RewritePrecondition(format!(
            "edge {a} {b} is not a proper cut edge"
        )));
    }
    let (hi, lo) = if prep.perron[a] >= prep.perron[b] {
        (a, b)
    } else {
        (b, a)
    };
    let moved: Vec<usize> = g.neighbors(lo).into_iter().filter(|&x| x != hi).collect();
    rotate_checked(g, alpha, RewriteKind::MergeCutEdge, lo, hi, &moved, &prep)
}

/// Merge two cut vertices: all blocks at the smaller-entry vertex except
/// the one nearest the other vertex are transplanted onto it. The pair may
/// be adjacent only through a cycle block; a bridge between two cut
/// vertices is a proper cut edge and belongs to `merge_cut_edge`.
pub fn merge_cut_vertices(
    g: &Graph,
    u: usize,
    v: usize,
    alpha: Alpha,
) -> Result<(Graph, RewriteStep)> {
    let prep = prepare(g, alpha)?;
    if u == v {
        return Err(Error::RewritePrecondition(
            "cut vertices must be distinct".into(),
        ));
    }
    for x in [u, v] {
        if !prep.profile.cut_vertices.contains(&x) {
            return Err(Error::RewritePrecondition(format!(
                "vertex {x} is not a cut vertex"
            )));
        }
    }
    if g.has_edge(u, v) {
        let bridge = prep
            .profile
            .blocks
            .iter()
            .any(|b| b.is_edge() && b.contains(u) && b.contains(v));
        if bridge {
            return Err(Error::RewritePrecondition(format!(
                "vertices {u} and {v} are joined by a proper cut edge; apply merge_cut_edge first"
            )));
        }
    }
    let (hi, lo) = if prep.perron[u] > prep.perron[v]
        || (prep.perron[u] == prep.perron[v] && u < v)
    {
        (u, v)
    } else {
        (v, u)
    };

    // Keep the block of `lo` nearest to `hi`; ties break on the smallest
    // sorted vertex list.
    let dist = g.distances_from(hi);
    let kept = prep
        .profile
        .blocks
        .iter()
        .filter(|b| b.contains(lo))
        .min_by_key(|b| {
            let d = b.vertices.iter().map(|&x| dist[x]).min().expect("nonempty");
            let mut key = b.vertices.clone();
            key.sort_unstable();
            (d, key)
        })
        .expect("cut vertex lies in at least two blocks")
        .clone();

    let moved: Vec<usize> = g
        .neighbors(lo)
        .into_iter()
        .filter(|&x| !kept.contains(x))
        .collect();
    rotate_checked(
        g,
        alpha,
        RewriteKind::MergeCutVertices,
        lo,
        hi,
        &moved,
        &prep,
    )
}

/// Apply the first applicable rewrite (shrink, contract, merge across a cut
/// edge, merge cut vertices) until none applies. Every step strictly
/// increases the spectral radius, so the loop terminates; for a connected
/// cactus the fixed point is the one-cut-vertex cactus of triangles and
/// pendant edges.
pub fn greedy_ascent(g: &Graph, alpha: Alpha) -> Result<(Graph, Vec<RewriteStep>)> {
    alpha.require_strict("greedy ascent")?;
    let initial = g.cactus_profile();
    if !initial.is_connected {
        return Err(Error::Disconnected);
    }
    if !initial.is_cactus {
        return Err(Error::NotCactus(
            "greedy ascent is defined on cacti only".into(),
        ));
    }

    let budget = g.n() * g.m() + 1;
    let mut current = g.clone();
    let mut steps: Vec<RewriteStep> = Vec::new();
    loop {
        if steps.len() >= budget {
            return Err(Error::StepBudget(budget));
        }
        let profile = current.cactus_profile();

        let (next, step) = if let Some(block) = profile.long_cycles().next() {
            shrink_cycle(&current, &block.vertices, alpha)?
        } else if let Some(path) = applicable_pendant_path(&current, &profile, alpha)? {
            contract_pendant_path(&current, &path, alpha)?
        } else if let Some(&edge) = profile.proper_cut_edges.first() {
            merge_cut_edge(&current, edge, alpha)?
        } else if profile.cut_vertices.len() >= 2 {
            let (_, perron) = spectral_radius(&current, alpha)?;
            let &hi = profile
                .cut_vertices
                .iter()
                .max_by(|&&a, &&b| {
                    perron[a]
                        .partial_cmp(&perron[b])
                        .expect("finite entries")
                        .then(b.cmp(&a))
                })
                .expect("two cut vertices exist");
            let &lo = profile
                .cut_vertices
                .iter()
                .filter(|&&x| x != hi)
                .min_by(|&&a, &&b| {
                    perron[a]
                        .partial_cmp(&perron[b])
                        .expect("finite entries")
                        .then(a.cmp(&b))
                })
                .expect("two cut vertices exist");
            merge_cut_vertices(&current, hi, lo, alpha)?
        } else {
            break;
        };
        current = next;
        steps.push(step);
    }
    Ok((current, steps))
}

/// First pendant path of length >= 2, provided the radius exceeds 2 (the
/// monotonicity of Perron entries along pendant paths needs it).
fn applicable_pendant_path(
    g: &Graph,
    profile: &CactusProfile,
    alpha: Alpha,
) -> Result<Option<Vec<usize>>> {
    let Some(path) = profile.pendant_paths.iter().find(|p| p.len() >= 3) else {
        return Ok(None);
    };
    let (rho, _) = spectral_radius(g, alpha)?;
    if rho > 2.0 {
        Ok(Some(path.clone()))
    } else {
        Ok(None)
    }
}
