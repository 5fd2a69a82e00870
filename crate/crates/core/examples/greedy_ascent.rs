//! Drive a cactus to the extremal one by radius-increasing rewrites and
//! print the trace.
//!
//! ```bash
//! cargo run --example greedy_ascent
//! ```

use cactus_spectra::graph::Graph;
use cactus_spectra::spectral::Alpha;
use cactus_spectra::transforms::greedy_ascent;

fn main() -> cactus_spectra::Result<()> {
    // A hexagon: one cycle, no pendant edges yet.
    let hexagon = Graph::parse("6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0")?;
    // A lopsided cactus: square at one end, a tail, and a far triangle.
    let lopsided = Graph::from_edges(
        9,
        &[
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 0),
            (0, 4),
            (4, 5),
            (5, 6),
            (6, 7),
            (7, 8),
            (8, 6),
        ],
    )?;

    let alpha = Alpha::new(0.25)?;
    for (name, g) in [("hexagon", hexagon), ("lopsided cactus", lopsided)] {
        println!("{name} (n = {}, m = {}):", g.n(), g.m());
        let (reached, steps) = greedy_ascent(&g, alpha)?;
        for (i, step) in steps.iter().enumerate() {
            println!(
                "  step {i}: {:?} removed {:?} added {:?}  rho {:.9} -> {:.9}",
                step.kind, step.removed, step.added, step.rho_before, step.rho_after
            );
        }
        println!("  fixed point:\n{}", indent(&reached.to_edge_list()));
    }
    Ok(())
}

fn indent(s: &str) -> String {
    s.lines().map(|l| format!("    {l}\n")).collect()
}
