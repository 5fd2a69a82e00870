//! Check that every applicable rewrite strictly increases the spectral
//! radius on every enumerated cactus, and that Perron entries decrease
//! along pendant paths.
//!
//! ```bash
//! cargo run --example lemma_sweep
//! ```

use cactus_spectra::enumeration::verify_lemma_sweep;

fn main() -> cactus_spectra::Result<()> {
    let report = verify_lemma_sweep(6, &[0.0, 0.25, 0.5, 0.75], None)?;
    println!("cacti checked:        {}", report.graphs_checked);
    println!("cycle shrinks:        {}", report.shrink_sites);
    println!("path contractions:    {}", report.contract_sites);
    println!("cut-edge merges:      {}", report.merge_edge_sites);
    println!("cut-vertex merges:    {}", report.merge_vertex_sites);
    println!("monotonicity checks:  {}", report.monotonicity_sites);
    println!("violations:           {}", report.violations.len());
    for v in &report.violations {
        println!("  {} at alpha {}: {}", v.check, v.alpha, v.detail);
    }
    assert!(report.pass);

    // The same sweep with a jittered alpha grid.
    let jittered = verify_lemma_sweep(5, &[0.1, 0.4, 0.8], Some(42))?;
    println!(
        "\njittered alphas {:?}: {} violations",
        jittered.alphas,
        jittered.violations.len()
    );
    Ok(())
}
