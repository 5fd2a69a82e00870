//! Compute A_alpha spectra of a few small graphs across an alpha grid.
//!
//! ```bash
//! cargo run --example spectrum
//! ```

use cactus_spectra::graph::Graph;
use cactus_spectra::spectral::{eigen_residual, full_spectrum, spectral_radius, Alpha};

fn main() -> cactus_spectra::Result<()> {
    let bowtie = Graph::parse("5 6\n0 1\n1 2\n2 0\n0 3\n3 4\n4 0")?;
    let star = Graph::from_edges(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)])?;

    for (name, g) in [("bowtie", &bowtie), ("star S6", &star)] {
        println!("{name}: n = {}, m = {}", g.n(), g.m());
        for a in [0.0, 0.25, 0.5, 0.75] {
            let alpha = Alpha::new(a)?;
            let spectrum = full_spectrum(g, alpha)?;
            let (rho, perron) = spectral_radius(g, alpha)?;
            let residual = eigen_residual(g, alpha, rho, &perron)?;
            let values: Vec<String> = spectrum
                .eigenvalues
                .iter()
                .map(|v| format!("{v:.6}"))
                .collect();
            println!("  alpha = {a:4}: [{}]", values.join(", "));
            println!("           rho = {rho:.12}, eigenequation residual = {residual:.2e}");
        }
        println!();
    }

    // At alpha = 0 the bowtie radius is (1 + sqrt 17) / 2.
    let (rho, _) = spectral_radius(&bowtie, Alpha::new(0.0)?)?;
    println!(
        "bowtie adjacency radius: {rho:.12} (closed form {:.12})",
        (1.0 + 17f64.sqrt()) / 2.0
    );
    Ok(())
}
