//! Count the isomorphism classes of connected cacti for every feasible
//! (n, k) cell up to the enumeration cap, and show one cell in detail.
//!
//! ```bash
//! cargo run --example enumerate_cacti
//! ```

use cactus_spectra::enumeration::enumerate_cacti;
use cactus_spectra::spectral::{spectral_radius, Alpha};

fn main() -> cactus_spectra::Result<()> {
    println!("classes of connected cacti (rows n, columns k):");
    for n in 1..=8 {
        let mut row = format!("  n = {n}:");
        for k in 0..=(n - 1) / 2 {
            row.push_str(&format!(" {:>4}", enumerate_cacti(n, k)?.len()));
        }
        println!("{row}");
    }

    let alpha = Alpha::new(0.5)?;
    println!("\nall classes with n = 6, k = 1, sorted by radius at alpha = 1/2:");
    let mut scored: Vec<_> = enumerate_cacti(6, 1)?
        .into_iter()
        .map(|g| {
            let (rho, _) = spectral_radius(&g, alpha).expect("connected cactus");
            (rho, g)
        })
        .collect();
    scored.sort_by(|a, b| b.0.partial_cmp(&a.0).expect("finite"));
    for (rho, g) in &scored {
        let edges: Vec<String> = g.edges().map(|(u, v)| format!("{u}{v}")).collect();
        println!("  rho = {rho:.10}  edges {}", edges.join(" "));
    }
    println!("the top class is the triangle with three pendant edges at one vertex");
    Ok(())
}
