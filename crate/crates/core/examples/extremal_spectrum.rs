//! Closed-form spectrum of the extremal cactus versus the dense
//! eigensolver, including the factor each eigenvalue comes from.
//!
//! ```bash
//! cargo run --example extremal_spectrum
//! ```

use cactus_spectra::extremal::{build_cc, cc_cubic, cc_spectrum, ExtremalParams};
use cactus_spectra::spectral::{full_spectrum, Alpha};

fn main() -> cactus_spectra::Result<()> {
    let params = ExtremalParams::new(9, 3)?;
    println!(
        "extremal cactus: n = {}, k = {} triangles, t = {} pendant edges",
        params.n, params.k, params.t
    );

    for a in [0.0, 0.5, 0.9] {
        let alpha = Alpha::new(a)?;
        let cubic = cc_cubic(params, alpha);
        println!(
            "\nalpha = {a}: cubic factor {:+.4} x^3 {:+.4} x^2 {:+.4} x {:+.4}",
            cubic.c3, cubic.c2, cubic.c1, cubic.c0
        );

        let spectrum = cc_spectrum(params, alpha)?;
        for entry in &spectrum.entries {
            println!(
                "  {:>12.8} x{}  ({:?})",
                entry.value, entry.multiplicity, entry.provenance
            );
        }

        let numeric = full_spectrum(&build_cc(params.n, params.k)?, alpha)?;
        let worst = spectrum
            .sorted_values()
            .iter()
            .zip(&numeric.eigenvalues)
            .map(|(c, m)| (c - m).abs())
            .fold(0.0, f64::max);
        println!("  max deviation from the eigensolver: {worst:.2e}");
    }
    Ok(())
}
