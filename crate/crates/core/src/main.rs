use std::process::exit;

use clap::Parser;

use cactus_spectra::cli::{run_to_writer, RunConfig};

fn main() {
    let config = RunConfig::parse();
    let mut stdout = std::io::stdout().lock();
    match run_to_writer(&config, &mut stdout) {
        Ok(code) => exit(code),
        Err(e) => {
            eprintln!("error: {e}");
            exit(2);
        }
    }
}
