//! Regenerates the curated figure assets (embedding files and manifest).
//!
//! Usage: `cargo run --example regenerate_assets [DIR]`; the default is the shipped data
//! directory. Every asset is re-verified before it is written.

use std::path::PathBuf;

use linkweave::construct::{data_dir, regenerate_assets};

fn main() {
    let dir = std::env::args().nth(1).map(PathBuf::from).unwrap_or_else(data_dir);
    match regenerate_assets(&dir) {
        Ok(manifest) => {
            for e in manifest {
                println!("{:<11} {}", e.name, e.description);
            }
            println!("wrote {}", dir.display());
        }
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(1);
        }
    }
}
