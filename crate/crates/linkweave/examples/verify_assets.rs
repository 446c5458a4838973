//! Validates the curated figure assets against their manifest.

use linkweave::construct::{asset_names, data_dir, load_curated, validate_asset};

fn main() {
    println!("assets in {}", data_dir().display());
    let mut failed = 0;
    for name in asset_names() {
        match load_curated(name).and_then(|a| validate_asset(&a)) {
            Ok(o) => println!("{name}: {} {}", o.status.label(), o.description),
            Err(e) => {
                failed += 1;
                println!("{name}: {e}");
            }
        }
    }
    std::process::exit(if failed == 0 { 0 } else { 1 });
}
