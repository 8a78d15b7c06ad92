//! Run the tiling oracle: breadth-first reflection closure plus exact
//! verification, for a genuine family and for an impostor.
//!
//! ```text
//! cargo run --example expand_and_verify
//! ```

use edgetess::catalog::Family;
use edgetess::{corpus, expand};

fn main() {
    let seed = Family::ThirtyRight.canonical_polygon().unwrap();
    println!("30-right triangle, four generations of reflection closure:\n");
    let report = expand(&seed, 4).verify();
    println!("{}\n", report.summary());

    println!("Six generations close the full 12-tile fan at a 30-degree corner:\n");
    let report = expand(&seed, 6).verify();
    println!("{}\n", report.summary());

    println!("The house pentagon (angles 90,90,120,120,120) cannot tile:\n");
    let report = expand(&corpus::house_pentagon(), 3).verify();
    println!("{}", report.summary());
    println!("\nfirst few defects:");
    for line in report.defect_lines().iter().take(5) {
        println!("  {line}");
    }
}
