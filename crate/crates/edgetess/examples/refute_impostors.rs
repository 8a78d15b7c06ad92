//! The two independent refutation routes agree: every impostor in the
//! corpus is rejected by the classifier AND fails the tiling oracle.
//!
//! ```text
//! cargo run --example refute_impostors
//! ```

use edgetess::{corpus, expand, Verdict};

fn main() {
    println!(
        "{:<24} {:<14} {:<10} first defect",
        "polygon", "classify", "oracle"
    );
    for (name, polygon) in corpus::all_impostors() {
        let rejection = polygon.classify().unwrap_err();
        let report = expand(&polygon, 4).verify();
        assert_eq!(report.verdict, Verdict::Fail);
        let first = report.defect_lines().into_iter().next().unwrap_or_default();
        let reason = rejection.to_string();
        let short = reason.split(':').next().unwrap_or("?");
        let verdict = report.verdict.to_string();
        println!("{name:<24} {short:<14} {verdict:<10} {first}");
    }
    println!("\nEight genuine families, same oracle, same depth:");
    for family in edgetess::Family::catalog() {
        let seed = family.canonical_polygon().unwrap();
        let report = expand(&seed, 4).verify();
        println!("  {:<22} {}", family.to_string(), report.verdict);
        assert_eq!(report.verdict, Verdict::Pass);
    }
}
