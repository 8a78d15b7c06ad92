//! Classify polygons against the eight-family catalog, including the
//! kaleidoscopic (bisector symmetry) condition at 120° vertices.
//!
//! ```text
//! cargo run --example classify_polygons
//! ```

use edgetess::catalog::Family;
use edgetess::io::polygon_to_string;
use edgetess::{corpus, ExtScalar, Polygon};

fn main() {
    println!("The eight canonical families round-trip through classify:");
    for family in Family::catalog() {
        let polygon = family.canonical_polygon().unwrap();
        let angles: Vec<u16> = polygon
            .interior_angles()
            .unwrap()
            .iter()
            .map(|a| a.degrees())
            .collect();
        println!(
            "  {:<22} angles {:?} -> {}",
            family.to_string(),
            angles,
            polygon.classify().unwrap()
        );
    }

    println!("\nA square is a rectangle of ratio 1:");
    let square = Polygon::from_int_coords(&[(0, 0), (1, 0), (1, 1), (0, 1)]).unwrap();
    println!("  {}", square.classify().unwrap());

    println!("\nAspect ratios are similarity classes ({{r, 1/r}} identified):");
    let tall = Family::Rectangle {
        aspect: ExtScalar::from_int(3),
    };
    println!(
        "  a 1x3 rectangle classifies as: {}",
        tall.canonical_polygon().unwrap().classify().unwrap()
    );

    println!("\nImpostors are rejected with a reason:");
    for (name, polygon) in corpus::all_impostors() {
        println!(
            "  {:<24} -> rejected: {}",
            name,
            polygon.classify().unwrap_err()
        );
    }

    println!("\nPolygon file form of the 60-90-120 kite:");
    print!(
        "{}",
        polygon_to_string(&Family::Kite609012090.canonical_polygon().unwrap())
    );
}
