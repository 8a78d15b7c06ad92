//! Write the eight catalog tessellation figures as SVG files.
//!
//! ```text
//! cargo run --example render_figures [out_dir]
//! ```

use std::path::PathBuf;

use edgetess::cli::catalog_file_names;
use edgetess::svg::{render_svg, RenderStyle};
use edgetess::tiling::expand;

fn main() {
    let dir = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from("target/figures"));
    std::fs::create_dir_all(&dir).expect("create output directory");

    let style = RenderStyle::default();
    for (name, family) in catalog_file_names() {
        let seed = family.canonical_polygon().unwrap();
        let patch = expand(&seed, 4);
        let svg = render_svg(&patch, &style);
        let path = dir.join(format!("{name}.svg"));
        std::fs::write(&path, &svg).expect("write SVG");
        println!(
            "{:<28} {:>3} tiles -> {}",
            family.to_string(),
            patch.tile_count(),
            path.display()
        );
    }
}
