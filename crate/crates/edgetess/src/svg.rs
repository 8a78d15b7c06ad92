//! Deterministic SVG rendering of patches.
//!
//! One closed path per tile, seed tile visually distinguished, viewBox
//! computed from the exact bounding box with a 5% margin. Coordinates are
//! emitted at 12 significant digits from certified enclosures, so two
//! renders of equal patches and styles are byte-identical.

use crate::scalar::{ExtScalar, Rational};
use crate::tiling::Patch;

/// Rendering knobs. Stroke width and the view scale are in field units and
/// pixels-per-unit respectively; fills are any SVG color strings.
#[derive(Debug, Clone)]
pub struct RenderStyle {
    pub stroke_width: f64,
    pub scale: f64,
    pub seed_fill: String,
    pub tile_fill: String,
    pub label_vertices: bool,
}

impl Default for RenderStyle {
    fn default() -> Self {
        RenderStyle {
            stroke_width: 0.03,
            scale: 48.0,
            seed_fill: "#8fb7d9".to_string(),
            tile_fill: "#f2efe8".to_string(),
            label_vertices: false,
        }
    }
}

const DIGITS: u32 = 12;
const STROKE_COLOR: &str = "#333333";

/// Render a patch as a standalone SVG document. The y-axis is flipped so
/// the figure appears in the usual mathematical orientation.
pub fn render_svg(patch: &Patch, style: &RenderStyle) -> String {
    assert!(style.scale > 0.0 && style.stroke_width > 0.0);
    let bb = patch.bounding_box();
    let width = &bb.max_x - &bb.min_x;
    let height = &bb.max_y - &bb.min_y;
    let margin = Rational::new(1.into(), 20.into());
    let pad_x = width.scale(&margin);
    let pad_y = height.scale(&margin);
    // Flipped y: emitted y' = −y, so the box top is −max_y.
    let view_x = &bb.min_x - &pad_x;
    let view_y = -&bb.max_y - &pad_y;
    let two = Rational::new(2.into(), 1.into());
    let view_w = &width + &pad_x.scale(&two);
    let view_h = &height + &pad_y.scale(&two);

    let mut svg = String::new();
    svg.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" \
         width=\"{}\" height=\"{}\" viewBox=\"{} {} {} {}\">\n",
        fmt_px(&view_w, style.scale),
        fmt_px(&view_h, style.scale),
        view_x.approx(DIGITS),
        view_y.approx(DIGITS),
        view_w.approx(DIGITS),
        view_h.approx(DIGITS),
    ));
    for tile in patch.tiles() {
        let mut d = String::new();
        for (i, p) in tile.vertices().iter().enumerate() {
            let command = if i == 0 { 'M' } else { 'L' };
            d.push_str(&format!(
                "{command}{} {} ",
                p.x.approx(DIGITS),
                (-&p.y).approx(DIGITS)
            ));
        }
        d.push('Z');
        let fill = if tile.generation() == 0 {
            &style.seed_fill
        } else {
            &style.tile_fill
        };
        svg.push_str(&format!(
            "<path d=\"{d}\" fill=\"{fill}\" stroke=\"{STROKE_COLOR}\" \
             stroke-width=\"{}\" stroke-linejoin=\"round\"/>\n",
            style.stroke_width
        ));
    }
    if style.label_vertices {
        for (i, p) in patch.seed().vertices().iter().enumerate() {
            svg.push_str(&format!(
                "<text x=\"{}\" y=\"{}\" font-size=\"{}\">{i}</text>\n",
                p.x.approx(DIGITS),
                (-&p.y).approx(DIGITS),
                style.stroke_width * 8.0,
            ));
        }
    }
    svg.push_str("</svg>\n");
    svg
}

fn fmt_px(extent: &ExtScalar, scale: f64) -> String {
    let units: f64 = extent.to_f64();
    format!("{}", units * scale)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{Family, Polygon};
    use crate::tiling::expand;

    fn square_patch(generations: u32) -> Patch {
        let seed = Polygon::from_int_coords(&[(0, 0), (1, 0), (1, 1), (0, 1)]).unwrap();
        expand(&seed, generations)
    }

    fn count_paths(svg: &str) -> usize {
        svg.matches("<path").count()
    }

    #[test]
    fn path_count_matches_tile_count() {
        let style = RenderStyle::default();
        assert_eq!(count_paths(&render_svg(&square_patch(0), &style)), 1);
        let seed = Family::Equilateral.canonical_polygon().unwrap();
        let patch = expand(&seed, 1);
        assert_eq!(count_paths(&render_svg(&patch, &style)), 4);
        let hex = Family::RegularHexagon.canonical_polygon().unwrap();
        let hex_patch = expand(&hex, 3);
        assert_eq!(
            count_paths(&render_svg(&hex_patch, &style)),
            hex_patch.tile_count()
        );
    }

    #[test]
    fn rendering_is_byte_deterministic() {
        let style = RenderStyle::default();
        let a = render_svg(&square_patch(2), &style);
        let b = render_svg(&square_patch(2), &style);
        assert_eq!(a, b);
    }

    #[test]
    fn seed_fill_appears_exactly_once() {
        let style = RenderStyle::default();
        let svg = render_svg(&square_patch(2), &style);
        assert_eq!(svg.matches(&style.seed_fill).count(), 1);
    }

    #[test]
    fn labels_are_optional() {
        let style = RenderStyle {
            label_vertices: true,
            ..RenderStyle::default()
        };
        let svg = render_svg(&square_patch(1), &style);
        assert_eq!(svg.matches("<text").count(), 4);
    }
}
