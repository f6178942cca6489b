//! Static picture of the rank-two alcove geometry: the walls
//! `x_i ∈ ½Z`, `x_1 ± x_2 ∈ Z` over `[-1, 1]²`, with the base alcove
//! `½ > x_1 > x_2 > 0` shaded.

use std::fmt::Write;

const SIZE: f64 = 480.0;
const EXTENT: f64 = 1.0;

fn px(x: f64) -> f64 {
    (x + EXTENT) / (2.0 * EXTENT) * SIZE
}

fn py(y: f64) -> f64 {
    SIZE - px(y)
}

pub fn alcove_svg() -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let _ = writeln!(out, r#"<rect width="{SIZE}" height="{SIZE}" fill="white"/>"#);
    let _ = writeln!(
        out,
        r##"<polygon points="{},{} {},{} {},{}" fill="#f4c542" stroke="none"/>"##,
        px(0.0),
        py(0.0),
        px(0.5),
        py(0.0),
        px(0.5),
        py(0.5)
    );
    let line = |out: &mut String, (x0, y0): (f64, f64), (x1, y1): (f64, f64)| {
        let _ = writeln!(
            out,
            r##"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="#333" stroke-width="1"/>"##,
            px(x0),
            py(y0),
            px(x1),
            py(y1)
        );
    };
    for k in -2..=2 {
        let c = f64::from(k) / 2.0;
        line(&mut out, (c, -EXTENT), (c, EXTENT));
        line(&mut out, (-EXTENT, c), (EXTENT, c));
    }
    for k in -2..=2 {
        let c = f64::from(k);
        // x_1 - x_2 = c and x_1 + x_2 = c, clipped to the square
        line(&mut out, (-EXTENT, -EXTENT - c), (EXTENT, EXTENT - c));
        line(&mut out, (-EXTENT, c + EXTENT), (EXTENT, c - EXTENT));
    }
    let _ = writeln!(
        out,
        r#"<text x="{:.2}" y="{:.2}" font-size="12" font-family="sans-serif">C</text>"#,
        px(0.33),
        py(0.12)
    );
    out.push_str("</svg>\n");
    out
}
