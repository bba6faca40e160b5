//! Deterministic ASCII and SVG output.

use std::fmt::Write as _;

use crate::grid::{Segment, StitchGrid};
use crate::loops::{two_color, TwoColoring};
use crate::polyomino::{LatticeCycle, Polyomino};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Palette {
    pub fill0: String,
    pub fill1: String,
    pub stroke: String,
}

impl Default for Palette {
    fn default() -> Self {
        Palette {
            fill0: "#ffffff".into(),
            fill1: "#c9d6ea".into(),
            stroke: "#1f3a68".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RenderOptions {
    /// Display units per cell; at least 1.
    pub cell_size: u32,
    /// Stroke width in display units; positive.
    pub stroke_width: f64,
    pub show_grid: bool,
    pub fill_two_coloring: bool,
    pub palette: Palette,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions {
            cell_size: 20,
            stroke_width: 2.0,
            show_grid: false,
            fill_two_coloring: false,
            palette: Palette::default(),
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub enum Overlay<'a> {
    None,
    TwoColoring(&'a TwoColoring),
    Cycle(&'a LatticeCycle),
}

/// Character matrix of `H + 1` lines, `2W + 1` columns each.
///
/// The first line holds the top stitch line (`y = H`) as `_`; every following
/// line is a cell row from the top down, with `|` for vertical stitches at even
/// columns and `_` for the stitch along the bottom of the cell at odd columns.
pub fn render_ascii(g: &StitchGrid) -> String {
    render_ascii_with(g, false)
}

/// [`render_ascii`] with `+` marking lattice positions that carry no vertical
/// stitch.
pub fn render_ascii_with(g: &StitchGrid, show_grid: bool) -> String {
    let (w, h) = (g.width(), g.height());
    let mut out = String::with_capacity((2 * w + 2) * (h + 1));
    let blank = if show_grid { '+' } else { ' ' };
    out.push(blank);
    for x in 0..w {
        out.push(if g.has_horizontal(x, h) { '_' } else { ' ' });
        out.push(blank);
    }
    out.push('\n');
    for y in (0..h).rev() {
        for x in 0..=w {
            out.push(if g.has_vertical(x, y) { '|' } else { blank });
            if x < w {
                out.push(if g.has_horizontal(x, y) { '_' } else { ' ' });
            }
        }
        out.push('\n');
    }
    out
}

fn fmt_num(v: f64) -> String {
    // integers print without a fractional part
    if v.fract() == 0.0 {
        format!("{}", v as i64)
    } else {
        format!("{v}")
    }
}

/// SVG 1.1 document, one `<line class="stitch">` per present segment, row 0
/// at the bottom.
///
/// With `fill_two_coloring` set, each cell gets a filled square beneath the
/// stitches, coloured from the overlay's coloring or, failing that, one
/// computed from the grid (no fills if the grid is not two-colorable). A cycle
/// overlay is drawn as a filled polygon beneath the stitches.
pub fn render_svg(g: &StitchGrid, opts: &RenderOptions, overlay: Overlay<'_>) -> String {
    let cs = opts.cell_size.max(1) as i64;
    let (w, h) = (g.width() as i64, g.height() as i64);
    let (vw, vh) = (w * cs, h * cs);
    let px = |x: i64| x * cs;
    let py = |y: i64| (h - y) * cs;

    let mut out = String::new();
    writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{vw}" height="{vh}" viewBox="0 0 {vw} {vh}">"#
    )
    .unwrap();
    writeln!(
        out,
        r#"<rect x="0" y="0" width="{vw}" height="{vh}" fill="{}"/>"#,
        opts.palette.fill0
    )
    .unwrap();

    if opts.fill_two_coloring {
        let computed;
        let coloring = match overlay {
            Overlay::TwoColoring(c) => Some(c),
            _ => {
                computed = two_color(g).ok();
                computed.as_ref()
            }
        };
        if let Some(c) = coloring {
            writeln!(out, r#"<g class="coloring" stroke="none">"#).unwrap();
            for y in 0..c.height() {
                for x in 0..c.width() {
                    let fill = if c.color(x, y) == 0 {
                        &opts.palette.fill0
                    } else {
                        &opts.palette.fill1
                    };
                    writeln!(
                        out,
                        r#"<rect x="{}" y="{}" width="{cs}" height="{cs}" fill="{fill}"/>"#,
                        px(x as i64),
                        py(y as i64 + 1)
                    )
                    .unwrap();
                }
            }
            writeln!(out, "</g>").unwrap();
        }
    }

    if let Overlay::Cycle(c) = overlay {
        let points: Vec<String> = c
            .vertices()
            .iter()
            .map(|&(x, y)| format!("{},{}", px(x), py(y)))
            .collect();
        writeln!(
            out,
            r#"<polygon class="highlight" points="{}" fill="{}" stroke="none"/>"#,
            points.join(" "),
            opts.palette.fill1
        )
        .unwrap();
    }

    if opts.show_grid {
        writeln!(
            out,
            r#"<g class="grid" stroke="{}" stroke-opacity="0.15" stroke-width="{}">"#,
            opts.palette.stroke,
            fmt_num(opts.stroke_width / 4.0)
        )
        .unwrap();
        for x in 0..=w {
            writeln!(out, r#"<line x1="{0}" y1="0" x2="{0}" y2="{vh}"/>"#, px(x)).unwrap();
        }
        for y in 0..=h {
            writeln!(out, r#"<line x1="0" y1="{0}" x2="{vw}" y2="{0}"/>"#, py(y)).unwrap();
        }
        writeln!(out, "</g>").unwrap();
    }

    writeln!(
        out,
        r#"<g class="stitches" stroke="{}" stroke-width="{}" stroke-linecap="square">"#,
        opts.palette.stroke,
        fmt_num(opts.stroke_width)
    )
    .unwrap();
    for s in g.present_segments() {
        let ((x0, y0), (x1, y1)) = s.endpoints();
        writeln!(
            out,
            r#"<line class="stitch" x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
            px(x0 as i64),
            py(y0 as i64),
            px(x1 as i64),
            py(y1 as i64)
        )
        .unwrap();
    }
    writeln!(out, "</g>").unwrap();
    writeln!(out, "</svg>").unwrap();
    out
}

/// A polyomino as filled cells with its boundary drawn on top.
pub fn render_polyomino_svg(
    p: &Polyomino,
    boundary: Option<&LatticeCycle>,
    opts: &RenderOptions,
) -> String {
    let cs = opts.cell_size.max(1) as i64;
    let cells = p.normalized();
    let (min_x, min_y) = p
        .cells()
        .iter()
        .fold((i64::MAX, i64::MAX), |(a, b), &(x, y)| (a.min(x), b.min(y)));
    let (w, h) = (p.width() as i64, p.height() as i64);
    let (vw, vh) = (w * cs, h * cs);

    let mut out = String::new();
    writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{vw}" height="{vh}" viewBox="0 0 {vw} {vh}">"#
    )
    .unwrap();
    writeln!(
        out,
        r#"<g class="cells" fill="{}" stroke="none">"#,
        opts.palette.fill1
    )
    .unwrap();
    for (x, y) in cells {
        writeln!(
            out,
            r#"<rect x="{}" y="{}" width="{cs}" height="{cs}"/>"#,
            x * cs,
            (h - y - 1) * cs
        )
        .unwrap();
    }
    writeln!(out, "</g>").unwrap();
    if let Some(c) = boundary {
        let points: Vec<String> = c
            .vertices()
            .iter()
            .map(|&(x, y)| format!("{},{}", (x - min_x) * cs, (h - (y - min_y)) * cs))
            .collect();
        writeln!(
            out,
            r#"<polygon class="boundary" points="{}" fill="none" stroke="{}" stroke-width="{}"/>"#,
            points.join(" "),
            opts.palette.stroke,
            fmt_num(opts.stroke_width)
        )
        .unwrap();
    }
    writeln!(out, "</svg>").unwrap();
    out
}

/// Number of `<line class="stitch">` elements in an SVG produced by
/// [`render_svg`].
pub fn count_stitch_lines(svg: &str) -> usize {
    svg.matches(r#"<line class="stitch""#).count()
}

/// The stitch segments drawn in an SVG document, recovered from the line
/// coordinates for a window of the given height and cell size.
pub fn stitch_segments_in_svg(svg: &str, height: usize, cell_size: u32) -> Vec<Segment> {
    let cs = cell_size.max(1) as i64;
    let attr = |line: &str, name: &str| -> i64 {
        let key = format!(r#"{name}=""#);
        let start = line.find(&key).expect("attribute present") + key.len();
        let end = start + line[start..].find('"').expect("closing quote");
        line[start..end].parse().expect("integer coordinate")
    };
    svg.lines()
        .filter(|l| l.starts_with(r#"<line class="stitch""#))
        .map(|l| {
            let x1 = attr(l, "x1") / cs;
            let x2 = attr(l, "x2") / cs;
            let y1 = height as i64 - attr(l, "y1") / cs;
            let y2 = height as i64 - attr(l, "y2") / cs;
            if y1 == y2 {
                Segment::Horizontal {
                    x: x1.min(x2) as usize,
                    y: y1 as usize,
                }
            } else {
                Segment::Vertical {
                    x: x1 as usize,
                    y: y1.min(y2) as usize,
                }
            }
        })
        .collect()
}
