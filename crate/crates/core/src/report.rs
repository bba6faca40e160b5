//! Structured reports and their text renderings, shared by the CLI and tests.

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::Result;
use crate::grid::StitchGrid;
use crate::loops::{
    check_loop_theorems, extract_components, largest_loop, two_color, Loop, LoopStats, TheoremCheck,
};
use crate::registry::{CatalogEntry, Table1Row};
use crate::tiles::{ConjectureReport, Snowflake};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LoopRecord {
    pub perimeter: usize,
    pub area: usize,
    pub height: usize,
    pub width: usize,
    pub canonical_hash: String,
    pub theorems: TheoremCheck,
}

impl From<&Loop> for LoopRecord {
    fn from(l: &Loop) -> Self {
        LoopRecord {
            perimeter: l.stats.perimeter,
            area: l.stats.area,
            height: l.stats.height,
            width: l.stats.width,
            canonical_hash: l.polyomino.canonical_hash(),
            theorems: check_loop_theorems(&l.stats),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ColoringRecord {
    pub regions: usize,
    /// One string of `0`/`1` per cell row, top row first.
    pub matrix: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub name: String,
    pub width: usize,
    pub height: usize,
    pub fully_packed: bool,
    /// Closed loops, largest first.
    pub loops: Vec<LoopRecord>,
    pub open_paths: usize,
    pub largest: Option<LoopStats>,
    pub all_theorems_hold: bool,
    pub two_coloring: Option<ColoringRecord>,
    pub two_coloring_error: Option<String>,
}

pub fn analyze(name: &str, g: &StitchGrid) -> AnalysisReport {
    let components = extract_components(g);
    let mut loops: Vec<LoopRecord> = components
        .cycles
        .into_iter()
        .map(|c| LoopRecord::from(&Loop::from_cycle(c).expect("extracted cycles are simple")))
        .collect();
    loops.sort_by(|a, b| {
        (b.area, b.perimeter)
            .cmp(&(a.area, a.perimeter))
            .then_with(|| a.canonical_hash.cmp(&b.canonical_hash))
    });
    let (two_coloring, two_coloring_error) = match two_color(g) {
        Ok(c) => (
            Some(ColoringRecord {
                regions: c.region_count(),
                matrix: c
                    .matrix()
                    .iter()
                    .map(|row| row.iter().map(|v| char::from(b'0' + v)).collect())
                    .collect(),
            }),
            None,
        ),
        Err(e) => (None, Some(e.to_string())),
    };
    AnalysisReport {
        name: name.to_string(),
        width: g.width(),
        height: g.height(),
        fully_packed: g.is_fully_packed(),
        all_theorems_hold: loops.iter().all(|l| l.theorems.all()),
        loops,
        open_paths: components.open_paths.len(),
        largest: largest_loop(g).map(|l| l.stats),
        two_coloring,
        two_coloring_error,
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn format_analysis(r: &AnalysisReport) -> String {
    let mut out = String::new();
    writeln!(out, "pattern: {} ({}x{})", r.name, r.width, r.height).unwrap();
    writeln!(out, "fully packed: {}", yes_no(r.fully_packed)).unwrap();
    writeln!(
        out,
        "components: {} closed loops, {} open paths",
        r.loops.len(),
        r.open_paths
    )
    .unwrap();
    if !r.loops.is_empty() {
        writeln!(
            out,
            "{:>9} {:>6} {:>6} {:>5}  {:<16}  {:>9} {:>9} {:>8}",
            "perimeter", "area", "height", "width", "shape", "area%4=1", "perim%8=4", "odd dims"
        )
        .unwrap();
        for l in &r.loops {
            writeln!(
                out,
                "{:>9} {:>6} {:>6} {:>5}  {:<16}  {:>9} {:>9} {:>8}",
                l.perimeter,
                l.area,
                l.height,
                l.width,
                l.canonical_hash,
                yes_no(l.theorems.area_mod_4),
                yes_no(l.theorems.perimeter_mod_8),
                yes_no(l.theorems.odd_dimensions)
            )
            .unwrap();
        }
    }
    match r.largest {
        Some(s) => writeln!(
            out,
            "largest loop: perimeter {} area {} height {} width {}",
            s.perimeter, s.area, s.height, s.width
        )
        .unwrap(),
        None => writeln!(out, "largest loop: none").unwrap(),
    }
    writeln!(out, "loop theorems hold: {}", yes_no(r.all_theorems_hold)).unwrap();
    match (&r.two_coloring, &r.two_coloring_error) {
        (Some(c), _) => {
            writeln!(out, "two-coloring: {} regions", c.regions).unwrap();
            for row in &c.matrix {
                writeln!(out, "{row}").unwrap();
            }
        }
        (None, Some(e)) => writeln!(out, "two-coloring: {e}").unwrap(),
        (None, None) => {}
    }
    out
}

/// Fixed-width loop table: name column of 28 characters, then perimeter,
/// area, height and width right-aligned in columns of 10, 6, 8 and 7.
pub fn format_table1(rows: &[Table1Row]) -> String {
    let mut out = format!(
        "{:<28}{:>10}{:>6}{:>8}{:>7}\n",
        "Pattern name", "Perimeter", "Area", "Height", "Width"
    );
    for r in rows {
        writeln!(
            out,
            "{:<28}{:>10}{:>6}{:>8}{:>7}",
            r.name, r.stats.perimeter, r.stats.area, r.stats.height, r.stats.width
        )
        .unwrap();
    }
    out
}

pub fn format_catalog(entries: &[CatalogEntry]) -> String {
    let mut out = String::new();
    for e in entries {
        format_entry_into(&mut out, e);
    }
    out
}

pub fn format_entry(e: &CatalogEntry) -> String {
    let mut out = String::new();
    format_entry_into(&mut out, e);
    out
}

fn format_entry_into(out: &mut String, e: &CatalogEntry) {
    let word = |w: &str| {
        if w.is_empty() {
            "ε".to_string()
        } else {
            w.to_string()
        }
    };
    writeln!(out, "{} ({}): {}", e.key, e.display_name, e.meaning).unwrap();
    writeln!(out, "  rows (w): {}", word(&e.rows)).unwrap();
    writeln!(out, "  cols (v): {}", word(&e.cols)).unwrap();
    writeln!(
        out,
        "  default window: {}x{}",
        e.default_width, e.default_height
    )
    .unwrap();
    writeln!(out, "  self-dual: {}", yes_no(e.self_dual)).unwrap();
    if let Some(s) = e.expected_stats {
        writeln!(
            out,
            "  largest loop: perimeter {} area {} height {} width {}",
            s.perimeter, s.area, s.height, s.width
        )
        .unwrap();
    }
    if let Some(note) = e.dual_note {
        writeln!(out, "  dual: {note}").unwrap();
    }
}

pub fn format_shift(shift: Option<(usize, usize)>) -> String {
    match shift {
        Some((dx, dy)) => format!("dx={dx} dy={dy}"),
        None => "none".to_string(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SnowflakeRecord {
    pub order: u32,
    pub side: String,
    pub boundary: String,
    pub perimeter: usize,
    pub area: usize,
    pub height: usize,
    pub width: usize,
    pub canonical_hash: String,
    /// Cells translated to the origin, sorted.
    pub cells: Vec<(i64, i64)>,
}

impl From<&Snowflake> for SnowflakeRecord {
    fn from(s: &Snowflake) -> Self {
        let stats = s.stats();
        SnowflakeRecord {
            order: s.order.get(),
            side: crate::tiles::snowflake_side(s.order).to_string(),
            boundary: s.boundary.to_string(),
            perimeter: stats.perimeter,
            area: stats.area,
            height: stats.height,
            width: stats.width,
            canonical_hash: s.polyomino.canonical_hash(),
            cells: s.polyomino.normalized(),
        }
    }
}

pub fn format_snowflake(r: &SnowflakeRecord) -> String {
    let mut out = String::new();
    writeln!(out, "order: {}", r.order).unwrap();
    writeln!(out, "side: {}", r.side).unwrap();
    writeln!(out, "boundary: ({})^4", r.side).unwrap();
    writeln!(
        out,
        "perimeter {} area {} height {} width {}",
        r.perimeter, r.area, r.height, r.width
    )
    .unwrap();
    let cells: Vec<String> = r.cells.iter().map(|(x, y)| format!("{x},{y}")).collect();
    writeln!(out, "cells: {}", cells.join(" ")).unwrap();
    out
}

pub fn format_conjecture(reports: &[ConjectureReport]) -> String {
    let mut out = String::new();
    for r in reports {
        let s = &r.persimmon_largest;
        writeln!(
            out,
            "order {}: {} (window {}x{}, largest loop perimeter {} area {} height {} width {})",
            r.order.get(),
            r.holds,
            r.window,
            r.window,
            s.perimeter,
            s.area,
            s.height,
            s.width
        )
        .unwrap();
    }
    out
}

pub fn to_json<T: Serialize>(value: &T) -> Result<String, serde_json::Error> {
    serde_json::to_string_pretty(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::PatternSpec;
    use crate::loops::LoopStats;
    use crate::registry::Side;

    #[test]
    fn kuchizashi_report() {
        let g = PatternSpec::periodic("k", "1".parse().unwrap(), "1".parse().unwrap(), 4, 4)
            .build()
            .unwrap();
        let r = analyze("kuchizashi", &g);
        assert_eq!(r.loops.len(), 4);
        assert_eq!(r.open_paths, 4);
        assert!(r.all_theorems_hold);
        assert_eq!(r.largest, Some(LoopStats::new(4, 1, 1, 1)));
        let c = r.two_coloring.as_ref().unwrap();
        assert_eq!(c.matrix, vec!["1111", "0101", "1111", "0101"]);
        let text = format_analysis(&r);
        assert!(text.contains("components: 4 closed loops, 4 open paths"));
        let json: serde_json::Value = serde_json::from_str(&to_json(&r).unwrap()).unwrap();
        assert_eq!(json["loops"][0]["theorems"]["area_mod_4"], true);
    }

    #[test]
    fn table_layout() {
        let rows = [Table1Row {
            name: "jūjizashi",
            key: "jujizashi",
            side: Side::Front,
            stats: LoopStats::new(12, 5, 3, 3),
        }];
        let text = format_table1(&rows);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(
            lines[0],
            "Pattern name                 Perimeter  Area  Height  Width"
        );
        assert_eq!(
            lines[1],
            "jūjizashi                           12     5       3      3"
        );
    }

    #[test]
    fn shift_formatting() {
        assert_eq!(format_shift(None), "none");
        assert_eq!(format_shift(Some((1, 0))), "dx=1 dy=0");
    }
}
