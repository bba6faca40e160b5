//! Traditional hitomezashi patterns and their encodings.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::grid::{
    self_dual_shift, window_dual_translation, PatternSpec, ProgramSegment, Repeats, WordProgram,
};
use crate::loops::{largest_loop, LoopStats};
use crate::words::BinaryWord;

/// How the phase bits along one axis are generated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AxisTemplate {
    /// No lines on this axis.
    Absent,
    /// One word repeated edge to edge.
    Periodic(&'static str),
    /// `before` repeated up to the peak line, then `after` to the far edge.
    Peak {
        before: &'static str,
        after: &'static str,
    },
}

impl AxisTemplate {
    fn period(self) -> usize {
        match self {
            AxisTemplate::Absent => 2,
            AxisTemplate::Periodic(w) => w.len(),
            AxisTemplate::Peak { before, .. } => before.len(),
        }
    }

    /// Program for `lines` lines; `peak` is the number of lines laid down
    /// before the switch (rounded down to whole words).
    fn program(self, lines: usize, peak: Option<usize>) -> WordProgram {
        let word = |w: &str| w.parse::<BinaryWord>().expect("registry words are binary");
        match self {
            AxisTemplate::Absent => WordProgram::absent(),
            AxisTemplate::Periodic(w) => WordProgram::fill(word(w)),
            AxisTemplate::Peak { before, after } => {
                let peak = peak.unwrap_or(lines / 2);
                let repeats = (peak / before.len()).max(1);
                WordProgram::new(vec![
                    ProgramSegment {
                        word: word(before),
                        repeats: Repeats::Count(repeats),
                    },
                    ProgramSegment {
                        word: word(after),
                        repeats: Repeats::Fill,
                    },
                ])
                .expect("one fill segment")
            }
        }
    }

    fn periodic_word(self) -> Option<Option<BinaryWord>> {
        match self {
            AxisTemplate::Absent => Some(None),
            AxisTemplate::Periodic(w) => Some(Some(w.parse().expect("registry words are binary"))),
            AxisTemplate::Peak { .. } => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternEntry {
    pub key: &'static str,
    pub display_name: &'static str,
    pub meaning: &'static str,
    /// Horizontal lines (word `w`).
    pub rows: AxisTemplate,
    /// Vertical lines (word `v`).
    pub cols: AxisTemplate,
    pub self_dual: bool,
    /// Largest loop on the encoded side, where recorded.
    pub expected_stats: Option<LoopStats>,
    pub dual_key: Option<&'static str>,
    pub dual_note: Option<&'static str>,
}

impl PatternEntry {
    /// Four word periods per axis.
    pub fn default_window(&self) -> (usize, usize) {
        (4 * self.cols.period(), 4 * self.rows.period())
    }

    pub fn spec(&self, width: usize, height: usize) -> PatternSpec {
        self.spec_with_peak(width, height, None)
    }

    /// Spec with the word switch of peaked axes placed after `peak` lines
    /// (default: the window midline).
    pub fn spec_with_peak(&self, width: usize, height: usize, peak: Option<usize>) -> PatternSpec {
        PatternSpec {
            name: self.key.to_string(),
            rows: self.rows.program(height + 1, peak),
            cols: self.cols.program(width + 1, peak),
            width,
            height,
        }
    }

    pub fn default_spec(&self) -> PatternSpec {
        let (w, h) = self.default_window();
        self.spec(w, h)
    }

    /// Row and column words when both axes are periodic (or absent).
    pub fn words(&self) -> Option<(Option<BinaryWord>, Option<BinaryWord>)> {
        Some((self.rows.periodic_word()?, self.cols.periodic_word()?))
    }

    /// Self-duality decided from the encoding: by word shifts for periodic
    /// patterns, by window translation for peaked ones.
    pub fn computed_self_dual(&self) -> bool {
        match self.words() {
            Some((rows, cols)) => self_dual_shift(rows.as_ref(), cols.as_ref())
                .expect("registry entries encode at least one axis")
                .is_some(),
            None => {
                let grid = self.spec(24, 24).build().expect("registry specs build");
                window_dual_translation(&grid, 4).is_some()
            }
        }
    }
}

const fn entry(
    key: &'static str,
    display_name: &'static str,
    meaning: &'static str,
    rows: AxisTemplate,
    cols: AxisTemplate,
    self_dual: bool,
) -> PatternEntry {
    PatternEntry {
        key,
        display_name,
        meaning,
        rows,
        cols,
        self_dual,
        expected_stats: None,
        dual_key: if self_dual { Some(key) } else { None },
        dual_note: None,
    }
}

use AxisTemplate::{Absent, Peak, Periodic};

static ENTRIES: [PatternEntry; 13] = [
    entry(
        "yokogushi",
        "yokogushi",
        "horizontal lines",
        Periodic("10"),
        Absent,
        true,
    ),
    entry(
        "tategushi",
        "tategushi",
        "vertical lines",
        Absent,
        Periodic("10"),
        true,
    ),
    entry(
        "dan_tsunagi_ne",
        "dan tsunagi",
        "linked steps, rising south-west to north-east",
        Periodic("01"),
        Periodic("10"),
        true,
    ),
    entry(
        "dan_tsunagi_nw",
        "dan tsunagi",
        "linked steps, rising south-east to north-west",
        Periodic("10"),
        Periodic("10"),
        true,
    ),
    PatternEntry {
        expected_stats: Some(LoopStats::new(4, 1, 1, 1)),
        ..entry(
            "kuchizashi",
            "kuchizashi",
            "mouth stitch",
            Periodic("1"),
            Periodic("1"),
            true,
        )
    },
    PatternEntry {
        expected_stats: Some(LoopStats::new(12, 5, 3, 3)),
        dual_note: Some("mouths and single mountain lines (kuchi and yamagata)"),
        ..entry(
            "jujizashi",
            "jūjizashi",
            "ten-cross stitch",
            Periodic("0110"),
            Periodic("011"),
            false,
        )
    },
    entry(
        "hirayama_michi",
        "hirayama michi",
        "passes into the mountain",
        Periodic("10"),
        Periodic("1"),
        true,
    ),
    PatternEntry {
        dual_note: Some("kawari kuchizashi, offset mouths"),
        ..entry(
            "kawari_hirayama",
            "kawari hirayama michi",
            "variant passes, facing away from each other",
            Periodic("0110"),
            Periodic("1"),
            false,
        )
    },
    entry(
        "yamagata",
        "yamagata",
        "mountain form",
        Periodic("10"),
        Peak {
            before: "01",
            after: "10",
        },
        true,
    ),
    entry(
        "niju_yamagata",
        "nijū yamagata",
        "double mountain form",
        Periodic("10"),
        Periodic("10101"),
        true,
    ),
    PatternEntry {
        expected_stats: Some(LoopStats::new(20, 13, 5, 5)),
        dual_note: Some("ten-crosses between single lines of nijū yamagata"),
        ..entry(
            "kakinohanazashi",
            "kakinohanazashi",
            "persimmon flower stitch",
            Periodic("10100101"),
            Periodic("010"),
            false,
        )
    },
    PatternEntry {
        expected_stats: Some(LoopStats::new(36, 41, 9, 9)),
        dual_note: Some("a cross at the centre of each motif"),
        ..entry(
            "sanju_kakinohanazashi",
            "sanjū kakinohanazashi",
            "triple persimmon flower stitch",
            Periodic("101010010101"),
            Periodic("01010"),
            false,
        )
    },
    PatternEntry {
        dual_note: Some("well-kerb motifs with mouths between them"),
        ..entry(
            "igetazashi",
            "igetazashi",
            "well-kerb stitch",
            Periodic("100001"),
            Periodic("100001"),
            false,
        )
    },
];

pub fn list_all() -> &'static [PatternEntry] {
    &ENTRIES
}

pub fn lookup(key: &str) -> Result<&'static PatternEntry> {
    ENTRIES
        .iter()
        .find(|e| e.key == key)
        .ok_or_else(|| Error::PatternNotFound(key.to_string()))
}

/// Which side of the fabric a loop is measured on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Front,
    Reverse,
}

/// Rows of the loop table: label, registry key, and the side on which the
/// motif appears under this crate's phase convention. The well-kerb motif
/// forms on the reverse of the `u·reverse(u)`, `u = 100` encoding.
pub const TABLE1_LAYOUT: [(&str, &str, Side); 6] = [
    ("kuchizashi", "kuchizashi", Side::Front),
    ("jūjizashi", "jujizashi", Side::Front),
    ("kakinohanazashi", "kakinohanazashi", Side::Front),
    (
        "dual sanjū kakinohanazashi",
        "sanju_kakinohanazashi",
        Side::Reverse,
    ),
    (
        "sanjū kakinohanazashi",
        "sanju_kakinohanazashi",
        Side::Front,
    ),
    ("igetazashi", "igetazashi", Side::Reverse),
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Table1Row {
    pub name: &'static str,
    pub key: &'static str,
    pub side: Side,
    pub stats: LoopStats,
}

/// Largest-loop statistics measured on each pattern's default window.
pub fn table1() -> Result<Vec<Table1Row>> {
    TABLE1_LAYOUT
        .iter()
        .map(|&(name, key, side)| {
            let grid = lookup(key)?.default_spec().build()?;
            let grid = match side {
                Side::Front => grid,
                Side::Reverse => grid.dual(),
            };
            let found = largest_loop(&grid)
                .ok_or_else(|| Error::WindowTooSmall(format!("no closed loop for {name}")))?;
            Ok(Table1Row {
                name,
                key,
                side,
                stats: found.stats,
            })
        })
        .collect()
}

/// Catalog record for external tools.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CatalogEntry {
    pub key: &'static str,
    pub display_name: &'static str,
    pub meaning: &'static str,
    pub rows: String,
    pub cols: String,
    pub default_width: usize,
    pub default_height: usize,
    pub self_dual: bool,
    pub expected_stats: Option<LoopStats>,
    pub dual_key: Option<&'static str>,
    pub dual_note: Option<&'static str>,
}

impl From<&PatternEntry> for CatalogEntry {
    fn from(e: &PatternEntry) -> Self {
        let spec = e.default_spec();
        CatalogEntry {
            key: e.key,
            display_name: e.display_name,
            meaning: e.meaning,
            rows: spec.rows.to_string(),
            cols: spec.cols.to_string(),
            default_width: spec.width,
            default_height: spec.height,
            self_dual: e.self_dual,
            expected_stats: e.expected_stats,
            dual_key: e.dual_key,
            dual_note: e.dual_note,
        }
    }
}

pub fn catalog() -> Vec<CatalogEntry> {
    ENTRIES.iter().map(CatalogEntry::from).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn lookups() {
        let k = lookup("kuchizashi").unwrap();
        assert_eq!(k.rows, Periodic("1"));
        assert_eq!(k.cols, Periodic("1"));
        assert!(k.self_dual);
        let j = lookup("jujizashi").unwrap();
        assert_eq!((j.rows, j.cols), (Periodic("0110"), Periodic("011")));
        assert!(!j.self_dual);
        let u: BinaryWord = "100".parse().unwrap();
        let i = lookup("igetazashi").unwrap();
        let (rows, cols) = i.words().unwrap();
        assert_eq!(rows.unwrap(), u.concat(&u.reverse()));
        assert_eq!(i.rows, i.cols);
        assert!(cols.is_some());
        assert_eq!(
            lookup("moyozashi"),
            Err(Error::PatternNotFound("moyozashi".into()))
        );
    }

    #[test]
    fn keys_are_unique() {
        let keys: HashSet<_> = list_all().iter().map(|e| e.key).collect();
        assert_eq!(keys.len(), list_all().len());
    }

    #[test]
    fn persimmon_words_are_u_reverse_u() {
        for (key, u) in [
            ("kakinohanazashi", "1010"),
            ("sanju_kakinohanazashi", "101010"),
        ] {
            let u: BinaryWord = u.parse().unwrap();
            let (rows, _) = lookup(key).unwrap().words().unwrap();
            assert_eq!(rows.unwrap(), u.concat(&u.reverse()));
        }
    }

    #[test]
    fn self_dual_flags_match_computation() {
        for e in list_all() {
            assert_eq!(e.computed_self_dual(), e.self_dual, "{}", e.key);
        }
    }

    #[test]
    fn expected_stats_hold_on_default_windows() {
        for e in list_all() {
            if let Some(stats) = e.expected_stats {
                let g = e.default_spec().build().unwrap();
                assert_eq!(largest_loop(&g).unwrap().stats, stats, "{}", e.key);
            }
        }
    }

    #[test]
    fn yamagata_peak_program() {
        let spec = lookup("yamagata").unwrap().spec_with_peak(10, 6, Some(4));
        assert_eq!(spec.cols.to_string(), "01:2,10");
        let bits = spec.cols.expand(11).unwrap();
        let s: String = bits
            .iter()
            .map(|b| if b.is_one() { '1' } else { '0' })
            .collect();
        assert_eq!(s, "01011010101");
    }
}
