//! Stitch grids built from encoding words.
//!
//! A window of `W x H` cells has `H + 1` horizontal stitch lines (`y = 0..=H`,
//! read bottom-up along the left edge) and `W + 1` vertical lines (`x = 0..=W`,
//! read left to right along the bottom edge). Each line carries one phase bit:
//! bit `1` means the unit segment nearest the reading edge is present, and the
//! line then alternates present/absent.
//!
//! A family of lines may be absent altogether (the ε encoding), in which case
//! that axis contributes no stitches.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::words::{BinaryWord, Bit, Letter};

/// How many times a program segment's word is laid down. Serialized as a
/// positive integer or the string `"fill"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Repeats {
    Count(usize),
    Fill,
}

impl Serialize for Repeats {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Repeats::Count(k) => s.serialize_u64(*k as u64),
            Repeats::Fill => s.serialize_str("fill"),
        }
    }
}

impl<'de> Deserialize<'de> for Repeats {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Count(usize),
            Tag(String),
        }
        match Raw::deserialize(d)? {
            Raw::Count(k) => Ok(Repeats::Count(k)),
            Raw::Tag(t) if t == "fill" => Ok(Repeats::Fill),
            Raw::Tag(t) => Err(serde::de::Error::custom(format!(
                "expected a repeat count or \"fill\", got {t:?}"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProgramSegment {
    pub word: BinaryWord,
    pub repeats: Repeats,
}

/// A piecewise description of the phase bits along one axis.
///
/// Fixed segments are laid down in order; the (single, optional) fill segment
/// stretches to cover whatever the window needs. A program with no segments
/// describes an absent family of lines.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
#[serde(transparent)]
pub struct WordProgram {
    segments: Vec<ProgramSegment>,
}

impl WordProgram {
    pub fn new(segments: Vec<ProgramSegment>) -> Result<Self> {
        let fills = segments
            .iter()
            .filter(|s| s.repeats == Repeats::Fill)
            .count();
        if fills > 1 {
            return Err(Error::MultipleFill);
        }
        if segments.iter().any(|s| s.repeats == Repeats::Count(0)) {
            return Err(Error::ZeroRepeat);
        }
        Ok(WordProgram { segments })
    }

    /// No lines on this axis.
    pub fn absent() -> Self {
        WordProgram::default()
    }

    /// The word repeated as far as needed.
    pub fn fill(word: BinaryWord) -> Self {
        WordProgram {
            segments: vec![ProgramSegment {
                word,
                repeats: Repeats::Fill,
            }],
        }
    }

    pub fn segments(&self) -> &[ProgramSegment] {
        &self.segments
    }

    pub fn is_absent(&self) -> bool {
        self.segments.is_empty()
    }

    /// The word of a program consisting of a single fill segment.
    pub fn periodic_word(&self) -> Option<&BinaryWord> {
        match self.segments.as_slice() {
            [ProgramSegment {
                word,
                repeats: Repeats::Fill,
            }] => Some(word),
            _ => None,
        }
    }

    /// Expands the program to exactly `count` bits.
    pub fn expand(&self, count: usize) -> Result<Vec<Bit>> {
        let fixed: usize = self
            .segments
            .iter()
            .filter_map(|s| match s.repeats {
                Repeats::Count(k) => Some(k * s.word.len()),
                Repeats::Fill => None,
            })
            .sum();
        let mut bits = Vec::with_capacity(count.max(fixed));
        for seg in &self.segments {
            match seg.repeats {
                Repeats::Count(k) => {
                    for _ in 0..k {
                        bits.extend_from_slice(seg.word.letters());
                    }
                }
                Repeats::Fill => {
                    if seg.word.is_empty() {
                        return Err(Error::EmptyFillWord);
                    }
                    let need = count.saturating_sub(fixed);
                    bits.extend((0..need).map(|i| seg.word.cyclic(i)));
                }
            }
        }
        if bits.len() < count {
            return Err(Error::ProgramUnderflow {
                produced: bits.len(),
                requested: count,
            });
        }
        bits.truncate(count);
        Ok(bits)
    }
}

/// Free function form of [`WordProgram::expand`].
pub fn expand_program(p: &WordProgram, count: usize) -> Result<Vec<Bit>> {
    p.expand(count)
}

impl<'de> Deserialize<'de> for WordProgram {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let segments = Vec::<ProgramSegment>::deserialize(d)?;
        WordProgram::new(segments).map_err(serde::de::Error::custom)
    }
}

impl FromStr for WordProgram {
    type Err = Error;

    /// Comma-separated segments: `word` is a fill segment, `word:count` a fixed
    /// one. The empty string (or `ε`) is the absent program.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "ε" {
            return Ok(WordProgram::absent());
        }
        let segments = s
            .split(',')
            .map(|part| {
                let part = part.trim();
                let (word, repeats) = match part.split_once(':') {
                    Some((word, count)) => {
                        let k = count
                            .trim()
                            .parse::<usize>()
                            .map_err(|_| Error::MalformedSegment(part.to_string()))?;
                        (word, Repeats::Count(k))
                    }
                    None => (part, Repeats::Fill),
                };
                Ok(ProgramSegment {
                    word: word.trim().parse()?,
                    repeats,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        WordProgram::new(segments)
    }
}

impl fmt::Display for WordProgram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, seg) in self.segments.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            match seg.repeats {
                Repeats::Fill => write!(f, "{}", seg.word)?,
                Repeats::Count(k) => write!(f, "{}:{}", seg.word, k)?,
            }
        }
        Ok(())
    }
}

/// A named pattern on a finite window.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternSpec {
    pub name: String,
    pub rows: WordProgram,
    pub cols: WordProgram,
    pub width: usize,
    pub height: usize,
}

impl PatternSpec {
    /// Periodic spec from single row/column words; an empty word means that
    /// family of lines is absent.
    pub fn periodic(
        name: impl Into<String>,
        rows: BinaryWord,
        cols: BinaryWord,
        width: usize,
        height: usize,
    ) -> Self {
        let program = |w: BinaryWord| {
            if w.is_empty() {
                WordProgram::absent()
            } else {
                WordProgram::fill(w)
            }
        };
        PatternSpec {
            name: name.into(),
            rows: program(rows),
            cols: program(cols),
            width,
            height,
        }
    }

    pub fn build(&self) -> Result<StitchGrid> {
        build_grid(self)
    }
}

pub fn build_grid(spec: &PatternSpec) -> Result<StitchGrid> {
    if spec.width == 0 || spec.height == 0 {
        return Err(Error::EmptyWindow {
            width: spec.width,
            height: spec.height,
        });
    }
    let family = |p: &WordProgram, n: usize| {
        if p.is_absent() {
            Ok(None)
        } else {
            p.expand(n).map(Some)
        }
    };
    Ok(StitchGrid {
        width: spec.width,
        height: spec.height,
        row_bits: family(&spec.rows, spec.height + 1)?,
        col_bits: family(&spec.cols, spec.width + 1)?,
    })
}

/// A unit lattice segment inside a window, named by its lower-left endpoint.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Segment {
    /// From `(x, y)` to `(x + 1, y)`.
    Horizontal { x: usize, y: usize },
    /// From `(x, y)` to `(x, y + 1)`.
    Vertical { x: usize, y: usize },
}

impl Segment {
    pub fn endpoints(self) -> ((usize, usize), (usize, usize)) {
        match self {
            Segment::Horizontal { x, y } => ((x, y), (x + 1, y)),
            Segment::Vertical { x, y } => ((x, y), (x, y + 1)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StitchGrid {
    width: usize,
    height: usize,
    row_bits: Option<Vec<Bit>>,
    col_bits: Option<Vec<Bit>>,
}

impl StitchGrid {
    /// Grid from explicit phase bits. Row bits, when present, must number
    /// `height + 1`; column bits `width + 1`.
    pub fn from_bits(
        width: usize,
        height: usize,
        row_bits: Option<Vec<Bit>>,
        col_bits: Option<Vec<Bit>>,
    ) -> Result<Self> {
        if width == 0 || height == 0 {
            return Err(Error::EmptyWindow { width, height });
        }
        let check = |bits: &Option<Vec<Bit>>, n: usize| match bits {
            Some(b) if b.len() != n => Err(Error::ProgramUnderflow {
                produced: b.len(),
                requested: n,
            }),
            _ => Ok(()),
        };
        check(&row_bits, height + 1)?;
        check(&col_bits, width + 1)?;
        Ok(StitchGrid {
            width,
            height,
            row_bits,
            col_bits,
        })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn row_bits(&self) -> Option<&[Bit]> {
        self.row_bits.as_deref()
    }

    pub fn col_bits(&self) -> Option<&[Bit]> {
        self.col_bits.as_deref()
    }

    /// Segment `(x, y)-(x+1, y)`. False outside the window.
    pub fn has_horizontal(&self, x: usize, y: usize) -> bool {
        match &self.row_bits {
            Some(rows) if x < self.width && y <= self.height => (x + rows[y].value()) % 2 == 1,
            _ => false,
        }
    }

    /// Segment `(x, y)-(x, y+1)`. False outside the window.
    pub fn has_vertical(&self, x: usize, y: usize) -> bool {
        match &self.col_bits {
            Some(cols) if x <= self.width && y < self.height => (y + cols[x].value()) % 2 == 1,
            _ => false,
        }
    }

    pub fn is_present(&self, s: Segment) -> bool {
        match s {
            Segment::Horizontal { x, y } => self.has_horizontal(x, y),
            Segment::Vertical { x, y } => self.has_vertical(x, y),
        }
    }

    /// Every lattice segment of the window, horizontal ones first.
    pub fn all_segments(&self) -> impl Iterator<Item = Segment> + '_ {
        let (w, h) = (self.width, self.height);
        let horizontal =
            (0..=h).flat_map(move |y| (0..w).map(move |x| Segment::Horizontal { x, y }));
        let vertical = (0..=w).flat_map(move |x| (0..h).map(move |y| Segment::Vertical { x, y }));
        horizontal.chain(vertical)
    }

    pub fn present_segments(&self) -> impl Iterator<Item = Segment> + '_ {
        self.all_segments().filter(|s| self.is_present(*s))
    }

    pub fn vertex_degree(&self, x: usize, y: usize) -> Result<usize> {
        if x > self.width || y > self.height {
            return Err(Error::OutOfBounds {
                x,
                y,
                width: self.width,
                height: self.height,
            });
        }
        let mut degree = 0;
        if x > 0 && self.has_horizontal(x - 1, y) {
            degree += 1;
        }
        if self.has_horizontal(x, y) {
            degree += 1;
        }
        if y > 0 && self.has_vertical(x, y - 1) {
            degree += 1;
        }
        if self.has_vertical(x, y) {
            degree += 1;
        }
        Ok(degree)
    }

    /// Every interior vertex has exactly two incident stitches.
    pub fn is_fully_packed(&self) -> bool {
        (1..self.height).all(|y| (1..self.width).all(|x| self.vertex_degree(x, y) == Ok(2)))
    }

    /// The pattern on the reverse of the fabric: every phase bit complemented.
    pub fn dual(&self) -> StitchGrid {
        let flip = |bits: &Option<Vec<Bit>>| {
            bits.as_ref()
                .map(|b| b.iter().map(|bit| bit.complement()).collect())
        };
        StitchGrid {
            width: self.width,
            height: self.height,
            row_bits: flip(&self.row_bits),
            col_bits: flip(&self.col_bits),
        }
    }
}

/// Free function form of [`StitchGrid::dual`].
pub fn dual(g: &StitchGrid) -> StitchGrid {
    g.dual()
}

/// Searches for a translation `(dx, dy)` taking the bi-infinite pattern encoded
/// by `row_word`/`col_word` onto its dual.
///
/// Returns the lexicographically smallest `(dx, dy)` with `dx < 2|col_word|`
/// and `dy < 2|row_word|`, or `None` when the pattern is not self-dual.
pub fn is_self_dual(
    row_word: &BinaryWord,
    col_word: &BinaryWord,
) -> Result<Option<(usize, usize)>> {
    if row_word.is_empty() || col_word.is_empty() {
        return Err(Error::EmptyEncoding);
    }
    self_dual_shift(Some(row_word), Some(col_word))
}

/// Like [`is_self_dual`] but allows one family of lines to be absent (`None`);
/// that axis then imposes no condition.
pub fn self_dual_shift(
    rows: Option<&BinaryWord>,
    cols: Option<&BinaryWord>,
) -> Result<Option<(usize, usize)>> {
    if rows.is_none_or(|w| w.is_empty()) && cols.is_none_or(|v| v.is_empty()) {
        return Err(Error::EmptyEncoding);
    }
    let rows = rows.filter(|w| !w.is_empty());
    let cols = cols.filter(|v| !v.is_empty());
    let dy_range = 2 * rows.map_or(1, |w| w.len());
    let dx_range = 2 * cols.map_or(1, |v| v.len());

    // Shifting by (dx, dy) moves line y onto line y + dy and flips its phase
    // when dx is odd; likewise for columns.
    let family_matches = |word: Option<&BinaryWord>, shift: usize, other_shift: usize| {
        word.is_none_or(|w| {
            let flip = other_shift % 2 == 1;
            (0..w.len()).all(|i| {
                let shifted = w.cyclic(i + shift);
                let shifted = if flip { shifted.complement() } else { shifted };
                w.cyclic(i).complement() == shifted
            })
        })
    };

    for dx in 0..dx_range {
        for dy in 0..dy_range {
            if family_matches(rows, dy, dx) && family_matches(cols, dx, dy) {
                return Ok(Some((dx, dy)));
            }
        }
    }
    Ok(None)
}

/// Finds a translation mapping `g` onto its dual within the finite window.
///
/// Compares `dual(g)` at every segment against `g` at the segment shifted by
/// `(dx, dy)`, over the part of the window where both exist. Shifts are tried
/// in order of increasing `|dx| + |dy|` up to `max_shift` per axis. Intended
/// for piecewise programs, where [`self_dual_shift`] does not apply.
pub fn window_dual_translation(g: &StitchGrid, max_shift: usize) -> Option<(isize, isize)> {
    let m = max_shift as isize;
    let mut shifts: Vec<(isize, isize)> = (-m..=m)
        .flat_map(|dx| (-m..=m).map(move |dy| (dx, dy)))
        .collect();
    shifts.sort_by_key(|&(dx, dy)| (dx.abs() + dy.abs(), dx, dy));
    let d = g.dual();
    shifts.into_iter().find(|&(dx, dy)| {
        g.all_segments().all(|s| {
            let moved = match s {
                Segment::Horizontal { x, y } => shift_point(x, y, dx, dy, g.width - 1, g.height)
                    .map(|(x, y)| Segment::Horizontal { x, y }),
                Segment::Vertical { x, y } => shift_point(x, y, dx, dy, g.width, g.height - 1)
                    .map(|(x, y)| Segment::Vertical { x, y }),
            };
            moved.is_none_or(|m| d.is_present(s) == g.is_present(m))
        })
    })
}

fn shift_point(
    x: usize,
    y: usize,
    dx: isize,
    dy: isize,
    max_x: usize,
    max_y: usize,
) -> Option<(usize, usize)> {
    let nx = x as isize + dx;
    let ny = y as isize + dy;
    (nx >= 0 && ny >= 0 && nx as usize <= max_x && ny as usize <= max_y)
        .then_some((nx as usize, ny as usize))
}
