//! Lattice cycles and the polyominoes they enclose.

use std::collections::{BTreeSet, HashSet, VecDeque};

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

pub type Point = (i64, i64);
/// A unit cell, named by its lower-left corner.
pub type Cell = (i64, i64);

/// A simple closed path of unit steps on the integer lattice.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct LatticeCycle {
    vertices: Vec<Point>,
}

impl LatticeCycle {
    /// Validates closure, unit steps and simplicity. The last vertex must be
    /// adjacent to the first; it is not repeated.
    pub fn new(vertices: Vec<Point>) -> Result<Self> {
        let n = vertices.len();
        if n < 4 {
            return Err(Error::InvalidCycle("fewer than four edges"));
        }
        if !n.is_multiple_of(2) {
            return Err(Error::InvalidCycle("odd number of edges"));
        }
        for i in 0..n {
            let (a, b) = (vertices[i], vertices[(i + 1) % n]);
            if (a.0 - b.0).abs() + (a.1 - b.1).abs() != 1 {
                return Err(Error::InvalidCycle(
                    "consecutive vertices are not unit-adjacent",
                ));
            }
        }
        let mut seen = HashSet::with_capacity(n);
        for &v in &vertices {
            if !seen.insert(v) {
                return Err(Error::SelfIntersecting(v.0, v.1));
            }
        }
        Ok(LatticeCycle { vertices })
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    /// Number of unit edges.
    pub fn perimeter(&self) -> usize {
        self.vertices.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (Point, Point)> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| (self.vertices[i], self.vertices[(i + 1) % n]))
    }

    /// Twice the signed shoelace area; positive for counterclockwise cycles.
    pub fn signed_double_area(&self) -> i64 {
        self.edges().map(|(a, b)| a.0 * b.1 - b.0 * a.1).sum()
    }

    pub fn shoelace_area(&self) -> u64 {
        self.signed_double_area().unsigned_abs() / 2
    }

    /// `(min_x, min_y, max_x, max_y)` over the vertices.
    pub fn bounds(&self) -> (i64, i64, i64, i64) {
        bounds(self.vertices.iter().copied())
    }
}

fn bounds(points: impl Iterator<Item = Point>) -> (i64, i64, i64, i64) {
    points.fold(
        (i64::MAX, i64::MAX, i64::MIN, i64::MIN),
        |(a, b, c, d), (x, y)| (a.min(x), b.min(y), c.max(x), d.max(y)),
    )
}

/// A finite edge-connected set of unit cells.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polyomino {
    cells: BTreeSet<Cell>,
}

impl Polyomino {
    pub fn new(cells: impl IntoIterator<Item = Cell>) -> Result<Self> {
        let cells: BTreeSet<Cell> = cells.into_iter().collect();
        let first = *cells.iter().next().ok_or(Error::InvalidPolyomino)?;
        let mut seen = HashSet::from([first]);
        let mut queue = VecDeque::from([first]);
        while let Some((x, y)) = queue.pop_front() {
            for n in [(x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)] {
                if cells.contains(&n) && seen.insert(n) {
                    queue.push_back(n);
                }
            }
        }
        if seen.len() != cells.len() {
            return Err(Error::InvalidPolyomino);
        }
        Ok(Polyomino { cells })
    }

    pub fn cells(&self) -> &BTreeSet<Cell> {
        &self.cells
    }

    pub fn area(&self) -> usize {
        self.cells.len()
    }

    /// Bounding-box width in cells.
    pub fn width(&self) -> usize {
        let (x0, _, x1, _) = bounds(self.cells.iter().copied());
        (x1 - x0 + 1) as usize
    }

    /// Bounding-box height in cells.
    pub fn height(&self) -> usize {
        let (_, y0, _, y1) = bounds(self.cells.iter().copied());
        (y1 - y0 + 1) as usize
    }

    /// The cell list translated to the origin, minimal over the eight
    /// rotations and reflections of the square lattice.
    pub fn canonical_form(&self) -> Vec<Cell> {
        (0..8)
            .map(|k| normalized(self.cells.iter().map(|&c| symmetry(k, c))))
            .min()
            .expect("eight symmetry images")
    }

    /// Short stable digest of the canonical form (16 hex digits).
    pub fn canonical_hash(&self) -> String {
        let mut hasher = Sha256::new();
        for (x, y) in self.canonical_form() {
            hasher.update(x.to_le_bytes());
            hasher.update(y.to_le_bytes());
        }
        hasher.finalize()[..8]
            .iter()
            .map(|b| format!("{b:02x}"))
            .collect()
    }

    /// Quarter turn counterclockwise about the origin.
    pub fn rotate_quarter(&self) -> Polyomino {
        Polyomino {
            cells: self.cells.iter().map(|&c| symmetry(1, c)).collect(),
        }
    }

    /// Cell set translated so the bounding box starts at the origin.
    pub fn normalized(&self) -> Vec<Cell> {
        normalized(self.cells.iter().copied())
    }

    /// Same shape under translation and the eight lattice symmetries.
    pub fn is_congruent(&self, other: &Polyomino) -> bool {
        self.area() == other.area() && self.canonical_form() == other.canonical_form()
    }
}

/// Image of a cell under symmetry `k` of the square (0..4 rotations, 4..8
/// reflected rotations).
fn symmetry(k: u8, (x, y): Cell) -> Cell {
    // cells are unit squares, so a rotation maps the lower-left corner to a
    // different corner; subtract 1 to land on the image's lower-left corner
    let (x, y) = if k >= 4 { (-x - 1, y) } else { (x, y) };
    match k % 4 {
        0 => (x, y),
        1 => (-y - 1, x),
        2 => (-x - 1, -y - 1),
        _ => (y, -x - 1),
    }
}

fn normalized(cells: impl Iterator<Item = Cell>) -> Vec<Cell> {
    let cells: Vec<Cell> = cells.collect();
    let (x0, y0, _, _) = bounds(cells.iter().copied());
    let mut out: Vec<Cell> = cells.into_iter().map(|(x, y)| (x - x0, y - y0)).collect();
    out.sort_unstable();
    out
}

/// Cells enclosed by a simple cycle, by the even-odd rule.
pub fn cycle_to_polyomino(c: &LatticeCycle) -> Result<Polyomino> {
    let (_, y0, _, y1) = c.bounds();
    let mut crossings: Vec<Vec<i64>> = vec![Vec::new(); (y1 - y0) as usize];
    for (a, b) in c.edges() {
        if a.0 == b.0 {
            let y = a.1.min(b.1);
            crossings[(y - y0) as usize].push(a.0);
        }
    }
    let mut cells = Vec::new();
    for (row, xs) in crossings.iter_mut().enumerate() {
        xs.sort_unstable();
        let y = y0 + row as i64;
        for pair in xs.chunks_exact(2) {
            cells.extend((pair[0]..pair[1]).map(|x| (x, y)));
        }
    }
    Polyomino::new(cells)
}
