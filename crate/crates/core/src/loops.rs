//! Loop extraction, loop metrics, the loop theorems and region two-coloring.

use std::cmp::Reverse;
use std::collections::{BTreeMap, HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::StitchGrid;
use crate::polyomino::{cycle_to_polyomino, LatticeCycle, Point, Polyomino};

/// Connected components of the stitch graph.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Components {
    pub cycles: Vec<LatticeCycle>,
    /// Paths cut off by the window edge, listed endpoint to endpoint.
    pub open_paths: Vec<Vec<Point>>,
}

/// Splits an arbitrary set of unit lattice edges into cycles and open paths.
///
/// Every vertex must have degree at most 2.
pub fn components_from_edges(
    edges: impl IntoIterator<Item = (Point, Point)>,
) -> Result<Components> {
    let mut adj: BTreeMap<Point, Vec<Point>> = BTreeMap::new();
    for (a, b) in edges {
        adj.entry(a).or_default().push(b);
        adj.entry(b).or_default().push(a);
    }
    if let Some((&(x, y), n)) = adj.iter().find(|(_, n)| n.len() > 2) {
        return Err(Error::NotSimplePattern {
            x,
            y,
            degree: n.len(),
        });
    }
    for n in adj.values_mut() {
        n.sort_unstable();
    }

    let mut visited: HashSet<Point> = HashSet::new();
    let walk = |start: Point, visited: &mut HashSet<Point>| {
        let mut path = vec![start];
        visited.insert(start);
        let mut cur = start;
        while let Some(&next) = adj[&cur].iter().find(|n| !visited.contains(n)) {
            visited.insert(next);
            path.push(next);
            cur = next;
        }
        path
    };

    let mut out = Components::default();
    let ends: Vec<Point> = adj
        .iter()
        .filter(|(_, n)| n.len() == 1)
        .map(|(&p, _)| p)
        .collect();
    for p in ends {
        if !visited.contains(&p) {
            out.open_paths.push(walk(p, &mut visited));
        }
    }
    let rest: Vec<Point> = adj.keys().copied().collect();
    for p in rest {
        if !visited.contains(&p) {
            out.cycles.push(LatticeCycle::new(walk(p, &mut visited))?);
        }
    }
    Ok(out)
}

pub fn extract_components(g: &StitchGrid) -> Components {
    let edges = g.present_segments().map(|s| {
        let ((x0, y0), (x1, y1)) = s.endpoints();
        ((x0 as i64, y0 as i64), (x1 as i64, y1 as i64))
    });
    // both families alternate, so no vertex sees more than one stitch per axis
    components_from_edges(edges).expect("stitch grid vertices have degree at most 2")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LoopStats {
    pub perimeter: usize,
    pub area: usize,
    pub height: usize,
    pub width: usize,
}

impl LoopStats {
    pub const fn new(perimeter: usize, area: usize, height: usize, width: usize) -> Self {
        LoopStats {
            perimeter,
            area,
            height,
            width,
        }
    }

    /// Width counted in boundary stitches rather than cells.
    pub fn stitch_width(&self) -> usize {
        self.width + 1
    }

    pub fn stitch_height(&self) -> usize {
        self.height + 1
    }
}

pub fn loop_stats(p: &Polyomino, c: &LatticeCycle) -> LoopStats {
    LoopStats {
        perimeter: c.perimeter(),
        area: p.area(),
        height: p.height(),
        width: p.width(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremCheck {
    /// area ≡ 1 (mod 4)
    pub area_mod_4: bool,
    /// perimeter ≡ 4 (mod 8)
    pub perimeter_mod_8: bool,
    /// width and height both odd
    pub odd_dimensions: bool,
}

impl TheoremCheck {
    pub fn all(&self) -> bool {
        self.area_mod_4 && self.perimeter_mod_8 && self.odd_dimensions
    }
}

pub fn check_loop_theorems(s: &LoopStats) -> TheoremCheck {
    TheoremCheck {
        area_mod_4: s.area % 4 == 1,
        perimeter_mod_8: s.perimeter % 8 == 4,
        odd_dimensions: s.width % 2 == 1 && s.height % 2 == 1,
    }
}

/// A closed loop together with the polyomino it bounds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Loop {
    pub cycle: LatticeCycle,
    pub polyomino: Polyomino,
    pub stats: LoopStats,
}

impl Loop {
    pub fn from_cycle(cycle: LatticeCycle) -> Result<Self> {
        let polyomino = cycle_to_polyomino(&cycle)?;
        let stats = loop_stats(&polyomino, &cycle);
        Ok(Loop {
            cycle,
            polyomino,
            stats,
        })
    }
}

/// All closed loops of the window, in extraction order.
pub fn loops(g: &StitchGrid) -> Vec<Loop> {
    extract_components(g)
        .cycles
        .into_iter()
        .map(|c| Loop::from_cycle(c).expect("extracted cycles are simple"))
        .collect()
}

/// The loop of greatest area; ties go to the longer perimeter, then the
/// lexicographically smallest canonical form, then the lowest start vertex.
pub fn largest_loop(g: &StitchGrid) -> Option<Loop> {
    let all = loops(g);
    let best_area = all
        .iter()
        .map(|l| (l.stats.area, l.stats.perimeter))
        .max()?;
    all.into_iter()
        .filter(|l| (l.stats.area, l.stats.perimeter) == best_area)
        .min_by_key(|l| (l.polyomino.canonical_form(), l.cycle.vertices()[0]))
}

/// Distinct loop shapes of a window, largest first.
pub fn motif_classes(g: &StitchGrid) -> Vec<Loop> {
    let mut all = loops(g);
    all.sort_by_key(|l| {
        (
            Reverse(l.stats.area),
            Reverse(l.stats.perimeter),
            l.polyomino.canonical_form(),
        )
    });
    all.dedup_by(|a, b| a.polyomino.is_congruent(&b.polyomino));
    all
}

/// True iff `areas[k] = 2k(k+1) + 1` for every `k`.
pub fn centred_square_check(areas: &[u64]) -> bool {
    areas
        .iter()
        .enumerate()
        .all(|(k, &a)| a == 2 * (k as u64) * (k as u64 + 1) + 1)
}

/// Proper two-coloring of the window's cells.
///
/// Cells are `(x, y)` with `x < width`, `y < height`. Two neighbouring cells
/// are in the same region when the segment between them is absent.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwoColoring {
    width: usize,
    height: usize,
    regions: usize,
    colors: Vec<u8>,
}

impl TwoColoring {
    pub fn color(&self, x: usize, y: usize) -> u8 {
        self.colors[y * self.width + x]
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn region_count(&self) -> usize {
        self.regions
    }

    /// Rows of 0/1, top row first.
    pub fn matrix(&self) -> Vec<Vec<u8>> {
        (0..self.height)
            .rev()
            .map(|y| (0..self.width).map(|x| self.color(x, y)).collect())
            .collect()
    }
}

struct DisjointSet {
    parent: Vec<usize>,
}

impl DisjointSet {
    fn new(n: usize) -> Self {
        DisjointSet {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut a: usize) -> usize {
        while self.parent[a] != a {
            self.parent[a] = self.parent[self.parent[a]];
            a = self.parent[a];
        }
        a
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Colors the regions cut out by the stitches with two colors so that
/// regions sharing a stitch differ. Regions are clipped to the window.
pub fn two_color(g: &StitchGrid) -> Result<TwoColoring> {
    let (w, h) = (g.width(), g.height());
    let idx = |x: usize, y: usize| y * w + x;
    let mut ds = DisjointSet::new(w * h);
    let mut walls = Vec::new();
    for y in 0..h {
        for x in 0..w {
            if x + 1 < w {
                if g.has_vertical(x + 1, y) {
                    walls.push(((x, y), (x + 1, y)));
                } else {
                    ds.union(idx(x, y), idx(x + 1, y));
                }
            }
            if y + 1 < h {
                if g.has_horizontal(x, y + 1) {
                    walls.push(((x, y), (x, y + 1)));
                } else {
                    ds.union(idx(x, y), idx(x, y + 1));
                }
            }
        }
    }

    let mut region_of = vec![0; w * h];
    let mut roots = BTreeMap::new();
    for i in 0..w * h {
        let r = ds.find(i);
        let next = roots.len();
        region_of[i] = *roots.entry(r).or_insert(next);
    }
    let regions = roots.len();

    let mut adj: Vec<Vec<(usize, (usize, usize), (usize, usize))>> = vec![Vec::new(); regions];
    for &(a, b) in &walls {
        let (ra, rb) = (region_of[idx(a.0, a.1)], region_of[idx(b.0, b.1)]);
        if ra == rb {
            return Err(Error::NotTwoColorable(a, b));
        }
        adj[ra].push((rb, a, b));
        adj[rb].push((ra, b, a));
    }

    let mut region_color: Vec<Option<u8>> = vec![None; regions];
    for start in 0..regions {
        if region_color[start].is_some() {
            continue;
        }
        region_color[start] = Some(0);
        let mut queue = VecDeque::from([start]);
        while let Some(r) = queue.pop_front() {
            let c = region_color[r].expect("queued regions are colored");
            for &(n, a, b) in &adj[r] {
                match region_color[n] {
                    None => {
                        region_color[n] = Some(1 - c);
                        queue.push_back(n);
                    }
                    Some(cn) if cn == c => return Err(Error::NotTwoColorable(a, b)),
                    Some(_) => {}
                }
            }
        }
    }

    Ok(TwoColoring {
        width: w,
        height: h,
        regions,
        colors: region_of
            .iter()
            .map(|&r| region_color[r].expect("all regions colored"))
            .collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::PatternSpec;

    fn grid(rows: &str, cols: &str, w: usize, h: usize) -> StitchGrid {
        PatternSpec::periodic("t", rows.parse().unwrap(), cols.parse().unwrap(), w, h)
            .build()
            .unwrap()
    }

    #[test]
    fn kuchizashi_components() {
        let c = extract_components(&grid("1", "1", 4, 4));
        assert_eq!(c.cycles.len(), 4);
        assert!(c.cycles.iter().all(|c| c.perimeter() == 4));
        assert_eq!(c.open_paths.len(), 4);
    }

    #[test]
    fn yokogushi_has_no_loops() {
        let g = grid("10", "", 8, 8);
        let c = extract_components(&g);
        assert!(c.cycles.is_empty());
        assert!(!c.open_paths.is_empty());
        assert!(largest_loop(&g).is_none());
    }

    #[test]
    fn empty_grid_has_no_components() {
        let g = StitchGrid::from_bits(3, 3, None, None).unwrap();
        assert_eq!(extract_components(&g), Components::default());
    }

    #[test]
    fn degree_three_rejected() {
        let edges = [((0, 0), (1, 0)), ((0, 0), (0, 1)), ((0, 0), (-1, 0))];
        assert_eq!(
            components_from_edges(edges),
            Err(Error::NotSimplePattern {
                x: 0,
                y: 0,
                degree: 3
            })
        );
    }

    #[test]
    fn jujizashi_largest_is_cross() {
        let l = largest_loop(&grid("0110", "011", 12, 12)).unwrap();
        assert_eq!(l.stats, LoopStats::new(12, 5, 3, 3));
    }

    #[test]
    fn persimmon_flower_stats() {
        let l = largest_loop(&grid("10100101", "010", 12, 32)).unwrap();
        assert_eq!(l.stats, LoopStats::new(20, 13, 5, 5));
        let l = largest_loop(&grid("101010010101", "01010", 20, 48)).unwrap();
        assert_eq!(l.stats, LoopStats::new(36, 41, 9, 9));
    }

    #[test]
    fn hashtag_loop_has_seventeen_cells() {
        // reverse side of the igetazashi encoding
        let g = grid("100001", "100001", 24, 24).dual();
        let l = largest_loop(&g).unwrap();
        assert_eq!(l.stats, LoopStats::new(28, 17, 5, 5));
    }

    #[test]
    fn theorem_checks() {
        assert!(check_loop_theorems(&LoopStats::new(12, 5, 3, 3)).all());
        assert!(check_loop_theorems(&LoopStats::new(4, 1, 1, 1)).all());
        let bad = check_loop_theorems(&LoopStats::new(8, 2, 1, 2));
        assert!(!bad.area_mod_4 && !bad.perimeter_mod_8 && !bad.odd_dimensions);
    }

    #[test]
    fn centred_squares() {
        assert!(centred_square_check(&[1, 5, 13, 25, 41]));
        assert!(centred_square_check(&[1]));
        assert!(!centred_square_check(&[1, 5, 14]));
    }

    #[test]
    fn kuchizashi_coloring() {
        let g = grid("1", "1", 4, 4);
        let c = two_color(&g).unwrap();
        // square interiors vs the surrounding region
        for &(x, y) in &[(0, 0), (2, 0), (0, 2), (2, 2)] {
            assert_eq!(c.color(x, y), 0);
        }
        for &(x, y) in &[(1, 0), (1, 1), (3, 3), (0, 1)] {
            assert_eq!(c.color(x, y), 1);
        }
    }

    #[test]
    fn blank_grid_is_one_region() {
        let g = StitchGrid::from_bits(5, 4, None, None).unwrap();
        let c = two_color(&g).unwrap();
        assert_eq!(c.region_count(), 1);
        assert!(c.matrix().iter().flatten().all(|&v| v == 0));
    }

    #[test]
    fn dan_tsunagi_stripes() {
        let g = grid("01", "10", 10, 10);
        let c = two_color(&g).unwrap();
        assert_eq!(c.region_count(), 10);
        // each staircase stripe runs along the (1, 1) diagonal
        for y in 0..9 {
            for x in 0..9 {
                assert_eq!(c.color(x + 1, y + 1), c.color(x, y), "({x},{y})");
            }
        }
    }

    #[test]
    fn line_only_patterns_are_not_two_colorable() {
        let g = grid("10", "", 6, 6);
        assert!(matches!(two_color(&g), Err(Error::NotTwoColorable(..))));
    }

    #[test]
    fn motif_classes_of_sanju() {
        let g = grid("101010010101", "01010", 20, 48);
        let areas: Vec<usize> = motif_classes(&g).iter().map(|l| l.stats.area).collect();
        assert_eq!(areas, vec![41, 13, 1]);
    }
}
