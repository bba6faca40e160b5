//! Fibonacci snowflakes traced from turn words, Pell persimmon patterns, and
//! the check that the largest persimmon loop is the snowflake of the same
//! order.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::grid::PatternSpec;
use crate::loops::{largest_loop, loop_stats, LoopStats};
use crate::polyomino::{cycle_to_polyomino, LatticeCycle, Point, Polyomino};
use crate::words::{fib_turtle_word, fibonacci, pell, pell_word, BinaryWord, Turn, TurnWord};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Heading {
    East,
    North,
    West,
    South,
}

impl Heading {
    fn left(self) -> Self {
        match self {
            Heading::East => Heading::North,
            Heading::North => Heading::West,
            Heading::West => Heading::South,
            Heading::South => Heading::East,
        }
    }

    fn right(self) -> Self {
        match self {
            Heading::East => Heading::South,
            Heading::South => Heading::West,
            Heading::West => Heading::North,
            Heading::North => Heading::East,
        }
    }

    fn delta(self) -> Point {
        match self {
            Heading::East => (1, 0),
            Heading::North => (0, 1),
            Heading::West => (-1, 0),
            Heading::South => (0, -1),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TurtleState {
    pub position: Point,
    pub heading: Heading,
}

impl Default for TurtleState {
    fn default() -> Self {
        TurtleState {
            position: (0, 0),
            heading: Heading::East,
        }
    }
}

impl TurtleState {
    /// One unit step forward, then a quarter turn.
    pub fn advance(self, turn: Turn) -> Self {
        let (dx, dy) = self.heading.delta();
        TurtleState {
            position: (self.position.0 + dx, self.position.1 + dy),
            heading: match turn {
                Turn::L => self.heading.left(),
                Turn::R => self.heading.right(),
            },
        }
    }
}

/// Draws the word from the origin heading east; the path must return to the
/// origin without crossing itself.
pub fn trace_turtle(word: &TurnWord) -> Result<LatticeCycle> {
    let mut state = TurtleState::default();
    let mut vertices = Vec::with_capacity(word.len());
    for &turn in word.letters() {
        vertices.push(state.position);
        state = state.advance(turn);
    }
    if state.position != (0, 0) {
        return Err(Error::OpenBoundary(state.position.0, state.position.1));
    }
    LatticeCycle::new(vertices).map_err(|e| match e {
        Error::SelfIntersecting(x, y) => Error::SelfIntersectingBoundary(x, y),
        other => other,
    })
}

/// Snowflake order; order 1 is the unit square.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct SnowflakeOrder(u32);

impl SnowflakeOrder {
    pub fn new(order: u32) -> Result<Self> {
        if order == 0 {
            Err(Error::InvalidOrder)
        } else {
            Ok(SnowflakeOrder(order))
        }
    }

    pub fn get(self) -> u32 {
        self.0
    }

    /// Index of the turtle word whose fourth power bounds this snowflake.
    fn side_index(self) -> u32 {
        3 * (self.0 - 1) + 1
    }
}

/// One side of the boundary: `q_{3(n-1)+1}`.
pub fn snowflake_side(order: SnowflakeOrder) -> TurnWord {
    fib_turtle_word(order.side_index())
}

pub fn snowflake_boundary(order: SnowflakeOrder) -> TurnWord {
    snowflake_side(order).repeat(4)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Snowflake {
    pub order: SnowflakeOrder,
    pub boundary: TurnWord,
    pub cycle: LatticeCycle,
    pub polyomino: Polyomino,
}

impl Snowflake {
    pub fn new(order: SnowflakeOrder) -> Result<Self> {
        let boundary = snowflake_boundary(order);
        let cycle = trace_turtle(&boundary)?;
        let polyomino = cycle_to_polyomino(&cycle)?;
        Ok(Snowflake {
            order,
            boundary,
            cycle,
            polyomino,
        })
    }

    pub fn stats(&self) -> LoopStats {
        loop_stats(&self.polyomino, &self.cycle)
    }

    /// Cell-set invariance under a quarter turn about the centre.
    pub fn has_fourfold_symmetry(&self) -> bool {
        self.polyomino.rotate_quarter().normalized() == self.polyomino.normalized()
    }
}

pub fn snowflake(order: SnowflakeOrder) -> Result<Polyomino> {
    Snowflake::new(order).map(|s| s.polyomino)
}

/// Expected area `P_{2n-1}`.
pub fn snowflake_area_formula(order: SnowflakeOrder) -> u128 {
    pell(2 * order.get() - 1)
}

/// Expected perimeter: four times the side length. With `F_0 = F_1 = 1` the
/// side `q_{3(n-1)+1}` has `F_{3(n-1)}` letters.
pub fn snowflake_perimeter_formula(order: SnowflakeOrder) -> u128 {
    4 * fibonacci(3 * (order.get() - 1))
}

/// Cell width plus one (the width in boundary stitches) equals `2 P_n`.
pub fn snowflake_width_check(order: SnowflakeOrder) -> Result<bool> {
    let s = Snowflake::new(order)?;
    Ok((s.polyomino.width() + 1) as u128 == 2 * pell(order.get()))
}

/// Encoding word `u_n · reverse(u_n)`, used for both rows and columns.
pub fn persimmon_word(order: SnowflakeOrder) -> BinaryWord {
    let u = pell_word(order.get());
    u.concat(&u.reverse())
}

/// Pell persimmon pattern of order `n`: a square window of `periods` full
/// word periods per axis (`periods · 2 P_n` cells).
pub fn persimmon_spec(order: SnowflakeOrder, periods: usize) -> Result<PatternSpec> {
    if periods == 0 {
        return Err(Error::WindowTooSmall(
            "at least one period is required".into(),
        ));
    }
    let word = persimmon_word(order);
    let side = periods * word.len();
    Ok(PatternSpec::periodic(
        format!("pell-persimmon-{}", order.get()),
        word.clone(),
        word,
        side,
        side,
    ))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    pub order: SnowflakeOrder,
    pub holds: bool,
    pub window: usize,
    pub persimmon_largest: LoopStats,
    pub snowflake: LoopStats,
    pub snowflake_hash: String,
    pub persimmon_hash: String,
}

/// Compares the largest loop of the order-`n` persimmon (two periods per
/// axis) with the order-`n` snowflake, up to the lattice symmetries.
pub fn check_conjecture(order: SnowflakeOrder) -> Result<ConjectureReport> {
    let spec = persimmon_spec(order, 2)?;
    let grid = spec.build()?;
    let found = largest_loop(&grid).ok_or_else(|| {
        Error::WindowTooSmall(format!(
            "no closed loop in the {}x{} persimmon window",
            spec.width, spec.height
        ))
    })?;
    let flake = Snowflake::new(order)?;
    Ok(ConjectureReport {
        order,
        holds: found.polyomino.is_congruent(&flake.polyomino),
        window: spec.width,
        persimmon_largest: found.stats,
        snowflake: flake.stats(),
        snowflake_hash: flake.polyomino.canonical_hash(),
        persimmon_hash: found.polyomino.canonical_hash(),
    })
}

pub fn verify_conjecture(order: SnowflakeOrder) -> Result<bool> {
    check_conjecture(order).map(|r| r.holds)
}

/// Checks orders `1..=max_order`, one thread per order.
pub fn verify_conjecture_up_to(max_order: u32) -> Result<Vec<ConjectureReport>> {
    let orders = (1..=max_order)
        .map(SnowflakeOrder::new)
        .collect::<Result<Vec<_>>>()?;
    std::thread::scope(|scope| {
        let handles: Vec<_> = orders
            .iter()
            .map(|&o| scope.spawn(move || check_conjecture(o)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("conjecture worker panicked"))
            .collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn order(n: u32) -> SnowflakeOrder {
        SnowflakeOrder::new(n).unwrap()
    }

    fn turns(s: &str) -> TurnWord {
        s.parse().unwrap()
    }

    #[test]
    fn four_right_turns_close_a_square() {
        let c = trace_turtle(&turns("RRRR")).unwrap();
        assert_eq!(c.vertices(), &[(0, 0), (1, 0), (1, -1), (0, -1)]);
    }

    #[test]
    fn cross_boundary() {
        let c = trace_turtle(&turns("RLL").repeat(4)).unwrap();
        assert_eq!(c.perimeter(), 12);
        assert_eq!(c.shoelace_area(), 5);
    }

    #[test]
    fn trace_errors() {
        assert_eq!(trace_turtle(&turns("RRR")), Err(Error::OpenBoundary(0, -1)));
        // square traced twice revisits the origin
        assert_eq!(
            trace_turtle(&turns("RRRRRRRR")),
            Err(Error::SelfIntersectingBoundary(0, 0))
        );
    }

    #[test]
    fn order_zero_rejected() {
        assert_eq!(SnowflakeOrder::new(0), Err(Error::InvalidOrder));
    }

    #[test]
    fn first_snowflakes() {
        let s1 = Snowflake::new(order(1)).unwrap();
        assert_eq!(s1.stats(), LoopStats::new(4, 1, 1, 1));
        let s2 = Snowflake::new(order(2)).unwrap();
        assert_eq!(s2.stats(), LoopStats::new(12, 5, 3, 3));
        let s3 = Snowflake::new(order(3)).unwrap();
        assert_eq!(s3.stats().perimeter, 52);
        assert_eq!(s3.stats().area, 29);
        assert_eq!(s3.polyomino.width(), 9);
    }

    #[test]
    fn width_checks() {
        for n in 1..=3 {
            assert!(snowflake_width_check(order(n)).unwrap());
        }
    }

    #[test]
    fn perimeter_formula_matches_trace() {
        for n in 1..=5 {
            let s = Snowflake::new(order(n)).unwrap();
            assert_eq!(
                s.cycle.perimeter() as u128,
                snowflake_perimeter_formula(order(n))
            );
        }
    }

    #[test]
    fn persimmon_words() {
        assert_eq!(persimmon_word(order(1)).to_string(), "11");
        assert_eq!(persimmon_word(order(2)).to_string(), "0110");
        assert_eq!(persimmon_word(order(3)).to_string(), "1000110001");
        let spec = persimmon_spec(order(3), 2).unwrap();
        assert_eq!((spec.width, spec.height), (20, 20));
        assert!(persimmon_spec(order(3), 0).is_err());
    }

    #[test]
    fn conjecture_small_orders() {
        for n in 1..=3 {
            assert!(verify_conjecture(order(n)).unwrap(), "order {n}");
        }
    }
}
