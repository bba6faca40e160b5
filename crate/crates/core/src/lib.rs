//! Hitomezashi stitch patterns from binary words.
//!
//! A pattern is encoded by two binary words: `w` gives the phase of each
//! horizontal line of running stitch (read up the left edge) and `v` the phase
//! of each vertical line (read along the bottom edge). From these the crate
//! builds stitch grids, computes duals, extracts loops and their polyominoes,
//! two-colors regions, traces Fibonacci snowflakes and builds the Pell
//! persimmon patterns whose largest loops they are.
//!
//! ```
//! use hitomezashi::{grid::PatternSpec, loops::largest_loop};
//!
//! let spec = PatternSpec::periodic("jujizashi", "0110".parse()?, "011".parse()?, 12, 12);
//! let cross = largest_loop(&spec.build()?).unwrap();
//! assert_eq!((cross.stats.perimeter, cross.stats.area), (12, 5));
//! # Ok::<(), hitomezashi::Error>(())
//! ```

pub mod error;
pub mod grid;
pub mod loops;
pub mod polyomino;
pub mod registry;
pub mod render;
pub mod report;
pub mod tiles;
pub mod words;

pub use error::{Error, Result};
pub use grid::{PatternSpec, StitchGrid, WordProgram};
pub use loops::LoopStats;
pub use polyomino::{LatticeCycle, Polyomino};
pub use tiles::SnowflakeOrder;
pub use words::{BinaryWord, TurnWord};
