//! Command-line front end for the `hitomezashi` library.
//!
//! Exit status: 0 on success, 1 on a domain error (or a failed conjecture
//! check), 2 on a usage error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use hitomezashi::grid::{self_dual_shift, window_dual_translation, PatternSpec, WordProgram};
use hitomezashi::registry::{self, PatternEntry};
use hitomezashi::render::{
    render_ascii_with, render_polyomino_svg, render_svg, Overlay, RenderOptions,
};
use hitomezashi::report;
use hitomezashi::tiles::{persimmon_spec, verify_conjecture_up_to, Snowflake, SnowflakeOrder};
use hitomezashi::{Error, StitchGrid};

#[derive(Parser)]
#[command(
    name = "hitomezashi",
    version,
    about = "Hitomezashi stitch patterns from binary words"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Draw a pattern as ASCII (default) or SVG.
    Render(RenderArgs),
    /// Draw the dual (reverse side) of a pattern.
    Dual(RenderArgs),
    /// Loops, theorem checks and two-coloring of a pattern.
    Analyze {
        #[command(flatten)]
        pattern: PatternArgs,
        /// Analyze the dual instead.
        #[arg(long)]
        dual: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Translation taking a pattern onto its dual, or "none".
    SelfDual {
        #[command(flatten)]
        pattern: PatternArgs,
    },
    /// List registry patterns, or show one.
    Registry {
        key: Option<String>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Largest-loop table for the classic patterns.
    Table1 {
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Fibonacci snowflake of the given order.
    Snowflake {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        order: u32,
        #[command(flatten)]
        output: OutputArgs,
        #[arg(long, default_value_t = 20)]
        cell_size: u32,
    },
    /// Pell persimmon pattern of the given order.
    Persimmon {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        order: u32,
        /// Word periods per axis.
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(1..))]
        periods: u32,
        #[command(flatten)]
        output: OutputArgs,
        #[command(flatten)]
        style: StyleArgs,
    },
    /// Check that the largest persimmon loop is the snowflake, orders 1..=N.
    VerifyConjecture {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        max_order: u32,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Args)]
struct PatternArgs {
    /// Registry key; supplies words and default window.
    #[arg(long)]
    pattern: Option<String>,
    /// Horizontal-line program, e.g. `0110` or `01:2,10` (empty or ε: absent).
    #[arg(long, value_parser = parse_program, allow_hyphen_values = true)]
    rows: Option<WordProgram>,
    /// Vertical-line program.
    #[arg(long, value_parser = parse_program, allow_hyphen_values = true)]
    cols: Option<WordProgram>,
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    width: Option<u32>,
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    height: Option<u32>,
}

#[derive(Args)]
struct OutputArgs {
    /// SVG output.
    #[arg(long, conflicts_with_all = ["ascii", "json"])]
    svg: bool,
    /// ASCII / plain text output (default).
    #[arg(long, conflicts_with = "json")]
    ascii: bool,
    /// JSON output.
    #[arg(long)]
    json: bool,
    /// Write to a file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct StyleArgs {
    #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(u32).range(1..))]
    cell_size: u32,
    /// Fill regions with the two-coloring (SVG only).
    #[arg(long)]
    color: bool,
    /// Show the underlying lattice.
    #[arg(long)]
    grid: bool,
}

#[derive(Args)]
struct RenderArgs {
    #[command(flatten)]
    pattern: PatternArgs,
    #[command(flatten)]
    output: OutputArgs,
    #[command(flatten)]
    style: StyleArgs,
}

fn parse_program(s: &str) -> Result<WordProgram, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Debug)]
enum CliError {
    Domain(Error),
    Usage(String),
    Io(std::io::Error),
    Json(serde_json::Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Domain(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Json(e)
    }
}

type CliResult<T> = Result<T, CliError>;

fn default_extent(p: &WordProgram) -> Option<usize> {
    if p.is_absent() {
        Some(8)
    } else {
        p.periodic_word().map(|w| 4 * w.len())
    }
}

impl PatternArgs {
    fn entry(&self) -> CliResult<Option<&'static PatternEntry>> {
        Ok(match &self.pattern {
            Some(key) => Some(registry::lookup(key)?),
            None => None,
        })
    }

    fn spec(&self) -> CliResult<PatternSpec> {
        let entry = self.entry()?;
        let dims = (
            self.width.map(|v| v as usize),
            self.height.map(|v| v as usize),
        );
        if let Some(e) = entry {
            let (dw, dh) = e.default_window();
            let (w, h) = (dims.0.unwrap_or(dw), dims.1.unwrap_or(dh));
            let mut spec = e.spec(w, h);
            if let Some(r) = &self.rows {
                spec.rows = r.clone();
            }
            if let Some(c) = &self.cols {
                spec.cols = c.clone();
            }
            return Ok(spec);
        }
        let (rows, cols) = match (&self.rows, &self.cols) {
            (Some(r), Some(c)) => (r.clone(), c.clone()),
            _ => {
                return Err(CliError::Usage(
                    "either --pattern or both --rows and --cols are required".into(),
                ))
            }
        };
        let width = dims.0.or_else(|| default_extent(&cols));
        let height = dims.1.or_else(|| default_extent(&rows));
        match (width, height) {
            (Some(width), Some(height)) => Ok(PatternSpec {
                name: "custom".into(),
                rows,
                cols,
                width,
                height,
            }),
            _ => Err(CliError::Usage(
                "--width and --height are required for piecewise programs".into(),
            )),
        }
    }
}

impl StyleArgs {
    fn options(&self) -> RenderOptions {
        RenderOptions {
            cell_size: self.cell_size,
            show_grid: self.grid,
            fill_two_coloring: self.color,
            ..RenderOptions::default()
        }
    }
}

fn emit(output: &OutputArgs, text: &str) -> CliResult<()> {
    match &output.out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn draw(
    grid: &StitchGrid,
    spec: &PatternSpec,
    output: &OutputArgs,
    style: &StyleArgs,
) -> CliResult<String> {
    if output.json {
        return Ok(report::to_json(spec)? + "\n");
    }
    if output.svg {
        return Ok(render_svg(grid, &style.options(), Overlay::None));
    }
    Ok(render_ascii_with(grid, style.grid))
}

fn run(cli: Cli) -> CliResult<bool> {
    match cli.command {
        Command::Render(args) => {
            let spec = args.pattern.spec()?;
            let grid = spec.build()?;
            emit(
                &args.output,
                &draw(&grid, &spec, &args.output, &args.style)?,
            )?;
        }
        Command::Dual(args) => {
            let spec = args.pattern.spec()?;
            let grid = spec.build()?.dual();
            let mut dual_spec = spec.clone();
            dual_spec.name = format!("{}-dual", spec.name);
            emit(
                &args.output,
                &draw(&grid, &dual_spec, &args.output, &args.style)?,
            )?;
        }
        Command::Analyze {
            pattern,
            dual,
            output,
        } => {
            let spec = pattern.spec()?;
            let mut grid = spec.build()?;
            let mut name = spec.name.clone();
            if dual {
                grid = grid.dual();
                name.push_str(" (dual)");
            }
            let r = report::analyze(&name, &grid);
            let text = if output.json {
                report::to_json(&r)? + "\n"
            } else {
                report::format_analysis(&r)
            };
            emit(&output, &text)?;
        }
        Command::SelfDual { pattern } => {
            let line = self_dual_line(&pattern)?;
            println!("{line}");
        }
        Command::Registry { key, output } => {
            let entries = match key {
                Some(k) => vec![registry::CatalogEntry::from(registry::lookup(&k)?)],
                None => registry::catalog(),
            };
            let text = if output.json {
                report::to_json(&entries)? + "\n"
            } else {
                report::format_catalog(&entries)
            };
            emit(&output, &text)?;
        }
        Command::Table1 { output } => {
            let rows = registry::table1()?;
            let text = if output.json {
                report::to_json(&rows)? + "\n"
            } else {
                report::format_table1(&rows)
            };
            emit(&output, &text)?;
        }
        Command::Snowflake {
            order,
            output,
            cell_size,
        } => {
            let flake = Snowflake::new(SnowflakeOrder::new(order)?)?;
            let record = report::SnowflakeRecord::from(&flake);
            let text = if output.svg {
                let opts = RenderOptions {
                    cell_size,
                    ..RenderOptions::default()
                };
                render_polyomino_svg(&flake.polyomino, Some(&flake.cycle), &opts)
            } else if output.json {
                report::to_json(&record)? + "\n"
            } else {
                report::format_snowflake(&record)
            };
            emit(&output, &text)?;
        }
        Command::Persimmon {
            order,
            periods,
            output,
            style,
        } => {
            let spec = persimmon_spec(SnowflakeOrder::new(order)?, periods as usize)?;
            let grid = spec.build()?;
            emit(&output, &draw(&grid, &spec, &output, &style)?)?;
        }
        Command::VerifyConjecture { max_order, output } => {
            let reports = verify_conjecture_up_to(max_order)?;
            let text = if output.json {
                report::to_json(&reports)? + "\n"
            } else {
                report::format_conjecture(&reports)
            };
            emit(&output, &text)?;
            return Ok(reports.iter().all(|r| r.holds));
        }
    }
    Ok(true)
}

fn self_dual_line(pattern: &PatternArgs) -> CliResult<String> {
    let periodic = |p: &WordProgram| -> Option<Option<hitomezashi::BinaryWord>> {
        if p.is_absent() {
            Some(None)
        } else {
            p.periodic_word().cloned().map(Some)
        }
    };
    let spec = pattern.spec()?;
    if let (Some(rows), Some(cols)) = (periodic(&spec.rows), periodic(&spec.cols)) {
        return Ok(report::format_shift(self_dual_shift(
            rows.as_ref(),
            cols.as_ref(),
        )?));
    }
    // Piecewise programs: look for a translation within the window.
    let grid = spec.build()?;
    Ok(match window_dual_translation(&grid, 4) {
        Some((dx, dy)) => format!("dx={dx} dy={dy}"),
        None => "none".to_string(),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Domain(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(CliError::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(CliError::Json(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
