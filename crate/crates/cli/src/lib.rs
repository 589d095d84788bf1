//! Command-line front end for `trishape`.
//!
//! Every subcommand has a plain function (`cmd_*`) returning a serializable
//! record, and [`run`] renders those records as text or as a JSON envelope
//! `{command, inputs, results}`.

pub mod commands;
pub mod export;
pub mod sample;

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;
use thiserror::Error;

pub use commands::{
    cmd_classify, cmd_convert, cmd_orbit, cmd_solve, ClassifyRecord, ConvertInput, ConvertRecord, OrbitImage,
    SolveRecord,
};
pub use export::{cmd_export, ExportBundle, Marker, Polyline};
pub use sample::{cmd_sample, SampleReport, SAMPLE_BLOCK};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INVALID: i32 = 3;
pub const EXIT_SOLVER: i32 = 4;
pub const EXIT_IO: i32 = 5;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] trishape::Error),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        use trishape::Error as E;
        match self {
            CliError::Core(E::DegenerateInput(_) | E::NotATriangle(_) | E::OutOfDomain { .. }) => EXIT_INVALID,
            CliError::Core(_) => EXIT_SOLVER,
            CliError::Io { .. } => EXIT_IO,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "trishape", version, about = "Triangle shapes as points on the sphere")]
pub struct Cli {
    /// Print a JSON envelope instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Tolerance for shape classification.
    #[arg(long, global = true, default_value_t = trishape::DEFAULT_TOL, value_parser = non_negative)]
    pub tol: f64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Translate between side lengths and sphere coordinates.
    Convert {
        #[arg(long, num_args = 3, value_names = ["A", "B", "C"], allow_negative_numbers = true,
              conflicts_with = "point", required_unless_present = "point")]
        sides: Option<Vec<f64>>,
        #[arg(long, num_args = 3, value_names = ["X", "Y", "Z"], allow_negative_numbers = true)]
        point: Option<Vec<f64>>,
    },
    /// Classify a triangle given by its side lengths.
    Classify {
        #[arg(long, num_args = 3, value_names = ["A", "B", "C"], allow_negative_numbers = true, required = true)]
        sides: Vec<f64>,
    },
    /// Compute a distinguished triangle.
    Solve {
        #[arg(value_enum)]
        constraint: Constraint,
    },
    /// Write symmetry circles, right-curve orbit or figure markers.
    Export {
        #[arg(value_enum)]
        what: ExportKind,
        #[arg(long, default_value_t = 360, value_parser = clap::value_parser!(u64).range(2..))]
        samples: u64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        /// View axis of the SVG orthographic projection.
        #[arg(long, num_args = 3, value_names = ["X", "Y", "Z"], allow_negative_numbers = true,
              default_values_t = [1.0, 1.0, 1.0])]
        view: Vec<f64>,
    },
    /// Monte Carlo sample of uniformly random sphere points.
    Sample {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        shards: u64,
    },
    /// Print the 48 signed-permutation images of a point.
    Orbit {
        #[arg(num_args = 3, value_names = ["X", "Y", "Z"], allow_negative_numbers = true, required = true)]
        point: Vec<f64>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Constraint {
    /// Incenter of `0 ≤ z ≤ y ≤ x`.
    None,
    /// Incenter of `|z| ≤ y ≤ x`.
    Ordered,
    Obtuse,
    Acute,
    /// Equilateral and `(1/2, 1/2, 1)` with their distance to the right locus.
    Extremes,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExportKind {
    Tiling,
    RightCurve,
    Figure,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Format {
    Csv,
    Json,
    Svg,
}

fn non_negative(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if v >= 0.0 && v.is_finite() {
        Ok(v)
    } else {
        Err(format!("expected a finite non-negative number, got {s}"))
    }
}

fn triple(v: &[f64]) -> [f64; 3] {
    [v[0], v[1], v[2]]
}

#[derive(Serialize)]
struct Envelope<'a, R: Serialize> {
    command: &'a str,
    inputs: serde_json::Value,
    results: R,
}

fn envelope<R: Serialize>(command: &str, inputs: serde_json::Value, results: &R) -> String {
    serde_json::to_string_pretty(&Envelope { command, inputs, results }).expect("serializable record")
}

/// Formats `v` with 15 significant digits.
pub fn fmt15(v: f64) -> String {
    if v == 0.0 || !v.is_finite() {
        return format!("{v}");
    }
    let exp = v.abs().log10().floor() as i32;
    if (-5..15).contains(&exp) {
        format!("{:.*}", (14 - exp) as usize, v)
    } else {
        format!("{v:.14e}")
    }
}

fn row(name: &str, values: [f64; 3]) -> String {
    format!("{name:<6} {} {} {}\n", fmt15(values[0]), fmt15(values[1]), fmt15(values[2]))
}

/// Runs a parsed command line and returns what it prints on stdout.
pub fn run(cli: &Cli) -> Result<String, CliError> {
    match &cli.command {
        Command::Convert { sides, point } => {
            let (input, inputs) = match (sides, point) {
                (Some(s), _) => (ConvertInput::Sides(triple(s)), json!({ "sides": s })),
                (None, Some(p)) => (ConvertInput::Point(triple(p)), json!({ "point": p })),
                (None, None) => unreachable!("clap requires one of --sides and --point"),
            };
            let rec = cmd_convert(input)?;
            if cli.json {
                return Ok(envelope("convert", inputs, &rec));
            }
            Ok(row("sides", rec.sides.as_array()) + &row("s", rec.s.as_array()) + &row("point", rec.point.coords()))
        }
        Command::Classify { sides } => {
            let rec = cmd_classify(triple(sides), cli.tol)?;
            if cli.json {
                return Ok(envelope("classify", json!({ "sides": sides, "tol": cli.tol }), &rec));
            }
            Ok(format!("{}\n", rec.shape))
        }
        Command::Solve { constraint } => {
            let recs = cmd_solve(*constraint)?;
            Ok(envelope("solve", json!({ "constraint": constraint }), &recs))
        }
        Command::Export { what, samples, format, out, view } => {
            let bundle = cmd_export(*what, *samples as usize)?;
            let body = match format {
                Format::Json => {
                    envelope("export", json!({ "what": what, "samples": samples, "format": format }), &bundle)
                }
                Format::Csv => bundle.to_csv(),
                Format::Svg => bundle.to_svg(triple(view))?,
            };
            match out {
                Some(path) => {
                    std::fs::write(path, &body)
                        .map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
                    Ok(String::new())
                }
                None => Ok(body),
            }
        }
        Command::Sample { n, seed, shards } => {
            let report = cmd_sample(*n, *seed, *shards as usize, cli.tol);
            if cli.json {
                return Ok(envelope(
                    "sample",
                    json!({ "n": n, "seed": seed, "shards": shards, "tol": cli.tol }),
                    &report,
                ));
            }
            let mut text = format!("n {}\nseed {}\n", report.n, report.seed);
            for (flag, f) in &report.fractions {
                text += &format!("{flag} {}\n", fmt15(*f));
            }
            text += &format!("mean_symmetry_distance {}\n", fmt15(report.mean_symmetry_distance));
            Ok(text)
        }
        Command::Orbit { point } => {
            let images = cmd_orbit(triple(point))?;
            if cli.json {
                return Ok(envelope("orbit", json!({ "point": point }), &images));
            }
            let mut text = String::new();
            for img in &images {
                let signs: String = img.element.signs().iter().map(|s| if *s > 0 { '+' } else { '-' }).collect();
                let [i, j, k] = img.element.perm();
                text += &format!("{i}{j}{k} {signs} {}", row("", img.point.coords()).trim_start());
            }
            Ok(text)
        }
    }
}
