//! Command-line front end for `shapenorm`: argument definitions, shape
//! parsing, report records and SVG figures.

pub mod commands;
pub mod error;
pub mod input;
pub mod report;
pub mod svg;

use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use shapenorm::{FormKind, Point64};

pub use commands::Settings;
pub use error::{CliError, CliResult};
pub use input::ShapeInput;
pub use report::ReportRecord;

#[derive(Debug, Parser)]
#[command(
    name = "shapenorm",
    version,
    about = "Normal forms of triangles and quadrilaterals up to similarity"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Tolerance used by every comparison.
    #[arg(
        long,
        global = true,
        default_value_t = 1e-9,
        allow_negative_numbers = true
    )]
    pub eps: f64,

    /// Read and report angles in degrees instead of radians.
    #[arg(long, global = true)]
    pub degrees: bool,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Output file (SVG for domains/plot, report text otherwise). For
    /// `domains --kind all` this is a directory.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    /// One JSON object per line.
    Structured,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    A,
    B,
    C,
    Circle,
}

impl From<KindArg> for FormKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::A => FormKind::AVertex,
            KindArg::B => FormKind::BVertex,
            KindArg::C => FormKind::CVertex,
            KindArg::Circle => FormKind::Circle,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DomainKind {
    A,
    B,
    C,
    Circle,
    All,
}

#[derive(Debug, Args)]
#[group(multiple = false)]
pub struct ShapeArgs {
    /// Vertex coordinates: x1 y1 x2 y2 x3 y3 [x4 y4].
    #[arg(long, num_args = 6..=8, allow_negative_numbers = true, value_name = "COORD")]
    pub points: Option<Vec<f64>>,

    #[arg(long, num_args = 3, value_name = "LEN")]
    pub sides: Option<Vec<f64>>,

    #[arg(long, num_args = 3, value_name = "ANGLE")]
    pub angles: Option<Vec<f64>>,

    /// File with one shape record per line (`sides 3 4 5`, `points ...`).
    #[arg(long)]
    pub file: Option<PathBuf>,
}

impl ShapeArgs {
    fn shapes(&self, degrees: bool) -> CliResult<Vec<ShapeInput>> {
        if let Some(p) = &self.points {
            Ok(vec![ShapeInput::from_points(p)?])
        } else if let Some(s) = &self.sides {
            Ok(vec![ShapeInput::from_sides(s)?])
        } else if let Some(a) = &self.angles {
            Ok(vec![ShapeInput::from_angles(a, degrees)?])
        } else if let Some(path) = &self.file {
            ShapeInput::parse_records(&read(path)?, degrees)
        } else {
            Err(CliError::Usage(
                "no shape given (use --points, --sides, --angles or --file)".into(),
            ))
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Normal point of a triangle, or the normal form of a quadrilateral.
    Normalize {
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(long, value_enum, default_value_t = KindArg::C)]
        kind: KindArg,
    },
    /// Whether two shapes are similar. Shapes are records such as
    /// "sides 3 4 5"; a file holds one pair per line separated by ';'.
    Similar {
        #[arg(required_unless_present = "file", requires = "second")]
        first: Option<String>,
        second: Option<String>,
        #[arg(long, conflicts_with = "first")]
        file: Option<PathBuf>,
    },
    /// Convert a shape or a normal point into another normal form.
    Convert {
        #[command(flatten)]
        shape: ShapeArgs,
        /// Normal point of the form given by --kind.
        #[arg(long, num_args = 2, allow_negative_numbers = true, value_names = ["X", "Y"], conflicts_with_all = ["points", "sides", "angles", "file"])]
        normal_point: Option<Vec<f64>>,
        /// Form of --normal-point, and the default target.
        #[arg(long, value_enum, default_value_t = KindArg::C)]
        kind: KindArg,
        /// Target form.
        #[arg(long, value_enum)]
        to: Option<KindArg>,
    },
    /// Angle and side classification of a triangle.
    Classify {
        #[command(flatten)]
        shape: ShapeArgs,
    },
    /// Normal form (C, D) of a quadrilateral.
    QuadNormalize {
        #[command(flatten)]
        shape: ShapeArgs,
    },
    /// Write SVG figures of the normal-form domains.
    Domains {
        #[arg(long, value_enum, default_value_t = DomainKind::All)]
        kind: DomainKind,
    },
    /// Write an SVG of a shape's normal point on its domain.
    Plot {
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(long, value_enum, default_value_t = KindArg::C)]
        kind: KindArg,
    },
}

fn read(path: &PathBuf) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| CliError::io(path, e))
}

fn single(shapes: Vec<ShapeInput>, what: &str) -> CliResult<ShapeInput> {
    let n = shapes.len();
    let mut it = shapes.into_iter();
    match (it.next(), n) {
        (Some(s), 1) => Ok(s),
        _ => Err(CliError::Usage(format!(
            "{what} takes exactly one shape, got {n}"
        ))),
    }
}

/// Runs a parsed command and returns the records it produced. Files (SVG
/// figures) are written as a side effect.
pub fn execute(cli: &Cli) -> CliResult<Vec<ReportRecord>> {
    let set = Settings::new(cli.eps, cli.degrees)?;
    let each = |shape: &ShapeArgs, f: &dyn Fn(&ShapeInput) -> CliResult<ReportRecord>| {
        shape
            .shapes(cli.degrees)?
            .iter()
            .map(f)
            .collect::<CliResult<Vec<_>>>()
    };
    match &cli.command {
        Command::Normalize { shape, kind } => {
            each(shape, &|s| commands::normalize(s, (*kind).into(), &set))
        }
        Command::Classify { shape } => each(shape, &|s| commands::classify_cmd(s, &set)),
        Command::QuadNormalize { shape } => each(shape, &|s| commands::quad_normalize(s, &set)),
        Command::Similar {
            first,
            second,
            file,
        } => {
            let pairs = match (first, second, file) {
                (Some(a), Some(b), _) => vec![(a.clone(), b.clone())],
                (_, _, Some(path)) => input::records(&read(path)?)
                    .map(|(n, line)| {
                        line.split_once(';')
                            .map(|(a, b)| (a.to_string(), b.to_string()))
                            .ok_or_else(|| {
                                CliError::Parse(format!(
                                    "line {n}: expected two records separated by ';'"
                                ))
                            })
                    })
                    .collect::<CliResult<_>>()?,
                _ => return Err(CliError::Usage("similar needs two shapes or --file".into())),
            };
            pairs
                .iter()
                .map(|(a, b)| {
                    let a = ShapeInput::parse_record(a, cli.degrees)?;
                    let b = ShapeInput::parse_record(b, cli.degrees)?;
                    commands::similar(&a, &b, &set)
                })
                .collect()
        }
        Command::Convert {
            shape,
            normal_point,
            kind,
            to,
        } => {
            let kind: FormKind = (*kind).into();
            let to = to.map(FormKind::from).unwrap_or(kind);
            if let Some(p) = normal_point {
                let p = Point64::try_new(p[0], p[1])?;
                let src = commands::ConvertSource::NormalPoint(kind, p);
                Ok(vec![commands::convert(&src, to, &set)?])
            } else {
                each(shape, &|s| {
                    commands::convert(&commands::ConvertSource::Shape(s.clone()), to, &set)
                })
            }
        }
        Command::Domains { kind } => {
            let kinds = match kind {
                DomainKind::A => vec![FormKind::AVertex],
                DomainKind::B => vec![FormKind::BVertex],
                DomainKind::C => vec![FormKind::CVertex],
                DomainKind::Circle => vec![FormKind::Circle],
                DomainKind::All => vec![
                    FormKind::CVertex,
                    FormKind::BVertex,
                    FormKind::AVertex,
                    FormKind::Circle,
                ],
            };
            Ok(vec![commands::domains(&kinds, cli.out.as_deref())?])
        }
        Command::Plot { shape, kind } => {
            let s = single(shape.shapes(cli.degrees)?, "plot")?;
            Ok(vec![commands::plot(
                &s,
                (*kind).into(),
                cli.out.as_deref(),
                &set,
            )?])
        }
    }
}

/// Formats records for the requested output format.
pub fn render(records: &[ReportRecord], format: Format) -> String {
    match format {
        Format::Structured => records.iter().map(|r| r.to_json() + "\n").collect(),
        Format::Text => records
            .iter()
            .map(ReportRecord::to_text)
            .collect::<Vec<_>>()
            .join("\n"),
    }
}

/// Full run: execute, then print the report or write it to `--out` for the
/// textual commands.
pub fn run(cli: &Cli) -> CliResult<String> {
    let records = execute(cli)?;
    let text = render(&records, cli.format);
    let writes_figures = matches!(cli.command, Command::Domains { .. } | Command::Plot { .. });
    match (&cli.out, writes_figures) {
        (Some(path), false) => {
            commands::write_file(path, &text)?;
            Ok(String::new())
        }
        _ => Ok(text),
    }
}
