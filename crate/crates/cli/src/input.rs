//! Shape descriptions: flag values and the one-record-per-line file format.
//!
//! A record is a tag followed by numbers, separated by whitespace or commas:
//!
//! ```text
//! sides 3 4 5
//! angles 30 60 90
//! points 0 0  1 0  1 1  0 1
//! ```

use std::f64::consts::PI;
use std::fmt;

use shapenorm::{
    angles_from_sides, normal_point_from_angles, normal_point_from_sides, sides_from_angles,
    AngleTriple, FormKind, Point64, Quadrilateral64, SideLengths, Tolerance, Triangle64,
};

use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, PartialEq)]
pub enum ShapeInput {
    Points(Vec<Point64>),
    Sides([f64; 3]),
    /// Always stored in radians.
    Angles([f64; 3]),
}

impl ShapeInput {
    pub fn tag(&self) -> &'static str {
        match self {
            ShapeInput::Points(_) => "points",
            ShapeInput::Sides(_) => "sides",
            ShapeInput::Angles(_) => "angles",
        }
    }

    /// Number of vertices described.
    pub fn arity(&self) -> usize {
        match self {
            ShapeInput::Points(p) => p.len(),
            _ => 3,
        }
    }

    pub fn from_points(values: &[f64]) -> CliResult<Self> {
        check_finite(values)?;
        if values.len() != 6 && values.len() != 8 {
            return Err(CliError::Parse(format!(
                "points needs 3 or 4 coordinate pairs, got {} numbers",
                values.len()
            )));
        }
        let pts = values.chunks(2).map(|c| Point64::new(c[0], c[1])).collect();
        Ok(ShapeInput::Points(pts))
    }

    pub fn from_sides(values: &[f64]) -> CliResult<Self> {
        check_finite(values)?;
        let v: [f64; 3] = values
            .try_into()
            .map_err(|_| CliError::Parse(format!("sides needs 3 numbers, got {}", values.len())))?;
        if v.iter().any(|&x| x < 0.0) {
            return Err(CliError::Parse("side lengths must be nonnegative".into()));
        }
        Ok(ShapeInput::Sides(v))
    }

    pub fn from_angles(values: &[f64], degrees: bool) -> CliResult<Self> {
        check_finite(values)?;
        let mut v: [f64; 3] = values.try_into().map_err(|_| {
            CliError::Parse(format!("angles needs 3 numbers, got {}", values.len()))
        })?;
        if v.iter().any(|&x| x <= 0.0) {
            return Err(CliError::Parse("angles must be positive".into()));
        }
        if degrees {
            v = v.map(|x| x * PI / 180.0);
        }
        Ok(ShapeInput::Angles(v))
    }

    /// Parses one record such as `sides 3 4 5`.
    pub fn parse_record(line: &str, degrees: bool) -> CliResult<Self> {
        let mut tokens = line
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty());
        let tag = tokens
            .next()
            .ok_or_else(|| CliError::Parse("empty shape record".into()))?;
        let values = tokens
            .map(|t| {
                t.parse::<f64>()
                    .map_err(|_| CliError::Parse(format!("not a number: {t:?}")))
            })
            .collect::<CliResult<Vec<_>>>()?;
        match tag {
            "points" => Self::from_points(&values),
            "sides" => Self::from_sides(&values),
            "angles" => Self::from_angles(&values, degrees),
            other => Err(CliError::Parse(format!(
                "unknown record tag {other:?} (expected points, sides or angles)"
            ))),
        }
    }

    /// Parses a whole file: one record per nonblank line, `#` starts a comment.
    pub fn parse_records(text: &str, degrees: bool) -> CliResult<Vec<Self>> {
        records(text)
            .map(|(n, line)| {
                Self::parse_record(line, degrees)
                    .map_err(|e| CliError::Parse(format!("line {n}: {e}")))
            })
            .collect()
    }

    /// The shape as a triangle description, or `None` for four points.
    pub fn triangle(&self, tol: Tolerance<f64>) -> CliResult<Option<TriangleShape>> {
        Ok(Some(match self {
            ShapeInput::Points(p) if p.len() == 4 => return Ok(None),
            ShapeInput::Points(p) => TriangleShape::Points(Triangle64::new(p[0], p[1], p[2])?),
            ShapeInput::Sides([x, y, z]) => TriangleShape::Sides(SideLengths::new(*x, *y, *z)?),
            ShapeInput::Angles([x, y, z]) => {
                TriangleShape::Angles(AngleTriple::new(*x, *y, *z, tol)?)
            }
        }))
    }

    pub fn quad(&self) -> CliResult<Option<Quadrilateral64>> {
        match self {
            ShapeInput::Points(p) if p.len() == 4 => {
                Ok(Some(Quadrilateral64::new([p[0], p[1], p[2], p[3]])?))
            }
            _ => Ok(None),
        }
    }
}

impl fmt::Display for ShapeInput {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())?;
        match self {
            ShapeInput::Points(p) => p.iter().try_for_each(|q| write!(f, " {} {}", q.x, q.y)),
            ShapeInput::Sides(v) | ShapeInput::Angles(v) => {
                v.iter().try_for_each(|x| write!(f, " {x}"))
            }
        }
    }
}

/// Nonblank, non-comment lines with their 1-based line numbers.
pub fn records(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn check_finite(values: &[f64]) -> CliResult<()> {
    if values.iter().all(|x| x.is_finite()) {
        Ok(())
    } else {
        Err(CliError::Parse("all numbers must be finite".into()))
    }
}

/// A validated triangle in whichever representation was supplied.
#[derive(Debug, Clone, Copy)]
pub enum TriangleShape {
    Points(Triangle64),
    Sides(SideLengths<f64>),
    Angles(AngleTriple<f64>),
}

impl TriangleShape {
    pub fn sides(&self) -> CliResult<SideLengths<f64>> {
        Ok(match self {
            TriangleShape::Points(t) => t.side_lengths(),
            TriangleShape::Sides(s) => *s,
            TriangleShape::Angles(a) => sides_from_angles(a)?,
        })
    }

    pub fn normal_point(&self, kind: FormKind) -> CliResult<Point64> {
        Ok(match self {
            TriangleShape::Points(t) => shapenorm::normal_point(kind, t)?,
            TriangleShape::Sides(s) => normal_point_from_sides(kind, s)?,
            TriangleShape::Angles(a) => normal_point_from_angles(kind, a)?,
        })
    }

    /// Sorted angles, or `None` for a degenerate triangle.
    pub fn angles(&self, tol: Tolerance<f64>) -> CliResult<Option<AngleTriple<f64>>> {
        match self {
            TriangleShape::Angles(a) => Ok(Some(*a)),
            _ => match angles_from_sides(&self.sides()?, tol) {
                Ok(a) => Ok(Some(a)),
                Err(shapenorm::Error::Degenerate(_)) => Ok(None),
                Err(e) => Err(e.into()),
            },
        }
    }

    /// The triangle with vertices `(0,0)`, `(1,0)` and its C-normal point.
    pub fn canonical(&self) -> CliResult<Triangle64> {
        let p = self.normal_point(FormKind::CVertex)?;
        Ok(Triangle64::new(
            Point64::new(0.0, 0.0),
            Point64::new(1.0, 0.0),
            p,
        )?)
    }
}
