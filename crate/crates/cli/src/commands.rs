use std::fs;
use std::path::{Path, PathBuf};

use shapenorm::{
    angles_from_normal_point, circle_normal_form, classify, in_domain, in_s_c, in_s_d,
    is_normal_circle_triangle, normalize_quad, reflect_normalize, reflection_orbit_type_count,
    sides_from_normal_point, triangles_similar, AngleReading, AngleTriple, Error, FormKind,
    Point64, QuadNormalForm64, Quadrilateral64, Tolerance,
};

use crate::error::{CliError, CliResult};
use crate::input::{ShapeInput, TriangleShape};
use crate::report::{pair, ReportRecord};
use crate::svg;

/// Settings shared by every command.
#[derive(Debug, Clone, Copy)]
pub struct Settings {
    pub tol: Tolerance<f64>,
    pub degrees: bool,
}

impl Settings {
    pub fn new(eps: f64, degrees: bool) -> CliResult<Self> {
        Ok(Settings {
            tol: Tolerance::new(eps)?,
            degrees,
        })
    }

    fn angles(&self, a: &AngleTriple<f64>) -> [f64; 3] {
        let v = a.as_array();
        if self.degrees {
            v.map(f64::to_degrees)
        } else {
            v
        }
    }

    fn angle_unit(&self) -> String {
        if self.degrees { "deg" } else { "rad" }.into()
    }
}

fn triangle_of(input: &ShapeInput, set: &Settings) -> CliResult<TriangleShape> {
    input
        .triangle(set.tol)?
        .ok_or_else(|| CliError::Parse("expected a triangle (3 points, sides or angles)".into()))
}

fn quad_of(input: &ShapeInput) -> CliResult<Quadrilateral64> {
    input
        .quad()?
        .ok_or_else(|| CliError::Parse("expected a quadrilateral (4 points)".into()))
}

fn fill_triangle_facts(r: &mut ReportRecord, t: &TriangleShape, set: &Settings) -> CliResult<()> {
    let class = classify(&t.canonical()?, set.tol);
    r.angle_class = Some(format!("{:?}", class.angle_class));
    r.side_class = Some(format!("{:?}", class.side_class));
    if let Some(a) = t.angles(set.tol)? {
        r.angles = Some(set.angles(&a));
        r.angle_unit = Some(set.angle_unit());
    }
    r.side_ratios = Some(t.sides()?.ratios());
    Ok(())
}

fn circle_vertices(t: &TriangleShape, set: &Settings) -> CliResult<[Point64; 3]> {
    let Some(angles) = t.angles(set.tol)? else {
        return Err(Error::DegenerateAngles(
            "a degenerate triangle has no circle normal form".into(),
        )
        .into());
    };
    Ok(circle_normal_form(&angles)?.vertices())
}

/// Normal point(s) of a triangle for `kind`, or the quadrilateral normal
/// form for four points.
pub fn normalize(input: &ShapeInput, kind: FormKind, set: &Settings) -> CliResult<ReportRecord> {
    if input.arity() == 4 {
        return quad_normalize(input, set);
    }
    let t = triangle_of(input, set)?;
    let mut r = ReportRecord::new("normalize");
    r.input = Some(input.to_string());
    r.form_kind = Some(kind.name().into());
    if kind == FormKind::Circle {
        let v = circle_vertices(&t, set)?;
        r.circle_vertices = Some(v.map(pair));
        r.in_domain = Some(is_normal_circle_triangle(
            &shapenorm::Triangle64::from_vertices(v)?,
            set.tol,
        ));
    } else {
        let p = t.normal_point(kind)?;
        r.normal_point = Some(pair(p));
        r.in_domain = Some(in_domain(kind, p, set.tol));
    }
    fill_triangle_facts(&mut r, &t, set)?;
    Ok(r)
}

pub fn classify_cmd(input: &ShapeInput, set: &Settings) -> CliResult<ReportRecord> {
    let t = triangle_of(input, set)?;
    let mut r = ReportRecord::new("classify");
    r.input = Some(input.to_string());
    fill_triangle_facts(&mut r, &t, set)?;
    Ok(r)
}

fn quad_record(
    command: &str,
    input: &ShapeInput,
    f: &QuadNormalForm64,
    set: &Settings,
) -> ReportRecord {
    let mut r = ReportRecord::new(command);
    r.input = Some(input.to_string());
    r.quad_c = Some(pair(f.c));
    r.quad_d = Some(pair(f.d));
    r.in_domain = Some(in_s_c(f.c, set.tol) && in_s_d(f.d, f.c, set.tol));
    if reflect_normalize(f.d).approx_eq(f.c, set.tol) {
        r.orbit_types = reflection_orbit_type_count(f.c, f.d, set.tol).ok();
    }
    r
}

pub fn quad_normalize(input: &ShapeInput, set: &Settings) -> CliResult<ReportRecord> {
    let q = quad_of(input)?;
    let f = normalize_quad(&q, set.tol)?;
    Ok(quad_record("quad-normalize", input, &f, set))
}

/// Compares two shapes of the same arity through their canonical keys.
pub fn similar(a: &ShapeInput, b: &ShapeInput, set: &Settings) -> CliResult<ReportRecord> {
    if a.arity() != b.arity() {
        return Err(CliError::ArityMismatch(a.arity(), b.arity()));
    }
    let mut r = ReportRecord::new("similar");
    r.input = Some(format!("{a}; {b}"));
    if a.arity() == 4 {
        let fa = normalize_quad(&quad_of(a)?, set.tol)?;
        let fb = normalize_quad(&quad_of(b)?, set.tol)?;
        r.similar = Some(fa.approx_eq(&fb, set.tol));
        r.key_a = Some(vec![pair(fa.c), pair(fa.d)]);
        r.key_b = Some(vec![pair(fb.c), pair(fb.d)]);
    } else {
        let ta = triangle_of(a, set)?.canonical()?;
        let tb = triangle_of(b, set)?.canonical()?;
        r.similar = Some(triangles_similar(&ta, &tb, set.tol));
        r.key_a = Some(vec![pair(ta.vertices()[2])]);
        r.key_b = Some(vec![pair(tb.vertices()[2])]);
    }
    Ok(r)
}

/// Source of a conversion: a shape, or a normal point of a given kind.
pub enum ConvertSource {
    Shape(ShapeInput),
    NormalPoint(FormKind, Point64),
}

/// Converts to the `to` normal form and reports angles and side ratios.
pub fn convert(src: &ConvertSource, to: FormKind, set: &Settings) -> CliResult<ReportRecord> {
    let (shape, label) = match src {
        ConvertSource::Shape(s) => (triangle_of(s, set)?, s.to_string()),
        ConvertSource::NormalPoint(kind, p) => {
            if *kind == FormKind::Circle {
                return Err(Error::UnsupportedKind("circle").into());
            }
            let shape = match angles_from_normal_point(*kind, *p, set.tol)? {
                AngleReading::Proper(a) => TriangleShape::Angles(a),
                AngleReading::Degenerate => TriangleShape::Sides(sides_from_normal_point(*p)?),
            };
            (shape, format!("point {} {} (kind {kind})", p.x, p.y))
        }
    };
    let mut r = ReportRecord::new("convert");
    r.input = Some(label);
    r.form_kind = Some(to.name().into());
    if to == FormKind::Circle {
        r.circle_vertices = Some(circle_vertices(&shape, set)?.map(pair));
    } else {
        let p = shape.normal_point(to)?;
        r.normal_point = Some(pair(p));
        r.in_domain = Some(in_domain(to, p, set.tol));
    }
    if let Some(a) = shape.angles(set.tol)? {
        r.angles = Some(set.angles(&a));
        r.angle_unit = Some(set.angle_unit());
    }
    r.side_ratios = Some(shape.sides()?.ratios());
    Ok(r)
}

pub fn write_file(path: &Path, contents: &str) -> CliResult<()> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
    }
    fs::write(path, contents).map_err(|e| CliError::io(path, e))
}

/// File name used by `domains` when writing several figures.
pub fn domain_file_name(kind: FormKind) -> String {
    format!("domain-{}.svg", kind.name())
}

/// Writes domain figures. With several kinds `out` is a directory.
pub fn domains(kinds: &[FormKind], out: Option<&Path>) -> CliResult<ReportRecord> {
    let mut files = Vec::new();
    for &kind in kinds {
        let path = match (kinds.len(), out) {
            (1, Some(p)) => p.to_path_buf(),
            (_, Some(dir)) => dir.join(domain_file_name(kind)),
            (_, None) => PathBuf::from(domain_file_name(kind)),
        };
        write_file(&path, &svg::domain_figure(kind).render())?;
        files.push(path.display().to_string());
    }
    let mut r = ReportRecord::new("domains");
    r.files = Some(files);
    Ok(r)
}

/// Plots the normal point of `input` (or the quadrilateral normal form) on
/// its domain figure.
pub fn plot(
    input: &ShapeInput,
    kind: FormKind,
    out: Option<&Path>,
    set: &Settings,
) -> CliResult<ReportRecord> {
    let (mut r, fig) = if input.arity() == 4 {
        let f = normalize_quad(&quad_of(input)?, set.tol)?;
        (
            quad_record("plot", input, &f, set),
            svg::quad_figure(f.c, f.d),
        )
    } else {
        let mut r = normalize(input, kind, set)?;
        r.command = "plot".into();
        let fig = if kind == FormKind::Circle {
            let v = r
                .circle_vertices
                .expect("set for the circle form")
                .map(|[x, y]| Point64::new(x, y));
            let t = triangle_of(input, set)?;
            let a = t
                .angles(set.tol)?
                .expect("circle form exists only for proper triangles");
            svg::circle_figure(v, a.alpha(), a.beta())
        } else {
            let [x, y] = r.normal_point.expect("set for one-vertex forms");
            svg::point_figure(kind, Point64::new(x, y))
        };
        (r, fig)
    };
    let path = out
        .map(Path::to_path_buf)
        .unwrap_or_else(|| PathBuf::from(format!("plot-{}.svg", kind.name())));
    write_file(&path, &fig.render())?;
    r.files = Some(vec![path.display().to_string()]);
    Ok(r)
}
