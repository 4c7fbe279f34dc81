//! SVG figures of the normal-form domains.
//!
//! Curves, regions and markers are written in world coordinates inside a
//! group whose transform flips the y-axis, so every `points`, `cx` and `cy`
//! value in the file is a plane coordinate printed in shortest round-trip
//! form. Curves carry `data-curve` (a stable id) and `data-equation`.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_4, PI};
use std::fmt::Write;

use shapenorm::{FormKind, Point64};

/// Samples per curve; consumers may rely on at least 100.
pub const CURVE_SAMPLES: usize = 120;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Viewport {
    pub xmin: f64,
    pub xmax: f64,
    pub ymin: f64,
    pub ymax: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Curve {
    pub id: &'static str,
    pub equation: &'static str,
    pub points: Vec<Point64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Region {
    pub label: &'static str,
    pub points: Vec<Point64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Marker {
    pub id: String,
    pub at: Point64,
    pub label: Option<String>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Panel {
    pub id: &'static str,
    pub title: String,
    pub viewport: Viewport,
    /// Pixel position of the top-left corner and pixel width.
    pub left: f64,
    pub top: f64,
    pub width: f64,
    pub curves: Vec<Curve>,
    pub regions: Vec<Region>,
    pub outlines: Vec<Vec<Point64>>,
    pub markers: Vec<Marker>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Figure {
    pub title: String,
    pub panels: Vec<Panel>,
    pub notes: Vec<String>,
}

fn sample(t0: f64, t1: f64, f: impl Fn(f64) -> Point64) -> Vec<Point64> {
    (0..CURVE_SAMPLES)
        .map(|i| f(t0 + (t1 - t0) * i as f64 / (CURVE_SAMPLES - 1) as f64))
        .collect()
}

fn pt(x: f64, y: f64) -> Point64 {
    Point64::new(x, y)
}

fn unit_circle(t: f64) -> Point64 {
    pt(t.cos(), t.sin())
}

fn shifted_circle(t: f64) -> Point64 {
    pt(1.0 + t.cos(), t.sin())
}

fn right_arc(t: f64) -> Point64 {
    pt(0.5 + 0.5 * t.cos(), 0.5 * t.sin())
}

fn axis(x0: f64, x1: f64) -> Curve {
    Curve {
        id: "axis",
        equation: "y=0",
        points: sample(x0, x1, |x| pt(x, 0.0)),
    }
}

fn half_line(y1: f64) -> Curve {
    Curve {
        id: "half-line",
        equation: "x=1/2",
        points: sample(0.0, y1, |y| pt(0.5, y)),
    }
}

fn right_ray(y1: f64) -> Curve {
    Curve {
        id: "right-ray",
        equation: "x=1",
        points: sample(0.0, y1, |y| pt(1.0, y)),
    }
}

fn unit_circle_curve(t1: f64) -> Curve {
    Curve {
        id: "unit-circle",
        equation: "x^2+y^2=1",
        points: sample(0.0, t1, unit_circle),
    }
}

fn shifted_circle_curve() -> Curve {
    Curve {
        id: "shifted-circle",
        equation: "(x-1)^2+y^2=1",
        points: sample(0.0, PI, shifted_circle),
    }
}

/// The equilateral triangle's free vertex, shared by all one-vertex forms.
pub fn equilateral_point() -> Point64 {
    pt(0.5, 3f64.sqrt() / 2.0)
}

fn equilateral_marker() -> Marker {
    Marker {
        id: "equilateral".into(),
        at: equilateral_point(),
        label: Some("equilateral".into()),
    }
}

fn chain(parts: Vec<Vec<Point64>>) -> Vec<Point64> {
    parts.into_iter().flatten().collect()
}

fn one_vertex_panel(kind: FormKind) -> Panel {
    let (vp, curves, regions, title) = match kind {
        FormKind::CVertex => (
            Viewport {
                xmin: -0.15,
                xmax: 1.15,
                ymin: -0.15,
                ymax: 1.15,
            },
            vec![
                axis(0.0, 1.1),
                half_line(1.1),
                unit_circle_curve(PI),
                Curve {
                    id: "right-arc",
                    equation: "(x-1/2)^2+y^2=1/4",
                    points: sample(0.0, PI, right_arc),
                },
            ],
            vec![
                Region {
                    label: "obtuse",
                    points: chain(vec![vec![pt(0.5, 0.0)], sample(0.0, FRAC_PI_2, right_arc)]),
                },
                Region {
                    label: "acute",
                    points: chain(vec![
                        sample(FRAC_PI_2, 0.0, right_arc),
                        sample(0.0, FRAC_PI_3, unit_circle),
                    ]),
                },
            ],
            "C-vertex normal form: domain S_C",
        ),
        FormKind::BVertex => (
            Viewport {
                xmin: -0.15,
                xmax: 2.15,
                ymin: -0.15,
                ymax: 1.25,
            },
            vec![
                axis(0.0, 2.1),
                unit_circle_curve(PI),
                shifted_circle_curve(),
                right_ray(1.2),
            ],
            vec![
                Region {
                    label: "acute",
                    points: chain(vec![
                        sample(FRAC_PI_3, 0.0, unit_circle),
                        sample(FRAC_PI_2, 2.0 * FRAC_PI_3, shifted_circle),
                    ]),
                },
                Region {
                    label: "obtuse",
                    points: chain(vec![
                        vec![pt(1.0, 0.0)],
                        sample(0.0, FRAC_PI_2, shifted_circle),
                    ]),
                },
            ],
            "B-vertex normal form: domain S_B",
        ),
        FormKind::AVertex => (
            Viewport {
                xmin: 0.0,
                xmax: 3.0,
                ymin: 0.0,
                ymax: 3.0,
            },
            vec![
                axis(0.0, 3.0),
                half_line(3.0),
                shifted_circle_curve(),
                right_ray(3.0),
            ],
            vec![
                Region {
                    label: "acute",
                    points: chain(vec![
                        sample(2.0 * FRAC_PI_3, FRAC_PI_2, shifted_circle),
                        vec![pt(1.0, 3.0), pt(0.5, 3.0)],
                    ]),
                },
                Region {
                    label: "obtuse",
                    points: chain(vec![
                        sample(FRAC_PI_2, 0.0, shifted_circle),
                        vec![pt(3.0, 0.0), pt(3.0, 3.0), pt(1.0, 3.0)],
                    ]),
                },
            ],
            "A-vertex normal form: domain S_A",
        ),
        FormKind::Circle => unreachable!("circle form has its own figure"),
    };
    Panel {
        id: "main",
        title: title.into(),
        viewport: vp,
        left: 40.0,
        top: 40.0,
        width: 480.0,
        curves,
        regions,
        outlines: Vec::new(),
        markers: vec![equilateral_marker()],
    }
}

fn circle_panels() -> Vec<Panel> {
    let main = Panel {
        id: "main",
        title: "Normal circle triangles: C = (1, 0) on the unit circle".into(),
        viewport: Viewport {
            xmin: -1.3,
            xmax: 1.3,
            ymin: -1.3,
            ymax: 1.3,
        },
        left: 40.0,
        top: 40.0,
        width: 400.0,
        curves: vec![axis(-1.2, 1.2), unit_circle_curve(2.0 * PI)],
        regions: Vec::new(),
        outlines: Vec::new(),
        markers: vec![Marker {
            id: "C".into(),
            at: pt(1.0, 0.0),
            label: Some("C".into()),
        }],
    };
    let diag = |a: f64| pt(a, a);
    let bound = |a: f64| pt(a, FRAC_PI_2 - a / 2.0);
    let right = |a: f64| pt(a, FRAC_PI_2 - a);
    let inset = Panel {
        id: "inset",
        title: "Angle parameters (alpha, beta)".into(),
        viewport: Viewport {
            xmin: -0.15,
            xmax: 1.25,
            ymin: -0.15,
            ymax: 1.75,
        },
        left: 480.0,
        top: 40.0,
        width: 280.0,
        curves: vec![
            Curve {
                id: "inset-diagonal",
                equation: "beta=alpha",
                points: sample(0.0, FRAC_PI_3, diag),
            },
            Curve {
                id: "inset-bound",
                equation: "beta=pi/2-alpha/2",
                points: sample(0.0, FRAC_PI_3, bound),
            },
            Curve {
                id: "inset-axis",
                equation: "alpha=0",
                points: sample(0.0, FRAC_PI_2, |b| pt(0.0, b)),
            },
            Curve {
                id: "inset-right",
                equation: "beta=pi/2-alpha",
                points: sample(0.0, FRAC_PI_4, right),
            },
        ],
        regions: vec![
            Region {
                label: "obtuse",
                points: vec![pt(0.0, 0.0), diag(FRAC_PI_4), pt(0.0, FRAC_PI_2)],
            },
            Region {
                label: "acute",
                points: chain(vec![
                    sample(FRAC_PI_4, FRAC_PI_3, diag),
                    sample(FRAC_PI_3, 0.0, bound),
                ]),
            },
        ],
        outlines: Vec::new(),
        markers: vec![Marker {
            id: "equilateral".into(),
            at: pt(FRAC_PI_3, FRAC_PI_3),
            label: Some("equilateral".into()),
        }],
    };
    vec![main, inset]
}

/// Domain figure for one form.
pub fn domain_figure(kind: FormKind) -> Figure {
    match kind {
        FormKind::Circle => Figure {
            title: "shapenorm domain: circle".into(),
            panels: circle_panels(),
            notes: vec![
                "inset: 0 <= alpha <= pi/3, alpha <= beta <= pi/2 - alpha/2".into(),
                "right triangles lie on beta = pi/2 - alpha (AB through the centre)".into(),
            ],
        },
        _ => {
            let mut notes = vec!["shaded: acute (blue), obtuse (orange); boundary between them is the right-angle locus".into()];
            if kind == FormKind::AVertex {
                notes.push(
                    "viewport clipped to 0 <= x <= 3, 0 <= y <= 3 (the domain is unbounded)".into(),
                );
            }
            Figure {
                title: format!("shapenorm domain: {}", kind.name()),
                panels: vec![one_vertex_panel(kind)],
                notes,
            }
        }
    }
}

/// Domain figure with a labeled normal point.
pub fn point_figure(kind: FormKind, p: Point64) -> Figure {
    let mut fig = domain_figure(kind);
    let label = format!("({}, {})", p.x, p.y);
    let vp = fig.panels[0].viewport;
    if p.x < vp.xmin || p.x > vp.xmax || p.y < vp.ymin || p.y > vp.ymax {
        fig.notes
            .push(format!("point {label} lies outside the viewport"));
    }
    fig.panels[0].markers.push(Marker {
        id: "point".into(),
        at: p,
        label: Some(label),
    });
    fig
}

/// Circle-form figure with the triangle `[A, B, C]` drawn and its angle
/// pair marked in the inset.
pub fn circle_figure(vertices: [Point64; 3], alpha: f64, beta: f64) -> Figure {
    let mut fig = domain_figure(FormKind::Circle);
    let main = &mut fig.panels[0];
    main.outlines.push(vertices.to_vec());
    for (name, v) in ["A", "B"].iter().zip(vertices) {
        main.markers.push(Marker {
            id: name.to_string(),
            at: v,
            label: Some(name.to_string()),
        });
    }
    fig.panels[1].markers.push(Marker {
        id: "point".into(),
        at: pt(alpha, beta),
        label: Some(format!("({alpha}, {beta})")),
    });
    fig
}

/// Quadrilateral normal form: A = (0,0), B = (1,0), C and D.
pub fn quad_figure(c: Point64, d: Point64) -> Figure {
    let panel = Panel {
        id: "main",
        title: "Quadrilateral normal form".into(),
        viewport: Viewport {
            xmin: -0.15,
            xmax: 1.15,
            ymin: -1.1,
            ymax: 1.1,
        },
        left: 40.0,
        top: 40.0,
        width: 400.0,
        curves: vec![
            axis(0.0, 1.0),
            half_line(1.0),
            unit_circle_curve(2.0 * PI),
            Curve {
                id: "shifted-circle",
                equation: "(x-1)^2+y^2=1",
                points: sample(0.0, 2.0 * PI, shifted_circle),
            },
        ],
        regions: Vec::new(),
        outlines: vec![vec![pt(0.0, 0.0), pt(1.0, 0.0), c, d]],
        markers: [("A", pt(0.0, 0.0)), ("B", pt(1.0, 0.0)), ("C", c), ("D", d)]
            .into_iter()
            .map(|(n, p)| Marker {
                id: n.into(),
                at: p,
                label: Some(format!("{n} ({}, {})", p.x, p.y)),
            })
            .collect(),
    };
    Figure {
        title: "shapenorm quadrilateral".into(),
        panels: vec![panel],
        notes: vec!["A and B realize the diameter; C lies in S_C".into()],
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

fn point_list(pts: &[Point64]) -> String {
    pts.iter()
        .map(|p| format!("{},{}", p.x, p.y))
        .collect::<Vec<_>>()
        .join(" ")
}

fn region_fill(label: &str) -> &'static str {
    match label {
        "acute" => "#d6e6f5",
        "obtuse" => "#f9dcc0",
        _ => "#e8e8e8",
    }
}

impl Panel {
    fn scale(&self) -> f64 {
        self.width / (self.viewport.xmax - self.viewport.xmin)
    }

    fn height(&self) -> f64 {
        self.scale() * (self.viewport.ymax - self.viewport.ymin)
    }

    fn to_pixels(&self, p: Point64) -> (f64, f64) {
        let s = self.scale();
        (
            self.left + s * (p.x - self.viewport.xmin),
            self.top + s * (self.viewport.ymax - p.y),
        )
    }

    fn render(&self, out: &mut String) {
        let s = self.scale();
        let vp = self.viewport;
        let (tx, ty) = (self.left - s * vp.xmin, self.top + s * vp.ymax);
        let px = 1.0 / s;
        let _ = writeln!(
            out,
            "<rect x=\"{:.3}\" y=\"{:.3}\" width=\"{:.3}\" height=\"{:.3}\" fill=\"none\" stroke=\"#999999\"/>",
            self.left,
            self.top,
            self.width,
            self.height()
        );
        let _ = writeln!(
            out,
            "<g data-panel=\"{}\" transform=\"translate({tx:.3} {ty:.3}) scale({s} {})\">",
            self.id, -s
        );
        let _ = writeln!(
            out,
            "<clipPath id=\"clip-{}\"><rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\"/></clipPath>",
            self.id,
            vp.xmin,
            vp.ymin,
            vp.xmax - vp.xmin,
            vp.ymax - vp.ymin
        );
        let _ = writeln!(out, "<g clip-path=\"url(#clip-{})\">", self.id);
        for r in &self.regions {
            let _ = writeln!(
                out,
                "<polygon data-region=\"{}\" points=\"{}\" fill=\"{}\" stroke=\"none\"/>",
                r.label,
                point_list(&r.points),
                region_fill(r.label)
            );
        }
        for c in &self.curves {
            let _ = writeln!(
                out,
                "<polyline data-curve=\"{}\" data-equation=\"{}\" points=\"{}\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1.5\" vector-effect=\"non-scaling-stroke\"/>",
                c.id,
                escape(c.equation),
                point_list(&c.points)
            );
        }
        for o in &self.outlines {
            let _ = writeln!(
                out,
                "<polygon data-shape=\"outline\" points=\"{}\" fill=\"none\" stroke=\"#1f5fa8\" stroke-width=\"1.5\" vector-effect=\"non-scaling-stroke\"/>",
                point_list(o)
            );
        }
        for m in &self.markers {
            let _ = writeln!(
                out,
                "<circle data-marker=\"{}\" cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"#c0392b\"/>",
                escape(&m.id),
                m.at.x,
                m.at.y,
                4.0 * px
            );
        }
        out.push_str("</g>\n</g>\n");
        // text goes outside the flipped group so it reads upright
        let _ = writeln!(
            out,
            "<text x=\"{:.3}\" y=\"{:.3}\" font-size=\"14\">{}</text>",
            self.left,
            self.top - 12.0,
            escape(&self.title)
        );
        for m in &self.markers {
            if let Some(label) = &m.label {
                let (x, y) = self.to_pixels(m.at);
                let _ = writeln!(
                    out,
                    "<text data-label=\"{}\" x=\"{:.3}\" y=\"{:.3}\" font-size=\"11\">{}</text>",
                    escape(&m.id),
                    x + 6.0,
                    y - 6.0,
                    escape(label)
                );
            }
        }
    }
}

impl Figure {
    pub fn render(&self) -> String {
        let right = self
            .panels
            .iter()
            .map(|p| p.left + p.width)
            .fold(0.0, f64::max)
            + 40.0;
        let bottom = self
            .panels
            .iter()
            .map(|p| p.top + p.height())
            .fold(0.0, f64::max);
        let height = bottom + 30.0 + 18.0 * self.notes.len() as f64;
        let mut out = String::new();
        out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
        let _ = writeln!(
            out,
            "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{right:.0}\" height=\"{height:.0}\" viewBox=\"0 0 {right:.0} {height:.0}\" font-family=\"sans-serif\">"
        );
        let _ = writeln!(out, "<title>{}</title>", escape(&self.title));
        out.push_str("<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n");
        for p in &self.panels {
            p.render(&mut out);
        }
        for (i, note) in self.notes.iter().enumerate() {
            let _ = writeln!(
                out,
                "<text data-note=\"{i}\" x=\"40\" y=\"{:.3}\" font-size=\"12\">{}</text>",
                bottom + 24.0 + 18.0 * i as f64,
                escape(note)
            );
        }
        out.push_str("</svg>\n");
        out
    }
}
