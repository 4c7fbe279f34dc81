//! Triangle normal forms up to similarity.
//!
//! Three one-vertex forms map one side of the triangle onto the unit segment
//! of the x-axis and confine the remaining vertex to a fixed plane domain:
//!
//! * C-vertex form: longest side, free vertex in `S_C`
//! * B-vertex form: median side, free vertex in `S_B`
//! * A-vertex form: shortest side, free vertex in the unbounded `S_A`
//!
//! The circle form inscribes the triangle in the unit circle with the vertex
//! of the largest angle at `(1, 0)`.

use std::fmt;

use crate::error::{Error, Result};
use crate::geometry::{distance, Point, SimilarityTransform, Tolerance};
use crate::scalar::Scalar;

/// A multiset of three points, at least two of them distinct.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Triangle<T> {
    vertices: [Point<T>; 3],
}

impl<T: Scalar> Triangle<T> {
    pub fn new(p: Point<T>, q: Point<T>, r: Point<T>) -> Result<Self> {
        Self::from_vertices([p, q, r])
    }

    pub fn from_vertices(vertices: [Point<T>; 3]) -> Result<Self> {
        if vertices.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite);
        }
        if vertices[0] == vertices[1] && vertices[1] == vertices[2] {
            return Err(Error::InvalidTriangle(
                "all three vertices coincide".to_string(),
            ));
        }
        Ok(Triangle { vertices })
    }

    pub fn vertices(&self) -> [Point<T>; 3] {
        self.vertices
    }

    /// Image of the triangle under a similarity.
    pub fn transformed(&self, t: &SimilarityTransform<T>) -> Self {
        Triangle {
            vertices: self.vertices.map(|v| t.apply(v)),
        }
    }

    /// Length of the side opposite vertex `i`.
    fn opposite(&self, i: usize) -> T {
        let v = self.vertices;
        distance(v[(i + 1) % 3], v[(i + 2) % 3])
    }

    /// Vertex indices ordered by the length of the opposite side (stable).
    fn by_opposite_side(&self) -> [usize; 3] {
        let mut order = [0, 1, 2];
        order.sort_by(|&i, &j| self.opposite(i).partial_cmp(&self.opposite(j)).unwrap());
        order
    }

    pub fn side_lengths(&self) -> SideLengths<T> {
        let order = self.by_opposite_side();
        // pairwise distances of a valid triangle always satisfy the checks
        SideLengths {
            a: self.opposite(order[0]),
            b: self.opposite(order[1]),
            c: self.opposite(order[2]),
        }
    }

    /// Twice the signed area.
    pub fn doubled_signed_area(&self) -> T {
        let [p, q, r] = self.vertices;
        (q - p).cross(r - p)
    }
}

/// The three side lengths of a triangle, sorted `a <= b <= c`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SideLengths<T> {
    a: T,
    b: T,
    c: T,
}

impl<T: Scalar> SideLengths<T> {
    /// Relative slack for the triangle inequality: a Heron radicand down to
    /// `-RADICAND_SLACK * (a + b + c)^4` is treated as zero.
    pub const RADICAND_SLACK: f64 = 1e-12;

    /// Sorts the lengths and checks the triangle inequality.
    pub fn new(x: T, y: T, z: T) -> Result<Self> {
        if !(x.is_finite() && y.is_finite() && z.is_finite()) {
            return Err(Error::NonFinite);
        }
        let mut v = [x, y, z];
        v.sort_by(|p, q| p.partial_cmp(q).unwrap());
        let [a, b, c] = v;
        if a < T::zero() {
            return Err(Error::InvalidSides(format!("negative length {a}")));
        }
        if c <= T::zero() {
            return Err(Error::InvalidSides("longest side must be positive".into()));
        }
        let s = SideLengths { a, b, c };
        let perimeter = a + b + c;
        let window = T::lit(Self::RADICAND_SLACK) * perimeter.powi(4);
        if s.raw_radicand() < -window {
            return Err(Error::InvalidSides(format!(
                "triangle inequality fails: {a} + {b} < {c}"
            )));
        }
        Ok(s)
    }

    pub fn a(&self) -> T {
        self.a
    }

    pub fn b(&self) -> T {
        self.b
    }

    pub fn c(&self) -> T {
        self.c
    }

    pub fn as_array(&self) -> [T; 3] {
        [self.a, self.b, self.c]
    }

    /// Lengths divided by the longest side.
    pub fn ratios(&self) -> [T; 3] {
        [self.a / self.c, self.b / self.c, T::one()]
    }

    fn raw_radicand(&self) -> T {
        let (a, b, c) = (self.a, self.b, self.c);
        // factored Heron product, more accurate than the expanded quartic
        (a + b + c) * (b + c - a) * (a + c - b) * (a + b - c)
    }

    /// `-a^4 - b^4 - c^4 + 2(a^2 b^2 + a^2 c^2 + b^2 c^2)`, which is `16 * area^2`,
    /// clamped at zero.
    pub fn radicand(&self) -> T {
        self.raw_radicand().max(T::zero())
    }

    pub fn area(&self) -> T {
        self.radicand().sqrt() / T::lit(4.0)
    }
}

/// Angles of a nondegenerate triangle, sorted `alpha <= beta <= gamma`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AngleTriple<T> {
    alpha: T,
    beta: T,
    gamma: T,
}

impl<T: Scalar> AngleTriple<T> {
    /// Sorts the angles and checks that they are positive and sum to pi.
    pub fn new(x: T, y: T, z: T, tol: Tolerance<T>) -> Result<Self> {
        if !(x.is_finite() && y.is_finite() && z.is_finite()) {
            return Err(Error::NonFinite);
        }
        let mut v = [x, y, z];
        v.sort_by(|p, q| p.partial_cmp(q).unwrap());
        let [alpha, beta, gamma] = v;
        if alpha <= T::zero() {
            return Err(Error::DegenerateAngles(format!(
                "smallest angle must be positive, got {alpha}"
            )));
        }
        if !tol.eq(alpha + beta + gamma, T::PI()) {
            return Err(Error::DegenerateAngles(format!(
                "angles sum to {} instead of pi",
                alpha + beta + gamma
            )));
        }
        Ok(AngleTriple { alpha, beta, gamma })
    }

    /// The triple `(alpha, beta, pi - alpha - beta)`.
    pub fn from_two(alpha: T, beta: T, tol: Tolerance<T>) -> Result<Self> {
        Self::new(alpha, beta, T::PI() - alpha - beta, tol)
    }

    pub fn alpha(&self) -> T {
        self.alpha
    }

    pub fn beta(&self) -> T {
        self.beta
    }

    pub fn gamma(&self) -> T {
        self.gamma
    }

    pub fn as_array(&self) -> [T; 3] {
        [self.alpha, self.beta, self.gamma]
    }
}

/// The four triangle normal forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FormKind {
    AVertex,
    BVertex,
    CVertex,
    Circle,
}

impl FormKind {
    pub const ONE_VERTEX: [FormKind; 3] = [FormKind::AVertex, FormKind::BVertex, FormKind::CVertex];

    pub fn name(&self) -> &'static str {
        match self {
            FormKind::AVertex => "a",
            FormKind::BVertex => "b",
            FormKind::CVertex => "c",
            FormKind::Circle => "circle",
        }
    }
}

impl fmt::Display for FormKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AngleClass {
    Acute,
    Right,
    Obtuse,
    Degenerate,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SideClass {
    Equilateral,
    Isosceles,
    Scalene,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TriangleClass {
    pub angle_class: AngleClass,
    pub side_class: SideClass,
}

/// Result of a one-vertex normalization.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OneVertexForm<T> {
    pub kind: FormKind,
    /// Position of the free vertex.
    pub point: Point<T>,
    /// Similarity carrying the input triangle onto its normal form.
    pub transform: SimilarityTransform<T>,
    /// Input vertex indices placed at `(0, 0)`, at `(1, 0)` and at `point`.
    pub placement: [usize; 3],
}

/// Runs the four-step normalization for one of the one-vertex forms.
///
/// 1. translate and rotate the chosen side onto the positive x-axis
/// 2. reflect across the x-axis if the free vertex lies below it
/// 3. dilate the side to unit length
/// 4. reflect across x = 1/2 if the free vertex lies left of it
pub fn one_vertex_form<T: Scalar>(kind: FormKind, t: &Triangle<T>) -> Result<OneVertexForm<T>> {
    let [opp_a, opp_b, opp_c] = t.by_opposite_side();
    let (origin, unit, free) = match kind {
        // the longest side joins the vertices opposite a and b; either end may
        // go to the origin, step 4 takes care of the choice
        FormKind::CVertex => (opp_a.min(opp_b), opp_a.max(opp_b), opp_c),
        // median side, the longest side is incident to the origin
        FormKind::BVertex => (opp_a, opp_c, opp_b),
        // shortest side, the longest side is incident to the origin
        FormKind::AVertex => {
            if t.opposite(opp_a) == T::zero() {
                return Err(Error::UnboundedType);
            }
            (opp_b, opp_c, opp_a)
        }
        FormKind::Circle => return Err(Error::UnsupportedKind("circle")),
    };
    let v = t.vertices;
    let base = v[unit] - v[origin];
    let length = base.norm();

    let mut transform = SimilarityTransform::rotation(-base.y.atan2(base.x))
        .compose(&SimilarityTransform::translation(-v[origin]));
    let mut point = transform.apply(v[free]);

    if point.y < T::zero() {
        let flip = SimilarityTransform::reflect_x_axis();
        point = flip.apply(point);
        transform = flip.compose(&transform);
    }

    let shrink = SimilarityTransform::dilation(T::one() / length)?;
    point = shrink.apply(point);
    transform = shrink.compose(&transform);

    if point.x < T::half() {
        let flip = SimilarityTransform::reflect_half_line();
        point = flip.apply(point);
        transform = flip.compose(&transform);
    }

    Ok(OneVertexForm {
        kind,
        point,
        transform,
        placement: [origin, unit, free],
    })
}

pub fn c_normal_point<T: Scalar>(t: &Triangle<T>) -> Point<T> {
    one_vertex_form(FormKind::CVertex, t)
        .expect("C-vertex form exists for every triangle")
        .point
}

pub fn b_normal_point<T: Scalar>(t: &Triangle<T>) -> Point<T> {
    one_vertex_form(FormKind::BVertex, t)
        .expect("B-vertex form exists for every triangle")
        .point
}

/// Fails with [`Error::UnboundedType`] for side lengths `0, c, c`.
pub fn a_normal_point<T: Scalar>(t: &Triangle<T>) -> Result<Point<T>> {
    one_vertex_form(FormKind::AVertex, t).map(|f| f.point)
}

/// Normal point of `t` for any one-vertex form.
pub fn normal_point<T: Scalar>(kind: FormKind, t: &Triangle<T>) -> Result<Point<T>> {
    one_vertex_form(kind, t).map(|f| f.point)
}

/// `y >= 0, x >= 1/2, x^2 + y^2 <= 1`
pub fn in_s_c<T: Scalar>(p: Point<T>, tol: Tolerance<T>) -> bool {
    tol.ge(p.y, T::zero()) && tol.ge(p.x, T::half()) && tol.le(p.norm_sq(), T::one())
}

/// `y >= 0, x >= 1/2, x^2 + y^2 >= 1, (x - 1)^2 + y^2 <= 1`
pub fn in_s_b<T: Scalar>(p: Point<T>, tol: Tolerance<T>) -> bool {
    let shifted = p - Point::new(T::one(), T::zero());
    tol.ge(p.y, T::zero())
        && tol.ge(p.x, T::half())
        && tol.ge(p.norm_sq(), T::one())
        && tol.le(shifted.norm_sq(), T::one())
}

/// `y >= 0, x >= 1/2, (x - 1)^2 + y^2 >= 1`
pub fn in_s_a<T: Scalar>(p: Point<T>, tol: Tolerance<T>) -> bool {
    let shifted = p - Point::new(T::one(), T::zero());
    tol.ge(p.y, T::zero()) && tol.ge(p.x, T::half()) && tol.ge(shifted.norm_sq(), T::one())
}

/// Domain membership for a one-vertex form; always false for the circle form.
pub fn in_domain<T: Scalar>(kind: FormKind, p: Point<T>, tol: Tolerance<T>) -> bool {
    match kind {
        FormKind::AVertex => in_s_a(p, tol),
        FormKind::BVertex => in_s_b(p, tol),
        FormKind::CVertex => in_s_c(p, tol),
        FormKind::Circle => false,
    }
}

fn polar<T: Scalar>(angle: T) -> Point<T> {
    let (s, c) = angle.sin_cos();
    Point::new(c, s)
}

/// Interior angle at `v` of the triangle `v p q`.
pub fn angle_at<T: Scalar>(v: Point<T>, p: Point<T>, q: Point<T>) -> T {
    let u = p - v;
    let w = q - v;
    u.cross(w).abs().atan2(u.dot(w))
}

/// The normal circle triangle with the given angles, as `[A, B, C]`.
///
/// `C = (1, 0)`, `B` sits at polar angle `-2 alpha` and `A` at `2 beta` on
/// the unit circle, so the inscribed angles at `A` and `B` are `alpha` and
/// `beta`.
pub fn circle_normal_form<T: Scalar>(angles: &AngleTriple<T>) -> Result<Triangle<T>> {
    let (alpha, beta) = (angles.alpha(), angles.beta());
    if alpha <= T::zero() {
        return Err(Error::DegenerateAngles("alpha must be positive".into()));
    }
    if alpha > T::FRAC_PI_3() + T::epsilon() * T::lit(8.0)
        || beta < alpha
        || beta > (T::PI() - alpha) / T::two() + T::epsilon() * T::lit(8.0)
    {
        return Err(Error::DegenerateAngles(format!(
            "({alpha}, {beta}) outside the angle parameter domain"
        )));
    }
    let c = Point::new(T::one(), T::zero());
    let b = polar(-T::two() * alpha);
    let a = polar(T::two() * beta);
    Triangle::new(a, b, c)
}

/// Checks the defining conditions of a normal circle triangle.
///
/// The vertices may be given in any order: `C` is the vertex at `(1, 0)`,
/// `A` the one above the x-axis and `B` the one below.
pub fn is_normal_circle_triangle<T: Scalar>(t: &Triangle<T>, tol: Tolerance<T>) -> bool {
    let v = t.vertices();
    if v.iter().any(|p| !tol.eq(p.norm_sq(), T::one())) {
        return false;
    }
    let one = Point::new(T::one(), T::zero());
    let Some(ci) = (0..3).find(|&i| v[i].approx_eq(one, tol)) else {
        return false;
    };
    let (p, q) = (v[(ci + 1) % 3], v[(ci + 2) % 3]);
    let (a, b) = if p.y > q.y { (p, q) } else { (q, p) };
    if !(a.y > tol.eps() && b.y < -tol.eps()) {
        return false;
    }
    let c = v[ci];
    let alpha = angle_at(a, b, c);
    let beta = angle_at(b, a, c);
    tol.ge(alpha, T::zero())
        && tol.le(alpha, T::FRAC_PI_3())
        && tol.le(alpha, beta)
        && tol.le(beta, T::FRAC_PI_2() - alpha / T::two())
}

/// Angle and side classification read off the C-normal point.
pub fn classify<T: Scalar>(t: &Triangle<T>, tol: Tolerance<T>) -> TriangleClass {
    let p = c_normal_point(t);
    let h = T::half();
    // signed distance-squared residual to the right-angle arc R_C
    let residual = (p.x - h) * (p.x - h) + p.y * p.y - h * h;
    let angle_class = if p.y <= tol.eps() {
        AngleClass::Degenerate
    } else if residual.abs() <= tol.eps() {
        AngleClass::Right
    } else if residual < T::zero() {
        AngleClass::Obtuse
    } else {
        AngleClass::Acute
    };

    let [a, b, _] = t.side_lengths().ratios();
    let ab = tol.eq(a, b);
    let bc = tol.eq(b, T::one());
    let side_class = match (ab, bc) {
        (true, true) => SideClass::Equilateral,
        (false, false) => SideClass::Scalene,
        _ => SideClass::Isosceles,
    };
    TriangleClass {
        angle_class,
        side_class,
    }
}

/// Similarity test by comparing C-normal points.
pub fn triangles_similar<T: Scalar>(t1: &Triangle<T>, t2: &Triangle<T>, tol: Tolerance<T>) -> bool {
    distance(c_normal_point(t1), c_normal_point(t2)) <= tol.eps()
}
