//! Plane points, the dilation group, tolerances and point orderings.

use std::cmp::Ordering;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A position in the Cartesian plane.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point<T> {
    pub x: T,
    pub y: T,
}

impl<T: Scalar> Point<T> {
    pub const fn new(x: T, y: T) -> Self {
        Point { x, y }
    }

    /// Like [`Point::new`] but rejects infinities and NaN.
    pub fn try_new(x: T, y: T) -> Result<Self> {
        let p = Point { x, y };
        if p.is_finite() {
            Ok(p)
        } else {
            Err(Error::NonFinite)
        }
    }

    pub fn origin() -> Self {
        Point::new(T::zero(), T::zero())
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn norm_sq(&self) -> T {
        self.x * self.x + self.y * self.y
    }

    pub fn norm(&self) -> T {
        self.x.hypot(self.y)
    }

    pub fn dot(&self, other: Point<T>) -> T {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the 3D cross product.
    pub fn cross(&self, other: Point<T>) -> T {
        self.x * other.y - self.y * other.x
    }

    pub fn distance(&self, other: Point<T>) -> T {
        distance(*self, other)
    }

    /// Image under the reflection across the x-axis.
    pub fn mirror_x_axis(&self) -> Self {
        Point::new(self.x, -self.y)
    }

    /// Image under the reflection across the line x = 1/2.
    pub fn mirror_half_line(&self) -> Self {
        Point::new(T::one() - self.x, self.y)
    }

    /// Coordinatewise comparison within `tol`.
    pub fn approx_eq(&self, other: Point<T>, tol: Tolerance<T>) -> bool {
        tol.eq(self.x, other.x) && tol.eq(self.y, other.y)
    }
}

impl<T: Scalar> Add for Point<T> {
    type Output = Point<T>;
    fn add(self, rhs: Self) -> Self {
        Point::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl<T: Scalar> Sub for Point<T> {
    type Output = Point<T>;
    fn sub(self, rhs: Self) -> Self {
        Point::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl<T: Scalar> Mul<T> for Point<T> {
    type Output = Point<T>;
    fn mul(self, rhs: T) -> Self {
        Point::new(self.x * rhs, self.y * rhs)
    }
}

impl<T: Scalar> Neg for Point<T> {
    type Output = Point<T>;
    fn neg(self) -> Self {
        Point::new(-self.x, -self.y)
    }
}

impl<T: Scalar> From<(T, T)> for Point<T> {
    fn from((x, y): (T, T)) -> Self {
        Point::new(x, y)
    }
}

/// Euclidean distance between two points.
pub fn distance<T: Scalar>(p: Point<T>, q: Point<T>) -> T {
    (p.x - q.x).hypot(p.y - q.y)
}

/// Absolute comparison threshold for geometric predicates.
///
/// All canonical configurations live at unit scale, so an absolute
/// threshold well below one is meaningful everywhere in the crate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance<T> {
    eps: T,
}

impl<T: Scalar> Tolerance<T> {
    pub const DEFAULT_EPS: f64 = 1e-9;

    pub fn new(eps: T) -> Result<Self> {
        if !eps.is_finite() || eps <= T::zero() {
            return Err(Error::InvalidTolerance(format!(
                "eps must be positive, got {eps}"
            )));
        }
        if eps >= T::lit(1e-3) {
            return Err(Error::InvalidTolerance(format!(
                "eps must be below 1e-3, got {eps}"
            )));
        }
        Ok(Tolerance { eps })
    }

    pub fn eps(&self) -> T {
        self.eps
    }

    pub fn eq(&self, a: T, b: T) -> bool {
        (a - b).abs() <= self.eps
    }

    pub fn is_zero(&self, a: T) -> bool {
        a.abs() <= self.eps
    }

    /// `a <= b` relaxed by eps.
    pub fn le(&self, a: T, b: T) -> bool {
        a <= b + self.eps
    }

    /// `a >= b` relaxed by eps.
    pub fn ge(&self, a: T, b: T) -> bool {
        a + self.eps >= b
    }

    /// Three-way comparison that reports `Equal` within eps.
    pub fn cmp(&self, a: T, b: T) -> Ordering {
        if self.eq(a, b) {
            Ordering::Equal
        } else if a < b {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }
}

impl<T: Scalar> Default for Tolerance<T> {
    /// 1e-9, raised to a small multiple of machine epsilon for `f32`.
    fn default() -> Self {
        let eps = T::lit(Self::DEFAULT_EPS).max(T::epsilon() * T::lit(16.0));
        Tolerance { eps }
    }
}

/// An element of the dilation group of the plane, stored factored.
///
/// `apply` maps `p` to `translation + scale * R(rotation) * F(p)` where `F`
/// is the reflection across the x-axis when `reflect` is set. The scale is
/// kept positive: a negative dilation coefficient is absorbed into the
/// rotation as a half turn.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimilarityTransform<T> {
    scale: T,
    rotation: T,
    reflect: bool,
    translation: Point<T>,
    cos: T,
    sin: T,
}

impl<T: Scalar> SimilarityTransform<T> {
    pub fn new(scale: T, rotation: T, reflect: bool, translation: Point<T>) -> Result<Self> {
        if !scale.is_finite() || !rotation.is_finite() || !translation.is_finite() {
            return Err(Error::NonFinite);
        }
        if scale == T::zero() {
            return Err(Error::ZeroScale);
        }
        let (scale, rotation) = if scale < T::zero() {
            (-scale, rotation + T::PI())
        } else {
            (scale, rotation)
        };
        Ok(Self::from_parts(scale, rotation, reflect, translation))
    }

    fn from_parts(scale: T, rotation: T, reflect: bool, translation: Point<T>) -> Self {
        let rotation = normalize_angle(rotation);
        let (sin, cos) = exact_sin_cos(rotation);
        SimilarityTransform {
            scale,
            rotation,
            reflect,
            translation,
            cos,
            sin,
        }
    }

    pub fn identity() -> Self {
        Self::from_parts(T::one(), T::zero(), false, Point::origin())
    }

    pub fn translation(offset: Point<T>) -> Self {
        Self::from_parts(T::one(), T::zero(), false, offset)
    }

    pub fn rotation(angle: T) -> Self {
        Self::from_parts(T::one(), angle, false, Point::origin())
    }

    pub fn dilation(scale: T) -> Result<Self> {
        Self::new(scale, T::zero(), false, Point::origin())
    }

    /// Reflection across the x-axis.
    pub fn reflect_x_axis() -> Self {
        Self::from_parts(T::one(), T::zero(), true, Point::origin())
    }

    /// Reflection across the vertical line x = 1/2.
    pub fn reflect_half_line() -> Self {
        Self::from_parts(T::one(), T::PI(), true, Point::new(T::one(), T::zero()))
    }

    pub fn scale(&self) -> T {
        self.scale
    }

    /// Rotation angle in radians, normalized to (-pi, pi].
    pub fn angle(&self) -> T {
        self.rotation
    }

    pub fn reflects(&self) -> bool {
        self.reflect
    }

    pub fn offset(&self) -> Point<T> {
        self.translation
    }

    /// True for orientation-preserving (direct) similarities.
    pub fn is_direct(&self) -> bool {
        !self.reflect
    }

    fn linear(&self, p: Point<T>) -> Point<T> {
        let q = if self.reflect { p.mirror_x_axis() } else { p };
        Point::new(
            self.scale * (self.cos * q.x - self.sin * q.y),
            self.scale * (self.sin * q.x + self.cos * q.y),
        )
    }

    pub fn apply(&self, p: Point<T>) -> Point<T> {
        self.linear(p) + self.translation
    }

    /// `self ∘ inner`: first `inner`, then `self`.
    pub fn compose(&self, inner: &SimilarityTransform<T>) -> SimilarityTransform<T> {
        // F R(t) = R(-t) F
        let rotation = if self.reflect {
            self.rotation - inner.rotation
        } else {
            self.rotation + inner.rotation
        };
        Self::from_parts(
            self.scale * inner.scale,
            rotation,
            self.reflect != inner.reflect,
            self.apply(inner.translation),
        )
    }

    pub fn inverse(&self) -> SimilarityTransform<T> {
        let scale = T::one() / self.scale;
        let rotation = if self.reflect {
            self.rotation
        } else {
            -self.rotation
        };
        let linear = Self::from_parts(scale, rotation, self.reflect, Point::origin());
        let translation = -linear.apply(self.translation);
        Self::from_parts(scale, rotation, self.reflect, translation)
    }
}

fn normalize_angle<T: Scalar>(a: T) -> T {
    let two_pi = T::TAU();
    let mut r = a % two_pi;
    if r <= -T::PI() {
        r = r + two_pi;
    } else if r > T::PI() {
        r = r - two_pi;
    }
    r
}

/// sin/cos with exact values at multiples of a quarter turn.
fn exact_sin_cos<T: Scalar>(a: T) -> (T, T) {
    let quarter = a / T::FRAC_PI_2();
    let k = quarter.round();
    if (quarter - k).abs() <= T::epsilon() * T::lit(4.0) {
        let k = k.to_i64().unwrap_or(0).rem_euclid(4);
        let (s, c) = match k {
            0 => (0.0, 1.0),
            1 => (1.0, 0.0),
            2 => (0.0, -1.0),
            _ => (-1.0, 0.0),
        };
        (T::lit(s), T::lit(c))
    } else {
        a.sin_cos()
    }
}

/// The similarity sending `p1 -> q1` and `p2 -> q2`.
///
/// With `reflect` set the result is orientation-reversing, otherwise direct.
pub fn similarity_from_segment<T: Scalar>(
    p1: Point<T>,
    p2: Point<T>,
    q1: Point<T>,
    q2: Point<T>,
    reflect: bool,
    tol: Tolerance<T>,
) -> Result<SimilarityTransform<T>> {
    let (s1, s2) = if reflect {
        (p1.mirror_x_axis(), p2.mirror_x_axis())
    } else {
        (p1, p2)
    };
    let from = s2 - s1;
    let to = q2 - q1;
    let from_len = from.norm();
    let to_len = to.norm();
    if from_len <= tol.eps() * T::one().max(p1.norm().max(p2.norm()))
        || to_len <= tol.eps() * T::one().max(q1.norm().max(q2.norm()))
    {
        return Err(Error::DegenerateSegment);
    }
    let rotation = to.y.atan2(to.x) - from.y.atan2(from.x);
    let linear =
        SimilarityTransform::from_parts(to_len / from_len, rotation, reflect, Point::origin());
    let translation = q1 - linear.apply(p1);
    Ok(SimilarityTransform::from_parts(
        linear.scale,
        linear.rotation,
        reflect,
        translation,
    ))
}

/// Strict lexicographic order on exact coordinates.
pub fn lex_less<T: Scalar>(p: Point<T>, q: Point<T>) -> bool {
    p.x < q.x || (p.x == q.x && p.y < q.y)
}

/// Lexicographic comparison where coordinates within `tol` count as equal.
pub fn lex_cmp_tol<T: Scalar>(p: Point<T>, q: Point<T>, tol: Tolerance<T>) -> Ordering {
    tol.cmp(p.x, q.x).then_with(|| tol.cmp(p.y, q.y))
}

/// `p_s`: image of `p` in the region `x >= 1/2, y >= 0` under reflections
/// across the x-axis and the line x = 1/2.
pub fn reflect_normalize<T: Scalar>(p: Point<T>) -> Point<T> {
    let x = if p.x >= T::half() {
        p.x
    } else {
        T::one() - p.x
    };
    Point::new(x, p.y.abs())
}

/// `p ⊴ q`: `p_s ≺ q_s` or `p_s = q_s`.
pub fn quasilex_leq<T: Scalar>(p: Point<T>, q: Point<T>) -> bool {
    let ps = reflect_normalize(p);
    let qs = reflect_normalize(q);
    lex_less(ps, qs) || ps == qs
}

/// `[p, q] ⊴ [p2, q2]`: `p_s ≺ p2_s`, or `p_s = p2_s` and `q ⊴ q2`.
pub fn quasilex_pair_leq<T: Scalar>(pq: (Point<T>, Point<T>), other: (Point<T>, Point<T>)) -> bool {
    let ps = reflect_normalize(pq.0);
    let os = reflect_normalize(other.0);
    lex_less(ps, os) || (ps == os && quasilex_leq(pq.1, other.1))
}

/// Quasilexicographic comparison with ties detected within `tol`.
pub fn quasilex_cmp_tol<T: Scalar>(p: Point<T>, q: Point<T>, tol: Tolerance<T>) -> Ordering {
    lex_cmp_tol(reflect_normalize(p), reflect_normalize(q), tol)
}

/// Pair version of [`quasilex_cmp_tol`].
pub fn quasilex_pair_cmp_tol<T: Scalar>(
    pq: (Point<T>, Point<T>),
    other: (Point<T>, Point<T>),
    tol: Tolerance<T>,
) -> Ordering {
    quasilex_cmp_tol(pq.0, other.0, tol).then_with(|| quasilex_cmp_tol(pq.1, other.1, tol))
}
