//! Closed-form conversions between side lengths, angles and normal points.

use crate::error::{Error, Result};
use crate::geometry::{Point, Tolerance};
use crate::scalar::Scalar;
use crate::triangle::{in_domain, AngleTriple, FormKind, SideLengths};

/// Angles recovered from a normal point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum AngleReading<T> {
    Proper(AngleTriple<T>),
    /// The point lies on y = 0: a collinear triangle has no valid angle triple.
    Degenerate,
}

impl<T: Scalar> AngleReading<T> {
    pub fn proper(self) -> Option<AngleTriple<T>> {
        match self {
            AngleReading::Proper(a) => Some(a),
            AngleReading::Degenerate => None,
        }
    }
}

/// `N_C`, `N_B` or `N_A` evaluated on sorted side lengths.
///
/// ```text
/// N_C = ((-a^2 + b^2 + c^2) / 2c^2, sqrt(R) / 2c^2)
/// N_B = ((-a^2 + b^2 + c^2) / 2b^2, sqrt(R) / 2b^2)
/// N_A = (( a^2 - b^2 + c^2) / 2a^2, sqrt(R) / 2a^2)
/// ```
///
/// where `R` is the Heron radicand `-a^4 - b^4 - c^4 + 2(a^2 b^2 + a^2 c^2 + b^2 c^2)`.
pub fn normal_point_from_sides<T: Scalar>(kind: FormKind, s: &SideLengths<T>) -> Result<Point<T>> {
    let (a, b, c) = (s.a(), s.b(), s.c());
    let (a2, b2, c2) = (a * a, b * b, c * c);
    let root = s.radicand().sqrt();
    let two = T::two();
    let (numerator, base2) = match kind {
        FormKind::CVertex => (-a2 + b2 + c2, c2),
        FormKind::BVertex => (-a2 + b2 + c2, b2),
        FormKind::AVertex => {
            if a == T::zero() {
                return Err(Error::UnboundedType);
            }
            (a2 - b2 + c2, a2)
        }
        FormKind::Circle => return Err(Error::UnsupportedKind("circle")),
    };
    Ok(Point::new(numerator / (two * base2), root / (two * base2)))
}

/// Side lengths proportional to the sines of the angles (law of sines).
pub fn sides_from_angles<T: Scalar>(ang: &AngleTriple<T>) -> Result<SideLengths<T>> {
    let [alpha, beta, gamma] = ang.as_array();
    let sg = gamma.sin();
    SideLengths::new(alpha.sin() / sg, beta.sin() / sg, T::one())
}

/// Normal point of the triangle with the given angles.
///
/// Evaluated in polar form around the origin vertex, with the distance from
/// the law of sines:
///
/// ```text
/// N_C = (1, 0) + sin(alpha) / sin(gamma) * (-cos beta,  sin beta)
/// N_B = (1, 0) + sin(alpha) / sin(beta)  * (-cos gamma, sin gamma)
/// N_A = sin(gamma) / sin(alpha) * (cos beta, sin beta)
/// ```
///
/// N_C and N_B are written around the unit vertex since for thin triangles
/// the point sits close to `(1, 0)` and only a single rounding should land
/// on `x`.
/// Going through side lengths instead loses digits to the `c^2 - b^2`
/// cancellation when alpha is tiny.
pub fn normal_point_from_angles<T: Scalar>(
    kind: FormKind,
    ang: &AngleTriple<T>,
) -> Result<Point<T>> {
    let [alpha, beta, gamma] = ang.as_array();
    let around_unit = |r: T, angle: T| {
        let (s, c) = angle.sin_cos();
        Ok(Point::new(T::one() - r * c, r * s))
    };
    let (radius, direction) = match kind {
        FormKind::CVertex => return around_unit(alpha.sin() / gamma.sin(), beta),
        FormKind::BVertex => return around_unit(alpha.sin() / beta.sin(), gamma),
        FormKind::AVertex => {
            if alpha.sin() <= T::zero() {
                return Err(Error::DegenerateAngles("sin(alpha) vanishes".into()));
            }
            (gamma.sin() / alpha.sin(), beta)
        }
        FormKind::Circle => return Err(Error::UnsupportedKind("circle")),
    };
    let (s, c) = direction.sin_cos();
    Ok(Point::new(radius * c, radius * s))
}

/// Angles of the triangle whose normal point of the given kind is `p`.
///
/// The angle at the origin is `atan2(y, x)` and the angle at `(1, 0)` is
/// `atan2(y, 1 - x)`; which of the sorted angles they are depends on the
/// form: `(alpha, gamma)` for the B form, `(beta, gamma)` for the A form
/// and `(alpha, beta)` for the C form.
pub fn angles_from_normal_point<T: Scalar>(
    kind: FormKind,
    p: Point<T>,
    tol: Tolerance<T>,
) -> Result<AngleReading<T>> {
    if kind == FormKind::Circle {
        return Err(Error::UnsupportedKind("circle"));
    }
    if !p.is_finite() {
        return Err(Error::NonFinite);
    }
    if !in_domain(kind, p, tol) {
        return Err(Error::OutOfDomain(format!(
            "({}, {}) is not in S_{}",
            p.x,
            p.y,
            kind.name().to_uppercase()
        )));
    }
    if p.y <= tol.eps() {
        return Ok(AngleReading::Degenerate);
    }
    let at_origin = p.y.atan2(p.x);
    let at_unit = p.y.atan2(T::one() - p.x);
    let third = T::PI() - at_origin - at_unit;
    AngleTriple::new(at_origin, at_unit, third, tol).map(AngleReading::Proper)
}

/// Angles from side lengths by the law of cosines.
///
/// The angle opposite `a` is `atan2(sqrt(R), b^2 + c^2 - a^2)`: the cosine
/// numerator against twice the doubled area, both over `2bc`.
pub fn angles_from_sides<T: Scalar>(
    s: &SideLengths<T>,
    tol: Tolerance<T>,
) -> Result<AngleTriple<T>> {
    let (a, b, c) = (s.a(), s.b(), s.c());
    if a <= tol.eps() * c {
        return Err(Error::Degenerate(format!("shortest side {a} vanishes")));
    }
    if a + b - c <= tol.eps() * c {
        return Err(Error::Degenerate(format!("{a} + {b} = {c}")));
    }
    let root = s.radicand().sqrt();
    let opposite = |x: T, y: T, z: T| root.atan2(y * y + z * z - x * x);
    let alpha = opposite(a, b, c);
    let beta = opposite(b, a, c);
    let gamma = opposite(c, a, b);
    AngleTriple::new(alpha, beta, gamma, tol)
}

/// Side lengths (scaled so the unit segment has length one) of the triangle
/// spanned by `(0, 0)`, `(1, 0)` and `p`.
pub fn sides_from_normal_point<T: Scalar>(p: Point<T>) -> Result<SideLengths<T>> {
    SideLengths::new(
        T::one(),
        p.norm(),
        (p - Point::new(T::one(), T::zero())).norm(),
    )
}
