//! Longest-distance normal form of four-point multisets.
//!
//! A pair of points at maximal distance is mapped onto `A = (0, 0)`,
//! `B = (1, 0)`. Of the two remaining points the quasilexicographically
//! larger one is reflected into `S_C` and becomes `C`; the other one is `D`.
//! When several placements qualify, the one whose pair `[C, D]` is largest
//! in the quasilexicographic order wins.

use crate::error::{Error, Result};
use crate::geometry::{
    reflect_normalize, similarity_from_segment, Point, SimilarityTransform, Tolerance,
};
use crate::scalar::Scalar;
use crate::triangle::in_s_c;

/// A multiset of four points with at least two distinct elements.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quadrilateral<T> {
    vertices: [Point<T>; 4],
}

impl<T: Scalar> Quadrilateral<T> {
    pub fn new(vertices: [Point<T>; 4]) -> Result<Self> {
        if vertices.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite);
        }
        if vertices.iter().all(|v| *v == vertices[0]) {
            return Err(Error::DegenerateQuad(
                "all four points coincide".to_string(),
            ));
        }
        Ok(Quadrilateral { vertices })
    }

    pub fn vertices(&self) -> [Point<T>; 4] {
        self.vertices
    }

    pub fn transformed(&self, t: &SimilarityTransform<T>) -> Self {
        Quadrilateral {
            vertices: self.vertices.map(|v| t.apply(v)),
        }
    }

    /// The same multiset listed in the order `perm`.
    pub fn permuted(&self, perm: [usize; 4]) -> Self {
        Quadrilateral {
            vertices: perm.map(|i| self.vertices[i]),
        }
    }
}

/// Canonical placement `A = (0, 0)`, `B = (1, 0)`, `C`, `D`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadNormalForm<T> {
    pub c: Point<T>,
    pub d: Point<T>,
}

impl<T: Scalar> QuadNormalForm<T> {
    pub fn vertices(&self) -> [Point<T>; 4] {
        [
            Point::origin(),
            Point::new(T::one(), T::zero()),
            self.c,
            self.d,
        ]
    }

    pub fn approx_eq(&self, other: &QuadNormalForm<T>, tol: Tolerance<T>) -> bool {
        self.c.approx_eq(other.c, tol) && self.d.approx_eq(other.d, tol)
    }
}

/// Membership of `p` in `S_D(c)`.
pub fn in_s_d<T: Scalar>(p: Point<T>, c: Point<T>, tol: Tolerance<T>) -> bool {
    let one = T::one();
    let h = T::half();
    let dx = (p.x - h).abs();
    let cx = (c.x - h).abs();
    let within_unit = tol.le(p.norm_sq(), one)
        && tol.le((p - Point::new(one, T::zero())).norm_sq(), one)
        && tol.le((p - c).norm_sq(), one);
    let dominated = tol.le(dx, cx) && (!tol.eq(dx, cx) || tol.le(p.y.abs(), c.y.abs()));
    within_unit && dominated
}

#[derive(Debug, Clone, Copy)]
struct Candidate<T> {
    c: Point<T>,
    d: Point<T>,
}

impl<T: Scalar> Candidate<T> {
    /// Selection keys in priority order: `C`, `D_s`, then `D` itself.
    fn key(&self, i: usize) -> T {
        let ds = reflect_normalize(self.d);
        match i {
            0 => self.c.x,
            1 => self.c.y,
            2 => ds.x,
            3 => ds.y,
            4 => self.d.x,
            _ => self.d.y,
        }
    }
}

fn reflections<T: Scalar>(p: Point<T>) -> [Point<T>; 4] {
    [
        p,
        p.mirror_x_axis(),
        p.mirror_half_line(),
        p.mirror_half_line().mirror_x_axis(),
    ]
}

/// All placements of `q` with a maximal pair on the unit segment and the
/// designated `C` in the closed quadrant `x >= 1/2, y >= 0`.
fn candidates<T: Scalar>(q: &Quadrilateral<T>, tol: Tolerance<T>) -> Result<Vec<Candidate<T>>> {
    let v = q.vertices;
    let pairs: Vec<(usize, usize)> = (0..4)
        .flat_map(|i| (i + 1..4).map(move |j| (i, j)))
        .collect();
    let dist: Vec<T> = pairs.iter().map(|&(i, j)| v[i].distance(v[j])).collect();
    let dmax = dist.iter().copied().fold(T::zero(), T::max);
    if dmax <= T::zero() {
        return Err(Error::DegenerateQuad(
            "fewer than two distinct points".into(),
        ));
    }
    let threshold = dmax * (T::one() - tol.eps());
    let a = Point::origin();
    let b = Point::new(T::one(), T::zero());
    let h = T::half();

    let mut out = Vec::new();
    for (&(i, j), &d) in pairs.iter().zip(&dist) {
        if d < threshold {
            continue;
        }
        let rest: Vec<usize> = (0..4).filter(|&k| k != i && k != j).collect();
        for (o, u) in [(i, j), (j, i)] {
            let place = similarity_from_segment(v[o], v[u], a, b, false, tol)?;
            let p = place.apply(v[rest[0]]);
            let r = place.apply(v[rest[1]]);
            for (c, d) in [(p, r), (r, p)] {
                for (gc, gd) in reflections(c).into_iter().zip(reflections(d)) {
                    if tol.ge(gc.x, h) && tol.ge(gc.y, T::zero()) {
                        out.push(Candidate { c: gc, d: gd });
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Keeps the candidates that are maximal key by key, ties within `tol`.
///
/// Filtering against the running maximum makes the choice independent of
/// the order in which candidates were produced.
fn select_max<T: Scalar>(mut cands: Vec<Candidate<T>>, tol: Tolerance<T>) -> Candidate<T> {
    for key in 0..6 {
        let best = cands
            .iter()
            .map(|c| c.key(key))
            .fold(T::neg_infinity(), T::max);
        cands.retain(|c| c.key(key) >= best - tol.eps());
    }
    cands[0]
}

/// Longest-distance normal form of `q`.
pub fn normalize_quad<T: Scalar>(
    q: &Quadrilateral<T>,
    tol: Tolerance<T>,
) -> Result<QuadNormalForm<T>> {
    let cands = candidates(q, tol)?;
    if cands.is_empty() {
        // every placement puts one of the remaining points in the quadrant
        return Err(Error::DegenerateQuad("no admissible placement".into()));
    }
    let best = select_max(cands, tol);
    Ok(QuadNormalForm {
        c: reflect_normalize(best.c),
        d: best.d,
    })
}

/// Similarity test by comparing longest-distance normal forms.
pub fn quads_similar<T: Scalar>(
    q1: &Quadrilateral<T>,
    q2: &Quadrilateral<T>,
    tol: Tolerance<T>,
) -> Result<bool> {
    Ok(normalize_quad(q1, tol)?.approx_eq(&normalize_quad(q2, tol)?, tol))
}

/// Number of quadrilateral similarity types `A B C D'` where `D'` runs over
/// the images of `d` under the reflections across the x-axis and x = 1/2,
/// given `c_s = d_s`.
///
/// This is the size of the reflection orbit of `c`: 1 at `(1/2, 0)`, 2 when
/// `c` lies on x = 1/2 (so `|AC| = |BC|`) or on the x-axis, 4 otherwise.
pub fn reflection_orbit_type_count<T: Scalar>(
    c: Point<T>,
    d: Point<T>,
    tol: Tolerance<T>,
) -> Result<u8> {
    if !reflect_normalize(c).approx_eq(reflect_normalize(d), tol) {
        return Err(Error::PreconditionViolated(format!(
            "C_s != D_s for C = ({}, {}), D = ({}, {})",
            c.x, c.y, d.x, d.y
        )));
    }
    if !in_s_c(c, tol) {
        return Err(Error::PreconditionViolated(format!(
            "C = ({}, {}) is not in S_C",
            c.x, c.y
        )));
    }
    let on_half_line = tol.eq(c.x, T::half());
    let on_axis = tol.is_zero(c.y);
    Ok(match (on_half_line, on_axis) {
        (true, true) => 1,
        (true, false) | (false, true) => 2,
        (false, false) => 4,
    })
}
