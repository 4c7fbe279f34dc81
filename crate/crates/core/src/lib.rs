//! Canonical representatives of plane triangles and quadrilaterals up to
//! similarity.
//!
//! Every type is generic over the coordinate scalar (`f32` or `f64`); the
//! `*64` and `*32` aliases below fix the common choices.
//!
//! ```
//! use shapenorm::{c_normal_point, Point64, Triangle64};
//!
//! let t = Triangle64::new(Point64::new(0.0, 0.0), Point64::new(3.0, 0.0), Point64::new(3.0, 4.0)).unwrap();
//! let p = c_normal_point(&t);
//! assert!((p.x - 0.64).abs() < 1e-12 && (p.y - 0.48).abs() < 1e-12);
//! ```

pub mod conversions;
pub mod error;
pub mod geometry;
pub mod quad;
pub mod scalar;
pub mod triangle;

pub use conversions::{
    angles_from_normal_point, angles_from_sides, normal_point_from_angles, normal_point_from_sides,
    sides_from_angles, sides_from_normal_point, AngleReading,
};
pub use error::{Error, Result};
pub use geometry::{
    distance, lex_cmp_tol, lex_less, quasilex_cmp_tol, quasilex_leq, quasilex_pair_cmp_tol,
    quasilex_pair_leq, reflect_normalize, similarity_from_segment, Point, SimilarityTransform,
    Tolerance,
};
pub use quad::{
    in_s_d, normalize_quad, quads_similar, reflection_orbit_type_count, QuadNormalForm,
    Quadrilateral,
};
pub use scalar::Scalar;
pub use triangle::{
    a_normal_point, angle_at, b_normal_point, c_normal_point, circle_normal_form, classify,
    in_domain, in_s_a, in_s_b, in_s_c, is_normal_circle_triangle, normal_point, one_vertex_form,
    triangles_similar, AngleClass, AngleTriple, FormKind, OneVertexForm, SideClass, SideLengths,
    Triangle, TriangleClass,
};

pub type Point64 = Point<f64>;
pub type Point32 = Point<f32>;
pub type Tolerance64 = Tolerance<f64>;
pub type SimilarityTransform64 = SimilarityTransform<f64>;
pub type Triangle64 = Triangle<f64>;
pub type Triangle32 = Triangle<f32>;
pub type SideLengths64 = SideLengths<f64>;
pub type AngleTriple64 = AngleTriple<f64>;
pub type Quadrilateral64 = Quadrilateral<f64>;
pub type Quadrilateral32 = Quadrilateral<f32>;
pub type QuadNormalForm64 = QuadNormalForm<f64>;
