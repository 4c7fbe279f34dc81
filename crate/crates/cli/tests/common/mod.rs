#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use shapenorm::{
    similarity_from_segment, Point64 as P, Quadrilateral64, SimilarityTransform64, Tolerance,
    Triangle64,
};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn point(rng: &mut impl Rng, half_width: f64) -> P {
    P::new(
        rng.gen_range(-half_width..half_width),
        rng.gen_range(-half_width..half_width),
    )
}

/// Random similarity with log-uniform scale in [1e-3, 1e3].
pub fn transform(rng: &mut impl Rng) -> SimilarityTransform64 {
    let scale = 10f64.powf(rng.gen_range(-3.0..3.0));
    let rotation = rng.gen_range(-std::f64::consts::PI..std::f64::consts::PI);
    SimilarityTransform64::new(scale, rotation, rng.gen_bool(0.5), point(rng, 100.0)).unwrap()
}

pub fn generic_triangle(rng: &mut impl Rng) -> Triangle64 {
    loop {
        let t = Triangle64::new(point(rng, 10.0), point(rng, 10.0), point(rng, 10.0));
        if let Ok(t) = t {
            return t;
        }
    }
}

/// Directions with integer length, so collinear points along them have
/// exactly representable distances.
const PYTHAGOREAN: [(f64, f64); 8] = [
    (1.0, 0.0),
    (0.0, 1.0),
    (3.0, 4.0),
    (-4.0, 3.0),
    (5.0, 12.0),
    (12.0, -5.0),
    (8.0, 15.0),
    (-15.0, -8.0),
];

/// Exactly collinear triangle; with `repeat` two vertices coincide.
pub fn collinear_triangle(rng: &mut impl Rng, repeat: bool) -> Triangle64 {
    let (dx, dy) = *PYTHAGOREAN.choose(rng).unwrap();
    let base = P::new(
        rng.gen_range(-20..=20) as f64,
        rng.gen_range(-20..=20) as f64,
    );
    loop {
        let mut k: [i32; 3] = [
            rng.gen_range(-6..=6),
            rng.gen_range(-6..=6),
            rng.gen_range(-6..=6),
        ];
        if repeat {
            k[2] = k[rng.gen_range(0..2)];
        }
        let distinct = (k[0] != k[1]) as u8 + (k[1] != k[2]) as u8 + (k[0] != k[2]) as u8;
        if (repeat && distinct == 2) || (!repeat && distinct == 3) {
            let pts = k.map(|m| P::new(base.x + m as f64 * dx, base.y + m as f64 * dy));
            return Triangle64::from_vertices(pts).unwrap();
        }
    }
}

/// Mostly generic triangles with ~10% collinear and ~5% repeated-vertex cases.
pub fn mixed_triangle(rng: &mut impl Rng) -> Triangle64 {
    let r: f64 = rng.gen();
    if r < 0.10 {
        collinear_triangle(rng, false)
    } else if r < 0.15 {
        collinear_triangle(rng, true)
    } else {
        generic_triangle(rng)
    }
}

pub fn permute3(t: &Triangle64, rng: &mut impl Rng) -> Triangle64 {
    let mut v = t.vertices();
    v.shuffle(rng);
    Triangle64::from_vertices(v).unwrap()
}

pub fn random_perm4(rng: &mut impl Rng) -> [usize; 4] {
    let mut p = [0, 1, 2, 3];
    p.shuffle(rng);
    p
}

pub fn quad(p: [(f64, f64); 4]) -> Quadrilateral64 {
    Quadrilateral64::new(p.map(P::from)).unwrap()
}

/// Quadrilaterals rich in symmetric ties plus generic ones.
pub fn mixed_quad(rng: &mut impl Rng) -> Quadrilateral64 {
    let w: f64 = rng.gen_range(0.2..3.0);
    let h: f64 = rng.gen_range(0.2..3.0);
    match rng.gen_range(0..10) {
        0 => quad([(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]),
        1 => quad([(0.0, 0.0), (w, 0.0), (w, h), (0.0, h)]),
        // rhombus
        2 => quad([(-w, 0.0), (0.0, h), (w, 0.0), (0.0, -h)]),
        // isosceles trapezoid
        3 => quad([(-2.0, 0.0), (2.0, 0.0), (w, h), (-w, h)]),
        // kite
        4 => quad([(0.0, 0.0), (1.0, h), (3.0, 0.0), (1.0, -h)]),
        // collinear
        5 => quad([(0.0, 0.0), (w, 0.0), (2.0 * w, 0.0), (h, 0.0)]),
        // repeated points
        6 => {
            let p = point(rng, 5.0);
            let q = point(rng, 5.0);
            let r = point(rng, 5.0);
            Quadrilateral64::new([p, q, p, r]).unwrap()
        }
        7 => {
            let p = point(rng, 5.0);
            let q = point(rng, 5.0);
            Quadrilateral64::new([p, q, p, q]).unwrap()
        }
        _ => loop {
            let q = Quadrilateral64::new([
                point(rng, 10.0),
                point(rng, 10.0),
                point(rng, 10.0),
                point(rng, 10.0),
            ]);
            if let Ok(q) = q {
                break q;
            }
        },
    }
}

fn permutations4() -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let p = [a, b, c, d];
                    let mut seen = [false; 4];
                    p.iter().for_each(|&i| seen[i] = true);
                    if seen.iter().all(|&s| s) {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}

fn diameter(v: &[P; 4]) -> f64 {
    let mut d: f64 = 0.0;
    for i in 0..4 {
        for j in 0..4 {
            d = d.max(v[i].distance(v[j]));
        }
    }
    d
}

/// Brute-force similarity test: every pair of vertex orderings, every
/// orientation, fit on the longest corresponded segment and check all four
/// points land within `rel_tol` times the target diameter.
pub fn brute_force_similar(q1: &Quadrilateral64, q2: &Quadrilateral64, rel_tol: f64) -> bool {
    let perms = permutations4();
    let tol = Tolerance::new(1e-12).unwrap();
    for s in &perms {
        let a = q1.permuted(*s).vertices();
        // longest segment of the source ordering
        let (mut bi, mut bj, mut best) = (0, 1, -1.0);
        for i in 0..4 {
            for j in i + 1..4 {
                let d = a[i].distance(a[j]);
                if d > best {
                    best = d;
                    bi = i;
                    bj = j;
                }
            }
        }
        for t in &perms {
            let b = q2.permuted(*t).vertices();
            let limit = rel_tol * diameter(&b);
            for reflect in [false, true] {
                let Ok(g) = similarity_from_segment(a[bi], a[bj], b[bi], b[bj], reflect, tol)
                else {
                    continue;
                };
                if (0..4).all(|k| g.apply(a[k]).distance(b[k]) <= limit) {
                    return true;
                }
            }
        }
    }
    false
}
