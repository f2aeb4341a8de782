#![allow(dead_code)]

use std::f64::consts::{PI, TAU};

use ncoons::{BezierCurve, BoundaryLoop, DomainPolygon, Point2, Point3};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A star-shaped loop around the z axis with jittered corners and random
/// interior control points of the given degree.
pub fn random_loop(rng: &mut impl Rng, n: usize, degree: usize) -> BoundaryLoop {
    let corners: Vec<Point3> = (0..n)
        .map(|k| {
            let a = PI / 2.0 + TAU * (k as f64 + rng.gen_range(-0.2..0.2)) / n as f64;
            let r = rng.gen_range(0.8..1.2);
            Point3::new(r * a.cos(), r * a.sin(), rng.gen_range(-0.5..0.5))
        })
        .collect();
    let curves = (0..n)
        .map(|k| {
            let a = corners[k];
            let b = corners[(k + 1) % n];
            // offsets scale with the chord so short sides stay tame
            let amp = 0.25 * a.distance(b);
            let mut pts = vec![a];
            for j in 1..degree {
                let base = a.lerp(b, j as f64 / degree as f64);
                pts.push(
                    base + Point3::new(
                        rng.gen_range(-amp..amp),
                        rng.gen_range(-amp..amp),
                        rng.gen_range(-amp..amp),
                    ),
                );
            }
            pts.push(b);
            BezierCurve::new(pts).unwrap()
        })
        .collect();
    BoundaryLoop::new(curves, None).unwrap()
}

/// Same as [`random_loop`] with every control point in the `z = 0` plane.
pub fn random_planar_loop(rng: &mut impl Rng, n: usize, degree: usize) -> BoundaryLoop {
    let l = random_loop(rng, n, degree);
    l.map_points(|p| Point3::new(p.x, p.y, 0.0)).unwrap()
}

/// A planar loop in `z = 0` whose concatenated control polygon is strictly
/// convex and turns by at least half the regular exterior angle at every
/// corner. Corners close to a straight angle make the parameterization
/// nearly singular there, which is a property of any C0 blend.
pub fn random_convex_planar_loop(rng: &mut impl Rng, n: usize, degree: usize) -> BoundaryLoop {
    loop {
        let corners: Vec<Point3> = (0..n)
            .map(|k| {
                let a = PI / 2.0 + TAU * (k as f64 + rng.gen_range(-0.15..0.15)) / n as f64;
                let r = rng.gen_range(0.9..1.1);
                Point3::new(r * a.cos(), r * a.sin(), 0.0)
            })
            .collect();
        let mut polygon = Vec::new();
        let curves: Vec<BezierCurve> = (0..n)
            .map(|k| {
                let a = corners[k];
                let b = corners[(k + 1) % n];
                let chord = b - a;
                let outward = Point3::new(chord.y, -chord.x, 0.0);
                let bulge = rng.gen_range(0.0..0.2);
                let mut pts = vec![a];
                for j in 1..degree {
                    let t = j as f64 / degree as f64;
                    let shape = 4.0 * t * (1.0 - t);
                    pts.push(a.lerp(b, t) + outward * (bulge * shape * rng.gen_range(0.8..1.0)));
                }
                pts.push(b);
                polygon.extend_from_slice(&pts[..degree]);
                BezierCurve::new(pts).unwrap()
            })
            .collect();
        let m = polygon.len();
        // signed turning angle of the control polygon at vertex j
        let turn = |j: usize| {
            let e0 = polygon[j] - polygon[(j + m - 1) % m];
            let e1 = polygon[(j + 1) % m] - polygon[j];
            (e0.x * e1.y - e0.y * e1.x).atan2(e0.dot(e1))
        };
        let convex = (0..m).all(|k| turn(k) > 1e-6);
        let sharp = (0..n).all(|k| turn(k * degree) >= 0.5 * TAU / n as f64);
        if convex && sharp {
            return BoundaryLoop::new(curves, None).unwrap();
        }
    }
}

/// Uniform point strictly inside the domain polygon (rejection sampling).
pub fn random_interior_point(rng: &mut impl Rng, domain: &DomainPolygon) -> Point2 {
    loop {
        let q = Point2::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        if domain.boundary_distance(q) > 1e-9 {
            return q;
        }
    }
}

/// A random invertible affine map `x -> A x + b`.
pub fn random_affine(rng: &mut impl Rng) -> impl Fn(Point3) -> Point3 + Clone {
    loop {
        let a: [[f64; 3]; 3] =
            std::array::from_fn(|_| std::array::from_fn(|_| rng.gen_range(-1.5..1.5)));
        let det = a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
            - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
            + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
        if det.abs() > 0.2 {
            let b = Point3::new(
                rng.gen_range(-2.0..2.0),
                rng.gen_range(-2.0..2.0),
                rng.gen_range(-2.0..2.0),
            );
            return move |p: Point3| {
                Point3::new(
                    a[0][0] * p.x + a[0][1] * p.y + a[0][2] * p.z,
                    a[1][0] * p.x + a[1][1] * p.y + a[1][2] * p.z,
                    a[2][0] * p.x + a[2][1] * p.y + a[2][2] * p.z,
                ) + b
            };
        }
    }
}

/// Bernstein-sum curve evaluation, independent of the library's de Casteljau.
pub fn bernstein(curve: &BezierCurve, t: f64) -> Point3 {
    let pts = curve.control_points();
    let d = pts.len() - 1;
    let mut acc = Point3::ZERO;
    for (k, &p) in pts.iter().enumerate() {
        let binom = (0..k).fold(1.0, |b, j| b * (d - j) as f64 / (j + 1) as f64);
        acc += p * (binom * t.powi(k as i32) * (1.0 - t).powi((d - k) as i32));
    }
    acc
}

/// Textbook bilinearly blended Coons patch over `[0,1]²` from four curves
/// given as `bottom(u)`, `right(v)`, `top(u)`, `left(v)`.
pub fn classical_coons(
    bottom: impl Fn(f64) -> Point3,
    right: impl Fn(f64) -> Point3,
    top: impl Fn(f64) -> Point3,
    left: impl Fn(f64) -> Point3,
    u: f64,
    v: f64,
) -> Point3 {
    let p00 = bottom(0.0);
    let p10 = bottom(1.0);
    let p01 = top(0.0);
    let p11 = top(1.0);
    let lofted_v = bottom(u) * (1.0 - v) + top(u) * v;
    let lofted_u = left(v) * (1.0 - u) + right(v) * u;
    let corners = p00 * ((1.0 - u) * (1.0 - v))
        + p10 * (u * (1.0 - v))
        + p01 * ((1.0 - u) * v)
        + p11 * (u * v);
    lofted_v + lofted_u - corners
}

pub fn max_out_of_plane(
    points: impl IntoIterator<Item = Point3>,
    origin: Point3,
    normal: Point3,
) -> f64 {
    let n = normal / normal.norm();
    points
        .into_iter()
        .map(|p| (p - origin).dot(n).abs())
        .fold(0.0, f64::max)
}
