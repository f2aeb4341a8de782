//! Procedurally generated boundary loops used by the bundled fixture files,
//! the examples and the tests.

use std::f64::consts::{PI, TAU};

use crate::boundary::BoundaryLoop;
use crate::curves::BezierCurve;
use crate::point::Point3;

fn p(x: f64, y: f64, z: f64) -> Point3 {
    Point3::new(x, y, z)
}

/// Corner `k` of a regular `n`-gon of circumradius `r`, in the same angular
/// layout as the parameter domain.
fn polygon_corner(n: usize, k: usize, r: f64) -> (f64, f64) {
    let a = PI / 2.0 + TAU * k as f64 / n as f64;
    (r * a.cos(), r * a.sin())
}

fn closed(curves: Vec<BezierCurve>) -> BoundaryLoop {
    BoundaryLoop::new(curves, None).expect("fixture loops are closed")
}

/// Unit square in the `z = 0` plane, straight sides.
pub fn square() -> BoundaryLoop {
    let c = [p(0., 0., 0.), p(1., 0., 0.), p(1., 1., 0.), p(0., 1., 0.)];
    closed(
        (0..4)
            .map(|i| BezierCurve::segment(c[i], c[(i + 1) % 4]))
            .collect(),
    )
}

/// Three quadratic arcs bulging upwards.
pub fn triangle() -> BoundaryLoop {
    let corners: Vec<Point3> = (0..3)
        .map(|k| {
            let (x, y) = polygon_corner(3, k, 1.0);
            p(x, y, 0.0)
        })
        .collect();
    closed(
        (0..3)
            .map(|k| {
                let a = corners[k];
                let b = corners[(k + 1) % 3];
                let mid = (a + b) * 0.5;
                BezierCurve::new(vec![a, mid * 1.15 + p(0., 0., 0.5), b]).unwrap()
            })
            .collect(),
    )
}

/// Regular pentagon with one corner lifted out of the plane; the two sides
/// meeting there rise to it along cubic arcs, the other three are straight.
pub fn raised_pentagon() -> BoundaryLoop {
    let lift = 0.8;
    let corners: Vec<Point3> = (0..5)
        .map(|k| {
            let (x, y) = polygon_corner(5, k, 1.0);
            p(x, y, if k == 0 { lift } else { 0.0 })
        })
        .collect();
    closed(
        (0..5)
            .map(|k| {
                let a = corners[k];
                let b = corners[(k + 1) % 5];
                let flat = |q: Point3| p(q.x, q.y, 0.0);
                // tangent to the ground plane at the unlifted end
                let (c1, c2) = if k == 0 {
                    (
                        a.lerp(b, 1.0 / 3.0) + p(0., 0., 0.2),
                        flat(a.lerp(b, 2.0 / 3.0)),
                    )
                } else if k == 4 {
                    (
                        flat(a.lerp(b, 1.0 / 3.0)),
                        a.lerp(b, 2.0 / 3.0) + p(0., 0., 0.2),
                    )
                } else {
                    (a.lerp(b, 1.0 / 3.0), a.lerp(b, 2.0 / 3.0))
                };
                BezierCurve::new(vec![a, c1, c2, b]).unwrap()
            })
            .collect(),
    )
}

/// An `n`-sided loop lying on the paraboloid `z = depth (x² + y²)`, cubic
/// sides whose inner control points sit on the paraboloid above the chord
/// thirds. `twist` rotates the loop about the z axis, `stretch` scales x.
pub fn bowl_loop(n: usize, radius: f64, depth: f64, twist: f64, stretch: f64) -> BoundaryLoop {
    let lift = |x: f64, y: f64| {
        let (s, c) = twist.sin_cos();
        let (x, y) = (stretch * (c * x - s * y), s * x + c * y);
        p(x, y, depth * (x * x + y * y))
    };
    let corners: Vec<(f64, f64)> = (0..n).map(|k| polygon_corner(n, k, radius)).collect();
    closed(
        (0..n)
            .map(|k| {
                let (ax, ay) = corners[k];
                let (bx, by) = corners[(k + 1) % n];
                let at = |t: f64| {
                    // bow the planar chord outwards a little before lifting
                    let bow = 1.0 + 0.12 * (PI * t).sin();
                    lift(bow * (ax + (bx - ax) * t), bow * (ay + (by - ay) * t))
                };
                BezierCurve::new(vec![at(0.0), at(1.0 / 3.0), at(2.0 / 3.0), at(1.0)]).unwrap()
            })
            .collect(),
    )
}

/// A patch mix of two 3-sided, one 4-sided, one 5-sided and one 6-sided
/// loop with procedurally generated geometry.
pub fn pocket() -> Vec<(&'static str, BoundaryLoop)> {
    vec![
        ("pocket3a", bowl_loop(3, 0.9, 0.45, 0.0, 1.0)),
        ("pocket3b", bowl_loop(3, 1.1, -0.35, 0.4, 1.3)),
        ("pocket4", bowl_loop(4, 1.0, 0.4, 0.2, 1.2)),
        ("pocket5", bowl_loop(5, 1.0, 0.5, 0.1, 0.9)),
        ("pocket6", bowl_loop(6, 1.2, -0.3, 0.3, 1.1)),
    ]
}

/// Every bundled fixture by file stem.
pub fn all() -> Vec<(&'static str, BoundaryLoop)> {
    let mut v = vec![
        ("triangle", triangle()),
        ("square", square()),
        ("pentagon", raised_pentagon()),
    ];
    v.extend(pocket());
    v
}
