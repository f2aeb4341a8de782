//! Closed loops of boundary curves and the per-side opposite curve.

use crate::curves::{BezierCurve, CurveEnd};
use crate::error::{Error, Result};
use crate::point::{BoundingBox, Point3};

/// Relative weld tolerance used when none is given: this fraction of the
/// control-point bounding-box diagonal.
pub const DEFAULT_RELATIVE_WELD_TOLERANCE: f64 = 1e-9;

/// An ordered cyclic list of `n >= 3` curves, side `i` ending where side
/// `i + 1` starts. Corners are welded so those endpoints are bit-identical.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundaryLoop {
    sides: Vec<BezierCurve>,
    weld_tolerance: f64,
}

impl BoundaryLoop {
    /// Validates closure and welds each corner to the average of the two
    /// coincident endpoints. `None` selects the scale-relative default.
    pub fn new(curves: Vec<BezierCurve>, weld_tolerance: Option<f64>) -> Result<Self> {
        let n = curves.len();
        if n < 3 {
            return Err(Error::Arity(n));
        }
        if let Some(k) = curves.iter().position(|c| c.degree() == 0) {
            return Err(Error::Schema(format!(
                "sides[{k}]: degree 0 sides cannot form a loop"
            )));
        }
        let tolerance = match weld_tolerance {
            Some(t) if !(t >= 0.0 && t.is_finite()) => {
                return Err(Error::Domain(format!("weld tolerance {t} must be >= 0")));
            }
            Some(t) => t,
            None => default_weld_tolerance(&curves),
        };

        for i in 0..n {
            let j = (i + 1) % n;
            let gap = curves[i].end().distance(curves[j].start());
            if gap > tolerance {
                return Err(Error::Closure {
                    side: i,
                    next: j,
                    gap,
                    tolerance,
                });
            }
        }

        let mut sides = curves;
        for i in 0..n {
            let j = (i + 1) % n;
            let corner = (sides[i].end() + sides[j].start()) * 0.5;
            let last = sides[i].degree();
            sides[i].control_points_mut()[last] = corner;
            sides[j].control_points_mut()[0] = corner;
        }

        Ok(Self {
            sides,
            weld_tolerance: tolerance,
        })
    }

    pub fn len(&self) -> usize {
        self.sides.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sides.is_empty()
    }

    pub fn sides(&self) -> &[BezierCurve] {
        &self.sides
    }

    pub fn weld_tolerance(&self) -> f64 {
        self.weld_tolerance
    }

    /// Side `i` with cyclic indexing; negative offsets are fine.
    pub fn side(&self, i: isize) -> &BezierCurve {
        &self.sides[self.wrap(i)]
    }

    pub fn wrap(&self, i: isize) -> usize {
        i.rem_euclid(self.sides.len() as isize) as usize
    }

    /// The corner `C_i(1) = C_{i+1}(0)`.
    pub fn corner(&self, i: usize) -> Point3 {
        self.sides[i].end()
    }

    pub fn bounding_box(&self) -> BoundingBox {
        control_box(&self.sides)
    }

    /// Distances between the endpoints that meet at each corner, as given
    /// to `new` (before welding): pass the raw curves.
    pub fn closure_residuals(curves: &[BezierCurve]) -> Vec<f64> {
        let n = curves.len();
        (0..n)
            .map(|i| curves[i].end().distance(curves[(i + 1) % n].start()))
            .collect()
    }

    /// The cubic bridging the two far corners of side `i`, with end tangents
    /// taken from sides `i + 2` (start) and `i - 2` (end). For triangles it
    /// collapses to the constant curve at `C_{i+1}(1)`.
    pub fn opposite_curve(&self, i: usize) -> BezierCurve {
        let i = i as isize;
        let p0 = self.side(i + 1).end();
        if self.len() == 3 {
            return BezierCurve::constant(p0);
        }
        let p3 = self.side(i - 1).start();
        let p1 = p0 + self.side(i + 2).end_derivative(CurveEnd::Start) / 3.0;
        let p2 = p3 - self.side(i - 2).end_derivative(CurveEnd::End) / 3.0;
        BezierCurve::new(vec![p0, p1, p2, p3]).expect("finite opposite control points")
    }

    /// Applies `f` to every control point of every side.
    pub fn map_points(&self, f: impl Fn(Point3) -> Point3) -> Result<Self> {
        let sides = self.sides.iter().map(|c| c.map_points(&f)).collect();
        Self::new(sides, None)
    }
}

fn control_box(curves: &[BezierCurve]) -> BoundingBox {
    BoundingBox::from_points(
        curves
            .iter()
            .flat_map(|c| c.control_points().iter().copied()),
    )
    .expect("loop has control points")
}

fn default_weld_tolerance(curves: &[BezierCurve]) -> f64 {
    DEFAULT_RELATIVE_WELD_TOLERANCE * control_box(curves).diagonal()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: f64, y: f64, z: f64) -> Point3 {
        Point3::new(x, y, z)
    }

    fn square_edges() -> Vec<BezierCurve> {
        let c = [p(0., 0., 0.), p(1., 0., 0.), p(1., 1., 0.), p(0., 1., 0.)];
        (0..4)
            .map(|i| BezierCurve::segment(c[i], c[(i + 1) % 4]))
            .collect()
    }

    fn pentagon_vertices() -> Vec<Point3> {
        (0..5)
            .map(|k| {
                let a = std::f64::consts::TAU * k as f64 / 5.0;
                p(a.cos(), a.sin(), 0.0)
            })
            .collect()
    }

    #[test]
    fn square_is_valid() {
        let l = BoundaryLoop::new(square_edges(), Some(1e-9)).unwrap();
        assert_eq!(l.len(), 4);
        assert_eq!(l.sides(), square_edges().as_slice());
    }

    #[test]
    fn open_triangle_reports_pair() {
        let a = p(0., 0., 0.);
        let b = p(1., 0., 0.);
        let c = p(0., 1., 0.);
        let curves = vec![
            BezierCurve::segment(a, b),
            BezierCurve::segment(b + p(1e-3, 0., 0.), c),
            BezierCurve::segment(c, a),
        ];
        match BoundaryLoop::new(curves, Some(1e-9)) {
            Err(Error::Closure {
                side, next, gap, ..
            }) => {
                assert_eq!((side, next), (0, 1));
                assert!((gap - 1e-3).abs() < 1e-12);
            }
            other => panic!("expected closure error, got {other:?}"),
        }
    }

    #[test]
    fn too_few_sides() {
        let e = square_edges();
        assert_eq!(
            BoundaryLoop::new(e[..2].to_vec(), None).unwrap_err(),
            Error::Arity(2)
        );
    }

    #[test]
    fn welds_to_average() {
        let v = pentagon_vertices();
        let mut curves = Vec::new();
        let mut expected = Vec::new();
        for i in 0..5 {
            let a = v[i];
            let b = v[(i + 1) % 5];
            // perturb the end of side i and start of side i+1 in opposite directions
            let end = b + p(1e-12, -1e-12, 0.5e-12);
            curves.push(BezierCurve::segment(a, end));
            expected.push(end);
        }
        for c in &mut curves {
            let start = c.start() + p(-1e-12, 0.0, 1e-12);
            c.control_points_mut()[0] = start;
        }
        let raw = curves.clone();
        let l = BoundaryLoop::new(curves, Some(1e-9)).unwrap();
        for i in 0..5 {
            let j = (i + 1) % 5;
            let avg = (raw[i].end() + raw[j].start()) * 0.5;
            assert_eq!(l.sides()[i].end(), avg);
            assert_eq!(l.sides()[j].start(), avg);
        }
    }

    #[test]
    fn welding_is_idempotent() {
        let v = pentagon_vertices();
        let curves: Vec<_> = (0..5)
            .map(|i| BezierCurve::segment(v[i], v[(i + 1) % 5] + p(3e-12, 0., 0.)))
            .collect();
        let once = BoundaryLoop::new(curves, Some(1e-9)).unwrap();
        let twice = BoundaryLoop::new(once.sides().to_vec(), Some(1e-9)).unwrap();
        assert_eq!(once, twice);
    }

    #[test]
    fn default_tolerance_scales() {
        let big: Vec<_> = square_edges()
            .iter()
            .map(|c| c.map_points(|q| q * 1e6))
            .collect();
        let l = BoundaryLoop::new(big, None).unwrap();
        assert!((l.weld_tolerance() - 1e-9 * 1e6 * 2f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn rejects_negative_tolerance() {
        assert!(BoundaryLoop::new(square_edges(), Some(-1.0)).is_err());
    }

    #[test]
    fn triangle_opposite_is_point() {
        let a = p(0., 0., 0.);
        let b = p(1., 0., 0.);
        let c = p(0., 1., 1.);
        let l = BoundaryLoop::new(
            vec![
                BezierCurve::segment(a, b),
                BezierCurve::segment(b, c),
                BezierCurve::segment(c, a),
            ],
            None,
        )
        .unwrap();
        for i in 0..3 {
            let opp = l.opposite_curve(i);
            assert_eq!(opp.degree(), 0);
            assert_eq!(opp.start(), l.side(i as isize + 1).end());
            assert_eq!(opp.start(), l.side(i as isize - 1).start());
        }
        assert_eq!(l.opposite_curve(0).start(), c);
    }

    #[test]
    fn four_sided_opposite_reproduces_cubic() {
        let corners = [
            p(0., 0., 0.),
            p(1., 0., 0.2),
            p(1., 1., -0.1),
            p(0., 1., 0.3),
        ];
        let mut curves = Vec::new();
        for i in 0..4 {
            let a = corners[i];
            let b = corners[(i + 1) % 4];
            let d = b - a;
            let bulge = p(0.0, 0.0, 0.4 * (i as f64 + 1.0));
            curves.push(
                BezierCurve::new(vec![
                    a,
                    a + d / 3.0 + bulge,
                    a + d * (2.0 / 3.0) - bulge * 0.5,
                    b,
                ])
                .unwrap(),
            );
        }
        let l = BoundaryLoop::new(curves, None).unwrap();
        for i in 0..4 {
            let opp = l.opposite_curve(i);
            let far = l.side(i as isize + 2);
            for (a, b) in opp.control_points().iter().zip(far.control_points()) {
                assert!((*a - *b).norm() < 1e-14);
            }
        }
    }

    #[test]
    fn pentagon_opposite_by_hand() {
        let v = pentagon_vertices();
        let curves: Vec<_> = (0..5)
            .map(|i| BezierCurve::segment(v[i], v[(i + 1) % 5]))
            .collect();
        let l = BoundaryLoop::new(curves, None).unwrap();
        // side 0 runs v0 -> v1. Far corners: C_1(1) = v2, C_4(0) = v4.
        // Side 2 runs v2 -> v3, side 3 runs v3 -> v4; segments have derivative b - a.
        let opp = l.opposite_curve(0);
        let expected = [
            v[2],
            v[2] + (v[3] - v[2]) / 3.0,
            v[4] - (v[4] - v[3]) / 3.0,
            v[4],
        ];
        for (a, b) in opp.control_points().iter().zip(expected.iter()) {
            assert!((*a - *b).norm() < 1e-15);
        }
    }

    #[test]
    fn opposite_endpoints_exact() {
        for n in 3..9 {
            let curves: Vec<_> = (0..n)
                .map(|k| {
                    let a = std::f64::consts::TAU * k as f64 / n as f64;
                    let b = std::f64::consts::TAU * (k + 1) as f64 / n as f64;
                    BezierCurve::new(vec![
                        p(a.cos(), a.sin(), 0.1 * k as f64),
                        p(a.cos() * 1.2, a.sin(), 0.5),
                        p(b.cos(), b.sin() * 1.3, -0.2),
                        p(b.cos(), b.sin(), 0.1 * ((k + 1) % n) as f64),
                    ])
                    .unwrap()
                })
                .collect();
            let l = BoundaryLoop::new(curves, None).unwrap();
            for i in 0..n {
                let opp = l.opposite_curve(i);
                assert_eq!(opp.eval(0.0).unwrap(), l.side(i as isize + 1).end());
                assert_eq!(opp.eval(1.0).unwrap(), l.side(i as isize - 1).start());
            }
        }
    }
}
