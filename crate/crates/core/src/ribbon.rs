//! Per-side four-sided C⁰ Coons ribbons.

use crate::boundary::BoundaryLoop;
use crate::curves::BezierCurve;
use crate::error::{Error, Result};
use crate::point::Point3;

/// The Coons patch interpolating sides `i - 1`, `i`, `i + 1` and the
/// opposite curve of side `i`.
///
/// In ribbon coordinates, `d = 0` is side `i` (swept by `s`), `s = 0` is
/// side `i - 1` traversed backwards, `s = 1` is side `i + 1`, and `d = 1`
/// is the opposite curve traversed backwards.
#[derive(Debug, Clone, PartialEq)]
pub struct Ribbon {
    side: usize,
    prev: BezierCurve,
    base: BezierCurve,
    next: BezierCurve,
    opposite: BezierCurve,
    /// `[[C_i(0), C_{i-1}(0)], [C_i(1), C_{i+1}(1)]]`
    corners: [[Point3; 2]; 2],
}

impl Ribbon {
    pub fn new(boundary: &BoundaryLoop, i: usize) -> Self {
        let k = i as isize;
        let prev = boundary.side(k - 1).clone();
        let base = boundary.side(k).clone();
        let next = boundary.side(k + 1).clone();
        let opposite = boundary.opposite_curve(i);
        let corners = [[base.start(), prev.start()], [base.end(), next.end()]];
        Self {
            side: boundary.wrap(k),
            prev,
            base,
            next,
            opposite,
            corners,
        }
    }

    pub fn side(&self) -> usize {
        self.side
    }

    pub fn base(&self) -> &BezierCurve {
        &self.base
    }

    pub fn prev(&self) -> &BezierCurve {
        &self.prev
    }

    pub fn next(&self) -> &BezierCurve {
        &self.next
    }

    pub fn opposite(&self) -> &BezierCurve {
        &self.opposite
    }

    pub fn eval(&self, s: f64, d: f64) -> Result<Point3> {
        if !(0.0..=1.0).contains(&s) || !(0.0..=1.0).contains(&d) {
            return Err(Error::Domain(format!(
                "ribbon parameters ({s}, {d}) outside [0, 1]²"
            )));
        }
        Ok(self.point_at(s, d))
    }

    pub(crate) fn point_at(&self, s: f64, d: f64) -> Point3 {
        let ruled_d = self.base.point_at(s) * (1.0 - d) + self.opposite.point_at(1.0 - s) * d;
        let ruled_s = self.prev.point_at(1.0 - d) * (1.0 - s) + self.next.point_at(d) * s;
        let [[c00, c01], [c10, c11]] = self.corners;
        let bilinear = (c00 * (1.0 - d) + c01 * d) * (1.0 - s) + (c10 * (1.0 - d) + c11 * d) * s;
        ruled_d + ruled_s - bilinear
    }
}
