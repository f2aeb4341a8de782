//! Bézier space curves.

use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::point::{BoundingBox, Point3};

/// Which end of a curve an end derivative is taken at.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CurveEnd {
    Start,
    End,
}

/// A polynomial Bézier curve over `[0, 1]`.
///
/// Degree 0 (a single control point) is a constant curve.
#[derive(Debug, Clone, PartialEq)]
pub struct BezierCurve {
    control_points: Vec<Point3>,
}

impl BezierCurve {
    pub fn new(control_points: Vec<Point3>) -> Result<Self> {
        if control_points.is_empty() {
            return Err(Error::Schema(
                "curve needs at least one control point".into(),
            ));
        }
        if let Some(k) = control_points.iter().position(|p| !p.is_finite()) {
            return Err(Error::Domain(format!("control point {k} is not finite")));
        }
        Ok(Self { control_points })
    }

    /// Constant curve at `p`.
    pub fn constant(p: Point3) -> Self {
        Self {
            control_points: vec![p],
        }
    }

    /// Straight segment from `a` to `b`.
    pub fn segment(a: Point3, b: Point3) -> Self {
        Self {
            control_points: vec![a, b],
        }
    }

    pub fn degree(&self) -> usize {
        self.control_points.len() - 1
    }

    pub fn control_points(&self) -> &[Point3] {
        &self.control_points
    }

    pub fn start(&self) -> Point3 {
        self.control_points[0]
    }

    pub fn end(&self) -> Point3 {
        self.control_points[self.control_points.len() - 1]
    }

    pub(crate) fn control_points_mut(&mut self) -> &mut [Point3] {
        &mut self.control_points
    }

    pub fn bounding_box(&self) -> BoundingBox {
        BoundingBox::from_points(self.control_points.iter().copied())
            .expect("curve has at least one control point")
    }

    /// Evaluates the curve at `t` in `[0, 1]`.
    pub fn eval(&self, t: f64) -> Result<Point3> {
        if !(0.0..=1.0).contains(&t) {
            return Err(Error::Domain(format!("curve parameter {t} outside [0, 1]")));
        }
        Ok(self.point_at(t))
    }

    /// de Casteljau evaluation without the range check.
    pub(crate) fn point_at(&self, t: f64) -> Point3 {
        let n = self.control_points.len();
        match n {
            1 => self.control_points[0],
            2 => self.control_points[0].lerp(self.control_points[1], t),
            _ => {
                let mut work: SmallVec<[Point3; 8]> = SmallVec::from_slice(&self.control_points);
                for level in (1..n).rev() {
                    for k in 0..level {
                        work[k] = work[k].lerp(work[k + 1], t);
                    }
                }
                work[0]
            }
        }
    }

    /// First derivative at one end of the curve. Zero for constant curves.
    pub fn end_derivative(&self, end: CurveEnd) -> Point3 {
        let d = self.degree();
        if d == 0 {
            return Point3::ZERO;
        }
        let p = &self.control_points;
        match end {
            CurveEnd::Start => (p[1] - p[0]) * d as f64,
            CurveEnd::End => (p[d] - p[d - 1]) * d as f64,
        }
    }

    /// Applies `f` to every control point. Bézier curves are affine
    /// invariant, so this is the image of the curve under an affine `f`.
    pub fn map_points(&self, f: impl Fn(Point3) -> Point3) -> Self {
        Self {
            control_points: self.control_points.iter().map(|&p| f(p)).collect(),
        }
    }
}
