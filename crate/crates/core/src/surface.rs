//! The multi-sided patch: a blended sum of one ribbon per side over the
//! regular polygon domain.

use rayon::prelude::*;

use crate::boundary::BoundaryLoop;
use crate::domain::{DomainPolygon, LocalParams};
use crate::error::{Error, Result};
use crate::point::{Point2, Point3};
use crate::ribbon::Ribbon;

/// Blending weight of a ribbon at distance parameter `d`.
#[inline]
pub fn blend(d: f64) -> f64 {
    (1.0 - d) / 2.0
}

#[derive(Debug, Clone, PartialEq)]
pub struct Patch {
    boundary: BoundaryLoop,
    domain: DomainPolygon,
    ribbons: Vec<Ribbon>,
}

impl Patch {
    pub fn new(boundary: BoundaryLoop) -> Result<Self> {
        let domain = DomainPolygon::new(boundary.len())?;
        let ribbons = (0..boundary.len())
            .map(|i| Ribbon::new(&boundary, i))
            .collect();
        Ok(Self {
            boundary,
            domain,
            ribbons,
        })
    }

    pub fn sides(&self) -> usize {
        self.ribbons.len()
    }

    pub fn boundary(&self) -> &BoundaryLoop {
        &self.boundary
    }

    pub fn domain(&self) -> &DomainPolygon {
        &self.domain
    }

    pub fn ribbons(&self) -> &[Ribbon] {
        &self.ribbons
    }

    pub fn local_params(&self, p: Point2) -> Result<LocalParams> {
        Ok(self.domain.local_params(&self.domain.wachspress(p)?))
    }

    /// Surface point over domain point `p`.
    ///
    /// Ribbons whose sweep parameter is undefined at `p` carry (numerically)
    /// zero weight and are skipped; the remaining weights are not rescaled.
    pub fn eval(&self, p: Point2) -> Result<Point3> {
        let params = self.local_params(p)?;
        let mut acc = Point3::ZERO;
        for (ribbon, (s, &d)) in self.ribbons.iter().zip(params.s.iter().zip(&params.d)) {
            if let Some(s) = *s {
                acc += ribbon.point_at(s, d) * blend(d);
            }
        }
        Ok(acc)
    }

    /// The blending weights `B_i(d_i)` of every side at `p`.
    pub fn weights(&self, p: Point2) -> Result<Vec<f64>> {
        Ok(self.local_params(p)?.d.into_iter().map(blend).collect())
    }

    /// Evaluates the patch on the domain point of edge `i` at parameter `t`.
    /// Goes through the full domain mapping; the result matches `C_i(t)`.
    pub fn eval_boundary(&self, i: usize, t: f64) -> Result<Point3> {
        if i >= self.sides() {
            return Err(Error::Domain(format!(
                "side {} out of range 1..={}",
                i + 1,
                self.sides()
            )));
        }
        if !(0.0..=1.0).contains(&t) {
            return Err(Error::Domain(format!("edge parameter {t} outside [0, 1]")));
        }
        self.eval(self.domain.edge_point(i, t))
    }

    /// Evaluates many domain points in parallel; output order follows input.
    pub fn eval_many(&self, points: &[Point2]) -> Result<Vec<Point3>> {
        points.par_iter().map(|&p| self.eval(p)).collect()
    }

    /// The same construction on the image of the boundary under `f`.
    pub fn map_boundary(&self, f: impl Fn(Point3) -> Point3) -> Result<Self> {
        Self::new(self.boundary.map_points(f)?)
    }
}
