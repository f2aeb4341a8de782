//! The regular `n`-gon parameter domain, its Wachspress coordinates, and the
//! per-side ribbon parameters derived from them.
//!
//! Index conventions: domain vertex `k` sits at angle `π/2 + 2πk/n` on the
//! unit circle. Edge `i` runs from vertex `i - 1` to vertex `i` (cyclic) and
//! is the image of boundary curve `C_i`. Coordinate `λ_i` belongs to vertex
//! `i`, the image of corner `C_i(1) = C_{i+1}(0)`, so `λ_{i-1}` and `λ_i`
//! are the only coordinates that are nonzero on edge `i`.

use std::f64::consts::{PI, TAU};

use crate::error::{Error, Result};
use crate::point::Point2;

/// Points whose distance to an edge line lies within this band are treated
/// as lying on it.
pub const GEOMETRY_EPSILON: f64 = 1e-12;

/// `s_i` is reported invalid when `λ_{i-1} + λ_i` is at or below this.
pub const SWEEP_EPSILON: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq)]
struct EdgeLine {
    origin: Point2,
    /// Unit normal pointing into the polygon.
    inward: Point2,
}

impl EdgeLine {
    fn distance(&self, p: Point2) -> f64 {
        self.inward.dot(p - self.origin)
    }
}

/// Regular polygon with circumradius 1, centred at the origin,
/// counterclockwise.
#[derive(Debug, Clone, PartialEq)]
pub struct DomainPolygon {
    vertices: Vec<Point2>,
    edges: Vec<EdgeLine>,
}

impl DomainPolygon {
    pub fn new(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::Arity(n));
        }
        let vertices: Vec<Point2> = (0..n)
            .map(|k| {
                let a = PI / 2.0 + TAU * k as f64 / n as f64;
                Point2::new(a.cos(), a.sin())
            })
            .collect();
        let edges = (0..n)
            .map(|i| {
                let a = vertices[(i + n - 1) % n];
                let b = vertices[i];
                let e = b - a;
                let len = e.norm();
                EdgeLine {
                    origin: a,
                    inward: Point2::new(-e.y / len, e.x / len),
                }
            })
            .collect();
        Ok(Self { vertices, edges })
    }

    pub fn sides(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[Point2] {
        &self.vertices
    }

    pub fn vertex(&self, k: usize) -> Point2 {
        self.vertices[k % self.sides()]
    }

    /// Start and end vertex of edge `i`.
    pub fn edge_endpoints(&self, i: usize) -> (Point2, Point2) {
        let n = self.sides();
        (self.vertices[(i + n - 1) % n], self.vertices[i % n])
    }

    /// The point at parameter `t` along edge `i`.
    pub fn edge_point(&self, i: usize, t: f64) -> Point2 {
        let (a, b) = self.edge_endpoints(i);
        a.lerp(b, t)
    }

    /// Distance from the centre to every edge.
    pub fn apothem(&self) -> f64 {
        (PI / self.sides() as f64).cos()
    }

    pub fn centroid(&self) -> Point2 {
        Point2::new(0.0, 0.0)
    }

    /// Signed distances to the edge lines, positive inside. No snapping.
    pub fn signed_distances(&self, p: Point2) -> Vec<f64> {
        self.edges.iter().map(|e| e.distance(p)).collect()
    }

    /// Perpendicular distances of `p` to every edge line. Distances within
    /// [`GEOMETRY_EPSILON`] of zero are snapped to exactly zero.
    pub fn edge_distances(&self, p: Point2) -> Result<Vec<f64>> {
        let mut d = self.signed_distances(p);
        for (j, dj) in d.iter_mut().enumerate() {
            if !dj.is_finite() || *dj < -GEOMETRY_EPSILON {
                return Err(Error::Domain(format!(
                    "point ({}, {}) lies outside the domain polygon (edge {}, distance {:e})",
                    p.x,
                    p.y,
                    j + 1,
                    dj
                )));
            }
            if *dj <= GEOMETRY_EPSILON {
                *dj = 0.0;
            }
        }
        Ok(d)
    }

    pub fn contains(&self, p: Point2) -> bool {
        self.signed_distances(p)
            .iter()
            .all(|&d| d >= -GEOMETRY_EPSILON)
    }

    /// Smallest distance from `p` to any edge line (negative outside).
    pub fn boundary_distance(&self, p: Point2) -> f64 {
        self.signed_distances(p)
            .into_iter()
            .fold(f64::INFINITY, f64::min)
    }

    /// Wachspress coordinates of `p`.
    pub fn wachspress(&self, p: Point2) -> Result<BaryCoords> {
        let d = self.edge_distances(p)?;
        Ok(BaryCoords::from_distances(&d))
    }

    pub fn local_params(&self, lambda: &BaryCoords) -> LocalParams {
        LocalParams::from_coords(lambda)
    }
}

/// Generalized barycentric coordinates, one per domain vertex.
#[derive(Debug, Clone, PartialEq)]
pub struct BaryCoords {
    pub lambda: Vec<f64>,
}

impl BaryCoords {
    /// Vertex `i` is adjacent to edges `i` and `i + 1`; its numerator is the
    /// product of the distances to all other edges.
    fn from_distances(d: &[f64]) -> Self {
        let n = d.len();
        let mut lambda: Vec<f64> = (0..n)
            .map(|i| {
                let next = (i + 1) % n;
                d.iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i && j != next)
                    .map(|(_, &dj)| dj)
                    .product()
            })
            .collect();
        let total: f64 = lambda.iter().sum();
        for l in &mut lambda {
            *l /= total;
        }
        Self { lambda }
    }

    pub fn len(&self) -> usize {
        self.lambda.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lambda.is_empty()
    }

    /// `λ_i` with cyclic indexing.
    pub fn get(&self, i: isize) -> f64 {
        self.lambda[i.rem_euclid(self.lambda.len() as isize) as usize]
    }
}

/// Ribbon parameters `(s_i, d_i)` for every side at one domain point.
#[derive(Debug, Clone, PartialEq)]
pub struct LocalParams {
    /// Sweep parameter along side `i`; `None` where `λ_{i-1} + λ_i` vanishes.
    pub s: Vec<Option<f64>>,
    /// Distance parameter from side `i`: 0 on the side, 1 on far sides.
    pub d: Vec<f64>,
}

impl LocalParams {
    pub fn from_coords(lambda: &BaryCoords) -> Self {
        let n = lambda.len();
        let mut s = Vec::with_capacity(n);
        let mut d = Vec::with_capacity(n);
        for i in 0..n as isize {
            let prev = lambda.get(i - 1);
            let cur = lambda.get(i);
            let sum = prev + cur;
            d.push((1.0 - sum).clamp(0.0, 1.0));
            s.push(if sum > SWEEP_EPSILON {
                Some((cur / sum).clamp(0.0, 1.0))
            } else {
                None
            });
        }
        Self { s, d }
    }

    pub fn len(&self) -> usize {
        self.d.len()
    }

    pub fn is_empty(&self) -> bool {
        self.d.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn square_vertices() {
        let d = DomainPolygon::new(4).unwrap();
        let expected = [(0.0, 1.0), (-1.0, 0.0), (0.0, -1.0), (1.0, 0.0)];
        for (v, (x, y)) in d.vertices().iter().zip(expected) {
            assert!(close(v.x, x, 1e-15) && close(v.y, y, 1e-15));
        }
    }

    #[test]
    fn triangle_circumradius() {
        let d = DomainPolygon::new(3).unwrap();
        for v in d.vertices() {
            assert!(close(v.norm(), 1.0, 1e-15));
        }
        let (a, b) = d.edge_endpoints(0);
        assert!(close((b - a).norm(), 3f64.sqrt(), 1e-15));
    }

    #[test]
    fn hexagon_edge_length() {
        let d = DomainPolygon::new(6).unwrap();
        for i in 0..6 {
            let (a, b) = d.edge_endpoints(i);
            assert!(close((b - a).norm(), 2.0 * (PI / 6.0).sin(), 1e-15));
            assert!(close((b - a).norm(), 1.0, 1e-15));
        }
    }

    #[test]
    fn arity() {
        assert_eq!(DomainPolygon::new(2).unwrap_err(), Error::Arity(2));
    }

    #[test]
    fn centre_distances_are_apothem() {
        for n in 3..=10 {
            let d = DomainPolygon::new(n).unwrap();
            for dist in d.edge_distances(d.centroid()).unwrap() {
                assert!(close(dist, d.apothem(), 1e-15));
            }
        }
    }

    #[test]
    fn edge_midpoint_distance_zero() {
        let d = DomainPolygon::new(7).unwrap();
        for j in 0..7 {
            let dist = d.edge_distances(d.edge_point(j, 0.5)).unwrap();
            assert_eq!(dist[j], 0.0);
            assert!(dist.iter().all(|&x| x >= 0.0));
        }
    }

    #[test]
    fn square_offset_distances() {
        // Square with vertices at (0,1), (-1,0), (0,-1), (1,0). Edge i runs
        // vertex i-1 -> i; inward distance to the line |x| + |y| = 1 through
        // that quadrant is (1 - (±x ± y)) / sqrt(2).
        let d = DomainPolygon::new(4).unwrap();
        let p = Point2::new(0.1, 0.0);
        let r = 2f64.sqrt();
        let expected = [
            (1.0 - (p.x + p.y)) / r,  // edge 0: (1,0) -> (0,1), first quadrant
            (1.0 - (-p.x + p.y)) / r, // edge 1: (0,1) -> (-1,0)
            (1.0 - (-p.x - p.y)) / r, // edge 2: (-1,0) -> (0,-1)
            (1.0 - (p.x - p.y)) / r,  // edge 3: (0,-1) -> (1,0)
        ];
        let got = d.edge_distances(p).unwrap();
        for (g, e) in got.iter().zip(expected) {
            assert!(close(*g, e, 1e-15), "{g} vs {e}");
        }
    }

    #[test]
    fn outside_is_rejected() {
        let d = DomainPolygon::new(5).unwrap();
        assert!(matches!(
            d.edge_distances(Point2::new(2.0, 0.0)),
            Err(Error::Domain(_))
        ));
        assert!(d.wachspress(Point2::new(0.0, -1.0)).is_err());
        // within the snapping band
        let q = d.edge_point(2, 0.3);
        let (a, b) = d.edge_endpoints(2);
        let e = b - a;
        let out = Point2::new(e.y, -e.x) * (0.5e-12 / e.norm());
        assert!(d.wachspress(q + out).is_ok());
    }

    #[test]
    fn centre_coordinates_uniform() {
        for n in 3..=10 {
            let d = DomainPolygon::new(n).unwrap();
            let l = d.wachspress(d.centroid()).unwrap();
            for x in &l.lambda {
                assert!(close(*x, 1.0 / n as f64, 1e-15));
            }
        }
    }

    #[test]
    fn vertex_coordinates_are_kronecker() {
        for n in 3..=10 {
            let d = DomainPolygon::new(n).unwrap();
            for k in 0..n {
                let l = d.wachspress(d.vertex(k)).unwrap();
                for (i, x) in l.lambda.iter().enumerate() {
                    assert_eq!(*x, if i == k { 1.0 } else { 0.0 });
                }
            }
        }
    }

    #[test]
    fn square_matches_bilinear() {
        // Wachspress on a square reduces to bilinear weights. Parameterize
        // edge 0 (vertex 3 -> vertex 0) by u and the direction towards
        // vertex 2 by v.
        let d = DomainPolygon::new(4).unwrap();
        let v = d.vertices().to_vec();
        let bilinear = |u: f64, w: f64| {
            let p = v[3] + (v[0] - v[3]) * u + (v[2] - v[3]) * w;
            let weights = [
                u * (1.0 - w),         // vertex 0
                u * w,                 // vertex 1
                (1.0 - u) * w,         // vertex 2
                (1.0 - u) * (1.0 - w), // vertex 3
            ];
            (p, weights)
        };
        let (p, wts) = bilinear(0.5, 0.0);
        let l = d.wachspress(p).unwrap();
        assert!(close(l.lambda[3], 0.5, 1e-15) && close(l.lambda[0], 0.5, 1e-15));
        assert_eq!(l.lambda[1], 0.0);
        assert_eq!(l.lambda[2], 0.0);
        for (u, w) in [(0.2, 0.7), (0.9, 0.1), (0.5, 0.5), (0.33, 0.66)] {
            let (p, wts2) = bilinear(u, w);
            let l = d.wachspress(p).unwrap();
            for (a, b) in l.lambda.iter().zip(wts2) {
                assert!(close(*a, b, 1e-14));
            }
        }
        let _ = wts;
    }

    #[test]
    fn centre_local_params() {
        for n in 3..=10 {
            let d = DomainPolygon::new(n).unwrap();
            let lp = d.local_params(&d.wachspress(d.centroid()).unwrap());
            for i in 0..n {
                assert!(close(lp.d[i], 1.0 - 2.0 / n as f64, 1e-15));
                assert!(close(lp.s[i].unwrap(), 0.5, 1e-15));
            }
        }
    }

    #[test]
    fn edge_midpoint_local_params() {
        let d = DomainPolygon::new(6).unwrap();
        for i in 0..6 {
            let lp = d.local_params(&d.wachspress(d.edge_point(i, 0.5)).unwrap());
            assert_eq!(lp.d[i], 0.0);
            assert!(close(lp.s[i].unwrap(), 0.5, 1e-15));
        }
    }

    #[test]
    fn far_edge_local_params() {
        let n = 7;
        let d = DomainPolygon::new(n).unwrap();
        for i in 0..n {
            for j in 0..n {
                let adjacent = j == i || j == (i + 1) % n || j == (i + n - 1) % n;
                if adjacent {
                    continue;
                }
                for t in [0.0, 0.3, 1.0] {
                    let lp = d.local_params(&d.wachspress(d.edge_point(j, t)).unwrap());
                    assert_eq!(lp.d[i], 1.0);
                    assert_eq!(lp.s[i], None);
                }
            }
        }
    }

    #[test]
    fn sweep_runs_along_edge() {
        let d = DomainPolygon::new(5).unwrap();
        for i in 0..5 {
            for t in [0.0, 0.25, 0.8, 1.0] {
                let lp = d.local_params(&d.wachspress(d.edge_point(i, t)).unwrap());
                assert!(close(lp.s[i].unwrap(), t, 1e-14));
            }
        }
    }
}
