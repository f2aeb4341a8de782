use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::mesher::{map_domain_mesh, tessellate_domain, TriMesh};
use crate::point::{Point2, Point3};
use crate::surface::Patch;

/// Finite-difference step in domain units (circumradius 1).
pub const DEFAULT_STEP: f64 = 1e-4;

/// Mean curvature of an arbitrary immersion `f` at `p`, from the first and
/// second fundamental forms with central-difference partials of step `h`.
///
/// The normal is `f_x × f_y`, so a counterclockwise domain gives the
/// outward normal of a counterclockwise loop; the sphere seen from outside
/// has negative `H` in this convention.
pub fn mean_curvature_of<F>(f: F, p: Point2, h: f64) -> Result<f64>
where
    F: Fn(Point2) -> Result<Point3>,
{
    if !(h > 0.0 && h.is_finite()) {
        return Err(Error::Precondition(format!("step {h} must be positive")));
    }
    let at = |dx: f64, dy: f64| f(Point2::new(p.x + dx * h, p.y + dy * h));
    let c = at(0.0, 0.0)?;
    let xp = at(1.0, 0.0)?;
    let xm = at(-1.0, 0.0)?;
    let yp = at(0.0, 1.0)?;
    let ym = at(0.0, -1.0)?;
    let pp = at(1.0, 1.0)?;
    let pm = at(1.0, -1.0)?;
    let mp = at(-1.0, 1.0)?;
    let mm = at(-1.0, -1.0)?;

    let su = (xp - xm) / (2.0 * h);
    let sv = (yp - ym) / (2.0 * h);
    let suu = (xp - c * 2.0 + xm) / (h * h);
    let svv = (yp - c * 2.0 + ym) / (h * h);
    let suv = (pp - pm - mp + mm) / (4.0 * h * h);

    let e = su.dot(su);
    let f_ = su.dot(sv);
    let g = sv.dot(sv);
    let det = e * g - f_ * f_;
    let cross = su.cross(sv);
    let len = cross.norm();
    // also rejects NaN
    if det.partial_cmp(&0.0) != Some(std::cmp::Ordering::Greater) || len == 0.0 {
        return Err(Error::Domain(format!(
            "degenerate tangent plane at ({}, {})",
            p.x, p.y
        )));
    }
    let normal = cross / len;
    let l = suu.dot(normal);
    let m = suv.dot(normal);
    let n = svv.dot(normal);
    Ok((e * n - 2.0 * f_ * m + g * l) / (2.0 * det))
}

/// Mean curvature of the patch at interior point `p`. Requires `p` to be at
/// least `2h` from the domain boundary.
pub fn mean_curvature(patch: &Patch, p: Point2, h: f64) -> Result<f64> {
    curvature_at(&centred(patch)?, p, h)
}

/// Translated copy with the boundary's bounding box centred on the origin.
/// The difference stencil divides rounding error by `h²`, so coordinates of
/// large magnitude would swamp the second derivatives.
fn centred(patch: &Patch) -> Result<Patch> {
    let c = patch.boundary().bounding_box().centre();
    patch.map_boundary(|x| x - c)
}

fn curvature_at(patch: &Patch, p: Point2, h: f64) -> Result<f64> {
    let dist = patch.domain().boundary_distance(p);
    if dist < 2.0 * h * (1.0 - 1e-9) {
        return Err(Error::Precondition(format!(
            "point ({}, {}) is {dist:e} from the boundary, closer than 2h = {:e}",
            p.x,
            p.y,
            2.0 * h
        )));
    }
    mean_curvature_of(|q| patch.eval(q), p, h)
}

/// The point nearest to `p` on the segment towards the centroid whose
/// boundary distance is at least `clearance`.
fn admissible_point(patch: &Patch, p: Point2, clearance: f64) -> Point2 {
    let domain = patch.domain();
    let apothem = domain.apothem();
    let target = clearance * (1.0 + 1e-6);
    // distances are affine along the ray from the centroid (where each is the apothem)
    let alpha = domain
        .signed_distances(p)
        .into_iter()
        .filter(|&d| d < target)
        .map(|d| (apothem - target) / (apothem - d))
        .fold(1.0, f64::min);
    let c = domain.centroid();
    c + (p - c) * alpha
}

/// Patch mesh at resolution `m` with per-vertex mean curvature in the
/// scalar channel. Vertices too close to the boundary for the difference
/// stencil are sampled at the nearest admissible interior point.
pub fn curvature_map(patch: &Patch, m: usize) -> Result<TriMesh> {
    curvature_map_with_step(patch, m, DEFAULT_STEP)
}

pub fn curvature_map_with_step(patch: &Patch, m: usize, h: f64) -> Result<TriMesh> {
    if m < 2 {
        return Err(Error::Usage("curvature map needs resolution >= 2".into()));
    }
    let dm = tessellate_domain(patch.domain(), m)?;
    let mut mesh = map_domain_mesh(patch, &dm)?;
    let local = centred(patch)?;
    let values = dm
        .points
        .par_iter()
        .map(|&q| {
            let q = if patch.domain().boundary_distance(q) < 2.0 * h {
                admissible_point(patch, q, 2.0 * h)
            } else {
                q
            };
            curvature_at(&local, q, h)
        })
        .collect::<Result<Vec<f64>>>()?;
    mesh.scalar = Some(values);
    Ok(mesh)
}
