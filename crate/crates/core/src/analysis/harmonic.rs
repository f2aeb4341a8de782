use crate::boundary::BoundaryLoop;
use crate::domain::DomainPolygon;
use crate::error::{Error, Result};
use crate::mesher::{tessellate_domain, Topology, TriMesh};
use crate::point::{BoundingBox, Point3};

/// Convergence target for the interior solve, relative to the bounding-box
/// diagonal of the boundary samples.
pub const RELATIVE_RESIDUAL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolveStats {
    pub iterations: usize,
    /// Final max-norm residual of the interior system, in model units.
    pub residual: f64,
    pub tolerance: f64,
}

/// Sum of squared edge lengths over the unique edges of the mesh: the
/// uniform-weight discrete Dirichlet energy.
pub fn dirichlet_energy(mesh: &TriMesh) -> f64 {
    mesh.topology()
        .edges
        .keys()
        .map(|&(a, b)| {
            let d = mesh.vertices[a] - mesh.vertices[b];
            d.dot(d)
        })
        .sum()
}

/// Largest distance between an interior vertex and the average of its
/// neighbours.
pub fn umbrella_residual(mesh: &TriMesh) -> f64 {
    let adj = mesh.topology().neighbours();
    (0..mesh.vertices.len())
        .filter(|&v| !mesh.is_boundary(v) && !adj[v].is_empty())
        .map(|v| {
            let avg = adj[v]
                .iter()
                .fold(Point3::ZERO, |acc, &u| acc + mesh.vertices[u])
                / adj[v].len() as f64;
            (mesh.vertices[v] - avg).norm()
        })
        .fold(0.0, f64::max)
}

/// Harmonic ("soap film") fill of the loop on the ring tessellation with
/// `m` subdivisions per side.
pub fn harmonic_fill(boundary: &BoundaryLoop, m: usize) -> Result<TriMesh> {
    harmonic_fill_with_stats(boundary, m).map(|(mesh, _)| mesh)
}

pub fn harmonic_fill_with_stats(
    boundary: &BoundaryLoop,
    m: usize,
) -> Result<(TriMesh, SolveStats)> {
    if m < 2 {
        return Err(Error::Usage("harmonic fill needs resolution >= 2".into()));
    }
    let domain = DomainPolygon::new(boundary.len())?;
    let dm = tessellate_domain(&domain, m)?;
    let sides = boundary.sides();

    let fixed: Vec<Option<Point3>> = dm
        .boundary_tags
        .iter()
        .map(|tag| tag.map(|t| sides[t.side].point_at(t.t)))
        .collect();
    let samples: Vec<Point3> = fixed.iter().flatten().copied().collect();
    let centroid = samples.iter().fold(Point3::ZERO, |a, &p| a + p) / samples.len() as f64;
    let diagonal = BoundingBox::from_points(samples.iter().copied())
        .map(|b| b.diagonal())
        .unwrap_or(0.0);

    // initial guess: blend each ring vertex between the centroid and the
    // boundary point in the same ring direction
    let guess: Vec<Point3> = dm
        .rings
        .iter()
        .zip(&fixed)
        .map(|(pos, fixed)| match (fixed, pos.ring) {
            (Some(p), _) => *p,
            (None, 0) => centroid,
            (None, ring) => {
                let w = ring as f64 / m as f64;
                let on_curve = sides[pos.side].point_at(pos.step as f64 / ring as f64);
                centroid.lerp(on_curve, w)
            }
        })
        .collect();

    let topo = Topology::new(&dm.triangles, dm.points.len());
    let system = InteriorSystem::new(&topo.neighbours(), &fixed);
    let tolerance = RELATIVE_RESIDUAL * diagonal.max(f64::MIN_POSITIVE);
    let (solution, stats) = system.solve(&guess, tolerance)?;

    let mut vertices = guess;
    for (slot, &v) in system.interior.iter().enumerate() {
        vertices[v] = solution[slot];
    }
    Ok((
        TriMesh {
            vertices,
            triangles: dm.triangles,
            boundary_tags: dm.boundary_tags,
            scalar: None,
        },
        stats,
    ))
}

/// Uniform graph Laplacian restricted to interior vertices:
/// `deg(v) x_v - Σ_{u interior} x_u = Σ_{u fixed} p_u`.
struct InteriorSystem {
    interior: Vec<usize>,
    degree: Vec<f64>,
    /// Interior neighbours of each interior vertex, as slots into `interior`.
    coupled: Vec<Vec<usize>>,
    rhs: Vec<Point3>,
}

impl InteriorSystem {
    fn new(adjacency: &[Vec<usize>], fixed: &[Option<Point3>]) -> Self {
        let interior: Vec<usize> = (0..fixed.len()).filter(|&v| fixed[v].is_none()).collect();
        let mut slot = vec![usize::MAX; fixed.len()];
        for (k, &v) in interior.iter().enumerate() {
            slot[v] = k;
        }
        let mut degree = Vec::with_capacity(interior.len());
        let mut coupled = Vec::with_capacity(interior.len());
        let mut rhs = Vec::with_capacity(interior.len());
        for &v in &interior {
            degree.push(adjacency[v].len() as f64);
            let mut inner = Vec::new();
            let mut b = Point3::ZERO;
            for &u in &adjacency[v] {
                match fixed[u] {
                    Some(p) => b += p,
                    None => inner.push(slot[u]),
                }
            }
            coupled.push(inner);
            rhs.push(b);
        }
        Self {
            interior,
            degree,
            coupled,
            rhs,
        }
    }

    fn apply(&self, x: &[f64], out: &mut [f64]) {
        for k in 0..x.len() {
            let off: f64 = self.coupled[k].iter().map(|&j| x[j]).sum();
            out[k] = self.degree[k] * x[k] - off;
        }
    }

    fn residual(&self, x: &[f64], b: &[f64], r: &mut [f64]) -> f64 {
        self.apply(x, r);
        let mut worst = 0.0f64;
        for k in 0..x.len() {
            r[k] = b[k] - r[k];
            worst = worst.max(r[k].abs());
        }
        worst
    }

    /// Conjugate gradients, one coordinate at a time.
    fn solve(&self, guess: &[Point3], tolerance: f64) -> Result<(Vec<Point3>, SolveStats)> {
        let count = self.interior.len();
        let cap = (10 * count).max(10);
        let mut coords = [vec![0.0; count], vec![0.0; count], vec![0.0; count]];
        let mut total_iterations = 0;
        let mut worst_residual = 0.0f64;

        for (axis, x) in coords.iter_mut().enumerate() {
            let component = |p: &Point3| p.to_array()[axis];
            for (k, &v) in self.interior.iter().enumerate() {
                x[k] = component(&guess[v]);
            }
            let b: Vec<f64> = self.rhs.iter().map(component).collect();
            let (iterations, residual) = self.conjugate_gradient(x, &b, tolerance, cap)?;
            total_iterations += iterations;
            worst_residual = worst_residual.max(residual);
        }

        let solution = (0..count)
            .map(|k| Point3::new(coords[0][k], coords[1][k], coords[2][k]))
            .collect();
        Ok((
            solution,
            SolveStats {
                iterations: total_iterations,
                residual: worst_residual,
                tolerance,
            },
        ))
    }

    fn conjugate_gradient(
        &self,
        x: &mut [f64],
        b: &[f64],
        tolerance: f64,
        cap: usize,
    ) -> Result<(usize, f64)> {
        let n = x.len();
        let mut r = vec![0.0; n];
        let mut ap = vec![0.0; n];
        let mut true_residual = self.residual(x, b, &mut r);
        if true_residual <= tolerance {
            return Ok((0, true_residual));
        }
        let mut p = r.clone();
        let mut rr: f64 = r.iter().map(|v| v * v).sum();
        for iteration in 1..=cap {
            self.apply(&p, &mut ap);
            let pap: f64 = p.iter().zip(&ap).map(|(a, b)| a * b).sum();
            if pap <= 0.0 {
                break;
            }
            let alpha = rr / pap;
            for k in 0..n {
                x[k] += alpha * p[k];
                r[k] -= alpha * ap[k];
            }
            let recursive = r.iter().fold(0.0f64, |m, v| m.max(v.abs()));
            if recursive <= tolerance {
                true_residual = self.residual(x, b, &mut r);
                if true_residual <= tolerance {
                    return Ok((iteration, true_residual));
                }
                // the recursive residual drifted; restart from the true one
                p.copy_from_slice(&r);
                rr = r.iter().map(|v| v * v).sum();
                continue;
            }
            let rr_next: f64 = r.iter().map(|v| v * v).sum();
            let beta = rr_next / rr;
            rr = rr_next;
            for k in 0..n {
                p[k] = r[k] + beta * p[k];
            }
        }
        true_residual = self.residual(x, b, &mut r);
        if true_residual <= tolerance {
            return Ok((cap, true_residual));
        }
        Err(Error::Numeric {
            iterations: cap,
            residual: true_residual,
        })
    }
}
