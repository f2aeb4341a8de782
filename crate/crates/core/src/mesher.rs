//! Concentric-ring tessellation of the domain polygon and its image under
//! the patch.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::domain::DomainPolygon;
use crate::error::{Error, Result};
use crate::point::{Point2, Point3};
use crate::surface::Patch;

/// Position of a boundary vertex: side index and curve parameter.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundaryTag {
    pub side: usize,
    pub t: f64,
}

/// Where a tessellation vertex sits in the ring structure. Ring 0 is the
/// centre; ring `ℓ` has `ℓ` vertices per side, `step` counting from the
/// side's start corner.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RingPosition {
    pub ring: usize,
    pub side: usize,
    pub step: usize,
}

/// Triangulated domain polygon.
#[derive(Debug, Clone, PartialEq)]
pub struct DomainMesh {
    pub points: Vec<Point2>,
    pub triangles: Vec<[usize; 3]>,
    pub boundary_tags: Vec<Option<BoundaryTag>>,
    pub rings: Vec<RingPosition>,
    pub resolution: usize,
}

/// Indexed triangle mesh in model space.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct TriMesh {
    pub vertices: Vec<Point3>,
    pub triangles: Vec<[usize; 3]>,
    pub boundary_tags: Vec<Option<BoundaryTag>>,
    /// Optional per-vertex scalar (mean curvature for curvature maps).
    pub scalar: Option<Vec<f64>>,
}

impl TriMesh {
    pub fn topology(&self) -> Topology {
        Topology::new(&self.triangles, self.vertices.len())
    }

    /// Indices of vertices that carry a boundary tag.
    pub fn boundary_vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.boundary_tags
            .iter()
            .enumerate()
            .filter_map(|(k, t)| t.map(|_| k))
    }

    pub fn is_boundary(&self, v: usize) -> bool {
        self.boundary_tags.get(v).is_some_and(|t| t.is_some())
    }
}

fn ring_offset(n: usize, m: usize, ring: usize) -> usize {
    // rings are stored from m down to 1, then the centre
    n * ((ring + 1)..=m).sum::<usize>()
}

/// Concentric-ring tessellation with `m` subdivisions per side.
///
/// Ring `m` lies on the polygon boundary with vertices at edge parameters
/// `k/m`; ring `ℓ` is the polygon scaled by `ℓ/m`. Adjacent rings are
/// stitched side by side, giving `n·m²` triangles, all counterclockwise.
pub fn tessellate_domain(domain: &DomainPolygon, m: usize) -> Result<DomainMesh> {
    if m == 0 {
        return Err(Error::Usage("resolution must be at least 1".into()));
    }
    let n = domain.sides();
    let vertex_count = 1 + n * m * (m + 1) / 2;
    let mut points = Vec::with_capacity(vertex_count);
    let mut boundary_tags = Vec::with_capacity(vertex_count);
    let mut rings = Vec::with_capacity(vertex_count);

    for ring in (1..=m).rev() {
        let scale = ring as f64 / m as f64;
        for side in 0..n {
            for step in 0..ring {
                let t = step as f64 / ring as f64;
                let q = domain.edge_point(side, t);
                points.push(if ring == m { q } else { q * scale });
                boundary_tags.push((ring == m).then(|| BoundaryTag {
                    side,
                    t: step as f64 / m as f64,
                }));
                rings.push(RingPosition { ring, side, step });
            }
        }
    }
    let centre = points.len();
    points.push(domain.centroid());
    boundary_tags.push(None);
    rings.push(RingPosition {
        ring: 0,
        side: 0,
        step: 0,
    });
    debug_assert_eq!(points.len(), vertex_count);

    let index = |ring: usize, side: usize, step: usize| -> usize {
        if ring == 0 {
            return centre;
        }
        let (side, step) = if step == ring {
            ((side + 1) % n, 0)
        } else {
            (side, step)
        };
        ring_offset(n, m, ring) + side * ring + step
    };

    let mut triangles = Vec::with_capacity(n * m * m);
    for ring in (1..=m).rev() {
        let inner = ring - 1;
        for side in 0..n {
            for k in 0..ring {
                let b = if inner == 0 {
                    centre
                } else {
                    index(inner, side, k)
                };
                triangles.push([index(ring, side, k), index(ring, side, k + 1), b]);
                if k + 1 < ring {
                    triangles.push([
                        index(inner, side, k),
                        index(ring, side, k + 1),
                        index(inner, side, k + 1),
                    ]);
                }
            }
        }
    }

    Ok(DomainMesh {
        points,
        triangles,
        boundary_tags,
        rings,
        resolution: m,
    })
}

/// Tessellates the patch domain and maps it onto the surface. Boundary
/// vertices are taken straight from the boundary curves.
pub fn mesh_patch(patch: &Patch, m: usize) -> Result<TriMesh> {
    map_domain_mesh(patch, &tessellate_domain(patch.domain(), m)?)
}

/// Maps an existing tessellation of the patch domain onto the surface.
pub fn map_domain_mesh(patch: &Patch, dm: &DomainMesh) -> Result<TriMesh> {
    let sides = patch.boundary().sides();
    let vertices = dm
        .points
        .par_iter()
        .zip(dm.boundary_tags.par_iter())
        .map(|(&q, tag)| match tag {
            Some(tag) => Ok(sides[tag.side].point_at(tag.t)),
            None => patch.eval(q),
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(TriMesh {
        vertices,
        triangles: dm.triangles.clone(),
        boundary_tags: dm.boundary_tags.clone(),
        scalar: None,
    })
}

/// Edge incidence summary of a triangle list.
#[derive(Debug, Clone, PartialEq)]
pub struct Topology {
    pub vertex_count: usize,
    pub face_count: usize,
    /// Undirected edge `(lo, hi)` mapped to its number of incident triangles.
    pub edges: BTreeMap<(usize, usize), usize>,
}

impl Topology {
    pub fn new(triangles: &[[usize; 3]], vertex_count: usize) -> Self {
        let mut edges = BTreeMap::new();
        for tri in triangles {
            for e in 0..3 {
                let a = tri[e];
                let b = tri[(e + 1) % 3];
                *edges.entry((a.min(b), a.max(b))).or_insert(0) += 1;
            }
        }
        Self {
            vertex_count,
            face_count: triangles.len(),
            edges,
        }
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count as i64 - self.edges.len() as i64 + self.face_count as i64
    }

    /// Every edge borders one or two triangles.
    pub fn is_manifold(&self) -> bool {
        self.edges.values().all(|&c| c == 1 || c == 2)
    }

    pub fn boundary_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().filter(|(_, &c)| c == 1).map(|(&e, _)| e)
    }

    /// Vertex adjacency lists, sorted.
    pub fn neighbours(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertex_count];
        for &(a, b) in self.edges.keys() {
            adj[a].push(b);
            adj[b].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }
}
