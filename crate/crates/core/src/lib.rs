//! Multi-sided C⁰ Coons patches.
//!
//! Given `n >= 3` Bézier curves meeting end to end, [`Patch`] builds a
//! surface that interpolates all of them from positional data alone. Each
//! side gets a four-sided Coons [`Ribbon`] spanning it, its two neighbours
//! and a cubic bridging the far corners; the ribbons are blended over a
//! regular `n`-gon domain parameterized by Wachspress coordinates.
//!
//! ```
//! use ncoons::{fixtures, mesh_patch, Patch, Point2};
//!
//! let patch = Patch::new(fixtures::raised_pentagon()).unwrap();
//! let centre = patch.eval(Point2::new(0.0, 0.0)).unwrap();
//! assert!(centre.z > 0.0);
//!
//! let mesh = mesh_patch(&patch, 8).unwrap();
//! assert_eq!(mesh.triangles.len(), 5 * 8 * 8);
//! ```
//!
//! The [`analysis`] module adds mean-curvature maps, planar contouring and
//! a harmonic ("soap film") fill for comparison; [`io`] reads loop documents
//! and writes OBJ / PLY meshes.

pub mod analysis;
pub mod boundary;
pub mod curves;
pub mod domain;
mod error;
pub mod fixtures;
pub mod io;
pub mod mesher;
mod point;
pub mod ribbon;
pub mod surface;

pub use boundary::BoundaryLoop;
pub use curves::{BezierCurve, CurveEnd};
pub use domain::{BaryCoords, DomainPolygon, LocalParams};
pub use error::{Error, Result};
pub use mesher::{
    map_domain_mesh, mesh_patch, tessellate_domain, BoundaryTag, DomainMesh, Topology, TriMesh,
};
pub use point::{BoundingBox, Point2, Point3};
pub use ribbon::Ribbon;
pub use surface::Patch;
