//! Surface quality evaluation and the harmonic comparison surface.

mod contour;
mod curvature;
mod harmonic;

pub use contour::{contours, ContourLevel, ContourSet, Polyline};
pub use curvature::{
    curvature_map, curvature_map_with_step, mean_curvature, mean_curvature_of, DEFAULT_STEP,
};
pub use harmonic::{
    dirichlet_energy, harmonic_fill, harmonic_fill_with_stats, umbrella_residual, SolveStats,
    RELATIVE_RESIDUAL,
};
