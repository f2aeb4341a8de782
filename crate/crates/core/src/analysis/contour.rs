use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::mesher::TriMesh;
use crate::point::Point3;

#[derive(Debug, Clone, PartialEq)]
pub struct Polyline {
    pub points: Vec<Point3>,
    /// Closed polylines do not repeat their first point at the end.
    pub closed: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ContourLevel {
    pub level: f64,
    pub polylines: Vec<Polyline>,
}

/// Planar sections of a mesh by the planes `axis · x = level`.
#[derive(Debug, Clone, PartialEq)]
pub struct ContourSet {
    pub axis: Point3,
    pub levels: Vec<ContourLevel>,
}

impl ContourSet {
    pub fn polylines(&self) -> impl Iterator<Item = &Polyline> {
        self.levels.iter().flat_map(|l| l.polylines.iter())
    }

    pub fn is_empty(&self) -> bool {
        self.polylines().next().is_none()
    }
}

type EdgeKey = (usize, usize);

struct Segment {
    ends: [(EdgeKey, Point3); 2],
}

/// Marching-triangles isolines of `axis · vertex` at `count` levels spaced
/// uniformly strictly inside the projected range of the mesh.
pub fn contours(mesh: &TriMesh, axis: Point3, count: usize) -> Result<ContourSet> {
    if count == 0 {
        return Err(Error::Usage("contour count must be at least 1".into()));
    }
    if mesh.vertices.is_empty() || mesh.triangles.is_empty() {
        return Err(Error::Usage("cannot contour an empty mesh".into()));
    }
    let len = axis.norm();
    if !(len > 0.0 && len.is_finite()) {
        return Err(Error::Usage("contour axis must be a nonzero vector".into()));
    }
    let axis = axis / len;
    let values: Vec<f64> = mesh.vertices.iter().map(|v| axis.dot(*v)).collect();
    let lo = values.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);

    let levels = (0..count)
        .map(|k| {
            let level = lo + (hi - lo) * (k + 1) as f64 / (count + 1) as f64;
            ContourLevel {
                level,
                polylines: isolines(mesh, &values, level),
            }
        })
        .collect();
    Ok(ContourSet { axis, levels })
}

fn isolines(mesh: &TriMesh, values: &[f64], level: f64) -> Vec<Polyline> {
    let above = |v: usize| values[v] >= level;
    let crossing = |a: usize, b: usize| -> (EdgeKey, Point3) {
        let (a, b) = (a.min(b), a.max(b));
        let t = (level - values[a]) / (values[b] - values[a]);
        ((a, b), mesh.vertices[a].lerp(mesh.vertices[b], t))
    };

    let mut segments = Vec::new();
    for tri in &mesh.triangles {
        let flags = tri.map(above);
        if flags[0] == flags[1] && flags[1] == flags[2] {
            continue;
        }
        let mut ends = Vec::with_capacity(2);
        for e in 0..3 {
            let (a, b) = (tri[e], tri[(e + 1) % 3]);
            if above(a) != above(b) {
                ends.push(crossing(a, b));
            }
        }
        debug_assert_eq!(ends.len(), 2);
        segments.push(Segment {
            ends: [ends[0], ends[1]],
        });
    }

    let mut at_edge: HashMap<EdgeKey, Vec<usize>> = HashMap::new();
    for (k, s) in segments.iter().enumerate() {
        for (key, _) in &s.ends {
            at_edge.entry(*key).or_default().push(k);
        }
    }

    let mut used = vec![false; segments.len()];
    let mut out = Vec::new();

    // Open chains start at an edge touched by a single segment (mesh boundary).
    let mut starts: Vec<(usize, usize)> = Vec::new();
    for (k, s) in segments.iter().enumerate() {
        for (end, (key, _)) in s.ends.iter().enumerate() {
            if at_edge[key].len() == 1 {
                starts.push((k, end));
            }
        }
    }
    for (first, end) in starts {
        if !used[first] {
            out.push(walk(&segments, &at_edge, &mut used, first, end, false));
        }
    }
    for first in 0..segments.len() {
        if !used[first] {
            out.push(walk(&segments, &at_edge, &mut used, first, 0, true));
        }
    }
    out
}

fn walk(
    segments: &[Segment],
    at_edge: &HashMap<EdgeKey, Vec<usize>>,
    used: &mut [bool],
    first: usize,
    entry: usize,
    closed: bool,
) -> Polyline {
    let mut points = vec![segments[first].ends[entry].1];
    let mut current = first;
    let mut entry = entry;
    loop {
        used[current] = true;
        let (key, point) = segments[current].ends[1 - entry];
        let next = at_edge[&key].iter().copied().find(|&k| !used[k]);
        match next {
            Some(k) => {
                push_distinct(&mut points, point);
                entry = if segments[k].ends[0].0 == key { 0 } else { 1 };
                current = k;
            }
            None => {
                if !closed {
                    push_distinct(&mut points, point);
                }
                break;
            }
        }
    }
    Polyline { points, closed }
}

fn push_distinct(points: &mut Vec<Point3>, p: Point3) {
    if points.last() != Some(&p) {
        points.push(p);
    }
}
