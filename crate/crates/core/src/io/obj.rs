use std::fmt::Write;

use super::{format_sig9, number_error};
use crate::analysis::ContourSet;
use crate::error::{Error, Result};
use crate::mesher::TriMesh;
use crate::point::Point3;

/// Wavefront OBJ text: `v` lines, then `f` lines (1-based), then, when
/// contours are given, one block per polyline: its own `v` lines followed by
/// an `l` record. Closed polylines repeat their first index at the end.
pub fn write_obj(mesh: &TriMesh, contours: Option<&ContourSet>) -> String {
    let mut out = String::new();
    for v in &mesh.vertices {
        write_vertex(&mut out, *v);
    }
    for t in &mesh.triangles {
        writeln!(out, "f {} {} {}", t[0] + 1, t[1] + 1, t[2] + 1).unwrap();
    }
    if let Some(set) = contours {
        let mut next = mesh.vertices.len() + 1;
        for line in set.polylines() {
            if line.points.len() < 2 {
                continue;
            }
            for p in &line.points {
                write_vertex(&mut out, *p);
            }
            out.push('l');
            for k in 0..line.points.len() {
                write!(out, " {}", next + k).unwrap();
            }
            if line.closed {
                write!(out, " {next}").unwrap();
            }
            out.push('\n');
            next += line.points.len();
        }
    }
    out
}

fn write_vertex(out: &mut String, v: Point3) {
    writeln!(
        out,
        "v {} {} {}",
        format_sig9(v.x),
        format_sig9(v.y),
        format_sig9(v.z)
    )
    .unwrap();
}

/// Geometry read back from an OBJ file written by [`write_obj`].
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ObjData {
    pub vertices: Vec<Point3>,
    pub triangles: Vec<[usize; 3]>,
    /// 0-based vertex indices of each `l` record.
    pub polylines: Vec<Vec<usize>>,
}

/// Reads the subset of OBJ produced by [`write_obj`]: `v`, triangular `f`
/// and `l` records. Comments and blank lines are skipped.
pub fn read_obj(text: &str) -> Result<ObjData> {
    let mut data = ObjData::default();
    for (k, raw) in text.lines().enumerate() {
        let line_no = k + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let tag = tokens.next().unwrap_or_default();
        let rest: Vec<&str> = tokens.collect();
        match tag {
            "v" => {
                if rest.len() != 3 {
                    return Err(Error::Parse {
                        line: line_no,
                        column: 1,
                        message: "vertex needs 3 coordinates".into(),
                    });
                }
                let mut c = [0.0; 3];
                for (slot, tok) in c.iter_mut().zip(&rest) {
                    *slot = tok
                        .parse()
                        .map_err(|_| number_error(line_no, "coordinate", tok))?;
                }
                data.vertices.push(Point3::from(c));
            }
            "f" | "l" => {
                let idx = rest
                    .iter()
                    .map(|tok| {
                        let first = tok.split('/').next().unwrap_or_default();
                        match first.parse::<usize>() {
                            Ok(i) if i >= 1 => Ok(i - 1),
                            _ => Err(number_error(line_no, "index", tok)),
                        }
                    })
                    .collect::<Result<Vec<usize>>>()?;
                if tag == "f" {
                    if idx.len() != 3 {
                        return Err(Error::Parse {
                            line: line_no,
                            column: 1,
                            message: "only triangular faces are supported".into(),
                        });
                    }
                    data.triangles.push([idx[0], idx[1], idx[2]]);
                } else {
                    data.polylines.push(idx);
                }
            }
            _ => {
                return Err(Error::Parse {
                    line: line_no,
                    column: 1,
                    message: format!("unsupported record '{tag}'"),
                });
            }
        }
    }
    Ok(data)
}
