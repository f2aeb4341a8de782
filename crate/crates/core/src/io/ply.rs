use std::fmt::Write;

use super::{format_sig9, number_error};
use crate::error::{Error, Result};
use crate::mesher::TriMesh;
use crate::point::Point3;

const HEADER_VERTEX: &str =
    "property double x\nproperty double y\nproperty double z\nproperty double quality\n";
const HEADER_FACE: &str = "property list uchar int vertex_indices\n";

/// ASCII PLY with the per-vertex scalar channel stored as `quality`.
pub fn write_ply_scalar(mesh: &TriMesh) -> Result<String> {
    let scalar = mesh
        .scalar
        .as_ref()
        .ok_or_else(|| Error::Usage("mesh has no scalar channel".into()))?;
    if scalar.len() != mesh.vertices.len() {
        return Err(Error::Usage(format!(
            "scalar channel has {} values for {} vertices",
            scalar.len(),
            mesh.vertices.len()
        )));
    }
    let mut out = String::new();
    out.push_str("ply\nformat ascii 1.0\n");
    writeln!(out, "element vertex {}", mesh.vertices.len()).unwrap();
    out.push_str(HEADER_VERTEX);
    writeln!(out, "element face {}", mesh.triangles.len()).unwrap();
    out.push_str(HEADER_FACE);
    out.push_str("end_header\n");
    for (v, q) in mesh.vertices.iter().zip(scalar) {
        writeln!(
            out,
            "{} {} {} {}",
            format_sig9(v.x),
            format_sig9(v.y),
            format_sig9(v.z),
            format_sig9(*q)
        )
        .unwrap();
    }
    for t in &mesh.triangles {
        writeln!(out, "3 {} {} {}", t[0], t[1], t[2]).unwrap();
    }
    Ok(out)
}

/// Reads back a file produced by [`write_ply_scalar`]. Boundary tags are not
/// stored in the format and come back empty.
pub fn read_ply_scalar(text: &str) -> Result<TriMesh> {
    let mut lines = text.lines().enumerate().map(|(k, l)| (k + 1, l.trim()));
    expect_line(&mut lines, "ply")?;
    expect_line(&mut lines, "format ascii 1.0")?;

    let mut counts = [0usize; 2];
    let mut header_lines = Vec::new();
    for (n, l) in lines.by_ref() {
        if l == "end_header" {
            break;
        }
        header_lines.push((n, l));
    }
    let mut element = None;
    let mut vertex_props = Vec::new();
    for (n, l) in header_lines {
        let tokens: Vec<&str> = l.split_whitespace().collect();
        match tokens.as_slice() {
            ["element", "vertex", c] => {
                counts[0] = c.parse().map_err(|_| number_error(n, "count", c))?;
                element = Some(0);
            }
            ["element", "face", c] => {
                counts[1] = c.parse().map_err(|_| number_error(n, "count", c))?;
                element = Some(1);
            }
            ["property", "double", name] if element == Some(0) => vertex_props.push(*name),
            ["property", "list", _, _, "vertex_indices"] if element == Some(1) => {}
            ["comment", ..] => {}
            _ => {
                return Err(Error::Parse {
                    line: n,
                    column: 1,
                    message: format!("unsupported header line '{l}'"),
                })
            }
        }
    }
    if vertex_props != ["x", "y", "z", "quality"] {
        return Err(Error::Schema(format!(
            "vertex properties must be x y z quality, got {}",
            vertex_props.join(" ")
        )));
    }

    let mut mesh = TriMesh {
        vertices: Vec::with_capacity(counts[0]),
        triangles: Vec::with_capacity(counts[1]),
        boundary_tags: vec![None; counts[0]],
        scalar: Some(Vec::with_capacity(counts[0])),
    };
    for _ in 0..counts[0] {
        let (n, l) = lines.next().ok_or_else(|| truncated("vertex"))?;
        let vals = l
            .split_whitespace()
            .map(|t| t.parse::<f64>().map_err(|_| number_error(n, "number", t)))
            .collect::<Result<Vec<f64>>>()?;
        if vals.len() != 4 {
            return Err(Error::Parse {
                line: n,
                column: 1,
                message: "vertex line needs 4 values".into(),
            });
        }
        mesh.vertices.push(Point3::new(vals[0], vals[1], vals[2]));
        mesh.scalar.as_mut().unwrap().push(vals[3]);
    }
    for _ in 0..counts[1] {
        let (n, l) = lines.next().ok_or_else(|| truncated("face"))?;
        let vals = l
            .split_whitespace()
            .map(|t| t.parse::<usize>().map_err(|_| number_error(n, "index", t)))
            .collect::<Result<Vec<usize>>>()?;
        if vals.len() != 4 || vals[0] != 3 || vals[1..].iter().any(|&i| i >= counts[0]) {
            return Err(Error::Parse {
                line: n,
                column: 1,
                message: "face line must be '3 a b c' with in-range indices".into(),
            });
        }
        mesh.triangles.push([vals[1], vals[2], vals[3]]);
    }
    Ok(mesh)
}

fn expect_line<'a>(lines: &mut impl Iterator<Item = (usize, &'a str)>, want: &str) -> Result<()> {
    match lines.next() {
        Some((_, l)) if l == want => Ok(()),
        Some((n, l)) => Err(Error::Parse {
            line: n,
            column: 1,
            message: format!("expected '{want}', found '{l}'"),
        }),
        None => Err(truncated("header")),
    }
}

fn truncated(what: &str) -> Error {
    Error::Parse {
        line: 0,
        column: 0,
        message: format!("unexpected end of file in {what} list"),
    }
}
