use serde::{Deserialize, Serialize};
use serde_json::error::Category;

use crate::boundary::BoundaryLoop;
use crate::curves::BezierCurve;
use crate::error::{Error, Result};
use crate::point::Point3;

pub const SCHEMA_VERSION: u32 = 1;

/// On-disk description of a boundary loop.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LoopDocument {
    pub version: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weld_tolerance: Option<f64>,
    pub sides: Vec<SideDocument>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SideDocument {
    pub degree: usize,
    pub control_points: Vec<[f64; 3]>,
}

impl LoopDocument {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| match e.classify() {
            Category::Data => Error::Schema(e.to_string()),
            _ => Error::Parse {
                line: e.line(),
                column: e.column(),
                message: strip_position(&e.to_string()),
            },
        })
    }

    pub fn from_loop(boundary: &BoundaryLoop) -> Self {
        Self {
            version: SCHEMA_VERSION,
            weld_tolerance: None,
            sides: boundary
                .sides()
                .iter()
                .map(|c| SideDocument {
                    degree: c.degree(),
                    control_points: c.control_points().iter().map(|p| p.to_array()).collect(),
                })
                .collect(),
        }
    }

    /// Schema checks beyond what the JSON grammar enforces.
    pub fn validate(&self) -> Result<()> {
        if self.version != SCHEMA_VERSION {
            return Err(Error::Schema(format!(
                "version: unsupported value {} (expected {SCHEMA_VERSION})",
                self.version
            )));
        }
        if self.sides.len() < 3 {
            return Err(Error::Schema(format!(
                "sides: need ≥ 3, got {}",
                self.sides.len()
            )));
        }
        for (k, side) in self.sides.iter().enumerate() {
            if side.control_points.len() != side.degree + 1 {
                return Err(Error::Schema(format!(
                    "sides[{k}].control_points: degree {} needs {} points, got {}",
                    side.degree,
                    side.degree + 1,
                    side.control_points.len()
                )));
            }
        }
        if let Some(t) = self.weld_tolerance {
            if t < 0.0 {
                return Err(Error::Schema(format!(
                    "weld_tolerance: must be ≥ 0, got {t}"
                )));
            }
        }
        Ok(())
    }

    pub fn curves(&self) -> Result<Vec<BezierCurve>> {
        self.sides
            .iter()
            .map(|s| BezierCurve::new(s.control_points.iter().map(|&p| Point3::from(p)).collect()))
            .collect()
    }

    pub fn into_loop(self) -> Result<BoundaryLoop> {
        self.validate()?;
        BoundaryLoop::new(self.curves()?, self.weld_tolerance)
    }
}

fn strip_position(message: &str) -> String {
    match message.rfind(" at line ") {
        Some(k) => message[..k].to_string(),
        None => message.to_string(),
    }
}

/// Parses and validates a loop document.
pub fn read_loop(text: &str) -> Result<BoundaryLoop> {
    LoopDocument::parse(text)?.into_loop()
}

/// JSON text with one side per line and a trailing newline.
pub fn write_loop(doc: &LoopDocument) -> String {
    let num = |x: f64| serde_json::to_string(&x).expect("finite coordinate");
    let mut out = String::from("{\n");
    out.push_str(&format!("  \"version\": {},\n", doc.version));
    if let Some(t) = doc.weld_tolerance {
        out.push_str(&format!("  \"weld_tolerance\": {},\n", num(t)));
    }
    out.push_str("  \"sides\": [\n");
    for (k, side) in doc.sides.iter().enumerate() {
        let points: Vec<String> = side
            .control_points
            .iter()
            .map(|p| format!("[{}, {}, {}]", num(p[0]), num(p[1]), num(p[2])))
            .collect();
        out.push_str(&format!(
            "    {{\"degree\": {}, \"control_points\": [{}]}}{}\n",
            side.degree,
            points.join(", "),
            if k + 1 < doc.sides.len() { "," } else { "" }
        ));
    }
    out.push_str("  ]\n}\n");
    out
}
