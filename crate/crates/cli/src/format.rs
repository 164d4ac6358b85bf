//! Stable machine-readable point-set format: one JSON schema for R^d and C^d
//! sets, complex coordinates always serialized as [re, im] pairs.

use fekete::basis::Point;
use fekete::{EvalBasis, NodeArrayStage, Provenance};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Serialize, Deserialize)]
pub struct PointSetFile {
    pub schema_version: u32,
    pub d: usize,
    pub n: usize,
    pub provenance: String,
    /// points[j][coordinate] = [re, im].
    pub points: Vec<Vec<[f64; 2]>>,
}

impl PointSetFile {
    pub fn from_stage(stage: &NodeArrayStage) -> Self {
        PointSetFile {
            schema_version: SCHEMA_VERSION,
            d: stage.dim_d(),
            n: stage.degree_n(),
            provenance: stage.provenance().as_str().to_string(),
            points: stage
                .points()
                .iter()
                .map(|p| p.coords().iter().map(|z| [z.re, z.im]).collect())
                .collect(),
        }
    }

    pub fn to_points(&self) -> Vec<Point> {
        self.points
            .iter()
            .map(|coords| {
                Point::new(
                    coords
                        .iter()
                        .map(|&[re, im]| Complex64::new(re, im))
                        .collect(),
                )
            })
            .collect()
    }

    /// Rebuild a stage, re-checking unisolvency.
    pub fn to_stage(&self) -> fekete::Result<NodeArrayStage> {
        let provenance = match self.provenance.as_str() {
            "fekete" => Provenance::Fekete,
            "leja" => Provenance::Leja,
            "padua" => Provenance::Padua,
            "bos" => Provenance::Bos,
            "intertwined" => Provenance::Intertwined,
            _ => Provenance::Custom,
        };
        let pts = self.to_points();
        let all_real = pts.iter().all(|p| p.max_imag() == 0.0);
        let eval = if all_real {
            EvalBasis::ProductChebyshev
        } else {
            EvalBasis::Monomial
        };
        NodeArrayStage::new(self.d, self.n, pts, provenance, eval)
    }
}

/// Fixed-precision scientific float formatting, byte-stable across runs.
pub fn fmt_value(v: f64) -> String {
    format!("{v:.12e}")
}
