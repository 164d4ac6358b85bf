//! The Lagrange interpolation operator L_n, sup-norm error diagnostics, and
//! geometric-rate probes for holomorphic targets.

use crate::basis::Point;
use crate::error::Result;
use crate::meshes::Mesh;
use crate::vandermonde::{EvalBasis, FlipEvaluator, NodeArrayStage};
use num_complex::Complex64;

/// A degree-n interpolant tied to a stage. Coefficients are stored in the
/// stage's evaluation basis (graded order); for monomial stages that is the
/// graded monomial basis itself.
pub struct InterpolantPn {
    flips: FlipEvaluator,
    coefficients: Vec<Complex64>,
    degree_n: usize,
}

impl InterpolantPn {
    pub fn coefficients(&self) -> &[Complex64] {
        &self.coefficients
    }

    pub fn degree_n(&self) -> usize {
        self.degree_n
    }

    pub fn eval_basis(&self) -> EvalBasis {
        self.flips.eval_basis()
    }

    pub fn eval(&self, z: &Point) -> Result<Complex64> {
        self.flips.eval_with_coefficients(&self.coefficients, z)
    }
}

/// Interpolate samples given at the stage nodes: one pivoted factorization
/// serves both the FLIPs and this transposed coefficient solve.
pub fn lagrange_interpolate(stage: &NodeArrayStage, samples: &[Complex64]) -> Result<InterpolantPn> {
    let flips = FlipEvaluator::new(stage)?;
    lagrange_interpolate_with(flips, stage.degree_n(), samples)
}

/// Same, reusing an existing factorization.
pub fn lagrange_interpolate_with(
    flips: FlipEvaluator,
    degree_n: usize,
    samples: &[Complex64],
) -> Result<InterpolantPn> {
    let coefficients = flips.interpolation_coefficients(samples)?;
    Ok(InterpolantPn {
        flips,
        coefficients,
        degree_n,
    })
}

/// Sample a scalar function at the stage nodes.
pub fn sample(stage: &NodeArrayStage, f: impl Fn(&Point) -> Complex64) -> Vec<Complex64> {
    stage.points().iter().map(f).collect()
}

/// Max over the evaluation mesh of |f - p|.
pub fn sup_error(
    interp: &InterpolantPn,
    f: impl Fn(&Point) -> Complex64,
    eval_mesh: &Mesh,
) -> Result<f64> {
    let mut worst = 0.0f64;
    for p in eval_mesh.points() {
        let err = (f(p) - interp.eval(p)?).norm();
        worst = worst.max(err);
    }
    Ok(worst)
}

/// Raw geometric-rate data (n, error, error^(1/n)) for a family of stages of
/// increasing degree. For targets with a singularity at pluripotential
/// distance R the root-rate should settle near 1/R.
pub fn holo_convergence_probe(
    stages: &[NodeArrayStage],
    f: impl Fn(&Point) -> Complex64,
    eval_mesh: &Mesh,
) -> Result<Vec<(usize, f64, f64)>> {
    let mut out = Vec::with_capacity(stages.len());
    for stage in stages {
        let samples = sample(stage, &f);
        let interp = lagrange_interpolate(stage, &samples)?;
        let err = sup_error(&interp, &f, eval_mesh)?;
        let n = stage.degree_n();
        out.push((n, err, err.powf(1.0 / n as f64)));
    }
    Ok(out)
}
