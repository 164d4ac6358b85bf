//! Python extension module exposing the node generators and the main
//! diagnostics. Complex coordinates cross the boundary as Python complex
//! numbers.

use fekete::basis::{dim_pn as core_dim_pn, ln_sum as core_ln_sum, Point};
use fekete::diagnostics::{
    bos_vdm_limit as core_bos_limit, l_functional as core_l_functional,
    lebesgue_constant as core_lebesgue, moment_distance, tdiam_ball_closed_form,
    tdiam_simplex_closed_form, EquilibriumReference,
};
use fekete::diagnostics::empirical_measure;
use fekete::kergin::{
    kergin_algebra_checks, kergin_interpolation_check, KerginNodeTuple, PolynomialOracle,
};
use fekete::meshes::{
    disk_boundary_mesh, interval_mesh, real_disk_mesh, simplex_mesh, square_mesh, Mesh,
};
use fekete::points::{
    approx_fekete_greedy, bos_array as core_bos_array, discrete_leja as core_discrete_leja,
    intertwine, leja_disk_exact, padua_points as core_padua, r_leja as core_r_leja,
    RadialDistribution,
};
use fekete::{tdiam_estimate as core_tdiam, NodeArrayStage};
use num_complex::Complex64;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn err(e: fekete::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn mesh_for(set: &str, n: usize, density: usize) -> PyResult<Mesh> {
    match set {
        "interval" => interval_mesh(n, density).map_err(err),
        "circle" => disk_boundary_mesh(n, density).map_err(err),
        "square" => square_mesh(n, density).map_err(err),
        "disk" => real_disk_mesh(n, density, density).map_err(err),
        "simplex" => simplex_mesh(2, n, density).map_err(err),
        other => Err(PyValueError::new_err(format!(
            "unknown set '{other}' (expected interval, circle, square, disk or simplex)"
        ))),
    }
}

fn radial(g: &str) -> PyResult<RadialDistribution> {
    match g {
        "chebyshev" => Ok(RadialDistribution::chebyshev()),
        "equilibrium" => Ok(RadialDistribution::equilibrium()),
        "identity" => Ok(RadialDistribution::identity()),
        "square" => Ok(RadialDistribution::square()),
        other => Err(PyValueError::new_err(format!(
            "unknown radial distribution '{other}'"
        ))),
    }
}

/// A degree-n unisolvent node array.
#[pyclass(name = "PointSet")]
struct PyPointSet {
    stage: NodeArrayStage,
}

#[pymethods]
impl PyPointSet {
    #[getter]
    fn d(&self) -> usize {
        self.stage.dim_d()
    }

    #[getter]
    fn n(&self) -> usize {
        self.stage.degree_n()
    }

    #[getter]
    fn provenance(&self) -> &'static str {
        self.stage.provenance().as_str()
    }

    /// Nodes as a list of coordinate lists of Python complex numbers.
    fn points(&self) -> Vec<Vec<Complex64>> {
        self.stage
            .points()
            .iter()
            .map(|p| p.coords().to_vec())
            .collect()
    }

    fn __len__(&self) -> usize {
        self.stage.len()
    }

    /// Natural log of |VDM| in the monomial normalization.
    fn log_abs_vdm(&self) -> f64 {
        self.stage.log_abs_vdm().log_modulus
    }

    /// exp(log|VDM| * (d+1)/(d n N)).
    fn tdiam_estimate(&self) -> PyResult<f64> {
        core_tdiam(&self.stage).map_err(err)
    }

    /// Lebesgue constant on the 10x reference mesh of the named compact.
    #[pyo3(signature = (set, eval_density = 2))]
    fn lebesgue_constant(&self, set: &str, eval_density: usize) -> PyResult<f64> {
        let mesh = mesh_for(set, self.stage.degree_n(), eval_density)?
            .refine(10)
            .map_err(err)?;
        core_lebesgue(&self.stage, &mesh).map_err(err)
    }

    /// Max moment deviation of the uniform node measure from the named
    /// equilibrium reference ("arcsine", "circle" or "disk").
    #[pyo3(signature = (reference, max_degree = 4))]
    fn moment_distance(&self, reference: &str, max_degree: usize) -> PyResult<f64> {
        let reference = match reference {
            "arcsine" => EquilibriumReference::IntervalArcsine,
            "circle" => EquilibriumReference::CircleUniform,
            "disk" => EquilibriumReference::DiskEquilibrium,
            other => {
                return Err(PyValueError::new_err(format!(
                    "unknown reference '{other}'"
                )))
            }
        };
        let mu = empirical_measure(&self.stage);
        moment_distance(&mu, reference, max_degree).map_err(err)
    }

    fn __repr__(&self) -> String {
        format!(
            "PointSet(d={}, n={}, provenance={}, len={})",
            self.stage.dim_d(),
            self.stage.degree_n(),
            self.stage.provenance().as_str(),
            self.stage.len()
        )
    }
}

/// dim P_n = binomial(n + d, d).
#[pyfunction]
fn dim_pn(d: usize, n: usize) -> PyResult<usize> {
    core_dim_pn(d, n).map_err(err)
}

/// Sum of basis degrees l_n = d n N / (d + 1).
#[pyfunction]
fn ln_sum(d: usize, n: usize) -> PyResult<u64> {
    core_ln_sum(d, n).map_err(err)
}

/// The binomial(n+2, 2) Padua points of degree n on [-1, 1]^2.
#[pyfunction]
fn padua(n: usize) -> PyResult<PyPointSet> {
    Ok(PyPointSet {
        stage: core_padua(n).map_err(err)?,
    })
}

/// First `count` terms of the canonical disk Leja sequence.
#[pyfunction]
fn leja_disk(count: usize) -> PyResult<Vec<Complex64>> {
    Ok(leja_disk_exact(count)
        .map_err(err)?
        .points()
        .iter()
        .map(|p| p.coords()[0])
        .collect())
}

/// First `count` terms of the R-Leja sequence on [-1, 1].
#[pyfunction]
fn r_leja(count: usize) -> PyResult<Vec<f64>> {
    Ok(core_r_leja(count)
        .map_err(err)?
        .points()
        .iter()
        .map(|p| p.coords()[0].re)
        .collect())
}

/// Greedy approximate Fekete points of degree n on a named compact.
#[pyfunction]
#[pyo3(signature = (set, n, density = 4))]
fn approx_fekete(set: &str, n: usize, density: usize) -> PyResult<PyPointSet> {
    let mesh = mesh_for(set, n, density)?;
    Ok(PyPointSet {
        stage: approx_fekete_greedy(&mesh, n).map_err(err)?,
    })
}

/// Discrete Leja points of degree n on a named compact.
#[pyfunction]
#[pyo3(signature = (set, n, density = 4))]
fn discrete_leja(set: &str, n: usize, density: usize) -> PyResult<PyPointSet> {
    let mesh = mesh_for(set, n, density)?;
    Ok(PyPointSet {
        stage: core_discrete_leja(&mesh, n).map_err(err)?.stage(n).map_err(err)?,
    })
}

/// Bos array of even degree n on the real disk with the named radial
/// distribution.
#[pyfunction]
#[pyo3(signature = (n, g = "equilibrium"))]
fn bos_array(n: usize, g: &str) -> PyResult<PyPointSet> {
    Ok(PyPointSet {
        stage: core_bos_array(n, &radial(g)?).map_err(err)?,
    })
}

/// Intertwined disk-Leja x R-Leja array of degree n on D x [-1, 1].
#[pyfunction]
fn intertwined(n: usize) -> PyResult<PyPointSet> {
    let disk = leja_disk_exact(n + 1).map_err(err)?;
    let rl = core_r_leja(n + 1).map_err(err)?;
    let t1: Vec<Complex64> = disk.points().iter().map(|p| p.coords()[0]).collect();
    let t2: Vec<Complex64> = rl.points().iter().map(|p| p.coords()[0]).collect();
    Ok(PyPointSet {
        stage: intertwine(&[t1, t2], n).map_err(err)?,
    })
}

/// Closed-form transfinite diameter of the real unit ball B_d.
#[pyfunction]
fn tdiam_ball(d: usize) -> PyResult<f64> {
    tdiam_ball_closed_form(d).map_err(err)
}

/// Closed-form transfinite diameter of the standard simplex S_d.
#[pyfunction]
fn tdiam_simplex(d: usize) -> PyResult<f64> {
    tdiam_simplex_closed_form(d).map_err(err)
}

/// The radial functional L(G) for a named distribution.
#[pyfunction]
#[pyo3(signature = (g, tol = 1e-9))]
fn l_functional(g: &str, tol: f64) -> PyResult<f64> {
    core_l_functional(&radial(g)?, tol).map_err(err)
}

/// Predicted Bos-array limit (1/sqrt 2) exp((3/4) L(G)).
#[pyfunction]
fn bos_vdm_limit(g: &str) -> PyResult<f64> {
    core_bos_limit(&radial(g)?).map_err(err)
}

/// Run the Kergin interpolation and algebra checks on a node tuple given as
/// a list of coordinate lists; returns (all_passed, worst_error).
#[pyfunction]
#[pyo3(signature = (nodes, seed = 0, tolerance = 1e-8))]
fn kergin_checks(nodes: Vec<Vec<Complex64>>, seed: u64, tolerance: f64) -> PyResult<(bool, f64)> {
    let pts: Vec<Point> = nodes.into_iter().map(Point::new).collect();
    let tuple = KerginNodeTuple::new(pts).map_err(err)?;
    let d = tuple.dim_d();
    let n = tuple.n();
    let basis = fekete::GradedMonomialBasis::new(d, n).map_err(err)?;
    // Deterministic test polynomial with mildly varying coefficients.
    let f = PolynomialOracle::from_terms(
        d,
        basis.indices().iter().enumerate().map(|(i, alpha)| {
            (
                alpha.exponents().to_vec(),
                Complex64::new(1.0 / (i as f64 + 1.0), 0.1 * (i as f64)),
            )
        }),
    )
    .map_err(err)?;
    let interp = kergin_interpolation_check(&tuple, &f, tolerance).map_err(err)?;
    let sub: Vec<usize> = (0..=n / 2).collect();
    let algebra = kergin_algebra_checks(&tuple, &sub, &f, seed, tolerance).map_err(err)?;
    let all = interp.all_passed() && algebra.all_passed();
    let worst = interp.worst_error().max(algebra.worst_error());
    Ok((all, worst))
}

#[pymodule]
fn fekete_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPointSet>()?;
    m.add_function(wrap_pyfunction!(dim_pn, m)?)?;
    m.add_function(wrap_pyfunction!(ln_sum, m)?)?;
    m.add_function(wrap_pyfunction!(padua, m)?)?;
    m.add_function(wrap_pyfunction!(leja_disk, m)?)?;
    m.add_function(wrap_pyfunction!(r_leja, m)?)?;
    m.add_function(wrap_pyfunction!(approx_fekete, m)?)?;
    m.add_function(wrap_pyfunction!(discrete_leja, m)?)?;
    m.add_function(wrap_pyfunction!(bos_array, m)?)?;
    m.add_function(wrap_pyfunction!(intertwined, m)?)?;
    m.add_function(wrap_pyfunction!(tdiam_ball, m)?)?;
    m.add_function(wrap_pyfunction!(tdiam_simplex, m)?)?;
    m.add_function(wrap_pyfunction!(l_functional, m)?)?;
    m.add_function(wrap_pyfunction!(bos_vdm_limit, m)?)?;
    m.add_function(wrap_pyfunction!(kergin_checks, m)?)?;
    Ok(())
}
