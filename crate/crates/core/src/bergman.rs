//! Gram matrices, orthonormal polynomial bases, Bergman functions,
//! Bernstein-Markov constants, and the constructive Bernstein-Markov measure
//! built from per-degree Fekete surrogates.

use crate::basis::{GradedMonomialBasis, Point};
use crate::diagnostics::{moment_distance, DiscreteMeasure, EquilibriumReference};
use crate::error::{Error, Result};
use crate::linalg::{cholesky, invert_lower_triangular, Mat};
use crate::meshes::Mesh;
use crate::points::approx_fekete_greedy;
use crate::vandermonde::{EvalBasis, FlipEvaluator};
use num_complex::Complex64;

/// Gram matrix of the graded monomials under a discrete measure:
/// entry (i, j) = sum_k w_k e_i(z_k) conj(e_j(z_k)).
pub fn gram_matrix(basis: &GradedMonomialBasis, mu: &DiscreteMeasure) -> Result<Mat<Complex64>> {
    gram_matrix_in(basis, mu, EvalBasis::Monomial)
}

/// Gram matrix with the working basis chosen for conditioning; the monomial
/// Gram on a real interval is numerically singular long before degree 30,
/// while the product-Chebyshev one stays tame.
pub fn gram_matrix_in(
    basis: &GradedMonomialBasis,
    mu: &DiscreteMeasure,
    eval: EvalBasis,
) -> Result<Mat<Complex64>> {
    let n = basis.len();
    let mut g: Mat<Complex64> = Mat::zeros(n, n);
    for (p, &w) in mu.support().iter().zip(mu.weights()) {
        let b = match eval {
            EvalBasis::Monomial => basis.basis_vector(p)?,
            EvalBasis::ProductChebyshev => basis.cheb_basis_vector(p)?,
        };
        for i in 0..n {
            let wi = w * b[i];
            for j in 0..n {
                let v = g.get(i, j) + wi * b[j].conj();
                g.set(i, j, v);
            }
        }
    }
    Ok(g)
}

/// L^2(nu)-orthonormal basis of P_n, stored as the triangular transform from
/// the working graded basis: q_j = sum_{i <= j} transform[j][i] phi_i.
pub struct OrthonormalBasis {
    basis: GradedMonomialBasis,
    eval: EvalBasis,
    transform: Mat<Complex64>,
    measure: DiscreteMeasure,
}

impl OrthonormalBasis {
    pub fn degree_n(&self) -> usize {
        self.basis.degree_n()
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn measure(&self) -> &DiscreteMeasure {
        &self.measure
    }

    pub fn eval_basis(&self) -> EvalBasis {
        self.eval
    }

    /// Lower-triangular transform; row j holds the coefficients of q_j in
    /// the working basis. The diagonal (leading coefficients) is positive.
    pub fn transform(&self) -> &Mat<Complex64> {
        &self.transform
    }

    /// Values (q_1(z), ..., q_N(z)).
    pub fn values(&self, z: &Point) -> Result<Vec<Complex64>> {
        let b = match self.eval {
            EvalBasis::Monomial => self.basis.basis_vector(z)?,
            EvalBasis::ProductChebyshev => self.basis.cheb_basis_vector(z)?,
        };
        let n = self.basis.len();
        let mut out = vec![Complex64::new(0.0, 0.0); n];
        for j in 0..n {
            let mut acc = Complex64::new(0.0, 0.0);
            for i in 0..=j {
                acc += self.transform.get(j, i) * b[i];
            }
            out[j] = acc;
        }
        Ok(out)
    }
}

/// Cholesky-orthonormalize the working basis against a discrete measure. A
/// pivot at or below 1e-12 times the trace scale reports the offending index.
pub fn orthonormalize(
    basis: &GradedMonomialBasis,
    mu: &DiscreteMeasure,
    eval: EvalBasis,
) -> Result<OrthonormalBasis> {
    let gram = gram_matrix_in(basis, mu, eval)?;
    orthonormalize_from_gram(basis, mu, gram, eval)
}

/// Same, reusing a precomputed Gram matrix.
pub fn orthonormalize_from_gram(
    basis: &GradedMonomialBasis,
    mu: &DiscreteMeasure,
    gram: Mat<Complex64>,
    eval: EvalBasis,
) -> Result<OrthonormalBasis> {
    let l = cholesky(&gram, 1e-12).map_err(|index| Error::GramSingular { index })?;
    let transform = invert_lower_triangular(&l);
    Ok(OrthonormalBasis {
        basis: basis.clone(),
        eval,
        transform,
        measure: mu.clone(),
    })
}

/// Bergman function B_n(z) = sum_j |q_j(z)|^2: the squared norm of the
/// evaluation functional on L^2(nu)-normalized P_n.
pub fn bergman_function(onb: &OrthonormalBasis, z: &Point) -> Result<f64> {
    Ok(onb.values(z)?.iter().map(|v| v.norm_sqr()).sum())
}

/// Best Bernstein-Markov constant for the mesh-surrogate sup-norm:
/// max over the mesh of sqrt(B_n).
pub fn bm_constant(onb: &OrthonormalBasis, eval_mesh: &Mesh) -> Result<f64> {
    let mut best = 0.0f64;
    for p in eval_mesh.points() {
        best = best.max(bergman_function(onb, p)?);
    }
    Ok(best.sqrt())
}

/// The constructive Bernstein-Markov measure: a normalized sum of uniform
/// measures on per-degree (approximate) Fekete points with weights
/// 1/(k log^2 k), k = 3..=k_max. Exact Fekete points are infeasible, so the
/// surrogate's actual FLIP sup-norms are recorded and must be propagated into
/// any bound that would use ||l_j|| <= 1.
pub struct BernsteinMarkovMeasure {
    pub measure: DiscreteMeasure,
    /// Normalization constant c making the weighted sum a probability.
    pub c: f64,
    /// Per degree k: (k, dim P_k, max_j sup-norm of the degree-k FLIPs on the
    /// fine reference mesh).
    pub flip_sup_norms: Vec<(usize, usize, f64)>,
}

impl BernsteinMarkovMeasure {
    /// Proof-shaped envelope for M_n at degree k = n:
    /// a_k * k * m_k * (log k)^2 / c, with a_k the recorded FLIP sup-norm.
    pub fn envelope(&self, k: usize) -> Option<f64> {
        self.flip_sup_norms
            .iter()
            .find(|&&(kk, _, _)| kk == k)
            .map(|&(_, m_k, a_k)| {
                a_k * k as f64 * m_k as f64 * (k as f64).ln().powi(2) / self.c
            })
    }
}

/// Build the constructive measure from a mesh generator per degree.
pub fn bm_measure_construct(
    k_max: usize,
    mesh_for_degree: impl Fn(usize) -> Result<Mesh>,
) -> Result<BernsteinMarkovMeasure> {
    if k_max < 3 {
        return Err(Error::InvalidParameter(
            "constructive measure needs k_max >= 3".into(),
        ));
    }
    let raw_weight = |k: usize| 1.0 / (k as f64 * (k as f64).ln().powi(2));
    let total: f64 = (3..=k_max).map(raw_weight).sum();
    let c = 1.0 / total;

    let mut support = Vec::new();
    let mut weights = Vec::new();
    let mut flip_sup_norms = Vec::new();
    for k in 3..=k_max {
        let mesh = mesh_for_degree(k)?;
        let stage = approx_fekete_greedy(&mesh, k)?;
        let m_k = stage.len();
        let flips = FlipEvaluator::new(&stage)?;
        let fine = mesh.refine(10)?;
        let mut a_k = 0.0f64;
        for p in fine.points() {
            for v in flips.values(p)? {
                a_k = a_k.max(v.norm());
            }
        }
        flip_sup_norms.push((k, m_k, a_k));
        let w = c * raw_weight(k) / m_k as f64;
        for p in stage.points() {
            support.push(p.clone());
            weights.push(w);
        }
    }
    let measure = DiscreteMeasure::new(support, weights)?;
    Ok(BernsteinMarkovMeasure {
        measure,
        c,
        flip_sup_norms,
    })
}

/// Moment distance between (1/N) B_n dnu and the equilibrium reference:
/// the weak-* probe of strong Bergman asymptotics.
pub fn bergman_weakstar_probe(
    onb: &OrthonormalBasis,
    reference: EquilibriumReference,
    max_degree: usize,
) -> Result<f64> {
    let nu = onb.measure();
    let n = onb.len() as f64;
    let mut weights = Vec::with_capacity(nu.weights().len());
    for (p, &w) in nu.support().iter().zip(nu.weights()) {
        weights.push(w * bergman_function(onb, p)? / n);
    }
    let probe = DiscreteMeasure::new(nu.support().to_vec(), weights)?;
    moment_distance(&probe, reference, max_degree)
}

/// Uniform measure on the m-th roots of unity.
pub fn roots_of_unity_measure(m: usize) -> Result<DiscreteMeasure> {
    if m == 0 {
        return Err(Error::InvalidParameter("need at least one root".into()));
    }
    let pts: Vec<Point> = (0..m)
        .map(|k| {
            let t = 2.0 * std::f64::consts::PI * k as f64 / m as f64;
            Point::univariate(Complex64::new(t.cos(), t.sin()))
        })
        .collect();
    DiscreteMeasure::uniform(pts)
}

/// Empirical arcsine measure: uniform weights on M Gauss-Chebyshev points.
pub fn gauss_chebyshev_measure(m: usize) -> Result<DiscreteMeasure> {
    if m == 0 {
        return Err(Error::InvalidParameter("need at least one node".into()));
    }
    let pts: Vec<Point> = (1..=m)
        .map(|k| {
            let t = (2.0 * k as f64 - 1.0) * std::f64::consts::PI / (2.0 * m as f64);
            Point::from_reals(&[t.cos()])
        })
        .collect();
    DiscreteMeasure::uniform(pts)
}
