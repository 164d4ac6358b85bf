//! Generalized Vandermonde matrices, overflow-safe log-determinants, FLIPs,
//! and the transfinite-diameter estimator.
//!
//! All determinant work happens in the log domain with partial pivoting;
//! |VDM| itself overflows f64 around n = 10 already in two variables. For
//! real boxes the numerics can optionally run in the product-Chebyshev basis
//! and convert back to the monomial normalization through the triangular
//! change-of-basis determinant, which is what the transfinite diameter is
//! defined through.

use crate::basis::{chebyshev_tables, coordinate_powers, GradedMonomialBasis, Point};
use crate::error::{Error, Result};
use crate::linalg::{LuFactors, Mat};
use num_complex::Complex64;
use std::sync::Arc;

/// Overflow-safe |VDM| representation.
#[derive(Debug, Clone, Copy)]
pub struct LogAbsDet {
    /// Natural log of |det|; -inf when degenerate.
    pub log_modulus: f64,
    /// True iff the determinant is numerically zero under the documented
    /// pivot tolerance (1e-13 relative to the matrix scale).
    pub degenerate: bool,
    /// Crude spread of pivot moduli, exp(max - min) of their logs.
    pub condition_estimate: f64,
}

impl LogAbsDet {
    fn from_lu<T: crate::linalg::Scalar>(lu: &LuFactors<T>) -> Self {
        LogAbsDet {
            log_modulus: lu.log_abs_det,
            degenerate: lu.degenerate,
            condition_estimate: lu.condition_estimate,
        }
    }
}

/// Which polynomial basis the numerics run in. Both routes report the
/// determinant in the monomial normalization.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EvalBasis {
    Monomial,
    /// Product-Chebyshev; preferable on real boxes where monomial
    /// Vandermonde matrices become ill-conditioned quickly.
    ProductChebyshev,
}

/// Origin label of a node array.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    Fekete,
    Leja,
    Padua,
    Bos,
    Intertwined,
    Custom,
}

impl Provenance {
    pub fn as_str(&self) -> &'static str {
        match self {
            Provenance::Fekete => "fekete",
            Provenance::Leja => "leja",
            Provenance::Padua => "padua",
            Provenance::Bos => "bos",
            Provenance::Intertwined => "intertwined",
            Provenance::Custom => "custom",
        }
    }
}

/// Admissible weight w >= 0 on a compact, as in weighted Vandermonde work.
#[derive(Clone)]
pub struct WeightFunction {
    evaluator: Arc<dyn Fn(&Point) -> f64 + Send + Sync>,
    pub admissible: bool,
}

impl WeightFunction {
    pub fn new(f: impl Fn(&Point) -> f64 + Send + Sync + 'static) -> Self {
        WeightFunction {
            evaluator: Arc::new(f),
            admissible: true,
        }
    }

    pub fn unit() -> Self {
        WeightFunction::new(|_| 1.0)
    }

    /// w(z) = exp(-|z|^2), the standard radially decaying example weight.
    pub fn gaussian() -> Self {
        WeightFunction::new(|p: &Point| {
            let r2: f64 = p.coords().iter().map(|z| z.norm_sqr()).sum();
            (-r2).exp()
        })
    }

    pub fn eval(&self, z: &Point) -> f64 {
        (self.evaluator)(z)
    }
}

impl std::fmt::Debug for WeightFunction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("WeightFunction")
            .field("admissible", &self.admissible)
            .finish()
    }
}

fn check_points(basis: &GradedMonomialBasis, points: &[Point]) -> Result<()> {
    if points.len() > basis.len() {
        return Err(Error::DimensionMismatch {
            expected: basis.len(),
            got: points.len(),
        });
    }
    for p in points {
        if p.dim() != basis.dim_d() {
            return Err(Error::DimensionMismatch {
                expected: basis.dim_d(),
                got: p.dim(),
            });
        }
    }
    Ok(())
}

/// m x m matrix [e_i(zeta_j)] over the first m = points.len() basis elements,
/// in the fixed graded order. Supports the rectangular-prefix convention of
/// triangular arrays: m may be smaller than dim P_n.
pub fn vdm_matrix(basis: &GradedMonomialBasis, points: &[Point]) -> Result<Mat<Complex64>> {
    vdm_matrix_in(basis, points, EvalBasis::Monomial)
}

/// Same matrix with entries evaluated in the requested basis.
pub fn vdm_matrix_in(
    basis: &GradedMonomialBasis,
    points: &[Point],
    eval: EvalBasis,
) -> Result<Mat<Complex64>> {
    check_points(basis, points)?;
    let m = points.len();
    let mut a = Mat::zeros(m, m);
    let mut col = vec![Complex64::new(0.0, 0.0); m];
    for (j, p) in points.iter().enumerate() {
        match eval {
            EvalBasis::Monomial => {
                let pow = coordinate_powers(p.coords(), basis.degree_n());
                for (i, alpha) in basis.indices().iter().take(m).enumerate() {
                    let mut v = Complex64::new(1.0, 0.0);
                    for (t, &e) in alpha.exponents().iter().enumerate() {
                        if e > 0 {
                            v *= pow[t][e as usize];
                        }
                    }
                    col[i] = v;
                }
            }
            EvalBasis::ProductChebyshev => {
                let tab = chebyshev_tables(p.coords(), basis.degree_n());
                for (i, alpha) in basis.indices().iter().take(m).enumerate() {
                    let mut v = Complex64::new(1.0, 0.0);
                    for (t, &e) in alpha.exponents().iter().enumerate() {
                        if e > 0 {
                            v *= tab[t][e as usize];
                        }
                    }
                    col[i] = v;
                }
            }
        }
        for i in 0..m {
            a.set(i, j, col[i]);
        }
    }
    Ok(a)
}

/// log of the leading-coefficient product converting a length-m
/// product-Chebyshev determinant to the monomial normalization.
pub(crate) fn cheb_prefix_log_scale(basis: &GradedMonomialBasis, m: usize) -> f64 {
    let ln2 = std::f64::consts::LN_2;
    basis
        .indices()
        .iter()
        .take(m)
        .map(|alpha| {
            alpha
                .exponents()
                .iter()
                .map(|&e| e.saturating_sub(1) as f64)
                .sum::<f64>()
                * ln2
        })
        .sum()
}

/// log|VDM| of the (square) system over the first points.len() basis
/// elements, in monomial normalization.
pub fn log_abs_vdm(basis: &GradedMonomialBasis, points: &[Point]) -> Result<LogAbsDet> {
    log_abs_vdm_in(basis, points, EvalBasis::Monomial)
}

/// log|VDM| computed in the requested basis, converted back to the monomial
/// normalization. The two routes agree up to conditioning.
pub fn log_abs_vdm_in(
    basis: &GradedMonomialBasis,
    points: &[Point],
    eval: EvalBasis,
) -> Result<LogAbsDet> {
    let a = vdm_matrix_in(basis, points, eval)?;
    let lu = LuFactors::factor(a);
    let mut out = LogAbsDet::from_lu(&lu);
    if eval == EvalBasis::ProductChebyshev && !out.degenerate {
        out.log_modulus -= cheb_prefix_log_scale(basis, points.len());
    }
    Ok(out)
}

/// Weighted Vandermonde of order n: log|VDM| + n * sum_j log w(zeta_j).
pub fn weighted_log_abs_vdm(
    basis: &GradedMonomialBasis,
    points: &[Point],
    w: &WeightFunction,
    n: usize,
) -> Result<LogAbsDet> {
    let mut out = log_abs_vdm(basis, points)?;
    if out.degenerate {
        return Ok(out);
    }
    let mut wsum = 0.0;
    for p in points {
        let wv = w.eval(p);
        if !(wv > 0.0) {
            out.degenerate = true;
            out.log_modulus = f64::NEG_INFINITY;
            return Ok(out);
        }
        wsum += wv.ln();
    }
    out.log_modulus += n as f64 * wsum;
    Ok(out)
}

/// A degree-n node array with unisolvency checked at construction.
#[derive(Debug, Clone)]
pub struct NodeArrayStage {
    dim_d: usize,
    degree_n: usize,
    points: Vec<Point>,
    provenance: Provenance,
    eval_basis: EvalBasis,
    log_vdm: LogAbsDet,
}

impl NodeArrayStage {
    /// Build a stage, verifying the count N = dim P_n and non-degeneracy of
    /// the Vandermonde determinant.
    pub fn new(
        d: usize,
        n: usize,
        points: Vec<Point>,
        provenance: Provenance,
        eval_basis: EvalBasis,
    ) -> Result<Self> {
        let basis = GradedMonomialBasis::new(d, n)?;
        if points.len() != basis.len() {
            return Err(Error::DimensionMismatch {
                expected: basis.len(),
                got: points.len(),
            });
        }
        let log_vdm = log_abs_vdm_in(&basis, &points, eval_basis)?;
        if log_vdm.degenerate {
            return Err(Error::Degenerate);
        }
        Ok(NodeArrayStage {
            dim_d: d,
            degree_n: n,
            points,
            provenance,
            eval_basis,
            log_vdm,
        })
    }

    pub fn dim_d(&self) -> usize {
        self.dim_d
    }

    pub fn degree_n(&self) -> usize {
        self.degree_n
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn eval_basis(&self) -> EvalBasis {
        self.eval_basis
    }

    pub fn log_abs_vdm(&self) -> LogAbsDet {
        self.log_vdm
    }

    pub fn basis(&self) -> GradedMonomialBasis {
        GradedMonomialBasis::new(self.dim_d, self.degree_n).expect("validated at construction")
    }
}

/// Transfinite-diameter estimate exp(log|VDM| * (d+1)/(d n N)) of a stage.
/// Degenerate input (never constructed by `NodeArrayStage`, but reachable via
/// raw data) maps to 0.
pub fn tdiam_estimate(stage: &NodeArrayStage) -> Result<f64> {
    if stage.degree_n == 0 {
        return Err(Error::InvalidParameter(
            "transfinite-diameter estimate needs degree n >= 1".into(),
        ));
    }
    Ok(tdiam_from_logdet(
        stage.log_vdm,
        stage.dim_d,
        stage.degree_n,
        stage.len(),
    ))
}

/// Same normalization applied to a raw log-determinant.
pub fn tdiam_from_logdet(log_vdm: LogAbsDet, d: usize, n: usize, n_points: usize) -> f64 {
    if log_vdm.degenerate {
        return 0.0;
    }
    let expo = (d as f64 + 1.0) / (d as f64 * n as f64 * n_points as f64);
    (log_vdm.log_modulus * expo).exp()
}

/// FLIP evaluation machine: one pivoted factorization of the Vandermonde
/// system, then each evaluation point costs two triangular solves. The
/// determinant-ratio formula is mathematically identical but numerically
/// ruinous; it survives only as a test oracle.
pub struct FlipEvaluator {
    basis: GradedMonomialBasis,
    eval_basis: EvalBasis,
    lu: LuFactors<Complex64>,
}

impl FlipEvaluator {
    pub fn new(stage: &NodeArrayStage) -> Result<Self> {
        let basis = stage.basis();
        let a = vdm_matrix_in(&basis, stage.points(), stage.eval_basis())?;
        let lu = LuFactors::factor(a);
        if lu.degenerate {
            return Err(Error::Degenerate);
        }
        Ok(FlipEvaluator {
            basis,
            eval_basis: stage.eval_basis(),
            lu,
        })
    }

    pub fn basis(&self) -> &GradedMonomialBasis {
        &self.basis
    }

    fn rhs(&self, z: &Point) -> Result<Vec<Complex64>> {
        match self.eval_basis {
            EvalBasis::Monomial => self.basis.basis_vector(z),
            EvalBasis::ProductChebyshev => self.basis.cheb_basis_vector(z),
        }
    }

    /// (l_1(z), ..., l_N(z)): the row of cardinal interpolation values at z.
    pub fn values(&self, z: &Point) -> Result<Vec<Complex64>> {
        let b = self.rhs(z)?;
        Ok(self.lu.solve(&b))
    }

    /// Lebesgue function at z: sum_j |l_j(z)|.
    pub fn lebesgue_function(&self, z: &Point) -> Result<f64> {
        Ok(self.values(z)?.iter().map(|v| v.norm()).sum())
    }

    /// Coefficients (graded monomial order when constructed in the monomial
    /// basis, Chebyshev order otherwise) of the interpolant matching the
    /// samples at the stage nodes: solves the transposed system V^T c = f.
    pub fn interpolation_coefficients(&self, samples: &[Complex64]) -> Result<Vec<Complex64>> {
        if samples.len() != self.lu.n() {
            return Err(Error::DimensionMismatch {
                expected: self.lu.n(),
                got: samples.len(),
            });
        }
        Ok(self.lu.solve_transposed(samples))
    }

    /// Evaluate the polynomial with `interpolation_coefficients` at z.
    pub fn eval_with_coefficients(&self, coeffs: &[Complex64], z: &Point) -> Result<Complex64> {
        let b = self.rhs(z)?;
        Ok(coeffs.iter().zip(&b).map(|(c, v)| c * v).sum())
    }

    /// Inverse Vandermonde W = V^{-1}, so l(z) = W b(z). Used by the
    /// tensor-grid Lebesgue scan.
    pub fn inverse_vdm(&self) -> Mat<Complex64> {
        self.lu.inverse()
    }

    pub fn eval_basis(&self) -> EvalBasis {
        self.eval_basis
    }
}
