//! Node-array generators: exact and approximate Fekete points, discrete Leja
//! sequences (plain and weighted), the closed-form disk Leja and R-Leja
//! sequences, Padua points, intertwined tensor arrays, and Bos arrays.

use crate::basis::{dim_pn, GradedMonomialBasis, Point};
use crate::error::{Error, Result};
use crate::linalg::{LuFactors, Mat};
use crate::meshes::{CompactId, Mesh};
use crate::vandermonde::{log_abs_vdm_in, EvalBasis, NodeArrayStage, Provenance, WeightFunction};
use num_complex::Complex64;
use std::f64::consts::PI;
use std::sync::Arc;

/// Tolerance for treating projected Leja values as duplicates.
const DEDUP_TOL: f64 = 1e-14;

fn compact_is_real(c: &CompactId) -> bool {
    match c {
        CompactId::Interval | CompactId::RealDisk | CompactId::Square | CompactId::Simplex(_) => {
            true
        }
        CompactId::DiskBoundary => false,
        CompactId::Product(parts) => parts.iter().all(compact_is_real),
    }
}

/// Numerics basis appropriate for a mesh: product-Chebyshev on real
/// compacts, monomials otherwise.
pub fn eval_basis_for(mesh: &Mesh) -> EvalBasis {
    if compact_is_real(mesh.compact()) {
        EvalBasis::ProductChebyshev
    } else {
        EvalBasis::Monomial
    }
}

/// A nested greedy point sequence.
#[derive(Debug, Clone)]
pub struct LejaSequence {
    points: Vec<Point>,
    origin_mesh: Option<Mesh>,
    exact_structure: bool,
    dim_d: usize,
}

impl LejaSequence {
    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn dim_d(&self) -> usize {
        self.dim_d
    }

    pub fn origin_mesh(&self) -> Option<&Mesh> {
        self.origin_mesh.as_ref()
    }

    /// True for the closed-form disk construction.
    pub fn exact_structure(&self) -> bool {
        self.exact_structure
    }

    pub fn prefix(&self, m: usize) -> &[Point] {
        &self.points[..m]
    }

    /// Stage of degree n from the first dim P_n points.
    pub fn stage(&self, n: usize) -> Result<NodeArrayStage> {
        let need = dim_pn(self.dim_d, n)?;
        if need > self.points.len() {
            return Err(Error::InvalidParameter(format!(
                "sequence holds {} points, degree {n} needs {need}",
                self.points.len()
            )));
        }
        let prefix = self.points[..need].to_vec();
        let eval = if prefix.iter().all(|p| p.max_imag() == 0.0) {
            EvalBasis::ProductChebyshev
        } else {
            EvalBasis::Monomial
        };
        NodeArrayStage::new(self.dim_d, n, prefix, Provenance::Leja, eval)
    }
}

/// |VDM(prefix, x)| / |VDM(prefix)| over the first prefix.len()+1 basis
/// elements, by a bordered-determinant solve. This is the quantity a Leja
/// step maximizes.
pub fn vdm_growth_ratio(
    basis: &GradedMonomialBasis,
    prefix: &[Point],
    candidates: &[Point],
    eval: EvalBasis,
) -> Result<Vec<f64>> {
    let m = prefix.len();
    if m + 1 > basis.len() {
        return Err(Error::InvalidParameter(
            "basis too small for prefix extension".into(),
        ));
    }
    let full_vec = |p: &Point| -> Result<Vec<Complex64>> {
        match eval {
            EvalBasis::Monomial => basis.basis_vector(p),
            EvalBasis::ProductChebyshev => basis.cheb_basis_vector(p),
        }
    };
    if m == 0 {
        // Ratio is |e_1(x)| = 1 for the constant basis element.
        return Ok(candidates.iter().map(|_| 1.0).collect());
    }
    let mut a = Mat::zeros(m, m);
    let mut r = vec![Complex64::new(0.0, 0.0); m];
    for (j, p) in prefix.iter().enumerate() {
        let v = full_vec(p)?;
        for i in 0..m {
            a.set(i, j, v[i]);
        }
        r[j] = v[m];
    }
    let lu = LuFactors::factor(a);
    if lu.degenerate {
        return Err(Error::Degenerate);
    }
    let mut out = Vec::with_capacity(candidates.len());
    for x in candidates {
        let v = full_vec(x)?;
        let y = lu.solve(&v[..m]);
        let mut border = v[m];
        for j in 0..m {
            border -= r[j] * y[j];
        }
        out.push(border.norm());
    }
    Ok(out)
}

fn count_combinations(m: usize, n: usize) -> u128 {
    let mut acc: u128 = 1;
    for k in 0..n {
        acc = acc.saturating_mul((m - k) as u128) / (k as u128 + 1);
        if acc > 1 << 40 {
            return acc;
        }
    }
    acc
}

/// Exact Fekete points of degree n on a finite mesh by exhausting all
/// N-subsets. Guarded by a budget of 1e6 candidate subsets; ties break to the
/// lexicographically smallest index tuple.
pub fn fekete_bruteforce(mesh: &Mesh, n: usize) -> Result<NodeArrayStage> {
    let d = mesh.dim();
    let basis = GradedMonomialBasis::new(d, n)?;
    let n_pts = basis.len();
    let m = mesh.len();
    if m < n_pts {
        return Err(Error::MeshExhausted {
            degree: n,
            selected: 0,
        });
    }
    const BUDGET: u128 = 1_000_000;
    let candidates = count_combinations(m, n_pts);
    if candidates > BUDGET {
        return Err(Error::BudgetExceeded {
            candidates,
            budget: BUDGET,
        });
    }
    let eval = eval_basis_for(mesh);
    let mut subset: Vec<usize> = (0..n_pts).collect();
    let mut best: Option<(f64, Vec<usize>)> = None;
    let mut scratch: Vec<Point> = Vec::with_capacity(n_pts);
    loop {
        scratch.clear();
        scratch.extend(subset.iter().map(|&i| mesh.points()[i].clone()));
        let det = log_abs_vdm_in(&basis, &scratch, eval)?;
        if !det.degenerate {
            let better = match &best {
                None => true,
                Some((b, _)) => det.log_modulus > *b,
            };
            if better {
                best = Some((det.log_modulus, subset.clone()));
            }
        }
        if !advance_combination(&mut subset, m) {
            let (_, indices) = best.ok_or(Error::Degenerate)?;
            let pts: Vec<Point> = indices.iter().map(|&i| mesh.points()[i].clone()).collect();
            return NodeArrayStage::new(d, n, pts, Provenance::Fekete, eval);
        }
    }
}

/// Advance to the next k-combination of 0..m in lexicographic order; false
/// when exhausted.
fn advance_combination(subset: &mut [usize], m: usize) -> bool {
    let k = subset.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if subset[i] != i + m - k {
            subset[i] += 1;
            for j in i + 1..k {
                subset[j] = subset[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Build the N x M matrix whose column j is the basis vector at mesh point j,
/// rows scaled by their mesh sup-norms.
fn scaled_candidate_matrix(
    mesh: &Mesh,
    basis: &GradedMonomialBasis,
    eval: EvalBasis,
) -> Result<(Mat<Complex64>, Vec<f64>)> {
    let n_rows = basis.len();
    let m = mesh.len();
    let mut a = Mat::zeros(n_rows, m);
    let mut col = vec![Complex64::new(0.0, 0.0); n_rows];
    for (j, p) in mesh.points().iter().enumerate() {
        match eval {
            EvalBasis::Monomial => {
                let pow = crate::basis::coordinate_powers(p.coords(), basis.degree_n());
                basis.monomial_vector_into(&pow, &mut col);
            }
            EvalBasis::ProductChebyshev => {
                let tab = crate::basis::chebyshev_tables(p.coords(), basis.degree_n());
                basis.cheb_vector_into(&tab, &mut col);
            }
        }
        for i in 0..n_rows {
            a.set(i, j, col[i]);
        }
    }
    let mut sup = vec![0.0f64; n_rows];
    for i in 0..n_rows {
        let s = a.row(i).iter().map(|v| v.norm()).fold(0.0, f64::max);
        sup[i] = if s > 0.0 { s } else { 1.0 };
        let inv = 1.0 / sup[i];
        for v in a.row_mut(i) {
            *v *= inv;
        }
    }
    Ok((a, sup))
}

/// Greedy approximate Fekete points: column selection on the scaled basis
/// matrix. Step 1 maximizes the column 2-norm; step k+1 maximizes the volume
/// added by the new column, tracked as the residual norm after orthogonal
/// projection onto the span of the chosen columns (modified Gram-Schmidt
/// recursion). Ties break to the smallest mesh index.
pub fn approx_fekete_greedy(mesh: &Mesh, n: usize) -> Result<NodeArrayStage> {
    let d = mesh.dim();
    let basis = GradedMonomialBasis::new(d, n)?;
    let n_pts = basis.len();
    let m = mesh.len();
    if m < n_pts {
        return Err(Error::MeshExhausted {
            degree: n,
            selected: 0,
        });
    }
    let eval = eval_basis_for(mesh);
    let (mut a, _sup) = scaled_candidate_matrix(mesh, &basis, eval)?;

    let mut res_sq: Vec<f64> = (0..m)
        .map(|j| (0..n_pts).map(|i| a.get(i, j).norm_sqr()).sum())
        .collect();
    let scale = res_sq.iter().fold(0.0f64, |acc, &v| acc.max(v));
    let tol = scale * 1e-26;

    let mut chosen = Vec::with_capacity(n_pts);
    let mut taken = vec![false; m];
    for _step in 0..n_pts {
        let mut best = usize::MAX;
        let mut best_val = f64::NEG_INFINITY;
        for j in 0..m {
            if !taken[j] && res_sq[j] > best_val {
                best = j;
                best_val = res_sq[j];
            }
        }
        if best == usize::MAX || best_val <= tol {
            return Err(Error::MeshExhausted {
                degree: n,
                selected: chosen.len(),
            });
        }
        taken[best] = true;
        chosen.push(best);
        // Normalize the residual of the chosen column, project it out of the
        // rest, and update residual norms.
        let norm = best_val.sqrt();
        for i in 0..n_pts {
            let v = a.get(i, best) / norm;
            a.set(i, best, v);
        }
        for j in 0..m {
            if taken[j] {
                continue;
            }
            let mut dot = Complex64::new(0.0, 0.0);
            for i in 0..n_pts {
                dot += a.get(i, best).conj() * a.get(i, j);
            }
            if dot.norm_sqr() == 0.0 {
                continue;
            }
            for i in 0..n_pts {
                let v = a.get(i, j) - dot * a.get(i, best);
                a.set(i, j, v);
            }
            res_sq[j] = (res_sq[j] - dot.norm_sqr()).max(0.0);
        }
    }
    let pts: Vec<Point> = chosen.iter().map(|&j| mesh.points()[j].clone()).collect();
    NodeArrayStage::new(d, n, pts, Provenance::Fekete, eval)
}

fn discrete_leja_impl(
    mesh: &Mesh,
    n: usize,
    weight: Option<&WeightFunction>,
) -> Result<LejaSequence> {
    let d = mesh.dim();
    let basis = GradedMonomialBasis::new(d, n)?;
    let n_pts = basis.len();
    let m = mesh.len();
    if m < n_pts {
        return Err(Error::MeshExhausted {
            degree: n,
            selected: 0,
        });
    }
    let eval = eval_basis_for(mesh);
    // Row j of `a` is the scaled basis vector at mesh point j; row-pivoted
    // elimination then selects exactly the discrete Leja order, since the
    // step-k pivot modulus is proportional to |VDM(x_1..x_k, x)|.
    let (cols, _sup) = scaled_candidate_matrix(mesh, &basis, eval)?;
    let mut a = cols.transpose();
    let mut orig: Vec<usize> = (0..m).collect();
    let scale = a.max_abs();
    let tol = scale * crate::linalg::DEGENERACY_RTOL;

    let wvals: Option<Vec<f64>> =
        weight.map(|w| mesh.points().iter().map(|p| w.eval(p)).collect());

    for k in 0..n_pts {
        let deg_k = basis.index(k).degree();
        let mut best = usize::MAX;
        let mut best_metric = f64::NEG_INFINITY;
        let mut best_orig = usize::MAX;
        for i in k..m {
            let mut metric = a.get(i, k).norm();
            if let Some(w) = &wvals {
                metric *= w[orig[i]].powi(deg_k as i32);
            }
            if metric > best_metric || (metric == best_metric && orig[i] < best_orig) {
                best = i;
                best_metric = metric;
                best_orig = orig[i];
            }
        }
        if best == usize::MAX || a.get(best, k).norm() <= tol || best_metric <= 0.0 {
            return Err(Error::MeshExhausted {
                degree: n,
                selected: k,
            });
        }
        if best != k {
            for j in 0..n_pts {
                let t = a.get(k, j);
                a.set(k, j, a.get(best, j));
                a.set(best, j, t);
            }
            orig.swap(k, best);
        }
        let pivot = a.get(k, k);
        for i in k + 1..m {
            let factor = a.get(i, k) / pivot;
            if factor.norm() == 0.0 {
                continue;
            }
            for j in k..n_pts {
                let v = a.get(i, j) - factor * a.get(k, j);
                a.set(i, j, v);
            }
        }
    }
    let points: Vec<Point> = orig[..n_pts]
        .iter()
        .map(|&j| mesh.points()[j].clone())
        .collect();
    Ok(LejaSequence {
        points,
        origin_mesh: Some(mesh.clone()),
        exact_structure: false,
        dim_d: d,
    })
}

/// Discrete Leja points: sequential maximization of |VDM(x_1..x_m, x)| over
/// the mesh, realized as row-pivoted elimination on the transposed basis
/// matrix. The first point maximizes |e_1| = 1, so ties send it to the
/// smallest mesh index. Prefixes of the result are themselves discrete Leja
/// sequences.
pub fn discrete_leja(mesh: &Mesh, n: usize) -> Result<LejaSequence> {
    discrete_leja_impl(mesh, n, None)
}

/// Weighted variant: same greedy contract with the weighted Vandermonde
/// W = VDM * prod w(x_j)^s in place of VDM, s being the current basis degree.
pub fn discrete_leja_weighted(
    mesh: &Mesh,
    n: usize,
    weight: &WeightFunction,
) -> Result<LejaSequence> {
    discrete_leja_impl(mesh, n, Some(weight))
}

/// Base-2 radical inverse (bit reversal) of k in [0, 1).
fn radical_inverse_base2(mut k: u64) -> f64 {
    let mut inv = 0.0f64;
    let mut f = 0.5f64;
    while k > 0 {
        if k & 1 == 1 {
            inv += f;
        }
        f *= 0.5;
        k >>= 1;
    }
    inv
}

/// The canonical simple Leja sequence for the closed unit disk:
/// e_k = exp(2 pi i phi_2(k)) with phi_2 the base-2 radical inverse, e_0 = 1.
/// Every prefix of length 2^m is the full set of 2^m-th roots of unity, and
/// each step attains the greedy maximum of the incremental Vandermonde
/// modulus on the disk.
pub fn leja_disk_exact(count: usize) -> Result<LejaSequence> {
    if count == 0 {
        return Err(Error::InvalidParameter("need at least one Leja point".into()));
    }
    let points: Vec<Point> = (0..count as u64)
        .map(|k| {
            let phi = radical_inverse_base2(k);
            let t = 2.0 * PI * phi;
            Point::univariate(Complex64::new(t.cos(), t.sin()))
        })
        .collect();
    Ok(LejaSequence {
        points,
        origin_mesh: None,
        exact_structure: true,
        dim_d: 1,
    })
}

/// R-Leja sequence on [-1, 1]: real parts of the canonical disk Leja sequence
/// in order, dropping values already emitted (conjugate points project to the
/// same abscissa).
pub fn r_leja(count: usize) -> Result<LejaSequence> {
    if count == 0 {
        return Err(Error::InvalidParameter("need at least one R-Leja point".into()));
    }
    let mut emitted: Vec<f64> = Vec::with_capacity(count);
    let mut k: u64 = 0;
    while emitted.len() < count {
        let x = (2.0 * PI * radical_inverse_base2(k)).cos();
        k += 1;
        if emitted.iter().all(|&prev| (prev - x).abs() > DEDUP_TOL) {
            emitted.push(x);
        }
        if k > 8 * count as u64 + 64 {
            return Err(Error::InvalidParameter(
                "R-Leja projection failed to produce enough distinct values".into(),
            ));
        }
    }
    Ok(LejaSequence {
        points: emitted.iter().map(|&x| Point::from_reals(&[x])).collect(),
        origin_mesh: None,
        exact_structure: true,
        dim_d: 1,
    })
}

/// Parameters t_ij = i pi/(n+1) + j pi/n generating the Padua points of
/// degree n on the Lissajous curve gamma_n(t) = (cos nt, cos (n+1)t).
pub fn padua_parameters(n: usize) -> Vec<f64> {
    let mut ts = Vec::new();
    for i in 0..=n {
        for j in 0..=(n - i) {
            ts.push(i as f64 * PI / (n as f64 + 1.0) + j as f64 * PI / n as f64);
        }
    }
    ts
}

/// The binomial(n+2, 2) Padua points of degree n in [-1,1]^2.
pub fn padua_points(n: usize) -> Result<NodeArrayStage> {
    if n == 0 {
        return Err(Error::InvalidParameter("Padua points need n >= 1".into()));
    }
    let pts: Vec<Point> = padua_parameters(n)
        .iter()
        .map(|&t| Point::from_reals(&[(n as f64 * t).cos(), ((n as f64 + 1.0) * t).cos()]))
        .collect();
    NodeArrayStage::new(2, n, pts, Provenance::Padua, EvalBasis::ProductChebyshev)
}

fn tnorm(k: usize, x: f64) -> f64 {
    // Orthonormalized Chebyshev polynomial under the arcsine product measure.
    let t = crate::basis::chebyshev_t(k, x);
    if k == 0 {
        t
    } else {
        std::f64::consts::SQRT_2 * t
    }
}

/// Reproducing kernel K_n(u; v) = sum_{i+j<=n} That_i(u1) That_j(u2)
/// That_i(v1) That_j(v2) for the tensor arcsine inner product.
pub fn padua_kernel(n: usize, u: (f64, f64), v: (f64, f64)) -> f64 {
    let tu1: Vec<f64> = (0..=n).map(|k| tnorm(k, u.0)).collect();
    let tu2: Vec<f64> = (0..=n).map(|k| tnorm(k, u.1)).collect();
    let tv1: Vec<f64> = (0..=n).map(|k| tnorm(k, v.0)).collect();
    let tv2: Vec<f64> = (0..=n).map(|k| tnorm(k, v.1)).collect();
    let mut acc = 0.0;
    for i in 0..=n {
        for j in 0..=(n - i) {
            acc += tu1[i] * tu2[j] * tv1[i] * tv2[j];
        }
    }
    acc
}

/// FLIP of a Padua point a, evaluated at z through the reproducing kernel:
/// l_a(z) = w_a { K_n(a; z) - T_n(z_2) T_n(a_2) }, with the constant w_a
/// pinned by l_a(a) = 1.
pub fn padua_flip_kernel(n: usize, a: &Point, z: &Point) -> Result<f64> {
    if a.dim() != 2 || z.dim() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            got: a.dim().max(z.dim()),
        });
    }
    let av = (a.coords()[0].re, a.coords()[1].re);
    let is_padua = padua_parameters(n).iter().any(|&t| {
        let px = (n as f64 * t).cos();
        let py = ((n as f64 + 1.0) * t).cos();
        (px - av.0).abs() < 1e-12 && (py - av.1).abs() < 1e-12
    });
    if !is_padua {
        return Err(Error::InvalidParameter(
            "point is not a Padua point of this degree".into(),
        ));
    }
    let zv = (z.coords()[0].re, z.coords()[1].re);
    let correction =
        |u: (f64, f64)| crate::basis::chebyshev_t(n, u.1) * crate::basis::chebyshev_t(n, av.1);
    let denom = padua_kernel(n, av, av) - correction(av);
    let numer = padua_kernel(n, av, zv) - correction(zv);
    Ok(numer / denom)
}

/// Intertwine d univariate tuples into the set
/// {(a_{i_1,1}, ..., a_{i_d,d}) : i_1 + ... + i_d <= n}, enumerated in the
/// fixed graded order. Input order matters and is preserved.
pub fn intertwine(tuples: &[Vec<Complex64>], n: usize) -> Result<NodeArrayStage> {
    let d = tuples.len();
    if d == 0 {
        return Err(Error::InvalidParameter("need at least one tuple".into()));
    }
    for (t, tuple) in tuples.iter().enumerate() {
        if tuple.len() < n + 1 {
            return Err(Error::InvalidParameter(format!(
                "tuple {t} has {} entries, need {}",
                tuple.len(),
                n + 1
            )));
        }
        for i in 0..=n {
            for j in i + 1..=n {
                if (tuple[i] - tuple[j]).norm() <= DEDUP_TOL {
                    return Err(Error::InvalidParameter(format!(
                        "tuple {t} has duplicate entries at positions {i}, {j}"
                    )));
                }
            }
        }
    }
    let basis = GradedMonomialBasis::new(d, n)?;
    let pts: Vec<Point> = basis
        .indices()
        .iter()
        .map(|alpha| {
            Point::new(
                alpha
                    .exponents()
                    .iter()
                    .enumerate()
                    .map(|(t, &i)| tuples[t][i as usize])
                    .collect(),
            )
        })
        .collect();
    let all_real = pts.iter().all(|p| p.max_imag() == 0.0);
    let eval = if all_real {
        EvalBasis::ProductChebyshev
    } else {
        EvalBasis::Monomial
    };
    NodeArrayStage::new(d, n, pts, Provenance::Intertwined, eval)
}

/// Asymptotic radial distribution G of a Bos array: increasing on [0,1] with
/// G(1) = 1.
#[derive(Clone)]
pub struct RadialDistribution {
    g: Arc<dyn Fn(f64) -> f64 + Send + Sync>,
    pub label: String,
    pub smoothness: String,
}

impl RadialDistribution {
    pub fn new(
        label: impl Into<String>,
        smoothness: impl Into<String>,
        g: impl Fn(f64) -> f64 + Send + Sync + 'static,
    ) -> Self {
        RadialDistribution {
            g: Arc::new(g),
            label: label.into(),
            smoothness: smoothness.into(),
        }
    }

    /// G(x) = (1 - cos pi x)/2: radii distribute like the Chebyshev measure.
    pub fn chebyshev() -> Self {
        RadialDistribution::new("chebyshev", "analytic", |x: f64| {
            (1.0 - (PI * x).cos()) / 2.0
        })
    }

    /// G(x) = 1 - (x^2 - 1)^2: radii distribute like the disk equilibrium
    /// measure.
    pub fn equilibrium() -> Self {
        RadialDistribution::new("equilibrium", "analytic", |x: f64| {
            1.0 - (x * x - 1.0).powi(2)
        })
    }

    /// G(x) = x.
    pub fn identity() -> Self {
        RadialDistribution::new("identity", "analytic", |x: f64| x)
    }

    /// G(x) = x^2 (uniform radii).
    pub fn square() -> Self {
        RadialDistribution::new("square", "analytic", |x: f64| x * x)
    }

    pub fn eval(&self, x: f64) -> f64 {
        (self.g)(x)
    }

    /// Monotonicity and G(1) = 1 on a 1000-point probe grid.
    pub fn validate(&self) -> Result<()> {
        let probes = 1000usize;
        let mut prev = f64::NEG_INFINITY;
        for k in 0..=probes {
            let x = k as f64 / probes as f64;
            let v = self.eval(x);
            if !v.is_finite() {
                return Err(Error::InvalidParameter(format!(
                    "radial distribution not finite at {x}"
                )));
            }
            if v < prev - 1e-12 {
                return Err(Error::InvalidParameter(format!(
                    "radial distribution not monotone near {x}"
                )));
            }
            prev = prev.max(v);
        }
        if (self.eval(1.0) - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidParameter(
                "radial distribution must have G(1) = 1".into(),
            ));
        }
        Ok(())
    }
}

impl std::fmt::Debug for RadialDistribution {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("RadialDistribution")
            .field("label", &self.label)
            .field("smoothness", &self.smoothness)
            .finish()
    }
}

/// Bos array of even degree n = 2s on the real disk: ring j in 0..=s carries
/// 4j+1 equally spaced points (phase 0) on the circle of radius
/// R_j = sqrt(G((j+1)/(s+1))), so the outer ring lands exactly on G(1) = 1.
pub fn bos_array(n: usize, g: &RadialDistribution) -> Result<NodeArrayStage> {
    if n == 0 || n % 2 != 0 {
        return Err(Error::InvalidParameter(
            "Bos arrays need even degree n = 2s >= 2".into(),
        ));
    }
    g.validate()?;
    let s = n / 2;
    let mut radii = Vec::with_capacity(s + 1);
    for j in 0..=s {
        let x = (j as f64 + 1.0) / (s as f64 + 1.0);
        let gv = g.eval(x);
        if !(gv > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "radial distribution vanishes at {x}; ring {j} would collapse"
            )));
        }
        radii.push(gv.sqrt());
    }
    for j in 1..=s {
        if radii[j] <= radii[j - 1] {
            return Err(Error::InvalidParameter(format!(
                "non-monotone radii: R_{j} = {} <= R_{} = {}",
                radii[j],
                j - 1,
                radii[j - 1]
            )));
        }
    }
    let mut pts = Vec::with_capacity((s + 1) * (2 * s + 1));
    for (j, &r) in radii.iter().enumerate() {
        let count = 4 * j + 1;
        for k in 0..count {
            let theta = 2.0 * PI * k as f64 / count as f64;
            pts.push(Point::from_reals(&[r * theta.cos(), r * theta.sin()]));
        }
    }
    debug_assert_eq!(pts.len(), dim_pn(2, n)?);
    NodeArrayStage::new(2, n, pts, Provenance::Bos, EvalBasis::ProductChebyshev)
}
