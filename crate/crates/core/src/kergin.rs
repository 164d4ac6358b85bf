//! Kergin interpolation through the Hermite-Genocchi representation:
//!
//!   K[A](f)(x) = sum_k int_{S_k} D^k f(a_0 + sum t_i (a_i - a_0))
//!                                (x - a_0, ..., x - a_{k-1}) dm_k(t),
//!
//! integrating over {t_1..t_k >= 0, sum <= 1} with plain Lebesgue measure
//! (mass 1/k!), the normalization pinned by the univariate divided-difference
//! identity. Polynomial integrands take an exact path via Dirichlet simplex
//! moments; analytic ridge integrands use a fixed-order stick-breaking
//! tensor rule with a Richardson cross-check.

use crate::basis::{dim_pn, GradedMonomialBasis, MultiIndex, Point};
use crate::error::{Error, Result};
use crate::linalg::LuFactors;
use crate::points::r_leja;
use crate::vandermonde::vdm_matrix;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;

/// Ordered nodes (a_0, ..., a_n); repetitions are allowed and meaningful
/// (Hermite semantics).
#[derive(Debug, Clone)]
pub struct KerginNodeTuple {
    nodes: Vec<Point>,
}

impl KerginNodeTuple {
    pub fn new(nodes: Vec<Point>) -> Result<Self> {
        if nodes.is_empty() {
            return Err(Error::InvalidParameter("need at least one node".into()));
        }
        let d = nodes[0].dim();
        if nodes.iter().any(|p| p.dim() != d) {
            return Err(Error::DimensionMismatch {
                expected: d,
                got: nodes.iter().map(Point::dim).find(|&x| x != d).unwrap_or(d),
            });
        }
        Ok(KerginNodeTuple { nodes })
    }

    pub fn nodes(&self) -> &[Point] {
        &self.nodes
    }

    /// Polynomial degree n = #nodes - 1.
    pub fn n(&self) -> usize {
        self.nodes.len() - 1
    }

    pub fn dim_d(&self) -> usize {
        self.nodes[0].dim()
    }

    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.nodes.len() {
            return Err(Error::DimensionMismatch {
                expected: self.nodes.len(),
                got: perm.len(),
            });
        }
        KerginNodeTuple::new(perm.iter().map(|&i| self.nodes[i].clone()).collect())
    }

    pub fn sub_tuple(&self, indices: &[usize]) -> Result<Self> {
        KerginNodeTuple::new(indices.iter().map(|&i| self.nodes[i].clone()).collect())
    }
}

/// Supplier of total-derivative tensors: `jet(y, [v_1..v_k])` is the
/// symmetric k-linear form D^k f(y) applied to the directions.
pub trait JetOracle {
    fn dim(&self) -> usize;
    /// Highest derivative order available; None means unlimited.
    fn max_order(&self) -> Option<usize> {
        None
    }
    fn jet(&self, y: &Point, dirs: &[&[Complex64]]) -> Complex64;
    /// Exact coefficient representation, when the oracle is a polynomial.
    fn as_polynomial(&self) -> Option<&PolynomialOracle> {
        None
    }
}

/// Mixed partial d^beta f(y), realized as the jet against repeated
/// coordinate directions.
pub fn oracle_partial(f: &dyn JetOracle, beta: &MultiIndex, y: &Point) -> Complex64 {
    let d = f.dim();
    let mut units: Vec<Vec<Complex64>> = Vec::new();
    for (axis, &e) in beta.exponents().iter().enumerate() {
        for _ in 0..e {
            let mut v = vec![Complex64::new(0.0, 0.0); d];
            v[axis] = Complex64::new(1.0, 0.0);
            units.push(v);
        }
    }
    let dirs: Vec<&[Complex64]> = units.iter().map(|v| v.as_slice()).collect();
    f.jet(y, &dirs)
}

/// Multivariate polynomial with monomial coefficients; doubles as the exact
/// jet oracle and as the t-space scratch representation inside the simplex
/// integrals.
#[derive(Debug, Clone)]
pub struct PolynomialOracle {
    d: usize,
    coeffs: BTreeMap<Vec<u32>, Complex64>,
}

impl PolynomialOracle {
    pub fn zero(d: usize) -> Self {
        PolynomialOracle {
            d,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn from_terms(
        d: usize,
        terms: impl IntoIterator<Item = (Vec<u32>, Complex64)>,
    ) -> Result<Self> {
        let mut p = PolynomialOracle::zero(d);
        for (exps, c) in terms {
            p.add_term(exps, c)?;
        }
        Ok(p)
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: Complex64) -> Result<()> {
        if exps.len() != self.d {
            return Err(Error::DimensionMismatch {
                expected: self.d,
                got: exps.len(),
            });
        }
        let entry = self.coeffs.entry(exps).or_insert(Complex64::new(0.0, 0.0));
        *entry += c;
        if entry.norm() == 0.0 {
            // Keep the map clean so total_degree stays honest.
        }
        Ok(())
    }

    pub fn coeffs(&self) -> &BTreeMap<Vec<u32>, Complex64> {
        &self.coeffs
    }

    pub fn total_degree(&self) -> u32 {
        self.coeffs
            .iter()
            .filter(|(_, c)| c.norm() > 0.0)
            .map(|(e, _)| e.iter().sum())
            .max()
            .unwrap_or(0)
    }

    pub fn eval(&self, y: &Point) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (exps, &c) in &self.coeffs {
            let mut v = c;
            for (t, &e) in exps.iter().enumerate() {
                for _ in 0..e {
                    v *= y.coords()[t];
                }
            }
            acc += v;
        }
        acc
    }

    /// Directional derivative sum_t v_t d/dx_t, exact in coefficient space.
    pub fn directional_derivative(&self, v: &[Complex64]) -> PolynomialOracle {
        let mut out = PolynomialOracle::zero(self.d);
        for (exps, &c) in &self.coeffs {
            for t in 0..self.d {
                if exps[t] == 0 || v[t].norm() == 0.0 {
                    continue;
                }
                let mut e = exps.clone();
                e[t] -= 1;
                let entry = out.coeffs.entry(e).or_insert(Complex64::new(0.0, 0.0));
                *entry += c * v[t] * exps[t] as f64;
            }
        }
        out
    }

    fn mul(&self, other: &PolynomialOracle) -> PolynomialOracle {
        let mut out = PolynomialOracle::zero(self.d);
        for (ea, &ca) in &self.coeffs {
            if ca.norm() == 0.0 {
                continue;
            }
            for (eb, &cb) in &other.coeffs {
                if cb.norm() == 0.0 {
                    continue;
                }
                let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                let entry = out.coeffs.entry(e).or_insert(Complex64::new(0.0, 0.0));
                *entry += ca * cb;
            }
        }
        out
    }

    /// Substitute the affine map x_c = offset_c + sum_i matrix[c][i] t_i,
    /// producing a polynomial in the k variables t.
    fn compose_affine(&self, offset: &[Complex64], matrix: &[Vec<Complex64>], k: usize) -> Self {
        // Per-coordinate degree-1 polynomials in t.
        let linears: Vec<PolynomialOracle> = (0..self.d)
            .map(|c| {
                let mut p = PolynomialOracle::zero(k);
                p.coeffs.insert(vec![0; k], offset[c]);
                for i in 0..k {
                    if matrix[c][i].norm() > 0.0 {
                        let mut e = vec![0; k];
                        e[i] = 1;
                        p.coeffs.insert(e, matrix[c][i]);
                    }
                }
                p
            })
            .collect();
        // Power caches per coordinate.
        let max_exp: Vec<u32> = (0..self.d)
            .map(|c| self.coeffs.keys().map(|e| e[c]).max().unwrap_or(0))
            .collect();
        let mut powers: Vec<Vec<PolynomialOracle>> = Vec::with_capacity(self.d);
        for c in 0..self.d {
            let mut cache = Vec::with_capacity(max_exp[c] as usize + 1);
            let mut unit = PolynomialOracle::zero(k);
            unit.coeffs.insert(vec![0; k], Complex64::new(1.0, 0.0));
            cache.push(unit);
            for e in 1..=max_exp[c] as usize {
                let next = cache[e - 1].mul(&linears[c]);
                cache.push(next);
            }
            powers.push(cache);
        }
        let mut out = PolynomialOracle::zero(k);
        for (exps, &coef) in &self.coeffs {
            if coef.norm() == 0.0 {
                continue;
            }
            let mut term = PolynomialOracle::zero(k);
            term.coeffs.insert(vec![0; k], coef);
            for c in 0..self.d {
                if exps[c] > 0 {
                    term = term.mul(&powers[c][exps[c] as usize]);
                }
            }
            for (e, c) in term.coeffs {
                let entry = out.coeffs.entry(e).or_insert(Complex64::new(0.0, 0.0));
                *entry += c;
            }
        }
        out
    }
}

impl JetOracle for PolynomialOracle {
    fn dim(&self) -> usize {
        self.d
    }

    fn jet(&self, y: &Point, dirs: &[&[Complex64]]) -> Complex64 {
        let mut g = self.clone();
        for v in dirs {
            g = g.directional_derivative(v);
        }
        g.eval(y)
    }

    fn as_polynomial(&self) -> Option<&PolynomialOracle> {
        Some(self)
    }
}

/// Derivatives of a univariate analytic function.
pub trait UnivariateJet {
    fn deriv(&self, order: usize, t: Complex64) -> Complex64;
    fn max_order(&self) -> Option<usize> {
        None
    }
}

/// h(t) = sum c_k t^k.
#[derive(Debug, Clone)]
pub struct UniPoly {
    pub coeffs: Vec<Complex64>,
}

impl UnivariateJet for UniPoly {
    fn deriv(&self, order: usize, t: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (k, &c) in self.coeffs.iter().enumerate().skip(order) {
            let mut falling = 1.0f64;
            for j in 0..order {
                falling *= (k - j) as f64;
            }
            let mut v = c * falling;
            for _ in 0..k - order {
                v *= t;
            }
            acc += v;
        }
        acc
    }
}

/// h(t) = exp(scale * t).
#[derive(Debug, Clone)]
pub struct ExpJet {
    pub scale: Complex64,
}

impl UnivariateJet for ExpJet {
    fn deriv(&self, order: usize, t: Complex64) -> Complex64 {
        self.scale.powu(order as u32) * (self.scale * t).exp()
    }
}

/// h(t) = 1 / (t - pole).
#[derive(Debug, Clone)]
pub struct ReciprocalJet {
    pub pole: Complex64,
}

impl UnivariateJet for ReciprocalJet {
    fn deriv(&self, order: usize, t: Complex64) -> Complex64 {
        let mut fact = 1.0f64;
        for j in 1..=order {
            fact *= j as f64;
        }
        let sign = if order % 2 == 0 { 1.0 } else { -1.0 };
        sign * fact / (t - self.pole).powu(order as u32 + 1)
    }
}

/// Ridge function f(z) = h(<lambda, z>) with the complex-bilinear pairing.
pub struct RidgeOracle<H: UnivariateJet> {
    lambda: Vec<Complex64>,
    h: H,
}

impl<H: UnivariateJet> RidgeOracle<H> {
    pub fn new(lambda: Vec<Complex64>, h: H) -> Self {
        RidgeOracle { lambda, h }
    }

    pub fn project(&self, z: &Point) -> Complex64 {
        self.lambda
            .iter()
            .zip(z.coords())
            .map(|(l, z)| l * z)
            .sum()
    }
}

impl<H: UnivariateJet> JetOracle for RidgeOracle<H> {
    fn dim(&self) -> usize {
        self.lambda.len()
    }

    fn max_order(&self) -> Option<usize> {
        self.h.max_order()
    }

    fn jet(&self, y: &Point, dirs: &[&[Complex64]]) -> Complex64 {
        let mut factor = Complex64::new(1.0, 0.0);
        for v in dirs {
            let proj: Complex64 = self.lambda.iter().zip(*v).map(|(l, x)| l * x).sum();
            factor *= proj;
        }
        self.h.deriv(dirs.len(), self.project(y)) * factor
    }
}

/// Exact moment of t^gamma over {t_i >= 0, sum <= 1}:
/// prod gamma_i! / (|gamma| + k)!.
fn simplex_moment(gamma: &[u32], k: usize) -> f64 {
    let total: u32 = gamma.iter().sum::<u32>() + k as u32;
    if total <= 33 {
        let fact = |m: u32| -> u128 { (1..=m as u128).product::<u128>().max(1) };
        let mut num: u128 = 1;
        for &g in gamma {
            num *= fact(g);
        }
        num as f64 / fact(total) as f64
    } else {
        let lf = |m: u32| -> f64 { (1..=m as u64).map(|v| (v as f64).ln()).sum() };
        (gamma.iter().map(|&g| lf(g)).sum::<f64>() - lf(total)).exp()
    }
}

/// Exact integral of a polynomial over the k-simplex after the affine pullback
/// t -> a_0 + sum t_i (a_i - a_0).
fn simplex_integral_exact(g: &PolynomialOracle, nodes: &[Point], k: usize) -> Complex64 {
    let d = nodes[0].dim();
    let offset: Vec<Complex64> = nodes[0].coords().to_vec();
    let matrix: Vec<Vec<Complex64>> = (0..d)
        .map(|c| {
            (1..=k)
                .map(|i| nodes[i].coords()[c] - nodes[0].coords()[c])
                .collect()
        })
        .collect();
    let in_t = g.compose_affine(&offset, &matrix, k);
    let mut acc = Complex64::new(0.0, 0.0);
    for (gamma, &c) in in_t.coeffs() {
        if c.norm() == 0.0 {
            continue;
        }
        acc += c * simplex_moment(gamma, k);
    }
    acc
}

/// Gauss-Legendre nodes mapped to [0, 1] at the given order (computed by the
/// same Newton iteration as the fixed table; small orders only).
fn gl_unit_interval(order: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0f64; order];
    let mut weights = vec![0.0f64; order];
    let legendre = |x: f64| -> (f64, f64) {
        let mut p0 = 1.0f64;
        let mut p1 = x;
        for kk in 2..=order {
            let kf = kk as f64;
            let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
            p0 = p1;
            p1 = p2;
        }
        let dp = order as f64 * (x * p1 - p0) / (x * x - 1.0);
        (p1, dp)
    };
    for i in 0..order {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (order as f64 + 0.5)).cos();
        for _ in 0..100 {
            let (p, dp) = legendre(x);
            let dx = p / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let (_, dp) = legendre(x);
        nodes[i] = 0.5 * (x + 1.0);
        weights[i] = 1.0 / ((1.0 - x * x) * dp * dp);
    }
    (nodes, weights)
}

/// Stick-breaking tensor quadrature of the order-k Hermite-Genocchi term for
/// a general jet oracle.
fn simplex_term_quadrature(
    f: &dyn JetOracle,
    nodes: &[Point],
    dirs: &[&[Complex64]],
    k: usize,
    order: usize,
) -> Complex64 {
    let d = nodes[0].dim();
    let (u_nodes, u_weights) = gl_unit_interval(order);
    let mut acc = Complex64::new(0.0, 0.0);
    let mut idx = vec![0usize; k];
    let mut y_coords = vec![Complex64::new(0.0, 0.0); d];
    loop {
        // Map u -> t by stick breaking; accumulate the Jacobian.
        let mut weight = 1.0f64;
        let mut remaining = 1.0f64;
        let y_point = |coords: &mut Vec<Complex64>| {
            coords.copy_from_slice(nodes[0].coords());
        };
        y_point(&mut y_coords);
        for i in 0..k {
            let u = u_nodes[idx[i]];
            weight *= u_weights[idx[i]];
            let t_i = u * remaining;
            // Jacobian: the map is triangular with d t_i / d u_i equal to the
            // stick length remaining before step i.
            weight *= remaining;
            remaining *= 1.0 - u;
            for c in 0..d {
                y_coords[c] += t_i * (nodes[i + 1].coords()[c] - nodes[0].coords()[c]);
            }
        }
        let y = Point::new(y_coords.clone());
        acc += weight * f.jet(&y, dirs);

        // Odometer.
        let mut pos = 0usize;
        loop {
            if pos == k {
                return acc;
            }
            idx[pos] += 1;
            if idx[pos] < order {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

/// Evaluate the Kergin interpolant K[A](f) at x.
pub fn kergin_eval(tuple: &KerginNodeTuple, f: &dyn JetOracle, x: &Point) -> Result<Complex64> {
    let n = tuple.n();
    let d = tuple.dim_d();
    if f.dim() != d || x.dim() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            got: f.dim().max(x.dim()),
        });
    }
    if let Some(m) = f.max_order() {
        if m < n {
            return Err(Error::JetOrder {
                needed: n,
                available: m,
            });
        }
    }
    let nodes = tuple.nodes();
    let mut acc = f.jet(&nodes[0], &[]);

    // Direction vectors x - a_0, ..., x - a_{n-1}.
    let dirs_store: Vec<Vec<Complex64>> = (0..n)
        .map(|i| {
            x.coords()
                .iter()
                .zip(nodes[i].coords())
                .map(|(xs, a)| xs - a)
                .collect()
        })
        .collect();

    if let Some(p) = f.as_polynomial() {
        // Exact path: differentiate in coefficient space, integrate by
        // Dirichlet moments.
        let mut g = p.clone();
        for k in 1..=n {
            g = g.directional_derivative(&dirs_store[k - 1]);
            acc += simplex_integral_exact(&g, &nodes[..=k], k);
        }
        return Ok(acc);
    }

    if n > 7 {
        return Err(Error::InvalidParameter(
            "quadrature path supports at most 8 nodes; supply a polynomial oracle".into(),
        ));
    }
    let order = n + 3;
    for k in 1..=n {
        let dirs: Vec<&[Complex64]> = dirs_store[..k].iter().map(|v| v.as_slice()).collect();
        let coarse = simplex_term_quadrature(f, &nodes[..=k], &dirs, k, order);
        let fine = simplex_term_quadrature(f, &nodes[..=k], &dirs, k, order + 2);
        if (coarse - fine).norm() > 1e-8 * fine.norm().max(1.0) {
            return Err(Error::QuadratureFailure(format!(
                "simplex rule disagreement {:.3e} at term k = {k}",
                (coarse - fine).norm()
            )));
        }
        acc += fine;
    }
    Ok(acc)
}

/// Recover K[A](f) as an explicit polynomial by interpolating its values on
/// a generic unisolvent stage (intertwined R-Leja tuples centred on the node
/// cloud). Also serves as the degree-preservation witness: the returned
/// polynomial lives in P_n by construction of the fit.
pub fn kergin_polynomial(tuple: &KerginNodeTuple, f: &dyn JetOracle) -> Result<PolynomialOracle> {
    let n = tuple.n();
    let d = tuple.dim_d();
    let n_coef = dim_pn(d, n)?;
    // Center and radius of the node cloud, for a well-scaled fit stage.
    let mut center = vec![Complex64::new(0.0, 0.0); d];
    for p in tuple.nodes() {
        for c in 0..d {
            center[c] += p.coords()[c];
        }
    }
    for c in center.iter_mut() {
        *c /= tuple.nodes().len() as f64;
    }
    let radius = tuple
        .nodes()
        .iter()
        .map(|p| {
            p.coords()
                .iter()
                .zip(&center)
                .map(|(z, c)| (z - c).norm())
                .fold(0.0f64, f64::max)
        })
        .fold(0.0f64, f64::max)
        .max(1.0);
    let seeds = r_leja(n + 1)?;
    let tuples: Vec<Vec<Complex64>> = (0..d)
        .map(|c| {
            seeds
                .points()
                .iter()
                .map(|p| center[c] + radius * p.coords()[0].re)
                .collect()
        })
        .collect();
    let basis = GradedMonomialBasis::new(d, n)?;
    let fit_points: Vec<Point> = basis
        .indices()
        .iter()
        .map(|alpha| {
            Point::new(
                alpha
                    .exponents()
                    .iter()
                    .enumerate()
                    .map(|(c, &i)| tuples[c][i as usize])
                    .collect(),
            )
        })
        .collect();
    debug_assert_eq!(fit_points.len(), n_coef);
    let mut values = Vec::with_capacity(n_coef);
    for p in &fit_points {
        values.push(kergin_eval(tuple, f, p)?);
    }
    let vdm = vdm_matrix(&basis, &fit_points)?;
    let lu = LuFactors::factor(vdm);
    if lu.degenerate {
        return Err(Error::Degenerate);
    }
    let coeffs = lu.solve_transposed(&values);
    PolynomialOracle::from_terms(
        d,
        basis
            .indices()
            .iter()
            .zip(coeffs)
            .map(|(alpha, c)| (alpha.exponents().to_vec(), c)),
    )
}

/// One named check with its observed error.
#[derive(Debug, Clone)]
pub struct KerginCheck {
    pub label: String,
    pub error: f64,
    pub tolerance: f64,
    pub passed: bool,
}

impl KerginCheck {
    fn new(label: impl Into<String>, error: f64, tolerance: f64) -> Self {
        KerginCheck {
            label: label.into(),
            error,
            tolerance,
            passed: error <= tolerance,
        }
    }
}

/// Outcome of a check suite; failures are values, not errors.
#[derive(Debug, Clone, Default)]
pub struct KerginReport {
    pub checks: Vec<KerginCheck>,
}

impl KerginReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn worst_error(&self) -> f64 {
        self.checks.iter().map(|c| c.error).fold(0.0, f64::max)
    }

    fn push(&mut self, check: KerginCheck) {
        self.checks.push(check);
    }
}

/// Interpolation conditions: values at distinct nodes, and for a node of
/// multiplicity m all mixed partials to order m-1 (Hermite semantics).
pub fn kergin_interpolation_check(
    tuple: &KerginNodeTuple,
    f: &dyn JetOracle,
    tolerance: f64,
) -> Result<KerginReport> {
    let poly = kergin_polynomial(tuple, f)?;
    let mut report = KerginReport::default();
    // Group exactly-equal nodes.
    let mut groups: Vec<(Point, usize)> = Vec::new();
    for node in tuple.nodes() {
        if let Some(entry) = groups.iter_mut().find(|(p, _)| p == node) {
            entry.1 += 1;
        } else {
            groups.push((node.clone(), 1));
        }
    }
    for (node, multiplicity) in &groups {
        let basis = GradedMonomialBasis::new(tuple.dim_d(), multiplicity - 1)?;
        for beta in basis.indices() {
            let got = oracle_partial(&poly, beta, node);
            let want = oracle_partial(f, beta, node);
            let scale = want.norm().max(1.0);
            report.push(KerginCheck::new(
                format!("jet d^{:?} at node (multiplicity {multiplicity})", beta.exponents()),
                (got - want).norm() / scale,
                tolerance,
            ));
        }
    }
    Ok(report)
}

/// Confluent (Hermite) Newton-form interpolation of a univariate function at
/// possibly repeated nodes; the independent univariate side of the ridge
/// identity.
pub fn univariate_hermite_newton(
    nodes: &[Complex64],
    h: &dyn UnivariateJet,
    t: Complex64,
) -> Complex64 {
    // Cluster equal nodes adjacently, preserving first-appearance order.
    let mut clustered: Vec<Complex64> = Vec::with_capacity(nodes.len());
    let mut order: Vec<Complex64> = Vec::new();
    for &u in nodes {
        if !order.iter().any(|&v| v == u) {
            order.push(u);
        }
    }
    for &u in &order {
        for &v in nodes {
            if v == u {
                clustered.push(v);
            }
        }
    }
    let m = clustered.len();
    // dd[i][j], i <= j, confluent divided differences.
    let mut dd = vec![vec![Complex64::new(0.0, 0.0); m]; m];
    let mut fact = vec![1.0f64; m];
    for k in 1..m {
        fact[k] = fact[k - 1] * k as f64;
    }
    for i in 0..m {
        dd[i][i] = h.deriv(0, clustered[i]);
    }
    for width in 1..m {
        for i in 0..m - width {
            let j = i + width;
            dd[i][j] = if clustered[i] == clustered[j] {
                h.deriv(width, clustered[i]) / fact[width]
            } else {
                (dd[i + 1][j] - dd[i][j - 1]) / (clustered[j] - clustered[i])
            };
        }
    }
    let mut acc = Complex64::new(0.0, 0.0);
    let mut omega = Complex64::new(1.0, 0.0);
    for j in 0..m {
        acc += dd[0][j] * omega;
        omega *= t - clustered[j];
    }
    acc
}

/// Ridge reduction: K[A](h(<lambda, .>))(x) equals the univariate
/// Lagrange-Hermite interpolant of h at the projected nodes, evaluated at
/// <lambda, x>. The two sides are computed through independent paths
/// (simplex quadrature vs confluent divided differences).
pub fn ridge_identity_check<H: UnivariateJet>(
    tuple: &KerginNodeTuple,
    lambda: Vec<Complex64>,
    h: H,
    x: &Point,
    tolerance: f64,
) -> Result<KerginReport> {
    let oracle = RidgeOracle::new(lambda, h);
    let left = kergin_eval(tuple, &oracle, x)?;
    let projected: Vec<Complex64> = tuple.nodes().iter().map(|a| oracle.project(a)).collect();
    let right = univariate_hermite_newton(&projected, &oracle.h, oracle.project(x));
    let scale = right.norm().max(1.0);
    let mut report = KerginReport::default();
    report.push(KerginCheck::new(
        "ridge reduction to univariate interpolation",
        (left - right).norm() / scale,
        tolerance,
    ));
    Ok(report)
}

/// Algebraic properties: (i) invariance under reordering of the nodes, and
/// (ii) the projection identity K[B](K[A] f) = K[B] f for a sub-tuple B.
pub fn kergin_algebra_checks(
    tuple: &KerginNodeTuple,
    sub_indices: &[usize],
    f: &dyn JetOracle,
    seed: u64,
    tolerance: f64,
) -> Result<KerginReport> {
    let d = tuple.dim_d();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let radius = tuple
        .nodes()
        .iter()
        .flat_map(|p| p.coords().iter().map(|z| z.norm()))
        .fold(1.0f64, f64::max);
    let random_point = |rng: &mut ChaCha8Rng| -> Point {
        Point::new(
            (0..d)
                .map(|_| {
                    Complex64::new(
                        rng.gen_range(-radius..radius),
                        rng.gen_range(-0.3 * radius..0.3 * radius),
                    )
                })
                .collect(),
        )
    };

    let mut report = KerginReport::default();

    // Permutation invariance at 20 random points.
    let mut perm: Vec<usize> = (0..tuple.nodes().len()).collect();
    for i in (1..perm.len()).rev() {
        let j = rng.gen_range(0..=i);
        perm.swap(i, j);
    }
    let shuffled = tuple.permuted(&perm)?;
    let mut worst = 0.0f64;
    for _ in 0..20 {
        let x = random_point(&mut rng);
        let a = kergin_eval(tuple, f, &x)?;
        let b = kergin_eval(&shuffled, f, &x)?;
        worst = worst.max((a - b).norm() / a.norm().max(1.0));
    }
    report.push(KerginCheck::new("ordering invariance", worst, tolerance));

    // Projection identity through the recovered polynomial.
    let sub = tuple.sub_tuple(sub_indices)?;
    let k_a = kergin_polynomial(tuple, f)?;
    let mut worst = 0.0f64;
    for _ in 0..20 {
        let x = random_point(&mut rng);
        let a = kergin_eval(&sub, &k_a, &x)?;
        let b = kergin_eval(&sub, f, &x)?;
        worst = worst.max((a - b).norm() / b.norm().max(1.0));
    }
    report.push(KerginCheck::new(
        "projection onto sub-tuple",
        worst,
        tolerance,
    ));
    Ok(report)
}
