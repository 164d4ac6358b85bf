//! Graded monomial bases of P_n in d variables.
//!
//! The ordering is fixed once for the whole crate: multi-indices are sorted by
//! total degree, and inside a degree block by descending lexicographic
//! comparison of the exponent tuples, so for d = 2, n = 2 the basis reads
//! 1, x, y, x^2, xy, y^2. Determinant signs are reproducible because every
//! module goes through this enumeration.

use crate::error::{Error, Result};
use num_complex::Complex64;

/// Exponent tuple of a monomial z^alpha.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiIndex {
    exponents: Vec<u32>,
}

impl MultiIndex {
    pub fn new(exponents: Vec<u32>) -> Self {
        MultiIndex { exponents }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn degree(&self) -> u32 {
        self.exponents.iter().sum()
    }

    pub fn dim(&self) -> usize {
        self.exponents.len()
    }
}

/// A point of C^d. Real compacts simply carry zero imaginary parts.
#[derive(Debug, Clone, PartialEq)]
pub struct Point {
    coords: Vec<Complex64>,
}

impl Point {
    pub fn new(coords: Vec<Complex64>) -> Self {
        Point { coords }
    }

    pub fn from_reals(coords: &[f64]) -> Self {
        Point {
            coords: coords.iter().map(|&x| Complex64::new(x, 0.0)).collect(),
        }
    }

    pub fn univariate(z: Complex64) -> Self {
        Point { coords: vec![z] }
    }

    pub fn coords(&self) -> &[Complex64] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    /// Max absolute imaginary part, used to decide real-compact fast paths.
    pub fn max_imag(&self) -> f64 {
        self.coords.iter().map(|z| z.im.abs()).fold(0.0, f64::max)
    }
}

/// dim P_n in d variables: binomial(n + d, d).
pub fn dim_pn(d: usize, n: usize) -> Result<usize> {
    if d == 0 {
        return Err(Error::InvalidParameter("dimension d must be >= 1".into()));
    }
    let mut acc: u128 = 1;
    for k in 1..=d as u128 {
        acc = acc * (n as u128 + k) / k;
    }
    usize::try_from(acc)
        .map_err(|_| Error::InvalidParameter(format!("dim_pn({d},{n}) overflows usize")))
}

/// Sum of the degrees of the graded basis: d*n*N/(d+1), always an integer.
pub fn ln_sum(d: usize, n: usize) -> Result<u64> {
    let n_dim = dim_pn(d, n)? as u128;
    let num = d as u128 * n as u128 * n_dim;
    debug_assert_eq!(num % (d as u128 + 1), 0);
    u64::try_from(num / (d as u128 + 1))
        .map_err(|_| Error::InvalidParameter(format!("ln_sum({d},{n}) overflows u64")))
}

/// The graded basis of P_n in d variables; owns the multi-index enumeration.
#[derive(Debug, Clone)]
pub struct GradedMonomialBasis {
    dim_d: usize,
    degree_n: usize,
    indices: Vec<MultiIndex>,
}

fn enumerate_block(d: usize, total: u32, prefix: &mut Vec<u32>, out: &mut Vec<MultiIndex>) {
    if d == 1 {
        prefix.push(total);
        out.push(MultiIndex::new(prefix.clone()));
        prefix.pop();
        return;
    }
    for first in (0..=total).rev() {
        prefix.push(first);
        enumerate_block(d - 1, total - first, prefix, out);
        prefix.pop();
    }
}

impl GradedMonomialBasis {
    pub fn new(d: usize, n: usize) -> Result<Self> {
        let count = dim_pn(d, n)?;
        let mut indices = Vec::with_capacity(count);
        let mut prefix = Vec::with_capacity(d);
        for total in 0..=n as u32 {
            enumerate_block(d, total, &mut prefix, &mut indices);
        }
        debug_assert_eq!(indices.len(), count);
        Ok(GradedMonomialBasis {
            dim_d: d,
            degree_n: n,
            indices,
        })
    }

    pub fn dim_d(&self) -> usize {
        self.dim_d
    }

    pub fn degree_n(&self) -> usize {
        self.degree_n
    }

    /// N = dim P_n.
    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn indices(&self) -> &[MultiIndex] {
        &self.indices
    }

    pub fn index(&self, i: usize) -> &MultiIndex {
        &self.indices[i]
    }

    fn check_point(&self, z: &Point) -> Result<()> {
        if z.dim() != self.dim_d {
            return Err(Error::DimensionMismatch {
                expected: self.dim_d,
                got: z.dim(),
            });
        }
        Ok(())
    }

    /// Monomial basis vector (z^alpha(1), ..., z^alpha(N)) via per-coordinate
    /// power tables.
    pub fn basis_vector(&self, z: &Point) -> Result<Vec<Complex64>> {
        self.check_point(z)?;
        let mut out = vec![Complex64::new(0.0, 0.0); self.len()];
        let pow = coordinate_powers(z.coords(), self.degree_n);
        self.monomial_vector_into(&pow, &mut out);
        Ok(out)
    }

    pub(crate) fn monomial_vector_into(&self, powers: &[Vec<Complex64>], out: &mut [Complex64]) {
        for (slot, alpha) in out.iter_mut().zip(&self.indices) {
            let mut v = Complex64::new(1.0, 0.0);
            for (t, &e) in alpha.exponents().iter().enumerate() {
                if e > 0 {
                    v *= powers[t][e as usize];
                }
            }
            *slot = v;
        }
    }

    /// Product-Chebyshev basis vector T_alpha(z) = prod_t T_{alpha_t}(z_t),
    /// same graded ordering. Used for conditioning on real boxes; the change
    /// of basis to monomials is triangular, see [`cheb_log_det_scale`].
    pub fn cheb_basis_vector(&self, z: &Point) -> Result<Vec<Complex64>> {
        self.check_point(z)?;
        let mut out = vec![Complex64::new(0.0, 0.0); self.len()];
        let tab = chebyshev_tables(z.coords(), self.degree_n);
        self.cheb_vector_into(&tab, &mut out);
        Ok(out)
    }

    pub(crate) fn cheb_vector_into(&self, tables: &[Vec<Complex64>], out: &mut [Complex64]) {
        for (slot, alpha) in out.iter_mut().zip(&self.indices) {
            let mut v = Complex64::new(1.0, 0.0);
            for (t, &e) in alpha.exponents().iter().enumerate() {
                if e > 0 {
                    v *= tables[t][e as usize];
                }
            }
            *slot = v;
        }
    }

    /// log of the determinant of the triangular change of basis from
    /// monomials to product-Chebyshev polynomials: the leading coefficient of
    /// T_alpha is prod_t 2^(max(alpha_t - 1, 0)).
    pub fn cheb_log_det_scale(&self) -> f64 {
        let ln2 = std::f64::consts::LN_2;
        self.indices
            .iter()
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

    /// Basis vector divided entrywise by the supplied positive scales
    /// (typically mesh sup-norms), for conditioning greedy selections.
    pub fn scaled_basis_vector(
        &self,
        z: &Point,
        mesh_sup_norms: &[f64],
    ) -> Result<Vec<Complex64>> {
        if mesh_sup_norms.len() != self.len() {
            return Err(Error::DimensionMismatch {
                expected: self.len(),
                got: mesh_sup_norms.len(),
            });
        }
        if let Some(bad) = mesh_sup_norms.iter().find(|&&s| !(s > 0.0)) {
            return Err(Error::InvalidParameter(format!(
                "non-positive basis scale {bad}"
            )));
        }
        let mut v = self.basis_vector(z)?;
        for (x, &s) in v.iter_mut().zip(mesh_sup_norms) {
            *x /= s;
        }
        Ok(v)
    }
}

/// powers[t][e] = z_t^e for e = 0..=n.
pub(crate) fn coordinate_powers(coords: &[Complex64], n: usize) -> Vec<Vec<Complex64>> {
    coords
        .iter()
        .map(|&z| {
            let mut p = Vec::with_capacity(n + 1);
            p.push(Complex64::new(1.0, 0.0));
            for e in 1..=n {
                let last = p[e - 1];
                p.push(last * z);
            }
            p
        })
        .collect()
}

/// tables[t][e] = T_e(z_t) by the three-term recurrence (valid over C).
pub(crate) fn chebyshev_tables(coords: &[Complex64], n: usize) -> Vec<Vec<Complex64>> {
    coords
        .iter()
        .map(|&z| {
            let mut t = Vec::with_capacity(n + 1);
            t.push(Complex64::new(1.0, 0.0));
            if n >= 1 {
                t.push(z);
            }
            for e in 2..=n {
                let v = 2.0 * z * t[e - 1] - t[e - 2];
                t.push(v);
            }
            t
        })
        .collect()
}

/// T_k(x) for real argument.
pub fn chebyshev_t(k: usize, x: f64) -> f64 {
    if !(-1.0..=1.0).contains(&x) {
        // Stable hyperbolic form off the interval.
        let s = x.abs();
        let v = ((s + (s * s - 1.0).sqrt()).powi(k as i32)
            + (s + (s * s - 1.0).sqrt()).powi(-(k as i32)))
            / 2.0;
        return if x < 0.0 && k % 2 == 1 { -v } else { v };
    }
    (k as f64 * x.acos()).cos()
}
