//! Dense row-major matrices with row-pivoted LU in the log domain.
//!
//! Vandermonde determinants overflow f64 well before the degrees this crate
//! targets, so the determinant is only ever exposed as log|det| accumulated
//! from pivot moduli. Degeneracy is a value, not an error: a pivot falling
//! below `DEGENERACY_RTOL` times the max modulus of its own (eliminated) row
//! marks the factorization degenerate. The row-relative test matters:
//! well-conditioned node families of high degree have determinants whose
//! pivots legitimately sink far below the global matrix scale, with the whole
//! row shrinking coherently, while a genuinely repeated point cancels the
//! pivot against a row that stays at scale.

use num_complex::ComplexFloat;

/// Relative pivot tolerance below which a factorization is flagged degenerate.
pub const DEGENERACY_RTOL: f64 = 1e-13;

/// Scalar types the factorizations work over (`f64`, `Complex64`).
pub trait Scalar:
    ComplexFloat<Real = f64>
    + std::ops::AddAssign
    + std::ops::SubAssign
    + std::ops::MulAssign
    + Send
    + Sync
    + 'static
{
    fn from_f64(x: f64) -> Self;
}

impl Scalar for f64 {
    fn from_f64(x: f64) -> Self {
        x
    }
}

impl Scalar for num_complex::Complex64 {
    fn from_f64(x: f64) -> Self {
        num_complex::Complex64::new(x, 0.0)
    }
}

/// Dense row-major matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Mat<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Mat<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![T::from_f64(0.0); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c));
        Mat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> T {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    #[inline]
    pub fn row_mut(&mut self, i: usize) -> &mut [T] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// Two disjoint row views; panics if `i == j`.
    #[inline]
    fn rows_pair_mut(&mut self, i: usize, j: usize) -> (&mut [T], &mut [T]) {
        assert_ne!(i, j);
        let c = self.cols;
        if i < j {
            let (a, b) = self.data.split_at_mut(j * c);
            (&mut a[i * c..(i + 1) * c], &mut b[..c])
        } else {
            let (a, b) = self.rows_pair_mut(j, i);
            (b, a)
        }
    }

    pub fn transpose(&self) -> Mat<T> {
        let mut out = Mat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j));
            }
        }
        out
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|v| v.abs()).fold(0.0, f64::max)
    }

    /// `self * other`, straightforward i-k-j loop.
    pub fn matmul(&self, other: &Mat<T>) -> Mat<T> {
        assert_eq!(self.cols, other.rows);
        let mut out = Mat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.abs() == 0.0 {
                    continue;
                }
                let src = other.row(k);
                let dst = out.row_mut(i);
                for j in 0..dst.len() {
                    dst[j] += a * src[j];
                }
            }
        }
        out
    }
}

/// Row-pivoted LU of a square matrix with log-domain determinant bookkeeping.
pub struct LuFactors<T> {
    lu: Mat<T>,
    /// Row permutation: `perm[k]` is the original row index placed at row k.
    perm: Vec<usize>,
    pub log_abs_det: f64,
    pub degenerate: bool,
    /// exp(max log-pivot - min log-pivot); saturates to +inf.
    pub condition_estimate: f64,
}

impl<T: Scalar> LuFactors<T> {
    /// Factor `a` in place with partial pivoting, accumulating logs of pivot
    /// moduli. Never fails: a vanishing pivot yields `degenerate = true` and
    /// `log_abs_det = -inf`.
    pub fn factor(mut a: Mat<T>) -> Self {
        assert_eq!(a.rows(), a.cols());
        let n = a.rows();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut log_abs_det = 0.0f64;
        let mut degenerate = n > 0 && a.max_abs() == 0.0;
        let mut min_lp = f64::INFINITY;
        let mut max_lp = f64::NEG_INFINITY;

        for k in 0..n {
            let mut best = k;
            let mut best_abs = a.get(k, k).abs();
            for i in k + 1..n {
                let v = a.get(i, k).abs();
                if v > best_abs {
                    best = i;
                    best_abs = v;
                }
            }
            if best != k {
                let (rk, rb) = a.rows_pair_mut(k, best);
                rk.swap_with_slice(rb);
                perm.swap(k, best);
            }
            // Row-relative degeneracy test on the eliminated row.
            let row_scale = a.row(k)[k..].iter().map(|v| v.abs()).fold(0.0, f64::max);
            if best_abs <= DEGENERACY_RTOL * row_scale || row_scale == 0.0 {
                degenerate = true;
                log_abs_det = f64::NEG_INFINITY;
                // Leave the remaining block unfactored; solves on a
                // degenerate system are meaningless anyway.
                break;
            }
            let lp = best_abs.ln();
            log_abs_det += lp;
            min_lp = min_lp.min(lp);
            max_lp = max_lp.max(lp);

            let pivot = a.get(k, k);
            let inv = T::from_f64(1.0) / pivot;
            for i in k + 1..n {
                let factor = a.get(i, k) * inv;
                a.set(i, k, factor);
                if factor.abs() == 0.0 {
                    continue;
                }
                let (rk, ri) = a.rows_pair_mut(k, i);
                for j in k + 1..n {
                    ri[j] -= factor * rk[j];
                }
            }
        }

        let condition_estimate = if degenerate || n == 0 {
            f64::INFINITY
        } else {
            (max_lp - min_lp).exp()
        };
        LuFactors {
            lu: a,
            perm,
            log_abs_det,
            degenerate,
            condition_estimate,
        }
    }

    pub fn n(&self) -> usize {
        self.lu.rows()
    }

    /// Solve `A x = b`.
    pub fn solve(&self, b: &[T]) -> Vec<T> {
        let n = self.n();
        assert_eq!(b.len(), n);
        // Forward: L y = P b.
        let mut x: Vec<T> = self.perm.iter().map(|&p| b[p]).collect();
        for i in 1..n {
            let row = self.lu.row(i);
            let mut acc = x[i];
            for j in 0..i {
                acc -= row[j] * x[j];
            }
            x[i] = acc;
        }
        // Backward: U x = y.
        for i in (0..n).rev() {
            let row = self.lu.row(i);
            let mut acc = x[i];
            for j in i + 1..n {
                acc -= row[j] * x[j];
            }
            x[i] = acc / row[i];
        }
        x
    }

    /// Solve `A^T x = b` reusing the same factors (A = P^T L U).
    pub fn solve_transposed(&self, b: &[T]) -> Vec<T> {
        let n = self.n();
        assert_eq!(b.len(), n);
        // A^T = U^T L^T P, so solve U^T y = b, L^T w = y, x = P^T w.
        let mut y = b.to_vec();
        for i in 0..n {
            let mut acc = y[i];
            for j in 0..i {
                acc -= self.lu.get(j, i) * y[j];
            }
            y[i] = acc / self.lu.get(i, i);
        }
        for i in (0..n).rev() {
            let mut acc = y[i];
            for j in i + 1..n {
                acc -= self.lu.get(j, i) * y[j];
            }
            y[i] = acc;
        }
        let mut x = vec![T::from_f64(0.0); n];
        for k in 0..n {
            x[self.perm[k]] = y[k];
        }
        x
    }

    /// Explicit inverse, column by column. Only sensible for well-conditioned
    /// moderate sizes (used by the tensor-grid Lebesgue scan).
    pub fn inverse(&self) -> Mat<T> {
        let n = self.n();
        let mut inv = Mat::zeros(n, n);
        let mut e = vec![T::from_f64(0.0); n];
        for j in 0..n {
            e[j] = T::from_f64(1.0);
            let col = self.solve(&e);
            e[j] = T::from_f64(0.0);
            for i in 0..n {
                inv.set(i, j, col[i]);
            }
        }
        inv
    }
}

/// Cholesky factorization `G = L L^H` of a Hermitian positive-definite matrix.
///
/// Returns the lower factor, or the index of the first pivot at or below
/// `rtol * trace/n`.
pub fn cholesky<T: Scalar>(g: &Mat<T>, rtol: f64) -> std::result::Result<Mat<T>, usize> {
    assert_eq!(g.rows(), g.cols());
    let n = g.rows();
    let trace_scale = (0..n).map(|i| g.get(i, i).re()).sum::<f64>() / n.max(1) as f64;
    let tol = rtol * trace_scale;
    let mut l: Mat<T> = Mat::zeros(n, n);
    for j in 0..n {
        let mut diag = g.get(j, j).re();
        for k in 0..j {
            diag -= (l.get(j, k) * l.get(j, k).conj()).re();
        }
        if !(diag > tol) {
            return Err(j);
        }
        let dsqrt = diag.sqrt();
        l.set(j, j, T::from_f64(dsqrt));
        for i in j + 1..n {
            let mut acc = g.get(i, j);
            for k in 0..j {
                acc -= l.get(i, k) * l.get(j, k).conj();
            }
            l.set(i, j, acc * T::from_f64(1.0 / dsqrt));
        }
    }
    Ok(l)
}

/// Inverse of a lower-triangular matrix.
pub fn invert_lower_triangular<T: Scalar>(l: &Mat<T>) -> Mat<T> {
    let n = l.rows();
    let mut inv = Mat::zeros(n, n);
    for j in 0..n {
        inv.set(j, j, T::from_f64(1.0) / l.get(j, j));
        for i in j + 1..n {
            let mut acc = T::from_f64(0.0);
            for k in j..i {
                acc += l.get(i, k) * inv.get(k, j);
            }
            inv.set(i, j, acc * (T::from_f64(-1.0) / l.get(i, i)));
        }
    }
    inv
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn lu_solves_small_real_system() {
        let a = Mat::from_rows(vec![vec![2.0, 1.0], vec![1.0, 3.0]]);
        let lu = LuFactors::factor(a);
        assert!(!lu.degenerate);
        assert!((lu.log_abs_det - 5.0f64.ln()).abs() < 1e-12);
        let x = lu.solve(&[5.0, 10.0]);
        assert!((x[0] - 1.0).abs() < 1e-12);
        assert!((x[1] - 3.0).abs() < 1e-12);
    }

    #[test]
    fn lu_transposed_solve_matches_direct() {
        let a = Mat::from_rows(vec![
            vec![c(1.0, 0.0), c(2.0, 1.0), c(0.0, -1.0)],
            vec![c(3.0, -2.0), c(1.0, 0.5), c(2.0, 2.0)],
            vec![c(0.5, 0.0), c(0.0, 3.0), c(1.0, -1.0)],
        ]);
        let at = a.transpose();
        let b = [c(1.0, 1.0), c(-2.0, 0.5), c(0.0, 3.0)];
        let x1 = LuFactors::factor(a).solve_transposed(&b);
        let x2 = LuFactors::factor(at).solve(&b);
        for (u, v) in x1.iter().zip(&x2) {
            assert!((u - v).norm() < 1e-10);
        }
    }

    #[test]
    fn lu_flags_singular_matrix_degenerate() {
        let a = Mat::from_rows(vec![vec![1.0, 2.0], vec![2.0, 4.0]]);
        let lu = LuFactors::factor(a);
        assert!(lu.degenerate);
        assert_eq!(lu.log_abs_det, f64::NEG_INFINITY);
    }

    #[test]
    fn cholesky_recovers_identity() {
        let g = Mat::from_rows(vec![vec![c(1.0, 0.0), c(0.0, 0.0)], vec![c(0.0, 0.0), c(1.0, 0.0)]]);
        let l = cholesky(&g, 1e-12).unwrap();
        assert!((l.get(0, 0) - c(1.0, 0.0)).norm() < 1e-14);
        assert!((l.get(1, 1) - c(1.0, 0.0)).norm() < 1e-14);
        assert!(l.get(1, 0).norm() < 1e-14);
    }

    #[test]
    fn cholesky_reports_failing_pivot() {
        let g = Mat::from_rows(vec![vec![1.0, 1.0], vec![1.0, 1.0]]);
        assert_eq!(cholesky(&g, 1e-12), Err(1));
    }

    #[test]
    fn triangular_inverse_roundtrip() {
        let l = Mat::from_rows(vec![
            vec![2.0, 0.0, 0.0],
            vec![1.0, 3.0, 0.0],
            vec![-1.0, 0.5, 1.5],
        ]);
        let inv = invert_lower_triangular(&l);
        let prod = l.matmul(&inv);
        for i in 0..3 {
            for j in 0..3 {
                let want = if i == j { 1.0 } else { 0.0 };
                assert!((prod.get(i, j) - want).abs() < 1e-12);
            }
        }
    }
}
