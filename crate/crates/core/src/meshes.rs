//! Finite candidate point sets (weakly admissible meshes) on the reference
//! compacts, with their recorded norming constants.
//!
//! The sup-norm of a polynomial on a compact is everywhere operationalized as
//! the max over a designated fine reference mesh (same generator, 10x
//! density). Interval and square constants follow the classical
//! Chebyshev-Lobatto bound; the disk and simplex constants are empirical fits
//! at desk scale, recorded as such.

use crate::basis::Point;
use crate::error::{Error, Result};
use num_complex::Complex64;
use std::f64::consts::PI;

/// Which reference compact a mesh discretizes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CompactId {
    /// [-1, 1] in one real variable.
    Interval,
    /// Unit circle |z| = 1 (norming for the closed unit disk by the maximum
    /// modulus principle).
    DiskBoundary,
    /// Real unit disk B_2 = {x^2 + y^2 <= 1}.
    RealDisk,
    /// [-1, 1]^2.
    Square,
    /// Standard simplex S_d = {x in R^d_+, sum x_j <= 1}.
    Simplex(usize),
    /// Cartesian product of compacts.
    Product(Vec<CompactId>),
}

impl CompactId {
    pub fn label(&self) -> String {
        match self {
            CompactId::Interval => "interval".into(),
            CompactId::DiskBoundary => "disk_boundary".into(),
            CompactId::RealDisk => "real_disk_B2".into(),
            CompactId::Square => "square".into(),
            CompactId::Simplex(d) => format!("simplex_S{d}"),
            CompactId::Product(parts) => {
                let inner: Vec<String> = parts.iter().map(|p| p.label()).collect();
                format!("product({})", inner.join("x"))
            }
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            CompactId::Interval | CompactId::DiskBoundary => 1,
            CompactId::RealDisk | CompactId::Square => 2,
            CompactId::Simplex(d) => *d,
            CompactId::Product(parts) => parts.iter().map(|p| p.dim()).sum(),
        }
    }
}

/// Enough generator state to rebuild the mesh at a different density.
#[derive(Debug, Clone)]
enum MeshSpec {
    Interval { n: usize, density: usize },
    DiskBoundary { n: usize, density: usize },
    RealDisk { n: usize, radial: usize, angular: usize },
    Simplex { d: usize, n: usize, density: usize },
    Product(Vec<MeshSpec>),
}

/// Finite candidate set with its norming data.
#[derive(Debug, Clone)]
pub struct Mesh {
    points: Vec<Point>,
    compact: CompactId,
    degree_n: usize,
    norming_constant: f64,
    spec: MeshSpec,
    /// Per-axis coordinates when the mesh is a full tensor grid, in the same
    /// row-major order as `points`. Enables separable Lebesgue scans.
    tensor_axes: Option<Vec<Vec<Complex64>>>,
}

impl Mesh {
    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn compact(&self) -> &CompactId {
        &self.compact
    }

    pub fn dim(&self) -> usize {
        self.compact.dim()
    }

    pub fn degree_n(&self) -> usize {
        self.degree_n
    }

    pub fn norming_constant(&self) -> f64 {
        self.norming_constant
    }

    pub fn tensor_axes(&self) -> Option<&[Vec<Complex64>]> {
        self.tensor_axes.as_deref()
    }

    /// Rebuild the same generator with all densities multiplied by `factor`;
    /// the 10x version is the designated sup-norm reference.
    pub fn refine(&self, factor: usize) -> Result<Mesh> {
        fn rebuild(spec: &MeshSpec, factor: usize) -> Result<Mesh> {
            match spec {
                MeshSpec::Interval { n, density } => interval_mesh(*n, density * factor),
                MeshSpec::DiskBoundary { n, density } => disk_boundary_mesh(*n, density * factor),
                MeshSpec::RealDisk { n, radial, angular } => {
                    real_disk_mesh(*n, radial * factor, angular * factor)
                }
                MeshSpec::Simplex { d, n, density } => simplex_mesh(*d, *n, density * factor),
                MeshSpec::Product(parts) => {
                    let factors = parts
                        .iter()
                        .map(|p| rebuild(p, factor))
                        .collect::<Result<Vec<_>>>()?;
                    product_mesh(&factors)
                }
            }
        }
        rebuild(&self.spec, factor)
    }

    /// Max over the mesh of a scalar function of the point.
    pub fn max_over(&self, f: impl Fn(&Point) -> f64) -> f64 {
        self.points.iter().map(f).fold(f64::NEG_INFINITY, f64::max)
    }
}

/// Chebyshev-Lobatto points cos(k pi / m), k = 0..=m, in natural order
/// (from +1 down to -1).
pub(crate) fn lobatto_points(m: usize) -> Vec<f64> {
    (0..=m)
        .map(|k| {
            // Snap the midpoint to exactly 0.
            if 2 * k == m {
                0.0
            } else {
                (PI * k as f64 / m as f64).cos()
            }
        })
        .collect()
}

/// Chebyshev-Lobatto mesh of M = density*n + 1 points on [-1, 1]. An
/// admissible mesh for density >= 2 with constant sec(pi/(2 density)).
pub fn interval_mesh(n: usize, density: usize) -> Result<Mesh> {
    if density < 2 {
        return Err(Error::InvalidParameter("interval mesh needs density >= 2".into()));
    }
    if n == 0 {
        return Err(Error::InvalidParameter("mesh degree must be >= 1".into()));
    }
    let m = density * n;
    let xs = lobatto_points(m);
    let points: Vec<Point> = xs.iter().map(|&x| Point::from_reals(&[x])).collect();
    let axis: Vec<Complex64> = xs.iter().map(|&x| Complex64::new(x, 0.0)).collect();
    Ok(Mesh {
        points,
        compact: CompactId::Interval,
        degree_n: n,
        norming_constant: 1.0 / (PI / (2.0 * density as f64)).cos(),
        spec: MeshSpec::Interval { n, density },
        tensor_axes: Some(vec![axis]),
    })
}

/// M = density*n + 1 equally spaced points on the unit circle, starting at 1.
pub fn disk_boundary_mesh(n: usize, density: usize) -> Result<Mesh> {
    if density < 2 {
        return Err(Error::InvalidParameter("circle mesh needs density >= 2".into()));
    }
    if n == 0 {
        return Err(Error::InvalidParameter("mesh degree must be >= 1".into()));
    }
    let m = density * n + 1;
    let axis: Vec<Complex64> = (0..m)
        .map(|k| {
            let t = 2.0 * PI * k as f64 / m as f64;
            Complex64::new(t.cos(), t.sin())
        })
        .collect();
    let points: Vec<Point> = axis.iter().map(|&z| Point::new(vec![z])).collect();
    // Trig-polynomial spacing bound; blows up politely as density -> 2.
    let norming_constant = 1.0 / (PI * n as f64 / m as f64).cos().max(1e-3);
    Ok(Mesh {
        points,
        compact: CompactId::DiskBoundary,
        degree_n: n,
        norming_constant,
        spec: MeshSpec::DiskBoundary { n, density },
        tensor_axes: Some(vec![axis]),
    })
}

/// Polar mesh on the real disk B_2: equally spaced diameters, each carrying a
/// full Chebyshev-Lobatto radial grid (so radii cluster at the boundary).
/// The recorded constant is an empirical fit, not a certified bound.
pub fn real_disk_mesh(n: usize, radial_density: usize, angular_density: usize) -> Result<Mesh> {
    if radial_density < 2 || angular_density < 2 {
        return Err(Error::InvalidParameter("disk mesh needs densities >= 2".into()));
    }
    if n == 0 {
        return Err(Error::InvalidParameter("mesh degree must be >= 1".into()));
    }
    // Even radial count so the origin sits on every diameter exactly once.
    let mut m = radial_density * n;
    if m % 2 == 1 {
        m += 1;
    }
    let radii = lobatto_points(m);
    let n_diameters = angular_density * n;
    let mut points = Vec::with_capacity(n_diameters * m + 1);
    points.push(Point::from_reals(&[0.0, 0.0]));
    for k in 0..n_diameters {
        let theta = PI * k as f64 / n_diameters as f64;
        let (s, c) = theta.sin_cos();
        for &r in &radii {
            if r == 0.0 {
                continue;
            }
            points.push(Point::from_reals(&[r * c, r * s]));
        }
    }
    let radial_c = 1.0 / (PI * n as f64 / (2.0 * m as f64)).cos();
    let angular_c = 1.0 / (PI * n as f64 / (2.0 * n_diameters as f64)).cos();
    Ok(Mesh {
        points,
        compact: CompactId::RealDisk,
        degree_n: n,
        norming_constant: 2.0 * radial_c * angular_c,
        spec: MeshSpec::RealDisk {
            n,
            radial: radial_density,
            angular: angular_density,
        },
        tensor_axes: None,
    })
}

/// Tensor Chebyshev-Lobatto grid on [-1,1]^2.
pub fn square_mesh(n: usize, density: usize) -> Result<Mesh> {
    let line = interval_mesh(n, density)?;
    product_mesh(&[line.clone(), line])
}

/// Barycentric lattice {alpha / m : |alpha| <= m}, m = density*n, on the
/// standard simplex S_d. The norming constant is an empirical desk-scale fit
/// (equally spaced lattices are not certified WAMs).
pub fn simplex_mesh(d: usize, n: usize, density: usize) -> Result<Mesh> {
    if d == 0 {
        return Err(Error::InvalidParameter("simplex dimension must be >= 1".into()));
    }
    if n == 0 {
        return Err(Error::InvalidParameter("mesh degree must be >= 1".into()));
    }
    if density == 0 {
        return Err(Error::InvalidParameter("simplex mesh needs density >= 1".into()));
    }
    let m = density * n;
    let mut points = Vec::new();
    let mut alpha = vec![0u32; d];
    fn recurse(
        d: usize,
        coord: usize,
        remaining: u32,
        m: f64,
        alpha: &mut Vec<u32>,
        out: &mut Vec<Point>,
    ) {
        if coord == d {
            let coords: Vec<f64> = alpha.iter().map(|&a| a as f64 / m).collect();
            out.push(Point::from_reals(&coords));
            return;
        }
        for a in 0..=remaining {
            alpha[coord] = a;
            recurse(d, coord + 1, remaining - a, m, alpha, out);
        }
        alpha[coord] = 0;
    }
    recurse(d, 0, m as u32, m as f64, &mut alpha, &mut points);
    // Empirical: ratios observed at desk scale (n <= 15, density >= 1) stay
    // well under this envelope, which grows mildly in n/density.
    let norming_constant = 2.0 * (1.0 + 0.35 * n as f64 / density as f64);
    Ok(Mesh {
        points,
        compact: CompactId::Simplex(d),
        degree_n: n,
        norming_constant,
        spec: MeshSpec::Simplex { d, n, density },
        tensor_axes: None,
    })
}

/// Cartesian product of meshes; the norming constant multiplies.
pub fn product_mesh(factors: &[Mesh]) -> Result<Mesh> {
    if factors.is_empty() {
        return Err(Error::InvalidParameter("product of zero meshes".into()));
    }
    let n = factors[0].degree_n;
    if factors.iter().any(|m| m.degree_n != n) {
        return Err(Error::Incompatible(
            "product mesh factors must norm the same degree".into(),
        ));
    }
    let mut points: Vec<Vec<Complex64>> = vec![Vec::new()];
    for mesh in factors {
        let mut next = Vec::with_capacity(points.len() * mesh.len());
        for partial in &points {
            for p in mesh.points() {
                let mut coords = partial.clone();
                coords.extend_from_slice(p.coords());
                next.push(coords);
            }
        }
        points = next;
    }
    let points: Vec<Point> = points.into_iter().map(Point::new).collect();
    let tensor_axes = factors
        .iter()
        .map(|m| match m.tensor_axes() {
            Some(axes) if axes.len() == 1 => Some(axes[0].clone()),
            _ => None,
        })
        .collect::<Option<Vec<_>>>();
    Ok(Mesh {
        points,
        compact: CompactId::Product(factors.iter().map(|m| m.compact.clone()).collect()),
        degree_n: n,
        norming_constant: factors.iter().map(|m| m.norming_constant).product(),
        spec: MeshSpec::Product(factors.iter().map(|m| m.spec.clone()).collect()),
        tensor_axes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basis::{chebyshev_t, dim_pn};

    #[test]
    fn interval_mesh_small_is_lobatto_triple() {
        let mesh = interval_mesh(1, 2).unwrap();
        let mut xs: Vec<f64> = mesh.points().iter().map(|p| p.coords()[0].re).collect();
        xs.sort_by(f64::total_cmp);
        assert_eq!(xs, vec![-1.0, 0.0, 1.0]);
    }

    #[test]
    fn interval_mesh_contains_endpoints() {
        for n in [1, 3, 8] {
            for density in [2, 4, 7] {
                let mesh = interval_mesh(n, density).unwrap();
                assert_eq!(mesh.len(), density * n + 1);
                let has = |v: f64| mesh.points().iter().any(|p| (p.coords()[0].re - v).abs() < 1e-15);
                assert!(has(1.0) && has(-1.0));
            }
        }
    }

    #[test]
    fn chebyshev_extrema_live_on_lobatto_grids() {
        // max over mesh of |T_n| equals the sup-norm 1.
        for n in [2usize, 5, 9] {
            let mesh = interval_mesh(n, 3).unwrap();
            let max = mesh.max_over(|p| chebyshev_t(n, p.coords()[0].re).abs());
            assert!((max - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn circle_mesh_fourth_roots() {
        let mesh = disk_boundary_mesh(1, 3).unwrap();
        assert_eq!(mesh.len(), 4);
        let want = [(1.0, 0.0), (0.0, 1.0), (-1.0, 0.0), (0.0, -1.0)];
        for (p, (re, im)) in mesh.points().iter().zip(want) {
            assert!((p.coords()[0] - Complex64::new(re, im)).norm() < 1e-14);
        }
    }

    #[test]
    fn circle_mesh_unimodular_and_norms_powers() {
        let mesh = disk_boundary_mesh(12, 4).unwrap();
        for p in mesh.points() {
            assert!((p.coords()[0].norm() - 1.0).abs() < 1e-14);
        }
        let max = mesh.max_over(|p| p.coords()[0].powu(12).norm());
        assert!((max - 1.0).abs() < 1e-12);
    }

    #[test]
    fn disk_mesh_contains_origin_and_boundary() {
        let mesh = real_disk_mesh(4, 2, 2).unwrap();
        let origin = mesh
            .points()
            .iter()
            .filter(|p| p.coords()[0].norm() + p.coords()[1].norm() < 1e-15)
            .count();
        assert_eq!(origin, 1);
        let on_boundary = mesh
            .points()
            .iter()
            .any(|p| ((p.coords()[0].re.powi(2) + p.coords()[1].re.powi(2)) - 1.0).abs() < 1e-14);
        assert!(on_boundary);
        for p in mesh.points() {
            let r2 = p.coords()[0].re.powi(2) + p.coords()[1].re.powi(2);
            assert!(r2 <= 1.0 + 1e-15);
        }
    }

    #[test]
    fn disk_mesh_max_of_x_is_one() {
        let mesh = real_disk_mesh(3, 2, 3).unwrap();
        let max = mesh.max_over(|p| p.coords()[0].re);
        assert!((max - 1.0).abs() < 1e-14);
    }

    #[test]
    fn square_mesh_small_count() {
        let mesh = square_mesh(1, 2).unwrap();
        assert_eq!(mesh.len(), 9);
        assert_eq!(mesh.dim(), 2);
        assert!(mesh.tensor_axes().is_some());
    }

    #[test]
    fn simplex_lattice_count_matches_binomial() {
        for d in [1usize, 2, 3] {
            for n in [1usize, 3, 5] {
                let mesh = simplex_mesh(d, n, 1).unwrap();
                assert_eq!(mesh.len(), dim_pn(d, n).unwrap());
                for p in mesh.points() {
                    let s: f64 = p.coords().iter().map(|z| z.re).sum();
                    assert!(s <= 1.0 + 1e-12);
                    assert!(p.coords().iter().all(|z| z.re >= -1e-15));
                }
            }
        }
    }

    #[test]
    fn product_mesh_of_lines_is_grid() {
        let a = interval_mesh(1, 2).unwrap();
        let b = interval_mesh(1, 2).unwrap();
        let prod = product_mesh(&[a, b]).unwrap();
        assert_eq!(prod.len(), 9);
        assert_eq!(prod.dim(), 2);
    }

    #[test]
    fn mesh_cardinality_matches_closed_forms() {
        for n in [2usize, 5, 11] {
            assert_eq!(interval_mesh(n, 4).unwrap().len(), 4 * n + 1);
            assert_eq!(disk_boundary_mesh(n, 3).unwrap().len(), 3 * n + 1);
            assert_eq!(square_mesh(n, 2).unwrap().len(), (2 * n + 1) * (2 * n + 1));
            let m = {
                let mut m = 2 * n;
                if m % 2 == 1 {
                    m += 1;
                }
                m
            };
            assert_eq!(real_disk_mesh(n, 2, 2).unwrap().len(), 2 * n * m + 1);
        }
    }

    #[test]
    fn refine_multiplies_density() {
        let mesh = interval_mesh(3, 2).unwrap();
        let fine = mesh.refine(10).unwrap();
        assert_eq!(fine.len(), 20 * 3 + 1);
        assert_eq!(fine.degree_n(), 3);
    }
}
