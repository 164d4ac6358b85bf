//! Interpolation node arrays in C^d and R^d and their pluripotential-theoretic
//! diagnostics.
//!
//! The crate builds the classical node families — Fekete (brute-force and
//! greedy-approximate), discrete Leja, the closed-form disk Leja and R-Leja
//! sequences, Padua points, intertwined tensor arrays and Bos concentric-ring
//! arrays — and measures them: Vandermonde log-determinants, Lebesgue
//! constants and growth scalings, transfinite-diameter estimates and closed
//! forms, equilibrium-measure moment comparisons, Bergman / Bernstein-Markov
//! quantities, and Kergin interpolation with its algebraic property suite.
//!
//! ```
//! use fekete::diagnostics::lebesgue_constant;
//! use fekete::meshes::square_mesh;
//! use fekete::points::padua_points;
//!
//! let stage = padua_points(6).unwrap();
//! assert_eq!(stage.len(), 28); // binomial(6 + 2, 2)
//! let grid = square_mesh(6, 10).unwrap();
//! let lambda = lebesgue_constant(&stage, &grid).unwrap();
//! assert!(lambda >= 1.0 && lambda < 7.0);
//! ```

pub mod basis;
pub mod bergman;
pub mod diagnostics;
pub mod error;
pub mod interp;
pub mod kergin;
pub mod linalg;
pub mod meshes;
pub mod points;
mod quad;
pub mod vandermonde;

pub use basis::{dim_pn, ln_sum, GradedMonomialBasis, MultiIndex, Point};
pub use error::{Error, Result};
pub use vandermonde::{
    log_abs_vdm, tdiam_estimate, EvalBasis, FlipEvaluator, LogAbsDet, NodeArrayStage, Provenance,
    WeightFunction,
};
