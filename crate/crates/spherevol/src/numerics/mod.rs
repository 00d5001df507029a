//! Dense linear algebra and root finding shared by every other module.

mod eigen;
mod matrix;
mod roots;

pub use eigen::{jacobi_eigh, psd_factor};
pub use matrix::Matrix;
pub use roots::{real_roots, PolynomialRealRoots};

/// Default relative threshold for numerical rank decisions.
pub const RANK_TOL: f64 = 1e-9;
