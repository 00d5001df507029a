//! Symmetric eigendecomposition (cyclic Jacobi) and Gram-matrix
//! factorization into point sets.

use crate::error::{Error, Result};
use crate::numerics::Matrix;
use crate::real::Real;

/// Eigendecomposition of a symmetric matrix by cyclic Jacobi rotations.
///
/// Returns `(eigenvalues, vectors)` with `m = V diag(w) V^T`; eigenvalues
/// are sorted descending and each eigenvector column has its
/// largest-magnitude entry positive.
pub fn jacobi_eigh<F: Real>(m: &Matrix<F>) -> Result<(Vec<F>, Matrix<F>)> {
    let n = m.rows();
    if n != m.cols() {
        return Err(Error::Dimension("eigendecomposition needs a square matrix".into()));
    }
    let sym_tol = m.max_abs().max(F::one()) * F::of(1e-10);
    for i in 0..n {
        for j in i + 1..n {
            if (m[(i, j)] - m[(j, i)]).abs() > sym_tol {
                return Err(Error::InvalidArgument("matrix is not symmetric".into()));
            }
        }
    }

    let mut a = m.clone();
    // symmetrize exactly so rotations stay consistent
    for i in 0..n {
        for j in i + 1..n {
            let v = (a[(i, j)] + a[(j, i)]) * F::of(0.5);
            a[(i, j)] = v;
            a[(j, i)] = v;
        }
    }
    let mut v = Matrix::identity(n);
    let eps = F::epsilon() * F::of_usize(n * n) * a.max_abs().max(F::one());

    for _sweep in 0..100 {
        let mut off = F::zero();
        for i in 0..n {
            for j in i + 1..n {
                off = off.max(a[(i, j)].abs());
            }
        }
        if off <= eps {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if a[(p, q)].abs() <= eps * F::of(1e-2) {
                    continue;
                }
                let theta = (a[(q, q)] - a[(p, p)]) / (F::of(2.0) * a[(p, q)]);
                let t = {
                    let s = if theta >= F::zero() { F::one() } else { -F::one() };
                    s / (theta.abs() + (theta * theta + F::one()).sqrt())
                };
                let c = F::one() / (t * t + F::one()).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[(k, p)];
                    let akq = a[(k, q)];
                    a[(k, p)] = c * akp - s * akq;
                    a[(k, q)] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[(p, k)];
                    let aqk = a[(q, k)];
                    a[(p, k)] = c * apk - s * aqk;
                    a[(q, k)] = s * apk + c * aqk;
                }
                for k in 0..n {
                    let vkp = v[(k, p)];
                    let vkq = v[(k, q)];
                    v[(k, p)] = c * vkp - s * vkq;
                    v[(k, q)] = s * vkp + c * vkq;
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    let evals: Vec<F> = (0..n).map(|i| a[(i, i)]).collect();
    order.sort_by(|&i, &j| evals[j].partial_cmp(&evals[i]).unwrap());

    let mut w = Vec::with_capacity(n);
    let mut vs = Matrix::zeros(n, n);
    for (new, &old) in order.iter().enumerate() {
        w.push(evals[old]);
        let col = v.col(old);
        // deterministic sign: largest-|entry| positive
        let mut lead = 0;
        for k in 1..n {
            if col[k].abs() > col[lead].abs() {
                lead = k;
            }
        }
        let sign = if col[lead] < F::zero() { -F::one() } else { F::one() };
        for k in 0..n {
            vs[(k, new)] = sign * col[k];
        }
    }
    Ok((w, vs))
}

/// Factors a symmetric PSD matrix `g` as `points^T * points`.
///
/// The returned matrix has one column per point; the column count is the
/// numerical rank (eigenvalues at or below `rank_tol` relative to the
/// largest eigenvalue are truncated). An eigenvalue below the negated
/// relative tolerance means `g` is not a Gram matrix.
pub fn psd_factor<F: Real>(g: &Matrix<F>, rank_tol: F) -> Result<Matrix<F>> {
    let n = g.rows();
    let (w, v) = jacobi_eigh(g)?;
    let max_eig = w.iter().fold(F::zero(), |a, &b| a.max(b.abs()));
    let cut = max_eig * rank_tol;
    if let Some(&bad) = w.iter().find(|&&x| x < -cut) {
        return Err(Error::NotGram(format!(
            "negative eigenvalue {bad} below tolerance -{cut}"
        )));
    }
    let kept: Vec<usize> = (0..n).filter(|&i| w[i] > cut).collect();
    let mut points = Matrix::zeros(kept.len(), n);
    for (r, &i) in kept.iter().enumerate() {
        let s = w[i].sqrt();
        for j in 0..n {
            points[(r, j)] = s * v[(j, i)];
        }
    }
    Ok(points)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::real::dot;

    #[test]
    fn identity_factors_to_orthonormal_points() {
        let g = Matrix::<f64>::identity(2);
        let p = psd_factor(&g, 1e-9).unwrap();
        assert_eq!(p.rows(), 2);
        assert_eq!(p.cols(), 2);
        let a = p.col(0);
        let b = p.col(1);
        assert!((dot(&a, &a) - 1.0).abs() < 1e-12);
        assert!((dot(&b, &b) - 1.0).abs() < 1e-12);
        assert!(dot(&a, &b).abs() < 1e-12);
    }

    #[test]
    fn all_ones_is_rank_one() {
        let g = Matrix::from_rows(&vec![vec![1.0f64; 3]; 3]).unwrap();
        let p = psd_factor(&g, 1e-9).unwrap();
        assert_eq!(p.rows(), 1);
        for j in 0..3 {
            assert!((p[(0, j)].abs() - 1.0).abs() < 1e-12);
        }
        // coincident unit points
        assert!((p[(0, 0)] - p[(0, 1)]).abs() < 1e-12);
    }

    #[test]
    fn heptagon_circulant_has_rank_two() {
        let n = 7;
        let mut rows = vec![vec![0.0f64; n]; n];
        for (i, row) in rows.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                let k = (i as i64 - j as i64).rem_euclid(n as i64) as f64;
                *cell = (2.0 * std::f64::consts::PI * k / n as f64).cos();
            }
        }
        let g = Matrix::from_rows(&rows).unwrap();
        // circulant eigenvalues via discrete Fourier sums: n/2 twice, rest 0
        let p = psd_factor(&g, 1e-9).unwrap();
        assert_eq!(p.rows(), 2, "heptagon Gram must have rank 2");
        // regular heptagon on the unit circle: all points unit norm,
        // consecutive inner products cos(2*pi/7)
        for j in 0..n {
            let c = p.col(j);
            assert!((dot(&c, &c) - 1.0).abs() < 1e-9);
        }
        let expect = (2.0 * std::f64::consts::PI / 7.0).cos();
        for j in 0..n {
            let a = p.col(j);
            let b = p.col((j + 1) % n);
            assert!((dot(&a, &b) - expect).abs() < 1e-9);
        }
    }

    #[test]
    fn indefinite_matrix_is_rejected() {
        let g = Matrix::from_rows(&[vec![1.0f64, 2.0], vec![2.0, 1.0]]).unwrap();
        assert!(matches!(psd_factor(&g, 1e-9), Err(Error::NotGram(_))));
    }

    #[test]
    fn asymmetric_matrix_is_rejected() {
        let g = Matrix::from_rows(&[vec![1.0f64, 0.5], vec![0.0, 1.0]]).unwrap();
        assert!(jacobi_eigh(&g).is_err());
    }
}
