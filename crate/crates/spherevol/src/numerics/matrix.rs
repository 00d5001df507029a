//! Dense row-major matrices with partial-pivot elimination.
//!
//! Everything here targets tiny systems (never beyond ~15x15), so the
//! implementation favors determinism and stability over speed.

use crate::error::{Error, Result};
use crate::real::Real;

/// Dense matrix, row-major storage.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Real> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = F::one();
        }
        m
    }

    /// Builds a matrix from row slices; all rows must have equal length.
    pub fn from_rows(rows: &[Vec<F>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.iter().any(|x| !x.is_finite()) {
                return Err(Error::InvalidArgument("non-finite matrix entry".into()));
            }
            data.extend_from_slice(row);
        }
        Ok(Self { rows: r, cols: c, data })
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_cols(cols: &[Vec<F>]) -> Result<Self> {
        let m = Self::from_rows(cols)?;
        Ok(m.transpose())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == F::zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * other[(k, j)];
                }
            }
        }
        Ok(out)
    }

    /// Matrix-vector product.
    pub fn matvec(&self, v: &[F]) -> Result<Vec<F>> {
        if v.len() != self.cols {
            return Err(Error::Dimension("matvec length mismatch".into()));
        }
        Ok((0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(&a, &x)| a * x).sum())
            .collect())
    }

    pub fn max_abs(&self) -> F {
        self.data
            .iter()
            .map(|x| x.abs())
            .fold(F::zero(), |a, b| a.max(b))
    }

    /// Determinant by partial-pivot Gaussian elimination.
    pub fn determinant(&self) -> Result<F> {
        if self.rows != self.cols {
            return Err(Error::Dimension(format!(
                "determinant of non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        if self.rows == 0 {
            return Err(Error::Dimension("determinant of empty matrix".into()));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut det = F::one();
        for k in 0..n {
            let mut piv = k;
            for i in k + 1..n {
                if a[(i, k)].abs() > a[(piv, k)].abs() {
                    piv = i;
                }
            }
            if a[(piv, k)] == F::zero() {
                return Ok(F::zero());
            }
            if piv != k {
                a.swap_rows(piv, k);
                det = -det;
            }
            det *= a[(k, k)];
            for i in k + 1..n {
                let f = a[(i, k)] / a[(k, k)];
                if f == F::zero() {
                    continue;
                }
                for j in k..n {
                    let v = a[(k, j)];
                    a[(i, j)] -= f * v;
                }
            }
        }
        Ok(det)
    }

    /// Solves `self * x = b` for square `self` (partial pivoting).
    pub fn solve(&self, b: &[F]) -> Result<Vec<F>> {
        if self.rows != self.cols {
            return Err(Error::Dimension("solve requires a square matrix".into()));
        }
        if b.len() != self.rows {
            return Err(Error::Dimension("rhs length mismatch".into()));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut x = b.to_vec();
        for k in 0..n {
            let mut piv = k;
            for i in k + 1..n {
                if a[(i, k)].abs() > a[(piv, k)].abs() {
                    piv = i;
                }
            }
            if a[(piv, k)].abs() <= F::of(1e-300) {
                return Err(Error::Degenerate("singular linear system".into()));
            }
            if piv != k {
                a.swap_rows(piv, k);
                x.swap(piv, k);
            }
            for i in k + 1..n {
                let f = a[(i, k)] / a[(k, k)];
                if f == F::zero() {
                    continue;
                }
                for j in k..n {
                    let v = a[(k, j)];
                    a[(i, j)] -= f * v;
                }
                let v = x[k];
                x[i] -= f * v;
            }
        }
        for i in (0..n).rev() {
            let mut s = x[i];
            for j in i + 1..n {
                s -= a[(i, j)] * x[j];
            }
            x[i] = s / a[(i, i)];
        }
        Ok(x)
    }

    /// Row-reduces a copy and reports (pivot columns, reduced matrix).
    fn rref(&self) -> (Vec<usize>, Self) {
        let mut a = self.clone();
        let scale = a.max_abs().max(F::one());
        let tol = scale * F::of(1e-11);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..a.cols {
            if r == a.rows {
                break;
            }
            let mut piv = r;
            for i in r + 1..a.rows {
                if a[(i, c)].abs() > a[(piv, c)].abs() {
                    piv = i;
                }
            }
            if a[(piv, c)].abs() <= tol {
                continue;
            }
            a.swap_rows(piv, r);
            let d = a[(r, c)];
            for j in 0..a.cols {
                a[(r, j)] /= d;
            }
            for i in 0..a.rows {
                if i == r {
                    continue;
                }
                let f = a[(i, c)];
                if f == F::zero() {
                    continue;
                }
                for j in 0..a.cols {
                    let v = a[(r, j)];
                    a[(i, j)] -= f * v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (pivots, a)
    }

    /// Numerical rank via row reduction.
    pub fn rank(&self) -> usize {
        self.rref().0.len()
    }

    /// Basis of the null space, returned as matrix columns.
    ///
    /// `self * basis = 0` entrywise; the column count equals
    /// `cols - rank`. Full-rank input yields a matrix with zero columns.
    pub fn kernel_basis(&self) -> Self {
        let (pivots, r) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Self::zeros(self.cols, free.len());
        for (bi, &fc) in free.iter().enumerate() {
            basis[(fc, bi)] = F::one();
            for (pi, &pc) in pivots.iter().enumerate() {
                basis[(pc, bi)] = -r[(pi, fc)];
            }
        }
        basis
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(i * self.cols + c, j * self.cols + c);
        }
    }
}

impl<F> std::ops::Index<(usize, usize)> for Matrix<F> {
    type Output = F;
    fn index(&self, (i, j): (usize, usize)) -> &F {
        &self.data[i * self.cols + j]
    }
}

impl<F> std::ops::IndexMut<(usize, usize)> for Matrix<F> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut F {
        &mut self.data[i * self.cols + j]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[f64]]) -> Matrix<f64> {
        Matrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn determinant_identity() {
        assert_eq!(Matrix::<f64>::identity(3).determinant().unwrap(), 1.0);
    }

    #[test]
    fn determinant_transposition_flips_sign() {
        // columns (e_2, e_1)
        let a = m(&[&[0.0, 1.0], &[1.0, 0.0]]);
        assert_eq!(a.determinant().unwrap(), -1.0);
    }

    #[test]
    fn determinant_shear() {
        // columns (1,0) and (1,1); cofactor expansion gives 1
        let a = m(&[&[1.0, 1.0], &[0.0, 1.0]]);
        assert_eq!(a.determinant().unwrap(), 1.0);
    }

    #[test]
    fn determinant_rejects_non_square() {
        let a = m(&[&[1.0, 2.0, 3.0]]);
        assert!(matches!(a.determinant(), Err(Error::Dimension(_))));
    }

    #[test]
    fn kernel_of_homogenized_square() {
        let a = m(&[
            &[1.0, 0.0, -1.0, 0.0],
            &[0.0, 1.0, 0.0, -1.0],
            &[1.0, 1.0, 1.0, 1.0],
        ]);
        let k = a.kernel_basis();
        assert_eq!(k.cols(), 1);
        let v = k.col(0);
        // spans (1, -1, 1, -1)
        let s = v[0];
        assert!(s.abs() > 1e-9);
        for (i, expect) in [1.0, -1.0, 1.0, -1.0].iter().enumerate() {
            assert!((v[i] / s - expect).abs() < 1e-12);
        }
        let prod = a.matmul(&k).unwrap();
        assert!(prod.max_abs() <= 1e-12);
    }

    #[test]
    fn kernel_trivial_and_full() {
        assert_eq!(Matrix::<f64>::identity(2).kernel_basis().cols(), 0);
        let z = Matrix::<f64>::zeros(1, 3);
        assert_eq!(z.kernel_basis().cols(), 3);
    }

    #[test]
    fn solve_roundtrip() {
        let a = m(&[&[2.0, 1.0], &[1.0, 3.0]]);
        let x = a.solve(&[5.0, 10.0]).unwrap();
        let b = a.matvec(&x).unwrap();
        assert!((b[0] - 5.0).abs() < 1e-12 && (b[1] - 10.0).abs() < 1e-12);
    }
}
