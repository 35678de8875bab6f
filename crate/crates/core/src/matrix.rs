//! Dense rational matrices and the Kronecker/Frobenius primitives.

use std::fmt;
use std::ops::Index;

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{DomainError, Result};
use crate::rational::{self, Rational};

/// A dense, row-major `rows x cols` matrix of exact rationals. Never empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

/// Reduced row/column ratio `mu_y / mu_x` of a matrix shape.
///
/// A matrix with `rows = k * mu_y` and `cols = k * mu_x` lies in component `k`
/// of the family sharing this ratio.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ShapeRatio {
    mu_y: usize,
    mu_x: usize,
}

impl ShapeRatio {
    pub fn new(mu_y: usize, mu_x: usize) -> Result<Self> {
        if mu_y == 0 || mu_x == 0 {
            return Err(DomainError::NonPositive { op: "shape_ratio", name: "ratio term" });
        }
        let g = mu_y.gcd(&mu_x);
        Ok(ShapeRatio { mu_y: mu_y / g, mu_x: mu_x / g })
    }

    /// Splits a shape into its ratio and component index.
    pub fn of_shape(rows: usize, cols: usize) -> (ShapeRatio, usize) {
        let k = rows.gcd(&cols);
        (ShapeRatio { mu_y: rows / k, mu_x: cols / k }, k)
    }

    pub fn mu_y(&self) -> usize {
        self.mu_y
    }

    pub fn mu_x(&self) -> usize {
        self.mu_x
    }

    pub fn reciprocal(&self) -> ShapeRatio {
        ShapeRatio { mu_y: self.mu_x, mu_x: self.mu_y }
    }

    /// Shape of component `k`.
    pub fn shape(&self, k: usize) -> (usize, usize) {
        (k * self.mu_y, k * self.mu_x)
    }
}

impl fmt::Display for ShapeRatio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.mu_y, self.mu_x)
    }
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Rational>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(DomainError::EmptyMatrix { op: "matrix", rows, cols });
        }
        if data.len() != rows * cols {
            return Err(DomainError::EntryCount { op: "matrix", rows, cols, len: data.len() });
        }
        Ok(Matrix { rows, cols, data })
    }

    /// Builds a matrix from nested rows; all rows must share one length.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let m = rows.len();
        let n = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(DomainError::EntryCount { op: "matrix", rows: m, cols: n, len: bad.len() });
        }
        Matrix::new(m, n, rows.into_iter().flatten().collect())
    }

    /// Integer matrix literal, mainly for tests and examples.
    ///
    /// Panics on ragged or empty input.
    pub fn from_ints<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let rows = rows
            .iter()
            .map(|r| r.as_ref().iter().map(|&v| rational::int(v)).collect())
            .collect();
        Matrix::from_rows(rows).expect("integer literal must be rectangular and non-empty")
    }

    pub fn zeros(rows: usize, cols: usize) -> Result<Self> {
        Matrix::new(rows, cols, vec![Rational::zero(); rows * cols])
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Result<Self> {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix::new(rows, cols, data)
    }

    /// `k x k` identity; `k = 0` is a domain error.
    pub fn identity(k: usize) -> Result<Self> {
        if k == 0 {
            return Err(DomainError::NonPositive { op: "identity", name: "size" });
        }
        Matrix::from_fn(k, k, |i, j| if i == j { Rational::one() } else { Rational::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn shape_ratio(&self) -> ShapeRatio {
        ShapeRatio::of_shape(self.rows, self.cols).0
    }

    pub fn entries(&self) -> &[Rational] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[Rational]> {
        self.data.chunks(self.cols)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    fn mismatch(&self, other: &Matrix, op: &'static str) -> DomainError {
        DomainError::DimensionMismatch {
            op,
            left_rows: self.rows,
            left_cols: self.cols,
            right_rows: other.rows,
            right_cols: other.cols,
        }
    }

    fn zip_with(&self, other: &Matrix, op: &'static str, f: impl Fn(&Rational, &Rational) -> Rational) -> Result<Matrix> {
        if self.shape() != other.shape() {
            return Err(self.mismatch(other, op));
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect();
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.zip_with(other, "add", |a, b| a + b)
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.zip_with(other, "sub", |a, b| a - b)
    }

    pub fn scale(&self, r: &Rational) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * r).collect(),
        }
    }

    pub fn neg(&self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| -a).collect(),
        }
    }

    /// Conventional product; requires `cols(self) == rows(other)`.
    pub fn matmul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(self.mismatch(other, "matmul"));
        }
        let (m, n, q) = (self.rows, self.cols, other.cols);
        let mut data = vec![Rational::zero(); m * q];
        for i in 0..m {
            for l in 0..n {
                let a = &self.data[i * n + l];
                if a.is_zero() {
                    continue;
                }
                for j in 0..q {
                    let b = &other.data[l * q + j];
                    if !b.is_zero() {
                        data[i * q + j] += a * b;
                    }
                }
            }
        }
        Ok(Matrix { rows: m, cols: q, data })
    }

    pub fn transpose(&self) -> Matrix {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self[(i, j)].clone());
            }
        }
        Matrix { rows: self.cols, cols: self.rows, data }
    }

    pub fn trace(&self) -> Result<Rational> {
        if !self.is_square() {
            return Err(DomainError::NotSquare { op: "trace", rows: self.rows, cols: self.cols });
        }
        Ok((0..self.rows).map(|i| &self[(i, i)]).sum())
    }

    /// The `k x k` submatrix at block position `(i, j)` (zero-based).
    pub fn block(&self, i: usize, j: usize, k: usize) -> Result<Matrix> {
        let misaligned = DomainError::BlockMisaligned {
            op: "block",
            rows: self.rows,
            cols: self.cols,
            i,
            j,
            k,
        };
        if k == 0 || !self.rows.is_multiple_of(k) || !self.cols.is_multiple_of(k) || i >= self.rows / k || j >= self.cols / k {
            return Err(misaligned);
        }
        Matrix::from_fn(k, k, |r, s| self[(i * k + r, j * k + s)].clone())
    }

    /// Trace of the `k x k` block at `(i, j)` without copying it out.
    /// Callers guarantee alignment.
    pub(crate) fn block_trace(&self, i: usize, j: usize, k: usize) -> Rational {
        (0..k).map(|d| &self[(i * k + d, j * k + d)]).sum()
    }

    /// `self ⊗ I_k`.
    pub fn lift(&self, k: usize) -> Matrix {
        assert!(k >= 1, "lift factor must be positive");
        if k == 1 {
            return self.clone();
        }
        let (m, n) = (self.rows * k, self.cols * k);
        let mut data = vec![Rational::zero(); m * n];
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                for d in 0..k {
                    data[(i * k + d) * n + j * k + d] = a.clone();
                }
            }
        }
        Matrix { rows: m, cols: n, data }
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Rational;

    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds for {}x{}", self.rows, self.cols);
        &self.data[i * self.cols + j]
    }
}

/// Rows on separate lines, entries separated by single spaces. This is
/// exactly the text grammar the parser accepts.
impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.row_iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            for (j, v) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

/// Kronecker product: entry `(i*p + r, j*q + s)` is `a[i,j] * b[r,s]`.
pub fn kron(a: &Matrix, b: &Matrix) -> Matrix {
    let (p, q) = b.shape();
    let cols = a.cols * q;
    let mut data = vec![Rational::zero(); a.rows * p * cols];
    for i in 0..a.rows {
        for j in 0..a.cols {
            let x = &a[(i, j)];
            if x.is_zero() {
                continue;
            }
            for r in 0..p {
                for s in 0..q {
                    data[(i * p + r) * cols + j * q + s] = x * &b[(r, s)];
                }
            }
        }
    }
    Matrix { rows: a.rows * p, cols, data }
}

pub fn identity(k: usize) -> Result<Matrix> {
    Matrix::identity(k)
}

/// Sum of entrywise products of two same-shape matrices.
pub fn frobenius_inner(a: &Matrix, b: &Matrix) -> Result<Rational> {
    if a.shape() != b.shape() {
        return Err(a.mismatch(b, "frobenius_inner"));
    }
    Ok(a.data.iter().zip(&b.data).map(|(x, y)| x * y).sum())
}

pub fn frobenius_norm_sq(a: &Matrix) -> Rational {
    a.data.iter().map(|x| x * x).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_ints(rows)
    }

    #[test]
    fn kron_examples() {
        let b = m(&[&[1, 2], &[3, 4]]);
        assert_eq!(kron(&m(&[&[1]]), &b), b);
        assert_eq!(
            kron(&m(&[&[1, 2]]), &identity(2).unwrap()),
            m(&[&[1, 0, 2, 0], &[0, 1, 0, 2]])
        );
        assert_eq!(kron(&b, &identity(1).unwrap()), b);
        assert_eq!(kron(&b, &identity(3).unwrap()), b.lift(3));
    }

    #[test]
    fn identity_examples() {
        assert_eq!(identity(1).unwrap(), m(&[&[1]]));
        assert_eq!(identity(2).unwrap(), m(&[&[1, 0], &[0, 1]]));
        assert_eq!(kron(&identity(2).unwrap(), &identity(3).unwrap()), identity(6).unwrap());
        assert!(matches!(identity(0), Err(DomainError::NonPositive { .. })));
    }

    #[test]
    fn frobenius_examples() {
        let a = m(&[&[1, 2], &[3, 4]]);
        assert_eq!(frobenius_inner(&a, &identity(2).unwrap()).unwrap(), int(5));
        assert_eq!(frobenius_inner(&a, &Matrix::zeros(2, 2).unwrap()).unwrap(), int(0));
        assert_eq!(frobenius_norm_sq(&a), int(30));
        assert_eq!(frobenius_norm_sq(&identity(3).unwrap()), int(3));
        assert_eq!(frobenius_norm_sq(&Matrix::zeros(2, 5).unwrap()), int(0));
        assert!(matches!(
            frobenius_inner(&a, &m(&[&[1, 2]])),
            Err(DomainError::DimensionMismatch { left_rows: 2, right_rows: 1, .. })
        ));
    }

    #[test]
    fn frobenius_scales_under_lift() {
        let a = m(&[&[1, -2, 0], &[3, 5, 7]]);
        let b = m(&[&[2, 2, 1], &[-1, 0, 4]]);
        let base = frobenius_inner(&a, &b).unwrap();
        let i3 = identity(3).unwrap();
        assert_eq!(frobenius_inner(&kron(&a, &i3), &kron(&b, &i3)).unwrap(), int(3) * base);
    }

    #[test]
    fn trace_transpose_block() {
        assert_eq!(identity(4).unwrap().trace().unwrap(), int(4));
        assert!(matches!(m(&[&[1, 2]]).trace(), Err(DomainError::NotSquare { .. })));

        let a = m(&[&[1, 2, 3], &[4, 5, 6]]);
        assert_eq!(a.transpose().transpose(), a);
        assert_eq!(a.transpose(), m(&[&[1, 4], &[2, 5], &[3, 6]]));

        let c = m(&[&[2, -1], &[0, 5]]);
        let lifted = kron(&c, &identity(3).unwrap());
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(lifted.block(i, j, 3).unwrap(), identity(3).unwrap().scale(&c[(i, j)]));
            }
        }
        assert!(matches!(lifted.block(2, 0, 3), Err(DomainError::BlockMisaligned { .. })));
        assert!(matches!(a.block(0, 0, 2), Err(DomainError::BlockMisaligned { .. })));
    }

    #[test]
    fn elementwise_and_matmul() {
        let a = m(&[&[1, 2], &[3, 4]]);
        let b = m(&[&[0, 1], &[1, 0]]);
        assert_eq!(a.add(&b).unwrap(), m(&[&[1, 3], &[4, 4]]));
        assert_eq!(a.sub(&a).unwrap(), Matrix::zeros(2, 2).unwrap());
        assert_eq!(a.scale(&frac(1, 2))[(1, 1)], int(2));
        assert_eq!(a.matmul(&b).unwrap(), m(&[&[2, 1], &[4, 3]]));
        assert!(a.add(&m(&[&[1]])).is_err());
        assert!(m(&[&[1, 2]]).matmul(&m(&[&[1, 2]])).is_err());
    }

    #[test]
    fn construction_rejects_empty() {
        assert!(matches!(Matrix::zeros(0, 3), Err(DomainError::EmptyMatrix { .. })));
        assert!(matches!(Matrix::from_rows(vec![]), Err(DomainError::EmptyMatrix { .. })));
        assert!(Matrix::from_rows(vec![vec![int(1)], vec![int(1), int(2)]]).is_err());
        assert!(Matrix::new(2, 2, vec![int(1)]).is_err());
    }

    #[test]
    fn shape_ratio_reduces() {
        let (mu, k) = ShapeRatio::of_shape(4, 6);
        assert_eq!((mu.mu_y(), mu.mu_x(), k), (2, 3, 2));
        assert_eq!(ShapeRatio::new(6, 4).unwrap(), mu.reciprocal());
        assert_eq!(mu.to_string(), "2/3");
        assert_eq!(mu.shape(5), (10, 15));
    }
}
