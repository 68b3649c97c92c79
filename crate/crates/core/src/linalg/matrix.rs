use crate::error::{Error, Result};

use super::{SINGULARITY_TOLERANCE, TOLERANCE};

/// Largest order accepted by the cofactor-expansion determinant.
pub const COFACTOR_BOUND: usize = 8;

/// Rectangular matrix stored row by row.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Matrix {
    rows: Vec<Vec<f64>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatrixPredicate {
    Symmetric,
    SkewSymmetric,
    Orthogonal,
    Involutory,
    ZeroOne,
    Zero,
    One,
    Unit,
    Row,
    Column,
    Square,
    Invertible,
}

fn close(a: f64, b: f64) -> bool {
    (a - b).abs() <= TOLERANCE
}

impl Matrix {
    pub fn new(rows: Vec<Vec<f64>>) -> Result<Self> {
        if let Some(first) = rows.first() {
            if let Some(bad) = rows.iter().find(|r| r.len() != first.len()) {
                return Err(Error::Dimension(format!("ragged matrix rows of length {} and {}", first.len(), bad.len())));
            }
        }
        Ok(Matrix { rows })
    }

    fn filled(n: usize, m: usize, x: f64) -> Result<Self> {
        if n == 0 || m == 0 {
            return Err(Error::Invalid(format!("matrix dimensions must be positive, got {n}x{m}")));
        }
        Ok(Matrix { rows: vec![vec![x; m]; n] })
    }

    /// Identity of order `n`.
    pub fn unit(n: usize) -> Result<Self> {
        let mut a = Matrix::filled(n, n, 0.0)?;
        for i in 0..n {
            a.rows[i][i] = 1.0;
        }
        Ok(a)
    }

    pub fn zero(n: usize, m: usize) -> Result<Self> {
        Matrix::filled(n, m, 0.0)
    }

    pub fn one(n: usize, m: usize) -> Result<Self> {
        Matrix::filled(n, m, 1.0)
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_cols(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    pub fn rows(&self) -> &[Vec<f64>] {
        &self.rows
    }

    pub fn to_lists(&self) -> Vec<Vec<f64>> {
        self.rows.clone()
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.rows[i][j]
    }

    pub fn is_square(&self) -> bool {
        self.num_rows() == self.num_cols()
    }

    fn require_square(&self) -> Result<usize> {
        if !self.is_square() {
            return Err(Error::NotSquare);
        }
        Ok(self.num_rows())
    }

    fn same_shape(&self, other: &Matrix, op: &str) -> Result<()> {
        if (self.num_rows(), self.num_cols()) != (other.num_rows(), other.num_cols()) {
            return Err(Error::Dimension(format!(
                "{op} of {}x{} and {}x{} matrices",
                self.num_rows(),
                self.num_cols(),
                other.num_rows(),
                other.num_cols()
            )));
        }
        Ok(())
    }

    fn zip_with(&self, other: &Matrix, op: &str, f: impl Fn(f64, f64) -> f64) -> Result<Matrix> {
        self.same_shape(other, op)?;
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(r, s)| r.iter().zip(s).map(|(a, b)| f(*a, *b)).collect())
            .collect();
        Ok(Matrix { rows })
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.zip_with(other, "addition", |a, b| a + b)
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.zip_with(other, "subtraction", |a, b| a - b)
    }

    pub fn scale(&self, k: f64) -> Matrix {
        self.map(|x| k * x)
    }

    pub fn map(&self, mut f: impl FnMut(f64) -> f64) -> Matrix {
        Matrix { rows: self.rows.iter().map(|r| r.iter().map(|&x| f(x)).collect()).collect() }
    }

    pub fn transpose(&self) -> Matrix {
        let rows = (0..self.num_cols()).map(|j| self.rows.iter().map(|r| r[j]).collect()).collect();
        Matrix { rows }
    }

    /// Each entry is the dot product of a row of `self` with a column of `other`.
    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.num_cols() != other.num_rows() {
            return Err(Error::Dimension(format!(
                "product of {}x{} and {}x{} matrices",
                self.num_rows(),
                self.num_cols(),
                other.num_rows(),
                other.num_cols()
            )));
        }
        let cols = other.transpose();
        let rows = self
            .rows
            .iter()
            .map(|r| cols.rows.iter().map(|c| r.iter().zip(c).map(|(a, b)| a * b).sum()).collect())
            .collect();
        Ok(Matrix { rows })
    }

    pub fn power(&self, k: u32) -> Result<Matrix> {
        self.require_square()?;
        if k == 0 {
            return Err(Error::Invalid("matrix power needs k >= 1".into()));
        }
        (1..k).try_fold(self.clone(), |acc, _| acc.mul(self))
    }

    /// `self · other⁻¹`.
    pub fn div(&self, other: &Matrix) -> Result<Matrix> {
        self.mul(&other.inverse()?)
    }

    pub fn trace(&self) -> Result<f64> {
        let n = self.require_square()?;
        Ok((0..n).map(|i| self.rows[i][i]).sum())
    }

    fn minor(&self, row: usize, col: usize) -> Matrix {
        let rows = self
            .rows
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != row)
            .map(|(_, r)| r.iter().enumerate().filter(|&(j, _)| j != col).map(|(_, &x)| x).collect())
            .collect();
        Matrix { rows }
    }

    fn cofactor_det(&self) -> f64 {
        match self.num_rows() {
            0 => 1.0,
            1 => self.rows[0][0],
            2 => self.rows[0][0] * self.rows[1][1] - self.rows[0][1] * self.rows[1][0],
            _ => self.rows[0]
                .iter()
                .enumerate()
                .filter(|(_, &a)| a != 0.0)
                .map(|(j, &a)| {
                    let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
                    sign * a * self.minor(0, j).cofactor_det()
                })
                .sum(),
        }
    }

    /// Laplace expansion along the first row.
    pub fn determinant(&self) -> Result<f64> {
        let n = self.require_square()?;
        if n > COFACTOR_BOUND {
            return Err(Error::BoundExceeded { what: "cofactor determinant order", bound: COFACTOR_BOUND });
        }
        Ok(self.cofactor_det())
    }

    /// Adjugate divided by the determinant.
    pub fn inverse(&self) -> Result<Matrix> {
        let n = self.require_square()?;
        let det = self.determinant()?;
        if det.abs() <= SINGULARITY_TOLERANCE {
            return Err(Error::Singular);
        }
        if n == 1 {
            return Ok(Matrix { rows: vec![vec![1.0 / det]] });
        }
        let recip = 1.0 / det;
        // entry (i, j) of the inverse is cofactor (j, i) over det
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let sign = if (i + j) % 2 == 0 { 1.0 } else { -1.0 };
                        sign * self.minor(j, i).cofactor_det() * recip
                    })
                    .collect()
            })
            .collect();
        Ok(Matrix { rows })
    }

    pub fn extract_row(&self, i: usize) -> Result<Vec<f64>> {
        self.rows.get(i).cloned().ok_or(Error::IndexOutOfRange { index: i, len: self.num_rows() })
    }

    pub fn extract_col(&self, j: usize) -> Result<Vec<f64>> {
        if j >= self.num_cols() {
            return Err(Error::IndexOutOfRange { index: j, len: self.num_cols() });
        }
        Ok(self.rows.iter().map(|r| r[j]).collect())
    }

    fn check_range(i: usize, j: usize, len: usize) -> Result<()> {
        if j >= len {
            return Err(Error::IndexOutOfRange { index: j, len });
        }
        if i > j {
            return Err(Error::Invalid(format!("empty range {i}..={j}")));
        }
        Ok(())
    }

    /// Rows `i..=j`, 0-based.
    pub fn extract_row_range(&self, i: usize, j: usize) -> Result<Matrix> {
        Matrix::check_range(i, j, self.num_rows())?;
        Ok(Matrix { rows: self.rows[i..=j].to_vec() })
    }

    /// Columns `i..=j`, 0-based.
    pub fn extract_col_range(&self, i: usize, j: usize) -> Result<Matrix> {
        Matrix::check_range(i, j, self.num_cols())?;
        Ok(Matrix { rows: self.rows.iter().map(|r| r[i..=j].to_vec()).collect() })
    }

    pub fn approx_eq(&self, other: &Matrix) -> bool {
        self.same_shape(other, "comparison").is_ok()
            && self.rows.iter().zip(&other.rows).all(|(r, s)| r.iter().zip(s).all(|(a, b)| close(*a, *b)))
    }

    fn all(&self, f: impl Fn(f64) -> bool) -> bool {
        self.rows.iter().flatten().all(|&x| f(x))
    }

    pub fn is(&self, kind: MatrixPredicate) -> bool {
        use MatrixPredicate::*;
        let square = self.is_square() && self.num_rows() > 0;
        match kind {
            Square => square,
            Row => self.num_rows() == 1,
            Column => self.num_rows() > 0 && self.num_cols() == 1,
            Zero => self.all(|x| x == 0.0),
            One => self.all(|x| x == 1.0),
            ZeroOne => self.all(|x| x == 0.0 || x == 1.0),
            Symmetric => square && self.approx_eq(&self.transpose()),
            SkewSymmetric => square && self.approx_eq(&self.transpose().scale(-1.0)),
            Unit => square && Matrix::unit(self.num_rows()).is_ok_and(|i| self.approx_eq(&i)),
            Invertible => square && self.determinant().is_ok_and(|d| d.abs() > SINGULARITY_TOLERANCE),
            Orthogonal => square && self.inverse().is_ok_and(|inv| self.transpose().approx_eq(&inv)),
            Involutory => {
                square
                    && self
                        .mul(self)
                        .is_ok_and(|sq| Matrix::unit(self.num_rows()).is_ok_and(|i| sq.approx_eq(&i)))
            }
        }
    }
}

pub fn add_many(ms: &[Matrix]) -> Result<Matrix> {
    fold(ms, Matrix::add)
}

pub fn sub_many(ms: &[Matrix]) -> Result<Matrix> {
    fold(ms, Matrix::sub)
}

pub fn mul_many(ms: &[Matrix]) -> Result<Matrix> {
    fold(ms, Matrix::mul)
}

fn fold(ms: &[Matrix], f: impl Fn(&Matrix, &Matrix) -> Result<Matrix>) -> Result<Matrix> {
    let (first, rest) = ms.split_first().ok_or(Error::EmptyFold)?;
    rest.iter().try_fold(first.clone(), |acc, m| f(&acc, m))
}
