//! Exact rational linear algebra.
//!
//! Everything here works over `BigRational`, whose values are always kept in
//! lowest terms with a positive denominator, so structural equality of two
//! entries is numerical equality. Matrices in this crate are at most 9×9,
//! which keeps plain Gaussian elimination with first-nonzero pivoting cheap.

use std::fmt;

use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rational(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Converts an exact rational to `i64` when it is an integer in range.
pub fn to_integer(q: &Rational) -> Option<i64> {
    if q.is_integer() {
        q.to_integer().to_i64()
    } else {
        None
    }
}

/// Dense row-major matrix of exact rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RationalMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Rational>) -> Result<Self> {
        if rows == 0 || cols == 0 || data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: format!("{rows}x{cols} with positive dimensions"),
                found: format!("{} entries", data.len()),
            });
        }
        Ok(RationalMatrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        RationalMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn diagonal(entries: &[Rational]) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (i, d) in entries.iter().enumerate() {
            m[(i, i)] = d.clone();
        }
        m
    }

    /// Builds a matrix from integer rows. All rows must have the same length.
    pub fn from_integer_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: format!("rows of length {cols}"),
                    found: format!("row of length {}", r.len()),
                });
            }
            data.extend(r.iter().map(|&x| rational(x)));
        }
        Self::new(rows.len(), cols, data)
    }

    /// Builds a matrix whose columns are the given integer vectors.
    pub fn from_integer_columns<C: AsRef<[i64]>>(columns: &[C]) -> Result<Self> {
        Ok(Self::from_integer_rows(columns)?.transpose())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &RationalMatrix) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: format!("left operand with {} columns", other.rows),
                found: format!("{} columns", self.cols),
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * &other[(k, j)];
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: format!("vector of length {}", self.cols),
                found: format!("length {}", v.len()),
            });
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    /// Entries as integers, if every entry is integral and fits in `i64`.
    pub fn to_integer_rows(&self) -> Option<Vec<Vec<i64>>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(to_integer).collect())
            .collect()
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.row_reduce()
    }

    pub fn determinant(&self) -> Result<Rational> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch {
                expected: "square matrix".into(),
                found: format!("{}x{}", self.rows, self.cols),
            });
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut det = Rational::one();
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| !a[(r, col)].is_zero()) else {
                return Ok(Rational::zero());
            };
            if pivot != col {
                a.swap_rows(pivot, col);
                det = -det;
            }
            let p = a[(col, col)].clone();
            det *= &p;
            for r in col + 1..n {
                if a[(r, col)].is_zero() {
                    continue;
                }
                let factor = &a[(r, col)] / &p;
                for c in col..n {
                    let sub = &factor * &a[(col, c)];
                    a[(r, c)] -= sub;
                }
            }
        }
        Ok(det)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Reduces in place to reduced row echelon form; returns the rank.
    fn row_reduce(&mut self) -> usize {
        let mut pivot_row = 0;
        for col in 0..self.cols {
            if pivot_row == self.rows {
                break;
            }
            let Some(found) = (pivot_row..self.rows).find(|&r| !self[(r, col)].is_zero()) else {
                continue;
            };
            self.swap_rows(found, pivot_row);
            let p = self[(pivot_row, col)].clone();
            for j in col..self.cols {
                self[(pivot_row, j)] /= &p;
            }
            for r in 0..self.rows {
                if r == pivot_row || self[(r, col)].is_zero() {
                    continue;
                }
                let factor = self[(r, col)].clone();
                for j in col..self.cols {
                    let sub = &factor * &self[(pivot_row, j)];
                    self[(r, j)] -= sub;
                }
            }
            pivot_row += 1;
        }
        pivot_row
    }
}

impl std::ops::Index<(usize, usize)> for RationalMatrix {
    type Output = Rational;

    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RationalMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RationalMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|q| q.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Solves `a · x = b` for square nonsingular `a`.
pub fn solve_linear(a: &RationalMatrix, b: &[Rational]) -> Result<Vec<Rational>> {
    if !a.is_square() || b.len() != a.rows() {
        return Err(Error::DimensionMismatch {
            expected: format!("square system with right-hand side of length {}", a.rows()),
            found: format!("{}x{} with length {}", a.rows(), a.cols(), b.len()),
        });
    }
    let n = a.rows();
    let mut aug = RationalMatrix::zeros(n, n + 1);
    for i in 0..n {
        for j in 0..n {
            aug[(i, j)] = a[(i, j)].clone();
        }
        aug[(i, n)] = b[i].clone();
    }
    if aug.row_reduce() < n || (0..n).any(|i| aug[(i, i)].is_zero()) {
        return Err(Error::SingularMatrix);
    }
    Ok((0..n).map(|i| aug[(i, n)].clone()).collect())
}

pub fn inverse(a: &RationalMatrix) -> Result<RationalMatrix> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch {
            expected: "square matrix".into(),
            found: format!("{}x{}", a.rows(), a.cols()),
        });
    }
    let n = a.rows();
    let mut aug = RationalMatrix::zeros(n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            aug[(i, j)] = a[(i, j)].clone();
        }
        aug[(i, n + i)] = Rational::one();
    }
    aug.row_reduce();
    if (0..n).any(|i| !aug[(i, i)].is_one()) {
        return Err(Error::SingularMatrix);
    }
    let mut inv = RationalMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            inv[(i, j)] = aug[(i, n + j)].clone();
        }
    }
    Ok(inv)
}

/// Orthogonal projection onto the row space of `v`, written in the
/// coordinates indexed by the columns of `v`: `Vᵗ (V Vᵗ)⁻¹ V`.
///
/// When the columns of `v` are a vector configuration, the entries of the
/// result are invariant under every linear map permuting the configuration.
pub fn projection_matrix(v: &RationalMatrix) -> Result<RationalMatrix> {
    let vt = v.transpose();
    let gram = v.mul(&vt)?;
    let gram_inv = inverse(&gram).map_err(|e| match e {
        Error::SingularMatrix => Error::RankDeficient,
        other => other,
    })?;
    vt.mul(&gram_inv)?.mul(v)
}

/// True iff the integer matrix has determinant ±1.
pub fn is_unimodular<const N: usize>(m: &[[i64; N]; N]) -> bool {
    if N == 0 {
        return false;
    }
    let Ok(a) = RationalMatrix::from_integer_rows(m) else {
        return false;
    };
    a.determinant().is_ok_and(|d| d.abs().is_one())
}
