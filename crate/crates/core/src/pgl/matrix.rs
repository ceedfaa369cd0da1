use std::fmt;

use crate::error::{Error, Result};
use crate::fields::{Elem, Field};

/// A square matrix over a [`Field`], row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    n: usize,
    data: Vec<Elem>,
}

impl Matrix {
    pub fn new(field: &Field, n: usize, data: Vec<Elem>) -> Result<Self> {
        if data.len() != n * n {
            return Err(Error::DimensionError {
                expected: n,
                got: (data.len() as f64).sqrt() as usize,
            });
        }
        for e in &data {
            if e.field() != field {
                return Err(Error::FieldMismatch(field.to_string(), e.field().to_string()));
            }
        }
        Ok(Matrix {
            field: field.clone(),
            n,
            data,
        })
    }

    /// 2x2 matrix from integer entries `[[a, b], [c, d]]`.
    pub fn from_ints(field: &Field, rows: [[i64; 2]; 2]) -> Self {
        let data = rows.iter().flatten().map(|&x| field.int(x)).collect();
        Matrix {
            field: field.clone(),
            n: 2,
            data,
        }
    }

    pub fn from_rows(field: &Field, rows: Vec<Vec<Elem>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionError {
                expected: n,
                got: rows.iter().map(Vec::len).max().unwrap_or(0),
            });
        }
        Matrix::new(field, n, rows.into_iter().flatten().collect())
    }

    pub fn identity(field: &Field, n: usize) -> Self {
        Matrix::diagonal(field, vec![field.one(); n])
    }

    pub fn diagonal(field: &Field, diag: Vec<Elem>) -> Self {
        let n = diag.len();
        let mut data = vec![field.zero(); n * n];
        for (i, d) in diag.into_iter().enumerate() {
            data[i * n + i] = d;
        }
        Matrix {
            field: field.clone(),
            n,
            data,
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[Elem] {
        &self.data
    }

    pub fn get(&self, row: usize, col: usize) -> &Elem {
        &self.data[row * self.n + col]
    }

    pub fn rows(&self) -> Vec<Vec<Elem>> {
        self.data.chunks(self.n).map(<[Elem]>::to_vec).collect()
    }

    fn compatible(&self, other: &Matrix) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field.to_string(), other.field.to_string()));
        }
        if self.n != other.n {
            return Err(Error::DimensionError {
                expected: self.n,
                got: other.n,
            });
        }
        Ok(())
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        self.compatible(other)?;
        let n = self.n;
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = self.field.zero();
                for k in 0..n {
                    let a = &self.data[i * n + k];
                    let b = &other.data[k * n + j];
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                data.push(acc);
            }
        }
        Ok(Matrix {
            field: self.field.clone(),
            n,
            data,
        })
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.compatible(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Ok(Matrix {
            field: self.field.clone(),
            n: self.n,
            data,
        })
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.compatible(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Ok(Matrix {
            field: self.field.clone(),
            n: self.n,
            data,
        })
    }

    pub fn scale(&self, c: &Elem) -> Matrix {
        Matrix {
            field: self.field.clone(),
            n: self.n,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn pow(&self, e: u64) -> Matrix {
        let mut acc = Matrix::identity(&self.field, self.n);
        for _ in 0..e {
            acc = acc.mul(self).expect("same shape");
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Elem::is_zero)
    }

    /// `Some(c)` when the matrix equals `c * I`.
    pub fn scalar_value(&self) -> Option<Elem> {
        let n = self.n;
        let c = self.data[0].clone();
        for i in 0..n {
            for j in 0..n {
                let e = &self.data[i * n + j];
                if (i == j && e != &c) || (i != j && !e.is_zero()) {
                    return None;
                }
            }
        }
        Some(c)
    }

    /// Determinant by Gaussian elimination.
    pub fn det(&self) -> Elem {
        let n = self.n;
        if n == 2 {
            return &(&self.data[0] * &self.data[3]) - &(&self.data[1] * &self.data[2]);
        }
        let mut m = self.rows();
        let mut det = self.field.one();
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
                return self.field.zero();
            };
            if pivot != col {
                m.swap(pivot, col);
                det = -det;
            }
            let pv = m[col][col].clone();
            det = &det * &pv;
            let inv = pv.inv().expect("nonzero pivot");
            for r in col + 1..n {
                if m[r][col].is_zero() {
                    continue;
                }
                let factor = &m[r][col] * &inv;
                let (top, bottom) = m.split_at_mut(r);
                for (x, p) in bottom[0][col..].iter_mut().zip(&top[col][col..]) {
                    *x = &*x - &(&factor * p);
                }
            }
        }
        det
    }

    /// Inverse by Gauss-Jordan elimination (adjugate for 2x2).
    pub fn inverse(&self) -> Result<Matrix> {
        let n = self.n;
        let det = self.det();
        if det.is_zero() {
            return Err(Error::SingularMatrix);
        }
        if n == 2 {
            let inv = det.inv()?;
            let d = &self.data;
            let data = vec![&d[3] * &inv, -(&d[1] * &inv), -(&d[2] * &inv), &d[0] * &inv];
            return Ok(Matrix {
                field: self.field.clone(),
                n,
                data,
            });
        }
        let mut a = self.rows();
        let mut b = Matrix::identity(&self.field, n).rows();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[r][col].is_zero()).ok_or(Error::SingularMatrix)?;
            a.swap(pivot, col);
            b.swap(pivot, col);
            let inv = a[col][col].inv()?;
            for c in 0..n {
                a[col][c] = &a[col][c] * &inv;
                b[col][c] = &b[col][c] * &inv;
            }
            for r in 0..n {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let factor = a[r][col].clone();
                for c in 0..n {
                    a[r][c] = &a[r][c] - &(&factor * &a[col][c]);
                    b[r][c] = &b[r][c] - &(&factor * &b[col][c]);
                }
            }
        }
        Matrix::from_rows(&self.field, b)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.data.chunks(self.n).enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            let cells: Vec<String> = row.iter().map(|e| format!("{e}")).collect();
            write!(f, "[{}]", cells.join(","))?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
