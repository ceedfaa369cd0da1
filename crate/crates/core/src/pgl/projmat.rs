use std::cmp::Ordering;
use std::fmt;

use super::Matrix;
use crate::error::{Error, Result};
use crate::fields::{square_class, Elem, Field};

/// An element of `PGL_n(K)`: an invertible matrix modulo nonzero scalars,
/// stored with its first nonzero entry (row-major) scaled to 1.
///
/// Two `ProjMat`s are equal exactly when they represent the same projective
/// class, so the type can be hashed and used as a set key directly.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ProjMat(Matrix);

impl ProjMat {
    pub fn new(m: Matrix) -> Result<Self> {
        if m.det().is_zero() {
            return Err(Error::SingularMatrix);
        }
        Ok(ProjMat(normalize(m)))
    }

    pub fn from_ints(field: &Field, rows: [[i64; 2]; 2]) -> Result<Self> {
        ProjMat::new(Matrix::from_ints(field, rows))
    }

    /// `z -> (a z + b) / (c z + d)`.
    pub fn homography(a: &Elem, b: &Elem, c: &Elem, d: &Elem) -> Result<Self> {
        let field = a.field();
        ProjMat::new(Matrix::new(field, 2, vec![a.clone(), b.clone(), c.clone(), d.clone()])?)
    }

    pub(crate) fn from_normalized(m: Matrix) -> Self {
        ProjMat(m)
    }

    pub fn identity(field: &Field, n: usize) -> Self {
        ProjMat(Matrix::identity(field, n))
    }

    pub fn matrix(&self) -> &Matrix {
        &self.0
    }

    pub fn field(&self) -> &Field {
        self.0.field()
    }

    pub fn dim(&self) -> usize {
        self.0.dim()
    }

    pub fn is_identity(&self) -> bool {
        self.0.scalar_value().is_some()
    }

    pub fn compose(&self, other: &ProjMat) -> Result<ProjMat> {
        Ok(ProjMat(normalize(self.0.mul(&other.0)?)))
    }

    pub fn inverse(&self) -> ProjMat {
        ProjMat(normalize(self.0.inverse().expect("projective elements are invertible")))
    }

    /// `g h g^-1` with `g = self`.
    pub fn conjugate(&self, h: &ProjMat) -> Result<ProjMat> {
        self.compose(h)?.compose(&self.inverse())
    }

    pub fn pow(&self, e: u64) -> ProjMat {
        let mut acc = ProjMat::identity(self.field(), self.dim());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&base).expect("same group");
            }
            base = base.compose(&base).expect("same group");
            e >>= 1;
        }
        acc
    }

    /// Least `n <= cap` with `self^n` trivial, by repeated multiplication.
    pub fn element_order(&self, cap: u64) -> Option<u64> {
        let mut acc = self.clone();
        for n in 1..=cap {
            if acc.is_identity() {
                return Some(n);
            }
            acc = acc.compose(self).expect("same group");
        }
        None
    }

    /// Class of the determinant in `K*/K*^2`; well defined for 2x2 matrices.
    pub fn det_bar(&self) -> Result<Elem> {
        if self.dim() != 2 {
            return Err(Error::DimensionError {
                expected: 2,
                got: self.dim(),
            });
        }
        square_class(&self.0.det())
    }
}

/// Whether two matrices differ by a nonzero scalar.
pub fn proj_eq(a: &Matrix, b: &Matrix) -> bool {
    if a.field() != b.field() || a.dim() != b.dim() || a.is_zero() || b.is_zero() {
        return false;
    }
    normalize(a.clone()) == normalize(b.clone())
}

fn normalize(m: Matrix) -> Matrix {
    let lead = m
        .entries()
        .iter()
        .find(|e| !e.is_zero())
        .expect("nonzero matrix")
        .clone();
    if lead.is_one() {
        m
    } else {
        m.scale(&lead.inv().expect("nonzero"))
    }
}

impl Ord for ProjMat {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.entries().cmp(other.0.entries())
    }
}

impl PartialOrd for ProjMat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ProjMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for ProjMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_operations() {
        let q = Field::rationals();
        let s = ProjMat::from_ints(&q, [[0, 1], [1, 0]]).unwrap();
        assert!(s.compose(&s).unwrap().is_identity());
        let u = ProjMat::from_ints(&q, [[1, 1], [0, 1]]).unwrap();
        assert_eq!(u.inverse(), ProjMat::from_ints(&q, [[1, -1], [0, 1]]).unwrap());
        let f7 = Field::prime(7).unwrap();
        assert_eq!(
            ProjMat::from_ints(&f7, [[2, 0], [0, 1]]).unwrap(),
            ProjMat::from_ints(&f7, [[1, 0], [0, 4]]).unwrap()
        );
        assert!(proj_eq(
            &Matrix::from_ints(&f7, [[2, 0], [0, 1]]),
            &Matrix::from_ints(&f7, [[1, 0], [0, 4]])
        ));
        assert_eq!(ProjMat::from_ints(&q, [[1, 2], [2, 4]]), Err(Error::SingularMatrix));
    }

    #[test]
    fn orders() {
        let q = Field::rationals();
        // M^3 = -I
        let m = ProjMat::from_ints(&q, [[0, -1], [1, 1]]).unwrap();
        assert_eq!(m.element_order(100), Some(3));
        assert_eq!(ProjMat::identity(&q, 2).element_order(1), Some(1));
        let u = ProjMat::from_ints(&q, [[1, 1], [0, 1]]).unwrap();
        assert_eq!(u.element_order(100), None);
        let f5 = Field::prime(5).unwrap();
        let u5 = ProjMat::from_ints(&f5, [[1, 1], [0, 1]]).unwrap();
        assert_eq!(u5.element_order(100), Some(5));
    }

    #[test]
    fn determinant_class() {
        let q = Field::rationals();
        let h2 = ProjMat::from_ints(&q, [[0, 3], [1, 0]]).unwrap();
        assert_eq!(h2.det_bar().unwrap(), q.int(-3));
        assert_eq!(ProjMat::identity(&q, 2).det_bar().unwrap(), q.one());
        assert!(matches!(
            ProjMat::identity(&q, 3).det_bar(),
            Err(Error::DimensionError { .. })
        ));
    }
}
