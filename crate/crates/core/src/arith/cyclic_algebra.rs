use crate::error::{Error, Result};
use crate::fields::{divisors, primitive_root_of_unity, Elem, Field};

/// The cyclic algebra `A = K<x, y>` with `x^r = alpha`, `y^r = beta`,
/// `y x = zeta x y`, stored by structure constants on the basis `x^i y^j`.
///
/// Basis element `x^i y^j` has index `i * r + j`. The product of two basis
/// elements is a scalar multiple of a single basis element, so the table
/// holds one `(coefficient, index)` pair per ordered pair of basis indices.
#[derive(Debug, Clone)]
pub struct CyclicAlgebra {
    pub field: Field,
    pub r: u64,
    pub alpha: Elem,
    pub beta: Elem,
    pub zeta: Elem,
    table: Vec<(Elem, usize)>,
}

/// Largest `r` for which associativity is checked on all basis triples.
const ASSOCIATIVITY_CHECK_MAX_R: u64 = 5;

impl CyclicAlgebra {
    /// Builds `A_{alpha,beta}` with `zeta` the first primitive `r`-th root of
    /// unity in canonical order.
    pub fn new(field: &Field, r: u64, alpha: &Elem, beta: &Elem) -> Result<Self> {
        if r == 0 {
            return Err(Error::InvalidGroup("C0".into()));
        }
        let zeta = primitive_root_of_unity(field, r).ok_or_else(|| Error::MissingRootsOfUnity {
            field: field.to_string(),
            r,
        })?;
        CyclicAlgebra::with_zeta(field, r, alpha, beta, &zeta)
    }

    /// As [`CyclicAlgebra::new`] with a caller-chosen primitive root.
    pub fn with_zeta(field: &Field, r: u64, alpha: &Elem, beta: &Elem, zeta: &Elem) -> Result<Self> {
        for e in [alpha, beta, zeta] {
            if e.field() != field {
                return Err(Error::FieldMismatch(field.to_string(), e.field().to_string()));
            }
        }
        if alpha.is_zero() || beta.is_zero() {
            return Err(Error::ZeroInput);
        }
        let primitive = zeta.pow(r).is_one()
            && divisors(r)
                .into_iter()
                .filter(|&d| d < r)
                .all(|d| !zeta.pow(d).is_one());
        if !primitive {
            return Err(Error::MissingRootsOfUnity {
                field: field.to_string(),
                r,
            });
        }
        let n = r as usize;
        let zeta_pow: Vec<Elem> = (0..n).map(|e| zeta.pow(e as u64)).collect();
        let mut table = Vec::with_capacity(n.pow(4));
        for a in 0..n * n {
            let (i, j) = (a / n, a % n);
            for b in 0..n * n {
                let (k, l) = (b / n, b % n);
                let mut c = zeta_pow[(j * k) % n].clone();
                let (mut xi, mut yj) = (i + k, j + l);
                if xi >= n {
                    xi -= n;
                    c = &c * alpha;
                }
                if yj >= n {
                    yj -= n;
                    c = &c * beta;
                }
                table.push((c, xi * n + yj));
            }
        }
        let algebra = CyclicAlgebra {
            field: field.clone(),
            r,
            alpha: alpha.clone(),
            beta: beta.clone(),
            zeta: zeta.clone(),
            table,
        };
        assert!(algebra.relations_hold(), "defining relations");
        if r <= ASSOCIATIVITY_CHECK_MAX_R {
            assert!(algebra.is_associative(), "associativity");
        }
        Ok(algebra)
    }

    /// `r^2`.
    pub fn dim(&self) -> usize {
        (self.r * self.r) as usize
    }

    /// Product of basis elements `e_a e_b` as `(coefficient, index)`.
    pub fn basis_product(&self, a: usize, b: usize) -> (&Elem, usize) {
        let (c, i) = &self.table[a * self.dim() + b];
        (c, *i)
    }

    pub fn zero(&self) -> Vec<Elem> {
        vec![self.field.zero(); self.dim()]
    }

    pub fn one(&self) -> Vec<Elem> {
        self.basis(0, 0)
    }

    /// The element `x^i y^j`.
    pub fn basis(&self, i: u64, j: u64) -> Vec<Elem> {
        let mut v = self.zero();
        v[(i * self.r + j) as usize] = self.field.one();
        v
    }

    pub fn x(&self) -> Vec<Elem> {
        self.basis(1 % self.r, 0)
    }

    pub fn y(&self) -> Vec<Elem> {
        self.basis(0, 1 % self.r)
    }

    pub fn add(&self, u: &[Elem], v: &[Elem]) -> Vec<Elem> {
        u.iter().zip(v).map(|(a, b)| a + b).collect()
    }

    pub fn scale(&self, c: &Elem, u: &[Elem]) -> Vec<Elem> {
        u.iter().map(|a| c * a).collect()
    }

    pub fn mul(&self, u: &[Elem], v: &[Elem]) -> Vec<Elem> {
        let mut out = self.zero();
        for (a, ua) in u.iter().enumerate().filter(|(_, e)| !e.is_zero()) {
            for (b, vb) in v.iter().enumerate().filter(|(_, e)| !e.is_zero()) {
                let (c, k) = self.basis_product(a, b);
                out[k] = &out[k] + &(&(ua * vb) * c);
            }
        }
        out
    }

    pub fn pow(&self, u: &[Elem], e: u64) -> Vec<Elem> {
        (0..e).fold(self.one(), |acc, _| self.mul(&acc, u))
    }

    /// `x^r = alpha`, `y^r = beta`, `y x = zeta x y`.
    pub fn relations_hold(&self) -> bool {
        let (x, y) = (self.x(), self.y());
        self.pow(&x, self.r) == self.scale(&self.alpha, &self.one())
            && self.pow(&y, self.r) == self.scale(&self.beta, &self.one())
            && self.mul(&y, &x) == self.scale(&self.zeta, &self.mul(&x, &y))
    }

    /// `(e_a e_b) e_c = e_a (e_b e_c)` for all basis triples.
    pub fn is_associative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|a| {
            (0..n).all(|b| {
                (0..n).all(|c| {
                    let (c1, ab) = self.basis_product(a, b);
                    let (c2, abc) = self.basis_product(ab, c);
                    let (d1, bc) = self.basis_product(b, c);
                    let (d2, abc2) = self.basis_product(a, bc);
                    abc == abc2 && c1 * c2 == d1 * d2
                })
            })
        })
    }
}
