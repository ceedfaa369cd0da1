//! Exact arithmetic over the supported base fields: the rationals, prime
//! fields, and extensions of prime fields given by a monic irreducible.
//!
//! A [`Field`] is a cheap, shareable handle. An [`Elem`] carries its field,
//! so mixing elements of different fields is detected at run time. The
//! arithmetic operators panic on such a mismatch (and on division by zero);
//! the `checked_*` methods report it as an [`Error`] instead.

pub mod poly;
mod squares;

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use squares::{
    is_square, least_nonsquare, minus_one_two_squares, mu_r, primitive_root_of_unity, square_class, square_class_group,
    squarefree_part, zeta_plus_inverse, SquareClasses,
};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FieldKind {
    Rationals,
    Prime {
        p: u64,
    },
    /// `F_p[t]/(poly)` with `poly` monic irreducible of degree `k`, low-to-high.
    Extension {
        p: u64,
        k: u32,
        poly: Vec<u64>,
    },
}

/// Handle to a concrete base field.
#[derive(Debug, Clone)]
pub struct Field(Arc<FieldKind>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for Field {}

impl Hash for Field {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.hash(state)
    }
}

impl Field {
    pub fn rationals() -> Self {
        Field(Arc::new(FieldKind::Rationals))
    }

    pub fn prime(p: u64) -> Result<Self> {
        if !poly::is_prime(p) || p > u32::MAX as u64 {
            return Err(Error::InvalidField(format!("F{p}: {p} is not a supported prime")));
        }
        Ok(Field(Arc::new(FieldKind::Prime { p })))
    }

    /// `F_{p^k}`. Without an explicit polynomial the default irreducible of
    /// [`poly::default_irreducible`] is used.
    pub fn extension(p: u64, k: u32, modulus: Option<Vec<u64>>) -> Result<Self> {
        if !poly::is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        if k == 1 && modulus.is_none() {
            return Field::prime(p);
        }
        if k == 0 || (p as f64).powi(k as i32) > 1e15 {
            return Err(Error::InvalidField(format!("unsupported degree {k}")));
        }
        let poly = match modulus {
            Some(c) => {
                if c.len() != k as usize + 1 || c.last() != Some(&1) || c.iter().any(|&x| x >= p) {
                    return Err(Error::InvalidField(format!(
                        "polynomial {c:?} is not monic of degree {k} with coefficients mod {p}"
                    )));
                }
                if !poly::is_irreducible(&c, p) {
                    return Err(Error::InvalidField(format!("polynomial {c:?} is reducible over F{p}")));
                }
                c
            }
            None => poly::default_irreducible(p, k),
        };
        if k == 1 {
            return Field::prime(p);
        }
        Ok(Field(Arc::new(FieldKind::Extension { p, k, poly })))
    }

    /// The field with `q` elements, using the default modulus when `q` is not prime.
    pub fn finite(q: u64) -> Result<Self> {
        let (p, k) = poly::prime_power(q).ok_or_else(|| Error::InvalidField(format!("{q} is not a prime power")))?;
        Field::extension(p, k, None)
    }

    pub fn kind(&self) -> &FieldKind {
        &self.0
    }

    pub fn characteristic(&self) -> u64 {
        match *self.0 {
            FieldKind::Rationals => 0,
            FieldKind::Prime { p } | FieldKind::Extension { p, .. } => p,
        }
    }

    /// Number of elements, `None` for the rationals.
    pub fn order(&self) -> Option<u64> {
        match &*self.0 {
            FieldKind::Rationals => None,
            FieldKind::Prime { p } => Some(*p),
            FieldKind::Extension { p, k, .. } => Some(p.pow(*k)),
        }
    }

    pub fn is_finite(&self) -> bool {
        self.order().is_some()
    }

    pub fn zero(&self) -> Elem {
        self.make(match *self.0 {
            FieldKind::Rationals => Value::Rational(BigRational::zero()),
            _ => Value::Finite(0),
        })
    }

    pub fn one(&self) -> Elem {
        self.make(match *self.0 {
            FieldKind::Rationals => Value::Rational(BigRational::one()),
            _ => Value::Finite(1),
        })
    }

    /// Image of an integer under the canonical map Z -> K.
    pub fn int(&self, n: i64) -> Elem {
        match *self.0 {
            FieldKind::Rationals => self.make(Value::Rational(BigRational::from_integer(n.into()))),
            FieldKind::Prime { p } | FieldKind::Extension { p, .. } => {
                self.make(Value::Finite(n.rem_euclid(p as i64) as u64))
            }
        }
    }

    pub fn big_int(&self, n: &BigInt) -> Elem {
        match *self.0 {
            FieldKind::Rationals => self.make(Value::Rational(BigRational::from_integer(n.clone()))),
            FieldKind::Prime { p } | FieldKind::Extension { p, .. } => {
                let r = ((n % p) + p) % p;
                self.make(Value::Finite(r.try_into().expect("residue fits")))
            }
        }
    }

    /// The rational `n/d`. Panics unless this is the rational field and `d != 0`.
    pub fn ratio(&self, n: i64, d: i64) -> Elem {
        assert!(
            matches!(*self.0, FieldKind::Rationals),
            "ratio() needs the rational field"
        );
        self.rational(BigRational::new(n.into(), d.into()))
    }

    pub fn rational(&self, r: BigRational) -> Elem {
        assert!(
            matches!(*self.0, FieldKind::Rationals),
            "rational() needs the rational field"
        );
        self.make(Value::Rational(r))
    }

    /// Element with the given canonical index (`0..q`) of a finite field.
    pub fn from_index(&self, index: u64) -> Elem {
        let q = self.order().expect("from_index() needs a finite field");
        assert!(index < q, "index {index} out of range for a field of order {q}");
        self.make(Value::Finite(index))
    }

    /// All elements of a finite field in canonical order; `None` for the rationals.
    pub fn elements(&self) -> Option<Vec<Elem>> {
        self.order().map(|q| (0..q).map(|i| self.from_index(i)).collect())
    }

    /// Nonzero elements in canonical order.
    pub fn units(&self) -> Option<Vec<Elem>> {
        self.order().map(|q| (1..q).map(|i| self.from_index(i)).collect())
    }

    /// Parses an element literal: `a/b` or `a` for the rationals, an integer
    /// for prime fields, and `c0,c1,...` (or an integer) for extensions.
    pub fn parse_elem(&self, text: &str) -> Result<Elem> {
        let bad = || Error::InvalidElement {
            text: text.to_string(),
            field: self.to_string(),
        };
        let t = text.trim().replace('−', "-");
        match &*self.0 {
            FieldKind::Rationals => {
                let r = if let Some((n, d)) = t.split_once('/') {
                    let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
                    let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
                    if d.is_zero() {
                        return Err(bad());
                    }
                    BigRational::new(n, d)
                } else {
                    BigRational::from_integer(BigInt::from_str(&t).map_err(|_| bad())?)
                };
                Ok(self.rational(r))
            }
            FieldKind::Prime { .. } => {
                let n = BigInt::from_str(&t).map_err(|_| bad())?;
                Ok(self.big_int(&n))
            }
            FieldKind::Extension { p, k, .. } => {
                let parts: Vec<&str> = t.split(',').collect();
                if parts.len() > *k as usize {
                    return Err(bad());
                }
                let mut coeffs = Vec::with_capacity(*k as usize);
                for part in parts {
                    let n = BigInt::from_str(part.trim()).map_err(|_| bad())?;
                    let r: u64 = ((n % *p) + *p).try_into().map_err(|_| bad())?;
                    coeffs.push(r % p);
                }
                coeffs.resize(*k as usize, 0);
                Ok(self.make(Value::Finite(poly::pack(&coeffs, *p))))
            }
        }
    }

    fn make(&self, value: Value) -> Elem {
        Elem {
            field: self.clone(),
            value,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &*self.0 {
            FieldKind::Rationals => write!(f, "Q"),
            FieldKind::Prime { p } => write!(f, "F{p}"),
            FieldKind::Extension { p, k, poly } => {
                let coeffs: Vec<String> = poly.iter().map(u64::to_string).collect();
                write!(f, "F{p}^{k}:poly={}", coeffs.join(","))
            }
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    /// `Q` | `F<p>` | `F<p>^<k>` | `F<p>^<k>:poly=<c0,c1,...,1>`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidField(s.to_string());
        let s = s.trim();
        if s == "Q" {
            return Ok(Field::rationals());
        }
        let rest = s.strip_prefix('F').ok_or_else(bad)?;
        let (base, poly) = match rest.split_once(':') {
            Some((b, spec)) => {
                let coeffs = spec.strip_prefix("poly=").ok_or_else(bad)?;
                let c = coeffs
                    .split(',')
                    .map(|x| x.trim().parse::<u64>().map_err(|_| bad()))
                    .collect::<Result<Vec<_>>>()?;
                (b, Some(c))
            }
            None => (rest, None),
        };
        let (p, k) = match base.split_once('^') {
            Some((p, k)) => (
                p.parse::<u64>().map_err(|_| bad())?,
                k.parse::<u32>().map_err(|_| bad())?,
            ),
            None => (base.parse::<u64>().map_err(|_| bad())?, 1),
        };
        if poly.is_none() && k == 1 {
            return Field::prime(p);
        }
        Field::extension(p, k, poly)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum Value {
    Rational(BigRational),
    /// Residue for prime fields; packed base-p coefficients for extensions.
    Finite(u64),
}

/// An exact element of a [`Field`].
#[derive(Clone)]
pub struct Elem {
    field: Field,
    value: Value,
}

impl PartialEq for Elem {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value && self.field == other.field
    }
}

impl Eq for Elem {}

impl Hash for Elem {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.value.hash(state)
    }
}

/// Canonical order: finite-field elements by index, rationals by value.
impl Ord for Elem {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.value, &other.value) {
            (Value::Finite(a), Value::Finite(b)) => a.cmp(b),
            (Value::Rational(a), Value::Rational(b)) => a.cmp(b),
            (Value::Finite(_), Value::Rational(_)) => Ordering::Less,
            (Value::Rational(_), Value::Finite(_)) => Ordering::Greater,
        }
    }
}

impl PartialOrd for Elem {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.value, self.field.kind()) {
            (Value::Rational(r), _) => {
                if r.is_integer() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            (Value::Finite(i), FieldKind::Extension { p, k, .. }) => {
                let c: Vec<String> = poly::unpack(*i, *p, *k as usize).iter().map(u64::to_string).collect();
                write!(f, "{}", c.join(","))
            }
            (Value::Finite(i), _) => write!(f, "{i}"),
        }
    }
}

impl Elem {
    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        match &self.value {
            Value::Rational(r) => r.is_zero(),
            Value::Finite(i) => *i == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.value {
            Value::Rational(r) => r.is_one(),
            Value::Finite(i) => *i == 1,
        }
    }

    /// Canonical index of a finite-field element.
    pub fn index(&self) -> Option<u64> {
        match self.value {
            Value::Finite(i) => Some(i),
            Value::Rational(_) => None,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.value {
            Value::Rational(r) => Some(r),
            Value::Finite(_) => None,
        }
    }

    /// Whether the element lies in the prime subfield image of an integer,
    /// returning that integer's residue (finite) or the integer itself (Q).
    pub fn as_integer(&self) -> Option<BigInt> {
        match (&self.value, self.field.kind()) {
            (Value::Rational(r), _) => r.is_integer().then(|| r.to_integer()),
            (Value::Finite(i), FieldKind::Extension { p, .. }) => (*i < *p).then(|| BigInt::from(*i)),
            (Value::Finite(i), _) => Some(BigInt::from(*i)),
        }
    }

    fn check(&self, other: &Elem) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch(self.field.to_string(), other.field.to_string()))
        }
    }

    fn with(&self, value: Value) -> Elem {
        Elem {
            field: self.field.clone(),
            value,
        }
    }

    pub fn checked_add(&self, other: &Elem) -> Result<Elem> {
        self.check(other)?;
        Ok(self.with(match (&self.value, &other.value, self.field.kind()) {
            (Value::Rational(a), Value::Rational(b), _) => Value::Rational(a + b),
            (Value::Finite(a), Value::Finite(b), FieldKind::Prime { p }) => Value::Finite((a + b) % p),
            (Value::Finite(a), Value::Finite(b), FieldKind::Extension { p, k, .. }) => {
                let x = poly::unpack(*a, *p, *k as usize);
                let y = poly::unpack(*b, *p, *k as usize);
                let s: Vec<u64> = x.iter().zip(&y).map(|(u, v)| (u + v) % p).collect();
                Value::Finite(poly::pack(&s, *p))
            }
            _ => unreachable!("value kind matches field kind"),
        }))
    }

    pub fn checked_sub(&self, other: &Elem) -> Result<Elem> {
        self.checked_add(&other.neg_ref())
    }

    pub fn checked_mul(&self, other: &Elem) -> Result<Elem> {
        self.check(other)?;
        Ok(self.with(match (&self.value, &other.value, self.field.kind()) {
            (Value::Rational(a), Value::Rational(b), _) => Value::Rational(a * b),
            (Value::Finite(a), Value::Finite(b), FieldKind::Prime { p }) => Value::Finite(poly::mul_mod(*a, *b, *p)),
            (Value::Finite(a), Value::Finite(b), FieldKind::Extension { p, k, poly: m }) => {
                let x = poly::unpack(*a, *p, *k as usize);
                let y = poly::unpack(*b, *p, *k as usize);
                let mut r = poly::rem_monic(&poly::mul(&x, &y, *p), m, *p);
                r.resize(*k as usize, 0);
                Value::Finite(poly::pack(&r, *p))
            }
            _ => unreachable!("value kind matches field kind"),
        }))
    }

    pub fn checked_div(&self, other: &Elem) -> Result<Elem> {
        self.check(other)?;
        self.checked_mul(&other.inv()?)
    }

    fn neg_ref(&self) -> Elem {
        self.with(match (&self.value, self.field.kind()) {
            (Value::Rational(a), _) => Value::Rational(-a),
            (Value::Finite(a), FieldKind::Prime { p }) => Value::Finite((p - a) % p),
            (Value::Finite(a), FieldKind::Extension { p, k, .. }) => {
                let x: Vec<u64> = poly::unpack(*a, *p, *k as usize).iter().map(|c| (p - c) % p).collect();
                Value::Finite(poly::pack(&x, *p))
            }
            _ => unreachable!("value kind matches field kind"),
        })
    }

    pub fn inv(&self) -> Result<Elem> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match (&self.value, self.field.kind()) {
            (Value::Rational(a), _) => self.with(Value::Rational(a.recip())),
            (Value::Finite(a), FieldKind::Prime { p }) => self.with(Value::Finite(poly::pow_mod(*a, p - 2, *p))),
            _ => {
                let q = self.field.order().unwrap();
                self.pow(q - 2)
            }
        })
    }

    pub fn pow(&self, mut exp: u64) -> Elem {
        let mut base = self.clone();
        let mut acc = self.field.one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            exp >>= 1;
        }
        acc
    }

    /// Integer power; negative exponents invert first.
    pub fn pow_i(&self, exp: i64) -> Result<Elem> {
        if exp >= 0 {
            Ok(self.pow(exp as u64))
        } else {
            Ok(self.inv()?.pow(exp.unsigned_abs()))
        }
    }

    pub fn square(&self) -> Elem {
        self * self
    }

    /// Multiplicative order of a nonzero finite-field element.
    pub fn multiplicative_order(&self) -> Option<u64> {
        let q = self.field.order()?;
        if self.is_zero() {
            return None;
        }
        let n = q - 1;
        let mut order = n;
        for d in divisors(n) {
            if self.pow(d).is_one() {
                order = d;
                break;
            }
        }
        Some(order)
    }

    pub fn is_negative_rational(&self) -> bool {
        matches!(&self.value, Value::Rational(r) if r.is_negative())
    }
}

/// Positive divisors of `n` in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&Elem> for &Elem {
            type Output = Elem;
            fn $method(self, rhs: &Elem) -> Elem {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{}", e))
            }
        }
        impl $trait<Elem> for Elem {
            type Output = Elem;
            fn $method(self, rhs: Elem) -> Elem {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Elem> for Elem {
            type Output = Elem;
            fn $method(self, rhs: &Elem) -> Elem {
                (&self).$method(rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);
binop!(Div, div, checked_div);

impl Neg for &Elem {
    type Output = Elem;
    fn neg(self) -> Elem {
        self.neg_ref()
    }
}

impl Neg for Elem {
    type Output = Elem;
    fn neg(self) -> Elem {
        self.neg_ref()
    }
}
