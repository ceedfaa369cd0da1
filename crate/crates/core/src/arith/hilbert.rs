use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::fields::{poly::pow_mod, square_class, Elem, Field, FieldKind};

/// Value of a quadratic Hilbert symbol: split means the symbol is trivial in
/// the Brauer group, i.e. the conic `x^2 - a y^2 - b z^2 = 0` has a point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SymbolValue {
    pub split: bool,
}

impl SymbolValue {
    pub const SPLIT: SymbolValue = SymbolValue { split: true };
    pub const NON_SPLIT: SymbolValue = SymbolValue { split: false };

    /// `+1` for split, `-1` otherwise.
    pub fn sign(self) -> i8 {
        if self.split {
            1
        } else {
            -1
        }
    }

    pub fn from_sign(sign: i8) -> Self {
        SymbolValue { split: sign > 0 }
    }

    /// Product in `{+1, -1}`.
    pub fn times(self, other: SymbolValue) -> SymbolValue {
        SymbolValue {
            split: self.split == other.split,
        }
    }
}

impl fmt::Display for SymbolValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.split { "split" } else { "non-split" })
    }
}

/// A place of Q.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Place {
    Infinity,
    Prime(u64),
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Infinity => write!(f, "inf"),
            Place::Prime(p) => write!(f, "{p}"),
        }
    }
}

/// `v_p(n)` and the `p`-free part of a nonzero integer.
fn split_prime(n: &BigInt, p: u64) -> (i64, BigInt) {
    let mut n = n.clone();
    let mut v = 0;
    let p = BigInt::from(p);
    while (&n % &p).is_zero() {
        n /= &p;
        v += 1;
    }
    (v, n)
}

/// Writes `r = p^v * u` with `u` a p-adic unit, returning `v` and `u`'s
/// numerator times denominator (same class as `u` modulo unit squares).
fn decompose(r: &BigRational, p: u64) -> (i64, BigInt) {
    let (vn, un) = split_prime(r.numer(), p);
    let (vd, ud) = split_prime(r.denom(), p);
    (vn - vd, un * ud)
}

fn residue(n: &BigInt, m: u64) -> u64 {
    n.mod_floor(&BigInt::from(m)).to_u64().unwrap()
}

fn legendre(n: &BigInt, p: u64) -> i8 {
    let r = residue(n, p);
    if pow_mod(r, (p - 1) / 2, p) == 1 {
        1
    } else {
        -1
    }
}

/// Local Hilbert symbol `(a, b)_v` of two nonzero rationals.
pub fn hilbert_symbol_local(place: Place, a: &BigRational, b: &BigRational) -> Result<SymbolValue> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroInput);
    }
    let sign = match place {
        Place::Infinity => {
            if a.is_negative() && b.is_negative() {
                -1
            } else {
                1
            }
        }
        Place::Prime(2) => {
            let (va, u) = decompose(a, 2);
            let (vb, v) = decompose(b, 2);
            let (u, v) = (residue(&u, 8), residue(&v, 8));
            let eps = |x: u64| ((x - 1) / 2) % 2;
            let omega = |x: u64| ((x * x - 1) / 8) % 2;
            let e = eps(u) * eps(v) + (va.rem_euclid(2) as u64) * omega(v) + (vb.rem_euclid(2) as u64) * omega(u);
            if e.is_multiple_of(2) {
                1
            } else {
                -1
            }
        }
        Place::Prime(p) => {
            let (va, u) = decompose(a, p);
            let (vb, v) = decompose(b, p);
            let mut s: i8 = 1;
            if (va * vb).rem_euclid(2) == 1 && (p - 1) / 2 % 2 == 1 {
                s = -s;
            }
            if vb.rem_euclid(2) == 1 {
                s *= legendre(&u, p);
            }
            if va.rem_euclid(2) == 1 {
                s *= legendre(&v, p);
            }
            s
        }
    };
    Ok(SymbolValue::from_sign(sign))
}

/// Prime divisors of a nonzero integer, increasing.
pub fn prime_divisors(n: &BigInt) -> Vec<u64> {
    let mut n = n.abs();
    let mut out = Vec::new();
    let mut d = 2u64;
    while BigInt::from(d) * BigInt::from(d) <= n {
        let bd = BigInt::from(d);
        if (&n % &bd).is_zero() {
            out.push(d);
            while (&n % &bd).is_zero() {
                n /= &bd;
            }
        }
        d += 1;
    }
    if n > BigInt::one() {
        out.push(n.to_u64().expect("prime factor fits in u64"));
    }
    out
}

/// Places where `(a, b)_v` can be non-split: infinity, 2, and the odd primes
/// dividing the numerators or denominators of `a` and `b`.
pub fn relevant_places(a: &BigRational, b: &BigRational) -> Vec<Place> {
    let prod = a.numer() * a.denom() * b.numer() * b.denom();
    let mut primes = prime_divisors(&prod);
    if !primes.contains(&2) {
        primes.insert(0, 2);
    }
    std::iter::once(Place::Infinity)
        .chain(primes.into_iter().map(Place::Prime))
        .collect()
}

/// All local symbols at the relevant places.
pub fn local_symbols(a: &BigRational, b: &BigRational) -> Result<Vec<(Place, SymbolValue)>> {
    relevant_places(a, b)
        .into_iter()
        .map(|v| Ok((v, hilbert_symbol_local(v, a, b)?)))
        .collect()
}

/// Global quadratic Hilbert symbol `(alpha, beta)_2` over Q or a finite
/// field of odd characteristic.
///
/// Over Q the symbol is split iff every local symbol is split. Over a
/// finite field every conic has a point.
pub fn hilbert_symbol(field: &Field, alpha: &Elem, beta: &Elem) -> Result<SymbolValue> {
    if alpha.field() != field || beta.field() != field {
        return Err(Error::FieldMismatch(field.to_string(), alpha.field().to_string()));
    }
    if alpha.is_zero() || beta.is_zero() {
        return Err(Error::ZeroInput);
    }
    match field.kind() {
        FieldKind::Rationals => {
            let a = square_class(alpha)?;
            let b = square_class(beta)?;
            let (a, b) = (a.as_rational().unwrap(), b.as_rational().unwrap());
            let all_split = local_symbols(a, b)?.iter().all(|(_, s)| s.split);
            Ok(SymbolValue { split: all_split })
        }
        _ if field.characteristic() != 2 => Ok(SymbolValue::SPLIT),
        _ => Err(Error::UnsupportedField(field.to_string())),
    }
}
