//! Square classes, roots of unity and the other field predicates the
//! classification is phrased in.

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{divisors, Elem, Field, FieldKind};
use crate::error::{Error, Result};

/// Square root of a nonzero element, if one exists in the field.
///
/// The root is canonical: the positive root over Q, the root of least index
/// over a finite field.
pub fn is_square(x: &Elem) -> Result<Option<Elem>> {
    if x.is_zero() {
        return Err(Error::ZeroInput);
    }
    let field = x.field();
    match field.kind() {
        FieldKind::Rationals => {
            let r = x.as_rational().unwrap();
            if r.is_negative() {
                return Ok(None);
            }
            let (n, d) = (r.numer(), r.denom());
            let (sn, sd) = (n.sqrt(), d.sqrt());
            if &(&sn * &sn) == n && &(&sd * &sd) == d {
                Ok(Some(field.rational(BigRational::new(sn, sd))))
            } else {
                Ok(None)
            }
        }
        _ => Ok(field.units().unwrap().into_iter().find(|y| &y.square() == x)),
    }
}

fn is_square_fast(x: &Elem) -> bool {
    let field = x.field();
    match field.order() {
        Some(q) if q % 2 == 1 => x.pow((q - 1) / 2).is_one(),
        Some(_) => true,
        None => is_square(x).map(|r| r.is_some()).unwrap_or(false),
    }
}

/// Least nonsquare of a finite field of odd order.
pub fn least_nonsquare(field: &Field) -> Option<Elem> {
    let q = field.order()?;
    if q % 2 == 0 {
        return None;
    }
    (1..q).map(|i| field.from_index(i)).find(|x| !is_square_fast(x))
}

/// Signed squarefree part: the unique squarefree `s` with `n = s * m^2`.
pub fn squarefree_part(n: &BigInt) -> BigInt {
    assert!(!n.is_zero(), "squarefree part of zero");
    let sign = n.sign();
    let mut rest = n.abs();
    let mut out = BigInt::one();
    let mut d = BigInt::from(2u32);
    while &d * &d <= rest {
        let mut e = 0u32;
        while (&rest % &d).is_zero() {
            rest /= &d;
            e += 1;
        }
        if e % 2 == 1 {
            out *= &d;
        }
        d += 1u32;
    }
    out *= rest;
    if sign == Sign::Minus {
        -out
    } else {
        out
    }
}

/// Canonical representative of `x` modulo squares: a signed squarefree
/// integer over Q; `1` or the least nonsquare over a finite field.
pub fn square_class(x: &Elem) -> Result<Elem> {
    if x.is_zero() {
        return Err(Error::ZeroInput);
    }
    let field = x.field();
    match field.kind() {
        FieldKind::Rationals => {
            let r = x.as_rational().unwrap();
            let n = r.numer() * r.denom();
            Ok(field.big_int(&squarefree_part(&n)))
        }
        _ => {
            if is_square_fast(x) {
                Ok(field.one())
            } else {
                Ok(least_nonsquare(field).expect("odd order field has a nonsquare"))
            }
        }
    }
}

/// Canonical representatives of `K*/K*^2`, possibly truncated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareClasses {
    pub reps: Vec<Elem>,
    /// `Some(bound)` when the group is infinite and only `|s| <= bound` was listed.
    pub truncated_at: Option<u64>,
}

impl SquareClasses {
    pub fn is_truncated(&self) -> bool {
        self.truncated_at.is_some()
    }

    pub fn contains(&self, class: &Elem) -> bool {
        self.reps.contains(class)
    }
}

/// Representatives of `K*/K*^2`. Over Q these are the signed squarefree
/// integers of absolute value at most `bound`, ordered `1, -1, 2, -2, ...`.
pub fn square_class_group(field: &Field, bound: u64) -> SquareClasses {
    match field.kind() {
        FieldKind::Rationals => {
            let mut reps = Vec::new();
            for n in 1..=bound.max(1) {
                let b = BigInt::from(n);
                if squarefree_part(&b) == b {
                    reps.push(field.big_int(&b));
                    reps.push(field.big_int(&-b));
                }
            }
            SquareClasses {
                reps,
                truncated_at: Some(bound.max(1)),
            }
        }
        _ => {
            let mut reps = vec![field.one()];
            reps.extend(least_nonsquare(field));
            SquareClasses {
                reps,
                truncated_at: None,
            }
        }
    }
}

/// All `x` in K with `x^r = 1`, in canonical order (`1, -1` over Q).
pub fn mu_r(field: &Field, r: u64) -> Vec<Elem> {
    assert!(r >= 1, "r must be positive");
    match field.kind() {
        FieldKind::Rationals => {
            if r.is_multiple_of(2) {
                vec![field.one(), field.int(-1)]
            } else {
                vec![field.one()]
            }
        }
        _ => field
            .units()
            .unwrap()
            .into_iter()
            .filter(|x| x.pow(r).is_one())
            .collect(),
    }
}

/// The first element of exact multiplicative order `r` in canonical order.
pub fn primitive_root_of_unity(field: &Field, r: u64) -> Option<Elem> {
    match field.kind() {
        FieldKind::Rationals => match r {
            1 => Some(field.one()),
            2 => Some(field.int(-1)),
            _ => None,
        },
        _ => field
            .units()
            .unwrap()
            .into_iter()
            .find(|x| x.multiplicative_order() == Some(r)),
    }
}

/// `K[x]/(x^2 - lambda x + 1)`, elements `a + b x`.
struct QuadRing<'a> {
    lambda: &'a Elem,
}

impl QuadRing<'_> {
    fn mul(&self, u: &(Elem, Elem), v: &(Elem, Elem)) -> (Elem, Elem) {
        // x^2 = lambda x - 1
        let bd = &u.1 * &v.1;
        let c0 = &(&u.0 * &v.0) - &bd;
        let c1 = &(&(&u.0 * &v.1) + &(&u.1 * &v.0)) + &(&bd * self.lambda);
        (c0, c1)
    }

    fn pow_x(&self, mut e: u64) -> (Elem, Elem) {
        let f = self.lambda.field();
        let mut acc = (f.one(), f.zero());
        let mut base = (f.zero(), f.one());
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    fn is_one(u: &(Elem, Elem)) -> bool {
        u.0.is_one() && u.1.is_zero()
    }

    /// Whether the roots of `x^2 - lambda x + 1` are primitive `r`-th roots of unity.
    fn has_primitive_roots(&self, r: u64) -> bool {
        if !Self::is_one(&self.pow_x(r)) {
            return false;
        }
        divisors(r)
            .into_iter()
            .filter(|&d| d < r)
            .all(|d| !Self::is_one(&self.pow_x(d)))
    }
}

/// Some `lambda = zeta + 1/zeta` lying in K for a primitive `r`-th root of
/// unity `zeta` (which itself may live in a quadratic extension).
///
/// The test works in `K[x]/(x^2 - lambda x + 1)`, where the order of `x`
/// equals the order of either root. Over a finite field the least valid
/// `lambda` is returned.
pub fn zeta_plus_inverse(field: &Field, r: u64) -> Result<Option<Elem>> {
    assert!(r >= 1, "r must be positive");
    let p = field.characteristic();
    if p != 0 && r.is_multiple_of(p) {
        return Err(Error::CharacteristicDividesOrder {
            order: r,
            characteristic: p,
        });
    }
    let candidates: Vec<Elem> = match field.kind() {
        // Only r in {1, 2, 3, 4, 6} have [Q(zeta):Q] <= 2.
        FieldKind::Rationals => match r {
            1 => vec![field.int(2)],
            2 => vec![field.int(-2)],
            3 => vec![field.int(-1)],
            4 => vec![field.int(0)],
            6 => vec![field.int(1)],
            _ => vec![],
        },
        _ => field.elements().unwrap(),
    };
    Ok(candidates
        .into_iter()
        .find(|lambda| QuadRing { lambda }.has_primitive_roots(r)))
}

/// A pair `(a, b)` with `a^2 + b^2 = -1`, least in canonical order.
///
/// In characteristic 2, `-1 = 1` and the pair `(1, 0)` is returned.
pub fn minus_one_two_squares(field: &Field) -> Option<(Elem, Elem)> {
    match field.kind() {
        FieldKind::Rationals => None,
        _ if field.characteristic() == 2 => Some((field.one(), field.zero())),
        _ => {
            let minus_one = field.int(-1);
            for a in field.elements().unwrap() {
                let rest = &minus_one - &a.square();
                if rest.is_zero() {
                    return Some((a, field.zero()));
                }
                if let Some(b) = is_square(&rest).unwrap() {
                    return Some((a, b));
                }
            }
            unreachable!("-1 is a sum of two squares in every finite field")
        }
    }
}
