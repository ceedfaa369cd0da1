use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::hilbert_symbol;
use crate::error::{Error, Result};
use crate::fields::{is_square, Elem, Field, FieldKind};

/// Default height cap for the rational conic search.
pub const DEFAULT_HEIGHT_CAP: u64 = 1000;

/// A point `(lambda, mu)` on `lambda^2 - alpha - beta mu^2 = 0` with `mu != 0`.
pub fn solve_conic(field: &Field, alpha: &Elem, beta: &Elem) -> Result<(Elem, Elem)> {
    solve_conic_bounded(field, alpha, beta, DEFAULT_HEIGHT_CAP)
}

/// [`solve_conic`] with an explicit height cap for the search over Q.
///
/// Over a finite field every `mu != 0` is tried in canonical order. Over Q,
/// `mu = m/n` runs through increasing height `max(m, n)` (then increasing
/// `m`), keeping the first `mu` for which `alpha + beta mu^2` is a square.
/// `mu = 0` is never returned.
pub fn solve_conic_bounded(field: &Field, alpha: &Elem, beta: &Elem, height_cap: u64) -> Result<(Elem, Elem)> {
    let symbol = hilbert_symbol(field, alpha, beta)?;
    if !symbol.split {
        return Err(Error::NoSolution {
            alpha: alpha.to_string(),
            beta: beta.to_string(),
        });
    }
    match field.kind() {
        FieldKind::Rationals => solve_rational(field, alpha, beta, height_cap),
        _ => {
            for mu in field.units().unwrap() {
                let t = alpha + &(beta * &mu.square());
                if t.is_zero() {
                    return Ok((field.zero(), mu));
                }
                if let Some(lambda) = is_square(&t)? {
                    return Ok((lambda, mu));
                }
            }
            Err(Error::DegenerateOnly {
                alpha: alpha.to_string(),
                beta: beta.to_string(),
            })
        }
    }
}

fn solve_rational(field: &Field, alpha: &Elem, beta: &Elem, height_cap: u64) -> Result<(Elem, Elem)> {
    let a = alpha.as_rational().unwrap();
    let b = beta.as_rational().unwrap();
    let (a1, a2) = (a.numer(), a.denom());
    let (b1, b2) = (b.numer(), b.denom());
    // alpha + beta (m/n)^2 = (a1 b2 n^2 + b1 a2 m^2) / (a2 b2 n^2); it is a
    // square iff X = (a1 b2 n^2 + b1 a2 m^2) a2 b2 is a square integer, and
    // then lambda = sqrt(X) / (a2 b2 n).
    let c1 = a1 * b2;
    let c2 = b1 * a2;
    let d = a2 * b2;
    for h in 1..=height_cap {
        for m in 1..=h {
            let n_range: Box<dyn Iterator<Item = u64>> = if m == h {
                Box::new(1..=h)
            } else {
                Box::new(std::iter::once(h))
            };
            for n in n_range {
                if m.gcd(&n) != 1 {
                    continue;
                }
                let (mb, nb) = (BigInt::from(m), BigInt::from(n));
                let x = (&c1 * &nb * &nb + &c2 * &mb * &mb) * &d;
                if x.is_negative() {
                    continue;
                }
                let s = x.sqrt();
                if s.clone() * &s == x {
                    let lambda = BigRational::new(s, &d * &nb);
                    let mu = BigRational::new(mb, nb);
                    debug_assert!(x.is_zero() || !lambda.is_zero());
                    return Ok((field.rational(lambda), field.rational(mu)));
                }
            }
        }
    }
    Err(Error::NoSolutionInBound { bound: height_cap })
}
