//! Explicit generators for every group in the classification.
//!
//! Each constructor returns a closed [`SubgroupRecord`] whose isomorphism
//! type has been recognized from its element orders, so a wrong formula
//! surfaces as an error instead of a mislabeled group.

use crate::arith::{hilbert_symbol, solve_conic};
use crate::error::{Error, Result};
use crate::fields::{is_square, minus_one_two_squares, primitive_root_of_unity, zeta_plus_inverse, Elem, Field};
use crate::pgl::{subgroup_closure, GroupType, Matrix, ProjMat, SubgroupRecord};

/// Fails unless `order` is prime to the characteristic.
pub fn check_characteristic(field: &Field, order: u64) -> Result<()> {
    let p = field.characteristic();
    if p != 0 && order.is_multiple_of(p) {
        return Err(Error::CharacteristicDividesOrder {
            order,
            characteristic: p,
        });
    }
    Ok(())
}

fn close_as(gens: &[ProjMat], expected: GroupType) -> Result<SubgroupRecord> {
    let record = subgroup_closure(gens, expected.order() as usize)?;
    assert_eq!(record.iso_type, expected, "constructor produced the wrong type");
    Ok(record)
}

fn matrix(field: &Field, a: &Elem, b: &Elem, c: &Elem, d: &Elem) -> Result<Matrix> {
    Matrix::new(field, 2, vec![a.clone(), b.clone(), c.clone(), d.clone()])
}

/// Reason text when `zeta + 1/zeta` is missing from K.
pub fn trace_reason(field: &Field, r: u64) -> String {
    format!("ζ+ζ⁻¹ is not in {field} for a primitive {r}-th root of unity ζ")
}

/// Reason text when `-1` is not a sum of two squares in K.
pub fn two_squares_reason(field: &Field) -> String {
    format!("−1 is not a sum of two squares in {field}")
}

/// The order-`r` generator `z -> ((lambda+1) z - 1) / (z + 1)`, `lambda = zeta + 1/zeta`.
pub fn trace_generator(field: &Field, r: u64) -> Result<ProjMat> {
    check_characteristic(field, r)?;
    let lambda = zeta_plus_inverse(field, r)?.ok_or_else(|| Error::NotEmbeddable {
        group: GroupType::Cyclic(r),
        field: field.to_string(),
        reason: trace_reason(field, r),
    })?;
    let one = field.one();
    ProjMat::new(matrix(field, &(&lambda + &one), &-&one, &one, &one)?)
}

/// A cyclic subgroup of order `r`.
///
/// `r = 1` gives the trivial group and `r = 2` the involution `z -> 1/z`;
/// for `r >= 3` the generator is [`trace_generator`].
pub fn cyclic_subgroup(field: &Field, r: u64) -> Result<SubgroupRecord> {
    let group = GroupType::cyclic(r)?;
    check_characteristic(field, r)?;
    match r {
        1 => close_as(&[ProjMat::identity(field, 2)], group),
        2 => involution(field, &field.one()),
        _ => close_as(&[trace_generator(field, r)?], group),
    }
}

/// The involution `z -> alpha / z`, with `det_bar = -alpha`.
pub fn involution(field: &Field, alpha: &Elem) -> Result<SubgroupRecord> {
    check_characteristic(field, 2)?;
    if alpha.is_zero() {
        return Err(Error::ZeroInput);
    }
    let zero = field.zero();
    let s = ProjMat::new(matrix(field, &zero, alpha, &field.one(), &zero)?)?;
    close_as(&[s], GroupType::Cyclic(2))
}

/// The Klein four-group attached to a pair with split symbol.
///
/// Generators `h1 = [[lambda, -alpha], [1, -lambda]]` and
/// `h2 = [[0, alpha], [1, 0]]` where `lambda^2 - alpha - beta mu^2 = 0`,
/// `mu != 0`. Then `det_bar(h1) = -beta`, `det_bar(h2) = -alpha`.
pub fn klein_four(field: &Field, alpha: &Elem, beta: &Elem) -> Result<SubgroupRecord> {
    check_characteristic(field, 4)?;
    if alpha.is_zero() || beta.is_zero() {
        return Err(Error::ZeroInput);
    }
    if !hilbert_symbol(field, alpha, beta)?.split {
        return Err(Error::SymbolObstruction {
            alpha: alpha.to_string(),
            beta: beta.to_string(),
        });
    }
    let (lambda, _mu) = solve_conic(field, alpha, beta).map_err(|e| match e {
        Error::NoSolutionInBound { .. } => Error::NoConicSolutionInBound,
        other => other,
    })?;
    let (zero, one) = (field.zero(), field.one());
    let h1 = ProjMat::new(matrix(field, &lambda, &-alpha, &one, &-&lambda)?)?;
    let h2 = ProjMat::new(matrix(field, &zero, alpha, &one, &zero)?)?;
    close_as(&[h1, h2], GroupType::Klein4)
}

/// The dihedral group `{z -> zeta z, z -> alpha eta / z}` of order `2r`.
///
/// Requires `mu_r(K)` of order `r`; `t = diag(zeta, 1)` with `zeta` the first
/// primitive root in canonical order and `s = [[0, alpha], [1, 0]]`.
pub fn dihedral(field: &Field, r: u64, alpha: &Elem) -> Result<SubgroupRecord> {
    let group = GroupType::dihedral(r)?;
    if r == 2 {
        return Err(Error::UseKlein4);
    }
    check_characteristic(field, 2 * r)?;
    if alpha.is_zero() {
        return Err(Error::ZeroInput);
    }
    let zeta = primitive_root_of_unity(field, r).ok_or_else(|| Error::MissingRootsOfUnity {
        field: field.to_string(),
        r,
    })?;
    let (zero, one) = (field.zero(), field.one());
    let t = ProjMat::new(matrix(field, &zeta, &zero, &zero, &one)?)?;
    let s = ProjMat::new(matrix(field, &zero, alpha, &one, &zero)?)?;
    close_as(&[t, s], group)
}

/// A dihedral group of order `2r` from `z -> 1/z` and [`trace_generator`].
///
/// Exists whenever `zeta + 1/zeta` lies in K, without `mu_r(K)` being full.
pub fn dihedral_by_trace(field: &Field, r: u64) -> Result<SubgroupRecord> {
    let group = GroupType::dihedral(r)?;
    if r == 2 {
        return Err(Error::UseKlein4);
    }
    check_characteristic(field, 2 * r)?;
    let g = trace_generator(field, r).map_err(|e| match e {
        Error::NotEmbeddable { field, reason, .. } => Error::NotEmbeddable { group, field, reason },
        other => other,
    })?;
    let s = ProjMat::from_ints(field, [[0, 1], [1, 0]])?;
    close_as(&[s, g], group)
}

/// Images of `i, j` in `M_2(K)` for the split quaternion algebra `(-1, -1)`.
struct QuaternionSplit {
    one: Matrix,
    i: Matrix,
    j: Matrix,
    k: Matrix,
}

impl QuaternionSplit {
    /// `i -> [[a, b], [b, -a]]`, `j -> [[0, -1], [1, 0]]` with `a^2 + b^2 = -1`.
    fn new(field: &Field, group: GroupType) -> Result<Self> {
        let (a, b) = minus_one_two_squares(field).ok_or_else(|| Error::NotEmbeddable {
            group,
            field: field.to_string(),
            reason: two_squares_reason(field),
        })?;
        let i = matrix(field, &a, &b, &b, &-&a)?;
        let j = Matrix::from_ints(field, [[0, -1], [1, 0]]);
        let k = i.mul(&j)?;
        Ok(QuaternionSplit {
            one: Matrix::identity(field, 2),
            i,
            j,
            k,
        })
    }

    /// `c0 + c1 i + c2 j + c3 k`.
    fn element(&self, c: [&Elem; 4]) -> Result<ProjMat> {
        let m = self
            .one
            .scale(c[0])
            .add(&self.i.scale(c[1]))?
            .add(&self.j.scale(c[2]))?
            .add(&self.k.scale(c[3]))?;
        ProjMat::new(m)
    }
}

/// `A4`, `S4` or `A5` through binary polyhedral quaternions.
///
/// With `omega = -1 + i + j + k`, `m = 1 + i` and
/// `sigma = phi + phi^-1 i + j` (`phi^2 = phi + 1`):
/// `A4 = <j, omega>`, `S4 = <j, omega, m>`, `A5 = <omega, sigma>`.
pub fn polyhedral(field: &Field, group: GroupType) -> Result<SubgroupRecord> {
    if !matches!(group, GroupType::A4 | GroupType::S4 | GroupType::A5) {
        return Err(Error::InvalidGroup(group.to_string()));
    }
    check_characteristic(field, group.order())?;
    let q = QuaternionSplit::new(field, group)?;
    let (zero, one, minus_one) = (field.zero(), field.one(), field.int(-1));
    let j = q.element([&zero, &zero, &one, &zero])?;
    let omega = q.element([&minus_one, &one, &one, &one])?;
    let gens = match group {
        GroupType::A4 => vec![j, omega],
        GroupType::S4 => vec![j, omega, q.element([&one, &one, &zero, &zero])?],
        _ => {
            let root5 = is_square(&field.int(5))?.ok_or_else(|| Error::NotEmbeddable {
                group,
                field: field.to_string(),
                reason: format!("5 is not a square in {field}"),
            })?;
            let phi = &(&one + &root5) / &field.int(2);
            let phi_inv = &phi - &one;
            vec![omega, q.element([&phi, &phi_inv, &one, &zero])?]
        }
    };
    close_as(&gens, group)
}

/// The commuting pair of `PGL_r` with `A e_i = e_{i+1}`, `B e_i = zeta^i e_i`.
#[derive(Debug, Clone)]
pub struct HeisenbergPair {
    pub zeta: Elem,
    pub a: Matrix,
    pub b: Matrix,
    pub a_bar: ProjMat,
    pub b_bar: ProjMat,
}

impl HeisenbergPair {
    /// `B A - zeta A B`, which is exactly zero.
    pub fn commutator_defect(&self) -> Result<Matrix> {
        self.b.mul(&self.a)?.sub(&self.a.mul(&self.b)?.scale(&self.zeta))
    }
}

pub fn heisenberg_pair(field: &Field, r: u64) -> Result<HeisenbergPair> {
    let zeta = primitive_root_of_unity(field, r)
        .filter(|_| r >= 2)
        .ok_or_else(|| Error::MissingRootsOfUnity {
            field: field.to_string(),
            r,
        })?;
    let n = r as usize;
    let mut a = vec![field.zero(); n * n];
    for i in 0..n {
        a[((i + 1) % n) * n + i] = field.one();
    }
    let a = Matrix::new(field, n, a)?;
    let b = Matrix::diagonal(field, (1..=r).map(|e| zeta.pow(e)).collect());
    let pair = HeisenbergPair {
        a_bar: ProjMat::new(a.clone())?,
        b_bar: ProjMat::new(b.clone())?,
        zeta,
        a,
        b,
    };
    assert!(pair.commutator_defect()?.is_zero(), "BA = zeta AB");
    Ok(pair)
}
