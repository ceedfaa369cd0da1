//! Embeddability and conjugacy classes of finite subgroups of `PGL_2(K)`.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::arith::hilbert_symbol;
use crate::catalog::{
    check_characteristic, cyclic_subgroup, dihedral, dihedral_by_trace, involution, klein_four, polyhedral,
};
use crate::error::{Error, Result};
use crate::fields::{mu_r, primitive_root_of_unity, square_class, square_class_group, Elem, Field};
use crate::pgl::{GroupType, SubgroupRecord};

/// Label of one conjugacy class within a [`ClassList`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassDescriptor {
    /// The only class of its type.
    Unique,
    /// Involutions `z -> alpha / z`, indexed by `alpha` in `K*/K*^2`.
    SquareClass(Elem),
    /// Klein four-groups with the given `det_bar` image, sorted.
    V4Group(Vec<Elem>),
    /// Dihedral groups indexed by `K*/K*^2 mu_r(K)`; the least element of the coset.
    DihedralCoset(Elem),
}

impl fmt::Display for ClassDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassDescriptor::Unique => write!(f, "unique"),
            ClassDescriptor::SquareClass(a) => write!(f, "alpha={a}"),
            ClassDescriptor::V4Group(g) => {
                let parts: Vec<String> = g.iter().map(|x| x.to_string()).collect();
                write!(f, "G={{{}}}", parts.join(";"))
            }
            ClassDescriptor::DihedralCoset(a) => write!(f, "coset={a}"),
        }
    }
}

/// Conjugacy classes of one isomorphism type, each with a representative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassList {
    pub field: Field,
    pub group: GroupType,
    pub classes: Vec<(ClassDescriptor, SubgroupRecord)>,
    /// Set when the parametrizing set is infinite and was cut at this bound.
    pub truncated_at: Option<u64>,
}

impl ClassList {
    pub fn truncated(&self) -> bool {
        self.truncated_at.is_some()
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn descriptors(&self) -> Vec<&ClassDescriptor> {
        self.classes.iter().map(|(d, _)| d).collect()
    }
}

/// Answer to "does `PGL_2(K)` contain the group?".
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    pub embeds: bool,
    pub reason: String,
    pub witness: Option<SubgroupRecord>,
}

fn yes(reason: String, witness: SubgroupRecord) -> Result<Embedding> {
    Ok(Embedding {
        embeds: true,
        reason,
        witness: Some(witness),
    })
}

/// Whether `mu_r(K)` has order `r`.
pub fn mu_r_full(field: &Field, r: u64) -> bool {
    primitive_root_of_unity(field, r).is_some()
}

/// Decides whether `PGL_2(K)` contains `group`, with a witness subgroup.
///
/// `C_r` and `D_r` embed iff `zeta + 1/zeta` lies in K; `A4` and `S4` iff
/// `-1` is a sum of two squares; `A5` iff additionally 5 is a square.
pub fn embeds(field: &Field, group: GroupType) -> Result<Embedding> {
    check_characteristic(field, group.order())?;
    let built = match group {
        GroupType::Cyclic(r) => cyclic_subgroup(field, r),
        GroupType::Dihedral(r) if mu_r_full(field, r) => dihedral(field, r, &field.one()),
        GroupType::Dihedral(r) => dihedral_by_trace(field, r),
        GroupType::Klein4 => klein_four(field, &field.one(), &field.int(-1)),
        GroupType::A4 | GroupType::S4 | GroupType::A5 => polyhedral(field, group),
    };
    match built {
        Ok(w) => {
            let reason = match group {
                GroupType::Cyclic(r) | GroupType::Dihedral(r) if r > 2 => {
                    format!("ζ+ζ⁻¹ lies in {field} for a primitive {r}-th root of unity ζ")
                }
                GroupType::A4 | GroupType::S4 => format!("−1 is a sum of two squares in {field}"),
                GroupType::A5 => format!("−1 is a sum of two squares and 5 is a square in {field}"),
                _ => format!("{group} embeds in PGL_2 of every field of characteristic prime to its order"),
            };
            yes(reason, w)
        }
        Err(Error::NotEmbeddable { reason, .. }) => Ok(Embedding {
            embeds: false,
            reason,
            witness: None,
        }),
        Err(e) => Err(e),
    }
}

/// All conjugacy classes of subgroups isomorphic to `group`.
///
/// `bound` caps the square classes listed over Q, where the parametrizing
/// sets of `C2` and `V4` are infinite; the result is then marked truncated.
pub fn conjugacy_classes(field: &Field, group: GroupType, bound: u64) -> Result<ClassList> {
    let e = embeds(field, group)?;
    if !e.embeds {
        return Err(Error::NotEmbeddable {
            group,
            field: field.to_string(),
            reason: e.reason,
        });
    }
    let mut truncated_at = None;
    let classes = match group {
        GroupType::Cyclic(2) => {
            let sq = square_class_group(field, bound);
            truncated_at = sq.truncated_at;
            sq.reps
                .iter()
                .map(|a| Ok((ClassDescriptor::SquareClass(a.clone()), involution(field, a)?)))
                .collect::<Result<Vec<_>>>()?
        }
        GroupType::Klein4 => {
            let sq = square_class_group(field, bound);
            truncated_at = sq.truncated_at;
            let mut out = Vec::new();
            for g in v4_subgroups(&sq.reps)? {
                if let Some(pair) = v4_realizable(field, &g)? {
                    out.push((ClassDescriptor::V4Group(g), realize_v4(field, &pair)?));
                }
            }
            out
        }
        GroupType::Dihedral(r) => {
            if !mu_r_full(field, r) {
                return Err(Error::OutsideScope {
                    group,
                    field: field.to_string(),
                    reason: format!("μ_{r}({field}) has fewer than {r} elements"),
                });
            }
            dihedral_cosets(field, r)?
                .into_iter()
                .map(|a| Ok((ClassDescriptor::DihedralCoset(a.clone()), dihedral(field, r, &a)?)))
                .collect::<Result<Vec<_>>>()?
        }
        _ => vec![(ClassDescriptor::Unique, e.witness.expect("embedding has a witness"))],
    };
    Ok(ClassList {
        field: field.clone(),
        group,
        classes,
        truncated_at,
    })
}

/// Least representatives of the cosets of `K*^2 mu_r(K)` in `K*`.
pub fn dihedral_cosets(field: &Field, r: u64) -> Result<Vec<Elem>> {
    let units = field
        .units()
        .ok_or_else(|| Error::UnsupportedField(field.to_string()))?;
    let mu = mu_r(field, r);
    let sub: BTreeSet<Elem> = units
        .iter()
        .flat_map(|a| mu.iter().map(move |m| &a.square() * m))
        .collect();
    let mut reps: Vec<Elem> = Vec::new();
    for x in units {
        let x_inv = x.inv()?;
        if !reps.iter().any(|c| sub.contains(&(c * &x_inv))) {
            reps.push(x);
        }
    }
    Ok(reps)
}

/// Subgroups of order 1, 2 or 4 of `K*/K*^2` lying entirely inside `reps`.
fn v4_subgroups(reps: &[Elem]) -> Result<Vec<Vec<Elem>>> {
    let one = reps[0].field().one();
    let mut out: Vec<Vec<Elem>> = vec![vec![one.clone()]];
    let nontrivial: Vec<&Elem> = reps.iter().filter(|x| !x.is_one()).collect();
    for g in &nontrivial {
        out.push(sorted(vec![one.clone(), (*g).clone()]));
    }
    let mut seen = BTreeSet::new();
    for (i, g) in nontrivial.iter().enumerate() {
        for h in &nontrivial[i + 1..] {
            let gh = square_class(&(*g * *h))?;
            if !reps.contains(&gh) {
                continue;
            }
            let set = sorted(vec![one.clone(), (*g).clone(), (*h).clone(), gh]);
            if seen.insert(set.clone()) {
                out.push(set);
            }
        }
    }
    Ok(out)
}

fn sorted(mut v: Vec<Elem>) -> Vec<Elem> {
    v.sort();
    v.dedup();
    v
}

/// Validates a subgroup of `K*/K*^2` and returns its square classes, sorted.
fn normalize_group(g: &[Elem]) -> Result<Vec<Elem>> {
    let bad = |why: &str| {
        let parts: Vec<String> = g.iter().map(|x| x.to_string()).collect();
        Error::NotASubgroup(format!("{{{}}}: {why}", parts.join(", ")))
    };
    if g.is_empty() {
        return Err(bad("empty"));
    }
    let classes = sorted(g.iter().map(square_class).collect::<Result<Vec<_>>>()?);
    if !classes.iter().any(Elem::is_one) {
        return Err(bad("missing 1"));
    }
    for a in &classes {
        for b in &classes {
            if !classes.contains(&square_class(&(a * b))?) {
                return Err(bad("not closed under multiplication"));
            }
        }
    }
    if ![1, 2, 4].contains(&classes.len()) {
        return Err(bad("order must be 1, 2 or 4"));
    }
    Ok(classes)
}

/// A pair `(alpha, beta)` with `<-alpha, -beta> = G` and `(alpha, beta)_2`
/// split, if one exists.
///
/// The pairs with a given `G` form one normalizer orbit, on which the
/// symbol is constant, so one representative pair decides:
/// `|G| = 1` uses `(-1, -1)`, `G = {1, g}` uses `(-g, -1)`, and
/// `G = {1, g1, g2, g1 g2}` uses `(-g1, -g2)`.
pub fn v4_realizable(field: &Field, g: &[Elem]) -> Result<Option<(Elem, Elem)>> {
    let classes = normalize_group(g)?;
    let minus = |x: &Elem| square_class(&-x);
    let nontrivial: Vec<&Elem> = classes.iter().filter(|x| !x.is_one()).collect();
    let pair = match nontrivial.len() {
        0 => (minus(&field.one())?, minus(&field.one())?),
        1 => (minus(nontrivial[0])?, minus(&field.one())?),
        _ => (minus(nontrivial[0])?, minus(nontrivial[1])?),
    };
    if hilbert_symbol(field, &pair.0, &pair.1)?.split {
        Ok(Some(pair))
    } else {
        Ok(None)
    }
}

/// The literal reading "`(-a, -b)_2` split for all `a, b` in G".
///
/// It rejects every `G` when `(-1, -1)_2` is non-split (as over Q), even
/// though `<z -> 1/z, z -> -z>` always exists; [`v4_realizable`] uses the
/// orbit description instead. Kept so the two can be compared.
pub fn v4_headline_condition(field: &Field, g: &[Elem]) -> Result<bool> {
    let classes = normalize_group(g)?;
    for a in &classes {
        for b in &classes {
            if !hilbert_symbol(field, &-a, &-b)?.split {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Builds the Klein four-group for a realizing pair, falling back to other
/// members of its orbit when the conic search degenerates.
fn realize_v4(field: &Field, pair: &(Elem, Elem)) -> Result<SubgroupRecord> {
    let mut candidates = vec![pair.clone()];
    candidates.extend(
        n_orbit_of_pair(field, &pair.0, &pair.1)?
            .into_iter()
            .filter(|p| p != pair),
    );
    let mut last = None;
    for (a, b) in candidates {
        match klein_four(field, &a, &b) {
            Ok(v) => return Ok(v),
            Err(e @ (Error::DegenerateOnly { .. } | Error::NoConicSolutionInBound)) => last = Some(e),
            Err(e) => return Err(e),
        }
    }
    Err(last.expect("at least one candidate"))
}

/// `<-alpha, -beta>` in `K*/K*^2`, sorted.
pub fn pair_group(alpha: &Elem, beta: &Elem) -> Result<Vec<Elem>> {
    let a = square_class(&-alpha)?;
    let b = square_class(&-beta)?;
    let ab = square_class(&(&a * &b))?;
    Ok(sorted(vec![alpha.field().one(), a, b, ab]))
}

/// Orbit of `(alpha, beta)` in `(K*/K*^2)^2` under the normalizer moves
/// `(a, b) -> (b, a)` and `(a, b) -> (a, -a b)`.
pub fn n_orbit_of_pair(field: &Field, alpha: &Elem, beta: &Elem) -> Result<BTreeSet<(Elem, Elem)>> {
    if alpha.field() != field || beta.field() != field {
        return Err(Error::FieldMismatch(field.to_string(), alpha.field().to_string()));
    }
    let start = (square_class(alpha)?, square_class(beta)?);
    let mut orbit = BTreeSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some((a, b)) = queue.pop_front() {
        let moved = square_class(&-&(&a * &b))?;
        for next in [(b.clone(), a.clone()), (a, moved)] {
            if orbit.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    Ok(orbit)
}
