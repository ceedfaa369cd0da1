use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};

use super::{GroupType, Matrix, ProjMat};
use crate::error::{Error, Result};
use crate::fields::{Elem, Field};

/// Default bound on `q` for exhaustive searches over `PGL_2(F_q)`.
pub const DEFAULT_Q_CAP: u64 = 13;

/// A finite subgroup together with its full element list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgroupRecord {
    pub generators: Vec<ProjMat>,
    /// All elements, sorted in canonical order.
    pub elements: Vec<ProjMat>,
    pub iso_type: GroupType,
    /// Square classes of determinants, sorted; empty unless `n = 2`.
    pub det_image: Vec<Elem>,
}

impl SubgroupRecord {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn field(&self) -> &Field {
        self.elements[0].field()
    }

    pub fn contains(&self, g: &ProjMat) -> bool {
        self.elements.binary_search(g).is_ok()
    }

    /// Same subgroup, as element sets.
    pub fn same_elements(&self, other: &SubgroupRecord) -> bool {
        self.elements == other.elements
    }

    /// `g H g^-1`, with the generators conjugated too.
    pub fn conjugate_by(&self, g: &ProjMat) -> Result<SubgroupRecord> {
        let g_inv = g.inverse();
        let conj = |h: &ProjMat| g.compose(h)?.compose(&g_inv);
        let generators = self.generators.iter().map(conj).collect::<Result<Vec<_>>>()?;
        let mut elements = self.elements.iter().map(conj).collect::<Result<Vec<_>>>()?;
        elements.sort();
        Ok(SubgroupRecord {
            generators,
            elements,
            iso_type: self.iso_type,
            det_image: self.det_image.clone(),
        })
    }
}

/// Breadth-first closure of `gens`, failing once more than `cap` elements appear.
pub fn closure_elements(gens: &[ProjMat], cap: usize) -> Result<Vec<ProjMat>> {
    let first = gens.first().ok_or(Error::ClosureExceedsCap { cap })?;
    let identity = ProjMat::identity(first.field(), first.dim());
    let mut seen: HashSet<ProjMat> = HashSet::from([identity.clone()]);
    let mut queue = VecDeque::from([identity]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = x.compose(g)?;
            if seen.insert(y.clone()) {
                if seen.len() > cap {
                    return Err(Error::ClosureExceedsCap { cap });
                }
                queue.push_back(y);
            }
        }
    }
    let mut out: Vec<ProjMat> = seen.into_iter().collect();
    out.sort();
    Ok(out)
}

/// Closes `gens` into a subgroup and recognizes its isomorphism type.
pub fn subgroup_closure(gens: &[ProjMat], cap: usize) -> Result<SubgroupRecord> {
    let elements = closure_elements(gens, cap)?;
    let iso_type = iso_type(&elements)?;
    let det_image = if elements[0].dim() == 2 {
        let set: BTreeSet<Elem> = elements.iter().map(|g| g.det_bar()).collect::<Result<_>>()?;
        set.into_iter().collect()
    } else {
        Vec::new()
    };
    Ok(SubgroupRecord {
        generators: gens.to_vec(),
        elements,
        iso_type,
        det_image,
    })
}

/// Element-order multiset of a closed finite group.
pub fn order_profile(elements: &[ProjMat]) -> BTreeMap<u64, usize> {
    let n = elements.len() as u64;
    let mut profile = BTreeMap::new();
    for g in elements {
        let k = g.element_order(n).expect("element of a finite group");
        *profile.entry(k).or_default() += 1;
    }
    profile
}

/// Recognizes a closed finite subgroup as one of the classification types.
pub fn iso_type(elements: &[ProjMat]) -> Result<GroupType> {
    GroupType::from_order_profile(&order_profile(elements)).ok_or(Error::UnrecognizedType { order: elements.len() })
}

/// All of `PGL_2(K)` for a finite field K, in canonical order.
pub fn enumerate_pgl2(field: &Field) -> Result<Vec<ProjMat>> {
    let elems = field
        .elements()
        .ok_or_else(|| Error::UnsupportedField(field.to_string()))?;
    let (zero, one) = (field.zero(), field.one());
    let mut out = Vec::new();
    // Normalized forms are [[0,1],[c,d]] with c != 0, and [[1,b],[c,d]] with d != bc.
    for c in &elems[1..] {
        for d in &elems {
            let m = Matrix::new(field, 2, vec![zero.clone(), one.clone(), c.clone(), d.clone()])?;
            out.push(ProjMat::from_normalized(m));
        }
    }
    for b in &elems {
        for c in &elems {
            let bc = b * c;
            for d in &elems {
                if *d != bc {
                    let m = Matrix::new(field, 2, vec![one.clone(), b.clone(), c.clone(), d.clone()])?;
                    out.push(ProjMat::from_normalized(m));
                }
            }
        }
    }
    Ok(out)
}

/// `PGL_2(F_q)` with `q` bounded by `cap`.
pub fn enumerate_pgl2_q(q: u64, cap: u64) -> Result<Vec<ProjMat>> {
    if q > cap {
        return Err(Error::CapExceeded { q, cap });
    }
    enumerate_pgl2(&Field::finite(q)?)
}

/// A `g` in `PGL_2(F_q)` with `g H1 g^-1 = H2`, found by exhaustive search.
pub fn are_conjugate_subgroups(h1: &SubgroupRecord, h2: &SubgroupRecord) -> Result<Option<ProjMat>> {
    let field = h1.field();
    if field != h2.field() {
        return Err(Error::FieldMismatch(field.to_string(), h2.field().to_string()));
    }
    if !field.is_finite() {
        return Err(Error::UnsupportedField(field.to_string()));
    }
    if h1.order() != h2.order() || h1.iso_type != h2.iso_type {
        return Ok(None);
    }
    if h1.same_elements(h2) {
        return Ok(Some(ProjMat::identity(field, 2)));
    }
    let target: HashSet<&ProjMat> = h2.elements.iter().collect();
    // Conjugating a generating set is enough: the image group is then fixed.
    let gens: Vec<&ProjMat> = h1.elements.iter().filter(|g| !g.is_identity()).collect();
    for g in enumerate_pgl2(field)? {
        let g_inv = g.inverse();
        let mut ok = true;
        for h in &gens {
            let c = g.compose(h)?.compose(&g_inv)?;
            if !target.contains(&c) {
                ok = false;
                break;
            }
        }
        if ok {
            return Ok(Some(g));
        }
    }
    Ok(None)
}
