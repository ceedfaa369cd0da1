use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::fields::Field;
use crate::pgl::{enumerate_pgl2, GroupType, ProjMat};

/// Index of an element of `PGL_2(F_q)` in a [`PglTable`].
pub type Ix = u16;

/// Sorted element indices of a subgroup.
pub type Signature = Vec<Ix>;

/// `PGL_2(F_q)` as a multiplication table over element indices.
///
/// Elements are indexed in the order of [`enumerate_pgl2`]. Field arithmetic
/// is precomputed on canonical field indices, so building the table costs
/// `|G|^2` table lookups and no big-number work.
pub struct PglTable {
    pub field: Field,
    n: usize,
    elements: Vec<ProjMat>,
    index: HashMap<ProjMat, Ix>,
    mul: Vec<Ix>,
    inv: Vec<Ix>,
    order: Vec<u64>,
    identity: Ix,
}

impl PglTable {
    pub fn new(field: &Field) -> Result<Self> {
        let q = field
            .order()
            .ok_or_else(|| Error::UnsupportedField(field.to_string()))? as usize;
        let elements = enumerate_pgl2(field)?;
        let n = elements.len();
        if n >= Ix::MAX as usize {
            return Err(Error::CapExceeded { q: q as u64, cap: 40 });
        }
        let elems = field.elements().expect("finite field");
        let fadd: Vec<usize> = (0..q * q)
            .map(|k| (&elems[k / q] + &elems[k % q]).index().unwrap() as usize)
            .collect();
        let fmul: Vec<usize> = (0..q * q)
            .map(|k| (&elems[k / q] * &elems[k % q]).index().unwrap() as usize)
            .collect();
        let finv: Vec<usize> = (0..q)
            .map(|i| {
                if i == 0 {
                    0
                } else {
                    elems[i].inv().unwrap().index().unwrap() as usize
                }
            })
            .collect();

        let entries: Vec<[usize; 4]> = elements
            .iter()
            .map(|g| {
                let e = g.matrix().entries();
                [0, 1, 2, 3].map(|k| e[k].index().unwrap() as usize)
            })
            .collect();
        let key = |e: &[usize; 4]| ((e[0] * q + e[1]) * q + e[2]) * q + e[3];
        let mut lookup = vec![Ix::MAX; q.pow(4)];
        for (i, e) in entries.iter().enumerate() {
            lookup[key(e)] = i as Ix;
        }
        let product = |a: &[usize; 4], b: &[usize; 4]| -> Ix {
            let m = |x: usize, y: usize| fmul[x * q + y];
            let mut c = [
                fadd[m(a[0], b[0]) * q + m(a[1], b[2])],
                fadd[m(a[0], b[1]) * q + m(a[1], b[3])],
                fadd[m(a[2], b[0]) * q + m(a[3], b[2])],
                fadd[m(a[2], b[1]) * q + m(a[3], b[3])],
            ];
            let lead = *c.iter().find(|&&x| x != 0).expect("invertible product");
            let s = finv[lead];
            for x in c.iter_mut() {
                *x = fmul[*x * q + s];
            }
            lookup[key(&c)]
        };
        let mut mul = Vec::with_capacity(n * n);
        for a in &entries {
            for b in &entries {
                mul.push(product(a, b));
            }
        }
        let identity = lookup[key(&[1, 0, 0, 1])];
        let mut inv = vec![0; n];
        for i in 0..n {
            for j in 0..n {
                if mul[i * n + j] == identity {
                    inv[i] = j as Ix;
                    break;
                }
            }
        }
        let order = (0..n)
            .map(|i| {
                let mut x = i as Ix;
                let mut k = 1;
                while x != identity {
                    x = mul[x as usize * n + i];
                    k += 1;
                }
                k
            })
            .collect();
        let index = elements.iter().enumerate().map(|(i, g)| (g.clone(), i as Ix)).collect();
        Ok(PglTable {
            field: field.clone(),
            n,
            elements,
            index,
            mul,
            inv,
            order,
            identity,
        })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn identity(&self) -> Ix {
        self.identity
    }

    pub fn element(&self, i: Ix) -> &ProjMat {
        &self.elements[i as usize]
    }

    pub fn index_of(&self, g: &ProjMat) -> Option<Ix> {
        self.index.get(g).copied()
    }

    pub fn mul(&self, a: Ix, b: Ix) -> Ix {
        self.mul[a as usize * self.n + b as usize]
    }

    pub fn inv(&self, a: Ix) -> Ix {
        self.inv[a as usize]
    }

    pub fn order(&self, a: Ix) -> u64 {
        self.order[a as usize]
    }

    /// All elements of the given order.
    pub fn elements_of_order(&self, k: u64) -> Vec<Ix> {
        (0..self.n as Ix).filter(|&i| self.order(i) == k).collect()
    }

    /// Closure of `gens`, sorted; `None` once it exceeds `cap` elements.
    pub fn closure(&self, gens: &[Ix], cap: usize) -> Option<Signature> {
        let mut seen = vec![false; self.n];
        let mut list = vec![self.identity];
        seen[self.identity as usize] = true;
        let mut k = 0;
        while k < list.len() {
            let x = list[k];
            k += 1;
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    list.push(y);
                    if list.len() > cap {
                        return None;
                    }
                }
            }
        }
        list.sort_unstable();
        Some(list)
    }

    /// Isomorphism type of a closed subgroup from its element orders.
    pub fn iso_type(&self, h: &[Ix]) -> Option<GroupType> {
        let mut profile = BTreeMap::new();
        for &x in h {
            *profile.entry(self.order(x)).or_insert(0usize) += 1;
        }
        GroupType::from_order_profile(&profile)
    }

    /// `x H x^-1`, sorted.
    pub fn conjugate(&self, x: Ix, h: &[Ix]) -> Signature {
        let xi = self.inv(x);
        let mut out: Signature = h.iter().map(|&y| self.mul(self.mul(x, y), xi)).collect();
        out.sort_unstable();
        out
    }

    /// All conjugates of `H`.
    pub fn conjugation_orbit(&self, h: &[Ix]) -> BTreeSet<Signature> {
        (0..self.n as Ix).map(|x| self.conjugate(x, h)).collect()
    }

    /// Least conjugate of `H` in signature order.
    pub fn canonical_signature(&self, h: &[Ix]) -> Signature {
        self.conjugation_orbit(h).into_iter().next().expect("nonempty orbit")
    }

    /// A small generating set: elements of `H` taken in index order, each
    /// kept only if it is not yet generated.
    pub fn generators(&self, h: &[Ix]) -> Vec<Ix> {
        let mut gens = Vec::new();
        let mut span = vec![self.identity];
        for &x in h {
            if span.binary_search(&x).is_err() {
                gens.push(x);
                span = self.closure(&gens, h.len()).expect("inside H");
            }
        }
        gens
    }

    /// Signature of a subgroup given by elements.
    pub fn signature_of(&self, elements: &[ProjMat]) -> Result<Signature> {
        let mut out = elements
            .iter()
            .map(|g| {
                self.index_of(g)
                    .ok_or_else(|| Error::FieldMismatch(self.field.to_string(), g.field().to_string()))
            })
            .collect::<Result<Signature>>()?;
        out.sort_unstable();
        Ok(out)
    }
}
