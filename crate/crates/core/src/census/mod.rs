//! Exhaustive census of finite subgroups of `PGL_2(F_q)` up to conjugacy,
//! used as ground truth for the classification.

mod table;

use std::collections::BTreeSet;
use std::fmt;
use std::path::Path;

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rayon::prelude::*;

pub use table::{Ix, PglTable, Signature};

use crate::catalog::check_characteristic;
use crate::classify::{conjugacy_classes, ClassDescriptor, ClassList};
use crate::error::{Error, Result};
use crate::fields::{square_class, Field};
use crate::pgl::{are_conjugate_subgroups, subgroup_closure, GroupType, SubgroupRecord, DEFAULT_Q_CAP};
use crate::wire;

/// Search knobs. None of them changes the result.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusOptions {
    /// Worker threads; 0 uses the rayon default.
    pub threads: usize,
    /// Shuffles candidate order when set.
    pub shuffle_seed: Option<u64>,
    /// Largest admissible `q`. The table has `(q^3 - q)^2` entries.
    pub q_cap: u64,
}

impl Default for CensusOptions {
    fn default() -> Self {
        CensusOptions {
            threads: 0,
            shuffle_seed: None,
            q_cap: DEFAULT_Q_CAP,
        }
    }
}

/// Two-generator presentation used to search for a type: `s` of order
/// `s_order`, `t` of order `t_order`, plus a relation on the pair.
#[derive(Debug, Clone, Copy)]
enum Presentation {
    Single(u64),
    /// `s t s^-1 = t^-1`.
    Dihedral(u64),
    /// Distinct commuting involutions.
    Commuting,
    /// `st` of the given order.
    Triangle {
        s_order: u64,
        t_order: u64,
        st_order: u64,
    },
}

fn presentation(group: GroupType) -> Presentation {
    match group {
        GroupType::Cyclic(r) => Presentation::Single(r),
        GroupType::Dihedral(r) => Presentation::Dihedral(r),
        GroupType::Klein4 => Presentation::Commuting,
        GroupType::A4 => Presentation::Triangle {
            s_order: 2,
            t_order: 3,
            st_order: 3,
        },
        GroupType::S4 => Presentation::Triangle {
            s_order: 2,
            t_order: 3,
            st_order: 4,
        },
        GroupType::A5 => Presentation::Triangle {
            s_order: 2,
            t_order: 5,
            st_order: 3,
        },
    }
}

fn thread_pool(threads: usize) -> rayon::ThreadPool {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .expect("thread pool")
}

fn maybe_shuffle(v: &mut [Ix], seed: Option<u64>, salt: u64) {
    if let Some(seed) = seed {
        v.shuffle(&mut StdRng::seed_from_u64(seed ^ salt));
    }
}

/// Every subgroup of the given type, as signatures.
pub fn all_subgroups(table: &PglTable, group: GroupType, opts: &CensusOptions) -> BTreeSet<Signature> {
    let order = group.order() as usize;
    let accept = |gens: &[Ix]| -> Option<Signature> {
        let h = table.closure(gens, order)?;
        (h.len() == order && table.iso_type(&h) == Some(group)).then_some(h)
    };
    let (s_order, t_order) = match presentation(group) {
        Presentation::Single(r) => (r, 0),
        Presentation::Dihedral(r) => (2, r),
        Presentation::Commuting => (2, 2),
        Presentation::Triangle { s_order, t_order, .. } => (s_order, t_order),
    };
    let mut s_list = table.elements_of_order(s_order);
    let mut t_list = if t_order > 0 {
        table.elements_of_order(t_order)
    } else {
        Vec::new()
    };
    maybe_shuffle(&mut s_list, opts.shuffle_seed, 1);
    maybe_shuffle(&mut t_list, opts.shuffle_seed, 2);
    let pres = presentation(group);
    let search = || -> BTreeSet<Signature> {
        s_list
            .par_iter()
            .flat_map_iter(|&s| {
                let found: Vec<Signature> = match pres {
                    Presentation::Single(_) => accept(&[s]).into_iter().collect(),
                    _ => t_list
                        .iter()
                        .filter(|&&t| match pres {
                            Presentation::Dihedral(_) => table.mul(table.mul(s, t), s) == table.inv(t),
                            Presentation::Commuting => s < t && table.mul(s, t) == table.mul(t, s),
                            Presentation::Triangle { st_order, .. } => table.order(table.mul(s, t)) == st_order,
                            Presentation::Single(_) => unreachable!(),
                        })
                        .filter_map(|&t| accept(&[s, t]))
                        .collect(),
                };
                found
            })
            .collect()
    };
    thread_pool(opts.threads).install(search)
}

/// One canonical signature per conjugacy class, sorted.
pub fn classes_of(table: &PglTable, subgroups: &BTreeSet<Signature>) -> Vec<Signature> {
    let mut remaining = subgroups.clone();
    let mut reps = Vec::new();
    while let Some(h) = remaining.iter().next().cloned() {
        let orbit = table.conjugation_orbit(&h);
        for c in &orbit {
            remaining.remove(c);
        }
        reps.push(orbit.into_iter().next().expect("nonempty orbit"));
    }
    reps.sort();
    reps
}

/// A [`SubgroupRecord`] for a signature, with greedily chosen generators.
pub fn record_of(table: &PglTable, h: &[Ix]) -> Result<SubgroupRecord> {
    let gens: Vec<_> = table.generators(h).iter().map(|&g| table.element(g).clone()).collect();
    let gens = if gens.is_empty() {
        vec![table.element(table.identity()).clone()]
    } else {
        gens
    };
    subgroup_closure(&gens, h.len())
}

fn census_field(q: u64, group: GroupType, opts: &CensusOptions) -> Result<Field> {
    if q > opts.q_cap {
        return Err(Error::CapExceeded { q, cap: opts.q_cap });
    }
    let field = Field::finite(q)?;
    check_characteristic(&field, group.order())?;
    Ok(field)
}

/// Conjugacy-class representatives of all subgroups of `PGL_2(F_q)`
/// isomorphic to `group`, in canonical order.
pub fn subgroup_census(q: u64, group: GroupType, opts: &CensusOptions) -> Result<Vec<SubgroupRecord>> {
    let field = census_field(q, group, opts)?;
    let table = PglTable::new(&field)?;
    census_with_table(&table, group, opts)
}

pub fn census_with_table(table: &PglTable, group: GroupType, opts: &CensusOptions) -> Result<Vec<SubgroupRecord>> {
    let subgroups = all_subgroups(table, group, opts);
    classes_of(table, &subgroups)
        .iter()
        .map(|h| record_of(table, h))
        .collect()
}

/// Classification output checked against the census.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusReport {
    pub q: u64,
    pub group: GroupType,
    pub census_classes: Vec<SubgroupRecord>,
    pub predicted: ClassList,
    pub matched: bool,
    /// For each predicted class, the census class conjugate to its representative.
    pub pairing: Vec<(ClassDescriptor, Option<usize>)>,
    pub notes: Vec<String>,
}

impl CensusReport {
    pub fn predicted_count(&self) -> usize {
        self.predicted.len()
    }

    pub fn census_count(&self) -> usize {
        self.census_classes.len()
    }

    /// `predicted 1, census 1, MATCH`.
    pub fn summary(&self) -> String {
        format!(
            "predicted {}, census {}, {}",
            self.predicted_count(),
            self.census_count(),
            if self.matched { "MATCH" } else { "MISMATCH" }
        )
    }
}

/// Runs the classification and the census for `(q, group)` and pairs them.
///
/// The match holds when the counts agree, each predicted representative is
/// conjugate to exactly one census class, the pairing is injective, and for
/// `C2` and `V4` each paired census class has the `det_bar` image its
/// descriptor names.
pub fn verify_classification(q: u64, group: GroupType, opts: &CensusOptions) -> Result<CensusReport> {
    let field = census_field(q, group, opts)?;
    let mut notes = Vec::new();
    let predicted = match conjugacy_classes(&field, group, 0) {
        Ok(list) => list,
        Err(Error::NotEmbeddable { reason, .. }) => {
            notes.push(format!("not embeddable: {reason}"));
            ClassList {
                field: field.clone(),
                group,
                classes: Vec::new(),
                truncated_at: None,
            }
        }
        Err(e) => return Err(e),
    };
    let census = subgroup_census(q, group, opts)?;
    let mut matched = predicted.len() == census.len();
    let mut pairing = Vec::new();
    let mut used = BTreeSet::new();
    for (desc, rep) in &predicted.classes {
        let mut hits = Vec::new();
        for (i, c) in census.iter().enumerate() {
            if are_conjugate_subgroups(rep, c)?.is_some() {
                hits.push(i);
            }
        }
        let paired = match hits.as_slice() {
            [i] => Some(*i),
            _ => {
                matched = false;
                notes.push(format!("{desc}: conjugate to {} census classes", hits.len()));
                None
            }
        };
        if let Some(i) = paired {
            if !used.insert(i) {
                matched = false;
                notes.push(format!("{desc}: census class {i} paired twice"));
            }
            let det_ok = match desc {
                ClassDescriptor::SquareClass(alpha) => {
                    let expected: BTreeSet<_> = [field.one(), square_class(&-alpha)?].into();
                    census[i].det_image == expected.into_iter().collect::<Vec<_>>()
                }
                ClassDescriptor::V4Group(g) => &census[i].det_image == g,
                _ => true,
            };
            if !det_ok {
                matched = false;
                notes.push(format!("{desc}: census det image differs"));
            }
        }
        pairing.push((desc.clone(), paired));
    }
    Ok(CensusReport {
        q,
        group,
        census_classes: census,
        predicted,
        matched,
        pairing,
        notes,
    })
}

/// Outcome of one sweep cell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CellStatus {
    Match,
    Mismatch,
    /// The classification does not cover this case; the census still ran.
    OutOfScope(String),
    Error(String),
}

impl fmt::Display for CellStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CellStatus::Match => write!(f, "MATCH"),
            CellStatus::Mismatch => write!(f, "MISMATCH"),
            CellStatus::OutOfScope(why) => write!(f, "OUT-OF-SCOPE ({why})"),
            CellStatus::Error(e) => write!(f, "ERROR ({e})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepCell {
    pub q: u64,
    pub group: GroupType,
    pub predicted: Option<usize>,
    pub census: Option<usize>,
    pub status: CellStatus,
}

impl fmt::Display for SweepCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |n: Option<usize>| n.map_or("-".to_string(), |n| n.to_string());
        write!(
            f,
            "q={:<3} {:<4} predicted {:>2}  census {:>2}  {}",
            self.q,
            self.group.to_string(),
            show(self.predicted),
            show(self.census),
            self.status
        )
    }
}

/// Types checked for `q`: `C_r` for `2 <= r <= q+1`, `D_r` for
/// `3 <= r <= q+1`, then `V4, A4, S4, A5`, all with order prime to `q`.
pub fn sweep_types(q: u64) -> Vec<GroupType> {
    let p = Field::finite(q).map(|f| f.characteristic()).unwrap_or(q);
    let mut out: Vec<GroupType> = (2..=q + 1).map(GroupType::Cyclic).collect();
    out.extend((3..=q + 1).map(GroupType::Dihedral));
    out.extend([GroupType::Klein4, GroupType::A4, GroupType::S4, GroupType::A5]);
    out.retain(|g| g.order() % p != 0);
    out
}

/// Verifies every `(q, type)` cell, writing each report to `cache_dir` if given.
/// Types whose order the characteristic divides are skipped.
pub fn full_sweep(
    qs: &[u64],
    types: Option<&[GroupType]>,
    opts: &CensusOptions,
    cache_dir: Option<&Path>,
) -> Vec<SweepCell> {
    let mut cells = Vec::new();
    for &q in qs {
        let all = sweep_types(q);
        let list: Vec<GroupType> = match types {
            Some(t) => {
                let p = Field::finite(q).map(|f| f.characteristic()).unwrap_or(q);
                t.iter().copied().filter(|g| g.order() % p != 0).collect()
            }
            None => all,
        };
        for group in list {
            cells.push(sweep_cell(q, group, opts, cache_dir));
        }
    }
    cells
}

fn sweep_cell(q: u64, group: GroupType, opts: &CensusOptions, cache_dir: Option<&Path>) -> SweepCell {
    let cell = |predicted, census, status| SweepCell {
        q,
        group,
        predicted,
        census,
        status,
    };
    match verify_classification(q, group, opts) {
        Ok(report) => {
            if let Some(dir) = cache_dir {
                if let Err(e) = wire::save_report(&wire::cache_path(dir, q, group), &report) {
                    return cell(None, None, CellStatus::Error(e.to_string()));
                }
            }
            let status = if report.matched {
                CellStatus::Match
            } else {
                CellStatus::Mismatch
            };
            cell(Some(report.predicted_count()), Some(report.census_count()), status)
        }
        Err(Error::OutsideScope { reason, .. }) => match subgroup_census(q, group, opts) {
            Ok(c) => cell(None, Some(c.len()), CellStatus::OutOfScope(reason)),
            Err(e) => cell(None, None, CellStatus::Error(e.to_string())),
        },
        Err(e) => cell(None, None, CellStatus::Error(e.to_string())),
    }
}
