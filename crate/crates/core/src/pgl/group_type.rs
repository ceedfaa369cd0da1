use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::fields::divisors;

/// Isomorphism types of finite subgroups of `PGL_2` of order prime to the
/// characteristic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupType {
    Cyclic(u64),
    /// Dihedral of order `2r`, `r >= 3`. `D_2` is always [`GroupType::Klein4`].
    Dihedral(u64),
    Klein4,
    A4,
    S4,
    A5,
}

impl GroupType {
    pub fn cyclic(r: u64) -> Result<Self> {
        if r == 0 {
            return Err(Error::InvalidGroup("C0".into()));
        }
        Ok(GroupType::Cyclic(r))
    }

    /// `D_r`; `r = 2` yields `Klein4`.
    pub fn dihedral(r: u64) -> Result<Self> {
        match r {
            0 | 1 => Err(Error::InvalidGroup(format!("D{r}"))),
            2 => Ok(GroupType::Klein4),
            _ => Ok(GroupType::Dihedral(r)),
        }
    }

    pub fn order(&self) -> u64 {
        match *self {
            GroupType::Cyclic(r) => r,
            GroupType::Dihedral(r) => 2 * r,
            GroupType::Klein4 => 4,
            GroupType::A4 => 12,
            GroupType::S4 => 24,
            GroupType::A5 => 60,
        }
    }

    /// Number of elements of each order.
    pub fn order_profile(&self) -> BTreeMap<u64, usize> {
        let cyclic =
            |n: u64| -> BTreeMap<u64, usize> { divisors(n).into_iter().map(|d| (d, euler_phi(d) as usize)).collect() };
        match *self {
            GroupType::Cyclic(r) => cyclic(r),
            GroupType::Dihedral(r) => {
                let mut m = cyclic(r);
                *m.entry(2).or_default() += r as usize;
                m
            }
            GroupType::Klein4 => BTreeMap::from([(1, 1), (2, 3)]),
            GroupType::A4 => BTreeMap::from([(1, 1), (2, 3), (3, 8)]),
            GroupType::S4 => BTreeMap::from([(1, 1), (2, 9), (3, 8), (4, 6)]),
            GroupType::A5 => BTreeMap::from([(1, 1), (2, 15), (3, 20), (5, 24)]),
        }
    }

    /// Recognizes a group from its order and element-order multiset.
    pub fn from_order_profile(profile: &BTreeMap<u64, usize>) -> Option<Self> {
        let n: usize = profile.values().sum();
        let n = n as u64;
        let mut candidates = vec![GroupType::Cyclic(n)];
        if n.is_multiple_of(2) && n >= 6 {
            candidates.push(GroupType::Dihedral(n / 2));
        }
        candidates.extend(match n {
            4 => vec![GroupType::Klein4],
            12 => vec![GroupType::A4],
            24 => vec![GroupType::S4],
            60 => vec![GroupType::A5],
            _ => vec![],
        });
        candidates.into_iter().find(|t| &t.order_profile() == profile)
    }

    /// Lowercase name used in cache file names, e.g. `klein4`, `c3`, `d5`.
    pub fn slug(&self) -> String {
        match self {
            GroupType::Klein4 => "klein4".into(),
            other => other.to_string().to_lowercase(),
        }
    }

    /// Parses `C<r>`, `D<r>`, `V4`, `A4`, `S4`, `A5` (case-insensitive, plus
    /// `klein4`). Returns a notice when `D2` is redirected to `V4`.
    pub fn parse_with_notice(text: &str) -> Result<(Self, Option<String>)> {
        let t = text.trim().to_ascii_uppercase();
        let bad = || Error::InvalidGroup(text.to_string());
        let parsed = match t.as_str() {
            "V4" | "KLEIN4" => GroupType::Klein4,
            "A4" => GroupType::A4,
            "S4" => GroupType::S4,
            "A5" => GroupType::A5,
            _ => {
                let (head, num) = t.split_at(1);
                let r: u64 = num.parse().map_err(|_| bad())?;
                match head {
                    "C" => GroupType::cyclic(r)?,
                    "D" => {
                        let g = GroupType::dihedral(r)?;
                        if r == 2 {
                            return Ok((g, Some("D2 is the Klein four-group; using V4".into())));
                        }
                        g
                    }
                    _ => return Err(bad()),
                }
            }
        };
        Ok((parsed, None))
    }
}

impl FromStr for GroupType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GroupType::parse_with_notice(s).map(|(g, _)| g)
    }
}

impl fmt::Display for GroupType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupType::Cyclic(r) => write!(f, "C{r}"),
            GroupType::Dihedral(r) => write!(f, "D{r}"),
            GroupType::Klein4 => write!(f, "V4"),
            GroupType::A4 => write!(f, "A4"),
            GroupType::S4 => write!(f, "S4"),
            GroupType::A5 => write!(f, "A5"),
        }
    }
}

pub fn euler_phi(n: u64) -> u64 {
    (1..=n).filter(|&k| num_integer::gcd(k, n) == 1).count() as u64
}
