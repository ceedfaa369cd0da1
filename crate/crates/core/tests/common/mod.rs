//! Independent oracles shared by the integration tests. Nothing here calls
//! the code it is used to check.
#![allow(dead_code)]

use std::collections::BTreeSet;

use pgl2::pgl::GroupType;

/// Odd prime powers covered by the census sweep.
pub const SWEEP_QS: [u64; 6] = [3, 5, 7, 9, 11, 13];

/// Prime powers up to 13.
pub const SMALL_QS: [u64; 9] = [2, 3, 4, 5, 7, 8, 9, 11, 13];

pub fn characteristic(q: u64) -> u64 {
    (2..=q).find(|p| q.is_multiple_of(*p)).expect("q >= 2")
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Expected number of conjugacy classes of `group` in `PGL_2(F_q)`, q odd,
/// char prime to `|group|`. `None` for dihedral types with `mu_r` not
/// contained in `F_q`, which the classification does not cover.
pub fn expected_classes(q: u64, group: GroupType) -> Option<usize> {
    let divides = |r: u64, n: u64| n.is_multiple_of(r);
    Some(match group {
        GroupType::Cyclic(2) | GroupType::Klein4 => 2,
        GroupType::Cyclic(r) => usize::from(r == 1 || divides(r, q - 1) || divides(r, q + 1)),
        GroupType::Dihedral(r) if divides(r, q - 1) => gcd(2, (q - 1) / r) as usize,
        GroupType::Dihedral(r) if divides(r, q + 1) => return None,
        GroupType::Dihedral(_) => 0,
        GroupType::A4 | GroupType::S4 => 1,
        GroupType::A5 => usize::from(q % 5 == 1 || q % 5 == 4),
    })
}

fn isqrt(n: u64) -> u64 {
    let mut x = (n as f64).sqrt() as u64;
    while x * x > n {
        x -= 1;
    }
    while (x + 1) * (x + 1) <= n {
        x += 1;
    }
    x
}

/// Whether `x^2 = a y^2 + b z^2` has an integer solution with
/// `0 <= y, z <= h`, `(y, z) != (0, 0)`.
pub fn conic_has_point(a: i64, b: i64, h: i64) -> bool {
    for y in 0..=h {
        for z in 0..=h {
            if y == 0 && z == 0 {
                continue;
            }
            let v = a as i128 * (y * y) as i128 + b as i128 * (z * z) as i128;
            if v < 0 {
                continue;
            }
            let v = v as u64;
            let s = isqrt(v);
            if s * s == v {
                return true;
            }
        }
    }
    false
}

pub fn is_squarefree(n: i64) -> bool {
    let n = n.unsigned_abs();
    n != 0 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d * d))
}

/// Signed squarefree integers with `|n| <= bound`, ascending.
pub fn squarefree_upto(bound: i64) -> Vec<i64> {
    (-bound..=bound).filter(|&n| is_squarefree(n)).collect()
}

/// Finite abelian group `Z/m_1 x ... x Z/m_k` with elements encoded in mixed
/// radix (last factor fastest).
pub struct Abelian {
    pub factors: Vec<usize>,
    pub size: usize,
}

impl Abelian {
    pub fn new(factors: &[usize]) -> Self {
        Abelian {
            factors: factors.to_vec(),
            size: factors.iter().product(),
        }
    }

    pub fn digits(&self, mut x: usize) -> Vec<usize> {
        let mut d = vec![0; self.factors.len()];
        for (i, &m) in self.factors.iter().enumerate().rev() {
            d[i] = x % m;
            x /= m;
        }
        d
    }

    pub fn encode(&self, d: &[usize]) -> usize {
        d.iter().zip(&self.factors).fold(0, |acc, (&x, &m)| acc * m + x % m)
    }

    pub fn add(&self, x: usize, y: usize) -> usize {
        let (a, b) = (self.digits(x), self.digits(y));
        self.encode(&a.iter().zip(&b).map(|(u, v)| u + v).collect::<Vec<_>>())
    }

    pub fn table(&self) -> Vec<usize> {
        let n = self.size;
        (0..n * n).map(|k| self.add(k / n, k % n)).collect()
    }

    fn times(&self, k: usize, x: usize) -> usize {
        (0..k).fold(0, |acc, _| self.add(acc, x))
    }

    /// Every automorphism, as the permutation `x -> sigma(x)`.
    pub fn automorphisms(&self) -> Vec<Vec<usize>> {
        let k = self.factors.len();
        let choices: Vec<Vec<usize>> = self
            .factors
            .iter()
            .map(|&m| (0..self.size).filter(|&x| self.times(m, x) == 0).collect())
            .collect();
        let mut out = Vec::new();
        let mut pick = vec![0usize; k];
        loop {
            let images: Vec<usize> = (0..k).map(|i| choices[i][pick[i]]).collect();
            let sigma: Vec<usize> = (0..self.size)
                .map(|x| {
                    let d = self.digits(x);
                    (0..k).fold(0, |acc, i| self.add(acc, self.times(d[i], images[i])))
                })
                .collect();
            let distinct: BTreeSet<usize> = sigma.iter().copied().collect();
            if distinct.len() == self.size {
                out.push(sigma);
            }
            let mut i = 0;
            loop {
                if i == k {
                    return out;
                }
                pick[i] += 1;
                if pick[i] < choices[i].len() {
                    break;
                }
                pick[i] = 0;
                i += 1;
            }
        }
    }
}

/// Abelian groups of order at most `n`, one per isomorphism type.
pub fn abelian_groups_upto(n: usize) -> Vec<Abelian> {
    fn partitions(rest: usize, max: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 1 {
            out.push(acc.clone());
            return;
        }
        for d in (2..=max.min(rest)).rev() {
            if rest.is_multiple_of(d) {
                acc.push(d);
                partitions(rest / d, d, acc, out);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    for size in 1..=n {
        let mut shapes = Vec::new();
        partitions(size, size, &mut Vec::new(), &mut shapes);
        // Invariant factor form m_1 | m_2 | ... picks one factorization per type.
        let mut seen = BTreeSet::new();
        for s in shapes {
            let mut f = s.clone();
            f.sort_unstable();
            if f.windows(2).all(|w| w[1] % w[0] == 0) && seen.insert(f.clone()) {
                out.push(Abelian::new(&f));
            }
        }
    }
    out
}

/// `|H^1(Z/n, M)|` by enumerating crossed homomorphisms `f: Z/n -> M`,
/// `f(g + h) = f(g) + g.f(h)`, and dividing by the principal ones.
pub fn crossed_hom_h1(group: &Abelian, sigma: &[usize], n: usize) -> usize {
    let m = group.size;
    let act = |g: usize, x: usize| (0..g).fold(x, |y, _| sigma[y]);
    let neg = |x: usize| (0..m).find(|&y| group.add(x, y) == 0).expect("group");
    let mut count = 0usize;
    let mut f = vec![0usize; n];
    fn extend(
        k: usize,
        n: usize,
        m: usize,
        f: &mut Vec<usize>,
        ok: &dyn Fn(&[usize], usize) -> bool,
        count: &mut usize,
    ) {
        if k == n {
            *count += 1;
            return;
        }
        for x in 0..m {
            f[k] = x;
            if ok(f, k) {
                extend(k + 1, n, m, f, ok, count);
            }
        }
    }
    // Checks every identity whose three arguments are already assigned.
    let ok = |f: &[usize], k: usize| {
        (0..=k).all(|g| {
            (0..=k).all(|h| {
                let s = (g + h) % n;
                s > k || f[s] == group.add(f[g], act(g, f[h]))
            })
        })
    };
    extend(0, n, m, &mut f, &ok, &mut count);
    let principal: BTreeSet<Vec<usize>> = (0..m)
        .map(|x| (0..n).map(|g| group.add(act(g, x), neg(x))).collect())
        .collect();
    count / principal.len()
}
