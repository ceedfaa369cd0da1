//! First cohomology of finite cyclic groups and a finite-level Kummer check.

use crate::error::{Error, Result};
use crate::fields::{mu_r, Elem, Field};

/// A finite abelian group `M` (written additively, elements `0..m`) with an
/// automorphism `sigma` of order dividing `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicModule {
    op: Vec<usize>,
    m: usize,
    zero: usize,
    neg: Vec<usize>,
    sigma: Vec<usize>,
    n: u64,
}

impl CyclicModule {
    /// Validates the group table and the action.
    pub fn new(op: Vec<usize>, zero: usize, sigma: Vec<usize>, n: u64) -> Result<Self> {
        let m = sigma.len();
        let bad_group = |why: &str| Error::InvalidGroup(format!("module table: {why}"));
        if m == 0 || op.len() != m * m || zero >= m || op.iter().any(|&x| x >= m) {
            return Err(bad_group("table shape"));
        }
        let add = |a: usize, b: usize| op[a * m + b];
        if (0..m).any(|a| add(zero, a) != a) {
            return Err(bad_group("no identity"));
        }
        for a in 0..m {
            for b in 0..m {
                if add(a, b) != add(b, a) {
                    return Err(bad_group("not commutative"));
                }
                for c in 0..m {
                    if add(add(a, b), c) != add(a, add(b, c)) {
                        return Err(bad_group("not associative"));
                    }
                }
            }
        }
        let neg = (0..m)
            .map(|a| {
                (0..m)
                    .find(|&b| add(a, b) == zero)
                    .ok_or_else(|| bad_group("no inverse"))
            })
            .collect::<Result<Vec<_>>>()?;
        if n == 0 {
            return Err(Error::InvalidAction("acting group of order 0".into()));
        }
        let mut hit = vec![false; m];
        for &s in &sigma {
            if s >= m || std::mem::replace(&mut hit[s], true) {
                return Err(Error::InvalidAction("sigma is not a bijection".into()));
            }
        }
        for a in 0..m {
            for b in 0..m {
                if sigma[add(a, b)] != add(sigma[a], sigma[b]) {
                    return Err(Error::InvalidAction("sigma is not a homomorphism".into()));
                }
            }
        }
        let module = CyclicModule {
            op,
            m,
            zero,
            neg,
            sigma,
            n,
        };
        if (0..m).any(|a| module.sigma_pow(a, n) != a) {
            return Err(Error::InvalidAction(format!("sigma^{n} is not the identity")));
        }
        Ok(module)
    }

    /// `Z/m` with `sigma(x) = k x`.
    pub fn integers_mod(m: usize, k: usize, n: u64) -> Result<Self> {
        let op = (0..m * m).map(|i| (i / m + i % m) % m).collect();
        let sigma = (0..m).map(|x| (x * k) % m).collect();
        CyclicModule::new(op, 0, sigma, n)
    }

    /// `M1 x M2` with the diagonal action; both must share `n`.
    pub fn product(a: &CyclicModule, b: &CyclicModule) -> Result<Self> {
        if a.n != b.n {
            return Err(Error::InvalidAction("factors have different n".into()));
        }
        let m = a.m * b.m;
        let split = |x: usize| (x / b.m, x % b.m);
        let op = (0..m * m)
            .map(|i| {
                let ((x1, x2), (y1, y2)) = (split(i / m), split(i % m));
                a.add(x1, y1) * b.m + b.add(x2, y2)
            })
            .collect();
        let sigma = (0..m)
            .map(|x| {
                let (x1, x2) = split(x);
                a.sigma[x1] * b.m + b.sigma[x2]
            })
            .collect();
        CyclicModule::new(op, a.zero * b.m + b.zero, sigma, a.n)
    }

    /// `mu_r` inside `F_{q^m}` with the Frobenius `x -> x^q`, `n = m`.
    pub fn frobenius_on_roots_of_unity(q: u64, r: u64, m: u32) -> Result<Self> {
        let big = Field::finite(q.pow(m))?;
        if !(q.pow(m) - 1).is_multiple_of(r) {
            return Err(Error::MissingRootsOfUnity {
                field: big.to_string(),
                r,
            });
        }
        let roots = mu_r(&big, r);
        let pos = |x: &Elem| roots.iter().position(|y| y == x).expect("closed");
        let k = roots.len();
        let op = (0..k * k).map(|i| pos(&(&roots[i / k] * &roots[i % k]))).collect();
        let sigma = roots.iter().map(|x| pos(&x.pow(q))).collect();
        CyclicModule::new(op, pos(&big.one()), sigma, m as u64)
    }

    pub fn len(&self) -> usize {
        self.m
    }

    pub fn is_empty(&self) -> bool {
        self.m == 0
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.op[a * self.m + b]
    }

    pub fn neg(&self, a: usize) -> usize {
        self.neg[a]
    }

    pub fn sigma(&self, a: usize) -> usize {
        self.sigma[a]
    }

    pub fn sigma_pow(&self, a: usize, k: u64) -> usize {
        (0..k).fold(a, |x, _| self.sigma[x])
    }

    /// `N(a) = a + sigma a + ... + sigma^{n-1} a`.
    pub fn norm(&self, a: usize) -> usize {
        let mut acc = self.zero;
        let mut x = a;
        for _ in 0..self.n {
            acc = self.add(acc, x);
            x = self.sigma[x];
        }
        acc
    }

    /// `(sigma - 1) a`.
    pub fn coboundary(&self, a: usize) -> usize {
        self.add(self.sigma[a], self.neg[a])
    }
}

/// `H^1(<sigma>, M) = ker N / im(sigma - 1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct H1 {
    pub kernel: Vec<usize>,
    pub image: Vec<usize>,
    /// Least element of each coset of the image in the kernel.
    pub reps: Vec<usize>,
}

impl H1 {
    pub fn order(&self) -> usize {
        self.reps.len()
    }
}

pub fn h1_cyclic(module: &CyclicModule) -> H1 {
    let m = module.len();
    let kernel: Vec<usize> = (0..m).filter(|&a| module.norm(a) == module.zero()).collect();
    let mut image: Vec<usize> = (0..m).map(|a| module.coboundary(a)).collect();
    image.sort_unstable();
    image.dedup();
    let mut seen = vec![false; m];
    let mut reps = Vec::new();
    for &a in &kernel {
        if !seen[a] {
            reps.push(a);
            for &b in &image {
                seen[module.add(a, b)] = true;
            }
        }
    }
    H1 { kernel, image, reps }
}

/// One level `F_{q^m}` of the Kummer comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KummerLevel {
    pub m: u64,
    /// Classes of `F_q*/F_q*^r` that become `r`-th powers in `F_{q^m}`.
    pub kernel: u64,
    /// `|H^1(Gal(F_{q^m}/F_q), mu_r)|`.
    pub h1: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KummerCheck {
    pub q: u64,
    pub r: u64,
    /// `|F_q*/F_q*^r|`.
    pub index: u64,
    pub levels: Vec<KummerLevel>,
    pub passed: bool,
}

/// Compares `F_q*/F_q*^r` with Galois cohomology at finite levels.
///
/// With `mu_r` inside `F_q`, the classes of `F_q*/F_q*^r` killed in
/// `F_{q^m}` correspond to `H^1(Gal(F_{q^m}/F_q), mu_r)`, with Frobenius
/// acting on `mu_r` by `zeta -> zeta^q`. Levels `m = 1, 2, 3` and `m = r`
/// are checked; at `m = r` every class dies and both sides equal `r`.
pub fn kummer_check(q: u64, r: u64) -> Result<KummerCheck> {
    let field = Field::finite(q)?;
    if r == 0 || !(q - 1).is_multiple_of(r) {
        return Err(Error::HypothesisFailure(format!(
            "{r} does not divide q - 1 = {}",
            q - 1
        )));
    }
    let units = field.units().expect("finite field");
    let mut powers: Vec<_> = units.iter().map(|x| x.pow(r)).collect();
    powers.sort();
    powers.dedup();
    let index = (q - 1) / powers.len() as u64;
    // One unit from each coset of F_q*^r.
    let mut reps = Vec::new();
    for x in &units {
        let x_inv = x.inv()?;
        if !reps.iter().any(|c: &Elem| powers.binary_search(&(c * &x_inv)).is_ok()) {
            reps.push(x.clone());
        }
    }
    let mut ms = vec![1, 2, 3];
    if r > 3 {
        ms.push(r);
    }
    let mut levels = Vec::new();
    for m in ms {
        // x is an r-th power in F_{q^m} iff x^((q^m - 1)/r) = 1; reduce mod q - 1.
        let qm = (q as u128).pow(m as u32);
        let e = (((qm - 1) / r as u128) % (q as u128 - 1)) as u64;
        let kernel = reps.iter().filter(|x| x.pow(e).is_one()).count() as u64;
        let module = CyclicModule::integers_mod(r as usize, (q % r) as usize, m)?;
        let h1 = h1_cyclic(&module).order() as u64;
        levels.push(KummerLevel { m, kernel, h1 });
    }
    let passed =
        index == r && levels.iter().all(|l| l.kernel == l.h1) && levels.iter().any(|l| l.m == r && l.kernel == r);
    Ok(KummerCheck {
        q,
        r,
        index,
        levels,
        passed,
    })
}
