//! Brute-force oracles shared by the integration tests. They work from the
//! Cartan matrix alone and never call the library's root, pairing or
//! dimension routines.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use flagquant::rootsys::{Family, RootSystem};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Q = BigRational;

pub fn qi(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// The rank ≤ 3 systems of the acceptance sweep.
pub fn small_systems() -> Vec<(Family, usize)> {
    vec![
        (Family::A, 1),
        (Family::A, 2),
        (Family::A, 3),
        (Family::B, 2),
        (Family::B, 3),
        (Family::C, 3),
        (Family::D, 3),
        (Family::G, 2),
    ]
}

pub fn subsets(rank: usize) -> Vec<Vec<usize>> {
    (0u32..(1 << rank))
        .map(|mask| (0..rank).filter(|i| mask & (1 << i) != 0).collect())
        .collect()
}

/// All integer vectors with entries in `[lo, hi]` and zeros on `fixed`.
pub fn box_weights(rank: usize, lo: i64, hi: i64, fixed: &[usize]) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for i in 0..rank {
        let range: Vec<i64> = if fixed.contains(&i) { vec![0] } else { (lo..=hi).collect() };
        out = out
            .into_iter()
            .flat_map(|v| {
                range.iter().map(move |&x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

pub struct Oracle {
    cartan: Vec<Vec<i64>>,
    rank: usize,
    /// `(α_i, α_i)/2`.
    d: Vec<Q>,
    /// Positive roots in the simple-root basis.
    pos_roots: Vec<Vec<i64>>,
    cartan_inv: Vec<Vec<Q>>,
}

impl Oracle {
    pub fn new(sys: &RootSystem) -> Self {
        let cartan = sys.cartan().to_vec();
        let rank = cartan.len();
        let d = symmetrizer(&cartan);
        let pos_roots = roots_by_orbit(&cartan);
        let cartan_inv = invert(&cartan);
        Self {
            cartan,
            rank,
            d,
            pos_roots,
            cartan_inv,
        }
    }

    pub fn num_positive_roots(&self) -> usize {
        self.pos_roots.len()
    }

    /// `s_i` on fundamental coordinates: `λ − λ_i α_i`.
    pub fn reflect(&self, i: usize, lam: &[i64]) -> Vec<i64> {
        (0..self.rank)
            .map(|j| lam[j] - lam[i] * self.cartan[j][i])
            .collect()
    }

    /// BFS over the Weyl orbit; returns the orbit with word lengths.
    pub fn orbit(&self, lam: &[i64]) -> BTreeMap<Vec<i64>, usize> {
        let mut seen = BTreeMap::new();
        let mut queue = VecDeque::new();
        seen.insert(lam.to_vec(), 0);
        queue.push_back(lam.to_vec());
        while let Some(v) = queue.pop_front() {
            let dist = seen[&v];
            for i in 0..self.rank {
                let w = self.reflect(i, &v);
                if !seen.contains_key(&w) {
                    seen.insert(w.clone(), dist + 1);
                    queue.push_back(w);
                }
            }
        }
        seen
    }

    /// `None` if `λ+δ` has no strictly dominant element in its orbit,
    /// otherwise `(k, ζ)` with `k` the BFS distance to it.
    pub fn bbw(&self, lam: &[i64]) -> Option<(usize, Vec<i64>)> {
        let shifted: Vec<i64> = lam.iter().map(|x| x + 1).collect();
        let orbit = self.orbit(&shifted);
        orbit
            .iter()
            .find(|(v, _)| v.iter().all(|&x| x > 0))
            .map(|(v, &k)| (k, v.iter().map(|x| x - 1).collect()))
    }

    fn dominant_of(&self, lam: &[i64]) -> Vec<i64> {
        let mut v = lam.to_vec();
        while let Some(i) = v.iter().position(|&x| x < 0) {
            v = self.reflect(i, &v);
        }
        v
    }

    /// Simple-root coordinates of a weight.
    pub fn root_coords(&self, lam: &[i64]) -> Vec<Q> {
        (0..self.rank)
            .map(|i| (0..self.rank).fold(Q::zero(), |acc, j| acc + &self.cartan_inv[i][j] * qi(lam[j])))
            .collect()
    }

    pub fn root_to_weight(&self, n: &[i64]) -> Vec<i64> {
        (0..self.rank)
            .map(|i| (0..self.rank).map(|j| self.cartan[i][j] * n[j]).sum())
            .collect()
    }

    /// Positive roots whose support leaves `theta`.
    pub fn complement(&self, theta: &[usize]) -> Vec<Vec<i64>> {
        self.pos_roots
            .iter()
            .filter(|r| r.iter().enumerate().any(|(i, &c)| c != 0 && !theta.contains(&i)))
            .cloned()
            .collect()
    }

    /// Sum of the complement roots in fundamental coordinates.
    pub fn two_delta_prime(&self, theta: &[usize]) -> Vec<i64> {
        self.complement(theta).iter().fold(vec![0; self.rank], |acc, r| {
            acc.iter().zip(self.root_to_weight(r)).map(|(a, b)| a + b).collect()
        })
    }

    /// `−w₀ζ` as minus the antidominant element of the orbit.
    pub fn neg_w0(&self, zeta: &[i64]) -> Vec<i64> {
        let lowest = self
            .orbit(zeta)
            .into_keys()
            .find(|v| v.iter().all(|&x| x <= 0))
            .expect("orbit contains an antidominant weight");
        lowest.iter().map(|x| -x).collect()
    }

    /// Weyl's product formula `∏ (ζ+ρ, α)/(ρ, α)` over the orbit-generated roots.
    pub fn weyl_dim(&self, zeta: &[i64]) -> BigInt {
        let rho = vec![1i64; self.rank];
        let shifted: Vec<i64> = zeta.iter().map(|x| x + 1).collect();
        let mut acc = Q::one();
        for r in &self.pos_roots {
            let alpha = self.root_to_weight(r);
            acc = acc * self.form(&shifted, &alpha) / self.form(&rho, &alpha);
        }
        assert!(acc.is_integer());
        acc.to_integer()
    }

    /// `(λ, μ)` with `(α_i, α_i) = 2 d_i`.
    pub fn form(&self, lam: &[i64], mu: &[i64]) -> Q {
        let c = self.root_coords(mu);
        (0..self.rank).fold(Q::zero(), |acc, j| acc + &c[j] * qi(lam[j]) * &self.d[j])
    }

    fn le(&self, mu: &[i64], zeta: &[i64]) -> bool {
        let diff: Vec<i64> = zeta.iter().zip(mu).map(|(a, b)| a - b).collect();
        self.root_coords(&diff)
            .iter()
            .all(|c| c.is_integer() && !c.is_negative())
    }

    /// `dim V(ζ)` by Freudenthal multiplicities and orbit sizes.
    pub fn freudenthal_dim(&self, zeta: &[i64]) -> BigInt {
        let orbit = self.orbit(zeta);
        let lowest = orbit
            .keys()
            .find(|v| v.iter().all(|&x| x <= 0))
            .expect("orbit contains an antidominant weight")
            .clone();
        let depth: Vec<i64> = self
            .root_coords(&zeta.iter().zip(&lowest).map(|(a, b)| a - b).collect::<Vec<_>>())
            .iter()
            .map(|c| c.to_integer().try_into().unwrap())
            .collect();
        let mut dominant: Vec<(i64, Vec<i64>)> = Vec::new();
        let mut n = vec![0i64; self.rank];
        loop {
            let sub = self.root_to_weight(&n);
            let mu: Vec<i64> = zeta.iter().zip(&sub).map(|(a, b)| a - b).collect();
            if mu.iter().all(|&x| x >= 0) {
                dominant.push((n.iter().sum(), mu));
            }
            let mut i = 0;
            loop {
                if i == self.rank {
                    break;
                }
                n[i] += 1;
                if n[i] <= depth[i] {
                    break;
                }
                n[i] = 0;
                i += 1;
            }
            if i == self.rank {
                break;
            }
        }
        dominant.sort();
        let rho = vec![1i64; self.rank];
        let shift = |v: &[i64]| v.iter().zip(&rho).map(|(a, b)| a + b).collect::<Vec<i64>>();
        let top = self.form(&shift(zeta), &shift(zeta));
        let mut mult: BTreeMap<Vec<i64>, Q> = BTreeMap::new();
        let pos_weights: Vec<Vec<i64>> = self.pos_roots.iter().map(|r| self.root_to_weight(r)).collect();
        for (_, mu) in &dominant {
            if mu == zeta {
                mult.insert(mu.clone(), Q::one());
                continue;
            }
            let mut acc = Q::zero();
            for alpha in &pos_weights {
                let mut k = 1;
                loop {
                    let nu: Vec<i64> = mu.iter().zip(alpha).map(|(a, b)| a + k * b).collect();
                    let dom = self.dominant_of(&nu);
                    if !self.le(&dom, zeta) {
                        break;
                    }
                    let m = mult.get(&dom).cloned().unwrap_or_else(Q::zero);
                    acc += m * self.form(&nu, alpha);
                    k += 1;
                }
            }
            let denom = &top - self.form(&shift(mu), &shift(mu));
            mult.insert(mu.clone(), qi(2) * acc / denom);
        }
        let mut total = Q::zero();
        for (_, mu) in &dominant {
            total += &mult[mu] * qi(self.orbit(mu).len() as i64);
        }
        assert!(total.is_integer());
        total.to_integer()
    }
}

fn symmetrizer(cartan: &[Vec<i64>]) -> Vec<Q> {
    let n = cartan.len();
    let mut d: Vec<Option<Q>> = vec![None; n];
    d[0] = Some(Q::one());
    let mut changed = true;
    while changed {
        changed = false;
        for i in 0..n {
            for j in 0..n {
                if let (Some(di), None) = (d[i].clone(), &d[j]) {
                    if cartan[i][j] != 0 {
                        d[j] = Some(di * qi(cartan[i][j]) / qi(cartan[j][i]));
                        changed = true;
                    }
                }
            }
        }
    }
    d.into_iter().map(|x| x.expect("connected diagram")).collect()
}

/// Positive roots as the positive part of the Weyl orbits of the simple roots.
fn roots_by_orbit(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = cartan.len();
    let mut all = BTreeSet::new();
    let mut queue = VecDeque::new();
    for i in 0..n {
        let mut e = vec![0i64; n];
        e[i] = 1;
        all.insert(e.clone());
        queue.push_back(e);
    }
    while let Some(b) = queue.pop_front() {
        for i in 0..n {
            let pairing: i64 = (0..n).map(|j| b[j] * cartan[i][j]).sum();
            let mut c = b.clone();
            c[i] -= pairing;
            if all.insert(c.clone()) {
                queue.push_back(c);
            }
        }
    }
    all.into_iter().filter(|r| r.iter().all(|&x| x >= 0)).collect()
}

fn invert(m: &[Vec<i64>]) -> Vec<Vec<Q>> {
    let n = m.len();
    let mut a: Vec<Vec<Q>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<Q> = row.iter().map(|&x| qi(x)).collect();
            r.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero()).expect("invertible");
        a.swap(col, piv);
        let inv = a[col][col].recip();
        for x in a[col].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                let pivot_row = a[col].clone();
                for (x, p) in a[r].iter_mut().zip(pivot_row) {
                    *x = &*x - &f * p;
                }
            }
        }
    }
    a.into_iter().map(|r| r[n..].to_vec()).collect()
}
