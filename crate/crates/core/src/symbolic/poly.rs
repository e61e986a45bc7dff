//! Sparse polynomials in `z` and `z̄` over the Gaussian rationals.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::gauss::{self, GaussRational};

/// Exponent pair `z^z · z̄^zbar`. Ordered graded-lexicographically with
/// `z < z̄`: total degree first, then the `z̄` exponent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Mono {
    pub z: u32,
    pub zbar: u32,
}

impl Mono {
    pub const ONE: Mono = Mono { z: 0, zbar: 0 };

    pub fn new(z: u32, zbar: u32) -> Self {
        Self { z, zbar }
    }

    pub fn degree(&self) -> u32 {
        self.z + self.zbar
    }

    fn divides(&self, other: &Mono) -> bool {
        self.z <= other.z && self.zbar <= other.zbar
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then(self.zbar.cmp(&other.zbar))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: BTreeMap<Mono, GaussRational>,
}

impl Poly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(GaussRational::one())
    }

    pub fn constant(c: GaussRational) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: GaussRational, z: u32, zbar: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Mono::new(z, zbar), c);
        }
        Self { terms }
    }

    pub fn z() -> Self {
        Self::monomial(GaussRational::one(), 1, 0)
    }

    pub fn zbar() -> Self {
        Self::monomial(GaussRational::one(), 0, 1)
    }

    /// `1 + z z̄`.
    pub fn one_plus_t() -> Self {
        let mut p = Self::one();
        p.add_term(Mono::new(1, 1), GaussRational::one());
        p
    }

    pub fn from_terms(iter: impl IntoIterator<Item = (Mono, GaussRational)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in iter {
            p.add_term(m, c);
        }
        p
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Mono, &GaussRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: Mono) -> GaussRational {
        self.terms.get(&m).cloned().unwrap_or_else(GaussRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Mono::ONE)
                .is_some_and(|c| c.is_one())
    }

    /// The constant value, if the polynomial has no variable terms.
    pub fn as_constant(&self) -> Option<GaussRational> {
        match self.terms.len() {
            0 => Some(GaussRational::zero()),
            1 => self.terms.get(&Mono::ONE).cloned(),
            _ => None,
        }
    }

    pub fn leading(&self) -> Option<(&Mono, &GaussRational)> {
        self.terms.iter().next_back()
    }

    pub fn degree_z(&self) -> u32 {
        self.terms.keys().map(|m| m.z).max().unwrap_or(0)
    }

    pub fn degree_zbar(&self) -> u32 {
        self.terms.keys().map(|m| m.zbar).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, m: Mono, c: GaussRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &GaussRational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    fn mul_term(&self, m: Mono, c: &GaussRational) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(k, a)| (Mono::new(k.z + m.z, k.zbar + m.zbar), a * c))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut acc = Poly::one();
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn diff_z(&self) -> Poly {
        Poly::from_terms(
            self.terms
                .iter()
                .filter(|(m, _)| m.z > 0)
                .map(|(m, c)| (Mono::new(m.z - 1, m.zbar), c * gauss::int(m.z as i64))),
        )
    }

    pub fn diff_zbar(&self) -> Poly {
        Poly::from_terms(
            self.terms
                .iter()
                .filter(|(m, _)| m.zbar > 0)
                .map(|(m, c)| (Mono::new(m.z, m.zbar - 1), c * gauss::int(m.zbar as i64))),
        )
    }

    /// Swaps `z ↔ z̄` and conjugates coefficients.
    pub fn conjugate(&self) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (Mono::new(m.zbar, m.z), c.conj()))
                .collect(),
        }
    }

    /// Evaluates with independent values for `z` and `z̄`.
    pub fn eval(&self, z: &GaussRational, zbar: &GaussRational) -> GaussRational {
        let mut zp: Vec<GaussRational> = vec![GaussRational::one()];
        let mut wp: Vec<GaussRational> = vec![GaussRational::one()];
        let mut acc = GaussRational::zero();
        for (m, c) in &self.terms {
            while zp.len() <= m.z as usize {
                let next = zp.last().unwrap() * z;
                zp.push(next);
            }
            while wp.len() <= m.zbar as usize {
                let next = wp.last().unwrap() * zbar;
                wp.push(next);
            }
            acc += c * &zp[m.z as usize] * &wp[m.zbar as usize];
        }
        acc
    }

    /// Divides so that the leading coefficient becomes one.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some((_, c)) => {
                let inv = c.inv();
                self.scale(&inv)
            }
        }
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`.
    pub fn exact_div(&self, d: &Poly) -> Option<Poly> {
        let (dm, dc) = d.leading()?;
        let dm = *dm;
        let dinv = dc.inv();
        if d.terms.len() == 1 {
            let mut out = BTreeMap::new();
            for (m, c) in &self.terms {
                if !dm.divides(m) {
                    return None;
                }
                out.insert(Mono::new(m.z - dm.z, m.zbar - dm.zbar), c * &dinv);
            }
            return Some(Poly { terms: out });
        }
        let mut rem = self.clone();
        let mut quot = Poly::zero();
        while let Some((rm, rc)) = rem.leading() {
            if !dm.divides(rm) {
                return None;
            }
            let m = Mono::new(rm.z - dm.z, rm.zbar - dm.zbar);
            let c = rc * &dinv;
            rem = &rem - &d.mul_term(m, &c);
            quot.add_term(m, c);
        }
        Some(quot)
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        let (big, small) = if self.terms.len() >= rhs.terms.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = big.clone();
        for (m, c) in &small.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;

    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = Poly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(Mono::new(ma.z + mb.z, ma.zbar + mb.zbar), ca * cb);
            }
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

// ---------------------------------------------------------------------------
// gcd: recursive representation in K[z][z̄] with K = Q(i)

type UPoly = Vec<GaussRational>;

fn u_trim(p: &mut UPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn u_is_zero(p: &UPoly) -> bool {
    p.is_empty()
}

fn u_mul(a: &UPoly, b: &UPoly) -> UPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![GaussRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    u_trim(&mut out);
    out
}

fn u_sub(a: &UPoly, b: &UPoly) -> UPoly {
    let n = a.len().max(b.len());
    let mut out: UPoly = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(GaussRational::zero);
            match b.get(i) {
                Some(y) => x - y,
                None => x,
            }
        })
        .collect();
    u_trim(&mut out);
    out
}

fn u_divrem(a: &UPoly, b: &UPoly) -> (UPoly, UPoly) {
    let mut r = a.clone();
    if b.len() > r.len() {
        return (Vec::new(), r);
    }
    let lb_inv = b.last().expect("nonzero divisor").inv();
    let mut q = vec![GaussRational::zero(); r.len() - b.len() + 1];
    while !r.is_empty() && r.len() >= b.len() {
        let shift = r.len() - b.len();
        let c = r.last().unwrap() * &lb_inv;
        for (j, y) in b.iter().enumerate() {
            r[shift + j] -= &c * y;
        }
        q[shift] = c;
        r.pop();
        u_trim(&mut r);
    }
    u_trim(&mut q);
    (q, r)
}

fn u_monic(p: &UPoly) -> UPoly {
    match p.last() {
        None => Vec::new(),
        Some(l) => {
            let inv = l.inv();
            p.iter().map(|c| c * &inv).collect()
        }
    }
}

fn u_gcd(a: &UPoly, b: &UPoly) -> UPoly {
    let mut x = a.clone();
    let mut y = b.clone();
    while !u_is_zero(&y) {
        let (_, r) = u_divrem(&x, &y);
        x = y;
        y = u_monic(&r);
    }
    u_monic(&x)
}

type RPoly = Vec<UPoly>;

fn to_rec(p: &Poly) -> RPoly {
    let mut out: RPoly = vec![Vec::new(); p.degree_zbar() as usize + 1];
    for (m, c) in p.terms() {
        let row = &mut out[m.zbar as usize];
        if row.len() <= m.z as usize {
            row.resize(m.z as usize + 1, GaussRational::zero());
        }
        row[m.z as usize] = c.clone();
    }
    while out.last().is_some_and(|r| r.is_empty()) {
        out.pop();
    }
    out
}

fn from_rec(r: &RPoly) -> Poly {
    Poly::from_terms(r.iter().enumerate().flat_map(|(w, row)| {
        row.iter()
            .enumerate()
            .map(move |(z, c)| (Mono::new(z as u32, w as u32), c.clone()))
    }))
}

fn r_trim(r: &mut RPoly) {
    for row in r.iter_mut() {
        u_trim(row);
    }
    while r.last().is_some_and(|row| row.is_empty()) {
        r.pop();
    }
}

fn r_content(r: &RPoly) -> UPoly {
    let mut g: UPoly = Vec::new();
    for row in r {
        if row.is_empty() {
            continue;
        }
        g = if g.is_empty() { u_monic(row) } else { u_gcd(&g, row) };
        if g.len() == 1 {
            break;
        }
    }
    g
}

fn r_div_content(r: &RPoly, c: &UPoly) -> RPoly {
    r.iter()
        .map(|row| {
            if row.is_empty() {
                Vec::new()
            } else {
                let (q, rem) = u_divrem(row, c);
                debug_assert!(rem.is_empty());
                q
            }
        })
        .collect()
}

fn r_primitive(r: &RPoly) -> RPoly {
    let c = r_content(r);
    if c.len() == 1 {
        let inv = c[0].inv();
        return r.iter().map(|row| row.iter().map(|x| x * &inv).collect()).collect();
    }
    r_div_content(r, &c)
}

/// Pseudo-remainder of `a` by `b` as polynomials in `z̄`, premultiplied by
/// exactly `lc(b)^(deg a − deg b + 1)`.
fn r_prem(a: &RPoly, b: &RPoly) -> RPoly {
    let mut r = a.clone();
    let db = b.len() - 1;
    let lb = b.last().unwrap().clone();
    let mut e = a.len() - b.len() + 1;
    while !r.is_empty() && r.len() > db {
        let shift = r.len() - 1 - db;
        let lr = r.last().unwrap().clone();
        let mut next: RPoly = r.iter().map(|row| u_mul(row, &lb)).collect();
        for (j, row) in b.iter().enumerate() {
            let t = u_mul(row, &lr);
            next[shift + j] = u_sub(&next[shift + j], &t);
        }
        r_trim(&mut next);
        r = next;
        e -= 1;
    }
    for _ in 0..e {
        r = r.iter().map(|row| u_mul(row, &lb)).collect();
    }
    r
}

fn u_pow(p: &UPoly, k: usize) -> UPoly {
    let mut out = vec![GaussRational::one()];
    for _ in 0..k {
        out = u_mul(&out, p);
    }
    out
}

fn u_exact_div(a: &UPoly, b: &UPoly) -> UPoly {
    let (q, r) = u_divrem(a, b);
    debug_assert!(r.is_empty());
    q
}

fn u_eval(p: &UPoly, x: &GaussRational) -> GaussRational {
    p.iter().rev().fold(GaussRational::zero(), |acc, c| acc * x + c)
}

/// Specializes `z` to `x`, leaving a polynomial in `z̄`.
fn r_specialize(r: &RPoly, x: &GaussRational) -> UPoly {
    let mut out: UPoly = r.iter().map(|row| u_eval(row, x)).collect();
    u_trim(&mut out);
    out
}

/// True when two primitive polynomials share no factor of positive degree
/// in `z̄`. Decided on specializations of `z` that keep the leading
/// coefficient of `a`, so the gcd's degree in `z̄` cannot drop there. A few
/// points are tried since a single one may hit a root of the resultant.
fn coprime_in_zbar(a: &RPoly, b: &RPoly) -> bool {
    let lc = a.last().unwrap();
    let points = [gauss::gi(1, 0), gauss::gi(-2, 1), gauss::gq(3, 7) + gauss::gi(0, 2), gauss::gi(5, -3)];
    points
        .iter()
        .filter(|x| !u_eval(lc, x).is_zero())
        .any(|x| u_gcd(&r_specialize(a, x), &r_specialize(b, x)).len() == 1)
}

/// Subresultant remainder sequence of primitive `p`, `q` with
/// `deg p ≥ deg q`; returns their gcd up to a factor in `K[z]`.
fn r_subresultant_gcd(mut p: RPoly, mut q: RPoly) -> RPoly {
    let mut g: UPoly = vec![GaussRational::one()];
    let mut h: UPoly = vec![GaussRational::one()];
    loop {
        if q.len() == 1 {
            return vec![vec![GaussRational::one()]];
        }
        let delta = p.len() - q.len();
        let r = r_prem(&p, &q);
        if r.is_empty() {
            return q;
        }
        if r.len() == 1 {
            return vec![vec![GaussRational::one()]];
        }
        let divisor = u_mul(&g, &u_pow(&h, delta));
        p = q;
        q = r.iter().map(|row| if row.is_empty() { Vec::new() } else { u_exact_div(row, &divisor) }).collect();
        g = p.last().unwrap().clone();
        h = match delta {
            0 => h,
            1 => g.clone(),
            d => u_exact_div(&u_pow(&g, d), &u_pow(&h, d - 1)),
        };
    }
}

/// Largest `k ≤ max` with `(1 + z z̄)^k` dividing `p`.
fn one_plus_t_multiplicity(p: &Poly, max: u32) -> u32 {
    let base = Poly::one_plus_t();
    let mut p = p.clone();
    let mut k = 0;
    while k < max {
        match p.exact_div(&base) {
            Some(q) => {
                p = q;
                k += 1;
            }
            None => break,
        }
    }
    k
}

fn one_plus_t_power(p: &Poly) -> Option<u32> {
    let k = p.degree_z();
    (k > 0 && p.degree_zbar() == k && *p == Poly::one_plus_t().pow(k)).then_some(k)
}

/// Greatest common divisor, normalized to leading coefficient one.
/// `gcd(0, 0) = 0`.
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.as_constant().is_some() || b.as_constant().is_some() {
        return Poly::one();
    }
    if a.num_terms() == 1 || b.num_terms() == 1 {
        let (mono, other) = if a.num_terms() == 1 { (a, b) } else { (b, a) };
        let m = *mono.leading().unwrap().0;
        let zmin = other.terms().map(|(k, _)| k.z).min().unwrap().min(m.z);
        let wmin = other.terms().map(|(k, _)| k.zbar).min().unwrap().min(m.zbar);
        return Poly::monomial(GaussRational::one(), zmin, wmin);
    }
    if a == b {
        return a.monic();
    }
    for (x, y) in [(a, b), (b, a)] {
        if let Some(k) = one_plus_t_power(y) {
            return Poly::one_plus_t().pow(one_plus_t_multiplicity(x, k));
        }
    }
    let (ma, a) = split_monomial(a);
    let (mb, b) = split_monomial(b);
    let mono = Poly::monomial(GaussRational::one(), ma.z.min(mb.z), ma.zbar.min(mb.zbar));
    if a.as_constant().is_some() || b.as_constant().is_some() {
        return mono;
    }
    let ra = to_rec(&a);
    let rb = to_rec(&b);
    let ca = r_content(&ra);
    let cb = r_content(&rb);
    let c = u_gcd(&ca, &cb);
    let pa = r_div_content(&ra, &ca);
    let pb = r_div_content(&rb, &cb);
    let (p, q) = if pa.len() >= pb.len() { (pa, pb) } else { (pb, pa) };
    let g = if q.len() == 1 || coprime_in_zbar(&p, &q) {
        vec![vec![GaussRational::one()]]
    } else {
        r_primitive(&r_subresultant_gcd(p, q))
    };
    let full: RPoly = g.iter().map(|row| u_mul(row, &c)).collect();
    (&from_rec(&full) * &mono).monic()
}

/// Splits off the largest monomial factor.
fn split_monomial(p: &Poly) -> (Mono, Poly) {
    let z = p.terms().map(|(m, _)| m.z).min().unwrap_or(0);
    let zbar = p.terms().map(|(m, _)| m.zbar).min().unwrap_or(0);
    let rest = Poly::from_terms(p.terms().map(|(m, c)| (Mono::new(m.z - z, m.zbar - zbar), c.clone())));
    (Mono::new(z, zbar), rest)
}
