//! Formal power series in `ν` whose coefficients are holomorphic
//! differential operators `Σ_k a_k(z, z̄) ∂_z^k`.
//!
//! A series carries an optional truncation order `R`: coefficients of
//! `ν^r` with `r > R` are unknown and dropped. `None` means exact.

use std::collections::BTreeMap;
use std::fmt;

use super::expr::RationalExpr;
use super::gauss::GaussRational;

fn binomial(n: usize, k: usize) -> i64 {
    let mut acc: i64 = 1;
    for i in 0..k {
        acc = acc * (n - i) as i64 / (i + 1) as i64;
    }
    acc
}

fn min_order(a: Option<i32>, b: Option<i32>) -> Option<i32> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

/// `Σ_k coeffs[k] ∂_z^k`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DiffOp {
    coeffs: Vec<RationalExpr>,
}

impl DiffOp {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn new(mut coeffs: Vec<RationalExpr>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn mult(f: RationalExpr) -> Self {
        Self::new(vec![f])
    }

    pub fn d_z() -> Self {
        Self::new(vec![RationalExpr::zero(), RationalExpr::one()])
    }

    pub fn coeffs(&self) -> &[RationalExpr] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> RationalExpr {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Differential order, `None` for the zero operator.
    pub fn order(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn apply(&self, f: &RationalExpr) -> RationalExpr {
        let mut acc = RationalExpr::zero();
        let mut d = f.clone();
        for (k, a) in self.coeffs.iter().enumerate() {
            if k > 0 {
                d = d.dz();
            }
            if !a.is_zero() {
                acc = &acc + &(a * &d);
            }
        }
        acc
    }

    pub fn add(&self, other: &DiffOp) -> DiffOp {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|k| &self.coeff(k) + &other.coeff(k)).collect())
    }

    pub fn neg(&self) -> DiffOp {
        Self::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn sub(&self, other: &DiffOp) -> DiffOp {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &GaussRational) -> DiffOp {
        Self::new(self.coeffs.iter().map(|a| a.scale(c)).collect())
    }

    /// Left multiplication by a function.
    pub fn premul(&self, f: &RationalExpr) -> DiffOp {
        Self::new(self.coeffs.iter().map(|a| f * a).collect())
    }

    /// Operator product `self ∘ other`.
    pub fn compose(&self, other: &DiffOp) -> DiffOp {
        if self.is_zero() || other.is_zero() {
            return DiffOp::zero();
        }
        let max_j = self.coeffs.len() - 1;
        let mut out = vec![RationalExpr::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (k, b) in other.coeffs.iter().enumerate() {
            if b.is_zero() {
                continue;
            }
            let mut derivs = Vec::with_capacity(max_j + 1);
            derivs.push(b.clone());
            for m in 1..=max_j {
                let next = derivs[m - 1].dz();
                let stop = next.is_zero();
                derivs.push(next);
                if stop {
                    break;
                }
            }
            for (j, a) in self.coeffs.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (m, db) in derivs.iter().enumerate().take(j + 1) {
                    if db.is_zero() {
                        continue;
                    }
                    let c = GaussRational::from(crate::rational::int(binomial(j, m)));
                    let term = (a * db).scale(&c);
                    let slot = &mut out[j - m + k];
                    *slot = &*slot + &term;
                }
            }
        }
        Self::new(out)
    }

    pub fn commutator(&self, other: &DiffOp) -> DiffOp {
        self.compose(other).sub(&other.compose(self))
    }

    /// Coefficient-wise `∂_z̄`. Equals `−[self, ∂_z̄]`.
    pub fn dbar(&self) -> DiffOp {
        Self::new(self.coeffs.iter().map(|a| a.dzbar()).collect())
    }
}

impl fmt::Display for DiffOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => format!("({c})"),
                1 => format!("({c})*d"),
                k => format!("({c})*d^{k}"),
            })
            .collect();
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

/// `Σ_r ν^r A_r`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FormalOperator {
    terms: BTreeMap<i32, DiffOp>,
    order: Option<i32>,
}

impl FormalOperator {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn identity() -> Self {
        Self::mult(RationalExpr::one())
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i32, DiffOp)>, order: Option<i32>) -> Self {
        let mut t = BTreeMap::new();
        for (r, d) in terms {
            if d.is_zero() || order.is_some_and(|o| r > o) {
                continue;
            }
            let e: &mut DiffOp = t.entry(r).or_default();
            *e = e.add(&d);
            if e.is_zero() {
                t.remove(&r);
            }
        }
        Self { terms: t, order }
    }

    /// `ν^r · op`, exact.
    pub fn single(r: i32, op: DiffOp) -> Self {
        Self::from_terms([(r, op)], None)
    }

    pub fn mult(f: RationalExpr) -> Self {
        Self::single(0, DiffOp::mult(f))
    }

    pub fn d_z() -> Self {
        Self::single(0, DiffOp::d_z())
    }

    /// The scalar `ν^k`.
    pub fn nu_power(k: i32) -> Self {
        Self::single(k, DiffOp::mult(RationalExpr::one()))
    }

    pub fn order(&self) -> Option<i32> {
        self.order
    }

    pub fn truncate(&self, order: i32) -> Self {
        Self::from_terms(
            self.terms.iter().map(|(r, d)| (*r, d.clone())),
            min_order(self.order, Some(order)),
        )
    }

    pub fn coeff(&self, r: i32) -> DiffOp {
        self.terms.get(&r).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &DiffOp)> {
        self.terms.iter().map(|(r, d)| (*r, d))
    }

    pub fn lowest_degree(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .chain(other.terms.iter())
                .map(|(r, d)| (*r, d.clone())),
            min_order(self.order, other.order),
        )
    }

    pub fn neg(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(r, d)| (*r, d.neg())).collect(),
            order: self.order,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &GaussRational) -> Self {
        Self::from_terms(self.terms.iter().map(|(r, d)| (*r, d.scale(c))), self.order)
    }

    /// Multiplies by `ν^k`.
    pub fn shift(&self, k: i32) -> Self {
        Self {
            terms: self.terms.iter().map(|(r, d)| (r + k, d.clone())).collect(),
            order: self.order.map(|o| o + k),
        }
    }

    fn product_order(&self, other: &Self) -> Option<i32> {
        let low_a = self.lowest_degree().unwrap_or(0);
        let low_b = other.lowest_degree().unwrap_or(0);
        min_order(self.order.map(|o| o + low_b), other.order.map(|o| o + low_a))
    }

    pub fn compose(&self, other: &Self) -> Self {
        let order = self.product_order(other);
        let mut parts = Vec::new();
        for (ra, a) in &self.terms {
            for (rb, b) in &other.terms {
                let r = ra + rb;
                if order.is_some_and(|o| r > o) {
                    continue;
                }
                parts.push((r, a.compose(b)));
            }
        }
        Self::from_terms(parts, order)
    }

    pub fn commutator(&self, other: &Self) -> Self {
        self.compose(other).sub(&other.compose(self))
    }

    /// `[self, ∂_z̄]`.
    pub fn commutator_with_dbar(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(r, d)| (*r, d.dbar().neg()))
                .filter(|(_, d)| !d.is_zero())
                .collect(),
            order: self.order,
        }
    }

    pub fn apply(&self, s: &NuSeries) -> NuSeries {
        let low_a = self.lowest_degree().unwrap_or(0);
        let low_s = s.lowest_degree().unwrap_or(0);
        let order = min_order(self.order.map(|o| o + low_s), s.order.map(|o| o + low_a));
        let mut parts = Vec::new();
        for (ra, a) in &self.terms {
            for (rs, f) in &s.terms {
                let r = ra + rs;
                if order.is_some_and(|o| r > o) {
                    continue;
                }
                parts.push((r, a.apply(f)));
            }
        }
        NuSeries::from_terms(parts, order)
    }
}

impl fmt::Display for FormalOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            f.write_str("0")?;
        }
        for (k, (r, d)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str("\n")?;
            }
            write!(f, "nu^{r}: {d}")?;
        }
        if let Some(o) = self.order {
            write!(f, "\n+ O(nu^{})", o + 1)?;
        }
        Ok(())
    }
}

/// `Σ_r ν^r f_r`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct NuSeries {
    terms: BTreeMap<i32, RationalExpr>,
    order: Option<i32>,
}

impl NuSeries {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(f: RationalExpr) -> Self {
        Self::from_terms([(0, f)], None)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i32, RationalExpr)>, order: Option<i32>) -> Self {
        let mut t: BTreeMap<i32, RationalExpr> = BTreeMap::new();
        for (r, f) in terms {
            if f.is_zero() || order.is_some_and(|o| r > o) {
                continue;
            }
            let e = t.entry(r).or_default();
            *e = &*e + &f;
            if e.is_zero() {
                t.remove(&r);
            }
        }
        Self { terms: t, order }
    }

    pub fn order(&self) -> Option<i32> {
        self.order
    }

    pub fn coeff(&self, r: i32) -> RationalExpr {
        self.terms.get(&r).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &RationalExpr)> {
        self.terms.iter().map(|(r, f)| (*r, f))
    }

    pub fn lowest_degree(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .chain(other.terms.iter())
                .map(|(r, f)| (*r, f.clone())),
            min_order(self.order, other.order),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&Self {
            terms: other.terms.iter().map(|(r, f)| (*r, -f)).collect(),
            order: other.order,
        })
    }
}

impl fmt::Display for NuSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            f.write_str("0")?;
        }
        for (k, (r, e)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str("\n")?;
            }
            write!(f, "nu^{r}: {e}")?;
        }
        if let Some(o) = self.order {
            write!(f, "\n+ O(nu^{})", o + 1)?;
        }
        Ok(())
    }
}
