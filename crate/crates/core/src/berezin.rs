//! The CP¹ model: `K = SU(2)`, `Θ = ∅`, line bundle `O(n)` with
//! `n ≥ 0`, Hilbert space of holomorphic sections spanned by `z^k`,
//! `k = 0..=n`, in the chart `z ∈ ℂ`.
//!
//! Conventions:
//! * measure `dμ = π⁻¹(1+zz̄)⁻² dx dy`, total volume one;
//! * hermitian metric `h(s₁, s₂) = s₁ s̄₂ (1+zz̄)^{−n}`, so
//!   `‖z^k‖² = k!(n−k)!/(n+1)!`;
//! * an operator matrix `M` has `M[j][k]` = coefficient of `z^j` in `M z^k`;
//! * `sl₂` acts by `τ(E) = ∂`, `τ(F) = nz − z²∂`, `τ(H) = n − 2z∂`, so
//!   `[E, F] = H`, `[H, E] = 2E`, `[H, F] = −2F`. The holomorphic fields are
//!   `ξ_E = ∂`, `ξ_F = −z²∂`, `ξ_H = −2z∂`, and `l_X = ξ_X + σ_X` with
//!   `σ_X = l_X 1`.
//! * the compact real form is spanned by `h = iH`, `x = E − F`,
//!   `y = i(E + F)`; for these `σ_X = i f_X` with `f_X` real. In particular
//!   `f_h = n(1−zz̄)/(1+zz̄)`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{factorial, Rational};
use crate::symbolic::expr::one_plus_t_exponent;
use crate::symbolic::gauss::{self, GaussRational};
use crate::symbolic::{DiffOp, FormalOperator, Mono, NuSeries, Poly, RationalExpr};

/// `∫ e dμ` for `e = Σ a_{pq} z^p z̄^q / (1+zz̄)^c`.
pub fn exact_integral(e: &RationalExpr) -> Result<GaussRational> {
    let c = one_plus_t_exponent(e.den())
        .ok_or_else(|| Error::UnsupportedShape(format!("denominator of {e} is not a power of 1 + z*zbar")))?;
    let mut acc = GaussRational::zero();
    let total = factorial(c + 1);
    for (m, a) in e.num().terms() {
        if m.z + m.zbar >= 2 * c + 2 {
            return Err(Error::NotIntegrable(format!(
                "term z^{}*zbar^{} over (1 + z*zbar)^{c} does not decay",
                m.z, m.zbar
            )));
        }
        if m.z == m.zbar {
            let v = Rational::new(factorial(m.z) * factorial(c - m.z), total.clone());
            acc += a * gauss::real(v);
        }
    }
    Ok(acc)
}

/// `‖z^k‖²` for `k = 0..=n`.
pub fn monomial_norms(n: u32) -> Vec<Rational> {
    let total = factorial(n + 1);
    (0..=n)
        .map(|k| Rational::new(factorial(k) * factorial(n - k), total.clone()))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OperatorMatrix {
    dim: usize,
    entries: Vec<GaussRational>,
}

impl OperatorMatrix {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            entries: vec![GaussRational::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.set(i, i, GaussRational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<GaussRational>>) -> Result<Self> {
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(Error::MatrixShape {
                    rows: dim,
                    cols: row.len(),
                    expected: dim,
                });
            }
            entries.extend(row);
        }
        Ok(Self { dim, entries })
    }

    pub fn diagonal(d: Vec<GaussRational>) -> Self {
        let mut m = Self::zeros(d.len());
        for (i, v) in d.into_iter().enumerate() {
            m.set(i, i, v);
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, j: usize, k: usize) -> &GaussRational {
        &self.entries[j * self.dim + k]
    }

    pub fn set(&mut self, j: usize, k: usize, v: GaussRational) {
        self.entries[j * self.dim + k] = v;
    }

    pub fn rows(&self) -> impl Iterator<Item = &[GaussRational]> {
        self.entries.chunks(self.dim.max(1))
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::MatrixShape {
                rows: other.dim,
                cols: other.dim,
                expected: self.dim,
            });
        }
        Ok(())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let n = self.dim;
        let mut out = Self::zeros(n);
        for j in 0..n {
            for l in 0..n {
                let a = self.get(j, l);
                if a.is_zero() {
                    continue;
                }
                for k in 0..n {
                    let b = other.get(l, k);
                    if !b.is_zero() {
                        out.entries[j * n + k] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(Self {
            dim: self.dim,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&gauss::int(-1)))
    }

    pub fn scale(&self, c: &GaussRational) -> Self {
        Self {
            dim: self.dim,
            entries: self.entries.iter().map(|a| a * c).collect(),
        }
    }

    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    pub fn trace(&self) -> GaussRational {
        (0..self.dim).fold(GaussRational::zero(), |acc, i| acc + self.get(i, i))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|c| c.is_zero())
    }
}

impl fmt::Display for OperatorMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (j, row) in self.rows().enumerate() {
            if j > 0 {
                f.write_str("\n")?;
            }
            let cells: Vec<String> = row.iter().map(|c| gauss::Display(c).to_string()).collect();
            write!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// sl₂

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    E,
    F,
    H,
    /// `iH`
    Hc,
    /// `E − F`
    X,
    /// `i(E + F)`
    Y,
}

impl Generator {
    pub const STANDARD: [Generator; 3] = [Generator::E, Generator::F, Generator::H];
    pub const COMPACT: [Generator; 3] = [Generator::Hc, Generator::X, Generator::Y];

    pub fn letter(self) -> char {
        match self {
            Generator::E => 'E',
            Generator::F => 'F',
            Generator::H => 'H',
            Generator::Hc => 'h',
            Generator::X => 'x',
            Generator::Y => 'y',
        }
    }

    pub fn from_letter(c: char) -> Result<Self> {
        Ok(match c {
            'E' => Generator::E,
            'F' => Generator::F,
            'H' => Generator::H,
            'h' => Generator::Hc,
            'x' => Generator::X,
            'y' => Generator::Y,
            other => return Err(Error::UnknownGenerator(other.to_string())),
        })
    }

    pub fn element(self) -> Sl2 {
        let (e, f, h) = match self {
            Generator::E => (gauss::int(1), gauss::int(0), gauss::int(0)),
            Generator::F => (gauss::int(0), gauss::int(1), gauss::int(0)),
            Generator::H => (gauss::int(0), gauss::int(0), gauss::int(1)),
            Generator::Hc => (gauss::int(0), gauss::int(0), gauss::i()),
            Generator::X => (gauss::int(1), gauss::int(-1), gauss::int(0)),
            Generator::Y => (gauss::i(), gauss::i(), gauss::int(0)),
        };
        Sl2 { e, f, h }
    }
}

/// Parses a word such as `"EFH"`, `"h x"` or `"E,F"`; `""` and `"1"` give
/// the empty word.
pub fn parse_word(s: &str) -> Result<Vec<Generator>> {
    let s = s.trim();
    if s == "1" {
        return Ok(Vec::new());
    }
    s.chars()
        .filter(|c| !c.is_whitespace() && *c != ',' && *c != '*')
        .map(Generator::from_letter)
        .collect()
}

pub fn word_string(word: &[Generator]) -> String {
    if word.is_empty() {
        "1".into()
    } else {
        word.iter().map(|g| g.letter()).collect()
    }
}

/// `e·E + f·F + h·H` in `sl₂(ℂ)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sl2 {
    pub e: GaussRational,
    pub f: GaussRational,
    pub h: GaussRational,
}

impl Sl2 {
    pub fn bracket(&self, o: &Sl2) -> Sl2 {
        let two = gauss::int(2);
        Sl2 {
            e: &two * (&self.h * &o.e - &self.e * &o.h),
            f: -&two * (&self.h * &o.f - &self.f * &o.h),
            h: &self.e * &o.f - &self.f * &o.e,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.e.is_zero() && self.f.is_zero() && self.h.is_zero()
    }
}

/// The `sl₂` s-module on the chart with parameter `λ(H) = lam`, any
/// rational; for `lam = n ≥ 0` it is the line-bundle module of `O(n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Su2SModule {
    lam: Rational,
}

impl Su2SModule {
    pub fn new(lam: Rational) -> Self {
        Self { lam }
    }

    pub fn lam(&self) -> &Rational {
        &self.lam
    }

    fn lam_g(&self) -> GaussRational {
        gauss::real(self.lam.clone())
    }

    /// `ξ_X = a(z) ∂`, returned as the polynomial `a`.
    pub fn xi(x: &Sl2) -> Poly {
        Poly::from_terms([
            (Mono::new(0, 0), x.e.clone()),
            (Mono::new(1, 0), &x.h * gauss::int(-2)),
            (Mono::new(2, 0), -x.f.clone()),
        ])
    }

    /// Zeroth-order part of the holomorphic operator on sections.
    fn section_potential(&self, x: &Sl2) -> Poly {
        let l = self.lam_g();
        Poly::from_terms([(Mono::new(0, 0), &x.h * &l), (Mono::new(1, 0), &x.f * &l)])
    }

    /// `∂Φ/∂z = λ z̄/(1+zz̄)`.
    pub fn dphi_dz(&self) -> RationalExpr {
        RationalExpr::new(Poly::zbar().scale(&self.lam_g()), Poly::one_plus_t()).expect("nonzero")
    }

    /// `∂Φ/∂z̄ = λ z/(1+zz̄)`.
    pub fn dphi_dzbar(&self) -> RationalExpr {
        RationalExpr::new(Poly::z().scale(&self.lam_g()), Poly::one_plus_t()).expect("nonzero")
    }

    /// `σ_X = l_X 1`.
    pub fn sigma(&self, x: &Sl2) -> RationalExpr {
        let c0 = RationalExpr::from_poly(self.section_potential(x));
        let a = RationalExpr::from_poly(Self::xi(x));
        &c0 + &(&a * &self.dphi_dz())
    }

    /// Moment function `f_X = −i σ_X`; real for the compact generators.
    pub fn moment(&self, x: &Sl2) -> RationalExpr {
        self.sigma(x).scale(&-gauss::i())
    }

    /// `l_X = ξ_X + σ_X` acting on functions of `(z, z̄)`.
    pub fn l(&self, x: &Sl2) -> DiffOp {
        DiffOp::new(vec![self.sigma(x), RationalExpr::from_poly(Self::xi(x))])
    }

    pub fn sigma_word(&self, word: &[Generator]) -> RationalExpr {
        word.iter()
            .rev()
            .fold(RationalExpr::one(), |acc, g| self.l(&g.element()).apply(&acc))
    }

    pub fn moment_family(&self) -> MomentFamily {
        MomentFamily {
            entries: Generator::COMPACT
                .iter()
                .map(|&g| {
                    let x = g.element();
                    MomentEntry {
                        generator: g,
                        xi: Self::xi(&x),
                        f: self.moment(&x),
                    }
                })
                .collect(),
        }
    }
}

/// `l^{(ν)}_X = ξ_X + ν⁻¹ Σ_s ν^s σ^{(s)}_X` for an s-module series whose
/// ν-degree-`s` term has parameter `lams[s]`.
pub fn l_nu(x: &Sl2, lams: &[Rational]) -> FormalOperator {
    let xi = FormalOperator::single(0, DiffOp::new(vec![RationalExpr::zero(), RationalExpr::from_poly(Su2SModule::xi(x))]));
    lams.iter().enumerate().fold(xi, |acc, (s, lam)| {
        let sigma = Su2SModule::new(lam.clone()).sigma(x);
        acc.add(&FormalOperator::single(s as i32 - 1, DiffOp::mult(sigma)))
    })
}

/// `σ^{(ν)}_u = l^{(ν)}_{X₁} ⋯ l^{(ν)}_{X_d} 1`, exact.
pub fn sigma_nu_word(word: &[Generator], lams: &[Rational]) -> NuSeries {
    word.iter().rev().fold(NuSeries::constant(RationalExpr::one()), |acc, g| {
        l_nu(&g.element(), lams).apply(&acc)
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MomentEntry {
    pub generator: Generator,
    pub xi: Poly,
    pub f: RationalExpr,
}

/// Moment functions and holomorphic fields of the compact basis `h, x, y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MomentFamily {
    pub entries: Vec<MomentEntry>,
}

impl MomentFamily {
    pub fn get(&self, g: Generator) -> Option<&MomentEntry> {
        self.entries.iter().find(|e| e.generator == g)
    }
}

/// Outcome of the leading-order check: the `ν^{−d}` coefficient of
/// `σ^{(ν)}_u` against `∏ σ_{X_j}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeadingCheck {
    pub leading: RationalExpr,
    pub product: RationalExpr,
}

impl LeadingCheck {
    pub fn passed(&self) -> bool {
        self.leading == self.product
    }
}

pub fn leading_symbol_check(word: &[Generator], lam: &Rational) -> LeadingCheck {
    let series = sigma_nu_word(word, std::slice::from_ref(lam));
    let d = word.len() as i32;
    let leading = series.coeff(-d);
    let m = Su2SModule::new(lam.clone());
    let product = word
        .iter()
        .fold(RationalExpr::one(), |acc, g| &acc * &m.sigma(&g.element()));
    LeadingCheck { leading, product }
}

// ---------------------------------------------------------------------------
// the Hilbert space model

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cp1Model {
    n: u32,
    norms: Vec<Rational>,
    smodule: Su2SModule,
}

/// Two sides of an exact identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub lhs: GaussRational,
    pub rhs: GaussRational,
}

impl IdentityCheck {
    pub fn passed(&self) -> bool {
        self.lhs == self.rhs
    }
}

impl Cp1Model {
    pub fn new(n: u32) -> Self {
        Self {
            n,
            norms: monomial_norms(n),
            smodule: Su2SModule::new(Rational::from_integer(BigInt::from(n))),
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// `N = dim 𝓗 = n + 1`.
    pub fn dim(&self) -> usize {
        self.n as usize + 1
    }

    pub fn norms(&self) -> &[Rational] {
        &self.norms
    }

    pub fn smodule(&self) -> &Su2SModule {
        &self.smodule
    }

    fn n_g(&self) -> GaussRational {
        gauss::int(self.dim() as i64)
    }

    fn check_dim(&self, a: &OperatorMatrix) -> Result<()> {
        if a.dim() != self.dim() {
            return Err(Error::MatrixShape {
                rows: a.dim(),
                cols: a.dim(),
                expected: self.dim(),
            });
        }
        Ok(())
    }

    /// `⟨p, q⟩ = Σ p_k q̄_k ‖z^k‖²` for coefficient vectors in the monomial basis.
    pub fn inner(&self, p: &[GaussRational], q: &[GaussRational]) -> GaussRational {
        p.iter()
            .zip(q)
            .zip(&self.norms)
            .fold(GaussRational::zero(), |acc, ((a, b), nu)| {
                acc + a * b.conj() * gauss::real(nu.clone())
            })
    }

    /// Coefficients of the coherent state `e_{s₀(w)}`: `w̄^k/‖z^k‖²`.
    pub fn coherent_state(&self, w: &GaussRational) -> Vec<GaussRational> {
        let wb = w.conj();
        let mut p = GaussRational::one();
        self.norms
            .iter()
            .map(|nu| {
                let c = &p / gauss::real(nu.clone());
                p = &p * &wb;
                c
            })
            .collect()
    }

    /// `S(z) = ⟨e_q, e_q⟩ = Σ_k (zz̄)^k/‖z^k‖²`.
    pub fn overlap(&self) -> RationalExpr {
        RationalExpr::from_poly(Poly::from_terms(
            self.norms
                .iter()
                .enumerate()
                .map(|(k, nu)| (Mono::new(k as u32, k as u32), gauss::real(nu.recip()))),
        ))
    }

    /// `h(s₁, s₂)` for polynomial sections given by coefficients.
    pub fn hermitian(&self, s1: &[GaussRational], s2: &[GaussRational]) -> RationalExpr {
        let p1 = Poly::from_terms(s1.iter().enumerate().map(|(k, c)| (Mono::new(k as u32, 0), c.clone())));
        let p2 = Poly::from_terms(s2.iter().enumerate().map(|(k, c)| (Mono::new(0, k as u32), c.conj())));
        RationalExpr::new(&p1 * &p2, Poly::one_plus_t().pow(self.n)).expect("nonzero")
    }

    pub fn covariant_symbol(&self, a: &OperatorMatrix) -> Result<RationalExpr> {
        self.check_dim(a)?;
        let n = self.dim();
        let mut num = Poly::zero();
        for j in 0..n {
            for k in 0..n {
                let c = a.get(j, k);
                if !c.is_zero() {
                    num.add_term(Mono::new(j as u32, k as u32), c / gauss::real(self.norms[k].clone()));
                }
            }
        }
        let den = Poly::one_plus_t().pow(self.n).scale(&self.n_g());
        RationalExpr::new(num, den)
    }

    /// `f_A(w)`, evaluated directly without building the rational function.
    pub fn covariant_symbol_at(&self, a: &OperatorMatrix, w: &GaussRational) -> Result<GaussRational> {
        self.check_dim(a)?;
        let n = self.dim();
        let wb = w.conj();
        let mut wp = vec![GaussRational::one()];
        let mut bp = vec![GaussRational::one()];
        for k in 1..n {
            wp.push(&wp[k - 1] * w);
            bp.push(&bp[k - 1] * &wb);
        }
        let mut acc = GaussRational::zero();
        for k in 0..n {
            let mut col = GaussRational::zero();
            for j in 0..n {
                let c = a.get(j, k);
                if !c.is_zero() {
                    col += c * &wp[j];
                }
            }
            acc += col * &bp[k] / gauss::real(self.norms[k].clone());
        }
        let t = gauss::real(gauss::norm_sqr(w)) + GaussRational::one();
        let mut s = self.n_g();
        for _ in 0..self.n {
            s *= &t;
        }
        Ok(acc / s)
    }

    /// The operator whose covariant symbol is `f`.
    pub fn operator_from_symbol(&self, f: &RationalExpr) -> Result<OperatorMatrix> {
        let not = |reason: String| Error::NotASymbol { n: self.n, reason };
        let c = one_plus_t_exponent(f.den())
            .ok_or_else(|| not(format!("denominator of {f} is not a power of 1 + z*zbar")))?;
        if c > self.n {
            return Err(not(format!("denominator exponent {c} exceeds {}", self.n)));
        }
        let p = f.num() * &Poly::one_plus_t().pow(self.n - c);
        let n = self.dim();
        let mut a = OperatorMatrix::zeros(n);
        for (m, v) in p.terms() {
            if m.z as usize >= n || m.zbar as usize >= n {
                return Err(not(format!("bidegree exceeds ({0}, {0})", self.n)));
            }
            let k = m.zbar as usize;
            a.set(m.z as usize, k, v * gauss::real(self.norms[k].clone()) * self.n_g());
        }
        Ok(a)
    }

    /// Toeplitz operator `ĝ = P M_g P`.
    pub fn contravariant_hat(&self, g: &RationalExpr) -> Result<OperatorMatrix> {
        let n = self.dim();
        let weight = RationalExpr::new(Poly::one(), Poly::one_plus_t().pow(self.n))?;
        let gw = g * &weight;
        let mut a = OperatorMatrix::zeros(n);
        for j in 0..n {
            for k in 0..n {
                let mono = RationalExpr::from_poly(Poly::monomial(GaussRational::one(), k as u32, j as u32));
                let v = exact_integral(&(&gw * &mono))?;
                a.set(j, k, v / gauss::real(self.norms[j].clone()));
            }
        }
        Ok(a)
    }

    /// Adjoint with respect to the inner product of sections.
    pub fn adjoint(&self, a: &OperatorMatrix) -> Result<OperatorMatrix> {
        self.check_dim(a)?;
        let n = self.dim();
        let mut out = OperatorMatrix::zeros(n);
        for j in 0..n {
            for k in 0..n {
                let r = &self.norms[j] / &self.norms[k];
                out.set(k, j, a.get(j, k).conj() * gauss::real(r));
            }
        }
        Ok(out)
    }

    pub fn tau(&self, x: &Sl2) -> OperatorMatrix {
        let n = self.dim();
        let a = Su2SModule::xi(x);
        let c0 = self.smodule.section_potential(x);
        let mut m = OperatorMatrix::zeros(n);
        for k in 0..n {
            let zk = Poly::monomial(GaussRational::one(), k as u32, 0);
            let col = &(&a * &zk.diff_z()) + &(&c0 * &zk);
            for (mono, v) in col.terms() {
                debug_assert!((mono.z as usize) < n, "τ preserves degree ≤ n");
                m.set(mono.z as usize, k, v.clone());
            }
        }
        m
    }

    pub fn tau_word(&self, word: &[Generator]) -> OperatorMatrix {
        word.iter().fold(OperatorMatrix::identity(self.dim()), |acc, g| {
            acc.mul(&self.tau(&g.element())).expect("same size")
        })
    }

    pub fn sigma_word(&self, word: &[Generator]) -> RationalExpr {
        self.smodule.sigma_word(word)
    }

    /// `N ∫ σ_u dμ` against `tr τ(u)`.
    pub fn trace_identity_check(&self, word: &[Generator]) -> Result<IdentityCheck> {
        let lhs = exact_integral(&self.sigma_word(word))? * self.n_g();
        let rhs = self.tau_word(word).trace();
        Ok(IdentityCheck { lhs, rhs })
    }

    /// `tr(A ĝ)` against `N ∫ f_A g dμ`.
    pub fn toeplitz_pairing_check(&self, a: &OperatorMatrix, g: &RationalExpr) -> Result<IdentityCheck> {
        let lhs = a.mul(&self.contravariant_hat(g)?)?.trace();
        let rhs = exact_integral(&(&self.covariant_symbol(a)? * g))? * self.n_g();
        Ok(IdentityCheck { lhs, rhs })
    }

    /// `∂²Φ/∂z∂z̄ = n/(1+zz̄)²`.
    pub fn metric(&self) -> RationalExpr {
        self.smodule.dphi_dzbar().dz()
    }
}

/// Sign of the metric `λ/(1+zz̄)²` at `w`; `0` if it vanishes there.
pub fn metric_sign(lam: &Rational, w: &GaussRational) -> Result<i32> {
    let g = Su2SModule::new(lam.clone()).dphi_dzbar().dz().eval_at(w)?;
    debug_assert!(g.im.is_zero());
    Ok(if g.re.is_positive() {
        1
    } else if g.re.is_negative() {
        -1
    } else {
        0
    })
}
