//! Star product with separation of variables on the CP¹ chart.
//!
//! The left multiplication operator `L_f = Σ_r ν^r A_r` is the unique
//! formal operator in `∂_z` with `L_f 1 = f` commuting with `z̄` and with
//! `φ + ν∂_z̄`, where `φ = Σ_s ν^s φ_s` is the series of `∂Φ/∂z̄`. In
//! degree `r` this reads
//!
//! ```text
//! [A_r, φ₀] = ∂̄A_{r−1} − Σ_{s≥1} [A_{r−s}, φ_s]
//! ```
//!
//! with `∂̄` acting on coefficients, solved from the highest derivative
//! down with `A_r 1 = 0` for `r ≥ 1`.
//!
//! The Poisson bracket is `{f, g} = i g⁻¹(∂_z f ∂_z̄ g − ∂_z̄ f ∂_z g)`, so
//! that `C₁(f, g) − C₁(g, f) = i{f, g}`; for the unit Fubini–Study potential
//! `{z, z̄} = i(1+zz̄)²`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::berezin::{l_nu, Cp1Model, Generator, Sl2};
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::symbolic::gauss::{self, GaussRational};
use crate::symbolic::{DiffOp, FormalOperator, NuSeries, RationalExpr};

pub const DEFAULT_ORDER: u32 = 3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarContext {
    dphi_dz: Vec<RationalExpr>,
    dphi_dzbar: Vec<RationalExpr>,
    metric: RationalExpr,
    metric_inv: RationalExpr,
    order: u32,
}

impl StarContext {
    /// Potential given by the ν-series of its first derivatives.
    pub fn new(dphi_dz: Vec<RationalExpr>, dphi_dzbar: Vec<RationalExpr>, order: u32) -> Result<Self> {
        if dphi_dzbar.is_empty() || dphi_dz.len() != dphi_dzbar.len() {
            return Err(Error::IncompatiblePotential(format!(
                "{} ∂Φ/∂z terms against {} ∂Φ/∂z̄ terms",
                dphi_dz.len(),
                dphi_dzbar.len()
            )));
        }
        for (s, (a, b)) in dphi_dz.iter().zip(&dphi_dzbar).enumerate() {
            if a.dzbar() != b.dz() {
                return Err(Error::IncompatiblePotential(format!(
                    "mixed second derivatives differ at ν-degree {s}"
                )));
            }
        }
        let metric = dphi_dzbar[0].dz();
        let metric_inv = metric.recip().map_err(|_| Error::DegeneratePotential)?;
        Ok(Self {
            dphi_dz,
            dphi_dzbar,
            metric,
            metric_inv,
            order,
        })
    }

    /// `Φ = Σ_s ν^s lams[s]·log(1+zz̄)`.
    pub fn fubini_study_series(lams: &[Rational], order: u32) -> Result<Self> {
        let (dz, dzbar) = lams
            .iter()
            .map(|l| {
                let m = crate::berezin::Su2SModule::new(l.clone());
                (m.dphi_dz(), m.dphi_dzbar())
            })
            .unzip();
        Self::new(dz, dzbar, order)
    }

    /// `Φ = lam·log(1+zz̄)`.
    pub fn fubini_study(lam: Rational, order: u32) -> Result<Self> {
        Self::fubini_study_series(&[lam], order)
    }

    /// `Φ = log(1+zz̄)`.
    pub fn unit(order: u32) -> Self {
        Self::fubini_study(Rational::one(), order).expect("nondegenerate")
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn with_order(&self, order: u32) -> Self {
        Self {
            order,
            ..self.clone()
        }
    }

    pub fn dphi_dz(&self) -> &[RationalExpr] {
        &self.dphi_dz
    }

    pub fn dphi_dzbar(&self) -> &[RationalExpr] {
        &self.dphi_dzbar
    }

    /// `g = ∂²Φ₀/∂z∂z̄`.
    pub fn metric(&self) -> &RationalExpr {
        &self.metric
    }

    pub fn metric_inv(&self) -> &RationalExpr {
        &self.metric_inv
    }

    /// `φ + ν∂_z̄` is represented by its multiplication part only; the
    /// `∂_z̄` part enters through [`FormalOperator::commutator_with_dbar`].
    fn phi_operator(&self) -> FormalOperator {
        FormalOperator::from_terms(
            self.dphi_dzbar
                .iter()
                .enumerate()
                .map(|(s, p)| (s as i32, DiffOp::mult(p.clone()))),
            None,
        )
    }

    /// `[A, φ] + ν[A, ∂_z̄]`, truncated at the context order.
    pub fn constraint_residual(&self, a: &FormalOperator) -> FormalOperator {
        let phi = self.phi_operator();
        a.commutator(&phi)
            .add(&a.commutator_with_dbar().shift(1))
            .truncate(self.order as i32)
    }

    /// `[A, z̄]`.
    pub fn zbar_residual(&self, a: &FormalOperator) -> FormalOperator {
        a.commutator(&FormalOperator::mult(RationalExpr::zbar()))
            .truncate(self.order as i32)
    }
}

/// `L_f` through the context order.
pub fn build_left_operator(ctx: &StarContext, f: &RationalExpr) -> Result<FormalOperator> {
    let r_max = ctx.order as usize;
    let max_deriv = r_max + 1;
    let mut phi_derivs: Vec<Vec<RationalExpr>> = Vec::with_capacity(ctx.dphi_dzbar.len());
    for p in &ctx.dphi_dzbar {
        let mut d = vec![p.clone()];
        for m in 1..=max_deriv {
            let next = d[m - 1].dz();
            d.push(next);
        }
        phi_derivs.push(d);
    }
    let commute_phi = |a: &DiffOp, derivs: &[RationalExpr]| -> DiffOp {
        let Some(ord) = a.order() else {
            return DiffOp::zero();
        };
        let mut out = vec![RationalExpr::zero(); ord.max(1)];
        for (k, ak) in a.coeffs().iter().enumerate() {
            if ak.is_zero() {
                continue;
            }
            for m in 1..=k {
                if derivs[m].is_zero() {
                    continue;
                }
                let c = gauss::int(binomial(k, m));
                out[k - m] = &out[k - m] + &(ak * &derivs[m]).scale(&c);
            }
        }
        DiffOp::new(out)
    };

    let mut a: Vec<DiffOp> = vec![DiffOp::mult(f.clone())];
    let g = &phi_derivs[0][1];
    for r in 1..=r_max {
        let mut rhs = a[r - 1].dbar();
        for (s, derivs) in phi_derivs.iter().enumerate().skip(1) {
            if s > r {
                break;
            }
            rhs = rhs.sub(&commute_phi(&a[r - s], derivs));
        }
        let Some(top) = rhs.order() else {
            a.push(DiffOp::zero());
            continue;
        };
        // a_{j+1}(j+1) g + Σ_{k>j+1} a_k C(k, j) φ₀^{(k−j)} = rhs_j
        let mut coeffs = vec![RationalExpr::zero(); top + 2];
        for j in (0..=top).rev() {
            let mut v = rhs.coeff(j);
            for k in (j + 2)..coeffs.len() {
                if coeffs[k].is_zero() {
                    continue;
                }
                let c = gauss::int(binomial(k, j));
                v = &v - &(&coeffs[k] * &phi_derivs[0][k - j]).scale(&c);
            }
            let denom = g.scale(&gauss::int(j as i64 + 1));
            coeffs[j + 1] = v.checked_div(&denom).map_err(|_| Error::RecursionInconsistency {
                order: r as i32,
                detail: "vanishing metric".into(),
            })?;
        }
        let ar = DiffOp::new(coeffs);
        if commute_phi(&ar, &phi_derivs[0]) != rhs {
            return Err(Error::RecursionInconsistency {
                order: r as i32,
                detail: format!("[A_{r}, φ₀] does not reproduce the right-hand side"),
            });
        }
        a.push(ar);
    }
    Ok(FormalOperator::from_terms(
        a.into_iter().enumerate().map(|(r, d)| (r as i32, d)),
        Some(ctx.order as i32),
    ))
}

fn binomial(n: usize, k: usize) -> i64 {
    let mut acc: i64 = 1;
    for i in 0..k {
        acc = acc * (n - i) as i64 / (i + 1) as i64;
    }
    acc
}

/// Coefficients `C_0, …, C_R` of a star product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarSeries {
    coeffs: Vec<RationalExpr>,
}

impl StarSeries {
    pub fn coeffs(&self) -> &[RationalExpr] {
        &self.coeffs
    }

    pub fn coeff(&self, r: usize) -> &RationalExpr {
        &self.coeffs[r]
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn to_series(&self) -> NuSeries {
        NuSeries::from_terms(
            self.coeffs.iter().enumerate().map(|(r, c)| (r as i32, c.clone())),
            Some(self.order() as i32),
        )
    }
}

impl fmt::Display for StarSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, c) in self.coeffs.iter().enumerate() {
            if r > 0 {
                f.write_str("\n")?;
            }
            write!(f, "C{r} = {c}")?;
        }
        Ok(())
    }
}

fn series_from_operator(l: &FormalOperator, g: &RationalExpr, order: u32) -> StarSeries {
    StarSeries {
        coeffs: (0..=order as i32).map(|r| l.coeff(r).apply(g)).collect(),
    }
}

/// `f ⋆ g = L_f g`.
pub fn star(ctx: &StarContext, f: &RationalExpr, g: &RationalExpr) -> Result<StarSeries> {
    let l = build_left_operator(ctx, f)?;
    Ok(series_from_operator(&l, g, ctx.order))
}

/// `f ⋆̃ g = g ⋆ f`.
pub fn opposite_star(ctx: &StarContext, f: &RationalExpr, g: &RationalExpr) -> Result<StarSeries> {
    star(ctx, g, f)
}

pub fn poisson(ctx: &StarContext, f: &RationalExpr, g: &RationalExpr) -> RationalExpr {
    let inner = &(&f.dz() * &g.dzbar()) - &(&f.dzbar() * &g.dz());
    (&inner * &ctx.metric_inv).scale(&gauss::i())
}

/// The five functions used by the axiom and associativity checks.
pub fn test_functions() -> Vec<(&'static str, RationalExpr)> {
    use crate::symbolic::parse_expr;
    [
        "z*zbar/(1 + z*zbar)",
        "z + zbar",
        "(1 - z*zbar)/(1 + z*zbar)",
        "i*(z - zbar)/(1 + z*zbar)",
        "z^2*zbar",
    ]
    .into_iter()
    .map(|s| (s, parse_expr(s).expect("valid test function")))
    .collect()
}

/// `Σ_{i+j=r} C_i(C_j(f,g),h) − Σ_{i+j=r} C_i(f,C_j(g,h))` for `r ≤ R`.
pub fn associativity_defect(
    ctx: &StarContext,
    f: &RationalExpr,
    g: &RationalExpr,
    h: &RationalExpr,
) -> Result<Vec<RationalExpr>> {
    let r_max = ctx.order as usize;
    let fg = star(ctx, f, g)?;
    let gh = star(ctx, g, h)?;
    let lf = build_left_operator(ctx, f)?;
    let mut out = Vec::with_capacity(r_max + 1);
    let mut left_ops = Vec::with_capacity(r_max + 1);
    for j in 0..=r_max {
        left_ops.push(build_left_operator(&ctx.with_order((r_max - j) as u32), fg.coeff(j))?);
    }
    for r in 0..=r_max {
        let mut lhs = RationalExpr::zero();
        let mut rhs = RationalExpr::zero();
        for j in 0..=r {
            let i = (r - j) as i32;
            lhs = &lhs + &left_ops[j].coeff(i).apply(h);
            rhs = &rhs + &lf.coeff(i).apply(gh.coeff(j));
        }
        out.push(&lhs - &rhs);
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// sl₂ operators

/// `Λ(ν) = Σ_s ν^{s−1} lams[s]` as Laurent coefficients from `ν^{−1}`.
fn casimir_value(lams: &[Rational]) -> NuSeries {
    // Casimir of parameter Λ is Λ(Λ + 2)
    let mut terms = Vec::new();
    for (a, la) in lams.iter().enumerate() {
        for (b, lb) in lams.iter().enumerate() {
            terms.push((a as i32 + b as i32 - 2, RationalExpr::constant(gauss::real(la * lb))));
        }
        terms.push((a as i32 - 1, RationalExpr::constant(gauss::real(la * Rational::from_integer(BigInt::from(2))))));
    }
    NuSeries::from_terms(terms, None)
}

/// `l^{(ν)}` of `H² + 2EF + 2FE`.
pub fn casimir_operator(lams: &[Rational]) -> FormalOperator {
    let e = l_nu(&Generator::E.element(), lams);
    let f = l_nu(&Generator::F.element(), lams);
    let h = l_nu(&Generator::H.element(), lams);
    let two = gauss::int(2);
    h.compose(&h)
        .add(&e.compose(&f).scale(&two))
        .add(&f.compose(&e).scale(&two))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OperatorCheck {
    pub label: String,
    pub passed: bool,
    pub detail: String,
}

impl OperatorCheck {
    fn new(label: String, passed: bool, detail: String) -> Self {
        Self { label, passed, detail }
    }
}

fn all_generators() -> Vec<Generator> {
    Generator::STANDARD.into_iter().chain(Generator::COMPACT).collect()
}

fn linear_l(x: &Sl2, lams: &[Rational]) -> FormalOperator {
    l_nu(x, lams)
}

/// Commutation with the constraints of `ctx`, the bracket relations and
/// Casimir scalarity for `l^{(ν)}_X = ξ_X + ν⁻¹σ^{(ν)}_X`, where the
/// s-module series `lams` must match the potential series of `ctx`.
pub fn sl2_operator_checks(ctx: &StarContext, lams: &[Rational]) -> Result<Vec<OperatorCheck>> {
    let order = ctx.order as i32;
    let mut out = Vec::new();
    for g in all_generators() {
        let l = l_nu(&g.element(), lams);
        let res = ctx.constraint_residual(&l);
        out.push(OperatorCheck::new(
            format!("l_{} commutes with dPhi/dzbar + nu*d/dzbar", g.letter()),
            res.is_zero(),
            if res.is_zero() { String::new() } else { res.to_string() },
        ));
        let res = ctx.zbar_residual(&l);
        out.push(OperatorCheck::new(
            format!("l_{} commutes with zbar", g.letter()),
            res.is_zero(),
            String::new(),
        ));
    }
    let gens = all_generators();
    for (i, a) in gens.iter().enumerate() {
        for b in &gens[i + 1..] {
            let xa = a.element();
            let xb = b.element();
            let lhs = linear_l(&xa, lams).commutator(&linear_l(&xb, lams)).truncate(order);
            let rhs = linear_l(&xa.bracket(&xb), lams).truncate(order);
            out.push(OperatorCheck::new(
                format!("[l_{0}, l_{1}] = l_[{0},{1}]", a.letter(), b.letter()),
                lhs == rhs,
                String::new(),
            ));
        }
    }
    let cas = casimir_operator(lams);
    let scalar = cas
        .terms()
        .all(|(_, d)| d.order() == Some(0) && d.coeff(0).as_constant().is_some());
    let expected = casimir_value(lams);
    let as_series = NuSeries::from_terms(cas.terms().map(|(r, d)| (r, d.coeff(0))), None);
    out.push(OperatorCheck::new(
        "Casimir acts as a scalar series".into(),
        scalar && as_series == expected,
        format!("{as_series}"),
    ));
    for (name, f) in test_functions() {
        let applied = cas.apply(&NuSeries::constant(f.clone()));
        let scaled = NuSeries::from_terms(expected.terms().map(|(r, c)| (r, c * &f)), None);
        out.push(OperatorCheck::new(
            format!("Casimir on {name}"),
            applied == scaled,
            String::new(),
        ));
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Berezin asymptotics

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AsymptoticsSample {
    pub n: u32,
    pub point: GaussRational,
    /// `(f ⋆_ħ g)(w)` from the operator product.
    pub value: GaussRational,
    /// `C₀(w) + ħ C₁(w)`, `ħ = 1/n`.
    pub expected: GaussRational,
    pub error_sq: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatioCheck {
    pub point: GaussRational,
    pub n: u32,
    pub next_n: u32,
    pub error_sq: Rational,
    pub next_error_sq: Rational,
    pub passed: bool,
}

impl RatioCheck {
    /// `|e_n| / |e_{n'}|` as a float, `None` when undefined.
    pub fn ratio(&self) -> Option<f64> {
        use num_traits::ToPrimitive;
        if self.next_error_sq.is_zero() {
            return None;
        }
        (&self.error_sq / &self.next_error_sq).to_f64().map(f64::sqrt)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AsymptoticsReport {
    pub samples: Vec<AsymptoticsSample>,
    pub ratios: Vec<RatioCheck>,
}

impl AsymptoticsReport {
    pub fn passed(&self) -> bool {
        self.ratios.iter().all(|r| r.passed)
    }
}

/// Second-order-accurate symbols `C₀` and `C₁` of the unit potential.
pub fn first_order_symbols(f: &RationalExpr, g: &RationalExpr) -> Result<(RationalExpr, RationalExpr)> {
    let s = star(&StarContext::unit(1), f, g)?;
    Ok((s.coeff(0).clone(), s.coeff(1).clone()))
}

/// Samples at one `n`: `f` and `g` are read as covariant symbols on `O(n)`.
pub fn asymptotics_at(
    f: &RationalExpr,
    g: &RationalExpr,
    c0: &RationalExpr,
    c1: &RationalExpr,
    n: u32,
    points: &[GaussRational],
) -> Result<Vec<AsymptoticsSample>> {
    let model = Cp1Model::new(n);
    let a = model.operator_from_symbol(f)?;
    let b = model.operator_from_symbol(g)?;
    let ab = a.mul(&b)?;
    let hbar = gauss::real(Rational::new(BigInt::one(), BigInt::from(n)));
    points
        .iter()
        .map(|w| {
            let value = model.covariant_symbol_at(&ab, w)?;
            let expected = c0.eval_at(w)? + &hbar * c1.eval_at(w)?;
            let err = &value - &expected;
            Ok(AsymptoticsSample {
                n,
                point: w.clone(),
                value,
                expected,
                error_sq: gauss::norm_sqr(&err),
            })
        })
        .collect()
}

/// Compares consecutive entries of the `n`-sequence: passes when
/// `factor·|e_{n'}| ≤ |e_n|`.
pub fn ratio_checks(samples: &[AsymptoticsSample], factor: &Rational) -> Vec<RatioCheck> {
    let f2 = factor * factor;
    let mut ns: Vec<u32> = samples.iter().map(|s| s.n).collect();
    ns.sort_unstable();
    ns.dedup();
    let mut out = Vec::new();
    for pair in ns.windows(2) {
        for s in samples.iter().filter(|s| s.n == pair[0]) {
            let Some(t) = samples.iter().find(|t| t.n == pair[1] && t.point == s.point) else {
                continue;
            };
            out.push(RatioCheck {
                point: s.point.clone(),
                n: s.n,
                next_n: t.n,
                error_sq: s.error_sq.clone(),
                next_error_sq: t.error_sq.clone(),
                passed: &f2 * &t.error_sq <= s.error_sq,
            });
        }
    }
    out
}

pub fn berezin_asymptotics(
    f: &RationalExpr,
    g: &RationalExpr,
    ns: &[u32],
    points: &[GaussRational],
) -> Result<AsymptoticsReport> {
    let (c0, c1) = first_order_symbols(f, g)?;
    let mut samples = Vec::new();
    for &n in ns {
        samples.extend(asymptotics_at(f, g, &c0, &c1, n, points)?);
    }
    let ratios = ratio_checks(&samples, &Rational::new(BigInt::from(7), BigInt::from(2)));
    Ok(AsymptoticsReport { samples, ratios })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;
    use crate::symbolic::gauss::gq;
    use crate::symbolic::parse_expr;

    fn e(s: &str) -> RationalExpr {
        parse_expr(s).unwrap()
    }

    #[test]
    fn holomorphic_left_factor_is_multiplication() {
        let ctx = StarContext::unit(3);
        let l = build_left_operator(&ctx, &e("z")).unwrap();
        assert_eq!(l, FormalOperator::mult(e("z")).truncate(3));
        let l = build_left_operator(&ctx, &e("5/2")).unwrap();
        assert_eq!(l, FormalOperator::mult(e("5/2")).truncate(3));
    }

    #[test]
    fn antiholomorphic_first_order() {
        let ctx = StarContext::unit(1);
        let l = build_left_operator(&ctx, &e("zbar")).unwrap();
        assert_eq!(
            l.coeff(1),
            DiffOp::new(vec![RationalExpr::zero(), e("(1 + z*zbar)^2")])
        );
        let s = star(&ctx, &e("zbar"), &e("z")).unwrap();
        assert_eq!(s.coeff(0), &e("z*zbar"));
        assert_eq!(s.coeff(1), &e("(1 + z*zbar)^2"));
        let s = star(&ctx, &e("z"), &e("zbar")).unwrap();
        assert!(s.coeff(1).is_zero());
    }

    #[test]
    fn residual_vanishes() {
        let ctx = StarContext::unit(3);
        for (_, f) in test_functions() {
            let l = build_left_operator(&ctx, &f).unwrap();
            assert!(ctx.constraint_residual(&l).is_zero());
            assert!(ctx.zbar_residual(&l).is_zero());
            assert_eq!(l.apply(&NuSeries::constant(RationalExpr::one())).coeff(0), f);
        }
    }

    #[test]
    fn poisson_axiom() {
        let ctx = StarContext::unit(1);
        let f = e("z*zbar/(1 + z*zbar)");
        let g = e("z + zbar");
        let a = star(&ctx, &f, &g).unwrap();
        let b = star(&ctx, &g, &f).unwrap();
        let lhs = a.coeff(1) - b.coeff(1);
        assert_eq!(lhs, poisson(&ctx, &f, &g).scale(&gauss::i()));
        assert_eq!(poisson(&ctx, &e("z"), &e("zbar")), e("i*(1 + z*zbar)^2"));
        assert!(poisson(&ctx, &f, &f).is_zero());
    }

    #[test]
    fn degenerate_and_incompatible_contexts() {
        assert_eq!(
            StarContext::fubini_study(q(0, 1), 2),
            Err(Error::DegeneratePotential)
        );
        assert!(matches!(
            StarContext::new(vec![e("z")], vec![e("z")], 1),
            Err(Error::IncompatiblePotential(_))
        ));
    }

    #[test]
    fn associativity_small() {
        let ctx = StarContext::unit(2);
        let d = associativity_defect(&ctx, &e("zbar"), &e("z*zbar"), &e("z")).unwrap();
        assert!(d.iter().all(|x| x.is_zero()), "{d:?}");
    }

    #[test]
    fn sl2_checks_unit_and_deformed() {
        let ctx = StarContext::unit(3);
        for c in sl2_operator_checks(&ctx, &[q(1, 1)]).unwrap() {
            assert!(c.passed, "{} {}", c.label, c.detail);
        }
        let lams = [q(-1, 1), q(-2, 1)];
        let ctx = StarContext::fubini_study_series(&lams, 3).unwrap();
        for c in sl2_operator_checks(&ctx, &lams).unwrap() {
            assert!(c.passed, "{} {}", c.label, c.detail);
        }
    }

    #[test]
    fn identity_symbol_is_exact() {
        let f = RationalExpr::one();
        let g = e("(1 - z*zbar)/(1 + z*zbar)");
        let rep = berezin_asymptotics(&f, &g, &[2, 4], &[gq(1, 2)]).unwrap();
        assert!(rep.samples.iter().all(|s| s.error_sq.is_zero()));
    }
}
