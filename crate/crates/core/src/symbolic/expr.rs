//! Rational functions in `z, z̄` over the Gaussian rationals.
//!
//! Canonical form: numerator and denominator coprime, denominator with
//! leading coefficient one, zero stored as `0/1`. Structural equality is
//! therefore mathematical equality.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::gauss::{self, GaussRational};
use super::poly::{gcd, Mono, Poly};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalExpr {
    num: Poly,
    den: Poly,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Var {
    Z,
    Zbar,
}

impl Default for RationalExpr {
    fn default() -> Self {
        Self::zero()
    }
}

impl RationalExpr {
    pub fn zero() -> Self {
        Self {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(Poly::one())
    }

    pub fn constant(c: GaussRational) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn int(n: i64) -> Self {
        Self::constant(gauss::int(n))
    }

    pub fn z() -> Self {
        Self::from_poly(Poly::z())
    }

    pub fn zbar() -> Self {
        Self::from_poly(Poly::zbar())
    }

    pub fn from_poly(num: Poly) -> Self {
        Self { num, den: Poly::one() }
    }

    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = gcd(&num, &den);
        if g.is_one() {
            Self::normalized(num, den)
        } else {
            Self::normalized(
                num.exact_div(&g).expect("gcd divides numerator"),
                den.exact_div(&g).expect("gcd divides denominator"),
            )
        }
    }

    fn normalized(num: Poly, den: Poly) -> Self {
        let lc = den.leading().expect("nonzero denominator").1.clone();
        if lc.is_one() {
            Self { num, den }
        } else {
            let inv = lc.inv();
            Self {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_constant(&self) -> Option<GaussRational> {
        if self.den.is_one() {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub fn scale(&self, c: &GaussRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let inv = Self::normalized(rhs.den.clone(), rhs.num.clone());
        Ok(self * &inv)
    }

    pub fn recip(&self) -> Result<Self> {
        Self::one().checked_div(self)
    }

    pub fn pow(&self, k: i32) -> Result<Self> {
        if k < 0 {
            return self.recip()?.pow(-k);
        }
        let k = k as u32;
        Ok(Self {
            num: self.num.pow(k),
            den: self.den.pow(k),
        })
    }

    pub fn diff(&self, v: Var) -> Self {
        let d = |p: &Poly| match v {
            Var::Z => p.diff_z(),
            Var::Zbar => p.diff_zbar(),
        };
        if self.den.is_one() {
            return Self::from_poly(d(&self.num));
        }
        let dn = d(&self.num);
        let dd = d(&self.den);
        if dd.is_zero() {
            return Self::reduce(dn, self.den.clone());
        }
        // (n/d)' = (n' d − n d')/d²; dividing out g = gcd(d, d') keeps the
        // intermediate denominator at d²/g.
        let g = gcd(&self.den, &dd);
        let dg = self.den.exact_div(&g).expect("gcd divides");
        let ddg = dd.exact_div(&g).expect("gcd divides");
        let num = &(&dn * &dg) - &(&self.num * &ddg);
        Self::reduce(num, &self.den * &dg)
    }

    pub fn dz(&self) -> Self {
        self.diff(Var::Z)
    }

    pub fn dzbar(&self) -> Self {
        self.diff(Var::Zbar)
    }

    /// Complex conjugation: swaps `z ↔ z̄` and conjugates coefficients.
    pub fn conjugate(&self) -> Self {
        let den = self.den.conjugate();
        Self::normalized(self.num.conjugate(), den)
    }

    /// Evaluates with independent values for `z` and `z̄`.
    pub fn eval(&self, z: &GaussRational, zbar: &GaussRational) -> Result<GaussRational> {
        let d = self.den.eval(z, zbar);
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.num.eval(z, zbar) / d)
    }

    /// Evaluates at the point `z = w`, `z̄ = w̄`.
    pub fn eval_at(&self, w: &GaussRational) -> Result<GaussRational> {
        self.eval(w, &w.conj())
    }

    /// If the denominator is `(1 + z z̄)^k`, returns `k`.
    pub fn one_plus_t_power(&self) -> Option<u32> {
        one_plus_t_exponent(&self.den)
    }
}

pub(crate) fn one_plus_t_exponent(p: &Poly) -> Option<u32> {
    let k = p.degree_z();
    if p.degree_zbar() != k || p.num_terms() != k as usize + 1 {
        return None;
    }
    (Poly::one_plus_t().pow(k) == *p).then_some(k)
}

impl From<Poly> for RationalExpr {
    fn from(p: Poly) -> Self {
        Self::from_poly(p)
    }
}

impl From<GaussRational> for RationalExpr {
    fn from(c: GaussRational) -> Self {
        Self::constant(c)
    }
}

impl<'a> Add<&'a RationalExpr> for &'a RationalExpr {
    type Output = RationalExpr;

    fn add(self, rhs: &RationalExpr) -> RationalExpr {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            let num = &self.num + &rhs.num;
            if self.den.is_one() {
                return RationalExpr::from_poly(num);
            }
            return RationalExpr::reduce(num, self.den.clone());
        }
        if self.den.is_one() {
            return RationalExpr::normalized(&(&self.num * &rhs.den) + &rhs.num, rhs.den.clone());
        }
        if rhs.den.is_one() {
            return RationalExpr::normalized(&(&rhs.num * &self.den) + &self.num, self.den.clone());
        }
        let g = gcd(&self.den, &rhs.den);
        let a = rhs.den.exact_div(&g).expect("gcd divides");
        let b = self.den.exact_div(&g).expect("gcd divides");
        let num = &(&self.num * &a) + &(&rhs.num * &b);
        RationalExpr::reduce(num, &self.den * &a)
    }
}

impl<'a> Sub<&'a RationalExpr> for &'a RationalExpr {
    type Output = RationalExpr;

    fn sub(self, rhs: &RationalExpr) -> RationalExpr {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RationalExpr> for &'a RationalExpr {
    type Output = RationalExpr;

    fn mul(self, rhs: &RationalExpr) -> RationalExpr {
        if self.is_zero() || rhs.is_zero() {
            return RationalExpr::zero();
        }
        if let Some(c) = self.as_constant() {
            return rhs.scale(&c);
        }
        if let Some(c) = rhs.as_constant() {
            return self.scale(&c);
        }
        let g1 = gcd(&self.num, &rhs.den);
        let g2 = gcd(&rhs.num, &self.den);
        let div = |p: &Poly, g: &Poly| {
            if g.is_one() {
                p.clone()
            } else {
                p.exact_div(g).expect("gcd divides")
            }
        };
        let num = &div(&self.num, &g1) * &div(&rhs.num, &g2);
        let den = &div(&self.den, &g2) * &div(&rhs.den, &g1);
        RationalExpr::normalized(num, den)
    }
}

impl Neg for &RationalExpr {
    type Output = RationalExpr;

    fn neg(self) -> RationalExpr {
        RationalExpr {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<RationalExpr> for RationalExpr {
            type Output = RationalExpr;
            fn $m(self, rhs: RationalExpr) -> RationalExpr {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for RationalExpr {
    type Output = RationalExpr;
    fn neg(self) -> RationalExpr {
        -&self
    }
}

impl Zero for RationalExpr {
    fn zero() -> Self {
        RationalExpr::zero()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RationalExpr {
    fn one() -> Self {
        RationalExpr::one()
    }
}

// ---------------------------------------------------------------------------
// printing

fn mono_str(m: &Mono) -> String {
    let part = |name: &str, e: u32| match e {
        0 => None,
        1 => Some(name.to_string()),
        e => Some(format!("{name}^{e}")),
    };
    [part("z", m.z), part("zbar", m.zbar)]
        .into_iter()
        .flatten()
        .collect::<Vec<_>>()
        .join("*")
}

fn term_str(m: &Mono, c: &GaussRational) -> String {
    let ms = mono_str(m);
    if ms.is_empty() {
        return gauss::Display(c).to_string();
    }
    if c.is_one() {
        return ms;
    }
    if (-c.clone()).is_one() {
        return format!("-{ms}");
    }
    format!("{}*{ms}", gauss::Display(c))
}

/// Prints a polynomial in ascending monomial order.
pub(crate) fn poly_str(p: &Poly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, (m, c)) in p.terms().enumerate() {
        let t = term_str(m, c);
        if k == 0 {
            out.push_str(&t);
        } else if let Some(rest) = t.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(&t);
        }
    }
    out
}

impl fmt::Display for RationalExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = poly_str(&self.num);
        if self.den.is_one() {
            return f.write_str(&num);
        }
        let num = if self.num.num_terms() > 1 {
            format!("({num})")
        } else {
            num
        };
        match one_plus_t_exponent(&self.den) {
            Some(1) => write!(f, "{num}/(1 + z*zbar)"),
            Some(k) => write!(f, "{num}/(1 + z*zbar)^{k}"),
            None => write!(f, "{num}/({})", poly_str(&self.den)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbolic::gauss::{gi, gq};

    fn t() -> RationalExpr {
        RationalExpr::from_poly(Poly::one_plus_t())
    }

    #[test]
    fn canonical_form_cancels() {
        let a = (&RationalExpr::z() * &t()).checked_div(&(&t() * &t())).unwrap();
        assert_eq!(a, RationalExpr::z().checked_div(&t()).unwrap());
        let b = RationalExpr::new(Poly::constant(gq(2, 1)), Poly::constant(gq(4, 1))).unwrap();
        assert_eq!(b, RationalExpr::constant(gq(1, 2)));
        assert!(RationalExpr::new(Poly::one(), Poly::zero()).is_err());
    }

    #[test]
    fn sums_and_products() {
        let f = RationalExpr::one().checked_div(&t()).unwrap();
        let g = (&RationalExpr::z() * &RationalExpr::zbar()).checked_div(&t()).unwrap();
        assert_eq!(&f + &g, RationalExpr::one());
        assert!((&f - &f).is_zero());
    }

    #[test]
    fn derivative_of_moment() {
        // d/dz̄ of (1 − t)/(1 + t) is −2z/(1 + t)²
        let one = RationalExpr::one();
        let zz = &RationalExpr::z() * &RationalExpr::zbar();
        let f = (&one - &zz).checked_div(&t()).unwrap();
        let expected = RationalExpr::z()
            .scale(&gq(-2, 1))
            .checked_div(&t().pow(2).unwrap())
            .unwrap();
        assert_eq!(f.dzbar(), expected);
    }

    #[test]
    fn conjugation() {
        let f = RationalExpr::z().scale(&gi(0, 1)).checked_div(&t()).unwrap();
        let c = f.conjugate();
        assert_eq!(c, RationalExpr::zbar().scale(&gi(0, -1)).checked_div(&t()).unwrap());
        let w = gi(1, 2);
        assert_eq!(c.eval_at(&w).unwrap(), f.eval_at(&w).unwrap().conj());
    }

    #[test]
    fn printing() {
        let one = RationalExpr::one();
        let zz = &RationalExpr::z() * &RationalExpr::zbar();
        let f = (&one - &zz).scale(&gq(2, 1)).checked_div(&t()).unwrap();
        assert_eq!(f.to_string(), "(2 - 2*z*zbar)/(1 + z*zbar)");
        let g = RationalExpr::zbar().checked_div(&t().pow(2).unwrap()).unwrap();
        assert_eq!(g.to_string(), "zbar/(1 + z*zbar)^2");
        assert_eq!(RationalExpr::zero().to_string(), "0");
        assert_eq!(RationalExpr::constant(gi(0, -1)).to_string(), "-i");
    }
}
