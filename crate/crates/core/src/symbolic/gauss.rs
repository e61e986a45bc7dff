//! Gaussian rationals `a + b i`, `a, b ∈ Q`.

use std::fmt;

use num_complex::Complex;
use num_traits::{One, Signed, Zero};

use crate::rational::{int as rint, q, Rational};

pub type GaussRational = Complex<Rational>;

pub fn gq(n: i64, d: i64) -> GaussRational {
    GaussRational::new(q(n, d), Rational::zero())
}

/// `re + im·i` from integers.
pub fn gi(re: i64, im: i64) -> GaussRational {
    GaussRational::new(rint(re), rint(im))
}

pub fn int(n: i64) -> GaussRational {
    GaussRational::new(rint(n), Rational::zero())
}

pub fn real(r: Rational) -> GaussRational {
    GaussRational::new(r, Rational::zero())
}

pub fn i() -> GaussRational {
    GaussRational::new(Rational::zero(), Rational::one())
}

pub fn is_real(c: &GaussRational) -> bool {
    c.im.is_zero()
}

/// `|c|²`, exact.
pub fn norm_sqr(c: &GaussRational) -> Rational {
    &c.re * &c.re + &c.im * &c.im
}

/// Formats in the expression grammar: `3/2`, `-i`, `1/2*i`, `(1 - 2*i)`.
pub struct Display<'a>(pub &'a GaussRational);

impl fmt::Display for Display<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = self.0;
        if c.im.is_zero() {
            return write!(f, "{}", c.re);
        }
        let im = ImagPart(&c.im);
        if c.re.is_zero() {
            return write!(f, "{im}");
        }
        if c.im.is_negative() {
            write!(f, "({} - {})", c.re, ImagPart(&-c.im.clone()))
        } else {
            write!(f, "({} + {im})", c.re)
        }
    }
}

struct ImagPart<'a>(&'a Rational);

impl fmt::Display for ImagPart<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self.0;
        if r.is_one() {
            f.write_str("i")
        } else if (-r.clone()).is_one() {
            f.write_str("-i")
        } else {
            write!(f, "{r}*i")
        }
    }
}

/// Approximate value as `(re, im)` floats, for display and plotting only.
pub fn to_f64(c: &GaussRational) -> (f64, f64) {
    use num_traits::ToPrimitive;
    (c.re.to_f64().unwrap_or(f64::NAN), c.im.to_f64().unwrap_or(f64::NAN))
}
