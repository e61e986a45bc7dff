//! Parsing of command-line values and classification of errors into exit codes.

use flagquant::parabolic::ParabolicData;
use flagquant::rootsys::{Family, RootSystem, Weight};
use flagquant::symbolic::gauss::GaussRational;
use flagquant::symbolic::{parse_expr, RationalExpr};
use flagquant::Error;

use crate::SystemArgs;

#[derive(Debug)]
pub enum Failure {
    /// Bad input; exit code 2.
    Usage(String),
    /// Exit code 1.
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::RecursionInconsistency { .. } => Failure::Internal(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

pub fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

/// Θ as 0-based indices from a comma-separated 1-based list.
pub fn theta(s: &str, rank: usize) -> Result<Vec<usize>, Failure> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            let i: usize = t.parse().map_err(|_| usage(format!("`{t}` is not a root index")))?;
            if i == 0 || i > rank {
                return Err(usage(format!("root index {i} out of range 1..={rank}")));
            }
            Ok(i - 1)
        })
        .collect()
}

pub fn system(family: &str, rank: usize) -> Result<RootSystem, Failure> {
    let family: Family = family.parse()?;
    Ok(RootSystem::from_type(family, rank)?)
}

pub fn parabolic(args: &SystemArgs) -> Result<ParabolicData, Failure> {
    let sys = system(&args.family, args.rank)?;
    let theta = theta(&args.theta, args.rank)?;
    Ok(ParabolicData::new(sys, theta)?)
}

pub fn weight(s: &str, rank: usize) -> Result<Weight, Failure> {
    let w: Weight = s.parse()?;
    if w.rank() != rank {
        return Err(usage(format!("weight has {} coordinates, rank is {rank}", w.rank())));
    }
    Ok(w)
}

pub fn expr(s: &str) -> Result<RationalExpr, Failure> {
    parse_expr(s).map_err(|e| usage(format!("`{s}`: {e}")))
}

pub fn constant(s: &str) -> Result<GaussRational, Failure> {
    expr(s)?
        .as_constant()
        .ok_or_else(|| usage(format!("`{s}` is not a constant")))
}

/// `z=a` or `z=a,zbar=b`; `zbar` defaults to the conjugate of `z`.
pub fn point(s: &str) -> Result<(GaussRational, GaussRational), Failure> {
    let mut z = None;
    let mut zbar = None;
    for part in s.split(',') {
        let (k, v) = part
            .split_once('=')
            .ok_or_else(|| usage(format!("`{part}` should look like z=1/2")))?;
        match k.trim() {
            "z" => z = Some(constant(v)?),
            "zbar" => zbar = Some(constant(v)?),
            other => return Err(usage(format!("unknown variable `{other}`"))),
        }
    }
    let z = z.ok_or_else(|| usage("missing z=…"))?;
    let zbar = zbar.unwrap_or_else(|| z.conj());
    Ok((z, zbar))
}

pub fn list<T>(s: &str, sep: char, f: impl Fn(&str) -> Result<T, Failure>) -> Result<Vec<T>, Failure> {
    s.split(sep).map(str::trim).filter(|t| !t.is_empty()).map(f).collect()
}
