//! Bott–Borel–Weil: the cohomology of the homogeneous line bundle `L_λ` on
//! `G/Q` is either zero in every degree (when `λ+δ` is singular) or
//! concentrated in degree `k = #{α > 0 : (λ+δ)(H_α) < 0}`, where it carries
//! the irreducible representation of highest weight `ζ = w(λ+δ) − δ`.

use num_bigint::BigUint;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::parabolic::ParabolicData;
use crate::rootsys::{Weight, WeylWord};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BbwResult {
    Vanishes,
    Cohomology {
        degree: usize,
        highest_weight: Weight,
        dim: BigUint,
        /// Word `w` with `w(λ+δ)` dominant.
        word: WeylWord,
    },
}

impl BbwResult {
    pub fn vanishes(&self) -> bool {
        matches!(self, BbwResult::Vanishes)
    }

    pub fn degree(&self) -> Option<usize> {
        match self {
            BbwResult::Vanishes => None,
            BbwResult::Cohomology { degree, .. } => Some(*degree),
        }
    }

    pub fn highest_weight(&self) -> Option<&Weight> {
        match self {
            BbwResult::Vanishes => None,
            BbwResult::Cohomology { highest_weight, .. } => Some(highest_weight),
        }
    }

    pub fn dim(&self) -> Option<&BigUint> {
        match self {
            BbwResult::Vanishes => None,
            BbwResult::Cohomology { dim, .. } => Some(dim),
        }
    }
}

pub fn bbw(pd: &ParabolicData, lambda: &Weight) -> Result<BbwResult> {
    if !pd.is_w_theta_invariant(lambda) {
        if lambda.rank() != pd.rank() {
            return Err(Error::LengthMismatch {
                expected: pd.rank(),
                got: lambda.rank(),
            });
        }
        return Err(Error::NotThetaInvariant(lambda.to_string()));
    }
    let sys = pd.system();
    let shifted = lambda.add(&Weight::rho(pd.rank()));
    let pairings = sys.pairings(&shifted)?;
    if pairings.iter().any(|p| p.is_zero()) {
        return Ok(BbwResult::Vanishes);
    }
    let degree = pairings.iter().filter(|p| p.is_negative()).count();
    let dom = sys.to_dominant(&shifted)?;
    let highest_weight = dom.dominant.sub(&Weight::rho(pd.rank()));
    let dim = sys.weyl_dim(&highest_weight)?;
    Ok(BbwResult::Cohomology {
        degree,
        highest_weight,
        dim,
        word: dom.word,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DualityOutcome {
    /// Both `λ` and `λ′` give vanishing cohomology.
    BothVanish,
    /// Degrees `k` and `m − k`, highest weights `ζ` and `−w₀ζ`, equal dims.
    Dual,
    Mismatch(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualityReport {
    pub lambda: Weight,
    pub lambda_dual: Weight,
    pub m: usize,
    pub original: BbwResult,
    pub dual: BbwResult,
    pub outcome: DualityOutcome,
}

impl DualityReport {
    pub fn passed(&self) -> bool {
        !matches!(self.outcome, DualityOutcome::Mismatch(_))
    }
}

/// Checks Kodaira–Serre duality between `L_λ` and `L_{λ′}`,
/// `λ′ = −λ − 2δ′_Θ`.
pub fn duality_check(pd: &ParabolicData, lambda: &Weight) -> Result<DualityReport> {
    let original = bbw(pd, lambda)?;
    let lambda_dual = lambda.neg().add(&pd.canonical_weight());
    let dual = bbw(pd, &lambda_dual)?;
    let m = pd.m();
    let outcome = match (&original, &dual) {
        (BbwResult::Vanishes, BbwResult::Vanishes) => DualityOutcome::BothVanish,
        (BbwResult::Vanishes, _) | (_, BbwResult::Vanishes) => {
            DualityOutcome::Mismatch("exactly one side vanishes".into())
        }
        (
            BbwResult::Cohomology {
                degree: k,
                highest_weight: zeta,
                dim: n,
                ..
            },
            BbwResult::Cohomology {
                degree: k2,
                highest_weight: zeta2,
                dim: n2,
                ..
            },
        ) => {
            let expected_zeta = pd.system().negate_by_w0(zeta)?;
            if *k > m || *k2 != m - *k {
                DualityOutcome::Mismatch(format!("degrees {k} and {k2} with m = {m}"))
            } else if *zeta2 != expected_zeta {
                DualityOutcome::Mismatch(format!(
                    "dual highest weight {zeta2}, expected −w₀ζ = {expected_zeta}"
                ))
            } else if n != n2 {
                DualityOutcome::Mismatch(format!("dimensions {n} and {n2}"))
            } else {
                DualityOutcome::Dual
            }
        }
    };
    Ok(DualityReport {
        lambda: lambda.clone(),
        lambda_dual,
        m,
        original,
        dual,
        outcome,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{weight, Family, RootSystem};

    fn pd(f: Family, r: usize, theta: &[usize]) -> ParabolicData {
        ParabolicData::new(RootSystem::from_type(f, r).unwrap(), theta.iter().copied()).unwrap()
    }

    fn cohom(r: &BbwResult) -> (usize, Weight, u64) {
        match r {
            BbwResult::Cohomology {
                degree,
                highest_weight,
                dim,
                ..
            } => (
                *degree,
                highest_weight.clone(),
                dim.to_string().parse().unwrap(),
            ),
            BbwResult::Vanishes => panic!("unexpected vanishing"),
        }
    }

    #[test]
    fn cp1_examples() {
        let p = pd(Family::A, 1, &[]);
        assert_eq!(cohom(&bbw(&p, &weight(&[4])).unwrap()), (0, weight(&[4]), 5));
        assert!(bbw(&p, &weight(&[-1])).unwrap().vanishes());
        assert_eq!(cohom(&bbw(&p, &weight(&[-6])).unwrap()), (1, weight(&[4]), 5));
    }

    #[test]
    fn cp2_canonical_bundle() {
        let p = pd(Family::A, 2, &[0]);
        let r = bbw(&p, &weight(&[0, -3])).unwrap();
        assert_eq!(cohom(&r), (2, weight(&[0, 0]), 1));
        if let BbwResult::Cohomology { word, .. } = r {
            assert_eq!(word.len(), 2);
        }
    }

    #[test]
    fn rejects_non_invariant() {
        let p = pd(Family::A, 2, &[0]);
        assert!(matches!(
            bbw(&p, &weight(&[1, 0])),
            Err(Error::NotThetaInvariant(_))
        ));
        assert!(bbw(&p, &weight(&[0])).is_err());
    }

    #[test]
    fn duality_examples() {
        let p = pd(Family::A, 2, &[0]);
        for n in 0..5 {
            let rep = duality_check(&p, &weight(&[0, n])).unwrap();
            assert_eq!(rep.lambda_dual, weight(&[0, -n - 3]));
            assert_eq!(rep.outcome, DualityOutcome::Dual);
            assert_eq!(rep.original.degree(), Some(0));
            assert_eq!(rep.dual.degree(), Some(2));
            assert_eq!(rep.original.highest_weight(), Some(&weight(&[0, n])));
            assert_eq!(rep.dual.highest_weight(), Some(&weight(&[n, 0])));
        }
        let cp1 = pd(Family::A, 1, &[]);
        let rep = duality_check(&cp1, &weight(&[3])).unwrap();
        assert_eq!(rep.lambda_dual, weight(&[-5]));
        assert_eq!(rep.dual.degree(), Some(1));
        assert_eq!(rep.original.dim(), rep.dual.dim());
        let rep = duality_check(&cp1, &weight(&[-1])).unwrap();
        assert_eq!(rep.outcome, DualityOutcome::BothVanish);
    }
}
