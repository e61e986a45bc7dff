//! s-modules on a flag manifold, parametrized by a rational weight-like
//! point `λ` through the pairings `λ(H_α)`.
//!
//! The module is nondegenerate iff `λ(H_α) ≠ 0` for every `α ∈ Δ⁺ \ ⟨Θ⟩`,
//! and the inertia index of its pseudo-Kähler metric counts the negative
//! pairings.

use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::parabolic::ParabolicData;
use crate::rootsys::Weight;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SModulePoint {
    pd: ParabolicData,
    lam: Weight,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Inertia {
    Index(usize),
    Degenerate,
}

impl fmt::Display for Inertia {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Inertia::Index(k) => write!(f, "{k}"),
            Inertia::Degenerate => f.write_str("degenerate"),
        }
    }
}

impl SModulePoint {
    /// Fails unless `lam` has the right rank and vanishes on `Θ`.
    pub fn new(pd: ParabolicData, lam: Weight) -> Result<Self> {
        if lam.rank() != pd.rank() {
            return Err(Error::LengthMismatch {
                expected: pd.rank(),
                got: lam.rank(),
            });
        }
        if pd.theta().iter().any(|&i| !lam.coords()[i].is_zero()) {
            return Err(Error::NotThetaStable(lam.to_string()));
        }
        Ok(Self { pd, lam })
    }

    pub fn parabolic(&self) -> &ParabolicData {
        &self.pd
    }

    pub fn lam(&self) -> &Weight {
        &self.lam
    }

    fn complement_pairings(&self) -> impl Iterator<Item = num_rational::BigRational> + '_ {
        let sys = self.pd.system();
        self.pd
            .complement()
            .iter()
            .map(move |a| sys.pairing(&self.lam, a).expect("rank checked in new"))
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.complement_pairings().all(|p| !p.is_zero())
    }

    pub fn inertia_index(&self) -> Inertia {
        let mut negative = 0;
        for p in self.complement_pairings() {
            if p.is_zero() {
                return Inertia::Degenerate;
            }
            if p.is_negative() {
                negative += 1;
            }
        }
        Inertia::Index(negative)
    }

    /// The dual module `λ′ = −λ − 2δ′_Θ`.
    pub fn dual(&self) -> SModulePoint {
        let lam = self.lam.neg().add(&self.pd.canonical_weight());
        SModulePoint {
            pd: self.pd.clone(),
            lam,
        }
    }

    /// The canonical module `λ = −2δ′_Θ`.
    pub fn canonical(pd: ParabolicData) -> SModulePoint {
        let lam = pd.canonical_weight();
        SModulePoint { pd, lam }
    }
}
