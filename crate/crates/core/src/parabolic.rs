//! Parabolic data for a subset `Θ` of simple roots: the Levi roots `⟨Θ⟩⁺`,
//! the complement `Δ⁺ \ ⟨Θ⟩` whose size is the complex dimension `m` of the
//! flag manifold `G/Q`, and the weights `δ_Θ` and `δ′_Θ = δ − δ_Θ`.

use std::collections::BTreeSet;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rational::{q, Rational};
use crate::rootsys::{Root, RootSystem, RootSystemSpec, Weight};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParabolicData {
    system: RootSystem,
    theta: BTreeSet<usize>,
    span_theta: Vec<Root>,
    complement: Vec<Root>,
    delta_theta: Weight,
    delta_theta_prime: Weight,
}

impl ParabolicData {
    /// `theta` holds 0-based simple-root indices.
    pub fn new(system: RootSystem, theta: impl IntoIterator<Item = usize>) -> Result<Self> {
        let rank = system.rank();
        let theta: BTreeSet<usize> = theta.into_iter().collect();
        if let Some(&bad) = theta.iter().find(|&&i| i >= rank) {
            return Err(Error::IndexOutOfRange { index: bad, rank });
        }
        let (span_theta, complement): (Vec<Root>, Vec<Root>) = system
            .positive_roots()
            .iter()
            .cloned()
            .partition(|r| r.support().all(|i| theta.contains(&i)));

        let half = q(1, 2);
        let mut delta_theta = Weight::zero(rank);
        for r in &span_theta {
            delta_theta = delta_theta.add(&system.root_weight(r).scale(&half));
        }
        let delta_theta_prime = Weight::rho(rank).sub(&delta_theta);
        Ok(Self {
            system,
            theta,
            span_theta,
            complement,
            delta_theta,
            delta_theta_prime,
        })
    }

    pub fn from_spec(spec: RootSystemSpec, theta: impl IntoIterator<Item = usize>) -> Result<Self> {
        Self::new(RootSystem::new(spec), theta)
    }

    pub fn system(&self) -> &RootSystem {
        &self.system
    }

    pub fn spec(&self) -> RootSystemSpec {
        self.system.spec()
    }

    pub fn rank(&self) -> usize {
        self.system.rank()
    }

    pub fn theta(&self) -> &BTreeSet<usize> {
        &self.theta
    }

    /// `⟨Θ⟩ ∩ Δ⁺`.
    pub fn span_theta(&self) -> &[Root] {
        &self.span_theta
    }

    /// `Δ⁺ \ ⟨Θ⟩`, in positive-root order.
    pub fn complement(&self) -> &[Root] {
        &self.complement
    }

    /// Complex dimension of the flag manifold.
    pub fn m(&self) -> usize {
        self.complement.len()
    }

    pub fn delta_theta(&self) -> &Weight {
        &self.delta_theta
    }

    pub fn delta_theta_prime(&self) -> &Weight {
        &self.delta_theta_prime
    }

    /// Integral and vanishing on every simple root in `Θ`.
    pub fn is_w_theta_invariant(&self, lambda: &Weight) -> bool {
        lambda.rank() == self.rank()
            && lambda.is_integral()
            && self.theta.iter().all(|&i| lambda.coords()[i].is_zero())
    }

    /// Weight of the canonical line bundle, `−2δ′_Θ`.
    pub fn canonical_weight(&self) -> Weight {
        self.delta_theta_prime.scale(&Rational::from_integer((-2).into()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{weight, Family};

    fn pd(f: Family, r: usize, theta: &[usize]) -> ParabolicData {
        ParabolicData::new(RootSystem::from_type(f, r).unwrap(), theta.iter().copied()).unwrap()
    }

    #[test]
    fn a2_empty_theta() {
        let p = pd(Family::A, 2, &[]);
        assert_eq!(p.m(), 3);
        assert_eq!(p.delta_theta(), &Weight::zero(2));
        assert_eq!(p.delta_theta_prime(), &weight(&[1, 1]));
        assert_eq!(p.canonical_weight(), weight(&[-2, -2]));
    }

    #[test]
    fn a2_theta_first_root() {
        let p = pd(Family::A, 2, &[0]);
        assert_eq!(p.m(), 2);
        assert_eq!(p.delta_theta(), &Weight::new(vec![q(1, 1), q(-1, 2)]));
        assert_eq!(p.delta_theta_prime(), &Weight::new(vec![q(0, 1), q(3, 2)]));
        assert_eq!(p.canonical_weight(), weight(&[0, -3]));
        let comp: Vec<_> = p.complement().iter().map(|r| r.coords().to_vec()).collect();
        assert_eq!(comp, vec![vec![0, 1], vec![1, 1]]);
    }

    #[test]
    fn cp1() {
        let p = pd(Family::A, 1, &[]);
        assert_eq!(p.m(), 1);
        assert_eq!(p.canonical_weight(), weight(&[-2]));
    }

    #[test]
    fn invariance_predicate() {
        let p = pd(Family::A, 2, &[0]);
        assert!(p.is_w_theta_invariant(&weight(&[0, -3])));
        assert!(!p.is_w_theta_invariant(&weight(&[1, 0])));
        assert!(!p.is_w_theta_invariant(&Weight::new(vec![q(0, 1), q(3, 2)])));
        assert!(!p.is_w_theta_invariant(&weight(&[0])));
    }

    #[test]
    fn bad_theta_index() {
        let sys = RootSystem::from_type(Family::A, 2).unwrap();
        assert!(ParabolicData::new(sys, [2]).is_err());
    }

    #[test]
    fn full_theta_is_a_point() {
        let p = pd(Family::B, 3, &[0, 1, 2]);
        assert_eq!(p.m(), 0);
        assert_eq!(p.delta_theta_prime(), &Weight::zero(3));
    }
}
