mod common;

use common::{box_weights, qi, small_systems, subsets, Oracle};
use flagquant::bbw::{bbw, duality_check, BbwResult, DualityOutcome};
use flagquant::parabolic::ParabolicData;
use flagquant::rational::q;
use flagquant::rootsys::{weight, Family, RootSystem, Weight, WeylWord};
use flagquant::smodule::{Inertia, SModulePoint};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn systems() -> Vec<RootSystem> {
    small_systems()
        .into_iter()
        .map(|(f, r)| RootSystem::from_type(f, r).unwrap())
        .collect()
}

fn system_strategy() -> impl Strategy<Value = RootSystem> {
    prop::sample::select(systems())
}

fn rational_weight(rank: usize) -> impl Strategy<Value = Weight> {
    prop::collection::vec((-12i64..=12, 1i64..=4), rank)
        .prop_map(|v| Weight::new(v.into_iter().map(|(n, d)| q(n, d)).collect()))
}

#[test]
fn positive_roots_match_orbit_oracle() {
    for sys in systems() {
        assert_eq!(sys.num_positive(), Oracle::new(&sys).num_positive_roots(), "{}", sys.spec());
    }
    for (f, r) in [(Family::E, 6), (Family::F, 4), (Family::D, 5), (Family::C, 4)] {
        let sys = RootSystem::from_type(f, r).unwrap();
        assert_eq!(sys.num_positive(), Oracle::new(&sys).num_positive_roots(), "{}", sys.spec());
    }
}

#[test]
fn weyl_dim_matches_freudenthal() {
    for sys in systems() {
        let oracle = Oracle::new(&sys);
        let rank = sys.rank();
        for lam in box_weights(rank, 0, 4, &[]) {
            if lam.iter().sum::<i64>() > 4 {
                continue;
            }
            let expected = oracle.freudenthal_dim(&lam);
            let got = sys.weyl_dim(&weight(&lam)).unwrap();
            assert_eq!(BigInt::from(got), expected, "{} {:?}", sys.spec(), lam);
        }
    }
}

#[test]
fn bbw_matches_orbit_oracle_on_small_box() {
    for sys in systems() {
        let oracle = Oracle::new(&sys);
        for theta in subsets(sys.rank()) {
            let pd = ParabolicData::new(sys.clone(), theta.iter().copied()).unwrap();
            for lam in box_weights(sys.rank(), -3, 3, &theta) {
                let got = bbw(&pd, &weight(&lam)).unwrap();
                match (oracle.bbw(&lam), got) {
                    (None, BbwResult::Vanishes) => {}
                    (Some((k, zeta)), BbwResult::Cohomology { degree, highest_weight, .. }) => {
                        assert_eq!(degree, k);
                        assert_eq!(highest_weight, weight(&zeta));
                    }
                    (o, g) => panic!("{} {:?}: oracle {:?}, got {:?}", sys.spec(), lam, o, g),
                }
            }
        }
    }
}

#[test]
fn complement_is_stable_under_levi_reflections() {
    for sys in systems() {
        for theta in subsets(sys.rank()) {
            let pd = ParabolicData::new(sys.clone(), theta.iter().copied()).unwrap();
            for &i in &theta {
                for beta in pd.complement() {
                    let r = sys.reflect_root(i, beta).unwrap();
                    assert!(pd.complement().contains(&r), "{} Θ={:?}", sys.spec(), theta);
                }
            }
        }
    }
}

#[test]
fn canonical_weight_is_theta_invariant() {
    for sys in systems() {
        for theta in subsets(sys.rank()) {
            let pd = ParabolicData::new(sys.clone(), theta.iter().copied()).unwrap();
            assert!(pd.is_w_theta_invariant(&pd.canonical_weight()));
            // δ′_Θ pairs positively with every root of the complement
            for beta in pd.complement() {
                assert!(sys.pairing(pd.delta_theta_prime(), beta).unwrap().is_positive());
            }
        }
    }
}

/// The inertia indices of `λ` and its dual add up to `m` unless some pairing
/// lies strictly between `−2δ′_Θ(H_α)` and `0`.
#[test]
fn inertia_complementarity_outside_the_gap() {
    for sys in systems() {
        for theta in subsets(sys.rank()) {
            let pd = ParabolicData::new(sys.clone(), theta.iter().copied()).unwrap();
            for lam in box_weights(sys.rank(), -4, 4, &theta) {
                let s = SModulePoint::new(pd.clone(), weight(&lam)).unwrap();
                let (Inertia::Index(a), Inertia::Index(b)) = (s.inertia_index(), s.dual().inertia_index()) else {
                    continue;
                };
                let in_gap = pd.complement().iter().any(|beta| {
                    let p = sys.pairing(&weight(&lam), beta).unwrap();
                    let c = sys.pairing(&pd.canonical_weight(), beta).unwrap();
                    p.is_negative() && p > c
                });
                assert_eq!(a + b == pd.m(), !in_gap, "{} Θ={:?} λ={:?}", sys.spec(), theta, lam);
            }
        }
    }
}

#[test]
fn inertia_sum_fails_on_cp1_minus_one() {
    let pd = ParabolicData::new(RootSystem::from_type(Family::A, 1).unwrap(), []).unwrap();
    let s = SModulePoint::new(pd, weight(&[-1])).unwrap();
    assert_eq!(s.inertia_index(), Inertia::Index(1));
    assert_eq!(s.dual().inertia_index(), Inertia::Index(1));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn reflections_are_involutions((sys, lam, i) in system_strategy()
        .prop_flat_map(|s| { let r = s.rank(); (Just(s), rational_weight(r), 0..r) }))
    {
        let once = sys.simple_reflection(i, &lam).unwrap();
        prop_assert_eq!(sys.simple_reflection(i, &once).unwrap(), lam);
    }

    #[test]
    fn reflections_are_linear((sys, a, b, c, i) in system_strategy()
        .prop_flat_map(|s| { let r = s.rank(); (Just(s), rational_weight(r), rational_weight(r), -5i64..5, 0..r) }))
    {
        let c = qi(c);
        let lhs = sys.simple_reflection(i, &a.scale(&c).add(&b)).unwrap();
        let rhs = sys.simple_reflection(i, &a).unwrap().scale(&c).add(&sys.simple_reflection(i, &b).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn dominant_word_replays((sys, lam) in system_strategy()
        .prop_flat_map(|s| { let r = s.rank(); (Just(s), rational_weight(r)) }))
    {
        let dom = sys.to_dominant(&lam).unwrap();
        prop_assert!(dom.dominant.is_dominant());
        prop_assert_eq!(sys.apply_word(&dom.word, &lam).unwrap(), dom.dominant.clone());
        // the word is reduced: its length equals the number of inversions
        if sys.pairings(&lam).unwrap().iter().all(|p| !p.is_zero()) {
            prop_assert_eq!(dom.word.len(), dom.inversions);
        }
    }

    #[test]
    fn reflections_preserve_pairing_multiset((sys, lam, i) in system_strategy()
        .prop_flat_map(|s| { let r = s.rank(); (Just(s), rational_weight(r), 0..r) }))
    {
        let mut a: Vec<_> = sys.pairings(&lam).unwrap().into_iter().map(|p| p.abs()).collect();
        let mut b: Vec<_> = sys.pairings(&sys.simple_reflection(i, &lam).unwrap()).unwrap()
            .into_iter().map(|p| p.abs()).collect();
        a.sort();
        b.sort();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn longest_element_sends_rho_to_minus_rho(sys in system_strategy()) {
        let w0 = sys.longest_element();
        prop_assert_eq!(w0.len(), sys.num_positive());
        let rho = Weight::rho(sys.rank());
        prop_assert_eq!(sys.apply_word(&w0, &rho).unwrap(), rho.neg());
        prop_assert_eq!(sys.apply_word(&WeylWord::new(vec![]), &rho).unwrap(), rho);
    }

    #[test]
    fn dual_is_an_involution((sys, theta_mask, lam) in system_strategy()
        .prop_flat_map(|s| { let r = s.rank(); (Just(s), 0u32..(1 << r), rational_weight(r)) }))
    {
        let theta: Vec<usize> = (0..sys.rank()).filter(|i| theta_mask & (1 << i) != 0).collect();
        let pd = ParabolicData::new(sys, theta.iter().copied()).unwrap();
        let mut coords = lam.coords().to_vec();
        for &i in &theta { coords[i] = q(0, 1); }
        let s = SModulePoint::new(pd, Weight::new(coords)).unwrap();
        prop_assert_eq!(s.dual().dual(), s);
    }

    #[test]
    fn inertia_is_scale_invariant((sys, lam, num, den) in system_strategy()
        .prop_flat_map(|s| { let r = s.rank(); (Just(s), rational_weight(r), 1i64..20, 1i64..20) }))
    {
        let pd = ParabolicData::new(sys, []).unwrap();
        let m = pd.m();
        let s = SModulePoint::new(pd.clone(), lam.clone()).unwrap();
        let scaled = SModulePoint::new(pd.clone(), lam.scale(&q(num, den))).unwrap();
        prop_assert_eq!(s.is_nondegenerate(), scaled.is_nondegenerate());
        prop_assert_eq!(s.inertia_index(), scaled.inertia_index());
        let flipped = SModulePoint::new(pd, lam.neg()).unwrap();
        match (s.inertia_index(), flipped.inertia_index()) {
            (Inertia::Index(a), Inertia::Index(b)) => prop_assert_eq!(a + b, m),
            (Inertia::Degenerate, Inertia::Degenerate) => {}
            other => prop_assert!(false, "{:?}", other),
        }
    }

    #[test]
    fn duality_holds_on_random_weights((sys, theta_mask, lam) in system_strategy()
        .prop_flat_map(|s| { let r = s.rank(); (Just(s), 0u32..(1 << r), prop::collection::vec(-8i64..=8, r)) }))
    {
        let theta: Vec<usize> = (0..sys.rank()).filter(|i| theta_mask & (1 << i) != 0).collect();
        let mut lam = lam;
        for &i in &theta { lam[i] = 0; }
        let pd = ParabolicData::new(sys, theta.iter().copied()).unwrap();
        let rep = duality_check(&pd, &weight(&lam)).unwrap();
        prop_assert!(rep.passed(), "{:?}", rep.outcome);
        if let DualityOutcome::Dual = rep.outcome {
            prop_assert_eq!(rep.original.dim(), rep.dual.dim());
        }
    }
}
