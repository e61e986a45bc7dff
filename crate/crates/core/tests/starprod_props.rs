use flagquant::rational::q;
use flagquant::starprod::{
    associativity_defect, build_left_operator, opposite_star, poisson, sl2_operator_checks, star, test_functions,
    StarContext,
};
use flagquant::symbolic::gauss::{gi, gq, GaussRational};
use flagquant::symbolic::{parse_expr, FormalOperator, Mono, Poly, RationalExpr};
use proptest::prelude::*;

fn e(s: &str) -> RationalExpr {
    parse_expr(s).unwrap()
}

fn gauss_rational() -> impl Strategy<Value = GaussRational> {
    (-4i64..=4, -4i64..=4, 1i64..=3).prop_map(|(a, b, d)| gi(a, b) * gq(1, d))
}

fn holomorphic() -> impl Strategy<Value = RationalExpr> {
    prop::collection::vec((0u32..=3, gauss_rational()), 1..=3)
        .prop_map(|ts| RationalExpr::from_poly(Poly::from_terms(ts.into_iter().map(|(k, c)| (Mono::new(k, 0), c)))))
}

fn antiholomorphic() -> impl Strategy<Value = RationalExpr> {
    holomorphic().prop_map(|a| a.conjugate())
}

fn small_expr() -> impl Strategy<Value = RationalExpr> {
    (
        prop::collection::vec((0u32..=2, 0u32..=2, gauss_rational()), 1..=3),
        0u32..=2,
    )
        .prop_map(|(ts, c)| {
            let num = Poly::from_terms(ts.into_iter().map(|(a, b, x)| (Mono::new(a, b), x)));
            RationalExpr::new(num, Poly::one_plus_t().pow(c)).unwrap()
        })
}

#[test]
fn zeroth_and_first_order_axioms() {
    let ctx = StarContext::unit(1);
    let fs = test_functions();
    for (_, f) in &fs {
        for (_, g) in &fs {
            let fg = star(&ctx, f, g).unwrap();
            let gf = star(&ctx, g, f).unwrap();
            assert_eq!(fg.coeff(0), &(f * g));
            let anti = fg.coeff(1) - gf.coeff(1);
            let pb = poisson(&ctx, f, g).scale(&gi(0, 1));
            assert_eq!(anti, pb);
            let ofg = opposite_star(&ctx, f, g).unwrap();
            let ogf = opposite_star(&ctx, g, f).unwrap();
            assert_eq!(ofg.coeff(1) - ogf.coeff(1), pb.scale(&gi(-1, 0)));
        }
    }
}

#[test]
fn poisson_of_coordinates() {
    let ctx = StarContext::unit(1);
    assert_eq!(poisson(&ctx, &e("z"), &e("zbar")), e("i*(1 + z*zbar)^2"));
}

#[test]
fn associativity_through_second_order() {
    let ctx = StarContext::unit(2);
    let fs = test_functions();
    for (nf, f) in &fs {
        for (ng, g) in &fs {
            for (nh, h) in &fs {
                let defect = associativity_defect(&ctx, f, g, h).unwrap();
                assert!(defect.iter().all(RationalExpr::is_zero), "{nf}, {ng}, {nh}: {defect:?}");
            }
        }
    }
}

#[test]
fn associativity_for_a_scaled_potential() {
    let ctx = StarContext::fubini_study(q(3, 1), 2).unwrap();
    let fs = test_functions();
    for (_, f) in &fs[..3] {
        for (_, g) in &fs[..3] {
            let defect = associativity_defect(&ctx, f, g, &fs[4].1).unwrap();
            assert!(defect.iter().all(RationalExpr::is_zero));
        }
    }
}

#[test]
fn operator_checks_for_deformed_form() {
    // ω′ = −ω + ν ω_can: the potential series with parameters −1, −2
    let lams = [q(-1, 1), q(-2, 1)];
    let ctx = StarContext::fubini_study_series(&lams, 3).unwrap();
    for check in sl2_operator_checks(&ctx, &lams).unwrap() {
        assert!(check.passed, "{} {}", check.label, check.detail);
    }
    let fs = test_functions();
    let ctx1 = ctx.with_order(1);
    for (_, f) in &fs {
        for (_, g) in &fs {
            let d = associativity_defect(&ctx1, f, g, &fs[1].1).unwrap();
            assert!(d.iter().all(RationalExpr::is_zero));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10))]

    #[test]
    fn separation_of_variables(a in holomorphic(), b in antiholomorphic()) {
        let ctx = StarContext::unit(3);
        prop_assert_eq!(build_left_operator(&ctx, &a).unwrap(), FormalOperator::mult(a.clone()).truncate(3));
        for (_, f) in test_functions() {
            // L_a = a and R_b = b
            let left = star(&ctx, &a, &f).unwrap();
            let right = star(&ctx, &f, &b).unwrap();
            prop_assert_eq!(left.coeff(0), &(&a * &f));
            prop_assert_eq!(right.coeff(0), &(&f * &b));
            for r in 1..=3 {
                prop_assert!(left.coeff(r).is_zero());
                prop_assert!(right.coeff(r).is_zero());
            }
            // the opposite product swaps the roles
            let left = opposite_star(&ctx, &b, &f).unwrap();
            let right = opposite_star(&ctx, &f, &a).unwrap();
            for r in 1..=3 {
                prop_assert!(left.coeff(r).is_zero());
                prop_assert!(right.coeff(r).is_zero());
            }
        }
    }

    #[test]
    fn constants_act_as_scalars(c in gauss_rational(), g in small_expr()) {
        let ctx = StarContext::unit(3);
        let c = RationalExpr::constant(c);
        for s in [star(&ctx, &c, &g).unwrap(), star(&ctx, &g, &c).unwrap()] {
            prop_assert_eq!(s.coeff(0), &(&c * &g));
            for r in 1..=3 {
                prop_assert!(s.coeff(r).is_zero());
            }
        }
    }

    #[test]
    fn left_operator_reproduces_its_symbol(f in small_expr()) {
        let ctx = StarContext::unit(3);
        let l = build_left_operator(&ctx, &f).unwrap();
        prop_assert_eq!(l.coeff(0).apply(&RationalExpr::one()), f);
        for r in 1..=3 {
            prop_assert!(l.coeff(r).apply(&RationalExpr::one()).is_zero());
        }
        prop_assert!(ctx.constraint_residual(&l).is_zero());
        prop_assert!(ctx.zbar_residual(&l).is_zero());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn poisson_is_an_antisymmetric_derivation(f in small_expr(), g in small_expr(), h in small_expr()) {
        let ctx = StarContext::unit(1);
        prop_assert_eq!(poisson(&ctx, &f, &g), poisson(&ctx, &g, &f).scale(&gi(-1, 0)));
        prop_assert!(poisson(&ctx, &f, &f).is_zero());
        let lhs = poisson(&ctx, &f, &(&g * &h));
        let rhs = &(&poisson(&ctx, &f, &g) * &h) + &(&g * &poisson(&ctx, &f, &h));
        prop_assert_eq!(lhs, rhs);
    }
}
