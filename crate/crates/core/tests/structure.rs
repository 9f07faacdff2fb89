use lemn_core::arith::euler_phi;
use lemn_core::chebyshev::{factor_d, monic_c, verify_d_constant};
use lemn_core::cmfield::{mult_map, verify_mult_map};
use lemn_core::construct::{integer_unit_group_order, is_constructible, power_of_two_test};
use lemn_core::lemnatomic::lemnatomic;
use lemn_core::numlem::PhiEvaluator;
use lemn_core::real::Real;
use lemn_core::GaussInt;
use num_bigint::BigUint;
use proptest::prelude::*;
use std::sync::OnceLock;

fn odd_with_norm(max: u64) -> impl Strategy<Value = GaussInt> {
    (-12i64..=12, -12i64..=12)
        .prop_map(|(a, b)| GaussInt::new(a, b))
        .prop_filter("odd, nonunit, small", move |g| {
            g.is_odd() && !g.is_unit() && g.norm() <= max.into()
        })
}

fn evaluator() -> &'static PhiEvaluator {
    static EV: OnceLock<PhiEvaluator> = OnceLock::new();
    EV.get_or_init(|| PhiEvaluator::new(40).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn lemnatomic_depends_on_associate_class_only(b in odd_with_norm(120), k in 1i64..4) {
        prop_assert_eq!(lemnatomic(&b).unwrap().poly, lemnatomic(&b.mul_unit(k)).unwrap().poly);
    }

    #[test]
    fn lemnatomic_of_conjugate_is_conjugate(b in odd_with_norm(120)) {
        let l = lemnatomic(&b).unwrap().poly;
        prop_assert_eq!(lemnatomic(&b.conj()).unwrap().poly, l.conjugate());
        if b.is_real() {
            prop_assert!(l.is_real());
        }
    }

    #[test]
    fn lemnatomic_degree_is_unit_group_order(b in odd_with_norm(150)) {
        let r = lemnatomic(&b).unwrap();
        prop_assert_eq!(BigUint::from(r.degree), b.unit_group_order().unwrap());
        prop_assert!(r.poly.is_monic());
        prop_assert_eq!(r.poly.exponent_stride() % 4, 0);
    }

    #[test]
    fn multiplication_maps_compose(b in odd_with_norm(20), c in odd_with_norm(20)) {
        prop_assume!(b.norm() * c.norm() <= 200u32.into());
        let (mb, mc, mbc) = (mult_map(&b).unwrap(), mult_map(&c).unwrap(), mult_map(&(&b * &c)).unwrap());
        prop_assert_eq!(mb.compose(&mc), mbc.as_ratfunc());
        prop_assert_eq!(mc.compose(&mb), mbc.as_ratfunc());
        prop_assert!(verify_mult_map(&mbc).is_ok());
    }

    #[test]
    fn phi_has_period_two_varpi(s in -20.0f64..20.0) {
        let ev = evaluator();
        let s = ev.real(s);
        let shifted = &s + &ev.varpi().ldexp(1);
        prop_assert!((&ev.phi_real(&shifted) - &ev.phi_real(&s)).abs().to_f64() < ev.tolerance());
        let (v, d) = ev.phi_pair_real(&s);
        let one = Real::one(ev.bits());
        prop_assert!((&d.square() - &(&one - &v.square().square())).abs().to_f64() < ev.tolerance());
    }

    #[test]
    fn phi_respects_rotation(re in -3.0f64..3.0, im in -3.0f64..3.0) {
        let ev = evaluator();
        let z = ev.complex(re, im);
        if let (Ok(a), Ok(b)) = (ev.phi_complex(&z.mul_i()), ev.phi_complex(&z)) {
            prop_assert!((&a - &b.mul_i()).abs_f64() < 1e-25);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn constructibility_equals_power_of_two_order(n in 1u64..1_000_000) {
        let odd = n >> n.trailing_zeros();
        prop_assert_eq!(is_constructible(n), power_of_two_test(odd).unwrap());
        let order = GaussInt::new(odd, 0).unit_group_order().unwrap();
        prop_assert_eq!(BigUint::from(integer_unit_group_order(odd).unwrap()), order);
    }

    #[test]
    fn chebyshev_c_is_twice_cosine(n in 0u64..24, theta in -3.0f64..3.0) {
        // double-precision Horner on coefficients near (1+√2)^n, so n stays small
        let lhs = monic_c(n).eval_f64(2.0 * theta.cos());
        prop_assert!((lhs - 2.0 * (n as f64 * theta).cos()).abs() < 1e-6);
    }
}

#[test]
fn chebyshev_factors_for_odd_n() {
    for n in (3..=99u64).step_by(2) {
        let parts = factor_d(n).unwrap();
        let prod = parts.values().fold(lemn_core::ZiPoly::one(), |acc, p| &acc * p.as_zipoly());
        assert_eq!(&prod, monic_c(n).as_zipoly(), "n = {n}");
        assert_eq!(parts[&n].degree().unwrap() as u64, euler_phi(n));
        assert!(verify_d_constant(n).unwrap().passed(), "n = {n}");
    }
}

#[test]
fn identity_residuals_shrink_with_precision() {
    let reals = [0.3, -1.7, 2.9, 4.4];
    let complexes = [(0.4, 0.9), (-1.3, 0.2), (2.2, -0.8)];
    let betas = [GaussInt::new(3, 0), GaussInt::new(-1, 2)];
    let lo = PhiEvaluator::new(30).unwrap().verify_identities(&reals, &complexes, &betas);
    let hi = PhiEvaluator::new(40).unwrap().verify_identities(&reals, &complexes, &betas);
    for (a, b) in lo.residuals.iter().zip(&hi.residuals) {
        assert!(b.max < a.max * 1e-5 || b.max == 0.0, "{}: {} vs {}", a.name, a.max, b.max);
    }
}
