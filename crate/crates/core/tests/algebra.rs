use lemn_core::fq::FqPoly;
use lemn_core::gaussint::prime_order;
use lemn_core::zipoly::KARATSUBA_THRESHOLD;
use lemn_core::{GaussInt, ZiPoly};
use num_bigint::BigUint;
use proptest::prelude::*;

fn gauss(bound: i64) -> impl Strategy<Value = GaussInt> {
    (-bound..=bound, -bound..=bound).prop_map(|(a, b)| GaussInt::new(a, b))
}

fn odd_gauss(bound: i64) -> impl Strategy<Value = GaussInt> {
    gauss(bound).prop_filter("odd", |g| g.is_odd())
}

fn poly(max_len: usize, bound: i64) -> impl Strategy<Value = ZiPoly> {
    prop::collection::vec(gauss(bound), 0..max_len).prop_map(ZiPoly::new)
}

fn brute_unit_count(m: &GaussInt) -> usize {
    m.residues().iter().filter(|r| r.gcd(m).map(|g| g.is_unit()).unwrap_or(false)).count()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn factorization_round_trips(z in gauss(70).prop_filter("nonzero", |z| !z.is_zero())) {
        let f = z.factor().unwrap();
        prop_assert_eq!(f.product(), z);
        prop_assert!(f.unit.is_unit());
        for w in f.factors.windows(2) {
            prop_assert_eq!(prime_order(&w[0].0, &w[1].0), std::cmp::Ordering::Less);
        }
        for (p, e) in &f.factors {
            prop_assert!(p.is_prime() && *e >= 1);
            prop_assert!(p.is_normalized() || *p == GaussInt::one_plus_i());
        }
    }

    #[test]
    fn normalization_ignores_units(z in odd_gauss(200), k in 0i64..4) {
        let (u, b) = z.normalize().unwrap();
        prop_assert!(u.is_unit() && b.is_normalized());
        prop_assert_eq!(&u * &z, b.clone());
        prop_assert_eq!(z.mul_unit(k).normalize().unwrap().1, b);
    }

    #[test]
    fn gcd_divides_and_is_canonical(a in gauss(300), b in gauss(300)) {
        prop_assume!(!(a.is_zero() && b.is_zero()));
        let g = a.gcd(&b).unwrap();
        prop_assert!(g.divides(&a) && g.divides(&b));
        prop_assert_eq!(a.mul_unit(1).gcd(&b.mul_unit(3)).unwrap(), g);
    }

    #[test]
    fn division_with_remainder(a in gauss(10_000), d in gauss(300).prop_filter("nonzero", |d| !d.is_zero())) {
        let (q, r) = a.div_rem(&d);
        prop_assert_eq!(&(&q * &d) + &r, a);
        prop_assert!(r.norm() < d.norm());
    }

    #[test]
    fn unit_group_order_matches_brute_force(m in odd_gauss(14).prop_filter("norm <= 200", |m| m.norm() <= 200.into() && !m.is_zero())) {
        prop_assert_eq!(m.unit_group_order().unwrap(), BigUint::from(brute_unit_count(&m)));
        prop_assert_eq!(m.unit_residues().len(), brute_unit_count(&m));
    }

    #[test]
    fn divisor_count_from_exponents(m in odd_gauss(40).prop_filter("nonzero", |m| !m.is_zero())) {
        let f = m.factor().unwrap();
        let expected: u32 = f.factors.iter().map(|(_, e)| e + 1).product();
        let divs = m.normalized_divisors().unwrap();
        prop_assert_eq!(divs.len() as u32, expected);
        prop_assert!(divs.iter().all(|d| d.is_normalized() && d.divides(&m)));
    }

    #[test]
    fn karatsuba_agrees_with_schoolbook(a in poly(90, 1000), b in poly(90, 1000)) {
        let fast = a.mul_with(&b, 2);
        let slow = a.mul_with(&b, usize::MAX);
        prop_assert_eq!(&fast, &slow);
        prop_assert_eq!(&a * &b, slow);
        prop_assert!(KARATSUBA_THRESHOLD >= 2);
    }

    #[test]
    fn ring_axioms(a in poly(8, 20), b in poly(8, 20), c in poly(8, 20)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        prop_assert_eq!(&a + &(-&a), ZiPoly::zero());
    }

    #[test]
    fn exact_division_inverts_multiplication(a in poly(12, 50), b in poly(12, 50)) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).exact_div(&b).unwrap(), a);
    }

    #[test]
    fn reverse_is_an_involution(a in poly(12, 50)) {
        prop_assume!(!a.is_zero() && !a.coeff(0).is_zero());
        let d = a.degree().unwrap();
        prop_assert_eq!(a.reverse(d).reverse(d), a);
    }

    #[test]
    fn display_parses_back(a in poly(10, 50)) {
        let s = a.to_string();
        prop_assert_eq!(s.parse::<ZiPoly>().unwrap(), a);
    }

    #[test]
    fn gcd_cofactors_reconstruct(a in poly(6, 9), b in poly(6, 9), h in poly(4, 9)) {
        prop_assume!(!h.is_zero());
        let (f, g) = (&a * &h, &b * &h);
        prop_assume!(!f.is_zero() && !g.is_zero());
        let (d, cf, cg) = f.gcd_cofactors(&g);
        prop_assert_eq!(&d * &cf, f.clone());
        prop_assert_eq!(&d * &cg, g.clone());
        let hp = h.primitive_part();
        prop_assert!(d.exact_div(&hp).is_ok() || h.is_constant());
    }

    #[test]
    fn ddf_multiplies_back(coeffs in prop::collection::vec(0u64..13, 2..14)) {
        let f = FqPoly::over_prime_field(13, &coeffs).unwrap();
        prop_assume!(f.degree().unwrap_or(0) >= 1 && f.is_squarefree());
        let parts = f.distinct_degree_factorization().unwrap();
        let mut prod = FqPoly::over_prime_field(13, &[1]).unwrap();
        for (d, p) in &parts {
            prop_assert_eq!(p.degree().unwrap() % d, 0);
            prod = prod.mul(p);
        }
        prop_assert_eq!(prod, f.monic());
        let degs = f.factor_degrees().unwrap();
        prop_assert_eq!(degs.iter().sum::<usize>(), f.degree().unwrap());
    }
}
