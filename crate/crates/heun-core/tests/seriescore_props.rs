mod common;

use common::*;
use heun_core::seriescore::{qs_inv, qs_mul, resolvent, unit_pow, QSeries, Rational, C64};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_laws_are_exact(
        (a, b, c) in (0usize..=12).prop_flat_map(|n| (rseries(n), rseries(n), rseries(n)))
    ) {
        let ab_c = qs_mul(&qs_mul(&a, &b).unwrap(), &c).unwrap();
        let a_bc = qs_mul(&a, &qs_mul(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(ab_c, a_bc);
        let left = qs_mul(&a, &b.try_add(&c).unwrap()).unwrap();
        let right = qs_mul(&a, &b).unwrap().try_add(&qs_mul(&a, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        prop_assert_eq!(qs_mul(&a, &b).unwrap(), qs_mul(&b, &a).unwrap());
    }

    #[test]
    fn rational_inverse(a in unit_rseries(10)) {
        prop_assert_eq!(qs_mul(&a, &qs_inv(&a).unwrap()).unwrap(), QSeries::unit(10));
    }

    #[test]
    fn unit_pow_round_trip(f in unit_rseries(6), a in nonzero_rational()) {
        let g = unit_pow(&f, &a).unwrap();
        let back = unit_pow(&g, &(Rational::from_integer(1.into()) / a)).unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn resolvent_inverts(b in nonzero_rational(), e in rseries(8)) {
        let mut e = e;
        e.set(0, r(0, 1));
        let x = resolvent(&b, &e).unwrap();
        let lin = QSeries::constant(b, 8).try_sub(&e).unwrap();
        prop_assert_eq!(qs_mul(&x, &lin).unwrap(), QSeries::unit(8));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn float_inverse(a in unit_cseries(10)) {
        let one = qs_mul(&a, &qs_inv(&a).unwrap()).unwrap();
        prop_assert!(one.max_abs_diff(&QSeries::<C64>::unit(10)) < 1e-9);
    }

    #[test]
    fn rational_inverse_many(a in unit_rseries(6)) {
        prop_assert_eq!(qs_mul(&qs_inv(&a).unwrap(), &a).unwrap(), QSeries::unit(6));
    }
}
