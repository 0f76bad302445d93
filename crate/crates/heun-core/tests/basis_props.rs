mod common;

use common::*;
use heun_core::basis::{f0_closed, f_table};
use heun_core::seriescore::{binomial, Rational, Scalar};
use heun_core::Params;
use num_traits::Zero;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn vanishing_degree_and_leading_term(p in params()) {
        let order = 3;
        let t = f_table(&p, order, -4, 4).unwrap();
        let neg_lam = -p.lambda();
        for m in -4..=4i64 {
            for l in 0..=order {
                let f = t.coeff(m, l);
                if m + (l as i64) < 0 {
                    prop_assert!(f.is_zero(), "f_{}^({}) should vanish", m, l);
                } else {
                    prop_assert_eq!(f.degree(), Some((m + l as i64) as usize));
                }
            }
            if m >= 0 {
                let lead = binomial(&neg_lam, m as usize) * Rational::from_i64(-2).pow_u(m as u32);
                prop_assert_eq!(t.coeff(m, 0).leading().cloned(), Some(lead));
                prop_assert_eq!(t.coeff(m, 0), &f0_closed(m, &p));
            }
        }
    }

    /// `-lambda = k` in N0 truncates every zeroth-order basis function to degree `<= k`.
    #[test]
    fn truncation_at_negative_integer_lambda(k in 0i64..=3, g in [rational(), rational(), rational()]) {
        let [a, b, c] = g;
        // kappa chosen so that lambda = -k
        let sum = a.clone() + b.clone() + c.clone() + r(1, 3);
        let kappa = sum + Rational::from_i64(2 * k);
        let p = Params::new([a, b, c, r(1, 3)], kappa);
        prop_assert_eq!(p.lambda(), Rational::from_i64(-k));
        let t = f_table(&p, 0, 0, 6).unwrap();
        for m in 0..=6 {
            let d = t.coeff(m, 0).degree();
            prop_assert!(d.is_none_or(|d| d as i64 <= k), "deg f_{} = {:?} > {}", m, d, k);
        }
    }
}
