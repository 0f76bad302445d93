use heun_core::seriescore::C64;
use heun_core::specfun::{eta1_over_pi, wp, wp_fourier, wp_shifted, Nome};
use proptest::prelude::*;
use std::f64::consts::PI;

fn close(a: C64, b: C64, tol: f64) -> bool {
    (a - b).norm() <= tol * a.norm().max(1.0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn wp_is_doubly_periodic(
        re in -3.0f64..3.0, frac in 0.1f64..0.9,
        tre in -0.5f64..0.5, tim in 0.4f64..1.5,
    ) {
        let tau = C64::new(tre, tim);
        let x = C64::new(re, 0.0) + frac * PI * tau;
        let v = wp(x, tau).unwrap();
        prop_assert!(close(v, wp(x + 2.0 * PI, tau).unwrap(), 1e-10));
        prop_assert!(close(v, wp(x + 2.0 * PI * tau, tau).unwrap(), 1e-10));
    }

    /// `wp(x + omega_nu) = -eta1/pi - sum_mu (S_nu)_mu e^{i mu x}` inside the strip.
    #[test]
    fn shifted_wp_fourier(nu in 0usize..4, re in -3.0f64..3.0, s in 0.2f64..0.8, tim in 0.5f64..1.5) {
        let tau = C64::new(0.0, tim);
        let nome = Nome::from_tau(tau).unwrap();
        let strip = if nu <= 1 { 2.0 * PI * tim * s } else { PI * tim * (s - 0.5) };
        let x = C64::new(re, strip);
        let mut sum = -eta1_over_pi(&nome);
        for mu in 1..=2000i64 {
            let k = C64::i() * mu as f64 * x;
            let t = wp_fourier(nu, mu, &nome).unwrap() * k.exp() + wp_fourier(nu, -mu, &nome).unwrap() * (-k).exp();
            sum -= t;
            if t.norm() < 1e-18 * sum.norm() {
                break;
            }
        }
        let direct = wp_shifted(nu, x, tau).unwrap();
        prop_assert!(close(direct, sum, 1e-9), "nu={} {} vs {}", nu, direct, sum);
    }
}
