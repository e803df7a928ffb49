use proptest::prelude::*;

use bskernel::gamma::{gamma, gamma_ratio};
use bskernel::msm::{
    msm_bs_closed_form, msm_power_condition, msm_power_image, msm_quadrature, FunctionKind,
    Integrand, MsmParams, Side,
};
use bskernel::pathway::{
    pathway_bs_closed_form, pathway_density, pathway_density_mass, PathwayDensityParams,
    PathwayParams,
};
use bskernel::quadrature::QuadConfig;
use bskernel::special::{
    appell_f3, bessel_first_kind, bessel_struve_kernel, gauss_2f1, struve, F3Args,
};
use bskernel::wright::{cancel_matched_pairs, wright_eval, WrightSpec};

fn rel(a: f64, b: f64) -> f64 {
    if b == 0.0 {
        a.abs()
    } else {
        ((a - b) / b).abs()
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn gamma_recurrence(x in -4.9f64..8.0) {
        prop_assume!((x - x.round()).abs() > 1e-3);
        let lhs = gamma(x + 1.0).unwrap();
        let rhs = x * gamma(x).unwrap();
        prop_assert!(rel(lhs, rhs) < 1e-13, "{lhs} vs {rhs}");
    }

    #[test]
    fn gamma_reflection(x in 0.01f64..0.99) {
        let prod = gamma(x).unwrap() * gamma(1.0 - x).unwrap();
        let expect = std::f64::consts::PI / (std::f64::consts::PI * x).sin();
        prop_assert!(rel(prod, expect) < 1e-13);
    }

    #[test]
    fn kernel_is_one_at_origin(nu in -0.49f64..4.0) {
        prop_assert_eq!(bessel_struve_kernel(nu, 0.0).unwrap().value, 1.0);
    }

    #[test]
    fn kernel_exponential_order(u in -20.0f64..20.0) {
        let s = bessel_struve_kernel(-0.5, u).unwrap().value;
        prop_assert!(rel(s, u.exp()) < 1e-12, "{s} vs {}", u.exp());
    }

    #[test]
    fn kernel_matches_bessel_plus_struve(nu in -0.45f64..3.0, u in -8.0f64..8.0) {
        prop_assume!(u.abs() > 1e-3);
        let half = u / 2.0;
        let c = gamma(nu + 1.0).unwrap() / half.abs().powf(nu);
        let sign = if u < 0.0 { -1.0 } else { 1.0 };
        let i = bessel_first_kind(nu, u.abs(), true).unwrap().value;
        let l = struve(nu, u.abs(), true).unwrap().value;
        let expect = c * (i + sign * l);
        let got = bessel_struve_kernel(nu, u).unwrap().value;
        // Cancellation between I and L for negative u: compare on the I scale.
        prop_assert!((got - expect).abs() <= 1e-10 * (c * i).abs(), "{got} vs {expect}");
    }

    #[test]
    fn gauss_symmetric_in_numerator(a in -2.0f64..3.0, b in -2.0f64..3.0, c in 0.3f64..4.0, z in -3.0f64..0.95) {
        let ab = gauss_2f1(a, b, c, z).unwrap().value;
        let ba = gauss_2f1(b, a, c, z).unwrap().value;
        prop_assert!((ab - ba).abs() <= 1e-11 * ab.abs().max(1.0));
    }

    #[test]
    fn gauss_euler_transformation(a in -1.5f64..2.5, b in -1.5f64..2.5, c in 0.4f64..3.5, z in -0.9f64..0.9) {
        let direct = gauss_2f1(a, b, c, z).unwrap().value;
        let euler = (1.0 - z).powf(c - a - b) * gauss_2f1(c - a, c - b, c, z).unwrap().value;
        prop_assert!((direct - euler).abs() <= 1e-10 * direct.abs().max(1.0), "{direct} vs {euler}");
    }

    #[test]
    fn appell_symmetric_under_relabeling(
        alpha in -1.0f64..2.0, alpha_prime in -1.0f64..2.0,
        beta in -1.0f64..2.0, beta_prime in -1.0f64..2.0,
        gamma_p in 0.5f64..3.0, x in -0.6f64..0.6, y in -0.6f64..0.6,
    ) {
        let args = F3Args { alpha, alpha_prime, beta, beta_prime, gamma: gamma_p, x, y };
        let a = appell_f3(args).unwrap().value;
        let b = appell_f3(args.swapped()).unwrap().value;
        prop_assert!((a - b).abs() <= 1e-12 * a.abs().max(1.0));
    }

    #[test]
    fn appell_collapse_is_gauss(alpha in -1.0f64..2.0, beta in -1.0f64..2.0, gamma_p in 0.5f64..3.0, x in -5.0f64..0.9, y in -5.0f64..5.0) {
        let args = F3Args { alpha, alpha_prime: 0.0, beta, beta_prime: 0.7, gamma: gamma_p, x, y };
        let f3 = appell_f3(args).unwrap().value;
        let f21 = gauss_2f1(alpha, beta, gamma_p, x).unwrap().value;
        prop_assert!((f3 - f21).abs() <= 1e-12 * f21.abs().max(1.0));
    }

    #[test]
    fn matched_pairs_cancel(c in 0.2f64..3.0, slope in 0.3f64..2.0, z in -2.0f64..2.0) {
        let base = WrightSpec::new(vec![(0.8, 1.0)], vec![(1.4, 0.5)]);
        let mut grown = base.clone();
        grown.upper.push((c, slope));
        grown.lower.insert(0, (c, slope));
        prop_assert_eq!(cancel_matched_pairs(&grown), base.clone());
        let a = wright_eval(&grown, z, 1e-15).unwrap().value;
        let b = wright_eval(&base, z, 1e-15).unwrap().value;
        prop_assert!(rel(a, b) < 1e-12);
    }

    #[test]
    fn power_image_scales_as_a_power(
        alpha in 0.0f64..0.5, beta in 0.0f64..0.5, beta_prime in 0.0f64..0.5,
        gamma_p in 0.9f64..1.5, rho in 1.1f64..2.0, x in 0.3f64..3.0,
    ) {
        let p = MsmParams::new(alpha, 0.2, beta, beta_prime, gamma_p).unwrap();
        prop_assume!(msm_power_condition(Side::Left, &p, rho).is_ok());
        let img = msm_power_image(Side::Left, &p, rho).unwrap();
        let at_one = img.evaluate(1.0).unwrap().value;
        let at_x = img.evaluate(x).unwrap().value;
        let power = rho + gamma_p - alpha - 0.2 - 1.0;
        prop_assert!(rel(at_x, at_one * x.powf(power)) < 1e-13);
    }

    #[test]
    fn rl_power_image_is_beta_ratio(gamma_p in 0.3f64..3.0, rho in 0.3f64..3.0) {
        let img = msm_power_image(Side::Left, &MsmParams::riemann_liouville(gamma_p), rho).unwrap();
        let expect = gamma_ratio(&[rho], &[rho + gamma_p]).unwrap();
        prop_assert!(rel(img.evaluate(1.0).unwrap().value, expect) < 1e-14);
    }

    #[test]
    fn densities_are_nonnegative(
        g in 0.5f64..3.0, d in 0.8f64..3.0, b in 0.5f64..3.0, a in 0.5f64..2.0,
        al in -1.0f64..0.95, x in -5.0f64..5.0,
    ) {
        let dp = PathwayDensityParams { gamma_shape: g, delta: d, beta_shape: b, a, pathway_alpha: al };
        let f = pathway_density(&dp, x).unwrap();
        prop_assert!(f >= 0.0 && f.is_finite());
        if x.abs() >= dp.support_radius() {
            prop_assert_eq!(f, 0.0);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn left_kernel_image_matches_quadrature(
        alpha in 0.0f64..0.5, beta in 0.0f64..0.5, beta_prime in 0.0f64..0.5,
        gamma_p in 0.9f64..1.5, rho in 1.1f64..2.0, nu in -0.4f64..1.0,
        lambda in -1.0f64..1.0, x in 0.5f64..2.0,
    ) {
        let p = MsmParams::new(alpha, 0.0, beta, beta_prime, gamma_p).unwrap();
        let integrand = Integrand::new(FunctionKind::BsKernel { nu, lambda }, rho);
        let Ok(img) = msm_bs_closed_form(Side::Left, &p, integrand) else {
            return Ok(());
        };
        let closed = img.evaluate(x).unwrap().value;
        let quad = msm_quadrature(Side::Left, &p, integrand, x).unwrap().value;
        prop_assert!(rel(closed, quad) < 1e-7, "{closed} vs {quad}");
    }

    #[test]
    fn pathway_kernel_image_is_finite(
        eta in 0.3f64..1.5, a in 0.8f64..1.3, al in -0.5f64..0.4,
        sigma in 0.6f64..1.6, nu in -0.4f64..1.0, x in 0.5f64..2.0,
    ) {
        let p = PathwayParams::new(eta, a, al).unwrap();
        let img = pathway_bs_closed_form(&p, Integrand::new(FunctionKind::BsKernel { nu, lambda: 1.0 }, sigma)).unwrap();
        prop_assert!(img.evaluate(x).unwrap().value.is_finite());
    }

    #[test]
    fn sub_densities_have_unit_mass(
        g in 0.5f64..2.5, d in 1.0f64..2.5, b in 0.5f64..2.5, a in 0.6f64..1.5, al in -0.8f64..0.8,
    ) {
        let dp = PathwayDensityParams { gamma_shape: g, delta: d, beta_shape: b, a, pathway_alpha: al };
        let mass = pathway_density_mass(&dp, QuadConfig::default()).unwrap().value;
        prop_assert!((mass - 1.0).abs() < 1e-6, "{mass}");
    }
}
