use proptest::collection::vec;
use proptest::prelude::*;

use fraclogistic::adomian::{adomian_polynomial, AdomianMode};
use fraclogistic::closed_forms::classical_exact;
use fraclogistic::fode::{solve, OperatorKind, SolveConfig};
use fraclogistic::hsv::hsv_iterate;
use fraclogistic::model::ModelParams;
use fraclogistic::special_functions::mittag_leffler;
use fraclogistic::stability::deviation_profile;
use fraclogistic::sumudu::{
    delay_rescale, series_product, sumudu_forward, sumudu_inverse, FracSeries,
};

fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
    let scale = a.iter().chain(b).fold(1e-300f64, |m, x| m.max(x.abs()));
    (0..a.len().max(b.len())).all(|i| {
        let x = a.get(i).copied().unwrap_or(0.0);
        let y = b.get(i).copied().unwrap_or(0.0);
        (x - y).abs() <= tol * scale
    })
}

fn series(mu: f64, coeffs: Vec<f64>) -> FracSeries {
    FracSeries::new(mu, coeffs).unwrap()
}

fn coeffs() -> impl Strategy<Value = Vec<f64>> {
    vec(-10.0..10.0f64, 1..10)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn sumudu_round_trip(mu in 0.05..=1.0f64, c in coeffs()) {
        let s = series(mu, c);
        let back = sumudu_inverse(&sumudu_forward(&s));
        prop_assert!(close(back.coeffs(), s.coeffs(), 1e-14));
    }

    #[test]
    fn sumudu_is_linear(mu in 0.05..=1.0f64, a in coeffs(), b in coeffs(), alpha in -3.0..3.0f64, beta in -3.0..3.0f64) {
        let (a, b) = (series(mu, a), series(mu, b));
        let lhs = sumudu_forward(&a.linear_combination(alpha, &b, beta).unwrap());
        let rhs = sumudu_forward(&a).linear_combination(alpha, &sumudu_forward(&b), beta).unwrap();
        prop_assert!(close(lhs.coeffs(), rhs.coeffs(), 1e-14));
    }

    #[test]
    fn product_commutes_and_matches_pointwise(mu in 0.05..=1.0f64, a in coeffs(), b in coeffs(), t in 0.0..1.0f64) {
        let (a, b) = (series(mu, a), series(mu, b));
        let ab = series_product(&a, &b).unwrap();
        let ba = series_product(&b, &a).unwrap();
        prop_assert!(close(ab.coeffs(), ba.coeffs(), 1e-15));
        let abs = |s: &FracSeries| series(mu, s.coeffs().iter().map(|c| c.abs()).collect());
        let scale = abs(&a).eval(t).unwrap() * abs(&b).eval(t).unwrap();
        let gap = (ab.eval(t).unwrap() - a.eval(t).unwrap() * b.eval(t).unwrap()).abs();
        prop_assert!(gap <= 1e-13 * scale.max(1e-300));
    }

    #[test]
    fn delay_rescale_composes(mu in 0.05..=1.0f64, c in coeffs(), l1 in 0.0..=1.0f64, l2 in 0.0..=1.0f64) {
        let s = series(mu, c);
        let twice = delay_rescale(&delay_rescale(&s, l1).unwrap(), l2).unwrap();
        let once = delay_rescale(&s, l1 * l2).unwrap();
        prop_assert!(close(twice.coeffs(), once.coeffs(), 1e-13));
    }

    #[test]
    fn adomian_partial_sums_match_truncated_product(
        mu in 0.1..=1.0f64,
        lambda in 0.0..=1.0f64,
        terms in vec(vec(-3.0..3.0f64, 1..5), 1..6),
    ) {
        let x: Vec<FracSeries> = terms.into_iter().map(|c| series(mu, c)).collect();
        let mut running = FracSeries::zero(mu).unwrap();
        for n in 0..x.len() {
            running = running.add(&adomian_polynomial(&x, n, lambda, AdomianMode::General).unwrap()).unwrap();
            let mut want = FracSeries::zero(mu).unwrap();
            for i in 0..=n {
                for j in 0..=(n - i) {
                    let delayed = delay_rescale(&x[j], lambda).unwrap();
                    want = want.add(&series_product(&x[i], &delayed).unwrap()).unwrap();
                }
            }
            prop_assert!(close(running.coeffs(), want.coeffs(), 1e-12));
        }
    }

    #[test]
    fn hsv_reproduces_classical_taylor_polynomial(r in 0.01..2.0f64, k in 10.0..500.0f64, frac in 0.01..0.99f64, n in 1usize..=3) {
        let z0 = frac * k;
        let d1 = r * z0 * (1.0 - z0 / k);
        let d2 = r * d1 * (1.0 - 2.0 * z0 / k);
        let d3 = r * (d2 * (1.0 - 2.0 * z0 / k) - 2.0 * d1 * d1 / k);
        let taylor = [z0, d1, d2 / 2.0, d3 / 6.0];
        let p = ModelParams::new(r, k, z0, 1.0, 1.0).unwrap();
        let sol = hsv_iterate(&p, n, AdomianMode::General).unwrap();
        let mut sum = FracSeries::zero(1.0).unwrap();
        for term in &sol.terms {
            sum = sum.add(term).unwrap();
        }
        prop_assert!(close(sum.coeffs(), &taylor[..=n], 1e-10));
    }

    #[test]
    fn mittag_leffler_is_increasing(mu in 0.1..=1.0f64, a in -60.0..4.0f64, gap in 0.01..5.0f64) {
        let lo = mittag_leffler(mu, a).unwrap();
        let hi = mittag_leffler(mu, a + gap).unwrap();
        prop_assert!(lo > 0.0);
        prop_assert!(hi >= lo, "E({a}) = {lo} > E({}) = {hi}", a + gap);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn solutions_stay_positive(
        r in 0.05..2.0f64,
        frac in 0.01..0.99f64,
        mu in 0.3..=1.0f64,
        lambda in prop_oneof![Just(1.0), 0.0..=1.0f64],
        op in prop::sample::select(OperatorKind::ALL.to_vec()),
    ) {
        // Keeps the implicit pointwise term of the nonsingular-kernel operators contractive.
        prop_assume!(r * (1.0 - mu) < 0.5);
        let p = ModelParams::new(r, 100.0, 100.0 * frac, mu, lambda).unwrap();
        let traj = solve(&p, &SolveConfig::new(op, 5.0, 0.01)).unwrap();
        prop_assert!(traj.values.iter().all(|&z| z > 0.0));
        if lambda == 1.0 {
            prop_assert!(traj.values.iter().all(|&z| z <= 100.0 * (1.0 + 1e-9)));
        }
    }

    #[test]
    fn caputo_unit_order_converges_under_refinement(r in 0.2..2.0f64, frac in 0.05..0.5f64) {
        let p = ModelParams::new(r, 100.0, 100.0 * frac, 1.0, 1.0).unwrap();
        let err = |h: f64| {
            let traj = solve(&p, &SolveConfig::new(OperatorKind::Caputo, 3.0, h)).unwrap();
            traj.grid
                .iter()
                .zip(&traj.values)
                .map(|(t, z)| (z - classical_exact(&p, *t).unwrap()).abs())
                .fold(0.0, f64::max)
        };
        let (coarse, fine) = (err(0.02), err(0.01));
        // Second order: halving the step cuts the error by about four.
        prop_assert!(fine < coarse / 3.0, "{coarse:e} -> {fine:e}");
    }

    #[test]
    fn perturbation_gap_grows_in_time(r in 0.0..0.5f64, mu in 0.3..=1.0f64, eps in 1e-4..1e-2f64) {
        let p = ModelParams::new(r, 100.0, 10.0, mu, 1.0).unwrap();
        let dev = deviation_profile(&p, &SolveConfig::new(OperatorKind::Abc, 3.0, 0.01), eps).unwrap();
        prop_assert!(dev.windows(2).all(|w| w[1] >= w[0] * (1.0 - 1e-12)));
    }
}
