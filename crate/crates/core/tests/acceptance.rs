//! Exit criteria. Each test prints one `[PASS]`/`[FAIL]` line per clause
//! (run with `--nocapture` to see them) and fails if any clause fails.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};
use std::time::{Duration, Instant};

use lorentz_wigner::covering::covering_map;
use lorentz_wigner::decomp::{
    d_matrix_closed, d_matrix_printed, d_matrix_product, d_matrix_vector, extract_wigner_angle, solve_kinematics,
    verify_addition, wigner_rotation_matrix, wlg_rotation_matrix,
};
use lorentz_wigner::limits::{
    contracted_d, contraction_profile, gauge_parameter, gauge_vector_matrix, lightlike_limit_angles,
    nr_limit_angles, printed_gauge_parameter,
};
use lorentz_wigner::params::BoostParams;
use lorentz_wigner::scenarios::{sweep, SweepCase};
use lorentz_wigner::spinor::SpinorMatrix;
use lorentz_wigner::vector::FourVector;
use lorentz_wigner::verify::{sample_generator, sample_params};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 20_040_101;
const SAMPLES: usize = 1000;

struct Criterion {
    id: &'static str,
    failures: Vec<String>,
}

impl Criterion {
    fn new(id: &'static str) -> Self {
        Criterion { id, failures: Vec::new() }
    }

    fn check(&mut self, clause: &str, ok: bool, detail: String) {
        println!("[{}] criterion {}: {clause} ({detail})", if ok { "PASS" } else { "FAIL" }, self.id);
        if !ok {
            self.failures.push(format!("{clause}: {detail}"));
        }
    }

    fn at_most(&mut self, clause: &str, value: f64, bound: f64) {
        self.check(clause, value <= bound, format!("{value:e} <= {bound:e}"));
    }

    fn at_least(&mut self, clause: &str, value: f64, bound: f64) {
        self.check(clause, value >= bound, format!("{value:e} >= {bound:e}"));
    }

    fn within(&mut self, clause: &str, elapsed: Duration, limit: Duration) {
        self.check(clause, elapsed < limit, format!("{elapsed:?} < {limit:?}"));
    }

    fn finish(self) {
        assert!(self.failures.is_empty(), "criterion {} failed:\n  {}", self.id, self.failures.join("\n  "));
    }
}

fn grid() -> Vec<BoostParams> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    (0..SAMPLES).map(|_| sample_params(&mut rng)).collect()
}

#[test]
fn c01_addition_law() {
    let mut c = Criterion::new("1");
    let start = Instant::now();
    let mut worst = 0.0f64;
    for p in grid() {
        let k = solve_kinematics(&p).unwrap();
        worst = worst.max((k.alpha + k.omega - k.theta).abs());
        worst = worst.max(verify_addition(&p).unwrap());
    }
    c.at_most("max |α + ω − θ| over 1000 samples", worst, 1e-10);
    c.within("runtime", start.elapsed(), Duration::from_secs(1));
    c.finish();
}

#[test]
fn c02_closed_form_vs_matrix_products() {
    let mut c = Criterion::new("2");
    let start = Instant::now();
    let (mut w_err, mut a_err) = (0.0f64, 0.0f64);
    for p in grid() {
        let k = solve_kinematics(&p).unwrap();
        let w = extract_wigner_angle(&wigner_rotation_matrix(&p).unwrap(), None).unwrap();
        let a = extract_wigner_angle(&wlg_rotation_matrix(&p).unwrap(), None).unwrap();
        w_err = w_err.max((w - k.omega).abs());
        a_err = a_err.max((a - k.alpha).abs());
    }
    c.at_most("max |ω_closed − ω_product|", w_err, 1e-10);
    c.at_most("max |α_closed − α_product|", a_err, 1e-10);
    c.within("runtime", start.elapsed(), Duration::from_secs(1));
    c.finish();
}

#[test]
fn c03_little_group_fixed_point() {
    let mut c = Criterion::new("3");
    let (mut spinor_err, mut vector_err) = (0.0f64, 0.0f64);
    for p in grid() {
        let pb = FourVector::new(p.eta.cosh(), p.eta.sinh(), 0.0, 0.0);
        let via_spinor = covering_map(&d_matrix_product(&p).unwrap(), Some(1e-9)).unwrap().apply(&pb);
        let via_vector = d_matrix_vector(&p).unwrap().apply(&pb);
        spinor_err = spinor_err.max(via_spinor.max_abs_diff(&pb) / pb.max_abs());
        vector_err = vector_err.max(via_vector.max_abs_diff(&pb) / pb.max_abs());
    }
    c.at_most("spinor D fixes P_b (relative)", spinor_err, 1e-10);
    c.at_most("vector D fixes P_b (relative)", vector_err, 1e-10);
    c.finish();
}

#[test]
fn c04_ratio_curve_on_lambda_eq_eta() {
    let mut c = Criterion::new("4");
    let rows = sweep(SweepCase::LambdaEqEta, &[1e-6, 1e-3, 0.9999, 0.99999]).unwrap();
    c.at_most("ω/θ at tanh η = 1e−3", rows[1].omega_over_theta, 1e-2);
    c.at_least("ω/θ at tanh η = 0.9999", rows[2].omega_over_theta, 0.9);
    c.at_most("|θ − 45°| at tanh η = 1e−6", (rows[0].theta - FRAC_PI_4).abs(), 1e-6);
    c.at_most("|θ − 45°| at tanh η = 1e−3", (rows[1].theta - FRAC_PI_4).abs(), 1e-6);
    c.check(
        "θ exceeds 89.9° at tanh η = 0.99999",
        rows[3].theta.to_degrees() > 89.9,
        format!("θ = {}°", rows[3].theta.to_degrees()),
    );
    c.finish();
}

#[test]
fn c05_non_relativistic_limit() {
    let mut c = Criterion::new("5");
    let l = nr_limit_angles(&BoostParams::new(1e-4, 1e-4, 1.0).unwrap()).unwrap();
    c.at_most("|ω| at η = λ = 1e−4", l.exact.omega.abs(), 1e-7);
    c.at_most("|α − θ|/θ at η = λ = 1e−4", (l.exact.alpha - l.exact.theta).abs() / l.exact.theta, 1e-6);
    c.finish();
}

#[test]
fn c06_light_like_limit() {
    let mut c = Criterion::new("6");
    let (lambda, phi): (f64, f64) = (1.0, 1.0);
    let l = lightlike_limit_angles(lambda, phi, 20.0).unwrap();
    c.at_most("|α| at η = 20", l.exact.alpha.abs(), 1e-6);
    c.at_most("|ω − θ| at η = 20", (l.exact.omega - l.exact.theta).abs(), 1e-6);
    let expected = (lambda.cosh() + lambda.sinh() * phi.cos()).ln();
    c.at_most("|(ξ − η) − ln(cosh λ + sinh λ cos φ)|", (l.exact.xi - 20.0 - expected).abs(), 1e-6);
    c.finish();
}

#[test]
fn c07_contraction() {
    let mut c = Criterion::new("7");
    let exact = d_matrix_product(&BoostParams::new(20.0, 1.0, FRAC_PI_2).unwrap()).unwrap();
    let printed_u = printed_gauge_parameter(1.0, FRAC_PI_2).unwrap();
    let literal = SpinorMatrix::new([[1.0, printed_u], [0.0, 1.0]], None).unwrap();
    c.at_most("sup |D_exact(20, 1, π/2) − [[1, 2 tanh 1], [0, 1]]|", exact.max_abs_diff(&literal), 1e-6);
    let limit = contracted_d(1.0, FRAC_PI_2).unwrap();
    c.at_most(
        "sup |D_exact(20, 1, π/2) − [[1, −tanh 1], [0, 1]]| (exact large-η limit)",
        exact.max_abs_diff(&limit),
        1e-6,
    );
    let rows = contraction_profile(1.0, FRAC_PI_2, &[5.0, 10.0, 15.0, 20.0, 25.0]).unwrap();
    let devs: Vec<f64> = rows.iter().map(|r| r.deviation).collect();
    let floor = 4.0 * f64::EPSILON;
    let monotone = devs.windows(2).all(|w| w[1] < w[0] || (w[0] <= floor && w[1] <= floor));
    c.check("deviation decreases over η ∈ {5, 10, 15, 20, 25}", monotone, format!("{devs:?}"));
    let lit: Vec<f64> = [5.0, 10.0, 15.0, 20.0, 25.0]
        .iter()
        .map(|&e| d_matrix_product(&BoostParams::new(e, 1.0, FRAC_PI_2).unwrap()).unwrap().max_abs_diff(&literal))
        .collect();
    c.check(
        "deviation from the literal target is non-increasing",
        lit.windows(2).all(|w| w[1] <= w[0]),
        format!("{lit:?}"),
    );
    c.finish();
}

/// φ at which `tanh λ sin φ/(1 + tanh λ cos φ) = u`.
fn phi_for_gauge(lambda: f64, u: f64) -> f64 {
    let t = lambda.tanh();
    let r = t * (1.0 + u * u).sqrt();
    u.atan() + (u / r).asin()
}

#[test]
fn c08_gauge_matrix() {
    let mut c = Criterion::new("8");
    let light = FourVector::new(1.0, 1.0, 0.0, 0.0);
    for u in [-2.0, 0.7, 5.0] {
        let g = gauge_vector_matrix(u).unwrap();
        c.at_most(&format!("Lorentz condition, u = {u}"), g.lorentz_deviation(), 1e-12);
        c.at_most(&format!("fixes (1, 1, 0, 0), u = {u}"), g.apply(&light).max_abs_diff(&light), 1e-12);
        let lambda = 3.0;
        let phi = phi_for_gauge(lambda, u);
        assert!((gauge_parameter(lambda, phi).unwrap() - u).abs() < 1e-12, "bad φ for u = {u}");
        let d25 = d_matrix_vector(&BoostParams::mirrored(25.0, lambda, phi).unwrap()).unwrap();
        c.at_most(&format!("matches D_vector at η = 25, u = {u}"), g.max_abs_diff(&d25), 1e-6);
    }
    c.finish();
}

#[test]
fn c09_representation_consistency() {
    let mut c = Criterion::new("9");
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 0x9);
    let mut worst = 0.0f64;
    for _ in 0..SAMPLES {
        let (sa, va) = sample_generator(&mut rng).unwrap();
        let (sb, vb) = sample_generator(&mut rng).unwrap();
        let lhs = covering_map(&(sa * sb), None).unwrap();
        worst = worst.max(lhs.max_abs_diff(&(va * vb)) / (va.max_abs() * vb.max_abs()).max(1.0));
    }
    c.at_most("covering-map homomorphism over 1000 generator pairs", worst, 1e-10);
    let mut worst_d = 0.0f64;
    for p in grid() {
        let cover = covering_map(&d_matrix_product(&p).unwrap(), Some(1e-9)).unwrap();
        worst_d = worst_d.max(cover.max_abs_diff(&d_matrix_vector(&p).unwrap()));
    }
    c.at_most("covering_map(D_spinor) = D_vector", worst_d, 1e-9);
    c.finish();
}

#[test]
fn c10_typo_resolution_record() {
    let mut c = Criterion::new("10");
    let p = BoostParams::new(1.0, 1.0, FRAC_PI_2).unwrap();
    let m = d_matrix_printed(&p).unwrap();
    let det_printed = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    c.at_least("|det − 1| of the printed D closed form", (det_printed - 1.0).abs(), 0.1);
    c.at_most("|det − 1| of the sign-corrected D", (d_matrix_closed(&p).unwrap().determinant() - 1.0).abs(), 1e-12);

    // Least-squares fit of ξ² − η² − λ² = k ηλ cos φ at small rapidity.
    let eps: f64 = 1e-3;
    let (mut num, mut den) = (0.0, 0.0);
    for i in 0..=40 {
        let phi = PI * i as f64 / 40.0;
        let basis = eps * eps * phi.cos();
        if let Ok(k) = solve_kinematics(&BoostParams::new(eps, eps, phi).unwrap()) {
            let y = k.xi * k.xi - 2.0 * eps * eps;
            num += basis * y;
            den += basis * basis;
        }
    }
    let coefficient = num / den;
    c.at_most("fitted ηλ cos φ coefficient in ξ² is 2", (coefficient - 2.0).abs(), 1e-3);
    c.check("fitted coefficient is not the printed 1", (coefficient - 1.0).abs() > 0.5, format!("k = {coefficient}"));
    c.finish();
}
