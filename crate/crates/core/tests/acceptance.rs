//! Acceptance suite: one test per criterion, each printing a pass/fail line.
//! Exact checks compare big rationals; convergence checks pin the stated
//! tolerances. Run with `cargo test --test acceptance -- --nocapture` to see
//! the lines.

use aztec_gaps::asym::laws::{casimir_ratio, p_n_asym, SlitOrientation};
use aztec_gaps::asym::logspace::ln_p_slit;
use aztec_gaps::equilibrium::{find_equilibrium, BarSystem};
use aztec_gaps::exact::ExactValue;
use aztec_gaps::forms::bars::{bars_count, BarConfig};
use aztec_gaps::forms::moves::move_hole_ratio;
use aztec_gaps::lattice::DefectConfig;
use aztec_gaps::oracle::{count_config, diamond_count};
use aztec_gaps::verify;
use num_rational::BigRational;
use std::time::Instant;

fn report(criterion: &str, passed: bool, detail: &str) {
    let status = if passed { "PASS" } else { "FAIL" };
    println!("acceptance {criterion}: {status} — {detail}");
    assert!(passed, "{criterion}: {detail}");
}

#[test]
fn criterion_01_oracle_equivalence_exhaustive() {
    let start = Instant::now();
    let checks = [
        verify::check_dipole_families_against_oracle(3),
        verify::check_monomer_families(3),
        verify::check_bar_families(3),
    ];
    let elapsed = start.elapsed();
    let all = checks.iter().all(|c| c.passed);
    let detail = checks.iter().map(|c| c.detail.clone()).collect::<Vec<_>>().join("; ");
    report(
        "criterion 1 (oracle equivalence, 2n ≤ 6)",
        all && elapsed.as_secs() < 60,
        &format!("{detail}; runtime {:.1?} (< 60 s)", elapsed),
    );
}

#[test]
fn criterion_02_diamond_counts() {
    let mut ok = true;
    let mut details = Vec::new();
    for (n, expect) in [(1u32, 8u64), (2, 1024), (3, 2_097_152)] {
        let got = count_config(&DefectConfig::diamond(n)).unwrap().value;
        ok &= got == expect.into() && got == diamond_count(n);
        details.push(format!("AD_{} = {got}", 2 * n));
    }
    report("criterion 2 (M(AD_2n) = 2^(n(2n+1)))", ok, &details.join(", "));
}

#[test]
fn criterion_03_factorization() {
    let c = verify::check_factorization(3);
    report("criterion 3 (odd/even factorization, 2n ≤ 6)", c.passed, &c.detail);
}

#[test]
fn criterion_04_misprint_resolutions() {
    let a = verify::check_center_pair_factor();
    let b = verify::check_slit_ratio_two_routes();
    let c = verify::check_normalized_slit_symmetry();
    report(
        "criterion 4 (misprint resolutions)",
        a.passed && b.passed && c.passed,
        &format!("(a) {}; (b) {}; (c) {}", a.detail, b.detail, c.detail),
    );
}

#[test]
fn criterion_05_dual_path_equalities() {
    let a = verify::check_monomer_dual_path();
    let b = verify::check_bars_dual_path();
    // the bar ratio times 2^{n(2n+1)} is the count itself: spot-check integrality
    let cfg = BarConfig::new(8, 3, 2, 5, 4).unwrap();
    let c = bars_count(&cfg).is_ok();
    report(
        "criterion 5 (dual-path equalities, n ≤ 8)",
        a.passed && b.passed && c,
        &format!("{}; {}; counts integral", a.detail, b.detail),
    );
}

#[test]
fn criterion_06_p_n_asymptotics() {
    let start = Instant::now();
    let rel = |n: u64| {
        let exact = ln_p_slit(n);
        let pred = p_n_asym(n).value.ln();
        ((exact - pred).exp() - 1.0).abs()
    };
    let (e100, e1000) = (rel(100), rel(1000));
    let elapsed = start.elapsed();
    report(
        "criterion 6 (P_n law)",
        e1000 < 0.01 && e1000 < e100 && elapsed.as_secs() < 5,
        &format!("rel err {e100:.3e} → {e1000:.3e}, runtime {elapsed:.1?} (< 5 s)"),
    );
}

#[test]
fn criterion_07_casimir_limit() {
    let n = 1000u64;
    let exact = aztec_gaps::asym::laws::ln_casimir_exact(n, n, n).exp();
    let target = casimir_ratio(1.0, 1.0, 1.0, SlitOrientation::HoleFirst).unwrap().value;
    let rel = (exact / target - 1.0).abs();
    report(
        "criterion 7 (Casimir limit)",
        rel < 0.01,
        &format!("finite-n {exact:.6} vs (4/3)^(1/4) = {target:.6}, rel err {rel:.3e}"),
    );
}

#[test]
fn criterion_08_boundary_law() {
    let n = 500u32;
    let mut ok = true;
    let mut details = Vec::new();
    for alpha in [0.5f64, 1.0, 1.5] {
        let a = (alpha * n as f64).round() as i64;
        let cfg = DefectConfig::new(n, vec![a], vec![]).unwrap();
        let got = move_hole_ratio(&cfg, 0).unwrap().log().unwrap().exp();
        let want = ((2.0 - alpha) / alpha).sqrt();
        let rel = (got / want - 1.0).abs();
        ok &= rel < 0.01;
        details.push(format!("α={alpha}: rel {rel:.2e}"));
    }
    report("criterion 8 (boundary law at n=500)", ok, &details.join(", "));
}

#[test]
fn criterion_09_free_energy() {
    let n = 40u64;
    let bar = BarConfig::new(n, 10, 10, 10, 10).unwrap();
    let count = bars_count(&bar).unwrap();
    let ln_m = ExactValue::from_rational(BigRational::from_integer(count.value.into()))
        .log()
        .unwrap();
    let per_site = ln_m / (4.0 * n as f64 * (2.0 * n as f64 + 1.0));
    let sys = BarSystem::new(vec![0.25, 0.25], vec![0.25, 0.25]).unwrap();
    let target = 0.25 * std::f64::consts::LN_2 + 0.125 * sys.f_value();
    let err = (per_site - target).abs();
    report(
        "criterion 9 (free energy, n=40, k=l=p=q=10)",
        err < 1e-2,
        &format!("per-site {per_site:.6} vs ¼ln2 + F/8 = {target:.6}, |Δ| = {err:.3e}"),
    );
}

#[test]
fn criterion_10_equilibrium() {
    let rep = find_equilibrium(&[0.25, 0.25]).unwrap();
    let symmetric = (rep.alphas[0] - rep.alphas[1]).abs() < 1e-8;
    let tiny_grad = rep.grad_norm < 1e-10;
    let neg_def = rep.hessian_eigs.iter().all(|&e| e < -1e-8);
    // analytic gradient vs central differences, 1e-6 relative
    let sys = BarSystem::new(vec![0.25, 0.25], vec![0.21, 0.29]).unwrap();
    let grad = sys.f_gradient();
    let h = 1e-6;
    let mut fd_ok = true;
    for m in 0..2 {
        let mut up = sys.alphas.clone();
        up[m] += h;
        let mut dn = sys.alphas.clone();
        dn[m] -= h;
        let fu = BarSystem { gammas: sys.gammas.clone(), alphas: up }.f_value();
        let fd = BarSystem { gammas: sys.gammas.clone(), alphas: dn }.f_value();
        let num = (fu - fd) / (2.0 * h);
        fd_ok &= (grad[m] - num).abs() / num.abs().max(1.0) < 1e-6;
    }
    report(
        "criterion 10 (equilibrium)",
        symmetric && tiny_grad && neg_def && fd_ok,
        &format!(
            "|α₀−β₀| = {:.2e}, ‖grad‖ = {:.2e}, Hessian eigs {:?}, fd-match {fd_ok}",
            (rep.alphas[0] - rep.alphas[1]).abs(),
            rep.grad_norm,
            rep.hessian_eigs
        ),
    );
}

#[test]
fn criterion_11_zero_interaction_exactness() {
    let c = verify::check_zero_interaction();
    report("criterion 11 (zero-interaction exactness)", c.passed, &c.detail);
}
