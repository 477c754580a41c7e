//! Verification batteries: exhaustive oracle-vs-formula sweeps, exact
//! identity checks, and quantitative asymptotic convergence checks. The CLI
//! `verify` subcommand and the acceptance suite both run these.

use crate::asym::constants::defect_prefactor;
use crate::asym::laws::{
    casimir_ratio, finite_slit_tail, ln_casimir_exact, p_n_asym, slit_limit, SlitOrientation,
};
use crate::asym::logspace::{ln_p_slit, ln_q_product, Kahan};
use crate::equilibrium::{find_equilibrium, BarSystem};
use crate::exact::ExactValue;
use crate::forms::bars::{bars_count, bars_ratio_hyperfactorial, BarConfig};
use crate::forms::count::{count_exact, CountPath};
use crate::forms::dipoles::{center_dipole_corr, dipole_family_corr, dipole_gap};
use crate::forms::monomers::{eval_nested_pochhammer, eval_pq_form};
use crate::forms::moves::move_hole_ratio;
use crate::forms::slits::{multi_slit_corr, slit_corr, slit_ratio, SlitSpec};
use crate::lattice::{DefectConfig, Dipole, DipoleKind};
use crate::oracle::{corr_finite, count_config, diamond_count};
use num_rational::BigRational;

/// One named check with its outcome.
#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn pass(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Check { name: name.into(), passed: true, detail: detail.into() }
    }

    fn result(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check { name: name.into(), passed, detail: detail.into() }
    }
}

/// All dipoles that fit on `AD_{2n}`.
pub fn dipoles_on(n: u32) -> Vec<Dipole> {
    let mut out = Vec::new();
    for s in 0..=n as i64 {
        for kind in [
            DipoleKind::OddHoleSep,
            DipoleKind::EvenHoleSep,
            DipoleKind::EvenSepHole,
            DipoleKind::OddSepHole,
        ] {
            let d = Dipole::new(kind, s);
            if d.fits(n) {
                out.push(d);
            }
        }
    }
    out
}

/// All families of pairwise-disjoint dipoles on `AD_{2n}` (nonempty).
pub fn dipole_families_on(n: u32) -> Vec<Vec<Dipole>> {
    let singles = dipoles_on(n);
    let mut families: Vec<Vec<Dipole>> = Vec::new();
    // depth-first over the singles ordered by span
    fn extend(
        singles: &[Dipole],
        from: usize,
        current: &mut Vec<Dipole>,
        out: &mut Vec<Vec<Dipole>>,
    ) {
        for (i, d) in singles.iter().enumerate().skip(from) {
            let clash = current.iter().any(|c| {
                let (a1, b1) = c.span();
                let (a2, b2) = d.span();
                a1.max(a2) <= b1.min(b2)
            });
            if clash {
                continue;
            }
            current.push(*d);
            out.push(current.clone());
            extend(singles, i + 1, current, out);
            current.pop();
        }
    }
    let mut current = Vec::new();
    extend(&singles, 0, &mut current, &mut families);
    families
}

fn config_of(n: u32, family: &[Dipole]) -> DefectConfig {
    let mut holes: Vec<i64> = family.iter().map(|d| d.hole_pos()).collect();
    let mut seps: Vec<i64> = family.iter().map(|d| d.sep_pos()).collect();
    holes.sort_unstable();
    seps.sort_unstable();
    DefectConfig { n, holes, seps }
}

/// Criterion: `M(AD_{2n}) = 2^{n(2n+1)}` for n = 1, 2, 3, by oracle.
pub fn check_diamond_counts() -> Check {
    for n in 1..=3u32 {
        let got = match count_config(&DefectConfig::diamond(n)) {
            Ok(c) => c.value,
            Err(e) => return Check::result("diamond-counts", false, format!("oracle: {e}")),
        };
        if got != diamond_count(n) {
            return Check::result(
                "diamond-counts",
                false,
                format!("AD_{}: oracle {} != 2^(n(2n+1))", 2 * n, got),
            );
        }
    }
    Check::pass("diamond-counts", "AD_2, AD_4, AD_6 = 8, 1024, 2097152")
}

/// Criterion: every dipole family on `AD_2..AD_{2max_n}` matches the oracle
/// exactly through the family formula.
pub fn check_dipole_families_against_oracle(max_n: u32) -> Check {
    let mut cases = 0usize;
    for n in 1..=max_n {
        for family in dipole_families_on(n) {
            let cfg = config_of(n, &family);
            let formula = match dipole_family_corr(n, &family) {
                Ok(v) => v,
                Err(e) => {
                    return Check::result(
                        "dipole-families-vs-oracle",
                        false,
                        format!("formula failed on {cfg:?}: {e}"),
                    )
                }
            };
            let oracle = match corr_finite(&cfg) {
                Ok(v) => v,
                Err(e) => {
                    return Check::result(
                        "dipole-families-vs-oracle",
                        false,
                        format!("oracle failed on {cfg:?}: {e}"),
                    )
                }
            };
            if formula != oracle {
                return Check::result(
                    "dipole-families-vs-oracle",
                    false,
                    format!("mismatch on {cfg:?}: formula {formula} vs oracle {oracle}"),
                );
            }
            cases += 1;
        }
    }
    Check::pass("dipole-families-vs-oracle", format!("{cases} families exact"))
}

/// Criterion: the odd/even factorization `ω(𝒟) = ω(𝒟_o)·ω(𝒟_e)` holds
/// exactly (oracle counts) for every mixed family with `2n ≤ 2max_n`.
pub fn check_factorization(max_n: u32) -> Check {
    let mut cases = 0usize;
    for n in 1..=max_n {
        for family in dipole_families_on(n) {
            let odd: Vec<Dipole> = family.iter().copied().filter(Dipole::is_odd).collect();
            let even: Vec<Dipole> =
                family.iter().copied().filter(|d| !d.is_odd()).collect();
            if odd.is_empty() || even.is_empty() {
                continue;
            }
            let whole = corr_finite(&config_of(n, &family));
            let o = corr_finite(&config_of(n, &odd));
            let e = corr_finite(&config_of(n, &even));
            match (whole, o, e) {
                (Ok(w), Ok(o), Ok(e)) => {
                    if w != o.mul(&e) {
                        return Check::result(
                            "odd-even-factorization",
                            false,
                            format!("family {:?} on AD_{}: {w} != {o}·{e}", family, 2 * n),
                        );
                    }
                }
                _ => {
                    return Check::result(
                        "odd-even-factorization",
                        false,
                        format!("oracle failure on {family:?}"),
                    )
                }
            }
            cases += 1;
        }
    }
    Check::pass("odd-even-factorization", format!("{cases} mixed families exact"))
}

/// Criterion: monomer-only counts (k ≤ 3) match the oracle for `2n ≤ 2max_n`.
pub fn check_monomer_families(max_n: u32) -> Check {
    let mut cases = 0usize;
    for n in 1..=max_n {
        for k in 1..=3usize {
            let width = 2 * n as i64 + k as i64;
            let mut sets = vec![Vec::<i64>::new()];
            for _ in 0..k {
                let mut next = Vec::new();
                for s in &sets {
                    let lo = s.last().map_or(1, |v| v + 1);
                    for p in lo..=width {
                        let mut t = s.clone();
                        t.push(p);
                        next.push(t);
                    }
                }
                sets = next;
            }
            for holes in sets.into_iter().filter(|s| s.len() == k) {
                let cfg = DefectConfig { n, holes, seps: Vec::new() };
                let (count, path) = match count_exact(&cfg) {
                    Ok(v) => v,
                    Err(e) => {
                        return Check::result(
                            "monomer-families-vs-oracle",
                            false,
                            format!("count_exact failed on {cfg:?}: {e}"),
                        )
                    }
                };
                debug_assert!(matches!(path, CountPath::MoveChain | CountPath::Bars));
                let oracle = match count_config(&cfg) {
                    Ok(c) => c.value,
                    Err(e) => {
                        return Check::result(
                            "monomer-families-vs-oracle",
                            false,
                            format!("oracle failed on {cfg:?}: {e}"),
                        )
                    }
                };
                if count.value != oracle {
                    return Check::result(
                        "monomer-families-vs-oracle",
                        false,
                        format!("mismatch on {cfg:?}: {} vs oracle {}", count.value, oracle),
                    );
                }
                cases += 1;
            }
        }
    }
    Check::pass("monomer-families-vs-oracle", format!("{cases} hole sets exact"))
}

/// Criterion: bar configurations with parameters ≤ 2 match the oracle.
pub fn check_bar_families(max_n: u32) -> Check {
    let mut cases = 0usize;
    for n in 1..=max_n as u64 {
        for k in 0..=2u64 {
            for l in 0..=2u64 {
                if k + l > n {
                    continue;
                }
                for p in 0..=2u64 {
                    for q in 0..=2u64 {
                        let bar = BarConfig::new(n, k, l, p, q).expect("constraint checked");
                        let cfg = bar.to_defect_config();
                        if cfg.validate().is_err() {
                            continue; // zero-width degenerate layouts
                        }
                        let formula = match bars_count(&bar) {
                            Ok(c) => c.value,
                            Err(e) => {
                                return Check::result(
                                    "bars-vs-oracle",
                                    false,
                                    format!("bars_count failed on {bar:?}: {e}"),
                                )
                            }
                        };
                        let oracle = match count_config(&cfg) {
                            Ok(c) => c.value,
                            Err(e) => {
                                return Check::result(
                                    "bars-vs-oracle",
                                    false,
                                    format!("oracle failed on {bar:?}: {e}"),
                                )
                            }
                        };
                        if formula != oracle {
                            return Check::result(
                                "bars-vs-oracle",
                                false,
                                format!("mismatch on {bar:?}: {formula} vs {oracle}"),
                            );
                        }
                        cases += 1;
                    }
                }
            }
        }
    }
    Check::pass("bars-vs-oracle", format!("{cases} bar configs exact"))
}

/// The full oracle suite.
pub fn oracle_suite(max_n: u32) -> Vec<Check> {
    vec![
        check_diamond_counts(),
        check_dipole_families_against_oracle(max_n),
        check_factorization(max_n),
        check_monomer_families(max_n),
        check_bar_families(max_n),
    ]
}

/// Misprint-resolution (a): the center pair factor equals the interaction
/// function `e²` of the dipole endpoints, for a range of like pairs.
pub fn check_center_pair_factor() -> Check {
    for s in 0..4i64 {
        for t in (s + 1)..5i64 {
            let ds = [Dipole::new(DipoleKind::OddHoleSep, s), Dipole::new(DipoleKind::OddHoleSep, t)];
            let joint = center_dipole_corr(&ds).expect("valid dipoles");
            let singles = ExactValue::pi_half_power(-4);
            let pair = joint.div(&singles);
            let e2 = crate::forms::efunc::e_squared(
                &[ds[0].hole_pos(), ds[1].hole_pos()],
                &[ds[0].sep_pos(), ds[1].sep_pos()],
            )
            .expect("distinct");
            if pair != ExactValue::from_rational(e2) {
                return Check::result(
                    "center-pair-factor",
                    false,
                    format!("s={s}, t={t}: pair factor {pair} != e²"),
                );
            }
        }
    }
    Check::pass("center-pair-factor", "pair factor = e² (squared numerator) for all tested pairs")
}

/// Misprint-resolution (b): `slit_ratio(1,1,1) = 4/5` by two independent
/// routes (Gamma products vs center dipole families).
pub fn check_slit_ratio_two_routes() -> Check {
    let route1 = slit_ratio(1, 1, 1, SlitOrientation::HoleFirst).expect("valid");
    let spec = SlitSpec::new(vec![1, 1], vec![SlitOrientation::HoleFirst; 2], vec![2])
        .expect("valid spec");
    let route2 = multi_slit_corr(&spec)
        .expect("valid")
        .div(&slit_corr(2).expect("valid"));
    let expect = ExactValue::from_ratio(4, 5);
    Check::result(
        "slit-ratio-two-routes",
        route1 == expect && route2 == expect,
        format!("route1 {route1}, route2 {route2}, expected 4/5"),
    )
}

/// Misprint-resolution (c): the normalized slit symmetry
/// `ω(a,b;2d)/ω_{a+b} = ω(a,d;2b)/ω_{a+d}` exactly for a,b,d ≤ 6, with the
/// worked instance 27/35 at (1,2,1).
pub fn check_normalized_slit_symmetry() -> Check {
    for a in 0..=6u64 {
        for b in 0..=6u64 {
            for d in 0..=6u64 {
                let lhs = slit_ratio(a, b, d, SlitOrientation::HoleFirst).expect("valid");
                let rhs = slit_ratio(a, d, b, SlitOrientation::HoleFirst).expect("valid");
                if lhs != rhs {
                    return Check::result(
                        "normalized-slit-symmetry",
                        false,
                        format!("a={a} b={b} d={d}: {lhs} != {rhs}"),
                    );
                }
            }
        }
    }
    let worked = slit_ratio(1, 2, 1, SlitOrientation::HoleFirst).expect("valid");
    Check::result(
        "normalized-slit-symmetry",
        worked == ExactValue::from_ratio(27, 35),
        format!("b↔d symmetry exact for a,b,d ≤ 6; worked value {worked} (want 27/35)"),
    )
}

/// Dual-path: nested Pochhammer vs P/Q form for all hole sets with n ≤ 8.
pub fn check_monomer_dual_path() -> Check {
    let mut cases = 0usize;
    for n in 1..=8u64 {
        let mut stack: Vec<Vec<u64>> = vec![vec![]];
        while let Some(prefix) = stack.pop() {
            if !prefix.is_empty() {
                let a = eval_nested_pochhammer(n, &prefix).expect("valid");
                let b = eval_pq_form(n, &prefix).expect("valid");
                if a != b {
                    return Check::result(
                        "monomer-dual-path",
                        false,
                        format!("n={n} s={prefix:?}: {a} != {b}"),
                    );
                }
                cases += 1;
            }
            let lo = prefix.last().map_or(0, |v| v + 1);
            for v in lo..=n {
                let mut t = prefix.clone();
                t.push(v);
                stack.push(t);
            }
        }
    }
    Check::pass("monomer-dual-path", format!("{cases} parameter sets exact"))
}

/// Dual-path: Gamma form vs hyperfactorial form of the bar count for all
/// parameters with n ≤ 8 (p, q ≤ 8).
pub fn check_bars_dual_path() -> Check {
    let mut cases = 0usize;
    for n in 1..=8u64 {
        for k in 0..=n {
            for l in 0..=(n - k) {
                for p in 0..=8u64 {
                    for q in 0..=8u64 {
                        let cfg = BarConfig::new(n, k, l, p, q).expect("checked");
                        let a = crate::forms::bars::bars_ratio_gamma(&cfg).expect("valid");
                        let b = bars_ratio_hyperfactorial(&cfg).expect("valid");
                        if a != b {
                            return Check::result(
                                "bars-dual-path",
                                false,
                                format!("{cfg:?}: {a} != {b}"),
                            );
                        }
                        cases += 1;
                    }
                }
            }
        }
    }
    Check::pass("bars-dual-path", format!("{cases} parameter sets exact"))
}

/// Zero-interaction: opposite-parity dipole gaps and the non-interacting
/// slit parities give exact rational zeros.
pub fn check_zero_interaction() -> Check {
    // opposite-parity dipole pairs (both printed zero identities)
    let n = 4u32;
    let pairs = [
        (Dipole::new(DipoleKind::OddHoleSep, 0), Dipole::new(DipoleKind::EvenHoleSep, 2)),
        (Dipole::new(DipoleKind::OddHoleSep, 0), Dipole::new(DipoleKind::EvenSepHole, 2)),
    ];
    for (d1, d2) in pairs {
        match dipole_gap(n, &d1, &d2) {
            Ok(v) if v.is_zero() => {}
            Ok(v) => {
                return Check::result(
                    "zero-interaction",
                    false,
                    format!("gap of {d1:?},{d2:?} = {v}, expected exact 0"),
                )
            }
            Err(e) => return Check::result("zero-interaction", false, format!("{e}")),
        }
    }
    // like slits across an odd gap, opposite slits across an even gap
    for (orientations, gap) in [
        ([SlitOrientation::HoleFirst, SlitOrientation::HoleFirst], 3u64),
        ([SlitOrientation::HoleFirst, SlitOrientation::SepFirst], 2u64),
    ] {
        let spec = SlitSpec::new(vec![2, 2], orientations.to_vec(), vec![gap]).expect("valid");
        let joint = center_dipole_corr(&spec.dipoles()).expect("valid");
        let prod = slit_corr(2).expect("valid").mul(&slit_corr(2).expect("valid"));
        match joint.try_sub(&prod) {
            Ok(v) if v.is_zero() => {}
            other => {
                return Check::result(
                    "zero-interaction",
                    false,
                    format!("slit difference not exact zero: {other:?}"),
                )
            }
        }
    }
    Check::pass("zero-interaction", "all printed zero cases are exact rational zeros")
}

/// The exact-identity suite.
pub fn identities_suite() -> Vec<Check> {
    vec![
        check_center_pair_factor(),
        check_slit_ratio_two_routes(),
        check_normalized_slit_symmetry(),
        check_monomer_dual_path(),
        check_bars_dual_path(),
        check_zero_interaction(),
    ]
}

/// Criterion: `P_n` vs its `n^{−1/4}` law — under 1% at n = 1000 and
/// strictly better than at n = 100.
pub fn check_p_n_convergence() -> Check {
    let rel = |n: u64| {
        let exact = ln_p_slit(n);
        let pred = p_n_asym(n).value.ln();
        ((exact - pred).exp() - 1.0).abs()
    };
    let (e100, e1000) = (rel(100), rel(1000));
    Check::result(
        "p-n-asymptotics",
        e1000 < 0.01 && e1000 < e100,
        format!("rel err {e100:.3e} at n=100, {e1000:.3e} at n=1000"),
    )
}

/// Criterion: Casimir ratio at α=β=δ=1 within 1% of (4/3)^{1/4} at n=1000.
pub fn check_casimir_convergence() -> Check {
    let n = 1000u64;
    let exact = ln_casimir_exact(n, n, n).exp();
    let target = casimir_ratio(1.0, 1.0, 1.0, SlitOrientation::HoleFirst)
        .expect("valid")
        .value;
    let rel = (exact / target - 1.0).abs();
    Check::result(
        "casimir-limit",
        rel < 0.01,
        format!("finite-n {exact:.6} vs limit {target:.6}, rel err {rel:.3e}"),
    )
}

/// Criterion: the exact single-hole move ratio at position ≈ αn tends to
/// `√((2−α)/α)`, within 1% at n = 500 for α ∈ {1/2, 1, 3/2}.
pub fn check_boundary_law() -> Check {
    let n = 500u32;
    let mut details = Vec::new();
    for (num, den) in [(1i64, 2i64), (1, 1), (3, 2)] {
        let alpha = num as f64 / den as f64;
        let a = (alpha * n as f64).round() as i64;
        let cfg = DefectConfig::new(n, vec![a], vec![]).expect("valid");
        let ratio = move_hole_ratio(&cfg, 0).expect("movable");
        let got = ratio.log().expect("positive").exp();
        let want = ((2.0 - alpha) / alpha).sqrt();
        let rel = (got / want - 1.0).abs();
        if rel >= 0.01 {
            return Check::result(
                "boundary-law",
                false,
                format!("α={alpha}: ratio {got:.6} vs √((2−α)/α) = {want:.6}, rel {rel:.3e}"),
            );
        }
        details.push(format!("α={alpha}: rel {rel:.2e}"));
    }
    Check::pass("boundary-law", details.join(", "))
}

/// Criterion: free energy of the two-bar system at n=40, k=l=p=q=10 —
/// per-site log of the exact count within 1e-2 of `¼ln2 + F/8`.
pub fn check_free_energy() -> Check {
    let n = 40u64;
    let bar = BarConfig::new(n, 10, 10, 10, 10).expect("valid");
    let count = bars_count(&bar).expect("valid");
    let ln_m = ExactValue::from_rational(BigRational::from_integer(count.value.into()))
        .log()
        .expect("positive");
    let per_site = ln_m / (4.0 * n as f64 * (2.0 * n as f64 + 1.0));
    let sys = BarSystem::new(vec![0.25, 0.25], vec![0.25, 0.25]).expect("valid");
    let target = 0.25 * std::f64::consts::LN_2 + 0.125 * sys.f_value();
    let err = (per_site - target).abs();
    Check::result(
        "free-energy",
        err < 1e-2,
        format!("per-site {per_site:.6} vs ¼ln2+F/8 = {target:.6}, |Δ| = {err:.3e}"),
    )
}

/// Criterion: equilibrium of two equal bars — symmetric gaps, tiny gradient,
/// negative-definite Hessian, analytic gradient matching central differences.
pub fn check_equilibrium() -> Check {
    let rep = match find_equilibrium(&[0.25, 0.25]) {
        Ok(r) => r,
        Err(e) => return Check::result("equilibrium", false, format!("{e}")),
    };
    let symmetric = (rep.alphas[0] - rep.alphas[1]).abs() < 1e-8;
    let tiny_grad = rep.grad_norm < 1e-10;
    let neg_def = rep.hessian_eigs.iter().all(|&e| e < -1e-8);
    // analytic vs central-difference gradient at a generic interior point
    let sys = BarSystem::new(vec![0.25, 0.25], vec![0.2, 0.3]).expect("valid");
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
        if (grad[m] - num).abs() / num.abs().max(1.0) >= 1e-6 {
            fd_ok = false;
        }
    }
    Check::result(
        "equilibrium",
        symmetric && tiny_grad && neg_def && fd_ok,
        format!(
            "|α₀−β₀| = {:.2e}, ‖grad‖ = {:.2e}, eigs {:?}, fd-gradient ok: {fd_ok}",
            (rep.alphas[0] - rep.alphas[1]).abs(),
            rep.grad_norm,
            rep.hessian_eigs
        ),
    )
}

/// Decay battery: every law's error shrinks along a doubling grid.
pub fn check_decay_battery() -> Check {
    let mut details = Vec::new();
    // like-orientation slit separation law
    let rel_same = |d: u64| {
        let exact = ln_p_slit(d);
        let pred = slit_limit(d, SlitOrientation::HoleFirst).value.ln();
        ((exact - pred).exp() - 1.0).abs()
    };
    if !(rel_same(400) < rel_same(50)) {
        return Check::result("asym-decay", false, "slit-limit-same error not decaying");
    }
    details.push(format!("slit-same {:.2e}→{:.2e}", rel_same(50), rel_same(400)));
    // opposite orientation
    let rel_opp = |d: u64| {
        let exact = 0.5 * std::f64::consts::PI.ln()
            + crate::asym::logspace::ln_gamma_int(d + 1)
            - crate::asym::logspace::ln_gamma_half(d)
            + ln_p_slit(d);
        let pred = slit_limit(d, SlitOrientation::SepFirst).value.ln();
        ((exact - pred).exp() - 1.0).abs()
    };
    if !(rel_opp(400) < rel_opp(50)) {
        return Check::result("asym-decay", false, "slit-limit-opposite error not decaying");
    }
    details.push(format!("slit-opp {:.2e}→{:.2e}", rel_opp(50), rel_opp(400)));
    // finite slit tail at (a,b) = (2,1): exact difference vs prediction
    let tail_rel = |d: u64| {
        let spec = SlitSpec::new(
            vec![2, 1],
            vec![SlitOrientation::HoleFirst; 2],
            vec![2 * d],
        )
        .expect("valid");
        let joint = multi_slit_corr(&spec).expect("valid");
        let prod = slit_corr(2).expect("valid").mul(&slit_corr(1).expect("valid"));
        let diff = joint.try_sub(&prod).expect("compatible").to_f64();
        let pred = finite_slit_tail(2, 1, d, SlitOrientation::HoleFirst, true)
            .expect("valid")
            .value;
        (diff / pred - 1.0).abs()
    };
    let (t10, t50) = (tail_rel(10), tail_rel(50));
    if !(t50 < t10 && t50 < 0.05) {
        return Check::result(
            "asym-decay",
            false,
            format!("finite-slit tail rel err {t10:.3e}→{t50:.3e}, want <5% and decaying"),
        );
    }
    details.push(format!("tail {t10:.2e}→{t50:.2e}"));
    // defect-field boundary factor at k=1, α=1 (center): exact Q² vs law
    let field_rel = |n: u64| {
        let s = n / 2;
        let exact = 2.0 * ln_q_product(s, 2 * n as i64 + 3);
        let mut pred = Kahan::new();
        pred.add(defect_prefactor().ln() - 0.25 * (n as f64).ln());
        let site = 2 * s as i64 + 1;
        let width = 2 * n as i64 + 1;
        let alpha = site as f64 / n as f64;
        pred.add(-((site - 1) as f64 + 0.5) * 0.5 * (alpha / 2.0).ln());
        pred.add(-((width - site) as f64 + 0.5) * 0.5 * (1.0 - alpha / 2.0).ln());
        ((exact - pred.value()).exp() - 1.0).abs()
    };
    let (f100, f500) = (field_rel(100), field_rel(500));
    if !(f500 < f100 && f500 < 0.01) {
        return Check::result(
            "asym-decay",
            false,
            format!("defect-field rel err {f100:.3e}→{f500:.3e}, want <1% and decaying"),
        );
    }
    details.push(format!("field {f100:.2e}→{f500:.2e}"));
    Check::pass("asym-decay", details.join("; "))
}

/// The asymptotics suite.
pub fn asymptotics_suite() -> Vec<Check> {
    vec![
        check_p_n_convergence(),
        check_casimir_convergence(),
        check_boundary_law(),
        check_free_energy(),
        check_equilibrium(),
        check_decay_battery(),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_enumeration_counts() {
        // AD_2 hosts exactly 2 dipoles (the two kinds on sites 1,2), so 2 families
        let fams = dipole_families_on(1);
        assert_eq!(fams.len(), 2);
        assert_eq!(dipole_families_on(2).len(), 10);
    }

    #[test]
    fn small_oracle_suite_passes() {
        for c in oracle_suite(2) {
            assert!(c.passed, "{}: {}", c.name, c.detail);
        }
    }
}
