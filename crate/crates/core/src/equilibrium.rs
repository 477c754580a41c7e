//! The free-energy landscape of `s` bars of charge and its constrained
//! maximization: bar-length fractions `γ_i` are fixed, gap fractions `α_i`
//! vary over the open simplex `{α_i > 0, Σα_i < 1}`, and the exponent
//! `F = Σ_{i<j∈I} ε_{ij} |i−j|² ln|i−j|` over the 2s+2 polarization points
//! is driven to its unique maximum by projected gradient ascent.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum EquilibriumError {
    #[error("bar system invalid: {0}")]
    Invalid(String),
    #[error("gradient ascent failed to converge within {0} iterations")]
    NoConvergence(usize),
    #[error("multi-start runs disagree: spread {0:.3e} exceeds 1e-8")]
    MultiStartDisagreement(f64),
}

/// Normalized bar lengths `γ_i` and gap fractions `α_i`.
#[derive(Debug, Clone, PartialEq)]
pub struct BarSystem {
    pub gammas: Vec<f64>,
    pub alphas: Vec<f64>,
}

/// `x² ln x`, extended continuously by 0 at `x = 0`.
fn xx_ln(x: f64) -> f64 {
    if x <= 0.0 {
        0.0
    } else {
        x * x * x.ln()
    }
}

/// `d/dx (x² ln x) = 2x ln x + x`, extended by 0 at `x = 0`.
fn xx_ln_prime(x: f64) -> f64 {
    if x <= 0.0 {
        0.0
    } else {
        2.0 * x * x.ln() + x
    }
}

impl BarSystem {
    pub fn new(gammas: Vec<f64>, alphas: Vec<f64>) -> Result<Self, EquilibriumError> {
        if gammas.is_empty() || gammas.len() != alphas.len() {
            return Err(EquilibriumError::Invalid(
                "need one gap fraction per bar, at least one bar".into(),
            ));
        }
        if gammas.iter().any(|&g| g <= 0.0) || alphas.iter().any(|&a| a <= 0.0) {
            return Err(EquilibriumError::Invalid("fractions must be positive".into()));
        }
        if alphas.iter().sum::<f64>() >= 1.0 {
            return Err(EquilibriumError::Invalid("gap fractions must sum below 1".into()));
        }
        Ok(BarSystem { gammas, alphas })
    }

    /// The 2s+2 polarization points: 0, then each bar's start and end, then
    /// the right boundary `1 + Σγ`.
    pub fn points(&self) -> Vec<f64> {
        let mut pts = vec![0.0];
        let mut acc = 0.0;
        for (a, g) in self.alphas.iter().zip(&self.gammas) {
            acc += a;
            pts.push(acc);
            acc += g;
            pts.push(acc);
        }
        pts.push(1.0 + self.gammas.iter().sum::<f64>());
        pts
    }

    /// Pairwise distances with the alternating sign rule: +1 when an even
    /// number of points lies strictly between the pair, −1 when odd.
    pub fn signed_pairs(&self) -> Vec<(i64, f64)> {
        let pts = self.points();
        let mut out = Vec::new();
        for i in 0..pts.len() {
            for j in (i + 1)..pts.len() {
                let eps = if (j - i - 1) % 2 == 0 { 1 } else { -1 };
                out.push((eps, pts[j] - pts[i]));
            }
        }
        out
    }

    /// `F = Σ ε_{ij} |i−j|² ln|i−j|` over the point pairs.
    pub fn f_value(&self) -> f64 {
        self.signed_pairs().iter().map(|&(e, d)| e as f64 * xx_ln(d)).sum()
    }

    /// Analytic gradient `∂F/∂α_m`: each pair distance is linear in the gap
    /// fractions with slope −1, 0 or +1.
    pub fn f_gradient(&self) -> Vec<f64> {
        let pts = self.points();
        let s = self.alphas.len();
        // d(point_t)/d(α_m): points are prefix sums; point index 1+2b and
        // 2+2b (bar b's start/end) move with α_m for m ≤ b; the first and
        // last points are fixed.
        let dep = |t: usize, m: usize| -> f64 {
            if t == 0 || t == 2 * s + 1 {
                0.0
            } else {
                let bar = (t - 1) / 2;
                if m <= bar {
                    1.0
                } else {
                    0.0
                }
            }
        };
        let mut grad = vec![0.0; s];
        for i in 0..pts.len() {
            for j in (i + 1)..pts.len() {
                let eps = if (j - i - 1) % 2 == 0 { 1.0 } else { -1.0 };
                let d = pts[j] - pts[i];
                let slope = eps * xx_ln_prime(d);
                for (m, g) in grad.iter_mut().enumerate() {
                    let dd = dep(j, m) - dep(i, m);
                    if dd != 0.0 {
                        *g += slope * dd;
                    }
                }
            }
        }
        grad
    }
}

/// Solver tolerances: gradient norm target, multi-start agreement, simplex
/// margin keeping the search away from the divergent boundary.
pub const GRAD_TOL: f64 = 1e-10;
pub const MULTI_START_TOL: f64 = 1e-8;
pub const SIMPLEX_MARGIN: f64 = 1e-6;
const MAX_GRADIENT_ITERS: usize = 2_000;
const MAX_NEWTON_ITERS: usize = 80;

/// Euclidean projection onto `{x_i ≥ lo, Σx_i ≤ hi}`.
fn project(x: &mut [f64], lo: f64, hi: f64) {
    for v in x.iter_mut() {
        *v = v.max(lo);
    }
    let sum: f64 = x.iter().sum();
    if sum <= hi {
        return;
    }
    // project onto the face Σx = hi, x ≥ lo: shift to y = x − lo and run the
    // sorted water-filling projection onto the scaled simplex
    let n = x.len();
    let budget = hi - lo * n as f64;
    let mut y: Vec<f64> = x.iter().map(|v| v - lo).collect();
    let mut sorted = y.clone();
    sorted.sort_by(|a, b| b.partial_cmp(a).expect("finite"));
    let mut acc = 0.0;
    let mut theta = 0.0;
    for (i, &v) in sorted.iter().enumerate() {
        acc += v;
        let t = (acc - budget) / (i as f64 + 1.0);
        if i + 1 == n || sorted[i + 1] <= t {
            theta = t;
            break;
        }
    }
    for (xi, yi) in x.iter_mut().zip(y.iter_mut()) {
        *xi = (*yi - theta).max(0.0) + lo;
    }
}

/// Result of an equilibrium search.
#[derive(Debug, Clone, Serialize)]
pub struct EquilibriumReport {
    pub schema: String,
    pub gammas: Vec<f64>,
    pub alphas: Vec<f64>,
    #[serde(rename = "F")]
    pub f: f64,
    pub grad_norm: f64,
    pub hessian_eigs: Vec<f64>,
}

/// Solves the small symmetric system `A·x = b` by Gaussian elimination with
/// partial pivoting (the Hessians here are a handful of rows).
fn solve_linear(mut a: Vec<Vec<f64>>, mut b: Vec<f64>) -> Option<Vec<f64>> {
    let n = b.len();
    for col in 0..n {
        let pivot = (col..n).max_by(|&i, &j| {
            a[i][col].abs().partial_cmp(&a[j][col].abs()).expect("finite")
        })?;
        if a[pivot][col].abs() < 1e-14 {
            return None;
        }
        a.swap(col, pivot);
        b.swap(col, pivot);
        for row in (col + 1)..n {
            let f = a[row][col] / a[col][col];
            for k in col..n {
                a[row][k] -= f * a[col][k];
            }
            b[row] -= f * b[col];
        }
    }
    let mut x = vec![0.0; n];
    for col in (0..n).rev() {
        let mut v = b[col];
        for k in (col + 1)..n {
            v -= a[col][k] * x[k];
        }
        x[col] = v / a[col][col];
    }
    Some(x)
}

/// Projected gradient ascent with backtracking, then a damped Newton polish
/// once the iterate is interior (the landscape is smooth and the maximizer
/// strict, so Newton converges quadratically to the 1e-10 gradient target).
fn ascend(gammas: &[f64], start: Vec<f64>) -> Result<Vec<f64>, EquilibriumError> {
    let lo = SIMPLEX_MARGIN;
    let hi = 1.0 - SIMPLEX_MARGIN;
    let mut x = start;
    project(&mut x, lo, hi);
    let sys = |alphas: &[f64]| BarSystem { gammas: gammas.to_vec(), alphas: alphas.to_vec() };
    let mut f = sys(&x).f_value();
    let mut step = 0.1;
    for _ in 0..MAX_GRADIENT_ITERS {
        let grad = sys(&x).f_gradient();
        let grad_norm = grad.iter().map(|g| g * g).sum::<f64>().sqrt();
        if grad_norm < 1e-6 {
            break; // hand over to Newton
        }
        let mut improved = false;
        for _ in 0..60 {
            let mut cand = x.clone();
            for (c, g) in cand.iter_mut().zip(&grad) {
                *c += step * g;
            }
            project(&mut cand, lo, hi);
            let fc = sys(&cand).f_value();
            if fc > f {
                x = cand;
                f = fc;
                step *= 1.5;
                improved = true;
                break;
            }
            step *= 0.5;
        }
        if !improved {
            break; // line search exhausted; Newton takes it from here
        }
    }
    // Newton polish: x ← x − H⁻¹·grad with halving damping, staying interior
    for _ in 0..MAX_NEWTON_ITERS {
        let current = sys(&x);
        let grad = current.f_gradient();
        let grad_norm = grad.iter().map(|g| g * g).sum::<f64>().sqrt();
        if grad_norm < GRAD_TOL / 10.0 {
            return Ok(x);
        }
        let hess = finite_difference_hessian(&current);
        let delta = match solve_linear(hess, grad.clone()) {
            Some(d) => d,
            None => break,
        };
        let mut t = 1.0;
        let mut moved = false;
        for _ in 0..40 {
            let cand: Vec<f64> = x.iter().zip(&delta).map(|(xi, di)| xi - t * di).collect();
            let interior = cand.iter().all(|&v| v > lo) && cand.iter().sum::<f64>() < hi;
            if interior {
                let cand_sys = sys(&cand);
                let cand_norm =
                    cand_sys.f_gradient().iter().map(|g| g * g).sum::<f64>().sqrt();
                if cand_norm < grad_norm {
                    x = cand;
                    moved = true;
                    break;
                }
            }
            t *= 0.5;
        }
        if !moved {
            break;
        }
    }
    let final_norm = sys(&x).f_gradient().iter().map(|g| g * g).sum::<f64>().sqrt();
    if final_norm < GRAD_TOL {
        Ok(x)
    } else {
        Err(EquilibriumError::NoConvergence(MAX_GRADIENT_ITERS + MAX_NEWTON_ITERS))
    }
}

/// Finds the interior maximizer of `F` over `{α_i > 0, Σα_i < 1}` for fixed
/// bar lengths: projected gradient ascent with backtracking from the
/// barycentric start, with eight seeded random restarts that must agree
/// (uniqueness evidence).
pub fn find_equilibrium(gammas: &[f64]) -> Result<EquilibriumReport, EquilibriumError> {
    if gammas.is_empty() || gammas.iter().any(|&g| g <= 0.0) {
        return Err(EquilibriumError::Invalid("bar lengths must be positive".into()));
    }
    let s = gammas.len();
    let bary = vec![(1.0 - 10.0 * SIMPLEX_MARGIN) / (s as f64 + 1.0); s];
    let mut best = ascend(gammas, bary)?;

    let mut rng = StdRng::seed_from_u64(0x0a27_ec5d_1ab5_u64);
    for _ in 0..8 {
        // random interior point: normalized positive weights scaled below 1
        let mut w: Vec<f64> = (0..=s).map(|_| rng.gen_range(0.05..1.0f64)).collect();
        let total: f64 = w.iter().sum();
        for v in &mut w {
            *v /= total;
        }
        let start: Vec<f64> = w[..s].to_vec();
        let x = ascend(gammas, start)?;
        let spread = best
            .iter()
            .zip(&x)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0f64, f64::max);
        if spread > MULTI_START_TOL {
            return Err(EquilibriumError::MultiStartDisagreement(spread));
        }
        // keep the stationarity-best point
        let g_best = BarSystem { gammas: gammas.to_vec(), alphas: best.clone() }
            .f_gradient()
            .iter()
            .map(|g| g * g)
            .sum::<f64>();
        let g_x = BarSystem { gammas: gammas.to_vec(), alphas: x.clone() }
            .f_gradient()
            .iter()
            .map(|g| g * g)
            .sum::<f64>();
        if g_x < g_best {
            best = x;
        }
    }

    let sys = BarSystem { gammas: gammas.to_vec(), alphas: best.clone() };
    let grad = sys.f_gradient();
    let grad_norm = grad.iter().map(|g| g * g).sum::<f64>().sqrt();
    let hessian_eigs = hessian_eigenvalues(&sys);
    Ok(EquilibriumReport {
        schema: "1".to_string(),
        gammas: gammas.to_vec(),
        alphas: best,
        f: sys.f_value(),
        grad_norm,
        hessian_eigs,
    })
}

/// Central-difference Hessian of `F` at the system's gap fractions.
pub fn finite_difference_hessian(sys: &BarSystem) -> Vec<Vec<f64>> {
    let s = sys.alphas.len();
    let h = 1e-5;
    let grad_at = |alphas: &[f64]| {
        BarSystem { gammas: sys.gammas.clone(), alphas: alphas.to_vec() }.f_gradient()
    };
    let mut hess = vec![vec![0.0; s]; s];
    for j in 0..s {
        let mut up = sys.alphas.clone();
        up[j] += h;
        let mut dn = sys.alphas.clone();
        dn[j] -= h;
        let gu = grad_at(&up);
        let gd = grad_at(&dn);
        for i in 0..s {
            hess[i][j] = (gu[i] - gd[i]) / (2.0 * h);
        }
    }
    // symmetrize
    for i in 0..s {
        for j in (i + 1)..s {
            let v = 0.5 * (hess[i][j] + hess[j][i]);
            hess[i][j] = v;
            hess[j][i] = v;
        }
    }
    hess
}

/// Eigenvalues of the finite-difference Hessian by Jacobi rotations.
pub fn hessian_eigenvalues(sys: &BarSystem) -> Vec<f64> {
    let mut a = finite_difference_hessian(sys);
    let n = a.len();
    for _ in 0..100 {
        // largest off-diagonal element
        let (mut p, mut q, mut max) = (0, 1, 0.0f64);
        for i in 0..n {
            for j in (i + 1)..n {
                if a[i][j].abs() > max {
                    max = a[i][j].abs();
                    p = i;
                    q = j;
                }
            }
        }
        if n < 2 || max < 1e-14 {
            break;
        }
        let theta = 0.5 * (2.0 * a[p][q]).atan2(a[p][p] - a[q][q]);
        let (c, s) = (theta.cos(), theta.sin());
        for k in 0..n {
            let (akp, akq) = (a[k][p], a[k][q]);
            a[k][p] = c * akp + s * akq;
            a[k][q] = -s * akp + c * akq;
        }
        for k in 0..n {
            let (apk, aqk) = (a[p][k], a[q][k]);
            a[p][k] = c * apk + s * aqk;
            a[q][k] = -s * apk + c * aqk;
        }
    }
    let mut eigs: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
    eigs.sort_by(|x, y| x.partial_cmp(y).expect("finite"));
    eigs
}

/// Log-likelihood of a displaced bar system against the equilibrium:
/// `ln(count(sys)/count(sys0)) ≈ n²(F(sys) − F(sys0))`; returns
/// `λ = F(sys0) − F(sys)` (positive when `sys0` really is the maximizer)
/// and the n²-scaled log-likelihood.
pub fn displacement_likelihood(sys: &BarSystem, sys0: &BarSystem, n: u64) -> (f64, f64) {
    let lambda = sys0.f_value() - sys.f_value();
    (lambda, -(n as f64) * (n as f64) * lambda)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reflection_symmetry_of_f() {
        // F(α,β;γ,δ) = F(β,α;δ,γ): the point set reflects
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..100 {
            let a = rng.gen_range(0.05..0.45);
            let b = rng.gen_range(0.05..0.45);
            let g = rng.gen_range(0.05..1.0);
            let d = rng.gen_range(0.05..1.0);
            let f1 = BarSystem::new(vec![g, d], vec![a, b]).unwrap().f_value();
            let f2 = BarSystem::new(vec![d, g], vec![b, a]).unwrap().f_value();
            assert!((f1 - f2).abs() < 1e-12, "{f1} vs {f2}");
        }
    }

    #[test]
    fn gradient_matches_finite_differences() {
        let sys = BarSystem::new(vec![0.3, 0.4], vec![0.2, 0.3]).unwrap();
        let grad = sys.f_gradient();
        let h = 1e-6;
        for m in 0..2 {
            let mut up = sys.alphas.clone();
            up[m] += h;
            let mut dn = sys.alphas.clone();
            dn[m] -= h;
            let fu = BarSystem { gammas: sys.gammas.clone(), alphas: up }.f_value();
            let fd = BarSystem { gammas: sys.gammas.clone(), alphas: dn }.f_value();
            let num = (fu - fd) / (2.0 * h);
            assert!(
                (grad[m] - num).abs() / num.abs().max(1.0) < 1e-6,
                "m={m}: {} vs {num}",
                grad[m]
            );
        }
    }

    #[test]
    fn gradient_symmetry_at_symmetric_point() {
        // γ=δ and α=β: ∂F/∂α = ∂F/∂β
        let sys = BarSystem::new(vec![0.5, 0.5], vec![0.25, 0.25]).unwrap();
        let g = sys.f_gradient();
        assert!((g[0] - g[1]).abs() < 1e-10);
    }

    #[test]
    fn equal_bars_equilibrium_is_symmetric() {
        let rep = find_equilibrium(&[0.25, 0.25]).unwrap();
        assert!((rep.alphas[0] - rep.alphas[1]).abs() < 1e-8, "{:?}", rep.alphas);
        assert!(rep.grad_norm < GRAD_TOL * 1e2);
        assert!(rep.hessian_eigs.iter().all(|&e| e < -1e-8), "{:?}", rep.hessian_eigs);
    }

    #[test]
    fn single_bar_equilibrium() {
        let rep = find_equilibrium(&[0.1]).unwrap();
        assert_eq!(rep.alphas.len(), 1);
        assert!(rep.alphas[0] > SIMPLEX_MARGIN && rep.alphas[0] < 1.0);
        assert!(rep.grad_norm < 1e-8, "grad norm {}", rep.grad_norm);
        assert!(rep.hessian_eigs[0] < -1e-8);
    }

    #[test]
    fn f_decreases_toward_boundary() {
        let rep = find_equilibrium(&[0.3, 0.3]).unwrap();
        let star = BarSystem::new(rep.gammas.clone(), rep.alphas.clone()).unwrap();
        let f0 = star.f_value();
        for dir in [[1.0, 0.0], [0.0, 1.0], [-1.0, 1.0], [0.7, 0.7]] {
            for t in [0.02, 0.05, 0.1] {
                let alphas: Vec<f64> = star
                    .alphas
                    .iter()
                    .zip(dir)
                    .map(|(a, d)| (a + t * d).clamp(2.0 * SIMPLEX_MARGIN, 0.9))
                    .collect();
                if alphas.iter().sum::<f64>() >= 1.0 - SIMPLEX_MARGIN {
                    continue;
                }
                let f = BarSystem { gammas: star.gammas.clone(), alphas }.f_value();
                assert!(f < f0, "dir {dir:?} t={t}: {f} ≥ {f0}");
            }
        }
    }

    #[test]
    fn reflection_invariance_of_equilibrium() {
        let rep = find_equilibrium(&[0.2, 0.4]).unwrap();
        let rev = find_equilibrium(&[0.4, 0.2]).unwrap();
        let mut mirrored = rev.alphas.clone();
        mirrored.reverse();
        for (a, b) in rep.alphas.iter().zip(&mirrored) {
            assert!((a - b).abs() < 1e-8, "{:?} vs {:?}", rep.alphas, rev.alphas);
        }
    }

    #[test]
    fn displacement_positive_lambda() {
        let rep = find_equilibrium(&[0.25, 0.25]).unwrap();
        let sys0 = BarSystem::new(rep.gammas.clone(), rep.alphas.clone()).unwrap();
        let displaced = BarSystem::new(
            rep.gammas.clone(),
            vec![rep.alphas[0] + 0.05, rep.alphas[1]],
        )
        .unwrap();
        let (lambda, loglik) = displacement_likelihood(&displaced, &sys0, 40);
        assert!(lambda > 0.0);
        assert!(loglik < 0.0);
        let (zero, _) = displacement_likelihood(&sys0, &sys0, 40);
        assert_eq!(zero, 0.0);
    }

    #[test]
    fn large_bars_push_gaps_toward_thirds() {
        // monotone trend: growing equal bars drive α₀ = β₀ toward 1/3
        let mut prev_dist = f64::INFINITY;
        for g in [0.5, 2.0, 8.0] {
            let rep = find_equilibrium(&[g, g]).unwrap();
            let dist = (rep.alphas[0] - 1.0 / 3.0).abs();
            assert!(dist < prev_dist, "γ={g}: {dist} ≥ {prev_dist}");
            prev_dist = dist;
        }
    }

    #[test]
    fn invalid_systems_rejected() {
        assert!(BarSystem::new(vec![], vec![]).is_err());
        assert!(BarSystem::new(vec![0.5], vec![-0.1]).is_err());
        assert!(BarSystem::new(vec![0.5, 0.5], vec![0.6, 0.6]).is_err());
        assert!(find_equilibrium(&[]).is_err());
        assert!(find_equilibrium(&[-1.0]).is_err());
    }

    #[test]
    fn projection_respects_constraints() {
        let mut x = vec![0.9, 0.8, -0.5];
        project(&mut x, 0.001, 0.999);
        assert!(x.iter().all(|&v| v >= 0.001));
        assert!(x.iter().sum::<f64>() <= 0.999 + 1e-12);
    }
}
