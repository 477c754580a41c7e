//! The asymptotic laws: separation limits for fluctuating slits, finite-slit
//! tails, the Casimir-type ratio, the giant-slit expansion, boundary-shift
//! radicals, the full macroscopic defect-field law, and the two-bar laws
//! with their free energy.

use crate::asym::constants::{
    bars_prefactor, defect_prefactor, p_prefactor, slit_opposite_prefactor, slit_same_prefactor,
};
use crate::asym::logspace::{ln_gamma_half, ln_gamma_int, ln_p_slit, Kahan};
use crate::exact::{ExactError, ExactValue, GammaProduct};
use crate::forms::slits::{p_slit, SlitError};
use num_rational::BigRational;
use num_traits::{One, Signed};

/// A numeric prediction: the value, an identifier of the law it came from,
/// and the leading constant / exponent that shape it.
#[derive(Debug, Clone)]
pub struct AsymResult {
    pub value: f64,
    pub law: &'static str,
    pub leading_constant: f64,
    /// Exponent of the running variable as (numerator, denominator).
    pub exponent: (i64, i64),
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum AsymError {
    #[error("parameter must be positive: {0}")]
    NonPositive(String),
    #[error("window position must satisfy |α| < 1")]
    BadWindowPosition,
    #[error("positions must be distinct and lie in (0,2)")]
    BadFieldPositions,
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Slit(#[from] SlitError),
}

/// Orientation selector shared by the slit laws.
pub use crate::forms::slits::SlitOrientation;

/// First-order Gamma-ratio asymptotics:
/// `Γ(x+a)/Γ(x+b) ≈ x^{a−b} (1 + (a−b)(a+b−1)/(2x))`, error `O(x⁻²)`.
pub fn gamma_ratio_asym(x: f64, a: f64, b: f64) -> f64 {
    x.powf(a - b) * (1.0 + 0.5 * (a - b) * (a + b - 1.0) / x)
}

/// Prediction `P_n ≈ 2^{1/12} e^{1/4} A⁻³ n^{−1/4}` for the slit product.
pub fn p_n_asym(n: u64) -> AsymResult {
    let c = p_prefactor();
    AsymResult {
        value: c * (n as f64).powf(-0.25),
        law: "p-slit-product",
        leading_constant: c,
        exponent: (-1, 4),
    }
}

/// `ln P_n` exactly, for comparing against [`p_n_asym`].
pub fn ln_p_n_exact(n: u64) -> f64 {
    ln_p_slit(n)
}

/// Predictions for `P_a(s)` (integer `a`) and `P_{a+1/2}(s)`, including the
/// finite Gamma-product prefactors; `a` is given in half-units.
pub fn p_a_asym(a_doubled: i64, s: u64) -> AsymResult {
    let s_part = (s as f64).powf(-0.25);
    if a_doubled % 2 == 0 {
        // P_a(s) ~ (2^{1/12}e^{1/4}/A³) ∏_{i=1}^a Γ(i−½)Γ(i+½)/Γ²(i) · s^{−1/4}
        let a = (a_doubled / 2) as u64;
        let mut k = Kahan::new();
        for i in 1..=a {
            k.add(ln_gamma_half(i - 1) + ln_gamma_half(i) - 2.0 * ln_gamma_int(i));
        }
        let c = p_prefactor() * k.value().exp();
        AsymResult { value: c * s_part, law: "p-product-int", leading_constant: c, exponent: (-1, 4) }
    } else {
        // P_{a+1/2}(s) ~ (A³/(2^{1/12}e^{1/4}√π)) ∏_{i=1}^a Γ(i)Γ(i+1)/Γ²(i+½) · s^{−1/4}
        let a = ((a_doubled - 1) / 2) as u64;
        let mut k = Kahan::new();
        for i in 1..=a {
            k.add(ln_gamma_int(i) + ln_gamma_int(i + 1) - 2.0 * ln_gamma_half(i));
        }
        let c = k.value().exp() / (p_prefactor() * std::f64::consts::PI.sqrt());
        AsymResult {
            value: c * s_part,
            law: "p-product-half",
            leading_constant: c,
            exponent: (-1, 4),
        }
    }
}

/// Infinite-slit separation law, asymptotic side. For like orientation and
/// even gap `2d` the normalized correlation behaves like
/// `2^{1/3} e^{1/4} A⁻³ (2d)^{−1/4}`; for opposite orientation and odd gap
/// `2d+1` it grows like `π^{1/2} e^{1/4} 2^{−1/6} A⁻³ (2d+1)^{1/4}`.
pub fn slit_limit(d: u64, orientation: SlitOrientation) -> AsymResult {
    match orientation {
        SlitOrientation::HoleFirst => {
            let c = slit_same_prefactor();
            let value = if d == 0 { 1.0 } else { c * (2.0 * d as f64).powf(-0.25) };
            AsymResult { value, law: "slit-limit-same", leading_constant: c, exponent: (-1, 4) }
        }
        SlitOrientation::SepFirst => {
            let c = slit_opposite_prefactor();
            let value = c * (2.0 * d as f64 + 1.0).powf(0.25);
            AsymResult { value, law: "slit-limit-opposite", leading_constant: c, exponent: (1, 4) }
        }
    }
}

/// The exact limit value the law converges to: `2^d ω([∘×]_d)` for like
/// orientation, `√π Γ(d+1)/Γ(d+½) · 2^d ω([∘×]_d)` for opposite.
pub fn slit_limit_exact(d: u64, orientation: SlitOrientation) -> Result<ExactValue, AsymError> {
    match orientation {
        SlitOrientation::HoleFirst => Ok(p_slit(d)?),
        SlitOrientation::SepFirst => Ok(GammaProduct::new()
            .times_int(d as i64 + 1)
            .over_half(2 * d as i64 + 1)
            .eval()?
            .mul(&ExactValue::pi_half_power(1))
            .mul(&p_slit(d)?)),
    }
}

/// Multi-slit separation law: one factor `2^{d_j} ω([∘×]_{d_j})` per gap
/// (a k-slit chain has k−1 gaps), asymptotically
/// `∏_j (2^{1/3} e^{1/4} A⁻³)(2d_j)^{−1/4}`.
pub fn multi_slit_limit(gaps: &[u64]) -> Result<(ExactValue, AsymResult), AsymError> {
    let mut exact = ExactValue::one();
    let mut value = 1.0;
    for &d in gaps {
        exact = exact.mul(&slit_limit_exact(d, SlitOrientation::HoleFirst)?);
        value *= slit_limit(d, SlitOrientation::HoleFirst).value;
    }
    Ok((
        exact,
        AsymResult {
            value,
            law: "multi-slit-limit",
            leading_constant: slit_same_prefactor().powi(gaps.len() as i32),
            exponent: (-1, 4),
        },
    ))
}

/// Finite-slit tail `ω − ω·ω ∼ ±(1/π^{a+b}) E²([∘×]_a) E²([∘×]_b) ab/(4d²)`:
/// positive for like orientation across an even gap, negative for opposite
/// orientation across an odd gap; the remaining parities vanish identically
/// (the zero is exact, not asymptotic).
pub fn finite_slit_tail(
    a: u64,
    b: u64,
    d: u64,
    orientation: SlitOrientation,
    gap_parity_even: bool,
) -> Result<AsymResult, AsymError> {
    if a == 0 || b == 0 {
        return Err(AsymError::NonPositive("slit lengths".into()));
    }
    let interacting = match orientation {
        SlitOrientation::HoleFirst => gap_parity_even,
        SlitOrientation::SepFirst => !gap_parity_even,
    };
    if !interacting {
        return Ok(AsymResult {
            value: 0.0,
            law: "finite-slit-tail-zero",
            leading_constant: 0.0,
            exponent: (0, 1),
        });
    }
    let sign = match orientation {
        SlitOrientation::HoleFirst => 1.0,
        SlitOrientation::SepFirst => -1.0,
    };
    // E²([∘×]_m): interaction factors internal to one slit
    let e2 = |m: u64| -> f64 {
        let mut k = Kahan::new();
        for i in 1..m as i64 {
            for j in (i + 1)..=m as i64 {
                let t = 2 * (j - i);
                k.add((((t * t) as f64) / (((t - 1) * (t + 1)) as f64)).ln());
            }
        }
        k.value().exp()
    };
    let c = sign * std::f64::consts::PI.powi(-((a + b) as i32))
        * e2(a)
        * e2(b)
        * (a as f64)
        * (b as f64)
        / 4.0;
    Ok(AsymResult {
        value: c / (d as f64 * d as f64),
        law: "finite-slit-tail",
        leading_constant: c,
        exponent: (-2, 1),
    })
}

/// Casimir-type limit for slits growing with the separation,
/// `a ~ αn`, `b ~ βn`, `d ~ δn`:
/// like orientation tends to `[(α+δ)(β+δ)/(δ(α+β+δ))]^{1/4}`, opposite
/// orientation to the reciprocal bracket.
pub fn casimir_ratio(
    alpha: f64,
    beta: f64,
    delta: f64,
    orientation: SlitOrientation,
) -> Result<AsymResult, AsymError> {
    if alpha <= 0.0 || beta <= 0.0 || delta <= 0.0 {
        return Err(AsymError::NonPositive("casimir parameters".into()));
    }
    let bracket = (alpha + delta) * (beta + delta) / (delta * (alpha + beta + delta));
    let value = match orientation {
        SlitOrientation::HoleFirst => bracket.powf(0.25),
        SlitOrientation::SepFirst => bracket.powf(-0.25),
    };
    Ok(AsymResult { value, law: "casimir-ratio", leading_constant: value, exponent: (0, 1) })
}

/// The variant normalized by `ω([∘×]_{a+b})` instead:
/// `(2^{1/12} e^{1/4}/A³) [(α+β)(α+δ)(β+δ)/(αβδ(α+β+δ))]^{1/4} n^{−1/4}`.
pub fn casimir_normalized_variant(alpha: f64, beta: f64, delta: f64, n: u64) -> AsymResult {
    let bracket = (alpha + beta) * (alpha + delta) * (beta + delta)
        / (alpha * beta * delta * (alpha + beta + delta));
    let c = p_prefactor() * bracket.powf(0.25);
    AsymResult {
        value: c * (n as f64).powf(-0.25),
        law: "casimir-normalized",
        leading_constant: c,
        exponent: (-1, 4),
    }
}

/// Exact finite-size Casimir ratio `ω(a,b;2d)/(ω_a ω_b)` in log space:
/// `P_d P_{a+b+d} / (P_{a+d} P_{b+d})`.
pub fn ln_casimir_exact(a: u64, b: u64, d: u64) -> f64 {
    ln_p_slit(d) + ln_p_slit(a + b + d) - ln_p_slit(a + d) - ln_p_slit(b + d)
}

/// Giant slit vs a short one: `1 + (b/4)·a/(d(a+d)) + O(d⁻²)`.
pub fn giant_slit_dipole(a: u64, b: u64, d: u64) -> Result<AsymResult, AsymError> {
    if a == 0 || d == 0 {
        return Err(AsymError::NonPositive("slit length / distance".into()));
    }
    let (af, bf, df) = (a as f64, b as f64, d as f64);
    let value = 1.0 + bf / 4.0 * af / (df * (af + df));
    Ok(AsymResult {
        value,
        law: "giant-slit-dipole",
        leading_constant: bf / 4.0,
        exponent: (-1, 1),
    })
}

/// The three distance regimes of the giant-slit correction when the dipole
/// sits `d ~ δ n^ε` away from a slit of length `2n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GiantSlitRegime {
    /// `ε < 1`: correction `1/(4δ n^ε)`.
    Near,
    /// `ε = 1`: correction `1/(4δ(1+δ) n)`.
    Comparable,
    /// `ε > 1`: correction `1/(4δ n^{2ε−1})`.
    Far,
}

/// Leading correction term of the giant-slit law for `d ~ δ n^ε`.
pub fn giant_slit_regime(delta: f64, epsilon: f64, n: u64) -> Result<(GiantSlitRegime, f64), AsymError> {
    if delta <= 0.0 || epsilon <= 0.0 {
        return Err(AsymError::NonPositive("regime parameters".into()));
    }
    let nf = n as f64;
    let out = if epsilon < 1.0 {
        (GiantSlitRegime::Near, 1.0 / (4.0 * delta * nf.powf(epsilon)))
    } else if epsilon == 1.0 {
        (GiantSlitRegime::Comparable, 1.0 / (4.0 * delta * (1.0 + delta) * nf))
    } else {
        (GiantSlitRegime::Far, 1.0 / (4.0 * delta * nf.powf(2.0 * epsilon - 1.0)))
    };
    Ok(out)
}

/// Boundary-shift limit in an α-window: moving a cluster of charge `q` one
/// unit right multiplies the correlation by `((1−α)/(1+α))^{q/2}` in the
/// infinite-separation limit.
pub fn boundary_shift_limit(alpha: &BigRational, charge: i64) -> Result<ExactValue, AsymError> {
    if alpha.abs() >= BigRational::one() {
        return Err(AsymError::BadWindowPosition);
    }
    let base = (BigRational::one() - alpha) / (BigRational::one() + alpha);
    Ok(ExactValue::rational_half_power(&base, charge))
}

/// One defect of the macroscopic field law.
#[derive(Debug, Clone, Copy)]
pub struct FieldDefect {
    /// Scaled position in (0,2).
    pub position: f64,
    /// Actual axis coordinate at the given `n` (drives the boundary counts).
    pub site: i64,
    pub is_hole: bool,
}

/// The full macroscopic-separation law for `k` holes and `l` separations on
/// `AR_{2n,2n+k−l}`, in log space:
///
/// `(k+l)·ln(e^{1/4} 2^{−5/12} A⁻³ n^{−1/4})`
/// `+ Σ_seps − Σ_holes of [(L+½)ln√(β/2) + (R+½)ln√(1−β/2)]`
/// `+ Σ likes ln√(Δ/2) − Σ unlikes ln√|Δ/2|`,
///
/// where `L`/`R` count axis sites strictly left/right of the defect
/// (`L+R = 2n+k−l−1`).
pub fn defect_field_asym(defects: &[FieldDefect], n: u64) -> Result<AsymResult, AsymError> {
    let k = defects.iter().filter(|d| d.is_hole).count() as i64;
    let l = defects.len() as i64 - k;
    let width = 2 * n as i64 + k - l;
    for d in defects {
        if d.position <= 0.0 || d.position >= 2.0 || d.site < 1 || d.site > width {
            return Err(AsymError::BadFieldPositions);
        }
    }
    let mut log = Kahan::new();
    log.add(defects.len() as f64 * (defect_prefactor().ln() - 0.25 * (n as f64).ln()));
    for d in defects {
        let left = (d.site - 1) as f64;
        let right = (width - d.site) as f64;
        let sign = if d.is_hole { -1.0 } else { 1.0 };
        log.add(sign * (left + 0.5) * 0.5 * (d.position / 2.0).ln());
        log.add(sign * (right + 0.5) * 0.5 * (1.0 - d.position / 2.0).ln());
    }
    for (i, a) in defects.iter().enumerate() {
        for b in &defects[i + 1..] {
            if (a.position - b.position).abs() < 1e-12 {
                return Err(AsymError::BadFieldPositions);
            }
            let term = 0.5 * ((a.position - b.position).abs() / 2.0).ln();
            if a.is_hole == b.is_hole {
                log.add(term);
            } else {
                log.add(-term);
            }
        }
    }
    Ok(AsymResult {
        value: log.value(),
        law: "defect-field(log)",
        leading_constant: defect_prefactor(),
        exponent: (-1, 4),
    })
}

/// Diophantine helper for irrational positions: the smallest `n ≤ cap` such
/// that every `α_i` is within `n^{−1−1/count}` of some integer multiple
/// `s_i/n`, returning `(n, s)`; mirrors the approximation hypothesis of the
/// irrational-position theorems.
pub fn diophantine_window(alphas: &[f64], cap: u64) -> Option<(u64, Vec<i64>)> {
    let count = alphas.len() as f64;
    'outer: for n in 2..=cap {
        let tol = (n as f64).powf(-1.0 - 1.0 / count);
        let mut s = Vec::with_capacity(alphas.len());
        for &a in alphas {
            let si = (a * n as f64).round();
            if (a - si / n as f64).abs() >= tol {
                continue 'outer;
            }
            s.push(si as i64);
        }
        return Some((n, s));
    }
    None
}

/// The two-bar asymptotic law in log space:
/// `ln(ratio) ≈ ln(e^{1/3} A⁻⁴ n^{−1/3}) + Σ_{i<j∈I} ε_{ij}(|i−j|²n² − 1/6) ln|i−j|`,
/// with the point set `I` and alternating signs from the equilibrium module.
pub fn bars_asym(alpha: f64, beta: f64, gamma: f64, delta: f64, n: u64) -> Result<AsymResult, AsymError> {
    if alpha <= 0.0 || beta <= 0.0 || gamma <= 0.0 || delta <= 0.0 || alpha + beta >= 1.0 {
        return Err(AsymError::NonPositive("bar parameters (need α,β,γ,δ>0, α+β<1)".into()));
    }
    let sys = crate::equilibrium::BarSystem::new(vec![gamma, delta], vec![alpha, beta])
        .expect("validated above");
    let nf = n as f64;
    let mut log = Kahan::new();
    log.add(bars_prefactor().ln() - (nf.ln()) / 3.0);
    for (eps, dist) in sys.signed_pairs() {
        log.add(eps as f64 * (dist * dist * nf * nf - 1.0 / 6.0) * dist.ln());
    }
    Ok(AsymResult {
        value: log.value(),
        law: "bars(log)",
        leading_constant: bars_prefactor(),
        exponent: (-1, 3),
    })
}

/// Free energy per site of the two-bar system:
/// `¼ ln 2 + ⅛ Σ_{i<j∈I} ε_{ij} |i−j|² ln|i−j|`; the per-site normalization
/// is by the Aztec-diamond vertex count `4n(2n+1)`.
pub fn free_energy(alpha: f64, beta: f64, gamma: f64, delta: f64) -> Result<f64, AsymError> {
    if alpha <= 0.0 || beta <= 0.0 || gamma <= 0.0 || delta <= 0.0 || alpha + beta >= 1.0 {
        return Err(AsymError::NonPositive("bar parameters (need α,β,γ,δ>0, α+β<1)".into()));
    }
    let sys = crate::equilibrium::BarSystem::new(vec![gamma, delta], vec![alpha, beta])
        .expect("validated above");
    Ok(0.25 * std::f64::consts::LN_2 + 0.125 * sys.f_value())
}
