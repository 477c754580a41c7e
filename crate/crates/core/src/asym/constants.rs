//! The Glaisher–Kinkelin constant computed from its defining limit, plus the
//! handful of derived law constants the asymptotic formulas use.

use crate::asym::fixed::{self, Fixed};
use std::sync::OnceLock;

/// High-precision value of the Glaisher–Kinkelin constant `A`.
#[derive(Debug, Clone)]
pub struct Glaisher {
    /// 60 decimal digits (more than double the guaranteed 30).
    pub digits: String,
    /// f64 projection.
    pub value: f64,
}

/// `A ≈ 1.2824271291…` as f64 (computed once, then cached).
pub static GLAISHER_F64: OnceLock<f64> = OnceLock::new();

/// `a_n = ln H(n) − (n²/2 − 1/12) ln n − (n/2) ln 2π + 3n²/4`, the defining
/// sequence: `a_n → 1/12 − ln A`, with corrections in powers of `1/n²`.
fn defining_term(n: i64, ln2pi: &Fixed) -> Fixed {
    // ln H(n) = Σ_{k=1}^{n−1} (n−k)·ln k
    let mut lnh = Fixed::zero();
    for k in 2..n {
        lnh = &lnh + &fixed::ln_int(k).mul_int(n - k);
    }
    let lnn = fixed::ln_int(n);
    let poly = &Fixed::from_int(n * n).div_int(2) - &Fixed::from_ratio(1, 12);
    let boundary = ln2pi.mul_int(n).div_int(2);
    let cubic = Fixed::from_int(3 * n * n).div_int(4);
    &(&(&lnh - &(&poly * &lnn)) - &boundary) + &cubic
}

/// Richardson extrapolation in `h = 1/n²` on nodes `n = base·2^i`.
fn richardson(levels: usize, base: i64) -> Fixed {
    let ln2pi = &fixed::ln2() + &fixed::ln(&fixed::pi());
    let mut row: Vec<Fixed> = (0..levels)
        .map(|i| defining_term(base << i, &ln2pi))
        .collect();
    // doubling n divides the 1/n^{2j} error term by 4^j
    for j in 1..levels {
        let weight = 1i64 << (2 * j); // 4^j
        let mut next = Vec::with_capacity(levels - j);
        for i in 0..row.len() - 1 {
            let v = (&row[i + 1].mul_int(weight) - &row[i]).div_int(weight - 1);
            next.push(v);
        }
        row = next;
    }
    row.pop().expect("at least one level")
}

fn compute() -> Glaisher {
    // limit = 1/12 − ln A; two tableau depths must agree far past 30 digits
    let deep = richardson(7, 8); // nodes 8..512
    let shallow = richardson(6, 8); // nodes 8..256
    let diff = (&deep - &shallow).abs();
    debug_assert!(
        diff < Fixed::from_ratio(1, 1).shr(120),
        "Richardson tableaus disagree: {}",
        diff.to_decimal_string(40)
    );
    let ln_a = &Fixed::from_ratio(1, 12) - &deep;
    let a = fixed::exp(&ln_a);
    Glaisher { digits: a.to_decimal_string(60), value: a.to_f64() }
}

/// The Glaisher–Kinkelin constant, computed from the defining limit by
/// Richardson extrapolation (the sequence expands in powers of `1/n²`).
pub fn glaisher() -> Glaisher {
    static CACHE: OnceLock<Glaisher> = OnceLock::new();
    CACHE.get_or_init(compute).clone()
}

/// f64 value of `A`.
pub fn glaisher_f64() -> f64 {
    *GLAISHER_F64.get_or_init(|| glaisher().value)
}

/// `2^{1/12} e^{1/4} / A³`: the slit-product prefactor.
pub fn p_prefactor() -> f64 {
    2f64.powf(1.0 / 12.0) * 0.25f64.exp() / glaisher_f64().powi(3)
}

/// `2^{1/3} e^{1/4} / A³`: the like-slit separation-law prefactor.
pub fn slit_same_prefactor() -> f64 {
    2f64.powf(1.0 / 3.0) * 0.25f64.exp() / glaisher_f64().powi(3)
}

/// `π^{1/2} e^{1/4} 2^{−1/6} / A³`: the opposite-slit separation-law prefactor.
pub fn slit_opposite_prefactor() -> f64 {
    std::f64::consts::PI.sqrt() * 0.25f64.exp() / (2f64.powf(1.0 / 6.0) * glaisher_f64().powi(3))
}

/// `e^{1/4} / (2^{5/12} A³)`: the per-defect boundary-law prefactor.
pub fn defect_prefactor() -> f64 {
    0.25f64.exp() / (2f64.powf(5.0 / 12.0) * glaisher_f64().powi(3))
}

/// `e^{1/3} / A⁴`: the two-bar law prefactor.
pub fn bars_prefactor() -> f64 {
    (1.0f64 / 3.0).exp() / glaisher_f64().powi(4)
}
