//! Bars of charge: exact matching counts for two clusters of consecutive
//! monomers `C_{k,p}` and `C_{k+p+l,q}` on `AR_{2n,2n+2p+2q}`, through the
//! Gamma-product formula and the equivalent hyperfactorial form.

use crate::exact::{even_superfactorial, hyperfactorial, ExactError, ExactValue, GammaProduct};
use crate::lattice::DefectConfig;
use crate::oracle::{diamond_count, MatchCount};
use num_bigint::BigUint;
use num_traits::Signed;

/// Two bars on the axis: gaps `k`, `l` and bar lengths `p`, `q` in units of
/// two sites; monomers occupy `2k+1..=2k+2p` and `2(k+p+l)+1..=2(k+p+l)+2q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BarConfig {
    pub n: u64,
    pub k: u64,
    pub l: u64,
    pub p: u64,
    pub q: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BarError {
    #[error("bar parameters need k+l ≤ n (got k={0}, l={1}, n={2})")]
    Constraint(u64, u64, u64),
    #[error("count should be a non-negative integer, got {0}")]
    NotInteger(String),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

impl BarConfig {
    pub fn new(n: u64, k: u64, l: u64, p: u64, q: u64) -> Result<Self, BarError> {
        if k + l > n {
            return Err(BarError::Constraint(k, l, n));
        }
        Ok(BarConfig { n, k, l, p, q })
    }

    /// The corresponding defect configuration (for the oracle).
    pub fn to_defect_config(&self) -> DefectConfig {
        let mut holes = Vec::new();
        for i in 1..=2 * self.p as i64 {
            holes.push(2 * self.k as i64 + i);
        }
        let base = 2 * (self.k + self.p + self.l) as i64;
        for i in 1..=2 * self.q as i64 {
            holes.push(base + i);
        }
        DefectConfig { n: self.n as u32, holes, seps: Vec::new() }
    }
}

/// `M(AR_{2n,2n+2p+2q}(C_{k,p}, C_{k+p+l,q})) / 2^{n(2n+1)}` via the
/// Gamma-product formula.
pub fn bars_ratio_gamma(cfg: &BarConfig) -> Result<ExactValue, BarError> {
    let (n, k, l, p, q) =
        (cfg.n as i64, cfg.k as i64, cfg.l as i64, cfg.p as i64, cfg.q as i64);
    let mut g = GammaProduct::new();
    for i in 1..=k {
        // [Γ(i)Γ(n+p+q−i+1)/(Γ(p+i)Γ(n+q−i+1)) · Γ(p+l+i)Γ(q+l+i)/(Γ(l+i)Γ(p+q+l+i))]²
        for _ in 0..2 {
            g = g
                .times_int(i)
                .times_int(n + p + q - i + 1)
                .over_int(p + i)
                .over_int(n + q - i + 1)
                .times_int(p + l + i)
                .times_int(q + l + i)
                .over_int(l + i)
                .over_int(p + q + l + i);
        }
    }
    for i in 1..=k + l {
        // [Γ(i)Γ(n+q−i+1)/(Γ(q+i)Γ(n−i+1))]²
        for _ in 0..2 {
            g = g
                .times_int(i)
                .times_int(n + q - i + 1)
                .over_int(q + i)
                .over_int(n - i + 1);
        }
    }
    Ok(g.eval()?)
}

/// The same ratio via the hyperfactorial form
/// `[H(k)H(l)H(p)H(q)H(n−k−l)H(k+l+p)H(l+p+q)H(n+q−k)H(n+p+q)
///   / (H(n)H(k+p)H(l+p)H(l+q)H(n+q−k−l)H(k+l+p+q)H(n+p+q−k))]²`.
pub fn bars_ratio_hyperfactorial(cfg: &BarConfig) -> Result<ExactValue, BarError> {
    let (n, k, l, p, q) = (cfg.n, cfg.k, cfg.l, cfg.p, cfg.q);
    let num = [k, l, p, q, n - k - l, k + l + p, l + p + q, n + q - k, n + p + q];
    let den = [n, k + p, l + p, l + q, n + q - k - l, k + l + p + q, n + p + q - k];
    let mut v = ExactValue::one();
    for m in num {
        v = v.mul(&hyperfactorial(m));
    }
    for m in den {
        v = v.div(&hyperfactorial(m));
    }
    Ok(v.mul(&v))
}

/// Exact matching count for a bar configuration; both evaluation routes must
/// agree, and the ratio times `2^{n(2n+1)}` must be an integer.
pub fn bars_count(cfg: &BarConfig) -> Result<MatchCount, BarError> {
    let a = bars_ratio_gamma(cfg)?;
    let b = bars_ratio_hyperfactorial(cfg)?;
    debug_assert_eq!(a, b, "bar-count evaluation routes disagree");
    let base = diamond_count(cfg.n as u32);
    let total = a
        .as_rational()
        .ok_or_else(|| BarError::NotInteger(a.to_string()))?
        * num_rational::BigRational::from_integer(base.into());
    if !total.is_integer() || total.is_negative() {
        return Err(BarError::NotInteger(total.to_string()));
    }
    let value: BigUint =
        total.to_integer().to_biguint().ok_or_else(|| BarError::NotInteger(total.to_string()))?;
    Ok(MatchCount::new(value))
}

/// `Q(s, n+3/2)` rewritten through hyperfactorials:
/// `2^{−2s(n−s)} · H(s+1)H(n−s+1)H(s)H(n−s)E(n) / (H(n+1)H(n)E(s)E(n−s))`,
/// used to pin the identity between the two printed forms.
pub fn q_hyperfactorial_form(s: u64, n: u64) -> ExactValue {
    let pow = crate::exact::pow2(-2 * (s as i64) * (n as i64 - s as i64))
        .coeff()
        .clone();
    hyperfactorial(s + 1)
        .mul(&hyperfactorial(n - s + 1))
        .mul(&hyperfactorial(s))
        .mul(&hyperfactorial(n - s))
        .mul(&even_superfactorial(n))
        .div(&hyperfactorial(n + 1))
        .div(&hyperfactorial(n))
        .div(&even_superfactorial(s))
        .div(&even_superfactorial(n - s))
        .scale(&pow)
}
