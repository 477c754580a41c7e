//! Exact matching counts for the supported closed-form families, with the
//! DP oracle as fallback: monomer-only rectangles are counted by chaining
//! elementary moves from the packed base configuration, balanced defect
//! systems that decompose into dipoles go through the family formula, and
//! two-bar configurations through the bar product.

use crate::exact::ExactValue;
use crate::forms::bars::{bars_count, BarConfig, BarError};
use crate::forms::dipoles::{dipole_family_corr, DipoleError};
use crate::forms::moves::{move_hole_ratio, MoveError};
use crate::lattice::{DefectConfig, DefectKind, Dipole};
use crate::oracle::{count_config, diamond_count, MatchCount, OracleError};
use num_rational::BigRational;
use num_traits::Signed;

/// Which evaluation path produced a count.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CountPath {
    /// Chain of hole moves from the packed base (monomer-only family).
    MoveChain,
    /// Dipole family formula times the diamond count.
    DipoleFamily,
    /// Two-bar product formula.
    Bars,
    /// Profile-DP oracle fallback.
    Oracle,
}

impl std::fmt::Display for CountPath {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            CountPath::MoveChain => "move-chain",
            CountPath::DipoleFamily => "dipole-family",
            CountPath::Bars => "bars",
            CountPath::Oracle => "oracle",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CountError {
    #[error("unsupported family and instance beyond the oracle cap: {0}")]
    Unsupported(String),
    #[error("internal: count came out non-integral ({0})")]
    NotInteger(String),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Dipole(#[from] DipoleError),
    #[error(transparent)]
    Move(#[from] MoveError),
    #[error(transparent)]
    Bar(#[from] BarError),
}

/// Greedy adjacent pairing of all defects into dipoles; `None` when the
/// configuration is not a disjoint union of adjacent opposite-kind pairs.
pub fn dipole_decomposition(config: &DefectConfig) -> Option<Vec<Dipole>> {
    if config.k() != config.l() {
        return None;
    }
    let mut all: Vec<(i64, DefectKind)> = config
        .holes
        .iter()
        .map(|&p| (p, DefectKind::Hole))
        .chain(config.seps.iter().map(|&p| (p, DefectKind::Separation)))
        .collect();
    all.sort_unstable();
    let mut out = Vec::new();
    let mut it = all.chunks_exact(2);
    for pair in &mut it {
        let (p, kp) = pair[0];
        let (q, kq) = pair[1];
        if q != p + 1 || kp == kq {
            return None;
        }
        out.push(Dipole::from_adjacent_pair(p, kp));
    }
    Some(out)
}

/// Recognizes a two-bar layout: all defects are holes forming at most two
/// runs of consecutive sites with even lengths, even-offset starts, and an
/// even gap between the runs.
pub fn bar_decomposition(config: &DefectConfig) -> Option<BarConfig> {
    if !config.seps.is_empty() || config.holes.is_empty() {
        return None;
    }
    let mut runs: Vec<(i64, i64)> = Vec::new(); // (start, len)
    for &h in &config.holes {
        match runs.last_mut() {
            Some((s, len)) if *s + *len == h => *len += 1,
            _ => runs.push((h, 1)),
        }
    }
    if runs.len() > 2 {
        return None;
    }
    let (start1, len1) = runs[0];
    let (start2, len2) = if runs.len() == 2 { runs[1] } else { (start1 + len1, 0) };
    if start1 % 2 == 0 || len1 % 2 != 0 || len2 % 2 != 0 || start2 % 2 == 0 {
        return None;
    }
    let k = (start1 - 1) / 2;
    let p = len1 / 2;
    let l = (start2 - (start1 + len1)) / 2;
    let q = len2 / 2;
    if runs.len() == 2 && (start2 - (start1 + len1)) % 2 != 0 {
        return None;
    }
    if k < 0 || l < 0 {
        return None;
    }
    let cfg = BarConfig::new(config.n as u64, k as u64, l as u64, p as u64, q as u64).ok()?;
    // the recognized layout must reproduce the given positions
    let back = cfg.to_defect_config();
    if back.holes == config.holes {
        Some(cfg)
    } else {
        None
    }
}

/// Monomer-only count by chaining elementary moves: start from the packed
/// base `{1,…,k}` (count `2^{n(2n+1)}` by forced edges) and walk each hole
/// right to its target, multiplying the exact step ratios.
pub fn count_by_move_chain(config: &DefectConfig) -> Result<MatchCount, CountError> {
    assert!(config.seps.is_empty());
    let k = config.k();
    let mut ratio = BigRational::from_integer(1.into());
    let mut current = DefectConfig {
        n: config.n,
        holes: (1..=k as i64).collect(),
        seps: Vec::new(),
    };
    // rightmost hole first keeps every intermediate position free
    for i in (0..k).rev() {
        let target = config.holes[i];
        while current.holes[i] < target {
            current.holes[i] += 1;
            let step = move_hole_ratio(&current, i)?;
            ratio *= step.as_rational().expect("move ratios are rational").clone();
        }
    }
    let total = ratio * BigRational::from_integer(diamond_count(config.n).into());
    if !total.is_integer() || total.is_negative() {
        return Err(CountError::NotInteger(total.to_string()));
    }
    Ok(MatchCount::new(total.to_integer().to_biguint().expect("non-negative")))
}

/// Exact matching count of `AR_{2n,2n+k−l}(H,S)`, dispatched to the closed
/// forms when the configuration lies in a supported family and to the oracle
/// otherwise. Returns the count and the path taken.
pub fn count_exact(config: &DefectConfig) -> Result<(MatchCount, CountPath), CountError> {
    config.validate().map_err(OracleError::Lattice)?;
    if config.seps.is_empty() {
        if let Some(bar) = bar_decomposition(config) {
            return Ok((bars_count(&bar)?, CountPath::Bars));
        }
        return Ok((count_by_move_chain(config)?, CountPath::MoveChain));
    }
    if let Some(dipoles) = dipole_decomposition(config) {
        let corr = dipole_family_corr(config.n, &dipoles)?;
        let total = corr.as_rational().expect("dipole correlations are rational")
            * BigRational::from_integer(diamond_count(config.n).into());
        if !total.is_integer() || total.is_negative() {
            return Err(CountError::NotInteger(total.to_string()));
        }
        let count = MatchCount::new(total.to_integer().to_biguint().expect("non-negative"));
        return Ok((count, CountPath::DipoleFamily));
    }
    match count_config(config) {
        Ok(c) => Ok((c, CountPath::Oracle)),
        Err(OracleError::InstanceTooLarge(w, cap)) => Err(CountError::Unsupported(format!(
            "no closed-form family applies and the instance needs {w} weighted states (cap {cap})"
        ))),
        Err(e) => Err(e.into()),
    }
}

/// Exact finite-size correlation `M(AD_{2n}(H,S))/M(AD_{2n})` through the
/// fastest applicable path (requires `k = l`).
pub fn corr_exact(config: &DefectConfig) -> Result<(ExactValue, CountPath), CountError> {
    if config.k() != config.l() {
        return Err(CountError::Oracle(OracleError::UnequalDefectCounts(
            config.k(),
            config.l(),
        )));
    }
    if let Some(dipoles) = dipole_decomposition(config) {
        return Ok((dipole_family_corr(config.n, &dipoles)?, CountPath::DipoleFamily));
    }
    let (count, path) = count_exact(config)?;
    let corr = ExactValue::from_rational(BigRational::new(
        count.value.into(),
        diamond_count(config.n).into(),
    ));
    Ok((corr, path))
}
