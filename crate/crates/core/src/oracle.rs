//! Ground-truth perfect-matching counter for small instances.
//!
//! Diagonal adjacency only ever joins white squares in neighboring board
//! columns, so the graph is layered and a broken-profile sweep works: the
//! state after column `c` is the subset of its vertices still unmatched
//! (which must all be matched into column `c+1`). Exponential only in the
//! column height, linear in the width.

use crate::exact::ExactValue;
use crate::lattice::{build_graph, AxisGraph, DefectConfig, LatticeError};
use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::HashMap;

/// Exact number of perfect matchings of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchCount {
    pub value: BigUint,
    /// Set when the graph was unbalanced (the count is then trivially 0).
    pub unbalanced: bool,
}

impl MatchCount {
    pub fn new(value: BigUint) -> Self {
        MatchCount { value, unbalanced: false }
    }

    pub fn zero_unbalanced() -> Self {
        MatchCount { value: BigUint::zero(), unbalanced: true }
    }

    pub fn from_u64(v: u64) -> Self {
        Self::new(BigUint::from(v))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("instance too large for the oracle: {0} weighted states exceeds cap {1}")]
    InstanceTooLarge(u64, u64),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error("finite correlation requires k = l (got k={0}, l={1})")]
    UnequalDefectCounts(usize, usize),
}

/// Default cap on `columns · 2^max_column_height`, sized so the exhaustive
/// 2n ≤ 6 sweeps and all 2n ≤ 8 spot checks stay fast.
pub const DEFAULT_STATE_CAP: u64 = 300_000_000;

/// Environment variable overriding the oracle cap.
pub const ORACLE_CAP_ENV: &str = "AZTEC_GAPS_ORACLE_CAP";

fn effective_cap() -> u64 {
    std::env::var(ORACLE_CAP_ENV)
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_STATE_CAP)
}

/// Counts perfect matchings of `g` exactly by the column-sweep profile DP.
pub fn count_matchings(g: &AxisGraph) -> Result<MatchCount, OracleError> {
    if !g.is_balanced() {
        return Ok(MatchCount::zero_unbalanced());
    }
    let max_col = g.columns.iter().map(Vec::len).max().unwrap_or(0);
    if max_col >= 28 {
        return Err(OracleError::InstanceTooLarge(u64::MAX, effective_cap()));
    }
    let weight = g.columns.len() as u64 * (1u64 << max_col);
    let cap = effective_cap();
    if weight > cap {
        return Err(OracleError::InstanceTooLarge(weight, cap));
    }

    // states: unmatched-subset mask of the current column -> count
    let mut states: HashMap<u32, BigUint> = HashMap::new();
    states.insert(0, BigUint::one());
    for c in 0..g.columns.len() {
        let next_len = g.columns[c].len();
        let mut next: HashMap<u32, BigUint> = HashMap::new();
        let adj: &[Vec<usize>] = if c == 0 { &[] } else { &g.forward[c - 1] };
        let prev_len = if c == 0 { 0 } else { g.columns[c - 1].len() };
        for (mask, cnt) in &states {
            // Match every set bit of `mask` (unmatched in column c−1) into
            // distinct vertices of column c; remaining vertices of column c
            // form the new unmatched mask.
            extend(mask, prev_len, next_len, adj, cnt, &mut next);
        }
        states = next;
        if states.is_empty() {
            return Ok(MatchCount::new(BigUint::zero()));
        }
    }
    // all vertices of the last column must be matched backwards
    Ok(MatchCount::new(states.remove(&0).unwrap_or_else(BigUint::zero)))
}

/// Enumerates injective matchings of the set bits of `mask` into the next
/// column and accumulates counts over the complement masks.
fn extend(
    mask: &u32,
    prev_len: usize,
    next_len: usize,
    adj: &[Vec<usize>],
    cnt: &BigUint,
    out: &mut HashMap<u32, BigUint>,
) {
    fn rec(
        mask: u32,
        i: usize,
        prev_len: usize,
        used: u32,
        adj: &[Vec<usize>],
        cnt: &BigUint,
        next_len: usize,
        out: &mut HashMap<u32, BigUint>,
    ) {
        if i == prev_len {
            let free = !used & ((1u32 << next_len) - 1);
            *out.entry(free).or_insert_with(BigUint::zero) += cnt;
            return;
        }
        if mask & (1 << i) == 0 {
            rec(mask, i + 1, prev_len, used, adj, cnt, next_len, out);
            return;
        }
        for &j in &adj[i] {
            if used & (1 << j) == 0 {
                rec(mask, i + 1, prev_len, used | (1 << j), adj, cnt, next_len, out);
            }
        }
    }
    rec(*mask, 0, prev_len, 0, adj, cnt, next_len, out);
}

/// Counts matchings of the graph described by `config`.
pub fn count_config(config: &DefectConfig) -> Result<MatchCount, OracleError> {
    let g = build_graph(config)?;
    count_matchings(&g)
}

/// Finite-size correlation `M(AD_{2n}(H,S)) / M(AD_{2n})` as an exact
/// rational; requires `k = l` so the ambient graph is the Aztec diamond.
pub fn corr_finite(config: &DefectConfig) -> Result<ExactValue, OracleError> {
    if config.k() != config.l() {
        return Err(OracleError::UnequalDefectCounts(config.k(), config.l()));
    }
    let defect = count_config(config)?;
    let plain = count_config(&DefectConfig::diamond(config.n))?;
    Ok(ExactValue::from_rational(BigRational::new(
        defect.value.into(),
        plain.value.into(),
    )))
}

/// `M(AD_{2n}) = 2^{n(2n+1)}`, used as the closed-form base count.
pub fn diamond_count(n: u32) -> BigUint {
    BigUint::one() << (n as usize * (2 * n as usize + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn count(n: u32, holes: Vec<i64>, seps: Vec<i64>) -> u64 {
        let cfg = DefectConfig::new(n, holes, seps).unwrap();
        count_config(&cfg).unwrap().value.to_u64().unwrap()
    }

    #[test]
    fn aztec_diamond_counts() {
        assert_eq!(count(1, vec![], vec![]), 8);
        assert_eq!(count(2, vec![], vec![]), 1024);
        assert_eq!(count(3, vec![], vec![]), 2_097_152);
    }

    #[test]
    fn diamond_count_formula() {
        for n in 1..=4 {
            let cfg = DefectConfig::diamond(n);
            assert_eq!(count_config(&cfg).unwrap().value, diamond_count(n));
        }
    }

    #[test]
    fn single_hole_rectangle() {
        // forced edges: AR_{2,3}({1}) has the same count as AD_2
        assert_eq!(count(1, vec![1], vec![]), 8);
        assert_eq!(count(1, vec![3], vec![]), 8);
    }

    #[test]
    fn corr_finite_examples() {
        let cfg = DefectConfig::new(1, vec![1], vec![2]).unwrap();
        assert_eq!(corr_finite(&cfg).unwrap(), ExactValue::from_ratio(1, 2));
        let cfg = DefectConfig::diamond(1);
        assert_eq!(corr_finite(&cfg).unwrap(), ExactValue::one());
        let cfg = DefectConfig::new(2, vec![1, 3], vec![2, 4]).unwrap();
        assert_eq!(corr_finite(&cfg).unwrap(), ExactValue::from_ratio(1, 4));
    }

    #[test]
    fn corr_finite_requires_equal_counts() {
        let cfg = DefectConfig::new(1, vec![1], vec![]).unwrap();
        assert!(matches!(corr_finite(&cfg), Err(OracleError::UnequalDefectCounts(1, 0))));
    }

    #[test]
    fn rotation_preserves_counts_small_sweep() {
        // exhaustive k=l=1 configs on AD_2 and AD_4
        for n in 1..=2u32 {
            let w = 2 * n as i64;
            for h in 1..=w {
                for s in 1..=w {
                    if h == s {
                        continue;
                    }
                    let cfg = DefectConfig::new(n, vec![h], vec![s]).unwrap();
                    let a = count_config(&cfg).unwrap().value;
                    let b = count_config(&cfg.rotate_180()).unwrap().value;
                    assert_eq!(a, b, "n={n} H={{{h}}} S={{{s}}}");
                }
            }
        }
    }

    #[test]
    fn defect_count_never_exceeds_plain_diamond() {
        let n = 2u32;
        let w = 2 * n as i64;
        let plain = count_config(&DefectConfig::diamond(n)).unwrap().value;
        for h in 1..=w {
            for s in 1..=w {
                if h == s {
                    continue;
                }
                let cfg = DefectConfig::new(n, vec![h], vec![s]).unwrap();
                assert!(count_config(&cfg).unwrap().value <= plain);
            }
        }
    }

    #[test]
    fn cap_is_enforced() {
        let cfg = DefectConfig::diamond(40);
        assert!(matches!(count_config(&cfg), Err(OracleError::InstanceTooLarge(_, _))));
    }
}
