//! Convergence probes: tabulate exact values (in log space) against a law's
//! predictions over a parameter grid and record relative errors.

use serde::Serialize;

/// One grid of exact-vs-predicted comparisons.
#[derive(Debug, Clone, Serialize)]
pub struct ConvergenceRecord {
    pub law: String,
    pub rows: Vec<ConvergenceRow>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ConvergenceRow {
    pub n: u64,
    pub exact_log: f64,
    pub predicted_log: f64,
    pub rel_error: f64,
}

#[derive(Debug, Clone, thiserror::Error)]
pub enum ProbeError {
    #[error("evaluator failed at grid point {0}: {1}")]
    Evaluator(u64, String),
    #[error("empty grid")]
    EmptyGrid,
}

/// Runs `exact` and `predicted` (both returning natural logs) over the grid
/// and records `|exp(exact − predicted) − 1|` per point.
pub fn convergence_probe(
    law: &str,
    grid: &[u64],
    mut exact: impl FnMut(u64) -> Result<f64, String>,
    mut predicted: impl FnMut(u64) -> Result<f64, String>,
) -> Result<ConvergenceRecord, ProbeError> {
    if grid.is_empty() {
        return Err(ProbeError::EmptyGrid);
    }
    let mut rows = Vec::with_capacity(grid.len());
    for &n in grid {
        let e = exact(n).map_err(|m| ProbeError::Evaluator(n, m))?;
        let p = predicted(n).map_err(|m| ProbeError::Evaluator(n, m))?;
        rows.push(ConvergenceRow {
            n,
            exact_log: e,
            predicted_log: p,
            rel_error: ((e - p).exp() - 1.0).abs(),
        });
    }
    Ok(ConvergenceRecord { law: law.to_string(), rows })
}

impl ConvergenceRecord {
    /// True when the last grid point's error is strictly below the first's.
    pub fn error_decays(&self) -> bool {
        match (self.rows.first(), self.rows.last()) {
            (Some(a), Some(b)) => b.rel_error < a.rel_error,
            _ => false,
        }
    }

    /// Grid points whose error is larger than the previous point's.
    pub fn non_monotone_points(&self) -> Vec<u64> {
        self.rows
            .windows(2)
            .filter(|w| w[1].rel_error > w[0].rel_error)
            .map(|w| w[1].n)
            .collect()
    }

    /// CSV rendering with the fixed column set `n, exact_log, predicted_log,
    /// rel_error`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,exact_log,predicted_log,rel_error\n");
        for r in &self.rows {
            out.push_str(&format!(
                "{},{:.12e},{:.12e},{:.12e}\n",
                r.n, r.exact_log, r.predicted_log, r.rel_error
            ));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn probe_of_law_against_itself_is_zero() {
        let rec = convergence_probe(
            "identity",
            &[1, 2, 4, 8],
            |n| Ok((n as f64).ln()),
            |n| Ok((n as f64).ln()),
        )
        .unwrap();
        assert!(rec.rows.iter().all(|r| r.rel_error == 0.0));
    }

    #[test]
    fn decay_detection() {
        let rec = convergence_probe(
            "one-over-n",
            &[10, 100, 1000],
            |n| Ok((1.0 + 1.0 / n as f64).ln()),
            |_| Ok(0.0),
        )
        .unwrap();
        assert!(rec.error_decays());
        assert!(rec.non_monotone_points().is_empty());
    }

    #[test]
    fn csv_columns() {
        let rec = convergence_probe("x", &[5], |_| Ok(1.0), |_| Ok(1.0)).unwrap();
        let csv = rec.to_csv();
        assert!(csv.starts_with("n,exact_log,predicted_log,rel_error\n"));
        assert_eq!(csv.lines().count(), 2);
    }

    #[test]
    fn empty_grid_rejected() {
        assert!(convergence_probe("x", &[], |_| Ok(0.0), |_| Ok(0.0)).is_err());
    }

    #[test]
    fn evaluator_failure_carries_grid_point() {
        let err = convergence_probe(
            "x",
            &[3],
            |_| Err("boom".to_string()),
            |_| Ok(0.0),
        )
        .unwrap_err();
        assert!(matches!(err, ProbeError::Evaluator(3, _)));
    }
}
