use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};

use super::canon::sweep_graphs;
use super::checks::{run_checks_seeded, Check, Verdict};

/// Largest order swept unless the caller raises the budget.
pub const DEFAULT_BUDGET_NMAX: usize = 8;

#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub n_min: usize,
    pub n_max: usize,
    pub checks: Vec<Check>,
    pub budget: usize,
    /// Passed to [`run_checks_seeded`].
    pub seed: Option<u64>,
}

impl SweepConfig {
    pub fn new(n_max: usize, checks: &[Check]) -> Self {
        SweepConfig {
            n_min: 1,
            n_max,
            checks: checks.to_vec(),
            budget: DEFAULT_BUDGET_NMAX,
            seed: None,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CheckTally {
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    pub graphs: usize,
    pub verdicts: usize,
    pub passed: usize,
    pub failed: usize,
    pub per_check: BTreeMap<String, CheckTally>,
}

#[derive(Clone, Debug)]
pub struct SweepOutcome {
    /// Failures first, then by graph6 string and check name.
    pub verdicts: Vec<Verdict>,
    pub summary: SweepSummary,
}

impl SweepOutcome {
    pub fn failures(&self) -> impl Iterator<Item = &Verdict> {
        self.verdicts.iter().filter(|v| !v.pass)
    }
}

pub fn sweep(n_max: usize, checks: &[Check]) -> Result<SweepOutcome> {
    sweep_with(&SweepConfig::new(n_max, checks))
}

/// Runs the checks on every graph with at least one edge and order in
/// `n_min..=n_max`: all labelled graphs up to six vertices, one per
/// isomorphism class above.
pub fn sweep_with(cfg: &SweepConfig) -> Result<SweepOutcome> {
    if cfg.n_max > cfg.budget {
        return Err(Error::Budget {
            requested: cfg.n_max,
            budget: cfg.budget,
        });
    }
    let mut graphs = Vec::new();
    for n in cfg.n_min.max(2)..=cfg.n_max {
        graphs.extend(sweep_graphs(n)?);
    }
    let per_graph: Vec<Vec<Verdict>> = graphs
        .par_iter()
        .map(|g| run_checks_seeded(g, &cfg.checks, cfg.seed))
        .collect::<Result<_>>()?;
    let mut verdicts: Vec<Verdict> = per_graph.into_iter().flatten().collect();
    verdicts.sort_by(|a, b| (a.pass, &a.graph6, &a.check).cmp(&(b.pass, &b.graph6, &b.check)));

    let mut per_check: BTreeMap<String, CheckTally> = BTreeMap::new();
    for v in &verdicts {
        let tally = per_check.entry(v.check.clone()).or_default();
        if v.pass {
            tally.passed += 1;
        } else {
            tally.failed += 1;
        }
    }
    let failed = verdicts.iter().filter(|v| !v.pass).count();
    let summary = SweepSummary {
        graphs: graphs.len(),
        verdicts: verdicts.len(),
        passed: verdicts.len() - failed,
        failed,
        per_check,
    };
    Ok(SweepOutcome { verdicts, summary })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweep_passes() {
        let out = sweep(4, &Check::ALL).unwrap();
        assert_eq!(out.summary.failed, 0, "{:?}", out.failures().collect::<Vec<_>>());
        // 1 + 7 + 63 labelled graphs with an edge on 2..=4 vertices.
        assert_eq!(out.summary.graphs, 71);
        assert!(out.summary.per_check.contains_key("extreme"));
    }

    #[test]
    fn budget_is_enforced() {
        assert!(matches!(
            sweep(9, &[Check::Extreme]),
            Err(Error::Budget {
                requested: 9,
                budget: 8
            })
        ));
    }

    #[test]
    fn ordering_is_deterministic() {
        let a = sweep(4, &[Check::Extreme, Check::Conjecture1]).unwrap();
        let b = sweep(4, &[Check::Conjecture1, Check::Extreme]).unwrap();
        assert_eq!(a.verdicts, b.verdicts);
    }
}
