//! Closed forms and structural characterisations of `es`, and the sweep
//! that checks them against exact values on every small graph.

mod canon;
mod checks;
mod oracle;
mod predict;
mod sweep;

pub use canon::{canonical_code, canonical_graphs, graph_from_code, labeled_graphs, sweep_graphs, MAX_CANONICAL_ORDER};
pub use checks::{check_regular_plus_edge, check_union_constructions, run_checks, run_checks_seeded, Check, Verdict};
pub use oracle::{family_oracle, oracle_chi_prime, oracle_es, FamilyOracle};
pub use predict::{
    is_almost_regular, is_claw_matching_complement, is_complete_minus_edge, odd_near_extreme_shape,
    predict_even_class2_near_extreme, predict_extreme, predict_odd_class2_irregular, predict_odd_class2_near_extreme,
    predict_regular_es1, OddNearExtreme,
};
pub use sweep::{sweep, sweep_with, CheckTally, SweepConfig, SweepOutcome, SweepSummary, DEFAULT_BUDGET_NMAX};
