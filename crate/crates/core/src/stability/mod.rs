//! Minimum mitigating sets: edge sets whose removal lowers the chromatic
//! index.

mod critical;
mod es;
mod transform;

pub use critical::{alpha_core_bound, criticality, is_critical, vizing_adjacency_check, Criticality};
pub use es::{
    all_min_mitigating_sets, es_exact, has_single_edge_mitigation, is_mitigating, verify_conjecture1,
    ConjectureVerdict, MitigatingReport, SearchMode,
};
pub use transform::{bipartite_matching_transform, two_matching_transform};

pub(crate) use es::mitigates_with;
pub(crate) use transform::construct as two_matching_construct;
