use crate::coloring::{chi_prime, GraphClass};
use crate::error::{precondition, Result};
use crate::graph::{max_matching, Graph};

use super::es::mitigates_with;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Criticality {
    pub critical: bool,
    /// Why the answer is `false` without looking at single edges.
    pub note: Option<String>,
}

/// Class 2 and every single edge removal lowers the chromatic index.
pub fn criticality(g: &Graph) -> Result<Criticality> {
    let verdict = chi_prime(g)?;
    if verdict.class == GraphClass::Class1 {
        return Ok(Criticality {
            critical: false,
            note: Some("class 1 graph: criticality is only considered for class 2".into()),
        });
    }
    let target = verdict.chi_prime - 1;
    let critical = (0..g.m()).all(|i| mitigates_with(g, &[i], target));
    Ok(Criticality { critical, note: None })
}

pub fn is_critical(g: &Graph) -> Result<bool> {
    Ok(criticality(g)?.critical)
}

/// In a critical graph, every edge `xy` has `x` adjacent to at least
/// `Δ + 1 - d(y)` vertices of maximum degree other than `y`.
pub fn vizing_adjacency_check(g: &Graph) -> Result<bool> {
    if !is_critical(g)? {
        return Err(precondition("graph is not critical"));
    }
    let delta = g.max_degree();
    let full = |v: usize| g.degree(v) == delta;
    Ok(g.edges().iter().all(|&(u, v)| {
        [(u, v), (v, u)].into_iter().all(|(x, y)| {
            let count = g.neighbors(x).iter().filter(|&&w| w != y && full(w)).count();
            count + g.degree(y) > delta
        })
    }))
}

/// Matching number of the core, an upper bound on `es` for class 2 graphs.
pub fn alpha_core_bound(g: &Graph) -> Result<usize> {
    if chi_prime(g)?.class == GraphClass::Class1 {
        return Err(precondition("bound applies to class 2 graphs only"));
    }
    Ok(max_matching(&g.core().graph).len())
}
