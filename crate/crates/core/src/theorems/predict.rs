//! Structural predictors for graphs with extreme or near-extreme `es`.
//!
//! Each target shape is rigid, so recognition goes by component sizes,
//! edge counts and degree data rather than general isomorphism.

use std::fmt;

use serde::Serialize;

use crate::coloring::{chi_prime, GraphClass};
use crate::error::{precondition, Result};
use crate::graph::Graph;

fn edges_in(g: &Graph, comp: &[usize]) -> usize {
    comp.iter().map(|&v| g.degree(v)).sum::<usize>() / 2
}

/// Sorted component orders if every component is complete.
fn clique_sizes(g: &Graph) -> Option<Vec<usize>> {
    let mut sizes = Vec::new();
    for comp in g.components() {
        let k = comp.len();
        if edges_in(g, &comp) != k * (k - 1) / 2 {
            return None;
        }
        sizes.push(k);
    }
    sizes.sort_unstable();
    Some(sizes)
}

fn is_odd_clique_order(k: usize) -> bool {
    k >= 3 && k % 2 == 1
}

pub fn is_complete_minus_edge(g: &Graph) -> bool {
    let n = g.n();
    n >= 2 && g.m() + 1 == n * (n - 1) / 2
}

/// Complement of `(n-3)/2` disjoint edges plus a path on three vertices.
pub fn is_claw_matching_complement(g: &Graph) -> bool {
    let n = g.n();
    if n < 5 || n.is_multiple_of(2) {
        return false;
    }
    let h = g.complement();
    let mut pairs = 0;
    let mut paths = 0;
    for comp in h.components() {
        match (comp.len(), edges_in(&h, &comp)) {
            (2, 1) => pairs += 1,
            (3, 2) => paths += 1,
            _ => return false,
        }
    }
    paths == 1 && pairs == (n - 3) / 2
}

/// `n - 1` vertices share one degree.
pub fn is_almost_regular(g: &Graph) -> bool {
    let degs = g.degrees();
    degs.iter()
        .any(|&d| degs.iter().filter(|&&e| e == d).count() + 1 >= g.n())
}

fn class_of(g: &Graph) -> Result<GraphClass> {
    Ok(chi_prime(g)?.class)
}

/// `es = ⌊n/2⌋` exactly for odd complete graphs, class 1 regular graphs of
/// even order, and class 1 graphs of odd order with `(n-1)Δ/2` edges.
pub fn predict_extreme(g: &Graph) -> Result<bool> {
    let class = class_of(g)?;
    let n = g.n();
    Ok(match class {
        GraphClass::Class2 => n % 2 == 1 && g.is_complete(),
        GraphClass::Class1 if n.is_multiple_of(2) => g.regular_degree().is_some(),
        GraphClass::Class1 => 2 * g.m() == (n - 1) * g.max_degree(),
    })
}

/// Connected regular graphs with `es = 1` are `K_2` and the odd cycles.
pub fn predict_regular_es1(g: &Graph) -> Result<bool> {
    g.require_edges()?;
    let Some(r) = g.regular_degree() else {
        return Err(precondition("graph is not regular"));
    };
    if !g.is_connected() {
        return Err(precondition("graph is not connected"));
    }
    Ok(g.n() == 2 || r == 2 && g.n() % 2 == 1)
}

/// Class 2 graphs of even order with `es = n/2 - 1`: `K_1 ∪ K_{n-1}` and
/// `K_{2m+1} ∪ K_{2m+1}`.
pub fn predict_even_class2_near_extreme(g: &Graph) -> Result<bool> {
    if class_of(g)? != GraphClass::Class2 || g.n() % 2 == 1 {
        return Err(precondition("needs a class 2 graph of even order"));
    }
    let n = g.n();
    Ok(match clique_sizes(g).as_deref() {
        Some([1, k]) => *k == n - 1,
        Some([a, b]) => a == b && is_odd_clique_order(*a),
        _ => false,
    })
}

/// The seven shapes of odd-order class 2 graphs with `es = (n-3)/2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OddNearExtreme {
    CompleteMinusEdge,
    CliquePlusEdge,
    CliquePlusTwoIsolated,
    ClawMatchingComplement,
    CoRegular,
    TwoCliquesPlusIsolated,
    ThreeCliques,
}

impl fmt::Display for OddNearExtreme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            OddNearExtreme::CompleteMinusEdge => "K_n minus an edge",
            OddNearExtreme::CliquePlusEdge => "K_{n-2} + K_2",
            OddNearExtreme::CliquePlusTwoIsolated => "K_{n-2} + 2K_1",
            OddNearExtreme::ClawMatchingComplement => "complement of matching + K_{1,2}",
            OddNearExtreme::CoRegular => "(n-3)-regular",
            OddNearExtreme::TwoCliquesPlusIsolated => "2K_{2m+1} + K_1",
            OddNearExtreme::ThreeCliques => "3K_{2m+1}",
        };
        f.write_str(s)
    }
}

/// Which of the seven shapes `g` has, if any. The `n >= 5` qualifier
/// applies to the first five shapes; the clique unions need `m >= 1`.
pub fn odd_near_extreme_shape(g: &Graph) -> Result<Option<OddNearExtreme>> {
    if class_of(g)? != GraphClass::Class2 || g.n().is_multiple_of(2) {
        return Err(precondition("needs a class 2 graph of odd order"));
    }
    let n = g.n();
    if n >= 5 {
        if is_complete_minus_edge(g) {
            return Ok(Some(OddNearExtreme::CompleteMinusEdge));
        }
        if g.regular_degree() == Some(n - 3) {
            return Ok(Some(OddNearExtreme::CoRegular));
        }
        if is_claw_matching_complement(g) {
            return Ok(Some(OddNearExtreme::ClawMatchingComplement));
        }
    }
    let shape = match clique_sizes(g).as_deref() {
        Some([2, k]) if n >= 5 && *k == n - 2 => Some(OddNearExtreme::CliquePlusEdge),
        Some([1, 1, k]) if n >= 5 && *k == n - 2 => Some(OddNearExtreme::CliquePlusTwoIsolated),
        Some([1, a, b]) if a == b && is_odd_clique_order(*a) => Some(OddNearExtreme::TwoCliquesPlusIsolated),
        Some([a, b, c]) if a == b && b == c && is_odd_clique_order(*a) => Some(OddNearExtreme::ThreeCliques),
        _ => None,
    };
    Ok(shape)
}

pub fn predict_odd_class2_near_extreme(g: &Graph) -> Result<bool> {
    Ok(odd_near_extreme_shape(g)?.is_some())
}

/// Connected, odd-order class 2 graphs that are neither regular nor almost
/// regular have `es = (n-3)/2` only as `K_n` minus an edge.
pub fn predict_odd_class2_irregular(g: &Graph) -> Result<bool> {
    if class_of(g)? != GraphClass::Class2
        || g.n().is_multiple_of(2)
        || !g.is_connected()
        || g.regular_degree().is_some()
        || is_almost_regular(g)
    {
        return Err(precondition(
            "needs a connected, irregular, not almost regular class 2 graph of odd order",
        ));
    }
    Ok(g.n() >= 5 && is_complete_minus_edge(g))
}
