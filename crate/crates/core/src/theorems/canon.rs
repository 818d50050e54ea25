//! Small-graph enumeration: every labelled graph by bitmask, or one
//! representative per isomorphism class via canonical codes.
//!
//! The canonical code of a graph is the largest adjacency code over all
//! labellings reached by individualisation and equitable refinement.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order whose adjacency code fits in a `u128`.
pub const MAX_CANONICAL_ORDER: usize = 16;

#[inline]
fn pair_bit(i: usize, j: usize) -> u32 {
    let (i, j) = if i < j { (i, j) } else { (j, i) };
    (j * (j - 1) / 2 + i) as u32
}

/// Bits of the upper triangle, column by column (the graph6 order).
fn code_under(adj: &[u32], order: &[usize]) -> u128 {
    let n = order.len();
    let mut code = 0u128;
    for j in 1..n {
        for i in 0..j {
            if adj[order[i]] >> order[j] & 1 == 1 {
                code |= 1u128 << (127 - pair_bit(i, j));
            }
        }
    }
    code
}

fn refine(adj: &[u32], cells: &mut Vec<Vec<usize>>) {
    loop {
        let masks: Vec<u32> = cells.iter().map(|c| c.iter().fold(0u32, |m, &v| m | 1 << v)).collect();
        let mut next: Vec<Vec<usize>> = Vec::with_capacity(cells.len());
        for cell in cells.iter() {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = cell
                .iter()
                .map(|&v| (masks.iter().map(|m| (adj[v] & m).count_ones()).collect(), v))
                .collect();
            keyed.sort();
            for group in keyed.chunk_by(|a, b| a.0 == b.0) {
                next.push(group.iter().map(|(_, v)| *v).collect());
            }
        }
        let stable = next.len() == cells.len();
        *cells = next;
        if stable {
            return;
        }
    }
}

fn search(adj: &[u32], cells: Vec<Vec<usize>>, best: &mut u128) {
    let Some(target) = cells
        .iter()
        .enumerate()
        .filter(|(_, c)| c.len() > 1)
        .min_by_key(|(i, c)| (c.len(), *i))
        .map(|(i, _)| i)
    else {
        let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        *best = (*best).max(code_under(adj, &order));
        return;
    };
    for &v in &cells[target] {
        let mut next = Vec::with_capacity(cells.len() + 1);
        next.extend(cells[..target].iter().cloned());
        next.push(vec![v]);
        next.push(cells[target].iter().copied().filter(|&w| w != v).collect());
        next.extend(cells[target + 1..].iter().cloned());
        refine(adj, &mut next);
        search(adj, next, best);
    }
}

/// Isomorphism-invariant code: equal for two graphs exactly when they are
/// isomorphic (for graphs of the same order).
pub fn canonical_code(g: &Graph) -> u128 {
    assert!(
        g.n() <= MAX_CANONICAL_ORDER,
        "canonical codes cover at most {MAX_CANONICAL_ORDER} vertices"
    );
    let adj = adjacency_masks(g);
    let mut cells = vec![(0..g.n()).collect::<Vec<_>>()];
    refine(&adj, &mut cells);
    let mut best = 0;
    search(&adj, cells, &mut best);
    best
}

fn adjacency_masks(g: &Graph) -> Vec<u32> {
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
        .collect()
}

/// The graph whose vertex `i` sits at position `i` of `code`.
pub fn graph_from_code(n: usize, code: u128) -> Graph {
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if code >> (127 - pair_bit(i, j)) & 1 == 1 {
                edges.push((i, j));
            }
        }
    }
    Graph::new(n, edges).expect("decoded edges are in range")
}

/// One graph per isomorphism class on `n` vertices, the edgeless one
/// included, ordered by canonical code.
pub fn canonical_graphs(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > MAX_CANONICAL_ORDER {
        return Err(Error::UnsupportedOrder(n));
    }
    let mut level: Vec<u128> = vec![0];
    for order in 2..=n {
        let prev = level;
        let found: HashSet<u128> = prev
            .par_iter()
            .flat_map_iter(|&code| {
                let base = graph_from_code(order - 1, code);
                (0u32..1 << (order - 1)).map(move |subset| {
                    let mut edges = base.edges().to_vec();
                    edges.extend((0..order - 1).filter(|&v| subset >> v & 1 == 1).map(|v| (v, order - 1)));
                    canonical_code(&Graph::new(order, edges).expect("in range"))
                })
            })
            .collect();
        level = found.into_iter().collect();
        level.sort_unstable();
    }
    Ok(level.into_iter().map(|c| graph_from_code(n, c)).collect())
}

/// Every labelled graph on `n` vertices with at least one edge.
pub fn labeled_graphs(n: usize) -> Result<Vec<Graph>> {
    let pairs = n * n.saturating_sub(1) / 2;
    if n == 0 || pairs > 24 {
        return Err(Error::UnsupportedOrder(n));
    }
    let all: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    Ok((1u32..1 << pairs)
        .map(|mask| {
            Graph::new(
                n,
                all.iter()
                    .enumerate()
                    .filter(|(b, _)| mask >> b & 1 == 1)
                    .map(|(_, &e)| e),
            )
            .expect("in range")
        })
        .collect())
}

/// Graphs with at least one edge on `n` vertices: all labelled ones for
/// `n <= 6`, one per isomorphism class above that.
pub fn sweep_graphs(n: usize) -> Result<Vec<Graph>> {
    if n <= 6 {
        labeled_graphs(n)
    } else {
        Ok(canonical_graphs(n)?.into_iter().filter(|g| !g.is_edgeless()).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn permuted(g: &Graph, perm: &[usize]) -> Graph {
        Graph::new(g.n(), g.edges().iter().map(|&(u, v)| (perm[u], perm[v]))).unwrap()
    }

    #[test]
    fn counts_match_known_totals() {
        // Unlabelled graph counts for n = 1..7.
        let expected = [1, 2, 4, 11, 34, 156, 1044];
        for (i, &want) in expected.iter().enumerate() {
            assert_eq!(canonical_graphs(i + 1).unwrap().len(), want, "n = {}", i + 1);
        }
    }

    #[test]
    fn code_is_invariant_under_relabelling() {
        let petersen = crate::graph::parse_graph6("IheA@GUAo").unwrap();
        let code = canonical_code(&petersen);
        for shift in 1..10 {
            let perm: Vec<usize> = (0..10).map(|v| (v * 3 + shift) % 10).collect();
            assert_eq!(canonical_code(&permuted(&petersen, &perm)), code);
        }
        let c5 = crate::graph::generate(&crate::FamilySpec::Cycle(5)).unwrap();
        let p5 = crate::graph::generate(&crate::FamilySpec::Path(5)).unwrap();
        assert_ne!(canonical_code(&c5), canonical_code(&p5));
    }

    #[test]
    fn labeled_totals() {
        assert_eq!(labeled_graphs(3).unwrap().len(), 7);
        assert_eq!(labeled_graphs(4).unwrap().len(), 63);
        assert_eq!(sweep_graphs(7).unwrap().len(), 1043);
    }
}
