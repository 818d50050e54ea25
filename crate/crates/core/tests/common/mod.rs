//! Generators shared by the integration test targets.
#![allow(dead_code)]

use eskit_core::Graph;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;

pub fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

pub fn graph_from_mask(n: usize, mask: &[bool]) -> Graph {
    let edges = all_pairs(n).into_iter().zip(mask).filter(|(_, &b)| b).map(|(e, _)| e);
    Graph::new(n, edges).unwrap()
}

/// Graphs on `2..=n_max` vertices with at least one edge. Edge density is
/// drawn per case so both sparse and dense graphs show up.
pub fn arb_graph(n_max: usize) -> impl Strategy<Value = Graph> {
    (2..=n_max, 0.05f64..0.95)
        .prop_flat_map(|(n, p)| {
            (
                Just(n),
                proptest::collection::vec(proptest::bool::weighted(p), n * (n - 1) / 2),
            )
        })
        .prop_map(|(n, mask)| graph_from_mask(n, &mask))
        .prop_filter("needs an edge", |g| !g.is_edgeless())
}

/// Bipartite graphs with sides of size `a` and `b`, `a + b <= n_max`.
pub fn arb_bipartite(n_max: usize) -> impl Strategy<Value = Graph> {
    (1..n_max)
        .prop_flat_map(move |a| (Just(a), 1..=n_max - a))
        .prop_flat_map(|(a, b)| (Just(a), Just(b), proptest::collection::vec(any::<bool>(), a * b)))
        .prop_map(|(a, b, mask)| {
            let edges = (0..a).flat_map(|u| (0..b).map(move |v| (u, a + v)));
            Graph::new(a + b, edges.zip(&mask).filter(|(_, &m)| m).map(|(e, _)| e)).unwrap()
        })
        .prop_filter("needs an edge", |g| !g.is_edgeless())
}

/// Uniform-ish `r`-regular graph by the pairing model with restarts.
/// Callers keep `r <= (n - 1) / 2` so restarts stay rare.
fn pairing_regular<R: Rng>(n: usize, r: usize, rng: &mut R) -> Graph {
    loop {
        let mut points: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, r)).collect();
        points.shuffle(rng);
        let mut edges: Vec<(usize, usize)> = points.chunks(2).map(|p| (p[0].min(p[1]), p[0].max(p[1]))).collect();
        if edges.iter().any(|&(u, v)| u == v) {
            continue;
        }
        edges.sort_unstable();
        if edges.windows(2).any(|w| w[0] == w[1]) {
            continue;
        }
        return Graph::new(n, edges).unwrap();
    }
}

/// Random `r`-regular graph on `n` vertices; `n * r` must be even.
pub fn random_regular<R: Rng>(n: usize, r: usize, rng: &mut R) -> Graph {
    assert!(r < n && (n * r).is_multiple_of(2));
    if 2 * r < n {
        pairing_regular(n, r, rng)
    } else {
        pairing_regular(n, n - 1 - r, rng).complement()
    }
}
