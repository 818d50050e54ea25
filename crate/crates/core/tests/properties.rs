mod common;

use std::sync::OnceLock;

use eskit_core::coloring::{chi_prime, chi_prime_with, is_k_edge_colorable, ChiOptions, GraphClass};
use eskit_core::graph::{encode_edge_list, encode_graph6, parse_edge_list, parse_graph6};
use eskit_core::stability::{es_exact, is_mitigating, two_matching_transform, MitigatingReport, SearchMode};
use eskit_core::theorems::{canonical_code, canonical_graphs, run_checks, Check};
use eskit_core::{EdgeSet, Graph};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

fn permuted(g: &Graph, perm: &[usize]) -> Graph {
    Graph::new(g.n(), g.edges().iter().map(|&(u, v)| (perm[u], perm[v]))).unwrap()
}

/// Every graph on up to seven vertices with `es = 2`, one per isomorphism class.
fn es_two_pool() -> &'static [Graph] {
    static POOL: OnceLock<Vec<Graph>> = OnceLock::new();
    POOL.get_or_init(|| {
        (2..=7)
            .flat_map(|n| canonical_graphs(n).unwrap())
            .filter(|g| !g.is_edgeless() && es_exact(g, SearchMode::Exact).unwrap().es == 2)
            .collect()
    })
}

fn arb_permuted(n_max: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    common::arb_graph(n_max).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 500, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn graph6_and_edge_list_decode_what_they_encode(g in common::arb_graph(30)) {
        prop_assert_eq!(parse_graph6(&encode_graph6(&g).unwrap()).unwrap(), g.clone());
        prop_assert_eq!(parse_edge_list(&encode_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn canonical_code_ignores_labels((g, perm) in arb_permuted(9)) {
        prop_assert_eq!(canonical_code(&g), canonical_code(&permuted(&g, &perm)));
    }

    #[test]
    fn chi_prime_is_exact_and_label_free((g, perm) in arb_permuted(8)) {
        let v = chi_prime(&g).unwrap();
        let delta = g.max_degree();
        prop_assert!(v.witness.is_proper());
        prop_assert_eq!(v.witness.k(), v.chi_prime);
        prop_assert_eq!(v.chi_prime, if v.class == GraphClass::Class1 { delta } else { delta + 1 });
        prop_assert_eq!(v.class == GraphClass::Class1, is_k_edge_colorable(&g, delta));
        let slow = chi_prime_with(&g, ChiOptions { fast_paths: false }).unwrap();
        prop_assert_eq!(slow.chi_prime, v.chi_prime);
        prop_assert_eq!(chi_prime(&permuted(&g, &perm)).unwrap().chi_prime, v.chi_prime);
    }

    #[test]
    fn es_lies_within_its_bounds((g, perm) in arb_permuted(7)) {
        let r = es_exact(&g, SearchMode::Exact).unwrap();
        let chi = chi_prime(&g).unwrap().chi_prime;
        let lower = g.m().saturating_sub((chi - 1) * (g.n() / 2)).max(1);
        prop_assert!(lower <= r.es && r.es <= g.m() / chi);
        prop_assert_eq!(r.witness.len(), r.es);
        prop_assert!(is_mitigating(&g, &r.witness).unwrap());
        prop_assert_eq!(r.witness_is_matching, r.witness.is_matching());
        prop_assert_eq!(es_exact(&permuted(&g, &perm), SearchMode::Exact).unwrap().es, r.es);
    }

    #[test]
    fn no_smaller_set_mitigates(g in common::arb_graph(6)) {
        let r = es_exact(&g, SearchMode::Exact).unwrap();
        let edges = g.edges();
        let small = (0u32..1 << edges.len()).filter(|mask| (mask.count_ones() as usize) < r.es);
        for mask in small {
            let set = EdgeSet::new(&g, (0..edges.len()).filter(|b| mask >> b & 1 == 1).map(|b| edges[b])).unwrap();
            prop_assert!(!is_mitigating(&g, &set).unwrap());
        }
    }

    #[test]
    fn matching_only_mode_bounds_exact(g in common::arb_graph(7)) {
        let exact = es_exact(&g, SearchMode::Exact).unwrap();
        let fast = es_exact(&g, SearchMode::MatchingOnly).unwrap();
        prop_assert!(fast.es >= exact.es);
        prop_assert!(fast.witness.is_matching());
        prop_assert!(is_mitigating(&g, &fast.witness).unwrap());
    }

    #[test]
    fn report_json_decodes_to_itself(g in common::arb_graph(7)) {
        let r = es_exact(&g, SearchMode::Exact).unwrap();
        let back: MitigatingReport = serde_json::from_str(&serde_json::to_string(&r).unwrap()).unwrap();
        prop_assert_eq!(back, r);
    }

    #[test]
    fn mitigating_pairs_become_matchings(
        base in any::<prop::sample::Index>(),
        seed in any::<u64>(),
        pick in any::<prop::sample::Index>(),
    ) {
        let pool = es_two_pool();
        let mut perm: Vec<usize> = (0..8).collect();
        let g = base.get(pool);
        perm.truncate(g.n());
        perm.shuffle(&mut StdRng::seed_from_u64(seed));
        let g = permuted(g, &perm);
        let target = chi_prime(&g).unwrap().chi_prime - 1;
        let pairs: Vec<EdgeSet> = (0..g.m())
            .flat_map(|i| (i + 1..g.m()).map(move |j| (i, j)))
            .map(|(i, j)| EdgeSet::new(&g, [g.edges()[i], g.edges()[j]]).unwrap())
            .filter(|s| is_k_edge_colorable(&g.without_edges(s.edges()), target))
            .collect();
        let set = pick.get(&pairs);
        let m = two_matching_transform(&g, set).unwrap();
        prop_assert_eq!(m.len(), 2);
        prop_assert!(is_mitigating(&g, m.as_edge_set()).unwrap());
    }

    #[test]
    fn every_check_passes_on_small_graphs(g in common::arb_graph(6)) {
        for v in run_checks(&g, &Check::ALL).unwrap() {
            prop_assert!(v.pass, "{:?}", v);
        }
    }
}
