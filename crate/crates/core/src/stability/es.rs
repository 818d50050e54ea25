use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::coloring::{chi_prime, solve_exact};
use crate::error::{precondition, Result};
use crate::graph::enumerate::{IndexCombinations, MatchingIndices};
use crate::graph::{encode_graph6, is_matching, EdgeSet, Graph, Matching};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchMode {
    /// All k-subsets: the result is certified minimal.
    #[default]
    Exact,
    /// Only k-matchings: an upper bound that is exact whenever some minimum
    /// mitigating set is a matching.
    MatchingOnly,
}

impl SearchMode {
    pub fn as_str(self) -> &'static str {
        match self {
            SearchMode::Exact => "exact",
            SearchMode::MatchingOnly => "matching_only",
        }
    }
}

impl fmt::Display for SearchMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SearchMode {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact" => Ok(SearchMode::Exact),
            "matching_only" | "matching-only" => Ok(SearchMode::MatchingOnly),
            other => Err(precondition(format!("unknown search mode {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MitigatingReport {
    pub es: usize,
    pub witness: EdgeSet,
    pub witness_is_matching: bool,
    pub matching_witness: Option<Matching>,
    pub mode: SearchMode,
    pub subsets_tested: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureVerdict {
    pub graph6: String,
    pub es: usize,
    pub has_matching_min_witness: bool,
    pub matching_witness: Option<Matching>,
}

/// Whether removing the edges at `removed` (indices into `g.edges()`) leaves
/// a graph colourable with `target` colours.
pub(crate) fn mitigates_with(g: &Graph, removed: &[usize], target: usize) -> bool {
    if target == 0 {
        return removed.len() == g.m();
    }
    // Cheap degree test first: every vertex must drop to at most `target`.
    let mut deg = g.degrees();
    for &i in removed {
        let (u, v) = g.edges()[i];
        deg[u] -= 1;
        deg[v] -= 1;
    }
    if deg.iter().any(|&d| d > target) {
        return false;
    }
    solve_exact(&g.without_edge_indices(removed), target, None).is_some()
}

/// Whether `set` lowers the chromatic index of `g`.
pub fn is_mitigating(g: &Graph, set: &EdgeSet) -> Result<bool> {
    let chi = chi_prime(g)?.chi_prime;
    Ok(mitigates_with(g, &set.indices(g), chi - 1))
}

/// Smallest size a mitigating set can have before any search: the `χ' - 1`
/// colour classes left behind hold at most `⌊n/2⌋` edges each.
fn counting_lower_bound(g: &Graph, target: usize) -> usize {
    g.m().saturating_sub(target * (g.n() / 2)).max(1)
}

/// Minimum mitigating set by increasing-size search.
///
/// At each size `k` the `k`-matchings are tried first, in lexicographic
/// order. In exact mode the remaining `k`-subsets that sort before the first
/// successful matching are then tried, so the witness is the
/// lexicographically least mitigating `k`-set either way.
pub fn es_exact(g: &Graph, mode: SearchMode) -> Result<MitigatingReport> {
    let chi = chi_prime(g)?.chi_prime;
    let target = chi - 1;
    // A balanced optimal colouring exists, and its smallest class mitigates.
    let upper = g.m() / chi;
    let lower = counting_lower_bound(g, target);
    let mut tested = 0u64;
    for k in lower..=upper {
        let mut matching_hit = None;
        for idx in MatchingIndices::new(g, k) {
            tested += 1;
            if mitigates_with(g, &idx, target) {
                matching_hit = Some(idx);
                break;
            }
        }
        let mut hit = matching_hit.clone();
        if mode == SearchMode::Exact {
            for idx in IndexCombinations::new(g.m(), k) {
                if matching_hit.as_ref().is_some_and(|m| idx >= *m) {
                    break;
                }
                if is_matching(&indices_to_edges(g, &idx)) {
                    continue;
                }
                tested += 1;
                if mitigates_with(g, &idx, target) {
                    hit = Some(idx);
                    break;
                }
            }
        }
        if let Some(idx) = hit {
            let witness = EdgeSet::from_indices(g, &idx);
            let matching_witness = matching_hit
                .map(|m| Matching::try_from(EdgeSet::from_indices(g, &m)).expect("enumerated as a matching"));
            return Ok(MitigatingReport {
                es: k,
                witness_is_matching: witness.is_matching(),
                witness,
                matching_witness,
                mode,
                subsets_tested: tested,
            });
        }
    }
    unreachable!("a smallest colour class of size {upper} always mitigates")
}

fn indices_to_edges(g: &Graph, idx: &[usize]) -> Vec<(usize, usize)> {
    idx.iter().map(|&i| g.edges()[i]).collect()
}

/// Every mitigating set of minimum size, in lexicographic order.
pub fn all_min_mitigating_sets(g: &Graph) -> Result<Vec<EdgeSet>> {
    let es = es_exact(g, SearchMode::Exact)?.es;
    let target = chi_prime(g)?.chi_prime - 1;
    Ok(IndexCombinations::new(g.m(), es)
        .filter(|idx| mitigates_with(g, idx, target))
        .map(|idx| EdgeSet::from_indices(g, &idx))
        .collect())
}

/// Exact `es`, then whether some minimum mitigating set is a matching.
///
/// Exact mode tries every `es`-sized matching before any other set of that
/// size, so the report's matching witness settles the question.
pub fn verify_conjecture1(g: &Graph) -> Result<ConjectureVerdict> {
    let report = es_exact(g, SearchMode::Exact)?;
    Ok(ConjectureVerdict {
        graph6: encode_graph6(g).unwrap_or_default(),
        es: report.es,
        has_matching_min_witness: report.matching_witness.is_some(),
        matching_witness: report.matching_witness,
    })
}

/// Whether some single edge mitigates (`es <= 1`), without a full search.
pub fn has_single_edge_mitigation(g: &Graph) -> Result<bool> {
    let target = chi_prime(g)?.chi_prime - 1;
    Ok((0..g.m()).any(|i| mitigates_with(g, &[i], target)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, parse_graph6, FamilySpec};

    fn es(spec: FamilySpec) -> usize {
        es_exact(&generate(&spec).unwrap(), SearchMode::Exact).unwrap().es
    }

    /// Minimum mitigating size by trying every subset of every size.
    fn brute_es(g: &Graph) -> usize {
        let target = chi_prime(g).unwrap().chi_prime - 1;
        (1..=g.m())
            .find(|&k| {
                IndexCombinations::new(g.m(), k).any(|idx| {
                    let h = g.without_edge_indices(&idx);
                    h.is_edgeless() && target == 0 || !h.is_edgeless() && chi_prime(&h).unwrap().chi_prime <= target
                })
            })
            .unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(es(FamilySpec::Complete(5)), 2);
        assert_eq!(es(FamilySpec::Cycle(6)), 3);
        assert_eq!(es(FamilySpec::Cycle(7)), 1);
        assert_eq!(es(FamilySpec::CompleteBipartite(3, 4)), 3);
        assert_eq!(es(FamilySpec::Path(7)), 3);
    }

    #[test]
    fn agrees_with_brute_force() {
        for s in ["Bw", "C~", "Cr", "D~{", "DQo", "E~~w", "IheA@GUAo"] {
            let g = parse_graph6(s).unwrap();
            let r = es_exact(&g, SearchMode::Exact).unwrap();
            assert_eq!(r.es, brute_es(&g), "{s}");
            assert_eq!(r.witness.len(), r.es);
            let h = g.without_edges(r.witness.edges());
            let chi = chi_prime(&g).unwrap().chi_prime;
            if !h.is_edgeless() {
                assert_eq!(chi_prime(&h).unwrap().chi_prime, chi - 1, "{s}");
            }
        }
    }

    #[test]
    fn witness_is_lexicographically_least() {
        let g = generate(&FamilySpec::TwoHamiltonian(7)).unwrap();
        let r = es_exact(&g, SearchMode::Exact).unwrap();
        let all = all_min_mitigating_sets(&g).unwrap();
        assert_eq!(r.witness, all[0]);
        let mo = es_exact(&g, SearchMode::MatchingOnly).unwrap();
        assert_eq!(mo.es, r.es);
        assert!(mo.witness.is_matching());
    }

    #[test]
    fn single_edge_graphs() {
        let k2 = generate(&FamilySpec::Path(2)).unwrap();
        let r = es_exact(&k2, SearchMode::Exact).unwrap();
        assert_eq!(r.es, 1);
        // 2K2: chi' = 1, both edges must go.
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(es_exact(&g, SearchMode::Exact).unwrap().es, 2);
        assert!(es_exact(&Graph::empty(3).unwrap(), SearchMode::Exact).is_err());
    }

    #[test]
    fn min_sets() {
        let c5 = generate(&FamilySpec::Cycle(5)).unwrap();
        let sets = all_min_mitigating_sets(&c5).unwrap();
        assert_eq!(sets.len(), 5);
        assert!(sets.iter().all(|s| s.len() == 1));

        let k4 = generate(&FamilySpec::Complete(4)).unwrap();
        let expected: Vec<EdgeSet> = IndexCombinations::new(6, 2)
            .filter(|idx| chi_prime(&k4.without_edge_indices(idx)).unwrap().chi_prime == 2)
            .map(|idx| EdgeSet::from_indices(&k4, &idx))
            .collect();
        assert_eq!(all_min_mitigating_sets(&k4).unwrap(), expected);
        assert_eq!(expected.len(), 3);
    }

    #[test]
    fn conjecture_verdicts() {
        let k5 = generate(&FamilySpec::Complete(5)).unwrap();
        let v = verify_conjecture1(&k5).unwrap();
        assert!(v.has_matching_min_witness);
        assert_eq!(v.matching_witness.unwrap().len(), 2);
        let c7 = generate(&FamilySpec::Cycle(7)).unwrap();
        assert!(verify_conjecture1(&c7).unwrap().has_matching_min_witness);
    }

    #[test]
    fn report_json_shape() {
        let c6 = generate(&FamilySpec::Cycle(6)).unwrap();
        let r = es_exact(&c6, SearchMode::MatchingOnly).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["es"], 3);
        assert_eq!(v["mode"], "matching_only");
        assert_eq!(v["witness"][0], serde_json::json!([0, 1]));
        assert!(v["matching_witness"].is_array());
        assert!(v["subsets_tested"].as_u64().unwrap() >= 1);
    }
}
