//! Simple undirected graphs on vertices `0..n`, edge sets, and the
//! structural helpers (core, components, bipartition) the colouring code
//! leans on.

mod edgelist;
pub(crate) mod enumerate;
mod family;
mod graph6;
mod matching;

pub use edgelist::{encode_edge_list, parse_edge_list};
pub use enumerate::{enumerate_edge_subsets, enumerate_matchings, EdgeSubsets, Matchings};
pub use family::{generate, round_robin_hamiltonian_cycles, FamilySpec};
pub use graph6::{encode_graph6, parse_graph6};
pub use matching::{max_matching, max_matching_brute_force};

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An undirected edge stored with `u < v`.
pub type Edge = (usize, usize);

#[inline]
pub fn canonical_edge(u: usize, v: usize) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Immutable simple graph. Edges are kept sorted in canonical order, which
/// is the order every enumeration and witness in this crate refers to.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph, rejecting loops and out-of-range endpoints. Repeated
    /// pairs (in either orientation) collapse to one edge.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = Edge>,
    {
        if n == 0 {
            return Err(Error::InvalidGraph("a graph needs at least one vertex".into()));
        }
        let mut list = Vec::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
            }
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!("edge {u}-{v} out of range for n={n}")));
            }
            list.push(canonical_edge(u, v));
        }
        list.sort_unstable();
        list.dedup();
        Ok(Self::from_sorted(n, list))
    }

    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Result<Self> {
        Self::new(n, std::iter::empty())
    }

    fn from_sorted(n: usize, edges: Vec<Edge>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Position of `{u, v}` in the canonical edge list.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&canonical_edge(u, v)).ok()
    }

    pub fn is_edgeless(&self) -> bool {
        self.edges.is_empty()
    }

    pub(crate) fn require_edges(&self) -> Result<()> {
        if self.edges.is_empty() {
            Err(Error::Edgeless)
        } else {
            Ok(())
        }
    }

    /// `Some(r)` when every vertex has degree `r`.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.degree(0);
        self.adj.iter().all(|a| a.len() == d).then_some(d)
    }

    pub fn is_complete(&self) -> bool {
        self.m() == self.n * (self.n - 1) / 2
    }

    /// Same vertex set, with the given edges removed. Edges not present are
    /// ignored.
    pub fn without_edges(&self, removed: &[Edge]) -> Graph {
        let mut drop: Vec<Edge> = removed.iter().map(|&(u, v)| canonical_edge(u, v)).collect();
        drop.sort_unstable();
        let edges = self
            .edges
            .iter()
            .copied()
            .filter(|e| drop.binary_search(e).is_err())
            .collect();
        Self::from_sorted(self.n, edges)
    }

    /// Same vertex set, keeping only the edges whose index is not flagged.
    pub(crate) fn without_edge_indices(&self, removed: &[usize]) -> Graph {
        let mut keep = vec![true; self.m()];
        for &i in removed {
            keep[i] = false;
        }
        let edges = self
            .edges
            .iter()
            .zip(&keep)
            .filter_map(|(&e, &k)| k.then_some(e))
            .collect();
        Self::from_sorted(self.n, edges)
    }

    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if self.has_edge(u, v) {
            return Err(Error::InvalidGraph(format!("{u}-{v} is already an edge")));
        }
        Graph::new(self.n, self.edges.iter().copied().chain([(u, v)]))
    }

    /// Induced subgraph on `vertices` (relabelled `0..k` in the given order)
    /// together with the map back to the host labels.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> (Graph, Vec<usize>) {
        let mut local = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let mut edges = Vec::new();
        for &(u, v) in &self.edges {
            if local[u] != usize::MAX && local[v] != usize::MAX {
                edges.push(canonical_edge(local[u], local[v]));
            }
        }
        edges.sort_unstable();
        (Self::from_sorted(vertices.len().max(1), edges), vertices.to_vec())
    }

    pub fn complement(&self) -> Graph {
        let mut edges = Vec::with_capacity(self.n * (self.n - 1) / 2 - self.m());
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    edges.push((u, v));
                }
            }
        }
        Self::from_sorted(self.n, edges)
    }

    /// `self` on `0..n`, `other` shifted to `n..n+n'`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)))
            .collect();
        Self::from_sorted(self.n + other.n, edges)
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Two-colouring of the vertices (`false`/`true` sides) if one exists.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut side: Vec<Option<bool>> = vec![None; self.n];
        for s in 0..self.n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let su = side[u].unwrap();
                for &w in &self.adj[u] {
                    match side[w] {
                        None => {
                            side[w] = Some(!su);
                            queue.push_back(w);
                        }
                        Some(sw) if sw == su => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(Option::unwrap).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// A forest has `m = n - c` for `c` components.
    pub fn is_forest(&self) -> bool {
        self.m() + self.components().len() == self.n
    }

    /// Vertices attaining the maximum degree.
    pub fn max_degree_vertices(&self) -> Vec<usize> {
        let d = self.max_degree();
        (0..self.n).filter(|&v| self.degree(v) == d).collect()
    }

    /// Subgraph induced by the maximum-degree vertices.
    pub fn core(&self) -> CoreGraph {
        let (graph, vertex_map) = self.induced_subgraph(&self.max_degree_vertices());
        CoreGraph { graph, vertex_map }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

/// The core together with the labels its vertices carry in the host.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoreGraph {
    pub graph: Graph,
    pub vertex_map: Vec<usize>,
}

/// Subgraph induced by all vertices of maximum degree.
pub fn core(g: &Graph) -> CoreGraph {
    g.core()
}

/// Sorted, duplicate-free set of edges of some host graph.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeSet(Vec<Edge>);

impl EdgeSet {
    pub fn new(host: &Graph, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let mut list: Vec<Edge> = edges.into_iter().map(|(u, v)| canonical_edge(u, v)).collect();
        list.sort_unstable();
        let before = list.len();
        list.dedup();
        if list.len() != before {
            return Err(Error::InvalidGraph("duplicate edge in edge set".into()));
        }
        if let Some(&(u, v)) = list.iter().find(|&&(u, v)| !host.has_edge(u, v)) {
            return Err(Error::InvalidGraph(format!("{u}-{v} is not an edge of the host graph")));
        }
        Ok(EdgeSet(list))
    }

    pub(crate) fn from_indices(host: &Graph, indices: &[usize]) -> Self {
        let mut list: Vec<Edge> = indices.iter().map(|&i| host.edges()[i]).collect();
        list.sort_unstable();
        EdgeSet(list)
    }

    pub fn edges(&self) -> &[Edge] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, e: Edge) -> bool {
        self.0.binary_search(&canonical_edge(e.0, e.1)).is_ok()
    }

    pub fn is_matching(&self) -> bool {
        is_matching(&self.0)
    }

    /// Indices of the members in the host's canonical edge list.
    pub fn indices(&self, host: &Graph) -> Vec<usize> {
        self.0
            .iter()
            .map(|&(u, v)| host.edge_index(u, v).expect("edge set member missing from host"))
            .collect()
    }
}

pub fn is_matching(edges: &[Edge]) -> bool {
    let mut used = std::collections::HashSet::new();
    edges.iter().all(|&(u, v)| used.insert(u) && used.insert(v))
}

/// An edge set whose members are pairwise vertex-disjoint.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Matching(EdgeSet);

impl Matching {
    pub fn new(host: &Graph, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        Self::try_from(EdgeSet::new(host, edges)?)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn edges(&self) -> &[Edge] {
        self.0.edges()
    }

    pub fn as_edge_set(&self) -> &EdgeSet {
        &self.0
    }

    pub fn into_edge_set(self) -> EdgeSet {
        self.0
    }

    /// Vertices covered by the matching.
    pub fn covers(&self, v: usize) -> bool {
        self.edges().iter().any(|&(a, b)| a == v || b == v)
    }
}

impl TryFrom<EdgeSet> for Matching {
    type Error = Error;

    fn try_from(set: EdgeSet) -> Result<Self> {
        if set.is_matching() {
            Ok(Matching(set))
        } else {
            Err(Error::InvalidGraph("edges are not pairwise disjoint".into()))
        }
    }
}
