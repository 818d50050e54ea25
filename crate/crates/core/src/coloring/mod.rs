//! Proper edge colourings: the exact chromatic index, König and Vizing
//! constructions, Kempe chains and balanced colourings.

mod balanced;
mod exact;
mod kempe;
mod konig;
pub(crate) mod table;
mod vizing;

pub use balanced::{balanced_coloring, singleton_class_coloring};
pub use exact::is_k_edge_colorable;
pub use kempe::{kempe_path, kempe_swap, KempePath};
pub use konig::konig_coloring;
pub use vizing::vizing_coloring;

pub(crate) use exact::solve as solve_exact;

use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::error::{precondition, Error, Result};
use crate::graph::{Edge, Graph};

/// A colouring of every edge of `host` with colours `0..k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeColoring {
    host: Graph,
    colors: Vec<usize>,
    k: usize,
}

impl EdgeColoring {
    /// Wraps a colour vector indexed like `host.edges()`. Only the shape and
    /// colour range are checked; use [`EdgeColoring::is_proper`] for the rest.
    pub fn new(host: Graph, colors: Vec<usize>, k: usize) -> Result<Self> {
        if colors.len() != host.m() {
            return Err(precondition(format!(
                "colour vector has {} entries for {} edges",
                colors.len(),
                host.m()
            )));
        }
        if let Some(&c) = colors.iter().find(|&&c| c >= k) {
            return Err(precondition(format!("colour {c} outside 0..{k}")));
        }
        Ok(EdgeColoring { host, colors, k })
    }

    pub fn host(&self) -> &Graph {
        &self.host
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn color_of(&self, u: usize, v: usize) -> Option<usize> {
        self.host.edge_index(u, v).map(|i| self.colors[i])
    }

    /// Colour classes `C_0..C_{k-1}`, each in canonical edge order.
    pub fn classes(&self) -> Vec<Vec<Edge>> {
        let mut classes = vec![Vec::new(); self.k];
        for (&e, &c) in self.host.edges().iter().zip(&self.colors) {
            classes[c].push(e);
        }
        classes
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.k];
        for &c in &self.colors {
            sizes[c] += 1;
        }
        sizes
    }

    /// Colours present at `v`, ascending.
    pub fn colors_at(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .host
            .neighbors(v)
            .iter()
            .map(|&w| self.color_of(v, w).expect("neighbour edge"))
            .collect();
        out.sort_unstable();
        out
    }

    /// Colours in `0..k` absent at `v`.
    pub fn missing_at(&self, v: usize) -> Vec<usize> {
        let present = self.colors_at(v);
        (0..self.k).filter(|c| present.binary_search(c).is_err()).collect()
    }

    /// Adjacent edges always differ and every colour lies in `0..k`.
    pub fn is_proper(&self) -> bool {
        if self.colors.len() != self.host.m() || self.colors.iter().any(|&c| c >= self.k) {
            return false;
        }
        (0..self.host.n()).all(|v| {
            let cs = self.colors_at(v);
            cs.windows(2).all(|w| w[0] != w[1])
        })
    }

    pub fn colors_used(&self) -> usize {
        self.class_sizes().iter().filter(|&&s| s > 0).count()
    }

    /// `{"k": k, "colors": [[u, v, c], ...]}` in canonical edge order.
    pub fn to_json(&self) -> serde_json::Value {
        let colors: Vec<[usize; 3]> = self
            .host
            .edges()
            .iter()
            .zip(&self.colors)
            .map(|(&(u, v), &c)| [u, v, c])
            .collect();
        json!({ "k": self.k, "colors": colors })
    }

    pub fn from_json(host: Graph, value: &serde_json::Value) -> Result<Self> {
        #[derive(Deserialize)]
        struct Raw {
            k: usize,
            colors: Vec<[usize; 3]>,
        }
        let raw: Raw =
            serde_json::from_value(value.clone()).map_err(|e| precondition(format!("bad colouring JSON: {e}")))?;
        let mut colors = vec![usize::MAX; host.m()];
        for [u, v, c] in raw.colors {
            let i = host
                .edge_index(u, v)
                .ok_or_else(|| precondition(format!("{u}-{v} is not an edge")))?;
            colors[i] = c;
        }
        if colors.contains(&usize::MAX) {
            return Err(precondition("colouring leaves an edge uncoloured"));
        }
        EdgeColoring::new(host, colors, raw.k)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum GraphClass {
    Class1,
    Class2,
}

impl GraphClass {
    pub fn number(self) -> u8 {
        match self {
            GraphClass::Class1 => 1,
            GraphClass::Class2 => 2,
        }
    }
}

/// Which step of the pipeline settled the class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DecidedBy {
    Bipartite,
    Overfull,
    CoreForest,
    CoreUnicyclic,
    ExactSearch,
}

impl DecidedBy {
    pub fn as_str(self) -> &'static str {
        match self {
            DecidedBy::Bipartite => "bipartite",
            DecidedBy::Overfull => "overfull",
            DecidedBy::CoreForest => "core_forest",
            DecidedBy::CoreUnicyclic => "core_unicyclic",
            DecidedBy::ExactSearch => "exact_search",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassVerdict {
    pub class: GraphClass,
    pub chi_prime: usize,
    pub witness: EdgeColoring,
    pub decided_by: DecidedBy,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ChiOptions {
    /// Use the structural shortcuts before falling back to exact search.
    pub fast_paths: bool,
}

impl Default for ChiOptions {
    fn default() -> Self {
        ChiOptions { fast_paths: true }
    }
}

/// Core components are all trees or unicyclic, and not all of them cycles.
fn core_is_sparse_not_cycles(g: &Graph) -> bool {
    let core = g.core().graph;
    let mut all_cycles = true;
    for comp in core.components() {
        let nc = comp.len();
        let mc: usize = comp.iter().map(|&v| core.degree(v)).sum::<usize>() / 2;
        if mc > nc {
            return false;
        }
        let is_cycle = mc == nc && comp.iter().all(|&v| core.degree(v) == 2);
        all_cycles &= is_cycle;
    }
    !all_cycles
}

/// Chromatic index of a connected graph with maximum degree `delta`.
fn classify_connected(h: &Graph, delta: usize, opts: ChiOptions) -> (GraphClass, Vec<usize>, DecidedBy) {
    let exact_class1 = |tag| {
        let colors = solve_exact(h, delta, None).expect("structural test guarantees a delta-colouring");
        (GraphClass::Class1, colors, tag)
    };
    if opts.fast_paths {
        if h.is_bipartite() {
            let col = konig_coloring(h).expect("bipartite");
            return (GraphClass::Class1, col.colors, DecidedBy::Bipartite);
        }
        let n = h.n();
        if n % 2 == 1 && 2 * h.m() > (n - 1) * delta {
            let col = vizing_coloring(h).expect("has edges");
            return (GraphClass::Class2, col.colors, DecidedBy::Overfull);
        }
        let core = h.core().graph;
        if core.is_forest() {
            return exact_class1(DecidedBy::CoreForest);
        }
        if core_is_sparse_not_cycles(h) {
            return exact_class1(DecidedBy::CoreUnicyclic);
        }
    }
    match solve_exact(h, delta, None) {
        Some(colors) => (GraphClass::Class1, colors, DecidedBy::ExactSearch),
        None => {
            let col = vizing_coloring(h).expect("has edges");
            (GraphClass::Class2, col.colors, DecidedBy::ExactSearch)
        }
    }
}

/// Exact chromatic index with a witness colouring using exactly that many
/// colours. Disconnected graphs are handled per component.
pub fn chi_prime(g: &Graph) -> Result<ClassVerdict> {
    chi_prime_with(g, ChiOptions::default())
}

pub fn chi_prime_with(g: &Graph, opts: ChiOptions) -> Result<ClassVerdict> {
    if g.is_edgeless() {
        return Err(Error::Edgeless);
    }
    let delta = g.max_degree();
    let mut colors = vec![usize::MAX; g.m()];
    let mut class = GraphClass::Class1;
    let mut class2_tag: Option<DecidedBy> = None;
    let mut class1_tag: Option<DecidedBy> = None;
    for comp in g.components() {
        if comp.len() < 2 {
            continue;
        }
        let (h, map) = g.induced_subgraph(&comp);
        let (local_class, local_colors) = if h.max_degree() < delta {
            let col = vizing_coloring(&h).expect("component has edges");
            (GraphClass::Class1, col.colors)
        } else {
            let (c, cols, tag) = classify_connected(&h, delta, opts);
            if c == GraphClass::Class2 {
                class2_tag.get_or_insert(tag);
            } else {
                class1_tag = Some(class1_tag.map_or(tag, |t| t.max(tag)));
            }
            (c, cols)
        };
        if local_class == GraphClass::Class2 {
            class = GraphClass::Class2;
        }
        for (&(u, v), &c) in h.edges().iter().zip(&local_colors) {
            let i = g.edge_index(map[u], map[v]).expect("component edge");
            colors[i] = c;
        }
    }
    let chi = match class {
        GraphClass::Class1 => delta,
        GraphClass::Class2 => delta + 1,
    };
    let decided_by = match class {
        GraphClass::Class2 => class2_tag.expect("class 2 component"),
        GraphClass::Class1 => class1_tag.expect("max-degree component"),
    };
    let witness = EdgeColoring::new(g.clone(), colors, chi)?;
    debug_assert!(witness.is_proper());
    Ok(ClassVerdict {
        class,
        chi_prime: chi,
        witness,
        decided_by,
    })
}

/// A proper colouring with exactly `k` colours if one exists.
pub fn edge_color_with(g: &Graph, k: usize) -> Option<EdgeColoring> {
    solve_exact(g, k, None).map(|colors| EdgeColoring::new(g.clone(), colors, k).expect("solver output in range"))
}

/// Colouring of `K_n`, `n` odd, in which colour `i` is the unique colour
/// missing at vertex `i`: edge `{i, j}` gets `(i + j) * (n + 1) / 2 mod n`.
pub fn odd_complete_coloring(n: usize) -> Result<EdgeColoring> {
    if n.is_multiple_of(2) || n < 3 {
        return Err(precondition(format!("needs odd n >= 3, got {n}")));
    }
    let g = Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))?;
    let half = n.div_ceil(2);
    let colors = g.edges().iter().map(|&(i, j)| ((i + j) * half) % n).collect();
    EdgeColoring::new(g, colors, n)
}
