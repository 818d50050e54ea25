use super::table::ColorTable;
use super::EdgeColoring;
use crate::error::{precondition, Result};

/// The maximal `(c1, c2)`-alternating path starting at `vertices[0]` with
/// an edge of colour `c1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KempePath {
    pub vertices: Vec<usize>,
    pub c1: usize,
    pub c2: usize,
}

impl KempePath {
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn color_at(&self, i: usize) -> usize {
        if i.is_multiple_of(2) {
            self.c1
        } else {
            self.c2
        }
    }
}

/// `P_u(c1, c2)`: requires `c1` present and `c2` absent at `u`.
pub fn kempe_path(col: &EdgeColoring, u: usize, c1: usize, c2: usize) -> Result<KempePath> {
    if u >= col.host().n() || c1 >= col.k() || c2 >= col.k() || c1 == c2 {
        return Err(precondition("vertex or colours out of range"));
    }
    let present = col.colors_at(u);
    if present.binary_search(&c1).is_err() || present.binary_search(&c2).is_ok() {
        return Err(precondition(format!(
            "need colour {c1} present and {c2} absent at vertex {u}"
        )));
    }
    let table = ColorTable::from_coloring(col);
    let vertices = table.alternating_path(u, c1, c2);
    Ok(KempePath { vertices, c1, c2 })
}

/// Exchanges the two colours along `path`, which must still be the maximal
/// alternating path of `col`.
pub fn kempe_swap(col: &EdgeColoring, path: &KempePath) -> Result<EdgeColoring> {
    let g = col.host();
    let stale = || precondition("stale Kempe path: colouring changed since it was computed");
    if path.vertices.len() < 2 {
        return Err(stale());
    }
    for (i, w) in path.vertices.windows(2).enumerate() {
        if col.color_of(w[0], w[1]) != Some(path.color_at(i)) {
            return Err(stale());
        }
    }
    let start = path.vertices[0];
    let end = *path.vertices.last().unwrap();
    let start_colors = col.colors_at(start);
    let end_colors = col.colors_at(end);
    if start_colors.binary_search(&path.c2).is_ok() || end_colors.binary_search(&path.color_at(path.len())).is_ok() {
        return Err(stale());
    }
    let mut colors = col.colors().to_vec();
    for w in path.vertices.windows(2) {
        let i = g.edge_index(w[0], w[1]).expect("path edge");
        colors[i] = if colors[i] == path.c1 { path.c2 } else { path.c1 };
    }
    EdgeColoring::new(g.clone(), colors, col.k())
}
