use super::table::ColorTable;
use super::EdgeColoring;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Misra–Gries fan recolouring: a proper colouring with at most `Δ + 1`
/// colours. The colouring is declared with `k = Δ + 1`.
pub fn vizing_coloring(g: &Graph) -> Result<EdgeColoring> {
    if g.is_edgeless() {
        return Err(Error::Edgeless);
    }
    let k = g.max_degree() + 1;
    let mut table = ColorTable::new(g, k);
    for &(u, v) in g.edges() {
        color_edge(&mut table, u, v);
    }
    EdgeColoring::new(g.clone(), table.into_colors(), k)
}

/// Maximal fan at `u` starting with the uncoloured edge `uv`.
fn maximal_fan(t: &ColorTable, u: usize, v: usize) -> Vec<usize> {
    let mut fan = vec![v];
    let mut in_fan = vec![false; t.g.n()];
    in_fan[v] = true;
    loop {
        let last = *fan.last().unwrap();
        let next =
            t.g.neighbors(u)
                .iter()
                .copied()
                .find(|&w| !in_fan[w] && t.color(u, w).is_some_and(|c| t.is_free(last, c)));
        match next {
            Some(w) => {
                in_fan[w] = true;
                fan.push(w);
            }
            None => return fan,
        }
    }
}

fn color_edge(t: &mut ColorTable, u: usize, v: usize) {
    let fan = maximal_fan(t, u, v);
    let c = t.free_color(u).expect("u has an uncoloured edge");
    let last = *fan.last().unwrap();
    let d = t.free_color(last).expect("fan end has a free colour");

    // Invert the cd-path leaving u (on d, since c is free at u).
    if c != d {
        let path = t.alternating_path(u, d, c);
        if path.len() > 1 {
            t.swap_along(&path, c, d);
        }
    }

    // Shortest prefix that is still a fan and ends at a vertex missing d.
    let mut w = None;
    for i in 0..fan.len() {
        if i > 0 {
            let ci = t.color(u, fan[i]);
            if !ci.is_some_and(|ci| t.is_free(fan[i - 1], ci)) {
                break;
            }
        }
        if t.is_free(fan[i], d) {
            w = Some(i);
            break;
        }
    }
    let w = w.expect("Misra–Gries guarantees a usable fan prefix");

    // Rotate the prefix: edge u-fan[i] takes the colour of u-fan[i+1].
    for i in 0..w {
        let next = t.unset(u, fan[i + 1]).expect("fan edge coloured");
        t.set(u, fan[i], next);
    }
    t.set(u, fan[w], d);
}
