use super::table::ColorTable;
use super::EdgeColoring;
use crate::error::{precondition, Error, Result};
use crate::graph::Graph;

/// Proper `Δ`-edge-colouring of a bipartite graph.
///
/// Edges are inserted in canonical order. For `uv`, take `a` free at `u`
/// and `b` free at `v`; if `a` is also free at `v` use it, otherwise swap
/// `a`/`b` along the alternating path leaving `v` on `a`. In a bipartite
/// graph that path cannot reach `u`, so `a` becomes free at both ends.
pub fn konig_coloring(g: &Graph) -> Result<EdgeColoring> {
    if g.is_edgeless() {
        return Err(Error::Edgeless);
    }
    if !g.is_bipartite() {
        return Err(precondition("König colouring needs a bipartite graph"));
    }
    let delta = g.max_degree();
    let mut table = ColorTable::new(g, delta);
    for &(u, v) in g.edges() {
        let a = table.free_color(u).expect("uncoloured edge leaves a free colour");
        if !table.is_free(v, a) {
            let b = table.free_color(v).expect("uncoloured edge leaves a free colour");
            let path = table.alternating_path(v, a, b);
            debug_assert!(!path.contains(&u));
            table.swap_along(&path, a, b);
        }
        table.set(u, v, a);
    }
    EdgeColoring::new(g.clone(), table.into_colors(), delta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, FamilySpec};

    #[test]
    fn examples() {
        let k33 = generate(&FamilySpec::CompleteBipartite(3, 3)).unwrap();
        let col = konig_coloring(&k33).unwrap();
        assert!(col.is_proper());
        assert_eq!(col.class_sizes(), vec![3, 3, 3]);

        let p4 = generate(&FamilySpec::Path(4)).unwrap();
        let col = konig_coloring(&p4).unwrap();
        assert!(col.is_proper());
        assert_eq!(col.k(), 2);

        let k2 = generate(&FamilySpec::Path(2)).unwrap();
        assert_eq!(konig_coloring(&k2).unwrap().k(), 1);
    }

    #[test]
    fn rejects_odd_cycles() {
        let c5 = generate(&FamilySpec::Cycle(5)).unwrap();
        assert!(matches!(konig_coloring(&c5), Err(Error::Precondition(_))));
        assert_eq!(konig_coloring(&Graph::empty(2).unwrap()), Err(Error::Edgeless));
    }
}
