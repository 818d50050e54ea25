//! Mutable colour table used while building colourings: for each vertex and
//! colour, the neighbour reached by the edge of that colour (if any).

use crate::graph::Graph;

use super::EdgeColoring;

pub(crate) const NONE: usize = usize::MAX;

pub(crate) struct ColorTable<'g> {
    pub g: &'g Graph,
    pub k: usize,
    at: Vec<usize>,
    edge_color: Vec<usize>,
}

impl<'g> ColorTable<'g> {
    pub fn new(g: &'g Graph, k: usize) -> Self {
        ColorTable {
            g,
            k,
            at: vec![NONE; g.n() * k],
            edge_color: vec![NONE; g.m()],
        }
    }

    pub fn from_coloring(col: &'g EdgeColoring) -> Self {
        let g = col.host();
        let mut t = Self::new(g, col.k());
        for (i, &(u, v)) in g.edges().iter().enumerate() {
            t.set(u, v, col.colors()[i]);
            debug_assert_eq!(t.edge_color[i], col.colors()[i]);
        }
        t
    }

    /// Neighbour of `v` along colour `c`.
    #[inline]
    pub fn via(&self, v: usize, c: usize) -> Option<usize> {
        let w = self.at[v * self.k + c];
        (w != NONE).then_some(w)
    }

    #[inline]
    pub fn is_free(&self, v: usize, c: usize) -> bool {
        self.at[v * self.k + c] == NONE
    }

    pub fn free_color(&self, v: usize) -> Option<usize> {
        (0..self.k).find(|&c| self.is_free(v, c))
    }

    pub fn color(&self, u: usize, v: usize) -> Option<usize> {
        let i = self.g.edge_index(u, v).expect("edge of host");
        let c = self.edge_color[i];
        (c != NONE).then_some(c)
    }

    pub fn set(&mut self, u: usize, v: usize, c: usize) {
        debug_assert!(self.is_free(u, c) && self.is_free(v, c), "colour {c} clash at {u}-{v}");
        let i = self.g.edge_index(u, v).expect("edge of host");
        debug_assert_eq!(self.edge_color[i], NONE);
        self.edge_color[i] = c;
        self.at[u * self.k + c] = v;
        self.at[v * self.k + c] = u;
    }

    pub fn unset(&mut self, u: usize, v: usize) -> Option<usize> {
        let i = self.g.edge_index(u, v).expect("edge of host");
        let c = self.edge_color[i];
        if c == NONE {
            return None;
        }
        self.edge_color[i] = NONE;
        self.at[u * self.k + c] = NONE;
        self.at[v * self.k + c] = NONE;
        Some(c)
    }

    /// Maximal path from `u` whose edges alternate `first, second, first, ...`.
    pub fn alternating_path(&self, u: usize, first: usize, second: usize) -> Vec<usize> {
        let mut path = vec![u];
        let mut cur = u;
        let mut want = first;
        while let Some(next) = self.via(cur, want) {
            if next == u {
                break;
            }
            path.push(next);
            cur = next;
            want = if want == first { second } else { first };
        }
        path
    }

    /// Exchanges colours `a` and `b` on the consecutive edges of `path`.
    pub fn swap_along(&mut self, path: &[usize], a: usize, b: usize) {
        let colors: Vec<usize> = path
            .windows(2)
            .map(|w| self.unset(w[0], w[1]).expect("path edge coloured"))
            .collect();
        for (w, c) in path.windows(2).zip(colors) {
            let flipped = if c == a { b } else { a };
            self.set(w[0], w[1], flipped);
        }
    }

    pub fn into_colors(self) -> Vec<usize> {
        assert!(self.edge_color.iter().all(|&c| c != NONE), "colour table incomplete");
        self.edge_color
    }
}
