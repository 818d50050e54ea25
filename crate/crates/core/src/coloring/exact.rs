//! Exact k-edge-colourability by backtracking.
//!
//! Edges are picked most-constrained first (fewest colours still free at
//! both ends), ties broken by descending `deg(u) + deg(v)` and then by edge
//! index. Each edge takes the lowest feasible colour, and a colour never
//! used so far is only tried once per node (the lowest unused one), which
//! removes colour-permutation symmetry.

use crate::graph::Graph;

const MAX_COLORS: usize = 64;

struct Solver<'a> {
    g: &'a Graph,
    k: usize,
    full: u64,
    rank: Vec<usize>,
    used: Vec<u64>,
    color: Vec<usize>,
    caps: Option<&'a [usize]>,
    counts: Vec<usize>,
}

const UNCOLORED: usize = usize::MAX;

impl Solver<'_> {
    fn available(&self, e: usize) -> u64 {
        let (u, v) = self.g.edges()[e];
        let mut free = !(self.used[u] | self.used[v]) & self.full;
        if let Some(caps) = self.caps {
            for (c, (&cap, &count)) in caps.iter().zip(&self.counts).enumerate() {
                if count >= cap {
                    free &= !(1u64 << c);
                }
            }
        }
        free
    }

    fn pick(&self) -> Option<(usize, u64)> {
        let mut best: Option<(usize, u64, u32)> = None;
        for e in 0..self.g.m() {
            if self.color[e] != UNCOLORED {
                continue;
            }
            let avail = self.available(e);
            let count = avail.count_ones();
            let better = match best {
                None => true,
                Some((b, _, bc)) => count < bc || (count == bc && self.rank[e] < self.rank[b]),
            };
            if better {
                best = Some((e, avail, count));
                if count == 0 {
                    break;
                }
            }
        }
        best.map(|(e, a, _)| (e, a))
    }

    fn search(&mut self, colored: usize, distinct: usize) -> bool {
        if colored == self.g.m() {
            return true;
        }
        let (e, avail) = self.pick().expect("uncoloured edge remains");
        if avail == 0 {
            return false;
        }
        let (u, v) = self.g.edges()[e];
        let mut bits = avail;
        while bits != 0 {
            let c = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            if self.caps.is_none() && c > distinct {
                break;
            }
            self.color[e] = c;
            self.used[u] |= 1 << c;
            self.used[v] |= 1 << c;
            self.counts[c] += 1;
            if self.search(colored + 1, distinct.max(c + 1)) {
                return true;
            }
            self.counts[c] -= 1;
            self.used[u] &= !(1 << c);
            self.used[v] &= !(1 << c);
            self.color[e] = UNCOLORED;
        }
        false
    }
}

/// Counting obstructions that rule out a `k`-edge-colouring without search.
fn obviously_infeasible(g: &Graph, k: usize) -> bool {
    if g.max_degree() > k {
        return true;
    }
    for comp in g.components() {
        let nc = comp.len();
        let mc: usize = comp.iter().map(|&v| g.degree(v)).sum::<usize>() / 2;
        if mc > k * (nc / 2) {
            return true;
        }
    }
    false
}

/// A proper colouring of `g` with colours `0..k`, if one exists. `caps`
/// optionally bounds the size of each colour class.
pub(crate) fn solve(g: &Graph, k: usize, caps: Option<&[usize]>) -> Option<Vec<usize>> {
    if g.m() == 0 {
        return Some(Vec::new());
    }
    if k == 0 || k > MAX_COLORS || obviously_infeasible(g, k) {
        return None;
    }
    if let Some(caps) = caps {
        if caps.len() != k || caps.iter().sum::<usize>() < g.m() {
            return None;
        }
    }
    let mut order: Vec<usize> = (0..g.m()).collect();
    order.sort_by_key(|&e| {
        let (u, v) = g.edges()[e];
        (std::cmp::Reverse(g.degree(u) + g.degree(v)), e)
    });
    let mut rank = vec![0; g.m()];
    for (r, &e) in order.iter().enumerate() {
        rank[e] = r;
    }
    let mut solver = Solver {
        g,
        k,
        full: if k == 64 { u64::MAX } else { (1u64 << k) - 1 },
        rank,
        used: vec![0; g.n()],
        color: vec![UNCOLORED; g.m()],
        caps,
        counts: vec![0; k],
    };
    if solver.search(0, 0) {
        debug_assert!(solver.k == k);
        Some(solver.color)
    } else {
        None
    }
}

/// Whether `g` has a proper edge colouring with `k` colours.
pub fn is_k_edge_colorable(g: &Graph, k: usize) -> bool {
    solve(g, k, None).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_graph6;

    #[test]
    fn small_decisions() {
        let k3 = parse_graph6("Bw").unwrap();
        assert!(!is_k_edge_colorable(&k3, 2));
        assert!(is_k_edge_colorable(&k3, 3));
        let k4 = parse_graph6("C~").unwrap();
        assert!(is_k_edge_colorable(&k4, 3));
        let petersen = parse_graph6("IheA@GUAo").unwrap();
        assert!(!is_k_edge_colorable(&petersen, 3));
        assert!(is_k_edge_colorable(&petersen, 4));
        assert!(is_k_edge_colorable(&Graph::empty(3).unwrap(), 0));
    }

    #[test]
    fn capped_classes() {
        let k4 = parse_graph6("C~").unwrap();
        assert!(solve(&k4, 3, Some(&[2, 2, 2])).is_some());
        assert!(solve(&k4, 3, Some(&[3, 2, 1])).is_none());
        let p4 = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let c = solve(&p4, 2, Some(&[1, 2])).unwrap();
        assert_eq!(c.iter().filter(|&&x| x == 0).count(), 1);
    }
}
