use crate::coloring::table::ColorTable;
use crate::coloring::{chi_prime, konig_coloring, solve_exact};
use crate::error::{precondition, Result};
use crate::graph::enumerate::MatchingIndices;
use crate::graph::{canonical_edge, Edge, EdgeSet, Graph, Matching};

use super::es::mitigates_with;

/// Rewrites a mitigating set of a bipartite graph into a mitigating matching
/// that is no larger.
///
/// Edges are peeled off one at a time and the rest is transformed
/// recursively. When the returned matching shares exactly one endpoint with
/// the peeled edge, the conflict is resolved along the path that alternates
/// between the matching and one colour class of a König colouring.
pub fn bipartite_matching_transform(g: &Graph, set: &EdgeSet) -> Result<Matching> {
    g.require_edges()?;
    if !g.is_bipartite() {
        return Err(precondition("graph is not bipartite"));
    }
    let set = EdgeSet::new(g, set.edges().iter().copied())?;
    let delta = g.max_degree();
    if g.without_edges(set.edges()).max_degree() >= delta {
        return Err(precondition("edge set is not mitigating"));
    }
    let edges = peel(g, set.edges(), delta)?;
    let out = Matching::new(g, edges)?;
    debug_assert!(g.without_edges(out.edges()).max_degree() < delta);
    Ok(out)
}

/// Matching `M` with `Δ(h \ M) < delta`, given that `set` has that property.
fn peel(h: &Graph, set: &[Edge], delta: usize) -> Result<Vec<Edge>> {
    let Some((&(x, y), rest)) = set.split_first() else {
        return Ok(Vec::new());
    };
    let smaller = h.without_edges(&[(x, y)]);
    let mut inner = peel(&smaller, rest, delta)?;
    let covered = |v: usize, m: &[Edge]| m.iter().any(|&(a, b)| a == v || b == v);
    match (covered(x, &inner), covered(y, &inner)) {
        (false, false) => {
            inner.push((x, y));
            inner.sort_unstable();
            Ok(inner)
        }
        // Both ends already lose an edge to `inner`, so `xy` is not needed.
        (true, true) => Ok(inner),
        (true, false) => resolve_one_sided(h, inner, x, y, delta),
        (false, true) => resolve_one_sided(h, inner, y, x, delta),
    }
}

/// `x` is covered by `inner`, `y` is not.
fn resolve_one_sided(h: &Graph, inner: Vec<Edge>, x: usize, y: usize, delta: usize) -> Result<Vec<Edge>> {
    let mut doubled = inner.clone();
    doubled.push(canonical_edge(x, y));
    let rest = h.without_edges(&doubled);
    let palette = delta - 1;
    let mut partner_c1 = vec![None; h.n()];
    if !rest.is_edgeless() {
        let col = konig_coloring(&rest)?;
        let at_x = col.colors_at(x);
        let c1 = (0..palette)
            .find(|c| !at_x.contains(c))
            .ok_or_else(|| precondition("no colour is missing at the shared vertex"))?;
        for (&(u, v), &c) in rest.edges().iter().zip(col.colors()) {
            if c == c1 {
                partner_c1[u] = Some(v);
                partner_c1[v] = Some(u);
            }
        }
    }
    let mut partner_m = vec![None; h.n()];
    for &(u, v) in &inner {
        partner_m[u] = Some(v);
        partner_m[v] = Some(u);
    }
    // Walk x -> y, then C1 edge, then matching edge, alternately.
    let mut path_m = vec![canonical_edge(x, y)];
    let mut path_c1 = Vec::new();
    let mut visited = vec![false; h.n()];
    visited[x] = true;
    visited[y] = true;
    let mut cur = y;
    let mut on_c1 = true;
    loop {
        let next = if on_c1 { partner_c1[cur] } else { partner_m[cur] };
        let Some(next) = next else { break };
        if visited[next] {
            break;
        }
        visited[next] = true;
        let e = canonical_edge(cur, next);
        if on_c1 {
            path_c1.push(e);
        } else {
            path_m.push(e);
        }
        cur = next;
        on_c1 = !on_c1;
    }
    let mut out: Vec<Edge> = doubled.into_iter().filter(|e| !path_m.contains(e)).collect();
    out.extend(path_c1);
    out.sort_unstable();
    Ok(out)
}

/// Rewrites a mitigating pair of adjacent edges into a mitigating
/// 2-matching, for graphs with `es = 2`.
///
/// Works in a `(χ' - 1)`-colouring of `g` minus the pair `{xy, xz}`: a colour
/// missing at `x` and present at `y` names an edge `yy'` that can swap roles
/// with `xy`. When the only missing colour at `x` is the colour of `yz`, a
/// Kempe swap first frees a second colour. Any failure of the construction
/// falls back to exhaustive search over 2-matchings.
pub fn two_matching_transform(g: &Graph, set: &EdgeSet) -> Result<Matching> {
    let verdict = chi_prime(g)?;
    let target = verdict.chi_prime - 1;
    let set = EdgeSet::new(g, set.edges().iter().copied())?;
    if set.len() != 2 {
        return Err(precondition("expected exactly two edges"));
    }
    if !mitigates_with(g, &set.indices(g), target) {
        return Err(precondition("edge pair is not mitigating"));
    }
    if set.is_matching() {
        return Matching::try_from(set);
    }
    if (0..g.m()).any(|i| mitigates_with(g, &[i], target)) {
        return Err(precondition("a single edge already mitigates, so es is not 2"));
    }
    let [(a, b), (c, d)] = [set.edges()[0], set.edges()[1]];
    let x = if a == c || a == d { a } else { b };
    let y = if a == x { b } else { a };
    let z = if c == x { d } else { c };

    let out = construct(g, target, x, y, z).filter(|m| {
        let idx: Vec<usize> = m.iter().map(|&(u, v)| g.edge_index(u, v).expect("edge")).collect();
        crate::graph::is_matching(m) && mitigates_with(g, &idx, target)
    });
    let edges = match out {
        Some(m) => m,
        None => MatchingIndices::new(g, 2)
            .find(|idx| mitigates_with(g, idx, target))
            .map(|idx| idx.iter().map(|&i| g.edges()[i]).collect())
            .ok_or_else(|| precondition("no mitigating 2-matching exists"))?,
    };
    Matching::new(g, edges)
}

/// The case analysis on a colouring of `g - {xy, xz}`.
pub(crate) fn construct(g: &Graph, target: usize, x: usize, y: usize, z: usize) -> Option<Vec<Edge>> {
    let pair = [g.edge_index(x, y)?, g.edge_index(x, z)?];
    let h = g.without_edge_indices(&pair);
    let colors = solve_exact(&h, target, None)?;
    let mut t = ColorTable::new(g, target);
    for (&(u, v), &c) in h.edges().iter().zip(&colors) {
        t.set(u, v, c);
    }
    let missing: Vec<usize> = (0..target).filter(|&c| t.is_free(x, c)).collect();
    let yz = if g.has_edge(y, z) { t.color(y, z) } else { None };
    if let Some(&c1) = missing.iter().find(|&&c| Some(c) != yz) {
        return swap_in(&t, x, y, z, c1).or_else(|| swap_in(&t, x, z, y, c1));
    }
    // Exactly one colour c1 is missing at x and it colours yz. The triangle
    // xyz forces at least two colours, so some c2 is present at x.
    let c1 = *missing.first()?;
    let c2 = (0..target).find(|&c| c != c1 && !t.is_free(x, c))?;
    let path = t.alternating_path(x, c2, c1);
    let first_hit = path.iter().position(|&v| v == y || v == z);
    match first_hit {
        None => {
            t.swap_along(&path, c1, c2);
            swap_in(&t, x, y, z, c2).or_else(|| swap_in(&t, x, z, y, c2))
        }
        Some(i) => {
            let p = path[i];
            let q = if p == y { z } else { y };
            // Recolour xp with c1 and drop pq instead: the pair is now {xq, pq}.
            t.unset(p, q);
            t.set(x, p, c1);
            let tail = t.alternating_path(q, c2, c1);
            if tail.len() > 1 {
                t.swap_along(&tail, c1, c2);
            }
            if !t.is_free(q, c2) {
                return None;
            }
            swap_in(&t, q, x, p, c2).or_else(|| swap_in(&t, q, p, x, c2))
        }
    }
}

/// With `s` the shared vertex of the removed pair `{sa, sb}` and `col`
/// missing at `s`: the edge `aa'` coloured `col` trades places with `sa`.
fn swap_in(t: &ColorTable, s: usize, a: usize, b: usize, col: usize) -> Option<Vec<Edge>> {
    let a2 = t.via(a, col)?;
    if a2 == b || a2 == s {
        return None;
    }
    let mut out = vec![canonical_edge(a, a2), canonical_edge(s, b)];
    out.sort_unstable();
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, FamilySpec};

    #[test]
    fn bipartite_examples() {
        let p5 = generate(&FamilySpec::Path(5)).unwrap();
        let set = EdgeSet::new(&p5, [(1, 2), (2, 3)]).unwrap();
        let m = bipartite_matching_transform(&p5, &set).unwrap();
        assert_eq!(m.len(), 2);
        assert_eq!(p5.without_edges(m.edges()).max_degree(), 1);

        let already = EdgeSet::new(&p5, [(0, 1), (2, 3)]).unwrap();
        let m = bipartite_matching_transform(&p5, &already).unwrap();
        assert_eq!(m.as_edge_set(), &already);

        let k33 = generate(&FamilySpec::CompleteBipartite(3, 3)).unwrap();
        let set = EdgeSet::new(&k33, [(0, 3), (1, 4), (2, 5)]).unwrap();
        assert_eq!(bipartite_matching_transform(&k33, &set).unwrap().len(), 3);

        let c5 = generate(&FamilySpec::Cycle(5)).unwrap();
        let set = EdgeSet::new(&c5, [(0, 1)]).unwrap();
        assert!(bipartite_matching_transform(&c5, &set).is_err());
        let bad = EdgeSet::new(&p5, [(0, 1)]).unwrap();
        assert!(bipartite_matching_transform(&p5, &bad).is_err());
    }

    #[test]
    fn bipartite_one_sided_case() {
        // Star K_{1,3} with a long tail: mitigating sets that overlap at the centre.
        let g = Graph::new(7, [(0, 1), (0, 2), (0, 3), (3, 4), (4, 5), (5, 6), (1, 6)]).unwrap();
        assert!(g.is_bipartite());
        let set = EdgeSet::new(&g, [(0, 1), (0, 2)]).unwrap();
        let m = bipartite_matching_transform(&g, &set).unwrap();
        assert!(m.len() <= 2);
        assert!(g.without_edges(m.edges()).max_degree() < g.max_degree());
    }

    #[test]
    fn two_matching_examples() {
        let g = generate(&FamilySpec::TwoHamiltonian(7)).unwrap();
        let target = 4;
        let mut adjacent_pairs = 0;
        for u in 0..7 {
            let nb = g.neighbors(u).to_vec();
            for i in 0..nb.len() {
                for j in i + 1..nb.len() {
                    let set = EdgeSet::new(&g, [(u, nb[i]), (u, nb[j])]).unwrap();
                    if !mitigates_with(&g, &set.indices(&g), target) {
                        continue;
                    }
                    adjacent_pairs += 1;
                    let m = two_matching_transform(&g, &set).unwrap();
                    assert_eq!(m.len(), 2);
                    assert!(mitigates_with(&g, &m.as_edge_set().indices(&g), target));
                }
            }
        }
        assert!(adjacent_pairs > 0);

        let k4 = generate(&FamilySpec::Complete(4)).unwrap();
        let set = EdgeSet::new(&k4, [(0, 1), (0, 2)]).unwrap();
        assert!(two_matching_transform(&k4, &set).is_err());
        let pm = EdgeSet::new(&k4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(two_matching_transform(&k4, &pm).unwrap().as_edge_set(), &pm);
    }

    #[test]
    fn two_matching_construction_without_fallback() {
        // Every adjacent mitigating pair in these es = 2 graphs is resolved by
        // the colouring argument alone.
        for spec in [
            FamilySpec::Complete(5),
            FamilySpec::TwoHamiltonian(7),
            FamilySpec::Complete(4),
        ] {
            let g = generate(&spec).unwrap();
            let target = chi_prime(&g).unwrap().chi_prime - 1;
            for x in 0..g.n() {
                let nb = g.neighbors(x).to_vec();
                for i in 0..nb.len() {
                    for j in i + 1..nb.len() {
                        let idx = [g.edge_index(x, nb[i]).unwrap(), g.edge_index(x, nb[j]).unwrap()];
                        if !mitigates_with(&g, &idx, target) {
                            continue;
                        }
                        let m = construct(&g, target, x, nb[i], nb[j]).expect("construction succeeds");
                        let mi: Vec<usize> = m.iter().map(|&(u, v)| g.edge_index(u, v).unwrap()).collect();
                        assert!(
                            crate::graph::is_matching(&m) && mitigates_with(&g, &mi, target),
                            "{spec}"
                        );
                    }
                }
            }
        }
    }
}
