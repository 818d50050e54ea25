use super::table::ColorTable;
use super::{chi_prime, solve_exact, EdgeColoring};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Optimal colouring whose class sizes differ by at most one.
///
/// Starts from the exact witness and repeatedly moves one edge from a
/// largest class `a` to a smallest class `b` by swapping an `(a, b)`
/// component that holds more `a`-edges than `b`-edges. If no such component
/// is found, the exact solver is rerun with per-class size caps.
pub fn balanced_coloring(g: &Graph) -> Result<EdgeColoring> {
    let verdict = chi_prime(g)?;
    let k = verdict.chi_prime;
    let mut col = verdict.witness;
    loop {
        let sizes = col.class_sizes();
        let (a, &max) = sizes
            .iter()
            .enumerate()
            .max_by_key(|&(i, s)| (*s, std::cmp::Reverse(i)))
            .unwrap();
        let (b, &min) = sizes.iter().enumerate().min_by_key(|&(i, s)| (*s, i)).unwrap();
        if max - min <= 1 {
            return Ok(col);
        }
        match rebalance_step(&col, a, b) {
            Some(next) => col = next,
            None => return capped_fallback(g, k),
        }
    }
}

fn rebalance_step(col: &EdgeColoring, a: usize, b: usize) -> Option<EdgeColoring> {
    let mut table = ColorTable::from_coloring(col);
    for (&(x, _), &c) in col.host().edges().iter().zip(col.colors()) {
        if c != a {
            continue;
        }
        let forward = table.alternating_path(x, a, b);
        if forward.len() > 1
            && table.via(*forward.last().unwrap(), if forward.len().is_multiple_of(2) { b } else { a }) == Some(x)
        {
            // even cycle through x: balanced, no gain
            continue;
        }
        let backward = table.alternating_path(x, b, a);
        let mut seq: Vec<usize> = backward.into_iter().rev().collect();
        seq.extend_from_slice(&forward[1..]);
        let mut count_a = 0i64;
        for w in seq.windows(2) {
            if table.color(w[0], w[1]) == Some(a) {
                count_a += 1;
            } else {
                count_a -= 1;
            }
        }
        if count_a > 0 {
            table.swap_along(&seq, a, b);
            let colors = table.into_colors();
            return Some(EdgeColoring::new(col.host().clone(), colors, col.k()).expect("same palette"));
        }
    }
    None
}

fn capped_fallback(g: &Graph, k: usize) -> Result<EdgeColoring> {
    let m = g.m();
    let (q, r) = (m / k, m % k);
    let caps: Vec<usize> = (0..k).map(|c| if c < r { q + 1 } else { q }).collect();
    let colors = solve_exact(g, k, Some(&caps))
        .ok_or_else(|| Error::Precondition("no balanced colouring found (this should not happen)".into()))?;
    EdgeColoring::new(g.clone(), colors, k)
}

/// A `χ'`-colouring with a colour class of size one, if any exists.
pub fn singleton_class_coloring(g: &Graph) -> Result<Option<EdgeColoring>> {
    let verdict = chi_prime(g)?;
    let target = verdict.chi_prime - 1;
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        // g \ e must have maximum degree at most chi' - 1
        let over = g
            .degrees()
            .iter()
            .enumerate()
            .any(|(w, &d)| d - usize::from(w == u || w == v) > target);
        if over {
            continue;
        }
        let h = g.without_edge_indices(&[i]);
        if let Some(mut colors) = solve_exact(&h, target, None) {
            colors.insert(i, target);
            return Ok(Some(EdgeColoring::new(g.clone(), colors, verdict.chi_prime)?));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, FamilySpec};

    fn sorted_sizes(col: &EdgeColoring) -> Vec<usize> {
        let mut s = col.class_sizes();
        s.sort_unstable();
        s
    }

    #[test]
    fn examples() {
        let k4 = generate(&FamilySpec::Complete(4)).unwrap();
        let col = balanced_coloring(&k4).unwrap();
        assert!(col.is_proper());
        assert_eq!(sorted_sizes(&col), vec![2, 2, 2]);

        let p4 = generate(&FamilySpec::Path(4)).unwrap();
        assert_eq!(sorted_sizes(&balanced_coloring(&p4).unwrap()), vec![1, 2]);

        let c6 = generate(&FamilySpec::Cycle(6)).unwrap();
        assert_eq!(sorted_sizes(&balanced_coloring(&c6).unwrap()), vec![3, 3]);
    }

    #[test]
    fn needs_rebalancing() {
        // Star plus a long tail: any greedy start is lopsided.
        let g = Graph::new(8, [(0, 1), (0, 2), (0, 3), (3, 4), (4, 5), (5, 6), (6, 7)]).unwrap();
        let col = balanced_coloring(&g).unwrap();
        assert!(col.is_proper());
        let s = sorted_sizes(&col);
        assert!(s[s.len() - 1] - s[0] <= 1);
        let fallback = capped_fallback(&g, 3).unwrap();
        assert!(fallback.is_proper());
        assert_eq!(sorted_sizes(&fallback), vec![2, 2, 3]);
    }

    #[test]
    fn singleton_examples() {
        let c5 = generate(&FamilySpec::Cycle(5)).unwrap();
        let col = singleton_class_coloring(&c5).unwrap().unwrap();
        assert!(col.is_proper());
        assert!(col.class_sizes().contains(&1));

        let k4 = generate(&FamilySpec::Complete(4)).unwrap();
        assert!(singleton_class_coloring(&k4).unwrap().is_none());

        let k2 = generate(&FamilySpec::Path(2)).unwrap();
        let col = singleton_class_coloring(&k2).unwrap().unwrap();
        assert_eq!(col.class_sizes(), vec![1]);
    }
}
