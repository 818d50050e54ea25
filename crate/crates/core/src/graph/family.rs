//! Named graph families and the `name(arg, ...)` spec grammar used on the
//! command line. Arguments are non-negative integers or nested specs, e.g.
//! `disjoint_union(complete(3),complete(3))`.

use std::fmt;
use std::str::FromStr;

use super::{canonical_edge, Edge, Graph};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    /// `K_n` with the edge `{0, 1}` removed.
    CompleteMinusEdge(usize),
    /// Complement of `(n-3)/2` disjoint `K_2` plus one `K_{1,2}` (odd `n`).
    CompMatchingsPlusClaw(usize),
    /// `blocks` disjoint copies of `K_{2m+1}`, `isolated` extra vertices, and
    /// a matching of `size` edges laid between distinct blocks (then onto
    /// the isolated vertices if the blocks run out).
    CliqueUnionPlusMatching {
        m: usize,
        blocks: usize,
        isolated: usize,
        size: usize,
    },
    /// Union of the first two cycles of the round-robin Hamiltonian
    /// decomposition of `K_n`, odd `n >= 5`.
    TwoHamiltonian(usize),
    /// A regular, non-complete base graph with the non-edge `{u, v}` added.
    RegularPlusEdge {
        base: Box<FamilySpec>,
        u: usize,
        v: usize,
    },
    DisjointUnion(Box<FamilySpec>, Box<FamilySpec>),
    Complement(Box<FamilySpec>),
}

pub const FAMILY_NAMES: &[&str] = &[
    "path",
    "cycle",
    "complete",
    "complete_bipartite",
    "complete_minus_edge",
    "comp_matchings_plus_claw",
    "clique_union_plus_matching",
    "two_hamiltonian",
    "regular_plus_edge",
    "disjoint_union",
    "complement",
];

impl FamilySpec {
    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::Path(_) => "path",
            FamilySpec::Cycle(_) => "cycle",
            FamilySpec::Complete(_) => "complete",
            FamilySpec::CompleteBipartite(..) => "complete_bipartite",
            FamilySpec::CompleteMinusEdge(_) => "complete_minus_edge",
            FamilySpec::CompMatchingsPlusClaw(_) => "comp_matchings_plus_claw",
            FamilySpec::CliqueUnionPlusMatching { .. } => "clique_union_plus_matching",
            FamilySpec::TwoHamiltonian(_) => "two_hamiltonian",
            FamilySpec::RegularPlusEdge { .. } => "regular_plus_edge",
            FamilySpec::DisjointUnion(..) => "disjoint_union",
            FamilySpec::Complement(_) => "complement",
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = self.name();
        match self {
            FamilySpec::Path(n)
            | FamilySpec::Cycle(n)
            | FamilySpec::Complete(n)
            | FamilySpec::CompleteMinusEdge(n)
            | FamilySpec::CompMatchingsPlusClaw(n)
            | FamilySpec::TwoHamiltonian(n) => write!(f, "{name}({n})"),
            FamilySpec::CompleteBipartite(a, b) => write!(f, "{name}({a},{b})"),
            FamilySpec::CliqueUnionPlusMatching {
                m,
                blocks,
                isolated,
                size,
            } => {
                write!(f, "{name}({m},{blocks},{isolated},{size})")
            }
            FamilySpec::RegularPlusEdge { base, u, v } => write!(f, "{name}({base},{u},{v})"),
            FamilySpec::DisjointUnion(a, b) => write!(f, "{name}({a},{b})"),
            FamilySpec::Complement(a) => write!(f, "{name}({a})"),
        }
    }
}

#[derive(Debug)]
enum Arg {
    Int(usize),
    Spec(FamilySpec),
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, reason: impl Into<String>) -> Error {
        Error::InvalidFamily(format!("{} (at offset {} in {:?})", reason.into(), self.pos, self.src))
    }

    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn take_while(&mut self, pred: impl Fn(char) -> bool) -> &'a str {
        self.skip_ws();
        let start = self.pos;
        while let Some(c) = self.src[self.pos..].chars().next() {
            if !pred(c) {
                break;
            }
            self.pos += c.len_utf8();
        }
        &self.src[start..self.pos]
    }

    fn arg(&mut self) -> Result<Arg> {
        self.skip_ws();
        if self.src[self.pos..].starts_with(|c: char| c.is_ascii_digit()) {
            let digits = self.take_while(|c| c.is_ascii_digit());
            digits
                .parse()
                .map(Arg::Int)
                .map_err(|_| self.err("integer out of range"))
        } else {
            self.spec().map(Arg::Spec)
        }
    }

    fn spec(&mut self) -> Result<FamilySpec> {
        let name = self.take_while(|c| c.is_ascii_alphanumeric() || c == '_');
        if name.is_empty() {
            return Err(self.err("expected a family name"));
        }
        if !FAMILY_NAMES.contains(&name) {
            return Err(Error::InvalidFamily(format!(
                "unknown family {name:?}; available: {}",
                FAMILY_NAMES.join(", ")
            )));
        }
        if !self.eat('(') {
            return Err(self.err("expected '('"));
        }
        let mut args = Vec::new();
        if !self.eat(')') {
            loop {
                args.push(self.arg()?);
                if self.eat(')') {
                    break;
                }
                if !self.eat(',') {
                    return Err(self.err("expected ',' or ')'"));
                }
            }
        }
        build(name, args)
    }
}

fn build(name: &str, args: Vec<Arg>) -> Result<FamilySpec> {
    let shape: Vec<bool> = args.iter().map(|a| matches!(a, Arg::Int(_))).collect();
    let bad = || Error::InvalidFamily(format!("wrong arguments for {name}"));
    let mut int_list = Vec::new();
    let mut spec_list = Vec::new();
    for a in args {
        match a {
            Arg::Int(v) => int_list.push(v),
            Arg::Spec(s) => spec_list.push(Box::new(s)),
        }
    }
    let mut ints = int_list.into_iter();
    let mut int = || ints.next().ok_or_else(bad);
    let mut specs = spec_list.into_iter();
    let spec = match (name, shape.as_slice()) {
        ("path", [true]) => FamilySpec::Path(int()?),
        ("cycle", [true]) => FamilySpec::Cycle(int()?),
        ("complete", [true]) => FamilySpec::Complete(int()?),
        ("complete_bipartite", [true, true]) => FamilySpec::CompleteBipartite(int()?, int()?),
        ("complete_minus_edge", [true]) => FamilySpec::CompleteMinusEdge(int()?),
        ("comp_matchings_plus_claw", [true]) => FamilySpec::CompMatchingsPlusClaw(int()?),
        ("clique_union_plus_matching", [true, true, true, true]) => FamilySpec::CliqueUnionPlusMatching {
            m: int()?,
            blocks: int()?,
            isolated: int()?,
            size: int()?,
        },
        ("two_hamiltonian", [true]) => FamilySpec::TwoHamiltonian(int()?),
        ("regular_plus_edge", [false, true, true]) => FamilySpec::RegularPlusEdge {
            base: specs.next().ok_or_else(bad)?,
            u: int()?,
            v: int()?,
        },
        ("disjoint_union", [false, false]) => {
            FamilySpec::DisjointUnion(specs.next().ok_or_else(bad)?, specs.next().ok_or_else(bad)?)
        }
        ("complement", [false]) => FamilySpec::Complement(specs.next().ok_or_else(bad)?),
        _ => return Err(bad()),
    };
    Ok(spec)
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// Parses and validates a spec string; the graph is built to check the
    /// parameters, so invalid instances are rejected here.
    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser { src: s, pos: 0 };
        let spec = p.spec()?;
        p.skip_ws();
        if p.pos != s.len() {
            return Err(p.err("trailing input"));
        }
        generate(&spec)?;
        Ok(spec)
    }
}

fn invalid(spec: &FamilySpec, why: &str) -> Error {
    Error::InvalidFamily(format!("{spec}: {why}"))
}

fn complete_edges(n: usize) -> impl Iterator<Item = Edge> {
    (0..n).flat_map(move |u| (u + 1..n).map(move |v| (u, v)))
}

/// The `t` Hamiltonian cycles of `K_{2t+1}` from the zigzag (Walecki)
/// construction: vertex `2t` is the hub, and cycle `i` follows
/// `i, i+1, i-1, i+2, i-2, ..., i+t` (mod `2t`) before returning to the hub.
pub fn round_robin_hamiltonian_cycles(n: usize) -> Result<Vec<Vec<usize>>> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(Error::InvalidFamily(format!(
            "Hamiltonian decomposition needs odd n >= 3, got {n}"
        )));
    }
    let t = (n - 1) / 2;
    let ring = 2 * t;
    let cycles = (0..t)
        .map(|i| {
            let mut cycle = Vec::with_capacity(n);
            cycle.push(ring);
            cycle.push(i);
            for j in 1..t {
                cycle.push((i + j) % ring);
                cycle.push((i + ring - j) % ring);
            }
            cycle.push((i + t) % ring);
            cycle
        })
        .collect();
    Ok(cycles)
}

fn cycle_edges(cycle: &[usize]) -> impl Iterator<Item = Edge> + '_ {
    (0..cycle.len()).map(move |i| canonical_edge(cycle[i], cycle[(i + 1) % cycle.len()]))
}

/// Builds the graph a spec describes.
pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    match spec {
        FamilySpec::Path(n) => {
            if *n < 1 {
                return Err(invalid(spec, "needs n >= 1"));
            }
            Graph::new(*n, (1..*n).map(|i| (i - 1, i)))
        }
        FamilySpec::Cycle(n) => {
            if *n < 3 {
                return Err(invalid(spec, "needs n >= 3"));
            }
            Graph::new(*n, (0..*n).map(|i| (i, (i + 1) % n)))
        }
        FamilySpec::Complete(n) => {
            if *n < 1 {
                return Err(invalid(spec, "needs n >= 1"));
            }
            Graph::new(*n, complete_edges(*n))
        }
        FamilySpec::CompleteBipartite(a, b) => {
            if *a < 1 || *b < 1 {
                return Err(invalid(spec, "both sides need at least one vertex"));
            }
            Graph::new(a + b, (0..*a).flat_map(|u| (0..*b).map(move |v| (u, a + v))))
        }
        FamilySpec::CompleteMinusEdge(n) => {
            if *n < 2 {
                return Err(invalid(spec, "needs n >= 2"));
            }
            Graph::new(*n, complete_edges(*n).filter(|&e| e != (0, 1)))
        }
        FamilySpec::CompMatchingsPlusClaw(n) => {
            if *n < 3 || n % 2 == 0 {
                return Err(invalid(spec, "needs odd n >= 3"));
            }
            let mut removed: Vec<Edge> = (0..(n - 3) / 2).map(|i| (2 * i, 2 * i + 1)).collect();
            let centre = n - 3;
            removed.push((centre, n - 2));
            removed.push((centre, n - 1));
            Ok(Graph::new(*n, complete_edges(*n))?.without_edges(&removed))
        }
        FamilySpec::CliqueUnionPlusMatching {
            m,
            blocks,
            isolated,
            size,
        } => {
            if *m < 1 || *blocks < 2 {
                return Err(invalid(spec, "needs m >= 1 and at least two blocks"));
            }
            let k = 2 * m + 1;
            let n = k * blocks + isolated;
            let mut edges: Vec<Edge> = Vec::new();
            for b in 0..*blocks {
                edges.extend(complete_edges(k).map(|(u, v)| (u + b * k, v + b * k)));
            }
            let mut next_free: Vec<usize> = vec![0; *blocks];
            let pairs: Vec<(usize, usize)> = (0..*blocks)
                .flat_map(|a| (a + 1..*blocks).map(move |b| (a, b)))
                .collect();
            let mut added = 0;
            let mut stalled = 0;
            let mut p = 0;
            while added < *size && stalled < pairs.len() {
                let (a, b) = pairs[p % pairs.len()];
                p += 1;
                if next_free[a] < k && next_free[b] < k {
                    edges.push((a * k + next_free[a], b * k + next_free[b]));
                    next_free[a] += 1;
                    next_free[b] += 1;
                    added += 1;
                    stalled = 0;
                } else {
                    stalled += 1;
                }
            }
            let mut extra = k * blocks;
            for (b, free) in next_free.iter_mut().enumerate() {
                while added < *size && *free < k && extra < n {
                    edges.push((b * k + *free, extra));
                    *free += 1;
                    extra += 1;
                    added += 1;
                }
            }
            if added < *size {
                return Err(invalid(spec, "matching does not fit"));
            }
            Graph::new(n, edges)
        }
        FamilySpec::TwoHamiltonian(n) => {
            if *n < 5 || n % 2 == 0 {
                return Err(invalid(spec, "needs odd n >= 5"));
            }
            let cycles = round_robin_hamiltonian_cycles(*n)?;
            Graph::new(*n, cycle_edges(&cycles[0]).chain(cycle_edges(&cycles[1])))
        }
        FamilySpec::RegularPlusEdge { base, u, v } => {
            let g = generate(base)?;
            if g.regular_degree().is_none() {
                return Err(invalid(spec, "base graph is not regular"));
            }
            if g.is_complete() {
                return Err(invalid(spec, "base graph is complete"));
            }
            if u == v || *u >= g.n() || *v >= g.n() || g.has_edge(*u, *v) {
                return Err(invalid(spec, "added pair must be a non-edge of the base"));
            }
            g.with_edge(*u, *v)
        }
        FamilySpec::DisjointUnion(a, b) => Ok(generate(a)?.disjoint_union(&generate(b)?)),
        FamilySpec::Complement(a) => Ok(generate(a)?.complement()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_examples() {
        let k5 = generate(&"complete(5)".parse().unwrap()).unwrap();
        assert_eq!(k5.m(), 10);

        let g = generate(&FamilySpec::CompMatchingsPlusClaw(5)).unwrap();
        let mut degs = g.degrees();
        degs.sort_unstable_by(|a, b| b.cmp(a));
        assert_eq!(degs, vec![3, 3, 3, 3, 2]);

        let th5 = generate(&FamilySpec::TwoHamiltonian(5)).unwrap();
        assert_eq!(th5, k5);
    }

    #[test]
    fn round_robin_decomposes_complete_graphs() {
        for n in [3, 5, 7, 9, 11] {
            let cycles = round_robin_hamiltonian_cycles(n).unwrap();
            let mut all: Vec<Edge> = cycles.iter().flat_map(|c| cycle_edges(c)).collect();
            for c in &cycles {
                let mut vs = c.clone();
                vs.sort_unstable();
                assert_eq!(vs, (0..n).collect::<Vec<_>>());
            }
            all.sort_unstable();
            let expected: Vec<Edge> = complete_edges(n).collect();
            assert_eq!(all, expected, "n={n}");
        }
    }

    #[test]
    fn two_hamiltonian_is_four_regular() {
        for n in [7, 9, 11] {
            let g = generate(&FamilySpec::TwoHamiltonian(n)).unwrap();
            assert_eq!(g.regular_degree(), Some(4));
            assert!(g.is_connected());
        }
        assert!("two_hamiltonian(4)".parse::<FamilySpec>().is_err());
    }

    #[test]
    fn parse_and_display() {
        for s in [
            "complete_bipartite(3,4)",
            "disjoint_union(complete(1),complete(5))",
            "regular_plus_edge(cycle(5),0,2)",
            "complement(path(4))",
            "clique_union_plus_matching(1,3,0,4)",
        ] {
            let spec: FamilySpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
        let spaced: FamilySpec = " complete_bipartite( 3 , 4 ) ".trim().parse().unwrap();
        assert_eq!(spaced, FamilySpec::CompleteBipartite(3, 4));
        let err = "nope(3)".parse::<FamilySpec>().unwrap_err().to_string();
        assert!(err.contains("available"));
        assert!("complete(3".parse::<FamilySpec>().is_err());
        assert!("complete(3,4)".parse::<FamilySpec>().is_err());
        assert!("regular_plus_edge(complete(4),0,1)".parse::<FamilySpec>().is_err());
        assert!("regular_plus_edge(cycle(5),0,1)".parse::<FamilySpec>().is_err());
        assert!("regular_plus_edge(path(4),0,2)".parse::<FamilySpec>().is_err());
    }

    #[test]
    fn clique_union_matchings() {
        let g = generate(&"clique_union_plus_matching(1,2,0,3)".parse().unwrap()).unwrap();
        assert_eq!(g.regular_degree(), Some(3));
        let g = generate(&"clique_union_plus_matching(1,2,1,3)".parse().unwrap()).unwrap();
        assert_eq!(g.n(), 7);
        assert_eq!(g.m(), 9);
        let g = generate(&"clique_union_plus_matching(1,3,0,4)".parse().unwrap()).unwrap();
        assert_eq!(g.m(), 13);
        assert_eq!(g.max_degree(), 3);
        assert!("clique_union_plus_matching(1,2,0,4)".parse::<FamilySpec>().is_err());
    }
}
