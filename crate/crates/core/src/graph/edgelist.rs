//! Plain edge-list text: first line `n`, then one `u v` pair per line.

use super::Graph;
use crate::error::{Error, Result};

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut offset = 0usize;
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for line in text.split_inclusive('\n') {
        let line_offset = offset;
        offset += line.len();
        let content = line.trim();
        if content.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let parse = |tok: &str| {
            tok.parse::<usize>().map_err(|_| Error::Parse {
                offset: line_offset + line.find(tok).unwrap_or(0),
                reason: format!("expected a non-negative integer, found {tok:?}"),
            })
        };
        match n {
            None => {
                if tokens.len() != 1 {
                    return Err(Error::Parse {
                        offset: line_offset,
                        reason: "first line must hold the vertex count".into(),
                    });
                }
                n = Some(parse(tokens[0])?);
            }
            Some(order) => {
                if tokens.len() != 2 {
                    return Err(Error::Parse {
                        offset: line_offset,
                        reason: format!("expected `u v`, found {content:?}"),
                    });
                }
                let (u, v) = (parse(tokens[0])?, parse(tokens[1])?);
                if u == v {
                    return Err(Error::Parse {
                        offset: line_offset,
                        reason: format!("loop at vertex {u}"),
                    });
                }
                if u >= order || v >= order {
                    return Err(Error::Parse {
                        offset: line_offset,
                        reason: format!("edge {u} {v} out of range for n={order}"),
                    });
                }
                edges.push((u, v));
            }
        }
    }
    let n = n.ok_or_else(|| Error::Parse {
        offset: 0,
        reason: "missing vertex count".into(),
    })?;
    Graph::new(n, edges)
}

pub fn encode_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let k3 = parse_edge_list("3\n0 1\n1 2\n0 2").unwrap();
        assert_eq!(k3.edges(), &[(0, 1), (0, 2), (1, 2)]);
        let k2 = parse_edge_list("2\n0 1").unwrap();
        assert_eq!(k2.m(), 1);
        assert!(parse_edge_list("3\n0 0").is_err());
    }

    #[test]
    fn errors_and_dedup() {
        assert!(parse_edge_list("3\n0 3").is_err());
        assert!(parse_edge_list("3\n0 x").is_err());
        assert!(parse_edge_list("").is_err());
        assert!(parse_edge_list("3\n0 1 2").is_err());
        let g = parse_edge_list("3\n0 1\n1 0\n\n").unwrap();
        assert_eq!(g.m(), 1);
        assert_eq!(parse_edge_list(&encode_edge_list(&g)).unwrap(), g);
    }
}
