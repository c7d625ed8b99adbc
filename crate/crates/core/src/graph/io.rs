use super::Graph;
use crate::error::{Error, Result};
use crate::weights::{Ratio, WeightMap};
use std::fmt::Write;

fn parse_id(tok: Option<&str>, n: usize, line: usize) -> Result<usize> {
    let tok = tok.ok_or_else(|| Error::input_at(line, "missing vertex id"))?;
    let v: usize = tok.parse().map_err(|_| Error::input_at(line, format!("bad vertex id '{tok}'")))?;
    if v == 0 || v > n {
        return Err(Error::input_at(line, format!("vertex {v} out of range 1..={n}")));
    }
    Ok(v - 1)
}

/// Parses the `p edge n m` / `e u v` format (1-based ids, `c` comments).
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut g = Graph::edgeless(0);
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let mut toks = raw.split_whitespace();
        match toks.next() {
            None | Some("c") => continue,
            Some("p") => {
                if header.is_some() {
                    return Err(Error::input_at(line, "second header"));
                }
                if toks.next() != Some("edge") {
                    return Err(Error::input_at(line, "expected 'p edge <n> <m>'"));
                }
                let mut num = || -> Result<usize> {
                    toks.next()
                        .and_then(|t| t.parse().ok())
                        .ok_or_else(|| Error::input_at(line, "expected 'p edge <n> <m>'"))
                };
                let (n, m) = (num()?, num()?);
                header = Some((n, m));
                g = Graph::edgeless(n);
            }
            Some("e") => {
                let (n, _) = header.ok_or_else(|| Error::input_at(line, "edge before header"))?;
                let u = parse_id(toks.next(), n, line)?;
                let v = parse_id(toks.next(), n, line)?;
                if u == v {
                    return Err(Error::input_at(line, format!("self-loop at {}", u + 1)));
                }
                if g.nbr[u].contains(v) {
                    return Err(Error::input_at(line, format!("duplicate edge {} {}", u + 1, v + 1)));
                }
                g.nbr[u].insert(v);
                g.nbr[v].insert(u);
                edges.push((u, v));
            }
            Some(t) => return Err(Error::input_at(line, format!("unknown line type '{t}'"))),
        }
    }
    let (_, m) = header.ok_or_else(|| Error::input("missing 'p edge' header"))?;
    if edges.len() != m {
        return Err(Error::input(format!("header announces {m} edges, found {}", edges.len())));
    }
    g.rebuild_lists();
    Ok(g)
}

pub fn write_graph(g: &Graph) -> String {
    let mut s = format!("p edge {} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        writeln!(s, "e {} {}", u + 1, v + 1).unwrap();
    }
    s
}

/// Parses `w <v> <num>[/<den>]` lines; vertices without a line weigh 1.
pub fn parse_weights(text: &str, n: usize) -> Result<WeightMap> {
    let mut ws = vec![Ratio::integer(1); n];
    let mut seen = vec![false; n];
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let mut toks = raw.split_whitespace();
        match toks.next() {
            None | Some("c") => continue,
            Some("w") => {
                let v = parse_id(toks.next(), n, line)?;
                if std::mem::replace(&mut seen[v], true) {
                    return Err(Error::input_at(line, format!("weight for vertex {} given twice", v + 1)));
                }
                let tok = toks.next().ok_or_else(|| Error::input_at(line, "missing weight"))?;
                ws[v] = tok.parse().map_err(|e: Error| match e {
                    Error::Input { message, .. } => Error::input_at(line, message),
                    other => other,
                })?;
            }
            Some(t) => return Err(Error::input_at(line, format!("unknown line type '{t}'"))),
        }
    }
    WeightMap::from_ratios(&ws)
}

pub fn write_weights(w: &WeightMap) -> String {
    (0..w.len()).map(|v| format!("w {} {}\n", v + 1, w.ratio(v))).collect()
}
