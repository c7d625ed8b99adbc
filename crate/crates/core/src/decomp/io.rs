use super::TreeDecomposition;
use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;
use std::fmt::Write;

/// Parses the PACE `.td` format; bag ids and vertices are 1-based, bag 1 becomes the root.
pub fn parse_td(text: &str) -> Result<TreeDecomposition> {
    let mut header: Option<(usize, usize)> = None;
    let mut bags: Vec<Option<VertexSet>> = Vec::new();
    let mut edges = Vec::new();
    let num = |t: &str, line: usize| -> Result<usize> {
        t.parse().map_err(|_| Error::input_at(line, format!("bad number '{t}'")))
    };
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let toks: Vec<&str> = raw.split_whitespace().collect();
        match toks.first().copied() {
            None | Some("c") => continue,
            Some("s") => {
                if toks.len() != 5 || toks[1] != "td" || header.is_some() {
                    return Err(Error::input_at(line, "expected a single 's td <bags> <width+1> <n>'"));
                }
                let nb = num(toks[2], line)?;
                header = Some((nb, num(toks[4], line)?));
                bags = vec![None; nb];
            }
            Some("b") => {
                let (nb, n) = header.ok_or_else(|| Error::input_at(line, "bag before header"))?;
                let id = num(toks.get(1).copied().unwrap_or(""), line)?;
                if id == 0 || id > nb {
                    return Err(Error::input_at(line, format!("bag id {id} out of range")));
                }
                if bags[id - 1].is_some() {
                    return Err(Error::input_at(line, format!("bag {id} given twice")));
                }
                let mut bag = VertexSet::new();
                for t in &toks[2..] {
                    let v = num(t, line)?;
                    if v == 0 || v > n {
                        return Err(Error::input_at(line, format!("vertex {v} out of range")));
                    }
                    bag.insert(v - 1);
                }
                bags[id - 1] = Some(bag);
            }
            Some(_) => {
                let (nb, _) = header.ok_or_else(|| Error::input_at(line, "tree edge before header"))?;
                if toks.len() != 2 {
                    return Err(Error::input_at(line, "expected '<bag> <bag>'"));
                }
                let (a, b) = (num(toks[0], line)?, num(toks[1], line)?);
                if a == 0 || b == 0 || a > nb || b > nb {
                    return Err(Error::input_at(line, format!("tree edge {a} {b} out of range")));
                }
                edges.push((a - 1, b - 1));
            }
        }
    }
    header.ok_or_else(|| Error::input("missing 's td' header"))?;
    let bags = bags
        .into_iter()
        .enumerate()
        .map(|(i, b)| b.ok_or_else(|| Error::input(format!("bag {} missing", i + 1))))
        .collect::<Result<Vec<_>>>()?;
    Ok(TreeDecomposition::new(bags, edges, 0))
}

/// Writes PACE `.td`; node ids are renumbered so that the root is bag 1.
pub fn write_td(td: &TreeDecomposition, n: usize) -> String {
    let k = td.len();
    let r = td.root();
    let id = |t: usize| if t == r { 1 } else if t < r { t + 2 } else { t + 1 };
    let mut s = format!("s td {} {} {}\n", k, td.max_bag_size(), n);
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by_key(|&t| id(t));
    for t in order {
        let _ = write!(s, "b {}", id(t));
        for v in td.bag(t) {
            let _ = write!(s, " {}", v + 1);
        }
        s.push('\n');
    }
    for &(a, b) in td.tree_edges() {
        let _ = writeln!(s, "{} {}", id(a), id(b));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip() {
        let text = "c x\ns td 2 2 3\nb 1 1 2\nb 2 2 3\n1 2\n";
        let td = parse_td(text).unwrap();
        assert_eq!(td.len(), 2);
        assert_eq!(td.root(), 0);
        assert_eq!(write_td(&td, 3), "s td 2 2 3\nb 1 1 2\nb 2 2 3\n1 2\n");
        let re = td.rerooted(1);
        let back = parse_td(&write_td(&re, 3)).unwrap();
        assert_eq!(back.bag(0), td.bag(1));
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_td("s td 1 1 2\nb 1 3\n"), Err(Error::Input { line: Some(2), .. })));
        assert!(parse_td("s td 2 1 2\nb 1 1\n").is_err());
        assert!(matches!(parse_td("b 1 1\n"), Err(Error::Input { line: Some(1), .. })));
        assert!(matches!(parse_td("s td 1 1 1\nb 1 1\n1 4\n"), Err(Error::Input { line: Some(3), .. })));
    }
}
