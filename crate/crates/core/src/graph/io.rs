//! Text formats: a plain edge list and graph6.
//!
//! Edge list: the vertex count on the first line, then one `u v` pair per
//! line, 0-indexed and whitespace separated. Blank lines are ignored.
//!
//! Lines starting with `#` are comments in both formats.
//!
//! graph6: `N(n)` followed by the upper triangle of the adjacency matrix in
//! column order `x(0,1) x(0,2) x(1,2) x(0,3) ...`, packed six bits per byte
//! (most significant first) with 63 added to every byte.

use std::fmt::Write as _;
use std::str::FromStr;

use super::{Graph, MAX_VERTICES};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GraphFormat {
    EdgeList,
    Graph6,
}

impl FromStr for GraphFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edge-list" | "edgelist" => Ok(GraphFormat::EdgeList),
            "graph6" | "g6" => Ok(GraphFormat::Graph6),
            other => Err(Error::InvalidVector(format!("unknown graph format `{other}`"))),
        }
    }
}

impl GraphFormat {
    /// Guesses the format: an edge list starts with a decimal vertex count.
    pub fn detect(text: &str) -> GraphFormat {
        let first = text.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#')).unwrap_or("");
        if first.starts_with(">>graph6<<") || first.parse::<usize>().is_err() {
            GraphFormat::Graph6
        } else {
            GraphFormat::EdgeList
        }
    }
}

pub fn parse_graph(text: &str, format: GraphFormat) -> Result<Graph> {
    // Blank out comments so edge-list line numbers stay accurate.
    let text: Vec<&str> = text.lines().map(|l| if l.trim_start().starts_with('#') { "" } else { l }).collect();
    let text = text.join("\n");
    match format {
        GraphFormat::EdgeList => parse_edge_list(&text),
        GraphFormat::Graph6 => parse_graph6(&text),
    }
}

pub fn format_graph(g: &Graph, format: GraphFormat) -> String {
    match format {
        GraphFormat::EdgeList => format_edge_list(g),
        GraphFormat::Graph6 => format_graph6(g),
    }
}

fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty());
    let (line, header) = lines.next().ok_or(Error::EdgeList { line: 1, message: "missing vertex count".into() })?;
    let n: usize =
        header.parse().map_err(|_| Error::EdgeList { line, message: format!("malformed vertex count `{header}`") })?;
    let mut g = Graph::empty(n)?;
    for (line, text) in lines {
        let fields: Vec<&str> = text.split_whitespace().collect();
        let [u, v] = fields[..] else {
            return Err(Error::EdgeList { line, message: format!("expected `u v`, got `{text}`") });
        };
        let parse = |s: &str| {
            s.parse::<usize>().map_err(|_| Error::EdgeList { line, message: format!("malformed vertex `{s}`") })
        };
        g.add_edge(parse(u)?, parse(v)?)?;
    }
    Ok(g)
}

fn format_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.vertex_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim();
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::Graph6(format!("byte {b:#04x} outside the printable range 63..=126")));
    }
    let (n, data) = match bytes {
        [] => return Err(Error::Graph6("empty input".into())),
        [126, 126, ..] => return Err(Error::Graph6(format!("more than {MAX_VERTICES} vertices"))),
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(Error::Graph6("truncated vertex count".into()));
            }
            let n = rest[..3].iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
            (n, &rest[3..])
        }
        [first, rest @ ..] => ((first - 63) as usize, rest),
    };
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
    }
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if data.len() != expected {
        return Err(Error::Graph6(format!(
            "length mismatch: {n} vertices need {expected} data bytes, found {}",
            data.len()
        )));
    }
    let bit = |k: usize| (data[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if bit(k) {
                g.add_edge(u, v)?;
            }
            k += 1;
        }
    }
    Ok(g)
}

fn format_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.extend([126, (n >> 12 & 63) as u8 + 63, (n >> 6 & 63) as u8 + 63, (n & 63) as u8 + 63]);
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}
