//! graph6 and edge-list formats.

use std::fmt::Write as _;
use std::path::Path as FsPath;

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Graph6,
    EdgeList,
}

impl Format {
    pub fn parse(s: &str) -> Option<Format> {
        match s {
            "graph6" | "g6" => Some(Format::Graph6),
            "edgelist" | "edges" => Some(Format::EdgeList),
            _ => None,
        }
    }
}

const HEADER: &str = ">>graph6<<";

fn parse_err(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse { offset, message: message.into() }
}

/// Encodes the upper triangle column by column, six bits per byte.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = String::new();
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else {
        out.push(126 as char);
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + 63) as char);
        }
    }
    let mut acc = 0u8;
    let mut bits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.adjacent(i, j) as u8;
            bits += 1;
            if bits == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push(((acc << (6 - bits)) + 63) as char);
    }
    out
}

pub fn from_graph6(s: &str) -> Result<Graph> {
    let line = s.trim_end_matches(['\n', '\r']);
    let (start, body) = match line.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest.as_bytes()),
        None => (0, line.as_bytes()),
    };
    for (i, &c) in body.iter().enumerate() {
        if !(63..=126).contains(&c) {
            return Err(parse_err(start + i, format!("byte {c} is outside the graph6 range")));
        }
    }
    let Some(&first) = body.first() else {
        return Err(parse_err(start, "missing vertex count"));
    };
    let (n, mut pos) = if first < 126 {
        ((first - 63) as usize, 1)
    } else {
        if body.len() < 4 {
            return Err(parse_err(start + body.len(), "truncated vertex count"));
        }
        if body[1] == 126 {
            return Err(parse_err(start + 1, "vertex counts above 258047 are not supported"));
        }
        let n = body[1..4].iter().fold(0usize, |acc, &c| (acc << 6) | (c - 63) as usize);
        (n, 4)
    };
    if n > MAX_VERTICES {
        return Err(Error::TooLarge { n, max: MAX_VERTICES });
    }
    let needed = (n * n.saturating_sub(1) / 2).div_ceil(6);
    if body.len() - pos != needed {
        let offset = start + body.len().min(pos + needed);
        return Err(parse_err(offset, format!("expected {needed} adjacency bytes, found {}", body.len() - pos)));
    }
    let mut edges = Vec::new();
    let mut bit = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[pos + bit / 6] - 63;
            if byte >> (5 - bit % 6) & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    pos += needed;
    if bit % 6 != 0 {
        let last = body[pos - 1] - 63;
        if last & ((1 << (6 - bit % 6)) - 1) != 0 {
            return Err(parse_err(start + pos - 1, "padding bits must be zero"));
        }
    }
    Graph::from_edge_list(n, &edges)
}

/// One `u v` pair per line, 0-based, `#` starting a comment. The vertex count
/// is one more than the largest id, or the value of a `# n = N` line.
pub fn from_edge_list(s: &str) -> Result<Graph> {
    let mut edges = Vec::new();
    let mut declared: Option<usize> = None;
    let mut offset = 0;
    for line in s.split_inclusive('\n') {
        let (content, comment) = match line.find('#') {
            Some(i) => (&line[..i], Some(&line[i + 1..])),
            None => (line, None),
        };
        if let Some(c) = comment {
            if let Some(rest) = c.trim().strip_prefix("n") {
                if let Some(v) = rest.trim().strip_prefix('=') {
                    declared = Some(v.trim().parse().map_err(|_| parse_err(offset, "bad vertex count"))?);
                }
            }
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        match fields.as_slice() {
            [] => {}
            [u, v] => {
                let parse = |t: &str| t.parse::<usize>().map_err(|_| parse_err(offset, format!("`{t}` is not a vertex id")));
                edges.push((parse(u)?, parse(v)?));
            }
            _ => return Err(parse_err(offset, "expected two vertex ids")),
        }
        offset += line.len();
    }
    let n = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0).max(declared.unwrap_or(0));
    if let Some(d) = declared {
        if n > d {
            return Err(Error::VertexOutOfRange { vertex: n - 1, n: d });
        }
    }
    Graph::from_edge_list(n, &edges)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("# n = {}\n", g.n());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").expect("writing to a string");
    }
    out
}

pub fn parse_graph(s: &str, format: Format) -> Result<Graph> {
    match format {
        Format::Graph6 => from_graph6(s),
        Format::EdgeList => from_edge_list(s),
    }
}

pub fn read_graph(path: &FsPath, format: Format) -> Result<Graph> {
    let s = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_graph(&s, format)
}

pub fn format_graph(g: &Graph, format: Format) -> String {
    match format {
        Format::Graph6 => to_graph6(g) + "\n",
        Format::EdgeList => to_edge_list(g),
    }
}
