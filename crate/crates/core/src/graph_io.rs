//! DIMACS edge-format reader/writer and a Graphviz DOT emitter.
//!
//! Written documents have the shape
//!
//! ```text
//! p edge <n> <m>
//! c label <v> <text>     one per vertex with a non-empty label
//! e <u> <v>              sorted, u < v
//! ```
//!
//! with 1-based vertex numbers. The reader restores `c label` lines as
//! vertex labels and skips every other comment, so `read(write(g)) == g`.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::coloring::Coloring;
use crate::error::{ParseError, ParseErrorKind};
use crate::graph::Graph;

const LABEL_PREFIX: &str = "c label ";

pub fn write_dimacs(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "p edge {} {}", g.vertex_count(), g.edge_count()).unwrap();
    for (v, label) in g.labels().iter().enumerate() {
        if !label.is_empty() {
            writeln!(out, "{LABEL_PREFIX}{} {}", v + 1, single_line(label)).unwrap();
        }
    }
    for &(u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}

fn single_line(s: &str) -> String {
    s.replace(['\n', '\r'], " ")
}

pub fn read_dimacs(text: &str) -> Result<Graph, ParseError> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut edges = BTreeSet::new();
    let mut labels: Vec<(usize, usize, String)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let err = |kind| ParseError::new(lineno, kind);
        let line = raw.trim_end_matches('\r');
        if line.trim().is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix(LABEL_PREFIX) {
            let (num, label) = rest.split_once(' ').unwrap_or((rest, ""));
            let v: u64 = num
                .parse()
                .map_err(|_| err(ParseErrorKind::MalformedLine(line.to_string())))?;
            labels.push((lineno, v as usize, label.to_string()));
            continue;
        }
        let mut tokens = line.split_whitespace();
        match tokens.next() {
            Some("c") => continue,
            Some("p") => {
                if header.is_some() {
                    return Err(err(ParseErrorKind::DuplicateHeader));
                }
                let parts: Vec<&str> = tokens.collect();
                let parsed = match parts.as_slice() {
                    [fmt, n, m] if *fmt == "edge" || *fmt == "col" => {
                        n.parse::<usize>().ok().zip(m.parse::<usize>().ok())
                    }
                    _ => None,
                };
                let (n, m) =
                    parsed.ok_or_else(|| err(ParseErrorKind::MalformedHeader(line.to_string())))?;
                header = Some((n, m, lineno));
            }
            Some("e") => {
                let (n, _, _) = header.ok_or_else(|| err(ParseErrorKind::MissingHeader))?;
                let parts: Vec<&str> = tokens.collect();
                let ends = match parts.as_slice() {
                    [u, v] => u.parse::<u64>().ok().zip(v.parse::<u64>().ok()),
                    _ => None,
                };
                let (u, v) =
                    ends.ok_or_else(|| err(ParseErrorKind::MalformedLine(line.to_string())))?;
                for x in [u, v] {
                    if x == 0 || x > n as u64 {
                        return Err(err(ParseErrorKind::EndpointOutOfRange(x, n)));
                    }
                }
                if u == v {
                    return Err(err(ParseErrorKind::SelfLoop(u)));
                }
                let key = ((u.min(v) - 1) as usize, (u.max(v) - 1) as usize);
                if !edges.insert(key) {
                    return Err(err(ParseErrorKind::DuplicateEdge(u, v)));
                }
            }
            _ => return Err(err(ParseErrorKind::MalformedLine(line.to_string()))),
        }
    }

    let (n, m, header_line) = header.ok_or_else(|| {
        ParseError::new(text.lines().count().max(1), ParseErrorKind::MissingHeader)
    })?;
    if edges.len() != m {
        return Err(ParseError::new(
            header_line,
            ParseErrorKind::CountMismatch {
                what: "edges",
                declared: m,
                found: edges.len(),
            },
        ));
    }
    let mut names = vec![String::new(); n];
    for (lineno, v, label) in labels {
        if v == 0 || v > n {
            return Err(ParseError::new(
                lineno,
                ParseErrorKind::EndpointOutOfRange(v as u64, n),
            ));
        }
        names[v - 1] = label;
    }
    let g = Graph::from_edges(n, edges).expect("edges checked while parsing");
    Ok(g.with_labels(names).expect("one label per vertex"))
}

// X11 names, cycled when a coloring uses more colors than listed.
const PALETTE: [&str; 12] = [
    "lightblue",
    "salmon",
    "palegreen",
    "gold",
    "plum",
    "orange",
    "cyan",
    "pink",
    "khaki",
    "lightgray",
    "aquamarine",
    "tan",
];

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\")
        .replace('"', "\\\"")
        .replace('\n', "\\n")
}

/// Undirected DOT document. Vertices are named by 0-based index and carry
/// their provenance label; with a coloring, each vertex is also filled and
/// its label gets a `#color` suffix.
pub fn write_dot(g: &Graph, coloring: Option<&Coloring>) -> String {
    let mut out = String::from("graph {\n");
    for v in 0..g.vertex_count() {
        let base = if g.label(v).is_empty() {
            v.to_string()
        } else {
            g.label(v).to_string()
        };
        match coloring {
            Some(c) => {
                let col = c.color(v);
                writeln!(
                    out,
                    "  {v} [label=\"{} #{col}\", style=filled, fillcolor={}];",
                    escape(&base),
                    PALETTE[col % PALETTE.len()]
                )
                .unwrap();
            }
            None => writeln!(out, "  {v} [label=\"{}\"];", escape(&base)).unwrap(),
        }
    }
    for &(u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}
