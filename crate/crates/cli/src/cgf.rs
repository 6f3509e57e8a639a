//! The colored graph file format.
//!
//! ```text
//! cgf 1
//! # optional comment lines
//! n 3
//! k 2
//! colors 1 2 1
//! edge 1 2
//! edge 2 3
//! ```
//!
//! Vertices are 1-indexed. Edges are written with `u < v` in lexicographic
//! order. Full-line comments are kept and rendered right after the header;
//! trailing comments after `#` on other lines are dropped.

use std::fmt;

use balcolor::graph::{Coloring, ColoredGraph, Graph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    /// 1-indexed line number, or 0 when the problem is the document as a
    /// whole.
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.line == 0 {
            write!(f, "{}", self.message)
        } else {
            write!(f, "line {}: {}", self.line, self.message)
        }
    }
}

impl std::error::Error for ParseError {}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { line, message: message.into() })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CgfDocument {
    /// Comment text without the leading `#` and one following space.
    pub comments: Vec<String>,
    pub n: usize,
    pub k: usize,
    /// 1-indexed colors.
    pub colors: Vec<usize>,
    /// 1-indexed edges with `u < v`, sorted.
    pub edges: Vec<(usize, usize)>,
}

impl CgfDocument {
    pub fn from_colored_graph(cg: &ColoredGraph) -> Self {
        CgfDocument {
            comments: Vec::new(),
            n: cg.n(),
            k: cg.k(),
            colors: cg.coloring().colors().to_vec(),
            edges: cg.graph().edges().into_iter().map(|(u, v)| (u + 1, v + 1)).collect(),
        }
    }

    pub fn to_colored_graph(&self) -> ColoredGraph {
        let edges: Vec<(usize, usize)> = self.edges.iter().map(|&(u, v)| (u - 1, v - 1)).collect();
        let g = Graph::from_edges(self.n, &edges).expect("document was validated");
        let c = Coloring::new(self.colors.clone(), self.k).expect("document was validated");
        ColoredGraph::new(g, c).expect("document was validated")
    }

    pub fn render(&self) -> String {
        let mut out = String::from("cgf 1\n");
        for c in &self.comments {
            if c.is_empty() {
                out.push_str("#\n");
            } else {
                out.push_str(&format!("# {c}\n"));
            }
        }
        out.push_str(&format!("n {}\nk {}\ncolors", self.n, self.k));
        for c in &self.colors {
            out.push_str(&format!(" {c}"));
        }
        out.push('\n');
        for (u, v) in &self.edges {
            out.push_str(&format!("edge {u} {v}\n"));
        }
        out
    }
}

pub fn render_cgf(cg: &ColoredGraph) -> String {
    CgfDocument::from_colored_graph(cg).render()
}

fn number(line: usize, tok: &str, what: &str) -> Result<usize, ParseError> {
    tok.parse::<usize>()
        .or_else(|_| err(line, format!("expected a nonnegative integer for {what}, found `{tok}`")))
}

/// Keyword line `key value`.
fn keyed(line: usize, toks: &[&str], key: &str) -> Result<usize, ParseError> {
    match toks {
        [k, v] if *k == key => number(line, v, key),
        _ => err(line, format!("expected `{key} <int>`")),
    }
}

pub fn parse_document(text: &str) -> Result<CgfDocument, ParseError> {
    let mut comments = Vec::new();
    let mut body: Vec<(usize, Vec<&str>)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let trimmed = raw.trim();
        if let Some(rest) = trimmed.strip_prefix('#') {
            comments.push(rest.strip_prefix(' ').unwrap_or(rest).to_string());
            continue;
        }
        let content = trimmed.split('#').next().unwrap_or("");
        let toks: Vec<&str> = content.split_whitespace().collect();
        if !toks.is_empty() {
            body.push((i + 1, toks));
        }
    }
    let mut lines = body.into_iter();
    let mut next = |what: &str| lines.next().map_or_else(|| err(0, format!("missing {what} line")), Ok);

    let (ln, toks) = next("header")?;
    if toks != ["cgf", "1"] {
        return err(ln, "expected header `cgf 1`");
    }
    let (ln, toks) = next("`n`")?;
    let n = keyed(ln, &toks, "n")?;
    if n == 0 {
        return err(ln, "graph needs at least one vertex");
    }
    let (ln, toks) = next("`k`")?;
    let k = keyed(ln, &toks, "k")?;
    if k == 0 {
        return err(ln, "palette needs at least one color");
    }
    let (ln, toks) = next("`colors`")?;
    if toks.first() != Some(&"colors") {
        return err(ln, "expected `colors <c1> ... <cn>`");
    }
    if toks.len() - 1 != n {
        return err(ln, format!("expected {n} colors, found {}", toks.len() - 1));
    }
    let mut colors = Vec::with_capacity(n);
    for t in &toks[1..] {
        let c = number(ln, t, "a color")?;
        if c == 0 || c > k {
            return err(ln, format!("color {c} outside 1..{k}"));
        }
        colors.push(c);
    }
    let mut edges = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for (ln, toks) in lines {
        let (a, b) = match toks.as_slice() {
            ["edge", a, b] => (number(ln, a, "a vertex")?, number(ln, b, "a vertex")?),
            _ => return err(ln, "expected `edge <u> <v>`"),
        };
        for v in [a, b] {
            if v == 0 || v > n {
                return err(ln, format!("vertex {v} outside 1..{n}"));
            }
        }
        if a == b {
            return err(ln, "self-loop");
        }
        let e = (a.min(b), a.max(b));
        if !seen.insert(e) {
            return err(ln, format!("duplicate edge {} {}", e.0, e.1));
        }
        edges.push(e);
    }
    edges.sort_unstable();
    Ok(CgfDocument { comments, n, k, colors, edges })
}

pub fn parse_cgf(text: &str) -> Result<ColoredGraph, ParseError> {
    parse_document(text).map(|d| d.to_colored_graph())
}
