//! Plain-text formats other than CGF. All vertices are 1-indexed.

use balcolor::balance::BalanceCertificate;
use balcolor::cdm::ColorDegreeMatrix;
use balcolor::graph::Coloring;
use balcolor::reduction::ReductionTrace;
use balcolor::switching::TwoSwitch;

use crate::cgf::{CgfDocument, ParseError};

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { line, message: message.into() })
}

/// Non-blank lines with comments stripped, tokenized, with line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let toks: Vec<&str> = raw.split('#').next().unwrap_or("").split_whitespace().collect();
        (!toks.is_empty()).then_some((i + 1, toks))
    })
}

const LETTERS: [&str; 3] = ["R", "B", "G"];

/// One row per vertex: `k` color degrees, then the vertex color. With
/// `letters` the color prints as R, B or G.
pub fn render_cdm(m: &ColorDegreeMatrix, letters: bool) -> String {
    let mut out = String::new();
    for row in m.rows() {
        let (degrees, color) = row.split_at(m.k());
        let mut cells: Vec<String> = degrees.iter().map(|d| d.to_string()).collect();
        cells.push(if letters { LETTERS[color[0] - 1].to_string() } else { color[0].to_string() });
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

/// Rows of `k + 1` integers; `k` is taken from the first row.
pub fn parse_cdm(text: &str) -> Result<ColorDegreeMatrix, ParseError> {
    let mut rows: Vec<Vec<usize>> = Vec::new();
    for (ln, toks) in content_lines(text) {
        let row = toks
            .iter()
            .map(|t| t.parse::<usize>().or_else(|_| err(ln, format!("expected a nonnegative integer, found `{t}`"))))
            .collect::<Result<Vec<_>, _>>()?;
        if row.len() < 2 {
            return err(ln, "a row needs at least one degree and a color");
        }
        if let Some(first) = rows.first() {
            if first.len() != row.len() {
                return err(ln, format!("expected {} entries, found {}", first.len(), row.len()));
            }
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return err(0, "empty matrix");
    }
    let k = rows[0].len() - 1;
    ColorDegreeMatrix::new(k, rows).or_else(|e| err(0, e.to_string()))
}

pub fn render_switches(steps: &[TwoSwitch]) -> String {
    steps.iter().map(|s| format!("{} {} {} {}\n", s.u + 1, s.x + 1, s.w + 1, s.y + 1)).collect()
}

pub fn parse_switches(text: &str) -> Result<Vec<TwoSwitch>, ParseError> {
    content_lines(text)
        .map(|(ln, toks)| {
            if toks.len() != 4 {
                return err(ln, "expected `u x w y`");
            }
            let mut v = [0; 4];
            for (slot, t) in v.iter_mut().zip(&toks) {
                *slot = match t.parse::<usize>() {
                    Ok(x) if x >= 1 => x - 1,
                    _ => return err(ln, format!("expected a vertex number, found `{t}`")),
                };
            }
            Ok(TwoSwitch::new(v[0], v[1], v[2], v[3]))
        })
        .collect()
}

pub fn render_coloring(c: &Coloring) -> String {
    let mut s = String::from("witness");
    for x in c.colors() {
        s.push_str(&format!(" {x}"));
    }
    s
}

/// Verdict line, kind line, witness line, and for positive verdicts the
/// value proven unattainable.
pub fn render_certificate(cert: &BalanceCertificate) -> String {
    let mut out = format!("{}\nkind {}\n{}\n", cert.verdict, cert.kind, render_coloring(&cert.witness));
    if cert.exhausted {
        out.push_str(&format!("exhausted {}\n", cert.verdict - 1));
    }
    out
}

/// `remove r b` lines, then the reduced graph with its original vertex
/// numbers recorded in a comment.
pub fn render_trace(t: &ReductionTrace) -> String {
    let mut out: String = t.removed.iter().map(|(r, b)| format!("remove {} {}\n", r + 1, b + 1)).collect();
    let mut doc = CgfDocument::from_colored_graph(&t.result);
    let kept: Vec<String> = t.kept.iter().map(|v| (v + 1).to_string()).collect();
    doc.comments.push(format!("kept {}", kept.join(" ")).trim_end().to_string());
    out.push_str(&doc.render());
    out
}
