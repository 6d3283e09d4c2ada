//! Facet-list input and output.
//!
//! Text: one facet per line as whitespace-separated labels, `#` starts a
//! comment, a line holding only `{}` is the empty face, and an empty document
//! is the void complex. JSON: `{"facets": [["a","b"], ...]}`; other keys are
//! ignored. A document whose first non-blank character is `{` followed by `"`
//! is read as JSON.

use std::collections::HashSet;

use serde::Deserialize;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Debug)]
pub struct Parsed {
    pub complex: SimplicialComplex,
    pub format: Format,
    /// Non-fatal findings such as absorbed non-maximal faces.
    pub warnings: Vec<String>,
}

const EMPTY_FACE: &str = "{}";

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Line and column (1-based, in characters) of byte offset `at`.
fn position(text: &str, at: usize) -> (usize, usize) {
    let before = &text[..at];
    let line = before.matches('\n').count() + 1;
    let start = before.rfind('\n').map_or(0, |i| i + 1);
    (line, before[start..].chars().count() + 1)
}

pub fn detect(text: &str) -> Format {
    let t = text.trim_start();
    let mut chars = t.chars();
    if chars.next() == Some('{') && chars.find(|c| !c.is_whitespace()) == Some('"') {
        Format::Json
    } else {
        Format::Text
    }
}

pub fn parse_input(bytes: &[u8]) -> Result<Parsed> {
    let text = match std::str::from_utf8(bytes) {
        Ok(t) => t,
        Err(e) => {
            let valid = std::str::from_utf8(&bytes[..e.valid_up_to()]).expect("valid prefix");
            let (line, column) = position(valid, valid.len());
            return Err(parse_error(line, column, "input is not valid UTF-8"));
        }
    };
    match detect(text) {
        Format::Json => parse_json(text),
        Format::Text => parse_text(text),
    }
}

pub fn parse_str(text: &str) -> Result<Parsed> {
    parse_input(text.as_bytes())
}

/// Facets with the line they came from.
type Rows = Vec<(usize, Vec<String>)>;

fn parse_text(text: &str) -> Result<Parsed> {
    let mut rows: Rows = Vec::new();
    for (k, raw) in text.split('\n').enumerate() {
        let line_no = k + 1;
        let body = raw.split('#').next().unwrap_or("").trim_end_matches('\r');
        if body.trim_start().starts_with("{\"") {
            let col = body.len() - body.trim_start().len() + 1;
            return Err(parse_error(line_no, col, "JSON content inside a text document"));
        }
        let mut tokens: Vec<(usize, &str)> = Vec::new();
        let mut offset = 0;
        for tok in body.split_whitespace() {
            let at = offset + body[offset..].find(tok).expect("token comes from the line");
            offset = at + tok.len();
            tokens.push((body[..at].chars().count() + 1, tok));
        }
        if tokens.is_empty() {
            continue;
        }
        if tokens.iter().any(|(_, t)| *t == EMPTY_FACE) {
            if tokens.len() > 1 {
                let (col, _) = tokens.iter().find(|(_, t)| *t == EMPTY_FACE).unwrap();
                return Err(parse_error(line_no, *col, "{} must stand alone on its line"));
            }
            rows.push((line_no, Vec::new()));
            continue;
        }
        let mut seen = HashSet::new();
        for (col, t) in &tokens {
            if !seen.insert(*t) {
                return Err(parse_error(line_no, *col, format!("label {t:?} repeated within a facet")));
            }
        }
        rows.push((line_no, tokens.into_iter().map(|(_, t)| t.to_string()).collect()));
    }
    finish(rows, Format::Text)
}

#[derive(Deserialize)]
struct JsonDoc {
    facets: Vec<Vec<String>>,
}

fn parse_json(text: &str) -> Result<Parsed> {
    let doc: JsonDoc = serde_json::from_str(text).map_err(|e| parse_error(e.line(), e.column(), e.to_string()))?;
    let start = position(text, text.len() - text.trim_start().len());
    let mut rows: Rows = Vec::new();
    for (k, f) in doc.facets.into_iter().enumerate() {
        let mut seen = HashSet::new();
        for l in &f {
            if !seen.insert(l.as_str()) {
                return Err(parse_error(
                    start.0,
                    start.1,
                    format!("facet {}: label {l:?} repeated", k + 1),
                ));
            }
        }
        rows.push((k + 1, f));
    }
    finish(rows, Format::Json)
}

fn finish(rows: Rows, format: Format) -> Result<Parsed> {
    let sets: Vec<HashSet<&str>> = rows
        .iter()
        .map(|(_, f)| f.iter().map(String::as_str).collect())
        .collect();
    let what = match format {
        Format::Text => "line",
        Format::Json => "facet",
    };
    let mut warnings = Vec::new();
    for (a, sa) in sets.iter().enumerate() {
        let absorbed = sets.iter().enumerate().find(|(b, sb)| {
            *b != a && sa.is_subset(sb) && (sa.len() < sb.len() || *b < a)
        });
        if let Some((b, _)) = absorbed {
            let kind = if sa.len() == sets[b].len() { "duplicates" } else { "is contained in" };
            warnings.push(format!("{what} {} {kind} {what} {}", rows[a].0, rows[b].0));
        }
    }
    let complex = SimplicialComplex::from_facets(rows.into_iter().map(|(_, f)| f))?;
    Ok(Parsed {
        complex,
        format,
        warnings,
    })
}

fn text_safe(label: &str) -> bool {
    !label.is_empty()
        && label != EMPTY_FACE
        && !label.contains('#')
        && !label.starts_with("{\"")
        && !label.chars().any(char::is_whitespace)
}

/// Text form; fails if a label cannot be written unambiguously.
pub fn emit_text(c: &SimplicialComplex) -> Result<String> {
    if let Some(bad) = c.labels().iter().find(|l| !text_safe(l)) {
        return Err(Error::Usage(format!("label {bad:?} cannot be written in text format")));
    }
    let mut out = String::new();
    for f in c.labeled_facets() {
        if f.is_empty() {
            out.push_str(EMPTY_FACE);
        } else {
            out.push_str(&f.join(" "));
        }
        out.push('\n');
    }
    Ok(out)
}

pub fn emit_json(c: &SimplicialComplex) -> String {
    serde_json::json!({ "facets": c.labeled_facets() }).to_string() + "\n"
}
