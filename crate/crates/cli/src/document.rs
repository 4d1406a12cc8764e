//! Line-oriented relation documents.
//!
//! ```text
//! # comment
//! scheme: X{a,b,c} Y{a,b,c}
//! row: a,b | 0.5, 1/3
//! ```
//!
//! Domains are declared, never inferred. Repeated tuples accumulate pairs;
//! unlisted tuples read as `<0, 0>`.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use neutro_core::relation::{Attribute, AttributeDomain, ConfidencePair, NeutrosophicRelation, Scheme};

use crate::error::CliError;

fn parse_error(line: usize, message: impl Into<String>) -> CliError {
    CliError::Parse {
        line,
        message: message.into(),
    }
}

fn core_error(line: usize, e: neutro_core::Error) -> CliError {
    CliError::Core {
        line: Some(line),
        source: e,
    }
}

fn parse_scheme(line: usize, body: &str) -> Result<Scheme, CliError> {
    let mut attrs = Vec::new();
    let mut rest = body.trim();
    while !rest.is_empty() {
        let open = rest
            .find('{')
            .ok_or_else(|| parse_error(line, format!("expected `{{` after attribute in `{rest}`")))?;
        let close = rest[open..]
            .find('}')
            .map(|i| i + open)
            .ok_or_else(|| parse_error(line, "unterminated domain, expected `}`"))?;
        let name = rest[..open].trim();
        if name.is_empty() || name.contains(|c: char| c.is_whitespace() || ",|{}".contains(c)) {
            return Err(parse_error(line, format!("invalid attribute name `{name}`")));
        }
        let values: Vec<&str> = rest[open + 1..close].split(',').map(str::trim).collect();
        if let Some(bad) = values
            .iter()
            .find(|v| v.is_empty() || v.contains(|c: char| c.is_whitespace() || "|{}#".contains(c)))
        {
            return Err(parse_error(line, format!("invalid domain value `{bad}` for `{name}`")));
        }
        let domain = AttributeDomain::new(values).map_err(|e| core_error(line, e))?;
        attrs.push(Attribute::new(name, domain));
        rest = rest[close + 1..].trim_start();
    }
    if attrs.is_empty() {
        return Err(parse_error(line, "scheme declares no attributes"));
    }
    Scheme::new(attrs).map_err(|e| core_error(line, e))
}

/// Parses document text into a canonical relation.
pub fn parse_document(text: &str) -> Result<NeutrosophicRelation, CliError> {
    let mut scheme: Option<Scheme> = None;
    let mut rows = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        if let Some(body) = content.strip_prefix("scheme:") {
            if scheme.is_some() {
                return Err(parse_error(line, "duplicate scheme line"));
            }
            scheme = Some(parse_scheme(line, body)?);
        } else if let Some(body) = content.strip_prefix("row:") {
            let s = scheme
                .as_ref()
                .ok_or_else(|| parse_error(line, "row before scheme line"))?;
            let (values, grades) = body
                .split_once('|')
                .ok_or_else(|| parse_error(line, "expected `|` between values and grades"))?;
            let values: Vec<&str> = values.split(',').map(str::trim).collect();
            let tuple = s.tuple(&values).map_err(|e| core_error(line, e))?;
            let (b, d) = grades
                .split_once(',')
                .ok_or_else(|| parse_error(line, "expected `belief, doubt`"))?;
            let pair = ConfidencePair::parse(b.trim(), d.trim()).map_err(|e| core_error(line, e))?;
            rows.push((tuple, pair));
        } else {
            return Err(parse_error(line, format!("expected `scheme:` or `row:`, found `{content}`")));
        }
    }
    let scheme = scheme.ok_or_else(|| parse_error(0, "missing scheme line"))?;
    NeutrosophicRelation::from_rows(scheme, rows).map_err(|e| CliError::Core { line: None, source: e })
}

/// The `scheme:` header for `scheme`.
pub fn scheme_line(scheme: &Scheme) -> String {
    let mut out = String::from("scheme:");
    for a in scheme.attributes() {
        let _ = write!(out, " {}{{{}}}", a.name(), a.domain().values().join(","));
    }
    out
}

/// Canonical document text: rows in tuple-space order, pairs sorted.
pub fn render_document(r: &NeutrosophicRelation) -> String {
    let mut out = scheme_line(r.scheme());
    out.push('\n');
    for (t, ps) in r.rows() {
        let values: Vec<&str> = r.scheme().values(t).collect();
        for p in ps.iter() {
            let _ = writeln!(out, "row: {} | {}, {}", values.join(","), p.belief, p.doubt);
        }
    }
    out
}

pub fn load_relation(path: &Path) -> Result<NeutrosophicRelation, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    parse_document(&text).map_err(|e| e.in_file(path))
}

pub fn save_relation(r: &NeutrosophicRelation, path: &Path) -> Result<(), CliError> {
    fs::write(path, render_document(r)).map_err(|e| CliError::io(path, e))
}
