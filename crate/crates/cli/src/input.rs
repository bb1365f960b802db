//! Reading and writing graph files.
//!
//! Interval files hold one vertex per line, `<label> <left> <right>`, with
//! `#` comments and blank lines ignored. Edge files follow DIMACS: a header
//! `p edge <n> <m>` followed by `m` lines `e <u> <v>` over vertices `1..=n`;
//! lines starting with `c` or `#` are comments.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::ValueEnum;
use nsn_core::{graph_from_intervals, Graph, Interval, IntervalRepresentation};

use crate::error::{CliError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    Intervals,
    Edges,
}

impl InputFormat {
    /// Chooses a format from the extension, falling back to the first
    /// meaningful line: a `p` header means an edge file.
    pub fn detect(path: &Path, text: &str) -> InputFormat {
        match path.extension().and_then(|e| e.to_str()) {
            Some("intervals" | "int" | "iv") => InputFormat::Intervals,
            Some("edges" | "dimacs" | "col" | "clq") => InputFormat::Edges,
            _ => {
                let first = text
                    .lines()
                    .map(str::trim)
                    .find(|l| !l.is_empty() && !l.starts_with('#') && !l.starts_with("c ") && *l != "c");
                match first {
                    Some(l) if l.starts_with("p ") => InputFormat::Edges,
                    _ => InputFormat::Intervals,
                }
            }
        }
    }
}

#[derive(Debug, Clone)]
pub enum Input {
    Intervals(IntervalRepresentation),
    Edges(Graph),
}

impl Input {
    pub fn graph(&self) -> Graph {
        match self {
            Input::Intervals(rep) => graph_from_intervals(rep),
            Input::Edges(g) => g.clone(),
        }
    }
}

pub fn load(path: &Path, format: Option<InputFormat>) -> Result<Input> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Read { path: path.to_path_buf(), source })?;
    match format.unwrap_or_else(|| InputFormat::detect(path, &text)) {
        InputFormat::Intervals => parse_intervals(path, &text).map(Input::Intervals),
        InputFormat::Edges => parse_edges(path, &text).map(Input::Edges),
    }
}

fn parse_error(path: &Path, line: usize, message: impl Into<String>) -> CliError {
    CliError::Parse { path: path.to_path_buf(), line, message: message.into() }
}

pub fn parse_intervals(path: &Path, text: &str) -> Result<IntervalRepresentation> {
    let mut labels = Vec::new();
    let mut intervals = Vec::new();
    let mut seen = HashSet::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [label, left, right] = fields[..] else {
            return Err(parse_error(path, line_no, format!("expected `<label> <left> <right>`, got `{line}`")));
        };
        let coord = |s: &str| {
            s.parse::<i64>().map_err(|_| parse_error(path, line_no, format!("`{s}` is not an integer endpoint")))
        };
        let (left, right) = (coord(left)?, coord(right)?);
        if left > right {
            return Err(parse_error(path, line_no, format!("left endpoint {left} exceeds right endpoint {right}")));
        }
        if !seen.insert(label.to_string()) {
            return Err(parse_error(path, line_no, format!("duplicate label `{label}`")));
        }
        labels.push(label.to_string());
        intervals.push(Interval::new(left, right));
    }
    Ok(IntervalRepresentation::new(labels, intervals)?)
}

pub fn parse_edges(path: &Path, text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') || line == "c" || line.starts_with("c ") {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let number = |s: &str| {
            s.parse::<usize>().map_err(|_| parse_error(path, line_no, format!("`{s}` is not a nonnegative integer")))
        };
        match fields[..] {
            ["p", "edge", n, m] => {
                if header.is_some() {
                    return Err(parse_error(path, line_no, "second `p` header"));
                }
                header = Some((number(n)?, number(m)?));
            }
            ["e", u, v] => {
                let Some((n, _)) = header else {
                    return Err(parse_error(path, line_no, "edge before the `p edge <n> <m>` header"));
                };
                let (u, v) = (number(u)?, number(v)?);
                for w in [u, v] {
                    if w == 0 || w > n {
                        return Err(parse_error(path, line_no, format!("vertex {w} outside 1..={n}")));
                    }
                }
                if u == v {
                    return Err(parse_error(path, line_no, format!("self-loop on vertex {u}")));
                }
                edges.push((u, v));
            }
            _ => return Err(parse_error(path, line_no, format!("unrecognized line `{line}`"))),
        }
    }
    let Some((n, m)) = header else {
        return Err(parse_error(path, text.lines().count().max(1), "missing `p edge <n> <m>` header"));
    };
    if edges.len() != m {
        return Err(parse_error(
            path,
            text.lines().count().max(1),
            format!("header declares {m} edges but {} were given", edges.len()),
        ));
    }
    Ok(Graph::from_one_based_edges(n, &edges)?)
}

/// Interval file text, preceded by `#` comment lines.
pub fn format_intervals(rep: &IntervalRepresentation, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        let _ = writeln!(out, "# {c}");
    }
    for (label, iv) in rep.iter() {
        let _ = writeln!(out, "{label} {} {}", iv.left, iv.right);
    }
    out
}

pub fn write_file(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|source| CliError::Write { path: PathBuf::from(path), source })
}
