//! Text input and output for graphs.
//!
//! Two input formats are accepted:
//!
//! * edge list: a header line `n m`, then `m` lines `u v` with 0-based labels.
//!   Fields are whitespace-separated and anything after `#` is a comment.
//! * graph6: one graph per line. Blank lines and `#` lines are skipped.
//!
//! [`GraphReader`] streams either format and reports 1-based line numbers.

use std::fmt::Write as _;
use std::io::BufRead;

use thiserror::Error;

use crate::graph::{Graph, GraphBuilder, GraphError, Vertex};
use crate::graph6::{parse_graph6, Graph6Error};

#[derive(Debug, Error)]
pub enum InputError {
    #[error("line {line}: {source}")]
    Graph6 { line: usize, source: Graph6Error },
    #[error("line {line}: {message}")]
    EdgeList { line: usize, message: String },
    #[error("line {line}: {source}")]
    Graph { line: usize, source: GraphError },
    #[error("read error: {0}")]
    Io(#[from] std::io::Error),
}

impl InputError {
    /// The 1-based line the error refers to, when there is one.
    pub fn line(&self) -> Option<usize> {
        match self {
            InputError::Graph6 { line, .. }
            | InputError::EdgeList { line, .. }
            | InputError::Graph { line, .. } => Some(*line),
            InputError::Io(_) => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputFormat {
    /// Edge list if the first meaningful line starts with a digit, else graph6.
    Auto,
    Graph6,
    EdgeList,
}

fn strip_comment(line: &str) -> &str {
    line.split_once('#').map_or(line, |(head, _)| head).trim()
}

fn parse_fields<const N: usize>(text: &str, line: usize) -> Result<[usize; N], InputError> {
    let mut out = [0usize; N];
    let mut fields = text.split_whitespace();
    for slot in out.iter_mut() {
        let field = fields.next().ok_or_else(|| InputError::EdgeList {
            line,
            message: format!("expected {N} integers, got {text:?}"),
        })?;
        *slot = field.parse().map_err(|_| InputError::EdgeList {
            line,
            message: format!("not a non-negative integer: {field:?}"),
        })?;
    }
    if let Some(extra) = fields.next() {
        return Err(InputError::EdgeList {
            line,
            message: format!("unexpected field {extra:?}"),
        });
    }
    Ok(out)
}

/// Parses a whole edge-list document.
pub fn parse_edge_list(text: &str) -> Result<Graph, InputError> {
    parse_edge_list_lines(text.lines().map(|l| Ok(l.to_owned())), 0)
}

fn parse_edge_list_lines<I>(lines: I, first_line: usize) -> Result<Graph, InputError>
where
    I: IntoIterator<Item = std::io::Result<String>>,
{
    let mut header: Option<(GraphBuilder, usize)> = None;
    let mut seen = 0usize;
    let mut last_line = first_line;
    for (i, raw) in lines.into_iter().enumerate() {
        let line = first_line + i + 1;
        last_line = line;
        let raw = raw?;
        let body = strip_comment(&raw);
        if body.is_empty() {
            continue;
        }
        match header.as_mut() {
            None => {
                let [n, m] = parse_fields::<2>(body, line)?;
                let builder =
                    GraphBuilder::new(n).map_err(|source| InputError::Graph { line, source })?;
                header = Some((builder, m));
            }
            Some((builder, m)) => {
                if seen == *m {
                    return Err(InputError::EdgeList {
                        line,
                        message: format!("more edge lines than the declared {m}"),
                    });
                }
                let [u, v] = parse_fields::<2>(body, line)?;
                let (u, v) = (to_vertex(u, line)?, to_vertex(v, line)?);
                builder
                    .add_edge(u, v)
                    .map_err(|source| InputError::Graph { line, source })?;
                seen += 1;
            }
        }
    }
    match header {
        None => Err(InputError::EdgeList {
            line: last_line.max(1),
            message: "missing \"n m\" header".into(),
        }),
        Some((_, m)) if seen < m => Err(InputError::EdgeList {
            line: last_line.max(1),
            message: format!("declared {m} edges but found {seen}"),
        }),
        Some((builder, _)) => Ok(builder.build()),
    }
}

fn to_vertex(x: usize, line: usize) -> Result<Vertex, InputError> {
    Vertex::try_from(x).map_err(|_| InputError::EdgeList {
        line,
        message: format!("label {x} is too large"),
    })
}

/// Renders `g` in the edge-list format.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", g.n(), g.m()).unwrap();
    for e in g.edges() {
        writeln!(out, "{} {}", e.u(), e.v()).unwrap();
    }
    out
}

/// Streams graphs from a buffered reader.
///
/// graph6 input is processed one line at a time. An edge-list document is
/// read in full and yields a single graph.
pub struct GraphReader<R> {
    lines: std::iter::Enumerate<std::io::Lines<R>>,
    format: InputFormat,
    done: bool,
}

impl<R: BufRead> GraphReader<R> {
    pub fn new(reader: R, format: InputFormat) -> Self {
        Self {
            lines: reader.lines().enumerate(),
            format,
            done: false,
        }
    }
}

impl<R: BufRead> Iterator for GraphReader<R> {
    type Item = Result<Graph, InputError>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        loop {
            let (idx, raw) = match self.lines.next() {
                None => {
                    self.done = true;
                    return None;
                }
                Some((_, Err(e))) => {
                    self.done = true;
                    return Some(Err(e.into()));
                }
                Some((idx, Ok(raw))) => (idx, raw),
            };
            let line = idx + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let edge_list = match self.format {
                InputFormat::EdgeList => true,
                InputFormat::Graph6 => false,
                InputFormat::Auto => trimmed.as_bytes()[0].is_ascii_digit(),
            };
            if edge_list {
                self.done = true;
                let rest = std::iter::once(Ok(raw)).chain(self.lines.by_ref().map(|(_, l)| l));
                return Some(parse_edge_list_lines(rest, line - 1));
            }
            self.format = InputFormat::Graph6;
            let text = trimmed.strip_prefix(">>graph6<<").unwrap_or(trimmed);
            return Some(parse_graph6(text).map_err(|source| InputError::Graph6 { line, source }));
        }
    }
}
