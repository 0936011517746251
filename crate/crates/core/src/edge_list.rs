//! Plain-text edge lists: `n m` on the first line, then `m` lines `u v`.
//!
//! Several graphs may follow one another in a single stream. Blank lines
//! between records are ignored.

use std::fmt::Write as _;
use std::io::BufRead;

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Error)]
pub enum EdgeListError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}")]
    Graph { line: usize, source: GraphError },
    #[error("unexpected end of input: header promised {expected} edges, found {found}")]
    MissingEdges { expected: usize, found: usize },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", g.n(), g.m()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

fn pair(line: &str, lineno: usize) -> Result<(usize, usize), EdgeListError> {
    let mut it = line.split_whitespace();
    let mut next = || {
        it.next().ok_or_else(|| EdgeListError::Syntax {
            line: lineno,
            msg: "expected two integers".into(),
        })
    };
    let (a, b) = (next()?, next()?);
    if it.next().is_some() {
        return Err(EdgeListError::Syntax { line: lineno, msg: "expected two integers".into() });
    }
    let num = |s: &str| {
        s.parse::<usize>().map_err(|e| EdgeListError::Syntax { line: lineno, msg: format!("{s:?}: {e}") })
    };
    Ok((num(a)?, num(b)?))
}

/// Streaming reader over consecutive edge-list records.
pub struct EdgeListReader<R> {
    lines: std::io::Lines<R>,
    lineno: usize,
}

impl<R: BufRead> EdgeListReader<R> {
    pub fn new(reader: R) -> Self {
        EdgeListReader { lines: reader.lines(), lineno: 0 }
    }

    fn next_nonblank(&mut self) -> Option<Result<String, EdgeListError>> {
        for line in self.lines.by_ref() {
            self.lineno += 1;
            match line {
                Err(e) => return Some(Err(e.into())),
                Ok(l) if l.trim().is_empty() => continue,
                Ok(l) => return Some(Ok(l)),
            }
        }
        None
    }

    fn read_record(&mut self, header: String) -> Result<Graph, EdgeListError> {
        let header_line = self.lineno;
        let (n, m) = pair(&header, header_line)?;
        let mut edges = Vec::with_capacity(m);
        for found in 0..m {
            let line = self
                .next_nonblank()
                .ok_or(EdgeListError::MissingEdges { expected: m, found })??;
            edges.push(pair(&line, self.lineno)?);
        }
        Graph::from_edges(n, edges).map_err(|source| EdgeListError::Graph { line: header_line, source })
    }
}

impl<R: BufRead> Iterator for EdgeListReader<R> {
    type Item = Result<Graph, EdgeListError>;

    fn next(&mut self) -> Option<Self::Item> {
        let header = match self.next_nonblank()? {
            Ok(h) => h,
            Err(e) => return Some(Err(e)),
        };
        Some(self.read_record(header))
    }
}

/// Parses exactly one edge-list record.
pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut reader = EdgeListReader::new(text.as_bytes());
    let g = reader.next().ok_or(EdgeListError::Syntax { line: 1, msg: "empty input".into() })??;
    if let Some(extra) = reader.next_nonblank() {
        extra?;
        return Err(EdgeListError::Syntax { line: reader.lineno, msg: "trailing data after record".into() });
    }
    Ok(g)
}
