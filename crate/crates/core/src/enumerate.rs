//! Isomorph-free generation of small graphs and graph6 stream ingestion.
//!
//! Graphs on `n` vertices are generated level by level in the edge count:
//! every graph with `m + 1` edges arises from one with `m` edges by adding a
//! non-edge, and canonical keys remove duplicates. Levels above half of
//! `n(n-1)/2` are obtained by complementing the lower levels.

use std::collections::BTreeMap;
use std::io::BufRead;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::canon::{canonical_key_rows, graph_from_key, rows_from_key};
use crate::connectivity::{is_connected, is_k_connected};
use crate::graph::{low_mask, Bits, Graph};
use crate::graph6::{parse_graph6, Graph6Error};
use crate::neighborhood::all_neighborhoods_cyclic;

/// Largest `n` for native generation.
pub const NATIVE_MAX_N: usize = 9;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("native generation is limited to n <= {NATIVE_MAX_N}, got {0}; ingest a graph6 stream instead")]
    CapExceeded(usize),
    #[error("edge bounds [{min}, {max}] outside 0..={limit}")]
    EdgeBounds { min: usize, max: usize, limit: usize },
}

#[derive(Debug, Error)]
pub enum IngestError {
    #[error("line {line}")]
    Malformed { line: usize, source: Graph6Error },
    #[error("line {line}")]
    Io { line: usize, source: std::io::Error },
}

/// Filters applied to generated or ingested graphs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EnumerationConstraints {
    pub n: usize,
    pub connected_only: bool,
    pub min_degree: Option<usize>,
    pub min_connectivity: Option<usize>,
    pub min_edges: Option<usize>,
    pub max_edges: Option<usize>,
    pub require_neighborhood_cycles: bool,
}

impl EnumerationConstraints {
    pub fn new(n: usize) -> Self {
        EnumerationConstraints {
            n,
            connected_only: false,
            min_degree: None,
            min_connectivity: None,
            min_edges: None,
            max_edges: None,
            require_neighborhood_cycles: false,
        }
    }

    pub fn connected(mut self) -> Self {
        self.connected_only = true;
        self
    }

    pub fn min_degree(mut self, d: usize) -> Self {
        self.min_degree = Some(d);
        self
    }

    pub fn min_connectivity(mut self, k: usize) -> Self {
        self.min_connectivity = Some(k);
        self
    }

    pub fn min_edges(mut self, m: usize) -> Self {
        self.min_edges = Some(m);
        self
    }

    pub fn max_edges(mut self, m: usize) -> Self {
        self.max_edges = Some(m);
        self
    }

    pub fn neighborhood_cycles(mut self) -> Self {
        self.require_neighborhood_cycles = true;
        self
    }

    pub fn pair_count(&self) -> usize {
        self.n * self.n.saturating_sub(1) / 2
    }

    /// Inclusive edge-count range implied by the constraints.
    pub fn edge_range(&self) -> (usize, usize) {
        (self.min_edges.unwrap_or(0), self.max_edges.unwrap_or(self.pair_count()).min(self.pair_count()))
    }

    pub fn validate(&self) -> Result<(), EnumerationError> {
        let limit = self.pair_count();
        let min = self.min_edges.unwrap_or(0);
        let max = self.max_edges.unwrap_or(limit);
        if min > limit || max > limit {
            return Err(EnumerationError::EdgeBounds { min, max, limit });
        }
        Ok(())
    }

    /// Cheap tests first; connectivity last.
    pub fn accepts(&self, g: &Graph) -> bool {
        let (lo, hi) = self.edge_range();
        if g.n() != self.n || g.m() < lo || g.m() > hi {
            return false;
        }
        if let Some(d) = self.min_degree {
            if g.min_degree().unwrap_or(0) < d && g.n() > 0 {
                return false;
            }
        }
        if self.require_neighborhood_cycles && !all_neighborhoods_cyclic(g) {
            return false;
        }
        if self.connected_only && !is_connected(g) {
            return false;
        }
        if let Some(k) = self.min_connectivity {
            if !is_k_connected(g, k) {
                return false;
            }
        }
        true
    }
}

fn children(n: usize, key: u128) -> Vec<u128> {
    let mut rows = rows_from_key(n, key);
    let mut out = Vec::new();
    for j in 1..n {
        for i in Bits(!rows[j] & low_mask(j)) {
            rows[i] |= 1 << j;
            rows[j] |= 1 << i;
            out.push(canonical_key_rows(&rows));
            rows[i] &= !(1 << j);
            rows[j] &= !(1 << i);
        }
    }
    out
}

fn complement_key(n: usize, key: u128) -> u128 {
    let full = low_mask(n);
    let rows: Vec<u64> = rows_from_key(n, key).iter().enumerate().map(|(v, r)| !r & full & !(1 << v)).collect();
    canonical_key_rows(&rows)
}

fn sorted_unique(mut keys: Vec<u128>) -> Vec<u128> {
    keys.par_sort_unstable();
    keys.dedup();
    keys
}

/// Canonical keys of all graphs on `n` vertices with edge counts in
/// `lo..=hi`, grouped by edge count.
fn levels(n: usize, lo: usize, hi: usize) -> BTreeMap<usize, Vec<u128>> {
    let total = n * n.saturating_sub(1) / 2;
    let half = total / 2;
    // Lower levels that must be materialized, directly or for complementing.
    let deepest = (lo..=hi).map(|m| if m <= half { m } else { total - m }).max();
    let mut lower: Vec<Vec<u128>> = vec![vec![0]];
    if let Some(deepest) = deepest {
        for _ in 0..deepest {
            let prev = lower.last().expect("level 0 present");
            let next: Vec<u128> = prev.par_iter().flat_map_iter(|&k| children(n, k)).collect();
            lower.push(sorted_unique(next));
        }
    }
    let mut out = BTreeMap::new();
    for m in lo..=hi {
        let keys = if m <= half {
            lower[m].clone()
        } else {
            sorted_unique(lower[total - m].par_iter().map(|&k| complement_key(n, k)).collect())
        };
        out.insert(m, keys);
    }
    out
}

fn check_native(c: &EnumerationConstraints) -> Result<(), EnumerationError> {
    if c.n > NATIVE_MAX_N {
        return Err(EnumerationError::CapExceeded(c.n));
    }
    c.validate()
}

/// One canonically labeled representative per isomorphism class meeting the
/// constraints, in ascending order of canonical graph6.
pub fn enumerate_graphs(c: &EnumerationConstraints) -> Result<Vec<Graph>, EnumerationError> {
    check_native(c)?;
    let (lo, hi) = c.edge_range();
    if lo > hi {
        return Ok(Vec::new());
    }
    let mut keys: Vec<u128> = levels(c.n, lo, hi).into_values().flatten().collect();
    keys.par_sort_unstable();
    Ok(keys
        .into_par_iter()
        .map(|k| graph_from_key(c.n, k))
        .filter(|g| c.accepts(g))
        .collect())
}

/// Counts per edge count of the graphs [`enumerate_graphs`] would return.
pub fn count_by_edges(c: &EnumerationConstraints) -> Result<BTreeMap<usize, usize>, EnumerationError> {
    let mut out = BTreeMap::new();
    for g in enumerate_graphs(c)? {
        *out.entry(g.m()).or_insert(0) += 1;
    }
    Ok(out)
}

/// Reads newline-separated graph6 records. Blank lines are skipped and a
/// leading `>>graph6<<` header is accepted.
pub struct Graph6Reader<R> {
    reader: R,
    line: usize,
    buf: Vec<u8>,
}

impl<R: BufRead> Graph6Reader<R> {
    pub fn new(reader: R) -> Self {
        Graph6Reader { reader, line: 0, buf: Vec::new() }
    }

    /// Number of lines consumed so far.
    pub fn line(&self) -> usize {
        self.line
    }
}

impl<R: BufRead> Iterator for Graph6Reader<R> {
    type Item = Result<Graph, IngestError>;

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            self.buf.clear();
            match self.reader.read_until(b'\n', &mut self.buf) {
                Ok(0) => return None,
                Ok(_) => {}
                Err(source) => return Some(Err(IngestError::Io { line: self.line + 1, source })),
            }
            self.line += 1;
            let mut rec: &[u8] = &self.buf;
            while let [rest @ .., b'\n' | b'\r'] = rec {
                rec = rest;
            }
            if self.line == 1 {
                rec = rec.strip_prefix(b">>graph6<<").unwrap_or(rec);
            }
            if rec.is_empty() {
                continue;
            }
            let line = self.line;
            return Some(parse_graph6(rec).map_err(|source| IngestError::Malformed { line, source }));
        }
    }
}

/// Parsed graphs from a graph6 stream that satisfy `c`. Malformed lines
/// surface as errors carrying their line number.
pub fn ingest_graph6_stream<'c, R: BufRead + 'c>(
    source: R,
    c: &'c EnumerationConstraints,
) -> impl Iterator<Item = Result<Graph, IngestError>> + 'c {
    Graph6Reader::new(source).filter(move |r| r.as_ref().map_or(true, |g| c.accepts(g)))
}
