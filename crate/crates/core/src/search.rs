//! Exhaustive harnesses over all graphs of a given order.
//!
//! * `chen-yu`: connected graphs with `m <= 2n - 4` must have an independent cut.
//! * `forest-cut`: connected graphs with `m < 3n - 6` are conjectured to have a
//!   forest cut; a failure here is a discovery, not a bug.
//! * `extremal`: 3-connected graphs whose neighborhoods all contain a cycle,
//!   with their minimum edge count and every graph below `15n / 8`.

use std::fmt;
use std::io::BufRead;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::cuts::{find_forest_cut, find_independent_cut};
use crate::enumerate::{enumerate_graphs, ingest_graph6_stream, EnumerationConstraints, EnumerationError, IngestError};
use crate::graph::Graph;
use crate::verifier::{verify_edge_bound, BoundReport, HypothesisViolation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Harness {
    ChenYu,
    ForestCut,
    Extremal,
}

impl fmt::Display for Harness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Harness::ChenYu => "chen-yu",
            Harness::ForestCut => "forest-cut",
            Harness::Extremal => "extremal",
        })
    }
}

impl FromStr for Harness {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "chen-yu" => Ok(Harness::ChenYu),
            "forest-cut" => Ok(Harness::ForestCut),
            "extremal" => Ok(Harness::Extremal),
            other => Err(format!("unknown harness {other:?} (expected chen-yu|forest-cut|extremal)")),
        }
    }
}

impl Harness {
    /// Graphs the harness scans at order `n`.
    pub fn constraints(&self, n: usize) -> EnumerationConstraints {
        let base = EnumerationConstraints::new(n).connected();
        match self {
            Harness::ChenYu => base.max_edges((2 * n).saturating_sub(4)),
            Harness::ForestCut => base.max_edges((3 * n).saturating_sub(7)),
            Harness::Extremal => base.min_degree(3).min_connectivity(3).neighborhood_cycles(),
        }
    }

    fn note(&self) -> &'static str {
        match self {
            Harness::ChenYu => {
                "connected graphs with m <= 2n-4; disconnected graphs have the empty independent cut"
            }
            Harness::ForestCut => "connected graphs with m < 3n-6; a counterexample refutes the conjecture at this n",
            Harness::Extremal => "3-connected graphs with a cycle in every neighborhood; listed graphs have 8m < 15n",
        }
    }
}

/// Where a harness gets its graphs.
pub enum GraphSource<'a> {
    Native,
    /// Newline-separated graph6, filtered through the harness constraints.
    Stream(Box<dyn BufRead + 'a>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "reason", rename_all = "kebab-case")]
pub enum Diagnostic {
    NoIndependentCut,
    NoForestCut,
    BelowBound { report: BoundReport },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    #[serde(flatten)]
    pub diagnostic: Diagnostic,
}

#[derive(Debug, Clone, Serialize)]
pub struct SearchReport {
    pub harness: Harness,
    pub n: usize,
    pub source: &'static str,
    pub note: &'static str,
    pub constraints: EnumerationConstraints,
    pub graphs_scanned: usize,
    pub counterexamples: Vec<Counterexample>,
    pub extremal_value: Option<usize>,
    pub extremal_witnesses: Vec<String>,
    pub elapsed_ms: u64,
}

impl SearchReport {
    pub fn has_counterexamples(&self) -> bool {
        !self.counterexamples.is_empty()
    }
}

#[derive(Debug, Error)]
pub enum SearchError {
    #[error("harnesses need n >= 4, got {0}")]
    TooSmall(usize),
    #[error(transparent)]
    Enumeration(#[from] EnumerationError),
    #[error(transparent)]
    Ingest(#[from] IngestError),
    #[error("graph {graph6} passed the extremal filter but failed its hypotheses: {violation}")]
    Inconsistent { graph6: String, violation: HypothesisViolation },
}

fn collect_graphs(c: &EnumerationConstraints, source: GraphSource<'_>) -> Result<Vec<Graph>, SearchError> {
    match source {
        GraphSource::Native => Ok(enumerate_graphs(c)?),
        GraphSource::Stream(reader) => Ok(ingest_graph6_stream(reader, c).collect::<Result<_, _>>()?),
    }
}

enum Outcome {
    Fine,
    Counter(Counterexample),
}

fn examine(harness: Harness, g: &Graph) -> Result<Outcome, SearchError> {
    let counter = |diagnostic| Outcome::Counter(Counterexample { graph6: g.to_graph6(), n: g.n(), m: g.m(), diagnostic });
    Ok(match harness {
        Harness::ChenYu => match find_independent_cut(g) {
            Some(_) => Outcome::Fine,
            None => counter(Diagnostic::NoIndependentCut),
        },
        Harness::ForestCut => match find_forest_cut(g) {
            Some(_) => Outcome::Fine,
            None => counter(Diagnostic::NoForestCut),
        },
        Harness::Extremal => {
            let report = verify_edge_bound(g)
                .map_err(|violation| SearchError::Inconsistent { graph6: g.to_graph6(), violation })?;
            if report.bound_holds {
                Outcome::Fine
            } else {
                counter(Diagnostic::BelowBound { report })
            }
        }
    })
}

/// Runs a harness at order `n`. Graphs are examined in parallel on the
/// current rayon pool; results keep source order, so the report does not
/// depend on the number of threads.
pub fn run_harness(harness: Harness, n: usize, source: GraphSource<'_>) -> Result<SearchReport, SearchError> {
    if n < 4 {
        return Err(SearchError::TooSmall(n));
    }
    let start = Instant::now();
    let constraints = harness.constraints(n);
    let source_name = match source {
        GraphSource::Native => "native",
        GraphSource::Stream(_) => "stream",
    };
    let graphs = collect_graphs(&constraints, source)?;
    let outcomes: Vec<Outcome> = graphs.par_iter().map(|g| examine(harness, g)).collect::<Result<_, _>>()?;
    let counterexamples = outcomes
        .into_iter()
        .filter_map(|o| match o {
            Outcome::Counter(c) => Some(c),
            Outcome::Fine => None,
        })
        .collect();

    let (extremal_value, extremal_witnesses) = if harness == Harness::Extremal {
        let min = graphs.iter().map(Graph::m).min();
        let witnesses = graphs.iter().filter(|g| Some(g.m()) == min).map(Graph::to_graph6).collect();
        (min, witnesses)
    } else {
        (None, Vec::new())
    };

    Ok(SearchReport {
        harness,
        n,
        source: source_name,
        note: harness.note(),
        constraints,
        graphs_scanned: graphs.len(),
        counterexamples,
        extremal_value,
        extremal_witnesses,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

pub fn run_chen_yu_check(n: usize, source: GraphSource<'_>) -> Result<SearchReport, SearchError> {
    run_harness(Harness::ChenYu, n, source)
}

pub fn run_forest_cut_check(n: usize, source: GraphSource<'_>) -> Result<SearchReport, SearchError> {
    run_harness(Harness::ForestCut, n, source)
}

pub fn run_extremal_search(n: usize, source: GraphSource<'_>) -> Result<SearchReport, SearchError> {
    run_harness(Harness::Extremal, n, source)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Cursor;

    use crate::constructions::{book_graph, complete_graph};

    #[test]
    fn chen_yu_small() {
        for n in [4, 5, 6, 7] {
            let r = run_chen_yu_check(n, GraphSource::Native).unwrap();
            assert!(r.counterexamples.is_empty(), "n = {n}");
            assert!(r.extremal_value.is_none());
        }
        assert!(matches!(run_chen_yu_check(3, GraphSource::Native), Err(SearchError::TooSmall(3))));
    }

    #[test]
    fn forest_cut_small() {
        assert!(run_forest_cut_check(5, GraphSource::Native).unwrap().counterexamples.is_empty());
        // book(4): n = 6, m = 9 < 12, with the spine as a forest cut.
        let book = book_graph(4).unwrap();
        assert!(Harness::ForestCut.constraints(6).accepts(&book));
        let r = run_forest_cut_check(6, GraphSource::Stream(Box::new(Cursor::new(format!("{}\n", book.to_graph6()))))).unwrap();
        assert_eq!(r.graphs_scanned, 1);
        assert!(r.counterexamples.is_empty());
    }

    #[test]
    fn extremal_four() {
        let r = run_extremal_search(4, GraphSource::Native).unwrap();
        assert_eq!(r.graphs_scanned, 1);
        assert_eq!(r.extremal_value, Some(6));
        assert_eq!(r.extremal_witnesses, vec![complete_graph(4).to_graph6()]);
        assert_eq!(r.counterexamples.len(), 1);
        match &r.counterexamples[0].diagnostic {
            Diagnostic::BelowBound { report } => assert_eq!((report.final_lhs, report.final_rhs), (48, 60)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn stream_errors_propagate() {
        let err = run_chen_yu_check(4, GraphSource::Stream(Box::new(&b"C~\n!!\n"[..]))).unwrap_err();
        assert!(matches!(err, SearchError::Ingest(IngestError::Malformed { line: 2, .. })));
    }
}
