//! Step-by-step checking of the `8m >= 15n` edge bound for 3-connected
//! graphs whose vertex neighborhoods all contain a cycle.
//!
//! The argument runs on the split of the vertices into degree-3 vertices
//! (`V3`) and the rest:
//!
//! 1. every `V3` neighborhood induces a triangle;
//! 2. `V3` is independent, since an edge `uv` inside it makes
//!    `N(u) ∩ N(v)` a 2-separator;
//! 3. twins in `V3` (equal neighborhoods) can be deleted one at a time
//!    without losing either hypothesis;
//! 4. once no twins remain, every vertex of degree at least 4 has at least
//!    three neighbors outside `V3`;
//! 5. hence `2m >= 3n + 3|V3|`, while trivially `2m >= 4n - |V3|`, and the
//!    first plus three times the second gives `8m >= 15n`.
//!
//! Each step is checked on concrete graphs and reported with a witness when
//! it fails, rather than aborting.

use serde::Serialize;
use thiserror::Error;

use crate::connectivity::{is_k_connected, is_split, vertex_connectivity};
use crate::graph::{low_mask, Bits, Graph, VertexSet};
use crate::neighborhood::{all_neighborhoods_cyclic, degree_partition, mask_is_forest};

/// Why a step check could not be run at all.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PreconditionError {
    #[error("minimum degree {min_degree} is below 3 (vertex {vertex})")]
    MinDegreeBelowThree { vertex: usize, min_degree: usize },
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("vertices {0} and {1} are not adjacent")]
    NotAdjacent(usize, usize),
    #[error("vertex {vertex} has degree {degree}, not 3")]
    NotDegreeThree { vertex: usize, degree: usize },
    #[error("neighborhood of degree-3 vertex {0} does not induce a triangle")]
    NonTriangleNeighborhood(usize),
    #[error("degree-3 vertices {0} and {1} are adjacent")]
    V3NotIndependent(usize, usize),
    #[error("degree-3 vertices {0} and {1} are twins")]
    TwinsPresent(usize, usize),
    #[error("graph has {0} vertices; the 2-separator argument needs at least 5")]
    TooFewVertices(usize),
    #[error("graph has no adjacent pair of degree-3 vertices")]
    NoAdjacentV3Pair,
}

/// The graph does not satisfy the hypotheses of the edge bound.
#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize)]
#[serde(tag = "hypothesis", rename_all = "kebab-case")]
pub enum HypothesisViolation {
    #[error("graph is not 3-connected (connectivity {connectivity}, n = {n})")]
    NotThreeConnected { connectivity: usize, n: usize },
    #[error("neighborhood of vertex {vertex} induces a forest")]
    AcyclicNeighborhood { vertex: usize },
}

/// A proof step that failed on a concrete graph, with its witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "step", rename_all = "kebab-case")]
pub enum StepFailure {
    MinDegreeBelowThree { vertex: usize, degree: usize },
    NonTriangleV3Neighborhood { vertex: usize },
    V3NotIndependent { u: usize, v: usize },
    TwinsPresent { u: usize, v: usize },
    BigVertexBound { vertex: usize, outside_v3: usize },
    /// Reduction ended on fewer than 5 vertices, where the 2-separator
    /// argument has no third component to split off.
    DegenerateBase { n: usize },
    /// Removing the twin `removed` broke 3-connectivity or a neighborhood cycle.
    ReductionBrokeHypothesis { removed: usize, violation: HypothesisViolation },
}

/// The two counting inequalities and their sum, evaluated on one graph.
///
/// All numeric fields follow from `n`, `m` and `v3_size`; `step_failures`
/// lists every proof step that does not hold on the graph analyzed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub n: usize,
    pub m: usize,
    pub v3_size: usize,
    pub lhs_handshake: usize,
    /// `3n + 3|V3|`, the degree-sum bound from the big-vertex count.
    pub rhs_big_vertex: usize,
    /// `4n - |V3|`, the degree-sum bound from minimum degree 3.
    pub rhs_min_degree: i64,
    pub big_vertex_holds: bool,
    pub min_degree_holds: bool,
    pub final_lhs: usize,
    pub final_rhs: usize,
    pub bound_holds: bool,
    /// Twins deleted before the step checks ran (original labels, in order).
    pub removed_twins: Vec<usize>,
    /// Size of the graph the step checks ran on.
    pub reduced_n: usize,
    pub reduced_m: usize,
    pub step_failures: Vec<StepFailure>,
}

impl BoundReport {
    fn arithmetic(n: usize, m: usize, v3_size: usize) -> BoundReport {
        let lhs_handshake = 2 * m;
        let rhs_big_vertex = 3 * n + 3 * v3_size;
        let rhs_min_degree = 4 * n as i64 - v3_size as i64;
        BoundReport {
            n,
            m,
            v3_size,
            lhs_handshake,
            rhs_big_vertex,
            rhs_min_degree,
            big_vertex_holds: lhs_handshake >= rhs_big_vertex,
            min_degree_holds: lhs_handshake as i64 >= rhs_min_degree,
            final_lhs: 8 * m,
            final_rhs: 15 * n,
            bound_holds: 8 * m >= 15 * n,
            removed_twins: Vec::new(),
            reduced_n: n,
            reduced_m: m,
            step_failures: Vec::new(),
        }
    }
}

fn v3_mask(g: &Graph) -> u64 {
    degree_partition(g).v3.bits()
}

fn first_low_degree(g: &Graph) -> Option<(usize, usize)> {
    (0..g.n()).map(|v| (v, g.degree(v))).find(|&(_, d)| d < 3)
}

/// A degree-3 neighborhood contains a cycle iff it is a triangle.
fn first_non_triangle_v3(g: &Graph, v3: u64) -> Option<usize> {
    Bits(v3).find(|&v| g.edges_within(g.row(v)) != 3)
}

fn first_v3_edge(g: &Graph, v3: u64) -> Option<(usize, usize)> {
    Bits(v3).find_map(|u| {
        let later = g.row(u) & v3 & !low_mask(u + 1);
        (later != 0).then(|| (u, later.trailing_zeros() as usize))
    })
}

fn first_twins(g: &Graph, v3: u64) -> Option<(usize, usize)> {
    Bits(v3).find_map(|u| {
        Bits(v3 & !low_mask(u + 1)).find(|&v| g.row(u) == g.row(v)).map(|v| (u, v))
    })
}

fn first_big_vertex_violation(g: &Graph, v3: u64) -> Option<(usize, usize)> {
    (0..g.n())
        .filter(|&v| g.degree(v) >= 4)
        .map(|v| (v, (g.row(v) & !v3).count_ones() as usize))
        .find(|&(_, outside)| outside < 3)
}

fn require_min_degree_three(g: &Graph) -> Result<(), PreconditionError> {
    match first_low_degree(g) {
        Some((vertex, min_degree)) => Err(PreconditionError::MinDegreeBelowThree { vertex, min_degree }),
        None => Ok(()),
    }
}

/// Checks that no edge joins two degree-3 vertices. `Ok(None)` means the
/// step holds; `Ok(Some(edge))` is a witness that it does not.
pub fn check_v3_independent(g: &Graph) -> Result<Option<(usize, usize)>, PreconditionError> {
    require_min_degree_three(g)?;
    Ok(first_v3_edge(g, v3_mask(g)))
}

/// For adjacent degree-3 vertices whose neighborhoods are triangles,
/// returns `N(u) ∩ N(v)`, verified to be a 2-separator.
pub fn two_separator_witness(g: &Graph, u: usize, v: usize) -> Result<VertexSet, PreconditionError> {
    for x in [u, v] {
        if x >= g.n() {
            return Err(PreconditionError::VertexOutOfRange(x));
        }
    }
    if !g.has_edge(u, v) {
        return Err(PreconditionError::NotAdjacent(u, v));
    }
    for x in [u, v] {
        if g.degree(x) != 3 {
            return Err(PreconditionError::NotDegreeThree { vertex: x, degree: g.degree(x) });
        }
        if g.edges_within(g.row(x)) != 3 {
            return Err(PreconditionError::NonTriangleNeighborhood(x));
        }
    }
    if g.n() < 5 {
        return Err(PreconditionError::TooFewVertices(g.n()));
    }
    let common = g.row(u) & g.row(v);
    debug_assert_eq!(common.count_ones(), 2);
    debug_assert!(is_split(g.rows(), low_mask(g.n()) & !common));
    Ok(VertexSet::from_bits(g.n(), common).expect("mask within graph"))
}

/// First adjacent pair of degree-3 vertices, fed to [`two_separator_witness`].
pub fn two_separator_for_v3_edge(g: &Graph) -> Result<VertexSet, PreconditionError> {
    let (u, v) = first_v3_edge(g, v3_mask(g)).ok_or(PreconditionError::NoAdjacentV3Pair)?;
    two_separator_witness(g, u, v)
}

/// Lexicographically first pair of degree-3 vertices with equal neighborhoods.
pub fn find_v3_twins(g: &Graph) -> Option<(usize, usize)> {
    first_twins(g, v3_mask(g))
}

/// Deletes the smaller vertex of the first twin pair until no twins remain.
/// Returns the reduced graph and the removed vertices in original labels.
pub fn twin_reduce(g: &Graph) -> (Graph, Vec<usize>) {
    let (reduced, removed, _) = twin_reduce_traced(g, false);
    (reduced, removed)
}

/// Twin reduction that optionally re-checks both hypotheses after each
/// deletion, reporting the first violation per step.
fn twin_reduce_traced(g: &Graph, check: bool) -> (Graph, Vec<usize>, Vec<StepFailure>) {
    let mut current = g.clone();
    let mut labels: Vec<usize> = (0..g.n()).collect();
    let mut removed = Vec::new();
    let mut failures = Vec::new();
    while let Some((u, _)) = find_v3_twins(&current) {
        current = current.induced_by_mask(low_mask(current.n()) & !(1u64 << u));
        let original = labels.remove(u);
        removed.push(original);
        if check {
            if let Err(violation) = check_hypotheses(&current) {
                failures.push(StepFailure::ReductionBrokeHypothesis { removed: original, violation });
            }
        }
    }
    (current, removed, failures)
}

/// Checks that every degree-≥4 vertex has at least three neighbors outside
/// `V3`. Requires the earlier steps to hold: `Ok(None)` means the bound
/// holds, `Ok(Some(v))` is a violating vertex.
pub fn check_big_vertex_bound(g: &Graph) -> Result<Option<usize>, PreconditionError> {
    require_min_degree_three(g)?;
    let v3 = v3_mask(g);
    if let Some(v) = first_non_triangle_v3(g, v3) {
        return Err(PreconditionError::NonTriangleNeighborhood(v));
    }
    if let Some((u, v)) = first_v3_edge(g, v3) {
        return Err(PreconditionError::V3NotIndependent(u, v));
    }
    if let Some((u, v)) = first_twins(g, v3) {
        return Err(PreconditionError::TwinsPresent(u, v));
    }
    Ok(first_big_vertex_violation(g, v3).map(|(v, _)| v))
}

/// Step failures of the argument evaluated directly on `g`, in proof order.
fn step_failures(g: &Graph) -> Vec<StepFailure> {
    let v3 = v3_mask(g);
    let mut out = Vec::new();
    if let Some((vertex, degree)) = first_low_degree(g) {
        out.push(StepFailure::MinDegreeBelowThree { vertex, degree });
    }
    if let Some(vertex) = first_non_triangle_v3(g, v3) {
        out.push(StepFailure::NonTriangleV3Neighborhood { vertex });
    }
    if let Some((u, v)) = first_v3_edge(g, v3) {
        out.push(StepFailure::V3NotIndependent { u, v });
    }
    if let Some((u, v)) = first_twins(g, v3) {
        out.push(StepFailure::TwinsPresent { u, v });
    }
    if let Some((vertex, outside_v3)) = first_big_vertex_violation(g, v3) {
        out.push(StepFailure::BigVertexBound { vertex, outside_v3 });
    }
    out
}

/// Evaluates both inequalities and the final bound on `g` and lists every
/// failing step. Never fails; bad inputs just produce failures.
pub fn compute_bound_report(g: &Graph) -> BoundReport {
    let mut report = BoundReport::arithmetic(g.n(), g.m(), v3_mask(g).count_ones() as usize);
    report.step_failures = step_failures(g);
    report
}

/// Hypotheses of the edge bound: 3-connected, every neighborhood has a cycle.
pub fn check_hypotheses(g: &Graph) -> Result<(), HypothesisViolation> {
    if !is_k_connected(g, 3) {
        return Err(HypothesisViolation::NotThreeConnected { connectivity: vertex_connectivity(g), n: g.n() });
    }
    if let Some(vertex) = (0..g.n()).find(|&v| mask_is_forest(g, g.row(v))) {
        return Err(HypothesisViolation::AcyclicNeighborhood { vertex });
    }
    debug_assert!(all_neighborhoods_cyclic(g));
    Ok(())
}

/// Runs the whole argument on `g`.
///
/// The bound fields describe `g` itself. The step checks run on the graph
/// left after twin reduction, and each deletion is re-checked against both
/// hypotheses. A reduced graph with fewer than 5 vertices is flagged as a
/// degenerate base.
pub fn verify_edge_bound(g: &Graph) -> Result<BoundReport, HypothesisViolation> {
    check_hypotheses(g)?;
    let (reduced, removed, mut failures) = twin_reduce_traced(g, true);
    let mut report = BoundReport::arithmetic(g.n(), g.m(), v3_mask(g).count_ones() as usize);
    report.reduced_n = reduced.n();
    report.reduced_m = reduced.m();
    report.removed_twins = removed;
    failures.extend(step_failures(&reduced));
    if reduced.n() < 5 {
        failures.push(StepFailure::DegenerateBase { n: reduced.n() });
    }
    report.step_failures = failures;
    Ok(report)
}
