//! Small-graph toolkit for independent cuts, forest cuts, and the minimum
//! edge count of 3-connected graphs in which every vertex neighborhood
//! contains a cycle.
//!
//! Graphs are simple, undirected, and have at most 64 vertices labeled
//! `0..n`. The crate provides:
//!
//! * [`graph`], [`graph6`], [`edge_list`]: the graph type and its text formats;
//! * [`connectivity`]: components and exact vertex connectivity;
//! * [`neighborhood`]: neighborhood cycles, the degree-3 split, set predicates;
//! * [`cuts`]: exhaustive independent-cut and forest-cut search;
//! * [`constructions`]: books, prisms, Petersen, K4-substitution, ...;
//! * [`verifier`]: step-by-step checking of the `8m >= 15n` argument;
//! * [`canon`], [`enumerate`]: canonical forms and isomorph-free generation;
//! * [`search`]: exhaustive harnesses producing [`search::SearchReport`]s.

pub mod canon;
pub mod connectivity;
pub mod constructions;
pub mod cuts;
pub mod edge_list;
pub mod enumerate;
pub mod graph;
pub mod graph6;
pub mod neighborhood;
pub mod search;
pub mod verifier;

pub use canon::{canonical_form, canonical_graph, canonical_key, CanonError};
pub use connectivity::{components, is_connected, is_k_connected, vertex_connectivity, ComponentLabeling};
pub use constructions::{
    book_graph, complete_graph, cycle_graph, k4_substitution, named_graph, octahedron, petersen, prism,
    ConstructionError, NamedGraph, SubstitutionMap,
};
pub use cuts::{find_forest_cut, find_independent_cut, is_separator, CutCertificate, CutError, CutKind};
pub use edge_list::{parse_edge_list, to_edge_list, EdgeListError, EdgeListReader};
pub use enumerate::{
    enumerate_graphs, ingest_graph6_stream, EnumerationConstraints, EnumerationError, Graph6Reader, IngestError,
};
pub use graph::{Graph, GraphError, VertexSet, MAX_VERTICES};
pub use graph6::{encode_graph6, parse_graph6, Graph6Error};
pub use neighborhood::{
    all_neighborhoods_cyclic, degree_partition, induces_forest, is_independent_set, neighborhood_has_cycle,
    DegreePartition,
};
pub use search::{
    run_chen_yu_check, run_extremal_search, run_forest_cut_check, run_harness, GraphSource, Harness, SearchError,
    SearchReport,
};
pub use verifier::{
    check_big_vertex_bound, check_hypotheses, check_v3_independent, compute_bound_report, find_v3_twins,
    twin_reduce, two_separator_witness, verify_edge_bound, BoundReport, HypothesisViolation, PreconditionError,
    StepFailure,
};
