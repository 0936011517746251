mod common;

use cyclecut::verifier::{PreconditionError, StepFailure};
use cyclecut::{
    check_big_vertex_bound, check_v3_independent, complete_graph, compute_bound_report, enumerate_graphs, find_v3_twins,
    k4_substitution, octahedron, prism, twin_reduce, two_separator_witness, verify_edge_bound, BoundReport, EnumerationConstraints,
    Graph, HypothesisViolation,
};

fn k5_minus_edge() -> Graph {
    Graph::from_edges(5, complete_graph(5).edges().filter(|&e| e != (0, 1))).unwrap()
}

fn min_degree_three(n: usize) -> Vec<Graph> {
    enumerate_graphs(&EnumerationConstraints::new(n).min_degree(3)).unwrap()
}

fn extremal_class(n: usize) -> Vec<Graph> {
    enumerate_graphs(&EnumerationConstraints::new(n).min_connectivity(3).neighborhood_cycles()).unwrap()
}

fn nbrs(g: &Graph, v: usize) -> Vec<usize> {
    (0..g.n()).filter(|&w| g.has_edge(v, w)).collect()
}

/// Step failures recomputed from adjacency queries alone.
fn expected_failures(g: &Graph) -> Vec<StepFailure> {
    let n = g.n();
    let deg: Vec<usize> = (0..n).map(|v| nbrs(g, v).len()).collect();
    let v3: Vec<usize> = (0..n).filter(|&v| deg[v] == 3).collect();
    let mut out = Vec::new();
    if let Some(v) = (0..n).find(|&v| deg[v] < 3) {
        out.push(StepFailure::MinDegreeBelowThree { vertex: v, degree: deg[v] });
    }
    let triangle = |v: usize| {
        let nb = nbrs(g, v);
        nb.iter().enumerate().all(|(i, &a)| nb[i + 1..].iter().all(|&b| g.has_edge(a, b)))
    };
    if let Some(&v) = v3.iter().find(|&&v| !triangle(v)) {
        out.push(StepFailure::NonTriangleV3Neighborhood { vertex: v });
    }
    let pairs: Vec<(usize, usize)> = v3.iter().flat_map(|&u| v3.iter().filter(move |&&v| v > u).map(move |&v| (u, v))).collect();
    if let Some(&(u, v)) = pairs.iter().find(|&&(u, v)| g.has_edge(u, v)) {
        out.push(StepFailure::V3NotIndependent { u, v });
    }
    if let Some(&(u, v)) = pairs.iter().find(|&&(u, v)| nbrs(g, u) == nbrs(g, v)) {
        out.push(StepFailure::TwinsPresent { u, v });
    }
    let outside = |v: usize| nbrs(g, v).into_iter().filter(|&w| deg[w] != 3).count();
    if let Some(v) = (0..n).find(|&v| deg[v] >= 4 && outside(v) < 3) {
        out.push(StepFailure::BigVertexBound { vertex: v, outside_v3: outside(v) });
    }
    out
}

fn assert_arithmetic(r: &BoundReport, g: &Graph) {
    let n = g.n();
    let m = g.edges().count();
    let v3 = (0..n).filter(|&v| nbrs(g, v).len() == 3).count();
    assert_eq!((r.n, r.m, r.v3_size), (n, m, v3));
    assert_eq!(r.lhs_handshake, 2 * m);
    assert_eq!(r.rhs_big_vertex, 3 * n + 3 * v3);
    assert_eq!(r.rhs_min_degree, 4 * n as i64 - v3 as i64);
    assert_eq!(r.big_vertex_holds, 2 * m >= 3 * n + 3 * v3);
    assert_eq!(r.min_degree_holds, 2 * m as i64 >= 4 * n as i64 - v3 as i64);
    assert_eq!((r.final_lhs, r.final_rhs), (8 * m, 15 * n));
    assert_eq!(r.bound_holds, 8 * m >= 15 * n);
}

#[test]
fn reports_recompute_from_the_graph() {
    for n in 4..=8 {
        for g in enumerate_graphs(&EnumerationConstraints::new(n).min_degree(2)).unwrap() {
            let r = compute_bound_report(&g);
            assert_arithmetic(&r, &g);
            assert_eq!(r.step_failures, expected_failures(&g), "{g:?}");
            assert_eq!((r.reduced_n, r.reduced_m), (g.n(), g.m()));
        }
    }
}

#[test]
fn full_verification_recomputes() {
    for n in 4..=8 {
        for g in extremal_class(n) {
            let r = verify_edge_bound(&g).unwrap();
            assert_arithmetic(&r, &g);
            let (reduced, removed) = twin_reduce(&g);
            assert_eq!(r.removed_twins, removed);
            assert_eq!((r.reduced_n, r.reduced_m), (reduced.n(), reduced.m()));
            let mut expected = expected_failures(&reduced);
            if reduced.n() < 5 {
                expected.push(StepFailure::DegenerateBase { n: reduced.n() });
            }
            assert_eq!(r.step_failures, expected, "{g:?}");
        }
    }
}

#[test]
fn first_inequality_holds_when_the_argument_applies() {
    for n in 4..=8 {
        for g in min_degree_three(n) {
            if let Ok(None) = check_big_vertex_bound(&g) {
                let r = compute_bound_report(&g);
                assert!(r.big_vertex_holds, "{g:?}");
                assert!(r.step_failures.is_empty());
            }
        }
    }
}

#[test]
fn second_inequality_is_universal() {
    for n in 4..=8 {
        for g in min_degree_three(n) {
            assert!(compute_bound_report(&g).min_degree_holds, "{g:?}");
        }
    }
}

#[test]
fn twin_reduction_preserves_hypotheses() {
    let mut with_twins = 0;
    for n in 6..=9 {
        for g in extremal_class(n) {
            if find_v3_twins(&g).is_none() {
                continue;
            }
            with_twins += 1;
            let (reduced, removed) = twin_reduce(&g);
            assert!(!removed.is_empty());
            assert_eq!(reduced.n(), n - removed.len());
            assert!(find_v3_twins(&reduced).is_none());
            if reduced.n() >= 5 {
                assert!(common::naive_connectivity(&reduced) >= 3, "{g:?}");
                assert!(cyclecut::all_neighborhoods_cyclic(&reduced), "{g:?}");
            }
        }
    }
    assert!(with_twins > 0);
}

#[test]
fn degree_three_vertices_are_independent() {
    for n in 5..=9 {
        for g in extremal_class(n) {
            assert_eq!(check_v3_independent(&g).unwrap(), None, "{g:?}");
        }
    }
}

#[test]
fn worked_examples() {
    let (sub, _) = k4_substitution(&prism(3).unwrap()).unwrap();
    let r = verify_edge_bound(&sub).unwrap();
    assert_eq!((r.n, r.m, r.v3_size), (24, 45, 6));
    assert_eq!((r.lhs_handshake, r.rhs_big_vertex, r.rhs_min_degree), (90, 90, 90));
    assert_eq!((r.final_lhs, r.final_rhs), (360, 360));
    assert!(r.bound_holds && r.step_failures.is_empty());
    assert_eq!(check_big_vertex_bound(&sub).unwrap(), None);
    assert_eq!(twin_reduce(&sub).1, Vec::<usize>::new());
    assert!(matches!(cyclecut::verifier::two_separator_for_v3_edge(&sub), Err(PreconditionError::NoAdjacentV3Pair)));

    let (sub_k4, _) = k4_substitution(&complete_graph(4)).unwrap();
    let r = verify_edge_bound(&sub_k4).unwrap();
    assert!(r.bound_holds && r.step_failures.is_empty());
    assert_eq!(find_v3_twins(&sub_k4), None);

    let r = verify_edge_bound(&complete_graph(4)).unwrap();
    assert!(!r.bound_holds);
    assert!(r.step_failures.contains(&StepFailure::V3NotIndependent { u: 0, v: 1 }));
    assert!(r.step_failures.contains(&StepFailure::DegenerateBase { n: 4 }));

    let r = verify_edge_bound(&complete_graph(5)).unwrap();
    assert!(r.bound_holds && r.step_failures.is_empty());
    assert_eq!(check_v3_independent(&complete_graph(5)).unwrap(), None);

    let kme = k5_minus_edge();
    let r = verify_edge_bound(&kme).unwrap();
    assert_eq!((r.m, r.final_lhs, r.final_rhs), (9, 72, 75));
    assert!(!r.bound_holds);
    assert_eq!(r.removed_twins, vec![0]);
    assert!(r.step_failures.contains(&StepFailure::DegenerateBase { n: 4 }));
    assert_eq!(find_v3_twins(&kme), Some((0, 1)));
    assert!(matches!(check_big_vertex_bound(&kme), Err(PreconditionError::TwinsPresent(0, 1))));

    assert_eq!(check_big_vertex_bound(&octahedron()).unwrap(), None);
    assert!(matches!(verify_edge_bound(&prism(3).unwrap()), Err(HypothesisViolation::AcyclicNeighborhood { .. })));
}

#[test]
fn separator_witness_examples() {
    // K4 on {0,1,2,3} plus vertex 4 joined to 2 and 3.
    let g = Graph::from_edges(5, complete_graph(4).edges().chain([(2, 4), (3, 4)])).unwrap();
    let w = two_separator_witness(&g, 0, 1).unwrap();
    assert_eq!(w.to_vec(), vec![2, 3]);
    assert!(cyclecut::is_separator(&g, &w).unwrap());
    assert!(matches!(two_separator_witness(&complete_graph(4), 0, 1), Err(PreconditionError::TooFewVertices(4))));
    assert!(matches!(two_separator_witness(&g, 0, 4), Err(PreconditionError::NotAdjacent(0, 4))));
    assert!(matches!(two_separator_witness(&g, 0, 2), Err(PreconditionError::NotDegreeThree { vertex: 2, .. })));
}
