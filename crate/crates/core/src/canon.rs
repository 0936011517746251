//! Canonical forms for small graphs.
//!
//! The canonical form of a graph is the lexicographically smallest graph6
//! encoding over the relabelings that respect an iterated degree refinement
//! of the vertex set. Because the refinement does not depend on labels, this
//! is an isomorphism invariant. The search individualizes one
//! vertex of the first non-singleton cell at a time, refines, and recurses.
//! Automorphisms found along the way prune children in the same orbit, and a
//! leaf equivalent to the first leaf lets the search jump back to where the
//! two paths diverge.
//!
//! Keys are the graph6 data bits as an integer (first bit most significant),
//! so comparing keys of equal `n` compares graph6 strings.

use thiserror::Error;

use crate::graph::{low_mask, Bits, Graph};
use crate::graph6::encode_graph6;

/// Largest `n` accepted by the canonical-form routines.
pub const CANON_MAX_N: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("canonical form supports at most {CANON_MAX_N} vertices, got {0}")]
pub struct CanonError(pub usize);

/// Packs the upper triangle of the graph relabeled so that `order[i]`
/// becomes vertex `i`, in graph6 bit order.
#[inline]
fn key_for_order(rows: &[u64], order: &[u8]) -> u128 {
    let mut key = 0u128;
    for j in 1..order.len() {
        let row = rows[order[j] as usize];
        for &oi in &order[..j] {
            key = key << 1 | (row >> oi & 1) as u128;
        }
    }
    key
}

/// Rows of the graph on `n` vertices encoded by `key`.
pub(crate) fn rows_from_key(n: usize, key: u128) -> Vec<u64> {
    let mut rows = vec![0u64; n];
    let nbits = n * n.saturating_sub(1) / 2;
    let mut k = nbits;
    for j in 1..n {
        for i in 0..j {
            k -= 1;
            if key >> k & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
        }
    }
    rows
}

pub(crate) fn graph_from_key(n: usize, key: u128) -> Graph {
    Graph::from_rows(rows_from_key(n, key))
}

/// Refines an ordered partition until it is equitable: every vertex of a
/// cell has the same number of neighbors in each cell. Split pieces are
/// ordered by neighbor count, so the result is labeling-invariant.
fn refine(rows: &[u64], cells: &mut Vec<u64>) {
    let mut buckets = [0u64; CANON_MAX_N + 1];
    loop {
        let mut changed = false;
        let mut w = 0;
        while w < cells.len() {
            let splitter = cells[w];
            let mut c = 0;
            while c < cells.len() {
                let cell = cells[c];
                if cell.count_ones() == 1 {
                    c += 1;
                    continue;
                }
                let mut lo = usize::MAX;
                let mut hi = 0;
                for v in Bits(cell) {
                    let k = (rows[v] & splitter).count_ones() as usize;
                    buckets[k] |= 1 << v;
                    lo = lo.min(k);
                    hi = hi.max(k);
                }
                if lo == hi {
                    buckets[lo] = 0;
                    c += 1;
                    continue;
                }
                let pieces: Vec<u64> = (lo..=hi).map(|k| std::mem::take(&mut buckets[k])).filter(|&b| b != 0).collect();
                let len = pieces.len();
                cells.splice(c..=c, pieces);
                c += len;
                changed = true;
            }
            w += 1;
        }
        if !changed {
            return;
        }
    }
}

struct Search<'a> {
    rows: &'a [u64],
    n: usize,
    first: Option<(u128, Vec<usize>, Vec<u8>)>,
    best: Option<(u128, Vec<u8>)>,
    autos: Vec<Vec<u8>>,
}

fn find(parent: &mut [u8], mut x: usize) -> usize {
    while parent[x] as usize != x {
        parent[x] = parent[parent[x] as usize];
        x = parent[x] as usize;
    }
    x
}

impl Search<'_> {
    /// Orbits of the group generated by the known automorphisms that fix
    /// every vertex on `path`.
    fn orbits(&self, path: &[usize]) -> Vec<u8> {
        let mut parent: Vec<u8> = (0..self.n as u8).collect();
        for gamma in &self.autos {
            if path.iter().all(|&p| gamma[p] as usize == p) {
                for (v, &w) in gamma.iter().enumerate() {
                    let (a, b) = (find(&mut parent, v), find(&mut parent, w as usize));
                    if a != b {
                        parent[a.max(b)] = a.min(b) as u8;
                    }
                }
            }
        }
        parent
    }

    fn record_auto(&mut self, from: &[u8], to: &[u8]) {
        let mut gamma = vec![0u8; self.n];
        for (&a, &b) in from.iter().zip(to) {
            gamma[a as usize] = b;
        }
        if gamma.iter().enumerate().any(|(v, &w)| v != w as usize) {
            self.autos.push(gamma);
        }
    }

    /// Explores the subtree below an equitable partition. Returns `Some(d)`
    /// when every node deeper than `d` on the current path is finished.
    fn explore(&mut self, cells: &[u64], path: &mut Vec<usize>) -> Option<usize> {
        let Some(target_idx) = cells.iter().position(|c| c.count_ones() > 1) else {
            return self.leaf(cells, path);
        };
        let depth = path.len();
        let target = cells[target_idx];
        let mut explored: Vec<usize> = Vec::new();
        for v in Bits(target) {
            if !explored.is_empty() {
                let mut parent = self.orbits(path);
                let root = find(&mut parent, v);
                if explored.iter().any(|&u| find(&mut parent, u) == root) {
                    continue;
                }
            }
            explored.push(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target_idx]);
            child.push(1u64 << v);
            child.push(target & !(1u64 << v));
            child.extend_from_slice(&cells[target_idx + 1..]);
            refine(self.rows, &mut child);
            path.push(v);
            let jump = self.explore(&child, path);
            path.pop();
            if let Some(level) = jump {
                if level < depth {
                    return Some(level);
                }
            }
        }
        None
    }

    fn leaf(&mut self, cells: &[u64], path: &[usize]) -> Option<usize> {
        let order: Vec<u8> = cells.iter().map(|c| c.trailing_zeros() as u8).collect();
        let key = key_for_order(self.rows, &order);
        let Some((first_key, first_path, first_order)) = &self.first else {
            self.first = Some((key, path.to_vec(), order.clone()));
            self.best = Some((key, order));
            return None;
        };
        if key == *first_key {
            let common = first_path.iter().zip(path).take_while(|(a, b)| a == b).count();
            let first_order = first_order.clone();
            self.record_auto(&first_order, &order);
            return Some(common);
        }
        let (best_key, best_order) = self.best.as_ref().expect("set with first leaf");
        if key == *best_key {
            let best_order = best_order.clone();
            self.record_auto(&best_order, &order);
        } else if key < *best_key {
            self.best = Some((key, order));
        }
        None
    }
}

/// Canonical key and the labeling that attains it: `order[i]` is the
/// original vertex placed at position `i`.
pub(crate) fn canonical_rows(rows: &[u64]) -> (u128, Vec<u8>) {
    let n = rows.len();
    assert!(n <= CANON_MAX_N);
    if n <= 1 {
        return (0, (0..n as u8).collect());
    }
    let mut cells = vec![low_mask(n)];
    refine(rows, &mut cells);
    let mut search = Search { rows, n, first: None, best: None, autos: Vec::new() };
    search.explore(&cells, &mut Vec::with_capacity(n));
    search.best.expect("search reaches at least one leaf")
}

pub(crate) fn canonical_key_rows(rows: &[u64]) -> u128 {
    canonical_rows(rows).0
}

/// Canonical key: equal for isomorphic graphs of the same order, distinct otherwise.
pub fn canonical_key(g: &Graph) -> Result<u128, CanonError> {
    if g.n() > CANON_MAX_N {
        return Err(CanonError(g.n()));
    }
    Ok(canonical_key_rows(g.rows()))
}

/// The canonically relabeled copy of `g`.
pub fn canonical_graph(g: &Graph) -> Result<Graph, CanonError> {
    Ok(graph_from_key(g.n(), canonical_key(g)?))
}

/// A permutation `perm` with `g.relabel(&perm)` equal to the canonical graph.
pub fn canonical_labeling(g: &Graph) -> Result<Vec<usize>, CanonError> {
    if g.n() > CANON_MAX_N {
        return Err(CanonError(g.n()));
    }
    let (_, order) = canonical_rows(g.rows());
    let mut perm = vec![0; g.n()];
    for (pos, &v) in order.iter().enumerate() {
        perm[v as usize] = pos;
    }
    Ok(perm)
}

/// The smallest graph6 encoding of `g` over refinement-compatible relabelings.
/// Equal for isomorphic graphs, different otherwise.
pub fn canonical_form(g: &Graph) -> Result<Vec<u8>, CanonError> {
    Ok(encode_graph6(&canonical_graph(g)?))
}
