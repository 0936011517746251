//! Reference implementations used to cross-check the library. They work
//! from edge lists and adjacency lists only and share no code with the
//! bitset routines under test.

#![allow(dead_code)]

use std::collections::VecDeque;

use cyclecut::Graph;

/// Unordered vertex pairs in graph6 bit order: `(0,1), (0,2), (1,2), (0,3), ...`.
pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect()
}

/// The labeled graph whose edge set is given by the bits of `code`.
pub fn graph_from_code(n: usize, code: u64) -> Graph {
    let edges = pairs(n).into_iter().enumerate().filter(|(k, _)| code >> k & 1 == 1).map(|(_, e)| e);
    Graph::from_edges(n, edges).unwrap()
}

pub fn adjacency(g: &Graph) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); g.n()];
    for (u, v) in g.edges() {
        adj[u].push(v);
        adj[v].push(u);
    }
    adj
}

/// Components of the graph left after deleting `removed`.
pub fn components_without(adj: &[Vec<usize>], removed: &[bool]) -> usize {
    let mut seen = removed.to_vec();
    let mut count = 0;
    for s in 0..adj.len() {
        if seen[s] {
            continue;
        }
        count += 1;
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    count
}

pub fn naive_connected(g: &Graph) -> bool {
    g.n() <= 1 || components_without(&adjacency(g), &vec![false; g.n()]) == 1
}

fn mask_to_flags(n: usize, mask: u64) -> Vec<bool> {
    (0..n).map(|v| mask >> v & 1 == 1).collect()
}

/// Smallest number of vertices whose removal disconnects the graph, or
/// `n - 1` when no set does (complete graphs).
pub fn naive_connectivity(g: &Graph) -> usize {
    let n = g.n();
    let adj = adjacency(g);
    let mut best = n.saturating_sub(1);
    for mask in 0u64..1 << n {
        let size = mask.count_ones() as usize;
        if size >= best || n - size < 2 {
            continue;
        }
        if components_without(&adj, &mask_to_flags(n, mask)) >= 2 {
            best = size;
        }
    }
    best
}

/// Cycle detection by depth-first search on the subgraph induced by `set`.
pub fn dfs_has_cycle(g: &Graph, set: &[usize]) -> bool {
    let n = g.n();
    let mut inside = vec![false; n];
    for &v in set {
        inside[v] = true;
    }
    let adj = adjacency(g);
    let mut parent = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    for &root in set {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut stack = vec![root];
        while let Some(u) = stack.pop() {
            for &w in &adj[u] {
                if !inside[w] || w == parent[u] {
                    continue;
                }
                if seen[w] {
                    return true;
                }
                seen[w] = true;
                parent[w] = u;
                stack.push(w);
            }
        }
    }
    false
}

pub fn naive_independent(g: &Graph, set: &[usize]) -> bool {
    set.iter().all(|&u| set.iter().all(|&v| !g.has_edge(u, v)))
}

pub fn mask_vertices(mask: u64) -> Vec<usize> {
    (0..64).filter(|v| mask >> v & 1 == 1).collect()
}

/// Whether some independent (or forest-inducing) vertex set leaves at least
/// two vertices and disconnects the rest, trying every subset.
pub fn naive_cut_exists(g: &Graph, forest: bool) -> bool {
    let n = g.n();
    let adj = adjacency(g);
    (0u64..1 << n).any(|mask| {
        let set = mask_vertices(mask);
        if n - set.len() < 2 {
            return false;
        }
        let ok = if forest { !dfs_has_cycle(g, &set) } else { naive_independent(g, &set) };
        ok && components_without(&adj, &mask_to_flags(n, mask)) >= 2
    })
}

/// Orbits of labeled graphs on `n` vertices under relabeling, found by
/// closing each unseen edge set under adjacent transpositions. Returns the
/// smallest code in each orbit, in increasing order.
pub fn orbit_representatives(n: usize) -> Vec<u64> {
    let p = n * n.saturating_sub(1) / 2;
    let index = |a: usize, b: usize| {
        let (i, j) = if a < b { (a, b) } else { (b, a) };
        j * (j - 1) / 2 + i
    };
    // Swapping vertices t and t+1 exchanges pair positions {k,t} and {k,t+1}.
    // For k < t those sit t apart; for k > t+1 they are adjacent.
    let swaps: Vec<[(u64, u32); 2]> = (0..n.saturating_sub(1))
        .map(|t| {
            let low: u64 = (0..t).map(|k| 1u64 << index(k, t)).sum();
            let high: u64 = (t + 2..n).map(|k| 1u64 << index(k, t)).sum();
            [(low, t as u32), (high, 1)]
        })
        .collect();
    let total = 1u64 << p;
    let mut seen = vec![0u64; (total as usize).div_ceil(64)];
    let mut reps = Vec::new();
    let mut stack = Vec::new();
    for code in 0..total {
        if seen[(code >> 6) as usize] >> (code & 63) & 1 == 1 {
            continue;
        }
        reps.push(code);
        seen[(code >> 6) as usize] |= 1 << (code & 63);
        stack.push(code);
        while let Some(x) = stack.pop() {
            for sw in &swaps {
                let mut y = x;
                for &(mask, shift) in sw {
                    let d = (y >> shift ^ y) & mask;
                    y ^= d | d << shift;
                }
                let (word, bit) = ((y >> 6) as usize, y & 63);
                if seen[word] >> bit & 1 == 0 {
                    seen[word] |= 1 << bit;
                    stack.push(y);
                }
            }
        }
    }
    reps
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Number of unlabeled graphs on `n` vertices by Burnside's lemma: the
/// average over all permutations of 2^(cycles induced on vertex pairs).
pub fn burnside_count(n: usize) -> u64 {
    let pairs = pairs(n);
    let index = |a: usize, b: usize| pairs.iter().position(|&e| e == (a.min(b), a.max(b))).unwrap();
    let perms = permutations(n);
    let mut sum: u128 = 0;
    for perm in &perms {
        let image: Vec<usize> = pairs.iter().map(|&(a, b)| index(perm[a], perm[b])).collect();
        let mut seen = vec![false; pairs.len()];
        let mut cycles = 0;
        for s in 0..pairs.len() {
            if !seen[s] {
                cycles += 1;
                let mut x = s;
                while !seen[x] {
                    seen[x] = true;
                    x = image[x];
                }
            }
        }
        sum += 1u128 << cycles;
    }
    (sum / perms.len() as u128) as u64
}

/// Connected counts from total counts `a[0..]` by inverting the Euler
/// transform: a(n) = (1/n) * sum_{k=1..n} b(k) a(n-k), b(k) = sum_{d|k} d c(d).
pub fn connected_from_totals(a: &[u64]) -> Vec<u64> {
    let len = a.len();
    let mut c = vec![0i128; len];
    let mut b = vec![0i128; len];
    for n in 1..len {
        // n * a(n) = b(n) * a(0) + sum_{k<n} b(k) a(n-k), and b(n) = n c(n) + sum_{d|n, d<n} d c(d).
        let rest: i128 = (1..n).map(|k| b[k] * a[n - k] as i128).sum();
        let bn = n as i128 * a[n] as i128 - rest;
        let lower: i128 = (1..n).filter(|d| n % d == 0).map(|d| d as i128 * c[d]).sum();
        c[n] = (bn - lower) / n as i128;
        b[n] = bn;
    }
    c.into_iter().map(|x| x as u64).collect()
}

/// Every graph on `base.n() + 1` vertices obtained by joining a new vertex
/// to a subset of `base`, kept when `keep` accepts it. Deleting a vertex of
/// any graph on `n + 1` vertices leaves a graph on `n`, so extending a
/// complete list of `n`-vertex graphs covers every `(n + 1)`-vertex graph.
pub fn vertex_extensions(base: &Graph, keep: &mut dyn FnMut(&Graph) -> bool, out: &mut Vec<Graph>) {
    let n = base.n();
    let edges: Vec<(usize, usize)> = base.edges().collect();
    for mask in 0u64..1 << n {
        let g = Graph::from_edges(n + 1, edges.iter().copied().chain(mask_vertices(mask).into_iter().map(|v| (v, n)))).unwrap();
        if keep(&g) {
            out.push(g);
        }
    }
}

/// Newline-separated graph6 for a list of graphs.
pub fn graph6_lines(graphs: &[Graph]) -> String {
    let mut s = String::new();
    for g in graphs {
        s.push_str(&g.to_graph6());
        s.push('\n');
    }
    s
}

/// Independent reference list on `n + 1` vertices: all one-vertex
/// extensions of the `n`-vertex orbit representatives passing `keep`.
/// Isomorphic duplicates remain; harness scans do not care.
pub fn extension_stream(n: usize, reps: &[u64], keep: &mut dyn FnMut(&Graph) -> bool) -> String {
    let mut out = Vec::new();
    for &code in reps {
        vertex_extensions(&graph_from_code(n, code), keep, &mut out);
    }
    graph6_lines(&out)
}

/// Straightforward graph6 writer over the upper triangle, column by column.
pub fn reference_graph6(g: &Graph) -> Vec<u8> {
    let n = g.n();
    let mut out = if n < 63 {
        vec![n as u8 + 63]
    } else {
        vec![126, (n >> 12) as u8 + 63, (n >> 6 & 63) as u8 + 63, (n & 63) as u8 + 63]
    };
    let bits: Vec<bool> = pairs(n).into_iter().map(|(i, j)| g.has_edge(i, j)).collect();
    for chunk in bits.chunks(6) {
        let mut byte = 0u8;
        for (k, &b) in chunk.iter().enumerate() {
            byte |= (b as u8) << (5 - k);
        }
        out.push(byte + 63);
    }
    out
}
