//! Exact connectivity through unit-capacity max-flow.
//!
//! Every undirected edge becomes a pair of opposite arcs of capacity one that
//! are each other's residual, which is the standard reduction for undirected
//! edge-disjoint paths. Vertex connectivity goes through the usual in/out
//! vertex split on a directed auxiliary network.

use std::collections::VecDeque;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

/// Default cap on the number of subsets an exhaustive enumeration may visit.
pub const DEFAULT_SUBSET_BUDGET: u128 = 10_000_000;

/// Outcome of a `(u, v)` max-flow: the path count and a minimum edge cut.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlowResult {
    pub value: usize,
    /// Edges leaving the residual source side; `cut.len() == value`.
    pub cut: Vec<Edge>,
}

#[derive(Debug, Clone)]
struct Arc {
    to: usize,
    cap: u32,
}

/// Dinic's algorithm over an arc list. Arc `i ^ 1` is the residual of arc `i`.
#[derive(Debug, Clone)]
pub(crate) struct FlowNetwork {
    arcs: Vec<Arc>,
    initial: Vec<u32>,
    out: Vec<Vec<usize>>,
    level: Vec<i32>,
    next: Vec<usize>,
}

impl FlowNetwork {
    pub(crate) fn new(nodes: usize) -> Self {
        FlowNetwork {
            arcs: Vec::new(),
            initial: Vec::new(),
            out: vec![Vec::new(); nodes],
            level: vec![-1; nodes],
            next: vec![0; nodes],
        }
    }

    pub(crate) fn from_graph(g: &Graph) -> Self {
        let mut net = FlowNetwork::new(g.n_vertices());
        for e in g.edges() {
            net.add_pair(e.u, e.v, 1, 1);
        }
        net
    }

    fn add_pair(&mut self, a: usize, b: usize, cap_ab: u32, cap_ba: u32) {
        let i = self.arcs.len();
        self.arcs.push(Arc { to: b, cap: cap_ab });
        self.arcs.push(Arc { to: a, cap: cap_ba });
        self.initial.push(cap_ab);
        self.initial.push(cap_ba);
        self.out[a].push(i);
        self.out[b].push(i + 1);
    }

    pub(crate) fn add_directed(&mut self, a: usize, b: usize, cap: u32) {
        self.add_pair(a, b, cap, 0);
    }

    pub(crate) fn reset(&mut self) {
        for (arc, &c) in self.arcs.iter_mut().zip(&self.initial) {
            arc.cap = c;
        }
    }

    fn bfs(&mut self, s: usize, t: usize) -> bool {
        self.level.iter_mut().for_each(|l| *l = -1);
        self.level[s] = 0;
        let mut q = VecDeque::from([s]);
        while let Some(x) = q.pop_front() {
            for &a in &self.out[x] {
                let arc = &self.arcs[a];
                if arc.cap > 0 && self.level[arc.to] < 0 {
                    self.level[arc.to] = self.level[x] + 1;
                    q.push_back(arc.to);
                }
            }
        }
        self.level[t] >= 0
    }

    fn dfs(&mut self, x: usize, t: usize, pushed: u32) -> u32 {
        if x == t {
            return pushed;
        }
        while self.next[x] < self.out[x].len() {
            let a = self.out[x][self.next[x]];
            let (to, cap) = (self.arcs[a].to, self.arcs[a].cap);
            if cap > 0 && self.level[to] == self.level[x] + 1 {
                let d = self.dfs(to, t, pushed.min(cap));
                if d > 0 {
                    self.arcs[a].cap -= d;
                    self.arcs[a ^ 1].cap += d;
                    return d;
                }
            }
            self.next[x] += 1;
        }
        0
    }

    /// Max flow from `s` to `t`, stopping once `limit` units are routed.
    pub(crate) fn max_flow(&mut self, s: usize, t: usize, limit: usize) -> usize {
        let mut flow = 0usize;
        while flow < limit && self.bfs(s, t) {
            self.next.iter_mut().for_each(|n| *n = 0);
            loop {
                let want = (limit - flow).min(u32::MAX as usize) as u32;
                let d = self.dfs(s, t, want);
                if d == 0 {
                    break;
                }
                flow += d as usize;
                if flow >= limit {
                    break;
                }
            }
        }
        flow
    }

    /// Nodes reachable from `s` in the current residual network.
    pub(crate) fn residual_side(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.out.len()];
        seen[s] = true;
        let mut q = VecDeque::from([s]);
        while let Some(x) = q.pop_front() {
            for &a in &self.out[x] {
                let arc = &self.arcs[a];
                if arc.cap > 0 && !seen[arc.to] {
                    seen[arc.to] = true;
                    q.push_back(arc.to);
                }
            }
        }
        seen
    }
}

fn check_pair(g: &Graph, u: usize, v: usize) -> Result<()> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return Err(Error::SameEndpoints(u));
    }
    Ok(())
}

fn cut_from_side(g: &Graph, side: &[bool]) -> Vec<Edge> {
    g.edges()
        .iter()
        .filter(|e| side[e.u] != side[e.v])
        .copied()
        .collect()
}

/// Maximum number of edge-disjoint `(u, v)`-paths with a minimum cut certificate.
///
/// Applies to every distinct pair, adjacent or not.
pub fn max_edge_disjoint_paths(g: &Graph, u: usize, v: usize) -> Result<FlowResult> {
    check_pair(g, u, v)?;
    let mut net = FlowNetwork::from_graph(g);
    let value = net.max_flow(u, v, usize::MAX);
    let side = net.residual_side(u);
    let cut = cut_from_side(g, &side);
    debug_assert_eq!(cut.len(), value);
    Ok(FlowResult { value, cut })
}

/// An explicit family of `value` edge-disjoint `(u, v)`-paths, as vertex sequences.
pub fn edge_disjoint_paths(g: &Graph, u: usize, v: usize) -> Result<Vec<Vec<usize>>> {
    check_pair(g, u, v)?;
    let mut net = FlowNetwork::from_graph(g);
    let value = net.max_flow(u, v, usize::MAX);
    // Arc `i` of an undirected pair carries one unit iff its residual is zero.
    let mut used = vec![false; net.arcs.len()];
    let mut paths = Vec::with_capacity(value);
    for _ in 0..value {
        let mut path = vec![u];
        let mut x = u;
        while x != v {
            let a = net.out[x]
                .iter()
                .copied()
                .find(|&a| !used[a] && net.arcs[a].cap == 0 && net.initial[a] == 1)
                .expect("flow conservation");
            used[a] = true;
            x = net.arcs[a].to;
            if let Some(p) = path.iter().position(|&y| y == x) {
                path.truncate(p + 1);
            } else {
                path.push(x);
            }
        }
        paths.push(path);
    }
    Ok(paths)
}

/// Exact λ(G); 0 for disconnected graphs and graphs with fewer than two vertices.
pub fn edge_connectivity(g: &Graph) -> usize {
    let n = g.n_vertices();
    if n < 2 || !g.is_connected() {
        return 0;
    }
    let mut net = FlowNetwork::from_graph(g);
    let mut best = g.min_degree();
    for v in 1..n {
        net.reset();
        best = best.min(net.max_flow(0, v, best));
    }
    best
}

fn local_vertex_connectivity(g: &Graph, s: usize, t: usize, limit: usize) -> usize {
    let n = g.n_vertices();
    let big = n as u32 + 1;
    let mut net = FlowNetwork::new(2 * n);
    for v in 0..n {
        let cap = if v == s || v == t { big } else { 1 };
        net.add_directed(2 * v, 2 * v + 1, cap);
    }
    for e in g.edges() {
        net.add_directed(2 * e.u + 1, 2 * e.v, big);
        net.add_directed(2 * e.v + 1, 2 * e.u, big);
    }
    net.max_flow(2 * s + 1, 2 * t, limit)
}

/// Exact κ(G); `n - 1` for complete graphs, 0 for disconnected graphs.
///
/// Some vertex among the first `κ + 1` ids lies outside a minimum separator,
/// so only pairs whose smaller id is at most the running bound need checking.
pub fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.n_vertices();
    if n < 2 || !g.is_connected() {
        return 0;
    }
    let mut best = (n - 1).min(g.min_degree());
    let mut i = 0;
    while i <= best && i < n {
        for j in i + 1..n {
            if !g.has_edge(i, j) {
                best = best.min(local_vertex_connectivity(g, i, j, best));
            }
        }
        i += 1;
    }
    best
}

/// Flow-equivalent tree (Gusfield): `parent[i]` and the min cut value to it.
/// Vertex 0 is the root.
pub(crate) fn flow_equivalent_tree(g: &Graph) -> (Vec<usize>, Vec<usize>) {
    let n = g.n_vertices();
    let mut parent = vec![0usize; n];
    let mut weight = vec![0usize; n];
    let mut net = FlowNetwork::from_graph(g);
    for s in 1..n {
        let t = parent[s];
        net.reset();
        weight[s] = net.max_flow(s, t, usize::MAX);
        let side = net.residual_side(s);
        for i in s + 1..n {
            if parent[i] == t && side[i] {
                parent[i] = s;
            }
        }
    }
    (parent, weight)
}

/// All-pairs minimum `(u, v)`-edge-cut values as a dense matrix.
pub fn all_pairs_min_cut(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n_vertices();
    let (parent, weight) = flow_equivalent_tree(g);
    let mut tree = vec![Vec::new(); n];
    for v in 1..n {
        tree[v].push((parent[v], weight[v]));
        tree[parent[v]].push((v, weight[v]));
    }
    let mut out = vec![vec![usize::MAX; n]; n];
    let mut stack = Vec::new();
    for root in 0..n {
        let row = &mut out[root];
        stack.push((root, usize::MAX));
        while let Some((x, m)) = stack.pop() {
            row[x] = m;
            for &(y, w) in &tree[x] {
                if row[y] == usize::MAX && y != root {
                    stack.push((y, m.min(w)));
                }
            }
        }
    }
    out
}

pub(crate) fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u128 = 1;
    for i in 0..k {
        r = r.saturating_mul(n - i) / (i + 1);
    }
    r
}

/// Number of subsets of an `m`-set with size in `0..=max_size`.
pub fn subsets_up_to(m: usize, max_size: usize) -> u128 {
    (0..=max_size.min(m))
        .map(|k| binomial(m as u128, k as u128))
        .fold(0u128, u128::saturating_add)
}

fn separated(g: &Graph, removed: &[bool], u: usize, v: usize) -> bool {
    let mut seen = vec![false; g.n_vertices()];
    seen[u] = true;
    let mut q = VecDeque::from([u]);
    while let Some(x) = q.pop_front() {
        for &y in g.neighbors(x) {
            let idx = g.edge_index(Edge::new(x, y)).unwrap();
            if !removed[idx] && !seen[y] {
                if y == v {
                    return false;
                }
                seen[y] = true;
                q.push_back(y);
            }
        }
    }
    true
}

/// Smallest `k < limit` such that some `k` edges separate `u` from `v`,
/// found by enumerating edge subsets in size order. Returns `limit` when no
/// smaller cut exists.
pub fn brute_force_min_cut(
    g: &Graph,
    u: usize,
    v: usize,
    limit: usize,
    budget: u128,
) -> Result<usize> {
    check_pair(g, u, v)?;
    let m = g.n_edges();
    if limit > 0 {
        let count = subsets_up_to(m, limit - 1);
        if count > budget {
            return Err(Error::BudgetExceeded { count, budget });
        }
    }
    let mut removed = vec![false; m];
    for k in 0..limit.min(m + 1) {
        for subset in (0..m).combinations(k) {
            subset.iter().for_each(|&i| removed[i] = true);
            let cut = separated(g, &removed, u, v);
            subset.iter().for_each(|&i| removed[i] = false);
            if cut {
                return Ok(k);
            }
        }
    }
    Ok(limit)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cube3() -> Graph {
        let mut pairs = Vec::new();
        for x in 0..8usize {
            for b in 0..3 {
                let y = x ^ (1 << b);
                if x < y {
                    pairs.push((x, y));
                }
            }
        }
        Graph::new(8, pairs).unwrap()
    }

    fn c4() -> Graph {
        Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    #[test]
    fn small_flows() {
        let k2 = Graph::new(2, [(0, 1)]).unwrap();
        assert_eq!(max_edge_disjoint_paths(&k2, 0, 1).unwrap().value, 1);
        let r = max_edge_disjoint_paths(&c4(), 0, 2).unwrap();
        assert_eq!(r.value, 2);
        assert_eq!(r.cut.len(), 2);
        let q3 = cube3();
        for e in q3.edges() {
            assert_eq!(max_edge_disjoint_paths(&q3, e.u, e.v).unwrap().value, 3);
        }
    }

    #[test]
    fn flow_errors() {
        let g = c4();
        assert_eq!(
            max_edge_disjoint_paths(&g, 1, 1),
            Err(Error::SameEndpoints(1))
        );
        assert!(max_edge_disjoint_paths(&g, 0, 7).is_err());
    }

    #[test]
    fn path_decomposition_is_edge_disjoint() {
        let q3 = cube3();
        let paths = edge_disjoint_paths(&q3, 0, 7).unwrap();
        assert_eq!(paths.len(), 3);
        let mut used = std::collections::HashSet::new();
        for p in &paths {
            assert_eq!(p[0], 0);
            assert_eq!(*p.last().unwrap(), 7);
            for w in p.windows(2) {
                assert!(q3.has_edge(w[0], w[1]));
                assert!(used.insert(Edge::new(w[0], w[1])));
            }
        }
    }

    #[test]
    fn connectivity_small() {
        let p3 = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(edge_connectivity(&p3), 1);
        assert_eq!(vertex_connectivity(&p3), 1);
        let q3 = cube3();
        assert_eq!(edge_connectivity(&q3), 3);
        assert_eq!(vertex_connectivity(&q3), 3);
        let k4 = Graph::new(4, (0..4).flat_map(|a| (a + 1..4).map(move |b| (a, b)))).unwrap();
        assert_eq!(vertex_connectivity(&k4), 3);
        assert_eq!(edge_connectivity(&k4), 3);
        let split = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(edge_connectivity(&split), 0);
        assert_eq!(vertex_connectivity(&split), 0);
    }

    #[test]
    fn brute_force_matches_examples() {
        let k2 = Graph::new(2, [(0, 1)]).unwrap();
        assert_eq!(brute_force_min_cut(&k2, 0, 1, 2, DEFAULT_SUBSET_BUDGET), Ok(1));
        assert_eq!(brute_force_min_cut(&c4(), 0, 2, 3, DEFAULT_SUBSET_BUDGET), Ok(2));
        let q3 = cube3();
        assert_eq!(brute_force_min_cut(&q3, 0, 1, 4, DEFAULT_SUBSET_BUDGET), Ok(3));
        // No cut of size < 2 between opposite corners of C4.
        assert_eq!(brute_force_min_cut(&c4(), 0, 2, 2, DEFAULT_SUBSET_BUDGET), Ok(2));
        assert!(matches!(
            brute_force_min_cut(&q3, 0, 1, 4, 10),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn gusfield_matches_pairwise_flows() {
        let q3 = cube3();
        let g = q3.remove_edge_indices(&[0, 5, 7]);
        let table = all_pairs_min_cut(&g);
        for u in 0..8 {
            for v in 0..8 {
                if u != v {
                    assert_eq!(table[u][v], max_edge_disjoint_paths(&g, u, v).unwrap().value);
                }
            }
        }
    }

    #[test]
    fn subset_counts() {
        assert_eq!(subsets_up_to(24, 2), 301);
        assert_eq!(subsets_up_to(24, 5), 55455);
        assert_eq!(subsets_up_to(3, 10), 8);
    }
}
