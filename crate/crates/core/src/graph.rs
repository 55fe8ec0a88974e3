//! Immutable simple undirected graphs and edge fault sets.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An undirected edge stored in canonical `(min, max)` form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "(usize, usize)", into = "(usize, usize)")]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    pub fn new(a: usize, b: usize) -> Self {
        if a <= b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }

    pub fn other(&self, x: usize) -> usize {
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }

    pub fn touches(&self, x: usize) -> bool {
        self.u == x || self.v == x
    }
}

impl From<(usize, usize)> for Edge {
    fn from((a, b): (usize, usize)) -> Self {
        Edge::new(a, b)
    }
}

impl From<Edge> for (usize, usize) {
    fn from(e: Edge) -> Self {
        (e.u, e.v)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.u, self.v)
    }
}

/// Simple undirected graph on vertex ids `0..n`.
///
/// Edges are kept sorted in canonical order, so an edge's index in
/// [`Graph::edges`] is stable and can be used as a compact handle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Builds a graph, rejecting out-of-range ids, self-loops and duplicates.
    pub fn new(n_vertices: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut edges = Vec::new();
        for (a, b) in pairs {
            if a >= n_vertices || b >= n_vertices {
                return Err(Error::VertexOutOfRange {
                    edge: (a, b),
                    n: n_vertices,
                });
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            edges.push(Edge::new(a, b));
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].u, w[0].v));
        }
        Ok(Self::from_sorted(n_vertices, edges))
    }

    /// Trusted constructor: `edges` must already be canonical, sorted and unique.
    pub(crate) fn from_sorted(n: usize, edges: Vec<Edge>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        let mut adj = vec![Vec::new(); n];
        for e in &edges {
            adj[e.u].push(e.v);
            adj[e.v].push(e.u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph {
            n,
            edges,
            adj,
            labels: None,
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::LabelCount {
                expected: self.n,
                got: labels.len(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn n_vertices(&self) -> usize {
        self.n
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.as_ref().and_then(|l| l.get(v)).map(String::as_str)
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::InvalidVertex { v, n: self.n })
        }
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.adj[v].len())
    }

    /// Minimum degree; 0 for the empty graph.
    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_regular(&self, k: usize) -> bool {
        self.adj.iter().all(|a| a.len() == k)
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && b < self.n && self.adj[a].binary_search(&b).is_ok()
    }

    pub fn edge_index(&self, e: Edge) -> Option<usize> {
        self.edges.binary_search(&e).ok()
    }

    /// `G - F`: same vertex set (and labels), edges not in `f`.
    pub fn remove_edges(&self, f: &FaultSet) -> Result<Graph> {
        let mut keep = vec![true; self.edges.len()];
        for e in f.edges() {
            let idx = self.edge_index(*e).ok_or(Error::ForeignEdge(e.u, e.v))?;
            keep[idx] = false;
        }
        let edges = self
            .edges
            .iter()
            .zip(&keep)
            .filter_map(|(e, k)| k.then_some(*e))
            .collect();
        let mut g = Graph::from_sorted(self.n, edges);
        g.labels = self.labels.clone();
        Ok(g)
    }

    /// Removes edges given by index into [`Graph::edges`]; indices must be valid.
    pub(crate) fn remove_edge_indices(&self, removed: &[usize]) -> Graph {
        let mut keep = vec![true; self.edges.len()];
        for &i in removed {
            keep[i] = false;
        }
        let edges = self
            .edges
            .iter()
            .zip(&keep)
            .filter_map(|(e, k)| k.then_some(*e))
            .collect();
        Graph::from_sorted(self.n, edges)
    }

    /// Subgraph induced by `vertices`, relabelled to `0..vertices.len()` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            pos[v] = i;
        }
        let mut edges: Vec<Edge> = self
            .edges
            .iter()
            .filter(|e| pos[e.u] != usize::MAX && pos[e.v] != usize::MAX)
            .map(|e| Edge::new(pos[e.u], pos[e.v]))
            .collect();
        edges.sort_unstable();
        let mut g = Graph::from_sorted(vertices.len(), edges);
        if let Some(labels) = &self.labels {
            g.labels = Some(vertices.iter().map(|&v| labels[v].clone()).collect());
        }
        g
    }

    /// Connected components, each sorted ascending, listed by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            queue.push_back(start);
            let mut comp = vec![start];
            while let Some(x) = queue.pop_front() {
                for &y in &self.adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                        queue.push_back(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn largest_component_size(&self) -> usize {
        self.components().iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// Degree sequence sorted descending.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }
}

/// A set of edges of some host graph, kept canonical and sorted.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FaultSet {
    edges: Vec<Edge>,
}

impl FaultSet {
    pub fn empty() -> Self {
        FaultSet::default()
    }

    /// Validates every edge against `host`; duplicates collapse.
    pub fn on(host: &Graph, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let mut edges: Vec<Edge> = edges.into_iter().collect();
        for e in &edges {
            if host.edge_index(*e).is_none() {
                return Err(Error::ForeignEdge(e.u, e.v));
            }
        }
        edges.sort_unstable();
        edges.dedup();
        Ok(FaultSet { edges })
    }

    pub(crate) fn from_indices(host: &Graph, idx: &[usize]) -> Self {
        let mut edges: Vec<Edge> = idx.iter().map(|&i| host.edges()[i]).collect();
        edges.sort_unstable();
        FaultSet { edges }
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, e: Edge) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    pub fn is_hosted_by(&self, host: &Graph) -> bool {
        self.edges.iter().all(|e| host.edge_index(*e).is_some())
    }

    /// Conditional admissibility: `δ(G - F) >= 2`.
    pub fn is_conditional(&self, host: &Graph) -> bool {
        let mut deg: Vec<usize> = (0..host.n_vertices()).map(|v| host.neighbors(v).len()).collect();
        for e in &self.edges {
            deg[e.u] -= 1;
            deg[e.v] -= 1;
        }
        deg.iter().all(|&d| d >= 2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c4() -> Graph {
        Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    #[test]
    fn k2_and_c4() {
        let k2 = Graph::new(2, [(0, 1)]).unwrap();
        assert_eq!(k2.n_edges(), 1);
        assert_eq!(k2.degree(0).unwrap(), 1);
        let c = c4();
        assert!(c.is_regular(2));
        assert_eq!(c.edges()[0], Edge::new(0, 1));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            Graph::new(2, [(0, 2)]),
            Err(Error::VertexOutOfRange { edge: (0, 2), .. })
        ));
        assert!(matches!(Graph::new(2, [(1, 1)]), Err(Error::SelfLoop(1))));
        assert!(matches!(
            Graph::new(3, [(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(0, 1))
        ));
        assert!(c4().degree(9).is_err());
    }

    #[test]
    fn remove_edges_yields_path() {
        let c = c4();
        let f = FaultSet::on(&c, [Edge::new(3, 0)]).unwrap();
        let p = c.remove_edges(&f).unwrap();
        assert_eq!(p.n_edges(), 3);
        assert_eq!(p.min_degree(), 1);
        assert!(p.is_connected());
        assert_eq!(c.remove_edges(&FaultSet::empty()).unwrap(), c);

        let k2 = Graph::new(2, [(0, 1)]).unwrap();
        let all = FaultSet::on(&k2, [Edge::new(0, 1)]).unwrap();
        let empty = k2.remove_edges(&all).unwrap();
        assert_eq!(empty.components(), vec![vec![0], vec![1]]);
    }

    #[test]
    fn foreign_edges_rejected() {
        let c = c4();
        assert!(matches!(
            FaultSet::on(&c, [Edge::new(0, 2)]),
            Err(Error::ForeignEdge(0, 2))
        ));
    }

    #[test]
    fn components_partition() {
        let g = Graph::new(5, [(0, 1), (2, 3)]).unwrap();
        let comps = g.components();
        assert_eq!(comps, vec![vec![0, 1], vec![2, 3], vec![4]]);
        assert_eq!(g.largest_component_size(), 2);
        assert!(!g.is_connected());
    }

    #[test]
    fn conditional_admissibility() {
        let c = c4();
        assert!(FaultSet::empty().is_conditional(&c));
        let f = FaultSet::on(&c, [Edge::new(0, 1)]).unwrap();
        assert!(!f.is_conditional(&c));
    }
}
