//! Line graphs with edge provenance, f-vertices, and the BCDC original/logical pair.

use serde::{Deserialize, Serialize};

use crate::graph::{Edge, Graph};
use crate::report::CheckOutcome;
use crate::topology::{gen_family, FamilyKind, HlNetwork};
use crate::error::{Error, Result};

/// Which part of `L_n = L(Q^1 ⊕_f Q^2)` a line vertex belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Part {
    /// Inside `L^1_{n-1}`: base edge within the 0-half.
    Left,
    /// Inside `L^2_{n-1}`: base edge within the 1-half.
    Right,
    /// An f-vertex: base edge is a top-level f-edge.
    F,
}

/// `L(G)`. Line vertex `i` is the `i`-th base edge in canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineGraph {
    graph: Graph,
    base: Graph,
    parts: Option<Vec<Part>>,
    dimension: Option<usize>,
}

/// Line vertex label: both endpoint labels, smaller endpoint first, joined by `-`.
fn edge_label(base: &Graph, e: Edge) -> Option<String> {
    Some(format!("{}-{}", base.label(e.u)?, base.label(e.v)?))
}

/// Builds `L(base)`.
pub fn line_graph(base: &Graph) -> LineGraph {
    let n = base.n_edges();
    let mut pairs = Vec::new();
    for x in 0..base.n_vertices() {
        let inc: Vec<usize> = base
            .neighbors(x)
            .iter()
            .map(|&y| base.edge_index(Edge::new(x, y)).expect("adjacent"))
            .collect();
        for (i, &a) in inc.iter().enumerate() {
            for &b in &inc[i + 1..] {
                pairs.push(Edge::new(a, b));
            }
        }
    }
    // Simple base graphs never give two edges sharing both endpoints.
    pairs.sort_unstable();
    let mut graph = Graph::from_sorted(n, pairs);
    if base.labels().is_some() {
        let labels = base
            .edges()
            .iter()
            .map(|&e| edge_label(base, e).unwrap_or_default())
            .collect();
        graph = graph.with_labels(labels).expect("one label per edge");
    }
    LineGraph {
        graph,
        base: base.clone(),
        parts: None,
        dimension: None,
    }
}

impl LineGraph {
    /// `L(Q_n)` with f-vertices classified by the leading label bit.
    pub fn of_network(h: &HlNetwork) -> LineGraph {
        let mut lg = line_graph(h.graph());
        let half = h.half();
        let parts = lg
            .base
            .edges()
            .iter()
            .map(|e| match (e.u < half, e.v < half) {
                (true, true) => Part::Left,
                (false, false) => Part::Right,
                _ => Part::F,
            })
            .collect();
        lg.parts = Some(parts);
        lg.dimension = Some(h.dimension());
        lg
    }

    /// Wraps an arbitrary graph (for example one read from disk) as the graph
    /// under test, with no base provenance.
    pub fn bare(graph: Graph) -> LineGraph {
        LineGraph {
            base: Graph::from_sorted(0, Vec::new()),
            graph,
            parts: None,
            dimension: None,
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn dimension(&self) -> Option<usize> {
        self.dimension
    }

    pub fn vertex_of_edge(&self, e: Edge) -> Option<usize> {
        self.base.edge_index(e)
    }

    pub fn edge_of_vertex(&self, v: usize) -> Option<Edge> {
        self.base.edges().get(v).copied()
    }

    pub fn parts(&self) -> Option<&[Part]> {
        self.parts.as_deref()
    }

    pub fn part(&self, v: usize) -> Option<Part> {
        self.parts.as_ref().map(|p| p[v])
    }

    /// `F_n`, ascending.
    pub fn f_vertices(&self) -> Option<Vec<usize>> {
        self.parts.as_ref().map(|p| {
            p.iter()
                .enumerate()
                .filter_map(|(i, &k)| (k == Part::F).then_some(i))
                .collect()
        })
    }

    /// Provenance sidecar: line vertex id to its base edge.
    pub fn provenance(&self) -> Provenance {
        Provenance {
            base_vertices: self.base.n_vertices(),
            vertices: self
                .base
                .edges()
                .iter()
                .enumerate()
                .map(|(id, &e)| ProvenanceEntry {
                    id,
                    base_edge: e,
                    label: edge_label(&self.base, e),
                    part: self.part(id),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProvenanceEntry {
    pub id: usize,
    pub base_edge: Edge,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub part: Option<Part>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub base_vertices: usize,
    pub vertices: Vec<ProvenanceEntry>,
}

/// `(L(Q_n), F_n)`.
pub fn f_vertices(h: &HlNetwork) -> (LineGraph, Vec<usize>) {
    let lg = LineGraph::of_network(h);
    let f = lg.f_vertices().unwrap_or_default();
    (lg, f)
}

/// Every non-f line vertex has exactly two f-neighbours; every f-vertex has
/// `n - 1` neighbours in each half's line graph.
pub fn check_prop_3_1(h: &HlNetwork) -> Vec<CheckOutcome> {
    let n = h.dimension();
    let lg = LineGraph::of_network(h);
    let parts = lg.parts().expect("built from a network");
    let g = lg.graph();
    let mut non_f_bad = Vec::new();
    let mut f_bad = Vec::new();
    let (mut non_f, mut f) = (0usize, 0usize);
    for v in 0..g.n_vertices() {
        let count = |want: Part| g.neighbors(v).iter().filter(|&&w| parts[w] == want).count();
        if parts[v] == Part::F {
            f += 1;
            let (l, r) = (count(Part::Left), count(Part::Right));
            if l != n - 1 || r != n - 1 {
                f_bad.push(format!("f-vertex {v}: {l}+{r}"));
            }
        } else {
            non_f += 1;
            let k = count(Part::F);
            if k != 2 {
                non_f_bad.push(format!("vertex {v}: {k} f-neighbours"));
            }
        }
    }
    let summarize = |bad: &[String]| bad.iter().take(5).cloned().collect::<Vec<_>>().join("; ");
    vec![
        CheckOutcome::expect_eq("f_vertex_count", f, 1 << (n - 1)),
        if non_f_bad.is_empty() {
            CheckOutcome::pass("non_f_has_two_f_neighbours", format!("{non_f} vertices"))
        } else {
            CheckOutcome::fail(
                "non_f_has_two_f_neighbours",
                format!("{} violations: {}", non_f_bad.len(), summarize(&non_f_bad)),
            )
        },
        if f_bad.is_empty() {
            CheckOutcome::pass(
                "f_vertex_half_neighbours",
                format!("{f} f-vertices with {}+{}", n - 1, n - 1),
            )
        } else {
            CheckOutcome::fail(
                "f_vertex_half_neighbours",
                format!("{} violations: {}", f_bad.len(), summarize(&f_bad)),
            )
        },
    ]
}

/// BCDC: the original graph `A_n` (every edge of `CQ_n` subdivided by a
/// server node) and the logical graph `B_n = L(CQ_n)`.
#[derive(Debug, Clone)]
pub struct BcdcPair {
    pub dimension: usize,
    /// Switches are ids `0..2^n`; the server on base edge `i` is `2^n + i`.
    pub original: Graph,
    pub logical: LineGraph,
}

pub fn bcdc(n: usize) -> Result<BcdcPair> {
    if n < 2 {
        return Err(Error::Dimension { min: 2, got: n });
    }
    let cq = gen_family(FamilyKind::Crossed, n)?;
    let base = cq.graph();
    let switches = base.n_vertices();
    let mut edges = Vec::with_capacity(2 * base.n_edges());
    for (i, e) in base.edges().iter().enumerate() {
        edges.push(Edge::new(e.u, switches + i));
        edges.push(Edge::new(e.v, switches + i));
    }
    edges.sort_unstable();
    let mut labels: Vec<String> = base.labels().expect("labelled").to_vec();
    labels.extend(base.edges().iter().map(|&e| edge_label(base, e).unwrap_or_default()));
    let original = Graph::from_sorted(switches + base.n_edges(), edges).with_labels(labels)?;
    let logical = LineGraph::of_network(&cq);
    Ok(BcdcPair {
        dimension: n,
        original,
        logical,
    })
}

impl BcdcPair {
    pub fn switch_count(&self) -> usize {
        1 << self.dimension
    }

    /// Structural agreement between `A_n` and `B_n`: counts, degrees, and
    /// "two servers adjacent in `B_n` iff they share a switch in `A_n`".
    pub fn check(&self) -> Vec<CheckOutcome> {
        let n = self.dimension;
        let s = self.switch_count();
        let a = &self.original;
        let b = self.logical.graph();
        let servers = a.n_vertices() - s;
        let mut out = vec![
            CheckOutcome::expect_eq("original_vertex_count", a.n_vertices(), s + n * s / 2),
            CheckOutcome::expect_eq("logical_vertex_count", b.n_vertices(), servers),
        ];
        let bad_switch = (0..s).find(|&v| a.neighbors(v).len() != n);
        let bad_server = (s..a.n_vertices()).find(|&v| a.neighbors(v).len() != 2);
        out.push(match (bad_switch, bad_server) {
            (None, None) => CheckOutcome::pass("original_degrees", format!("switches {n}, servers 2")),
            (Some(v), _) | (_, Some(v)) => CheckOutcome::fail(
                "original_degrees",
                format!("vertex {v} has degree {}", a.neighbors(v).len()),
            ),
        });
        let mut mismatch = None;
        'outer: for x in 0..servers {
            for y in x + 1..servers {
                let shared = a.neighbors(s + x).iter().any(|w| a.neighbors(s + y).contains(w));
                if shared != b.has_edge(x, y) {
                    mismatch = Some((x, y));
                    break 'outer;
                }
            }
        }
        out.push(match mismatch {
            None => CheckOutcome::pass("shared_switch_rule", "B_n adjacency = shared switch in A_n"),
            Some((x, y)) => CheckOutcome::fail("shared_switch_rule", format!("servers {x}, {y} disagree")),
        });
        out.push(CheckOutcome::expect_eq("logical_regularity", b.max_degree(), 2 * n - 2));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::topology::gen_random_hl;

    #[test]
    fn small_line_graphs() {
        let p3 = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        let l = line_graph(&p3);
        assert_eq!(l.graph().n_vertices(), 2);
        assert_eq!(l.graph().n_edges(), 1);
        let k2 = Graph::new(2, [(0, 1)]).unwrap();
        let l = line_graph(&k2);
        assert_eq!((l.graph().n_vertices(), l.graph().n_edges()), (1, 0));
    }

    #[test]
    fn line_of_q3() {
        let q3 = gen_family(FamilyKind::Hypercube, 3).unwrap();
        let (lg, f) = f_vertices(&q3);
        assert_eq!(lg.graph().n_vertices(), 12);
        assert_eq!(lg.graph().n_edges(), 24);
        assert!(lg.graph().is_regular(4));
        assert_eq!(f.len(), 4);
        for v in 0..12 {
            let e = lg.edge_of_vertex(v).unwrap();
            assert_eq!(lg.vertex_of_edge(e), Some(v));
        }
        assert_eq!(lg.graph().label(0), Some("000-001"));
    }

    #[test]
    fn f_vertex_counts() {
        let q2 = gen_family(FamilyKind::Hypercube, 2).unwrap();
        assert_eq!(f_vertices(&q2).1.len(), 2);
        let cq4 = gen_family(FamilyKind::Crossed, 4).unwrap();
        assert_eq!(f_vertices(&cq4).1.len(), 8);
    }

    #[test]
    fn prop_3_1_examples() {
        for h in [
            gen_family(FamilyKind::Hypercube, 4).unwrap(),
            gen_random_hl(5, 7).unwrap(),
            gen_family(FamilyKind::Hypercube, 2).unwrap(),
        ] {
            let checks = check_prop_3_1(&h);
            assert!(checks.iter().all(|c| c.passed), "{checks:?}");
        }
        let checks = check_prop_3_1(&gen_random_hl(5, 7).unwrap());
        assert!(checks[2].detail.contains("4+4"));
    }

    #[test]
    fn bcdc_pairs() {
        let b3 = bcdc(3).unwrap();
        assert_eq!(b3.original.n_vertices(), 20);
        assert_eq!(b3.logical.graph().n_vertices(), 12);
        assert!(b3.logical.graph().is_regular(4));
        assert!(b3.check().iter().all(|c| c.passed));
        let b2 = bcdc(2).unwrap();
        let g = b2.logical.graph();
        assert!(g.n_vertices() == 4 && g.is_regular(2) && g.is_connected());
        let b4 = bcdc(4).unwrap();
        assert_eq!(b4.logical.graph().n_vertices(), 32);
        assert!(b4.logical.graph().is_regular(6));
        assert!(bcdc(1).is_err());
        assert_eq!(b3.original.label(8), Some("000-001"));
    }
}
