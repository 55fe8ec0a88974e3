use serde::{Deserialize, Serialize};

use crate::flow::{all_pairs_min_cut, max_edge_disjoint_paths, FlowNetwork};
use crate::graph::{Edge, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SmecWitness {
    pub u: usize,
    pub v: usize,
    pub path_count: usize,
    /// `min(deg(u), deg(v))` in the graph tested.
    pub required: usize,
    /// Minimum `(u, v)`-edge cut, `cut.len() == path_count`.
    pub cut: Vec<Edge>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SmecVerdict {
    pub holds: bool,
    pub witness: Option<SmecWitness>,
}

impl SmecVerdict {
    fn holds() -> Self {
        SmecVerdict {
            holds: true,
            witness: None,
        }
    }

    fn fails(g: &Graph, u: usize, v: usize) -> Self {
        let flow = max_edge_disjoint_paths(g, u, v).expect("distinct valid pair");
        let required = g.neighbors(u).len().min(g.neighbors(v).len());
        SmecVerdict {
            holds: false,
            witness: Some(SmecWitness {
                u,
                v,
                path_count: flow.value,
                required,
                cut: flow.cut,
            }),
        }
    }
}

/// Strong Menger edge connectivity: every distinct pair `(u, v)` has
/// `min(deg(u), deg(v))` edge-disjoint paths.
///
/// Uses a flow-equivalent tree (`n - 1` max-flows) for all pair values; the
/// witness is the first failing pair in ascending `(u, v)` order.
pub fn is_smec(g: &Graph) -> SmecVerdict {
    let n = g.n_vertices();
    if n < 2 {
        return SmecVerdict::holds();
    }
    let table = all_pairs_min_cut(g);
    for u in 0..n {
        let du = g.neighbors(u).len();
        for v in u + 1..n {
            let required = du.min(g.neighbors(v).len());
            if table[u][v] < required {
                return SmecVerdict::fails(g, u, v);
            }
        }
    }
    SmecVerdict::holds()
}

/// Same predicate, one bounded max-flow per pair. Slower; kept as an
/// independent route for cross-checking [`is_smec`].
pub fn is_smec_pairwise(g: &Graph) -> SmecVerdict {
    let n = g.n_vertices();
    let mut net = FlowNetwork::from_graph(g);
    for u in 0..n {
        let du = g.neighbors(u).len();
        for v in u + 1..n {
            let required = du.min(g.neighbors(v).len());
            if required == 0 {
                continue;
            }
            net.reset();
            if net.max_flow(u, v, required) < required {
                return SmecVerdict::fails(g, u, v);
            }
        }
    }
    SmecVerdict::holds()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linegraph::LineGraph;
    use crate::topology::{gen_family, FamilyKind};

    #[test]
    fn complete_graph_is_smec() {
        let k4 = Graph::new(4, (0..4).flat_map(|a| (a + 1..4).map(move |b| (a, b)))).unwrap();
        assert!(is_smec(&k4).holds);
        assert!(is_smec_pairwise(&k4).holds);
    }

    #[test]
    fn line_of_q3_is_smec() {
        let lg = LineGraph::of_network(&gen_family(FamilyKind::Hypercube, 3).unwrap());
        assert!(is_smec(lg.graph()).holds);
    }

    #[test]
    fn disconnected_sides_fail() {
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        let v = is_smec(&g);
        assert!(!v.holds);
        let w = v.witness.unwrap();
        assert_eq!((w.u, w.v, w.path_count, w.required), (0, 2, 0, 1));
        assert_eq!(is_smec_pairwise(&g), is_smec(&g));
    }

    #[test]
    fn isolated_vertex_is_harmless() {
        // Degree-0 vertices demand nothing.
        let g = Graph::new(4, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(is_smec(&g).holds);
    }

    #[test]
    fn cut_vertex_alone_does_not_break_edge_version() {
        let diamond = Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3)]).unwrap();
        assert!(is_smec(&diamond).holds);
        // Two triangles sharing vertex 0.
        let bowtie = Graph::new(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]).unwrap();
        assert!(is_smec(&bowtie).holds);
        // A pendant edge hanging off a triangle: (1, 3) need 1 path, get 1.
        let pendant = Graph::new(4, [(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap();
        assert!(is_smec(&pendant).holds);
        // Two triangles joined by the bridge (2, 3).
        let bridge = Graph::new(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)]).unwrap();
        let v = is_smec(&bridge);
        assert!(!v.holds);
        let w = v.witness.unwrap();
        assert_eq!((w.u, w.v, w.path_count, w.required), (0, 3, 1, 2));
        assert_eq!(w.cut, vec![Edge::new(2, 3)]);
    }
}
