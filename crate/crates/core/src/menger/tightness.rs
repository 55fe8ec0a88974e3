//! Explicit fault sets one larger than the tolerated bound that break strong
//! Menger edge connectivity.
//!
//! Unconditional (`n >= 3`): pick adjacent `u0, u` and delete every edge at
//! `u0` except `u0u`. `{u0, u}` then has `2n - 3` boundary edges, so some
//! `v` of degree `2n - 2` outside `N[u0]` gets at most `2n - 3` paths to `u`.
//!
//! Conditional (`n >= 4`): pick a triangle `u, u1, u2` and `u3 ∈ N(u2)`,
//! keep only `u1u, u1u2, u2u, u2u3` at `u1` and `u2`. The triangle's boundary
//! is `2n - 4` edges at `u` plus `u2u3`, while every degree stays at least 2.

use serde::{Deserialize, Serialize};

use super::adversarial::triangle_set_with;
use crate::error::{Error, Result};
use crate::flow::max_edge_disjoint_paths;
use crate::graph::{Edge, FaultSet, Graph};
use crate::linegraph::LineGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TightnessKind {
    Unconditional,
    Conditional,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TightnessWitness {
    pub kind: TightnessKind,
    pub dimension: usize,
    pub fault_set: FaultSet,
    pub u: usize,
    pub v: usize,
    /// Upper bound on `(u, v)` paths in `L - S`: `2n - 3`.
    pub expected_max_paths: usize,
    /// `[u0]` for the unconditional set, `[u1, u2, u3]` for the conditional one.
    pub anchors: Vec<usize>,
}

impl TightnessWitness {
    /// `|S|` the construction promises: `2n - 3` or `4n - 9`.
    pub fn expected_size(&self) -> usize {
        match self.kind {
            TightnessKind::Unconditional => 2 * self.dimension - 3,
            TightnessKind::Conditional => 4 * self.dimension - 9,
        }
    }
}

/// Max-flow confirmation of a tightness witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TightnessCheck {
    pub path_count: usize,
    /// `min(deg_{L-S}(u), deg_{L-S}(v))`.
    pub required: usize,
    pub cut: Vec<Edge>,
    /// Removing `cut` from `L - S` separates `u` from `v`.
    pub cut_valid: bool,
    pub min_degree_after: usize,
}

impl TightnessCheck {
    pub fn violates_smec(&self) -> bool {
        self.path_count < self.required
    }
}

/// `n` from `(2n - 2)`-regularity when the line graph carries no dimension.
fn dimension_of(lg: &LineGraph) -> usize {
    lg.dimension().unwrap_or_else(|| lg.graph().max_degree() / 2 + 1)
}

fn lowest_outside(g: &Graph, closed: &[usize]) -> Option<usize> {
    (0..g.n_vertices()).find(|&x| closed.iter().all(|&c| c != x && !g.has_edge(c, x)))
}

fn star_except(g: &Graph, centre: usize, keep: usize) -> Vec<Edge> {
    g.neighbors(centre)
        .iter()
        .filter(|&&w| w != keep)
        .map(|&w| Edge::new(centre, w))
        .collect()
}

/// Lowest-id `u0`, its lowest neighbour `u`, and the lowest `v ∉ N[u0]`.
pub fn tightness_unconditional(lg: &LineGraph) -> Result<TightnessWitness> {
    let n = dimension_of(lg);
    if n < 3 {
        return Err(Error::Dimension { min: 3, got: n });
    }
    let g = lg.graph();
    let u0 = 0;
    let u = *g
        .neighbors(u0)
        .first()
        .ok_or_else(|| Error::Integrity("vertex 0 is isolated".into()))?;
    let v = lowest_outside(g, &[u0])
        .ok_or_else(|| Error::Integrity("no vertex outside N[u0]".into()))?;
    let fault_set = FaultSet::on(g, star_except(g, u0, u))?;
    Ok(TightnessWitness {
        kind: TightnessKind::Unconditional,
        dimension: n,
        fault_set,
        u,
        v,
        expected_max_paths: 2 * n - 3,
        anchors: vec![u0],
    })
}

/// Lowest-id triangle: the first three line vertices sharing the lowest base
/// vertex of degree at least 3 (or, without a base, the lexicographically
/// first triangle). `u3` is the lowest neighbour of `u2` outside `{u, u1}`,
/// and `v` the lowest vertex outside `N[{u, u1, u2}]`.
pub fn tightness_conditional(lg: &LineGraph) -> Result<TightnessWitness> {
    let n = dimension_of(lg);
    if n < 4 {
        return Err(Error::Dimension { min: 4, got: n });
    }
    let g = lg.graph();
    let (u, u1, u2) = find_triangle(lg).ok_or_else(|| Error::Integrity("no triangle".into()))?;
    let u3 = *g
        .neighbors(u2)
        .iter()
        .find(|&&w| w != u && w != u1)
        .ok_or_else(|| Error::Integrity(format!("u2 = {u2} has no neighbour outside the triangle")))?;
    let edges = triangle_set_with(g, u, u1, u2, u3)
        .into_iter()
        .map(Edge::from);
    let fault_set = FaultSet::on(g, edges)?;
    let v = lowest_outside(g, &[u, u1, u2])
        .ok_or_else(|| Error::Integrity("no vertex outside N[{u, u1, u2}]".into()))?;
    Ok(TightnessWitness {
        kind: TightnessKind::Conditional,
        dimension: n,
        fault_set,
        u,
        v,
        expected_max_paths: 2 * n - 3,
        anchors: vec![u1, u2, u3],
    })
}

fn find_triangle(lg: &LineGraph) -> Option<(usize, usize, usize)> {
    let base = lg.base();
    if base.n_edges() == lg.graph().n_vertices() && base.n_edges() > 0 {
        let x = (0..base.n_vertices()).find(|&x| base.neighbors(x).len() >= 3)?;
        let mut clique: Vec<usize> = base
            .neighbors(x)
            .iter()
            .filter_map(|&y| lg.vertex_of_edge(Edge::new(x, y)))
            .collect();
        clique.sort_unstable();
        return Some((clique[0], clique[1], clique[2]));
    }
    let g = lg.graph();
    (0..g.n_vertices()).find_map(|a| {
        g.neighbors(a).iter().filter(|&&b| b > a).find_map(|&b| {
            g.neighbors(b)
                .iter()
                .find(|&&d| d > b && g.has_edge(a, d))
                .map(|&d| (a, b, d))
        })
    })
}

/// Runs max-flow between `u` and `v` in `L - S` and validates the cut.
pub fn certify(lg: &LineGraph, w: &TightnessWitness, v: usize) -> Result<TightnessCheck> {
    let rest = lg.graph().remove_edges(&w.fault_set)?;
    let flow = max_edge_disjoint_paths(&rest, w.u, v)?;
    let required = rest.degree(w.u)?.min(rest.degree(v)?);
    let cut_set = FaultSet::on(&rest, flow.cut.iter().copied())?;
    let cut_valid = {
        let split = rest.remove_edges(&cut_set)?;
        let comps = split.components();
        comps.iter().all(|c| !(c.contains(&w.u) && c.contains(&v)))
    } && flow.cut.len() == flow.value;
    Ok(TightnessCheck {
        path_count: flow.value,
        required,
        cut: flow.cut,
        cut_valid,
        min_degree_after: rest.min_degree(),
    })
}

/// Every admissible target: vertices outside `N[u0]` (unconditional) or
/// `N[{u, u1, u2}]` (conditional), ascending.
pub fn all_targets(lg: &LineGraph, w: &TightnessWitness) -> Vec<usize> {
    let g = lg.graph();
    let closed: Vec<usize> = match w.kind {
        TightnessKind::Unconditional => w.anchors.clone(),
        TightnessKind::Conditional => vec![w.u, w.anchors[0], w.anchors[1]],
    };
    (0..g.n_vertices())
        .filter(|&x| closed.iter().all(|&c| c != x && !g.has_edge(c, x)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::topology::{gen_family, FamilyKind};

    fn lq(kind: FamilyKind, n: usize) -> LineGraph {
        LineGraph::of_network(&gen_family(kind, n).unwrap())
    }

    #[test]
    fn unconditional_sizes() {
        for n in 3..=5 {
            let lg = lq(FamilyKind::Hypercube, n);
            let w = tightness_unconditional(&lg).unwrap();
            assert_eq!(w.fault_set.len(), 2 * n - 3);
            let c = certify(&lg, &w, w.v).unwrap();
            assert!(c.path_count <= 2 * n - 3);
            assert_eq!(c.required, 2 * n - 2);
            assert!(c.cut_valid);
        }
        assert!(tightness_unconditional(&lq(FamilyKind::Hypercube, 2)).is_err());
    }

    #[test]
    fn conditional_degrees() {
        let lg = lq(FamilyKind::Crossed, 4);
        let w = tightness_conditional(&lg).unwrap();
        assert_eq!(w.fault_set.len(), 7);
        let rest = lg.graph().remove_edges(&w.fault_set).unwrap();
        assert_eq!(rest.degree(w.anchors[0]).unwrap(), 2);
        assert_eq!(rest.degree(w.anchors[1]).unwrap(), 3);
        assert!(rest.min_degree() >= 2);
        let c = certify(&lg, &w, w.v).unwrap();
        assert!(c.path_count <= 5 && c.required == 6 && c.cut_valid);
        assert!(tightness_conditional(&lq(FamilyKind::Crossed, 3)).is_err());
    }

    #[test]
    fn bare_graph_uses_first_triangle() {
        let lg = lq(FamilyKind::Hypercube, 4);
        let bare = LineGraph::bare(lg.graph().clone());
        let w = tightness_conditional(&bare).unwrap();
        assert_eq!(w.fault_set.len(), 7);
        assert!(certify(&bare, &w, w.v).unwrap().violates_smec());
    }
}
