//! Deterministic stress fault sets modelled on the extremal cases of the
//! component and tightness arguments.

use std::collections::HashSet;

use crate::graph::{Edge, FaultSet, Graph};
use crate::linegraph::{LineGraph, Part};

struct Collector<'a> {
    g: &'a Graph,
    budget: usize,
    seen: HashSet<Vec<usize>>,
    out: Vec<Vec<usize>>,
}

impl Collector<'_> {
    fn push(&mut self, mut set: Vec<usize>) {
        set.sort_unstable();
        set.dedup();
        if set.len() > self.budget {
            return;
        }
        if self.seen.insert(set.clone()) {
            self.out.push(set);
        }
    }

    /// Adds `set` if it fits. One edge over budget adds every drop-one
    /// variant; further over adds the first `budget` edges.
    fn push_fitting(&mut self, mut set: Vec<usize>) {
        set.sort_unstable();
        set.dedup();
        if set.len() <= self.budget {
            self.push(set);
        } else if set.len() == self.budget + 1 {
            for skip in 0..set.len() {
                let mut s = set.clone();
                s.remove(skip);
                self.push(s);
            }
        } else {
            set.truncate(self.budget);
            self.push(set);
        }
    }

    fn edge(&self, a: usize, b: usize) -> usize {
        self.g.edge_index(Edge::new(a, b)).expect("adjacent")
    }

    fn incident(&self, v: usize) -> Vec<usize> {
        self.g.neighbors(v).iter().map(|&w| self.edge(v, w)).collect()
    }
}

/// Adversarial fault sets of size at most `budget`, in a fixed order:
///
/// - the empty set;
/// - for each vertex, its first `budget` incident edges;
/// - for each vertex `u0` and neighbour `u`, `E(u0, N(u0) \ {u})`;
/// - for each edge `ab`, the boundary of `{a, b}`, whole and minus its first edge;
/// - for each triangle with every role order `(u, u1, u2)` and `u3` the lowest
///   neighbour of `u2` outside the triangle,
///   `E[u2, V \ {u, u1, u3}] ∪ E[u1, V \ {u, u2}]`;
/// - when f-vertices are known: edges at each f-vertex, splits pairing one
///   f-vertex's left edges with the next one's right edges, and consecutive
///   `budget`-sized windows of `E_f`.
///
/// Sets larger than `budget` are cut down (see `push_fitting`).
pub fn adversarial_fault_sets(lg: &LineGraph, budget: usize) -> Vec<FaultSet> {
    let g = lg.graph();
    let mut c = Collector {
        g,
        budget,
        seen: HashSet::new(),
        out: Vec::new(),
    };
    c.push(Vec::new());
    if budget > 0 {
        let n = g.n_vertices();
        for v in 0..n {
            c.push_fitting(c.incident(v));
        }
        for u0 in 0..n {
            for &u in g.neighbors(u0) {
                let keep = c.edge(u0, u);
                let set = c.incident(u0).into_iter().filter(|&e| e != keep).collect();
                c.push_fitting(set);
            }
        }
        for e in g.edges() {
            let inner = c.edge(e.u, e.v);
            let mut boundary: Vec<usize> = c
                .incident(e.u)
                .into_iter()
                .chain(c.incident(e.v))
                .filter(|&x| x != inner)
                .collect();
            boundary.sort_unstable();
            c.push_fitting(boundary.clone());
            boundary.remove(0);
            c.push_fitting(boundary);
        }
        for a in 0..n {
            for &b in g.neighbors(a).iter().filter(|&&b| b > a) {
                for &d in g.neighbors(b).iter().filter(|&&d| d > b) {
                    if !g.has_edge(a, d) {
                        continue;
                    }
                    for (u, u1, u2) in [(a, b, d), (a, d, b), (b, a, d), (b, d, a), (d, a, b), (d, b, a)] {
                        if let Some(set) = triangle_set(g, u, u1, u2) {
                            c.push_fitting(set.into_iter().map(|(x, y)| c.edge(x, y)).collect());
                        }
                    }
                }
            }
        }
        if let Some(parts) = lg.parts() {
            let f: Vec<usize> = lg.f_vertices().unwrap_or_default();
            for &w in &f {
                c.push_fitting(c.incident(w));
            }
            let side = |w: usize, want: Part| -> Vec<usize> {
                g.neighbors(w)
                    .iter()
                    .filter(|&&x| parts[x] == want)
                    .map(|&x| c.edge(w, x))
                    .collect()
            };
            let splits: Vec<Vec<usize>> = f
                .iter()
                .enumerate()
                .map(|(i, &w)| {
                    let mut set = side(w, Part::Left);
                    set.extend(side(f[(i + 1) % f.len()], Part::Right));
                    set
                })
                .collect();
            for set in splits {
                c.push_fitting(set);
            }
            let mut ef: Vec<usize> = f.iter().flat_map(|&w| c.incident(w)).collect();
            ef.sort_unstable();
            ef.dedup();
            for window in ef.chunks(budget) {
                c.push(window.to_vec());
            }
        }
    }
    c.out
        .into_iter()
        .map(|idx| FaultSet::from_indices(g, &idx))
        .collect()
}

/// Edge pairs of the conditional tightness set for the triangle roles
/// `(u, u1, u2)`, with `u3` the lowest neighbour of `u2` outside `{u, u1}`.
pub(crate) fn triangle_set(g: &Graph, u: usize, u1: usize, u2: usize) -> Option<Vec<(usize, usize)>> {
    let u3 = *g.neighbors(u2).iter().find(|&&w| w != u && w != u1)?;
    Some(triangle_set_with(g, u, u1, u2, u3))
}

pub(crate) fn triangle_set_with(g: &Graph, u: usize, u1: usize, u2: usize, u3: usize) -> Vec<(usize, usize)> {
    let mut set: Vec<(usize, usize)> = g
        .neighbors(u2)
        .iter()
        .filter(|&&w| w != u && w != u1 && w != u3)
        .map(|&w| (u2, w))
        .collect();
    set.extend(
        g.neighbors(u1)
            .iter()
            .filter(|&&w| w != u && w != u2)
            .map(|&w| (u1, w)),
    );
    set
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::topology::{gen_family, FamilyKind};

    fn lq(n: usize) -> LineGraph {
        LineGraph::of_network(&gen_family(FamilyKind::Hypercube, n).unwrap())
    }

    #[test]
    fn budget_zero_is_empty_only() {
        let sets = adversarial_fault_sets(&lq(3), 0);
        assert_eq!(sets, vec![FaultSet::empty()]);
    }

    #[test]
    fn contains_star_minus_one() {
        let lg = lq(3);
        let g = lg.graph();
        let sets: HashSet<FaultSet> = adversarial_fault_sets(&lg, 3).into_iter().collect();
        for u0 in 0..g.n_vertices() {
            for &u in g.neighbors(u0) {
                let want = FaultSet::on(
                    g,
                    g.neighbors(u0).iter().filter(|&&w| w != u).map(|&w| Edge::new(u0, w)),
                )
                .unwrap();
                assert!(sets.contains(&want), "missing star of {u0} keeping {u}");
            }
        }
        assert!(sets.iter().all(|s| s.len() <= 3));
    }

    #[test]
    fn contains_triangle_construction() {
        let lg = lq(4);
        let g = lg.graph();
        let sets: HashSet<FaultSet> = adversarial_fault_sets(&lg, 7).into_iter().collect();
        let mut triangles = 0;
        for a in 0..g.n_vertices() {
            for &b in g.neighbors(a).iter().filter(|&&b| b > a) {
                for &d in g.neighbors(b).iter().filter(|&&d| d > b && g.has_edge(a, d)) {
                    triangles += 1;
                    let set = triangle_set(g, a, b, d).unwrap();
                    assert_eq!(set.len(), 7);
                    let f = FaultSet::on(g, set.into_iter().map(Edge::from)).unwrap();
                    assert!(sets.contains(&f));
                }
            }
        }
        assert_eq!(triangles, 64);
    }

    #[test]
    fn deterministic() {
        let lg = lq(4);
        assert_eq!(adversarial_fault_sets(&lg, 6), adversarial_fault_sets(&lg, 6));
    }
}
