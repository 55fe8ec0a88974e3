//! Hypercube-like (HL) networks.
//!
//! An n-dimensional HL network is `K_2` for `n = 1`, and otherwise two
//! (n-1)-dimensional HL networks joined by a perfect matching `v -> f(v)`
//! for an arbitrary bijection `f`. Vertex ids are the integer value of the
//! label `a_n ... a_1` (`a_1` least significant); the left half of every
//! join carries prefix bit 0 and the right half prefix bit 1.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::flow::{edge_connectivity, vertex_connectivity};
use crate::graph::{Edge, FaultSet, Graph};
use crate::report::CheckOutcome;
use crate::rng;

/// Largest dimension for which `validate_hl` runs the exact κ/λ check.
pub const CONNECTIVITY_CHECK_MAX_DIM: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", tag = "family")]
pub enum FamilyKind {
    Hypercube,
    Crossed,
    Mobius0,
    Mobius1,
    Ltq,
    Random { seed: u64 },
}

impl FamilyKind {
    pub const NAMED: [FamilyKind; 5] = [
        FamilyKind::Hypercube,
        FamilyKind::Crossed,
        FamilyKind::Mobius0,
        FamilyKind::Mobius1,
        FamilyKind::Ltq,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            FamilyKind::Hypercube => "hypercube",
            FamilyKind::Crossed => "crossed",
            FamilyKind::Mobius0 => "mobius0",
            FamilyKind::Mobius1 => "mobius1",
            FamilyKind::Ltq => "ltq",
            FamilyKind::Random { .. } => "random",
        }
    }

    pub fn seed(&self) -> Option<u64> {
        match self {
            FamilyKind::Random { seed } => Some(*seed),
            _ => None,
        }
    }

    /// Parses a family name; `random` takes `seed`.
    pub fn parse(name: &str, seed: u64) -> Result<Self> {
        Ok(match name {
            "hypercube" | "q" => FamilyKind::Hypercube,
            "crossed" | "cq" => FamilyKind::Crossed,
            "mobius0" => FamilyKind::Mobius0,
            "mobius1" => FamilyKind::Mobius1,
            "ltq" => FamilyKind::Ltq,
            "random" => FamilyKind::Random { seed },
            other => {
                return Err(Error::UnknownName {
                    what: "family",
                    name: other.to_string(),
                })
            }
        })
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyKind::Random { seed } => write!(f, "random(seed={seed})"),
            other => f.write_str(other.name()),
        }
    }
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FamilyKind::parse(s, 0)
    }
}

/// A bijection between the vertex sets of the two halves of a join.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Bijection(Vec<usize>);

impl Bijection {
    pub fn new(mapping: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; mapping.len()];
        for (i, &t) in mapping.iter().enumerate() {
            if t >= mapping.len() {
                return Err(Error::Bijection(format!("{i} maps to {t}, out of range")));
            }
            if std::mem::replace(&mut seen[t], true) {
                return Err(Error::Bijection(format!("{t} is hit twice")));
            }
        }
        Ok(Bijection(mapping))
    }

    pub fn identity(len: usize) -> Self {
        Bijection((0..len).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn apply(&self, v: usize) -> usize {
        self.0[v]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }
}

/// Record of one `left ⊕_f right` join.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Join {
    pub left: HlNetwork,
    pub right: HlNetwork,
    pub bijection: Bijection,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HlNetwork {
    graph: Graph,
    dimension: usize,
    construction: Option<Box<Join>>,
    f_edges: Vec<Edge>,
}

/// Serializable per-level bijection tree, used for the construction sidecar.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionRecord {
    pub dimension: usize,
    pub bijection: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub left: Option<Box<ConstructionRecord>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub right: Option<Box<ConstructionRecord>>,
}

pub fn label_of(id: usize, n: usize) -> String {
    (0..n)
        .rev()
        .map(|b| if id >> b & 1 == 1 { '1' } else { '0' })
        .collect()
}

fn labels(n: usize) -> Vec<String> {
    (0..1usize << n).map(|id| label_of(id, n)).collect()
}

impl HlNetwork {
    /// `K_2`, the only 1-dimensional HL network.
    pub fn k2() -> Self {
        let graph = Graph::new(2, [(0, 1)])
            .and_then(|g| g.with_labels(labels(1)))
            .expect("K_2 is valid");
        HlNetwork {
            graph,
            dimension: 1,
            construction: None,
            f_edges: vec![Edge::new(0, 1)],
        }
    }

    /// Assembles a network without checking any invariant; see [`validate_hl`].
    pub fn from_parts(graph: Graph, dimension: usize, f_edges: Vec<Edge>) -> Self {
        HlNetwork {
            graph,
            dimension,
            construction: None,
            f_edges,
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn f_edges(&self) -> &[Edge] {
        &self.f_edges
    }

    pub fn construction(&self) -> Option<&Join> {
        self.construction.as_deref()
    }

    /// Ids below this value form the left half.
    pub fn half(&self) -> usize {
        1usize << (self.dimension - 1)
    }

    pub fn record(&self) -> ConstructionRecord {
        match &self.construction {
            Some(j) => ConstructionRecord {
                dimension: self.dimension,
                bijection: j.bijection.as_slice().to_vec(),
                left: Some(Box::new(j.left.record())),
                right: Some(Box::new(j.right.record())),
            },
            None => ConstructionRecord {
                dimension: self.dimension,
                bijection: vec![0; self.f_edges.len().min(1)],
                left: None,
                right: None,
            },
        }
    }

    /// Recovers the join tree from a labelled graph by splitting on the
    /// leading label bit at every level.
    pub fn decompose(graph: Graph, dimension: usize) -> Result<Self> {
        if dimension == 0 {
            return Err(Error::Dimension { min: 1, got: 0 });
        }
        if graph.n_vertices() != 1 << dimension {
            return Err(Error::Integrity(format!(
                "{} vertices for dimension {dimension}",
                graph.n_vertices()
            )));
        }
        let half = 1usize << (dimension - 1);
        let mut mapping = vec![usize::MAX; half];
        let mut f_edges = Vec::with_capacity(half);
        for e in graph.edges() {
            if e.u < half && e.v >= half {
                if mapping[e.u] != usize::MAX {
                    return Err(Error::Integrity(format!("vertex {} has two cross edges", e.u)));
                }
                mapping[e.u] = e.v - half;
                f_edges.push(*e);
            }
        }
        let bijection = Bijection::new(mapping)
            .map_err(|e| Error::Integrity(format!("cross edges are not a matching: {e}")))?;
        if dimension == 1 {
            return Ok(HlNetwork {
                graph,
                dimension,
                construction: None,
                f_edges,
            });
        }
        let strip = |g: Graph| -> Result<Graph> {
            let ls = g.labels().map(|l| l.iter().map(|s| s[1..].to_string()).collect());
            match ls {
                Some(ls) => g.with_labels(ls),
                None => Ok(g),
            }
        };
        let left_ids: Vec<usize> = (0..half).collect();
        let right_ids: Vec<usize> = (half..2 * half).collect();
        let left = HlNetwork::decompose(strip(graph.induced(&left_ids))?, dimension - 1)?;
        let right = HlNetwork::decompose(strip(graph.induced(&right_ids))?, dimension - 1)?;
        Ok(HlNetwork {
            graph,
            dimension,
            construction: Some(Box::new(Join {
                left,
                right,
                bijection,
            })),
            f_edges,
        })
    }
}

/// `g1 ⊕_f g2`: the right half is offset by `2^(n-1)` and labels gain a
/// leading 0 (left) or 1 (right).
pub fn hl_join(g1: HlNetwork, g2: HlNetwork, f: Bijection) -> Result<HlNetwork> {
    if g1.dimension != g2.dimension {
        return Err(Error::DimensionMismatch(g1.dimension, g2.dimension));
    }
    let half = g1.graph.n_vertices();
    if g2.graph.n_vertices() != half || f.len() != half {
        return Err(Error::Bijection(format!(
            "bijection of length {} for halves of size {half}",
            f.len()
        )));
    }
    let dimension = g1.dimension + 1;
    let mut edges: Vec<Edge> = g1.graph.edges().to_vec();
    edges.extend(g2.graph.edges().iter().map(|e| Edge::new(e.u + half, e.v + half)));
    let f_edges: Vec<Edge> = (0..half).map(|v| Edge::new(v, half + f.apply(v))).collect();
    edges.extend_from_slice(&f_edges);
    edges.sort_unstable();
    let mut lbl = Vec::with_capacity(2 * half);
    for (prefix, g) in [("0", &g1), ("1", &g2)] {
        for v in 0..half {
            lbl.push(format!("{prefix}{}", g.graph.label(v).unwrap_or("")));
        }
    }
    let graph = Graph::from_sorted(2 * half, edges).with_labels(lbl)?;
    Ok(HlNetwork {
        graph,
        dimension,
        construction: Some(Box::new(Join {
            left: g1,
            right: g2,
            bijection: f,
        })),
        f_edges,
    })
}

#[inline]
fn bit(x: usize, i: usize) -> usize {
    x >> (i - 1) & 1
}

/// Crossed-cube pair relation on 2-bit strings `a2 a1 ~ b2 b1`:
/// `(00,00), (10,10), (01,11), (11,01)`.
fn pair_related(a2: usize, a1: usize, b2: usize, b1: usize) -> bool {
    match (a1, b1) {
        (0, 0) => a2 == b2,
        (1, 1) => a2 != b2,
        _ => false,
    }
}

/// Adjacency straight from each family's rule: `x` and `y` are adjacent iff,
/// at their highest differing bit `l`, the lower bits `a` (side with bit 0)
/// and `b` (side with bit 1) satisfy the family's level-`l` condition.
pub fn rule_adjacent(kind: FamilyKind, n: usize, x: usize, y: usize) -> bool {
    let d = x ^ y;
    if d == 0 || x >> n != 0 || y >> n != 0 {
        return false;
    }
    let l = usize::BITS as usize - d.leading_zeros() as usize;
    let low = (1usize << (l - 1)) - 1;
    let (a, b) = if bit(x, l) == 0 { (x & low, y & low) } else { (y & low, x & low) };
    match kind {
        FamilyKind::Hypercube => a == b,
        FamilyKind::Crossed => {
            if l.is_multiple_of(2) && bit(a, l - 1) != bit(b, l - 1) {
                return false;
            }
            (1..=(l - 1) / 2).all(|i| {
                pair_related(bit(a, 2 * i), bit(a, 2 * i - 1), bit(b, 2 * i), bit(b, 2 * i - 1))
            })
        }
        FamilyKind::Mobius0 | FamilyKind::Mobius1 => {
            let twisted = if l == n {
                kind == FamilyKind::Mobius1
            } else {
                bit(x, l + 1) == 1
            };
            if twisted {
                b == !a & low
            } else {
                a == b
            }
        }
        FamilyKind::Ltq => {
            if l <= 2 {
                a == b
            } else {
                let below = (1usize << (l - 2)) - 1;
                a & below == b & below && bit(a, l - 1) == bit(b, l - 1) ^ bit(b, 1)
            }
        }
        FamilyKind::Random { .. } => false,
    }
}

/// Named family built directly from its adjacency rule, with the join tree
/// recovered by [`HlNetwork::decompose`].
pub fn gen_family(kind: FamilyKind, n: usize) -> Result<HlNetwork> {
    if n == 0 {
        return Err(Error::Dimension { min: 1, got: 0 });
    }
    if let FamilyKind::Random { seed } = kind {
        return gen_random_hl(n, seed);
    }
    let size = 1usize << n;
    let mut edges = Vec::with_capacity(n * size / 2);
    for x in 0..size {
        for y in x + 1..size {
            if rule_adjacent(kind, n, x, y) {
                edges.push(Edge::new(x, y));
            }
        }
    }
    let graph = Graph::from_sorted(size, edges).with_labels(labels(n))?;
    HlNetwork::decompose(graph, n)
}

/// Level-`l` bijection of a named family, mapping the low `l - 1` bits of a
/// left vertex to those of its right partner. `twisted` selects the 1-Möbius
/// variant for the Möbius families.
fn level_bijection(kind: FamilyKind, l: usize, twisted: bool) -> Bijection {
    let half = 1usize << (l - 1);
    let low = half - 1;
    let map = (0..half).map(|a| match kind {
        FamilyKind::Crossed => {
            let mut b = a;
            for i in 1..=(l - 1) / 2 {
                if bit(a, 2 * i - 1) == 1 {
                    b ^= 1 << (2 * i - 1);
                }
            }
            b
        }
        FamilyKind::Mobius0 | FamilyKind::Mobius1 if twisted => !a & low,
        FamilyKind::Ltq if l >= 3 => a ^ ((a & 1) << (l - 2)),
        _ => a,
    });
    Bijection(map.collect())
}

/// Named family built by iterated [`hl_join`] with the family's per-level
/// bijections. Agrees edge-for-edge with [`gen_family`].
pub fn gen_family_recursive(kind: FamilyKind, n: usize) -> Result<HlNetwork> {
    fn build(kind: FamilyKind, n: usize, twisted: bool) -> Result<HlNetwork> {
        if n == 1 {
            return Ok(HlNetwork::k2());
        }
        let (left, right) = match kind {
            // 0-half is a 0-Möbius cube, 1-half a 1-Möbius cube.
            FamilyKind::Mobius0 | FamilyKind::Mobius1 => {
                (build(kind, n - 1, false)?, build(kind, n - 1, true)?)
            }
            _ => (build(kind, n - 1, false)?, build(kind, n - 1, false)?),
        };
        hl_join(left, right, level_bijection(kind, n, twisted))
    }
    if n == 0 {
        return Err(Error::Dimension { min: 1, got: 0 });
    }
    if let FamilyKind::Random { seed } = kind {
        return gen_random_hl(n, seed);
    }
    build(kind, n, kind == FamilyKind::Mobius1)
}

/// Random HL network: both halves built recursively from child seeds
/// `mix(seed, 0)` and `mix(seed, 1)`, joined by a Fisher–Yates permutation
/// drawn from `mix(seed, 2)`.
pub fn gen_random_hl(n: usize, seed: u64) -> Result<HlNetwork> {
    if n == 0 {
        return Err(Error::Dimension { min: 1, got: 0 });
    }
    if n == 1 {
        return Ok(HlNetwork::k2());
    }
    let left = gen_random_hl(n - 1, rng::mix(seed, 0))?;
    let right = gen_random_hl(n - 1, rng::mix(seed, 1))?;
    let half = 1usize << (n - 1);
    let mut perm: Vec<usize> = (0..half).collect();
    let mut r = rng::rng(rng::mix(seed, 2));
    for i in (1..half).rev() {
        let j = r.gen_range(0..=i);
        perm.swap(i, j);
    }
    hl_join(left, right, Bijection(perm))
}

/// Checks every HL invariant; for `n <= 6` also that κ = λ = n.
pub fn validate_hl(h: &HlNetwork) -> Vec<CheckOutcome> {
    let n = h.dimension;
    let g = &h.graph;
    let mut out = Vec::new();
    if n == 0 {
        out.push(CheckOutcome::fail("dimension", "dimension 0"));
        return out;
    }
    let size = 1usize << n;
    let half = size / 2;
    out.push(CheckOutcome::expect_eq("vertex_count", g.n_vertices(), size));
    out.push(CheckOutcome::expect_eq("edge_count", g.n_edges(), n * half));
    let bad_degree = (0..g.n_vertices()).find(|&v| g.neighbors(v).len() != n);
    out.push(match bad_degree {
        None => CheckOutcome::pass("regular", format!("{n}-regular")),
        Some(v) => CheckOutcome::fail(
            "regular",
            format!("vertex {v} has degree {}, expected {n}", g.neighbors(v).len()),
        ),
    });
    out.push(CheckOutcome::expect_eq("f_edge_count", h.f_edges.len(), half));

    let mut covered = vec![0usize; g.n_vertices().max(size)];
    let mut matching_err = None;
    for e in &h.f_edges {
        if !g.has_edge(e.u, e.v) {
            matching_err.get_or_insert(format!("f-edge {e} missing from graph"));
        } else if !(e.u < half && e.v >= half) {
            matching_err.get_or_insert(format!("f-edge {e} does not cross the halves"));
        } else {
            covered[e.u] += 1;
            covered[e.v] += 1;
        }
    }
    if matching_err.is_none() {
        if let Some(v) = (0..size).find(|&v| covered[v] != 1) {
            matching_err = Some(format!("vertex {v} covered {} times", covered[v]));
        }
    }
    out.push(match matching_err {
        None => CheckOutcome::pass("f_edges_perfect_matching", format!("{half} edges")),
        Some(m) => CheckOutcome::fail("f_edges_perfect_matching", m),
    });

    let label_err = match g.labels() {
        None => Some("no labels".to_string()),
        Some(ls) => ls.iter().enumerate().find_map(|(v, l)| {
            let want = label_of(v, n);
            (l != &want).then(|| format!("vertex {v} labelled {l}, expected {want}"))
        }),
    };
    out.push(match label_err {
        None => CheckOutcome::pass("labels", "prefix 0 left, 1 right"),
        Some(m) => CheckOutcome::fail("labels", m),
    });

    let present = h.f_edges.iter().copied().filter(|e| g.has_edge(e.u, e.v));
    let split = FaultSet::on(g, present)
        .and_then(|f| g.remove_edges(&f))
        .map(|rest| rest.components());
    let halves_ok = match &split {
        Ok(comps) => {
            comps.len() == 2
                && comps[0] == (0..half).collect::<Vec<_>>()
                && comps[1] == (half..size).collect::<Vec<_>>()
        }
        Err(_) => false,
    };
    out.push(if halves_ok {
        CheckOutcome::pass("halves_split", "two halves of size 2^(n-1)")
    } else {
        CheckOutcome::fail(
            "halves_split",
            format!(
                "removing f-edges leaves {} components",
                split.map(|c| c.len()).unwrap_or(0)
            ),
        )
    });

    if n <= CONNECTIVITY_CHECK_MAX_DIM {
        let lambda = edge_connectivity(g);
        let kappa = vertex_connectivity(g);
        out.push(CheckOutcome::expect_eq("edge_connectivity", lambda, n));
        out.push(CheckOutcome::expect_eq("vertex_connectivity", kappa, n));
    }
    out
}
