//! Hypercube-like networks, their line graphs, and computational checks of
//! fault-tolerant strong Menger edge connectivity.
//!
//! The crate is organised bottom-up:
//!
//! - [`graph`] and [`flow`]: immutable simple graphs, components, exact
//!   unit-capacity max-flow, edge and vertex connectivity, and a brute-force
//!   cut oracle;
//! - [`topology`]: the recursive `⊕_f` join, the named families (hypercube,
//!   crossed cube, 0/1-Möbius cubes, locally twisted cube) and seeded random
//!   HL networks;
//! - [`linegraph`]: line graphs with edge provenance, f-vertices, and the BCDC
//!   original/logical pair;
//! - [`menger`]: the SMEC predicate, fault campaigns, component floors,
//!   adversarial fault sets and tightness constructions;
//! - [`verify`] and [`report`]: named checks producing JSON reports.

pub mod edgelist;
pub mod error;
pub mod flow;
pub mod graph;
pub mod linegraph;
pub mod menger;
pub mod report;
pub mod rng;
pub mod topology;
pub mod verify;

pub use error::{Error, Result};
pub use flow::{
    all_pairs_min_cut, brute_force_min_cut, edge_connectivity, edge_disjoint_paths,
    max_edge_disjoint_paths, vertex_connectivity, FlowResult,
};
pub use graph::{Edge, FaultSet, Graph};
pub use linegraph::{bcdc, check_prop_3_1, f_vertices, line_graph, BcdcPair, LineGraph, Part};
pub use report::VerificationReport;
pub use topology::{
    gen_family, gen_family_recursive, gen_random_hl, hl_join, validate_hl, Bijection, FamilyKind,
    HlNetwork,
};
