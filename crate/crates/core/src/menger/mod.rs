//! Strong Menger edge connectivity under edge faults.

mod adversarial;
mod campaign;
mod smec;
mod tightness;

use serde::{Deserialize, Serialize};

pub use adversarial::adversarial_fault_sets;
pub use campaign::{
    check_component_lemma, run_campaign, run_probe, CampaignMode, CampaignOutcome, FaultCampaign,
    Probe, SizePolicy, FULL_SIZE_FRACTION, MAX_CONDITIONAL_REDRAWS,
};
pub use smec::{is_smec, is_smec_pairwise, SmecVerdict, SmecWitness};
pub use tightness::{
    all_targets, certify, tightness_conditional, tightness_unconditional, TightnessCheck,
    TightnessKind, TightnessWitness,
};

use crate::error::{Error, Result};
use crate::graph::{Edge, FaultSet};
use crate::linegraph::{LineGraph, Part};

/// `S = S1 ∪ S2 ∪ Sf`: faults inside `L^1`, inside `L^2`, and at f-vertices.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaultPartition {
    pub s1: Vec<Edge>,
    pub s2: Vec<Edge>,
    pub sf: Vec<Edge>,
}

impl FaultPartition {
    pub fn total(&self) -> usize {
        self.s1.len() + self.s2.len() + self.sf.len()
    }
}

pub fn partition_faults(lg: &LineGraph, s: &FaultSet) -> Result<FaultPartition> {
    let parts = lg.parts().ok_or(Error::NoHalves)?;
    if let Some(e) = s.edges().iter().find(|e| !lg.graph().has_edge(e.u, e.v)) {
        return Err(Error::ForeignEdge(e.u, e.v));
    }
    let mut p = FaultPartition::default();
    for &e in s.edges() {
        match (parts[e.u], parts[e.v]) {
            (Part::Left, Part::Left) => p.s1.push(e),
            (Part::Right, Part::Right) => p.s2.push(e),
            _ => p.sf.push(e),
        }
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::topology::{gen_family, FamilyKind};
    use rand::seq::index;

    #[test]
    fn partition_examples() {
        let h = gen_family(FamilyKind::Crossed, 4).unwrap();
        let lg = LineGraph::of_network(&h);
        let g = lg.graph();
        let f = lg.f_vertices().unwrap();
        let star = FaultSet::on(g, g.neighbors(f[0]).iter().map(|&w| Edge::new(f[0], w))).unwrap();
        let p = partition_faults(&lg, &star).unwrap();
        assert!(p.s1.is_empty() && p.s2.is_empty());
        assert_eq!(p.sf.len(), 6);

        let left_edge = *g
            .edges()
            .iter()
            .find(|e| lg.part(e.u) == Some(Part::Left) && lg.part(e.v) == Some(Part::Left))
            .unwrap();
        let one = FaultSet::on(g, [left_edge]).unwrap();
        assert_eq!(partition_faults(&lg, &one).unwrap().s1, vec![left_edge]);

        let mut r = crate::rng::rng(11);
        let idx = index::sample(&mut r, g.n_edges(), 11).into_vec();
        let s = FaultSet::from_indices(g, &idx);
        assert_eq!(partition_faults(&lg, &s).unwrap().total(), 11);
    }

    #[test]
    fn partition_needs_halves() {
        let lg = LineGraph::bare(gen_family(FamilyKind::Hypercube, 2).unwrap().into_graph());
        assert_eq!(partition_faults(&lg, &FaultSet::empty()), Err(Error::NoHalves));
    }
}
