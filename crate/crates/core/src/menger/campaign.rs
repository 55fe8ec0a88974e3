//! Fault campaigns: exhaustive or seeded enumeration of edge fault sets,
//! each checked against a probe (SMEC or a component-size floor).

use itertools::Itertools;
use rand::seq::index;
use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::adversarial::adversarial_fault_sets;
use super::smec::is_smec;
use crate::error::{Error, Result};
use crate::flow::{binomial, subsets_up_to, DEFAULT_SUBSET_BUDGET};
use crate::graph::{Edge, FaultSet, Graph};
use crate::linegraph::LineGraph;
use crate::report::{Counts, Witness};
use crate::rng;

/// Fraction of samples drawn at exactly the maximum size `m`.
pub const FULL_SIZE_FRACTION: f64 = 0.8;
/// Redraw cap per sample in conditional sampled mode.
pub const MAX_CONDITIONAL_REDRAWS: u64 = 100_000;
const BATCH: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", tag = "mode")]
pub enum CampaignMode {
    Exhaustive,
    Sampled { samples: usize, seed: u64 },
}

/// Which fault-set sizes a campaign visits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SizePolicy {
    /// Every size in `0..=m`.
    AtMost,
    /// Only `|F| = m`.
    Exactly,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaultCampaign {
    pub mode: CampaignMode,
    pub m: usize,
    /// Only fault sets with `δ(G - F) >= 2` are checked.
    pub conditional: bool,
    pub sizes: SizePolicy,
    /// Append the deterministic adversarial suite for budget `m`.
    pub adversarial: bool,
    /// Exhaustive-mode cap on the number of fault sets.
    pub budget: u128,
    /// Worker threads; 0 uses the rayon default, 1 runs inline.
    pub jobs: usize,
}

impl FaultCampaign {
    pub fn exhaustive(m: usize) -> Self {
        FaultCampaign {
            mode: CampaignMode::Exhaustive,
            m,
            conditional: false,
            sizes: SizePolicy::AtMost,
            adversarial: false,
            budget: DEFAULT_SUBSET_BUDGET,
            jobs: 0,
        }
    }

    pub fn sampled(m: usize, samples: usize, seed: u64) -> Self {
        FaultCampaign {
            mode: CampaignMode::Sampled { samples, seed },
            ..FaultCampaign::exhaustive(m)
        }
    }

    pub fn conditional(mut self, yes: bool) -> Self {
        self.conditional = yes;
        self
    }

    pub fn with_adversarial(mut self, yes: bool) -> Self {
        self.adversarial = yes;
        self
    }

    pub fn with_jobs(mut self, jobs: usize) -> Self {
        self.jobs = jobs;
        self
    }

    pub fn with_sizes(mut self, sizes: SizePolicy) -> Self {
        self.sizes = sizes;
        self
    }
}

/// What to assert about each `G - F`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Probe {
    Smec,
    LargestComponentAtLeast(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CampaignOutcome {
    pub counts: Counts,
    /// First failure in enumeration order (campaign sets before adversarial ones).
    pub witness: Option<Witness>,
}

enum Verdict {
    Skipped,
    Pass,
    Fail(Witness),
}

fn edges_of(g: &Graph, idx: &[usize]) -> Vec<Edge> {
    FaultSet::from_indices(g, idx).edges().to_vec()
}

fn admissible(g: &Graph, idx: &[usize]) -> bool {
    let mut deg: Vec<usize> = (0..g.n_vertices()).map(|v| g.neighbors(v).len()).collect();
    for &i in idx {
        let e = g.edges()[i];
        deg[e.u] -= 1;
        deg[e.v] -= 1;
    }
    deg.iter().all(|&d| d >= 2)
}

fn evaluate(g: &Graph, idx: &[usize], probe: Probe, conditional: bool) -> Verdict {
    if conditional && !admissible(g, idx) {
        return Verdict::Skipped;
    }
    let rest = g.remove_edge_indices(idx);
    match probe {
        Probe::Smec => match is_smec(&rest).witness {
            None => Verdict::Pass,
            Some(w) => Verdict::Fail(Witness::Smec {
                fault_edges: edges_of(g, idx),
                u: w.u,
                v: w.v,
                path_count: w.path_count,
                required: w.required,
                cut: w.cut,
            }),
        },
        Probe::LargestComponentAtLeast(floor) => {
            let largest = rest.largest_component_size();
            if largest >= floor {
                Verdict::Pass
            } else {
                Verdict::Fail(Witness::Component {
                    fault_edges: edges_of(g, idx),
                    largest_component: largest,
                    floor,
                })
            }
        }
    }
}

struct Tally {
    counts: Counts,
    witness: Option<Witness>,
}

impl Tally {
    fn absorb(&mut self, verdicts: Vec<Verdict>, adversarial: bool) {
        for v in verdicts {
            match v {
                Verdict::Skipped => self.counts.skipped_conditional += 1,
                Verdict::Pass | Verdict::Fail(_) if adversarial => self.counts.adversarial_visited += 1,
                _ => self.counts.visited += 1,
            }
            if let Verdict::Fail(w) = v {
                self.counts.failures += 1;
                self.witness.get_or_insert(w);
            }
        }
    }
}

fn map_batch(batch: &[Vec<usize>], g: &Graph, probe: Probe, conditional: bool, jobs: usize) -> Vec<Verdict> {
    if jobs == 1 {
        batch.iter().map(|s| evaluate(g, s, probe, conditional)).collect()
    } else {
        batch.par_iter().map(|s| evaluate(g, s, probe, conditional)).collect()
    }
}

/// Draws sample `i`: size `m` with probability 0.8, otherwise uniform in
/// `0..m`; edges uniform without replacement. In conditional mode draws are
/// repeated until `δ(G - F) >= 2`; the number of rejections is returned.
fn draw(g: &Graph, c: &FaultCampaign, seed: u64, i: u64) -> Result<(Vec<usize>, u64)> {
    let mut r = rng::rng(rng::mix(seed, i));
    let m = c.m.min(g.n_edges());
    let mut rejected = 0;
    loop {
        let k = match c.sizes {
            SizePolicy::Exactly => m,
            SizePolicy::AtMost if m == 0 || r.gen_bool(FULL_SIZE_FRACTION) => m,
            SizePolicy::AtMost => r.gen_range(0..m),
        };
        let mut idx = index::sample(&mut r, g.n_edges(), k).into_vec();
        idx.sort_unstable();
        if !c.conditional || admissible(g, &idx) {
            return Ok((idx, rejected));
        }
        rejected += 1;
        if rejected >= MAX_CONDITIONAL_REDRAWS {
            return Err(Error::Campaign(format!(
                "sample {i}: no admissible fault set after {rejected} draws"
            )));
        }
    }
}

fn run_inner(lg: &LineGraph, c: &FaultCampaign, probe: Probe) -> Result<CampaignOutcome> {
    let g = lg.graph();
    let mut tally = Tally {
        counts: Counts::default(),
        witness: None,
    };
    match c.mode {
        CampaignMode::Exhaustive => {
            let e = g.n_edges();
            let sizes: Vec<usize> = match c.sizes {
                SizePolicy::AtMost => (0..=c.m.min(e)).collect(),
                SizePolicy::Exactly if c.m <= e => vec![c.m],
                SizePolicy::Exactly => vec![],
            };
            let count = match c.sizes {
                SizePolicy::AtMost => subsets_up_to(e, c.m),
                SizePolicy::Exactly => binomial(e as u128, c.m as u128),
            };
            if count > c.budget {
                return Err(Error::BudgetExceeded {
                    count,
                    budget: c.budget,
                });
            }
            for k in sizes {
                for chunk in &(0..e).combinations(k).chunks(BATCH) {
                    let batch: Vec<Vec<usize>> = chunk.collect();
                    tally.absorb(map_batch(&batch, g, probe, c.conditional, c.jobs), false);
                }
            }
        }
        CampaignMode::Sampled { samples, seed } => {
            let mut start = 0usize;
            while start < samples {
                let end = (start + BATCH).min(samples);
                let draws: Vec<(Vec<usize>, u64)> = if c.jobs == 1 {
                    (start..end).map(|i| draw(g, c, seed, i as u64)).collect::<Result<_>>()?
                } else {
                    (start..end)
                        .into_par_iter()
                        .map(|i| draw(g, c, seed, i as u64))
                        .collect::<Result<_>>()?
                };
                tally.counts.skipped_conditional += draws.iter().map(|d| d.1).sum::<u64>();
                let batch: Vec<Vec<usize>> = draws.into_iter().map(|d| d.0).collect();
                tally.absorb(map_batch(&batch, g, probe, false, c.jobs), false);
                start = end;
            }
        }
    }
    if c.adversarial {
        let sets: Vec<Vec<usize>> = adversarial_fault_sets(lg, c.m)
            .iter()
            .map(|f| f.edges().iter().map(|e| g.edge_index(*e).expect("hosted")).collect())
            .collect();
        for chunk in sets.chunks(BATCH) {
            tally.absorb(map_batch(chunk, g, probe, c.conditional, c.jobs), true);
        }
    }
    Ok(CampaignOutcome {
        counts: tally.counts,
        witness: tally.witness,
    })
}

fn in_pool<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> T {
    if jobs <= 1 {
        return f();
    }
    match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(pool) => pool.install(f),
        Err(_) => f(),
    }
}

/// Runs `probe` on `L - F` for every fault set the campaign visits.
pub fn run_probe(lg: &LineGraph, c: &FaultCampaign, probe: Probe) -> Result<CampaignOutcome> {
    if c.m > lg.graph().n_edges() {
        return Err(Error::Campaign(format!(
            "m = {} exceeds the {} edges of the graph",
            c.m,
            lg.graph().n_edges()
        )));
    }
    in_pool(c.jobs, || run_inner(lg, c, probe))
}

/// Strong Menger edge connectivity of `L - F` over the campaign.
pub fn run_campaign(lg: &LineGraph, c: &FaultCampaign) -> Result<CampaignOutcome> {
    run_probe(lg, c, Probe::Smec)
}

/// Asserts `L - S` keeps a component of at least `floor` vertices for every
/// visited `S` with `|S| <= fault_budget`.
pub fn check_component_lemma(
    lg: &LineGraph,
    fault_budget: usize,
    floor: usize,
    c: &FaultCampaign,
) -> Result<CampaignOutcome> {
    if floor > lg.graph().n_vertices() {
        return Err(Error::Campaign(format!(
            "floor {floor} exceeds {} vertices",
            lg.graph().n_vertices()
        )));
    }
    let c = FaultCampaign {
        m: fault_budget,
        ..c.clone()
    };
    run_probe(lg, &c, Probe::LargestComponentAtLeast(floor))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::topology::{gen_family, FamilyKind};

    fn lq(n: usize) -> LineGraph {
        LineGraph::of_network(&gen_family(FamilyKind::Hypercube, n).unwrap())
    }

    #[test]
    fn m_zero_is_single_check() {
        let lg = lq(3);
        let out = run_campaign(&lg, &FaultCampaign::exhaustive(0)).unwrap();
        assert_eq!(out.counts.visited, 1);
        assert_eq!(out.counts.failures, 0);
        let out = check_component_lemma(&lg, 0, 12, &FaultCampaign::exhaustive(0)).unwrap();
        assert_eq!((out.counts.visited, out.counts.failures), (1, 0));
    }

    #[test]
    fn exhaustive_counts() {
        let lg = lq(3);
        let out = run_campaign(&lg, &FaultCampaign::exhaustive(2).with_jobs(1)).unwrap();
        assert_eq!(out.counts.visited, 301);
        assert_eq!(out.counts.failures, 0);
        let exact = run_campaign(&lg, &FaultCampaign::exhaustive(2).with_sizes(SizePolicy::Exactly)).unwrap();
        assert_eq!(exact.counts.visited, 276);
    }

    #[test]
    fn one_fault_too_many_is_caught() {
        let lg = lq(3);
        let out = run_campaign(&lg, &FaultCampaign::exhaustive(3)).unwrap();
        assert!(out.counts.failures > 0);
        match out.witness.unwrap() {
            Witness::Smec { fault_edges, path_count, required, .. } => {
                assert_eq!(fault_edges.len(), 3);
                assert!(path_count < required);
            }
            w => panic!("unexpected witness {w:?}"),
        }
    }

    #[test]
    fn conditional_filter_is_exact() {
        let lg = lq(3);
        let c = FaultCampaign::exhaustive(3).conditional(true);
        let out = run_probe(&lg, &c, Probe::LargestComponentAtLeast(0)).unwrap();
        let g = lg.graph();
        let mut skipped = 0;
        for k in 0..=3 {
            for s in (0..g.n_edges()).combinations(k) {
                if !admissible(g, &s) {
                    skipped += 1;
                }
            }
        }
        assert_eq!(out.counts.skipped_conditional, skipped);
        assert_eq!(out.counts.visited + skipped, subsets_up_to(24, 3) as u64);
    }

    #[test]
    fn sampling_is_reproducible_and_job_independent() {
        let lg = lq(4);
        let c = FaultCampaign::sampled(6, 300, 5).conditional(true);
        let a = run_campaign(&lg, &c.clone().with_jobs(1)).unwrap();
        let b = run_campaign(&lg, &c.with_jobs(3)).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.counts.visited, 300);
    }

    #[test]
    fn guards() {
        let lg = lq(4);
        let mut c = FaultCampaign::exhaustive(6);
        c.budget = 1000;
        assert!(matches!(run_campaign(&lg, &c), Err(Error::BudgetExceeded { .. })));
        assert!(run_campaign(&lg, &FaultCampaign::exhaustive(97)).is_err());
        assert!(check_component_lemma(&lg, 1, 33, &FaultCampaign::exhaustive(0)).is_err());
    }
}
