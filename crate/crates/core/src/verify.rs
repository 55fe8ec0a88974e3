//! Named checks that turn a network (or a graph under test) into a
//! [`VerificationReport`].

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::flow::DEFAULT_SUBSET_BUDGET;
use crate::graph::Graph;
use crate::linegraph::{check_prop_3_1, line_graph, LineGraph};
use crate::menger::{
    all_targets, certify, check_component_lemma, run_campaign, tightness_conditional,
    tightness_unconditional, FaultCampaign, TightnessKind,
};
use crate::report::{CheckOutcome, Mode, Target, VerificationReport, Witness};
use crate::topology::{gen_family, validate_hl, FamilyKind, HlNetwork};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CheckKind {
    /// `L` itself is strongly Menger edge connected.
    Smec,
    /// `(2n-4)`-edge-fault-tolerant by default.
    FtSmec,
    /// `(4n-10)`-conditional edge-fault-tolerant by default.
    CondFtSmec,
    /// `|S| <= 4n-7` keeps a component of `n 2^(n-1) - 1` vertices.
    Lemma32,
    /// `|S| <= 6n-13` keeps a component of `n 2^(n-1) - 2` vertices.
    Lemma41,
    /// `n = 4`, `|S| <= 11` keeps a component of 30 vertices.
    AppendixA,
    TightUncond,
    TightCond,
    /// HL-network invariants and κ = λ = n.
    Validate,
    /// f-vertex neighbourhood counts.
    Prop31,
}

impl CheckKind {
    pub const ALL: [CheckKind; 10] = [
        CheckKind::Smec,
        CheckKind::FtSmec,
        CheckKind::CondFtSmec,
        CheckKind::Lemma32,
        CheckKind::Lemma41,
        CheckKind::AppendixA,
        CheckKind::TightUncond,
        CheckKind::TightCond,
        CheckKind::Validate,
        CheckKind::Prop31,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            CheckKind::Smec => "smec",
            CheckKind::FtSmec => "ft-smec",
            CheckKind::CondFtSmec => "cond-ft-smec",
            CheckKind::Lemma32 => "lemma32",
            CheckKind::Lemma41 => "lemma41",
            CheckKind::AppendixA => "appendixA",
            CheckKind::TightUncond => "tight-uncond",
            CheckKind::TightCond => "tight-cond",
            CheckKind::Validate => "validate",
            CheckKind::Prop31 => "prop31",
        }
    }

    /// Default fault bound for campaign checks at dimension `n`.
    pub fn default_m(&self, n: usize) -> usize {
        let n = n as isize;
        let m = match self {
            CheckKind::FtSmec => 2 * n - 4,
            CheckKind::CondFtSmec => 4 * n - 10,
            CheckKind::Lemma32 => 4 * n - 7,
            CheckKind::Lemma41 => 6 * n - 13,
            CheckKind::AppendixA => 11,
            _ => 0,
        };
        m.max(0) as usize
    }

    /// Component floor for the component checks.
    pub fn floor(&self, n: usize) -> Option<usize> {
        let size = n << n.saturating_sub(1);
        match self {
            CheckKind::Lemma32 => Some(size.saturating_sub(1)),
            CheckKind::Lemma41 => Some(size.saturating_sub(2)),
            CheckKind::AppendixA => Some(30),
            _ => None,
        }
    }
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CheckKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CheckKind::ALL
            .into_iter()
            .find(|c| c.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownName {
                what: "check",
                name: s.to_string(),
            })
    }
}

/// The graph under test, with the network it came from when known.
#[derive(Debug, Clone)]
pub struct Subject {
    pub network: Option<HlNetwork>,
    pub line: LineGraph,
    pub n: usize,
    pub target: Target,
}

impl Subject {
    pub fn family(kind: FamilyKind, n: usize) -> Result<Self> {
        let h = gen_family(kind, n)?;
        Ok(Subject::network(
            h,
            Target {
                family: Some(kind.name().to_string()),
                n: Some(n),
                seed: kind.seed(),
                ..Target::default()
            },
        ))
    }

    pub fn network(h: HlNetwork, target: Target) -> Self {
        Subject {
            n: h.dimension(),
            line: LineGraph::of_network(&h),
            network: Some(h),
            target,
        }
    }

    /// A base network read from disk. Labelled `2^n`-vertex inputs are
    /// decomposed into their join tree; anything else is used as-is.
    pub fn base(g: Graph, target: Target) -> Self {
        let n = g.n_vertices().trailing_zeros() as usize;
        if g.n_vertices().is_power_of_two() && g.labels().is_some() && n >= 1 {
            if let Ok(h) = HlNetwork::decompose(g.clone(), n) {
                return Subject::network(h, target);
            }
        }
        let line = line_graph(&g);
        Subject {
            network: None,
            n: g.max_degree(),
            line,
            target,
        }
    }

    /// A graph that is itself the line graph under test; `n` defaults to
    /// `Δ/2 + 1` from `(2n-2)`-regularity.
    pub fn line(g: Graph, n: Option<usize>, target: Target) -> Self {
        Subject {
            network: None,
            n: n.unwrap_or(g.max_degree() / 2 + 1),
            line: LineGraph::bare(g),
            target,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckRequest {
    pub check: CheckKind,
    /// Fault bound; defaults to the check's tolerated bound.
    pub m: Option<usize>,
    /// `Some(samples)` selects seeded sampling instead of exhaustive enumeration.
    pub samples: Option<usize>,
    pub seed: u64,
    pub adversarial: bool,
    /// Tightness checks: certify every admissible `v`, not just the lowest.
    pub all_targets: bool,
    pub jobs: usize,
    pub budget: u128,
}

impl CheckRequest {
    pub fn new(check: CheckKind) -> Self {
        CheckRequest {
            check,
            m: None,
            samples: None,
            seed: 0,
            adversarial: false,
            all_targets: false,
            jobs: 0,
            budget: DEFAULT_SUBSET_BUDGET,
        }
    }

    pub fn sampled(mut self, samples: usize, seed: u64) -> Self {
        self.samples = Some(samples);
        self.seed = seed;
        self
    }

    pub fn with_m(mut self, m: usize) -> Self {
        self.m = Some(m);
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
}

#[cfg(not(target_arch = "wasm32"))]
fn timed<T>(f: impl FnOnce() -> T) -> (T, f64) {
    let start = std::time::Instant::now();
    let out = f();
    (out, start.elapsed().as_secs_f64())
}

#[cfg(target_arch = "wasm32")]
fn timed<T>(f: impl FnOnce() -> T) -> (T, f64) {
    (f(), 0.0)
}

pub fn run_check(subject: &Subject, req: &CheckRequest) -> Result<VerificationReport> {
    let (report, secs) = timed(|| run_untimed(subject, req));
    let mut report = report?;
    report.timing.wall_seconds = secs;
    Ok(report)
}

fn run_untimed(s: &Subject, req: &CheckRequest) -> Result<VerificationReport> {
    let n = s.n;
    let name = req.check.name();
    let need_network = || {
        s.network.as_ref().ok_or_else(|| {
            Error::Campaign(format!("`{name}` needs a hypercube-like network, not a bare graph"))
        })
    };
    match req.check {
        CheckKind::Validate => Ok(VerificationReport::from_checks(
            name,
            s.target.clone(),
            validate_hl(need_network()?),
        )),
        CheckKind::Prop31 => {
            let h = need_network()?;
            if h.dimension() < 2 {
                return Err(Error::Dimension { min: 2, got: h.dimension() });
            }
            Ok(VerificationReport::from_checks(name, s.target.clone(), check_prop_3_1(h)))
        }
        CheckKind::Smec => {
            let mut r = VerificationReport::new(name, s.target.clone(), Mode::Direct);
            r.parameters.m = Some(0);
            let out = run_campaign(&s.line, &FaultCampaign::exhaustive(0).with_jobs(1))?;
            r.counts = out.counts;
            r.witness = out.witness;
            Ok(r)
        }
        CheckKind::FtSmec | CheckKind::CondFtSmec | CheckKind::Lemma32 | CheckKind::Lemma41 | CheckKind::AppendixA => {
            if req.check == CheckKind::AppendixA && n != 4 {
                return Err(Error::Campaign(format!("appendixA is stated for n = 4, got n = {n}")));
            }
            let m = req.m.unwrap_or_else(|| req.check.default_m(n));
            let conditional = req.check == CheckKind::CondFtSmec;
            let mut c = match req.samples {
                Some(samples) => FaultCampaign::sampled(m, samples, req.seed),
                None => FaultCampaign::exhaustive(m),
            }
            .conditional(conditional)
            .with_adversarial(req.adversarial)
            .with_jobs(req.jobs);
            c.budget = req.budget;
            let mode = if req.samples.is_some() { Mode::Sampled } else { Mode::Exhaustive };
            let mut r = VerificationReport::new(name, s.target.clone(), mode);
            r.parameters.m = Some(m);
            r.parameters.conditional = conditional;
            r.parameters.adversarial = req.adversarial;
            if let Some(samples) = req.samples {
                r.parameters.samples = Some(samples);
                r.parameters.seed = Some(req.seed);
            }
            let out = match req.check.floor(n) {
                Some(floor) => {
                    r.parameters.floor = Some(floor);
                    check_component_lemma(&s.line, m, floor, &c)?
                }
                None => run_campaign(&s.line, &c)?,
            };
            r.counts = out.counts;
            r.witness = out.witness;
            Ok(r)
        }
        CheckKind::TightUncond | CheckKind::TightCond => tightness_report(s, req),
    }
}

fn tightness_report(s: &Subject, req: &CheckRequest) -> Result<VerificationReport> {
    let lg = &s.line;
    let w = match req.check {
        CheckKind::TightUncond => tightness_unconditional(lg)?,
        _ => tightness_conditional(lg)?,
    };
    let n = w.dimension;
    let check = certify(lg, &w, w.v)?;
    let mut r = VerificationReport::new(req.check.name(), s.target.clone(), Mode::Direct);
    r.parameters.m = Some(w.fault_set.len());
    r.parameters.conditional = w.kind == TightnessKind::Conditional;
    let mut checks = vec![
        CheckOutcome::expect_eq("fault_set_size", w.fault_set.len(), w.expected_size()),
        CheckOutcome {
            name: "path_bound".into(),
            passed: check.path_count <= w.expected_max_paths,
            detail: format!("{} paths between {} and {}, bound {}", check.path_count, w.u, w.v, w.expected_max_paths),
        },
        CheckOutcome::expect_eq("required", check.required, 2 * n - 2),
        CheckOutcome {
            name: "cut_certificate".into(),
            passed: check.cut_valid,
            detail: format!("{} cut edges", check.cut.len()),
        },
    ];
    if w.kind == TightnessKind::Conditional {
        let rest = lg.graph().remove_edges(&w.fault_set)?;
        checks.push(CheckOutcome {
            name: "min_degree_after".into(),
            passed: check.min_degree_after >= 2,
            detail: format!("δ(L - S) = {}", check.min_degree_after),
        });
        checks.push(CheckOutcome::expect_eq("deg_u1", rest.degree(w.anchors[0])?, 2));
        checks.push(CheckOutcome::expect_eq("deg_u2", rest.degree(w.anchors[1])?, 3));
    }
    let mut visited = 1;
    if req.all_targets {
        r.parameters.flags.push("all-targets".into());
        for v in all_targets(lg, &w) {
            let c = certify(lg, &w, v)?;
            visited += 1;
            checks.push(CheckOutcome {
                name: format!("target_{v}"),
                passed: c.violates_smec(),
                detail: format!("{} paths, {} required", c.path_count, c.required),
            });
        }
    }
    r.counts.visited = visited;
    if check.violates_smec() {
        r.counts.failures = 1;
        r.witness = Some(Witness::Smec {
            fault_edges: w.fault_set.edges().to_vec(),
            u: w.u,
            v: w.v,
            path_count: check.path_count,
            required: check.required,
            cut: check.cut,
        });
    }
    r.checks = checks;
    Ok(r)
}
