//! Browser demo: draw an HL network or its line graph, highlight a tightness
//! witness, and run a small seeded fault campaign. Every export returns JSON.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use hlmenger::menger::{tightness_conditional, tightness_unconditional, TightnessWitness};
use hlmenger::report::VerificationReport;
use hlmenger::verify::{run_check, CheckKind, CheckRequest, Subject};
use hlmenger::{gen_family, Edge, FamilyKind, LineGraph};

/// Campaigns in the page are capped so a click never hangs the tab.
pub const MAX_DEMO_SAMPLES: usize = 5_000;

#[derive(Debug, Serialize)]
pub struct DrawGraph {
    pub labels: Vec<String>,
    pub edges: Vec<Edge>,
    /// Vertices to highlight: f-vertices of a line graph, empty for a base network.
    pub marked: Vec<usize>,
}

#[derive(Debug, Serialize)]
pub struct Tightness {
    pub graph: DrawGraph,
    pub witness: TightnessWitness,
    pub report: VerificationReport,
}

fn family(name: &str, seed: u64) -> hlmenger::Result<FamilyKind> {
    FamilyKind::parse(name, seed)
}

fn labels_of(g: &hlmenger::Graph) -> Vec<String> {
    (0..g.n_vertices())
        .map(|v| g.label(v).map_or_else(|| v.to_string(), str::to_string))
        .collect()
}

pub fn network(name: &str, n: usize, seed: u64, line: bool) -> hlmenger::Result<DrawGraph> {
    let h = gen_family(family(name, seed)?, n)?;
    if !line {
        let g = h.graph();
        return Ok(DrawGraph { labels: labels_of(g), edges: g.edges().to_vec(), marked: Vec::new() });
    }
    let lg = LineGraph::of_network(&h);
    let g = lg.graph();
    Ok(DrawGraph {
        labels: labels_of(g),
        edges: g.edges().to_vec(),
        marked: lg.f_vertices().unwrap_or_default(),
    })
}

pub fn tightness(name: &str, n: usize, seed: u64, conditional: bool) -> hlmenger::Result<Tightness> {
    let kind = family(name, seed)?;
    let s = Subject::family(kind, n)?;
    let witness = if conditional {
        tightness_conditional(&s.line)?
    } else {
        tightness_unconditional(&s.line)?
    };
    let check = if conditional { CheckKind::TightCond } else { CheckKind::TightUncond };
    let report = run_check(&s, &CheckRequest::new(check).with_jobs(1))?;
    let g = s.line.graph();
    Ok(Tightness {
        graph: DrawGraph { labels: labels_of(g), edges: g.edges().to_vec(), marked: vec![witness.u, witness.v] },
        witness,
        report,
    })
}

/// Sampled campaign for `check` (`ft-smec`, `cond-ft-smec`, `lemma32`,
/// `lemma41` or `appendixA`); `m = None` uses the check's default bound.
pub fn sample_campaign(
    name: &str,
    n: usize,
    seed: u64,
    check: &str,
    m: Option<usize>,
    samples: usize,
    sample_seed: u64,
) -> hlmenger::Result<VerificationReport> {
    let s = Subject::family(family(name, seed)?, n)?;
    let mut req = CheckRequest::new(check.parse()?)
        .sampled(samples.min(MAX_DEMO_SAMPLES), sample_seed)
        .with_adversarial(true)
        .with_jobs(1);
    req.m = m;
    run_check(&s, &req)
}

fn to_js<T: Serialize>(r: hlmenger::Result<T>) -> Result<String, JsError> {
    let v = r.map_err(|e| JsError::new(&e.to_string()))?;
    serde_json::to_string(&v).map_err(|e| JsError::new(&e.to_string()))
}

#[wasm_bindgen]
pub fn network_json(family: &str, n: usize, seed: u64, line: bool) -> Result<String, JsError> {
    to_js(network(family, n, seed, line))
}

#[wasm_bindgen]
pub fn tightness_json(family: &str, n: usize, seed: u64, conditional: bool) -> Result<String, JsError> {
    to_js(tightness(family, n, seed, conditional))
}

/// `m < 0` selects the check's default bound.
#[wasm_bindgen]
pub fn sample_campaign_json(
    family: &str,
    n: usize,
    seed: u64,
    check: &str,
    m: i32,
    samples: usize,
    sample_seed: u64,
) -> Result<String, JsError> {
    let m = usize::try_from(m).ok();
    to_js(sample_campaign(family, n, seed, check, m, samples, sample_seed))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn network_and_line_graph() {
        let g = network("crossed", 3, 0, false).unwrap();
        assert_eq!((g.labels.len(), g.edges.len()), (8, 12));
        let l = network("crossed", 3, 0, true).unwrap();
        assert_eq!((l.labels.len(), l.edges.len(), l.marked.len()), (12, 24, 4));
        assert!(network("nope", 3, 0, false).is_err());
    }

    #[test]
    fn tightness_highlights_pair() {
        let t = tightness("ltq", 4, 0, true).unwrap();
        assert_eq!(t.witness.fault_set.len(), 7);
        assert_eq!(t.report.counts.failures, 1);
        assert_eq!(t.graph.marked, vec![t.witness.u, t.witness.v]);
        assert!(serde_json::to_string(&t).is_ok());
    }

    #[test]
    fn campaign_is_capped_and_deterministic() {
        let a = sample_campaign("hypercube", 4, 0, "cond-ft-smec", None, 1_000_000, 3).unwrap();
        assert_eq!(a.parameters.samples, Some(MAX_DEMO_SAMPLES));
        assert_eq!(a.counts.failures, 0);
        let b = sample_campaign("hypercube", 4, 0, "cond-ft-smec", None, 1_000_000, 3).unwrap();
        assert_eq!(a.to_json_without_timing(), b.to_json_without_timing());
    }
}
