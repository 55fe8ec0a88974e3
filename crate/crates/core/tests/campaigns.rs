use hlmenger::menger::{
    adversarial_fault_sets, certify, check_component_lemma, is_smec, run_campaign,
    tightness_conditional, tightness_unconditional, FaultCampaign,
};
use hlmenger::report::Witness;
use hlmenger::verify::{run_check, CheckKind, CheckRequest, Subject};
use hlmenger::{gen_family, FamilyKind, LineGraph};

fn lq(kind: FamilyKind, n: usize) -> LineGraph {
    LineGraph::of_network(&gen_family(kind, n).unwrap())
}

#[test]
fn component_floors_hold_sampled_with_adversarial() {
    for (kind, n, m, floor, samples) in [
        (FamilyKind::Hypercube, 4, 9, 31, 20_000),
        (FamilyKind::Ltq, 4, 9, 31, 20_000),
        (FamilyKind::Random { seed: 8 }, 4, 9, 31, 20_000),
        (FamilyKind::Crossed, 5, 17, 78, 5_000),
        (FamilyKind::Mobius1, 5, 17, 78, 5_000),
    ] {
        let lg = lq(kind, n);
        let c = FaultCampaign::sampled(m, samples, 77).with_adversarial(true);
        let out = check_component_lemma(&lg, m, floor, &c).unwrap();
        assert_eq!(out.counts.failures, 0, "{kind} n={n}: {:?}", out.witness);
        assert_eq!(out.counts.visited, samples as u64);
        assert!(out.counts.adversarial_visited > 0);
    }
}

#[test]
fn component_floor_is_tight_one_step_out() {
    // Isolating one vertex of L(Q3) takes 4 faults; 11 = 12 - 1 survives, 12 does not.
    let lg = lq(FamilyKind::Hypercube, 3);
    let c = FaultCampaign::exhaustive(4);
    assert_eq!(check_component_lemma(&lg, 4, 11, &c).unwrap().counts.failures, 0);
    let out = check_component_lemma(&lg, 4, 12, &c).unwrap();
    assert!(out.counts.failures > 0);
    assert!(matches!(out.witness, Some(Witness::Component { largest_component: 11, .. })));
    assert!(check_component_lemma(&lg, 0, 13, &c).is_err());
}

#[test]
fn conditional_filter_is_exact() {
    let lg = lq(FamilyKind::Crossed, 4);
    let m = 6;
    for s in adversarial_fault_sets(&lg, m) {
        let rest = lg.graph().remove_edges(&s).unwrap();
        let single = FaultCampaign::exhaustive(0).conditional(true);
        // A campaign over L - S with no further faults visits iff δ(L - S) >= 2.
        let out = run_campaign(&LineGraph::bare(rest.clone()), &single).unwrap();
        assert_eq!(out.counts.visited == 1, rest.min_degree() >= 2);
        assert_eq!(out.counts.skipped_conditional == 1, rest.min_degree() <= 1);
    }
}

#[test]
fn tightness_witnesses_break_smec_for_every_target() {
    for kind in FamilyKind::NAMED {
        let lg = lq(kind, 4);
        for w in [tightness_unconditional(&lg).unwrap(), tightness_conditional(&lg).unwrap()] {
            let rest = lg.graph().remove_edges(&w.fault_set).unwrap();
            assert!(!is_smec(&rest).holds, "{kind} {:?}", w.kind);
            let c = certify(&lg, &w, w.v).unwrap();
            assert!(c.violates_smec() && c.cut_valid);
        }
    }
}

#[test]
fn all_targets_flag_reports_per_target_results() {
    let s = Subject::family(FamilyKind::Crossed, 4).unwrap();
    let mut req = CheckRequest::new(CheckKind::TightCond);
    req.all_targets = true;
    let r = run_check(&s, &req).unwrap();
    let targets: Vec<_> = r.checks.iter().filter(|c| c.name.starts_with("target_")).collect();
    assert!(!targets.is_empty());
    assert_eq!(r.counts.visited as usize, targets.len() + 1);
    assert_eq!(r.parameters.flags, vec!["all-targets".to_string()]);
}

#[test]
fn validate_and_prop31_pass_on_the_corpus() {
    for kind in FamilyKind::NAMED.into_iter().chain([FamilyKind::Random { seed: 7 }]) {
        for n in 2..=5 {
            let s = Subject::family(kind, n).unwrap();
            for check in [CheckKind::Validate, CheckKind::Prop31] {
                let r = run_check(&s, &CheckRequest::new(check)).unwrap();
                assert!(r.passed(), "{kind} n={n} {check}: {:?}", r.checks);
                assert!(r.witness.is_none());
            }
        }
    }
}

#[test]
fn report_round_trips() {
    let s = Subject::family(FamilyKind::Mobius0, 4).unwrap();
    let r = run_check(&s, &CheckRequest::new(CheckKind::TightUncond)).unwrap();
    let back = hlmenger::report::VerificationReport::from_json(&r.to_json()).unwrap();
    assert_eq!(back, r);
    assert_eq!(r.counts.failures == 0, r.witness.is_none());
}
