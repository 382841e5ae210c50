mod common;

use std::collections::HashSet;

use common::*;
use quadbook::planar::{connectivity_class, ConnectivityClass};
use quadbook::subham::*;

#[test]
fn rosette_is_triconnected_with_pentagons_at_the_dummy() {
    let (gd, gx, _) = rosette();
    assert_eq!(connectivity_class(&gd), ConnectivityClass::ThreeOrMore);
    assert_eq!(connectivity_class(&gx), ConnectivityClass::ThreeOrMore);
    assert!(gd.max_degree() <= 4 && gx.max_degree() <= 4);
}

#[test]
fn every_configuration_and_requested_pair() {
    let (_, gx, site) = rosette();
    let trials = rosette_trials(4);
    let cases: HashSet<RerouteCase> = trials.iter().map(|t| t.case).collect();
    assert_eq!(cases.len(), 5, "covered {cases:?}");
    for t in &trials {
        assert!(t.sound(&gx, site.corners), "{} requested {:?}", t.case, t.requested);
        if t.free_choice {
            assert_eq!(t.result.achieved, t.requested, "{}", t.case);
            assert!(t.result.substituted.is_none());
        }
    }
}

#[test]
fn free_choice_is_exercised_in_every_case_but_the_same_face_one() {
    let trials = rosette_trials(4);
    for case in [
        RerouteCase::EdgeEdge,
        RerouteCase::EdgeFaceNear,
        RerouteCase::EdgeFaceFar,
        RerouteCase::FaceFaceDistinct,
    ] {
        let n = trials.iter().filter(|t| t.case == case && t.free_choice).count();
        assert!(n >= 3, "{case}: {n} free-choice trials");
    }
    assert!(trials.iter().filter(|t| t.case == RerouteCase::FaceFaceSame).all(|t| !t.free_choice));
}

#[test]
fn same_face_keeps_only_the_far_corner() {
    let trials = rosette_trials(4);
    let same: Vec<&Trial> = trials.iter().filter(|t| t.case == RerouteCase::FaceFaceSame).collect();
    assert!(!same.is_empty());
    for t in same {
        let far = t.far_corner.unwrap();
        assert_eq!(t.result.achieved.apex, far);
        if t.requested.apex == far {
            assert!(t.result.substituted.is_none());
        } else {
            assert_eq!(t.result.substituted, Some(t.requested));
        }
    }
}

#[test]
fn edge_edge_sequences() {
    let trials = rosette_trials(4);
    let mut seen = 0;
    for t in trials.iter().filter(|t| t.case == RerouteCase::EdgeEdge) {
        let (a, b) = (t.pred_corner.unwrap(), t.succ_corner.unwrap());
        let g = [v(13), v(14), v(15)].into_iter().find(|&c| c != a && c != b).unwrap();
        let o = &t.result.cycle.order;
        let i = o.iter().position(|&x| x == a || x == b || x == g).unwrap();
        let n = o.len();
        let seq: Vec<_> = (0..3).map(|k| o[(i + k) % n]).collect();
        let extra = t.result.cycle.augmentation.len() as isize - t.input_aug as isize;
        if t.requested.apex == g {
            // A, Γ, B with no extra crossing
            assert_eq!(seq, vec![a, g, b]);
            assert_eq!(extra, 0);
            seen += 1;
        } else if t.requested.apex == a {
            // Γ, A, B with one extra crossing
            assert_eq!(seq, vec![g, a, b]);
            assert_eq!(extra, 1);
            seen += 1;
        }
    }
    assert!(seen > 0);
}
