use cyclink::fixtures;
use cyclink::invariants::{bracket, jones, jones_via_f};
use cyclink::{BracketPoly, QuarterLaurent, VirtualDiagram};

// Frozen from scripts/trefoil_bracket_oracle.py.
fn right_trefoil_bracket() -> BracketPoly {
    BracketPoly::from_terms([(3, 0, 1, 1), (2, 1, 0, 3), (1, 2, 1, 3), (0, 3, 2, 1)])
}

fn left_trefoil_bracket() -> BracketPoly {
    BracketPoly::from_terms([(3, 0, 2, 1), (2, 1, 1, 3), (1, 2, 0, 3), (0, 3, 1, 1)])
}

fn left_trefoil_jones() -> QuarterLaurent {
    QuarterLaurent::from_terms([(-16, -1), (-12, 1), (-4, 1)])
}

#[test]
fn trefoil_brackets_match_oracle() {
    assert_eq!(bracket(&fixtures::trefoil_right()), right_trefoil_bracket());
    assert_eq!(bracket(&fixtures::trefoil()), left_trefoil_bracket());
}

#[test]
fn trefoil_jones() {
    let left = jones(&fixtures::trefoil());
    assert_eq!(left, left_trefoil_jones());
    assert_eq!(left.to_string(), "-t^-4 + t^-3 + t^-1");
    assert_eq!(jones(&fixtures::trefoil_right()), left_trefoil_jones().mirror());
    assert_eq!(jones(&fixtures::trefoil_right()).to_string(), "t + t^3 - t^4");
}

#[test]
fn trefoil_jones_through_tait_graph() {
    assert_eq!(jones_via_f(&fixtures::trefoil()).unwrap(), left_trefoil_jones());
}

#[test]
fn unit_jones_trefoil_variants() {
    for c in 0..3 {
        let v = fixtures::trefoil().virtualize(c).unwrap();
        assert!(jones(&v).is_one(), "virtualized at {c}: {}", jones(&v));
        let s = fixtures::trefoil().switch_crossing(c).unwrap();
        assert!(jones(&s).is_one(), "switched at {c}: {}", jones(&s));
    }
    assert!(jones(&fixtures::virtualized_trefoil()).is_one());
}

#[test]
fn virtualized_trefoil_is_nontrivial_as_a_diagram() {
    let v = fixtures::virtualized_trefoil();
    assert_ne!(bracket(&v), bracket(&VirtualDiagram::unknot()));
    assert!(v.faces().genus() > 0 || !v.checkerboard_colorable() || v.crossing_count() == 3);
}

#[test]
fn hopf_link_jones() {
    let d = fixtures::hopf_link();
    // the default orientation runs the two components antiparallel
    assert_eq!(d.writhe(&d.orient()), -2);
    assert_eq!(jones(&d), QuarterLaurent::from_terms([(-10, -1), (-2, -1)]));
    let parallel = d.orient_with(&[false, true]);
    assert_eq!(d.writhe(&parallel), 2);
    assert_eq!(
        cyclink::invariants::jones_with(&d, &parallel),
        QuarterLaurent::from_terms([(2, -1), (10, -1)])
    );
}

#[test]
fn kinks_have_trivial_jones() {
    assert!(jones(&fixtures::kink_positive()).is_one());
    assert!(jones(&fixtures::kink_negative()).is_one());
    assert_eq!(fixtures::kink_positive().writhe(&fixtures::kink_positive().orient()), 1);
    assert_eq!(fixtures::kink_negative().writhe(&fixtures::kink_negative().orient()), -1);
}

#[test]
fn virtual_trefoil_invariants() {
    let d = fixtures::virtual_trefoil();
    let faces = d.faces();
    assert_eq!(faces.face_count(), 2);
    assert_eq!(faces.genus(), 1);
    assert!(!d.checkerboard_colorable());
    assert_eq!(d.component_count(), 1);
}
