mod common;

use inose_core::elliptic::verify_isogeny;
use inose_core::inose::compute_section;
use inose_core::Error;

#[test]
fn two_isogeny_gives_height_four() {
    let (e1, e2, phi) = common::two_isogeny(1, -1);
    assert!(verify_isogeny(&e1, &e2, &phi).passed());
    let c = compute_section(&e1, &e2, &phi).unwrap();
    assert_eq!(c.section.height.to_string(), "4");
    assert_eq!(c.section.intersection, 0);
}

#[test]
fn other_two_isogenies_give_height_four() {
    for (a, b) in [(2, -3), (-3, 5), (5, 1)] {
        let (e1, e2, phi) = common::two_isogeny(a, b);
        assert!(verify_isogeny(&e1, &e2, &phi).passed(), "{a} {b}");
        match compute_section(&e1, &e2, &phi) {
            Ok(c) => assert_eq!(c.section.height.to_string(), "4", "{a} {b}"),
            Err(e) => panic!("({a}, {b}): {}", e.name()),
        }
    }
}

#[test]
fn isogenous_curves_with_equal_j_are_rejected() {
    // y^2 = x^3 + x has CM by Z[i]; its 2-isogenous curve has j = 1728 too
    let (e1, e2, phi) = common::two_isogeny(0, 1);
    assert!(verify_isogeny(&e1, &e2, &phi).passed());
    assert!(matches!(
        compute_section(&e1, &e2, &phi),
        Err(Error::EqualJInvariants(_))
    ));
}
