mod common;

use idealis_core::krull::{class_group, Form};

use common::criteria;
use num_bigint::BigInt;

#[test]
fn forms_and_ideals_agree_for_small_discriminants() {
    criteria::small_class_groups();
}

#[test]
fn larger_class_groups_match_the_search() {
    for d in [-3, -6, -7, -10, -14, -15, -21, -23, -26, -30, -47, -65, -71, -105] {
        criteria::cross_validate(d);
    }
}

#[test]
fn composition_respects_the_group_law() {
    let disc = BigInt::from(-71);
    let id = Form::identity(&disc);
    let forms = idealis_core::krull::forms::reduced_forms(&disc);
    assert_eq!(forms.len(), 7);
    for f in &forms {
        assert_eq!(f.compose(&id).reduce(), *f);
        assert_eq!(f.compose(&f.inverse()).reduce(), id);
        assert_eq!(f.pow(7), id);
    }
}

#[test]
fn class_numbers_of_the_reference_rings() {
    for_dedekind_rings!(|r, name| {
        let expected = if name == "O(Q(sqrt -5))" { 2 } else { 1 };
        assert_eq!(class_group(r, 64).unwrap().order, expected, "{name}");
    });
}

#[test]
fn non_maximal_orders_are_refused() {
    assert!(class_group(&common::z_i_sqrt3(), 64).is_err());
    assert!(class_group(&common::sqrt_minus_five(), 1).is_err());
}
