mod common;

use idealis_core::ring::{Domain, Integers};
use idealis_core::witness::pi_hypothesis_witness;
use idealis_core::Error;

use common::criteria;

#[test]
fn integer_witnesses_pass_an_independent_check() {
    criteria::integer_pi_witnesses();
}

#[test]
fn f2_polynomial_witnesses_pass_an_independent_check() {
    criteria::f2_pi_witnesses();
}

#[test]
fn the_hypotheses_are_required() {
    let gi = common::gaussian();
    assert!(pi_hypothesis_witness(&gi, &gi.unit_ideal(), &[], 64).is_ok());
    let z = Integers;
    let tiny = pi_hypothesis_witness(&z, &z.principal(&z.from_int(7)).unwrap(), &[], 1);
    assert!(matches!(tiny, Err(Error::SearchExhausted { .. })));
    let zero_a = ((z.zero(), z.zero()), (z.one(), z.one()));
    assert!(matches!(pi_hypothesis_witness(&z, &z.unit_ideal(), &[zero_a], 64), Err(Error::ZeroElement)));
}
