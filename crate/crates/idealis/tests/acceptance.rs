#[path = "../../core/tests/common/mod.rs"]
mod common;
mod support;

use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use common::criteria;

type Check = (&'static str, fn());

const CHECKS: [Check; 10] = [
    ("conductor-two order has a certified cover; maximal order of Q(sqrt -3) does not", criteria::conductor_two_witness),
    ("no witness up to bound 24 for Z, Z[i], O(Q(sqrt -5)), F2[t], F3[t]", criteria::dedekind_rings_independent),
    ("factorizations recompose; valuation membership agrees", || {
        criteria::factorizations_recompose();
        criteria::valuation_membership();
    }),
    ("approximations meet every prescription", criteria::approximations),
    ("forms and ideals agree on class groups for -4, -8, -20", criteria::small_class_groups),
    ("spectrum levels are functorial, counted and compatible with the action", criteria::spectrum_coherence),
    ("trivial-stabilizer chain over Z with S = {2, 3}", criteria::integer_stabilizer_chain),
    ("pure-infiniteness witnesses over Z and F2[t]", || {
        criteria::integer_pi_witnesses();
        criteria::f2_pi_witnesses();
    }),
    ("K-decomposition of O(Q(sqrt -5))", || {
        criteria::sqrt_minus_five_summands();
        criteria::non_unit_scalings_move_p();
    }),
    ("reference reports are stable and match the golden files", support::golden_regression),
];

#[test]
fn acceptance_summary() {
    // written past the test harness capture so the summary always shows
    let mut out = std::io::stdout();
    writeln!(out).unwrap();
    let mut failed = Vec::new();
    for (k, (what, check)) in CHECKS.iter().enumerate() {
        let start = Instant::now();
        let ok = catch_unwind(AssertUnwindSafe(check)).is_ok();
        let verdict = if ok { "PASS" } else { "FAIL" };
        writeln!(out, "{verdict} {:>2} {what} ({:.1?})", k + 1, start.elapsed()).unwrap();
        if !ok {
            failed.push(k + 1);
        }
    }
    assert!(failed.is_empty(), "failing: {failed:?}");
}
