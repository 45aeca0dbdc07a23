mod common;

use std::collections::BTreeSet;

use idealis_core::krull::Dedekind;
use idealis_core::spectrum::{closure_membership, spec_level, LevelFunction};
use rand::Rng;

use common::{criteria, rng};

#[test]
fn spectrum_is_coherent_over_integers_and_f2t() {
    criteria::spectrum_coherence();
}

#[test]
fn levels_with_infinite_residue_rings_are_refused() {
    let q = common::q_t();
    let p = q.height_one_primes(1).unwrap().remove(0);
    assert!(spec_level(&q, &LevelFunction::new(vec![(p, 1)]).unwrap()).is_err());
}

fn subsets(w: &[u32]) -> Vec<BTreeSet<u32>> {
    (0..1u32 << w.len()).map(|mask| w.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &p)| p).collect()).collect()
}

/// Closure of `family` inside the window: every basic open `{T : T ∩ F = ∅}` around `s` meets the family.
fn in_closure_by_definition(window: &[u32], s: &BTreeSet<u32>, family: &[BTreeSet<u32>]) -> bool {
    let outside: Vec<u32> = window.iter().copied().filter(|p| !s.contains(p)).collect();
    subsets(&outside).iter().all(|f| family.iter().any(|t| t.is_disjoint(f)))
}

fn closure(window: &[u32], family: &[BTreeSet<u32>]) -> Vec<BTreeSet<u32>> {
    let w: BTreeSet<u32> = window.iter().copied().collect();
    subsets(window).into_iter().filter(|s| closure_membership(&w, s, family).unwrap()).collect()
}

#[test]
fn window_closure_matches_the_topology() {
    let window = [2, 3, 5];
    let all = subsets(&window);
    let w: BTreeSet<u32> = window.into();
    let families: Vec<Vec<BTreeSet<u32>>> = (0..1u32 << all.len())
        .map(|mask| all.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, s)| s.clone()).collect())
        .collect();
    for fam in &families {
        for s in &all {
            assert_eq!(closure_membership(&w, s, fam).unwrap(), in_closure_by_definition(&window, s, fam));
        }
        let cl = closure(&window, fam);
        assert!(fam.iter().all(|s| cl.contains(s)));
        assert_eq!(closure(&window, &cl), cl);
    }
    assert!(closure(&window, &[]).is_empty());
    let g = &mut rng(11);
    for _ in 0..2000 {
        let (a, b) = (&families[g.gen_range(0..families.len())], &families[g.gen_range(0..families.len())]);
        let union: Vec<_> = a.iter().chain(b).cloned().collect();
        let mut expected: Vec<_> = closure(&window, a).into_iter().chain(closure(&window, b)).collect();
        expected.sort();
        expected.dedup();
        let mut got = closure(&window, &union);
        got.sort();
        assert_eq!(got, expected);
        if a.iter().all(|s| b.contains(s)) {
            assert!(closure(&window, a).iter().all(|s| closure(&window, b).contains(s)));
        }
    }
}

#[test]
fn stabilizer_chain_for_eight_integer_elements() {
    criteria::integer_stabilizer_chain();
}
