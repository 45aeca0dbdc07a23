mod common;

use idealis_core::krull::{approximate, primes_up_to};
use idealis_core::ring::Domain;
use idealis_core::Error;
use num_bigint::BigInt;
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::Rng;

use common::rng;

#[test]
fn approximations_meet_their_prescriptions() {
    common::criteria::approximations();
}

fn trial_valuation(p: i64, n: &BigInt) -> i64 {
    let (mut n, p) = (n.clone(), BigInt::from(p));
    let mut v = 0;
    while !n.is_zero() && (&n % &p).is_zero() {
        n /= &p;
        v += 1;
    }
    v
}

#[test]
fn integer_approximations_checked_by_trial_division() {
    let z = common::integers();
    let primes = primes_up_to(&z, 13).unwrap();
    let labels: Vec<i64> = vec![2, 3, 5, 7, 11, 13];
    let g = &mut rng(7);
    for _ in 0..200 {
        let picks: Vec<usize> = (0..6).collect::<Vec<_>>().choose_multiple(g, 3).copied().collect();
        let chosen: Vec<_> = picks.iter().map(|&k| (primes[k].clone(), g.gen_range(-3..=3i64))).collect();
        let x = approximate(&z, &chosen).unwrap().element;
        for (&k, (_, n)) in picks.iter().zip(&chosen) {
            let v = trial_valuation(labels[k], &x.num) - trial_valuation(labels[k], &x.den);
            assert_eq!(v, *n);
        }
        // the denominator only involves prescribed primes
        let mut den = x.den.clone();
        for &k in &picks {
            while (&den % labels[k]).is_zero() {
                den /= labels[k];
            }
        }
        assert_eq!(den, BigInt::from(1));
    }
}

#[test]
fn repeated_primes_are_rejected() {
    let z = common::integers();
    let p = primes_up_to(&z, 2).unwrap().remove(0);
    assert!(matches!(approximate(&z, &[(p.clone(), 1), (p, 2)]), Err(Error::DuplicatePrime(_))));
    assert!(approximate(&common::z_i_sqrt3(), &[]).is_err());
    let x = approximate(&z, &[]).unwrap().element;
    assert!(z.is_integral(&x) && !z.is_zero(&x));
}
