//! Derived ideal operations and the bounded constructible family.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;
use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::ring::Domain;

/// `(R : (R : I))`.
pub fn divisorial_closure<R: Domain>(ring: &R, i: &R::Ideal) -> R::Ideal {
    let unit = ring.unit_ideal();
    ring.colon(&unit, &ring.colon(&unit, i))
}

pub fn is_divisorial<R: Domain>(ring: &R, i: &R::Ideal) -> bool {
    divisorial_closure(ring, i) == *i
}

/// `c⁻¹I = { r in R : c r in I }` for nonzero integral `c` and integral `I`.
pub fn inverse_scale<R: Domain>(ring: &R, c: &R::Elem, i: &R::Ideal) -> Result<R::Ideal> {
    if ring.is_zero(c) {
        return Err(Error::ZeroElement);
    }
    if !ring.is_integral(c) {
        return Err(Error::NotIntegral(ring.fmt_elem(c)));
    }
    if !ring.is_integral_ideal(i) {
        return Err(Error::NotIntegral(ring.fmt_ideal(i)));
    }
    let cinv = ring.inv(c).expect("nonzero");
    Ok(ring.intersect(&ring.scale(&cinv, i)?, &ring.unit_ideal()))
}

/// Sort key placing ideals by enumeration weight, unmeasured ones last.
pub fn weight_key<R: Domain>(ring: &R, i: &R::Ideal) -> (Option<BigUint>, R::Ideal) {
    (ring.ideal_weight(i), i.clone())
}

fn within<R: Domain>(ring: &R, i: &R::Ideal, bound: u64) -> bool {
    ring.ideal_weight(i).is_some_and(|w| w <= BigUint::from(bound))
}

/// Bounded saturation of principal integral ideals under intersections and
/// inverse scalings.
#[derive(Debug, Clone)]
pub struct ConstructibleFamily<I> {
    /// Ordered by enumeration weight, then canonical form.
    pub ideals: Vec<I>,
    pub bound: u64,
    /// Saturation rounds until no new ideal appeared.
    pub rounds: usize,
    pub generator_count: usize,
    pub note: &'static str,
}

pub const SATURATION_NOTE: &str =
    "bounded saturation: principal ideals of weight <= bound closed under pairwise intersection and c^-1 for c of weight <= bound; the nesting depth needed for exhaustion is not known a priori";

pub fn enumerate_constructible<R: Domain>(ring: &R, bound: u64) -> ConstructibleFamily<R::Ideal> {
    let gens = ring.principal_generators(bound);
    let mut family: BTreeSet<R::Ideal> = BTreeSet::new();
    family.insert(ring.unit_ideal());
    for g in &gens {
        let i = ring.principal(g).expect("nonzero generator");
        if within(ring, &i, bound) {
            family.insert(i);
        }
    }
    let mut frontier: Vec<R::Ideal> = family.iter().cloned().collect();
    let mut rounds = 0;
    while !frontier.is_empty() {
        rounds += 1;
        let current: Vec<R::Ideal> = family.iter().cloned().collect();
        let mut fresh = BTreeSet::new();
        for i in &frontier {
            for j in &current {
                let k = ring.intersect(i, j);
                if within(ring, &k, bound) && !family.contains(&k) {
                    fresh.insert(k);
                }
            }
            for c in &gens {
                let k = inverse_scale(ring, c, i).expect("integral inputs");
                if within(ring, &k, bound) && !family.contains(&k) {
                    fresh.insert(k);
                }
            }
        }
        frontier = fresh.iter().cloned().collect();
        family.extend(fresh);
    }
    let mut ideals: Vec<R::Ideal> = family.into_iter().collect();
    ideals.sort_by_cached_key(|i| weight_key(ring, i));
    ConstructibleFamily { ideals, bound, rounds, generator_count: gens.len(), note: SATURATION_NOTE }
}

/// Checks that `I` is closed under multiplication by the ring generators.
pub fn is_module<R: Domain>(ring: &R, i: &R::Ideal) -> bool {
    let gens = ring.elements(4);
    ring.ideal_basis(i)
        .iter()
        .all(|b| gens.iter().all(|g| ring.contains(i, &ring.mul(g, b))))
}

/// Message for an ideal that fails a containment precondition.
pub(crate) fn not_inside<R: Domain>(ring: &R, i: &R::Ideal, j: &R::Ideal) -> Error {
    Error::NotContained(format!("{} is not inside {}", ring.fmt_ideal(i), ring.fmt_ideal(j)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Integers, PolyRing, PrimeField, QuadraticOrder};
    use alloc::string::String;
    use alloc::vec;

    #[test]
    fn integers_family() {
        let z = Integers;
        let fam = enumerate_constructible(&z, 4);
        let shown: Vec<String> = fam.ideals.iter().map(|i| z.fmt_ideal(i)).collect();
        assert_eq!(shown, ["(1)", "(2)", "(3)", "(4)"]);
    }

    #[test]
    fn inverse_scale_examples() {
        let z = Integers;
        let i12 = z.principal(&z.from_int(12)).unwrap();
        assert_eq!(inverse_scale(&z, &z.from_int(2), &i12).unwrap(), z.principal(&z.from_int(6)).unwrap());
        let i6 = z.principal(&z.from_int(6)).unwrap();
        let got = inverse_scale(&z, &z.from_int(4), &i6).unwrap();
        let brute: Vec<i64> = (0..12).filter(|r| (4 * r) % 6 == 0).collect();
        assert_eq!(brute, vec![0, 3, 6, 9]);
        assert_eq!(got, z.principal(&z.from_int(3)).unwrap());
        assert!(inverse_scale(&z, &z.from_int(0), &i6).is_err());
    }

    #[test]
    fn order_family_contains_the_non_principal_ideal() {
        let r = QuadraticOrder::new(-3, 2).unwrap();
        let two_r = r.principal(&r.from_int(2)).unwrap();
        let m = inverse_scale(&r, &r.theta(), &two_r).unwrap();
        assert_eq!(m, r.ideal(&[r.from_int(2), r.theta()]).unwrap());
        let fam = enumerate_constructible(&r, 4);
        assert!(fam.ideals.contains(&m));
        assert!(fam.ideals.iter().all(|i| is_module(&r, i)));
        assert_eq!(divisorial_closure(&r, &m), m);
    }

    #[test]
    fn f2_family_is_degree_at_most_two() {
        let r = PolyRing::new(PrimeField::new(2).unwrap());
        let fam = enumerate_constructible(&r, 4);
        assert_eq!(fam.ideals.len(), 1 + 2 + 4);
    }
}
