use alloc::string::{String, ToString};
use alloc::vec::Vec;
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{nth_integer, Euclidean, Index, Justified, RingDescriptor, RingPredicates, UnitGroupInfo, UnitTag};
use crate::arith;

/// The ring of rational integers.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Integers;

impl Euclidean for Integers {
    type E = BigInt;

    fn descriptor(&self) -> RingDescriptor {
        RingDescriptor::Integers
    }

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }

    fn one(&self) -> BigInt {
        BigInt::one()
    }

    fn from_i64(&self, n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }

    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }

    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }

    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }

    fn div_rem(&self, a: &BigInt, b: &BigInt) -> (BigInt, BigInt) {
        a.div_mod_floor(b)
    }

    fn split_unit(&self, a: &BigInt) -> (BigInt, BigInt) {
        if a.is_negative() {
            (-a, -BigInt::one())
        } else {
            (a.clone(), BigInt::one())
        }
    }

    fn unit_inverse(&self, u: &BigInt) -> BigInt {
        u.clone()
    }

    fn is_unit(&self, a: &BigInt) -> bool {
        a.magnitude().is_one()
    }

    fn quotient_size(&self, a: &BigInt) -> Index {
        Index::Finite(a.magnitude().clone())
    }

    fn weight(&self, a: &BigInt) -> Option<BigUint> {
        Some(a.magnitude().clone())
    }

    fn generators_up_to(&self, bound: u64) -> Vec<BigInt> {
        (1..=bound).map(BigInt::from).collect()
    }

    fn elements(&self, count: usize) -> Vec<BigInt> {
        (0..count as u64).map(|n| BigInt::from(nth_integer(n))).collect()
    }

    fn residues(&self, m: &BigInt) -> Option<Vec<BigInt>> {
        let m = m.abs();
        let mut out = Vec::new();
        let mut r = BigInt::zero();
        while r < m {
            out.push(r.clone());
            r += 1;
        }
        Some(out)
    }

    fn unit_group(&self) -> UnitGroupInfo<BigInt> {
        UnitGroupInfo { tag: UnitTag::Order2, generators: alloc::vec![BigInt::from(-1)], order: Some(2) }
    }

    fn predicates(&self) -> RingPredicates {
        RingPredicates {
            is_field: Justified::new(false, "2 is not invertible in Z"),
            contains_infinite_field: Justified::new(false, "the only subring that is a field would have characteristic 0 and contain 1/2"),
            jacobson_radical_zero: Justified::new(true, "infinitely many maximal ideals pZ; a nonzero n lies outside pZ for p not dividing n"),
            is_integrally_closed: Justified::new(true, "Z is a UFD"),
            is_noetherian: Justified::new(true, "PID"),
            is_dedekind: Justified::new(true, "PID that is not a field"),
        }
    }

    fn show(&self, a: &BigInt) -> String {
        a.to_string()
    }

    fn factor(&self, a: &BigInt) -> Vec<(BigInt, u32)> {
        if a.magnitude().is_one() {
            return Vec::new();
        }
        arith::factor_int(a)
    }

    fn irreducibles_up_to(&self, bound: u64) -> Vec<BigInt> {
        arith::primes_up_to(bound).into_iter().map(BigInt::from).collect()
    }

    fn is_irreducible(&self, a: &BigInt) -> bool {
        arith::is_prime(&a.abs())
    }

    fn divides(&self, a: &BigInt, b: &BigInt) -> bool {
        b.is_multiple_of(a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Domain, Frac};

    fn z(n: i64) -> Frac<BigInt> {
        Integers.from_int(n)
    }

    #[test]
    fn arithmetic_examples() {
        let r = Integers;
        assert_eq!(Domain::add(&r, &z(2), &z(3)), z(5));
        assert!(Domain::is_unit(&r, &z(-1)));
        assert!(!Domain::is_unit(&r, &z(2)));
        let half = r.div(&z(1), &z(2)).unwrap();
        assert_eq!(Domain::mul(&r, &half, &z(4)), z(2));
        assert_eq!(r.div(&z(1), &z(0)), Err(crate::Error::DivisionByZero));
    }

    #[test]
    fn ideal_examples() {
        let r = Integers;
        let i = r.ideal(&[z(4), z(6)]).unwrap();
        assert_eq!(i, r.principal(&z(2)).unwrap());
        assert_eq!(r.intersect(&r.principal(&z(4)).unwrap(), &r.principal(&z(6)).unwrap()), r.principal(&z(12)).unwrap());
        let two = r.principal(&z(2)).unwrap();
        let three = r.principal(&z(3)).unwrap();
        assert_eq!(r.ideal_mul(&two, &three), r.principal(&z(6)).unwrap());
        let half = r.div(&z(1), &z(2)).unwrap();
        assert_eq!(r.colon(&r.unit_ideal(), &two), r.principal(&half).unwrap());
        assert_eq!(r.index(&r.unit_ideal(), &r.principal(&z(6)).unwrap()).unwrap(), Index::Finite(BigUint::from(6u32)));
        assert_eq!(r.coset_reps(&r.unit_ideal(), &three).unwrap(), alloc::vec![z(0), z(1), z(2)]);
        assert_eq!(r.coset_reps(&three, &three).unwrap(), alloc::vec![z(0)]);
        assert!(r.ideal(&[z(0), z(0)]).is_err());
    }
}
