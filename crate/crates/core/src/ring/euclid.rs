//! Euclidean domains (`Z`, `k[t]`) and their fraction fields. Every such
//! ring is a PID, so a fractional ideal is a single normalized generator.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use num_bigint::BigUint;

use super::{Domain, Index, RingDescriptor, RingPredicates, UnitGroupInfo};
use crate::error::{Error, Result};

/// A Euclidean domain with canonical associates.
pub trait Euclidean: Clone + fmt::Debug + Send + Sync {
    type E: Clone + Eq + Ord + fmt::Debug + Send + Sync;

    fn descriptor(&self) -> RingDescriptor;
    fn zero(&self) -> Self::E;
    fn one(&self) -> Self::E;
    fn from_i64(&self, n: i64) -> Self::E;
    fn is_zero(&self, a: &Self::E) -> bool;
    fn add(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn neg(&self, a: &Self::E) -> Self::E;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
    /// Division with canonical remainder; `b` nonzero.
    fn div_rem(&self, a: &Self::E, b: &Self::E) -> (Self::E, Self::E);
    /// `(normal, unit)` with `a = unit * normal` and `normal` the canonical associate.
    fn split_unit(&self, a: &Self::E) -> (Self::E, Self::E);
    fn unit_inverse(&self, u: &Self::E) -> Self::E;
    fn is_unit(&self, a: &Self::E) -> bool;
    /// `|R / aR|` for nonzero `a`.
    fn quotient_size(&self, a: &Self::E) -> Index;
    /// Enumeration weight of a normalized nonzero element.
    fn weight(&self, a: &Self::E) -> Option<BigUint>;
    /// Normalized nonzero elements of weight at most `bound`, in enumeration order.
    fn generators_up_to(&self, bound: u64) -> Vec<Self::E>;
    fn elements(&self, count: usize) -> Vec<Self::E>;
    /// Complete canonical residue system modulo nonzero `m`, when finite.
    fn residues(&self, m: &Self::E) -> Option<Vec<Self::E>>;
    fn unit_group(&self) -> UnitGroupInfo<Self::E>;
    fn predicates(&self) -> RingPredicates;
    fn show(&self, a: &Self::E) -> String;

    /// Factorization of a nonzero element into normalized irreducibles.
    fn factor(&self, a: &Self::E) -> Vec<(Self::E, u32)>;
    /// Normalized irreducibles with norm at most `bound` (degree for infinite residue fields).
    fn irreducibles_up_to(&self, bound: u64) -> Vec<Self::E>;
    fn is_irreducible(&self, a: &Self::E) -> bool;
    fn prime_label(&self, p: &Self::E) -> String {
        self.show(p)
    }
    /// Degree of the residue field of `pR` over the prime field (or over `Q`).
    fn residue_degree(&self, _p: &Self::E) -> u32 {
        1
    }

    fn sub(&self, a: &Self::E, b: &Self::E) -> Self::E {
        self.add(a, &self.neg(b))
    }

    fn normalize(&self, a: &Self::E) -> Self::E {
        if self.is_zero(a) {
            return a.clone();
        }
        self.split_unit(a).0
    }

    fn rem(&self, a: &Self::E, b: &Self::E) -> Self::E {
        self.div_rem(a, b).1
    }

    fn divides(&self, a: &Self::E, b: &Self::E) -> bool {
        self.is_zero(&self.rem(b, a))
    }

    fn gcd(&self, a: &Self::E, b: &Self::E) -> Self::E {
        let (mut x, mut y) = (a.clone(), b.clone());
        while !self.is_zero(&y) {
            let r = self.rem(&x, &y);
            x = y;
            y = r;
        }
        self.normalize(&x)
    }

    fn lcm(&self, a: &Self::E, b: &Self::E) -> Self::E {
        if self.is_zero(a) || self.is_zero(b) {
            return self.zero();
        }
        let g = self.gcd(a, b);
        let (q, _) = self.div_rem(a, &g);
        self.normalize(&self.mul(&q, b))
    }

    /// Exponent of the irreducible `p` in nonzero `a`.
    fn multiplicity(&self, p: &Self::E, a: &Self::E) -> u32 {
        let mut a = a.clone();
        let mut v = 0;
        loop {
            let (q, r) = self.div_rem(&a, p);
            if !self.is_zero(&r) {
                return v;
            }
            a = q;
            v += 1;
        }
    }

    fn pow(&self, a: &Self::E, e: u32) -> Self::E {
        let mut r = self.one();
        for _ in 0..e {
            r = self.mul(&r, a);
        }
        r
    }
}

/// Element `num / den` of the fraction field, reduced, with normalized denominator.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Frac<E> {
    pub num: E,
    pub den: E,
}

/// Nonzero fractional ideal `g * R` with normalized generator.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PrincipalIdeal<E>(pub Frac<E>);

impl<E> PrincipalIdeal<E> {
    pub fn generator(&self) -> &Frac<E> {
        &self.0
    }
}

pub(crate) fn make_frac<R: Euclidean>(r: &R, num: R::E, den: R::E) -> Frac<R::E> {
    assert!(!r.is_zero(&den), "zero denominator");
    if r.is_zero(&num) {
        return Frac { num, den: r.one() };
    }
    let g = r.gcd(&num, &den);
    let num = r.div_rem(&num, &g).0;
    let den = r.div_rem(&den, &g).0;
    let (den_n, u) = r.split_unit(&den);
    let num = r.mul(&num, &r.unit_inverse(&u));
    Frac { num, den: den_n }
}

/// `a` as an element of the quotient field.
pub fn integral<R: Euclidean>(r: &R, a: R::E) -> Frac<R::E> {
    Frac { num: a, den: r.one() }
}

fn normalized_generator<R: Euclidean>(r: &R, x: &Frac<R::E>) -> Frac<R::E> {
    Frac { num: r.normalize(&x.num), den: x.den.clone() }
}

impl<R: Euclidean> Domain for R {
    type Elem = Frac<R::E>;
    type Ideal = PrincipalIdeal<R::E>;

    fn descriptor(&self) -> RingDescriptor {
        Euclidean::descriptor(self)
    }

    fn zero(&self) -> Self::Elem {
        integral(self, Euclidean::zero(self))
    }

    fn one(&self) -> Self::Elem {
        integral(self, Euclidean::one(self))
    }

    fn from_int(&self, n: i64) -> Self::Elem {
        integral(self, self.from_i64(n))
    }

    fn add(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        let num = Euclidean::add(
            self,
            &Euclidean::mul(self, &x.num, &y.den),
            &Euclidean::mul(self, &y.num, &x.den),
        );
        make_frac(self, num, Euclidean::mul(self, &x.den, &y.den))
    }

    fn neg(&self, x: &Self::Elem) -> Self::Elem {
        Frac { num: Euclidean::neg(self, &x.num), den: x.den.clone() }
    }

    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        make_frac(
            self,
            Euclidean::mul(self, &x.num, &y.num),
            Euclidean::mul(self, &x.den, &y.den),
        )
    }

    fn inv(&self, x: &Self::Elem) -> Option<Self::Elem> {
        if Euclidean::is_zero(self, &x.num) {
            return None;
        }
        Some(make_frac(self, x.den.clone(), x.num.clone()))
    }

    fn is_zero(&self, x: &Self::Elem) -> bool {
        Euclidean::is_zero(self, &x.num)
    }

    fn is_integral(&self, x: &Self::Elem) -> bool {
        x.den == Euclidean::one(self)
    }

    fn is_unit(&self, x: &Self::Elem) -> bool {
        self.is_integral(x) && Euclidean::is_unit(self, &x.num)
    }

    fn unit_group(&self) -> Result<UnitGroupInfo<Self::Elem>> {
        let u = Euclidean::unit_group(self);
        Ok(UnitGroupInfo {
            tag: u.tag,
            generators: u.generators.into_iter().map(|g| integral(self, g)).collect(),
            order: u.order,
        })
    }

    fn predicates(&self) -> RingPredicates {
        Euclidean::predicates(self)
    }

    fn elements(&self, count: usize) -> Vec<Self::Elem> {
        Euclidean::elements(self, count).into_iter().map(|a| integral(self, a)).collect()
    }

    fn fmt_elem(&self, x: &Self::Elem) -> String {
        if self.is_integral(x) {
            self.show(&x.num)
        } else {
            format!("({})/({})", self.show(&x.num), self.show(&x.den))
        }
    }

    fn ideal(&self, gens: &[Self::Elem]) -> Result<Self::Ideal> {
        let nonzero: Vec<&Self::Elem> = gens.iter().filter(|g| !Domain::is_zero(self, *g)).collect();
        if nonzero.is_empty() {
            return Err(Error::ZeroIdeal);
        }
        let mut den = Euclidean::one(self);
        for g in &nonzero {
            den = self.lcm(&den, &g.den);
        }
        let mut acc = Euclidean::zero(self);
        for g in &nonzero {
            let scaled = Euclidean::mul(self, &g.num, &self.div_rem(&den, &g.den).0);
            acc = self.gcd(&acc, &scaled);
        }
        Ok(PrincipalIdeal(normalized_generator(self, &make_frac(self, acc, den))))
    }

    fn ideal_basis(&self, i: &Self::Ideal) -> Vec<Self::Elem> {
        alloc::vec![i.0.clone()]
    }

    fn ideal_mul(&self, i: &Self::Ideal, j: &Self::Ideal) -> Self::Ideal {
        PrincipalIdeal(normalized_generator(self, &Domain::mul(self, &i.0, &j.0)))
    }

    fn ideal_sum(&self, i: &Self::Ideal, j: &Self::Ideal) -> Self::Ideal {
        self.ideal(&[i.0.clone(), j.0.clone()]).expect("nonzero")
    }

    fn intersect(&self, i: &Self::Ideal, j: &Self::Ideal) -> Self::Ideal {
        let den = self.lcm(&i.0.den, &j.0.den);
        let a = Euclidean::mul(self, &i.0.num, &self.div_rem(&den, &i.0.den).0);
        let b = Euclidean::mul(self, &j.0.num, &self.div_rem(&den, &j.0.den).0);
        let l = self.lcm(&a, &b);
        PrincipalIdeal(normalized_generator(self, &make_frac(self, l, den)))
    }

    fn colon(&self, i: &Self::Ideal, j: &Self::Ideal) -> Self::Ideal {
        let q = Domain::div(self, &i.0, &j.0).expect("nonzero ideal");
        PrincipalIdeal(normalized_generator(self, &q))
    }

    fn contains(&self, i: &Self::Ideal, x: &Self::Elem) -> bool {
        if Domain::is_zero(self, x) {
            return true;
        }
        let q = Domain::div(self, x, &i.0).expect("nonzero ideal");
        self.is_integral(&q)
    }

    fn scale(&self, x: &Self::Elem, i: &Self::Ideal) -> Result<Self::Ideal> {
        if Domain::is_zero(self, x) {
            return Err(Error::ZeroElement);
        }
        Ok(PrincipalIdeal(normalized_generator(self, &Domain::mul(self, x, &i.0))))
    }

    fn is_subset(&self, i: &Self::Ideal, j: &Self::Ideal) -> bool {
        self.contains(j, &i.0)
    }

    fn index(&self, j: &Self::Ideal, i: &Self::Ideal) -> Result<Index> {
        let q = Domain::div(self, &i.0, &j.0)?;
        if !self.is_integral(&q) {
            return Err(Error::NotContained(format!(
                "{} is not inside {}",
                self.fmt_ideal(i),
                self.fmt_ideal(j)
            )));
        }
        Ok(self.quotient_size(&q.num))
    }

    fn coset_reps(&self, j: &Self::Ideal, i: &Self::Ideal) -> Result<Vec<Self::Elem>> {
        let q = Domain::div(self, &i.0, &j.0)?;
        if !self.is_integral(&q) {
            return Err(Error::NotContained(format!(
                "{} is not inside {}",
                self.fmt_ideal(i),
                self.fmt_ideal(j)
            )));
        }
        let res = self.residues(&q.num).ok_or(Error::InfiniteIndex)?;
        Ok(res.into_iter().map(|r| Domain::mul(self, &j.0, &integral(self, r))).collect())
    }

    fn reduce(&self, x: &Self::Elem, i: &Self::Ideal) -> Self::Elem {
        debug_assert!(self.is_integral(x) && self.is_integral(&i.0));
        integral(self, self.rem(&x.num, &i.0.num))
    }

    fn ideal_elements(&self, i: &Self::Ideal, count: usize) -> Vec<Self::Elem> {
        Domain::elements(self, count).iter().map(|e| Domain::mul(self, e, &i.0)).collect()
    }

    fn is_principal(&self, i: &Self::Ideal) -> Option<Self::Elem> {
        Some(i.0.clone())
    }

    fn principal_generators(&self, bound: u64) -> Vec<Self::Elem> {
        self.generators_up_to(bound).into_iter().map(|g| integral(self, g)).collect()
    }

    fn ideal_weight(&self, i: &Self::Ideal) -> Option<BigUint> {
        if !self.is_integral(&i.0) {
            return None;
        }
        self.weight(&i.0.num)
    }

    fn fmt_ideal(&self, i: &Self::Ideal) -> String {
        format!("({})", self.fmt_elem(&i.0))
    }
}
