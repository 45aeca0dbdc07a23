//! Base fields for polynomial rings and the base-specific parts of `k[t]`:
//! enumeration, weights, residue systems and factorization.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::poly::{constant, make_monic, pdivrem, pmul, trimmed, Poly};
use super::{nth_integer, BaseField, Justified, RingPredicates, UnitGroupInfo, UnitTag};
use crate::arith;
use crate::error::{Error, Result};

/// A field `k` with the hooks `k[t]` needs.
pub trait PolyBase: Clone + fmt::Debug + PartialEq + Send + Sync {
    type C: Clone + Eq + Ord + fmt::Debug + Send + Sync;

    fn base_field(&self) -> BaseField;
    fn zero(&self) -> Self::C;
    fn one(&self) -> Self::C;
    fn from_i64(&self, n: i64) -> Self::C;
    fn is_zero(&self, c: &Self::C) -> bool;
    fn add(&self, a: &Self::C, b: &Self::C) -> Self::C;
    fn neg(&self, a: &Self::C) -> Self::C;
    fn mul(&self, a: &Self::C, b: &Self::C) -> Self::C;
    /// Inverse of a nonzero scalar.
    fn inv(&self, a: &Self::C) -> Self::C;
    fn fmt_scalar(&self, a: &Self::C) -> String;
    /// Field cardinality when finite.
    fn size(&self) -> Option<u64>;

    fn elements(&self, count: usize) -> Vec<Poly<Self::C>>;
    fn weight(&self, f: &Poly<Self::C>) -> Option<BigUint>;
    fn generators_up_to(&self, bound: u64) -> Vec<Poly<Self::C>>;
    fn residues(&self, m: &Poly<Self::C>) -> Option<Vec<Poly<Self::C>>>;
    fn unit_group(&self) -> UnitGroupInfo<Poly<Self::C>>;
    fn predicates(&self) -> RingPredicates;
    /// Factorization of a monic polynomial of positive degree into monic irreducibles.
    fn factor_monic(&self, f: &Poly<Self::C>) -> Vec<(Poly<Self::C>, u32)>;
    fn irreducibles_up_to(&self, bound: u64) -> Vec<Poly<Self::C>>;
    fn is_irreducible(&self, f: &Poly<Self::C>) -> bool;
}

fn collect_factors<C: Ord + Clone>(mut fs: Vec<Poly<C>>) -> Vec<(Poly<C>, u32)> {
    fs.sort();
    let mut out: Vec<(Poly<C>, u32)> = Vec::new();
    for f in fs {
        match out.last_mut() {
            Some((g, e)) if *g == f => *e += 1,
            _ => out.push((f, 1)),
        }
    }
    out
}

fn poly_predicates(infinite: bool) -> RingPredicates {
    RingPredicates {
        is_field: Justified::new(false, "t is not invertible: degree is additive"),
        contains_infinite_field: if infinite {
            Justified::new(true, "contains the constants Q")
        } else {
            Justified::new(false, "every subfield consists of units and 0, and the units are the finite field of constants")
        },
        jacobson_radical_zero: Justified::new(true, "infinitely many monic irreducibles; a nonzero f lies outside (g) for g of degree above deg f"),
        is_integrally_closed: Justified::new(true, "polynomial ring over a field is a UFD"),
        is_noetherian: Justified::new(true, "PID"),
        is_dedekind: Justified::new(true, "PID that is not a field"),
    }
}

/// The field of rational numbers.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Rationals;

/// Coefficient height of the box in which `Q[t]` primes are enumerated.
pub const RATIONAL_PRIME_HEIGHT: i64 = 2;

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn balanced_ternary(mut m: i64) -> Vec<i64> {
    let mut out = Vec::new();
    while m != 0 {
        let r = m.rem_euclid(3);
        let d = if r == 2 { -1 } else { r };
        out.push(d);
        m = (m - d) / 3;
    }
    out
}

/// All monic integer polynomials of degree `d` with lower coefficients in `[-h, h]`,
/// ordered lexicographically from the `t^(d-1)` coefficient down.
fn monic_box(d: usize, h: i64) -> Vec<Vec<i64>> {
    let mut out: Vec<Vec<i64>> = vec![Vec::new()];
    for _ in 0..d {
        let mut next = Vec::new();
        for prefix in &out {
            for c in -h..=h {
                let mut p = prefix.clone();
                p.push(c);
                next.push(p);
            }
        }
        out = next;
    }
    out.into_iter()
        .map(|high_first| {
            let mut v: Vec<i64> = high_first.into_iter().rev().collect();
            v.push(1);
            v
        })
        .collect()
}

/// Clear denominators: a primitive integer polynomial with positive leading coefficient.
fn primitive_part(f: &Poly<BigRational>) -> Vec<BigInt> {
    let mut den = BigInt::one();
    for c in &f.0 {
        den = den.lcm(c.denom());
    }
    let ints: Vec<BigInt> = f.0.iter().map(|c| (c * BigRational::from_integer(den.clone())).to_integer()).collect();
    let mut g = BigInt::zero();
    for c in &ints {
        g = g.gcd(c);
    }
    let sign = if ints.last().is_some_and(|c| c.is_negative()) { -BigInt::one() } else { BigInt::one() };
    ints.into_iter().map(|c| c / &g * &sign).collect()
}

fn int_poly(v: &[BigInt]) -> Poly<BigRational> {
    trimmed(&Rationals, v.iter().map(|c| BigRational::from_integer(c.clone())).collect())
}

fn eval_int(f: &[BigInt], x: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for c in f.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

fn signed_divisors(n: &BigInt) -> Vec<BigInt> {
    let mut divs = vec![BigInt::one()];
    for (p, e) in arith::factor_int(n) {
        let mut next = Vec::new();
        for d in &divs {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(d * &pk);
                pk *= &p;
            }
        }
        divs = next;
    }
    divs.sort();
    let mut out = Vec::new();
    for d in divs {
        out.push(-&d);
        out.push(d);
    }
    out
}

/// A root `p/q` of the primitive integer polynomial `f`, with `q > 0`.
fn rational_root(f: &[BigInt]) -> Option<(BigInt, BigInt)> {
    if f[0].is_zero() {
        return Some((BigInt::zero(), BigInt::one()));
    }
    let lead = f.last().expect("nonzero polynomial");
    for q in signed_divisors(lead).into_iter().filter(|q| q.is_positive()) {
        for p in signed_divisors(&f[0]) {
            if !p.gcd(&q).is_one() {
                continue;
            }
            // q^n f(p/q) by Horner
            let mut val = BigInt::zero();
            let mut qk = BigInt::one();
            for c in f.iter().rev() {
                val = val * &p + c * &qk;
                qk *= &q;
            }
            if val.is_zero() {
                return Some((p, q));
            }
        }
    }
    None
}

/// Lagrange interpolation through `(xs[i], ys[i])`.
fn interpolate(xs: &[BigInt], ys: &[BigInt]) -> Poly<BigRational> {
    let q = Rationals;
    let mut acc = Poly(Vec::new());
    for i in 0..xs.len() {
        let mut term = constant(&q, BigRational::from_integer(ys[i].clone()));
        for j in 0..xs.len() {
            if i == j {
                continue;
            }
            let den = BigRational::from_integer(&xs[i] - &xs[j]);
            let lin = trimmed(&q, vec![-BigRational::from_integer(xs[j].clone()) / &den, BigRational::one() / den]);
            term = pmul(&q, &term, &lin);
        }
        acc = super::poly::padd(&q, &acc, &term);
    }
    acc
}

/// A factor of degree exactly `k` of the primitive integer polynomial `f`, if any
/// (Kronecker's method; assumes no factor of smaller positive degree).
fn kronecker_factor(f: &[BigInt], k: usize) -> Option<Vec<BigInt>> {
    if k == 1 {
        return rational_root(f).map(|(p, q)| vec![-p, q]);
    }
    // sample extra points and keep the k + 1 values with the fewest divisors
    let mut xs = Vec::new();
    for n in 0..(2 * k as u64 + 6) {
        let x = BigInt::from(nth_integer(n));
        let v = eval_int(f, &x);
        if v.is_zero() {
            return Some(vec![-x, BigInt::one()]);
        }
        let count: u32 = arith::factor_int(&v).iter().map(|(_, e)| e + 1).product();
        xs.push((count, x, v));
    }
    xs.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.2.magnitude().cmp(b.2.magnitude())));
    xs.truncate(k + 1);
    let xs: Vec<(BigInt, BigInt)> = xs.into_iter().map(|(_, x, v)| (x, v)).collect();
    let (xs, vals): (Vec<BigInt>, Vec<BigInt>) = xs.into_iter().unzip();
    let choices: Vec<Vec<BigInt>> = vals.iter().map(signed_divisors).collect();
    let fr = int_poly(f);
    let mut idx = vec![0usize; choices.len()];
    loop {
        // fix the sign ambiguity g ~ -g by requiring a positive first value
        if choices[0][idx[0]].is_positive() {
            let ys: Vec<BigInt> = idx.iter().zip(&choices).map(|(&i, c)| c[i].clone()).collect();
            let g = interpolate(&xs, &ys);
            if g.degree() == Some(k) && g.0.iter().all(|c| c.is_integer()) {
                let (_, r) = pdivrem(&Rationals, &fr, &g);
                if r.0.is_empty() {
                    return Some(g.0.iter().map(|c| c.to_integer()).collect());
                }
            }
        }
        let mut pos = 0;
        loop {
            if pos == idx.len() {
                return None;
            }
            idx[pos] += 1;
            if idx[pos] < choices[pos].len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

/// Bitmask of degrees a rational factor of `f` can have: a factor reduces mod `p`
/// to a product of some of the irreducible factors of `f mod p`.
fn factor_degrees_mod_small_primes(f: &[BigInt]) -> u128 {
    let n = f.len() - 1;
    let full: u128 = if n >= 127 { u128::MAX } else { (1u128 << (n + 1)) - 1 };
    if !(4..127).contains(&n) {
        return full;
    }
    let mut allowed = full;
    for p in [2u64, 3, 5, 7] {
        let pb = BigInt::from(p);
        if (f[n].clone() % &pb).is_zero() {
            continue;
        }
        let field = PrimeField { p };
        let coeffs: Vec<u64> = f.iter().map(|c| c.mod_floor(&pb).to_u64().expect("reduced")).collect();
        let monic = make_monic(&field, &trimmed(&field, coeffs));
        let mut sums: u128 = 1;
        for (g, e) in field.factor_monic(&monic) {
            let d = g.degree().expect("nonconstant factor");
            for _ in 0..e {
                sums |= sums << d;
            }
        }
        allowed &= sums;
        if allowed.count_ones() <= 2 {
            break;
        }
    }
    allowed
}

fn factor_primitive(f: Vec<BigInt>, out: &mut Vec<Vec<BigInt>>) {
    let n = f.len() - 1;
    if n == 0 {
        return;
    }
    let allowed = factor_degrees_mod_small_primes(&f);
    for k in (1..=n / 2).filter(|&k| allowed & (1 << k) != 0) {
        if let Some(g) = kronecker_factor(&f, k) {
            let (q, r) = pdivrem(&Rationals, &int_poly(&f), &int_poly(&g));
            debug_assert!(r.0.is_empty());
            factor_primitive(primitive_part(&q), out);
            out.push(primitive_part(&int_poly(&g)));
            return;
        }
    }
    out.push(f);
}

impl PolyBase for Rationals {
    type C = BigRational;

    fn base_field(&self) -> BaseField {
        BaseField::Rationals
    }

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn from_i64(&self, n: i64) -> BigRational {
        rat(n)
    }

    fn is_zero(&self, c: &BigRational) -> bool {
        c.is_zero()
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn inv(&self, a: &BigRational) -> BigRational {
        a.recip()
    }

    fn fmt_scalar(&self, a: &BigRational) -> String {
        a.to_string()
    }

    fn size(&self) -> Option<u64> {
        None
    }

    fn elements(&self, count: usize) -> Vec<Poly<BigRational>> {
        (0..count as u64)
            .map(|n| trimmed(self, balanced_ternary(nth_integer(n)).into_iter().map(rat).collect()))
            .collect()
    }

    /// `(2H+1)^deg` for a monic integer polynomial whose coefficients are bounded by `H`.
    fn weight(&self, f: &Poly<BigRational>) -> Option<BigUint> {
        if f.leading() != Some(&BigRational::one()) || !f.0.iter().all(|c| c.is_integer()) {
            return None;
        }
        let h = f.0.iter().map(|c| c.to_integer().magnitude().clone()).max().expect("nonzero");
        Some((h * 2u32 + 1u32).pow(f.degree().expect("nonzero") as u32))
    }

    fn generators_up_to(&self, bound: u64) -> Vec<Poly<BigRational>> {
        let mut out: Vec<(BigUint, usize, Vec<i64>)> = Vec::new();
        if bound >= 1 {
            out.push((BigUint::one(), 0, vec![1]));
        }
        let mut d = 1usize;
        while 3u64.checked_pow(d as u32).is_some_and(|w| w <= bound) {
            let mut h = 1i64;
            while (2 * h as u64 + 3).checked_pow(d as u32).is_some_and(|w| w <= bound) {
                h += 1;
            }
            for c in monic_box(d, h) {
                let p = trimmed(self, c.iter().map(|&x| rat(x)).collect());
                let w = self.weight(&p).expect("monic integer");
                let key: Vec<i64> = c.iter().rev().copied().collect();
                out.push((w, d, key));
            }
            d += 1;
        }
        out.sort();
        out.into_iter()
            .map(|(_, _, key)| trimmed(self, key.into_iter().rev().map(rat).collect()))
            .collect()
    }

    fn residues(&self, m: &Poly<BigRational>) -> Option<Vec<Poly<BigRational>>> {
        (m.degree()? == 0).then(|| vec![Poly(Vec::new())])
    }

    fn unit_group(&self) -> UnitGroupInfo<Poly<BigRational>> {
        UnitGroupInfo { tag: UnitTag::BaseFieldUnits, generators: vec![constant(self, rat(-1))], order: None }
    }

    fn predicates(&self) -> RingPredicates {
        poly_predicates(true)
    }

    fn factor_monic(&self, f: &Poly<BigRational>) -> Vec<(Poly<BigRational>, u32)> {
        let mut raw = Vec::new();
        factor_primitive(primitive_part(f), &mut raw);
        collect_factors(raw.iter().map(|g| make_monic(self, &int_poly(g))).collect())
    }

    /// Monic integer irreducibles of degree at most `bound` inside the height box.
    fn irreducibles_up_to(&self, bound: u64) -> Vec<Poly<BigRational>> {
        let mut out = Vec::new();
        for d in 1..=bound as usize {
            for c in monic_box(d, RATIONAL_PRIME_HEIGHT) {
                let p = trimmed(self, c.iter().map(|&x| rat(x)).collect());
                if self.is_irreducible(&p) {
                    out.push(p);
                }
            }
        }
        out
    }

    fn is_irreducible(&self, f: &Poly<BigRational>) -> bool {
        match f.degree() {
            None | Some(0) => false,
            Some(1) => true,
            Some(n) => {
                let prim = primitive_part(f);
                (1..=n / 2).all(|k| kronecker_factor(&prim, k).is_none())
            }
        }
    }
}

/// The prime field `F_p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !arith::is_prime_u64(p) || p > u32::MAX as u64 {
            return Err(Error::InvalidDescriptor(format!("{p} is not a supported prime")));
        }
        Ok(PrimeField { p })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    fn pow(&self, mut b: u64, mut e: u64) -> u64 {
        let mut r = 1 % self.p;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(&r, &b);
            }
            b = self.mul(&b, &b);
            e >>= 1;
        }
        r
    }

    /// Smallest generator of `F_p*`.
    pub fn primitive_root(&self) -> u64 {
        if self.p == 2 {
            return 1;
        }
        let qs: Vec<u64> = arith::factor_int(&BigInt::from(self.p - 1))
            .into_iter()
            .map(|(q, _)| q.to_u64().expect("small"))
            .collect();
        (2..self.p)
            .find(|&g| qs.iter().all(|q| self.pow(g, (self.p - 1) / q) != 1))
            .expect("cyclic group")
    }

    /// The polynomial whose coefficients are the base-p digits of `n`.
    fn from_digits(&self, mut n: u64) -> Poly<u64> {
        let mut v = Vec::new();
        while n > 0 {
            v.push(n % self.p);
            n /= self.p;
        }
        Poly(v)
    }

    fn monic_of_degree(&self, d: usize) -> impl Iterator<Item = Poly<u64>> + '_ {
        let count = self.p.pow(d as u32);
        (0..count).map(move |n| {
            let mut v = self.from_digits(n).0;
            v.resize(d, 0);
            v.push(1);
            Poly(v)
        })
    }

    fn has_factor_of_degree(&self, f: &Poly<u64>, d: usize) -> bool {
        self.monic_of_degree(d).any(|g| pdivrem(self, f, &g).1 .0.is_empty())
    }
}

impl PolyBase for PrimeField {
    type C = u64;

    fn base_field(&self) -> BaseField {
        BaseField::PrimeField(self.p)
    }

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1
    }

    fn from_i64(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }

    fn is_zero(&self, c: &u64) -> bool {
        *c == 0
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.p as u128) as u64
    }

    fn neg(&self, a: &u64) -> u64 {
        (self.p - a % self.p) % self.p
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }

    fn inv(&self, a: &u64) -> u64 {
        assert!(!(*a).is_multiple_of(self.p), "inverse of zero");
        self.pow(*a, self.p - 2)
    }

    fn fmt_scalar(&self, a: &u64) -> String {
        a.to_string()
    }

    fn size(&self) -> Option<u64> {
        Some(self.p)
    }

    fn elements(&self, count: usize) -> Vec<Poly<u64>> {
        (0..count as u64).map(|n| self.from_digits(n)).collect()
    }

    fn weight(&self, f: &Poly<u64>) -> Option<BigUint> {
        Some(BigUint::from(self.p).pow(f.degree()? as u32))
    }

    fn generators_up_to(&self, bound: u64) -> Vec<Poly<u64>> {
        let mut out = Vec::new();
        let mut d = 0usize;
        while self.p.checked_pow(d as u32).is_some_and(|w| w <= bound) {
            out.extend(self.monic_of_degree(d));
            d += 1;
        }
        out
    }

    fn residues(&self, m: &Poly<u64>) -> Option<Vec<Poly<u64>>> {
        let d = m.degree()? as u32;
        Some((0..self.p.pow(d)).map(|n| self.from_digits(n)).collect())
    }

    fn unit_group(&self) -> UnitGroupInfo<Poly<u64>> {
        UnitGroupInfo {
            tag: UnitTag::BaseFieldUnits,
            generators: vec![constant(self, self.primitive_root())],
            order: Some(self.p - 1),
        }
    }

    fn predicates(&self) -> RingPredicates {
        poly_predicates(false)
    }

    fn factor_monic(&self, f: &Poly<u64>) -> Vec<(Poly<u64>, u32)> {
        let mut rest = f.clone();
        let mut raw = Vec::new();
        let mut d = 1usize;
        while 2 * d <= rest.degree().unwrap_or(0) {
            for g in self.monic_of_degree(d) {
                loop {
                    let (q, r) = pdivrem(self, &rest, &g);
                    if !r.0.is_empty() {
                        break;
                    }
                    raw.push(g.clone());
                    rest = q;
                }
            }
            d += 1;
        }
        if rest.degree().unwrap_or(0) > 0 {
            raw.push(rest);
        }
        collect_factors(raw)
    }

    fn irreducibles_up_to(&self, bound: u64) -> Vec<Poly<u64>> {
        let mut out = Vec::new();
        let mut d = 1usize;
        while self.p.checked_pow(d as u32).is_some_and(|w| w <= bound) {
            out.extend(self.monic_of_degree(d).filter(|g| self.is_irreducible(g)));
            d += 1;
        }
        out
    }

    fn is_irreducible(&self, f: &Poly<u64>) -> bool {
        match f.degree() {
            None | Some(0) => false,
            Some(n) => (1..=n / 2).all(|d| !self.has_factor_of_degree(f, d)),
        }
    }
}
