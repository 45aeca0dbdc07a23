//! Univariate polynomial rings `k[t]` over a base field.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use num_bigint::BigUint;

use super::field::PolyBase;
use super::{Euclidean, Index, RingDescriptor, RingPredicates, UnitGroupInfo};

/// Coefficients in ascending degree, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Poly<C>(pub Vec<C>);

impl<C> Poly<C> {
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.0
    }

    pub fn leading(&self) -> Option<&C> {
        self.0.last()
    }
}

pub(crate) fn trimmed<F: PolyBase>(f: &F, mut v: Vec<F::C>) -> Poly<F::C> {
    while v.last().is_some_and(|c| f.is_zero(c)) {
        v.pop();
    }
    Poly(v)
}

pub(crate) fn constant<F: PolyBase>(f: &F, c: F::C) -> Poly<F::C> {
    trimmed(f, alloc::vec![c])
}

pub(crate) fn monomial<F: PolyBase>(f: &F, c: F::C, deg: usize) -> Poly<F::C> {
    let mut v: Vec<F::C> = (0..deg).map(|_| f.zero()).collect();
    v.push(c);
    trimmed(f, v)
}

pub(crate) fn padd<F: PolyBase>(f: &F, a: &Poly<F::C>, b: &Poly<F::C>) -> Poly<F::C> {
    let n = a.0.len().max(b.0.len());
    let z = f.zero();
    let v = (0..n)
        .map(|i| f.add(a.0.get(i).unwrap_or(&z), b.0.get(i).unwrap_or(&z)))
        .collect();
    trimmed(f, v)
}

pub(crate) fn pneg<F: PolyBase>(f: &F, a: &Poly<F::C>) -> Poly<F::C> {
    Poly(a.0.iter().map(|c| f.neg(c)).collect())
}

pub(crate) fn psub<F: PolyBase>(f: &F, a: &Poly<F::C>, b: &Poly<F::C>) -> Poly<F::C> {
    padd(f, a, &pneg(f, b))
}

pub(crate) fn pscale<F: PolyBase>(f: &F, c: &F::C, a: &Poly<F::C>) -> Poly<F::C> {
    trimmed(f, a.0.iter().map(|x| f.mul(c, x)).collect())
}

pub(crate) fn pmul<F: PolyBase>(f: &F, a: &Poly<F::C>, b: &Poly<F::C>) -> Poly<F::C> {
    if a.0.is_empty() || b.0.is_empty() {
        return Poly(Vec::new());
    }
    let mut v: Vec<F::C> = (0..a.0.len() + b.0.len() - 1).map(|_| f.zero()).collect();
    for (i, x) in a.0.iter().enumerate() {
        for (j, y) in b.0.iter().enumerate() {
            v[i + j] = f.add(&v[i + j], &f.mul(x, y));
        }
    }
    trimmed(f, v)
}

/// Long division; `b` nonzero.
pub(crate) fn pdivrem<F: PolyBase>(f: &F, a: &Poly<F::C>, b: &Poly<F::C>) -> (Poly<F::C>, Poly<F::C>) {
    let db = b.degree().expect("division by zero polynomial");
    let inv_lc = f.inv(b.leading().expect("nonzero"));
    let mut r = a.clone();
    let mut q: Vec<F::C> = Vec::new();
    while let Some(dr) = r.degree() {
        if dr < db {
            break;
        }
        let c = f.mul(r.leading().expect("nonzero"), &inv_lc);
        let shift = dr - db;
        if q.len() <= shift {
            q.resize(shift + 1, f.zero());
        }
        q[shift] = c.clone();
        let sub = pmul(f, &monomial(f, c, shift), b);
        r = psub(f, &r, &sub);
    }
    (trimmed(f, q), r)
}

pub(crate) fn make_monic<F: PolyBase>(f: &F, a: &Poly<F::C>) -> Poly<F::C> {
    match a.leading() {
        None => a.clone(),
        Some(lc) => pscale(f, &f.inv(lc), a),
    }
}

pub(crate) fn pfmt<F: PolyBase>(f: &F, a: &Poly<F::C>) -> String {
    if a.0.is_empty() {
        return String::from("0");
    }
    let mut out = String::new();
    for (d, c) in a.0.iter().enumerate().rev() {
        if f.is_zero(c) {
            continue;
        }
        let mut cs = f.fmt_scalar(c);
        let negative = cs.starts_with('-');
        if negative {
            cs.remove(0);
        }
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let needs_parens = cs.contains('/');
        let mono = match d {
            0 => String::new(),
            1 => String::from("t"),
            _ => format!("t^{d}"),
        };
        if d == 0 {
            out.push_str(&cs);
        } else if cs == "1" {
            out.push_str(&mono);
        } else if needs_parens {
            out.push_str(&format!("({cs})*{mono}"));
        } else {
            out.push_str(&format!("{cs}*{mono}"));
        }
    }
    out
}

/// `k[t]` for a base field `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyRing<F: PolyBase> {
    pub base: F,
}

impl<F: PolyBase> PolyRing<F> {
    pub fn new(base: F) -> Self {
        PolyRing { base }
    }

    /// The polynomial with the given ascending coefficients.
    pub fn poly(&self, coeffs: Vec<F::C>) -> Poly<F::C> {
        trimmed(&self.base, coeffs)
    }

    /// The polynomial with integer coefficients, ascending.
    pub fn from_ints(&self, coeffs: &[i64]) -> Poly<F::C> {
        trimmed(&self.base, coeffs.iter().map(|&c| self.base.from_i64(c)).collect())
    }

    pub fn t(&self) -> Poly<F::C> {
        self.from_ints(&[0, 1])
    }
}

impl<F: PolyBase> Euclidean for PolyRing<F> {
    type E = Poly<F::C>;

    fn descriptor(&self) -> RingDescriptor {
        RingDescriptor::Poly { base: self.base.base_field() }
    }

    fn zero(&self) -> Self::E {
        Poly(Vec::new())
    }

    fn one(&self) -> Self::E {
        constant(&self.base, self.base.one())
    }

    fn from_i64(&self, n: i64) -> Self::E {
        constant(&self.base, self.base.from_i64(n))
    }

    fn is_zero(&self, a: &Self::E) -> bool {
        a.0.is_empty()
    }

    fn add(&self, a: &Self::E, b: &Self::E) -> Self::E {
        padd(&self.base, a, b)
    }

    fn neg(&self, a: &Self::E) -> Self::E {
        pneg(&self.base, a)
    }

    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E {
        pmul(&self.base, a, b)
    }

    fn div_rem(&self, a: &Self::E, b: &Self::E) -> (Self::E, Self::E) {
        pdivrem(&self.base, a, b)
    }

    fn split_unit(&self, a: &Self::E) -> (Self::E, Self::E) {
        let lc = a.leading().expect("nonzero").clone();
        (make_monic(&self.base, a), constant(&self.base, lc))
    }

    fn unit_inverse(&self, u: &Self::E) -> Self::E {
        constant(&self.base, self.base.inv(&u.0[0]))
    }

    fn is_unit(&self, a: &Self::E) -> bool {
        a.degree() == Some(0)
    }

    fn quotient_size(&self, a: &Self::E) -> Index {
        let d = a.degree().expect("nonzero") as u32;
        match self.base.size() {
            Some(q) => Index::Finite(BigUint::from(q).pow(d)),
            None if d == 0 => Index::one(),
            None => Index::Infinite,
        }
    }

    fn weight(&self, a: &Self::E) -> Option<BigUint> {
        self.base.weight(a)
    }

    fn generators_up_to(&self, bound: u64) -> Vec<Self::E> {
        self.base.generators_up_to(bound)
    }

    fn elements(&self, count: usize) -> Vec<Self::E> {
        self.base.elements(count)
    }

    fn residues(&self, m: &Self::E) -> Option<Vec<Self::E>> {
        self.base.residues(m)
    }

    fn unit_group(&self) -> UnitGroupInfo<Self::E> {
        self.base.unit_group()
    }

    fn predicates(&self) -> RingPredicates {
        self.base.predicates()
    }

    fn show(&self, a: &Self::E) -> String {
        pfmt(&self.base, a)
    }

    fn factor(&self, a: &Self::E) -> Vec<(Self::E, u32)> {
        if a.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        self.base.factor_monic(&make_monic(&self.base, a))
    }

    fn irreducibles_up_to(&self, bound: u64) -> Vec<Self::E> {
        self.base.irreducibles_up_to(bound)
    }

    fn residue_degree(&self, p: &Self::E) -> u32 {
        p.degree().unwrap_or(0) as u32
    }

    fn is_irreducible(&self, a: &Self::E) -> bool {
        a.degree().unwrap_or(0) >= 1 && self.base.is_irreducible(&make_monic(&self.base, a))
    }
}
