//! Imaginary quadratic orders `Z + f*O_K` in the basis `{1, θ}`, `θ = f*ω`.
//!
//! `θ² = Tθ − N` with `T = f*tr(ω)`, `N = f²*N(ω)`; ideals are lattices
//! `(1/den)(aZ + (b + cθ)Z)` with the HNF normalized by content.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::lattice::Hnf;
use super::{zz_pairs, Domain, Index, Justified, RingDescriptor, RingPredicates, UnitGroupInfo, UnitTag};
use crate::arith::{self, isqrt};
use crate::error::{Error, Result};

/// `(a + bθ) / den` with `den > 0` and `gcd(a, b, den) = 1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QuadElem {
    pub a: BigInt,
    pub b: BigInt,
    pub den: BigInt,
}

/// Nonzero fractional ideal `(1/den) * L` with `gcd(den, content(L)) = 1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticeIdeal {
    pub num: Hnf,
    pub den: BigInt,
}

impl LatticeIdeal {
    fn canonical(num: Hnf, den: BigInt) -> Self {
        let g = num.content().gcd(&den);
        if g.is_one() {
            LatticeIdeal { num, den }
        } else {
            LatticeIdeal { num: num.divide(&g), den: den / g }
        }
    }
}

/// The order `Z + f*O_K` in `K = Q(sqrt d)`, `d < 0` squarefree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticOrder {
    d: i64,
    f: u64,
    trace: BigInt,
    norm: BigInt,
}

impl QuadraticOrder {
    pub fn new(d: i64, conductor: u64) -> Result<Self> {
        if d == 0 || d == 1 || !arith::is_squarefree(&BigInt::from(d)) {
            return Err(Error::InvalidDescriptor(format!("d = {d} must be squarefree and different from 0, 1")));
        }
        if conductor == 0 {
            return Err(Error::InvalidDescriptor("conductor must be positive".into()));
        }
        if d > 0 {
            return Err(Error::UnsupportedRing(format!(
                "real quadratic order (d = {d}) has an infinite unit group"
            )));
        }
        let f = BigInt::from(conductor);
        let (tr, nm) = if d.rem_euclid(4) == 1 {
            (BigInt::one(), BigInt::from((1 - d) / 4))
        } else {
            (BigInt::zero(), BigInt::from(-d))
        };
        Ok(QuadraticOrder { d, f: conductor, trace: &f * tr, norm: &f * &f * nm })
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn conductor(&self) -> u64 {
        self.f
    }

    /// `T` in `θ² = Tθ − N`.
    pub fn trace_theta(&self) -> &BigInt {
        &self.trace
    }

    /// `N` in `θ² = Tθ − N`.
    pub fn norm_theta(&self) -> &BigInt {
        &self.norm
    }

    /// Discriminant `T² − 4N` of the order.
    pub fn discriminant(&self) -> BigInt {
        &self.trace * &self.trace - &self.norm * 4
    }

    pub fn is_maximal(&self) -> bool {
        self.f == 1
    }

    pub fn elem(&self, a: i64, b: i64) -> QuadElem {
        QuadElem { a: BigInt::from(a), b: BigInt::from(b), den: BigInt::one() }
    }

    pub fn elem_big(&self, a: BigInt, b: BigInt, den: BigInt) -> QuadElem {
        assert!(!den.is_zero(), "zero denominator");
        let g = a.gcd(&b).gcd(&den);
        let s = if den.is_negative() { -g } else { g };
        QuadElem { a: a / &s, b: b / &s, den: den / s }
    }

    /// The element `θ = f*ω`.
    pub fn theta(&self) -> QuadElem {
        self.elem(0, 1)
    }

    pub fn conj(&self, x: &QuadElem) -> QuadElem {
        QuadElem { a: &x.a + &x.b * &self.trace, b: -&x.b, den: x.den.clone() }
    }

    fn int_norm(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * a + a * b * &self.trace + b * b * &self.norm
    }

    /// Field norm `N_{K/Q}(x)`.
    pub fn norm(&self, x: &QuadElem) -> BigRational {
        BigRational::new(self.int_norm(&x.a, &x.b), &x.den * &x.den)
    }

    fn int_mul(&self, (a, b): (&BigInt, &BigInt), (c, d): (&BigInt, &BigInt)) -> (BigInt, BigInt) {
        let bd = b * d;
        (a * c - &bd * &self.norm, a * d + b * c + bd * &self.trace)
    }

    /// Integer vectors of `L` and `θL`.
    fn module_vectors(&self, vs: &[(BigInt, BigInt)]) -> Vec<(BigInt, BigInt)> {
        let mut out = Vec::with_capacity(2 * vs.len());
        for (x, y) in vs {
            out.push((x.clone(), y.clone()));
            out.push((-(y * &self.norm), x + y * &self.trace));
        }
        out
    }

    fn lattice_from(&self, vs: &[(BigInt, BigInt)], den: BigInt) -> LatticeIdeal {
        let h = Hnf::from_vectors(&self.module_vectors(vs)).expect("nonzero module has full rank");
        LatticeIdeal::canonical(h, den)
    }

    fn over_common_den(&self, i: &LatticeIdeal, j: &LatticeIdeal) -> (Hnf, Hnf, BigInt) {
        let m = i.den.lcm(&j.den);
        (i.num.scale(&(&m / &i.den)), j.num.scale(&(&m / &j.den)), m)
    }

    /// Integer points `(x, y)` with `x ≡ (y/c)*b mod a` on the lattice `h` whose
    /// norm form equals `target`, in a fixed order.
    fn lattice_points_of_norm(&self, h: &Hnf, target: &BigInt, stop_at_first: bool) -> Vec<(BigInt, BigInt)> {
        // Q(x, y) = (x + yT/2)² + y²|D|/4, so 4Q = (2x + yT)² + y²|D|.
        let disc = -self.discriminant();
        let four_q = target * 4;
        let ymax = isqrt(&(&four_q / &disc));
        let jmax = &ymax / &h.c;
        let mut out = Vec::new();
        let mut j = -jmax.clone();
        while j <= jmax {
            let y = &j * &h.c;
            let rest: BigInt = &four_q - &y * &y * &disc;
            if !rest.is_negative() {
                let s = isqrt(&rest);
                // 2x + yT in [-s, s]
                let lo: BigInt = (-&s - &y * &self.trace).div_floor(&BigInt::from(2)) - 1;
                let hi: BigInt = (&s - &y * &self.trace).div_floor(&BigInt::from(2)) + 1;
                let x0: BigInt = &j * &h.b;
                let mut i: BigInt = (&lo - &x0).div_floor(&h.a);
                loop {
                    let x = &x0 + &i * &h.a;
                    if x > hi {
                        break;
                    }
                    if self.int_norm(&x, &y) == *target {
                        out.push((x, y.clone()));
                        if stop_at_first {
                            return out;
                        }
                    }
                    i += 1;
                }
            }
            j += 1;
        }
        out
    }

    /// Nonzero integral elements of norm at most `bound`, ordered by norm.
    pub fn elements_of_norm_up_to(&self, bound: u64) -> Vec<QuadElem> {
        let mut out = Vec::new();
        for n in 1..=bound {
            for (x, y) in self.lattice_points_of_norm(&Hnf::identity(), &BigInt::from(n), false) {
                out.push(QuadElem { a: x, b: y, den: BigInt::one() });
            }
        }
        out
    }

    fn torsion_units(&self) -> Vec<QuadElem> {
        self.lattice_points_of_norm(&Hnf::identity(), &BigInt::one(), false)
            .into_iter()
            .map(|(a, b)| QuadElem { a, b, den: BigInt::one() })
            .collect()
    }

    fn fmt_rational(q: &BigRational) -> String {
        if q.is_integer() {
            q.to_integer().to_string()
        } else {
            format!("{}/{}", q.numer(), q.denom())
        }
    }
}

impl Domain for QuadraticOrder {
    type Elem = QuadElem;
    type Ideal = LatticeIdeal;

    fn descriptor(&self) -> RingDescriptor {
        RingDescriptor::QuadraticOrder { d: self.d, conductor: self.f }
    }

    fn zero(&self) -> QuadElem {
        self.elem(0, 0)
    }

    fn one(&self) -> QuadElem {
        self.elem(1, 0)
    }

    fn from_int(&self, n: i64) -> QuadElem {
        self.elem(n, 0)
    }

    fn add(&self, x: &QuadElem, y: &QuadElem) -> QuadElem {
        self.elem_big(&x.a * &y.den + &y.a * &x.den, &x.b * &y.den + &y.b * &x.den, &x.den * &y.den)
    }

    fn neg(&self, x: &QuadElem) -> QuadElem {
        QuadElem { a: -&x.a, b: -&x.b, den: x.den.clone() }
    }

    fn mul(&self, x: &QuadElem, y: &QuadElem) -> QuadElem {
        let (a, b) = self.int_mul((&x.a, &x.b), (&y.a, &y.b));
        self.elem_big(a, b, &x.den * &y.den)
    }

    fn inv(&self, x: &QuadElem) -> Option<QuadElem> {
        if self.is_zero(x) {
            return None;
        }
        let c = self.conj(x);
        let n = self.int_norm(&x.a, &x.b);
        // x^-1 = conj(x) / N(x) = (c.a + c.b θ) * den / n
        Some(self.elem_big(&c.a * &x.den, &c.b * &x.den, n))
    }

    fn is_zero(&self, x: &QuadElem) -> bool {
        x.a.is_zero() && x.b.is_zero()
    }

    fn is_integral(&self, x: &QuadElem) -> bool {
        x.den.is_one()
    }

    fn is_unit(&self, x: &QuadElem) -> bool {
        self.is_integral(x) && self.int_norm(&x.a, &x.b).is_one()
    }

    fn unit_group(&self) -> Result<UnitGroupInfo<QuadElem>> {
        let units = self.torsion_units();
        let order = units.len() as u64;
        let tag = match order {
            2 => UnitTag::Order2,
            4 => UnitTag::Order4,
            6 => UnitTag::Order6,
            n => return Err(Error::UnsupportedRing(format!("unexpected torsion of order {n}"))),
        };
        let gen = units
            .iter()
            .find(|u| {
                let mut p = (*u).clone();
                let mut k = 1;
                while p != self.one() {
                    p = self.mul(&p, u);
                    k += 1;
                }
                k == order
            })
            .expect("cyclic")
            .clone();
        Ok(UnitGroupInfo { tag, generators: vec![gen], order: Some(order) })
    }

    fn predicates(&self) -> RingPredicates {
        let maximal = self.is_maximal();
        RingPredicates {
            is_field: Justified::new(false, "rational primes are not invertible"),
            contains_infinite_field: Justified::new(false, "a subfield would contain Q, but 1/2 is not integral"),
            jacobson_radical_zero: Justified::new(true, "a maximal ideal lies over every rational prime; a nonzero x avoids those over primes not dividing its norm"),
            is_integrally_closed: if maximal {
                Justified::new(true, "conductor 1: the full ring of integers")
            } else {
                Justified::new(false, format!("conductor {}: f*omega/f = omega is integral but not in the order", self.f))
            },
            is_noetherian: Justified::new(true, "finitely generated Z-module"),
            is_dedekind: if maximal {
                Justified::new(true, "ring of integers of a number field")
            } else {
                Justified::new(false, "not integrally closed")
            },
        }
    }

    fn elements(&self, count: usize) -> Vec<QuadElem> {
        zz_pairs(count).into_iter().map(|(a, b)| self.elem(a, b)).collect()
    }

    fn fmt_elem(&self, x: &QuadElem) -> String {
        // a + bθ = a + b f ω, ω = sqrt d or (1 + sqrt d)/2
        let f = BigInt::from(self.f);
        let den = BigRational::from_integer(x.den.clone());
        let (p, q) = if self.d.rem_euclid(4) == 1 {
            let half = BigRational::new(&x.b * &f, BigInt::from(2));
            (BigRational::from_integer(x.a.clone()) + &half, half)
        } else {
            (BigRational::from_integer(x.a.clone()), BigRational::from_integer(&x.b * &f))
        };
        let (p, q) = (p / &den, q / den);
        let root = format!("sqrt({})", self.d);
        if q.is_zero() {
            return Self::fmt_rational(&p);
        }
        let qs = if q.is_one() {
            root
        } else if q == -BigRational::one() {
            format!("-{root}")
        } else {
            format!("{}*{root}", Self::fmt_rational(&q))
        };
        if p.is_zero() {
            qs
        } else if let Some(stripped) = qs.strip_prefix('-') {
            format!("{} - {stripped}", Self::fmt_rational(&p))
        } else {
            format!("{} + {qs}", Self::fmt_rational(&p))
        }
    }

    fn ideal(&self, gens: &[QuadElem]) -> Result<LatticeIdeal> {
        let nonzero: Vec<&QuadElem> = gens.iter().filter(|g| !self.is_zero(g)).collect();
        if nonzero.is_empty() {
            return Err(Error::ZeroIdeal);
        }
        let den = nonzero.iter().fold(BigInt::one(), |acc, g| acc.lcm(&g.den));
        let vs: Vec<(BigInt, BigInt)> = nonzero
            .iter()
            .map(|g| {
                let k = &den / &g.den;
                (&g.a * &k, &g.b * &k)
            })
            .collect();
        Ok(self.lattice_from(&vs, den))
    }

    fn ideal_basis(&self, i: &LatticeIdeal) -> Vec<QuadElem> {
        i.num
            .basis()
            .into_iter()
            .map(|(x, y)| self.elem_big(x, y, i.den.clone()))
            .collect()
    }

    fn ideal_mul(&self, i: &LatticeIdeal, j: &LatticeIdeal) -> LatticeIdeal {
        let mut vs = Vec::with_capacity(4);
        for (x1, y1) in i.num.basis() {
            for (x2, y2) in j.num.basis() {
                vs.push(self.int_mul((&x1, &y1), (&x2, &y2)));
            }
        }
        self.lattice_from(&vs, &i.den * &j.den)
    }

    fn ideal_sum(&self, i: &LatticeIdeal, j: &LatticeIdeal) -> LatticeIdeal {
        let (p, q, m) = self.over_common_den(i, j);
        LatticeIdeal::canonical(p.sum(&q), m)
    }

    fn intersect(&self, i: &LatticeIdeal, j: &LatticeIdeal) -> LatticeIdeal {
        let (p, q, m) = self.over_common_den(i, j);
        LatticeIdeal::canonical(p.intersect(&q), m)
    }

    fn colon(&self, i: &LatticeIdeal, j: &LatticeIdeal) -> LatticeIdeal {
        let mut acc: Option<LatticeIdeal> = None;
        for beta in self.ideal_basis(j) {
            let binv = self.inv(&beta).expect("basis vector is nonzero");
            let part = self.scale(&binv, i).expect("nonzero");
            acc = Some(match acc {
                None => part,
                Some(a) => self.intersect(&a, &part),
            });
        }
        acc.expect("two basis vectors")
    }

    fn contains(&self, i: &LatticeIdeal, x: &QuadElem) -> bool {
        let (xa, xb) = (&x.a * &i.den, &x.b * &i.den);
        if !xa.is_multiple_of(&x.den) || !xb.is_multiple_of(&x.den) {
            return false;
        }
        i.num.contains(&(xa / &x.den), &(xb / &x.den))
    }

    fn scale(&self, x: &QuadElem, i: &LatticeIdeal) -> Result<LatticeIdeal> {
        if self.is_zero(x) {
            return Err(Error::ZeroElement);
        }
        let vs: Vec<(BigInt, BigInt)> = i
            .num
            .basis()
            .iter()
            .map(|(u, v)| self.int_mul((&x.a, &x.b), (u, v)))
            .collect();
        let h = Hnf::from_vectors(&vs).expect("full rank");
        Ok(LatticeIdeal::canonical(h, &i.den * &x.den))
    }

    fn is_subset(&self, i: &LatticeIdeal, j: &LatticeIdeal) -> bool {
        let (p, q, _) = self.over_common_den(i, j);
        p.is_sublattice_of(&q)
    }

    fn index(&self, j: &LatticeIdeal, i: &LatticeIdeal) -> Result<Index> {
        let (p, q, _) = self.over_common_den(i, j);
        if !p.is_sublattice_of(&q) {
            return Err(Error::NotContained(format!("{} is not inside {}", self.fmt_ideal(i), self.fmt_ideal(j))));
        }
        let n = p.det() / q.det();
        Ok(Index::Finite(n.to_biguint().expect("positive")))
    }

    fn coset_reps(&self, j: &LatticeIdeal, i: &LatticeIdeal) -> Result<Vec<QuadElem>> {
        let (p, q, m) = self.over_common_den(i, j);
        if !p.is_sublattice_of(&q) {
            return Err(Error::NotContained(format!("{} is not inside {}", self.fmt_ideal(i), self.fmt_ideal(j))));
        }
        Ok(p.box_points(&q).into_iter().map(|(x, y)| self.elem_big(x, y, m.clone())).collect())
    }

    fn reduce(&self, x: &QuadElem, i: &LatticeIdeal) -> QuadElem {
        debug_assert!(self.is_integral(x) && i.den.is_one());
        let (a, b) = i.num.reduce(&x.a, &x.b);
        QuadElem { a, b, den: BigInt::one() }
    }

    fn ideal_elements(&self, i: &LatticeIdeal, count: usize) -> Vec<QuadElem> {
        let [(ax, _), (bx, cy)] = i.num.basis();
        zz_pairs(count)
            .into_iter()
            .map(|(s, t)| {
                let (s, t) = (BigInt::from(s), BigInt::from(t));
                self.elem_big(&s * &ax + &t * &bx, &t * &cy, i.den.clone())
            })
            .collect()
    }

    fn is_principal(&self, i: &LatticeIdeal) -> Option<QuadElem> {
        let target = i.num.det();
        let pts = self.lattice_points_of_norm(&i.num, &target, true);
        pts.into_iter().next().map(|(x, y)| self.elem_big(x, y, i.den.clone()))
    }

    fn principal_generators(&self, bound: u64) -> Vec<QuadElem> {
        let mut seen: BTreeMap<LatticeIdeal, QuadElem> = BTreeMap::new();
        for x in self.elements_of_norm_up_to(bound) {
            let i = self.principal(&x).expect("nonzero");
            seen.entry(i).or_insert(x);
        }
        let mut out: Vec<(BigInt, LatticeIdeal, QuadElem)> =
            seen.into_iter().map(|(i, x)| (i.num.det(), i, x)).collect();
        out.sort();
        out.into_iter().map(|(_, _, x)| x).collect()
    }

    fn ideal_weight(&self, i: &LatticeIdeal) -> Option<BigUint> {
        if !i.den.is_one() {
            return None;
        }
        i.num.det().to_biguint()
    }

    fn fmt_ideal(&self, i: &LatticeIdeal) -> String {
        let g1 = self.elem_big(i.num.a.clone(), BigInt::zero(), BigInt::one());
        let g2 = self.elem_big(i.num.b.clone(), i.num.c.clone(), BigInt::one());
        let body = format!("({}, {})", self.fmt_elem(&g1), self.fmt_elem(&g2));
        if i.den.is_one() {
            body
        } else {
            format!("1/{}*{body}", i.den)
        }
    }
}

impl QuadraticOrder {
    /// `[R : I]` for an integral ideal.
    pub fn ideal_norm(&self, i: &LatticeIdeal) -> BigRational {
        BigRational::new(i.num.det(), &i.den * &i.den)
    }

    pub fn norm_u64(&self, x: &QuadElem) -> Option<u64> {
        self.norm(x).to_integer().to_u64()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z_i_sqrt3() -> QuadraticOrder {
        QuadraticOrder::new(-3, 2).unwrap()
    }

    #[test]
    fn theta_satisfies_minimal_polynomial() {
        for (d, f) in [(-1, 1), (-3, 1), (-3, 2), (-5, 1), (-7, 3), (-2, 2)] {
            let r = QuadraticOrder::new(d, f).unwrap();
            let th = r.theta();
            let lhs = r.mul(&th, &th);
            let rhs = r.sub(&r.mul(&r.from_int(r.trace_theta().to_i64().unwrap()), &th), &r.from_int(r.norm_theta().to_i64().unwrap()));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn i_sqrt3_squares_to_minus_three() {
        let r = z_i_sqrt3();
        // θ = 1 + i√3, so i√3 = θ − 1
        let s = r.elem(-1, 1);
        assert_eq!(r.fmt_elem(&s), "sqrt(-3)");
        assert_eq!(r.mul(&s, &s), r.elem(-3, 0));
    }

    #[test]
    fn units() {
        let gi = QuadraticOrder::new(-1, 1).unwrap();
        let u = gi.unit_group().unwrap();
        assert_eq!(u.tag, UnitTag::Order4);
        assert!(gi.is_unit(&gi.theta()));
        assert_eq!(z_i_sqrt3().unit_group().unwrap().tag, UnitTag::Order2);
        assert_eq!(QuadraticOrder::new(-3, 1).unwrap().unit_group().unwrap().tag, UnitTag::Order6);
        assert!(matches!(QuadraticOrder::new(5, 1), Err(Error::UnsupportedRing(_))));
        assert!(QuadraticOrder::new(-4, 1).is_err());
    }

    #[test]
    fn the_non_invertible_ideal() {
        let r = z_i_sqrt3();
        let two = r.from_int(2);
        let th = r.theta();
        let m = r.ideal(&[two.clone(), th.clone()]).unwrap();
        let unit = r.unit_ideal();
        assert_eq!(r.index(&unit, &m).unwrap(), Index::Finite(BigUint::from(2u32)));
        let two_r = r.principal(&two).unwrap();
        assert_eq!(r.ideal_mul(&m, &m), r.ideal_mul(&two_r, &m));
        let th_r = r.principal(&th).unwrap();
        let thbar_r = r.principal(&r.conj(&th)).unwrap();
        assert_ne!(th_r, thbar_r);
        assert_eq!(r.intersect(&two_r, &th_r), r.ideal_mul(&two_r, &m));
        let half = r.inv(&two).unwrap();
        assert_eq!(r.colon(&unit, &m), r.scale(&half, &m).unwrap());
        assert_eq!(r.index(&unit, &th_r).unwrap(), Index::Finite(BigUint::from(4u32)));
        assert!(r.is_principal(&m).is_none());
        assert_eq!(r.coset_reps(&m, &r.ideal_mul(&two_r, &m)).unwrap().len(), 4);
        assert_eq!(r.coset_reps(&m, &m).unwrap(), vec![r.zero()]);
    }

    #[test]
    fn principal_detection_in_gaussian_integers() {
        let r = QuadraticOrder::new(-1, 1).unwrap();
        let i = r.ideal(&[r.from_int(5), r.elem(2, 1)]).unwrap();
        let g = r.is_principal(&i).unwrap();
        assert_eq!(r.principal(&g).unwrap(), i);
        let s5 = QuadraticOrder::new(-5, 1).unwrap();
        let p2 = s5.ideal(&[s5.from_int(2), s5.elem(1, 1)]).unwrap();
        assert!(s5.is_principal(&p2).is_none());
        assert!(s5.is_principal(&s5.ideal_mul(&p2, &p2)).is_some());
    }

    #[test]
    fn reduce_is_canonical_and_congruent() {
        let r = QuadraticOrder::new(-5, 1).unwrap();
        let i = r.ideal(&[r.from_int(6), r.elem(2, 2)]).unwrap();
        for x in r.elements(200) {
            let y = r.reduce(&x, &i);
            assert!(r.contains(&i, &r.sub(&x, &y)));
            assert_eq!(r.reduce(&y, &i), y);
        }
    }
}
