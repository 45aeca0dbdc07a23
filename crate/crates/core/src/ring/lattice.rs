//! Full-rank sublattices of `Z^2` in Hermite normal form.

use alloc::vec::Vec;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{crt, xgcd};

/// The lattice `a*Z(1,0) + Z(b,c)` with `a, c > 0` and `0 <= b < a`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Hnf {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
}

impl Hnf {
    pub fn new(a: BigInt, b: BigInt, c: BigInt) -> Self {
        assert!(a.is_positive() && c.is_positive(), "degenerate lattice");
        let b = b.mod_floor(&a);
        Hnf { a, b, c }
    }

    /// HNF of the span of `vs`; `None` unless the span has rank 2.
    pub fn from_vectors(vs: &[(BigInt, BigInt)]) -> Option<Hnf> {
        // combine into a vector whose second coordinate is gcd of all of them
        let mut w = (BigInt::zero(), BigInt::zero());
        for v in vs {
            let (g, s, t) = xgcd(&w.1, &v.1);
            if g.is_zero() {
                continue;
            }
            w = (&s * &w.0 + &t * &v.0, g);
        }
        if w.1.is_zero() {
            return None;
        }
        let c = w.1.clone();
        let mut a = BigInt::zero();
        for v in vs {
            let k = &v.1 / &c;
            a = a.gcd(&(&v.0 - &k * &w.0));
        }
        if a.is_zero() {
            return None;
        }
        Some(Hnf::new(a, w.0, c))
    }

    pub fn basis(&self) -> [(BigInt, BigInt); 2] {
        [(self.a.clone(), BigInt::zero()), (self.b.clone(), self.c.clone())]
    }

    /// `[Z^2 : L]`.
    pub fn det(&self) -> BigInt {
        &self.a * &self.c
    }

    pub fn contains(&self, x: &BigInt, y: &BigInt) -> bool {
        if !y.is_multiple_of(&self.c) {
            return false;
        }
        (x - (y / &self.c) * &self.b).is_multiple_of(&self.a)
    }

    pub fn is_sublattice_of(&self, other: &Hnf) -> bool {
        self.basis().iter().all(|(x, y)| other.contains(x, y))
    }

    /// Representative of `(x, y) + L` in the box `[0, a) x [0, c)`.
    pub fn reduce(&self, x: &BigInt, y: &BigInt) -> (BigInt, BigInt) {
        let k = y.div_floor(&self.c);
        let y = y - &k * &self.c;
        let x = (x - &k * &self.b).mod_floor(&self.a);
        (x, y)
    }

    /// Points of the superlattice `sup` inside this lattice's fundamental box:
    /// one per coset of `sup / self`.
    pub fn box_points(&self, sup: &Hnf) -> Vec<(BigInt, BigInt)> {
        let mut out = Vec::new();
        let mut j = BigInt::zero();
        loop {
            let y = &j * &sup.c;
            if y >= self.c {
                break;
            }
            let x0 = (&j * &sup.b).mod_floor(&sup.a);
            let mut x = x0;
            while x < self.a {
                out.push((x.clone(), y.clone()));
                x += &sup.a;
            }
            j += 1;
        }
        out
    }

    pub fn sum(&self, other: &Hnf) -> Hnf {
        let mut vs = self.basis().to_vec();
        vs.extend(other.basis());
        Hnf::from_vectors(&vs).expect("full rank")
    }

    pub fn intersect(&self, other: &Hnf) -> Hnf {
        // y runs over multiples of l = lcm(c1, c2); with y = l*k the x-congruences
        // x = k*(l/c1)*b1 mod a1 and x = k*(l/c2)*b2 mod a2 are solvable iff
        // k*((l/c1)*b1 - (l/c2)*b2) = 0 mod gcd(a1, a2).
        let l = self.c.lcm(&other.c);
        let e1 = (&l / &self.c) * &self.b;
        let e2 = (&l / &other.c) * &other.b;
        let g = self.a.gcd(&other.a);
        let step = &g / g.gcd(&(&e1 - &e2));
        let y = &l * &step;
        let (x, m) = crt(&(&step * &e1), &self.a, &(&step * &e2), &other.a).expect("solvable by choice of step");
        debug_assert_eq!(m, self.a.lcm(&other.a));
        Hnf::new(m, x, y)
    }

    pub fn scale(&self, k: &BigInt) -> Hnf {
        let k = k.abs();
        Hnf::new(&self.a * &k, &self.b * &k, &self.c * &k)
    }

    /// Content: gcd of all entries.
    pub fn content(&self) -> BigInt {
        self.a.gcd(&self.b).gcd(&self.c)
    }

    pub fn divide(&self, k: &BigInt) -> Hnf {
        Hnf::new(&self.a / k, &self.b / k, &self.c / k)
    }

    pub fn identity() -> Hnf {
        Hnf::new(BigInt::one(), BigInt::zero(), BigInt::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::big;

    fn brute_members(h: &Hnf, r: i64) -> Vec<(i64, i64)> {
        let mut out = Vec::new();
        for x in -r..=r {
            for y in -r..=r {
                if h.contains(&big(x), &big(y)) {
                    out.push((x, y));
                }
            }
        }
        out
    }

    #[test]
    fn hnf_of_spanning_set() {
        let h = Hnf::from_vectors(&[(big(4), big(6)), (big(2), big(2)), (big(0), big(10))]).unwrap();
        // span contains (4,6)-3(2,2) = (-2,0) and (2,2): HNF a=2, c=2, b=0
        assert_eq!(h, Hnf::new(big(2), big(0), big(2)));
        assert!(Hnf::from_vectors(&[(big(1), big(1)), (big(2), big(2))]).is_none());
    }

    #[test]
    fn intersection_matches_membership() {
        let cases = [
            (Hnf::new(big(4), big(1), big(3)), Hnf::new(big(6), big(5), big(2))),
            (Hnf::new(big(2), big(1), big(1)), Hnf::new(big(2), big(0), big(2))),
            (Hnf::new(big(9), big(3), big(3)), Hnf::new(big(3), big(1), big(5))),
        ];
        for (p, q) in cases {
            let i = p.intersect(&q);
            let want: Vec<_> = brute_members(&p, 40).into_iter().filter(|(x, y)| q.contains(&big(*x), &big(*y))).collect();
            assert_eq!(brute_members(&i, 40), want);
            let s = p.sum(&q);
            assert!(p.is_sublattice_of(&s) && q.is_sublattice_of(&s));
        }
    }

    #[test]
    fn box_points_count_is_index() {
        let sub = Hnf::new(big(6), big(2), big(4));
        let sup = Hnf::new(big(2), big(0), big(2));
        assert!(sub.is_sublattice_of(&sup));
        let pts = sub.box_points(&sup);
        assert_eq!(BigInt::from(pts.len()), sub.det() / sup.det());
        for (x, y) in &pts {
            assert_eq!(sub.reduce(x, y), (x.clone(), y.clone()));
        }
    }
}
