//! Positive definite binary quadratic forms `ax² + bxy + cy²` of negative
//! discriminant: reduction, composition and the finite group of reduced forms.

use alloc::vec::Vec;
use core::fmt;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{isqrt, xgcd};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Form {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

impl Form {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>, c: impl Into<BigInt>) -> Self {
        Form { a: a.into(), b: b.into(), c: c.into() }
    }

    pub fn discriminant(&self) -> BigInt {
        &self.b * &self.b - BigInt::from(4) * &self.a * &self.c
    }

    /// The form with `a` and `b` given, `c` solved from the discriminant.
    pub fn from_ab(a: BigInt, b: BigInt, disc: &BigInt) -> Self {
        let c = (&b * &b - disc) / (BigInt::from(4) * &a);
        Form { a, b, c }
    }

    pub fn identity(disc: &BigInt) -> Self {
        let b = disc.mod_floor(&BigInt::from(2));
        Form::from_ab(BigInt::one(), b, disc)
    }

    pub fn inverse(&self) -> Self {
        Form { a: self.a.clone(), b: -&self.b, c: self.c.clone() }.reduce()
    }

    pub fn is_primitive(&self) -> bool {
        self.a.gcd(&self.b).gcd(&self.c).is_one()
    }

    pub fn is_reduced(&self) -> bool {
        let ab = self.b.abs();
        ab <= self.a && self.a <= self.c && !((ab == self.a || self.a == self.c) && self.b.is_negative())
    }

    fn normalize(&self) -> Self {
        // b into (-a, a]
        let two_a = &self.a * 2;
        let r = (&self.a - &self.b).div_floor(&two_a);
        let b = &self.b + &r * &two_a;
        let c = &self.a * &r * &r + &self.b * &r + &self.c;
        Form { a: self.a.clone(), b, c }
    }

    pub fn reduce(&self) -> Self {
        let mut f = self.normalize();
        while f.a > f.c {
            f = Form { a: f.c.clone(), b: -&f.b, c: f.a.clone() }.normalize();
        }
        if f.a == f.c && f.b.is_negative() {
            f.b = -f.b;
        }
        f
    }

    /// Gaussian composition followed by reduction.
    pub fn compose(&self, other: &Form) -> Form {
        let disc = self.discriminant();
        let (f1, f2) = if self.a > other.a { (other, self) } else { (self, other) };
        let s: BigInt = (&f1.b + &f2.b) / 2;
        let n = &f2.b - &s;
        let (y1, d) = if f2.a.is_multiple_of(&f1.a) {
            (BigInt::zero(), f1.a.clone())
        } else {
            let (d, u, _) = xgcd(&f2.a, &f1.a);
            (u, d)
        };
        let (x2, y2, d1) = if s.is_multiple_of(&d) {
            (BigInt::zero(), -BigInt::one(), d)
        } else {
            let (d1, u, v) = xgcd(&s, &d);
            (u, -v, d1)
        };
        let v1 = &f1.a / &d1;
        let v2 = &f2.a / &d1;
        let r = (&y1 * &y2 * &n - &x2 * &f2.c).mod_floor(&v1);
        let b3 = &f2.b + &v2 * &r * 2;
        let a3 = &v1 * &v2;
        Form::from_ab(a3, b3, &disc).reduce()
    }

    pub fn pow(&self, mut e: u64) -> Form {
        let mut acc = Form::identity(&self.discriminant());
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            e >>= 1;
        }
        acc
    }
}

/// All reduced primitive forms of the negative discriminant `disc`, sorted.
pub fn reduced_forms(disc: &BigInt) -> Vec<Form> {
    assert!(disc.is_negative(), "positive definite forms need D < 0");
    let mut out = Vec::new();
    let amax = isqrt(&(-disc / 3));
    let mut a = BigInt::one();
    while a <= amax {
        let mut b: BigInt = 1 - &a;
        while b <= a {
            let parity: BigInt = &b - disc;
            if parity.is_even() {
                let num: BigInt = &b * &b - disc;
                let den: BigInt = &a * 4;
                if num.is_multiple_of(&den) {
                    let f = Form { a: a.clone(), b: b.clone(), c: num / den };
                    if f.is_reduced() && f.is_primitive() {
                        out.push(f);
                    }
                }
            }
            b += 1;
        }
        a += 1;
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn class_numbers_match_brute_force_counts() {
        // brute force: count triples (a, b, c) in a box satisfying the reduction inequalities
        for d in [-3i64, -4, -7, -8, -15, -20, -23, -47, -56, -84] {
            let mut brute = 0;
            for a in 1..=40i64 {
                for b in -a..=a {
                    for c in a..=400i64 {
                        let f = Form::new(a, b, c);
                        if b * b - 4 * a * c == d && f.is_reduced() && f.is_primitive() {
                            brute += 1;
                        }
                    }
                }
            }
            assert_eq!(reduced_forms(&BigInt::from(d)).len(), brute, "D = {d}");
        }
    }

    #[test]
    fn known_groups() {
        let forms = reduced_forms(&BigInt::from(-20));
        assert_eq!(forms, vec![Form::new(1, 0, 5), Form::new(2, 2, 3)]);
        let g = &forms[1];
        assert_eq!(g.compose(g), Form::new(1, 0, 5));
        // D = -23: cyclic of order 3
        let f = Form::new(2, 1, 3);
        assert_ne!(f.pow(2), Form::identity(&BigInt::from(-23)));
        assert_eq!(f.pow(3), Form::identity(&BigInt::from(-23)));
        assert_eq!(f.compose(&f.inverse()), Form::identity(&BigInt::from(-23)));
    }

    #[test]
    fn composition_preserves_discriminant_and_is_associative() {
        let disc = BigInt::from(-84);
        let forms = reduced_forms(&disc);
        for x in &forms {
            for y in &forms {
                let xy = x.compose(y);
                assert_eq!(xy.discriminant(), disc);
                assert!(xy.is_reduced());
                assert_eq!(xy, y.compose(x));
                for z in &forms {
                    assert_eq!(xy.compose(z), x.compose(&y.compose(z)));
                }
            }
        }
    }
}
