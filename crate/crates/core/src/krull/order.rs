use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use super::classgroup;
use super::{ClassGroup, Dedekind, PrimeHeightOne};
use crate::arith::{self, factor_int, int_valuation, sqrt_mod};
use crate::error::{Error, Result};
use crate::ring::{Domain, Index, LatticeIdeal, QuadraticOrder};

impl QuadraticOrder {
    /// Roots of `x² − Tx + N` modulo `p`, ascending.
    fn theta_roots_mod(&self, p: &BigInt) -> Vec<BigInt> {
        let (t, n) = (self.trace_theta(), self.norm_theta());
        let eval = |x: &BigInt| (x * x - t * x + n).mod_floor(p);
        if *p == BigInt::from(2) {
            return [BigInt::zero(), BigInt::one()].into_iter().filter(|x| eval(x).is_zero()).collect();
        }
        let Some(s) = sqrt_mod(&self.discriminant(), p) else { return Vec::new() };
        let half = (p + 1u32) / 2u32;
        let mut roots: Vec<BigInt> =
            [t + &s, t - &s].iter().map(|v| (v * &half).mod_floor(p)).collect();
        roots.sort();
        roots.dedup();
        debug_assert!(roots.iter().all(|r| eval(r).is_zero()));
        roots
    }

    /// The primes above the rational prime `p`, by factoring the minimal
    /// polynomial of `θ` modulo `p`.
    pub fn primes_above(&self, p: &BigInt) -> Vec<PrimeHeightOne<LatticeIdeal>> {
        let roots = self.theta_roots_mod(p);
        let poly = format!("x^2 - {}x + {}", self.trace_theta(), self.norm_theta());
        let pe = self.from_big(p.clone());
        if roots.is_empty() {
            let ideal = self.principal(&pe).expect("nonzero");
            return vec![PrimeHeightOne {
                label: self.fmt_ideal(&ideal),
                ideal,
                norm: Index::Finite((p * p).to_biguint().expect("positive")),
                residue_degree: 2,
                ramification: 1,
                certificate: format!("{poly} has no root mod {p}"),
            }];
        }
        let ramification = if roots.len() == 1 { 2 } else { 1 };
        let mut out: Vec<PrimeHeightOne<LatticeIdeal>> = roots
            .iter()
            .map(|r| {
                let g = self.sub(&self.theta(), &self.from_big(r.clone()));
                let ideal = self.ideal(&[pe.clone(), g]).expect("nonzero");
                PrimeHeightOne {
                    label: self.fmt_ideal(&ideal),
                    ideal,
                    norm: Index::Finite(p.to_biguint().expect("positive")),
                    residue_degree: 1,
                    ramification,
                    certificate: format!("{poly} has root {r} mod {p}; residue field Z/{p}"),
                }
            })
            .collect();
        out.sort();
        out
    }

    fn from_big(&self, n: BigInt) -> crate::ring::QuadElem {
        self.elem_big(n, BigInt::zero(), BigInt::one())
    }

    fn integral_valuation(&self, p: &PrimeHeightOne<LatticeIdeal>, l: &LatticeIdeal) -> i64 {
        let mut l = l.clone();
        let mut v = 0;
        while self.is_subset(&l, &p.ideal) {
            l = self.colon(&l, &p.ideal);
            v += 1;
        }
        v
    }
}

impl Dedekind for QuadraticOrder {
    fn require_dedekind(&self) -> Result<()> {
        if self.is_maximal() {
            Ok(())
        } else {
            Err(Error::NotDedekind(format!(
                "order of conductor {} is not integrally closed; divisorial prime structure of non-maximal orders is unsupported",
                self.conductor()
            )))
        }
    }

    fn height_one_primes(&self, bound: u64) -> Result<Vec<PrimeHeightOne<LatticeIdeal>>> {
        self.require_dedekind()?;
        let cap = BigUint::from(bound);
        let mut out: Vec<PrimeHeightOne<LatticeIdeal>> = arith::primes_up_to(bound)
            .into_iter()
            .flat_map(|p| self.primes_above(&BigInt::from(p)))
            .filter(|q| q.norm.finite().is_some_and(|n| *n <= cap))
            .collect();
        out.sort();
        Ok(out)
    }

    fn prime_from_ideal(&self, p: &LatticeIdeal) -> Result<PrimeHeightOne<LatticeIdeal>> {
        self.require_dedekind()?;
        let not_prime = || Error::InvalidDescriptor(format!("{} is not a prime ideal", self.fmt_ideal(p)));
        if !p.den.is_one() {
            return Err(not_prime());
        }
        // the rational prime under p is the least positive integer in it
        let under = p.num.a.clone();
        if !arith::is_prime(&under) {
            return Err(not_prime());
        }
        self.primes_above(&under).into_iter().find(|q| q.ideal == *p).ok_or_else(not_prime)
    }

    fn support_candidates(&self, i: &LatticeIdeal) -> Vec<PrimeHeightOne<LatticeIdeal>> {
        let mut rational: BTreeSet<BigInt> = BTreeSet::new();
        for n in [&i.den, &i.num.det()] {
            rational.extend(factor_int(n).into_iter().map(|(p, _)| p));
        }
        rational.iter().flat_map(|p| self.primes_above(p)).collect()
    }

    fn valuation_at(&self, p: &PrimeHeightOne<LatticeIdeal>, i: &LatticeIdeal) -> i64 {
        let under = &p.ideal.num.a;
        let num = LatticeIdeal { num: i.num.clone(), den: BigInt::one() };
        let den_val = int_valuation(under, &i.den) as i64 * p.ramification as i64;
        self.integral_valuation(p, &num) - den_val
    }

    fn divisor_class_group(&self, bound: u64) -> Result<ClassGroup<LatticeIdeal>> {
        self.require_dedekind()?;
        classgroup::quadratic_class_group(self, bound)
    }

    fn finite_residue_rings(&self) -> bool {
        true
    }
}
