//! Height-one primes, valuations and divisorial factorization in Dedekind
//! domains, together with class groups, the finite/infinite prime dichotomy
//! and the data indexing the K-theory decomposition.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::{Error, Result};
use crate::ideal::divisorial_closure;
use crate::ring::{Euclidean, Frac, Index, PrincipalIdeal, UnitGroupInfo};
use crate::ring::Domain;

pub mod classgroup;
pub mod forms;
mod order;

pub use classgroup::{ClassGroup, FormsCheck};
pub use forms::Form;

/// A height-one prime with its residue data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeHeightOne<I> {
    pub ideal: I,
    pub label: String,
    /// `[R : p]`.
    pub norm: Index,
    pub residue_degree: u32,
    pub ramification: u32,
    /// Why the ideal is prime.
    pub certificate: String,
}

impl<I: Ord> PartialOrd for PrimeHeightOne<I> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<I: Ord> Ord for PrimeHeightOne<I> {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.norm, &self.ideal).cmp(&(&other.norm, &other.ideal))
    }
}

/// Dedekind domains: every nonzero fractional ideal is a finite product of
/// height-one primes, so the divisorial ideals form a free abelian group.
pub trait Dedekind: Domain {
    /// Rejects the rings of this type that are not Dedekind.
    fn require_dedekind(&self) -> Result<()>;

    /// All height-one primes of norm at most `bound` (degree, when residue
    /// fields are infinite), in a deterministic order.
    fn height_one_primes(&self, bound: u64) -> Result<Vec<PrimeHeightOne<Self::Ideal>>>;

    /// Certifies that `p` is a nonzero prime ideal.
    fn prime_from_ideal(&self, p: &Self::Ideal) -> Result<PrimeHeightOne<Self::Ideal>>;

    /// A finite set of primes containing every prime where `v_p(I) ≠ 0`.
    fn support_candidates(&self, i: &Self::Ideal) -> Vec<PrimeHeightOne<Self::Ideal>>;

    fn valuation_at(&self, p: &PrimeHeightOne<Self::Ideal>, i: &Self::Ideal) -> i64;

    fn divisor_class_group(&self, bound: u64) -> Result<ClassGroup<Self::Ideal>>;

    /// True when every residue ring `R/p^i` is finite.
    fn finite_residue_rings(&self) -> bool;
}

impl<R: Euclidean> Dedekind for R {
    fn require_dedekind(&self) -> Result<()> {
        Ok(())
    }

    fn height_one_primes(&self, bound: u64) -> Result<Vec<PrimeHeightOne<Self::Ideal>>> {
        Ok(self.irreducibles_up_to(bound).into_iter().map(|p| pid_prime(self, p)).collect())
    }

    fn prime_from_ideal(&self, p: &Self::Ideal) -> Result<PrimeHeightOne<Self::Ideal>> {
        let g = p.generator();
        if !self.is_integral(g) || !self.is_irreducible(&g.num) {
            return Err(Error::InvalidDescriptor(format!("{} is not a prime ideal", self.fmt_ideal(p))));
        }
        Ok(pid_prime(self, g.num.clone()))
    }

    fn support_candidates(&self, i: &Self::Ideal) -> Vec<PrimeHeightOne<Self::Ideal>> {
        let g = i.generator();
        let mut ps: BTreeSet<R::E> = BTreeSet::new();
        for x in [&g.num, &g.den] {
            ps.extend(self.factor(x).into_iter().map(|(p, _)| p));
        }
        ps.into_iter().map(|p| pid_prime(self, p)).collect()
    }

    fn valuation_at(&self, p: &PrimeHeightOne<Self::Ideal>, i: &Self::Ideal) -> i64 {
        let pi = &p.ideal.generator().num;
        let g = i.generator();
        self.multiplicity(pi, &g.num) as i64 - self.multiplicity(pi, &g.den) as i64
    }

    fn divisor_class_group(&self, _bound: u64) -> Result<ClassGroup<Self::Ideal>> {
        Ok(ClassGroup::trivial(Domain::unit_ideal(self)))
    }

    fn finite_residue_rings(&self) -> bool {
        self.irreducibles_up_to(1).first().is_none_or(|p| self.quotient_size(p).is_finite())
    }
}

fn pid_prime<R: Euclidean>(r: &R, p: R::E) -> PrimeHeightOne<PrincipalIdeal<R::E>> {
    let norm = r.quotient_size(&p);
    let label = r.prime_label(&p);
    PrimeHeightOne {
        residue_degree: r.residue_degree(&p),
        ramification: 1,
        certificate: format!("{label} is irreducible"),
        label: format!("({label})"),
        ideal: PrincipalIdeal(Frac { num: p, den: Euclidean::one(r) }),
        norm,
    }
}

/// Finitely supported map from primes to exponents, sorted by prime.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorVector<I> {
    pub entries: Vec<(PrimeHeightOne<I>, i64)>,
}

impl<I: Clone + Ord> DivisorVector<I> {
    pub fn new(mut entries: Vec<(PrimeHeightOne<I>, i64)>) -> Self {
        entries.retain(|(_, e)| *e != 0);
        entries.sort_by(|a, b| a.0.cmp(&b.0));
        DivisorVector { entries }
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn exponent(&self, p: &I) -> i64 {
        self.entries.iter().find(|(q, _)| q.ideal == *p).map_or(0, |(_, e)| *e)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.entries.clone();
        for (p, e) in &other.entries {
            match out.iter_mut().find(|(q, _)| q.ideal == p.ideal) {
                Some(slot) => slot.1 += e,
                None => out.push((p.clone(), *e)),
            }
        }
        DivisorVector::new(out)
    }

    pub fn neg(&self) -> Self {
        DivisorVector { entries: self.entries.iter().map(|(p, e)| (p.clone(), -e)).collect() }
    }
}

pub fn primes_up_to<R: Dedekind>(ring: &R, bound: u64) -> Result<Vec<PrimeHeightOne<R::Ideal>>> {
    ring.require_dedekind()?;
    ring.height_one_primes(bound)
}

pub fn valuation<R: Dedekind>(ring: &R, p: &PrimeHeightOne<R::Ideal>, i: &R::Ideal) -> Result<i64> {
    ring.require_dedekind()?;
    Ok(ring.valuation_at(p, i))
}

pub fn elem_valuation<R: Dedekind>(ring: &R, p: &PrimeHeightOne<R::Ideal>, x: &R::Elem) -> Result<i64> {
    ring.require_dedekind()?;
    let i = ring.principal(x)?;
    Ok(ring.valuation_at(p, &i))
}

/// `p^(n)`: the divisorial closure of `p^n`, with `p^(-1) = (R : p)`.
pub fn prime_power<R: Dedekind>(ring: &R, p: &R::Ideal, n: i64) -> R::Ideal {
    let unit = ring.unit_ideal();
    let base = if n < 0 { ring.colon(&unit, p) } else { p.clone() };
    let mut acc = unit;
    for _ in 0..n.unsigned_abs() {
        acc = ring.ideal_mul(&acc, &base);
    }
    divisorial_closure(ring, &acc)
}

pub fn factor_divisorial<R: Dedekind>(ring: &R, i: &R::Ideal) -> Result<DivisorVector<R::Ideal>> {
    ring.require_dedekind()?;
    let entries = ring
        .support_candidates(i)
        .into_iter()
        .map(|p| {
            let e = ring.valuation_at(&p, i);
            (p, e)
        })
        .collect();
    Ok(DivisorVector::new(entries))
}

pub fn factor_element<R: Dedekind>(ring: &R, x: &R::Elem) -> Result<DivisorVector<R::Ideal>> {
    factor_divisorial(ring, &ring.principal(x)?)
}

/// The divisorial product `•` of the prime powers in `v`.
pub fn recompose<R: Dedekind>(ring: &R, v: &DivisorVector<R::Ideal>) -> R::Ideal {
    let mut acc = ring.unit_ideal();
    for (p, e) in &v.entries {
        acc = ring.ideal_mul(&acc, &prime_power(ring, &p.ideal, *e));
    }
    divisorial_closure(ring, &acc)
}

/// `x ∈ I` decided by comparing valuations on the joint support.
pub fn membership_by_valuations<R: Dedekind>(ring: &R, x: &R::Elem, i: &R::Ideal) -> Result<bool> {
    ring.require_dedekind()?;
    if ring.is_zero(x) {
        return Ok(true);
    }
    let xi = ring.principal(x)?;
    let mut primes = ring.support_candidates(i);
    primes.extend(ring.support_candidates(&xi));
    Ok(primes.iter().all(|p| ring.valuation_at(p, &xi) >= ring.valuation_at(p, i)))
}

/// Output of [`approximate`], re-verified against the prescription.
#[derive(Debug, Clone)]
pub struct Approximation<E, I> {
    pub element: E,
    pub factorization: DivisorVector<I>,
}

/// An element with `v_{p_i}(x) = n_i` and `v_p(x) ≥ 0` at every other prime.
pub fn approximate<R: Dedekind>(
    ring: &R,
    prescriptions: &[(PrimeHeightOne<R::Ideal>, i64)],
) -> Result<Approximation<R::Elem, R::Ideal>> {
    ring.require_dedekind()?;
    for (k, (p, _)) in prescriptions.iter().enumerate() {
        if prescriptions[..k].iter().any(|(q, _)| q.ideal == p.ideal) {
            return Err(Error::DuplicatePrime(p.label.clone()));
        }
    }
    // clear denominators with d = prod g_i^{-n_i}, g_i a nonzero element of p_i
    let mut d = ring.one();
    for (p, n) in prescriptions {
        if *n < 0 {
            let g = ring.ideal_basis(&p.ideal).into_iter().find(|g| !ring.is_zero(g)).expect("nonzero ideal");
            for _ in 0..n.unsigned_abs() {
                d = ring.mul(&d, &g);
            }
        }
    }
    let mut a = ring.principal(&d)?;
    for (p, n) in prescriptions {
        a = ring.ideal_mul(&a, &prime_power(ring, &p.ideal, *n));
    }
    let avoid: Vec<R::Ideal> = prescriptions.iter().map(|(p, _)| ring.ideal_mul(&a, &p.ideal)).collect();
    let dinv = ring.inv(&d).expect("nonzero");
    let mut count = 16;
    while count <= 1 << 16 {
        for y in ring.ideal_elements(&a, count) {
            if ring.is_zero(&y) || avoid.iter().any(|b| ring.contains(b, &y)) {
                continue;
            }
            let x = ring.mul(&y, &dinv);
            let factorization = factor_element(ring, &x)?;
            let exact = prescriptions.iter().all(|(p, n)| factorization.exponent(&p.ideal) == *n);
            let elsewhere = factorization
                .entries
                .iter()
                .all(|(q, e)| *e >= 0 || prescriptions.iter().any(|(p, _)| p.ideal == q.ideal));
            if !(exact && elsewhere) {
                return Err(Error::Uncertified(format!("approximation {} failed re-verification", ring.fmt_elem(&x))));
            }
            return Ok(Approximation { element: x, factorization });
        }
        count *= 4;
    }
    Err(Error::SearchExhausted { what: "approximation element".into(), bound: 1 << 16 })
}

pub fn class_group<R: Dedekind>(ring: &R, bound: u64) -> Result<ClassGroup<R::Ideal>> {
    ring.require_dedekind()?;
    ring.divisor_class_group(bound)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum PrimeKind {
    Fin,
    Inf,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeClass {
    pub kind: PrimeKind,
    /// `[R : p^(i)]` for `i = 1, 2, …`, stopping at the first infinite one.
    pub indices: Vec<Index>,
    /// Ring-level argument that the verdict holds for every `i`.
    pub persistence: Option<&'static str>,
}

pub fn classify_prime<R: Dedekind>(ring: &R, p: &PrimeHeightOne<R::Ideal>, max_i: u32) -> Result<PrimeClass> {
    let unit = ring.unit_ideal();
    let mut indices = Vec::new();
    let mut power = unit.clone();
    for _ in 0..max_i {
        power = ring.ideal_mul(&power, &p.ideal);
        let idx = ring.index(&unit, &divisorial_closure(ring, &power))?;
        let infinite = !idx.is_finite();
        indices.push(idx);
        if infinite {
            break;
        }
    }
    let kind = if indices.iter().all(Index::is_finite) { PrimeKind::Fin } else { PrimeKind::Inf };
    let persistence = match (kind, ring.finite_residue_rings()) {
        (PrimeKind::Fin, true) => Some("finite residue field, so every R/p^i is finite"),
        (PrimeKind::Inf, _) => Some("R/p already has infinite index"),
        (PrimeKind::Fin, false) => None,
    };
    Ok(PrimeClass { kind, indices, persistence })
}

/// `Q×_I = { a : aI = I }` compared against `R*`.
#[derive(Debug, Clone)]
pub struct StabilizerReport<E> {
    pub units: UnitGroupInfo<E>,
    pub units_checked: usize,
    pub units_fix_ideal: bool,
    pub samples_checked: usize,
    /// Sampled non-units `a` with `aI = I`.
    pub fixing_non_units: Vec<E>,
}

impl<E> StabilizerReport<E> {
    pub fn equals_unit_group(&self) -> bool {
        self.units_fix_ideal && self.fixing_non_units.is_empty()
    }
}

const UNIT_LISTING_CAP: usize = 10_000;

fn unit_list<R: Domain>(ring: &R, info: &UnitGroupInfo<R::Elem>) -> Vec<R::Elem> {
    let mut seen: BTreeSet<R::Elem> = BTreeSet::new();
    seen.insert(ring.one());
    let mut frontier = vec![ring.one()];
    while let Some(u) = frontier.pop() {
        for g in &info.generators {
            let v = ring.mul(&u, g);
            if seen.len() < UNIT_LISTING_CAP && seen.insert(v.clone()) {
                frontier.push(v);
            }
        }
    }
    if info.order.is_none() {
        // constants of an infinite base field: add a few beyond the generators
        for (a, b) in [(2, 1), (1, 2), (-3, 5)] {
            seen.insert(ring.div(&ring.from_int(a), &ring.from_int(b)).expect("nonzero"));
        }
    }
    seen.into_iter().collect()
}

/// Checks `uI = I` for the units and `aI ≠ I` for `samples` quotients of
/// small elements that are not units.
pub fn orbit_stabilizer<R: Domain>(ring: &R, i: &R::Ideal, samples: usize) -> Result<StabilizerReport<R::Elem>> {
    let units = ring.unit_group()?;
    let list = unit_list(ring, &units);
    let units_fix_ideal = list.iter().all(|u| ring.scale(u, i).is_ok_and(|j| j == *i));
    let mut seen = BTreeSet::new();
    let mut fixing = Vec::new();
    let mut side = 8;
    while seen.len() < samples && side <= 1 << 14 {
        let elems: Vec<R::Elem> = ring.elements(side).into_iter().filter(|e| !ring.is_zero(e)).collect();
        for x in &elems {
            for y in &elems {
                if seen.len() >= samples {
                    break;
                }
                let a = ring.div(x, y)?;
                if ring.is_unit(&a) || !seen.insert(a.clone()) {
                    continue;
                }
                if ring.scale(&a, i)? == *i {
                    fixing.push(a);
                }
            }
        }
        side *= 2;
    }
    Ok(StabilizerReport {
        units,
        units_checked: list.len(),
        units_fix_ideal,
        samples_checked: seen.len(),
        fixing_non_units: fixing,
    })
}

/// One class `k` with representative `a_k` and the inverse pairing.
#[derive(Debug, Clone)]
pub struct KSummand<E, I> {
    pub class: usize,
    pub representative: I,
    /// `(R : a_k)`.
    pub colon_inverse: I,
    /// Generator of the principal product `a_k • (R : a_k)`.
    pub product_generator: Option<E>,
    /// `(R : a_k)` is equivalent to the representative of the inverse class.
    pub inverse_class: usize,
    pub inverse_class_checked: bool,
    pub stabilizer: StabilizerReport<E>,
}

#[derive(Debug, Clone)]
pub struct KDecomposition<E, I> {
    pub class_group: ClassGroup<I>,
    pub summands: Vec<KSummand<E, I>>,
    /// `(k, a_k)` for the left regular algebra.
    pub left: Vec<(usize, I)>,
    /// `(k, a_{k^-1})` for the right regular algebra.
    pub right: Vec<(usize, I)>,
    pub index_sets_coincide: bool,
}

pub fn ktheory_decomposition<R: Dedekind>(
    ring: &R,
    bound: u64,
    samples: usize,
) -> Result<KDecomposition<R::Elem, R::Ideal>> {
    let cg = class_group(ring, bound)?;
    let unit = ring.unit_ideal();
    let mut summands = Vec::new();
    for (k, rep) in cg.representatives.iter().enumerate() {
        let colon_inverse = ring.colon(&unit, rep);
        let product = divisorial_closure(ring, &ring.ideal_mul(rep, &colon_inverse));
        let inverse_class = cg.inverse[k];
        let inverse_class_checked = classgroup::equivalent(ring, &colon_inverse, &cg.representatives[inverse_class]);
        summands.push(KSummand {
            class: k,
            representative: rep.clone(),
            colon_inverse,
            product_generator: ring.is_principal(&product),
            inverse_class,
            inverse_class_checked,
            stabilizer: orbit_stabilizer(ring, rep, samples)?,
        });
    }
    let left = cg.representatives.iter().cloned().enumerate().collect();
    let right = (0..cg.order as usize).map(|k| (k, cg.representatives[cg.inverse[k]].clone())).collect();
    let mut targets: Vec<usize> = cg.inverse.clone();
    targets.sort_unstable();
    let index_sets_coincide = targets == (0..cg.order as usize).collect::<Vec<_>>();
    Ok(KDecomposition { class_group: cg, summands, left, right, index_sets_coincide })
}
