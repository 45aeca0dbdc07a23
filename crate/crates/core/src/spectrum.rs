//! Finite truncations of the spectrum of the diagonal algebra: the ideal
//! sets at a level, characters `χ_{r+I}`, the projections between levels,
//! the level-shifting action, closures in a finite prime window, and the
//! chain behind characters with trivial stabilizer.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::krull::{self, classify_prime, prime_power, Dedekind, PrimeHeightOne, PrimeKind};
use crate::ring::Domain;

/// Finitely supported `m : P → N_0`, sorted by prime, zero entries dropped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelFunction<I> {
    pub entries: Vec<(PrimeHeightOne<I>, u32)>,
}

impl<I: Clone + Ord> LevelFunction<I> {
    pub fn new(mut entries: Vec<(PrimeHeightOne<I>, u32)>) -> Result<Self> {
        entries.retain(|(_, e)| *e > 0);
        entries.sort_by(|a, b| a.0.cmp(&b.0));
        if entries.windows(2).any(|w| w[0].0.ideal == w[1].0.ideal) {
            return Err(Error::DuplicatePrime(entries[0].0.label.clone()));
        }
        Ok(LevelFunction { entries })
    }

    pub fn zero() -> Self {
        LevelFunction { entries: Vec::new() }
    }

    pub fn get(&self, p: &I) -> u32 {
        self.entries.iter().find(|(q, _)| q.ideal == *p).map_or(0, |(_, e)| *e)
    }

    /// Pointwise `self ≤ other`.
    pub fn le(&self, other: &Self) -> bool {
        self.entries.iter().all(|(p, e)| *e <= other.get(&p.ideal))
    }

    /// Pointwise sum.
    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.entries.clone();
        for (p, e) in &other.entries {
            match out.iter_mut().find(|(q, _)| q.ideal == p.ideal) {
                Some(slot) => slot.1 += e,
                None => out.push((p.clone(), *e)),
            }
        }
        LevelFunction::new(out).expect("distinct primes")
    }
}

/// `χ_{r+I}` on the truncation at `level`, inside the component tagged `component`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterAtLevel<E, I> {
    pub level: LevelFunction<I>,
    pub ideal: I,
    pub residue: E,
    pub component: E,
}

/// `I_m`: all `∏ p^(v_p)` with `0 ≤ v_p ≤ m_p`, in lexicographic order of exponents.
pub fn ideals_at_level<R: Dedekind>(ring: &R, m: &LevelFunction<R::Ideal>) -> Result<Vec<R::Ideal>> {
    ring.require_dedekind()?;
    let mut out = Vec::new();
    let mut exps = alloc::vec![0u32; m.entries.len()];
    loop {
        let mut acc = ring.unit_ideal();
        for ((p, _), e) in m.entries.iter().zip(&exps) {
            acc = ring.ideal_mul(&acc, &prime_power(ring, &p.ideal, *e as i64));
        }
        out.push(acc);
        // odometer
        let mut k = exps.len();
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            if exps[k] < m.entries[k].1 {
                exps[k] += 1;
                break;
            }
            exps[k] = 0;
        }
    }
}

fn require_finite_window<R: Dedekind>(ring: &R, m: &LevelFunction<R::Ideal>) -> Result<()> {
    for (p, _) in &m.entries {
        if classify_prime(ring, p, 1)?.kind == PrimeKind::Inf {
            return Err(Error::Window(format!("{} has infinite residue ring", p.label)));
        }
    }
    Ok(())
}

/// The characters of the truncation at level `m`: `⊔_{I ∈ I_m} R/I`.
pub fn spec_level<R: Dedekind>(ring: &R, m: &LevelFunction<R::Ideal>) -> Result<Vec<CharacterAtLevel<R::Elem, R::Ideal>>> {
    require_finite_window(ring, m)?;
    let unit = ring.unit_ideal();
    let mut out = Vec::new();
    for i in ideals_at_level(ring, m)? {
        for r in ring.coset_reps(&unit, &i)? {
            out.push(CharacterAtLevel {
                level: m.clone(),
                residue: ring.reduce(&r, &i),
                ideal: i.clone(),
                component: ring.one(),
            });
        }
    }
    Ok(out)
}

pub fn character<R: Dedekind>(
    ring: &R,
    level: &LevelFunction<R::Ideal>,
    residue: &R::Elem,
    ideal: &R::Ideal,
) -> Result<CharacterAtLevel<R::Elem, R::Ideal>> {
    if !ring.is_integral(residue) {
        return Err(Error::NotIntegral(ring.fmt_elem(residue)));
    }
    if !ideals_at_level(ring, level)?.contains(ideal) {
        return Err(Error::LevelNotDominated(format!("{} is not in the ideal set of the level", ring.fmt_ideal(ideal))));
    }
    Ok(CharacterAtLevel { level: level.clone(), residue: ring.reduce(residue, ideal), ideal: ideal.clone(), component: ring.one() })
}

/// `π_{n,m}(r + I) = r + ∏_p p^(min(m_p, v_p(I)))`.
pub fn project<R: Dedekind>(
    ring: &R,
    chi: &CharacterAtLevel<R::Elem, R::Ideal>,
    m: &LevelFunction<R::Ideal>,
) -> Result<CharacterAtLevel<R::Elem, R::Ideal>> {
    if !m.le(&chi.level) {
        return Err(Error::LevelNotDominated(format!(
            "target level is not below the level of {}",
            ring.fmt_ideal(&chi.ideal)
        )));
    }
    let mut ideal = ring.unit_ideal();
    for (p, mp) in &m.entries {
        let v = ring.valuation_at(p, &chi.ideal).max(0) as u32;
        ideal = ring.ideal_mul(&ideal, &prime_power(ring, &p.ideal, (*mp).min(v) as i64));
    }
    Ok(CharacterAtLevel {
        level: m.clone(),
        residue: ring.reduce(&chi.residue, &ideal),
        ideal,
        component: chi.component.clone(),
    })
}

/// The action of `(z, y) = (c⁻¹x, c⁻¹w)` on `ι_a(χ)`: the result lies in
/// component `aw` and restricts to `χ_{−ax + cr + cI}` at level `m + v(c)`.
pub fn act<R: Dedekind>(
    ring: &R,
    chi: &CharacterAtLevel<R::Elem, R::Ideal>,
    x: &R::Elem,
    w: &R::Elem,
    c: &R::Elem,
) -> Result<CharacterAtLevel<R::Elem, R::Ideal>> {
    if ring.is_zero(c) || ring.is_zero(w) {
        return Err(Error::ZeroElement);
    }
    for e in [x, w, c] {
        if !ring.is_integral(e) {
            return Err(Error::NotIntegral(ring.fmt_elem(e)));
        }
    }
    let a = &chi.component;
    let shift = krull::factor_element(ring, c)?;
    let vc = LevelFunction::new(shift.entries.into_iter().map(|(p, e)| (p, e as u32)).collect())?;
    let ideal = ring.scale(c, &chi.ideal)?;
    let residue = ring.sub(&ring.mul(c, &chi.residue), &ring.mul(a, x));
    Ok(CharacterAtLevel {
        level: chi.level.add(&vc),
        residue: ring.reduce(&residue, &ideal),
        ideal,
        component: ring.mul(a, w),
    })
}

/// Whether `s` lies in the closure of `family` in the power-cofinite
/// topology restricted to `window`: some member is a subset of `s`.
pub fn closure_membership<T: Ord + core::fmt::Debug>(
    window: &BTreeSet<T>,
    s: &BTreeSet<T>,
    family: &[BTreeSet<T>],
) -> Result<bool> {
    for set in core::iter::once(s).chain(family) {
        if !set.is_subset(window) {
            return Err(Error::Window(format!("{set:?} is not inside the window")));
        }
    }
    Ok(family.iter().any(|t| t.is_subset(s)))
}

/// One link `r_i + I_i` of the chain, with the group element it separates.
#[derive(Debug, Clone)]
pub struct ChainLink<E, I> {
    pub b: E,
    pub a: E,
    pub r: E,
    pub ideal: I,
    /// `p_i`, the prime whose valuation was raised to separate.
    pub pivot: usize,
}

#[derive(Debug, Clone)]
pub struct StabilizerChain<E, I> {
    pub links: Vec<ChainLink<E, I>>,
    /// Window primes; `s_members` and link pivots index into it.
    pub window: Vec<PrimeHeightOne<I>>,
    pub s_members: Vec<usize>,
    /// True when the pivot is a single prime of infinite type.
    pub infinite_pivot: bool,
    pub disjointness_checked: bool,
    pub valuations_checked: bool,
    pub frozen_checked: bool,
}

/// Cosets `x + A` and `y + B` meet iff `y − x ∈ A + B`.
fn cosets_meet<R: Domain>(ring: &R, x: &R::Elem, a: &R::Ideal, y: &R::Elem, b: &R::Ideal) -> bool {
    ring.contains(&ring.ideal_sum(a, b), &ring.sub(y, x))
}

/// The decreasing chain `R ⊇ r_1 + I_1 ⊇ …` separating each group element
/// `(b_i, a_i)` from the identity, with `v_q(I_i) ≥ i` along `S` and valuations
/// frozen at the pivots outside `S`.
pub fn trivial_stabilizer_chain<R: Dedekind>(
    ring: &R,
    group: &[(R::Elem, R::Elem)],
    window: &[PrimeHeightOne<R::Ideal>],
    s: &[PrimeHeightOne<R::Ideal>],
) -> Result<StabilizerChain<R::Elem, R::Ideal>> {
    ring.require_dedekind()?;
    let s_members: Vec<usize> = s
        .iter()
        .map(|q| {
            window
                .iter()
                .position(|p| p.ideal == q.ideal)
                .ok_or_else(|| Error::Window(format!("{} is not in the window", q.label)))
        })
        .collect::<Result<_>>()?;
    let infinite_pivot = match window.first() {
        Some(p) => classify_prime(ring, p, 1)?.kind == PrimeKind::Inf,
        None => false,
    };
    if !infinite_pivot && window.len() < group.len() {
        return Err(Error::Window(format!(
            "{} group elements need {} distinct finite-type primes, the window has {}",
            group.len(),
            group.len(),
            window.len()
        )));
    }
    let one = ring.one();
    let mut r = ring.zero();
    let mut ideal = ring.unit_ideal();
    let mut links = Vec::new();
    for (k, (b, a)) in group.iter().enumerate() {
        let i = k as i64 + 1;
        if ring.is_zero(a) {
            return Err(Error::ZeroElement);
        }
        if ring.is_zero(b) && *a == one {
            return Err(Error::IdentityElement);
        }
        let pivot = if infinite_pivot { 0 } else { k };
        let p = &window[pivot];
        let threshold = if *a == one {
            ring.valuation_at(p, &ring.principal(b)?)
        } else {
            let am1 = ring.sub(a, &one);
            ring.valuation_at(p, &ring.principal(&am1)?)
                + ring.valuation_at(p, &ring.principal(a)?).abs()
                + ring.valuation_at(p, &ideal)
        };
        // targets: v_p(J) > threshold, v_q(J) ≥ i for the first i members of S
        let mut raise: Vec<(usize, i64)> = alloc::vec![(pivot, threshold + 1)];
        for &q in s_members.iter().take(k + 1) {
            match raise.iter_mut().find(|(t, _)| *t == q) {
                Some(slot) => slot.1 = slot.1.max(i),
                None => raise.push((q, i)),
            }
        }
        let mut j = ideal.clone();
        for (t, need) in raise {
            let have = ring.valuation_at(&window[t], &ideal);
            if need > have {
                j = ring.ideal_mul(&j, &prime_power(ring, &window[t].ideal, need - have));
            }
        }
        let s_new = if *a == one {
            r.clone()
        } else {
            // s in r + I outside −(a−1)⁻¹b + (a−1)⁻¹(J + aJ)
            let am1 = ring.sub(a, &one);
            let inv = ring.inv(&am1).expect("a ≠ 1");
            let k_ideal = ring.scale(&inv, &ring.ideal_sum(&j, &ring.scale(a, &j)?))?;
            let center = ring.neg(&ring.mul(&inv, b));
            find_outside(ring, &r, &ideal, &center, &k_ideal)?
        };
        r = s_new;
        ideal = j;
        links.push(ChainLink { b: b.clone(), a: a.clone(), r: r.clone(), ideal: ideal.clone(), pivot });
    }
    let mut chain = StabilizerChain {
        links,
        window: window.to_vec(),
        s_members,
        infinite_pivot,
        disjointness_checked: false,
        valuations_checked: false,
        frozen_checked: false,
    };
    let (d, v, f) = check_chain(ring, &chain);
    chain.disjointness_checked = d;
    chain.valuations_checked = v;
    chain.frozen_checked = f;
    if !(d && v && f) {
        return Err(Error::Uncertified("stabilizer chain failed its conditions".into()));
    }
    Ok(chain)
}

fn find_outside<R: Domain>(ring: &R, r: &R::Elem, i: &R::Ideal, center: &R::Elem, k: &R::Ideal) -> Result<R::Elem> {
    let mut count = 8;
    while count <= 1 << 14 {
        for y in ring.ideal_elements(i, count) {
            let s = ring.add(r, &y);
            if !ring.contains(k, &ring.sub(&s, center)) {
                return Ok(s);
            }
        }
        count *= 4;
    }
    Err(Error::SearchExhausted { what: "coset outside the excluded set".into(), bound: 1 << 14 })
}

/// Conditions of the chain: disjointness from the translate, valuations
/// along `S`, and frozen valuations at pivots outside `S`.
pub fn check_chain<R: Dedekind>(ring: &R, chain: &StabilizerChain<R::Elem, R::Ideal>) -> (bool, bool, bool) {
    let mut disjoint = true;
    let mut nested = true;
    let mut prev: (R::Elem, R::Ideal) = (ring.zero(), ring.unit_ideal());
    for link in &chain.links {
        let translate = ring.add(&link.b, &ring.mul(&link.a, &link.r));
        let scaled = ring.scale(&link.a, &link.ideal).expect("nonzero");
        disjoint &= !cosets_meet(ring, &link.r, &link.ideal, &translate, &scaled);
        nested &= ring.is_subset(&link.ideal, &prev.1) && ring.contains(&prev.1, &ring.sub(&link.r, &prev.0));
        prev = (link.r.clone(), link.ideal.clone());
    }
    let valuations = chain.links.iter().enumerate().all(|(k, link)| {
        chain.s_members.iter().take(k + 1).all(|&q| ring.valuation_at(&chain.window[q], &link.ideal) > k as i64)
    });
    let frozen = chain.infinite_pivot
        || chain.links.iter().enumerate().all(|(k, link)| {
            if chain.s_members.contains(&link.pivot) {
                return true;
            }
            let p = &chain.window[link.pivot];
            let v = ring.valuation_at(p, &link.ideal);
            chain.links[k..].iter().all(|later| ring.valuation_at(p, &later.ideal) == v)
        });
    (disjoint && nested, valuations, frozen)
}

/// The first `n` nontrivial elements `(b, a)` of `R ⋊ R×` built from small elements.
pub fn group_enumeration<R: Domain>(ring: &R, n: usize) -> Vec<(R::Elem, R::Elem)> {
    let mut side = 4;
    loop {
        let elems = ring.elements(side);
        let mut out = Vec::new();
        'diag: for s in 0..2 * side {
            for k in 0..=s {
                let (Some(b), Some(a)) = (elems.get(k), elems.get(s - k)) else { continue };
                if ring.is_zero(a) || (ring.is_zero(b) && *a == ring.one()) {
                    continue;
                }
                out.push((b.clone(), a.clone()));
                if out.len() == n {
                    break 'diag;
                }
            }
        }
        if out.len() == n {
            return out;
        }
        side *= 2;
    }
}
