//! The independence condition: exact cover tests, a bounded search for
//! counterexamples and the lift of a ring-level cover to the semigroup.

use alloc::vec::Vec;
use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::ideal::{enumerate_constructible, not_inside, ConstructibleFamily};
use crate::ring::{Domain, Index};

/// Outcome of a cover test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverTest<E> {
    pub covered: bool,
    /// An element of `I` in none of the parts, when not covered.
    pub uncovered: Option<E>,
    /// Parts of infinite index in `I` that were set aside.
    pub dropped_infinite: usize,
}

fn index_in<R: Domain>(ring: &R, i: &R::Ideal, j: &R::Ideal) -> Index {
    ring.index(i, j).expect("checked containment")
}

/// Is `x + A` contained in the union of `parts`?  Returns a point of `x + A`
/// outside all parts otherwise.
fn coset_uncovered<R: Domain>(ring: &R, x: &R::Elem, a: &R::Ideal, parts: &[R::Ideal]) -> Option<R::Elem> {
    // parts that miss x + A entirely are irrelevant: (x + A) ∩ J ≠ ∅ iff x ∈ A + J
    let live: Vec<&R::Ideal> = parts.iter().filter(|j| ring.contains(&ring.ideal_sum(a, j), x)).collect();
    let Some((first, rest)) = live.split_first() else {
        return Some(x.clone());
    };
    let rest: Vec<R::Ideal> = rest.iter().map(|j| (*j).clone()).collect();
    let sub = ring.intersect(a, first);
    let reps = ring.coset_reps(a, &sub).expect("finite index");
    for r in reps {
        let y = ring.add(x, &r);
        if ring.contains(first, &y) {
            continue;
        }
        if let Some(u) = coset_uncovered(ring, &y, &sub, &rest) {
            return Some(u);
        }
    }
    None
}

/// Decides `I = ∪ parts` exactly.
pub fn is_union_cover<R: Domain>(ring: &R, i: &R::Ideal, parts: &[R::Ideal]) -> Result<CoverTest<R::Elem>> {
    for p in parts {
        if !ring.is_subset(p, i) {
            return Err(not_inside(ring, p, i));
        }
    }
    if parts.iter().any(|p| p == i) {
        return Ok(CoverTest { covered: true, uncovered: None, dropped_infinite: 0 });
    }
    let mut finite: Vec<(BigUint, R::Ideal)> = Vec::new();
    let mut dropped = 0;
    for p in parts {
        match index_in(ring, i, p) {
            Index::Finite(n) => finite.push((n, p.clone())),
            Index::Infinite => dropped += 1,
        }
    }
    finite.sort();
    let ordered: Vec<R::Ideal> = finite.into_iter().map(|(_, p)| p).collect();
    let uncovered = coset_uncovered(ring, &ring.zero(), i, &ordered);
    Ok(CoverTest { covered: uncovered.is_none(), uncovered, dropped_infinite: dropped })
}

/// Reference implementation: scan every coset of `∩ parts` in `I`.
pub fn is_union_cover_by_scan<R: Domain>(ring: &R, i: &R::Ideal, parts: &[R::Ideal]) -> Result<bool> {
    if parts.is_empty() {
        return Ok(false);
    }
    let l = parts[1..].iter().fold(parts[0].clone(), |acc, p| ring.intersect(&acc, p));
    let reps = ring.coset_reps(i, &l)?;
    Ok(reps.iter().all(|r| parts.iter().any(|p| ring.contains(p, r))))
}

/// A constructible ideal written as a union of strictly smaller ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndependenceWitness<E, I> {
    pub ideal: I,
    pub parts: Vec<I>,
    /// `∩ parts`.
    pub intersection: I,
    /// Each coset representative of `I / ∩ parts` with the index of a part containing it.
    pub certificate: Vec<(E, usize)>,
}

impl<E, I> IndependenceWitness<E, I> {
    pub fn cover_size<R: Domain<Elem = E, Ideal = I>>(&self, ring: &R) -> BigUint {
        self.parts
            .iter()
            .map(|p| ring.index(&self.ideal, p).ok().and_then(|n| n.finite().cloned()).unwrap_or_default())
            .sum()
    }
}

/// Builds the coset certificate for a cover; `None` if some coset escapes.
pub fn certify_cover<R: Domain>(
    ring: &R,
    i: &R::Ideal,
    parts: &[R::Ideal],
) -> Result<Option<IndependenceWitness<R::Elem, R::Ideal>>> {
    let l = parts[1..].iter().fold(parts[0].clone(), |acc, p| ring.intersect(&acc, p));
    let mut cert = Vec::new();
    for r in ring.coset_reps(i, &l)? {
        match parts.iter().position(|p| ring.contains(p, &r)) {
            Some(k) => cert.push((r, k)),
            None => return Ok(None),
        }
    }
    Ok(Some(IndependenceWitness { ideal: i.clone(), parts: parts.to_vec(), intersection: l, certificate: cert }))
}

/// Re-checks a witness from scratch: parts proper, certificate complete and correct.
pub fn verify_witness<R: Domain>(ring: &R, w: &IndependenceWitness<R::Elem, R::Ideal>) -> bool {
    if w.parts.len() < 2 || w.parts.iter().any(|p| !ring.is_subset(p, &w.ideal) || *p == w.ideal) {
        return false;
    }
    let l = w.parts[1..].iter().fold(w.parts[0].clone(), |acc, p| ring.intersect(&acc, p));
    if l != w.intersection {
        return false;
    }
    let Ok(Index::Finite(n)) = ring.index(&w.ideal, &l) else {
        return false;
    };
    if BigUint::from(w.certificate.len()) != n {
        return false;
    }
    let mut seen = alloc::collections::BTreeSet::new();
    for (r, k) in &w.certificate {
        if !ring.contains(&w.ideal, r) || *k >= w.parts.len() || !ring.contains(&w.parts[*k], r) {
            return false;
        }
        let mut key = r.clone();
        // pairwise incongruent mod L: compare by a canonical residue when integral
        if ring.is_integral_ideal(&l) && ring.is_integral(r) {
            key = ring.reduce(r, &l);
        }
        if !seen.insert(key) {
            return false;
        }
    }
    true
}

#[derive(Debug, Clone)]
pub enum Verdict<E, I> {
    IndependentUpToBound {
        bound: u64,
        ideals_checked: usize,
        /// Containments of infinite index that were set aside.
        infinite_index_parts: usize,
    },
    Witness(IndependenceWitness<E, I>),
}

impl<E, I> Verdict<E, I> {
    pub fn is_independent(&self) -> bool {
        matches!(self, Verdict::IndependentUpToBound { .. })
    }

    pub fn witness(&self) -> Option<&IndependenceWitness<E, I>> {
        match self {
            Verdict::Witness(w) => Some(w),
            _ => None,
        }
    }
}

#[derive(Debug, Clone)]
pub struct IndependenceReport<E, I> {
    pub verdict: Verdict<E, I>,
    pub family: ConstructibleFamily<I>,
}

/// Maximal proper subideals of `I` within the family.
fn maximal_subideals<R: Domain>(ring: &R, i: &R::Ideal, family: &[R::Ideal]) -> Vec<R::Ideal> {
    let proper: Vec<&R::Ideal> = family.iter().filter(|j| *j != i && ring.is_subset(j, i)).collect();
    proper
        .iter()
        .filter(|j| !proper.iter().any(|k| k != *j && ring.is_subset(j, k)))
        .map(|j| (*j).clone())
        .collect()
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(cur.clone());
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < n - k + i {
                cur[i] += 1;
                for j in i + 1..k {
                    cur[j] = cur[j - 1] + 1;
                }
                break;
            }
        }
    }
}

type Rank<I> = (usize, BigUint, BigUint, I, Vec<I>);

/// Smallest cover of `I` by the given pairwise incomparable candidates,
/// minimizing (number of parts, largest index).
fn minimal_cover<R: Domain>(ring: &R, i: &R::Ideal, cands: &[R::Ideal]) -> Option<(Rank<R::Ideal>, IndependenceWitness<R::Elem, R::Ideal>)> {
    let idx: Vec<BigUint> = cands
        .iter()
        .map(|c| index_in(ring, i, c).finite().cloned().expect("finite index candidates"))
        .collect();
    let weight = ring.ideal_weight(i).unwrap_or_default();
    for k in 2..=cands.len() {
        let mut best: Option<(Rank<R::Ideal>, IndependenceWitness<R::Elem, R::Ideal>)> = None;
        for combo in combinations(cands.len(), k) {
            let parts: Vec<R::Ideal> = combo.iter().map(|&c| cands[c].clone()).collect();
            let test = is_union_cover(ring, i, &parts).expect("parts inside");
            if !test.covered {
                continue;
            }
            let w = certify_cover(ring, i, &parts).expect("finite").expect("exact cover certifies");
            let max_idx = combo.iter().map(|&c| idx[c].clone()).max().expect("nonempty");
            let mut sorted = parts.clone();
            sorted.sort();
            let rank = (k, max_idx, weight.clone(), i.clone(), sorted);
            if best.as_ref().is_none_or(|(b, _)| rank < *b) {
                best = Some((rank, w));
            }
        }
        if best.is_some() {
            return best;
        }
    }
    None
}

/// Searches the bounded constructible family for an ideal that is a finite
/// union of strictly smaller constructible ideals.
pub fn independence_check<R: Domain>(ring: &R, bound: u64) -> IndependenceReport<R::Elem, R::Ideal> {
    let family = enumerate_constructible(ring, bound);
    let mut best: Option<(Rank<R::Ideal>, IndependenceWitness<R::Elem, R::Ideal>)> = None;
    let mut infinite = 0;
    for i in &family.ideals {
        let mut cands = maximal_subideals(ring, i, &family.ideals);
        let before = cands.len();
        cands.retain(|c| index_in(ring, i, c).is_finite());
        infinite += before - cands.len();
        if cands.len() < 2 {
            continue;
        }
        // a cover by some candidates exists iff all maximal candidates cover
        let test = is_union_cover(ring, i, &cands).expect("candidates inside");
        if !test.covered {
            continue;
        }
        if let Some((rank, w)) = minimal_cover(ring, i, &cands) {
            if best.as_ref().is_none_or(|(b, _)| rank < *b) {
                best = Some((rank, w));
            }
        }
    }
    let verdict = match best {
        Some((_, w)) => Verdict::Witness(w),
        None => Verdict::IndependentUpToBound { bound, ideals_checked: family.ideals.len(), infinite_index_parts: infinite },
    };
    IndependenceReport { verdict, family }
}

/// `(r + I) × I×` with `I` integral.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetIdeal<E, I> {
    pub r: E,
    pub ideal: I,
}

#[derive(Debug, Clone)]
pub struct SemigroupCover<E, I> {
    pub pieces: Vec<CosetIdeal<E, I>>,
    /// Sampled pairs `(x, a)` of `I × I×` checked against the union.
    pub samples_checked: usize,
    pub verified: bool,
}

/// `I × I× = ∪_i ∪_{r ∈ I/I_i} (r + I_i) × I_i×`, with a sampled membership check.
pub fn lift_to_semigroup_cover<R: Domain>(
    ring: &R,
    w: &IndependenceWitness<R::Elem, R::Ideal>,
    samples: usize,
) -> Result<SemigroupCover<R::Elem, R::Ideal>> {
    let trivial = w.parts.len() == 1 && w.parts[0] == w.ideal;
    if !trivial && !verify_witness(ring, w) {
        return Err(Error::Uncertified("coset certificate does not re-verify".into()));
    }
    let mut pieces = Vec::new();
    for p in &w.parts {
        for r in ring.coset_reps(&w.ideal, p)? {
            pieces.push(CosetIdeal { r, ideal: p.clone() });
        }
    }
    let side = num_integer::Roots::sqrt(&samples) + 1;
    let xs = ring.ideal_elements(&w.ideal, side);
    let as_: Vec<R::Elem> = ring.ideal_elements(&w.ideal, side + 1).into_iter().filter(|a| !ring.is_zero(a)).collect();
    let mut checked = 0;
    let mut ok = pieces.iter().all(|c| ring.contains(&w.ideal, &c.r) && ring.is_subset(&c.ideal, &w.ideal));
    for x in &xs {
        for a in &as_ {
            checked += 1;
            let hit = pieces
                .iter()
                .any(|c| ring.contains(&c.ideal, a) && ring.contains(&c.ideal, &ring.sub(x, &c.r)));
            ok &= hit;
        }
    }
    Ok(SemigroupCover { pieces, samples_checked: checked, verified: ok })
}
