//! Constructive witnesses for the pure-infiniteness criterion: given `I` and
//! pairs of distinct group elements, produce `b, a, c, r₁, r₂` following the
//! argument that works whenever `R` is not a field and has zero Jacobson
//! radical.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::ring::Domain;

/// A group element `(b, a)` of `R ⋊ R×`.
pub type GroupElem<E> = (E, E);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiWitness<E, I> {
    pub ideal: I,
    pub pairs: Vec<(GroupElem<E>, GroupElem<E>)>,
    pub b: E,
    pub a: E,
    pub c: E,
    pub r1: E,
    pub r2: E,
    /// `∏ ((b'_i − b_i) + (a'_i − a_i) b)`.
    pub w: E,
    pub checks: PiChecks,
}

/// Outcome of each of the six conditions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct PiChecks {
    pub b_in_ideal: bool,
    pub differences_nonzero: bool,
    pub a_in_one_plus_ideal: bool,
    pub differences_outside_a: bool,
    pub c_condition: bool,
    pub r_condition: bool,
}

impl PiChecks {
    pub fn all(&self) -> bool {
        self.b_in_ideal
            && self.differences_nonzero
            && self.a_in_one_plus_ideal
            && self.differences_outside_a
            && self.c_condition
            && self.r_condition
    }

    pub fn failed(&self) -> Vec<&'static str> {
        [
            (self.b_in_ideal, "b in I"),
            (self.differences_nonzero, "differences nonzero"),
            (self.a_in_one_plus_ideal, "a in 1 + I"),
            (self.differences_outside_a, "differences outside aR"),
            (self.c_condition, "c non-unit in 1 + I"),
            (self.r_condition, "r1, r2 in distinct cosets of cR"),
        ]
        .into_iter()
        .filter(|(ok, _)| !ok)
        .map(|(_, name)| name)
        .collect()
    }
}

fn difference<R: Domain>(ring: &R, pair: &(GroupElem<R::Elem>, GroupElem<R::Elem>), b: &R::Elem) -> R::Elem {
    let ((b0, a0), (b1, a1)) = pair;
    ring.add(&ring.sub(b1, b0), &ring.mul(&ring.sub(a1, a0), b))
}

/// Re-checks the six conditions through ideal membership alone.
pub fn check_pi_conditions<R: Domain>(
    ring: &R,
    i: &R::Ideal,
    pairs: &[(GroupElem<R::Elem>, GroupElem<R::Elem>)],
    [b, a, c, r1, r2]: [&R::Elem; 5],
) -> PiChecks {
    let unit = ring.unit_ideal();
    let one = ring.one();
    let in_r = |x: &R::Elem| ring.contains(&unit, x);
    let all_in_r = [b, a, c, r1, r2].into_iter().all(in_r);
    let ds: Vec<R::Elem> = pairs.iter().map(|p| difference(ring, p, b)).collect();
    let a_ideal = ring.principal(a).ok();
    let c_ideal = ring.principal(c).ok();
    PiChecks {
        b_in_ideal: all_in_r && ring.contains(i, b),
        differences_nonzero: ds.iter().all(|d| !ring.is_zero(d)),
        a_in_one_plus_ideal: a_ideal.is_some() && ring.contains(i, &ring.sub(a, &one)),
        differences_outside_a: a_ideal.as_ref().is_some_and(|aj| ds.iter().all(|d| !ring.contains(aj, d))),
        c_condition: c_ideal.as_ref().is_some_and(|cj| *cj != unit) && ring.contains(i, &ring.sub(c, &one)),
        r_condition: ring.contains(i, r1)
            && ring.contains(i, r2)
            && c_ideal.as_ref().is_some_and(|cj| !ring.contains(cj, &ring.sub(r1, r2))),
    }
}

fn first<R: Domain>(
    ring: &R,
    i: &R::Ideal,
    limit: usize,
    what: &str,
    ok: impl Fn(&R::Elem) -> bool,
) -> Result<R::Elem> {
    ring.ideal_elements(i, limit)
        .into_iter()
        .find(ok)
        .ok_or_else(|| Error::SearchExhausted { what: String::from(what), bound: limit as u64 })
}

/// Builds `b, a, c, r₁, r₂` for `I` and `pairs`, searching the first
/// `search_limit` elements of each ideal enumeration.
pub fn pi_hypothesis_witness<R: Domain>(
    ring: &R,
    i: &R::Ideal,
    pairs: &[(GroupElem<R::Elem>, GroupElem<R::Elem>)],
    search_limit: usize,
) -> Result<PiWitness<R::Elem, R::Ideal>> {
    let preds = ring.predicates();
    if preds.is_field.value {
        return Err(Error::IsField);
    }
    if !preds.jacobson_radical_zero.value {
        return Err(Error::RadicalNonzero);
    }
    if !ring.is_integral_ideal(i) {
        return Err(Error::NotIntegral(ring.fmt_ideal(i)));
    }
    for (g, h) in pairs {
        for x in [&g.0, &g.1, &h.0, &h.1] {
            if !ring.is_integral(x) {
                return Err(Error::NotIntegral(ring.fmt_elem(x)));
            }
        }
        if ring.is_zero(&g.1) || ring.is_zero(&h.1) {
            return Err(Error::ZeroElement);
        }
        if g == h {
            return Err(Error::InvalidDescriptor(format!(
                "pair ({}, {}) repeats the same group element",
                ring.fmt_elem(&g.0),
                ring.fmt_elem(&g.1)
            )));
        }
    }

    let b = first(ring, i, search_limit, "b in I avoiding the roots", |b| {
        pairs.iter().all(|p| !ring.is_zero(&difference(ring, p, b)))
    })?;
    let w = pairs.iter().fold(ring.one(), |acc, p| ring.mul(&acc, &difference(ring, p, &b)));
    let wi = ring.intersect(&ring.principal(&w)?, i);
    let one = ring.one();
    let non_unit = |x: &R::Elem| !ring.is_zero(x) && !ring.is_unit(x);
    let a = ring.add(
        &one,
        &first(ring, &wi, search_limit, "non-unit in 1 + (wR ∩ I)", |k| non_unit(&ring.add(&one, k)))?,
    );
    let c = ring.add(&one, &first(ring, i, search_limit, "non-unit in 1 + I", |k| non_unit(&ring.add(&one, k)))?);
    let c_ideal = ring.principal(&c)?;
    let r1 = ring.ideal_elements(i, 1).remove(0);
    let r2 = first(ring, i, search_limit, "r2 outside r1 + cR", |r| !ring.contains(&c_ideal, &ring.sub(&r1, r)))?;

    let checks = check_pi_conditions(ring, i, pairs, [&b, &a, &c, &r1, &r2]);
    if !checks.all() {
        return Err(Error::Uncertified(format!("conditions failed: {:?}", checks.failed())));
    }
    Ok(PiWitness { ideal: i.clone(), pairs: pairs.to_vec(), b, a, c, r1, r2, w, checks })
}
