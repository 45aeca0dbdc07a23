//! The per-ring structure report.
//!
//! Every claim is either backed by a finite certificate computed here or
//! marked as resting on a ring-class argument that is not re-proved.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write as _;

use crate::error::{Error, Result};
use crate::independence::{independence_check, verify_witness, Verdict};
use crate::krull::{self, classify_prime, Dedekind, PrimeKind};
use crate::ring::{BaseField, Domain, Index, RingDescriptor, RingPredicates, UnitTag};
use crate::witness::pi_hypothesis_witness;

pub const SCHEMA: &str = "idealis-report/1";

pub const CERTIFIED: &str = "certified";
pub const HYPOTHESIS_LEVEL: &str = "hypothesis-level, not re-proved";

/// Search bounds shared by every computation in a report.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Bounds {
    /// Norm bound for generators, constructible ideals, class groups and the prime window.
    pub norm: u64,
    /// Non-unit scalings sampled per stabilizer.
    pub samples: usize,
    /// Elements enumerated per witness search.
    pub search_limit: usize,
    /// Degree bound for the prime window when residue fields are infinite.
    pub window_degree: u64,
    /// Restricts the prime window to these labels when present.
    #[cfg_attr(feature = "serde", serde(skip_serializing_if = "Option::is_none"))]
    pub window: Option<Vec<String>>,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { norm: 24, samples: 10_000, search_limit: 4096, window_degree: 2, window: None }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Claim {
    /// `holds`, `fails` or `no-claim`.
    pub status: &'static str,
    pub statement: String,
    pub basis: &'static str,
    pub evidence: String,
}

impl Claim {
    fn new(status: &'static str, statement: impl Into<String>, basis: &'static str, evidence: impl Into<String>) -> Self {
        Claim { status, statement: statement.into(), basis, evidence: evidence.into() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct UnitSummary {
    pub tag: UnitTag,
    pub order: Option<u64>,
    pub generators: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct IndependenceSummary {
    pub independent: bool,
    pub bound: u64,
    pub family_size: usize,
    pub saturation_rounds: usize,
    pub witness: Option<CoverSummary>,
    pub claim: Claim,
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct CoverSummary {
    pub ideal: String,
    pub parts: Vec<String>,
    pub intersection: String,
    pub cosets: usize,
    pub cover_size: String,
    pub verified: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct ClassGroupSummary {
    pub order: u64,
    pub invariants: Vec<u64>,
    pub representatives: Vec<String>,
    pub reduction_bound: u64,
    /// Reduced forms agree with the ideal classes, for quadratic orders.
    pub forms_agree: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct SummandSummary {
    pub class: usize,
    pub representative: String,
    pub colon_inverse: String,
    pub product_generator: Option<String>,
    pub inverse_class: usize,
    pub inverse_class_checked: bool,
    pub stabilizer_equals_units: bool,
    pub units_checked: usize,
    pub samples_checked: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct KSummary {
    pub summands: Vec<SummandSummary>,
    /// `(class, representative)` for the left regular algebra.
    pub left: Vec<(usize, String)>,
    /// `(class, representative of the inverse class)` for the right one.
    pub right: Vec<(usize, String)>,
    pub index_sets_coincide: bool,
    pub claim: Claim,
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct WindowPrime {
    pub label: String,
    pub norm: String,
    pub residue_degree: u32,
    pub ramification: u32,
    pub kind: PrimeKind,
    pub indices: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct PrimeSummary {
    pub window: Vec<WindowPrime>,
    pub finite_count: usize,
    pub infinite_count: usize,
    /// Statement about all of `P_fin` and `P_inf`, from the ring class.
    pub class_level: Claim,
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct PiSummary {
    pub ideal: String,
    pub pairs: Vec<[String; 4]>,
    pub b: String,
    pub a: String,
    pub c: String,
    pub r1: String,
    pub r2: String,
    pub all_conditions: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct PureInfiniteness {
    pub witness: Option<PiSummary>,
    pub claim: Claim,
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Kirchberg {
    pub containments_checked: usize,
    pub infinite_index: usize,
    /// A proper containment of finite index, when one was found.
    pub finite_example: Option<String>,
    pub claim: Claim,
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct StructureReport {
    pub schema: &'static str,
    pub ring: RingDescriptor,
    pub ring_name: String,
    pub bounds: Bounds,
    pub predicates: RingPredicates,
    pub units: UnitSummary,
    pub independence: IndependenceSummary,
    pub krull: Claim,
    pub class_group: Option<ClassGroupSummary>,
    pub k_decomposition: Option<KSummary>,
    pub primes: Option<PrimeSummary>,
    pub primitive_ideals: Claim,
    pub pure_infiniteness: PureInfiniteness,
    pub kirchberg: Kirchberg,
    pub notes: Vec<String>,
}

fn independence_summary<R: Domain>(
    ring: &R,
    bounds: &Bounds,
) -> (IndependenceSummary, Vec<R::Ideal>) {
    let rep = independence_check(ring, bounds.norm);
    let family_size = rep.family.ideals.len();
    let (witness, claim) = match &rep.verdict {
        Verdict::IndependentUpToBound { bound, ideals_checked, infinite_index_parts } => (
            None,
            Claim::new(
                "holds",
                format!("no ideal of the constructible family is a union of proper members, up to bound {bound}"),
                CERTIFIED,
                format!("{ideals_checked} ideals checked exhaustively; {infinite_index_parts} infinite-index parts set aside"),
            ),
        ),
        Verdict::Witness(w) => {
            let verified = verify_witness(ring, w);
            let summary = CoverSummary {
                ideal: ring.fmt_ideal(&w.ideal),
                parts: w.parts.iter().map(|p| ring.fmt_ideal(p)).collect(),
                intersection: ring.fmt_ideal(&w.intersection),
                cosets: w.certificate.len(),
                cover_size: w.cover_size(ring).to_string(),
                verified,
            };
            let claim = Claim::new(
                "fails",
                format!("{} is the union of {} proper constructible subideals", summary.ideal, summary.parts.len()),
                CERTIFIED,
                format!("coset certificate over {} cosets of {}", summary.cosets, summary.intersection),
            );
            (Some(summary), claim)
        }
    };
    let summary = IndependenceSummary {
        independent: rep.verdict.is_independent(),
        bound: bounds.norm,
        family_size,
        saturation_rounds: rep.family.rounds,
        witness,
        claim,
    };
    (summary, rep.family.ideals)
}

/// Ring-class argument that `P_fin` is infinite or `P_inf` is all of `P`.
fn class_level_primes(desc: &RingDescriptor) -> Claim {
    let (statement, why) = match desc {
        RingDescriptor::Integers => ("P_fin is infinite and P_inf is empty", "Euclid: p_1 ⋯ p_n + 1 has a prime factor outside any finite list, and Z/p^i is finite"),
        RingDescriptor::Poly { base: BaseField::PrimeField(_) } => (
            "P_fin is infinite and P_inf is empty",
            "Euclid: g_1 ⋯ g_n + 1 has a monic irreducible factor outside any finite list, and F_p[t]/(g^i) is finite",
        ),
        RingDescriptor::Poly { base: BaseField::Rationals } => (
            "P_fin is empty and P_inf = P",
            "every residue field Q[t]/(g) contains Q, so each R/p^(i) is infinite",
        ),
        RingDescriptor::QuadraticOrder { .. } => (
            "P_fin is infinite and P_inf is empty",
            "each of the infinitely many rational primes has a prime above it, and every residue ring is a finite quotient of a lattice",
        ),
    };
    Claim::new("holds", statement, HYPOTHESIS_LEVEL, why)
}

fn prime_summary<R: Dedekind>(ring: &R, bounds: &Bounds) -> Result<PrimeSummary> {
    let cap = if ring.finite_residue_rings() { bounds.norm } else { bounds.window_degree };
    let mut primes = ring.height_one_primes(cap)?;
    if let Some(labels) = &bounds.window {
        primes.retain(|p| labels.iter().any(|l| *l == p.label || format!("({l})") == p.label));
    }
    let mut window = Vec::new();
    for p in &primes {
        let class = classify_prime(ring, p, 3)?;
        window.push(WindowPrime {
            label: p.label.clone(),
            norm: p.norm.to_string(),
            residue_degree: p.residue_degree,
            ramification: p.ramification,
            kind: class.kind,
            indices: class.indices.iter().map(Index::to_string).collect(),
        });
    }
    let finite_count = window.iter().filter(|w| w.kind == PrimeKind::Fin).count();
    Ok(PrimeSummary {
        infinite_count: window.len() - finite_count,
        finite_count,
        window,
        class_level: class_level_primes(&ring.descriptor()),
    })
}

fn k_summary<R: Dedekind>(ring: &R, bounds: &Bounds) -> Result<(ClassGroupSummary, KSummary)> {
    let kd = krull::ktheory_decomposition(ring, bounds.norm, bounds.samples)?;
    let cg = &kd.class_group;
    let class_group = ClassGroupSummary {
        order: cg.order,
        invariants: cg.invariants.clone(),
        representatives: cg.representatives.iter().map(|i| ring.fmt_ideal(i)).collect(),
        reduction_bound: cg.reduction_bound,
        forms_agree: cg.forms.as_ref().map(|f| f.agrees()),
    };
    let summands: Vec<SummandSummary> = kd
        .summands
        .iter()
        .map(|s| SummandSummary {
            class: s.class,
            representative: ring.fmt_ideal(&s.representative),
            colon_inverse: ring.fmt_ideal(&s.colon_inverse),
            product_generator: s.product_generator.as_ref().map(|g| ring.fmt_elem(g)),
            inverse_class: s.inverse_class,
            inverse_class_checked: s.inverse_class_checked,
            stabilizer_equals_units: s.stabilizer.equals_unit_group(),
            units_checked: s.stabilizer.units_checked,
            samples_checked: s.stabilizer.samples_checked,
        })
        .collect();
    let certified = summands
        .iter()
        .all(|s| s.product_generator.is_some() && s.inverse_class_checked && s.stabilizer_equals_units);
    let claim = Claim::new(
        if certified { "holds" } else { "no-claim" },
        format!(
            "K-theory splits over the {} divisor classes with summands a_k ⋊ R*; left and right index sets coincide",
            cg.order
        ),
        if certified { CERTIFIED } else { HYPOTHESIS_LEVEL },
        format!(
            "each a_k • (R : a_k) principal, (R : a_k) in the inverse class, stabilizer equal to R* on {} sampled scalings",
            bounds.samples
        ),
    );
    let ks = KSummary {
        summands,
        left: kd.left.iter().map(|(k, i)| (*k, ring.fmt_ideal(i))).collect(),
        right: kd.right.iter().map(|(k, i)| (*k, ring.fmt_ideal(i))).collect(),
        index_sets_coincide: kd.index_sets_coincide,
        claim,
    };
    Ok((class_group, ks))
}

fn primitive_claim(desc: &RingDescriptor, krull: bool, primes: Option<&PrimeSummary>) -> Claim {
    match (krull, primes) {
        (true, Some(p)) if p.finite_count == 0 && p.infinite_count > 0 => Claim::new(
            "holds",
            "P_fin is empty, so Prim is a single point: the algebra is simple",
            HYPOTHESIS_LEVEL,
            format!("{} window primes of infinite type; {}", p.infinite_count, p.class_level.evidence),
        ),
        (true, Some(p)) => Claim::new(
            "holds",
            "Prim ≅ 2^{P_fin} with the power-cofinite topology, ordered by inclusion",
            HYPOTHESIS_LEVEL,
            format!("Krull ring with {} window primes of finite type; {}", p.finite_count, p.class_level.evidence),
        ),
        _ => Claim::new(
            "no-claim",
            format!("{desc} is not a Krull ring; no description of Prim"),
            HYPOTHESIS_LEVEL,
            "requires a Krull ring",
        ),
    }
}

fn pure_infiniteness<R: Domain>(ring: &R, preds: &RingPredicates, bounds: &Bounds) -> Result<PureInfiniteness> {
    if preds.is_field.value || !preds.jacobson_radical_zero.value {
        return Ok(PureInfiniteness {
            witness: None,
            claim: Claim::new(
                "no-claim",
                "hypotheses fail: needs a non-field with zero Jacobson radical",
                HYPOTHESIS_LEVEL,
                format!("{}; {}", preds.is_field.why, preds.jacobson_radical_zero.why),
            ),
        });
    }
    let x = ring
        .elements(64)
        .into_iter()
        .find(|e| !ring.is_zero(e) && !ring.is_unit(e))
        .ok_or_else(|| Error::SearchExhausted { what: "non-unit".into(), bound: 64 })?;
    let i = ring.principal(&x)?;
    let (zero, one) = (ring.zero(), ring.one());
    let pairs = vec![
        ((zero.clone(), one.clone()), (one.clone(), one.clone())),
        ((zero.clone(), one.clone()), (zero, x)),
    ];
    let w = pi_hypothesis_witness(ring, &i, &pairs, bounds.search_limit)?;
    let show = |e: &R::Elem| ring.fmt_elem(e);
    let summary = PiSummary {
        ideal: ring.fmt_ideal(&w.ideal),
        pairs: w.pairs.iter().map(|((b, a), (b2, a2))| [show(b), show(a), show(b2), show(a2)]).collect(),
        b: show(&w.b),
        a: show(&w.a),
        c: show(&w.c),
        r1: show(&w.r1),
        r2: show(&w.r2),
        all_conditions: w.checks.all(),
    };
    Ok(PureInfiniteness {
        witness: Some(summary),
        claim: Claim::new(
            "holds",
            "not a field and zero Jacobson radical: purely infinite with the ideal property",
            HYPOTHESIS_LEVEL,
            format!(
                "{}; {}; sample witness passes all six conditions",
                preds.is_field.why, preds.jacobson_radical_zero.why
            ),
        ),
    })
}

fn kirchberg<R: Domain>(ring: &R, preds: &RingPredicates, family: &[R::Ideal]) -> Kirchberg {
    let mut checked = 0;
    let mut infinite = 0;
    let mut finite_example = None;
    for j in family {
        for i in family {
            if i == j || !ring.is_subset(i, j) {
                continue;
            }
            checked += 1;
            match ring.index(j, i) {
                Ok(Index::Infinite) => infinite += 1,
                Ok(Index::Finite(n)) => {
                    finite_example.get_or_insert_with(|| format!("[{} : {}] = {n}", ring.fmt_ideal(j), ring.fmt_ideal(i)));
                }
                Err(_) => {}
            }
        }
    }
    let claim = if preds.contains_infinite_field.value {
        Claim::new(
            "holds",
            "contains an infinite field: unital UCT Kirchberg algebra",
            HYPOTHESIS_LEVEL,
            format!(
                "{}; [J : I] infinite on all {checked} enumerated proper containments",
                preds.contains_infinite_field.why
            ),
        )
    } else if checked > 0 && infinite == checked {
        Claim::new(
            "holds",
            "[J : I] infinite on every enumerated proper containment",
            HYPOTHESIS_LEVEL,
            format!("{checked} containments checked; not a finite certificate for all of the family"),
        )
    } else {
        Claim::new(
            "no-claim",
            "no infinite subfield and some proper containment has finite index",
            CERTIFIED,
            finite_example.clone().unwrap_or_else(|| String::from("no proper containments enumerated")),
        )
    };
    Kirchberg { containments_checked: checked, infinite_index: infinite, finite_example, claim }
}

/// Computes the structure report for `ring` within `bounds`.
pub fn classify<R: Dedekind>(ring: &R, bounds: &Bounds) -> Result<StructureReport> {
    let desc = ring.descriptor();
    let preds = ring.predicates();
    let info = ring.unit_group()?;
    let units = UnitSummary {
        tag: info.tag,
        order: info.order,
        generators: info.generators.iter().map(|g| ring.fmt_elem(g)).collect(),
    };
    let (independence, family) = independence_summary(ring, bounds);
    let mut notes = Vec::new();
    let is_krull = ring.require_dedekind().is_ok();
    let krull = if is_krull {
        Claim::new("holds", "Dedekind domain, hence Krull", CERTIFIED, preds.is_dedekind.why.clone())
    } else {
        notes.push(String::from("Krull toolkit skipped: the ring is not integrally closed"));
        Claim::new("fails", "not a Krull ring", CERTIFIED, preds.is_integrally_closed.why.clone())
    };
    if !preds.is_integrally_closed.value {
        notes.push(String::from(
            "for orders in imaginary quadratic fields, independence holds if and only if R is integrally closed",
        ));
    }
    let (class_group, k_decomposition, primes) = if is_krull {
        let (cg, ks) = k_summary(ring, bounds)?;
        (Some(cg), Some(ks), Some(prime_summary(ring, bounds)?))
    } else {
        (None, None, None)
    };
    let primitive_ideals = primitive_claim(&desc, is_krull, primes.as_ref());
    let pure_infiniteness = pure_infiniteness(ring, &preds, bounds)?;
    let kirchberg = kirchberg(ring, &preds, &family);
    Ok(StructureReport {
        schema: SCHEMA,
        ring_name: desc.to_string(),
        ring: desc,
        bounds: bounds.clone(),
        predicates: preds,
        units,
        independence,
        krull,
        class_group,
        k_decomposition,
        primes,
        primitive_ideals,
        pure_infiniteness,
        kirchberg,
        notes,
    })
}

fn claim_line(out: &mut String, name: &str, c: &Claim) {
    let _ = writeln!(out, "{name}: {}; {}", c.status, c.statement);
    let _ = writeln!(out, "  [{}] {}", c.basis, c.evidence);
}

/// Plain-text rendering of a report.
pub fn render_text(r: &StructureReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} ({})", r.ring_name, r.schema);
    let _ = writeln!(
        out,
        "bounds: norm {}, samples {}, search limit {}, window degree {}",
        r.bounds.norm, r.bounds.samples, r.bounds.search_limit, r.bounds.window_degree
    );
    let _ = writeln!(out, "units: {:?}, generators [{}]", r.units.tag, r.units.generators.join(", "));
    claim_line(&mut out, "independence", &r.independence.claim);
    if let Some(w) = &r.independence.witness {
        let _ = writeln!(out, "  {} = {}", w.ideal, w.parts.join(" ∪ "));
    }
    claim_line(&mut out, "krull", &r.krull);
    if let Some(cg) = &r.class_group {
        let _ = writeln!(out, "class group: order {}, invariants {:?}, representatives [{}]", cg.order, cg.invariants, cg.representatives.join(", "));
    }
    if let Some(k) = &r.k_decomposition {
        claim_line(&mut out, "k-theory", &k.claim);
        let side = |v: &[(usize, String)]| v.iter().map(|(k, i)| format!("{k}:{i}")).collect::<Vec<_>>().join(", ");
        let _ = writeln!(out, "  left [{}]; right [{}]", side(&k.left), side(&k.right));
    }
    if let Some(p) = &r.primes {
        let _ = writeln!(out, "primes: {} finite-type, {} infinite-type in window", p.finite_count, p.infinite_count);
        for w in &p.window {
            let _ = writeln!(out, "  {} norm {} {:?} [{}]", w.label, w.norm, w.kind, w.indices.join(", "));
        }
        claim_line(&mut out, "prime classes", &p.class_level);
    }
    claim_line(&mut out, "primitive ideals", &r.primitive_ideals);
    claim_line(&mut out, "pure infiniteness", &r.pure_infiniteness.claim);
    if let Some(w) = &r.pure_infiniteness.witness {
        let _ = writeln!(out, "  I = {}: b = {}, a = {}, c = {}, r1 = {}, r2 = {}", w.ideal, w.b, w.a, w.c, w.r1, w.r2);
    }
    claim_line(&mut out, "kirchberg", &r.kirchberg.claim);
    for n in &r.notes {
        let _ = writeln!(out, "note: {n}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Integers, PolyRing, QuadraticOrder, Rationals};

    fn small() -> Bounds {
        Bounds { norm: 12, samples: 200, ..Bounds::default() }
    }

    #[test]
    fn integers_report() {
        let r = classify(&Integers, &small()).unwrap();
        assert!(r.independence.independent);
        assert_eq!(r.class_group.as_ref().unwrap().order, 1);
        assert_eq!(r.primitive_ideals.statement, "Prim ≅ 2^{P_fin} with the power-cofinite topology, ordered by inclusion");
        let w = r.pure_infiniteness.witness.as_ref().unwrap();
        assert!(w.all_conditions);
        assert_eq!(r.kirchberg.claim.status, "no-claim");
        assert_eq!(render_text(&r), render_text(&classify(&Integers, &small()).unwrap()));
    }

    #[test]
    fn rational_polynomials_are_simple_and_kirchberg() {
        let q = PolyRing::new(Rationals);
        let r = classify(&q, &small()).unwrap();
        let p = r.primes.as_ref().unwrap();
        assert_eq!(p.finite_count, 0);
        assert!(p.infinite_count > 0);
        assert!(r.primitive_ideals.statement.contains("simple"));
        assert_eq!(r.kirchberg.claim.status, "holds");
        assert_eq!(r.kirchberg.infinite_index, r.kirchberg.containments_checked);
    }

    #[test]
    fn non_maximal_order_skips_krull() {
        let o = QuadraticOrder::new(-3, 2).unwrap();
        let r = classify(&o, &Bounds { norm: 16, ..small() }).unwrap();
        assert!(!r.independence.independent);
        assert!(r.independence.witness.as_ref().unwrap().verified);
        assert!(r.class_group.is_none() && r.primes.is_none());
        assert_eq!(r.primitive_ideals.status, "no-claim");
        assert!(r.notes.iter().any(|n| n.contains("if and only if R is integrally closed")));
    }
}
