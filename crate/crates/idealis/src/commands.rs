//! Each subcommand as a function from parsed inputs to a JSON value.

use idealis_core::independence::{independence_check, lift_to_semigroup_cover, verify_witness, IndependenceWitness, Verdict};
use idealis_core::krull::{self, classify_prime, DivisorVector, PrimeHeightOne};
use idealis_core::spectrum::{self, CharacterAtLevel, LevelFunction};
use idealis_core::witness::pi_hypothesis_witness;
use idealis_core::{Error, Result};
use serde_json::{json, Value};

use crate::codec::{exponent_map, ideal_from_json, prime_from_key, prime_to_json, Codec};

fn divisor_json<R: Codec>(v: &DivisorVector<R::Ideal>) -> Value {
    Value::Array(v.entries.iter().map(|(p, e)| json!([p.label, e])).collect())
}

pub fn witness_json<R: Codec>(r: &R, w: &IndependenceWitness<R::Elem, R::Ideal>) -> Value {
    json!({
        "ideal": r.ideal_to_json(&w.ideal),
        "parts": w.parts.iter().map(|p| r.ideal_to_json(p)).collect::<Vec<_>>(),
        "intersection": r.ideal_to_json(&w.intersection),
        "certificate": w.certificate.iter().map(|(x, k)| json!({ "residue": r.elem_to_json(x), "part": k })).collect::<Vec<_>>(),
        "cover_size": w.cover_size(r).to_string(),
        "verified": verify_witness(r, w),
    })
}

/// The verdict, and the witness on its own for `--emit-witness`.
pub fn independence<R: Codec>(r: &R, bound: u64, samples: usize) -> Result<(Value, Option<Value>)> {
    let rep = independence_check(r, bound);
    let family = json!({
        "size": rep.family.ideals.len(),
        "rounds": rep.family.rounds,
        "generators": rep.family.generator_count,
        "note": rep.family.note,
    });
    Ok(match &rep.verdict {
        Verdict::IndependentUpToBound { bound, ideals_checked, infinite_index_parts } => (
            json!({
                "verdict": "independent-up-to-bound",
                "bound": bound,
                "ideals_checked": ideals_checked,
                "infinite_index_parts": infinite_index_parts,
                "family": family,
            }),
            None,
        ),
        Verdict::Witness(w) => {
            let cover = lift_to_semigroup_cover(r, w, samples)?;
            let wj = witness_json(r, w);
            (
                json!({
                    "verdict": "witness",
                    "bound": bound,
                    "witness": wj,
                    "semigroup_cover": {
                        "pieces": cover.pieces.len(),
                        "samples_checked": cover.samples_checked,
                        "verified": cover.verified,
                    },
                    "family": family,
                }),
                Some(wj),
            )
        }
    })
}

pub fn factor<R: Codec>(r: &R, ideal: Option<&Value>, elem: Option<&Value>) -> Result<Value> {
    let (input, i) = match (ideal, elem) {
        (Some(v), None) => (v.clone(), ideal_from_json(r, v)?),
        (None, Some(v)) => (v.clone(), r.principal(&r.elem_from_json(v)?)?),
        _ => return Err(Error::Parse("give exactly one of --ideal and --elem".into())),
    };
    let f = krull::factor_divisorial(r, &i)?;
    let back = krull::recompose(r, &f);
    Ok(json!({
        "input": input,
        "ideal": r.ideal_to_json(&i),
        "factorization": divisor_json::<R>(&f),
        "recomposed": r.ideal_to_json(&back),
        "round_trip": back == idealis_core::ideal::divisorial_closure(r, &i),
    }))
}

pub fn approx<R: Codec>(r: &R, prescription: &Value, bound: u64) -> Result<Value> {
    let entries = prescription
        .as_array()
        .ok_or_else(|| Error::Parse(format!("expected [[prime, exponent], ...], found {prescription}")))?;
    let mut pres: Vec<(PrimeHeightOne<R::Ideal>, i64)> = Vec::new();
    for e in entries {
        let (Some(key), Some(n)) = (e.get(0).and_then(Value::as_str), e.get(1).and_then(Value::as_i64)) else {
            return Err(Error::Parse(format!("expected [prime, exponent], found {e}")));
        };
        pres.push((prime_from_key(r, key, bound)?, n));
    }
    let a = krull::approximate(r, &pres)?;
    Ok(json!({
        "prescription": pres.iter().map(|(p, n)| json!([p.label, n])).collect::<Vec<_>>(),
        "element": r.elem_to_json(&a.element),
        "display": r.fmt_elem(&a.element),
        "factorization": divisor_json::<R>(&a.factorization),
    }))
}

pub fn classgroup<R: Codec>(r: &R, bound: u64) -> Result<Value> {
    let cg = krull::class_group(r, bound)?;
    let forms = cg.forms.as_ref().map(|f| {
        json!({
            "discriminant": f.discriminant.to_string(),
            "reduced_forms": f.reduced_forms.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "invariants": f.invariants,
            "representative_forms": f.representative_forms.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "primes_compared": f.primes_compared,
            "agrees": f.agrees(),
        })
    });
    Ok(json!({
        "order": cg.order,
        "invariants": cg.invariants,
        "representatives": cg.representatives.iter().map(|i| r.ideal_to_json(i)).collect::<Vec<_>>(),
        "inverse": cg.inverse,
        "table": cg.table,
        "reduction_bound": cg.reduction_bound,
        "forms": forms,
    }))
}

pub fn primes<R: Codec>(r: &R, bound: u64, max_i: u32) -> Result<Value> {
    let mut out = Vec::new();
    for p in krull::primes_up_to(r, bound)? {
        let class = classify_prime(r, &p, max_i)?;
        let mut v = prime_to_json(r, &p);
        v["kind"] = serde_json::to_value(class.kind).expect("serializable");
        v["indices"] = json!(class.indices.iter().map(ToString::to_string).collect::<Vec<_>>());
        v["persistence"] = json!(class.persistence);
        out.push(v);
    }
    Ok(Value::Array(out))
}

pub fn ktheory<R: Codec>(r: &R, bound: u64, samples: usize) -> Result<Value> {
    let kd = krull::ktheory_decomposition(r, bound, samples)?;
    let summands: Vec<Value> = kd
        .summands
        .iter()
        .map(|s| {
            json!({
                "class": s.class,
                "representative": r.ideal_to_json(&s.representative),
                "colon_inverse": r.ideal_to_json(&s.colon_inverse),
                "product_generator": s.product_generator.as_ref().map(|g| r.elem_to_json(g)),
                "inverse_class": s.inverse_class,
                "inverse_class_checked": s.inverse_class_checked,
                "stabilizer": {
                    "equals_unit_group": s.stabilizer.equals_unit_group(),
                    "units_checked": s.stabilizer.units_checked,
                    "samples_checked": s.stabilizer.samples_checked,
                    "fixing_non_units": s.stabilizer.fixing_non_units.iter().map(|a| r.elem_to_json(a)).collect::<Vec<_>>(),
                },
            })
        })
        .collect();
    let side = |v: &[(usize, R::Ideal)]| v.iter().map(|(k, i)| json!([k, r.ideal_to_json(i)])).collect::<Vec<_>>();
    Ok(json!({
        "class_group_order": kd.class_group.order,
        "summands": summands,
        "left": side(&kd.left),
        "right": side(&kd.right),
        "index_sets_coincide": kd.index_sets_coincide,
    }))
}

/// Parses `{label: exponent}` into a level function.
pub fn parse_level<R: Codec>(r: &R, v: &Value, bound: u64) -> Result<LevelFunction<R::Ideal>> {
    let m = v.as_object().ok_or_else(|| Error::Parse(format!("expected a map prime -> exponent, found {v}")))?;
    let mut entries = Vec::new();
    for (k, e) in m {
        let e = e.as_u64().and_then(|e| u32::try_from(e).ok()).ok_or_else(|| Error::Parse(format!("bad exponent {e}")))?;
        entries.push((prime_from_key(r, k, bound)?, e));
    }
    LevelFunction::new(entries)
}

pub fn character_json<R: Codec>(r: &R, chi: &CharacterAtLevel<R::Elem, R::Ideal>) -> Value {
    json!({
        "component": r.elem_to_json(&chi.component),
        "level": exponent_map(&chi.level.entries),
        "ideal": r.ideal_to_json(&chi.ideal),
        "residue": r.elem_to_json(&chi.residue),
    })
}

pub fn spectrum_level<R: Codec>(r: &R, level: &LevelFunction<R::Ideal>) -> Result<Value> {
    let ideals = spectrum::ideals_at_level(r, level)?;
    let chars = spectrum::spec_level(r, level)?;
    Ok(json!({
        "level": exponent_map(&level.entries),
        "ideals": ideals.iter().map(|i| r.ideal_to_json(i)).collect::<Vec<_>>(),
        "size": chars.len(),
        "characters": chars.iter().map(|c| character_json(r, c)).collect::<Vec<_>>(),
    }))
}

pub struct CharacterInput<'a> {
    pub level: &'a Value,
    pub residue: &'a Value,
    pub ideal: &'a Value,
    pub component: Option<&'a Value>,
}

pub fn parse_character<R: Codec>(r: &R, c: &CharacterInput<'_>, bound: u64) -> Result<CharacterAtLevel<R::Elem, R::Ideal>> {
    let level = parse_level(r, c.level, bound)?;
    let mut chi = spectrum::character(r, &level, &r.elem_from_json(c.residue)?, &ideal_from_json(r, c.ideal)?)?;
    if let Some(a) = c.component {
        chi.component = r.elem_from_json(a)?;
        if r.is_zero(&chi.component) {
            return Err(Error::ZeroElement);
        }
    }
    Ok(chi)
}

pub fn spectrum_project<R: Codec>(r: &R, c: &CharacterInput<'_>, to: &Value, bound: u64) -> Result<Value> {
    let chi = parse_character(r, c, bound)?;
    let m = parse_level(r, to, bound)?;
    Ok(character_json(r, &spectrum::project(r, &chi, &m)?))
}

pub fn spectrum_act<R: Codec>(r: &R, c: &CharacterInput<'_>, [x, w, cc]: [&Value; 3], bound: u64) -> Result<Value> {
    let chi = parse_character(r, c, bound)?;
    let moved = spectrum::act(r, &chi, &r.elem_from_json(x)?, &r.elem_from_json(w)?, &r.elem_from_json(cc)?)?;
    Ok(character_json(r, &moved))
}

pub fn spectrum_chain<R: Codec>(r: &R, group_size: usize, s: &[String], window_bound: u64) -> Result<Value> {
    let window = krull::primes_up_to(r, window_bound)?;
    let s_primes = s.iter().map(|k| prime_from_key(r, k, window_bound)).collect::<Result<Vec<_>>>()?;
    let group = spectrum::group_enumeration(r, group_size);
    let chain = spectrum::trivial_stabilizer_chain(r, &group, &window, &s_primes)?;
    let links: Vec<Value> = chain
        .links
        .iter()
        .map(|l| {
            json!({
                "group_element": [r.elem_to_json(&l.b), r.elem_to_json(&l.a)],
                "residue": r.elem_to_json(&l.r),
                "ideal": r.ideal_to_json(&l.ideal),
                "pivot": chain.window[l.pivot].label,
            })
        })
        .collect();
    Ok(json!({
        "window": chain.window.iter().map(|p| p.label.clone()).collect::<Vec<_>>(),
        "s": chain.s_members.iter().map(|&k| chain.window[k].label.clone()).collect::<Vec<_>>(),
        "links": links,
        "checks": {
            "disjoint_and_nested": chain.disjointness_checked,
            "valuations_along_s": chain.valuations_checked,
            "frozen_outside_s": chain.frozen_checked,
        },
    }))
}

type Pair<E> = ((E, E), (E, E));

fn parse_pairs<R: Codec>(r: &R, v: &Value) -> Result<Vec<Pair<R::Elem>>> {
    let bad = || Error::Parse(format!("expected [[[b, a], [b', a']], ...], found {v}"));
    let arr = v.as_array().ok_or_else(bad)?;
    arr.iter()
        .map(|p| {
            let g = |k: usize, j: usize| -> Result<R::Elem> { r.elem_from_json(p.get(k).and_then(|x| x.get(j)).ok_or_else(bad)?) };
            Ok(((g(0, 0)?, g(0, 1)?), (g(1, 0)?, g(1, 1)?)))
        })
        .collect()
}

pub fn pi<R: Codec>(r: &R, ideal: &Value, pairs: &Value, search_limit: usize) -> Result<Value> {
    let i = ideal_from_json(r, ideal)?;
    let pairs = parse_pairs(r, pairs)?;
    let w = pi_hypothesis_witness(r, &i, &pairs, search_limit)?;
    let e = |x: &R::Elem| r.elem_to_json(x);
    Ok(json!({
        "ideal": r.ideal_to_json(&w.ideal),
        "b": e(&w.b),
        "a": e(&w.a),
        "c": e(&w.c),
        "r1": e(&w.r1),
        "r2": e(&w.r2),
        "w": e(&w.w),
        "checks": serde_json::to_value(w.checks).expect("serializable"),
    }))
}
