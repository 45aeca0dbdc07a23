//! JSON encodings of ring descriptors, elements, ideals and primes.
//!
//! Elements:
//! * integers: a number, a decimal string, or `"a/b"`;
//! * quadratic orders: `[x, y]` for `x + yθ`, or `{"x": .., "y": .., "den": ..}`;
//! * polynomial rings: ascending coefficient arrays (`"a/b"` strings allowed over `Q`).
//!
//! Any element may also be written `{"num": .., "den": ..}`.
//!
//! Ideals: `{"repr": "principal", "gen": x}`, `{"repr": "generators", "gens": [..]}`
//! or `{"repr": "lattice", "num": [[a, b], [0, c]], "den": n}` with columns
//! the coordinate vectors of a `Z`-basis.

use idealis_core::krull::{Dedekind, PrimeHeightOne};
use idealis_core::ring::euclid::integral;
use idealis_core::ring::{
    Domain, Euclidean, Frac, Hnf, LatticeIdeal, PolyRing, PrimeField, PrincipalIdeal, QuadElem, QuadraticOrder,
    Rationals,
};
use idealis_core::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Map, Value};

use idealis_core::ring::poly::Poly;

fn parse_err(what: &str, v: &Value) -> Error {
    Error::Parse(format!("expected {what}, found {v}"))
}

pub fn big_from_json(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .or_else(|| n.as_u64().map(BigInt::from))
            .ok_or_else(|| parse_err("an integer", v)),
        Value::String(s) => s.trim().parse().map_err(|_| parse_err("an integer", v)),
        _ => Err(parse_err("an integer", v)),
    }
}

pub fn big_to_json(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(k) => json!(k),
        None => json!(n.to_string()),
    }
}

fn rational_from_json(v: &Value) -> Result<BigRational> {
    match v {
        Value::String(s) if s.contains('/') => {
            let (a, b) = s.split_once('/').expect("contains a slash");
            let num = big_from_json(&json!(a))?;
            let den = big_from_json(&json!(b))?;
            if den.is_zero() {
                return Err(Error::DivisionByZero);
            }
            Ok(BigRational::new(num, den))
        }
        _ => big_from_json(v).map(BigRational::from_integer),
    }
}

fn rational_to_json(q: &BigRational) -> Value {
    if q.is_integer() {
        big_to_json(q.numer())
    } else {
        json!(format!("{}/{}", q.numer(), q.denom()))
    }
}

/// Element and ideal encodings for one ring type.
pub trait Codec: Dedekind {
    fn elem_from_json(&self, v: &Value) -> Result<Self::Elem>;
    fn elem_to_json(&self, x: &Self::Elem) -> Value;
    fn ideal_to_json(&self, i: &Self::Ideal) -> Value;
    fn lattice_ideal(&self, _num: &Value, _den: &Value) -> Result<Self::Ideal> {
        Err(Error::Parse("lattice ideals are only defined for quadratic orders".into()))
    }
}

/// Ring-of-integers-side encoding for Euclidean rings.
pub trait BaseCodec: Euclidean {
    fn base_from_json(&self, v: &Value) -> Result<Self::E>;
    fn base_to_json(&self, e: &Self::E) -> Value;
}

impl BaseCodec for idealis_core::ring::Integers {
    fn base_from_json(&self, v: &Value) -> Result<BigInt> {
        big_from_json(v)
    }

    fn base_to_json(&self, e: &BigInt) -> Value {
        big_to_json(e)
    }
}

fn coefficient_list(v: &Value) -> Result<&Vec<Value>> {
    v.as_array().ok_or_else(|| parse_err("a coefficient array", v))
}

impl BaseCodec for PolyRing<Rationals> {
    fn base_from_json(&self, v: &Value) -> Result<Poly<BigRational>> {
        let cs = coefficient_list(v)?.iter().map(rational_from_json).collect::<Result<_>>()?;
        Ok(self.poly(cs))
    }

    fn base_to_json(&self, e: &Poly<BigRational>) -> Value {
        Value::Array(e.coeffs().iter().map(rational_to_json).collect())
    }
}

impl BaseCodec for PolyRing<PrimeField> {
    fn base_from_json(&self, v: &Value) -> Result<Poly<u64>> {
        let p = BigInt::from(self.base.p());
        let cs = coefficient_list(v)?
            .iter()
            .map(|c| {
                let r = ((big_from_json(c)? % &p) + &p) % &p;
                Ok(r.to_u64().expect("reduced mod p"))
            })
            .collect::<Result<_>>()?;
        Ok(self.poly(cs))
    }

    fn base_to_json(&self, e: &Poly<u64>) -> Value {
        json!(e.coeffs())
    }
}

impl<R: BaseCodec> Codec for R {
    fn elem_from_json(&self, v: &Value) -> Result<Frac<R::E>> {
        let (num, den) = match v {
            Value::Object(m) if m.contains_key("num") => {
                (self.base_from_json(&m["num"])?, m.get("den").map(|d| self.base_from_json(d)).transpose()?)
            }
            Value::String(s) if s.contains('/') => {
                let (a, b) = s.split_once('/').expect("contains a slash");
                (self.base_from_json(&json!(a))?, Some(self.base_from_json(&json!(b))?))
            }
            _ => (self.base_from_json(v)?, None),
        };
        let num = integral(self, num);
        match den {
            Some(d) => self.div(&num, &integral(self, d)),
            None => Ok(num),
        }
    }

    fn elem_to_json(&self, x: &Frac<R::E>) -> Value {
        if self.is_integral(x) {
            self.base_to_json(&x.num)
        } else {
            json!({ "num": self.base_to_json(&x.num), "den": self.base_to_json(&x.den) })
        }
    }

    fn ideal_to_json(&self, i: &PrincipalIdeal<R::E>) -> Value {
        json!({ "repr": "principal", "gen": self.elem_to_json(i.generator()), "display": self.fmt_ideal(i) })
    }
}

impl Codec for QuadraticOrder {
    fn elem_from_json(&self, v: &Value) -> Result<QuadElem> {
        let (x, y, den) = match v {
            Value::Array(xs) if xs.len() == 2 => (big_from_json(&xs[0])?, big_from_json(&xs[1])?, BigInt::one()),
            Value::Object(m) if m.contains_key("x") => {
                let get = |k: &str| m.get(k).map(big_from_json).transpose();
                (get("x")?.unwrap_or_default(), get("y")?.unwrap_or_default(), get("den")?.unwrap_or(BigInt::one()))
            }
            Value::Object(m) if m.contains_key("num") => {
                let num = self.elem_from_json(&m["num"])?;
                let den = m.get("den").map(|d| self.elem_from_json(d)).transpose()?.unwrap_or_else(|| self.one());
                return self.div(&num, &den);
            }
            _ => (big_from_json(v)?, BigInt::zero(), BigInt::one()),
        };
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.elem_big(x, y, den))
    }

    fn elem_to_json(&self, q: &QuadElem) -> Value {
        if q.den.is_one() {
            json!([big_to_json(&q.a), big_to_json(&q.b)])
        } else {
            json!({ "x": big_to_json(&q.a), "y": big_to_json(&q.b), "den": big_to_json(&q.den) })
        }
    }

    fn ideal_to_json(&self, i: &LatticeIdeal) -> Value {
        let h = &i.num;
        json!({
            "repr": "lattice",
            "num": [[big_to_json(&h.a), big_to_json(&h.b)], [0, big_to_json(&h.c)]],
            "den": big_to_json(&i.den),
            "display": self.fmt_ideal(i),
        })
    }

    fn lattice_ideal(&self, num: &Value, den: &Value) -> Result<LatticeIdeal> {
        let rows = num.as_array().filter(|r| r.len() == 2).ok_or_else(|| parse_err("a 2x2 matrix", num))?;
        let row = |k: usize| -> Result<Vec<BigInt>> {
            rows[k]
                .as_array()
                .filter(|r| r.len() == 2)
                .ok_or_else(|| parse_err("a matrix row of length 2", &rows[k]))?
                .iter()
                .map(big_from_json)
                .collect()
        };
        let (top, bottom) = (row(0)?, row(1)?);
        let den = big_from_json(den)?;
        if !bottom[0].is_zero() || !top[0].is_positive() || !bottom[1].is_positive() || !den.is_positive() {
            return Err(Error::Parse(format!("{num} / {den} is not a lattice in Hermite normal form")));
        }
        let h = Hnf::new(top[0].clone(), top[1].clone(), bottom[1].clone());
        let gens: Vec<QuadElem> =
            h.basis().into_iter().map(|(x, y)| self.elem_big(x, y, den.clone())).collect();
        let generated = self.ideal(&gens)?;
        // the lattice lies in the ideal it generates; equal covolume means equal
        let lhs = h.det() * &generated.den * &generated.den;
        let rhs = generated.num.det() * &den * &den;
        if lhs != rhs {
            return Err(Error::Parse(format!("{num} / {den} is not closed under multiplication by the order")));
        }
        Ok(generated)
    }
}

pub fn ideal_from_json<R: Codec>(r: &R, v: &Value) -> Result<R::Ideal> {
    let obj = v.as_object().ok_or_else(|| parse_err("an ideal object", v))?;
    match obj.get("repr").and_then(Value::as_str) {
        Some("principal") => {
            let g = obj.get("gen").ok_or_else(|| parse_err("a \"gen\" field", v))?;
            r.principal(&r.elem_from_json(g)?)
        }
        Some("generators") => {
            let gs = obj.get("gens").and_then(Value::as_array).ok_or_else(|| parse_err("a \"gens\" array", v))?;
            let gens = gs.iter().map(|g| r.elem_from_json(g)).collect::<Result<Vec<_>>>()?;
            r.ideal(&gens)
        }
        Some("lattice") => r.lattice_ideal(
            obj.get("num").ok_or_else(|| parse_err("a \"num\" matrix", v))?,
            obj.get("den").unwrap_or(&json!(1)),
        ),
        _ => Err(parse_err("repr principal, generators or lattice", v)),
    }
}

/// Finds a height-one prime by label (`"(2)"`, or `"2"` for `"(2)"`), or by
/// an ideal given as a JSON string.
pub fn prime_from_key<R: Codec>(r: &R, key: &str, bound: u64) -> Result<PrimeHeightOne<R::Ideal>> {
    let key = key.trim();
    if key.starts_with('{') {
        let v: Value = serde_json::from_str(key).map_err(|e| Error::Parse(e.to_string()))?;
        return r.prime_from_ideal(&ideal_from_json(r, &v)?);
    }
    let caps: Vec<u64> = if r.finite_residue_rings() { vec![bound.max(64), 4096] } else { vec![1, 2, 3] };
    let wrapped = format!("({key})");
    for cap in caps {
        if let Some(p) = r.height_one_primes(cap)?.into_iter().find(|p| p.label == key || p.label == wrapped) {
            return Ok(p);
        }
    }
    Err(Error::Parse(format!("no height-one prime labelled {key} within the search bounds")))
}

pub fn prime_to_json<R: Codec>(r: &R, p: &PrimeHeightOne<R::Ideal>) -> Value {
    json!({
        "label": p.label,
        "ideal": r.ideal_to_json(&p.ideal),
        "norm": serde_json::to_value(&p.norm).expect("serializable"),
        "residue_degree": p.residue_degree,
        "ramification": p.ramification,
        "certificate": p.certificate,
    })
}

/// `{label: exponent}` for a list of prime exponents.
pub fn exponent_map<I, T: Into<Value> + Copy>(entries: &[(PrimeHeightOne<I>, T)]) -> Value {
    let mut m = Map::new();
    for (p, e) in entries {
        m.insert(p.label.clone(), (*e).into());
    }
    Value::Object(m)
}
