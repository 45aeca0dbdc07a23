//! Runtime choice of ring.

use idealis_core::ring::{Integers, PolyRing, PrimeField, QuadraticOrder, Rationals, RingDescriptor, BaseField};
use idealis_core::{Error, Result};
use serde_json::Value;

#[derive(Debug, Clone)]
pub enum AnyRing {
    Integers(Integers),
    Quadratic(QuadraticOrder),
    RationalPoly(PolyRing<Rationals>),
    FpPoly(PolyRing<PrimeField>),
}

/// Runs `$body` with `$r` bound to the concrete ring inside `$any`.
#[macro_export]
macro_rules! with_ring {
    ($any:expr, $r:ident => $body:expr) => {
        match $any {
            $crate::any::AnyRing::Integers($r) => $body,
            $crate::any::AnyRing::Quadratic($r) => $body,
            $crate::any::AnyRing::RationalPoly($r) => $body,
            $crate::any::AnyRing::FpPoly($r) => $body,
        }
    };
}

impl AnyRing {
    pub fn from_descriptor(d: RingDescriptor) -> Result<Self> {
        Ok(match d {
            RingDescriptor::Integers => AnyRing::Integers(Integers),
            RingDescriptor::QuadraticOrder { d, conductor } => AnyRing::Quadratic(QuadraticOrder::new(d, conductor)?),
            RingDescriptor::Poly { base: BaseField::Rationals } => AnyRing::RationalPoly(PolyRing::new(Rationals)),
            RingDescriptor::Poly { base: BaseField::PrimeField(p) } => AnyRing::FpPoly(PolyRing::new(PrimeField::new(p)?)),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        Self::from_descriptor(parse_descriptor(v)?)
    }

    pub fn descriptor(&self) -> RingDescriptor {
        with_ring!(self, r => idealis_core::ring::Domain::descriptor(r))
    }
}

fn int_field(v: &Value, key: &str) -> Result<i64> {
    v.get(key)
        .and_then(Value::as_i64)
        .ok_or_else(|| Error::InvalidDescriptor(format!("missing integer field \"{key}\" in {v}")))
}

/// Accepts `{"kind":"integers"}`, `{"kind":"quadratic_order","d":..,"conductor":..}`,
/// `{"kind":"poly","base":"Q"}` and `{"kind":"poly","base":"Fp","p":..}`.
pub fn parse_descriptor(v: &Value) -> Result<RingDescriptor> {
    let kind = v
        .get("kind")
        .and_then(Value::as_str)
        .ok_or_else(|| Error::InvalidDescriptor(format!("missing \"kind\" in {v}")))?;
    match kind {
        "integers" => Ok(RingDescriptor::Integers),
        "quadratic_order" | "quadratic-order" => {
            let d = int_field(v, "d")?;
            let f = v.get("conductor").map_or(Ok(1), |_| int_field(v, "conductor"))?;
            let conductor = u64::try_from(f).map_err(|_| Error::InvalidDescriptor(format!("conductor {f} must be positive")))?;
            Ok(RingDescriptor::QuadraticOrder { d, conductor })
        }
        "poly" | "polynomial-ring" => match v.get("base").and_then(Value::as_str) {
            Some("Q" | "rationals") => Ok(RingDescriptor::Poly { base: BaseField::Rationals }),
            Some("Fp" | "prime-field") => {
                let p = int_field(v, "p")?;
                let p = u64::try_from(p).map_err(|_| Error::InvalidDescriptor(format!("{p} is not a prime")))?;
                Ok(RingDescriptor::Poly { base: BaseField::PrimeField(p) })
            }
            _ => Err(Error::UnsupportedRing(format!("polynomial base in {v}"))),
        },
        other => Err(Error::UnsupportedRing(format!("ring kind \"{other}\""))),
    }
}
