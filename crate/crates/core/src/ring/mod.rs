//! Ground rings: exact element arithmetic in the quotient field, global
//! predicates, and fractional-ideal arithmetic behind one trait.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use num_bigint::BigUint;
use num_traits::One;

use crate::error::Result;

pub mod euclid;
pub mod field;
pub mod integers;
pub mod lattice;
pub mod poly;
pub mod quadratic;

pub use euclid::{Euclidean, Frac, PrincipalIdeal};
pub use field::{PolyBase, PrimeField, Rationals};
pub use integers::Integers;
pub use lattice::Hnf;
pub use poly::PolyRing;
pub use quadratic::{LatticeIdeal, QuadElem, QuadraticOrder};

/// Base field of a univariate polynomial ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BaseField {
    Rationals,
    PrimeField(u64),
}

/// One of the supported ground-ring classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RingDescriptor {
    Integers,
    /// `Z + f*O_K` inside `K = Q(sqrt d)`.
    QuadraticOrder { d: i64, conductor: u64 },
    Poly { base: BaseField },
}

impl fmt::Display for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingDescriptor::Integers => write!(f, "Z"),
            RingDescriptor::QuadraticOrder { d, conductor: 1 } => {
                write!(f, "maximal order of Q(sqrt({d}))")
            }
            RingDescriptor::QuadraticOrder { d, conductor } => {
                write!(f, "order of conductor {conductor} in Q(sqrt({d}))")
            }
            RingDescriptor::Poly { base: BaseField::Rationals } => write!(f, "Q[t]"),
            RingDescriptor::Poly { base: BaseField::PrimeField(p) } => write!(f, "F_{p}[t]"),
        }
    }
}

#[cfg(feature = "serde")]
impl serde::Serialize for RingDescriptor {
    fn serialize<S: serde::Serializer>(&self, s: S) -> core::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut m = s.serialize_map(None)?;
        match self {
            RingDescriptor::Integers => m.serialize_entry("kind", "integers")?,
            RingDescriptor::QuadraticOrder { d, conductor } => {
                m.serialize_entry("kind", "quadratic_order")?;
                m.serialize_entry("d", d)?;
                m.serialize_entry("conductor", conductor)?;
            }
            RingDescriptor::Poly { base } => {
                m.serialize_entry("kind", "poly")?;
                match base {
                    BaseField::Rationals => m.serialize_entry("base", "Q")?,
                    BaseField::PrimeField(p) => {
                        m.serialize_entry("base", "Fp")?;
                        m.serialize_entry("p", p)?;
                    }
                }
            }
        }
        m.end()
    }
}

/// Group index `[J : I]`, possibly infinite.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Index {
    Finite(BigUint),
    Infinite,
}

impl Index {
    pub fn one() -> Self {
        Index::Finite(BigUint::one())
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Index::Finite(_))
    }

    pub fn finite(&self) -> Option<&BigUint> {
        match self {
            Index::Finite(n) => Some(n),
            Index::Infinite => None,
        }
    }

    /// True when the index is finite and at most `bound`.
    pub fn at_most(&self, bound: u64) -> bool {
        matches!(self, Index::Finite(n) if *n <= BigUint::from(bound))
    }

    pub fn mul(&self, other: &Index) -> Index {
        match (self, other) {
            (Index::Finite(a), Index::Finite(b)) => Index::Finite(a * b),
            _ => Index::Infinite,
        }
    }
}

impl fmt::Display for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Index::Finite(n) => write!(f, "{n}"),
            Index::Infinite => write!(f, "infinite"),
        }
    }
}

#[cfg(feature = "serde")]
impl serde::Serialize for Index {
    fn serialize<S: serde::Serializer>(&self, s: S) -> core::result::Result<S::Ok, S::Error> {
        match self {
            Index::Finite(n) => match num_traits::ToPrimitive::to_u64(n) {
                Some(v) => s.serialize_u64(v),
                None => s.collect_str(n),
            },
            Index::Infinite => s.serialize_str("infinite"),
        }
    }
}

/// Shape of the unit group `R*`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum UnitTag {
    Trivial,
    Order2,
    Order4,
    Order6,
    BaseFieldUnits,
}

/// Exact description of `R*`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitGroupInfo<E> {
    pub tag: UnitTag,
    pub generators: Vec<E>,
    /// `None` when the group is infinite (`Q*` inside `Q[t]`).
    pub order: Option<u64>,
}

impl<E> UnitGroupInfo<E> {
    pub fn is_finite(&self) -> bool {
        self.order.is_some()
    }
}

/// A boolean with a one-line justification.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Justified {
    pub value: bool,
    pub why: String,
}

impl Justified {
    pub fn new(value: bool, why: impl Into<String>) -> Self {
        Justified { value, why: why.into() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct RingPredicates {
    pub is_field: Justified,
    pub contains_infinite_field: Justified,
    pub jacobson_radical_zero: Justified,
    pub is_integrally_closed: Justified,
    pub is_noetherian: Justified,
    pub is_dedekind: Justified,
}

/// A countable integral domain `R` with quotient field `Q`.
///
/// Elements (`Elem`) live in `Q`; membership in `R` is `is_integral`.
/// Ideals are nonzero fractional ideals in a canonical form, so `==` is
/// ideal equality.
pub trait Domain: Clone + fmt::Debug + Send + Sync {
    type Elem: Clone + Eq + Ord + fmt::Debug + Send + Sync;
    type Ideal: Clone + Eq + Ord + fmt::Debug + Send + Sync;

    fn descriptor(&self) -> RingDescriptor;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_int(&self, n: i64) -> Self::Elem;
    fn add(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn neg(&self, x: &Self::Elem) -> Self::Elem;
    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    /// Inverse in `Q`; `None` for zero.
    fn inv(&self, x: &Self::Elem) -> Option<Self::Elem>;

    fn sub(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        self.add(x, &self.neg(y))
    }

    fn is_zero(&self, x: &Self::Elem) -> bool {
        *x == self.zero()
    }

    /// Exact division in `Q`.
    fn div(&self, x: &Self::Elem, y: &Self::Elem) -> Result<Self::Elem> {
        let yi = self.inv(y).ok_or(crate::Error::DivisionByZero)?;
        Ok(self.mul(x, &yi))
    }

    /// Membership in `R`.
    fn is_integral(&self, x: &Self::Elem) -> bool;
    fn is_unit(&self, x: &Self::Elem) -> bool;
    fn unit_group(&self) -> Result<UnitGroupInfo<Self::Elem>>;
    fn predicates(&self) -> RingPredicates;

    /// The first `count` elements of `R` in a fixed enumeration starting with 0.
    fn elements(&self, count: usize) -> Vec<Self::Elem>;
    fn fmt_elem(&self, x: &Self::Elem) -> String;

    /// Smallest fractional ideal containing `gens`.
    fn ideal(&self, gens: &[Self::Elem]) -> Result<Self::Ideal>;
    fn unit_ideal(&self) -> Self::Ideal {
        self.ideal(&[self.one()]).expect("unit ideal")
    }
    fn principal(&self, x: &Self::Elem) -> Result<Self::Ideal> {
        self.ideal(core::slice::from_ref(x))
    }
    /// Generators: a Z-basis for lattice ideals, the generator for principal ones.
    fn ideal_basis(&self, i: &Self::Ideal) -> Vec<Self::Elem>;
    fn ideal_mul(&self, i: &Self::Ideal, j: &Self::Ideal) -> Self::Ideal;
    fn ideal_sum(&self, i: &Self::Ideal, j: &Self::Ideal) -> Self::Ideal;
    fn intersect(&self, i: &Self::Ideal, j: &Self::Ideal) -> Self::Ideal;
    /// `(I : J) = { x in Q : xJ ⊆ I }`.
    fn colon(&self, i: &Self::Ideal, j: &Self::Ideal) -> Self::Ideal;
    fn contains(&self, i: &Self::Ideal, x: &Self::Elem) -> bool;
    /// `x * I` for nonzero `x`.
    fn scale(&self, x: &Self::Elem, i: &Self::Ideal) -> Result<Self::Ideal>;

    fn is_subset(&self, i: &Self::Ideal, j: &Self::Ideal) -> bool {
        self.ideal_basis(i).iter().all(|b| self.contains(j, b))
    }
    fn is_integral_ideal(&self, i: &Self::Ideal) -> bool {
        self.is_subset(i, &self.unit_ideal())
    }

    /// `[J : I]` for `I ⊆ J`.
    fn index(&self, j: &Self::Ideal, i: &Self::Ideal) -> Result<Index>;
    /// Representatives of `J / I`, elements of `J`; requires finite index.
    fn coset_reps(&self, j: &Self::Ideal, i: &Self::Ideal) -> Result<Vec<Self::Elem>>;
    /// Canonical representative of `x + I` for `x in R`, `I` integral.
    fn reduce(&self, x: &Self::Elem, i: &Self::Ideal) -> Self::Elem;
    /// The first `count` elements of `I` in a fixed enumeration starting with 0.
    fn ideal_elements(&self, i: &Self::Ideal, count: usize) -> Vec<Self::Elem>;
    /// A generator when `I` is principal.
    fn is_principal(&self, i: &Self::Ideal) -> Option<Self::Elem>;

    /// Nonzero integral elements whose principal ideals have enumeration
    /// weight at most `bound`, one per ideal.
    fn principal_generators(&self, bound: u64) -> Vec<Self::Elem>;
    /// Enumeration weight of an integral ideal: `[R : I]` when finite, a
    /// height-box measure otherwise; `None` outside the measured box.
    fn ideal_weight(&self, i: &Self::Ideal) -> Option<BigUint>;

    fn fmt_ideal(&self, i: &Self::Ideal) -> String;
}

/// Pairs of integers in a fixed spiral order: shells of growing max-norm.
pub(crate) fn zz_pairs(count: usize) -> Vec<(i64, i64)> {
    let mut out = Vec::with_capacity(count);
    if count == 0 {
        return out;
    }
    out.push((0, 0));
    let mut k: i64 = 1;
    while out.len() < count {
        let mut shell = Vec::new();
        for i in -k..=k {
            for j in -k..=k {
                if i.abs().max(j.abs()) == k {
                    shell.push((i, j));
                }
            }
        }
        shell.sort_by_key(|&(i, j)| (i.abs() + j.abs(), i.abs(), i < 0, j.abs(), j < 0));
        for p in shell {
            if out.len() == count {
                break;
            }
            out.push(p);
        }
        k += 1;
    }
    out
}

/// Integers in the order 0, 1, -1, 2, -2, ...
pub(crate) fn nth_integer(n: u64) -> i64 {
    if n == 0 {
        0
    } else if n % 2 == 1 {
        n.div_ceil(2) as i64
    } else {
        -((n / 2) as i64)
    }
}
