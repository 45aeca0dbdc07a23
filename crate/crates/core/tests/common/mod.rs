#![allow(dead_code)]

use idealis_core::krull::Dedekind;
use idealis_core::ring::{Domain, Integers, PolyRing, PrimeField, QuadraticOrder, Rationals};
use proptest::test_runner::{Config, TestCaseError, TestRunner};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn gaussian() -> QuadraticOrder {
    QuadraticOrder::new(-1, 1).unwrap()
}

pub fn sqrt_minus_five() -> QuadraticOrder {
    QuadraticOrder::new(-5, 1).unwrap()
}

pub fn z_i_sqrt3() -> QuadraticOrder {
    QuadraticOrder::new(-3, 2).unwrap()
}

pub fn fp_t(p: u64) -> PolyRing<PrimeField> {
    PolyRing::new(PrimeField::new(p).unwrap())
}

pub fn q_t() -> PolyRing<Rationals> {
    PolyRing::new(Rationals)
}

/// Runs a seeded property `cases` times through proptest.
pub fn run(cases: u32, body: impl Fn(u64) -> Result<(), TestCaseError>) {
    let mut runner = TestRunner::new(Config { cases, failure_persistence: None, ..Config::default() });
    runner.run(&proptest::prelude::any::<u64>(), body).unwrap();
}

/// A fixed prefix of the ring's element enumeration to draw from.
pub struct Pool<E> {
    pub elems: Vec<E>,
}

impl<E: Clone> Pool<E> {
    pub fn new<R: Domain<Elem = E>>(ring: &R, size: usize) -> Self {
        Pool { elems: ring.elements(size) }
    }

    pub fn any(&self, rng: &mut impl Rng) -> E {
        self.elems[rng.gen_range(0..self.elems.len())].clone()
    }

    pub fn get(&self, k: usize) -> E {
        self.elems[k % self.elems.len()].clone()
    }

    pub fn nonzero(&self, rng: &mut impl Rng) -> E {
        // index 0 is zero in every enumeration
        self.elems[rng.gen_range(1..self.elems.len())].clone()
    }
}

/// A random nonzero fraction `x / y` of pool elements.
pub fn fraction<R: Domain>(ring: &R, pool: &Pool<R::Elem>, rng: &mut impl Rng) -> R::Elem {
    ring.div(&pool.nonzero(rng), &pool.nonzero(rng)).unwrap()
}

/// A random fractional ideal generated by one or two fractions.
pub fn random_ideal<R: Domain>(ring: &R, pool: &Pool<R::Elem>, rng: &mut impl Rng) -> R::Ideal {
    let mut gens = vec![fraction(ring, pool, rng)];
    if rng.gen_bool(0.5) {
        gens.push(fraction(ring, pool, rng));
    }
    ring.ideal(&gens).unwrap()
}

/// A random integral ideal generated by one or two nonzero elements.
pub fn random_integral_ideal<R: Domain>(ring: &R, pool: &Pool<R::Elem>, rng: &mut impl Rng) -> R::Ideal {
    let mut gens = vec![pool.nonzero(rng)];
    if rng.gen_bool(0.5) {
        gens.push(pool.nonzero(rng));
    }
    ring.ideal(&gens).unwrap()
}

/// Runs `f` on every Dedekind ring of the test suite.
#[macro_export]
macro_rules! for_dedekind_rings {
    (|$r:ident, $name:ident| $body:block) => {{
        {
            let $r = &idealis_core::ring::Integers;
            let $name = "Z";
            $body
        }
        {
            let $r = &common::gaussian();
            let $name = "Z[i]";
            $body
        }
        {
            let $r = &common::sqrt_minus_five();
            let $name = "O(Q(sqrt -5))";
            $body
        }
        {
            let $r = &common::fp_t(2);
            let $name = "F2[t]";
            $body
        }
        {
            let $r = &common::fp_t(3);
            let $name = "F3[t]";
            $body
        }
        {
            let $r = &common::q_t();
            let $name = "Q[t]";
            $body
        }
    }};
}

pub fn is_dedekind<R: Dedekind>(r: &R) -> bool {
    r.require_dedekind().is_ok()
}

pub fn integers() -> Integers {
    Integers
}

/// Coordinates `(x, y)` of an integral element `x + yθ`.
pub fn coords(x: &idealis_core::ring::QuadElem) -> (i128, i128) {
    use num_traits::ToPrimitive;
    assert!(x.den == 1.into(), "integral element expected");
    (x.a.to_i128().unwrap(), x.b.to_i128().unwrap())
}

/// A full-rank sublattice of `Z²` in the echelon form `aZ(1, 0) + Z(b, c)`,
/// reduced from spanning vectors by plain integer elimination.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Lattice2 {
    pub a: i128,
    pub b: i128,
    pub c: i128,
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

impl Lattice2 {
    pub fn span(vs: &[(i128, i128)]) -> Lattice2 {
        let mut vs: Vec<(i128, i128)> = vs.to_vec();
        loop {
            let live: Vec<usize> = (0..vs.len()).filter(|&k| vs[k].1 != 0).collect();
            if live.len() <= 1 {
                break;
            }
            let pivot = *live.iter().min_by_key(|&&k| vs[k].1.abs()).unwrap();
            let (px, py) = vs[pivot];
            for &k in &live {
                if k != pivot {
                    let q = vs[k].1.div_euclid(py);
                    vs[k] = (vs[k].0 - q * px, vs[k].1 - q * py);
                }
            }
        }
        let (mut b, mut c) = vs.iter().copied().find(|v| v.1 != 0).expect("full rank");
        if c < 0 {
            b = -b;
            c = -c;
        }
        let a = vs.iter().filter(|v| v.1 == 0).fold(0, |g, v| gcd(g, v.0));
        assert!(a > 0, "full rank");
        Lattice2 { a, b: b.rem_euclid(a), c }
    }

    /// The ideal of an order with `θ² = tθ − n` generated by integral elements.
    pub fn ideal(t: i128, n: i128, gens: &[(i128, i128)]) -> Lattice2 {
        let mut vs = Vec::new();
        for &(x, y) in gens {
            vs.push((x, y));
            vs.push((-y * n, x + y * t));
        }
        Lattice2::span(&vs)
    }

    pub fn contains(&self, (x, y): (i128, i128)) -> bool {
        y % self.c == 0 && (x - (y / self.c) * self.b) % self.a == 0
    }

    pub fn det(&self) -> i128 {
        self.a * self.c
    }
}

pub mod criteria;
