//! Class groups: ideal classes under principal equivalence, and for
//! imaginary quadratic fields an independent computation through reduced
//! binary quadratic forms.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};

use super::forms::{reduced_forms, Form};
use super::Dedekind;
use crate::arith::{factor_int, isqrt};
use crate::error::{Error, Result};
use crate::ring::{Domain, LatticeIdeal, QuadraticOrder};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassGroup<I> {
    pub order: u64,
    /// Invariant factors `d_1 | d_2 | …`; empty for the trivial group.
    pub invariants: Vec<u64>,
    /// One integral ideal per class, the principal class first.
    pub representatives: Vec<I>,
    pub inverse: Vec<usize>,
    /// `table[i][j]` is the class of `rep_i * rep_j`.
    pub table: Vec<Vec<usize>>,
    /// Norm bound below which prime ideals generate the group.
    pub reduction_bound: u64,
    pub forms: Option<FormsCheck>,
}

/// The group computed from reduced forms and its comparison with the ideal
/// classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormsCheck {
    pub discriminant: BigInt,
    pub reduced_forms: Vec<Form>,
    pub invariants: Vec<u64>,
    /// Reduced form of each ideal representative.
    pub representative_forms: Vec<Form>,
    pub primes_compared: usize,
    pub equivalence_agrees: bool,
    pub isomorphic: bool,
}

impl FormsCheck {
    pub fn agrees(&self) -> bool {
        self.equivalence_agrees && self.isomorphic
    }
}

impl<I> ClassGroup<I> {
    pub fn trivial(unit: I) -> Self {
        ClassGroup {
            order: 1,
            invariants: Vec::new(),
            representatives: vec![unit],
            inverse: vec![0],
            table: vec![vec![0]],
            reduction_bound: 0,
            forms: None,
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }
}

/// `I ~ J` when `(I : J)` is principal; exact for invertible `J`.
pub fn equivalent<R: Domain>(ring: &R, i: &R::Ideal, j: &R::Ideal) -> bool {
    ring.is_principal(&ring.colon(i, j)).is_some()
}

fn class_of<R: Domain>(ring: &R, reps: &[R::Ideal], x: &R::Ideal) -> Option<usize> {
    reps.iter().position(|r| equivalent(ring, x, r))
}

/// Closes `{R}` under multiplication by `gens` up to principal equivalence.
pub fn ideal_classes<R: Domain>(ring: &R, gens: &[R::Ideal]) -> (Vec<R::Ideal>, Vec<Vec<usize>>) {
    let mut reps = vec![ring.unit_ideal()];
    let mut k = 0;
    while k < reps.len() {
        for g in gens {
            let x = ring.ideal_mul(&reps[k], g);
            if class_of(ring, &reps, &x).is_none() {
                reps.push(x);
            }
        }
        k += 1;
    }
    let table = reps
        .iter()
        .map(|a| {
            reps.iter()
                .map(|b| class_of(ring, &reps, &ring.ideal_mul(a, b)).expect("closed under products"))
                .collect()
        })
        .collect();
    (reps, table)
}

/// Invariant factors of the finite abelian group with multiplication table
/// `table` and identity `0`.
pub fn abelian_invariants(table: &[Vec<usize>]) -> Vec<u64> {
    let n = table.len();
    let orders: Vec<u64> = (0..n)
        .map(|x| {
            let (mut y, mut k) = (x, 1);
            while y != 0 {
                y = table[y][x];
                k += 1;
            }
            k
        })
        .collect();
    // per prime: exponents of the cyclic p-factors, largest first
    let mut columns: Vec<(u64, Vec<u32>)> = Vec::new();
    for (p, _) in factor_int(&BigInt::from(n)) {
        let p = p.to_u64().expect("small");
        let mut counts = vec![1usize];
        let mut pk = 1u64;
        while *counts.last().expect("nonempty") < n {
            pk *= p;
            let c = orders.iter().filter(|o| pk.is_multiple_of(**o)).count();
            if c == *counts.last().expect("nonempty") {
                break;
            }
            counts.push(c);
        }
        // r_k = number of cyclic factors of order >= p^k
        let r: Vec<u32> = counts.windows(2).map(|w| ilog(p, (w[1] / w[0]) as u64)).collect();
        let mut exps = Vec::new();
        for (k, &rk) in r.iter().enumerate() {
            let next = r.get(k + 1).copied().unwrap_or(0);
            for _ in 0..(rk - next) {
                exps.push(k as u32 + 1);
            }
        }
        exps.sort_unstable_by(|a, b| b.cmp(a));
        columns.push((p, exps));
    }
    let width = columns.iter().map(|(_, e)| e.len()).max().unwrap_or(0);
    let mut out: Vec<u64> = (0..width)
        .map(|j| columns.iter().map(|(p, e)| e.get(j).map_or(1, |&x| p.pow(x))).product())
        .collect();
    out.reverse();
    out
}

fn ilog(p: u64, mut m: u64) -> u32 {
    let mut k = 0;
    while m > 1 {
        debug_assert!(m.is_multiple_of(p));
        m /= p;
        k += 1;
    }
    k
}

fn inverses(table: &[Vec<usize>]) -> Vec<usize> {
    (0..table.len()).map(|i| table[i].iter().position(|&c| c == 0).expect("group")).collect()
}

/// Norm bound `isqrt(49|D|/100)`, at least the Minkowski bound `(2/π)√|D|`.
pub fn reduction_bound(disc: &BigInt) -> u64 {
    isqrt(&(disc.abs() * 49 / 100)).to_u64().expect("small discriminant")
}

/// The reduced form attached to an integral ideal of a maximal order.
pub fn form_of_ideal(r: &QuadraticOrder, i: &LatticeIdeal) -> Form {
    let h = &i.num;
    debug_assert!(h.a.is_multiple_of(&h.c) && h.b.is_multiple_of(&h.c));
    let a = &h.a / &h.c;
    let b = &h.b / &h.c;
    let disc = r.discriminant();
    let shift: BigInt = b * 2 + r.trace_theta();
    Form::from_ab(a, -shift, &disc).reduce()
}

pub(crate) fn quadratic_class_group(r: &QuadraticOrder, bound: u64) -> Result<ClassGroup<LatticeIdeal>> {
    let disc = r.discriminant();
    let needed = reduction_bound(&disc);
    if bound < needed {
        return Err(Error::BoundTooSmall { required: needed, given: bound });
    }
    let gens: Vec<LatticeIdeal> = r.height_one_primes(needed)?.into_iter().map(|p| p.ideal).collect();
    let (reps, table) = ideal_classes(r, &gens);
    let invariants = abelian_invariants(&table);

    let forms = reduced_forms(&disc);
    let index_of = |f: &Form| forms.iter().position(|g| g == f).expect("reduced form of the discriminant");
    let ftable: Vec<Vec<usize>> =
        forms.iter().map(|x| forms.iter().map(|y| index_of(&x.compose(y))).collect()).collect();
    let finvariants = abelian_invariants(&ftable);

    let rep_forms: Vec<Form> = reps.iter().map(|i| form_of_ideal(r, i)).collect();
    let phi: Vec<usize> = rep_forms.iter().map(index_of).collect();
    let mut image = phi.clone();
    image.sort_unstable();
    image.dedup();
    let isomorphic = finvariants == invariants
        && image.len() == forms.len()
        && (0..reps.len()).all(|a| (0..reps.len()).all(|b| phi[table[a][b]] == ftable[phi[a]][phi[b]]));

    let primes = r.height_one_primes(bound)?;
    let ideal_cls: Vec<usize> = primes.iter().map(|p| class_of(r, &reps, &p.ideal).expect("complete")).collect();
    let form_cls: Vec<usize> = primes.iter().map(|p| index_of(&form_of_ideal(r, &p.ideal))).collect();
    let n = primes.len();
    let equivalence_agrees =
        (0..n).all(|i| (0..n).all(|j| (ideal_cls[i] == ideal_cls[j]) == (form_cls[i] == form_cls[j])));

    let check = FormsCheck {
        discriminant: disc,
        reduced_forms: forms,
        invariants: finvariants,
        representative_forms: rep_forms,
        primes_compared: n,
        equivalence_agrees,
        isomorphic,
    };
    if !check.agrees() {
        return Err(Error::Uncertified(format!(
            "ideal classes {:?} and reduced forms {:?} disagree",
            invariants, check.invariants
        )));
    }
    Ok(ClassGroup {
        order: reps.len() as u64,
        invariants,
        inverse: inverses(&table),
        representatives: reps,
        table,
        reduction_bound: needed,
        forms: Some(check),
    })
}
