//! Integer helpers: gcd/CRT, square roots, primality and factorization.

use alloc::vec::Vec;
use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

/// Extended gcd `(g, x, y)` with `g = x*a + y*b` and `g >= 0`.
pub fn xgcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let e = a.extended_gcd(b);
    if e.gcd.is_negative() {
        (-e.gcd, -e.x, -e.y)
    } else {
        (e.gcd, e.x, e.y)
    }
}

/// Solve `x = r1 mod m1`, `x = r2 mod m2` for positive moduli that need not be coprime.
/// Returns the residue modulo `lcm(m1, m2)`, or `None` when the system is inconsistent.
pub fn crt(r1: &BigInt, m1: &BigInt, r2: &BigInt, m2: &BigInt) -> Option<(BigInt, BigInt)> {
    let (g, p, _) = xgcd(m1, m2);
    let diff = r2 - r1;
    if !diff.is_multiple_of(&g) {
        return None;
    }
    let l = m1 / &g * m2;
    // x = r1 + m1 * k with k = (diff/g) * p mod (m2/g)
    let m2g = m2 / &g;
    let k = ((&diff / &g) * p).mod_floor(&m2g);
    let x = (r1 + m1 * k).mod_floor(&l);
    Some((x, l))
}

/// Floor of the square root of a nonnegative integer.
pub fn isqrt(n: &BigInt) -> BigInt {
    assert!(!n.is_negative(), "isqrt of negative number");
    n.sqrt()
}

/// Exact square root when `n` is a perfect square.
pub fn exact_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    if &r * &r == *n {
        Some(r)
    } else {
        None
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    r
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

pub fn is_prime(n: &BigInt) -> bool {
    match n.to_u64() {
        Some(v) => is_prime_u64(v),
        None => {
            if n.is_negative() {
                return false;
            }
            factor_biguint(n.magnitude()).len() == 1 && factor_biguint(n.magnitude())[0].1 == 1
        }
    }
}

fn pollard_rho(n: u64) -> u64 {
    if n.is_multiple_of(2) {
        return 2;
    }
    let mut c = 1u64;
    loop {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut x, mut y, mut d) = (2u64, 2u64, 1u64);
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = x.abs_diff(y).gcd(&n);
        }
        if d != n {
            return d;
        }
        c += 1;
    }
}

fn factor_u64_into(n: u64, out: &mut Vec<u64>) {
    if n == 1 {
        return;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            out.push(p);
            factor_u64_into(n / p, out);
            return;
        }
    }
    if is_prime_u64(n) {
        out.push(n);
        return;
    }
    let d = pollard_rho(n);
    factor_u64_into(d, out);
    factor_u64_into(n / d, out);
}

/// Prime factorization of a positive integer, primes ascending.
pub fn factor_biguint(n: &BigUint) -> Vec<(BigUint, u32)> {
    assert!(!n.is_zero(), "factor of zero");
    let mut primes: Vec<BigUint> = Vec::new();
    if let Some(v) = n.to_u64() {
        let mut raw = Vec::new();
        factor_u64_into(v, &mut raw);
        primes.extend(raw.into_iter().map(BigUint::from));
    } else {
        let mut m = n.clone();
        let mut d = BigUint::from(2u32);
        while &d * &d <= m {
            while (&m % &d).is_zero() {
                primes.push(d.clone());
                m /= &d;
            }
            d += 1u32;
        }
        if !m.is_one() {
            primes.push(m);
        }
    }
    primes.sort();
    let mut out: Vec<(BigUint, u32)> = Vec::new();
    for p in primes {
        match out.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => out.push((p, 1)),
        }
    }
    out
}

/// Prime factorization of `|n|` for nonzero `n`.
pub fn factor_int(n: &BigInt) -> Vec<(BigInt, u32)> {
    factor_biguint(n.magnitude())
        .into_iter()
        .map(|(p, e)| (BigInt::from_biguint(Sign::Plus, p), e))
        .collect()
}

/// Exponent of the prime `p` in the nonzero integer `n`.
pub fn int_valuation(p: &BigInt, n: &BigInt) -> u32 {
    assert!(!n.is_zero());
    let mut n = n.clone();
    let mut v = 0;
    loop {
        let (q, r) = n.div_rem(p);
        if !r.is_zero() {
            return v;
        }
        n = q;
        v += 1;
    }
}

/// Rational primes up to `bound`, ascending.
pub fn primes_up_to(bound: u64) -> Vec<u64> {
    (2..=bound).filter(|&n| is_prime_u64(n)).collect()
}

/// Kronecker-style Legendre symbol `(a/p)` for odd prime `p`.
pub fn legendre(a: &BigInt, p: &BigInt) -> i32 {
    let a = a.mod_floor(p);
    if a.is_zero() {
        return 0;
    }
    let e = (p - 1u32) / 2u32;
    if a.modpow(&e, p).is_one() {
        1
    } else {
        -1
    }
}

/// Square root of `a` modulo an odd prime `p` by exhaustive search over small `p`,
/// Tonelli-Shanks otherwise.
pub fn sqrt_mod(a: &BigInt, p: &BigInt) -> Option<BigInt> {
    let a = a.mod_floor(p);
    if a.is_zero() {
        return Some(BigInt::zero());
    }
    if p == &big(2) {
        return Some(a);
    }
    if legendre(&a, p) != 1 {
        return None;
    }
    // Tonelli-Shanks
    let one = BigInt::one();
    let mut q = p - 1u32;
    let mut s = 0u32;
    while q.is_even() {
        q >>= 1;
        s += 1;
    }
    let mut z = big(2);
    while legendre(&z, p) != -1 {
        z += 1u32;
    }
    let mut m = s;
    let mut c = z.modpow(&q, p);
    let mut t = a.modpow(&q, p);
    let mut r = a.modpow(&((&q + 1u32) >> 1), p);
    while t != one {
        let mut i = 0u32;
        let mut tt = t.clone();
        while tt != one {
            tt = (&tt * &tt).mod_floor(p);
            i += 1;
        }
        let mut b = c.clone();
        for _ in 0..(m - i - 1) {
            b = (&b * &b).mod_floor(p);
        }
        m = i;
        c = (&b * &b).mod_floor(p);
        t = (t * &c).mod_floor(p);
        r = (r * b).mod_floor(p);
    }
    let other = p - &r;
    Some(r.min(other))
}

/// Squarefree test for a nonzero integer.
pub fn is_squarefree(n: &BigInt) -> bool {
    factor_int(n).iter().all(|(_, e)| *e == 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn crt_noncoprime() {
        let (x, m) = crt(&big(3), &big(4), &big(1), &big(6)).unwrap();
        assert_eq!(m, big(12));
        assert_eq!(x, big(7));
        assert!(crt(&big(0), &big(4), &big(1), &big(6)).is_none());
    }

    #[test]
    fn factor_small_and_large() {
        assert_eq!(factor_int(&big(360)), vec![(big(2), 3), (big(3), 2), (big(5), 1)]);
        let n = big(1_000_000_007) * big(998_244_353);
        assert_eq!(factor_int(&n), vec![(big(998_244_353), 1), (big(1_000_000_007), 1)]);
    }

    #[test]
    fn sqrt_mod_matches_brute_force() {
        for p in [3i64, 5, 7, 11, 13, 17, 29, 41] {
            for a in 0..p {
                let brute = (0..p).find(|x| (x * x - a).rem_euclid(p) == 0);
                let r = sqrt_mod(&big(a), &big(p));
                assert_eq!(r.is_some(), brute.is_some(), "a={a} p={p}");
                if let Some(r) = r {
                    assert_eq!((&r * &r - big(a)).mod_floor(&big(p)), BigInt::zero());
                }
            }
        }
    }

    #[test]
    fn primality() {
        let brute: Vec<u64> = (2..200u64).filter(|n| (2..*n).all(|d| n % d != 0)).collect();
        assert_eq!(primes_up_to(199), brute);
    }
}
