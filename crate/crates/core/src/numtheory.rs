//! Modular arithmetic for circular string designs: parameter validation, the
//! subgroup of nails whose segments double up, primality, and multiplicative
//! order. All arithmetic is exact for n up to at least 10^6 (intermediate
//! products go through u128).

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Greatest common divisor by Euclid's algorithm; `gcd(0, 0) = 0`.
pub fn gcd(mut x: u64, mut y: u64) -> u64 {
    while y != 0 {
        (x, y) = (y, x % y);
    }
    x
}

/// `x * y mod n` without overflow.
pub(crate) fn mulmod(x: u64, y: u64, n: u64) -> u64 {
    ((x as u128 * y as u128) % n as u128) as u64
}

/// `b^e mod n` by repeated squaring; returns 0 when n = 1.
pub(crate) fn powmod(mut b: u64, mut e: u64, n: u64) -> u64 {
    if n == 1 {
        return 0;
    }
    let mut acc = 1;
    b %= n;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, b, n);
        }
        b = mulmod(b, b, n);
        e >>= 1;
    }
    acc
}

/// A string-art design: `n` nails evenly spaced on a circle of radius `r`,
/// with a chord from every nail `k` to nail `a*k mod n`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DesignParams {
    /// Number of nails, at least 1.
    pub n: u64,
    /// Chord multiplier, at least 2 (may exceed n; arithmetic reduces it mod n).
    pub a: u64,
    /// Circle radius in arbitrary length units, positive.
    pub r: f64,
}

impl DesignParams {
    /// Validates `n >= 1`, `a >= 2`, and `r > 0` (finite).
    pub fn new(n: u64, a: u64, r: f64) -> Result<Self, Error> {
        if n < 1 {
            return Err(Error::InvalidParams("n must be at least 1".into()));
        }
        if a < 2 {
            return Err(Error::InvalidParams("a must be at least 2".into()));
        }
        if !(r.is_finite() && r > 0.0) {
            return Err(Error::InvalidParams(format!(
                "r must be positive and finite, got {r}"
            )));
        }
        Ok(Self { n, a, r })
    }

    /// The multiplier reduced into `0..n`.
    pub fn a_mod_n(&self) -> u64 {
        self.a % self.n
    }
}

/// Structure of H = { s : a^2 s = s (mod n) }, the set of nails whose segments
/// are doubled or degenerate. H is the cyclic subgroup of Z_n generated by n/m.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubgroupInfo {
    /// |H|: the largest divisor m of n with a^2 = 1 (mod m).
    pub m: u64,
    /// Least positive generator n/m of H; n itself when H = {0}.
    pub generator: u64,
    /// gcd(a - 1, n), the number of degenerate (fixed) nails.
    pub g1: u64,
    /// gcd(a - 1, m), the same count within the sub-design on H.
    pub g2: u64,
}

/// Computes the subgroup H of doubled-or-degenerate nails.
///
/// The largest divisor m of n with a^2 = 1 (mod m) is exactly gcd(a^2 - 1, n):
/// a divisor of n divides a^2 - 1 iff it is a common divisor of both.
pub fn doubled_subgroup(params: &DesignParams) -> SubgroupInfo {
    let n = params.n;
    let a = params.a_mod_n();
    // (a^2 - 1) mod n and (a - 1) mod n; gcd(x mod n, n) = gcd(x, n).
    let a2m1 = (mulmod(a, a, n) + n - 1) % n;
    let am1 = (a + n - 1) % n;
    let m = gcd(a2m1, n);
    let g1 = gcd(am1, n);
    SubgroupInfo {
        m,
        generator: n / m,
        g1,
        g2: gcd(am1 % m, m),
    }
}

/// All m elements of H in ascending order: 0, n/m, 2n/m, ...
pub fn enumerate_h(params: &DesignParams) -> Vec<u64> {
    let info = doubled_subgroup(params);
    (0..info.m).map(|j| j * info.generator).collect()
}

/// Deterministic primality test: Miller-Rabin with a base set that is exact
/// for every u64.
pub fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for p in BASES {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'base: for b in BASES {
        let mut x = powmod(b, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'base;
            }
        }
        return false;
    }
    true
}

/// Prime factorization by trial division, smallest factor first.
fn factorize(mut v: u64) -> Vec<(u64, u32)> {
    let mut factors = Vec::new();
    let mut p = 2;
    while p * p <= v {
        if v.is_multiple_of(p) {
            let mut e = 0;
            while v.is_multiple_of(p) {
                v /= p;
                e += 1;
            }
            factors.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if v > 1 {
        factors.push((v, 1));
    }
    factors
}

/// Euler's totient via the factorization of n.
fn totient(n: u64) -> u64 {
    factorize(n)
        .into_iter()
        .map(|(p, e)| (p - 1) * p.pow(e - 1))
        .product()
}

/// Smallest d >= 1 with a^d = 1 (mod n). Errors unless n >= 2 and gcd(a, n) = 1.
pub fn multiplicative_order(a: u64, n: u64) -> Result<u64, Error> {
    if n < 2 {
        return Err(Error::InvalidParams(format!(
            "multiplicative order needs a modulus of at least 2, got {n}"
        )));
    }
    if gcd(a % n, n) != 1 {
        return Err(Error::OrderUndefined { a, n });
    }
    // The order divides phi(n); strip every removable prime factor from it.
    let mut ord = totient(n);
    for (q, _) in factorize(ord) {
        while ord.is_multiple_of(q) && powmod(a, ord / q, n) == 1 {
            ord /= q;
        }
    }
    Ok(ord)
}

/// Whether `a` generates the multiplicative group modulo the prime `p`.
pub fn is_primitive_root(a: u64, p: u64) -> Result<bool, Error> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(multiplicative_order(a, p)? == p - 1)
}
