//! Brute-force reference implementations. These enumerate every chord
//! directly and deliberately share no helpers with the closed forms (no gcd,
//! no cotangent, no subgroup logic), so the two sides can check each other.

use std::collections::BTreeSet;
use std::f64::consts::PI;

use crate::numtheory::DesignParams;

/// Gross length: the n chords k -> a*k mod n summed one by one.
pub fn brute_gross(params: &DesignParams) -> f64 {
    let (n, r) = (params.n, params.r);
    let step = ((params.a as u128 + n as u128 - 1) % n as u128) as u64; // (a - 1) mod n
    let mut total = 0.0;
    for k in 0..n {
        let d = ((step as u128 * k as u128) % n as u128) as u64;
        total += 2.0 * r * (PI * d as f64 / n as f64).sin();
    }
    total
}

/// Net length: each distinct undirected chord counted once.
pub fn brute_net(params: &DesignParams) -> f64 {
    let (n, r) = (params.n, params.r);
    let a = params.a % n;
    let mut seen = BTreeSet::new();
    for k in 0..n {
        let t = ((a as u128 * k as u128) % n as u128) as u64;
        if t != k {
            seen.insert((k.min(t), k.max(t)));
        }
    }
    seen.iter()
        .map(|&(s, t)| 2.0 * r * (PI * (t - s) as f64 / n as f64).sin())
        .sum()
}

/// The set { s : a^2 s = s (mod n) } by direct scan, ascending.
pub fn brute_h(params: &DesignParams) -> Vec<u64> {
    let n = params.n;
    let a = params.a % n;
    let a2 = ((a as u128 * a as u128) % n as u128) as u64;
    (0..n)
        .filter(|&s| ((a2 as u128 * s as u128) % n as u128) as u64 == s)
        .collect()
}
