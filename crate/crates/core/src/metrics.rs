//! Closed-form string lengths. "Gross" counts every chord separately,
//! "net" merges each doubled chord into one physical segment, and "approx"
//! is the first-order estimate (4n - 2m) r / pi.

use std::f64::consts::{PI, TAU};

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::numtheory::{doubled_subgroup, DesignParams};

/// Chord between two nails `j` steps apart on a circle of radius `r` with `n`
/// evenly spaced nails: 2 r sin(pi j / n). `j` is taken mod n; `n >= 1`.
pub fn chord_length(r: f64, n: u64, j: u64) -> f64 {
    2.0 * r * (PI * (j % n) as f64 / n as f64).sin()
}

// 2 r g cot(pi g / (2n)). The angle is formed as (pi * g) / (2 * n) with g and
// n exact, so the g = n case lands on the floating-point pi/2 and the cotangent
// underflows to ~6e-17 instead of being special-cased to zero.
fn gross_term(r: f64, g: u64, n: u64) -> f64 {
    let x = (PI * g as f64) / (2.0 * n as f64);
    2.0 * r * g as f64 * x.cos() / x.sin()
}

/// Total thread length counting every chord separately:
/// 2 r g cot(pi g / 2n) with g = gcd(a - 1, n).
pub fn gross_length(params: &DesignParams) -> f64 {
    gross_term(params.r, doubled_subgroup(params).g1, params.n)
}

/// First-order approximation (4n - 2m) r / pi of the net length.
pub fn approx_length(params: &DesignParams) -> f64 {
    let m = doubled_subgroup(params).m;
    (4 * params.n - 2 * m) as f64 * params.r / PI
}

/// Everything the net-length computation knows about a design.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LengthReport {
    /// Sum of all n chords.
    pub gross: f64,
    /// Physical length once doubled chords are merged.
    pub net: f64,
    /// (4n - 2m) r / pi.
    pub approx: f64,
    /// Size of the doubled-or-degenerate subgroup H.
    pub m: u64,
    /// gcd(a - 1, n).
    pub g1: u64,
    /// gcd(a - 1, m).
    pub g2: u64,
    /// Distinct chords that two nails of H share.
    pub doubled_segment_count: u64,
    /// Nails fixed by the design map (zero-length chords).
    pub degenerate_count: u64,
}

/// Net length: gross minus half the gross of the sub-design on H, i.e.
/// 2 r g1 cot(pi g1 / 2n) - r g2 cot(pi g2 / 2m).
pub fn net_length(params: &DesignParams) -> LengthReport {
    let info = doubled_subgroup(params);
    let gross = gross_term(params.r, info.g1, params.n);
    let net = gross - 0.5 * gross_term(params.r, info.g2, info.m);
    // (a - 1)k = 0 (mod n) has exactly gcd(a - 1, n) solutions, all inside H,
    // and the remaining m - g1 elements of H pair up into doubled chords.
    let degenerate_count = info.g1;
    LengthReport {
        gross,
        net,
        approx: approx_length(params),
        m: info.m,
        g1: info.g1,
        g2: info.g2,
        doubled_segment_count: (info.m - degenerate_count) / 2,
        degenerate_count,
    }
}

/// Sum of sin(j * theta) for j = 0..=m in closed form:
/// sin(m theta / 2) sin((m + 1) theta / 2) / sin(theta / 2).
///
/// Errors where the denominator vanishes (theta a multiple of 2*pi).
pub fn lagrange_sum(m: u64, theta: f64) -> Result<f64, Error> {
    if !theta.is_finite() || theta % TAU == 0.0 {
        return Err(Error::ThetaAtPole(theta));
    }
    let half = theta / 2.0;
    let denom = half.sin();
    if denom == 0.0 {
        return Err(Error::ThetaAtPole(theta));
    }
    let mf = m as f64;
    Ok((mf * half).sin() * ((mf + 1.0) * half).sin() / denom)
}
