//! residuum: analysis of circular string-art designs.
//!
//! Place n nails evenly on a circle and run a chord from every nail k to nail
//! a*k mod n. This crate computes exact and approximate thread lengths,
//! identifies the chords that double up, counts and routes the minimum number
//! of continuous strings, verifies everything against brute force, and renders
//! deterministic SVG drawings.

pub mod cli;
pub mod designgraph;
pub mod error;
pub mod metrics;
pub mod numtheory;
pub mod oracle;
pub mod render;

pub use designgraph::{build_design, route, string_count, DesignGraph, Edge, EdgeKind, RoutePlan};
pub use error::Error;
pub use metrics::{
    approx_length, chord_length, gross_length, lagrange_sum, net_length, LengthReport,
};
pub use numtheory::{
    doubled_subgroup, enumerate_h, gcd, is_prime, is_primitive_root, multiplicative_order,
    DesignParams, SubgroupInfo,
};
pub use render::{to_svg, RenderStyle};
