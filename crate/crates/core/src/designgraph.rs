//! The design as a graph on nails: deduplicated chords with doubled chords
//! tagged, minimum string counts, and explicit nail-to-nail routing via
//! Hierholzer traversal.

use std::collections::{BTreeMap, BTreeSet};

use crate::metrics::chord_length;
use crate::numtheory::{doubled_subgroup, enumerate_h, mulmod, DesignParams};

/// How a chord arises in the design.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum EdgeKind {
    /// Drawn from one endpoint only.
    Plain,
    /// Drawn from both endpoints: s -> a*s and a*s -> a^2*s = s coincide.
    Doubled,
}

/// A deduplicated chord between nails `s < t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Edge {
    pub s: u64,
    pub t: u64,
    pub kind: EdgeKind,
}

/// A design reduced to its distinct chords.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DesignGraph {
    /// Number of nails on the circle.
    pub n: u64,
    /// Multiplier reduced mod n.
    pub a: u64,
    /// Distinct chords sorted by (s, t).
    pub edges: Vec<Edge>,
    /// Nails fixed by the design map (no chord), ascending.
    pub degenerate_nails: Vec<u64>,
}

/// Builds the deduplicated chord graph: one edge per distinct pair {k, a*k},
/// tagged doubled when the two directions coincide, and fixed nails listed
/// separately instead of as self-loops.
pub fn build_design(params: &DesignParams) -> DesignGraph {
    let n = params.n;
    let a = params.a_mod_n();
    let mut edges = BTreeMap::new();
    let mut degenerate_nails = Vec::new();
    for k in 0..n {
        let t = mulmod(a, k, n);
        if t == k {
            degenerate_nails.push(k);
            continue;
        }
        let kind = if mulmod(a, t, n) == k {
            EdgeKind::Doubled
        } else {
            EdgeKind::Plain
        };
        edges.insert((k.min(t), k.max(t)), kind);
    }
    DesignGraph {
        n,
        a,
        edges: edges
            .into_iter()
            .map(|((s, t), kind)| Edge { s, t, kind })
            .collect(),
        degenerate_nails,
    }
}

/// Vertex sets of the connected components spanned by `ends`, in ascending
/// order of their smallest nail.
fn components(ends: &[(u64, u64)]) -> Vec<BTreeSet<u64>> {
    let mut nbrs: BTreeMap<u64, Vec<u64>> = BTreeMap::new();
    for &(s, t) in ends {
        nbrs.entry(s).or_default().push(t);
        nbrs.entry(t).or_default().push(s);
    }
    let mut seen = BTreeSet::new();
    let mut comps = Vec::new();
    for &v in nbrs.keys() {
        if seen.contains(&v) {
            continue;
        }
        let mut comp = BTreeSet::new();
        let mut queue = vec![v];
        while let Some(u) = queue.pop() {
            if !seen.insert(u) {
                continue;
            }
            comp.insert(u);
            queue.extend(nbrs[&u].iter().copied());
        }
        comps.push(comp);
    }
    comps
}

/// Minimum number of continuous strings needed to draw every chord exactly
/// once: per connected component, max(1, odd-degree nails / 2). Zero for a
/// design with no chords.
pub fn string_count(graph: &DesignGraph) -> u64 {
    let ends: Vec<(u64, u64)> = graph.edges.iter().map(|e| (e.s, e.t)).collect();
    let mut degree: BTreeMap<u64, u64> = BTreeMap::new();
    for &(s, t) in &ends {
        *degree.entry(s).or_default() += 1;
        *degree.entry(t).or_default() += 1;
    }
    components(&ends)
        .iter()
        .map(|comp| {
            let odd = comp.iter().filter(|v| degree[v] % 2 == 1).count() as u64;
            (odd / 2).max(1)
        })
        .sum()
}

/// A routing of the whole design.
#[derive(Debug, Clone, PartialEq)]
pub struct RoutePlan {
    /// One entry per continuous string: the nails visited in order. A closed
    /// string repeats its first nail at the end.
    pub strings: Vec<Vec<u64>>,
    /// Total thread length in units of the circle radius.
    pub total_length: f64,
}

// Adjacency entry: (is_virtual, neighbor, edge id). The sort order makes the
// greedy walk prefer real chords (smallest neighbor first) and fall back to a
// virtual pairing edge only when nothing real is left.
type Adjacency = BTreeMap<u64, Vec<(bool, u64, usize)>>;

/// Walks greedily from `start`, marking edges used, until no unused edge
/// leaves the current nail. At each nail the design chord k -> a*k is taken
/// if it is real and unused, otherwise the smallest-numbered neighbor.
fn greedy_walk(
    start: u64,
    a: u64,
    n: u64,
    adj: &Adjacency,
    ends: &[(u64, u64)],
    used: &mut [bool],
) -> (Vec<u64>, Vec<usize>) {
    let mut verts = vec![start];
    let mut eids = Vec::new();
    let mut v = start;
    loop {
        let target = mulmod(a, v, n);
        let entries = &adj[&v];
        let design_chord = entries
            .iter()
            .find(|&&(virt, nb, id)| !virt && nb == target && !used[id]);
        let chosen = design_chord.or_else(|| entries.iter().find(|&&(_, _, id)| !used[id]));
        let Some(&(_, _, id)) = chosen else { break };
        used[id] = true;
        let (s, t) = ends[id];
        v = if s == v { t } else { s };
        verts.push(v);
        eids.push(id);
    }
    (verts, eids)
}

/// Routes every chord exactly once using the minimum number of strings.
///
/// Deterministic by construction: components are handled in order of their
/// smallest nail; odd-degree nails are paired up (ascending) with virtual
/// edges so each component carries one Euler circuit; the circuit starts at
/// the smallest odd-degree nail (smallest nail when all degrees are even) and
/// greedily prefers the design chord k -> a*k, then the smallest neighbor.
/// Cutting the virtual edges back out of the circuit yields the strings.
pub fn route(graph: &DesignGraph) -> RoutePlan {
    let mut ends: Vec<(u64, u64)> = graph.edges.iter().map(|e| (e.s, e.t)).collect();
    let real_count = ends.len();
    let total_length = ends
        .iter()
        .map(|&(s, t)| chord_length(1.0, graph.n, t - s))
        .sum();

    let comps = components(&ends);

    // Degree parity on the real graph decides the virtual pairing.
    let mut degree: BTreeMap<u64, u64> = BTreeMap::new();
    for &(s, t) in &ends {
        *degree.entry(s).or_default() += 1;
        *degree.entry(t).or_default() += 1;
    }
    let mut starts = Vec::new(); // one traversal start per component
    for comp in &comps {
        let odd: Vec<u64> = comp
            .iter()
            .copied()
            .filter(|v| degree[v] % 2 == 1)
            .collect();
        starts.push(*odd.first().unwrap_or_else(|| comp.first().unwrap()));
        for pair in odd.chunks(2) {
            ends.push((pair[0], pair[1]));
        }
    }

    let mut adj: Adjacency = BTreeMap::new();
    for (id, &(s, t)) in ends.iter().enumerate() {
        adj.entry(s).or_default().push((id >= real_count, t, id));
        adj.entry(t).or_default().push((id >= real_count, s, id));
    }
    for entries in adj.values_mut() {
        entries.sort_unstable();
    }

    let mut used = vec![false; ends.len()];
    let mut strings = Vec::new();
    for start in starts {
        let (mut verts, mut eids) = greedy_walk(start, graph.a, graph.n, &adj, &ends, &mut used);
        // Splice closed sub-tours in until the circuit covers the component.
        loop {
            let open = verts
                .iter()
                .position(|v| adj[v].iter().any(|&(_, _, id)| !used[id]));
            let Some(pos) = open else { break };
            let (sub_verts, sub_eids) =
                greedy_walk(verts[pos], graph.a, graph.n, &adj, &ends, &mut used);
            eids.splice(pos..pos, sub_eids);
            verts.splice(pos..=pos, sub_verts);
        }

        // Cut the virtual edges back out; what remains between them are the
        // real trails. No two virtual edges can be adjacent in the circuit
        // because every nail has at most one virtual edge.
        let virt_positions: Vec<usize> = eids
            .iter()
            .enumerate()
            .filter(|(_, &id)| id >= real_count)
            .map(|(i, _)| i)
            .collect();
        if virt_positions.is_empty() {
            strings.push(verts);
            continue;
        }
        let e_total = eids.len();
        let mut trails = Vec::new();
        for (w, &p) in virt_positions.iter().enumerate() {
            let q = virt_positions[(w + 1) % virt_positions.len()];
            let mut trail = vec![verts[(p + 1) % e_total]];
            let mut i = (p + 1) % e_total;
            while i != q {
                trail.push(verts[(i + 1) % e_total]);
                i = (i + 1) % e_total;
            }
            trails.push(trail);
        }
        trails.sort_by_key(|t| t[0]);
        strings.extend(trails);
    }

    RoutePlan {
        strings,
        total_length,
    }
}

/// Checks the structural correspondence between the doubled part of the
/// design and the full design on m nails: the nails carrying doubled or
/// degenerate segments are exactly H, and relabeling them k -> k / (n/m)
/// reproduces `build_design` for m nails (where every chord is doubled).
pub fn verify_subgroup_correspondence(params: &DesignParams) -> bool {
    let graph = build_design(params);
    let info = doubled_subgroup(params);
    let h: BTreeSet<u64> = enumerate_h(params).into_iter().collect();

    let mut touched: BTreeSet<u64> = graph.degenerate_nails.iter().copied().collect();
    let mut doubled = Vec::new();
    for e in &graph.edges {
        if e.kind == EdgeKind::Doubled {
            touched.insert(e.s);
            touched.insert(e.t);
            doubled.push((e.s, e.t));
        }
    }
    if touched != h {
        return false;
    }

    let gen = info.generator;
    let reference = build_design(&DesignParams {
        n: info.m,
        a: params.a,
        r: params.r,
    });
    let relabeled: BTreeSet<(u64, u64)> =
        doubled.iter().map(|&(s, t)| (s / gen, t / gen)).collect();
    let reference_pairs: BTreeSet<(u64, u64)> =
        reference.edges.iter().map(|e| (e.s, e.t)).collect();
    let relabeled_degen: Vec<u64> = graph.degenerate_nails.iter().map(|&k| k / gen).collect();

    relabeled.len() == doubled.len()
        && relabeled == reference_pairs
        && relabeled_degen == reference.degenerate_nails
        && reference.edges.iter().all(|e| e.kind == EdgeKind::Doubled)
}
