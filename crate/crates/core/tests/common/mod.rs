//! Shared test support: exhaustive small-graph enumeration up to isomorphism
//! and random grid layouts for the pipeline tests.
#![allow(dead_code)] // each test target uses a different subset

use std::collections::BTreeSet;

use miug::graph::Graph;
use miug::interval::{IntervalType, Rational, Representation, UnitInterval};

/// Canonical form: the lexicographically smallest upper-triangle bit string
/// over all vertex permutations, pruned by degree-sorted candidate orders.
/// Fine up to n = 8.
pub fn canonical_bits(g: &Graph) -> Vec<u8> {
    let n = g.n();
    let mut best: Option<Vec<u8>> = None;
    let mut perm: Vec<usize> = Vec::with_capacity(n);
    let mut used = vec![false; n];

    fn encode(g: &Graph, perm: &[usize]) -> Vec<u8> {
        let n = perm.len();
        let mut bits = Vec::with_capacity(n * (n - 1) / 2);
        for j in 1..n {
            for i in 0..j {
                bits.push(u8::from(g.has_edge(perm[i], perm[j])));
            }
        }
        bits
    }

    // `tight`: the bits of the current prefix equal the best encoding's
    // prefix; only then is positional comparison a valid prune
    fn rec(
        g: &Graph,
        perm: &mut Vec<usize>,
        used: &mut [bool],
        best: &mut Option<Vec<u8>>,
        tight: bool,
    ) {
        let n = g.n();
        if perm.len() == n {
            let enc = encode(g, perm);
            if best.as_ref().is_none_or(|b| enc < *b) {
                *best = Some(enc);
            }
            return;
        }
        for v in 0..n {
            if used[v] {
                continue;
            }
            let mut child_tight = tight && best.is_some();
            let mut skip = false;
            if child_tight {
                let b = best.as_ref().unwrap();
                let j = perm.len();
                let start = j * j.saturating_sub(1) / 2;
                for (i, &p) in perm.iter().enumerate() {
                    let bit = u8::from(g.has_edge(p, v));
                    match bit.cmp(&b[start + i]) {
                        std::cmp::Ordering::Less => {
                            child_tight = false;
                            break;
                        }
                        std::cmp::Ordering::Greater => {
                            skip = true;
                            break;
                        }
                        std::cmp::Ordering::Equal => {}
                    }
                }
            }
            if skip {
                continue;
            }
            used[v] = true;
            perm.push(v);
            rec(g, perm, used, best, child_tight);
            perm.pop();
            used[v] = false;
        }
    }

    if n == 0 {
        return Vec::new();
    }
    rec(g, &mut perm, &mut used, &mut best, true);
    best.unwrap()
}

/// All connected graphs with exactly `n` vertices, one per isomorphism
/// class, grown by attaching a new vertex to every nonempty neighborhood of
/// every smaller connected graph (every connected graph has a non-cut
/// vertex, so the recursion is complete).
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    if n == 0 {
        return vec![];
    }
    if n == 1 {
        return vec![Graph::new(1)];
    }
    let smaller = connected_graphs(n - 1);
    let mut seen: BTreeSet<Vec<u8>> = BTreeSet::new();
    let mut out = Vec::new();
    for g in &smaller {
        let base = n - 1;
        for mask in 1u32..(1 << base) {
            let mut h = Graph::new(n);
            for (u, v) in g.edges() {
                h.add_edge(u, v).unwrap();
            }
            for u in 0..base {
                if mask & (1 << u) != 0 {
                    h.add_edge(u, base).unwrap();
                }
            }
            if seen.insert(canonical_bits(&h)) {
                out.push(h);
            }
        }
    }
    out
}

/// All connected graphs with at most `n` vertices, one per class.
pub fn connected_graphs_up_to(n: usize) -> Vec<Graph> {
    (1..=n).flat_map(connected_graphs).collect()
}

/// Deterministic xorshift for reproducible corpora.
pub struct XorShift(pub u64);

impl XorShift {
    pub fn next(&mut self) -> u64 {
        self.0 ^= self.0 << 13;
        self.0 ^= self.0 >> 7;
        self.0 ^= self.0 << 17;
        self.0
    }

    pub fn below(&mut self, n: u64) -> u64 {
        self.next() % n
    }
}

/// A random injective layout of `n` unit intervals on the `1/(2n)` grid with
/// the given endpoint types, spread over a window of about `n/4` units so
/// neighborhoods stay busy. Returns the representation and the graph it
/// realizes.
pub fn random_layout(
    n: usize,
    types: &[IntervalType],
    rng: &mut XorShift,
) -> (Graph, Representation) {
    random_layout_grid(n, 2 * n as i64, (n as i64 / 4).max(1), types, rng)
}

/// As [`random_layout`], positions drawn from multiples of `1/den` over
/// `span_units` units. Coarse grids (small `den`) align intervals at unit
/// offsets, which is what produces blocked five-interval neighborhoods.
pub fn random_layout_grid(
    n: usize,
    den: i64,
    span_units: i64,
    types: &[IntervalType],
    rng: &mut XorShift,
) -> (Graph, Representation) {
    let span = den * span_units;
    assert!(
        (span as u128 + 1) * types.len() as u128 >= n as u128,
        "grid too small for an injective layout"
    );
    let mut taken: BTreeSet<(i64, usize)> = BTreeSet::new();
    let mut rep = Representation::new();
    for v in 0..n {
        loop {
            let k = rng.below(span as u64 + 1) as i64;
            let t = rng.below(types.len() as u64) as usize;
            if taken.insert((k, t)) {
                rep.insert(
                    v,
                    UnitInterval::of_type(Rational::new(k.into(), den.into()), types[t]),
                );
                break;
            }
        }
    }
    (rep.induced_graph(), rep)
}
