//! Induced subgraph isomorphism and screening against forbidden families.

use crate::classifier::ClassLabel;
use crate::families::{self, FamilyId, FamilyInstance};
use crate::graph::{Graph, VertexId};

/// An injective map from pattern vertices to host vertices under which edges
/// and non-edges agree exactly.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Embedding {
    /// `map[p]` is the host vertex for pattern vertex `p`.
    pub map: Vec<VertexId>,
}

impl Embedding {
    /// The defining predicate: induced, not merely subgraph.
    pub fn is_induced(&self, pattern: &Graph, host: &Graph) -> bool {
        if self.map.len() != pattern.n() {
            return false;
        }
        let mut sorted = self.map.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) || sorted.iter().any(|&h| h >= host.n()) {
            return false;
        }
        for x in 0..pattern.n() {
            for y in x + 1..pattern.n() {
                if pattern.has_edge(x, y) != host.has_edge(self.map[x], self.map[y]) {
                    return false;
                }
            }
        }
        true
    }
}

/// Find an induced embedding of `pattern` in `host`, or report there is none.
///
/// Deterministic: pattern vertices are assigned in id order with host
/// candidates ascending, so the first embedding found is the
/// lexicographically smallest under vertex-id order.
pub fn find_induced(pattern: &Graph, host: &Graph) -> Option<Embedding> {
    let np = pattern.n();
    let nh = host.n();
    if np > nh {
        return None;
    }
    if np == 0 {
        return Some(Embedding { map: vec![] });
    }
    let pattern_deg: Vec<usize> = (0..np).map(|v| pattern.degree(v)).collect();
    let mut map: Vec<VertexId> = Vec::with_capacity(np);
    let mut used = vec![false; nh];

    fn extend(
        pattern: &Graph,
        host: &Graph,
        pattern_deg: &[usize],
        map: &mut Vec<VertexId>,
        used: &mut [bool],
    ) -> bool {
        let p = map.len();
        if p == pattern.n() {
            return true;
        }
        // remaining host supply must cover remaining pattern vertices
        if host.n() - p < pattern.n() - p {
            return false;
        }
        'host: for h in 0..host.n() {
            if used[h] || host.degree(h) < pattern_deg[p] {
                continue;
            }
            for (q, &mq) in map.iter().enumerate() {
                if pattern.has_edge(q, p) != host.has_edge(mq, h) {
                    continue 'host;
                }
            }
            map.push(h);
            used[h] = true;
            if extend(pattern, host, pattern_deg, map, used) {
                return true;
            }
            used[h] = false;
            map.pop();
        }
        false
    }

    if extend(pattern, host, &pattern_deg, &mut map, &mut used) {
        debug_assert!(Embedding { map: map.clone() }.is_induced(pattern, host));
        Some(Embedding { map })
    } else {
        None
    }
}

/// A forbidden family member found inside a host graph.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct ScreenHit {
    pub family: FamilyId,
    pub embedding: Embedding,
}

/// Search `g` for the forbidden induced subgraphs of `class`, in the
/// deterministic order of [`families::enumerate_forbidden`]. `None` means
/// `g` is free of every forbidden graph on at most `|V(g)|` vertices.
///
/// Callers interested in class membership reduce twins first; the search
/// itself works on any host.
pub fn screen(g: &Graph, class: ClassLabel) -> Option<ScreenHit> {
    for inst in families::enumerate_forbidden(class, g.n()) {
        let FamilyInstance { id, graph, .. } = inst;
        if let Some(embedding) = find_induced(&graph, g) {
            return Some(ScreenHit {
                family: id,
                embedding,
            });
        }
    }
    None
}
