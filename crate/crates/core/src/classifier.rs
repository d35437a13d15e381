//! Interval recognition and placement in the unit-interval hierarchy
//! `Unit ⊊ UPM ⊊ AlmostMixed ⊊ Mixed ⊊ Interval`.

use std::collections::{BTreeSet, HashSet};

use crate::closing::BlockPattern;
use crate::graph::{Graph, TwinReduction, VertexId};
use crate::matcher::{self, ScreenHit};

/// Position in the hierarchy: the smallest class containing the graph.
/// The order reflects containment, so `label >= AlmostMixed` is exactly
/// almost-mixed membership.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize)]
pub enum ClassLabel {
    NotInterval,
    IntervalOnly,
    Mixed,
    AlmostMixed,
    Upm,
    Unit,
}

impl std::fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            ClassLabel::NotInterval => "NotInterval",
            ClassLabel::IntervalOnly => "IntervalOnly",
            ClassLabel::Mixed => "Mixed",
            ClassLabel::AlmostMixed => "AlmostMixed",
            ClassLabel::Upm => "UPM",
            ClassLabel::Unit => "Unit",
        };
        f.write_str(s)
    }
}

/// Membership at every level, for monotonicity checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct MembershipChain {
    pub interval: bool,
    pub mixed: bool,
    pub almost_mixed: bool,
    pub upm: bool,
    pub unit: bool,
}

impl MembershipChain {
    /// No `true` above a `false` along Interval ⊇ Mixed ⊇ AlmostMixed ⊇ UPM ⊇ Unit.
    pub fn is_monotone(&self) -> bool {
        let chain = [
            self.interval,
            self.mixed,
            self.almost_mixed,
            self.upm,
            self.unit,
        ];
        chain.windows(2).all(|w| w[0] || !w[1])
    }

    pub fn label(&self) -> ClassLabel {
        if !self.interval {
            ClassLabel::NotInterval
        } else if self.unit {
            ClassLabel::Unit
        } else if self.upm {
            ClassLabel::Upm
        } else if self.almost_mixed {
            ClassLabel::AlmostMixed
        } else if self.mixed {
            ClassLabel::Mixed
        } else {
            ClassLabel::IntervalOnly
        }
    }
}

/// Why a graph fails interval recognition.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub enum IntervalObstruction {
    /// No linear order of the maximal cliques keeps every vertex's cliques
    /// consecutive.
    NoConsecutiveCliqueOrdering { maximal_cliques: usize },
}

/// Evidence that a graph sits outside some class.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub enum Witness {
    /// An induced copy of a forbidden family member.
    ForbiddenSubgraph(ScreenHit),
    /// Two blocked five-interval neighborhoods of opposite kinds in one
    /// component of a final pipeline representation.
    BlockedClosure {
        open_closed: BlockPattern,
        closed_open: BlockPattern,
    },
}

/// Witnesses separating the graph from each class it does not belong to,
/// stated on the twin-reduced graph's vertices.
#[derive(Clone, Debug, Default, serde::Serialize)]
pub struct BoundaryWitnesses {
    pub not_interval: Option<IntervalObstruction>,
    pub not_mixed: Option<Witness>,
    pub not_almost_mixed: Option<Witness>,
    pub not_upm: Option<Witness>,
    pub not_unit: Option<Witness>,
}

/// Full classification result.
#[derive(Clone, Debug)]
pub struct ClassReport {
    pub label: ClassLabel,
    pub chain: MembershipChain,
    pub witnesses: BoundaryWitnesses,
    pub twin_reduction: TwinReduction,
}

/// All maximal cliques, Bron–Kerbosch with pivoting. Deterministic output
/// (cliques sorted).
pub fn maximal_cliques(g: &Graph) -> Vec<Vec<VertexId>> {
    fn expand(
        g: &Graph,
        r: &mut Vec<VertexId>,
        p: BTreeSet<VertexId>,
        x: BTreeSet<VertexId>,
        out: &mut Vec<Vec<VertexId>>,
    ) {
        if p.is_empty() && x.is_empty() {
            out.push(r.clone());
            return;
        }
        // pivot: vertex of p ∪ x with most neighbors inside p
        let pivot = p
            .iter()
            .chain(x.iter())
            .copied()
            .max_by_key(|&u| g.neighbors(u).filter(|w| p.contains(w)).count())
            .expect("p or x nonempty");
        let candidates: Vec<VertexId> = p
            .iter()
            .copied()
            .filter(|&v| !g.has_edge(pivot, v))
            .collect();
        let mut p = p;
        let mut x = x;
        for v in candidates {
            let nv: BTreeSet<VertexId> = g.neighbors(v).collect();
            r.push(v);
            expand(
                g,
                r,
                p.intersection(&nv).copied().collect(),
                x.intersection(&nv).copied().collect(),
                out,
            );
            r.pop();
            p.remove(&v);
            x.insert(v);
        }
    }
    let mut out = Vec::new();
    if g.n() == 0 {
        return out;
    }
    expand(
        g,
        &mut Vec::new(),
        (0..g.n()).collect(),
        BTreeSet::new(),
        &mut out,
    );
    for c in &mut out {
        c.sort_unstable();
    }
    out.sort();
    out
}

/// Fulkerson–Gross style interval recognition: a graph is interval exactly
/// when its maximal cliques admit a linear order in which the cliques
/// containing any fixed vertex appear consecutively. Returns such an order,
/// or the obstruction.
///
/// The ordering search backtracks with failed-state memoization; fine for
/// the sizes this crate targets (linear-time recognition is a non-goal).
pub fn is_interval(g: &Graph) -> Result<Vec<Vec<VertexId>>, IntervalObstruction> {
    let cliques = maximal_cliques(g);
    let k = cliques.len();
    if k <= 2 {
        return Ok(cliques);
    }
    assert!(k <= 64, "clique ordering search supports up to 64 maximal cliques");
    let n = g.n();
    let membership: Vec<u64> = (0..n)
        .map(|v| {
            let mut mask = 0u64;
            for (i, c) in cliques.iter().enumerate() {
                if c.binary_search(&v).is_ok() {
                    mask |= 1 << i;
                }
            }
            mask
        })
        .collect();
    let full: u64 = if k == 64 { !0 } else { (1 << k) - 1 };

    // a vertex begun but not finished must appear in the next clique, so the
    // candidates are the unused cliques containing every open vertex; whether
    // a prefix can extend depends only on its set, hence the dead-set memo
    fn search(
        membership: &[u64],
        used: u64,
        full: u64,
        order: &mut Vec<usize>,
        dead: &mut HashSet<u64>,
    ) -> bool {
        if used == full {
            return true;
        }
        if dead.contains(&used) {
            return false;
        }
        let mut allowed = full & !used;
        for &m in membership {
            if m & used != 0 && m & !used != 0 {
                allowed &= m;
            }
        }
        let mut cands = allowed;
        while cands != 0 {
            let i = cands.trailing_zeros() as usize;
            let bit = 1u64 << i;
            cands &= !bit;
            order.push(i);
            if search(membership, used | bit, full, order, dead) {
                return true;
            }
            order.pop();
        }
        dead.insert(used);
        false
    }

    let mut order = Vec::with_capacity(k);
    let mut dead = HashSet::new();
    if search(&membership, 0, full, &mut order, &mut dead) {
        Ok(order.into_iter().map(|i| cliques[i].clone()).collect())
    } else {
        Err(IntervalObstruction::NoConsecutiveCliqueOrdering {
            maximal_cliques: k,
        })
    }
}

/// Classify by the forbidden-family route: reduce twins, test interval-ness,
/// then screen the reduced graph against each level's forbidden list. All
/// levels are computed (no short-circuit) so monotonicity is observable.
pub fn classify(g: &Graph) -> ClassReport {
    let twin_reduction = g.reduce_twins();
    let red = &twin_reduction.reduced;
    let mut witnesses = BoundaryWitnesses::default();

    let interval = match is_interval(red) {
        Ok(_) => true,
        Err(obstruction) => {
            witnesses.not_interval = Some(obstruction);
            false
        }
    };

    let level = |class: ClassLabel| -> (bool, Option<Witness>) {
        match matcher::screen(red, class) {
            Some(hit) => (false, Some(Witness::ForbiddenSubgraph(hit))),
            None => (true, None),
        }
    };
    let (unit_free, w_unit) = level(ClassLabel::Unit);
    let (upm_free, w_upm) = level(ClassLabel::Upm);
    let (almost_free, w_almost) = level(ClassLabel::AlmostMixed);
    let (mixed_free, w_mixed) = level(ClassLabel::Mixed);
    witnesses.not_unit = w_unit;
    witnesses.not_upm = w_upm;
    witnesses.not_almost_mixed = w_almost;
    witnesses.not_mixed = w_mixed;

    let chain = MembershipChain {
        interval,
        mixed: interval && mixed_free,
        almost_mixed: interval && almost_free,
        upm: interval && upm_free,
        unit: interval && unit_free,
    };
    ClassReport {
        label: chain.label(),
        chain,
        witnesses,
        twin_reduction,
    }
}

/// The five membership booleans.
pub fn membership_chain(g: &Graph) -> MembershipChain {
    classify(g).chain
}
