//! Representation synthesis by backtracking over a finite grid.
//!
//! Left endpoints live on the `1/(2n)` grid inside the window `[0, n]`;
//! vertices are placed breadth-first, each new interval constrained to
//! realize exactly the edges to the already placed vertices and to sit
//! within distance 1 of every placed neighbor. Translation symmetry is
//! factored out: each component's breadth-first root is pinned to position
//! 0 over a signed window (a connected component's left endpoints span at
//! most `n − 1`, so the pinned search and the windowed search find exactly
//! the same representations up to translation), and components are packed
//! left to right afterwards. Grid sufficiency has no proof here; it is
//! validated empirically against the forbidden-family classifier at small
//! n, and interval recognition gates the search (unit intervals are
//! intervals) so exhaustive absence proofs stay cheap.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::classifier::is_interval;
use crate::graph::{Graph, VertexId};
use crate::interval::{IntervalType, Rational, Representation, UnitInterval};

pub const ALL_TYPES: [IntervalType; 4] = [
    IntervalType::Closed,
    IntervalType::Open,
    IntervalType::ClosedOpen,
    IntervalType::OpenClosed,
];

/// Closed + open + closed-open: the almost-mixed repertoire.
pub const ALMOST_MIXED_TYPES: [IntervalType; 3] = [
    IntervalType::Closed,
    IntervalType::Open,
    IntervalType::ClosedOpen,
];

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SynthError {
    #[error("graph has {n} vertices; exhaustive representation enumeration is capped at {cap}")]
    TooLarge { n: usize, cap: usize },
}

fn grid_intersects(ka: i64, ta: IntervalType, kb: i64, tb: IntervalType, den: i64) -> bool {
    let (ka, ta, kb, tb) = if ka <= kb {
        (ka, ta, kb, tb)
    } else {
        (kb, tb, ka, ta)
    };
    match (kb - ka).cmp(&den) {
        std::cmp::Ordering::Less => true,
        std::cmp::Ordering::Equal => ta.flags().1 && tb.flags().0,
        std::cmp::Ordering::Greater => false,
    }
}

/// One placed interval: grid index of the left endpoint, and the type.
type Slot = (i64, IntervalType);

struct GridSearch<'a> {
    g: &'a Graph,
    order: Vec<VertexId>,
    den: i64,
    k_lo: i64,
    k_hi: i64,
    /// component roots take only position 0 (translation symmetry)
    pin_roots: bool,
    allowed: &'a [IntervalType],
}

impl<'a> GridSearch<'a> {
    fn new(
        g: &'a Graph,
        den: i64,
        k_lo: i64,
        k_hi: i64,
        pin_roots: bool,
        allowed: &'a [IntervalType],
    ) -> Self {
        GridSearch {
            g,
            order: g.bfs_order(),
            den,
            k_lo,
            k_hi,
            pin_roots,
            allowed,
        }
    }

    /// Exact-adjacency filter against the placed prefix; duplicates rejected
    /// (representations stay injective).
    fn candidate_ok(&self, slots: &[Slot], v: VertexId, k: i64, ty: IntervalType) -> bool {
        for (i, &(ko, to)) in slots.iter().enumerate() {
            if ko == k && to == ty {
                return false;
            }
            let adjacent = self.g.has_edge(v, self.order[i]);
            if grid_intersects(k, ty, ko, to, self.den) != adjacent {
                return false;
            }
        }
        true
    }

    /// Candidate range for `order[depth]`: within distance 1 of every placed
    /// neighbor; component roots are pinned when translation symmetry has
    /// been factored out.
    fn window(&self, slots: &[Slot], depth: usize) -> Option<(i64, i64)> {
        let v = self.order[depth];
        let mut lo = self.k_lo;
        let mut hi = self.k_hi;
        let mut constrained = false;
        for (i, &(ko, _)) in slots.iter().enumerate() {
            if self.g.has_edge(v, self.order[i]) {
                lo = lo.max(ko - self.den);
                hi = hi.min(ko + self.den);
                constrained = true;
            }
        }
        if !constrained && self.pin_roots {
            // an unconstrained vertex is the first of its component
            lo = 0;
            hi = 0;
        }
        (lo <= hi).then_some((lo, hi))
    }

    /// Every vertex not yet placed but already touched by placed neighbors
    /// must still admit some placement; prunes doomed branches early.
    fn unplaced_all_feasible(&self, slots: &[Slot]) -> bool {
        let depth = slots.len();
        'verts: for later in depth..self.order.len() {
            let v = self.order[later];
            if !self
                .g
                .neighbors(v)
                .any(|u| self.order[..depth].contains(&u))
            {
                continue;
            }
            let Some((lo, hi)) = self.window(slots, later) else {
                return false;
            };
            for k in lo..=hi {
                for &ty in self.allowed {
                    if self.candidate_ok(slots, v, k, ty) {
                        continue 'verts;
                    }
                }
            }
            return false;
        }
        true
    }

    /// Depth-first over placements; returns true when the caller asked to
    /// stop (found what it wanted).
    fn run(&self, slots: &mut Vec<Slot>, emit: &mut dyn FnMut(&[Slot]) -> bool) -> bool {
        let depth = slots.len();
        if depth == self.order.len() {
            return emit(slots);
        }
        let Some((lo, hi)) = self.window(slots, depth) else {
            return false;
        };
        let v = self.order[depth];
        for k in lo..=hi {
            for &ty in self.allowed {
                if !self.candidate_ok(slots, v, k, ty) {
                    continue;
                }
                slots.push((k, ty));
                if self.unplaced_all_feasible(slots) && self.run(slots, emit) {
                    return true;
                }
                slots.pop();
            }
        }
        false
    }
}

/// Search for an injective representation of `g` using only the given
/// endpoint types, on the `1/(2n)` grid. `None` means the search space is
/// exhausted. The result is normalized: each component starts where the
/// previous one ends plus a gap, the leftmost endpoint at 0.
pub fn synthesize_with_types(g: &Graph, allowed: &[IntervalType]) -> Option<Representation> {
    let n = g.n() as i64;
    if n == 0 {
        return Some(Representation::new());
    }
    if is_interval(g).is_err() {
        return None;
    }
    let den = 2 * n;
    let mut merged = Representation::new();
    let mut offset = 0i64;
    for comp in g.connected_components() {
        let (sub, back) = g.induced_subgraph(&comp);
        let bound = (sub.n() as i64 - 1) * den;
        let search = GridSearch::new(&sub, den, -bound, bound, true, allowed);
        let mut slots = Vec::with_capacity(sub.n());
        let mut found: Option<Vec<Slot>> = None;
        search.run(&mut slots, &mut |slots| {
            found = Some(slots.to_vec());
            true
        });
        let slots = found?;
        let min = slots.iter().map(|&(k, _)| k).min().expect("nonempty");
        let max = slots.iter().map(|&(k, _)| k).max().expect("nonempty");
        let shift = offset - min;
        for (i, &(k, ty)) in slots.iter().enumerate() {
            merged.insert(
                back[search.order[i]],
                UnitInterval::of_type(Rational::new((k + shift).into(), den.into()), ty),
            );
        }
        // strictly more than one unit apart: no accidental intersection
        offset = max + shift + den + 1;
    }
    Some(merged)
}

/// An injective mixed (all four types) representation, or `None` when the
/// grid search exhausts. On validated sizes, `None` coincides with the
/// forbidden-family verdict that the graph is not mixed.
pub fn synthesize_mixed(g: &Graph) -> Option<Representation> {
    synthesize_with_types(g, &ALL_TYPES)
}

/// A representation reduced to its combinatorial shape: the sorted
/// `(left, flags)` sequence, translated so the minimum left endpoint is 0
/// and mirror-identified.
pub type CanonicalType = Vec<(Rational, bool, bool)>;

pub fn canonical_type_of(rep: &Representation) -> CanonicalType {
    let intervals: Vec<UnitInterval> = rep.iter().map(|(_, iv)| iv.clone()).collect();
    canonical_type_of_intervals(&intervals)
}

fn canonical_type_of_intervals(intervals: &[UnitInterval]) -> CanonicalType {
    let normalize = |ivs: &[UnitInterval]| -> CanonicalType {
        let min = ivs
            .iter()
            .map(|iv| iv.left.clone())
            .min()
            .expect("nonempty");
        let mut out: CanonicalType = ivs
            .iter()
            .map(|iv| (&iv.left - &min, iv.left_closed, iv.right_closed))
            .collect();
        out.sort();
        out
    };
    if intervals.is_empty() {
        return Vec::new();
    }
    let direct = normalize(intervals);
    let mirrored: Vec<UnitInterval> = intervals.iter().map(|iv| iv.mirror()).collect();
    let reflected = normalize(&mirrored);
    direct.min(reflected)
}

/// All injective mixed representations of `g` on the `1/(2n)` grid that fit
/// in a window of the given width, as distinct canonical types. Capped at 6
/// vertices. For connected graphs the translation orbit is enumerated once.
pub fn enumerate_injective_reps(
    g: &Graph,
    window: &Rational,
) -> Result<Vec<CanonicalType>, SynthError> {
    const CAP: usize = 6;
    if g.n() > CAP {
        return Err(SynthError::TooLarge { n: g.n(), cap: CAP });
    }
    if g.n() == 0 {
        return Ok(vec![Vec::new()]);
    }
    let n = g.n() as i64;
    let den = 2 * n;
    // left endpoints must fit in [0, window - 1]
    let span_rat =
        (window - Rational::from_integer(1.into())) * Rational::from_integer(den.into());
    if span_rat < Rational::from_integer(0.into()) {
        return Ok(Vec::new());
    }
    let span_cap: i64 = i64::try_from(span_rat.floor().to_integer()).expect("window fits in i64");

    let connected = g.is_connected();
    let (k_lo, k_hi) = if connected {
        let bound = ((n - 1) * den).min(span_cap);
        (-bound, bound)
    } else {
        (0, span_cap)
    };
    let search = GridSearch::new(g, den, k_lo, k_hi, connected, &ALL_TYPES);
    let mut slots = Vec::with_capacity(g.n());
    let mut types: BTreeSet<CanonicalType> = BTreeSet::new();
    search.run(&mut slots, &mut |slots| {
        let min = slots.iter().map(|&(k, _)| k).min().unwrap();
        let max = slots.iter().map(|&(k, _)| k).max().unwrap();
        if max - min <= span_cap {
            let intervals: Vec<UnitInterval> = slots
                .iter()
                .map(|&(k, ty)| {
                    UnitInterval::of_type(Rational::new(k.into(), den.into()), ty)
                })
                .collect();
            types.insert(canonical_type_of_intervals(&intervals));
        }
        false
    });
    Ok(types.into_iter().collect())
}

/// Coarser identification: additionally close every free end whose closure
/// keeps the intervals pairwise distinct. Free ends touch nothing, so their
/// closedness is combinatorially inert; the drawings leave such ends
/// noncommittal.
pub fn identify_free_ends(ty: &CanonicalType) -> CanonicalType {
    let mut ivs: Vec<UnitInterval> = ty
        .iter()
        .map(|(l, lc, rc)| UnitInterval::new(l.clone(), *lc, *rc))
        .collect();
    let one = Rational::from_integer(1.into());
    for i in 0..ivs.len() {
        // left end free: no other right endpoint equals this left endpoint
        if !ivs[i].left_closed {
            let l = ivs[i].left.clone();
            let free = ivs.iter().all(|o| &o.left + &one != l);
            let mut closed = ivs[i].clone();
            closed.left_closed = true;
            if free && !ivs.contains(&closed) {
                ivs[i] = closed;
            }
        }
        if !ivs[i].right_closed {
            let r = ivs[i].right();
            let free = ivs.iter().all(|o| o.left != r);
            let mut closed = ivs[i].clone();
            closed.right_closed = true;
            if free && !ivs.contains(&closed) {
                ivs[i] = closed;
            }
        }
    }
    canonical_type_of_intervals(&ivs)
}

/// Number of distinct types after free-end identification.
pub fn coarse_type_count(types: &[CanonicalType]) -> usize {
    types
        .iter()
        .map(identify_free_ends)
        .collect::<BTreeSet<_>>()
        .len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{canonical_representation, generate, FamilyId};
    use crate::interval::rat;

    #[test]
    fn k1_is_the_first_grid_cell() {
        let g = Graph::new(1);
        let rep = synthesize_mixed(&g).unwrap();
        assert_eq!(*rep.get(0).unwrap(), UnitInterval::closed(rat(0, 1)));
    }

    #[test]
    fn claw_synthesis_matches_the_drawn_layout() {
        let claw = generate(FamilyId::K13).unwrap().graph;
        let rep = synthesize_mixed(&claw).expect("claw is mixed");
        assert!(rep.realizes(&claw));
        let drawn = canonical_representation(FamilyId::K13).unwrap();
        assert_eq!(canonical_type_of(&rep), canonical_type_of(&drawn));
    }

    #[test]
    fn k14_has_no_mixed_representation() {
        let k14 = generate(FamilyId::K14).unwrap().graph;
        assert_eq!(synthesize_mixed(&k14), None);
    }

    #[test]
    fn claw_needs_open_and_closed() {
        let claw = generate(FamilyId::K13).unwrap().graph;
        assert!(synthesize_with_types(&claw, &[IntervalType::Closed]).is_none());
        assert!(synthesize_with_types(
            &claw,
            &[IntervalType::Closed, IntervalType::Open]
        )
        .is_some());
    }

    #[test]
    fn fig9_synthesis_is_fast_and_valid() {
        let fig9 = generate(FamilyId::Fig9).unwrap().graph;
        let rep = synthesize_mixed(&fig9).expect("fig9 is mixed");
        assert!(rep.realizes(&fig9));
    }

    #[test]
    fn disconnected_graphs_are_packed() {
        // claw ⊔ K2
        let mut g = Graph::new(6);
        for (u, v) in [(0, 2), (1, 2), (2, 3), (4, 5)] {
            g.add_edge(u, v).unwrap();
        }
        let rep = synthesize_mixed(&g).unwrap();
        assert!(rep.realizes(&g));
    }

    #[test]
    fn claw_enumeration_counts() {
        let claw = generate(FamilyId::K13).unwrap().graph;
        let types = enumerate_injective_reps(&claw, &rat(3, 1)).unwrap();
        // both pendant ends are free: the leftmost interval's left end and
        // the rightmost interval's right end each take two closures, and the
        // mixed combination mirror-identifies, leaving three raw shapes
        assert_eq!(types.len(), 3);
        assert_eq!(coarse_type_count(&types), 1);
    }

    #[test]
    fn k1_single_type() {
        // a lone interval: closed, open, and the mirror-identified half-open
        // pair; every end is free, so the coarse count is one
        let types = enumerate_injective_reps(&Graph::new(1), &rat(2, 1)).unwrap();
        assert_eq!(types.len(), 3);
        assert_eq!(coarse_type_count(&types), 1);
    }

    #[test]
    fn canonical_type_identifies_translates_and_mirrors() {
        let rep = Representation::from_pairs([
            (0, UnitInterval::closed(rat(0, 1))),
            (1, UnitInterval::open_closed(rat(1, 1))),
        ]);
        let shifted = rep.translate(&rat(7, 3));
        assert_eq!(canonical_type_of(&rep), canonical_type_of(&shifted));
        assert_eq!(canonical_type_of(&rep), canonical_type_of(&rep.mirror()));
    }
}
