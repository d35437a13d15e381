//! Exact unit-interval arithmetic: the four endpoint types, intersection
//! semantics, representation validation, ε, end freeness, and mirroring.
//!
//! Everything is exact rational; floating point is deliberately absent. The
//! closing transformations hinge on exact endpoint coincidences
//! (`r(t) = ℓ(x)`), which floats would corrupt.

use std::collections::BTreeMap;
use std::fmt;

use num::{BigRational, One, Signed, Zero};
use thiserror::Error;

use crate::graph::{Graph, TwinReduction, VertexId};

/// Exact rational scalar. Kept in lowest terms with positive denominator by
/// the underlying type; arbitrary precision so ε-halving chains never
/// overflow.
pub type Rational = BigRational;

/// `n/d` as a [`Rational`].
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// One of the four unit-interval endpoint types.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize, serde::Deserialize)]
pub enum IntervalType {
    /// `[x, x+1]`
    Closed,
    /// `(x, x+1)`
    Open,
    /// `[x, x+1)`
    ClosedOpen,
    /// `(x, x+1]`
    OpenClosed,
}

impl IntervalType {
    pub fn flags(self) -> (bool, bool) {
        match self {
            IntervalType::Closed => (true, true),
            IntervalType::Open => (false, false),
            IntervalType::ClosedOpen => (true, false),
            IntervalType::OpenClosed => (false, true),
        }
    }

    pub fn from_flags(left_closed: bool, right_closed: bool) -> Self {
        match (left_closed, right_closed) {
            (true, true) => IntervalType::Closed,
            (false, false) => IntervalType::Open,
            (true, false) => IntervalType::ClosedOpen,
            (false, true) => IntervalType::OpenClosed,
        }
    }
}

/// A unit-length interval: left endpoint plus closedness flags. The right
/// endpoint is implicitly `left + 1`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct UnitInterval {
    pub left: Rational,
    pub left_closed: bool,
    pub right_closed: bool,
}

impl UnitInterval {
    pub fn new(left: Rational, left_closed: bool, right_closed: bool) -> Self {
        UnitInterval {
            left,
            left_closed,
            right_closed,
        }
    }

    pub fn of_type(left: Rational, ty: IntervalType) -> Self {
        let (l, r) = ty.flags();
        UnitInterval::new(left, l, r)
    }

    pub fn closed(left: Rational) -> Self {
        Self::of_type(left, IntervalType::Closed)
    }

    pub fn open(left: Rational) -> Self {
        Self::of_type(left, IntervalType::Open)
    }

    pub fn closed_open(left: Rational) -> Self {
        Self::of_type(left, IntervalType::ClosedOpen)
    }

    pub fn open_closed(left: Rational) -> Self {
        Self::of_type(left, IntervalType::OpenClosed)
    }

    pub fn right(&self) -> Rational {
        &self.left + Rational::one()
    }

    pub fn interval_type(&self) -> IntervalType {
        IntervalType::from_flags(self.left_closed, self.right_closed)
    }

    /// Reflection `x ↦ −x`: `[x, x+1]` with flags `(L, R)` becomes
    /// `[−x−1, −x]` with flags `(R, L)`.
    pub fn mirror(&self) -> UnitInterval {
        UnitInterval {
            left: -self.right(),
            left_closed: self.right_closed,
            right_closed: self.left_closed,
        }
    }

    pub fn translate(&self, delta: &Rational) -> UnitInterval {
        UnitInterval {
            left: &self.left + delta,
            left_closed: self.left_closed,
            right_closed: self.right_closed,
        }
    }
}

impl fmt::Display for UnitInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}{}, {}{}",
            if self.left_closed { '[' } else { '(' },
            self.left,
            self.right(),
            if self.right_closed { ']' } else { ')' },
        )
    }
}

/// Point-set intersection of two unit intervals.
///
/// With `ℓ(a) ≤ ℓ(b)`: nonempty if `ℓ(b) < ℓ(a)+1`; at `ℓ(b) = ℓ(a)+1`
/// exactly when `a` is right-closed and `b` is left-closed.
pub fn intersects(a: &UnitInterval, b: &UnitInterval) -> bool {
    let (lo, hi) = if a.left <= b.left { (a, b) } else { (b, a) };
    let touch = lo.right();
    if hi.left < touch {
        true
    } else if hi.left == touch {
        lo.right_closed && hi.left_closed
    } else {
        false
    }
}

/// Which side of an interval an endpoint event belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Side {
    Left,
    Right,
}

/// One interval endpoint, for sweeps over a representation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EndpointEvent {
    pub position: Rational,
    pub vertex: VertexId,
    pub side: Side,
    pub closed: bool,
}

/// First discrepancy between a representation and a graph.
#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum RealizeViolation {
    #[error("representation does not cover vertex {0}")]
    NotTotal(VertexId),
    #[error("missing edge: vertices {0} and {1} are adjacent but their intervals are disjoint")]
    MissingEdge(VertexId, VertexId),
    #[error("extra edge: vertices {0} and {1} are non-adjacent but their intervals intersect")]
    ExtraEdge(VertexId, VertexId),
}

/// Counts of intervals per endpoint type.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, serde::Serialize)]
pub struct TypeCensus {
    pub closed: usize,
    pub open: usize,
    pub closed_open: usize,
    pub open_closed: usize,
}

/// An assignment of unit intervals to vertices.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Representation {
    intervals: BTreeMap<VertexId, UnitInterval>,
}

impl Representation {
    pub fn new() -> Self {
        Representation::default()
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (VertexId, UnitInterval)>) -> Self {
        Representation {
            intervals: pairs.into_iter().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn get(&self, v: VertexId) -> Option<&UnitInterval> {
        self.intervals.get(&v)
    }

    pub fn insert(&mut self, v: VertexId, interval: UnitInterval) {
        self.intervals.insert(v, interval);
    }

    pub fn iter(&self) -> impl Iterator<Item = (VertexId, &UnitInterval)> {
        self.intervals.iter().map(|(&v, i)| (v, i))
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.intervals.keys().copied()
    }

    /// No two vertices share the same interval. Not an invariant: twins are
    /// deliberately assigned equal intervals by twin expansion.
    pub fn is_injective(&self) -> bool {
        let mut seen: Vec<&UnitInterval> = self.intervals.values().collect();
        seen.sort();
        seen.windows(2).all(|w| w[0] != w[1])
    }

    pub fn type_census(&self) -> TypeCensus {
        let mut c = TypeCensus::default();
        for iv in self.intervals.values() {
            match iv.interval_type() {
                IntervalType::Closed => c.closed += 1,
                IntervalType::Open => c.open += 1,
                IntervalType::ClosedOpen => c.closed_open += 1,
                IntervalType::OpenClosed => c.open_closed += 1,
            }
        }
        c
    }

    /// All endpoint events sorted by position, then vertex, then side.
    pub fn endpoint_events(&self) -> Vec<EndpointEvent> {
        let mut events = Vec::with_capacity(2 * self.len());
        for (&v, iv) in &self.intervals {
            events.push(EndpointEvent {
                position: iv.left.clone(),
                vertex: v,
                side: Side::Left,
                closed: iv.left_closed,
            });
            events.push(EndpointEvent {
                position: iv.right(),
                vertex: v,
                side: Side::Right,
                closed: iv.right_closed,
            });
        }
        events.sort_by(|a, b| {
            a.position
                .cmp(&b.position)
                .then(a.vertex.cmp(&b.vertex))
                .then(a.side.cmp(&b.side))
        });
        events
    }

    /// Smallest nonzero distance between any two endpoint values, capped at 1.
    ///
    /// Every nonempty representation has the gap `r(v) − ℓ(v) = 1`, so the
    /// result is always in `(0, 1]`.
    pub fn epsilon(&self) -> Rational {
        assert!(!self.is_empty(), "epsilon of an empty representation");
        let mut values: Vec<Rational> = Vec::with_capacity(2 * self.len());
        for iv in self.intervals.values() {
            values.push(iv.left.clone());
            values.push(iv.right());
        }
        values.sort();
        let mut eps = Rational::one();
        for w in values.windows(2) {
            let gap = &w[1] - &w[0];
            if !gap.is_zero() && gap < eps {
                eps = gap;
            }
        }
        eps
    }

    /// No other vertex's right endpoint coincides with `v`'s left endpoint.
    pub fn is_left_free(&self, v: VertexId) -> bool {
        let lv = &self.intervals[&v].left;
        !self
            .intervals
            .iter()
            .any(|(&t, iv)| t != v && iv.right() == *lv)
    }

    /// No other vertex's left endpoint coincides with `v`'s right endpoint.
    pub fn is_right_free(&self, v: VertexId) -> bool {
        let rv = self.intervals[&v].right();
        !self
            .intervals
            .iter()
            .any(|(&t, iv)| t != v && iv.left == rv)
    }

    /// Reflect every interval about 0 (open-closed ↔ closed-open swap).
    /// Realizes the same graph.
    pub fn mirror(&self) -> Representation {
        Representation {
            intervals: self
                .intervals
                .iter()
                .map(|(&v, iv)| (v, iv.mirror()))
                .collect(),
        }
    }

    pub fn translate(&self, delta: &Rational) -> Representation {
        Representation {
            intervals: self
                .intervals
                .iter()
                .map(|(&v, iv)| (v, iv.translate(delta)))
                .collect(),
        }
    }

    /// Check that interval intersections match the graph's edges exactly.
    /// Returns the first violation in lexicographic pair order.
    ///
    /// Pairs whose left endpoints differ by more than 1 cannot intersect, so
    /// only edges and position-close pairs are examined.
    pub fn verify(&self, g: &Graph) -> Result<(), RealizeViolation> {
        for v in 0..g.n() {
            if !self.intervals.contains_key(&v) {
                return Err(RealizeViolation::NotTotal(v));
            }
        }
        let mut by_pos: Vec<(&Rational, VertexId)> = self
            .intervals
            .iter()
            .filter(|(&v, _)| v < g.n())
            .map(|(&v, iv)| (&iv.left, v))
            .collect();
        by_pos.sort();
        let mut first: Option<RealizeViolation> = None;
        let mut note = |viol: RealizeViolation, key: (VertexId, VertexId)| {
            let better = match &first {
                None => true,
                Some(RealizeViolation::MissingEdge(a, b))
                | Some(RealizeViolation::ExtraEdge(a, b)) => key < (*a, *b),
                Some(RealizeViolation::NotTotal(_)) => false,
            };
            if better {
                first = Some(viol);
            }
        };
        for (i, &(li, u)) in by_pos.iter().enumerate() {
            let hi = li + Rational::one();
            for &(lj, v) in by_pos[i + 1..].iter() {
                if *lj > hi {
                    break;
                }
                let (a, b) = (u.min(v), u.max(v));
                let meet = intersects(&self.intervals[&u], &self.intervals[&v]);
                if meet != g.has_edge(a, b) {
                    note(
                        if meet {
                            RealizeViolation::ExtraEdge(a, b)
                        } else {
                            RealizeViolation::MissingEdge(a, b)
                        },
                        (a, b),
                    );
                }
            }
        }
        // Edges between far-apart intervals are always missing; the sweep
        // above never visits them.
        for (a, b) in g.edges() {
            let gap = (&self.intervals[&a].left - &self.intervals[&b].left).abs();
            if gap > Rational::one() {
                note(RealizeViolation::MissingEdge(a, b), (a, b));
            }
        }
        match first {
            None => Ok(()),
            Some(v) => Err(v),
        }
    }

    pub fn realizes(&self, g: &Graph) -> bool {
        self.verify(g).is_ok()
    }

    /// The graph this representation induces: vertices are the keys, edges
    /// the intersecting pairs.
    pub fn induced_graph(&self) -> Graph {
        let verts: Vec<VertexId> = self.vertices().collect();
        let n = verts.iter().copied().max().map_or(0, |m| m + 1);
        let mut by_pos: Vec<(&Rational, VertexId)> = self
            .intervals
            .iter()
            .map(|(&v, iv)| (&iv.left, v))
            .collect();
        by_pos.sort();
        let mut g = Graph::new(n);
        for (i, &(li, u)) in by_pos.iter().enumerate() {
            let hi = li + Rational::one();
            for &(lj, v) in by_pos[i + 1..].iter() {
                if *lj > hi {
                    break;
                }
                if intersects(&self.intervals[&u], &self.intervals[&v]) {
                    g.add_edge(u, v).expect("distinct keys give simple edges");
                }
            }
        }
        g
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExpandError {
    #[error("representation missing representative {0} (reduced id)")]
    MissingRepresentative(VertexId),
}

/// Give every original vertex its twin-class representative's interval.
/// Twins may share intervals, so the result realizes the original graph
/// whenever `rep` realizes the reduced one.
pub fn expand_twins(
    reduction: &TwinReduction,
    rep: &Representation,
) -> Result<Representation, ExpandError> {
    let mut out = Representation::new();
    for (orig, &red) in reduction.class_map.iter().enumerate() {
        let iv = rep
            .get(red)
            .ok_or(ExpandError::MissingRepresentative(red))?;
        out.insert(orig, iv.clone());
    }
    Ok(out)
}
