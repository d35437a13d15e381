//! Closing transformations: ε-shift rewrites that convert a half-open
//! interval to a closed one while realizing the same graph, and detection of
//! the five-interval neighborhoods that make closing impossible.
//!
//! For an open-closed target `(x, x+1]` the rewrites are tried in order:
//! close in place when no closed interval shares the position (T1); nudge
//! left by ε/4 when the position one to the right holds no closed interval
//! (T2); nudge right by ε/2 when nothing at that position has an open left
//! end (T3); push the far tail right by ε/2 when no interval is left-closed
//! two positions over (T4). A half-open interval standing where a closed one
//! is required is closed first, recursively. When the full neighborhood
//! (closed twin, closed and open intervals one over, a left-closed interval
//! two over) is present, the target is blocked and the neighborhood is the
//! certificate. The closed-open side is the mirror image.

use std::collections::BTreeSet;

use num::One;
use thiserror::Error;

use crate::graph::{Graph, VertexId};
use crate::interval::{
    IntervalType, Rational, RealizeViolation, Representation, UnitInterval,
};
use crate::json::rational_serde;

/// The two half-open interval types.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum HalfOpenKind {
    OpenClosed,
    ClosedOpen,
}

impl HalfOpenKind {
    pub fn interval_type(self) -> IntervalType {
        match self {
            HalfOpenKind::OpenClosed => IntervalType::OpenClosed,
            HalfOpenKind::ClosedOpen => IntervalType::ClosedOpen,
        }
    }

    pub fn other(self) -> HalfOpenKind {
        match self {
            HalfOpenKind::OpenClosed => HalfOpenKind::ClosedOpen,
            HalfOpenKind::ClosedOpen => HalfOpenKind::OpenClosed,
        }
    }
}

/// Visit order for a closing pass.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    RightToLeft,
    LeftToRight,
}

/// The five-role neighborhood certifying that a half-open interval
/// cannot be closed. For an open-closed `u` at `(x, x+1]`: `v` closed at
/// `[x, x+1]`, `w` closed at `[x+1, x+2]`, `y` open at `(x+1, x+2)`, and `z`
/// left-closed at `x+2` (closed or closed-open). Mirrored roles `a..e` for a
/// closed-open `d`, where `a` is right-closed ending at `x-1` (closed or
/// open-closed).
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub enum BlockPattern {
    OpenClosed {
        u: VertexId,
        v: VertexId,
        w: VertexId,
        y: VertexId,
        z: VertexId,
    },
    ClosedOpen {
        a: VertexId,
        b: VertexId,
        c: VertexId,
        d: VertexId,
        e: VertexId,
    },
}

impl BlockPattern {
    pub fn kind(&self) -> HalfOpenKind {
        match self {
            BlockPattern::OpenClosed { .. } => HalfOpenKind::OpenClosed,
            BlockPattern::ClosedOpen { .. } => HalfOpenKind::ClosedOpen,
        }
    }

    /// The blocked vertex itself (`u` or `d`).
    pub fn center(&self) -> VertexId {
        match *self {
            BlockPattern::OpenClosed { u, .. } => u,
            BlockPattern::ClosedOpen { d, .. } => d,
        }
    }

    pub fn role_vertices(&self) -> [VertexId; 5] {
        match *self {
            BlockPattern::OpenClosed { u, v, w, y, z } => [u, v, w, y, z],
            BlockPattern::ClosedOpen { a, b, c, d, e } => [a, b, c, d, e],
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum StepKind {
    T1,
    T2,
    T3,
    T4,
    Mirror,
}

/// One applied transformation: optional uniform shift of a vertex set, then
/// interval assignments. Replaying the steps of a trace reproduces the final
/// representation.
#[derive(Clone, Debug, serde::Serialize)]
pub struct TraceStep {
    pub kind: StepKind,
    pub target: Option<VertexId>,
    pub shifted: Vec<VertexId>,
    #[serde(with = "rational_serde_opt")]
    pub delta: Option<Rational>,
    pub assigned: Vec<(VertexId, SerializableInterval)>,
}

/// Interval in trace/report form.
#[derive(Clone, Debug, serde::Serialize)]
pub struct SerializableInterval {
    #[serde(with = "rational_serde")]
    pub left: Rational,
    pub left_closed: bool,
    pub right_closed: bool,
}

impl From<&UnitInterval> for SerializableInterval {
    fn from(iv: &UnitInterval) -> Self {
        SerializableInterval {
            left: iv.left.clone(),
            left_closed: iv.left_closed,
            right_closed: iv.right_closed,
        }
    }
}

impl From<&SerializableInterval> for UnitInterval {
    fn from(iv: &SerializableInterval) -> Self {
        UnitInterval::new(iv.left.clone(), iv.left_closed, iv.right_closed)
    }
}

mod rational_serde_opt {
    use super::*;
    use serde::Serializer;

    pub fn serialize<S: Serializer>(v: &Option<Rational>, ser: S) -> Result<S::Ok, S::Error> {
        match v {
            None => ser.serialize_none(),
            Some(r) => rational_serde::serialize(r, ser),
        }
    }
}

/// Apply a trace step to a representation.
pub fn apply_step(rep: &mut Representation, step: &TraceStep) {
    if let Some(delta) = &step.delta {
        for &v in &step.shifted {
            let iv = rep.get(v).expect("trace vertex present").clone();
            rep.insert(v, iv.translate(delta));
        }
    }
    for (v, iv) in &step.assigned {
        rep.insert(*v, iv.into());
    }
}

#[derive(Clone, Copy, Debug)]
pub struct ClosingOptions {
    /// Check `realizes` and injectivity after every transformation (and on
    /// entry). O(n²)-ish per step; used by tests, off for benchmarks.
    pub validate_steps: bool,
}

impl Default for ClosingOptions {
    fn default() -> Self {
        ClosingOptions {
            validate_steps: cfg!(debug_assertions),
        }
    }
}

#[derive(Debug, Error)]
pub enum ClosingError {
    #[error("vertex {vertex} is {found:?}, not {expected:?}")]
    NotHalfOpen {
        vertex: VertexId,
        expected: IntervalType,
        found: IntervalType,
    },
    #[error("vertex {0} has no interval")]
    MissingInterval(VertexId),
    #[error("representation does not realize the graph: {0}")]
    DoesNotRealize(RealizeViolation),
    #[error("transformation {kind:?} on {target} broke the representation: {violation}")]
    UnsoundStep {
        kind: StepKind,
        target: VertexId,
        violation: RealizeViolation,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CloseOutcome {
    Closed,
    Blocked(BlockPattern),
}

fn find_at(rep: &Representation, pos: &Rational, ty: IntervalType) -> Option<VertexId> {
    rep.iter()
        .find(|(_, iv)| iv.interval_type() == ty && iv.left == *pos)
        .map(|(v, _)| v)
}

/// Try to close the half-open interval of `target`, applying the
/// transformations above. On success the targeted half-open count strictly
/// decreases and the other never increases; on failure the blocking
/// five-role pattern is returned with the representation untouched by this
/// frame (recursive closes may have rewritten other intervals, soundly).
pub fn try_close(
    rep: &mut Representation,
    g: &Graph,
    target: VertexId,
    kind: HalfOpenKind,
    trace: &mut Vec<TraceStep>,
    opts: &ClosingOptions,
) -> Result<CloseOutcome, ClosingError> {
    let iv = rep
        .get(target)
        .ok_or(ClosingError::MissingInterval(target))?;
    if iv.interval_type() != kind.interval_type() {
        return Err(ClosingError::NotHalfOpen {
            vertex: target,
            expected: kind.interval_type(),
            found: iv.interval_type(),
        });
    }
    if opts.validate_steps {
        rep.verify(g).map_err(ClosingError::DoesNotRealize)?;
    }
    try_close_inner(rep, g, target, kind, trace, opts)
}

fn try_close_inner(
    rep: &mut Representation,
    g: &Graph,
    target: VertexId,
    kind: HalfOpenKind,
    trace: &mut Vec<TraceStep>,
    opts: &ClosingOptions,
) -> Result<CloseOutcome, ClosingError> {
    // +1 for the open-closed side, −1 mirrored
    let sign: Rational = match kind {
        HalfOpenKind::OpenClosed => Rational::one(),
        HalfOpenKind::ClosedOpen => -Rational::one(),
    };
    let far_half_open = match kind {
        HalfOpenKind::OpenClosed => IntervalType::ClosedOpen,
        HalfOpenKind::ClosedOpen => IntervalType::OpenClosed,
    };

    let mut rounds = 0usize;
    loop {
        rounds += 1;
        assert!(
            rounds <= rep.len() + 1,
            "closing loop exceeded the half-open interval supply"
        );
        let iv = rep.get(target).expect("target stays present");
        debug_assert_eq!(iv.interval_type(), kind.interval_type());
        let x = iv.left.clone();
        let pos1 = &x + &sign;
        let pos2 = &x + &sign + &sign;

        let twin = find_at(rep, &x, IntervalType::Closed);
        let near_closed = find_at(rep, &pos1, IntervalType::Closed);
        let near_open = find_at(rep, &pos1, IntervalType::Open);
        let same_next = find_at(rep, &pos1, kind.interval_type());
        let cross_next = find_at(rep, &pos1, kind.other().interval_type());
        let far = find_at(rep, &pos2, IntervalType::Closed)
            .or_else(|| find_at(rep, &pos2, far_half_open));

        // detection precedes any rewrite
        if let (Some(v), Some(w), Some(y), Some(z)) = (twin, near_closed, near_open, far) {
            let pattern = match kind {
                HalfOpenKind::OpenClosed => BlockPattern::OpenClosed {
                    u: target,
                    v,
                    w,
                    y,
                    z,
                },
                HalfOpenKind::ClosedOpen => BlockPattern::ClosedOpen {
                    d: target,
                    e: v,
                    c: w,
                    b: y,
                    a: z,
                },
            };
            return Ok(CloseOutcome::Blocked(pattern));
        }

        // the side of the target that T1/T2 pull inward
        let inward: Vec<VertexId> = rep
            .iter()
            .filter(|&(t, tiv)| {
                t != target && (&tiv.left - &x).is_integer() && {
                    let d = (&tiv.left - &x) * &sign;
                    d <= Rational::from_integer(0.into())
                }
            })
            .map(|(t, _)| t)
            .collect();

        if twin.is_none() {
            // T1: close in place; co-positioned intervals have an open end on
            // the touch side, so pulling the grid back frees it
            let delta = if inward.is_empty() {
                None
            } else {
                Some(-&sign * rep.epsilon() / Rational::from_integer(2.into()))
            };
            apply(
                rep,
                g,
                trace,
                opts,
                StepKind::T1,
                target,
                inward,
                delta,
                vec![(target, UnitInterval::closed(x))],
            )?;
            return Ok(CloseOutcome::Closed);
        }

        if near_closed.is_none() {
            if let Some(cn) = cross_next {
                // a lone half-open interval stands where the closed one is
                // required; close it first (its own T1 applies), then retry
                match try_close_inner(rep, g, cn, kind.other(), trace, opts)? {
                    CloseOutcome::Closed => continue,
                    CloseOutcome::Blocked(p) => return Ok(CloseOutcome::Blocked(p)),
                }
            }
            // T2: pull the grid back and tuck the target just inside it
            let eps = rep.epsilon();
            let delta = -&sign * &eps / Rational::from_integer(2.into());
            let new_left = &x - &sign * &eps / Rational::from_integer(4.into());
            apply(
                rep,
                g,
                trace,
                opts,
                StepKind::T2,
                target,
                inward,
                Some(delta),
                vec![(target, UnitInterval::closed(new_left))],
            )?;
            return Ok(CloseOutcome::Closed);
        }

        if let Some(sn) = same_next {
            // the proof's restart with the neighboring half-open interval
            match try_close_inner(rep, g, sn, kind, trace, opts)? {
                CloseOutcome::Closed => continue,
                CloseOutcome::Blocked(p) => return Ok(CloseOutcome::Blocked(p)),
            }
        }

        if near_open.is_none() {
            // T3: nothing at pos1 has an open end toward the target; slide
            // the target past the grid and close it
            let new_left = &x + &sign * rep.epsilon() / Rational::from_integer(2.into());
            apply(
                rep,
                g,
                trace,
                opts,
                StepKind::T3,
                target,
                vec![],
                None,
                vec![(target, UnitInterval::closed(new_left))],
            )?;
            return Ok(CloseOutcome::Closed);
        }

        // twin, near_closed, near_open all present and not blocked ⇒ no far
        // interval; T4: push the far tail outward, take the open interval
        // and the target along
        debug_assert!(far.is_none());
        let y = near_open.expect("checked above");
        let eps = rep.epsilon();
        let half = &eps / Rational::from_integer(2.into());
        let outward: Vec<VertexId> = rep
            .iter()
            .filter(|&(_, tiv)| {
                (&tiv.left - &x).is_integer()
                    && (&tiv.left - &x) * &sign >= Rational::from_integer(2.into())
            })
            .map(|(t, _)| t)
            .collect();
        let delta = &sign * &half;
        apply(
            rep,
            g,
            trace,
            opts,
            StepKind::T4,
            target,
            outward,
            Some(delta.clone()),
            vec![
                (y, UnitInterval::open(&pos1 + &delta)),
                (target, UnitInterval::closed(&x + &delta)),
            ],
        )?;
        return Ok(CloseOutcome::Closed);
    }
}

#[allow(clippy::too_many_arguments)]
fn apply(
    rep: &mut Representation,
    g: &Graph,
    trace: &mut Vec<TraceStep>,
    opts: &ClosingOptions,
    kind: StepKind,
    target: VertexId,
    shifted: Vec<VertexId>,
    delta: Option<Rational>,
    assigned: Vec<(VertexId, UnitInterval)>,
) -> Result<(), ClosingError> {
    let step = TraceStep {
        kind,
        target: Some(target),
        shifted,
        delta,
        assigned: assigned
            .iter()
            .map(|(v, iv)| (*v, SerializableInterval::from(iv)))
            .collect(),
    };
    apply_step(rep, &step);
    trace.push(step);
    if opts.validate_steps {
        if let Err(violation) = rep.verify(g) {
            return Err(ClosingError::UnsoundStep {
                kind,
                target,
                violation,
            });
        }
        debug_assert!(rep.is_injective(), "{kind:?} broke injectivity");
    }
    Ok(())
}

/// Visit every interval of `kind` inside `component` (ordered by position,
/// per `direction`, ties by vertex id) and try to close each. Returns the
/// distinct block patterns of the survivors. A second identical pass applies
/// no transformation: closing cannot enable new closings.
pub fn closing_pass(
    rep: &mut Representation,
    g: &Graph,
    component: &BTreeSet<VertexId>,
    kind: HalfOpenKind,
    direction: Direction,
    trace: &mut Vec<TraceStep>,
    opts: &ClosingOptions,
) -> Result<Vec<BlockPattern>, ClosingError> {
    let mut targets: Vec<(Rational, VertexId)> = component
        .iter()
        .filter_map(|&v| {
            rep.get(v).and_then(|iv| {
                (iv.interval_type() == kind.interval_type()).then(|| (iv.left.clone(), v))
            })
        })
        .collect();
    match direction {
        Direction::RightToLeft => {
            targets.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        }
        Direction::LeftToRight => {
            targets.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.cmp(&b.1)));
        }
    }
    let mut patterns: Vec<BlockPattern> = Vec::new();
    for (_, v) in targets {
        let still = rep
            .get(v)
            .is_some_and(|iv| iv.interval_type() == kind.interval_type());
        if !still {
            continue; // closed along the way by a recursive step
        }
        match try_close(rep, g, v, kind, trace, opts)? {
            CloseOutcome::Closed => {}
            CloseOutcome::Blocked(p) => {
                if !patterns.contains(&p) {
                    patterns.push(p);
                }
            }
        }
    }
    Ok(patterns)
}
