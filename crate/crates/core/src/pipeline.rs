//! The end-to-end recognizer: prune twins, synthesize a mixed representation
//! per component, run the two closing passes, mirror components whose
//! leftover half-open intervals are all open-closed, and expand twins back.
//! Membership in the almost-mixed class is decided by whether any open-closed
//! interval survives; a component keeping both half-open types yields the
//! two blocked patterns as the negative certificate.
//!
//! Pass order, one deliberate choice: open-closed intervals are visited
//! right to left (their transformations pull the grid leftward and recurse
//! rightward), then closed-open intervals left to right (the mirror image).
//! One pass per half-open type suffices because closing an interval never
//! enables a previously blocked closing; the per-component mirror step
//! afterwards makes the asymmetry harmless, and the mirror-consistency
//! tests guard the choice.

use std::collections::BTreeSet;

use num::One;
use thiserror::Error;

use crate::classifier::{self, ClassLabel, IntervalObstruction, Witness};
use crate::closing::{
    closing_pass, BlockPattern, ClosingError, ClosingOptions, Direction, HalfOpenKind,
    SerializableInterval, StepKind, TraceStep,
};
use crate::graph::{Graph, VertexId};
use crate::interval::{expand_twins, IntervalType, Rational, Representation, UnitInterval};
use crate::synth::synthesize_mixed;

#[derive(Clone, Copy, Debug, Default)]
pub struct PipelineOptions {
    pub closing: ClosingOptions,
}

impl PipelineOptions {
    pub fn validated() -> Self {
        PipelineOptions {
            closing: ClosingOptions {
                validate_steps: true,
            },
        }
    }

    pub fn unchecked() -> Self {
        PipelineOptions {
            closing: ClosingOptions {
                validate_steps: false,
            },
        }
    }
}

/// Ordered log of the closing stage on the twin-reduced graph: replaying
/// `steps` from `initial` reproduces `final_rep` (which is the representation
/// before twins are expanded back).
#[derive(Clone, Debug, Default, serde::Serialize)]
pub struct PipelineTrace {
    pub initial: Representation,
    pub steps: Vec<TraceStep>,
    pub final_rep: Representation,
}

impl PipelineTrace {
    pub fn replay(&self) -> Representation {
        let mut rep = self.initial.clone();
        for step in &self.steps {
            crate::closing::apply_step(&mut rep, step);
        }
        rep
    }
}

/// Why the pipeline answered "not a member".
#[derive(Clone, Debug, serde::Serialize)]
pub enum FailureReason {
    /// Synthesis found no mixed representation; the forbidden-family route
    /// supplies the separating evidence.
    NotMixed {
        label: ClassLabel,
        witness: Option<Witness>,
        obstruction: Option<IntervalObstruction>,
    },
    /// Some component kept both half-open types: the two blocked
    /// neighborhoods certify non-membership.
    BlockedPair {
        open_closed: BlockPattern,
        closed_open: BlockPattern,
    },
}

#[derive(Clone, Debug)]
pub struct RecognitionOutcome {
    pub member: bool,
    /// Present exactly when `member`: realizes the input graph using no
    /// open-closed interval.
    pub representation: Option<Representation>,
    pub failure: Option<FailureReason>,
    pub trace: PipelineTrace,
}

impl RecognitionOutcome {
    pub fn block_witness(&self) -> Option<(&BlockPattern, &BlockPattern)> {
        match &self.failure {
            Some(FailureReason::BlockedPair {
                open_closed,
                closed_open,
            }) => Some((open_closed, closed_open)),
            _ => None,
        }
    }
}

#[derive(Debug, Error)]
pub enum PipelineError {
    #[error(transparent)]
    Closing(#[from] ClosingError),
}

fn census_in(rep: &Representation, comp: &BTreeSet<VertexId>) -> (usize, usize) {
    let mut oc = 0;
    let mut co = 0;
    for &v in comp {
        match rep.get(v).map(|iv| iv.interval_type()) {
            Some(IntervalType::OpenClosed) => oc += 1,
            Some(IntervalType::ClosedOpen) => co += 1,
            _ => {}
        }
    }
    (oc, co)
}

fn mirror_component(rep: &mut Representation, comp: &BTreeSet<VertexId>, trace: &mut Vec<TraceStep>) {
    let lefts: Vec<Rational> = comp
        .iter()
        .map(|&v| rep.get(v).expect("component is covered").left.clone())
        .collect();
    let min = lefts.iter().min().expect("nonempty component").clone();
    let max = lefts.iter().max().expect("nonempty component").clone();
    // reflect in place: new left = (min + max + 1) - left - 1 keeps the span
    let pivot = &min + &max + Rational::one();
    let assigned: Vec<(VertexId, SerializableInterval)> = comp
        .iter()
        .map(|&v| {
            let iv = rep.get(v).unwrap();
            let new = UnitInterval::new(
                &pivot - iv.right(),
                iv.right_closed,
                iv.left_closed,
            );
            (v, SerializableInterval::from(&new))
        })
        .collect();
    let step = TraceStep {
        kind: StepKind::Mirror,
        target: None,
        shifted: Vec::new(),
        delta: None,
        assigned,
    };
    crate::closing::apply_step(rep, &step);
    trace.push(step);
}

/// Closing passes + per-component symmetrization on a representation that
/// already realizes `g`. Returns the blocked pair if some component keeps
/// both half-open types.
fn closing_stage(
    rep: &mut Representation,
    g: &Graph,
    comps: &[BTreeSet<VertexId>],
    trace: &mut Vec<TraceStep>,
    opts: &PipelineOptions,
) -> Result<Option<(BlockPattern, BlockPattern)>, PipelineError> {
    let mut pair: Option<(BlockPattern, BlockPattern)> = None;
    for comp in comps {
        let oc_patterns = closing_pass(
            rep,
            g,
            comp,
            HalfOpenKind::OpenClosed,
            Direction::RightToLeft,
            trace,
            &opts.closing,
        )?;
        let co_patterns = closing_pass(
            rep,
            g,
            comp,
            HalfOpenKind::ClosedOpen,
            Direction::LeftToRight,
            trace,
            &opts.closing,
        )?;
        let (oc_left, co_left) = census_in(rep, comp);
        if oc_left > 0 && co_left > 0 {
            if pair.is_none() {
                let oc = oc_patterns
                    .first()
                    .cloned()
                    .expect("surviving open-closed interval carries a pattern");
                let co = co_patterns
                    .first()
                    .cloned()
                    .expect("surviving closed-open interval carries a pattern");
                pair = Some((oc, co));
            }
        } else if oc_left > 0 {
            mirror_component(rep, comp, trace);
        }
    }
    Ok(pair)
}

/// Full pipeline: twin reduction, per-component synthesis, the closing
/// stage, and twin expansion.
pub fn recognize_and_represent(g: &Graph) -> RecognitionOutcome {
    recognize_with_options(g, &PipelineOptions::default()).expect("default options do not validate")
}

pub fn recognize_with_options(
    g: &Graph,
    opts: &PipelineOptions,
) -> Result<RecognitionOutcome, PipelineError> {
    let reduction = g.reduce_twins();
    let red = &reduction.reduced;
    let comps = red.connected_components();

    // synthesize per component into disjoint windows (3 apart, so closing
    // shifts of less than 1 can never couple components)
    let mut merged = Representation::new();
    let mut offset = Rational::from_integer(0.into());
    for comp in &comps {
        let (sub, back) = red.induced_subgraph(comp);
        let Some(sub_rep) = synthesize_mixed(&sub) else {
            let report = classifier::classify(g);
            return Ok(RecognitionOutcome {
                member: false,
                representation: None,
                failure: Some(FailureReason::NotMixed {
                    label: report.label,
                    witness: report.witnesses.not_mixed.clone(),
                    obstruction: report.witnesses.not_interval.clone(),
                }),
                trace: PipelineTrace::default(),
            });
        };
        let min = sub_rep
            .iter()
            .map(|(_, iv)| iv.left.clone())
            .min()
            .expect("component is nonempty");
        let shift = &offset - &min;
        let mut max = offset.clone();
        for (local, iv) in sub_rep.iter() {
            let moved = iv.translate(&shift);
            if moved.left > max {
                max = moved.left.clone();
            }
            merged.insert(back[local], moved);
        }
        offset = max + Rational::from_integer(4.into());
    }

    let mut trace = PipelineTrace {
        initial: merged.clone(),
        ..Default::default()
    };
    let mut rep = merged;
    let pair = closing_stage(&mut rep, red, &comps, &mut trace.steps, opts)?;
    trace.final_rep = rep.clone();

    if let Some((oc, co)) = pair {
        return Ok(RecognitionOutcome {
            member: false,
            representation: None,
            failure: Some(FailureReason::BlockedPair {
                open_closed: oc,
                closed_open: co,
            }),
            trace,
        });
    }

    debug_assert_eq!(rep.type_census().open_closed, 0);
    let full = expand_twins(&reduction, &rep).expect("pipeline covers all representatives");
    if opts.closing.validate_steps {
        assert!(full.realizes(g), "expanded representation must realize the input");
    }
    Ok(RecognitionOutcome {
        member: true,
        representation: Some(full),
        failure: None,
        trace,
    })
}

/// The closing stage on a caller-supplied starting representation (skipping
/// twin reduction and synthesis), so the quadratic pipeline can be driven at
/// sizes the grid search cannot reach. `rep` must realize `g` and be
/// injective.
pub fn recognize_with_start(
    g: &Graph,
    rep: Representation,
    opts: &PipelineOptions,
) -> Result<RecognitionOutcome, PipelineError> {
    if opts.closing.validate_steps {
        if let Err(v) = rep.verify(g) {
            return Err(PipelineError::Closing(ClosingError::DoesNotRealize(v)));
        }
    }
    let comps = g.connected_components();
    let mut trace = PipelineTrace {
        initial: rep.clone(),
        ..Default::default()
    };
    let mut rep = rep;
    let pair = closing_stage(&mut rep, g, &comps, &mut trace.steps, opts)?;
    trace.final_rep = rep.clone();
    if let Some((oc, co)) = pair {
        return Ok(RecognitionOutcome {
            member: false,
            representation: None,
            failure: Some(FailureReason::BlockedPair {
                open_closed: oc,
                closed_open: co,
            }),
            trace,
        });
    }
    Ok(RecognitionOutcome {
        member: true,
        representation: Some(rep),
        failure: None,
        trace,
    })
}
