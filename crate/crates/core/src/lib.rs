//! Mixed unit interval graphs: classification within the hierarchy
//! unit ⊊ UPM ⊊ almost-mixed ⊊ mixed ⊊ interval, generators for the
//! forbidden induced-subgraph families, exact-rational representation
//! synthesis, and the quadratic closing pipeline that recognizes
//! almost-mixed unit interval graphs constructively.
//!
//! Two independent recognizers are exposed and are expected to agree:
//! [`classifier::classify`] screens the twin-reduced graph against the
//! forbidden families, while [`pipeline::recognize_and_represent`] builds an
//! explicit representation and tries to close every open-closed interval.

pub mod classifier;
pub mod closing;
pub mod families;
pub mod format;
pub mod graph;
pub mod interval;
pub mod json;
pub mod matcher;
pub mod pipeline;
pub mod synth;

pub use classifier::{classify, membership_chain, ClassLabel, ClassReport};
pub use format::{emit_graph, parse_graph, GraphFormat};
pub use graph::{Graph, VertexId};
pub use interval::{Rational, Representation, UnitInterval};
pub use pipeline::{recognize_and_represent, RecognitionOutcome};
