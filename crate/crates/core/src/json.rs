//! JSON form of representations:
//! `{"vertices":[{"id","label"?,"left":{"num","den"},"left_closed","right_closed"}]}`.
//!
//! The right endpoint is implicit (`left + 1`). Numerator and denominator are
//! serialized as exact JSON integers of arbitrary size, never floats.

use num::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::Number;
use thiserror::Error;

use crate::graph::{Graph, VertexId};
use crate::interval::{Rational, Representation, UnitInterval};

#[derive(Debug, Error)]
pub enum JsonError {
    #[error("json: {0}")]
    Syntax(#[from] serde_json::Error),
    #[error("vertex {0}: {1} is not an integer")]
    NotAnInteger(VertexId, &'static str),
    #[error("vertex {0}: denominator must be positive")]
    NonPositiveDenominator(VertexId),
    #[error("duplicate vertex id {0}")]
    DuplicateVertex(VertexId),
}

#[derive(Serialize, Deserialize)]
struct RationalJson {
    num: Number,
    den: Number,
}

#[derive(Serialize, Deserialize)]
struct VertexJson {
    id: VertexId,
    #[serde(skip_serializing_if = "Option::is_none")]
    label: Option<String>,
    left: RationalJson,
    left_closed: bool,
    right_closed: bool,
}

#[derive(Serialize, Deserialize)]
struct RepresentationJson {
    vertices: Vec<VertexJson>,
}

fn bigint_to_number(i: &BigInt) -> Number {
    // arbitrary_precision keeps the digits as-is
    Number::from_string_unchecked(i.to_string())
}

fn number_to_bigint(n: &Number) -> Option<BigInt> {
    n.as_str().parse().ok()
}

pub fn representation_to_json(rep: &Representation, graph: Option<&Graph>) -> String {
    let labels = graph.and_then(|g| g.labels.as_ref());
    let vertices = rep
        .iter()
        .map(|(v, iv)| VertexJson {
            id: v,
            label: labels.and_then(|ls| ls.get(v).cloned()),
            left: RationalJson {
                num: bigint_to_number(iv.left.numer()),
                den: bigint_to_number(iv.left.denom()),
            },
            left_closed: iv.left_closed,
            right_closed: iv.right_closed,
        })
        .collect();
    serde_json::to_string_pretty(&RepresentationJson { vertices })
        .expect("representation serializes")
}

pub fn representation_from_json(data: &str) -> Result<Representation, JsonError> {
    let parsed: RepresentationJson = serde_json::from_str(data)?;
    let mut rep = Representation::new();
    for v in parsed.vertices {
        let num = number_to_bigint(&v.left.num).ok_or(JsonError::NotAnInteger(v.id, "num"))?;
        let den = number_to_bigint(&v.left.den).ok_or(JsonError::NotAnInteger(v.id, "den"))?;
        if den <= BigInt::from(0) {
            return Err(JsonError::NonPositiveDenominator(v.id));
        }
        if rep.get(v.id).is_some() {
            return Err(JsonError::DuplicateVertex(v.id));
        }
        rep.insert(
            v.id,
            UnitInterval::new(Rational::new(num, den), v.left_closed, v.right_closed),
        );
    }
    Ok(rep)
}

/// Representations serialize as their JSON schema (vertices array).
impl Serialize for Representation {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        let vertices: Vec<VertexJson> = self
            .iter()
            .map(|(v, iv)| VertexJson {
                id: v,
                label: None,
                left: RationalJson {
                    num: bigint_to_number(iv.left.numer()),
                    den: bigint_to_number(iv.left.denom()),
                },
                left_closed: iv.left_closed,
                right_closed: iv.right_closed,
            })
            .collect();
        RepresentationJson { vertices }.serialize(ser)
    }
}

/// Serde adapter so rationals inside traces and reports use the same
/// `{num, den}` form as the representation schema.
pub mod rational_serde {
    use super::*;
    use serde::de::Error as _;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(value: &Rational, ser: S) -> Result<S::Ok, S::Error> {
        RationalJson {
            num: bigint_to_number(value.numer()),
            den: bigint_to_number(value.denom()),
        }
        .serialize(ser)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Rational, D::Error> {
        let raw = RationalJson::deserialize(de)?;
        let num = number_to_bigint(&raw.num).ok_or_else(|| D::Error::custom("num"))?;
        let den = number_to_bigint(&raw.den).ok_or_else(|| D::Error::custom("den"))?;
        if den <= BigInt::from(0) {
            return Err(D::Error::custom("denominator must be positive"));
        }
        Ok(Rational::new(num, den))
    }
}
