//! Generators for the named graphs and forbidden families of the mixed unit
//! interval hierarchy, with the canonical interval layouts where a layout
//! exists.
//!
//! Fixed small graphs are hard-coded; the parameterized families (R, S, S′,
//! T and the two-gadget classes A, B, B′, B″) are built by chain rules
//! calibrated so the small instances are edge-identical to the hard-coded
//! ones (enforced by unit tests below). Every family that comes with a
//! canonical layout is cross-checked: the layout must realize the generated
//! graph exactly, so the edge sets and the layouts vouch for each other.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::graph::{Graph, VertexId};
use crate::interval::{rat, Rational, Representation, UnitInterval};

/// A family name with its parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize)]
pub enum FamilyId {
    K13,
    K14,
    K14Star,
    K23Star,
    K24Star,
    R(u32),
    S(u32),
    SPrime(u32),
    T(u32, u32),
    A(u32),
    B(u32),
    BPrime(u32),
    BPrimePrime(u32),
    C(i32),
    CPrime(i32),
    Fig3,
    Fig9,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("{0}")]
    ParamOutOfRange(String),
    #[error("unknown family name `{0}`")]
    UnknownName(String),
    #[error("family `{name}` takes {expected} parameter(s), got {got}")]
    WrongParamCount {
        name: String,
        expected: usize,
        got: usize,
    },
}

/// A generated family member: the graph, the vertex labels used by the
/// source drawing (if any), and the drawing's interval layout (if any).
#[derive(Clone, Debug)]
pub struct FamilyInstance {
    pub id: FamilyId,
    pub graph: Graph,
    pub role_labels: BTreeMap<VertexId, String>,
    pub canonical_rep: Option<Representation>,
}

impl FamilyId {
    pub fn validate(&self) -> Result<(), FamilyError> {
        let err = |msg: String| Err(FamilyError::ParamOutOfRange(msg));
        match *self {
            FamilyId::S(i) | FamilyId::SPrime(i) if i < 1 => err(format!("S/S' require i >= 1, got {i}")),
            FamilyId::BPrime(i) if i < 1 => err(format!("B' requires i >= 1, got {i}")),
            FamilyId::BPrimePrime(i) if i < 2 => err(format!("B'' requires i >= 2, got {i}")),
            FamilyId::C(k) | FamilyId::CPrime(k) if !(-2..=2).contains(&k) => {
                err(format!("C/C' require k in -2..=2, got {k}"))
            }
            _ => Ok(()),
        }
    }

    /// `|V(generate(self))|` without building the graph.
    pub fn vertex_count(&self) -> Result<usize, FamilyError> {
        self.validate()?;
        Ok(match *self {
            FamilyId::K13 => 4,
            FamilyId::K14 | FamilyId::K14Star | FamilyId::K23Star => 5,
            FamilyId::K24Star => 6,
            FamilyId::R(i) => 2 * i as usize + 5,
            FamilyId::S(i) | FamilyId::SPrime(i) => 2 * i as usize + 4,
            FamilyId::T(i, j) => 2 * (i + j) as usize + 6,
            FamilyId::A(i) | FamilyId::B(i) | FamilyId::BPrime(i) | FamilyId::BPrimePrime(i) => {
                10 + i as usize
            }
            FamilyId::C(k) => match k {
                -2 | 2 => 9,
                -1 | 1 => 8,
                0 => 6,
                _ => unreachable!(),
            },
            FamilyId::CPrime(_) => 10,
            FamilyId::Fig3 => 6,
            FamilyId::Fig9 => 8,
        })
    }

    /// Lowercase CLI name.
    pub fn name(&self) -> &'static str {
        match self {
            FamilyId::K13 => "k13",
            FamilyId::K14 => "k14",
            FamilyId::K14Star => "k14star",
            FamilyId::K23Star => "k23star",
            FamilyId::K24Star => "k24star",
            FamilyId::R(_) => "r",
            FamilyId::S(_) => "s",
            FamilyId::SPrime(_) => "sprime",
            FamilyId::T(..) => "t",
            FamilyId::A(_) => "a",
            FamilyId::B(_) => "b",
            FamilyId::BPrime(_) => "bprime",
            FamilyId::BPrimePrime(_) => "bprimeprime",
            FamilyId::C(_) => "c",
            FamilyId::CPrime(_) => "cprime",
            FamilyId::Fig3 => "fig3",
            FamilyId::Fig9 => "fig9",
        }
    }

    pub fn params(&self) -> Vec<i32> {
        match *self {
            FamilyId::R(i)
            | FamilyId::S(i)
            | FamilyId::SPrime(i)
            | FamilyId::A(i)
            | FamilyId::B(i)
            | FamilyId::BPrime(i)
            | FamilyId::BPrimePrime(i) => vec![i as i32],
            FamilyId::T(i, j) => vec![i as i32, j as i32],
            FamilyId::C(k) | FamilyId::CPrime(k) => vec![k],
            _ => vec![],
        }
    }

    pub fn from_name(name: &str, params: &[i32]) -> Result<FamilyId, FamilyError> {
        let expect = |n: usize| -> Result<(), FamilyError> {
            if params.len() != n {
                Err(FamilyError::WrongParamCount {
                    name: name.to_string(),
                    expected: n,
                    got: params.len(),
                })
            } else {
                Ok(())
            }
        };
        let nonneg = |p: i32| -> Result<u32, FamilyError> {
            u32::try_from(p)
                .map_err(|_| FamilyError::ParamOutOfRange(format!("parameter {p} must be >= 0")))
        };
        let id = match name {
            "k13" => {
                expect(0)?;
                FamilyId::K13
            }
            "k14" => {
                expect(0)?;
                FamilyId::K14
            }
            "k14star" => {
                expect(0)?;
                FamilyId::K14Star
            }
            "k23star" => {
                expect(0)?;
                FamilyId::K23Star
            }
            "k24star" => {
                expect(0)?;
                FamilyId::K24Star
            }
            "r" => {
                expect(1)?;
                FamilyId::R(nonneg(params[0])?)
            }
            "s" => {
                expect(1)?;
                FamilyId::S(nonneg(params[0])?)
            }
            "sprime" => {
                expect(1)?;
                FamilyId::SPrime(nonneg(params[0])?)
            }
            "t" => {
                expect(2)?;
                FamilyId::T(nonneg(params[0])?, nonneg(params[1])?)
            }
            "a" => {
                expect(1)?;
                FamilyId::A(nonneg(params[0])?)
            }
            "b" => {
                expect(1)?;
                FamilyId::B(nonneg(params[0])?)
            }
            "bprime" => {
                expect(1)?;
                FamilyId::BPrime(nonneg(params[0])?)
            }
            "bprimeprime" => {
                expect(1)?;
                FamilyId::BPrimePrime(nonneg(params[0])?)
            }
            "c" => {
                expect(1)?;
                FamilyId::C(params[0])
            }
            "cprime" => {
                expect(1)?;
                FamilyId::CPrime(params[0])
            }
            "fig3" => {
                expect(0)?;
                FamilyId::Fig3
            }
            "fig9" => {
                expect(0)?;
                FamilyId::Fig9
            }
            other => return Err(FamilyError::UnknownName(other.to_string())),
        };
        id.validate()?;
        Ok(id)
    }
}

fn labeled(graph: Graph, labels: &[(VertexId, &str)]) -> (Graph, BTreeMap<VertexId, String>) {
    let mut g = graph;
    let roles: BTreeMap<VertexId, String> = labels
        .iter()
        .map(|&(v, s)| (v, s.to_string()))
        .collect();
    let mut names: Vec<String> = (0..g.n()).map(|v| v.to_string()).collect();
    for (&v, s) in &roles {
        names[v] = s.clone();
    }
    g.labels = Some(names);
    (g, roles)
}

/// Labels a..e, u..z then p1..pi, in that order. The unlabeled builder
/// families (R, S, S′, T) use their structural names as display labels only.
pub fn generate(id: FamilyId) -> Result<FamilyInstance, FamilyError> {
    id.validate()?;
    let (graph, role_labels) = build_graph(id);
    Ok(FamilyInstance {
        id,
        graph,
        role_labels,
        canonical_rep: canonical_representation(id),
    })
}

fn build_graph(id: FamilyId) -> (Graph, BTreeMap<VertexId, String>) {
    match id {
        FamilyId::K13 => {
            // center c; leaves a, b, d
            let g = Graph::from_edges(4, [(0, 2), (1, 2), (2, 3)]).unwrap();
            labeled(g, &[(0, "a"), (1, "b"), (2, "c"), (3, "d")])
        }
        FamilyId::K14 | FamilyId::R(0) => {
            let g = Graph::from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
            (g, BTreeMap::new())
        }
        FamilyId::K14Star => {
            // a, b of degree one; c the hub; d, e the adjacent pair
            let g = Graph::from_edges(5, [(0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap();
            labeled(g, &[(0, "a"), (1, "b"), (2, "c"), (3, "d"), (4, "e")])
        }
        FamilyId::K23Star => {
            // two adjacent hubs 0,1 each covering all of 2,3,4
            let g = Graph::from_edges(
                5,
                [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)],
            )
            .unwrap();
            (g, BTreeMap::new())
        }
        FamilyId::K24Star => {
            // hubs 0,1; 0 covers 2,3,4 and 1 covers 3,4,5
            let g = Graph::from_edges(
                6,
                [(0, 1), (0, 2), (0, 3), (0, 4), (1, 3), (1, 4), (1, 5)],
            )
            .unwrap();
            (g, BTreeMap::new())
        }
        FamilyId::R(i) => {
            // bottom path b0..b_{i+2}, pendant top on b1, chain tops on
            // consecutive bottom pairs, pendant top on b_{i+1}
            let i = i as usize;
            let nb = i + 3;
            let mut g = Graph::new(2 * i + 5);
            let mut names: Vec<String> = (0..nb).map(|k| format!("b{k}")).collect();
            for k in 0..nb - 1 {
                g.add_edge(k, k + 1).unwrap();
            }
            let mut top = nb;
            let mut add_top = |g: &mut Graph, names: &mut Vec<String>, label: String, nbrs: &[usize]| {
                names.push(label);
                for &b in nbrs {
                    g.add_edge(top, b).unwrap();
                }
                top += 1;
            };
            add_top(&mut g, &mut names, "t0".into(), &[1]);
            for k in 1..=i {
                add_top(&mut g, &mut names, format!("t{k}"), &[k, k + 1]);
            }
            add_top(&mut g, &mut names, format!("t{}", i + 1), &[i + 1]);
            g.labels = Some(names);
            (g, BTreeMap::new())
        }
        FamilyId::S(i) | FamilyId::SPrime(i) => {
            // bottom path b0..b_{i+1}; mids m_k on {b_k, b_{k+1}} except the
            // last, which hangs on b_i alone; one apex. S puts the apex on
            // {b1, m0, m1}, S′ puts it on {b0, b1, m0}.
            let i = i as usize;
            let nb = i + 2;
            let mut g = Graph::new(2 * i + 4);
            let mut names: Vec<String> = (0..nb).map(|k| format!("b{k}")).collect();
            for k in 0..nb - 1 {
                g.add_edge(k, k + 1).unwrap();
            }
            let m = |k: usize| nb + k;
            for k in 0..i {
                g.add_edge(m(k), k).unwrap();
                g.add_edge(m(k), k + 1).unwrap();
                names.push(format!("m{k}"));
            }
            g.add_edge(m(i), i).unwrap();
            names.push(format!("m{i}"));
            let apex = 2 * i + 3;
            names.push("apex".into());
            let apex_nbrs: [usize; 3] = if matches!(id, FamilyId::S(_)) {
                [1, m(0), m(1)]
            } else {
                [0, 1, m(0)]
            };
            for b in apex_nbrs {
                g.add_edge(apex, b).unwrap();
            }
            g.labels = Some(names);
            (g, BTreeMap::new())
        }
        FamilyId::T(i, j) => {
            let (i, j) = (i as usize, j as usize);
            let nb = i + j + 4;
            let mut g = Graph::new(2 * (i + j) + 6);
            let mut names: Vec<String> = (0..nb).map(|k| format!("b{k}")).collect();
            for k in 0..nb - 1 {
                g.add_edge(k, k + 1).unwrap();
            }
            let mut top = nb;
            let mut add_top = |g: &mut Graph, names: &mut Vec<String>, label: String, nbrs: Vec<usize>| {
                names.push(label);
                for b in nbrs {
                    g.add_edge(top, b).unwrap();
                }
                top += 1;
            };
            if i >= 1 {
                add_top(&mut g, &mut names, "l0".into(), vec![1]);
            }
            for k in 1..i {
                add_top(&mut g, &mut names, format!("l{k}"), vec![k, k + 1]);
            }
            // the two center tops share {b_{i+1}, b_{i+2}}; each reaches one
            // step further into its own side when that side has triangles
            let mut cl = vec![i + 1, i + 2];
            if i >= 1 {
                cl.insert(0, i);
            }
            add_top(&mut g, &mut names, "cl".into(), cl);
            let mut cr = vec![i + 1, i + 2];
            if j >= 1 {
                cr.push(i + 3);
            }
            add_top(&mut g, &mut names, "cr".into(), cr);
            for k in 2..=j {
                add_top(&mut g, &mut names, format!("r{k}"), vec![i + k + 1, i + k + 2]);
            }
            if j >= 1 {
                add_top(&mut g, &mut names, "r0".into(), vec![i + j + 2]);
            }
            g.labels = Some(names);
            (g, BTreeMap::new())
        }
        FamilyId::A(i) | FamilyId::B(i) | FamilyId::BPrime(i) | FamilyId::BPrimePrime(i) => {
            // two disjoint K₁,₄*-gadgets joined by an induced path
            let i = i as usize;
            let mut g = Graph::new(10 + i);
            let (a, b, c, d, e, u, v, w, y, z) = (0, 1, 2, 3, 4, 5, 6, 7, 8, 9);
            for (x, yy) in [
                (a, c),
                (b, c),
                (c, d),
                (c, e),
                (d, e),
                (u, v),
                (u, w),
                (v, w),
                (w, y),
                (w, z),
            ] {
                g.add_edge(x, yy).unwrap();
            }
            let p = |k: usize| 9 + k; // p1..pi
            let (from, to) = if matches!(id, FamilyId::A(_)) {
                (z, a)
            } else {
                (e, v)
            };
            if i == 0 {
                g.add_edge(from, to).unwrap();
            } else {
                g.add_edge(from, p(1)).unwrap();
                for k in 1..i {
                    g.add_edge(p(k), p(k + 1)).unwrap();
                }
                g.add_edge(p(i), to).unwrap();
            }
            if matches!(id, FamilyId::BPrime(_) | FamilyId::BPrimePrime(_)) {
                g.add_edge(d, p(1)).unwrap();
            }
            if matches!(id, FamilyId::BPrimePrime(_)) {
                g.add_edge(p(i), u).unwrap();
            }
            let mut labels = vec![
                (a, "a"),
                (b, "b"),
                (c, "c"),
                (d, "d"),
                (e, "e"),
                (u, "u"),
                (v, "v"),
                (w, "w"),
                (y, "y"),
                (z, "z"),
            ];
            let pnames: Vec<String> = (1..=i).map(|k| format!("p{k}")).collect();
            for (k, name) in pnames.iter().enumerate() {
                labels.push((p(k + 1), name.as_str()));
            }
            labeled(g, &labels)
        }
        FamilyId::C(-2) => {
            let g = Graph::from_edges(
                9,
                [
                    (5, 6),
                    (5, 7),
                    (6, 7),
                    (7, 8),
                    (7, 0),
                    (0, 2),
                    (1, 2),
                    (2, 3),
                    (2, 4),
                    (3, 4),
                ],
            )
            .unwrap();
            labeled(
                g,
                &[
                    (0, "a=z"),
                    (1, "b"),
                    (2, "c"),
                    (3, "d"),
                    (4, "e"),
                    (5, "u"),
                    (6, "v"),
                    (7, "w"),
                    (8, "y"),
                ],
            )
        }
        FamilyId::C(-1) => {
            let g = Graph::from_edges(
                8,
                [
                    (5, 6),
                    (5, 0),
                    (6, 0),
                    (0, 7),
                    (0, 2),
                    (1, 2),
                    (2, 3),
                    (2, 4),
                    (3, 4),
                ],
            )
            .unwrap();
            labeled(
                g,
                &[
                    (0, "a=w"),
                    (1, "b"),
                    (2, "c=z"),
                    (3, "d"),
                    (4, "e"),
                    (5, "u"),
                    (6, "v"),
                    (7, "y"),
                ],
            )
        }
        FamilyId::C(0) => {
            let g = Graph::from_edges(
                6,
                [(0, 5), (0, 2), (5, 2), (1, 2), (2, 4), (2, 3), (3, 4)],
            )
            .unwrap();
            labeled(
                g,
                &[
                    (0, "a=v"),
                    (1, "b=y"),
                    (2, "c=w"),
                    (3, "d"),
                    (4, "e=z"),
                    (5, "u"),
                ],
            )
        }
        FamilyId::C(1) => {
            let g = Graph::from_edges(
                8,
                [
                    (0, 2),
                    (1, 2),
                    (2, 4),
                    (2, 3),
                    (5, 2),
                    (5, 1),
                    (5, 3),
                    (5, 4),
                    (3, 4),
                    (3, 6),
                    (4, 6),
                    (4, 7),
                ],
            )
            .unwrap();
            labeled(
                g,
                &[
                    (0, "a"),
                    (1, "b"),
                    (2, "c=v"),
                    (3, "d"),
                    (4, "e=w"),
                    (5, "u"),
                    (6, "y"),
                    (7, "z"),
                ],
            )
        }
        FamilyId::C(2) => {
            let g = Graph::from_edges(
                9,
                [
                    (0, 2),
                    (1, 2),
                    (2, 4),
                    (2, 3),
                    (5, 3),
                    (5, 4),
                    (3, 4),
                    (6, 7),
                    (6, 8),
                    (5, 6),
                    (4, 6),
                ],
            )
            .unwrap();
            labeled(
                g,
                &[
                    (0, "a"),
                    (1, "b"),
                    (2, "c"),
                    (3, "d"),
                    (4, "e=v"),
                    (5, "u"),
                    (6, "w"),
                    (7, "y"),
                    (8, "z"),
                ],
            )
        }
        FamilyId::CPrime(k) => {
            let edges: Vec<(usize, usize)> = match k {
                -2 => vec![
                    (5, 6),
                    (5, 7),
                    (6, 7),
                    (7, 8),
                    (7, 9),
                    (7, 0),
                    (9, 0),
                    (9, 1),
                    (9, 2),
                    (8, 0),
                    (0, 2),
                    (2, 1),
                    (2, 3),
                    (2, 4),
                    (3, 4),
                ],
                -1 => vec![
                    (2, 0),
                    (2, 1),
                    (2, 3),
                    (2, 4),
                    (2, 7),
                    (2, 8),
                    (2, 9),
                    (1, 7),
                    (1, 8),
                    (1, 9),
                    (3, 4),
                    (3, 9),
                    (4, 9),
                    (0, 5),
                    (0, 6),
                    (0, 7),
                    (0, 8),
                    (6, 5),
                    (6, 7),
                    (5, 7),
                    (9, 7),
                    (7, 8),
                ],
                0 => vec![
                    (2, 0),
                    (2, 1),
                    (2, 3),
                    (2, 4),
                    (2, 5),
                    (2, 6),
                    (2, 7),
                    (2, 8),
                    (1, 5),
                    (1, 6),
                    (1, 7),
                    (1, 8),
                    (0, 5),
                    (0, 6),
                    (3, 4),
                    (3, 7),
                    (3, 8),
                    (3, 9),
                    (4, 7),
                    (4, 8),
                    (4, 9),
                    (6, 5),
                    (6, 7),
                    (5, 7),
                    (9, 7),
                    (7, 8),
                ],
                1 => vec![
                    (2, 0),
                    (2, 1),
                    (2, 3),
                    (2, 4),
                    (2, 5),
                    (2, 6),
                    (1, 5),
                    (1, 6),
                    (3, 4),
                    (3, 5),
                    (3, 6),
                    (3, 7),
                    (3, 8),
                    (4, 5),
                    (4, 6),
                    (4, 7),
                    (4, 8),
                    (6, 5),
                    (6, 7),
                    (5, 7),
                    (9, 7),
                    (7, 8),
                ],
                2 => vec![
                    (5, 6),
                    (5, 7),
                    (6, 7),
                    (7, 8),
                    (7, 9),
                    (0, 2),
                    (2, 1),
                    (2, 3),
                    (2, 4),
                    (3, 4),
                    (4, 6),
                    (4, 5),
                    (3, 6),
                    (3, 5),
                ],
                _ => unreachable!("validated range"),
            };
            let g = Graph::from_edges(10, edges).unwrap();
            labeled(
                g,
                &[
                    (0, "a"),
                    (1, "b"),
                    (2, "c"),
                    (3, "d"),
                    (4, "e"),
                    (5, "u"),
                    (6, "v"),
                    (7, "w"),
                    (8, "y"),
                    (9, "z"),
                ],
            )
        }
        FamilyId::C(_) => unreachable!("validated range"),
        FamilyId::Fig3 => {
            // star center 0 over 1..4, extra edge 1-2, pendant 5 on 1
            let g = Graph::from_edges(6, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 5)]).unwrap();
            (g, BTreeMap::new())
        }
        FamilyId::Fig9 => {
            let g = Graph::from_edges(
                8,
                [
                    (0, 1),
                    (0, 2),
                    (1, 2),
                    (2, 3),
                    (2, 4),
                    (2, 5),
                    (3, 4),
                    (0, 6),
                    (4, 7),
                ],
            )
            .unwrap();
            labeled(
                g,
                &[
                    (0, "a"),
                    (1, "b"),
                    (2, "c"),
                    (3, "d"),
                    (4, "e"),
                    (5, "f"),
                    (6, "g"),
                    (7, "h"),
                ],
            )
        }
    }
}

/// The hub-at-`[1,2]` layout `a=[0,1], b=(1,2), c=[1,2], d=[2,3), e=[2,3]`
/// shared by the two-gadget families and the C graphs.
fn base_abcde(rep: &mut Representation) {
    rep.insert(0, UnitInterval::closed(rat(0, 1)));
    rep.insert(1, UnitInterval::open(rat(1, 1)));
    rep.insert(2, UnitInterval::closed(rat(1, 1)));
    rep.insert(3, UnitInterval::closed_open(rat(2, 1)));
    rep.insert(4, UnitInterval::closed(rat(2, 1)));
}

/// The blocked-end gadget layout at offset `x`:
/// `u=(x,x+1], v=[x,x+1], w=[x+1,x+2], y=(x+1,x+2), z=[x+2,x+3]`.
fn gadget_uvwyz(rep: &mut Representation, x: Rational) {
    let one = rat(1, 1);
    rep.insert(5, UnitInterval::open_closed(x.clone()));
    rep.insert(6, UnitInterval::closed(x.clone()));
    rep.insert(7, UnitInterval::closed(&x + &one));
    rep.insert(8, UnitInterval::open(&x + &one));
    rep.insert(9, UnitInterval::closed(&x + rat(2, 1)));
}

/// The family's canonical interval layout, when it has one.
pub fn canonical_representation(id: FamilyId) -> Option<Representation> {
    let mut rep = Representation::new();
    match id {
        FamilyId::K13 => {
            rep.insert(0, UnitInterval::closed(rat(0, 1)));
            rep.insert(1, UnitInterval::open(rat(1, 1)));
            rep.insert(2, UnitInterval::closed(rat(1, 1)));
            rep.insert(3, UnitInterval::closed(rat(2, 1)));
        }
        FamilyId::K14Star => base_abcde(&mut rep),
        FamilyId::A(i) => {
            base_abcde(&mut rep);
            let i = i as i64;
            // gadget at x = -5/2 - i, path intervals on the half-integer grid
            gadget_uvwyz(&mut rep, rat(-5 - 2 * i, 2));
            for k in 1..=i {
                rep.insert(9 + k as usize, UnitInterval::closed(rat(2 * k - 1, 2) - rat(i, 1)));
            }
        }
        FamilyId::B(i) => {
            base_abcde(&mut rep);
            let i = i as i64;
            gadget_uvwyz(&mut rep, rat(3 + i, 1));
            for k in 1..=i {
                rep.insert(9 + k as usize, UnitInterval::closed(rat(2 + k, 1)));
            }
        }
        FamilyId::C(-2) => {
            base_abcde(&mut rep);
            rep.insert(5, UnitInterval::open_closed(rat(-2, 1)));
            rep.insert(6, UnitInterval::closed(rat(-2, 1)));
            rep.insert(7, UnitInterval::closed(rat(-1, 1)));
            rep.insert(8, UnitInterval::open(rat(-1, 1)));
        }
        FamilyId::C(-1) => {
            base_abcde(&mut rep);
            rep.insert(5, UnitInterval::open_closed(rat(-1, 1)));
            rep.insert(6, UnitInterval::closed(rat(-1, 1)));
            rep.insert(7, UnitInterval::open(rat(0, 1)));
        }
        FamilyId::C(0) => {
            base_abcde(&mut rep);
            rep.insert(5, UnitInterval::open_closed(rat(0, 1)));
        }
        FamilyId::C(1) => {
            base_abcde(&mut rep);
            rep.insert(5, UnitInterval::open_closed(rat(1, 1)));
            rep.insert(6, UnitInterval::open(rat(2, 1)));
            rep.insert(7, UnitInterval::closed(rat(3, 1)));
        }
        FamilyId::C(2) => {
            base_abcde(&mut rep);
            rep.insert(5, UnitInterval::open_closed(rat(2, 1)));
            rep.insert(6, UnitInterval::closed(rat(3, 1)));
            rep.insert(7, UnitInterval::open(rat(3, 1)));
            rep.insert(8, UnitInterval::closed(rat(4, 1)));
        }
        FamilyId::CPrime(k) => {
            base_abcde(&mut rep);
            gadget_uvwyz(&mut rep, rat(2 * k as i64 + 1, 2));
        }
        FamilyId::Fig3 => {
            rep.insert(0, UnitInterval::closed(rat(1, 1)));
            rep.insert(1, UnitInterval::closed(rat(2, 1)));
            rep.insert(2, UnitInterval::closed_open(rat(2, 1)));
            rep.insert(3, UnitInterval::closed(rat(0, 1)));
            rep.insert(4, UnitInterval::open(rat(1, 1)));
            rep.insert(5, UnitInterval::closed(rat(3, 1)));
        }
        FamilyId::Fig9 => {
            rep.insert(0, UnitInterval::closed(rat(0, 1)));
            rep.insert(1, UnitInterval::open_closed(rat(0, 1)));
            rep.insert(2, UnitInterval::closed(rat(1, 1)));
            rep.insert(3, UnitInterval::closed_open(rat(2, 1)));
            rep.insert(4, UnitInterval::closed(rat(2, 1)));
            rep.insert(5, UnitInterval::open(rat(1, 1)));
            rep.insert(6, UnitInterval::closed(rat(-1, 1)));
            rep.insert(7, UnitInterval::closed(rat(3, 1)));
        }
        _ => return None,
    }
    Some(rep)
}

/// Rank used to order instances of equal size deterministically.
fn family_rank(id: &FamilyId) -> (u8, Vec<i32>) {
    let tag = match id {
        FamilyId::K13 => 0,
        FamilyId::K14 => 1,
        FamilyId::K14Star => 2,
        FamilyId::K23Star => 3,
        FamilyId::K24Star => 4,
        FamilyId::R(_) => 5,
        FamilyId::S(_) => 6,
        FamilyId::SPrime(_) => 7,
        FamilyId::T(..) => 8,
        FamilyId::A(_) => 9,
        FamilyId::B(_) => 10,
        FamilyId::BPrime(_) => 11,
        FamilyId::BPrimePrime(_) => 12,
        FamilyId::C(_) => 13,
        FamilyId::CPrime(_) => 14,
        FamilyId::Fig3 => 15,
        FamilyId::Fig9 => 16,
    };
    (tag, id.params())
}

/// Every forbidden induced subgraph for `class` with at most `max_vertices`
/// vertices, each exactly once, ordered by ascending vertex count (then by a
/// fixed family order) so screening hits small witnesses first.
///
/// The lists: Unit is claw-free; UPM adds K₁,₄, K₁,₄*, K₂,₃*, K₂,₄*; Mixed
/// forbids K₂,₃* with the whole R, S, S′, T families; AlmostMixed forbids
/// A, B, B′, B″, C, C′, S, S′, the T₀,ⱼ row, T₁,₁, R₀, R₁, and K₂,₃*.
/// `T(i,j) ≅ T(j,i)`, so only `i ≤ j` members are emitted.
pub fn enumerate_forbidden(class: crate::classifier::ClassLabel, max_vertices: usize) -> Vec<FamilyInstance> {
    use crate::classifier::ClassLabel::*;
    let mut ids: Vec<FamilyId> = Vec::new();
    let push = |id: FamilyId, ids: &mut Vec<FamilyId>| {
        if id.vertex_count().expect("enumerated params are valid") <= max_vertices {
            ids.push(id);
        }
    };
    match class {
        Unit => push(FamilyId::K13, &mut ids),
        Upm => {
            for id in [
                FamilyId::K14,
                FamilyId::K14Star,
                FamilyId::K23Star,
                FamilyId::K24Star,
            ] {
                push(id, &mut ids);
            }
        }
        Mixed => {
            push(FamilyId::K23Star, &mut ids);
            let mut i = 0;
            while 2 * i as usize + 5 <= max_vertices {
                push(FamilyId::R(i), &mut ids);
                i += 1;
            }
            let mut i = 1;
            while 2 * i as usize + 4 <= max_vertices {
                push(FamilyId::S(i), &mut ids);
                push(FamilyId::SPrime(i), &mut ids);
                i += 1;
            }
            let mut i = 0;
            while 2 * i as usize + 6 <= max_vertices {
                let mut j = i;
                while 2 * (i + j) as usize + 6 <= max_vertices {
                    push(FamilyId::T(i, j), &mut ids);
                    j += 1;
                }
                i += 1;
            }
        }
        AlmostMixed => {
            for id in [
                FamilyId::K23Star,
                FamilyId::R(0),
                FamilyId::R(1),
                FamilyId::T(1, 1),
            ] {
                push(id, &mut ids);
            }
            for k in -2..=2 {
                push(FamilyId::C(k), &mut ids);
                push(FamilyId::CPrime(k), &mut ids);
            }
            let mut i = 1;
            while 2 * i as usize + 4 <= max_vertices {
                push(FamilyId::S(i), &mut ids);
                push(FamilyId::SPrime(i), &mut ids);
                i += 1;
            }
            let mut j = 0;
            while 2 * j as usize + 6 <= max_vertices {
                push(FamilyId::T(0, j), &mut ids);
                j += 1;
            }
            let mut i = 0;
            while 10 + i as usize <= max_vertices {
                push(FamilyId::A(i), &mut ids);
                push(FamilyId::B(i), &mut ids);
                if i >= 1 {
                    push(FamilyId::BPrime(i), &mut ids);
                }
                if i >= 2 {
                    push(FamilyId::BPrimePrime(i), &mut ids);
                }
                i += 1;
            }
        }
        NotInterval | IntervalOnly => return Vec::new(),
    }
    ids.sort_by_key(|id| (id.vertex_count().unwrap(), family_rank(id)));
    ids.dedup();
    ids.into_iter()
        .map(|id| generate(id).expect("enumerated params are valid"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn edges_of(id: FamilyId) -> Vec<(usize, usize)> {
        generate(id).unwrap().graph.edges()
    }

    #[test]
    fn spec_counts() {
        let a0 = generate(FamilyId::A(0)).unwrap();
        assert_eq!((a0.graph.n(), a0.graph.edge_count()), (10, 11));
        let c0 = generate(FamilyId::C(0)).unwrap();
        assert_eq!((c0.graph.n(), c0.graph.edge_count()), (6, 7));
        let s1 = generate(FamilyId::S(1)).unwrap();
        assert_eq!((s1.graph.n(), s1.graph.edge_count()), (6, 8));
        let t00 = generate(FamilyId::T(0, 0)).unwrap();
        assert_eq!((t00.graph.n(), t00.graph.edge_count()), (6, 7));
    }

    #[test]
    fn vertex_count_matches_generate() {
        let ids = [
            FamilyId::K13,
            FamilyId::K14,
            FamilyId::K14Star,
            FamilyId::K23Star,
            FamilyId::K24Star,
            FamilyId::R(0),
            FamilyId::R(1),
            FamilyId::R(3),
            FamilyId::S(1),
            FamilyId::S(4),
            FamilyId::SPrime(1),
            FamilyId::SPrime(3),
            FamilyId::T(0, 0),
            FamilyId::T(2, 1),
            FamilyId::T(1, 3),
            FamilyId::A(0),
            FamilyId::A(2),
            FamilyId::B(0),
            FamilyId::BPrime(1),
            FamilyId::BPrimePrime(2),
            FamilyId::C(-2),
            FamilyId::C(0),
            FamilyId::C(2),
            FamilyId::CPrime(-1),
            FamilyId::CPrime(2),
            FamilyId::Fig3,
            FamilyId::Fig9,
        ];
        for id in ids {
            assert_eq!(
                id.vertex_count().unwrap(),
                generate(id).unwrap().graph.n(),
                "{id:?}"
            );
        }
        assert_eq!(FamilyId::R(1).vertex_count().unwrap(), 7);
        assert_eq!(FamilyId::T(2, 1).vertex_count().unwrap(), 12);
        assert_eq!(FamilyId::CPrime(2).vertex_count().unwrap(), 10);
    }

    #[test]
    fn param_ranges() {
        assert!(FamilyId::BPrime(0).validate().is_err());
        assert!(FamilyId::BPrimePrime(1).validate().is_err());
        assert!(FamilyId::S(0).validate().is_err());
        assert!(FamilyId::C(3).validate().is_err());
        assert!(FamilyId::CPrime(-3).validate().is_err());
        assert!(FamilyId::T(0, 0).validate().is_ok());
        assert!(FamilyId::from_name("bprime", &[0]).is_err());
        assert!(FamilyId::from_name("t", &[1]).is_err());
        assert!(FamilyId::from_name("nosuch", &[]).is_err());
    }

    /// The generic chain builders must reproduce the drawings exactly on the
    /// instances the drawings show.
    #[test]
    fn builder_calibration_fixed_instances() {
        // R1: bottom 0-1-2-3, tops 4~1, 5~{1,2}, 6~2
        let r1: Vec<(usize, usize)> = vec![(0, 1), (1, 2), (1, 4), (1, 5), (2, 3), (2, 5), (2, 6)];
        assert_eq!(edges_of(FamilyId::R(1)), r1);

        // S1: bottom 0-1-2, mids 3~{0,1}, 4~{1}, apex 5~{1,3,4}
        let s1: Vec<(usize, usize)> = vec![(0, 1), (0, 3), (1, 2), (1, 3), (1, 4), (1, 5), (3, 5), (4, 5)];
        assert_eq!(edges_of(FamilyId::S(1)), s1);

        // S2: bottom 0-1-2-3, mids 4~{0,1}, 5~{1,2}, 6~{2}, apex 7~{1,4,5}
        let s2: Vec<(usize, usize)> = vec![
            (0, 1),
            (0, 4),
            (1, 2),
            (1, 4),
            (1, 5),
            (1, 7),
            (2, 3),
            (2, 5),
            (2, 6),
            (4, 7),
            (5, 7),
        ];
        assert_eq!(edges_of(FamilyId::S(2)), s2);

        // S′1: apex 5~{0,1,3}
        let s1p: Vec<(usize, usize)> = vec![(0, 1), (0, 3), (0, 5), (1, 2), (1, 3), (1, 4), (1, 5), (3, 5)];
        assert_eq!(edges_of(FamilyId::SPrime(1)), s1p);

        // S′2: apex 7~{0,1,4}
        let s2p: Vec<(usize, usize)> = vec![
            (0, 1),
            (0, 4),
            (0, 7),
            (1, 2),
            (1, 4),
            (1, 5),
            (1, 7),
            (2, 3),
            (2, 5),
            (2, 6),
            (4, 7),
        ];
        assert_eq!(edges_of(FamilyId::SPrime(2)), s2p);

        // T(0,0): bottom 0-1-2-3, both tops on {1,2}
        let t00: Vec<(usize, usize)> = vec![(0, 1), (1, 2), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)];
        assert_eq!(edges_of(FamilyId::T(0, 0)), t00);

        // T(1,0): bottom 0..4, tops 5~{1}, 6~{1,2,3}, 7~{2,3}
        let t10: Vec<(usize, usize)> = vec![
            (0, 1),
            (1, 2),
            (1, 5),
            (1, 6),
            (2, 3),
            (2, 6),
            (2, 7),
            (3, 4),
            (3, 6),
            (3, 7),
        ];
        assert_eq!(edges_of(FamilyId::T(1, 0)), t10);

        // T(2,1): bottom 0..6, tops 7~{1}, 8~{1,2}, 9~{2,3,4}, 10~{3,4,5}, 11~{5}
        let t21: Vec<(usize, usize)> = vec![
            (0, 1),
            (1, 2),
            (1, 7),
            (1, 8),
            (2, 3),
            (2, 8),
            (2, 9),
            (3, 4),
            (3, 9),
            (3, 10),
            (4, 5),
            (4, 9),
            (4, 10),
            (5, 6),
            (5, 10),
            (5, 11),
        ];
        assert_eq!(edges_of(FamilyId::T(2, 1)), t21);
    }

    #[test]
    fn r0_is_k14() {
        assert_eq!(
            generate(FamilyId::R(0)).unwrap().graph,
            generate(FamilyId::K14).unwrap().graph
        );
    }

    /// The canonical layouts and the generated edge sets must agree
    /// exactly; each side validates the other.
    #[test]
    fn canonical_reps_realize_their_graphs() {
        let with_reps = [
            FamilyId::K13,
            FamilyId::K14Star,
            FamilyId::A(0),
            FamilyId::A(1),
            FamilyId::A(3),
            FamilyId::B(0),
            FamilyId::B(1),
            FamilyId::B(4),
            FamilyId::C(-2),
            FamilyId::C(-1),
            FamilyId::C(0),
            FamilyId::C(1),
            FamilyId::C(2),
            FamilyId::CPrime(-2),
            FamilyId::CPrime(-1),
            FamilyId::CPrime(0),
            FamilyId::CPrime(1),
            FamilyId::CPrime(2),
            FamilyId::Fig3,
            FamilyId::Fig9,
        ];
        for id in with_reps {
            let inst = generate(id).unwrap();
            let rep = inst.canonical_rep.as_ref().unwrap_or_else(|| panic!("{id:?} should have a layout"));
            assert_eq!(
                rep.verify(&inst.graph),
                Ok(()),
                "{id:?}: layout does not realize the generated graph"
            );
        }
        // families drawn without interval layouts
        for id in [
            FamilyId::K14,
            FamilyId::K23Star,
            FamilyId::K24Star,
            FamilyId::R(1),
            FamilyId::S(1),
            FamilyId::SPrime(2),
            FamilyId::T(1, 1),
            FamilyId::BPrime(1),
            FamilyId::BPrimePrime(2),
        ] {
            assert!(generate(id).unwrap().canonical_rep.is_none(), "{id:?}");
        }
    }

    #[test]
    fn fig9_rep_matches_drawn_layout() {
        let rep = canonical_representation(FamilyId::Fig9).unwrap();
        assert_eq!(*rep.get(0).unwrap(), UnitInterval::closed(rat(0, 1)));
        assert_eq!(*rep.get(1).unwrap(), UnitInterval::open_closed(rat(0, 1)));
        assert_eq!(*rep.get(2).unwrap(), UnitInterval::closed(rat(1, 1)));
        assert_eq!(*rep.get(3).unwrap(), UnitInterval::closed_open(rat(2, 1)));
        assert_eq!(*rep.get(4).unwrap(), UnitInterval::closed(rat(2, 1)));
        assert_eq!(*rep.get(6).unwrap(), UnitInterval::closed(rat(-1, 1)));
        assert_eq!(*rep.get(7).unwrap(), UnitInterval::closed(rat(3, 1)));
    }

    #[test]
    fn forbidden_lists_with_truncation() {
        use crate::classifier::ClassLabel;
        let ids = |class, maxv| -> Vec<FamilyId> {
            enumerate_forbidden(class, maxv)
                .into_iter()
                .map(|i| i.id)
                .collect()
        };
        assert_eq!(ids(ClassLabel::Unit, 10), vec![FamilyId::K13]);
        assert_eq!(
            ids(ClassLabel::Upm, 10),
            vec![
                FamilyId::K14,
                FamilyId::K14Star,
                FamilyId::K23Star,
                FamilyId::K24Star
            ]
        );
        let am = ids(ClassLabel::AlmostMixed, 10);
        for want in [
            FamilyId::A(0),
            FamilyId::B(0),
            FamilyId::C(-2),
            FamilyId::C(-1),
            FamilyId::C(0),
            FamilyId::C(1),
            FamilyId::C(2),
            FamilyId::CPrime(-2),
            FamilyId::CPrime(-1),
            FamilyId::CPrime(0),
            FamilyId::CPrime(1),
            FamilyId::CPrime(2),
            FamilyId::S(1),
            FamilyId::S(2),
            FamilyId::S(3),
            FamilyId::SPrime(1),
            FamilyId::SPrime(2),
            FamilyId::SPrime(3),
            FamilyId::T(0, 0),
            FamilyId::T(0, 1),
            FamilyId::T(0, 2),
            FamilyId::T(1, 1),
            FamilyId::R(0),
            FamilyId::R(1),
            FamilyId::K23Star,
        ] {
            assert!(am.contains(&want), "missing {want:?}");
        }
        assert!(!am.contains(&FamilyId::A(1)), "A1 has 11 vertices");
        assert_eq!(am.len(), 25);
        // sizes ascend
        let sizes: Vec<usize> = am.iter().map(|id| id.vertex_count().unwrap()).collect();
        assert!(sizes.windows(2).all(|w| w[0] <= w[1]));
        // Mixed keeps the whole R/S/S'/T families, deduplicating T(i,j)=T(j,i)
        let mixed = ids(ClassLabel::Mixed, 12);
        assert!(mixed.contains(&FamilyId::R(3)));
        assert!(mixed.contains(&FamilyId::T(1, 2)));
        assert!(!mixed.contains(&FamilyId::T(2, 1)));
        assert!(ids(ClassLabel::NotInterval, 12).is_empty());
    }

    #[test]
    fn fig3_graph_is_twin_free() {
        assert!(generate(FamilyId::Fig3).unwrap().graph.is_twin_free());
    }

    #[test]
    fn role_labels_follow_the_drawings() {
        let fig9 = generate(FamilyId::Fig9).unwrap();
        let labels: Vec<&str> = (0..8)
            .map(|v| fig9.role_labels[&v].as_str())
            .collect();
        assert_eq!(labels, ["a", "b", "c", "d", "e", "f", "g", "h"]);

        let c0 = generate(FamilyId::C(0)).unwrap();
        assert_eq!(c0.role_labels[&0], "a=v");
        assert_eq!(c0.role_labels[&2], "c=w");
        assert_eq!(c0.role_labels[&5], "u");

        // unlabeled drawings carry no role labels; display names remain
        let t = generate(FamilyId::T(0, 0)).unwrap();
        assert!(t.role_labels.is_empty());
        assert_eq!(t.graph.labels.as_ref().unwrap()[0], "b0");

        let a1 = generate(FamilyId::A(1)).unwrap();
        assert_eq!(a1.role_labels[&10], "p1");
    }

    #[test]
    fn census_of_drawn_layouts() {
        let fig3 = canonical_representation(FamilyId::Fig3).unwrap();
        let c = fig3.type_census();
        assert_eq!(c.open_closed, 0);
        assert_eq!(c.closed_open, 1);

        let fig9 = canonical_representation(FamilyId::Fig9).unwrap();
        let c = fig9.type_census();
        assert!(c.closed >= 1 && c.open >= 1 && c.closed_open >= 1 && c.open_closed >= 1);
    }
}
