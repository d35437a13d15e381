//! Graph data model: simple undirected graphs with dense ids, twin reduction,
//! components, induced subgraphs, and the graph6 / edge-list formats.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use thiserror::Error;

/// Dense vertex identifier, `0..n`.
pub type VertexId = usize;

/// A finite simple undirected graph. Adjacency is symmetric, without
/// self-loops or parallel edges; vertex ids are dense.
#[derive(Clone, Debug, Default)]
pub struct Graph {
    adjacency: Vec<BTreeSet<VertexId>>,
    /// Optional display names, e.g. edge-list tokens or family role labels.
    pub labels: Option<Vec<String>>,
}

/// Structural equality: vertex count and edge set. Labels are display-only.
impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.adjacency == other.adjacency
    }
}
impl Eq for Graph {}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {0} out of range (n = {1})")]
    VertexOutOfRange(VertexId, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(VertexId, VertexId),
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph {
            adjacency: vec![BTreeSet::new(); n],
            labels: None,
        }
    }

    pub fn from_edges(
        n: usize,
        edges: impl IntoIterator<Item = (VertexId, VertexId)>,
    ) -> Result<Self, GraphError> {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<(), GraphError> {
        let n = self.n();
        if u >= n {
            return Err(GraphError::VertexOutOfRange(u, n));
        }
        if v >= n {
            return Err(GraphError::VertexOutOfRange(v, n));
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if !self.adjacency[u].insert(v) {
            return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.adjacency[v].insert(u);
        Ok(())
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adjacency.get(u).is_some_and(|a| a.contains(&v))
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.adjacency[v].iter().copied()
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v].len()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n() {
            for &v in &self.adjacency[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// `N[v] = N(v) ∪ {v}`.
    pub fn closed_neighborhood(&self, v: VertexId) -> BTreeSet<VertexId> {
        let mut set = self.adjacency[v].clone();
        set.insert(v);
        set
    }

    /// Subgraph induced by `vs`, ids densified in ascending order of the
    /// original ids. Returns the new graph and the new-id → old-id map.
    pub fn induced_subgraph(&self, vs: &BTreeSet<VertexId>) -> (Graph, Vec<VertexId>) {
        let order: Vec<VertexId> = vs.iter().copied().collect();
        let index: HashMap<VertexId, VertexId> =
            order.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut g = Graph::new(order.len());
        for (i, &v) in order.iter().enumerate() {
            for &w in &self.adjacency[v] {
                if let Some(&j) = index.get(&w) {
                    if i < j {
                        g.add_edge(i, j).expect("induced edges are simple");
                    }
                }
            }
        }
        if let Some(labels) = &self.labels {
            g.labels = Some(order.iter().map(|&v| labels[v].clone()).collect());
        }
        (g, order)
    }

    /// Graph with vertex `v` removed, remaining ids densified.
    pub fn delete_vertex(&self, v: VertexId) -> Graph {
        let keep: BTreeSet<VertexId> = (0..self.n()).filter(|&u| u != v).collect();
        self.induced_subgraph(&keep).0
    }

    /// Maximal connected vertex sets, ordered by smallest contained id.
    pub fn connected_components(&self) -> Vec<BTreeSet<VertexId>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut comps = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut comp = BTreeSet::new();
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(v) = stack.pop() {
                comp.insert(v);
                for &w in &self.adjacency[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.connected_components().len() == 1
    }

    /// Breadth-first visit order from the smallest id of each component.
    pub fn bfs_order(&self) -> Vec<VertexId> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut order = Vec::with_capacity(n);
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                order.push(v);
                for &w in &self.adjacency[v] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
        order
    }

    /// True if no two distinct vertices have equal closed neighborhoods.
    pub fn is_twin_free(&self) -> bool {
        let r = self.reduce_twins();
        r.reduced.n() == self.n()
    }

    /// Partition vertices into maximal classes of equal closed neighborhoods
    /// and quotient to one representative per class (smallest id). Grouping
    /// uses hashing on the neighborhood sets; the map's key comparison gives
    /// the exact verification on collisions.
    pub fn reduce_twins(&self) -> TwinReduction {
        let mut classes: HashMap<Vec<VertexId>, Vec<VertexId>> = HashMap::new();
        for v in 0..self.n() {
            let key: Vec<VertexId> = self.closed_neighborhood(v).into_iter().collect();
            classes.entry(key).or_default().push(v);
        }
        let mut reps: Vec<VertexId> = classes.values().map(|c| c[0]).collect();
        reps.sort_unstable();
        let rep_index: HashMap<VertexId, VertexId> =
            reps.iter().enumerate().map(|(i, &r)| (r, i)).collect();

        let mut class_map = vec![0; self.n()];
        for class in classes.values() {
            let rep = class[0];
            for &v in class {
                class_map[v] = rep_index[&rep];
            }
        }

        let mut reduced = Graph::new(reps.len());
        for (i, &u) in reps.iter().enumerate() {
            for (j, &v) in reps.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    reduced.add_edge(i, j).expect("quotient edges are simple");
                }
            }
        }
        if let Some(labels) = &self.labels {
            reduced.labels = Some(reps.iter().map(|&v| labels[v].clone()).collect());
        }
        TwinReduction {
            reduced,
            class_map,
            representatives: reps,
        }
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={})", self.n(), self.edge_count())
    }
}

/// Result of quotienting a graph by its twin classes (equal closed
/// neighborhoods). The reduced graph is twin-free; `class_map` sends each
/// original vertex to the reduced id of its class representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwinReduction {
    pub reduced: Graph,
    pub class_map: Vec<VertexId>,
    /// Reduced id → original id of the representative (smallest in class).
    pub representatives: Vec<VertexId>,
}
