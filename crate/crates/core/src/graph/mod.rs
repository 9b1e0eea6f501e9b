//! Finite simple undirected graphs with string labels.
//!
//! Vertices are stored in insertion order and addressed by [`VertexId`]. Adjacency lists are
//! kept sorted by id, so every traversal in the crate visits vertices in insertion order.

mod generate;
mod text;

pub use generate::{GenSpec, MAX_S_INDEX};
pub use text::{parse_graph, write_graph};

use std::collections::{HashMap, VecDeque};
use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("unknown vertex '{0}'")]
    UnknownVertex(String),
    #[error("invalid vertex label '{0}'")]
    InvalidLabel(String),
    #[error("self-loop at '{0}'")]
    SelfLoop(String),
    #[error("graph is empty")]
    Empty,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("label collision on '{0}'")]
    LabelCollision(String),
    #[error("line {line}, column {column}: {msg}")]
    Parse {
        line: usize,
        column: usize,
        msg: String,
    },
    #[error("bad generator spec '{spec}': {msg}")]
    BadSpec { spec: String, msg: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub usize);

impl VertexId {
    pub fn index(self) -> usize {
        self.0
    }
}

impl From<usize> for VertexId {
    fn from(i: usize) -> Self {
        VertexId(i)
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

#[derive(Debug, Clone, Default)]
pub struct Graph {
    labels: Vec<String>,
    index: HashMap<String, VertexId>,
    adj: Vec<Vec<VertexId>>,
}

// `index` is derived from `labels`
impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `label` if absent and returns its id.
    pub fn add_vertex(&mut self, label: &str) -> Result<VertexId, GraphError> {
        if let Some(&id) = self.index.get(label) {
            return Ok(id);
        }
        if label.is_empty() || label.chars().any(char::is_whitespace) {
            return Err(GraphError::InvalidLabel(label.to_string()));
        }
        let id = VertexId(self.labels.len());
        self.labels.push(label.to_string());
        self.index.insert(label.to_string(), id);
        self.adj.push(Vec::new());
        Ok(id)
    }

    /// Adds the edge `{a, b}`, declaring missing endpoints. Repeated edges are ignored.
    pub fn add_edge(&mut self, a: &str, b: &str) -> Result<(), GraphError> {
        if a == b {
            return Err(GraphError::SelfLoop(a.to_string()));
        }
        let a = self.add_vertex(a)?;
        let b = self.add_vertex(b)?;
        self.link(a, b);
        Ok(())
    }

    pub fn add_edge_ids(&mut self, a: VertexId, b: VertexId) -> Result<(), GraphError> {
        if a == b {
            return Err(GraphError::SelfLoop(self.label(a).to_string()));
        }
        self.link(a, b);
        Ok(())
    }

    fn link(&mut self, a: VertexId, b: VertexId) {
        if let Err(pos) = self.adj[a.0].binary_search(&b) {
            self.adj[a.0].insert(pos, b);
            let pos = self.adj[b.0].binary_search(&a).unwrap_err();
            self.adj[b.0].insert(pos, a);
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn vertices(&self) -> impl ExactSizeIterator<Item = VertexId> + '_ {
        (0..self.labels.len()).map(VertexId)
    }

    /// Edges `(a, b)` with `a < b`, ordered by `a` then `b`.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.vertices().flat_map(move |a| {
            self.adj[a.0]
                .iter()
                .filter(move |&&b| b > a)
                .map(move |&b| (a, b))
        })
    }

    pub fn label(&self, v: VertexId) -> &str {
        &self.labels[v.0]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn id(&self, label: &str) -> Option<VertexId> {
        self.index.get(label).copied()
    }

    pub fn require(&self, label: &str) -> Result<VertexId, GraphError> {
        self.id(label)
            .ok_or_else(|| GraphError::UnknownVertex(label.to_string()))
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v.0]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v.0].len()
    }

    pub fn is_adjacent(&self, a: VertexId, b: VertexId) -> bool {
        self.adj[a.0].binary_search(&b).is_ok()
    }

    /// `N[v]`: `v` and its neighbours, in id order.
    pub fn closed_neighborhood(&self, v: VertexId) -> Vec<VertexId> {
        let mut out = Vec::with_capacity(self.adj[v.0].len() + 1);
        let pos = self.adj[v.0].partition_point(|&u| u < v);
        out.extend_from_slice(&self.adj[v.0][..pos]);
        out.push(v);
        out.extend_from_slice(&self.adj[v.0][pos..]);
        out
    }

    pub fn closed_neighborhood_of(&self, label: &str) -> Result<Vec<&str>, GraphError> {
        let v = self.require(label)?;
        Ok(self
            .closed_neighborhood(v)
            .into_iter()
            .map(|u| self.label(u))
            .collect())
    }

    /// BFS distances from `src`; `None` marks unreachable vertices.
    pub fn distances_from(&self, src: VertexId) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count()];
        let mut queue = VecDeque::new();
        dist[src.0] = Some(0);
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            let d = dist[u.0].unwrap();
            for &w in &self.adj[u.0] {
                if dist[w.0].is_none() {
                    dist[w.0] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Distance from `v` to the nearest vertex of `set`.
    pub fn distance_to_set(&self, v: VertexId, set: &[VertexId]) -> Option<usize> {
        let dist = self.distances_from(v);
        set.iter().filter_map(|s| dist[s.0]).min()
    }

    /// True for graphs with at least one vertex and a single component.
    pub fn is_connected(&self) -> bool {
        if self.is_empty() {
            return false;
        }
        self.distances_from(VertexId(0)).iter().all(Option::is_some)
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.edge_count() + 1 == self.vertex_count()
    }

    fn check_connected(&self) -> Result<(), GraphError> {
        if self.is_empty() {
            Err(GraphError::Empty)
        } else if !self.is_connected() {
            Err(GraphError::Disconnected)
        } else {
            Ok(())
        }
    }

    pub fn eccentricity(&self, v: VertexId) -> Result<usize, GraphError> {
        self.check_connected()?;
        Ok(self.ecc_unchecked(v))
    }

    fn ecc_unchecked(&self, v: VertexId) -> usize {
        self.distances_from(v)
            .into_iter()
            .map(|d| d.expect("connected"))
            .max()
            .unwrap_or(0)
    }

    /// Eccentricity of every vertex, in id order.
    pub fn eccentricities(&self) -> Result<Vec<usize>, GraphError> {
        self.check_connected()?;
        Ok(self.vertices().map(|v| self.ecc_unchecked(v)).collect())
    }

    pub fn radius(&self) -> Result<usize, GraphError> {
        Ok(self.eccentricities()?.into_iter().min().unwrap())
    }

    pub fn diameter(&self) -> Result<usize, GraphError> {
        Ok(self.eccentricities()?.into_iter().max().unwrap())
    }

    /// Vertices of minimum eccentricity, in id order.
    pub fn center(&self) -> Result<Vec<VertexId>, GraphError> {
        let ecc = self.eccentricities()?;
        let r = *ecc.iter().min().unwrap();
        Ok(self.vertices().filter(|v| ecc[v.0] == r).collect())
    }

    /// Copy of `self` with every label prefixed.
    pub fn prefixed(&self, prefix: &str) -> Graph {
        let mut g = Graph::new();
        for l in &self.labels {
            g.add_vertex(&format!("{prefix}{l}")).unwrap();
        }
        for (a, b) in self.edges() {
            g.link(a, b);
        }
        g
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedGraph {
    pub graph: Graph,
    pub root: VertexId,
}

impl RootedGraph {
    pub fn new(graph: Graph, root: &str) -> Result<Self, GraphError> {
        let root = graph.require(root)?;
        Ok(RootedGraph { graph, root })
    }

    /// A single vertex.
    pub fn singleton(label: &str) -> Result<Self, GraphError> {
        let mut graph = Graph::new();
        let root = graph.add_vertex(label)?;
        Ok(RootedGraph { graph, root })
    }

    pub fn root_label(&self) -> &str {
        self.graph.label(self.root)
    }
}

/// Joins the parts under a fresh root adjacent to each part's root.
///
/// Part `i` has its labels prefixed with `"{i}/"`; the new root is inserted first.
pub fn rooted_sum(parts: &[RootedGraph], new_root: &str) -> Result<RootedGraph, GraphError> {
    if parts.is_empty() {
        return Err(GraphError::BadSpec {
            spec: "rooted_sum".into(),
            msg: "needs at least one part".into(),
        });
    }
    let mut g = Graph::new();
    let root = g.add_vertex(new_root)?;
    for (i, part) in parts.iter().enumerate() {
        let offset = g.vertex_count();
        for l in part.graph.labels() {
            let label = format!("{i}/{l}");
            if g.id(&label).is_some() {
                return Err(GraphError::LabelCollision(label));
            }
            g.add_vertex(&label)?;
        }
        for (a, b) in part.graph.edges() {
            g.link(VertexId(offset + a.0), VertexId(offset + b.0));
        }
        g.link(root, VertexId(offset + part.root.0));
    }
    Ok(RootedGraph { graph: g, root })
}
