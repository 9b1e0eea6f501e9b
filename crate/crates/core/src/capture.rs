//! The capture relation of a finite graph.
//!
//! Level 0 is the diagonal. A pair `(u, v)` (robber on `u`, cop on `v`) enters level `t + 1`
//! once every `x ∈ N[u]` has some `y ∈ N[v]` with `(x, y)` already related at level `≤ t`.
//! The level at which a pair enters is its capture value; pairs that never enter get
//! [`CaptureValue::Never`].
//!
//! Saturation is incremental. For every `(x, v)` we track whether `x` is *covered* from `v`
//! (some `y ∈ N[v]` has `(x, y)` related), and for every `(u, v)` how many `x ∈ N[u]` are
//! covered from `v`. When a pair `(x, y)` enters at level `t`, the newly covered `(x, v)`
//! for `v ∈ N[y]` bump the counters of `(u, v)` for `u ∈ N[x]`; a counter reaching `|N[u]|`
//! puts `(u, v)` on level `t + 1`. Each covered flag flips at most once, so the whole
//! computation is `O(Σ_{x,v} deg(x) + Σ_{x,y} deg(y))`.

use std::fmt;

use thiserror::Error;

use crate::graph::{Graph, GraphError, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CaptureError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("graph is not cop-win")]
    NotCopWin,
}

/// A capture level, or `Never` for pairs outside every level.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CaptureValue {
    Finite(u32),
    Never,
}

impl CaptureValue {
    pub fn finite(self) -> Option<u32> {
        match self {
            CaptureValue::Finite(t) => Some(t),
            CaptureValue::Never => None,
        }
    }

    pub fn is_never(self) -> bool {
        self == CaptureValue::Never
    }

    fn from_raw(raw: u32) -> Self {
        if raw == NEVER {
            CaptureValue::Never
        } else {
            CaptureValue::Finite(raw)
        }
    }
}

impl fmt::Display for CaptureValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CaptureValue::Finite(t) => write!(f, "{t}"),
            CaptureValue::Never => f.write_str("never"),
        }
    }
}

const NEVER: u32 = u32::MAX;

#[derive(Debug, Clone)]
pub struct CaptureTable {
    graph: Graph,
    // row-major: eta[robber * n + cop]
    eta: Vec<u32>,
    rho: u32,
    copwin: bool,
}

impl CaptureTable {
    pub fn compute(g: &Graph) -> Result<CaptureTable, CaptureError> {
        if g.is_empty() {
            return Err(GraphError::Empty.into());
        }
        if !g.is_connected() {
            return Err(GraphError::Disconnected.into());
        }
        let n = g.vertex_count();
        let nbhd: Vec<Vec<usize>> = g
            .vertices()
            .map(|v| {
                g.closed_neighborhood(v)
                    .into_iter()
                    .map(VertexId::index)
                    .collect()
            })
            .collect();

        let mut eta = vec![NEVER; n * n];
        let mut covered = vec![false; n * n];
        let mut count = vec![0u32; n * n];

        let mut frontier: Vec<(usize, usize)> = (0..n).map(|v| (v, v)).collect();
        for &(v, _) in &frontier {
            eta[v * n + v] = 0;
        }
        let mut level = 0u32;
        let mut rho = 0u32;
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for &(x, y) in &frontier {
                for &v in &nbhd[y] {
                    let cov = &mut covered[x * n + v];
                    if *cov {
                        continue;
                    }
                    *cov = true;
                    for &u in &nbhd[x] {
                        let c = &mut count[u * n + v];
                        *c += 1;
                        if *c as usize == nbhd[u].len() && eta[u * n + v] == NEVER {
                            eta[u * n + v] = level + 1;
                            next.push((u, v));
                        }
                    }
                }
            }
            if !next.is_empty() {
                rho = level + 1;
            }
            level += 1;
            frontier = next;
        }
        let copwin = eta.iter().all(|&e| e != NEVER);
        Ok(CaptureTable {
            graph: g.clone(),
            eta,
            rho,
            copwin,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.vertex_count()
    }

    /// Capture value of a robber on `robber` against a cop on `cop`, robber to move.
    pub fn eta(&self, robber: VertexId, cop: VertexId) -> CaptureValue {
        CaptureValue::from_raw(self.eta[robber.0 * self.n() + cop.0])
    }

    pub fn eta_by_label(&self, robber: &str, cop: &str) -> Result<CaptureValue, CaptureError> {
        let u = self.graph.require(robber)?;
        let v = self.graph.require(cop)?;
        Ok(self.eta(u, v))
    }

    /// `η(v)`: the worst robber start against a cop on `v`.
    pub fn eta_of_vertex(&self, cop: VertexId) -> CaptureValue {
        self.graph
            .vertices()
            .map(|u| self.eta(u, cop))
            .max()
            .unwrap_or(CaptureValue::Finite(0))
    }

    pub fn eta_of_vertex_label(&self, cop: &str) -> Result<CaptureValue, CaptureError> {
        Ok(self.eta_of_vertex(self.graph.require(cop)?))
    }

    /// `η(G)`: the best cop start. This is the capture time when finite.
    pub fn eta_of_graph(&self) -> CaptureValue {
        self.graph
            .vertices()
            .map(|v| self.eta_of_vertex(v))
            .min()
            .unwrap_or(CaptureValue::Finite(0))
    }

    /// The stabilization level: the least `t` with `≤_t = ≤_{t+1}`.
    pub fn rho(&self) -> u32 {
        self.rho
    }

    pub fn is_copwin(&self) -> bool {
        self.copwin
    }

    /// Optimal cop starts, sorted by label.
    pub fn theta(&self) -> Result<Vec<VertexId>, CaptureError> {
        if !self.copwin {
            return Err(CaptureError::NotCopWin);
        }
        let best = self.eta_of_graph();
        let mut out: Vec<VertexId> = self
            .graph
            .vertices()
            .filter(|&v| self.eta_of_vertex(v) == best)
            .collect();
        out.sort_by(|&a, &b| self.graph.label(a).cmp(self.graph.label(b)));
        Ok(out)
    }

    pub fn theta_labels(&self) -> Result<Vec<&str>, CaptureError> {
        Ok(self
            .theta()?
            .into_iter()
            .map(|v| self.graph.label(v))
            .collect())
    }

    /// The relation `≤_t` as a row-major boolean matrix.
    pub fn level_set(&self, t: u32) -> Vec<bool> {
        self.eta.iter().map(|&e| e != NEVER && e <= t).collect()
    }

    /// Applies the level step once to `≤_t` read from this table, scanning every pair.
    /// Returns the relation `≤_{t+1}`.
    pub fn step(&self, t: u32) -> Vec<bool> {
        let n = self.n();
        let rel = self.level_set(t);
        let g = &self.graph;
        let mut out = rel.clone();
        for u in g.vertices() {
            for v in g.vertices() {
                if rel[u.0 * n + v.0] {
                    continue;
                }
                let nv = g.closed_neighborhood(v);
                out[u.0 * n + v.0] = g
                    .closed_neighborhood(u)
                    .into_iter()
                    .all(|x| nv.iter().any(|y| rel[x.0 * n + y.0]));
            }
        }
        out
    }
}
