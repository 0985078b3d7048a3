//! Simple undirected graphs on vertices `0..n` and the extension operations
//! used to build independent graphs inductively.
//!
//! Every operation returns a fresh graph whose new vertex carries label `n`.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An unordered vertex pair stored as `(min, max)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge(usize, usize);

impl Edge {
    pub fn new(u: usize, v: usize) -> Result<Self> {
        if u == v {
            return Err(Error::InvalidEdge(u, v));
        }
        Ok(Self(u.min(v), u.max(v)))
    }

    pub fn u(self) -> usize {
        self.0
    }

    pub fn v(self) -> usize {
        self.1
    }

    pub fn endpoints(self) -> [usize; 2] {
        [self.0, self.1]
    }

    pub fn contains(self, w: usize) -> bool {
        self.0 == w || self.1 == w
    }

    /// The shared endpoint of two distinct adjacent edges.
    pub fn common_vertex(self, other: Edge) -> Option<usize> {
        if self == other {
            return None;
        }
        self.endpoints().into_iter().find(|&w| other.contains(w))
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

/// Shorthand for building edges in tests and fixtures. Panics on loops.
pub fn edge(u: usize, v: usize) -> Edge {
    Edge::new(u, v).expect("edge endpoints must differ")
}

/// Edges iterate in lexicographic order.
pub type EdgeSet = BTreeSet<Edge>;

/// All pairs of `vertices`.
pub fn complete_edges(vertices: &[usize]) -> EdgeSet {
    let mut out = EdgeSet::new();
    for (i, &a) in vertices.iter().enumerate() {
        for &b in &vertices[i + 1..] {
            if a != b {
                out.insert(edge(a, b));
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: EdgeSet,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Self {
            n,
            edges: EdgeSet::new(),
        }
    }

    pub fn new(n: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let mut g = Self::empty(n);
        for e in edges {
            g.check_vertex(e.v())?;
            g.edges.insert(e);
        }
        Ok(g)
    }

    /// Builds from raw pairs, rejecting loops, out-of-range endpoints and
    /// repeated pairs.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n);
        for &(u, v) in pairs {
            let e = Edge::new(u, v)?;
            g.check_vertex(e.v())?;
            if !g.edges.insert(e) {
                return Err(Error::InvalidEdge(u, v));
            }
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let vs: Vec<usize> = (0..n).collect();
        Self {
            n,
            edges: complete_edges(&vs),
        }
    }

    /// `K_{a,b}` with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let edges = (0..a)
            .flat_map(|i| (a..a + b).map(move |j| edge(i, j)))
            .collect();
        Self { n: a + b, edges }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &EdgeSet {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, e: Edge) -> bool {
        self.edges.contains(&e)
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter_map(|e| match (e.u() == v, e.v() == v) {
                (true, _) => Some(e.v()),
                (_, true) => Some(e.u()),
                _ => None,
            })
            .collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.contains(v)).count()
    }

    /// Same vertex set, edges of `self` plus `extra`.
    pub fn with_edges(&self, extra: impl IntoIterator<Item = Edge>) -> Result<Graph> {
        let mut g = self.clone();
        for e in extra {
            g.check_vertex(e.v())?;
            g.edges.insert(e);
        }
        Ok(g)
    }

    pub fn without_edges<'a>(&self, removed: impl IntoIterator<Item = &'a Edge>) -> Graph {
        let mut g = self.clone();
        for e in removed {
            g.edges.remove(e);
        }
        g
    }

    /// Removes every edge at `v`; the vertex itself stays (isolated).
    pub fn isolate(&self, v: usize) -> Graph {
        Graph {
            n: self.n,
            edges: self
                .edges
                .iter()
                .copied()
                .filter(|e| !e.contains(v))
                .collect(),
        }
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    fn check_distinct_vertices(&self, vs: &[usize]) -> Result<()> {
        for (i, &v) in vs.iter().enumerate() {
            self.check_vertex(v)?;
            if vs[..i].contains(&v) {
                return Err(Error::InvalidOperation(format!("vertex {v} repeated")));
            }
        }
        Ok(())
    }

    fn check_has_edge(&self, e: Edge) -> Result<()> {
        if self.has_edge(e) {
            Ok(())
        } else {
            Err(Error::InvalidOperation(format!(
                "edge {e} is not in the graph"
            )))
        }
    }

    /// Appends vertex `n` joined to `targets`.
    fn attach_new_vertex(&self, targets: &[usize]) -> Graph {
        let v = self.n;
        let mut edges = self.edges.clone();
        edges.extend(targets.iter().map(|&t| edge(t, v)));
        Graph { n: v + 1, edges }
    }

    /// New vertex joined to three distinct existing vertices.
    pub fn zero_extension(&self, targets: [usize; 3]) -> Result<Graph> {
        self.check_distinct_vertices(&targets)?;
        Ok(self.attach_new_vertex(&targets))
    }

    /// Deletes `removed` and adds a vertex joined to four targets including
    /// both ends of `removed`.
    pub fn one_extension(&self, removed: Edge, targets: [usize; 4]) -> Result<Graph> {
        self.check_distinct_vertices(&targets)?;
        self.check_has_edge(removed)?;
        if !removed.endpoints().iter().all(|w| targets.contains(w)) {
            return Err(Error::InvalidOperation(format!(
                "targets must contain both ends of {removed}"
            )));
        }
        Ok(self.without_edges([&removed]).attach_new_vertex(&targets))
    }

    /// Deletes two non-adjacent edges and adds a degree-5 vertex joined to
    /// their four ends and `fifth`.
    pub fn x_replacement(&self, e: Edge, f: Edge, fifth: usize) -> Result<Graph> {
        self.check_has_edge(e)?;
        self.check_has_edge(f)?;
        if e == f || e.common_vertex(f).is_some() {
            return Err(Error::InvalidOperation(format!(
                "{e} and {f} must be distinct non-adjacent edges"
            )));
        }
        let targets = [e.u(), e.v(), f.u(), f.v(), fifth];
        self.check_distinct_vertices(&targets)?;
        Ok(self.without_edges([&e, &f]).attach_new_vertex(&targets))
    }

    /// Deletes the edges from `u` to `u3` and adds a vertex joined to
    /// `u2 ∪ u3 ∪ {u}`. The three sets must partition the neighbourhood of
    /// `u`, with `|u2| = 2`.
    pub fn vertex_split(
        &self,
        u: usize,
        u1: &[usize],
        u2: [usize; 2],
        u3: &[usize],
    ) -> Result<Graph> {
        self.check_vertex(u)?;
        let mut all: Vec<usize> = u1.iter().chain(&u2).chain(u3).copied().collect();
        self.check_distinct_vertices(&all)?;
        all.sort_unstable();
        let mut nbrs = self.neighbors(u);
        nbrs.sort_unstable();
        if all != nbrs {
            return Err(Error::InvalidOperation(format!(
                "U1, U2, U3 must partition the neighbourhood of {u}"
            )));
        }
        let cut: Vec<Edge> = u3.iter().map(|&w| edge(u, w)).collect();
        let targets: Vec<usize> = u2.iter().chain(u3).copied().chain([u]).collect();
        Ok(self.without_edges(&cut).attach_new_vertex(&targets))
    }

    /// Deletes two adjacent edges and adds a degree-5 vertex joined to their
    /// three ends and the two `others`.
    pub fn v_replacement(&self, e: Edge, f: Edge, others: [usize; 2]) -> Result<Graph> {
        self.check_has_edge(e)?;
        self.check_has_edge(f)?;
        let Some(c) = e.common_vertex(f) else {
            return Err(Error::InvalidOperation(format!(
                "{e} and {f} must be adjacent"
            )));
        };
        let a = if e.u() == c { e.v() } else { e.u() };
        let b = if f.u() == c { f.v() } else { f.u() };
        let targets = [c, a, b, others[0], others[1]];
        self.check_distinct_vertices(&targets)?;
        Ok(self.without_edges([&e, &f]).attach_new_vertex(&targets))
    }

    /// Double V-replacement. `self` is the graph `H + e1 + e2`; the result is
    /// `H` plus a vertex joined to `neighbors`. Both adjacent pairs must have
    /// their ends inside `neighbors`, with different shared endpoints, and
    /// the second pair must be absent from `H`.
    pub fn double_v_replacement(
        &self,
        pair1: (Edge, Edge),
        pair2: (Edge, Edge),
        neighbors: [usize; 5],
    ) -> Result<Graph> {
        self.check_distinct_vertices(&neighbors)?;
        self.check_has_edge(pair1.0)?;
        self.check_has_edge(pair1.1)?;
        let c1 = pair1.0.common_vertex(pair1.1);
        let c2 = pair2.0.common_vertex(pair2.1);
        let (Some(c1), Some(c2)) = (c1, c2) else {
            return Err(Error::InvalidOperation(
                "each pair must be two adjacent edges".into(),
            ));
        };
        if c1 == c2 {
            return Err(Error::InvalidOperation(format!(
                "both pairs share the common endpoint {c1}"
            )));
        }
        let all = [pair1.0, pair1.1, pair2.0, pair2.1];
        if !all
            .iter()
            .flat_map(|e| e.endpoints())
            .all(|w| neighbors.contains(&w))
        {
            return Err(Error::InvalidOperation(
                "every end of the four edges must be a neighbour".into(),
            ));
        }
        let base = self.without_edges([&pair1.0, &pair1.1]);
        if base.has_edge(pair2.0) || base.has_edge(pair2.1) {
            return Err(Error::InvalidOperation(
                "the second pair must not already be present".into(),
            ));
        }
        Ok(base.attach_new_vertex(&neighbors))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> Graph {
        Graph::complete(4)
    }

    #[test]
    fn complete_edge_counts() {
        assert!(complete_edges(&[0]).is_empty());
        let k3 = complete_edges(&[0, 1, 2]);
        assert_eq!(
            k3.into_iter().collect::<Vec<_>>(),
            vec![edge(0, 1), edge(0, 2), edge(1, 2)]
        );
        assert_eq!(complete_edges(&[0, 1, 2, 3, 4]).len(), 10);
    }

    #[test]
    fn edges_are_canonical() {
        assert_eq!(edge(3, 1), edge(1, 3));
        assert!(Edge::new(2, 2).is_err());
        assert!(Graph::from_pairs(3, &[(0, 1), (1, 0)]).is_err());
        assert!(Graph::from_pairs(3, &[(0, 3)]).is_err());
    }

    #[test]
    fn zero_extension_of_triangle_is_k4() {
        let g = Graph::complete(3).zero_extension([0, 1, 2]).unwrap();
        assert_eq!(g, k4());
        assert!(Graph::complete(3).zero_extension([0, 0, 1]).is_err());
        assert!(Graph::complete(3).zero_extension([0, 1, 3]).is_err());
    }

    #[test]
    fn one_extension_of_k4() {
        let g = k4().one_extension(edge(0, 1), [0, 1, 2, 3]).unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.edge_count(), 9);
        assert!(!g.has_edge(edge(0, 1)));
        assert!(k4().one_extension(edge(0, 1), [0, 2, 3, 1]).is_ok());
        assert!(k4().one_extension(edge(0, 1), [0, 2, 3, 3]).is_err());
        let g5 = Graph::complete(5);
        assert!(g5.one_extension(edge(0, 1), [0, 2, 3, 4]).is_err());
    }

    #[test]
    fn x_replacement_counts() {
        let g = Graph::complete(5);
        let out = g.x_replacement(edge(0, 1), edge(2, 3), 4).unwrap();
        assert_eq!(out.edge_count(), g.edge_count() + 3);
        assert_eq!(out.degree(5), 5);
        assert!(g.x_replacement(edge(0, 1), edge(1, 2), 4).is_err());
        assert!(g.x_replacement(edge(0, 1), edge(2, 3), 3).is_err());
    }

    #[test]
    fn vertex_split_counts() {
        let g = Graph::complete(5);
        let out = g.vertex_split(0, &[1], [2, 3], &[4]).unwrap();
        assert_eq!(out.degree(5), 4);
        assert_eq!(out.edge_count(), g.edge_count() + 3);
        assert!(!out.has_edge(edge(0, 4)));
        // Empty U3 is a 0-extension onto U2 ∪ {u}.
        let zero = g.vertex_split(0, &[1, 4], [2, 3], &[]).unwrap();
        assert_eq!(zero, g.zero_extension([2, 3, 0]).unwrap());
        assert!(g.vertex_split(0, &[1], [2, 3], &[]).is_err());
        assert!(g.vertex_split(0, &[1, 2], [2, 3], &[4]).is_err());
    }

    #[test]
    fn v_replacement_counts() {
        let g = Graph::complete(6);
        let out = g.v_replacement(edge(0, 1), edge(0, 2), [3, 4]).unwrap();
        assert_eq!(out.edge_count(), g.edge_count() + 3);
        assert_eq!(out.degree(6), 5);
        assert!(g.v_replacement(edge(0, 1), edge(2, 3), [4, 5]).is_err());
        assert!(g.v_replacement(edge(0, 1), edge(0, 2), [1, 4]).is_err());
    }

    #[test]
    fn double_v_replacement_counts() {
        let h =
            Graph::complete(5).without_edges([&edge(0, 1), &edge(0, 2), &edge(3, 1), &edge(3, 4)]);
        let input = h.with_edges([edge(0, 1), edge(0, 2)]).unwrap();
        let out = input
            .double_v_replacement(
                (edge(0, 1), edge(0, 2)),
                (edge(3, 1), edge(3, 4)),
                [0, 1, 2, 3, 4],
            )
            .unwrap();
        assert_eq!(out.n(), input.n() + 1);
        assert_eq!(out.edge_count(), input.edge_count() - 2 + 5);
        assert_eq!(out.degree(5), 5);
        // Same centre on both pairs.
        assert!(input
            .double_v_replacement(
                (edge(0, 1), edge(0, 2)),
                (edge(0, 3), edge(0, 4)),
                [0, 1, 2, 3, 4]
            )
            .is_err());
    }

    #[test]
    fn neighbors_and_degree() {
        let g = Graph::from_pairs(4, &[(0, 1), (2, 0), (3, 2)]).unwrap();
        assert_eq!(g.neighbors(0), vec![1, 2]);
        assert_eq!(g.degree(2), 2);
        assert_eq!(g.isolate(0).edge_count(), 1);
    }
}
