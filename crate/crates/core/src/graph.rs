//! Directed graphs underlying the polyhedra.

use std::collections::HashSet;
use std::fmt;

use petgraph::unionfind::UnionFind;

use crate::error::{Error, Result};

/// Index of a node. Node 0 is the anchor whose coordinate is fixed to zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeId(pub usize);

impl NodeId {
    pub const ANCHOR: NodeId = NodeId(0);

    #[inline]
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

/// A directed edge `tail -> head`, encoding `-u_tail + u_head <= cost`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub tail: NodeId,
    pub head: NodeId,
}

impl Edge {
    pub fn new(tail: usize, head: usize) -> Self {
        Edge { tail: NodeId(tail), head: NodeId(head) }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.tail, self.head)
    }
}

/// Connected directed graph without self-loops or repeated `(tail, head)` pairs.
/// Antiparallel pairs are allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    node_count: usize,
    edges: Vec<Edge>,
}

impl Digraph {
    pub fn new(node_count: usize, edges: Vec<Edge>) -> Result<Self> {
        if node_count == 0 {
            return Err(Error::Validation("graph needs at least one node".into()));
        }
        let mut seen = HashSet::with_capacity(edges.len());
        for e in &edges {
            if e.tail.0 >= node_count || e.head.0 >= node_count {
                return Err(Error::Validation(format!(
                    "edge {e} references a node outside 0..{node_count}"
                )));
            }
            if e.tail == e.head {
                return Err(Error::Validation(format!("self-loop at {}", e.tail)));
            }
            if !seen.insert((e.tail, e.head)) {
                return Err(Error::Validation(format!("duplicate edge {e}")));
            }
        }
        let graph = Digraph { node_count, edges };
        if graph.component_count(graph.edges.iter().copied()) != 1 {
            return Err(Error::Validation("underlying undirected graph is disconnected".into()));
        }
        Ok(graph)
    }

    #[inline]
    pub fn node_count(&self) -> usize {
        self.node_count
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    #[inline]
    pub fn edge(&self, index: usize) -> Edge {
        self.edges[index]
    }

    pub fn find_edge(&self, tail: usize, head: usize) -> Option<usize> {
        self.edges.iter().position(|e| e.tail.0 == tail && e.head.0 == head)
    }

    /// Number of connected components of `(V, edges)` ignoring orientation.
    /// Isolated nodes count as components.
    pub fn component_count(&self, edges: impl IntoIterator<Item = Edge>) -> usize {
        let mut uf = UnionFind::<usize>::new(self.node_count);
        let mut components = self.node_count;
        for e in edges {
            if uf.union(e.tail.0, e.head.0) {
                components -= 1;
            }
        }
        components
    }

    /// Component label per node for `(V, edges)` ignoring orientation.
    pub fn component_labels(&self, edges: impl IntoIterator<Item = Edge>) -> Vec<usize> {
        let mut uf = UnionFind::<usize>::new(self.node_count);
        for e in edges {
            uf.union(e.tail.0, e.head.0);
        }
        uf.into_labeling()
    }

    /// Neighbours in the underlying undirected graph.
    pub fn undirected_adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.node_count];
        for e in &self.edges {
            adj[e.tail.0].push(e.head.0);
            adj[e.head.0].push(e.tail.0);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        adj
    }

    /// Whether `members` (a node indicator) induces a nonempty connected
    /// subgraph of the underlying undirected graph.
    pub fn induces_connected(&self, members: &[bool]) -> bool {
        let Some(start) = members.iter().position(|&m| m) else {
            return false;
        };
        let adj = self.undirected_adjacency();
        let mut seen = vec![false; self.node_count];
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if members[w] && !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        members.iter().zip(&seen).all(|(&m, &s)| !m || s)
    }
}
