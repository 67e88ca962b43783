//! Spanning trees of the underlying undirected graph.

use std::ops::ControlFlow;

use petgraph::unionfind::UnionFind;

use crate::error::{Error, Result};
use crate::graph::Digraph;

/// Edge-index set forming a spanning tree of the underlying undirected graph.
/// Indices are kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SpanningTree {
    edge_indices: Vec<usize>,
}

impl SpanningTree {
    pub fn new(graph: &Digraph, mut edge_indices: Vec<usize>) -> Result<Self> {
        edge_indices.sort_unstable();
        edge_indices.dedup();
        let n = graph.node_count();
        if edge_indices.len() + 1 != n {
            return Err(Error::NotASpanningTree(format!(
                "{} edges given, {} needed",
                edge_indices.len(),
                n - 1
            )));
        }
        let mut uf = UnionFind::<usize>::new(n);
        for &i in &edge_indices {
            if i >= graph.edge_count() {
                return Err(Error::EdgeMissing(i));
            }
            let e = graph.edge(i);
            if !uf.union(e.tail.0, e.head.0) {
                return Err(Error::NotASpanningTree(format!("edge {e} closes a cycle")));
            }
        }
        Ok(SpanningTree { edge_indices })
    }

    pub(crate) fn from_sorted_unchecked(edge_indices: Vec<usize>) -> Self {
        SpanningTree { edge_indices }
    }

    pub fn edge_indices(&self) -> &[usize] {
        &self.edge_indices
    }

    pub fn contains(&self, edge: usize) -> bool {
        self.edge_indices.binary_search(&edge).is_ok()
    }
}

/// Greedy spanning tree using `candidates` in ascending index order: the
/// lexicographically smallest spanning tree inside the candidate set.
pub fn first_spanning_tree(graph: &Digraph, candidates: &[usize]) -> Option<SpanningTree> {
    let mut sorted = candidates.to_vec();
    sorted.sort_unstable();
    let mut uf = UnionFind::<usize>::new(graph.node_count());
    let mut chosen = Vec::with_capacity(graph.node_count().saturating_sub(1));
    for i in sorted {
        let e = graph.edge(i);
        if uf.union(e.tail.0, e.head.0) {
            chosen.push(i);
        }
    }
    (chosen.len() + 1 == graph.node_count()).then(|| SpanningTree::from_sorted_unchecked(chosen))
}

/// Visits every spanning tree once, in lexicographic order of the sorted edge
/// index lists. Fails once more than `cap` trees have been produced.
pub fn for_each_spanning_tree<F>(graph: &Digraph, cap: usize, mut visit: F) -> Result<usize>
where
    F: FnMut(&SpanningTree) -> ControlFlow<()>,
{
    let n = graph.node_count();
    if n == 1 {
        let _ = visit(&SpanningTree::from_sorted_unchecked(Vec::new()));
        return Ok(1);
    }
    let mut search = TreeSearch { graph, cap, count: 0, chosen: Vec::with_capacity(n - 1) };
    let labels: Vec<usize> = (0..n).collect();
    let _ = search.descend(0, labels, &mut visit)?;
    Ok(search.count)
}

pub fn spanning_trees(graph: &Digraph, cap: usize) -> Result<Vec<SpanningTree>> {
    let mut out = Vec::new();
    for_each_spanning_tree(graph, cap, |t| {
        out.push(t.clone());
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

struct TreeSearch<'g> {
    graph: &'g Digraph,
    cap: usize,
    count: usize,
    chosen: Vec<usize>,
}

impl TreeSearch<'_> {
    /// `labels[v]` names the component of `v` in the forest chosen so far.
    fn descend<F>(&mut self, start: usize, labels: Vec<usize>, visit: &mut F) -> Result<ControlFlow<()>>
    where
        F: FnMut(&SpanningTree) -> ControlFlow<()>,
    {
        let n = self.graph.node_count();
        let m = self.graph.edge_count();
        if self.chosen.len() + 1 == n {
            self.count += 1;
            if self.count > self.cap {
                return Err(Error::InstanceTooLarge { what: "spanning trees", cap: self.cap });
            }
            return Ok(visit(&SpanningTree::from_sorted_unchecked(self.chosen.clone())));
        }
        let needed = n - 1 - self.chosen.len();
        if m - start < needed || !self.completable(start, &labels) {
            return Ok(ControlFlow::Continue(()));
        }
        for i in start..m {
            if m - i < needed {
                break;
            }
            let e = self.graph.edge(i);
            let (a, b) = (labels[e.tail.0], labels[e.head.0]);
            if a == b {
                continue;
            }
            let merged: Vec<usize> = labels.iter().map(|&l| if l == b { a } else { l }).collect();
            self.chosen.push(i);
            let flow = self.descend(i + 1, merged, visit)?;
            self.chosen.pop();
            if flow.is_break() {
                return Ok(flow);
            }
        }
        Ok(ControlFlow::Continue(()))
    }

    /// Whether the chosen forest plus edges `start..` still connects every node.
    fn completable(&self, start: usize, labels: &[usize]) -> bool {
        let n = self.graph.node_count();
        let mut uf = UnionFind::<usize>::new(n);
        let mut components = labels.iter().enumerate().filter(|&(v, &l)| v == l).count();
        for v in 0..n {
            uf.union(v, labels[v]);
        }
        for e in &self.graph.edges()[start..] {
            if uf.union(e.tail.0, e.head.0) {
                components -= 1;
                if components == 1 {
                    return true;
                }
            }
        }
        components == 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Edge;

    fn k4_doubled() -> Digraph {
        // Underlying multigraph of the four-node example: K4 with three doubled pairs.
        Digraph::new(
            4,
            vec![
                Edge::new(3, 0),
                Edge::new(2, 0),
                Edge::new(3, 1),
                Edge::new(0, 3),
                Edge::new(0, 2),
                Edge::new(1, 3),
                Edge::new(0, 1),
                Edge::new(1, 2),
                Edge::new(2, 3),
            ],
        )
        .unwrap()
    }

    #[test]
    fn single_node_has_the_empty_tree() {
        let g = Digraph::new(1, vec![]).unwrap();
        let trees = spanning_trees(&g, 10).unwrap();
        assert_eq!(trees.len(), 1);
        assert!(trees[0].edge_indices().is_empty());
    }

    #[test]
    fn triangle_has_three_trees_in_lex_order() {
        let g = Digraph::new(3, vec![Edge::new(0, 1), Edge::new(1, 2), Edge::new(2, 0)]).unwrap();
        let trees: Vec<Vec<usize>> =
            spanning_trees(&g, 10).unwrap().iter().map(|t| t.edge_indices().to_vec()).collect();
        assert_eq!(trees, vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
    }

    #[test]
    fn cap_is_enforced() {
        let g = k4_doubled();
        assert!(matches!(
            spanning_trees(&g, 5),
            Err(Error::InstanceTooLarge { what: "spanning trees", cap: 5 })
        ));
    }

    #[test]
    fn greedy_tree_is_lexicographically_first() {
        let g = k4_doubled();
        let all = spanning_trees(&g, 1000).unwrap();
        let first = first_spanning_tree(&g, &(0..9).collect::<Vec<_>>()).unwrap();
        assert_eq!(&first, &all[0]);
        assert!(first_spanning_tree(&g, &[0, 3]).is_none());
    }

    #[test]
    fn validation_of_explicit_trees() {
        let g = k4_doubled();
        assert!(SpanningTree::new(&g, vec![0, 1, 2]).is_ok());
        assert!(matches!(SpanningTree::new(&g, vec![0, 3, 1]), Err(Error::NotASpanningTree(_))));
        assert!(matches!(SpanningTree::new(&g, vec![0, 1]), Err(Error::NotASpanningTree(_))));
        assert!(matches!(SpanningTree::new(&g, vec![0, 1, 42]), Err(Error::EdgeMissing(42))));
    }
}
