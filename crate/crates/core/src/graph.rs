//! Simple undirected graphs with provenance labels, plus the join and
//! disjoint-union operations.
//!
//! Vertices are dense 0-based indices. Both binary operations keep the left
//! operand's numbering and shift the right operand by the left vertex count.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::GraphError;

/// Finite simple undirected graph.
///
/// Edges are stored normalized (`u < v`) and sorted, so two graphs built
/// from the same edge set compare equal regardless of insertion order.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    labels: Vec<String>,
}

impl Graph {
    /// Graph with `n` vertices, no edges and empty labels.
    pub fn empty(n: usize) -> Self {
        Graph {
            vertex_count: n,
            edges: Vec::new(),
            labels: vec![String::new(); n],
        }
    }

    /// Builds a graph from an edge list. Rejects self-loops, duplicate edges
    /// (in either orientation) and out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::EndpointOutOfRange {
                    edge: (u, v),
                    vertex_count: n,
                });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if !set.insert((u.min(v), u.max(v))) {
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
        }
        Ok(Graph {
            vertex_count: n,
            edges: set.into_iter().collect(),
            labels: vec![String::new(); n],
        })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, GraphError> {
        if labels.len() != self.vertex_count {
            return Err(GraphError::LabelCount {
                labels: labels.len(),
                vertex_count: self.vertex_count,
            });
        }
        self.labels = labels;
        Ok(self)
    }

    /// Sets every label to `prefix` followed by the vertex index.
    pub fn with_label_prefix(mut self, prefix: &str) -> Self {
        for (i, l) in self.labels.iter_mut().enumerate() {
            *l = format!("{prefix}{i}");
        }
        self
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::from_edges(n, edges).expect("complete graph is simple")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle is simple")
    }

    pub fn path(n: usize) -> Self {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("path is simple")
    }

    /// The Petersen graph: outer 5-cycle 0..5, inner pentagram 5..10.
    pub fn petersen() -> Self {
        let mut edges = Vec::with_capacity(15);
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, edges).expect("petersen graph is simple")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Normalized, sorted edge list.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.binary_search(&(u.min(v), u.max(v))).is_ok()
    }

    /// Sorted neighbour lists.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertex_count];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertex_count];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    /// Degree multiset as a sorted vector.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d = self.degrees();
        d.sort_unstable();
        d
    }

    /// Combines two graphs with the right operand shifted by
    /// `self.vertex_count`. Labels gain an `a/` or `b/` side tag.
    fn combine(&self, other: &Graph, cross: bool) -> Graph {
        let offset = self.vertex_count;
        let n = offset + other.vertex_count;
        let mut edges = Vec::with_capacity(
            self.edges.len()
                + other.edges.len()
                + if cross {
                    offset * other.vertex_count
                } else {
                    0
                },
        );
        edges.extend_from_slice(&self.edges);
        if cross {
            for a in 0..offset {
                for b in offset..n {
                    edges.push((a, b));
                }
            }
        }
        edges.extend(other.edges.iter().map(|&(u, v)| (u + offset, v + offset)));
        edges.sort_unstable();

        let labels = self
            .labels
            .iter()
            .map(|l| format!("a/{l}"))
            .chain(other.labels.iter().map(|l| format!("b/{l}")))
            .collect();
        Graph {
            vertex_count: n,
            edges,
            labels,
        }
    }

    /// Vertex-disjoint copy of `self` and `other` with no cross edges.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        self.combine(other, false)
    }

    /// Disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &Graph) -> Graph {
        self.combine(other, true)
    }

    /// Same graph with every label replaced by `f(index, old)`.
    pub fn relabel<F>(mut self, mut f: F) -> Graph
    where
        F: FnMut(usize, &str) -> String,
    {
        for (i, l) in self.labels.iter_mut().enumerate() {
            *l = f(i, l);
        }
        self
    }

    /// Checks the structural invariants. Only graphs assembled through
    /// deserialization can violate them.
    pub fn validate(&self) -> Result<(), GraphError> {
        if self.labels.len() != self.vertex_count {
            return Err(GraphError::LabelCount {
                labels: self.labels.len(),
                vertex_count: self.vertex_count,
            });
        }
        Graph::from_edges(self.vertex_count, self.edges.iter().copied()).map(|_| ())
    }
}

pub fn join(a: &Graph, b: &Graph) -> Graph {
    a.join(b)
}

pub fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
    a.disjoint_union(b)
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.vertex_count)
            .field("edges", &self.edges)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn join_of_two_singletons_is_an_edge() {
        let k1 = Graph::empty(1);
        let g = k1.join(&k1);
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edges(), &[(0, 1)]);
        assert_eq!(g.labels(), &["a/".to_string(), "b/".to_string()]);
    }

    #[test]
    fn empty_graph_is_identity_up_to_labels() {
        let e = Graph::empty(0);
        let c5 = Graph::cycle(5);
        for g in [
            e.join(&c5),
            c5.join(&e),
            e.disjoint_union(&c5),
            c5.disjoint_union(&e),
        ] {
            assert_eq!(g.vertex_count(), 5);
            assert_eq!(g.edges(), c5.edges());
        }
    }

    #[test]
    fn union_counts() {
        let c5 = Graph::cycle(5);
        let g = c5.disjoint_union(&c5);
        assert_eq!((g.vertex_count(), g.edge_count()), (10, 10));
        assert!(g.has_edge(5, 9));
        assert!(!g.has_edge(0, 5));
    }

    #[test]
    fn join_edge_count_includes_cross_pairs() {
        let g = Graph::cycle(5).join(&Graph::complete(2));
        assert_eq!(g.vertex_count(), 7);
        assert_eq!(g.edge_count(), 5 + 1 + 10);
        assert!(g.has_edge(5, 6));
        assert!(g.has_edge(0, 6));
    }

    #[test]
    fn second_operand_is_shifted_by_first_vertex_count() {
        let a = Graph::empty(3).with_label_prefix("x");
        let b = Graph::complete(2).with_label_prefix("y");
        let g = a.disjoint_union(&b);
        assert_eq!(g.edges(), &[(3, 4)]);
        assert_eq!(g.label(3), "b/y0");
        assert_eq!(g.label(0), "a/x0");
    }

    #[test]
    fn rejects_malformed_edges() {
        assert!(matches!(
            Graph::from_edges(2, [(0, 0)]),
            Err(GraphError::SelfLoop(0))
        ));
        assert!(matches!(
            Graph::from_edges(2, [(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        ));
        assert!(matches!(
            Graph::from_edges(2, [(0, 2)]),
            Err(GraphError::EndpointOutOfRange { .. })
        ));
        assert!(Graph::empty(2).with_labels(vec!["a".into()]).is_err());
    }

    #[test]
    fn petersen_is_cubic() {
        let p = Graph::petersen();
        assert_eq!(p.edge_count(), 15);
        assert!(p.degrees().iter().all(|&d| d == 3));
    }
}
