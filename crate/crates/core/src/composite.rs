//! Expression trees over leaf graphs with join and disjoint-union nodes.
//!
//! The chromatic number composes exactly over these nodes: a join adds the
//! children's values and a disjoint union takes their maximum. That lets a
//! caller evaluate χ of a large combined graph from the χ of its leaves
//! without ever materializing it.

use std::fmt;
use std::ops::Range;

use serde::{Deserialize, Serialize};

use crate::error::GraphError;
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum NodeKind {
    Join,
    Union,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Leaf {
    pub graph: Graph,
    pub declared_chi: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum CompositeGraph {
    Leaf(Leaf),
    Node {
        kind: NodeKind,
        children: Vec<CompositeGraph>,
    },
}

impl CompositeGraph {
    pub fn leaf(graph: Graph) -> Self {
        CompositeGraph::Leaf(Leaf {
            graph,
            declared_chi: None,
        })
    }

    pub fn leaf_with_chi(graph: Graph, chi: usize) -> Self {
        CompositeGraph::Leaf(Leaf {
            graph,
            declared_chi: Some(chi),
        })
    }

    pub fn node(kind: NodeKind, children: Vec<CompositeGraph>) -> Result<Self, GraphError> {
        if children.len() < 2 {
            return Err(GraphError::TooFewChildren(children.len()));
        }
        Ok(CompositeGraph::Node { kind, children })
    }

    pub fn join(children: Vec<CompositeGraph>) -> Result<Self, GraphError> {
        Self::node(NodeKind::Join, children)
    }

    pub fn union(children: Vec<CompositeGraph>) -> Result<Self, GraphError> {
        Self::node(NodeKind::Union, children)
    }

    /// Leaves in depth-first, left-to-right order.
    pub fn leaves(&self) -> Vec<&Leaf> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves<'a>(&'a self, out: &mut Vec<&'a Leaf>) {
        match self {
            CompositeGraph::Leaf(l) => out.push(l),
            CompositeGraph::Node { children, .. } => {
                children.iter().for_each(|c| c.collect_leaves(out))
            }
        }
    }

    pub fn vertex_count(&self) -> usize {
        match self {
            CompositeGraph::Leaf(l) => l.graph.vertex_count(),
            CompositeGraph::Node { children, .. } => children.iter().map(Self::vertex_count).sum(),
        }
    }

    /// Edge count of the flattened graph, computed without flattening.
    pub fn edge_count(&self) -> usize {
        match self {
            CompositeGraph::Leaf(l) => l.graph.edge_count(),
            CompositeGraph::Node { kind, children } => {
                let inner: usize = children.iter().map(Self::edge_count).sum();
                match kind {
                    NodeKind::Union => inner,
                    NodeKind::Join => {
                        let sizes: Vec<usize> = children.iter().map(Self::vertex_count).collect();
                        let mut cross = 0;
                        for i in 0..sizes.len() {
                            for j in i + 1..sizes.len() {
                                cross += sizes[i] * sizes[j];
                            }
                        }
                        inner + cross
                    }
                }
            }
        }
    }

    /// Materializes the expression. Leaves are numbered consecutively in
    /// depth-first order and keep their own labels.
    pub fn flatten(&self) -> Graph {
        let mut edges = Vec::with_capacity(self.edge_count());
        let mut labels = Vec::with_capacity(self.vertex_count());
        self.flatten_into(&mut edges, &mut labels);
        let n = labels.len();
        Graph::from_edges(n, edges)
            .and_then(|g| g.with_labels(labels))
            .expect("flattening well-formed parts yields a simple graph")
    }

    fn flatten_into(
        &self,
        edges: &mut Vec<(usize, usize)>,
        labels: &mut Vec<String>,
    ) -> Range<usize> {
        let start = labels.len();
        match self {
            CompositeGraph::Leaf(l) => {
                edges.extend(l.graph.edges().iter().map(|&(u, v)| (u + start, v + start)));
                labels.extend(l.graph.labels().iter().cloned());
            }
            CompositeGraph::Node { kind, children } => {
                let ranges: Vec<Range<usize>> = children
                    .iter()
                    .map(|c| c.flatten_into(edges, labels))
                    .collect();
                if *kind == NodeKind::Join {
                    for (i, a) in ranges.iter().enumerate() {
                        for b in &ranges[i + 1..] {
                            for u in a.clone() {
                                edges.extend(b.clone().map(|v| (u, v)));
                            }
                        }
                    }
                }
            }
        }
        start..labels.len()
    }

    /// Evaluates χ bottom-up: `leaf_chi` supplies each leaf's value (it
    /// receives the depth-first leaf index), joins sum and unions take the
    /// maximum.
    pub fn fold_chi<E, F>(&self, leaf_chi: &mut F) -> Result<usize, E>
    where
        F: FnMut(usize, &Leaf) -> Result<usize, E>,
    {
        let mut next = 0;
        self.fold_chi_at(&mut next, leaf_chi)
    }

    fn fold_chi_at<E, F>(&self, next: &mut usize, leaf_chi: &mut F) -> Result<usize, E>
    where
        F: FnMut(usize, &Leaf) -> Result<usize, E>,
    {
        match self {
            CompositeGraph::Leaf(l) => {
                let idx = *next;
                *next += 1;
                leaf_chi(idx, l)
            }
            CompositeGraph::Node { kind, children } => {
                let mut acc = 0;
                for c in children {
                    let x = c.fold_chi_at(next, leaf_chi)?;
                    acc = match kind {
                        NodeKind::Join => acc + x,
                        NodeKind::Union => acc.max(x),
                    };
                }
                Ok(acc)
            }
        }
    }

    /// χ from the leaves' supplied values, falling back to each leaf's
    /// declared value. `supplied[i]` belongs to the i-th leaf in
    /// depth-first order.
    pub fn composite_chi(&self, supplied: &[Option<usize>]) -> Result<usize, GraphError> {
        self.fold_chi(&mut |i, leaf: &Leaf| {
            supplied
                .get(i)
                .copied()
                .flatten()
                .or(leaf.declared_chi)
                .ok_or(GraphError::MissingLeafChi(i))
        })
    }
}

/// Indented one-node-per-line rendering used by the CLI.
impl fmt::Display for CompositeGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn go(c: &CompositeGraph, depth: usize, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            let pad = "  ".repeat(depth);
            match c {
                CompositeGraph::Leaf(l) => {
                    let name = l
                        .graph
                        .labels()
                        .first()
                        .and_then(|s| s.rsplit_once(':').map(|(head, _)| head.to_string()))
                        .unwrap_or_default();
                    write!(
                        f,
                        "{pad}leaf {} n={} m={}",
                        if name.is_empty() { "-" } else { &name },
                        l.graph.vertex_count(),
                        l.graph.edge_count()
                    )?;
                    if let Some(chi) = l.declared_chi {
                        write!(f, " chi={chi}")?;
                    }
                    writeln!(f)
                }
                CompositeGraph::Node { kind, children } => {
                    let tag = match kind {
                        NodeKind::Join => "join",
                        NodeKind::Union => "union",
                    };
                    writeln!(f, "{pad}{tag}")?;
                    children.iter().try_for_each(|ch| go(ch, depth + 1, f))
                }
            }
        }
        go(self, 0, f)
    }
}
