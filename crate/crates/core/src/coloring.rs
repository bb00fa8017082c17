use serde::{Deserialize, Serialize};

use crate::error::GraphError;
use crate::graph::Graph;

/// Vertex to color assignment. Colors are 0-based and every color index is
/// below `colors_used`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Coloring {
    assignment: Vec<usize>,
    colors_used: usize,
}

impl Coloring {
    pub fn new(assignment: Vec<usize>, colors_used: usize) -> Result<Self, GraphError> {
        if let Some((vertex, &color)) = assignment
            .iter()
            .enumerate()
            .find(|(_, &c)| c >= colors_used)
        {
            return Err(GraphError::ColorOutOfRange {
                vertex,
                color,
                colors_used,
            });
        }
        Ok(Coloring {
            assignment,
            colors_used,
        })
    }

    /// `colors_used` is one more than the largest color, 0 when empty.
    pub fn from_assignment(assignment: Vec<usize>) -> Self {
        let colors_used = assignment.iter().max().map_or(0, |m| m + 1);
        Coloring {
            assignment,
            colors_used,
        }
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn colors_used(&self) -> usize {
        self.colors_used
    }

    pub fn color(&self, v: usize) -> usize {
        self.assignment[v]
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    /// Every edge of `g` joins differently colored endpoints.
    pub fn is_proper(&self, g: &Graph) -> bool {
        self.assignment.len() == g.vertex_count()
            && g.edges()
                .iter()
                .all(|&(u, v)| self.assignment[u] != self.assignment[v])
    }
}

/// True iff `c` is proper on `g` and uses at most `k` colors.
pub fn validate_coloring(g: &Graph, c: &Coloring, k: usize) -> Result<bool, GraphError> {
    if c.len() != g.vertex_count() {
        return Err(GraphError::ColoringLength {
            assignment: c.len(),
            vertex_count: g.vertex_count(),
        });
    }
    Ok(c.colors_used() <= k && c.is_proper(g))
}
