//! Gap reductions from 3-CNF to graph coloring and the combiner that turns
//! a monotone chain of `2k` formulas into one graph whose chromatic number
//! lands in [`MkSet`] exactly when an odd number of the formulas are
//! satisfiable.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cnf::{self, CnfFormula, Literal, MonotoneChain, SatConfig};
use crate::composite::CompositeGraph;
use crate::error::{CnfError, ReductionError, SolverError};
use crate::graph::Graph;
use crate::solver::{self, SolverConfig};

/// `{3k+1, 3k+3, ..., 5k-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MkSet {
    k: usize,
    members: Vec<usize>,
}

impl MkSet {
    pub fn new(k: usize) -> Result<Self, CnfError> {
        if k == 0 {
            return Err(CnfError::ZeroK);
        }
        let members = (0..k).map(|i| 3 * k + 1 + 2 * i).collect();
        Ok(MkSet { k, members })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn contains(&self, chi: usize) -> bool {
        self.members.binary_search(&chi).is_ok()
    }
}

/// Space-separated members, e.g. `7 9`.
impl fmt::Display for MkSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.members.iter().map(usize::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

pub fn mk_set(k: usize) -> Result<MkSet, CnfError> {
    MkSet::new(k)
}

/// A map from formulas to graphs whose chromatic number is `sat_chi` on
/// satisfiable inputs and `unsat_chi` otherwise.
pub trait GapReduction: Send + Sync {
    fn name(&self) -> &str;
    fn sat_chi(&self) -> usize;
    fn unsat_chi(&self) -> usize;
    /// `tag` prefixes every vertex label, normally the formula's id in a chain.
    fn reduce_tagged(&self, phi: &CnfFormula, tag: &str) -> Result<Graph, ReductionError>;

    fn reduce(&self, phi: &CnfFormula) -> Result<Graph, ReductionError> {
        self.reduce_tagged(phi, "phi")
    }

    fn expected_chi(&self, satisfiable: bool) -> usize {
        if satisfiable {
            self.sat_chi()
        } else {
            self.unsat_chi()
        }
    }
}

/// Palette slots of the σ construction.
pub const SIGMA_TRUE: usize = 0;
pub const SIGMA_FALSE: usize = 1;
pub const SIGMA_BASE: usize = 2;

/// Literal vertex of `l` in σ's numbering.
pub fn sigma_literal_vertex(l: Literal) -> usize {
    3 + 2 * l.var + usize::from(!l.positive)
}

/// Clauses padded to width three by repeating the first literal.
pub fn padded_clause(clause: &[Literal]) -> [Literal; 3] {
    match *clause {
        [a] => [a, a, a],
        [a, b] => [a, b, a],
        [a, b, c] => [a, b, c],
        _ => panic!("clause width {} outside 1..=3", clause.len()),
    }
}

/// Standard 3-colorability reduction.
///
/// Layout: palette triangle T(0), F(1), B(2); then for each variable `x`
/// the pair `x`, `!x` forming a triangle with B; then six vertices per
/// clause: two chained OR gadgets. `OR(a, b)` adds `u, w, o` with edges
/// `a-u, b-w, u-w, u-o, w-o`; in a 3-coloring `o` can take T's color only
/// if `a` or `b` does. The second gadget's output is adjacent to F and B,
/// forcing it to T.
///
/// The graph is 3-colorable iff `phi` is satisfiable and is always
/// 4-colorable.
pub fn sigma_tagged(phi: &CnfFormula, tag: &str) -> Graph {
    let n = phi.variable_count();
    let m = phi.clauses().len();
    let total = 3 + 2 * n + 6 * m;
    let mut edges = Vec::with_capacity(3 + 3 * n + 12 * m);
    let mut labels = Vec::with_capacity(total);

    edges.extend([
        (SIGMA_TRUE, SIGMA_FALSE),
        (SIGMA_TRUE, SIGMA_BASE),
        (SIGMA_FALSE, SIGMA_BASE),
    ]);
    labels.extend(["T", "F", "B"].map(|p| format!("{tag}:sigma:{p}")));

    for v in 0..n {
        let x = sigma_literal_vertex(Literal::pos(v));
        let nx = sigma_literal_vertex(Literal::neg(v));
        edges.extend([(x, nx), (x, SIGMA_BASE), (nx, SIGMA_BASE)]);
        labels.push(format!("{tag}:sigma:x{}", v + 1));
        labels.push(format!("{tag}:sigma:!x{}", v + 1));
    }

    for (ci, clause) in phi.clauses().iter().enumerate() {
        let [l1, l2, l3] = padded_clause(clause);
        let base = 3 + 2 * n + 6 * ci;
        let mut or_gadget = |a: usize, b: usize, first: usize, name: &str| -> usize {
            let (u, w, o) = (first, first + 1, first + 2);
            edges.extend([(a, u), (b, w), (u, w), (u, o), (w, o)]);
            for part in ["u", "w", "o"] {
                labels.push(format!("{tag}:sigma:c{}.{name}.{part}", ci + 1));
            }
            o
        };
        let o1 = or_gadget(
            sigma_literal_vertex(l1),
            sigma_literal_vertex(l2),
            base,
            "or1",
        );
        let o2 = or_gadget(o1, sigma_literal_vertex(l3), base + 3, "or2");
        edges.extend([(o2, SIGMA_FALSE), (o2, SIGMA_BASE)]);
    }

    Graph::from_edges(total, edges)
        .and_then(|g| g.with_labels(labels))
        .expect("gadget edges are simple and in range")
}

pub fn sigma(phi: &CnfFormula) -> Graph {
    sigma_tagged(phi, "phi")
}

/// σ as a gap reduction with the `(3, 4)` gap.
#[derive(Debug, Clone, Copy, Default)]
pub struct Sigma;

impl GapReduction for Sigma {
    fn name(&self) -> &str {
        "sigma"
    }

    fn sat_chi(&self) -> usize {
        3
    }

    fn unsat_chi(&self) -> usize {
        4
    }

    fn reduce_tagged(&self, phi: &CnfFormula, tag: &str) -> Result<Graph, ReductionError> {
        Ok(sigma_tagged(phi, tag))
    }
}

/// Reference implementation of the `(3, 5)` gap contract. It decides the
/// formula by brute force and emits a fixed witness graph: K3 when
/// satisfiable, otherwise the join of C5 and K2, whose largest clique has
/// four vertices but whose chromatic number is five.
#[derive(Debug, Clone, Copy, Default)]
pub struct OracleRho {
    pub sat: SatConfig,
}

impl GapReduction for OracleRho {
    fn name(&self) -> &str {
        "rho-oracle"
    }

    fn sat_chi(&self) -> usize {
        3
    }

    fn unsat_chi(&self) -> usize {
        5
    }

    fn reduce_tagged(&self, phi: &CnfFormula, tag: &str) -> Result<Graph, ReductionError> {
        Ok(if cnf::is_satisfiable(phi, &self.sat)? {
            Graph::complete(3).with_label_prefix(&format!("{tag}:rho:sat.k3."))
        } else {
            let c5 = Graph::cycle(5).with_label_prefix("c5.");
            let k2 = Graph::complete(2).with_label_prefix("k2.");
            c5.join(&k2).relabel(|_, l| {
                // drop the join's a/ b/ side tag; the part name already says which side
                let bare = l.split_once('/').map_or(l, |(_, rest)| rest);
                format!("{tag}:rho:unsat.{bare}")
            })
        })
    }
}

pub fn rho(phi: &CnfFormula, sat: &SatConfig) -> Result<Graph, ReductionError> {
    OracleRho { sat: *sat }.reduce(phi)
}

/// Combines a chain with arbitrary reductions on odd (1st, 3rd, ...) and
/// even positions: the join over `i` of the disjoint union of
/// `odd(phi_{2i-1})` and `even(phi_{2i})`. For `k = 1` the single union is
/// returned as is, since a join needs two operands.
pub fn combine_with(
    chain: &MonotoneChain,
    odd: &dyn GapReduction,
    even: &dyn GapReduction,
) -> Result<CompositeGraph, ReductionError> {
    let mut parts = Vec::with_capacity(chain.k());
    for (i, pair) in chain.formulas().chunks(2).enumerate() {
        let a = odd.reduce_tagged(&pair[0], &format!("phi{}", 2 * i + 1))?;
        let b = even.reduce_tagged(&pair[1], &format!("phi{}", 2 * i + 2))?;
        parts.push(CompositeGraph::union(vec![
            CompositeGraph::leaf(a),
            CompositeGraph::leaf(b),
        ])?);
    }
    Ok(if parts.len() == 1 {
        parts.pop().unwrap()
    } else {
        CompositeGraph::join(parts)?
    })
}

/// ρ on odd positions, σ on even positions.
pub fn wagner_combine(
    chain: &MonotoneChain,
    sat: &SatConfig,
) -> Result<CompositeGraph, ReductionError> {
    combine_with(chain, &OracleRho { sat: *sat }, &Sigma)
}

/// χ of the combined graph predicted from the chain's satisfiability
/// pattern: each pair contributes `max(odd χ, even χ)`.
pub fn predicted_chi(
    satisfiable: &[bool],
    odd: &dyn GapReduction,
    even: &dyn GapReduction,
) -> usize {
    satisfiable
        .chunks(2)
        .map(|p| odd.expected_chi(p[0]).max(even.expected_chi(p[1])))
        .sum()
}

pub fn exact_mk_member(g: &Graph, m: &MkSet, config: &SolverConfig) -> Result<bool, SolverError> {
    Ok(m.contains(solver::chi(g, config)?))
}
