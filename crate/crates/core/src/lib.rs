//! Gap reductions from 3-CNF to graph coloring, the join/union algebra on
//! graphs, and an exact chromatic-number solver, together with campaigns
//! that check the resulting parity biconditional at desk scale.

pub mod cnf;
pub mod coloring;
pub mod composite;
pub mod corpus;
pub mod error;
pub mod graph;
pub mod graph_io;
#[cfg(any(test, feature = "oracle"))]
pub mod oracle;
pub mod reductions;
pub mod solver;
pub mod verify;

pub use cnf::{
    brute_force_sat, canonical_chain, is_monotone_chain, parse_dimacs_cnf, write_dimacs_cnf,
    CnfFormula, Literal, MonotoneChain, SatConfig,
};
pub use coloring::{validate_coloring, Coloring};
pub use composite::{CompositeGraph, NodeKind};
pub use error::{CnfError, GraphError, ParseError, ReductionError, SolverError};
pub use graph::{disjoint_union, join, Graph};
pub use graph_io::{read_dimacs, write_dimacs, write_dot};
pub use reductions::{
    exact_mk_member, mk_set, rho, sigma, wagner_combine, GapReduction, MkSet, OracleRho, Sigma,
};
pub use solver::{
    chromatic_number, clique_lower_bound, dsatur_upper_bound, is_bipartite, is_k_colorable,
    maximum_clique, ChiResult, SolverConfig,
};
