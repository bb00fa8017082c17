//! Independent reference procedures for tests: plain enumeration with no
//! pruning, ordering heuristics or shared code with the solver and the SAT
//! routine they check.

use crate::cnf::CnfFormula;
use crate::graph::Graph;

/// Tries every map from vertices to `0..k` in odometer order.
pub fn naive_k_colorable(g: &Graph, k: usize) -> bool {
    let n = g.vertex_count();
    if n == 0 {
        return true;
    }
    if k == 0 {
        return false;
    }
    let mut labels = vec![0usize; n];
    loop {
        if g.edges().iter().all(|&(u, v)| labels[u] != labels[v]) {
            return true;
        }
        let mut i = 0;
        loop {
            if i == n {
                return false;
            }
            labels[i] += 1;
            if labels[i] < k {
                break;
            }
            labels[i] = 0;
            i += 1;
        }
    }
}

/// Smallest k for which some k-labeling is proper.
pub fn naive_chromatic_number(g: &Graph) -> usize {
    (0..=g.vertex_count())
        .find(|&k| naive_k_colorable(g, k))
        .expect("n colors always suffice")
}

/// Satisfiability by a reflected Gray-code sweep: consecutive assignments
/// differ in one variable.
pub fn gray_code_satisfiable(f: &CnfFormula) -> bool {
    let n = f.variable_count();
    let mut assignment = vec![false; n];
    if f.eval(&assignment) {
        return true;
    }
    for step in 1u64..1 << n {
        let flip = step.trailing_zeros() as usize;
        assignment[flip] = !assignment[flip];
        if f.eval(&assignment) {
            return true;
        }
    }
    false
}
