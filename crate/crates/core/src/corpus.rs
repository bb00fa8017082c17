//! Seeded generators for the verification campaigns.
//!
//! Every generator is a pure function of its seed (ChaCha8), so a campaign
//! replayed with the same seed sees the same inputs.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cnf::{CnfFormula, Literal};
use crate::composite::{CompositeGraph, NodeKind};
use crate::graph::Graph;

pub const DEFAULT_SEED: u64 = 0x5eed_c010;

pub const MAX_RANDOM_VARIABLES: usize = 10;
pub const MAX_RANDOM_CLAUSES: usize = 8;

/// Random formula with 1..=10 variables and 1..=8 clauses of width 1..=3.
///
/// Short clauses are common enough (and the variable pool small enough)
/// that a sizeable share of the corpus is unsatisfiable.
pub fn random_formula(rng: &mut impl Rng) -> CnfFormula {
    let n = rng.gen_range(1..=MAX_RANDOM_VARIABLES);
    let m = rng.gen_range(1..=MAX_RANDOM_CLAUSES);
    // Clauses draw from a pool that is often narrower than n, which
    // concentrates constraints and produces contradictions.
    let pool = rng.gen_range(1..=n);
    let clauses = (0..m)
        .map(|_| {
            let width = match rng.gen_range(0..10) {
                0..=2 => 1,
                3..=5 => 2,
                _ => 3,
            };
            (0..width)
                .map(|_| Literal {
                    var: rng.gen_range(0..pool),
                    positive: rng.gen_bool(0.5),
                })
                .collect()
        })
        .collect();
    CnfFormula::new(n, clauses).expect("generated literals are in range")
}

pub fn random_formulas(seed: u64, count: usize) -> Vec<CnfFormula> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_formula(&mut rng)).collect()
}

/// G(n, p) sample.
pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::from_edges(n, edges).expect("sampled pairs are simple")
}

/// `count` random graphs with 6 or 7 vertices and edge density drawn from
/// [0.2, 0.8].
pub fn random_small_graphs(seed: u64, count: usize) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(6..=7);
            let p = rng.gen_range(0.2..0.8);
            random_graph(&mut rng, n, p)
        })
        .collect()
}

/// Random graphs with `lo..=hi` vertices, density in [0.2, 0.8].
pub fn random_graphs_between(rng: &mut impl Rng, lo: usize, hi: usize) -> Graph {
    let n = rng.gen_range(lo..=hi);
    let p = rng.gen_range(0.2..0.8);
    random_graph(rng, n, p)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Every graph on `n` vertices up to isomorphism, each given by its
/// lexicographically smallest edge bitmask over all vertex permutations.
/// Intended for `n <= 6`.
pub fn nonisomorphic_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let index = |u: usize, v: usize| {
        let (a, b) = (u.min(v), u.max(v));
        pairs.iter().position(|&p| p == (a, b)).unwrap()
    };
    let perms = permutations(n);
    // relabelled bit position of each pair under each permutation
    let maps: Vec<Vec<usize>> = perms
        .iter()
        .map(|p| pairs.iter().map(|&(u, v)| index(p[u], p[v])).collect())
        .collect();

    let mut seen = BTreeSet::new();
    for mask in 0u64..1 << pairs.len() {
        let canonical = maps
            .iter()
            .map(|m| {
                m.iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .fold(0u64, |acc, (_, &j)| acc | 1 << j)
            })
            .min()
            .unwrap_or(0);
        seen.insert(canonical);
    }
    seen.into_iter()
        .map(|mask| {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e);
            Graph::from_edges(n, edges).unwrap()
        })
        .collect()
}

/// Non-isomorphic graphs on 0 to 5 vertices (1 + 1 + 2 + 4 + 11 + 34).
pub fn all_small_graphs() -> Vec<Graph> {
    (0..=5).flat_map(nonisomorphic_graphs).collect()
}

/// The graph corpus used by the decomposition campaign: every graph on at
/// most five vertices up to isomorphism, then `random` seeded 6-7 vertex
/// graphs.
pub fn decomposition_corpus(seed: u64, random: usize) -> Vec<Graph> {
    let mut v = all_small_graphs();
    v.extend(random_small_graphs(seed, random));
    v
}

/// Random join/union expression over graphs of 1 to 6 vertices whose
/// flattened size stays within `max_vertices`.
pub fn random_composite(rng: &mut impl Rng, max_vertices: usize) -> CompositeGraph {
    fn build(rng: &mut impl Rng, depth: usize, budget: usize) -> CompositeGraph {
        if depth >= 3 || budget < 2 || rng.gen_bool(0.35) {
            return CompositeGraph::leaf(random_graphs_between(rng, 1, budget.clamp(1, 6)));
        }
        let kind = *[NodeKind::Join, NodeKind::Union].choose(rng).unwrap();
        let arity = rng.gen_range(2..=3).min(budget);
        let mut remaining = budget;
        let children = (0..arity)
            .map(|i| {
                // leave at least one vertex for each later sibling
                let child = build(rng, depth + 1, remaining - (arity - i - 1));
                remaining -= child.vertex_count();
                child
            })
            .collect();
        CompositeGraph::node(kind, children).expect("arity is at least two")
    }
    build(rng, 0, max_vertices)
}

pub fn random_composites(seed: u64, count: usize, max_vertices: usize) -> Vec<CompositeGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| random_composite(&mut rng, max_vertices))
        .collect()
}

/// Pairs of random graphs with 1 to `max_vertices` vertices each.
pub fn random_graph_pairs(seed: u64, count: usize, max_vertices: usize) -> Vec<(Graph, Graph)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let a = random_graphs_between(&mut rng, 1, max_vertices);
            let b = random_graphs_between(&mut rng, 1, max_vertices);
            (a, b)
        })
        .collect()
}
