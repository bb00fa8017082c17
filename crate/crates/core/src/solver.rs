//! Exact chromatic number.
//!
//! The search brackets χ between a maximum clique (lower bound) and a DSATUR
//! coloring (upper bound), then walks upward from the lower bound asking
//! whether the graph is k-colorable. Each question is answered by complete
//! backtracking in DSATUR order with the clique pre-colored. A question that
//! exhausts the decision budget is reported as undecided, never guessed.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::coloring::Coloring;
use crate::error::SolverError;
use crate::graph::Graph;

pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolverConfig {
    /// Maximum number of color assignments tried per colorability question.
    pub node_budget: u64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            node_budget: DEFAULT_NODE_BUDGET,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChiResult {
    pub chi: usize,
    /// Proper coloring with exactly `chi` colors.
    pub witness: Coloring,
    /// Pairwise adjacent vertices, sorted.
    pub lower_bound_clique: Vec<usize>,
    /// `(lower, upper)` after the initial bracketing and after every refuted
    /// colorability question.
    pub bounds_history: Vec<(usize, usize)>,
    /// Color assignments made by the exact search across all questions.
    pub nodes: u64,
}

/// Fixed-width adjacency rows for fast neighbourhood intersection.
#[derive(Clone)]
struct BitGraph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
    degree: Vec<usize>,
}

impl BitGraph {
    fn new(g: &Graph) -> Self {
        let n = g.vertex_count();
        let words = n.div_ceil(64).max(1);
        let mut rows = vec![0u64; n * words];
        for &(u, v) in g.edges() {
            rows[u * words + v / 64] |= 1 << (v % 64);
            rows[v * words + u / 64] |= 1 << (u % 64);
        }
        BitGraph {
            n,
            words,
            rows,
            degree: g.degrees(),
        }
    }

    fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    fn adjacent(&self, u: usize, v: usize) -> bool {
        self.row(u)[v / 64] >> (v % 64) & 1 == 1
    }

    fn neighbours(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        iter_bits(self.row(v))
    }
}

fn iter_bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(i, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                return None;
            }
            let b = w.trailing_zeros() as usize;
            w &= w - 1;
            Some(i * 64 + b)
        })
    })
}

/// Breadth-first 2-coloring, one component at a time starting from the
/// lowest unvisited index. `None` iff the graph has an odd cycle.
pub fn is_bipartite(g: &Graph) -> Option<Coloring> {
    let adj = g.adjacency();
    let n = g.vertex_count();
    let mut color: Vec<Option<usize>> = vec![None; n];
    let mut queue = VecDeque::new();
    for s in 0..n {
        if color[s].is_some() {
            continue;
        }
        color[s] = Some(0);
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            let cu = color[u].unwrap();
            for &w in &adj[u] {
                match color[w] {
                    None => {
                        color[w] = Some(1 - cu);
                        queue.push_back(w);
                    }
                    Some(cw) if cw == cu => return None,
                    Some(_) => {}
                }
            }
        }
    }
    Some(Coloring::from_assignment(
        color.into_iter().map(Option::unwrap).collect(),
    ))
}

/// Vertices by decreasing degree, ties by lower index.
fn degree_order(bg: &BitGraph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..bg.n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(bg.degree[v]), v));
    order
}

fn greedy_clique(bg: &BitGraph) -> Vec<usize> {
    let mut best: Vec<usize> = Vec::new();
    for start in degree_order(bg) {
        let mut clique = vec![start];
        let mut cand = bg.row(start).to_vec();
        loop {
            let next = iter_bits(&cand).max_by_key(|&v| (bg.degree[v], std::cmp::Reverse(v)));
            let Some(v) = next else { break };
            clique.push(v);
            for (c, r) in cand.iter_mut().zip(bg.row(v)) {
                *c &= r;
            }
        }
        if clique.len() > best.len() {
            best = clique;
        }
    }
    best.sort_unstable();
    best
}

/// Greedy clique: from each start vertex (by decreasing degree), repeatedly
/// add the common neighbour of highest degree. The largest clique found is
/// returned, sorted.
pub fn clique_lower_bound(g: &Graph) -> Vec<usize> {
    greedy_clique(&BitGraph::new(g))
}

fn first_bit(words: &[u64]) -> Option<usize> {
    words
        .iter()
        .position(|&w| w != 0)
        .map(|i| i * 64 + words[i].trailing_zeros() as usize)
}

fn popcount(words: &[u64]) -> usize {
    words.iter().map(|w| w.count_ones() as usize).sum()
}

/// Branch and bound for a maximum clique, seeded with the greedy clique.
/// Candidates are greedily colored at each node; a branch is cut when the
/// current clique plus the number of color classes left cannot beat the
/// incumbent.
fn max_clique(bg: &BitGraph) -> Vec<usize> {
    fn expand(bg: &BitGraph, current: &mut Vec<usize>, mut cand: Vec<u64>, best: &mut Vec<usize>) {
        // Sequential greedy coloring of the candidates in index order.
        let mut order = Vec::with_capacity(popcount(&cand));
        let mut uncolored = cand.clone();
        let mut color = 0;
        while popcount(&uncolored) > 0 {
            color += 1;
            let mut q = uncolored.clone();
            while let Some(v) = first_bit(&q) {
                for (qw, r) in q.iter_mut().zip(bg.row(v)) {
                    *qw &= !r;
                }
                q[v / 64] &= !(1 << (v % 64));
                uncolored[v / 64] &= !(1 << (v % 64));
                order.push((v, color));
            }
        }
        while let Some((v, bound)) = order.pop() {
            if current.len() + bound <= best.len() {
                return;
            }
            current.push(v);
            let next: Vec<u64> = cand.iter().zip(bg.row(v)).map(|(a, b)| a & b).collect();
            if popcount(&next) == 0 {
                if current.len() > best.len() {
                    *best = current.clone();
                }
            } else {
                expand(bg, current, next, best);
            }
            current.pop();
            cand[v / 64] &= !(1 << (v % 64));
        }
    }

    let mut best = greedy_clique(bg);
    let mut all = vec![0u64; bg.words];
    for v in 0..bg.n {
        all[v / 64] |= 1 << (v % 64);
    }
    let mut found = Vec::new();
    expand(bg, &mut Vec::new(), all, &mut found);
    if found.len() > best.len() {
        best = found;
    }
    best.sort_unstable();
    best
}

/// A maximum clique, sorted. This is the lower bound the exact solver
/// brackets with and pre-colors; on join graphs the greedy clique can miss
/// the clique that spans both sides, which leaves the search thrashing.
pub fn maximum_clique(g: &Graph) -> Vec<usize> {
    max_clique(&BitGraph::new(g))
}

/// Incremental saturation bookkeeping shared by DSATUR and the exact search.
struct Saturation {
    k: usize,
    color: Vec<Option<usize>>,
    /// `counts[v * k + c]`: colored neighbours of `v` holding color `c`.
    counts: Vec<u32>,
    saturation: Vec<usize>,
}

impl Saturation {
    fn new(n: usize, k: usize) -> Self {
        Saturation {
            k,
            color: vec![None; n],
            counts: vec![0; n * k],
            saturation: vec![0; n],
        }
    }

    fn available(&self, v: usize, c: usize) -> bool {
        self.counts[v * self.k + c] == 0
    }

    fn assign(&mut self, bg: &BitGraph, v: usize, c: usize) {
        self.color[v] = Some(c);
        for w in bg.neighbours(v) {
            let slot = &mut self.counts[w * self.k + c];
            if *slot == 0 {
                self.saturation[w] += 1;
            }
            *slot += 1;
        }
    }

    fn unassign(&mut self, bg: &BitGraph, v: usize) {
        let c = self.color[v].take().expect("vertex was colored");
        for w in bg.neighbours(v) {
            let slot = &mut self.counts[w * self.k + c];
            *slot -= 1;
            if *slot == 0 {
                self.saturation[w] -= 1;
            }
        }
    }

    /// Uncolored vertex of maximum saturation, then maximum degree, then
    /// lowest index.
    fn pick(&self, bg: &BitGraph) -> Option<usize> {
        let mut best: Option<usize> = None;
        for v in 0..bg.n {
            if self.color[v].is_some() {
                continue;
            }
            best = match best {
                None => Some(v),
                Some(b) => {
                    let key = (self.saturation[v], bg.degree[v]);
                    let bkey = (self.saturation[b], bg.degree[b]);
                    if key > bkey {
                        Some(v)
                    } else {
                        Some(b)
                    }
                }
            };
        }
        best
    }
}

fn dsatur(bg: &BitGraph) -> Coloring {
    let n = bg.n;
    // n colors always suffice.
    let mut state = Saturation::new(n, n.max(1));
    while let Some(v) = state.pick(bg) {
        let c = (0..n)
            .find(|&c| state.available(v, c))
            .expect("n colors suffice");
        state.assign(bg, v, c);
    }
    Coloring::from_assignment(state.color.into_iter().map(Option::unwrap).collect())
}

/// DSATUR greedy coloring: returns the number of colors used and the
/// coloring.
pub fn dsatur_upper_bound(g: &Graph) -> (usize, Coloring) {
    let c = dsatur(&BitGraph::new(g));
    (c.colors_used(), c)
}

struct Search<'a> {
    bg: &'a BitGraph,
    state: Saturation,
    colored: usize,
    nodes: u64,
    budget: u64,
}

enum Outcome {
    Found,
    Refuted,
    OutOfBudget,
}

impl Search<'_> {
    fn run(&mut self, max_used: usize) -> Outcome {
        if self.colored == self.bg.n {
            return Outcome::Found;
        }
        let v = self
            .state
            .pick(self.bg)
            .expect("an uncolored vertex remains");
        // A new color is opened at most once per level: every color above
        // max_used + 1 is interchangeable with max_used + 1.
        let limit = (max_used + 2).min(self.state.k);
        for c in 0..limit {
            if !self.state.available(v, c) {
                continue;
            }
            if self.nodes >= self.budget {
                return Outcome::OutOfBudget;
            }
            self.nodes += 1;
            self.state.assign(self.bg, v, c);
            self.colored += 1;
            let r = self.run(max_used.max(c));
            match r {
                Outcome::Found | Outcome::OutOfBudget => return r,
                Outcome::Refuted => {
                    self.state.unassign(self.bg, v);
                    self.colored -= 1;
                }
            }
        }
        Outcome::Refuted
    }
}

/// Decides k-colorability for a graph already bracketed by `clique`.
/// Returns the coloring and the number of assignments made.
fn k_colorable_with(
    bg: &BitGraph,
    clique: &[usize],
    k: usize,
    budget: u64,
) -> Result<(Option<Coloring>, u64), u64> {
    if bg.n == 0 {
        return Ok((Some(Coloring::from_assignment(Vec::new())), 0));
    }
    if clique.len() > k {
        return Ok((None, 0));
    }
    let mut search = Search {
        bg,
        state: Saturation::new(bg.n, k),
        colored: 0,
        nodes: 0,
        budget,
    };
    for (c, &v) in clique.iter().enumerate() {
        search.state.assign(bg, v, c);
        search.colored += 1;
    }
    let start_max = clique.len().saturating_sub(1);
    let outcome = if clique.is_empty() {
        search.run_empty()
    } else {
        search.run(start_max)
    };
    match outcome {
        Outcome::Found => {
            let assignment = search.state.color.into_iter().map(Option::unwrap).collect();
            Ok((Some(Coloring::from_assignment(assignment)), search.nodes))
        }
        Outcome::Refuted => Ok((None, search.nodes)),
        Outcome::OutOfBudget => Err(search.nodes),
    }
}

impl Search<'_> {
    /// Entry point without a pre-colored clique: the first vertex may only
    /// take color 0.
    fn run_empty(&mut self) -> Outcome {
        let v = self.state.pick(self.bg).expect("graph is non-empty");
        if self.state.k == 0 {
            return Outcome::Refuted;
        }
        self.nodes += 1;
        self.state.assign(self.bg, v, 0);
        self.colored += 1;
        self.run(0)
    }
}

/// Complete backtracking search for a proper coloring with at most `k`
/// colors. `Ok(None)` is a definitive refutation. With `k = 0` only the
/// empty graph is colorable.
pub fn is_k_colorable(
    g: &Graph,
    k: usize,
    config: &SolverConfig,
) -> Result<Option<Coloring>, SolverError> {
    let bg = BitGraph::new(g);
    let clique = max_clique(&bg);
    k_colorable_with(&bg, &clique, k, config.node_budget)
        .map(|(c, _)| c)
        .map_err(|_| SolverError::Undecided {
            budget: config.node_budget,
            k,
            lower: clique.len(),
            upper: g.vertex_count(),
        })
}

pub fn chromatic_number(g: &Graph, config: &SolverConfig) -> Result<ChiResult, SolverError> {
    let n = g.vertex_count();
    if n == 0 {
        return Ok(ChiResult {
            chi: 0,
            witness: Coloring::from_assignment(Vec::new()),
            lower_bound_clique: Vec::new(),
            bounds_history: vec![(0, 0)],
            nodes: 0,
        });
    }
    let bg = BitGraph::new(g);
    let clique = max_clique(&bg);
    if g.edge_count() == 0 {
        return Ok(ChiResult {
            chi: 1,
            witness: Coloring::from_assignment(vec![0; n]),
            lower_bound_clique: clique,
            bounds_history: vec![(1, 1)],
            nodes: 0,
        });
    }
    if let Some(two) = is_bipartite(g) {
        return Ok(ChiResult {
            chi: 2,
            witness: two,
            lower_bound_clique: clique,
            bounds_history: vec![(2, 2)],
            nodes: 0,
        });
    }

    let upper_coloring = dsatur(&bg);
    let upper = upper_coloring.colors_used();
    // Not bipartite, so at least three colors are needed.
    let mut lower = clique.len().max(3);
    let mut history = vec![(lower, upper)];
    let mut nodes = 0;
    while lower < upper {
        match k_colorable_with(&bg, &clique, lower, config.node_budget) {
            Ok((Some(witness), used)) => {
                nodes += used;
                return Ok(ChiResult {
                    chi: lower,
                    witness,
                    lower_bound_clique: clique,
                    bounds_history: history,
                    nodes,
                });
            }
            Ok((None, used)) => {
                nodes += used;
                lower += 1;
                history.push((lower, upper));
            }
            Err(_) => {
                return Err(SolverError::Undecided {
                    budget: config.node_budget,
                    k: lower,
                    lower,
                    upper,
                })
            }
        }
    }
    Ok(ChiResult {
        chi: upper,
        witness: upper_coloring,
        lower_bound_clique: clique,
        bounds_history: history,
        nodes,
    })
}

/// Convenience wrapper returning only χ.
pub fn chi(g: &Graph, config: &SolverConfig) -> Result<usize, SolverError> {
    chromatic_number(g, config).map(|r| r.chi)
}

/// True iff every pair of listed vertices is adjacent.
pub fn is_clique(g: &Graph, vertices: &[usize]) -> bool {
    let bg = BitGraph::new(g);
    vertices
        .iter()
        .enumerate()
        .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| bg.adjacent(u, v)))
}
