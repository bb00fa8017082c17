//! Property campaigns that replay the reduction chain end to end.
//!
//! Each campaign produces a [`CampaignReport`]. Serialized with
//! [`CampaignReport::to_json`], a report is a JSON object with the fields,
//! in this order:
//!
//! | field      | content                                                        |
//! |------------|----------------------------------------------------------------|
//! | `campaign` | campaign name                                                  |
//! | `seed`     | corpus seed, `null` for corpus-free campaigns                  |
//! | `config`   | `node_budget`, `variable_cap`                                  |
//! | `cases`    | records sorted by `key`: `key`, `inputs`, `expected`, `observed`, `status` (`pass`/`fail`/`inconclusive`), `provenance`, `detail` |
//! | `verdict`  | `pass` iff every case passed, else `fail`                      |
//! | `stats`    | `cases`, `passed`, `failed`, `inconclusive`, `solver_nodes`, `max_vertices` |
//! | `timings`  | `total_ms`; present only when timings are requested           |
//!
//! Without timings the document is a pure function of seed and
//! configuration.

use std::collections::BTreeSet;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cnf::{self, canonical_chain, CnfFormula, MonotoneChain, SatConfig};
use crate::composite::CompositeGraph;
use crate::corpus;
use crate::error::{CnfError, ReductionError, SolverError};
use crate::graph::Graph;
use crate::reductions::{combine_with, mk_set, predicted_chi, GapReduction, OracleRho, Sigma};
use crate::solver::{self, chromatic_number, is_bipartite, is_k_colorable, SolverConfig};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyConfig {
    pub solver: SolverConfig,
    pub sat: SatConfig,
    pub seed: u64,
    pub timings: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            solver: SolverConfig::default(),
            sat: SatConfig::default(),
            seed: corpus::DEFAULT_SEED,
            timings: false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CaseStatus {
    Pass,
    Fail,
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseRecord {
    pub key: String,
    pub inputs: String,
    pub expected: String,
    pub observed: String,
    pub status: CaseStatus,
    /// Gadget instances involved, e.g. `phi2:sigma:c3.or1`.
    pub provenance: Vec<String>,
    pub detail: Option<String>,
    #[serde(skip)]
    pub nodes: u64,
    #[serde(skip)]
    pub vertices: usize,
}

impl CaseRecord {
    fn new(key: impl Into<String>, inputs: impl Into<String>) -> Self {
        CaseRecord {
            key: key.into(),
            inputs: inputs.into(),
            expected: String::new(),
            observed: String::new(),
            status: CaseStatus::Pass,
            provenance: Vec::new(),
            detail: None,
            nodes: 0,
            vertices: 0,
        }
    }

    fn judged(mut self, expected: String, observed: String, ok: bool) -> Self {
        self.expected = expected;
        self.observed = observed;
        self.status = if ok {
            CaseStatus::Pass
        } else {
            CaseStatus::Fail
        };
        self
    }

    fn inconclusive(mut self, why: impl ToString) -> Self {
        self.status = CaseStatus::Inconclusive;
        self.detail = Some(why.to_string());
        self
    }

    pub fn passed(&self) -> bool {
        self.status == CaseStatus::Pass
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportConfig {
    pub node_budget: u64,
    pub variable_cap: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolverStats {
    pub cases: usize,
    pub passed: usize,
    pub failed: usize,
    pub inconclusive: usize,
    pub solver_nodes: u64,
    pub max_vertices: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Timings {
    pub total_ms: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CampaignReport {
    pub campaign: String,
    pub seed: Option<u64>,
    pub config: ReportConfig,
    pub cases: Vec<CaseRecord>,
    pub verdict: Verdict,
    pub stats: SolverStats,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub timings: Option<Timings>,
}

impl CampaignReport {
    /// Sorts cases by key and derives verdict and statistics.
    pub fn assemble(
        campaign: impl Into<String>,
        seed: Option<u64>,
        cfg: &VerifyConfig,
        mut cases: Vec<CaseRecord>,
        started: Option<Instant>,
    ) -> Self {
        cases.sort_by(|a, b| a.key.cmp(&b.key));
        let count = |s| cases.iter().filter(|c| c.status == s).count();
        let stats = SolverStats {
            cases: cases.len(),
            passed: count(CaseStatus::Pass),
            failed: count(CaseStatus::Fail),
            inconclusive: count(CaseStatus::Inconclusive),
            solver_nodes: cases.iter().map(|c| c.nodes).sum(),
            max_vertices: cases.iter().map(|c| c.vertices).max().unwrap_or(0),
        };
        let verdict = if stats.passed == stats.cases {
            Verdict::Pass
        } else {
            Verdict::Fail
        };
        CampaignReport {
            campaign: campaign.into(),
            seed,
            config: ReportConfig {
                node_budget: cfg.solver.node_budget,
                variable_cap: cfg.sat.variable_cap,
            },
            cases,
            verdict,
            stats,
            timings: started.filter(|_| cfg.timings).map(|t| Timings {
                total_ms: t.elapsed().as_millis() as u64,
            }),
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn has_inconclusive(&self) -> bool {
        self.stats.inconclusive > 0
    }

    pub fn failing_cases(&self) -> impl Iterator<Item = &CaseRecord> {
        self.cases.iter().filter(|c| !c.passed())
    }

    pub fn case(&self, key: &str) -> Option<&CaseRecord> {
        self.cases.iter().find(|c| c.key == key)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize") + "\n"
    }
}

/// Distinct gadget instances named by a graph's labels: the label with its
/// final `.part` component removed.
pub fn gadget_instances(g: &Graph) -> Vec<String> {
    g.labels()
        .iter()
        .filter(|l| !l.is_empty())
        .map(|l| match l.rsplit_once('.') {
            Some((head, _)) if head.contains(':') => head.to_string(),
            _ => l.clone(),
        })
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect()
}

fn check_against(
    key: &str,
    phi: &CnfFormula,
    gap: &dyn GapReduction,
    (sat_chi, unsat_chi): (usize, usize),
    cfg: &VerifyConfig,
) -> CaseRecord {
    let mut rec = CaseRecord::new(key, format!("{} on {phi}", gap.name()));
    let sat = match cnf::is_satisfiable(phi, &cfg.sat) {
        Ok(s) => s,
        Err(e) => return rec.inconclusive(e),
    };
    let g = match gap.reduce(phi) {
        Ok(g) => g,
        Err(e) => return rec.inconclusive(e),
    };
    rec.vertices = g.vertex_count();
    rec.provenance = gadget_instances(&g);
    match chromatic_number(&g, &cfg.solver) {
        Ok(r) => {
            rec.nodes = r.nodes;
            let expected = if sat { sat_chi } else { unsat_chi };
            let mut rec = rec.judged(
                format!("sat={sat} chi={expected}"),
                format!("sat={sat} chi={}", r.chi),
                r.chi == expected,
            );
            rec.detail = Some(format!(
                "clique={} bounds={:?}",
                r.lower_bound_clique.len(),
                r.bounds_history
            ));
            rec
        }
        Err(e) => rec.inconclusive(e),
    }
}

/// Runs `gap` on one formula and compares χ with the pair it declares.
pub fn check_gap_property(
    phi: &CnfFormula,
    gap: &dyn GapReduction,
    cfg: &VerifyConfig,
) -> CaseRecord {
    check_against(gap.name(), phi, gap, (gap.sat_chi(), gap.unsat_chi()), cfg)
}

/// σ gives χ = 3 on satisfiable formulas and 4 otherwise.
pub fn check_sigma_property(phi: &CnfFormula, cfg: &VerifyConfig) -> CaseRecord {
    check_against("sigma", phi, &Sigma, (3, 4), cfg)
}

/// `rho` gives χ = 3 on satisfiable formulas and 5 otherwise, whatever
/// pair the implementation itself declares.
pub fn check_rho_property(
    phi: &CnfFormula,
    rho: &dyn GapReduction,
    cfg: &VerifyConfig,
) -> CaseRecord {
    check_against("rho", phi, rho, (3, 5), cfg)
}

fn formula_campaign(
    name: &str,
    count: usize,
    cfg: &VerifyConfig,
    check: impl Fn(&CnfFormula) -> CaseRecord + Sync,
) -> CampaignReport {
    let started = Instant::now();
    let formulas = corpus::random_formulas(cfg.seed, count);
    let cases = formulas
        .par_iter()
        .enumerate()
        .map(|(i, phi)| {
            let mut rec = check(phi);
            rec.key = format!("phi-{i:04}");
            rec
        })
        .collect();
    CampaignReport::assemble(name, Some(cfg.seed), cfg, cases, Some(started))
}

/// σ over `count` seeded random formulas.
pub fn sigma_campaign(count: usize, cfg: &VerifyConfig) -> CampaignReport {
    formula_campaign("sigma", count, cfg, |phi| check_sigma_property(phi, cfg))
}

/// A ρ implementation over `count` seeded random formulas.
pub fn rho_campaign(count: usize, gap: &dyn GapReduction, cfg: &VerifyConfig) -> CampaignReport {
    formula_campaign("rho", count, cfg, |phi| check_rho_property(phi, gap, cfg))
}

/// How the combined graph's χ is obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ChiMode {
    /// Solver on each leaf, then join-sum / union-max.
    Compositional,
    /// Solver on the flattened graph.
    Monolithic,
}

impl ChiMode {
    pub fn name(self) -> &'static str {
        match self {
            ChiMode::Compositional => "compositional",
            ChiMode::Monolithic => "monolithic",
        }
    }
}

/// χ of a composite expression and the solver effort spent on it.
pub fn composite_chi_via(
    c: &CompositeGraph,
    mode: ChiMode,
    solver: &SolverConfig,
) -> Result<(usize, u64), SolverError> {
    let mut nodes = 0;
    let chi = match mode {
        ChiMode::Compositional => c.fold_chi(&mut |_, leaf| {
            let r = chromatic_number(&leaf.graph, solver)?;
            nodes += r.nodes;
            Ok::<_, SolverError>(r.chi)
        })?,
        ChiMode::Monolithic => {
            let r = chromatic_number(&c.flatten(), solver)?;
            nodes = r.nodes;
            r.chi
        }
    };
    Ok((chi, nodes))
}

/// The chain splits as `2i - 1` satisfiable members followed by
/// unsatisfiable ones, for some `i` in `1..=k`. Checked on the
/// satisfiability pattern itself, independently of any graph.
pub fn odd_prefix_split(satisfiable: &[bool]) -> Option<usize> {
    let k = satisfiable.len() / 2;
    (1..=k).find(|&i| {
        satisfiable
            .iter()
            .enumerate()
            .all(|(j, &s)| s == (j < 2 * i - 1))
    })
}

/// One parity case for a chain.
pub fn check_parity_case(
    chain: &MonotoneChain,
    mode: ChiMode,
    odd: &dyn GapReduction,
    even: &dyn GapReduction,
    cfg: &VerifyConfig,
) -> CaseRecord {
    let k = chain.k();
    let t = chain.satisfiable_count();
    let pattern: String = chain
        .satisfiable()
        .iter()
        .map(|&s| if s { 'S' } else { 'U' })
        .collect();
    let width = (2 * k).to_string().len();
    let rec = CaseRecord::new(
        format!("t={t:0width$}"),
        format!(
            "k={k} pattern={pattern} odd={} even={} mode={}",
            odd.name(),
            even.name(),
            mode.name()
        ),
    );
    let composite = match combine_with(chain, odd, even) {
        Ok(c) => c,
        Err(e) => return rec.inconclusive(e),
    };
    let mut rec = rec;
    rec.vertices = composite.vertex_count();
    rec.provenance = composite
        .leaves()
        .iter()
        .flat_map(|l| gadget_instances(&l.graph))
        .collect();
    let (chi, nodes) = match composite_chi_via(&composite, mode, &cfg.solver) {
        Ok(x) => x,
        Err(e) => return rec.inconclusive(e),
    };
    rec.nodes = nodes;

    let mk = mk_set(k).expect("chain has k >= 1");
    let member = mk.contains(chi);
    let odd_t = t % 2 == 1;
    let split = odd_prefix_split(chain.satisfiable());
    let table = predicted_chi(chain.satisfiable(), odd, even);
    let closed_form = split.map(|i| 5 * k - 2 * i + 1);

    let mut problems = Vec::new();
    if odd_t != member {
        problems.push(format!("t odd = {odd_t} but chi {chi} in M_{k} = {member}"));
    }
    if split.is_some() != odd_t {
        problems.push(format!("odd-prefix split {split:?} disagrees with t = {t}"));
    }
    if let Some(want) = closed_form {
        if chi != want {
            problems.push(format!("chi {chi} != 5k - 2i + 1 = {want}"));
        }
    }
    if chi != table {
        problems.push(format!("chi {chi} != pairwise prediction {table}"));
    }
    let mut rec = rec.judged(
        format!("chi={table} member={odd_t}"),
        format!("chi={chi} member={member}"),
        problems.is_empty(),
    );
    if !problems.is_empty() {
        rec.detail = Some(problems.join("; "));
    }
    rec
}

/// For every `t` in `0..=2k`, combines the canonical chain with ρ on odd
/// and σ on even positions and checks that χ lands in M_k exactly when `t`
/// is odd.
pub fn parity_campaign(
    k: usize,
    mode: ChiMode,
    cfg: &VerifyConfig,
) -> Result<CampaignReport, CnfError> {
    parity_campaign_with(k, mode, &OracleRho { sat: cfg.sat }, &Sigma, cfg)
}

/// [`parity_campaign`] with arbitrary reductions in the two positions.
pub fn parity_campaign_with(
    k: usize,
    mode: ChiMode,
    odd: &dyn GapReduction,
    even: &dyn GapReduction,
    cfg: &VerifyConfig,
) -> Result<CampaignReport, CnfError> {
    let started = Instant::now();
    let chains = (0..=2 * k)
        .map(|t| canonical_chain(k, t))
        .collect::<Result<Vec<_>, _>>()?;
    let cases = chains
        .par_iter()
        .map(|chain| check_parity_case(chain, mode, odd, even, cfg))
        .collect();
    let name = format!("parity-k{k}-{}", mode.name());
    Ok(CampaignReport::assemble(
        name,
        Some(cfg.seed),
        cfg,
        cases,
        Some(started),
    ))
}

fn colorable(g: &Graph, k: usize, solver: &SolverConfig) -> Result<bool, SolverError> {
    is_k_colorable(g, k, solver).map(|c| c.is_some())
}

/// χ(G) = i iff G is i-colorable and not (i-1)-colorable. For `i = 3` the
/// second half is also cross-checked against the bipartiteness test.
pub fn check_prop1_decomposition(g: &Graph, i: usize, cfg: &VerifyConfig) -> CaseRecord {
    let mut rec = CaseRecord::new(
        format!("i={i}"),
        format!("n={} m={} i={i}", g.vertex_count(), g.edge_count()),
    );
    rec.vertices = g.vertex_count();
    let run = || -> Result<(usize, bool, bool), SolverError> {
        let chi = chromatic_number(g, &cfg.solver)?.chi;
        Ok((
            chi,
            colorable(g, i, &cfg.solver)?,
            colorable(g, i - 1, &cfg.solver)?,
        ))
    };
    let (chi, upto_i, upto_prev) = match run() {
        Ok(x) => x,
        Err(e) => return rec.inconclusive(e),
    };
    let lhs = chi == i;
    let rhs = upto_i && !upto_prev;
    let mut ok = lhs == rhs;
    let mut observed = format!(
        "chi={chi} colorable({i})={upto_i} colorable({})={upto_prev}",
        i - 1
    );
    if i == 3 {
        let bip = is_bipartite(g).is_some();
        observed.push_str(&format!(" bipartite={bip}"));
        ok &= bip == upto_prev;
    }
    rec.judged(format!("(chi={i}) == {lhs}"), observed, ok)
}

/// Decomposition check for every graph of a corpus and every `i` in
/// `1..=max_i`, plus bipartiteness against χ ≤ 2 per graph.
pub fn prop1_campaign(
    graphs: &[Graph],
    max_i: usize,
    cfg: &VerifyConfig,
    seed: Option<u64>,
) -> CampaignReport {
    let started = Instant::now();
    let cases = graphs
        .par_iter()
        .enumerate()
        .flat_map_iter(|(gi, g)| {
            let mut out: Vec<CaseRecord> = (1..=max_i)
                .map(|i| {
                    let mut rec = check_prop1_decomposition(g, i, cfg);
                    rec.key = format!("g-{gi:04}-{}", rec.key);
                    rec
                })
                .collect();
            let mut bip = CaseRecord::new(
                format!("g-{gi:04}-bipartite"),
                format!("n={} m={}", g.vertex_count(), g.edge_count()),
            );
            bip.vertices = g.vertex_count();
            bip = match solver::chi(g, &cfg.solver) {
                Ok(chi) => {
                    let b = is_bipartite(g).is_some();
                    bip.judged(
                        format!("bipartite={}", chi <= 2),
                        format!("bipartite={b} chi={chi}"),
                        b == (chi <= 2),
                    )
                }
                Err(e) => bip.inconclusive(e),
            };
            out.push(bip);
            out
        })
        .collect();
    CampaignReport::assemble("prop1", seed, cfg, cases, Some(started))
}

/// χ(A ⊕ B) = χ(A) + χ(B).
pub fn check_join_additivity(a: &Graph, b: &Graph, cfg: &VerifyConfig) -> CaseRecord {
    check_binary_law("join", a, b, cfg)
}

/// χ(A ⊎ B) = max(χ(A), χ(B)).
pub fn check_union_max(a: &Graph, b: &Graph, cfg: &VerifyConfig) -> CaseRecord {
    check_binary_law("union", a, b, cfg)
}

fn check_binary_law(op: &str, a: &Graph, b: &Graph, cfg: &VerifyConfig) -> CaseRecord {
    let mut rec = CaseRecord::new(
        op,
        format!(
            "A(n={}, m={}) {op} B(n={}, m={})",
            a.vertex_count(),
            a.edge_count(),
            b.vertex_count(),
            b.edge_count()
        ),
    );
    let combined = if op == "join" {
        a.join(b)
    } else {
        a.disjoint_union(b)
    };
    rec.vertices = combined.vertex_count();
    let run = || -> Result<(usize, usize, usize, u64), SolverError> {
        let ra = chromatic_number(a, &cfg.solver)?;
        let rb = chromatic_number(b, &cfg.solver)?;
        let rc = chromatic_number(&combined, &cfg.solver)?;
        Ok((ra.chi, rb.chi, rc.chi, ra.nodes + rb.nodes + rc.nodes))
    };
    match run() {
        Ok((ca, cb, cc, nodes)) => {
            rec.nodes = nodes;
            let want = if op == "join" { ca + cb } else { ca.max(cb) };
            let formula = if op == "join" {
                format!("{ca}+{cb}")
            } else {
                format!("max({ca},{cb})")
            };
            rec.judged(
                format!("chi={formula}={want}"),
                format!("chi={cc}"),
                cc == want,
            )
        }
        Err(e) => rec.inconclusive(e),
    }
}

/// Join additivity and union maximality over seeded random graph pairs.
pub fn algebra_campaign(count: usize, max_vertices: usize, cfg: &VerifyConfig) -> CampaignReport {
    let started = Instant::now();
    let pairs = corpus::random_graph_pairs(cfg.seed, count, max_vertices);
    let cases = pairs
        .par_iter()
        .enumerate()
        .flat_map_iter(|(i, (a, b))| {
            [check_join_additivity(a, b, cfg), check_union_max(a, b, cfg)]
                .into_iter()
                .map(move |mut r| {
                    r.key = format!("pair-{i:04}-{}", r.key);
                    r
                })
        })
        .collect();
    CampaignReport::assemble("algebra", Some(cfg.seed), cfg, cases, Some(started))
}

/// Compositional χ against monolithic χ on seeded random expressions.
pub fn composite_campaign(count: usize, max_vertices: usize, cfg: &VerifyConfig) -> CampaignReport {
    let started = Instant::now();
    let exprs = corpus::random_composites(cfg.seed, count, max_vertices);
    let cases = exprs
        .par_iter()
        .enumerate()
        .map(|(i, c)| {
            let mut rec = CaseRecord::new(
                format!("expr-{i:04}"),
                format!(
                    "leaves={} n={} m={}",
                    c.leaves().len(),
                    c.vertex_count(),
                    c.edge_count()
                ),
            );
            rec.vertices = c.vertex_count();
            let both = composite_chi_via(c, ChiMode::Compositional, &cfg.solver).and_then(|comp| {
                Ok((
                    comp,
                    composite_chi_via(c, ChiMode::Monolithic, &cfg.solver)?,
                ))
            });
            match both {
                Ok(((comp, n1), (mono, n2))) => {
                    rec.nodes = n1 + n2;
                    rec.judged(format!("chi={comp}"), format!("chi={mono}"), comp == mono)
                }
                Err(e) => rec.inconclusive(e),
            }
        })
        .collect();
    CampaignReport::assemble("composite", Some(cfg.seed), cfg, cases, Some(started))
}

/// Deliberately broken stand-ins used to show that the campaigns can fail.
pub mod controls {
    use super::*;

    /// Claims the `(3, 5)` gap but always returns K4.
    #[derive(Debug, Clone, Copy, Default)]
    pub struct ConstantK4;

    impl GapReduction for ConstantK4 {
        fn name(&self) -> &str {
            "constant-k4"
        }

        fn sat_chi(&self) -> usize {
            3
        }

        fn unsat_chi(&self) -> usize {
            5
        }

        fn reduce_tagged(&self, _phi: &CnfFormula, tag: &str) -> Result<Graph, ReductionError> {
            Ok(Graph::complete(4).with_label_prefix(&format!("{tag}:broken:k4.")))
        }
    }

    /// Parity campaign with σ on odd and ρ on even positions.
    pub fn swapped_parity_campaign(
        k: usize,
        mode: ChiMode,
        cfg: &VerifyConfig,
    ) -> Result<CampaignReport, CnfError> {
        let mut report = parity_campaign_with(k, mode, &Sigma, &OracleRho { sat: cfg.sat }, cfg)?;
        report.campaign = format!("parity-k{k}-{}-swapped", mode.name());
        Ok(report)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> VerifyConfig {
        VerifyConfig::default()
    }

    #[test]
    fn sigma_cases() {
        let r = check_sigma_property(&CnfFormula::canonical_satisfiable(), &cfg());
        assert!(r.passed());
        assert_eq!(r.observed, "sat=true chi=3");
        let r = check_sigma_property(&CnfFormula::canonical_unsatisfiable(), &cfg());
        assert!(r.passed());
        assert_eq!(r.observed, "sat=false chi=4");
        let empty = CnfFormula::new(0, vec![]).unwrap();
        let r = check_sigma_property(&empty, &cfg());
        assert!(r.passed());
        assert_eq!(r.observed, "sat=true chi=3");
    }

    #[test]
    fn rho_cases_and_broken_stub() {
        let rho = OracleRho::default();
        let sat = CnfFormula::canonical_satisfiable();
        let unsat = CnfFormula::canonical_unsatisfiable();
        assert_eq!(
            check_rho_property(&sat, &rho, &cfg()).observed,
            "sat=true chi=3"
        );
        let r = check_rho_property(&unsat, &rho, &cfg());
        assert!(r.passed());
        assert_eq!(r.observed, "sat=false chi=5");
        assert!(!check_rho_property(&sat, &controls::ConstantK4, &cfg()).passed());
        assert!(!check_rho_property(&unsat, &controls::ConstantK4, &cfg()).passed());
    }

    #[test]
    fn undecided_is_inconclusive() {
        let tight = VerifyConfig {
            solver: SolverConfig { node_budget: 1 },
            ..cfg()
        };
        let r = check_sigma_property(&CnfFormula::canonical_unsatisfiable(), &tight);
        assert_eq!(r.status, CaseStatus::Inconclusive);
        let report = CampaignReport::assemble("x", None, &tight, vec![r], None);
        assert!(!report.passed());
        assert!(report.has_inconclusive());
    }

    #[test]
    fn odd_prefix_split_is_structural() {
        assert_eq!(odd_prefix_split(&[true, false]), Some(1));
        assert_eq!(odd_prefix_split(&[true, true]), None);
        assert_eq!(odd_prefix_split(&[true, true, true, false]), Some(2));
        assert_eq!(odd_prefix_split(&[false, false, false, false]), None);
    }

    #[test]
    fn parity_k1_monolithic() {
        let r = parity_campaign(1, ChiMode::Monolithic, &cfg()).unwrap();
        assert!(r.passed(), "{}", r.to_json());
        let chis: Vec<&str> = r.cases.iter().map(|c| c.observed.as_str()).collect();
        assert_eq!(
            chis,
            [
                "chi=5 member=false",
                "chi=4 member=true",
                "chi=3 member=false"
            ]
        );
    }

    #[test]
    fn parity_k2_compositional() {
        let r = parity_campaign(2, ChiMode::Compositional, &cfg()).unwrap();
        assert!(r.passed(), "{}", r.to_json());
        let chis: Vec<&str> = r.cases.iter().map(|c| c.observed.as_str()).collect();
        assert_eq!(
            chis,
            [
                "chi=10 member=false",
                "chi=9 member=true",
                "chi=8 member=false",
                "chi=7 member=true",
                "chi=6 member=false"
            ]
        );
    }

    #[test]
    fn swapped_combiner_fails_at_t1() {
        let r = controls::swapped_parity_campaign(1, ChiMode::Monolithic, &cfg()).unwrap();
        assert!(!r.passed());
        let failing: Vec<&str> = r.failing_cases().map(|c| c.key.as_str()).collect();
        assert_eq!(failing, ["t=1"]);
        assert_eq!(r.case("t=1").unwrap().observed, "chi=5 member=false");
    }

    #[test]
    fn prop1_cases() {
        let k4 = Graph::complete(4);
        assert!(check_prop1_decomposition(&k4, 4, &cfg()).passed());
        let r = check_prop1_decomposition(&k4, 3, &cfg());
        assert!(r.passed());
        assert_eq!(r.expected, "(chi=3) == false");
        let r = check_prop1_decomposition(&Graph::cycle(5), 3, &cfg());
        assert!(r.passed());
        assert!(r.observed.ends_with("colorable(2)=false bipartite=false"));
    }

    #[test]
    fn join_cases() {
        let r = check_join_additivity(&Graph::complete(2), &Graph::complete(3), &cfg());
        assert_eq!((r.passed(), r.observed.as_str()), (true, "chi=5"));
        let r = check_join_additivity(&Graph::cycle(5), &Graph::cycle(5), &cfg());
        assert_eq!((r.passed(), r.observed.as_str()), (true, "chi=6"));
        let r = check_join_additivity(&Graph::empty(0), &Graph::cycle(5), &cfg());
        assert_eq!((r.passed(), r.observed.as_str()), (true, "chi=3"));
    }

    #[test]
    fn report_is_reproducible_and_sorted() {
        let a = sigma_campaign(12, &cfg()).to_json();
        let b = sigma_campaign(12, &cfg()).to_json();
        assert_eq!(a, b);
        let r = sigma_campaign(12, &cfg());
        assert!(r.cases.windows(2).all(|w| w[0].key < w[1].key));
        assert!(a.find("\"campaign\"").unwrap() < a.find("\"cases\"").unwrap());
        assert!(!a.contains("timings"));
    }

    #[test]
    fn gadget_instance_names() {
        let g = crate::reductions::sigma_tagged(&CnfFormula::canonical_satisfiable(), "phi2");
        let names = gadget_instances(&g);
        assert!(names.contains(&"phi2:sigma:c1.or1".to_string()));
        assert!(names.contains(&"phi2:sigma:T".to_string()));
    }
}
