use exactcolor::corpus::{all_small_graphs, random_small_graphs, DEFAULT_SEED};
use exactcolor::oracle::{naive_chromatic_number, naive_k_colorable};
use exactcolor::solver::is_clique;
use exactcolor::{
    chromatic_number, dsatur_upper_bound, is_bipartite, is_k_colorable, sigma, validate_coloring,
    CnfFormula, Graph, SolverConfig,
};
use proptest::prelude::*;

fn cfg() -> SolverConfig {
    SolverConfig::default()
}

fn check_against_oracle(g: &Graph) {
    let r = chromatic_number(g, &cfg()).unwrap();
    assert_eq!(r.chi, naive_chromatic_number(g), "{g:?}");
    assert!(validate_coloring(g, &r.witness, r.chi).unwrap());
    assert_eq!(r.witness.colors_used(), r.chi);
    assert!(is_clique(g, &r.lower_bound_clique));
    let (upper, _) = dsatur_upper_bound(g);
    assert!(r.lower_bound_clique.len() <= r.chi && r.chi <= upper);
    assert_eq!(is_bipartite(g).is_some(), r.chi <= 2);
    if r.chi > 0 && g.vertex_count() <= 12 {
        assert!(
            !naive_k_colorable(g, r.chi - 1),
            "refutation of chi-1 rechecked"
        );
    }
}

#[test]
fn agrees_with_enumeration_on_all_graphs_up_to_five_vertices() {
    let graphs = all_small_graphs();
    assert_eq!(graphs.len(), 53);
    graphs.iter().for_each(check_against_oracle);
}

#[test]
fn agrees_with_enumeration_on_random_six_and_seven_vertex_graphs() {
    random_small_graphs(DEFAULT_SEED, 100)
        .iter()
        .for_each(check_against_oracle);
}

#[test]
fn petersen_against_enumeration() {
    let p = Graph::petersen();
    // 3^10 labelings
    assert!(naive_k_colorable(&p, 3));
    assert!(!naive_k_colorable(&p, 2));
    assert!(is_k_colorable(&p, 3, &cfg()).unwrap().is_some());
    assert!(is_k_colorable(&p, 2, &cfg()).unwrap().is_none());
}

#[test]
fn c5_join_k2_needs_five() {
    let g = Graph::cycle(5).join(&Graph::complete(2));
    // 4^7 labelings, none proper
    assert!(!naive_k_colorable(&g, 4));
    let r = chromatic_number(&g, &cfg()).unwrap();
    assert_eq!(r.chi, 5);
    assert_eq!(r.lower_bound_clique.len(), 4);
    assert_eq!(r.bounds_history, vec![(4, 5), (5, 5)]);
}

#[test]
fn contradiction_gadget_needs_four_by_enumeration() {
    let phi = CnfFormula::from_dimacs_clauses(1, &[&[1], &[-1]]).unwrap();
    let g = sigma(&phi);
    assert_eq!(g.vertex_count(), 17);
    assert!(!naive_k_colorable(&g, 3));
    assert!(naive_k_colorable(&g, 4));
    assert_eq!(chromatic_number(&g, &cfg()).unwrap().chi, 4);
}

#[test]
fn small_sigma_instance_by_enumeration() {
    let phi = CnfFormula::from_dimacs_clauses(1, &[&[1, 1, 1]]).unwrap();
    let g = sigma(&phi);
    assert_eq!(g.vertex_count(), 11);
    assert_eq!(naive_chromatic_number(&g), 3);
    assert_eq!(chromatic_number(&g, &cfg()).unwrap().chi, 3);
}

#[test]
fn dsatur_is_exact_on_bipartite_graphs() {
    for g in all_small_graphs()
        .iter()
        .chain(&random_small_graphs(11, 200))
    {
        if let Some(two) = is_bipartite(g) {
            assert!(validate_coloring(g, &two, 2).unwrap());
            let want = naive_chromatic_number(g);
            assert_eq!(dsatur_upper_bound(g).0, want);
        }
    }
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let edges = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .zip(bits)
                .filter(|(_, b)| *b)
                .map(|(e, _)| e);
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn solver_matches_oracle(g in arb_graph(7)) {
        check_against_oracle(&g);
    }

    #[test]
    fn solver_is_deterministic(g in arb_graph(9)) {
        prop_assert_eq!(chromatic_number(&g, &cfg()), chromatic_number(&g, &cfg()));
    }
}
