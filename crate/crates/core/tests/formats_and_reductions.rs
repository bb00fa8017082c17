use exactcolor::cnf::{is_satisfiable, Literal};
use exactcolor::corpus::{random_formulas, DEFAULT_SEED};
use exactcolor::oracle::gray_code_satisfiable;
use exactcolor::reductions::{predicted_chi, sigma_tagged};
use exactcolor::solver::chi;
use exactcolor::{
    brute_force_sat, canonical_chain, exact_mk_member, mk_set, parse_dimacs_cnf, read_dimacs, rho,
    sigma, wagner_combine, write_dimacs, write_dimacs_cnf, CnfFormula, Graph, OracleRho, SatConfig,
    Sigma, SolverConfig,
};
use proptest::prelude::*;

fn arb_formula() -> impl Strategy<Value = CnfFormula> {
    (1usize..=10).prop_flat_map(|n| {
        let lit = (0..n, any::<bool>()).prop_map(|(var, positive)| Literal { var, positive });
        let clause = proptest::collection::vec(lit, 1..=3);
        proptest::collection::vec(clause, 0..=8).prop_map(move |cs| CnfFormula::new(n, cs).unwrap())
    })
}

fn arb_labeled_graph() -> impl Strategy<Value = Graph> {
    (0usize..=9).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        (
            proptest::collection::vec(any::<bool>(), pairs),
            proptest::collection::vec("[a-z0-9:./!]{0,8}", n),
        )
            .prop_map(move |(bits, labels)| {
                let edges = (0..n)
                    .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                    .zip(bits)
                    .filter(|(_, b)| *b)
                    .map(|(e, _)| e);
                Graph::from_edges(n, edges)
                    .unwrap()
                    .with_labels(labels)
                    .unwrap()
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn dimacs_graph_round_trip(g in arb_labeled_graph()) {
        let text = write_dimacs(&g);
        let back = read_dimacs(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(write_dimacs(&back), text);
    }

    #[test]
    fn dimacs_cnf_round_trip(f in arb_formula()) {
        let text = write_dimacs_cnf(&f);
        let back = parse_dimacs_cnf(&text).unwrap();
        prop_assert_eq!(&back, &f);
        prop_assert_eq!(write_dimacs_cnf(&back), text);
    }

    #[test]
    fn brute_force_agrees_with_gray_code(f in arb_formula()) {
        let w = brute_force_sat(&f, &SatConfig::default()).unwrap();
        prop_assert_eq!(w.is_some(), gray_code_satisfiable(&f));
        if let Some(a) = w {
            prop_assert!(f.eval(&a));
        }
    }

    #[test]
    fn sigma_vertex_count(f in arb_formula()) {
        let g = sigma(&f);
        prop_assert_eq!(g.vertex_count(), 3 + 2 * f.variable_count() + 6 * f.clauses().len());
    }
}

#[test]
fn corpus_has_both_outcomes() {
    let formulas = random_formulas(DEFAULT_SEED, 200);
    let sat = formulas
        .iter()
        .filter(|f| is_satisfiable(f, &SatConfig::default()).unwrap())
        .count();
    assert!(sat >= 40 && 200 - sat >= 40, "sat = {sat}");
}

#[test]
fn sigma_gap_on_seeded_formulas() {
    let cfg = SolverConfig::default();
    for f in random_formulas(DEFAULT_SEED ^ 1, 60) {
        let sat = is_satisfiable(&f, &SatConfig::default()).unwrap();
        assert_eq!(gray_code_satisfiable(&f), sat);
        let want = if sat { 3 } else { 4 };
        assert_eq!(chi(&sigma(&f), &cfg).unwrap(), want, "{f}");
    }
}

#[test]
fn rho_gap_on_seeded_formulas() {
    let cfg = SolverConfig::default();
    for f in random_formulas(DEFAULT_SEED ^ 2, 60) {
        let sat = gray_code_satisfiable(&f);
        let want = if sat { 3 } else { 5 };
        assert_eq!(
            chi(&rho(&f, &SatConfig::default()).unwrap(), &cfg).unwrap(),
            want
        );
    }
}

#[test]
fn combined_chi_follows_pairwise_table() {
    let cfg = SolverConfig::default();
    let sat = SatConfig::default();
    for k in 1..=3 {
        for t in 0..=2 * k {
            let chain = canonical_chain(k, t).unwrap();
            let c = wagner_combine(&chain, &sat).unwrap();
            let leaf_chi: Vec<Option<usize>> = c
                .leaves()
                .iter()
                .map(|l| Some(chi(&l.graph, &cfg).unwrap()))
                .collect();
            let composite = c.composite_chi(&leaf_chi).unwrap();
            let sat_pairs = t / 2;
            let table =
                3 * sat_pairs + if t % 2 == 1 { 4 } else { 0 } + 5 * (k - sat_pairs - t % 2);
            assert_eq!(composite, table, "k={k} t={t}");
            assert_eq!(
                predicted_chi(chain.satisfiable(), &OracleRho::default(), &Sigma),
                table
            );
            if k <= 2 {
                assert_eq!(chi(&c.flatten(), &cfg).unwrap(), table, "k={k} t={t}");
            }
        }
    }
}

#[test]
fn membership_of_k2_t3_chain() {
    let c = wagner_combine(&canonical_chain(2, 3).unwrap(), &SatConfig::default()).unwrap();
    let g = c.flatten();
    assert_eq!(chi(&g, &SolverConfig::default()).unwrap(), 7);
    assert!(exact_mk_member(&g, &mk_set(2).unwrap(), &SolverConfig::default()).unwrap());
}

#[test]
fn parity_biconditional_for_small_k() {
    let cfg = SolverConfig::default();
    for k in 1..=2 {
        let m = mk_set(k).unwrap();
        for t in 0..=2 * k {
            let g = wagner_combine(&canonical_chain(k, t).unwrap(), &SatConfig::default())
                .unwrap()
                .flatten();
            assert_eq!(
                t % 2 == 1,
                exact_mk_member(&g, &m, &cfg).unwrap(),
                "k={k} t={t}"
            );
        }
    }
}

#[test]
fn sigma_labels_name_gadget_roles() {
    let g = sigma_tagged(&CnfFormula::canonical_unsatisfiable(), "phi4");
    assert_eq!(g.vertex_count(), 3 + 6 + 48);
    assert!(g.labels().iter().all(|l| l.starts_with("phi4:sigma:")));
    assert_eq!(g.label(g.vertex_count() - 1), "phi4:sigma:c8.or2.o");
}
