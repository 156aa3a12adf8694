use kodag::digraph::{
    chain_intersection, conjugate_chain, enumerate_linear_extensions, hasse_from_relation,
    is_admissible, is_dag, is_linear_extension, is_regular, reachability, transitive_reduction,
    Chain, Digraph,
};
use kodag::oracle::{brute_force_order, brute_force_transitive_reduction, DagCatalog};
use proptest::prelude::*;

/// A random DAG on up to `max_n` vertices: arcs drawn forward in a hidden
/// topological order, then relabeled by a random permutation.
fn arb_dag(max_n: usize) -> impl Strategy<Value = Digraph> {
    (0..=max_n).prop_flat_map(|n| {
        let slots = n * n.saturating_sub(1) / 2;
        (
            prop::collection::vec(prop::bool::weighted(0.35), slots),
            Just((0..n).collect::<Vec<usize>>()).prop_shuffle(),
        )
            .prop_map(move |(bits, perm)| {
                let pairs = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
                let arcs = pairs
                    .zip(bits)
                    .filter(|&(_, keep)| keep)
                    .map(|((i, j), _)| (perm[i], perm[j]));
                Digraph::from_arcs(n, arcs).unwrap()
            })
    })
}

fn arb_chain_pair(max_n: usize) -> impl Strategy<Value = (Chain, Chain)> {
    (0..=max_n).prop_flat_map(|n| {
        let ids: Vec<usize> = (0..n).collect();
        (Just(ids.clone()).prop_shuffle(), Just(ids).prop_shuffle())
            .prop_map(|(a, b)| (Chain::new(a).unwrap(), Chain::new(b).unwrap()))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn intersection_is_a_partial_order((x, y) in arb_chain_pair(9)) {
        let r = chain_intersection(&x, &y).unwrap();
        prop_assert!(r.check_partial_order().is_ok());
    }

    #[test]
    fn intersection_is_symmetric((x, y) in arb_chain_pair(9)) {
        prop_assert_eq!(chain_intersection(&x, &y).unwrap(), chain_intersection(&y, &x).unwrap());
    }

    #[test]
    fn self_intersection_is_the_chain((x, _y) in arb_chain_pair(9)) {
        let r = chain_intersection(&x, &x).unwrap();
        prop_assert!(r.is_total());
        prop_assert_eq!(r, x.to_relation());
    }

    #[test]
    fn hasse_of_closure_is_reduction(g in arb_dag(8)) {
        prop_assert!(is_dag(&g));
        let order = reachability(&g).to_order().unwrap();
        let hasse = hasse_from_relation(&order).unwrap();
        prop_assert_eq!(&hasse, &transitive_reduction(&g).unwrap());
        prop_assert_eq!(&hasse, &brute_force_transitive_reduction(&g).unwrap());
        if is_regular(&g).unwrap() {
            prop_assert_eq!(&hasse, &g);
        }
    }

    #[test]
    fn regularity_survives_relabeling(
        g in arb_dag(8),
        seed in prop::collection::vec(any::<u32>(), 8),
    ) {
        let n = g.vertex_count();
        let mut perm: Vec<usize> = (0..n).collect();
        perm.sort_by_key(|&v| (seed[v], v));
        let h = g.relabel(&perm).unwrap();
        prop_assert_eq!(is_regular(&g).unwrap(), is_regular(&h).unwrap());
    }

    #[test]
    fn closure_matches_dfs_oracle(g in arb_dag(8)) {
        prop_assert_eq!(reachability(&g).to_order().unwrap(), brute_force_order(&g).unwrap());
    }
}

#[test]
fn closure_is_transitive_on_cyclic_input() {
    let g = Digraph::from_arcs(4, [(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap();
    let r = reachability(&g);
    for u in 0..4 {
        for v in 0..4 {
            for w in 0..4 {
                if r.reaches(u, v) && r.reaches(v, w) {
                    assert!(r.reaches(u, w));
                }
            }
        }
    }
    assert!(r.reaches(0, 0) && !r.reaches(3, 3));
}

#[test]
fn closure_matches_dfs_on_every_small_dag() {
    for n in 0..=5 {
        for g in DagCatalog::new(n).unwrap() {
            assert_eq!(
                reachability(&g).to_order().unwrap(),
                brute_force_order(&g).unwrap()
            );
        }
    }
}

/// Every admissible extension has a conjugate that is itself an extension,
/// and the pair realizes the order generated by the DAG.
#[test]
fn admissible_extensions_always_conjugate() {
    let mut checked = 0usize;
    for n in 0..=5 {
        for g in DagCatalog::new(n).unwrap() {
            let reduction = transitive_reduction(&g).unwrap();
            let regular = is_regular(&g).unwrap();
            for x in enumerate_linear_extensions(&g, usize::MAX, 5).unwrap() {
                if !is_admissible(&x, &g).unwrap() {
                    assert!(conjugate_chain(&x, &g).is_err());
                    continue;
                }
                let y = conjugate_chain(&x, &g).unwrap();
                assert!(is_linear_extension(&y, &g).unwrap());
                let hasse = hasse_from_relation(&chain_intersection(&x, &y).unwrap()).unwrap();
                assert_eq!(hasse, reduction);
                if regular {
                    assert_eq!(hasse, g);
                }
                checked += 1;
            }
        }
    }
    assert!(checked > 0);
}
