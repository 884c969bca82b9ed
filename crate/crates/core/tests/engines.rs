mod common;

use num_bigint::BigInt;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tutte::engines::{
    tutte_activities, tutte_deletion_contraction, tutte_deletion_contraction_with,
    tutte_subset_expansion, DelConOptions, PivotRule,
};
use tutte::structures::{complete_graph, cycle, petersen, random_multigraph, theta};
use tutte::{BiPoly, Multigraph, RankedSet};

fn one() -> BigInt {
    BigInt::from(1)
}

#[test]
fn matrix_tree_oracle_sanity() {
    assert_eq!(
        common::matrix_tree_count(&complete_graph(4)),
        BigInt::from(16)
    );
    assert_eq!(
        common::matrix_tree_count(&complete_graph(5)),
        BigInt::from(125)
    );
    let par = Multigraph::new(2, vec![(0, 1), (0, 1), (0, 0)]).unwrap();
    assert_eq!(common::matrix_tree_count(&par), BigInt::from(2));
    assert_eq!(common::matrix_tree_count(&petersen()), BigInt::from(2000));
}

#[test]
fn named_families_agree_across_engines() {
    let graphs = [
        complete_graph(4),
        complete_graph(5),
        cycle(6).unwrap(),
        theta(&[1, 2, 3]).unwrap(),
        theta(&[2, 2, 2, 2]).unwrap(),
    ];
    for g in &graphs {
        let by_delcon = tutte_deletion_contraction(g);
        assert_eq!(
            by_delcon,
            tutte_subset_expansion(&RankedSet::of_graph(g).unwrap()).unwrap()
        );
        assert_eq!(by_delcon, tutte_activities(g).unwrap().to_bipoly());
        assert_eq!(by_delcon.eval(&one(), &one()), common::matrix_tree_count(g));
    }
}

#[test]
fn petersen_known_coefficients() {
    let t = tutte_deletion_contraction(&petersen());
    // x^9 and y^6 are the extreme terms; t10 = t01 for any graph with two or more edges
    assert_eq!(t.coefficient(9, 0), one());
    assert_eq!(t.coefficient(0, 6), one());
    assert_eq!(t.coefficient(1, 0), t.coefficient(0, 1));
    assert_eq!(t.x_degree(), Some(9));
    assert!(t.is_nonnegative());
    // T(2,2) = 2^|E|
    assert_eq!(
        t.eval(&BigInt::from(2), &BigInt::from(2)),
        BigInt::from(1u64 << 15)
    );
}

#[test]
fn petersen_without_memo_matches() {
    let g = petersen();
    let plain = tutte_deletion_contraction_with(
        &g,
        DelConOptions {
            memoize: false,
            pivot: PivotRule::MaxMultiplicity,
        },
    );
    assert_eq!(plain, tutte_deletion_contraction(&g));
}

#[test]
fn larger_graphs_beyond_the_table_guard() {
    // 30 edges: far past the explicit-table limit, no limit for deletion-contraction
    let g = random_multigraph(7, 30, 5).unwrap();
    assert!(RankedSet::of_graph(&g).is_err());
    let t = tutte_deletion_contraction(&g);
    assert_eq!(t.eval(&one(), &one()), common::matrix_tree_count(&g));
    assert_eq!(
        t.eval(&BigInt::from(2), &BigInt::from(2)),
        BigInt::from(1u64 << 30)
    );
}

fn arb_multigraph() -> impl Strategy<Value = Multigraph> {
    (1usize..7, 0usize..9, any::<u64>())
        .prop_map(|(n, m, seed)| random_multigraph(n, m, seed).unwrap())
}

fn arb_connected() -> impl Strategy<Value = Multigraph> {
    arb_multigraph().prop_filter("connected", common::is_connected)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn oracle_triangle(g in arb_connected()) {
        let by_subset = tutte_subset_expansion(&RankedSet::of_graph(&g).unwrap()).unwrap();
        prop_assert_eq!(&by_subset, &tutte_deletion_contraction(&g));
        prop_assert_eq!(&by_subset, &tutte_activities(&g).unwrap().to_bipoly());
    }

    #[test]
    fn disconnected_graphs_agree_and_count_forests(g in arb_multigraph()) {
        let t = tutte_deletion_contraction(&g);
        prop_assert_eq!(&t, &tutte_subset_expansion(&RankedSet::of_graph(&g).unwrap()).unwrap());
        prop_assert_eq!(t.eval(&one(), &one()), common::matrix_tree_count(&g));
    }

    #[test]
    fn coefficients_nonnegative_and_bounded_by_rank(g in arb_multigraph()) {
        let t = tutte_deletion_contraction(&g);
        prop_assert!(t.is_nonnegative());
        prop_assert!(t.x_degree().unwrap_or(0) <= g.rank());
    }

    #[test]
    fn pivot_rule_and_memo_do_not_matter(g in arb_multigraph()) {
        let reference = tutte_deletion_contraction(&g);
        for memoize in [false, true] {
            for pivot in [PivotRule::MaxMultiplicity, PivotRule::EdgeOrder] {
                prop_assert_eq!(&tutte_deletion_contraction_with(&g, DelConOptions { memoize, pivot }), &reference);
            }
        }
    }

    #[test]
    fn activities_ignore_edge_order(g in arb_connected(), seed in any::<u64>()) {
        let mut order: Vec<usize> = (0..g.edge_count()).collect();
        order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let shuffled = g.reorder_edges(&order).unwrap();
        let table = tutte_activities(&g).unwrap();
        prop_assert_eq!(&table, &tutte_activities(&shuffled).unwrap());
        prop_assert_eq!(BigInt::from(table.tree_count()), common::matrix_tree_count(&g));
    }

    #[test]
    fn isomorphic_relabeling_keeps_polynomial(g in arb_multigraph(), seed in any::<u64>()) {
        let mut perm: Vec<usize> = (0..g.vertex_count()).collect();
        perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let h = g.relabel_vertices(&perm).unwrap();
        prop_assert_eq!(tutte_deletion_contraction(&g), tutte_deletion_contraction(&h));
    }
}

#[test]
fn empty_ground_sets() {
    assert_eq!(
        tutte_deletion_contraction(&Multigraph::empty(1)),
        BiPoly::one()
    );
    assert_eq!(
        tutte_activities(&Multigraph::empty(1)).unwrap().to_bipoly(),
        BiPoly::one()
    );
    assert_eq!(
        tutte_subset_expansion(&RankedSet::uniform(0, 0).unwrap()).unwrap(),
        BiPoly::one()
    );
}
