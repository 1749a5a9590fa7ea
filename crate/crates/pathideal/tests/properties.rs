//! Property-based invariants over randomly generated trees and ideals.

use proptest::prelude::*;

use pathideal::graph::tree_from_prufer;
use pathideal::ideal::{colon, path_ideal, restrict, Monomial, MonomialIdeal};
use pathideal::linquot::{lex_generator_order, VariableOrder};

fn prufer_sequences(max_vertices: usize) -> impl Strategy<Value = Vec<usize>> {
    (0..=max_vertices - 2).prop_flat_map(|len| proptest::collection::vec(0..len + 2, len))
}

fn monomials(num_vars: usize, count: usize) -> impl Strategy<Value = Vec<Monomial>> {
    proptest::collection::vec(
        proptest::collection::btree_set(0..num_vars, 1..=num_vars.min(5)),
        1..=count,
    )
    .prop_map(|sets| {
        sets.into_iter()
            .map(|s| Monomial::from_support(&s.into_iter().collect::<Vec<_>>()))
            .collect()
    })
}

fn labels(num_vars: usize) -> Vec<String> {
    (0..num_vars).map(|i| format!("v{i}")).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn prufer_trees_have_consistent_paths(prufer in prufer_sequences(12)) {
        let tree = tree_from_prufer(&prufer);
        let n = tree.num_vertices();
        prop_assert_eq!(tree.num_edges(), n - 1);
        prop_assert_eq!(tree.enumerate_paths(2).len(), n - 1);
        let dist = tree.distances_from(0);
        for v in 1..n {
            let p = tree.unique_path(0, v);
            prop_assert_eq!(p.length(), dist[v]);
        }
        // every path is a path of the underlying graph too
        for n_path in 3..=4usize {
            prop_assert_eq!(tree.enumerate_paths(n_path), tree.as_graph().enumerate_paths(n_path));
        }
    }

    #[test]
    fn restrict_composes_through_gcd(
        gens in monomials(8, 6),
        m_bits in 0u8..,
        m2_bits in 0u8..,
    ) {
        let ideal = MonomialIdeal::new(labels(8), gens);
        let m = Monomial::from_support(
            &(0..8).filter(|&v| m_bits >> v & 1 == 1).collect::<Vec<_>>(),
        );
        let m2 = Monomial::from_support(
            &(0..8).filter(|&v| m2_bits >> v & 1 == 1).collect::<Vec<_>>(),
        );
        prop_assert_eq!(
            restrict(&restrict(&ideal, &m), &m2),
            restrict(&ideal, &m.gcd(&m2))
        );
    }

    #[test]
    fn colon_ignores_generator_order(gens in monomials(8, 6), pick in any::<prop::sample::Index>()) {
        let ideal = MonomialIdeal::new(labels(8), gens.clone());
        prop_assume!(!ideal.is_zero());
        let m = gens[pick.index(gens.len())];
        let expected = colon(&ideal, &m).unwrap();
        let mut shuffled = gens;
        shuffled.reverse();
        let again = MonomialIdeal::new(labels(8), shuffled);
        prop_assert_eq!(colon(&again, &m).unwrap(), expected);
    }

    #[test]
    fn lex_generator_order_is_strict_and_input_insensitive(
        supports in proptest::collection::btree_set(
            proptest::collection::btree_set(0usize..7, 3),
            1..12,
        ),
        perm_seed in any::<u64>(),
    ) {
        let gens: Vec<Monomial> = supports
            .into_iter()
            .map(|s| Monomial::from_support(&s.into_iter().collect::<Vec<_>>()))
            .collect();
        let ideal = MonomialIdeal::new(labels(7), gens.clone());
        prop_assert_eq!(ideal.num_generators(), gens.len(), "equal-degree sets are antichains");

        // a seeded permutation of the variables
        let mut sequence: Vec<usize> = (0..7).collect();
        let mut state = perm_seed | 1;
        for i in (1..sequence.len()).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            sequence.swap(i, (state >> 33) as usize % (i + 1));
        }
        let vo = VariableOrder::from_sequence(sequence, 7);

        let order = lex_generator_order(&ideal, &vo).unwrap();
        prop_assert_eq!(order.len(), ideal.num_generators());
        // strictly descending means no two adjacent generators are equal
        for w in order.windows(2) {
            prop_assert_ne!(w[0], w[1]);
        }
        // building the ideal from reversed input cannot change the order
        let reversed = MonomialIdeal::new(labels(7), gens.into_iter().rev().collect());
        prop_assert_eq!(lex_generator_order(&reversed, &vo).unwrap(), order);
    }

    #[test]
    fn path_ideal_gens_are_an_equigenerated_antichain(prufer in prufer_sequences(10), n in 2usize..=6) {
        let tree = tree_from_prufer(&prufer);
        let ideal = path_ideal(&tree, n);
        for g in ideal.generators() {
            prop_assert_eq!(g.degree(), n);
        }
        for (i, a) in ideal.generators().iter().enumerate() {
            for (j, b) in ideal.generators().iter().enumerate() {
                if i != j {
                    prop_assert!(!a.divides(b));
                }
            }
        }
    }
}
