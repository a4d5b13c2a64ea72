use algcon::circulant::{circulant_graph, dft_spectrum, solve_problem2, theorem5_construct, CirculantSet};
use algcon::neighborhood::{apply_move, connection_matrix, enumerate_moves, verify_lelm, MoveKind, ALL_KINDS};
use algcon::partition_builder::{algorithm1, check_multi_component_condition, lower_bounds};
use algcon::search::canonical_form;
use algcon::spectral::{self, complement_relation_check};
use algcon::{choose2, Graph, Partition, Rational};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), choose2(n)).prop_map(move |bits| {
            let pairs: Vec<_> = Graph::empty(n).unwrap().pairs().collect();
            Graph::from_edges(n, pairs.into_iter().zip(bits).filter(|(_, b)| *b).map(|(p, _)| p)).unwrap()
        })
    })
}

fn nm_strategy(max_n: usize) -> impl Strategy<Value = (usize, usize)> {
    (1..=max_n).prop_flat_map(|n| (Just(n), 0..=choose2(n)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn construction_invariants((n, m) in nm_strategy(80)) {
        let r = algorithm1(n, m).unwrap();
        prop_assert!(r.m_actual <= m);
        prop_assert_eq!(r.partition.n(), n);
        prop_assert_eq!(r.partition.m(), r.m_actual);
        prop_assert!(r.steps.windows(2).all(|w| w[0].size >= w[1].size));
        if n <= 40 {
            prop_assert!(r.shortfall() <= n.saturating_sub(2));
        }
    }

    #[test]
    fn complement_relation_holds(g in graph_strategy(14)) {
        let c = complement_relation_check(&g, 1e-8);
        prop_assert!(c.holds, "deviation {}", c.max_deviation);
    }

    #[test]
    fn spectrum_bounds(g in graph_strategy(12)) {
        let s = spectral::spectrum(&g);
        prop_assert!(s.values.iter().all(|&v| v > -1e-9 && v < g.n() as f64 + 1e-9));
        prop_assert!(s.values[g.n() - 1].abs() < 1e-9);
        let trace: f64 = s.values.iter().sum();
        prop_assert!((trace - 2.0 * g.edge_count() as f64).abs() < 1e-8);
        prop_assert_eq!(s.algebraic_connectivity() > 1e-9, g.n() >= 2 && g.is_connected());
    }

    #[test]
    fn moves_are_reversible(g in graph_strategy(9), pick in any::<prop::sample::Index>()) {
        let moves: Vec<_> = enumerate_moves(&g, &ALL_KINDS).collect();
        prop_assume!(!moves.is_empty());
        let mv = moves[pick.index(moves.len())];
        let h = apply_move(&g, &mv).unwrap();
        let back = match mv.kind {
            MoveKind::Add => algcon::Move::remove(mv.added.unwrap().0, mv.added.unwrap().1),
            MoveKind::Remove => algcon::Move::add(mv.removed.unwrap().0, mv.removed.unwrap().1),
            MoveKind::Reconnect => algcon::Move::reconnect(mv.added.unwrap(), mv.removed.unwrap()),
        };
        prop_assert_eq!(apply_move(&h, &back).unwrap(), g.clone());
        let rank = connection_matrix(&g, &mv).unwrap().rank();
        prop_assert_eq!(rank, if mv.kind == MoveKind::Reconnect { 2 } else { 1 });
    }

    #[test]
    fn canonical_form_is_relabeling_invariant(g in graph_strategy(10), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        let mut perm: Vec<usize> = (0..g.n()).collect();
        perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        prop_assert_eq!(canonical_form(&g), canonical_form(&g.relabel(&perm)));
    }

    #[test]
    fn dft_matches_eigensolver(n in 2usize..=48, mask in any::<u64>()) {
        let offsets: Vec<usize> = (1..=n / 2).filter(|j| mask >> j & 1 == 1).flat_map(|j| [j, n - j]).collect();
        let s = CirculantSet::new(n, offsets).unwrap();
        let d = dft_spectrum(&s);
        prop_assert!(d.x[0].abs() <= 1e-9 * n as f64);
        let eig = spectral::spectrum(&circulant_graph(&s)).values;
        for (a, b) in d.laplacian_eigenvalues().iter().zip(&eig) {
            prop_assert!((a - b).abs() < 1e-6);
        }
    }

    #[test]
    fn multi_component_value_nonnegative(sizes in proptest::collection::vec(1usize..12, 1..8)) {
        let p = Partition::new(sizes).unwrap();
        prop_assert!(check_multi_component_condition(&p).value >= Rational::from_integer(0));
    }

    #[test]
    fn lower_bounds_hold(g in graph_strategy(9)) {
        prop_assume!(g.edge_count() > 0);
        let b = lower_bounds(&g, 32);
        prop_assert!(spectral::lambda1(&g) >= b.best() - 1e-9);
    }
}

/// The constructed graph is a local minimizer, except that deleting the only
/// edge of a lone `K_2` drops λ1 from 2 to 0.
fn check_built_lelm(n: usize, m: usize) {
    let r = algorithm1(n, m).unwrap();
    let report = verify_lelm(&r.graph());
    let lone_k2 = r.partition.non_singleton_sizes() == [2];
    if lone_k2 {
        assert!(!report.verdict);
        assert_eq!(report.violating_move.unwrap().kind, MoveKind::Remove);
        assert_eq!(report.worst_neighbor_lambda1, Some(0.0));
    } else {
        assert!(report.verdict, "({n},{m}) {:?} {:?}", r.partition.sizes(), report.violating_move);
    }
}

#[test]
fn built_graphs_are_local_minimizers_up_to_8() {
    for n in 1..=8 {
        for m in 0..=choose2(n) {
            check_built_lelm(n, m);
        }
    }
}

#[test]
fn built_graphs_are_local_minimizers_random() {
    let mut rng = ChaCha8Rng::seed_from_u64(100);
    for _ in 0..100 {
        let n = rng.gen_range(1..=20);
        let m = rng.gen_range(0..=choose2(n));
        check_built_lelm(n, m);
    }
}

#[test]
fn theorem5_rows_pass_lelm_and_solve_problem2() {
    for n in 1..=24 {
        for m in 1..=choose2(n) {
            let Ok(t) = theorem5_construct(n, m) else { continue };
            let g = circulant_graph(&t.set);
            assert_eq!(g.edge_count(), m);
            if t.i > 2 || t.ell > 1 {
                assert!(verify_lelm(&g).verdict, "({n},{m})");
            }
            let p2 = solve_problem2(n, t.set.degree()).unwrap();
            assert!((p2.spectrum.peak - t.i as f64).abs() < 1e-9, "({n},{m})");
        }
    }
}

#[test]
fn circulant_row_roundtrip() {
    let s = CirculantSet::from_row("000110111011011011101100").unwrap();
    assert_eq!(s.offsets(), [3, 4, 6, 7, 8, 10, 11, 13, 14, 16, 17, 18, 20, 21]);
    assert_eq!(s.degree(), 14);
    assert_eq!(CirculantSet::from_row(&s.row()).unwrap(), s);
}
