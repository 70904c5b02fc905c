mod common;

use common::tableaux_up_to;
use redwords::lambda::{adjointness_matrix_check, build_lambda, build_lambda_x};
use redwords::oracle::{enumerate_reduced, factorial, fk_weight, macdonald_weight};
use redwords::{Chain, RankedMultigraph, StandardTableau, Word};

fn small_tableau() -> StandardTableau {
    StandardTableau::new(vec![vec![1, 3], vec![2, 5], vec![4]]).unwrap()
}

#[test]
fn graph_invariants_up_to_six_cells() {
    for t in tableaux_up_to(6) {
        let chain = Chain::new(&t).unwrap();
        let g = build_lambda(&t).unwrap();
        for m in 0..=chain.len() {
            assert_eq!(g.ranks[m], enumerate_reduced(chain.perm(m), 12).unwrap());
        }
        for (m, degrees) in g.out_degrees().iter().enumerate().take(chain.len()) {
            assert!(degrees.iter().all(|&d| d == m as u64 + 1), "{t:?} rank {m}");
        }
        let counts = g.path_counts().unwrap();
        for (m, rank) in g.ranks.iter().enumerate() {
            for (i, a) in rank.iter().enumerate() {
                assert_eq!(counts[m][i], macdonald_weight(a).unwrap());
            }
        }
        assert_eq!(
            counts[chain.len()].iter().sum::<u64>(),
            factorial(chain.len()).unwrap()
        );
        assert!(adjointness_matrix_check(&t).unwrap().pass());
    }
}

#[test]
fn shifted_graphs_count_fk_weight() {
    for t in tableaux_up_to(5) {
        let plain = build_lambda(&t).unwrap();
        for x in 0..=3u64 {
            let g = build_lambda_x(&t, x).unwrap();
            assert_eq!(g.ranks, plain.ranks);
            for (a, count) in g.top_path_counts().unwrap() {
                assert_eq!(count, fk_weight(&a, x).unwrap(), "{a} x={x}");
            }
        }
        assert_eq!(build_lambda_x(&t, 0).unwrap(), plain);
    }
}

#[test]
fn small_tableau_structure() {
    let g = build_lambda(&small_tableau()).unwrap();
    let w = |v: &[usize]| Word::new(v.to_vec());
    assert_eq!(g.ranks[1], vec![w(&[1])]);
    assert_eq!(g.ranks[2], vec![w(&[2, 1])]);
    assert_eq!(g.ranks[3], vec![w(&[1, 2, 1]), w(&[2, 1, 2])]);
    assert_eq!(g.multiplicity(&w(&[]), &w(&[1])), 1);
    assert_eq!(g.multiplicity(&w(&[1]), &w(&[2, 1])), 2);
    assert_eq!(g.multiplicity(&w(&[2, 1]), &w(&[1, 2, 1])), 1);
    assert_eq!(g.multiplicity(&w(&[2, 1]), &w(&[2, 1, 2])), 2);
    // a path through the graph
    for pair in [[2, 1, 2].as_slice(), &[3, 2, 1, 2]].windows(2) {
        assert!(g.multiplicity(&w(pair[0]), &w(pair[1])) > 0);
    }
    assert!(g.multiplicity(&w(&[3, 2, 1, 2]), &w(&[3, 2, 3, 1, 2])) > 0);
}

#[test]
fn exports_are_stable_and_round_trip() {
    for t in tableaux_up_to(4) {
        for x in [0, 2] {
            let g = build_lambda_x(&t, x).unwrap();
            let json = g.to_json().unwrap();
            assert_eq!(RankedMultigraph::from_json(&json).unwrap(), g);
            assert_eq!(json, build_lambda_x(&t, x).unwrap().to_json().unwrap());
            let dot = g.to_dot().unwrap();
            assert_eq!(dot.matches(" -> ").count(), g.edge_count());
        }
    }
    let single = build_lambda(&StandardTableau::new(vec![vec![1]]).unwrap()).unwrap();
    assert_eq!(single.vertex_count(), 2);
    assert_eq!(single.edge_count(), 1);
    assert!(RankedMultigraph::from_json("{}").is_err());
}
