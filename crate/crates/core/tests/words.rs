mod common;

use common::{all_reduced_words, all_words, nearly_reduced_positions};
use proptest::prelude::*;
use redwords::wiring::WiringState;
use redwords::{Direction, Error, Partition, Permutation, StandardTableau, Word};

#[test]
fn reduced_words_are_nearly_reduced_at_both_ends() {
    for n in 1..=5 {
        for (_, words) in all_reduced_words(n) {
            for w in words.iter().filter(|w| !w.is_empty()) {
                assert!(w.is_nearly_reduced(1).unwrap(), "{w}");
                assert!(w.is_nearly_reduced(w.len()).unwrap(), "{w}");
            }
        }
    }
}

#[test]
fn reduced_means_no_pair_crosses_twice() {
    for len in 0..=6 {
        for w in all_words(len, 4) {
            let pairs: std::collections::HashSet<_> =
                w.crossings().iter().map(|c| c.pair()).collect();
            assert_eq!(w.is_reduced(), pairs.len() == w.len(), "{w}");
        }
    }
}

/// A non-reduced word that is nearly reduced somewhere is nearly reduced at
/// exactly two positions, and the library's defect is the other one.
#[test]
fn defects_match_deletion_definition() {
    let mut checked = 0;
    for len in 1..=7 {
        for w in all_words(len, 4) {
            if w.is_reduced() {
                continue;
            }
            let positions = nearly_reduced_positions(&w);
            if positions.is_empty() {
                continue;
            }
            assert_eq!(positions.len(), 2, "{w}: {positions:?}");
            let (a, b) = (positions[0], positions[1]);
            assert_eq!(w.defect(a).unwrap(), b, "{w}");
            assert_eq!(w.defect(b).unwrap(), a, "{w}");
            // the two positions are the two crossings of one wire pair
            let pair = w.crossing_at(a).unwrap().1;
            let same: Vec<usize> = w
                .crossings()
                .iter()
                .filter(|c| c.pair() == pair)
                .map(|c| c.position)
                .collect();
            assert_eq!(same, vec![a, b], "{w}");
            checked += 1;
        }
    }
    assert!(checked > 1000);
}

#[test]
fn defect_errors() {
    assert_eq!(Word::from([1, 2, 1]).defect(1), Err(Error::AlreadyReduced));
    assert_eq!(
        Word::from([1, 1, 1]).defect(2),
        Err(Error::NotNearlyReduced(2))
    );
}

#[test]
fn reduced_words_of_a_reduced_word_list_agree_with_permutations() {
    for (p, words) in all_reduced_words(4) {
        for w in words {
            assert_eq!(w.permutation_in(4).unwrap(), p);
            assert_eq!(w.len(), p.length());
        }
    }
}

#[test]
fn chains_are_dominant_throughout() {
    for k in 0..=6 {
        for shape in Partition::all_of(k) {
            for t in StandardTableau::enumerate(&shape, 6).unwrap() {
                let chain = redwords::Chain::new(&t).unwrap();
                for m in 0..=k {
                    let p = chain.perm(m);
                    assert!(p.is_dominant());
                    assert_eq!(
                        p.rothe_diagram().young_shape().as_ref(),
                        Some(chain.shape(m))
                    );
                }
                for m in 1..=k {
                    assert_eq!(chain.wire(m), t.insertion_wire(m).unwrap());
                    assert_eq!(chain.pair(m).0, chain.wire(m));
                }
                assert_eq!(
                    chain.final_perm(),
                    &Permutation::dominant_from_partition(&shape, chain.ambient()).unwrap()
                );
            }
        }
    }
}

#[derive(Clone, Debug)]
enum Op {
    Push(usize, bool),
    Insert(usize, usize),
}

fn op() -> impl Strategy<Value = Op> {
    prop_oneof![
        (0usize..40, any::<bool>()).prop_map(|(t, up)| Op::Push(t, up)),
        (0usize..40, 0usize..7).prop_map(|(c, h)| Op::Insert(c, h)),
    ]
}

/// Wires crossing at `t`, by replaying the word from scratch.
fn wires_by_replay(w: &Word, t: usize, rows: usize) -> (usize, usize) {
    let mut occ: Vec<usize> = (0..=rows).collect();
    for &h in &w.heights()[..t] {
        occ.swap(h, h + 1);
    }
    let h = w.heights()[t];
    (occ[h], occ[h + 1])
}

proptest! {
    #[test]
    fn wiring_state_matches_rebuild(
        start in proptest::collection::vec(0usize..7, 0..25),
        ops in proptest::collection::vec(op(), 0..30),
    ) {
        let rows = 8;
        let mut state = WiringState::from_word(&Word::new(start), rows).unwrap();
        for op in ops {
            match op {
                Op::Push(t, up) if !state.is_empty() => {
                    let t = t % state.len();
                    let dir = if up { Direction::Up } else { Direction::Down };
                    let _ = state.push(t, dir);
                }
                Op::Insert(c, h) => {
                    let c = c % (state.len() + 1);
                    state.insert(c, h).unwrap();
                }
                Op::Push(..) => {}
            }
            prop_assert!(state.is_consistent());
        }
        let w = state.to_word();
        for t in 0..w.len() {
            let pair = wires_by_replay(&w, t, rows);
            prop_assert_eq!(state.wires_at(t), pair);
            let others: Vec<usize> = (0..w.len())
                .filter(|&p| p != t && {
                    let (a, b) = wires_by_replay(&w, p, rows);
                    (a.min(b), a.max(b)) == (pair.0.min(pair.1), pair.0.max(pair.1))
                })
                .collect();
            match state.partner(t) {
                Some(p) => prop_assert!(others.contains(&p)),
                None => prop_assert!(others.is_empty()),
            }
            for wire in 0..=rows {
                let row = state.row_of(wire, t).unwrap();
                prop_assert_eq!(state.occupant(t, row), wire);
            }
        }
    }
}
