#![allow(dead_code)]

use redwords::oracle::enumerate_reduced;
use redwords::{Partition, Permutation, StandardTableau, Word};

/// Every standard tableau with at most `k` cells, the empty one included.
pub fn tableaux_up_to(k: usize) -> Vec<StandardTableau> {
    Partition::all_up_to(k)
        .iter()
        .flat_map(|shape| StandardTableau::enumerate(shape, k).unwrap())
        .collect()
}

/// Dominant permutations of `S_n` paired with all their reduced words.
pub fn dominant_reduced_words(n: usize) -> Vec<(Permutation, Vec<Word>)> {
    Partition::all_fitting_staircase(n)
        .iter()
        .map(|shape| {
            let p = Permutation::dominant_from_partition(shape, n).unwrap();
            let words = enumerate_reduced(&p, 12).unwrap();
            (p, words)
        })
        .collect()
}

/// All permutations of `S_n` paired with all their reduced words.
pub fn all_reduced_words(n: usize) -> Vec<(Permutation, Vec<Word>)> {
    Permutation::all(n)
        .into_iter()
        .map(|p| {
            let words = enumerate_reduced(&p, 12).unwrap();
            (p, words)
        })
        .collect()
}

/// All words of length `len` over heights `1..=max_height`.
pub fn all_words(len: usize, max_height: usize) -> Vec<Word> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w: Vec<usize>| {
                (1..=max_height).map(move |h| {
                    let mut v = w.clone();
                    v.push(h);
                    v
                })
            })
            .collect();
    }
    out.into_iter().map(Word::new).collect()
}

/// Positions at which deleting the crossing leaves a reduced word.
pub fn nearly_reduced_positions(w: &Word) -> Vec<usize> {
    (1..=w.len())
        .filter(|&t| w.delete_at(t).unwrap().is_reduced())
        .collect()
}
