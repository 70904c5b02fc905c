//! The Markov growth process: starting from the empty word, insert a crossing
//! on wire `i_m` at one of the `m` gaps and bump it down until reduced.
//!
//! Choosing the gaps uniformly at random makes the final word a sample from
//! the Macdonald distribution, `P(a) = μ(a) / k!`. Only the current word is
//! kept in memory.

use rand::RngCore;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::bump::{insert_bump_state, Direction};
use crate::error::{Error, Result};
use crate::tableau::Chain;
use crate::wiring::WiringState;
use crate::word::Word;

/// How much checking the growth process does.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Validation {
    /// No checks.
    None,
    /// Check that the finished word is a reduced word of the target.
    #[default]
    Final,
    /// Check reducedness and the permutation after every step.
    EveryStep,
}

/// A maximal path of the growth graph. `bump_lengths[m-1]` counts the pushes
/// made after the `m`-th insertion; it tells apart parallel edges between the
/// same two words.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrowthPath {
    pub insertions: Vec<usize>,
    pub words: Vec<Word>,
    pub bump_lengths: Vec<usize>,
}

impl GrowthPath {
    pub fn final_word(&self) -> &Word {
        self.words
            .last()
            .expect("a path always holds the empty word")
    }
}

/// Incremental insert-bump along a chain.
#[derive(Clone, Debug)]
pub struct Grower<'a> {
    chain: &'a Chain,
    state: WiringState,
    done: usize,
    validation: Validation,
}

impl<'a> Grower<'a> {
    pub fn new(chain: &'a Chain, validation: Validation) -> Self {
        Self {
            chain,
            state: WiringState::new(chain.ambient()),
            done: 0,
            validation,
        }
    }

    /// Steps performed so far; also the current word length.
    pub fn steps_done(&self) -> usize {
        self.done
    }

    pub fn is_finished(&self) -> bool {
        self.done == self.chain.len()
    }

    pub fn word(&self) -> Word {
        self.state.to_word()
    }

    pub fn heights(&self) -> &[usize] {
        self.state.heights()
    }

    /// Performs step `m = steps_done() + 1` with the crossing inserted at
    /// `gap ∈ 1..=m`. Returns the number of pushes.
    pub fn step(&mut self, gap: usize) -> Result<usize> {
        let m = self.done + 1;
        if m > self.chain.len() {
            return Err(Error::InvalidSequence(format!(
                "chain has only {} steps",
                self.chain.len()
            )));
        }
        if gap == 0 || gap > m {
            return Err(Error::InvalidSequence(format!(
                "t_{m} = {gap} not in 1..={m}"
            )));
        }
        let (_, pushed) = insert_bump_state(&mut self.state, self.chain.wire(m), gap - 1)?;
        self.done = m;
        if self.validation == Validation::EveryStep {
            self.check()?;
        }
        Ok(pushed.len())
    }

    /// The current word is a reduced word of `π_m`.
    pub fn check(&self) -> Result<()> {
        let m = self.done;
        let word = self.word();
        let perm = word.permutation_in(self.chain.ambient())?;
        if &perm != self.chain.perm(m) || perm.length() != word.len() {
            return Err(Error::Invariant(format!(
                "after step {m} the word is not a reduced word of {}",
                self.chain.perm(m)
            )));
        }
        Ok(())
    }
}

/// Follow the insertion sequence `(t_1, ..., t_k)`, `t_m ∈ 1..=m`.
pub fn grow(chain: &Chain, insertions: &[usize]) -> Result<GrowthPath> {
    if insertions.len() != chain.len() {
        return Err(Error::InvalidSequence(format!(
            "expected {} insertions, got {}",
            chain.len(),
            insertions.len()
        )));
    }
    let mut grower = Grower::new(chain, Validation::EveryStep);
    let mut words = vec![Word::empty()];
    let mut bump_lengths = Vec::with_capacity(insertions.len());
    for &gap in insertions {
        bump_lengths.push(grower.step(gap)?);
        words.push(grower.word());
    }
    Ok(GrowthPath {
        insertions: insertions.to_vec(),
        words,
        bump_lengths,
    })
}

/// Recover the insertion sequence from a path's words and bump lengths by
/// running each bump backwards: start at the crossing of `{i_m, j_m}`, push up
/// once per recorded push, and read off where the crossing was inserted.
pub fn ungrow(chain: &Chain, words: &[Word], bump_lengths: &[usize]) -> Result<Vec<usize>> {
    let k = chain.len();
    if words.len() != k + 1 || bump_lengths.len() != k {
        return Err(Error::InconsistentPath {
            step: 0,
            reason: format!(
                "expected {} words and {k} bump lengths, got {} and {}",
                k + 1,
                words.len(),
                bump_lengths.len()
            ),
        });
    }
    if !words[0].is_empty() {
        return Err(Error::InconsistentPath {
            step: 0,
            reason: "path must start at the empty word".into(),
        });
    }
    let mut insertions = Vec::with_capacity(k);
    for m in 1..=k {
        let inconsistent = |reason: String| Error::InconsistentPath { step: m, reason };
        let word = &words[m];
        let reduced_for_target = word.len() == m
            && word
                .permutation_in(chain.ambient())
                .is_ok_and(|p| &p == chain.perm(m));
        if !reduced_for_target {
            return Err(inconsistent(format!(
                "{word} is not a reduced word of {}",
                chain.perm(m)
            )));
        }
        let mut state = WiringState::from_word(word, chain.ambient())?;
        let mut t = word.find_crossing(chain.pair(m))? - 1;
        for _ in 0..bump_lengths[m - 1] {
            state
                .push(t, Direction::Up)
                .map_err(|e| inconsistent(e.to_string()))?;
            t = state
                .partner(t)
                .ok_or_else(|| inconsistent("reverse bump ended early".into()))?;
        }
        if state.word_without(t) != words[m - 1] || state.wires_at(t).0 != chain.wire(m) {
            return Err(inconsistent(format!(
                "no insertion on wire {} turns {} into {word}",
                chain.wire(m),
                words[m - 1]
            )));
        }
        insertions.push(t + 1);
    }
    Ok(insertions)
}

/// Uniform integer in `1..=m` from one 64-bit draw by multiply-shift; the
/// bias is below `m / 2^64`.
#[inline]
pub fn uniform_gap<R: RngCore + ?Sized>(rng: &mut R, m: usize) -> usize {
    ((rng.next_u64() as u128 * m as u128) >> 64) as usize + 1
}

/// Draws reduced words of the chain's final permutation with probability
/// proportional to their Macdonald weight.
#[derive(Clone, Debug)]
pub struct Sampler<'a> {
    chain: &'a Chain,
    validation: Validation,
}

impl<'a> Sampler<'a> {
    pub fn new(chain: &'a Chain) -> Self {
        Self {
            chain,
            validation: Validation::Final,
        }
    }

    pub fn with_validation(mut self, validation: Validation) -> Self {
        self.validation = validation;
        self
    }

    /// Seeds a ChaCha8 generator from `seed`.
    pub fn sample(&self, seed: u64) -> Result<Word> {
        self.sample_with(&mut ChaCha8Rng::seed_from_u64(seed))
    }

    pub fn sample_with<R: RngCore + ?Sized>(&self, rng: &mut R) -> Result<Word> {
        let mut grower = Grower::new(self.chain, self.validation);
        for m in 1..=self.chain.len() {
            grower.step(uniform_gap(rng, m))?;
        }
        if self.validation == Validation::Final {
            grower.check()?;
        }
        Ok(grower.word())
    }

    /// Like [`Sampler::sample`] but records the whole path.
    pub fn sample_path(&self, seed: u64) -> Result<GrowthPath> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let insertions: Vec<usize> = (1..=self.chain.len())
            .map(|m| uniform_gap(&mut rng, m))
            .collect();
        grow(self.chain, &insertions)
    }
}

/// Every element of `{1} × {1,2} × ... × {1..k}`, in lexicographic order.
pub fn insertion_sequences(k: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut next = Some(vec![1; k]);
    std::iter::from_fn(move || {
        let cur = next.take()?;
        let mut succ = cur.clone();
        let mut i = k;
        while i > 0 {
            i -= 1;
            if succ[i] < i + 1 {
                succ[i] += 1;
                next = Some(succ);
                break;
            }
            succ[i] = 1;
        }
        Some(cur)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableau::{Partition, StandardTableau};
    use std::collections::BTreeMap;

    fn small_chain() -> Chain {
        Chain::new(&StandardTableau::new(vec![vec![1, 3], vec![2, 5], vec![4]]).unwrap()).unwrap()
    }

    fn words(v: &[&[usize]]) -> Vec<Word> {
        v.iter().map(|h| Word::new(h.to_vec())).collect()
    }

    #[test]
    fn small_chain_path() {
        let chain = small_chain();
        let path = grow(&chain, &[1, 2, 2, 1, 3]).unwrap();
        assert_eq!(
            path.words,
            words(&[
                &[],
                &[1],
                &[2, 1],
                &[2, 1, 2],
                &[3, 2, 1, 2],
                &[3, 2, 3, 1, 2]
            ])
        );
        assert_eq!(
            ungrow(&chain, &path.words, &path.bump_lengths).unwrap(),
            vec![1, 2, 2, 1, 3]
        );
    }

    #[test]
    fn small_paths() {
        let single = Chain::new(&StandardTableau::new(vec![vec![1]]).unwrap()).unwrap();
        let path = grow(&single, &[1]).unwrap();
        assert_eq!(path.final_word(), &Word::from([1]));
        assert_eq!(
            ungrow(&single, &path.words, &path.bump_lengths).unwrap(),
            vec![1]
        );

        let column_major =
            Chain::new(&StandardTableau::new(vec![vec![1, 3], vec![2]]).unwrap()).unwrap();
        assert_eq!(
            grow(&column_major, &[1, 2, 1]).unwrap().final_word(),
            &Word::from([1, 2, 1])
        );
        let row_major = Chain::new(&StandardTableau::row_major(
            &Partition::new(vec![2, 1]).unwrap(),
        ))
        .unwrap();
        assert_eq!(
            grow(&row_major, &[1, 2, 1]).unwrap().final_word(),
            &Word::from([2, 1, 2])
        );
    }

    #[test]
    fn invalid_sequences() {
        let chain = small_chain();
        assert!(grow(&chain, &[1, 3, 1, 1, 1]).is_err());
        assert!(grow(&chain, &[1, 1]).is_err());
        assert!(grow(&chain, &[0, 1, 1, 1, 1]).is_err());
        let path = grow(&chain, &[1, 2, 2, 1, 3]).unwrap();
        let mut bad = path.words.clone();
        bad.swap(3, 4);
        assert!(ungrow(&chain, &bad, &path.bump_lengths).is_err());
        let mut lengths = path.bump_lengths.clone();
        lengths[2] += 3;
        assert!(ungrow(&chain, &path.words, &lengths).is_err());
    }

    #[test]
    fn insertion_sequence_enumeration() {
        let all: Vec<_> = insertion_sequences(3).collect();
        assert_eq!(all.len(), 6);
        assert_eq!(all[0], vec![1, 1, 1]);
        assert_eq!(all[5], vec![1, 2, 3]);
        assert_eq!(insertion_sequences(0).count(), 1);
        assert_eq!(insertion_sequences(5).count(), 120);
    }

    #[test]
    fn exact_distribution_for_two_one() {
        let chain = Chain::new(&StandardTableau::row_major(
            &Partition::new(vec![2, 1]).unwrap(),
        ))
        .unwrap();
        let mut counts: BTreeMap<Word, u64> = BTreeMap::new();
        for seq in insertion_sequences(3) {
            *counts
                .entry(grow(&chain, &seq).unwrap().final_word().clone())
                .or_insert(0) += 1;
        }
        assert_eq!(counts.get(&Word::from([1, 2, 1])), Some(&2));
        assert_eq!(counts.get(&Word::from([2, 1, 2])), Some(&4));
    }

    #[test]
    fn sampler_is_deterministic_per_seed() {
        let chain = Chain::new(&StandardTableau::row_major(&Partition::staircase(6))).unwrap();
        let sampler = Sampler::new(&chain).with_validation(Validation::EveryStep);
        let a = sampler.sample(7).unwrap();
        assert_eq!(a, sampler.sample(7).unwrap());
        assert_eq!(a.len(), 15);
        assert!(a.is_reduced());
        let path = sampler.sample_path(7).unwrap();
        assert_eq!(path.final_word(), &a);
        let one = Chain::new(&StandardTableau::new(vec![vec![1]]).unwrap()).unwrap();
        assert_eq!(Sampler::new(&one).sample(3).unwrap(), Word::from([1]));
    }

    #[test]
    fn uniform_gap_range() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let mut seen = [0u32; 4];
        for _ in 0..4000 {
            let g = uniform_gap(&mut rng, 4);
            assert!((1..=4).contains(&g));
            seen[g - 1] += 1;
        }
        assert!(seen.iter().all(|&c| c > 800));
    }
}
