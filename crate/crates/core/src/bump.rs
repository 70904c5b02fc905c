//! Push and delete operators, Little bumps, the bump-delete operator and its
//! adjoint, the insert-bump.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::wiring::WiringState;
use crate::word::{FormalSum, Word};

pub use crate::wiring::Direction;

/// Record of one Little bump. Positions are 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BumpTrace {
    /// Positions in the order they were pushed.
    pub pushed: Vec<usize>,
    /// The reduced word the bump stops at.
    pub terminal: Word,
    /// The word after each push (only when requested).
    pub stages: Vec<Word>,
}

impl BumpTrace {
    pub fn last_pushed(&self) -> Option<usize> {
        self.pushed.last().copied()
    }
}

/// Record of one insert-bump. Positions are 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InsertTrace {
    pub word: Word,
    /// Height of the inserted crossing (the row of the chosen wire at the gap).
    pub height: usize,
    /// Positions pushed down after the insertion, in order.
    pub pushed: Vec<usize>,
}

impl InsertTrace {
    /// Where the bump came to rest: the last pushed position, or the gap
    /// itself if no push was needed.
    pub fn terminal_position(&self, gap: usize) -> usize {
        self.pushed.last().copied().unwrap_or(gap)
    }
}

pub fn push_up(w: &Word, t: usize) -> Result<Word> {
    w.push_up(t)
}

pub fn push_down(w: &Word, t: usize) -> Result<Word> {
    w.push_down(t)
}

pub fn delete_at(w: &Word, t: usize) -> Result<Word> {
    w.delete_at(t)
}

/// `P↑_t w + D_t w`.
pub fn push_delete(w: &Word, t: usize) -> Result<FormalSum> {
    let mut sum = FormalSum::single(w.push_up(t)?);
    sum.add(w.delete_at(t)?, 1);
    Ok(sum)
}

/// Push at `t`, move to the defect, repeat until the word is reduced. The
/// callback sees the state and the (0-based) position before every push.
pub(crate) fn run_bump<F>(
    state: &mut WiringState,
    start: usize,
    dir: Direction,
    mut before_push: F,
) -> Result<Vec<usize>>
where
    F: FnMut(&WiringState, usize),
{
    let limit = state.len();
    let mut pushed = Vec::new();
    let mut t = start;
    loop {
        if pushed.len() == limit {
            return Err(Error::Invariant(format!(
                "bump did not terminate within {limit} pushes"
            )));
        }
        before_push(state, t);
        state.push(t, dir)?;
        pushed.push(t);
        match state.partner(t) {
            Some(next) => t = next,
            None => return Ok(pushed),
        }
    }
}

/// Insert a crossing at `gap` (0-based) crossing `wire` with the wire below
/// it, then push down at successive defects until reduced. Returns the
/// insertion height and the 0-based pushed positions.
pub(crate) fn insert_bump_state(
    state: &mut WiringState,
    wire: usize,
    gap: usize,
) -> Result<(usize, Vec<usize>)> {
    if wire == 0 || wire > state.rows() {
        return Err(Error::NoSuchWire(wire));
    }
    let row = state.row_of(wire, gap)?;
    if row + 1 > state.rows() {
        return Err(Error::NoWireBelow { wire, row });
    }
    state.insert(gap, row)?;
    let mut pushed = Vec::new();
    let mut t = gap;
    while let Some(next) = state.partner(t) {
        if pushed.len() > state.len() {
            return Err(Error::Invariant("insert-bump did not terminate".into()));
        }
        t = next;
        state.push(t, Direction::Down)?;
        pushed.push(t);
    }
    Ok((row, pushed))
}

fn require_nearly_reduced(w: &Word, t: usize) -> Result<()> {
    if w.is_nearly_reduced(t)? {
        Ok(())
    } else {
        Err(Error::NotNearlyReduced(t))
    }
}

/// The Little bump of `w` at `t` in direction `dir`; `w` must be nearly
/// reduced at `t`. Downward bumps are not bounded by any ambient size.
pub fn little_bump(w: &Word, t: usize, dir: Direction) -> Result<BumpTrace> {
    little_bump_with(w, t, dir, false)
}

/// [`little_bump`], optionally keeping the word after every push.
pub fn little_bump_with(
    w: &Word,
    t: usize,
    dir: Direction,
    keep_stages: bool,
) -> Result<BumpTrace> {
    require_nearly_reduced(w, t)?;
    // each crossing moves at most once, so one spare row suffices
    let mut state = WiringState::from_word(w, w.max_height() + 2)?;
    let mut stages = Vec::new();
    let mut pushed = Vec::new();
    let mut pos = t - 1;
    loop {
        if pushed.len() == state.len() {
            return Err(Error::Invariant("bump did not terminate".into()));
        }
        state.push(pos, dir)?;
        pushed.push(pos + 1);
        if keep_stages {
            stages.push(state.to_word());
        }
        match state.partner(pos) {
            Some(next) => pos = next,
            None => break,
        }
    }
    Ok(BumpTrace {
        pushed,
        terminal: state.to_word(),
        stages,
    })
}

/// Upward bump from `t`, collecting `D_t` of the current word before every
/// push. `w` must be reduced and nearly reduced at `t`.
pub fn bump_delete(w: &Word, t: usize) -> Result<FormalSum> {
    bump_delete_traced(w, t).map(|(sum, _)| sum)
}

/// [`bump_delete`] together with the trace of the underlying upward bump.
pub fn bump_delete_traced(w: &Word, t: usize) -> Result<(FormalSum, BumpTrace)> {
    if !w.is_reduced() {
        return Err(Error::Invariant(format!(
            "bump-delete needs a reduced word, got {w}"
        )));
    }
    require_nearly_reduced(w, t)?;
    let mut state = WiringState::from_word(w, w.max_height() + 1)?;
    let mut sum = FormalSum::new();
    let mut stages = Vec::new();
    let pushed = run_bump(&mut state, t - 1, Direction::Up, |s, p| {
        let deleted = s.word_without(p);
        stages.push(deleted.clone());
        sum.add(deleted, 1);
    })?;
    let trace = BumpTrace {
        pushed: pushed.iter().map(|p| p + 1).collect(),
        terminal: state.to_word(),
        stages,
    };
    Ok((sum, trace))
}

/// Insert a crossing at `gap` (`1..=|w|+1`) on `wire`, crossing it with the
/// wire directly below, then push down at successive defects until the word
/// is reduced. Heights stay below `ambient`.
pub fn insert_bump_at(w: &Word, wire: usize, gap: usize, ambient: usize) -> Result<InsertTrace> {
    if !w.is_reduced() {
        return Err(Error::Invariant(format!(
            "insert-bump needs a reduced word, got {w}"
        )));
    }
    if gap == 0 || gap > w.len() + 1 {
        return Err(Error::PositionOutOfRange {
            position: gap,
            len: w.len() + 1,
        });
    }
    let mut state = WiringState::from_word(w, ambient)?;
    let (height, pushed) = insert_bump_state(&mut state, wire, gap - 1)?;
    Ok(InsertTrace {
        word: state.to_word(),
        height,
        pushed: pushed.iter().map(|p| p + 1).collect(),
    })
}

/// `I(π, r)` and `S(π, r)`: the `i < r` (including the zeroth point) and
/// `s > r` for which right multiplication by the transposition of positions
/// raises the length by exactly one.
pub fn index_sets(p: &Permutation, r: usize) -> (BTreeSet<usize>, BTreeSet<usize>) {
    let n = p.n();
    let value = |x: usize| if x == 0 { 0 } else { p.apply(x) };
    let covers = |i: usize, j: usize| {
        let (a, b) = (value(i), value(j));
        a < b && !(i + 1..j).any(|k| a < value(k) && value(k) < b)
    };
    if r == 0 || r > n {
        return (BTreeSet::new(), BTreeSet::new());
    }
    let below = (0..r).filter(|&i| covers(i, r)).collect();
    let above = (r + 1..=n).filter(|&s| covers(r, s)).collect();
    (below, above)
}
