//! Words, their wiring diagrams, nearly-reduced positions and defects, and
//! formal sums of words.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{inversion_count, Permutation};

/// A finite sequence of crossing heights `(a_1, ..., a_k)`.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(Vec<usize>);

/// One crossing of a wiring diagram. `upper` and `lower` are the wires on rows
/// `height` and `height + 1` just before the crossing.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Crossing {
    pub position: usize,
    pub height: usize,
    pub upper: usize,
    pub lower: usize,
}

impl Crossing {
    /// The wire pair as `(min, max)`.
    pub fn pair(&self) -> (usize, usize) {
        (self.upper.min(self.lower), self.upper.max(self.lower))
    }
}

impl Word {
    pub fn new(heights: Vec<usize>) -> Self {
        Self(heights)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn heights(&self) -> &[usize] {
        &self.0
    }

    pub fn into_heights(self) -> Vec<usize> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Height at 1-based position `t`.
    pub fn height(&self, t: usize) -> Result<usize> {
        self.check_position(t)?;
        Ok(self.0[t - 1])
    }

    pub fn max_height(&self) -> usize {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// Number of rows below the zeroth one needed to draw the word.
    pub fn min_ambient(&self) -> usize {
        if self.0.is_empty() {
            1
        } else {
            self.max_height() + 1
        }
    }

    pub(crate) fn check_position(&self, t: usize) -> Result<()> {
        if t == 0 || t > self.0.len() {
            Err(Error::PositionOutOfRange {
                position: t,
                len: self.0.len(),
            })
        } else {
            Ok(())
        }
    }

    /// Decrement the height at `t`.
    pub fn push_up(&self, t: usize) -> Result<Word> {
        self.check_position(t)?;
        if self.0[t - 1] == 0 {
            return Err(Error::PushAtZero(t));
        }
        let mut heights = self.0.clone();
        heights[t - 1] -= 1;
        Ok(Word(heights))
    }

    /// Increment the height at `t`.
    pub fn push_down(&self, t: usize) -> Result<Word> {
        self.check_position(t)?;
        let mut heights = self.0.clone();
        heights[t - 1] += 1;
        Ok(Word(heights))
    }

    /// Remove position `t`.
    pub fn delete_at(&self, t: usize) -> Result<Word> {
        self.check_position(t)?;
        let mut heights = self.0.clone();
        heights.remove(t - 1);
        Ok(Word(heights))
    }

    /// Insert a crossing of the given height so that it becomes position `t`,
    /// `1 <= t <= len + 1`.
    pub fn insert_at(&self, t: usize, height: usize) -> Result<Word> {
        if t == 0 || t > self.0.len() + 1 {
            return Err(Error::PositionOutOfRange {
                position: t,
                len: self.0.len() + 1,
            });
        }
        let mut heights = self.0.clone();
        heights.insert(t - 1, height);
        Ok(Word(heights))
    }

    /// Add `x` to every height.
    pub fn shifted(&self, x: usize) -> Word {
        Word(self.0.iter().map(|&h| h + x).collect())
    }

    /// Subtract `x` from every height, if every height is at least `x`.
    pub fn unshifted(&self, x: usize) -> Option<Word> {
        self.0
            .iter()
            .map(|&h| h.checked_sub(x))
            .collect::<Option<Vec<_>>>()
            .map(Word)
    }

    /// Row occupancy at the right end of the diagram, rows `0..=max_height+1`
    /// (wire `r` starts on row `r`, the zeroth wire included).
    pub fn final_rows(&self) -> Vec<usize> {
        let mut rows: Vec<usize> = (0..=self.max_height() + 1).collect();
        for &h in &self.0 {
            rows.swap(h, h + 1);
        }
        rows
    }

    /// The permutation of `S_n` drawn by the word: row `r` at the right end
    /// holds wire `π(r)`. Heights must lie in `1..n`.
    pub fn permutation_in(&self, n: usize) -> Result<Permutation> {
        for (i, &h) in self.0.iter().enumerate() {
            if h == 0 || h >= n {
                return Err(Error::HeightOutOfRange {
                    position: i + 1,
                    height: h,
                    n,
                });
            }
        }
        let mut rows: Vec<usize> = (1..=n).collect();
        for &h in &self.0 {
            rows.swap(h - 1, h);
        }
        Permutation::new(rows)
    }

    /// [`Word::permutation_in`] with the smallest ambient that fits.
    pub fn permutation(&self) -> Result<Permutation> {
        self.permutation_in(self.min_ambient())
    }

    /// No pair of wires crosses twice. Heights of 0 are allowed.
    pub fn is_reduced(&self) -> bool {
        inversion_count(&self.final_rows()) == self.0.len()
    }

    /// Deleting position `t` leaves a reduced word.
    pub fn is_nearly_reduced(&self, t: usize) -> Result<bool> {
        Ok(self.delete_at(t)?.is_reduced())
    }

    pub fn crossings(&self) -> Vec<Crossing> {
        let mut rows: Vec<usize> = (0..=self.max_height() + 1).collect();
        self.0
            .iter()
            .enumerate()
            .map(|(i, &h)| {
                let c = Crossing {
                    position: i + 1,
                    height: h,
                    upper: rows[h],
                    lower: rows[h + 1],
                };
                rows.swap(h, h + 1);
                c
            })
            .collect()
    }

    /// Height and wire pair of the crossing at position `t`.
    pub fn crossing_at(&self, t: usize) -> Result<(usize, (usize, usize))> {
        self.check_position(t)?;
        let c = self.crossings()[t - 1];
        Ok((c.height, c.pair()))
    }

    /// The unique `t' != t` at which a non-reduced word, nearly reduced at
    /// `t`, is also nearly reduced. It is the other crossing of the wire pair
    /// crossing at `t`.
    pub fn defect(&self, t: usize) -> Result<usize> {
        if !self.is_nearly_reduced(t)? {
            return Err(Error::NotNearlyReduced(t));
        }
        if self.is_reduced() {
            return Err(Error::AlreadyReduced);
        }
        let crossings = self.crossings();
        let pair = crossings[t - 1].pair();
        crossings
            .iter()
            .find(|c| c.position != t && c.pair() == pair)
            .map(|c| c.position)
            .ok_or_else(|| Error::Invariant(format!("no second crossing of {pair:?} in {self}")))
    }

    /// Position where wires `pair` cross (first one, if they cross repeatedly).
    pub fn find_crossing(&self, pair: (usize, usize)) -> Result<usize> {
        let pair = (pair.0.min(pair.1), pair.0.max(pair.1));
        self.crossings()
            .iter()
            .find(|c| c.pair() == pair)
            .map(|c| c.position)
            .ok_or(Error::PairDoesNotCross(pair.0, pair.1))
    }

    /// Positions `j` with `a_j > a_{j+1}`.
    pub fn descents(&self) -> Vec<usize> {
        self.0
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] > w[1])
            .map(|(j, _)| j + 1)
            .collect()
    }

    /// `(3,1,2,1)`.
    pub fn to_tuple_string(&self) -> String {
        let parts: Vec<String> = self.0.iter().map(|h| h.to_string()).collect();
        format!("({})", parts.join(","))
    }
}

impl From<Vec<usize>> for Word {
    fn from(v: Vec<usize>) -> Self {
        Word(v)
    }
}

impl<const N: usize> From<[usize; N]> for Word {
    fn from(v: [usize; N]) -> Self {
        Word(v.to_vec())
    }
}

/// Space separated heights, `3 1 2 1`.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|h| h.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_tuple_string())
    }
}

/// Accepts `3 1 2 1`, `(3,1,2,1)` and `[3,1,2,1]`.
impl FromStr for Word {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .trim_matches(|c| matches!(c, '(' | ')' | '[' | ']'));
        inner
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(Word)
            .map_err(|e| Error::Parse(format!("bad word {s:?}: {e}")))
    }
}

/// The wiring diagram of a word over rows `0..=rows`.
#[derive(Clone, Debug)]
pub struct WiringDiagram {
    rows: usize,
    heights: Vec<usize>,
    crossings: Vec<Crossing>,
}

impl WiringDiagram {
    pub fn new(word: &Word) -> Self {
        Self::with_rows(word, word.min_ambient())
    }

    /// `rows` is the last row index; it is raised if the word needs more.
    pub fn with_rows(word: &Word, rows: usize) -> Self {
        Self {
            rows: rows.max(word.max_height() + 1),
            heights: word.heights().to_vec(),
            crossings: word.crossings(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    /// Row to wire map after the first `t` crossings, rows `0..=rows`.
    pub fn occupancy(&self, t: usize) -> Vec<usize> {
        let mut rows: Vec<usize> = (0..=self.rows).collect();
        for &h in &self.heights[..t.min(self.heights.len())] {
            rows.swap(h, h + 1);
        }
        rows
    }

    /// Row of `wire` after each of `0..=k` crossings.
    pub fn trajectory(&self, wire: usize) -> Vec<usize> {
        let mut row = wire;
        let mut out = Vec::with_capacity(self.heights.len() + 1);
        out.push(row);
        for &h in &self.heights {
            if row == h {
                row = h + 1;
            } else if row == h + 1 {
                row = h;
            }
            out.push(row);
        }
        out
    }

    /// Whether no pair of wires crosses twice.
    pub fn is_reduced(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.crossings.iter().all(|c| seen.insert(c.pair()))
    }
}

/// A finitely supported non-negative integer combination of words.
#[derive(Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormalSum {
    terms: BTreeMap<Word, u64>,
}

impl FormalSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(word: Word) -> Self {
        let mut s = Self::new();
        s.add(word, 1);
        s
    }

    pub fn add(&mut self, word: Word, multiplicity: u64) {
        if multiplicity > 0 {
            *self.terms.entry(word).or_insert(0) += multiplicity;
        }
    }

    pub fn merge(&mut self, other: &FormalSum) {
        for (w, &m) in &other.terms {
            self.add(w.clone(), m);
        }
    }

    /// `⟨word, self⟩`.
    pub fn coefficient(&self, word: &Word) -> u64 {
        self.terms.get(word).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Word, u64)> {
        self.terms.iter().map(|(w, &m)| (w, m))
    }

    /// Number of distinct words.
    pub fn support_len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum of multiplicities.
    pub fn total(&self) -> u64 {
        self.terms.values().sum()
    }

    /// `Σ multiplicity · Π_t (x + a_t)`.
    pub fn weight(&self, x: u64) -> Result<u64> {
        self.terms.iter().try_fold(0u64, |acc, (w, &m)| {
            let wt = crate::oracle::fk_weight(w, x)?;
            wt.checked_mul(m)
                .and_then(|v| v.checked_add(acc))
                .ok_or(Error::Overflow("formal sum weight"))
        })
    }

    pub fn map_words<F: FnMut(&Word) -> Option<Word>>(&self, mut f: F) -> Option<FormalSum> {
        let mut out = FormalSum::new();
        for (w, &m) in &self.terms {
            out.add(f(w)?, m);
        }
        Some(out)
    }
}

impl fmt::Debug for FormalSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, &m)| {
                if m == 1 {
                    format!("{w:?}")
                } else {
                    format!("{m}·{w:?}")
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}
