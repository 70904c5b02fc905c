//! Permutations in one-line notation, inversions, Rothe diagrams and
//! dominant permutations.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tableau::Partition;

/// A bijection of `{1..n}`; position `i` (1-based) holds `π(i)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    one_line: Vec<usize>,
}

impl Permutation {
    pub fn new(one_line: Vec<usize>) -> Result<Self> {
        let n = one_line.len();
        let mut seen = vec![false; n + 1];
        for &v in &one_line {
            if v == 0 || v > n || seen[v] {
                return Err(Error::NotAPermutation {
                    n,
                    values: one_line,
                });
            }
            seen[v] = true;
        }
        Ok(Self { one_line })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            one_line: (1..=n).collect(),
        }
    }

    /// The longest element `n, n-1, ..., 1`.
    pub fn reverse(n: usize) -> Self {
        Self {
            one_line: (1..=n).rev().collect(),
        }
    }

    /// The transposition exchanging the values `a` and `b` in `S_n`.
    pub fn transposition(a: usize, b: usize, n: usize) -> Result<Self> {
        if a == 0 || b == 0 || a > n || b > n {
            return Err(Error::AmbientTooSmall {
                n,
                needed: a.max(b),
            });
        }
        let mut one_line: Vec<usize> = (1..=n).collect();
        one_line.swap(a - 1, b - 1);
        Ok(Self { one_line })
    }

    /// The elementary transposition `s_i = (i, i+1)`.
    pub fn simple(i: usize, n: usize) -> Result<Self> {
        Self::transposition(i, i + 1, n)
    }

    pub fn n(&self) -> usize {
        self.one_line.len()
    }

    pub fn one_line(&self) -> &[usize] {
        &self.one_line
    }

    /// `π(x)` for `1 <= x <= n`.
    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.one_line[x - 1]
    }

    /// `x ↦ self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        Ok(Permutation {
            one_line: other.one_line.iter().map(|&x| self.apply(x)).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.n()];
        for (i, &v) in self.one_line.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { one_line: inv }
    }

    /// Embeds into `S_m` for `m >= n`, fixing the new points.
    pub fn extend_to(&self, m: usize) -> Result<Permutation> {
        if m < self.n() {
            return Err(Error::AmbientTooSmall {
                n: m,
                needed: self.n(),
            });
        }
        let mut one_line = self.one_line.clone();
        one_line.extend(self.n() + 1..=m);
        Ok(Permutation { one_line })
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        inversion_count(&self.one_line)
    }

    pub fn is_identity(&self) -> bool {
        self.one_line.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// `c_i = #{j > i : π(j) < π(i)}`.
    pub fn lehmer_code(&self) -> Vec<usize> {
        let p = &self.one_line;
        (0..p.len())
            .map(|i| p[i + 1..].iter().filter(|&&v| v < p[i]).count())
            .collect()
    }

    /// The cells `(π(j), i)` for every inversion `i < j`, `π(i) > π(j)`.
    pub fn rothe_diagram(&self) -> RotheDiagram {
        let p = &self.one_line;
        let mut cells = BTreeSet::new();
        for i in 0..p.len() {
            for j in i + 1..p.len() {
                if p[i] > p[j] {
                    cells.insert((p[j], i + 1));
                }
            }
        }
        RotheDiagram { cells }
    }

    /// 132-avoidance.
    pub fn is_dominant(&self) -> bool {
        let p = &self.one_line;
        let mut prefix_min = usize::MAX;
        for j in 0..p.len() {
            if prefix_min < p[j] && p[j + 1..].iter().any(|&v| prefix_min < v && v < p[j]) {
                return false;
            }
            prefix_min = prefix_min.min(p[j]);
        }
        true
    }

    /// The unique dominant permutation of `S_n` whose Rothe diagram has shape
    /// `shape`; its Lehmer code is the conjugate partition.
    pub fn dominant_from_partition(shape: &Partition, n: usize) -> Result<Permutation> {
        let needed = shape.min_ambient();
        if n < needed {
            return Err(Error::AmbientTooSmall { n, needed });
        }
        let conj = shape.conjugate();
        let mut unused: Vec<usize> = (1..=n).collect();
        let mut one_line = Vec::with_capacity(n);
        for i in 0..n {
            let c = conj.parts().get(i).copied().unwrap_or(0);
            one_line.push(unused.remove(c));
        }
        Ok(Permutation { one_line })
    }

    /// Wire pairs `{r < s}` that cross in every reduced word of `self`: wire
    /// `r` ends on row `π⁻¹(r)`.
    pub fn crossing_pairs(&self) -> BTreeSet<(usize, usize)> {
        let inv = self.inverse();
        let n = self.n();
        let mut pairs = BTreeSet::new();
        for r in 1..=n {
            for s in r + 1..=n {
                if inv.apply(r) > inv.apply(s) {
                    pairs.insert((r, s));
                }
            }
        }
        pairs
    }

    /// Descents `i` with `π(i) > π(i+1)`.
    pub fn descents(&self) -> Vec<usize> {
        self.one_line
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] > w[1])
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// All permutations of `S_n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Permutation {
                one_line: cur.clone(),
            });
            // next lexicographic permutation
            let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) else {
                break;
            };
            let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
            cur.swap(i - 1, j);
            cur[i..].reverse();
        }
        out
    }
}

pub(crate) fn inversion_count(values: &[usize]) -> usize {
    let mut count = 0;
    for i in 0..values.len() {
        for j in i + 1..values.len() {
            if values[i] > values[j] {
                count += 1;
            }
        }
    }
    count
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Permutation::new(v)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.one_line
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() <= 9 {
            for v in &self.one_line {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.one_line.iter().map(|v| v.to_string()).collect();
            f.write_str(&parts.join(" "))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

/// Accepts `4213` (single digits) or whitespace/comma separated values.
impl FromStr for Permutation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let values: Option<Vec<usize>> = if s.contains(|c: char| c.is_whitespace() || c == ',') {
            s.split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| t.parse().ok())
                .collect()
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize))
                .collect()
        };
        let values = values.ok_or_else(|| Error::Parse(format!("bad permutation {s:?}")))?;
        Permutation::new(values)
    }
}

/// Cells `(row, column)` of a Rothe diagram, 1-based matrix coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RotheDiagram {
    cells: BTreeSet<(usize, usize)>,
}

impl RotheDiagram {
    pub fn cells(&self) -> &BTreeSet<(usize, usize)> {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// The partition whose Young diagram (anchored at `(1,1)`) equals the cell
    /// set, if there is one.
    pub fn young_shape(&self) -> Option<Partition> {
        let mut rows: Vec<usize> = Vec::new();
        for &(r, _) in &self.cells {
            if rows.len() < r {
                rows.resize(r, 0);
            }
            rows[r - 1] += 1;
        }
        let shape = Partition::new(rows.clone()).ok()?;
        let expected: BTreeSet<(usize, usize)> = shape.cells().collect();
        (expected == self.cells).then_some(shape)
    }
}
