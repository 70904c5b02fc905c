//! Partitions, standard Young tableaux and the chain of dominant
//! permutations a tableau drives.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Trailing zero parts are dropped; anything else out of order is an error.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// `(n-1, n-2, ..., 1)`, the shape of the longest element of `S_n`.
    pub fn staircase(n: usize) -> Self {
        Self {
            parts: (1..n).rev().collect(),
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn num_rows(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width)
            .map(|c| self.parts.iter().filter(|&&p| p >= c).count())
            .collect();
        Partition { parts }
    }

    /// Cells `(row, col)` in row-major order, 1-based.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (1..=len).map(move |c| (r + 1, c)))
    }

    /// Smallest `n` such that a dominant permutation of `S_n` has this shape:
    /// `max_i (λ'_i + i)`.
    pub fn min_ambient(&self) -> usize {
        self.conjugate()
            .parts
            .iter()
            .enumerate()
            .map(|(i, &c)| c + i + 1)
            .max()
            .unwrap_or(0)
    }

    /// Whether the Young diagram of `self` contains that of `other`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.parts.len() <= self.parts.len()
            && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// Rows whose last cell can be removed, 1-based.
    pub fn removable_rows(&self) -> Vec<usize> {
        (0..self.parts.len())
            .filter(|&r| r + 1 == self.parts.len() || self.parts[r] > self.parts[r + 1])
            .map(|r| r + 1)
            .collect()
    }

    pub fn remove_from_row(&self, row: usize) -> Result<Partition> {
        let mut parts = self.parts.clone();
        if row == 0 || row > parts.len() {
            return Err(Error::InvalidPartition(parts));
        }
        parts[row - 1] -= 1;
        Partition::new(parts)
    }

    /// All partitions of `k`, in reverse lexicographic order.
    pub fn all_of(k: usize) -> Vec<Partition> {
        fn go(remaining: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for part in (1..=remaining.min(max)).rev() {
                cur.push(part);
                go(remaining - part, part, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(k, k, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions with at most `max_cells` cells.
    pub fn all_up_to(max_cells: usize) -> Vec<Partition> {
        (0..=max_cells).flat_map(Partition::all_of).collect()
    }

    /// All partitions that are shapes of dominant permutations of `S_n`.
    pub fn all_fitting_staircase(n: usize) -> Vec<Partition> {
        let max = n * n.saturating_sub(1) / 2;
        Partition::all_up_to(max)
            .into_iter()
            .filter(|p| p.min_ambient() <= n)
            .collect()
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{self}")
    }
}

/// Comma separated parts, e.g. `2,2,1`; the empty string (or `()`) is `∅`.
impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = s
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| Error::Parse(format!("bad partition {s:?}: {e}")))?;
        Partition::new(parts)
    }
}

/// A standard filling of a Young diagram by `1..k`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct StandardTableau {
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let lens: Vec<usize> = rows.iter().map(Vec::len).collect();
        Partition::new(lens.clone())
            .ok()
            .filter(|p| p.num_rows() == rows.len())
            .ok_or_else(|| Error::InvalidTableau(format!("row lengths {lens:?}")))?;
        let k: usize = lens.iter().sum();
        let mut seen = vec![false; k + 1];
        for (r, row) in rows.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                if v == 0 || v > k || seen[v] {
                    return Err(Error::InvalidTableau(format!(
                        "entry {v} repeated or out of 1..={k}"
                    )));
                }
                seen[v] = true;
                if c > 0 && row[c - 1] >= v {
                    return Err(Error::InvalidTableau(format!(
                        "row {} not increasing",
                        r + 1
                    )));
                }
                if r > 0 && rows[r - 1][c] >= v {
                    return Err(Error::InvalidTableau(format!(
                        "column {} not increasing",
                        c + 1
                    )));
                }
            }
        }
        Ok(Self { rows })
    }

    /// Fill left-to-right, top-to-bottom.
    pub fn row_major(shape: &Partition) -> Self {
        let mut next = 1;
        let rows = shape
            .parts()
            .iter()
            .map(|&len| {
                let row: Vec<usize> = (next..next + len).collect();
                next += len;
                row
            })
            .collect();
        Self { rows }
    }

    /// Every standard tableau of the given shape.
    pub fn enumerate(shape: &Partition, max_cells: usize) -> Result<Vec<StandardTableau>> {
        if shape.size() > max_cells {
            return Err(Error::BoundExceeded {
                what: "tableau size",
                value: shape.size(),
                bound: max_cells,
            });
        }
        // place k, k-1, ..., 1 into removable corners
        fn go(shape: &Partition, filling: &mut Vec<Vec<usize>>, out: &mut Vec<StandardTableau>) {
            let k = shape.size();
            if k == 0 {
                out.push(StandardTableau {
                    rows: filling.clone(),
                });
                return;
            }
            for row in shape.removable_rows() {
                let col = shape.parts()[row - 1];
                filling[row - 1][col - 1] = k;
                let smaller = shape.remove_from_row(row).expect("corner removal");
                go(&smaller, filling, out);
            }
        }
        let mut filling: Vec<Vec<usize>> = shape.parts().iter().map(|&l| vec![0; l]).collect();
        let mut out = Vec::new();
        go(shape, &mut filling, &mut out);
        out.sort_by(|a, b| a.rows.cmp(&b.rows));
        Ok(out)
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition {
            parts: self.rows.iter().map(Vec::len).collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Row containing `m`, which is the wire `i_m` receiving the `m`-th
    /// insertion.
    pub fn insertion_wire(&self, m: usize) -> Result<usize> {
        self.rows
            .iter()
            .position(|row| row.contains(&m))
            .map(|r| r + 1)
            .ok_or(Error::PositionOutOfRange {
                position: m,
                len: self.size(),
            })
    }

    /// `λ_0 = ∅ < λ_1 < ... < λ_k`, the shapes of the subtableaux with
    /// entries at most `m`.
    pub fn chain(&self) -> Vec<Partition> {
        (0..=self.size())
            .map(|m| {
                let parts = self
                    .rows
                    .iter()
                    .map(|row| row.iter().filter(|&&v| v <= m).count())
                    .collect();
                Partition::new(parts).expect("subtableau of a standard tableau")
            })
            .collect()
    }
}

impl TryFrom<Vec<Vec<usize>>> for StandardTableau {
    type Error = Error;
    fn try_from(v: Vec<Vec<usize>>) -> Result<Self> {
        StandardTableau::new(v)
    }
}

impl From<StandardTableau> for Vec<Vec<usize>> {
    fn from(t: StandardTableau) -> Self {
        t.rows
    }
}

impl fmt::Debug for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "StandardTableau{:?}", self.rows)
    }
}

/// The unordered pair `{r, s}`, `r < s`, with `next ∘ prev⁻¹ = (r s)` as a
/// permutation of wire labels.
pub fn wire_pair(prev: &Permutation, next: &Permutation) -> Result<(usize, usize)> {
    let sigma = next.compose(&prev.inverse())?;
    let moved: Vec<usize> = (1..=sigma.n()).filter(|&x| sigma.apply(x) != x).collect();
    match moved[..] {
        [r, s] => Ok((r, s)),
        _ => Err(Error::NotATransposition),
    }
}

/// Everything the growth process needs to know about a tableau: the chain of
/// shapes, the dominant permutations `π_m` (all in one ambient `S_n`), the
/// insertion wires `i_m` and the wire pairs `{i_m, j_m}`.
#[derive(Clone, Debug)]
pub struct Chain {
    tableau: StandardTableau,
    ambient: usize,
    shapes: Vec<Partition>,
    perms: Vec<Permutation>,
    wires: Vec<usize>,
    pairs: Vec<(usize, usize)>,
}

impl Chain {
    /// Uses the smallest ambient size that fits the final shape, which also
    /// fits every shape of the chain.
    pub fn new(tableau: &StandardTableau) -> Result<Self> {
        let ambient = tableau.shape().min_ambient().max(1);
        Self::with_ambient(tableau, ambient)
    }

    pub fn with_ambient(tableau: &StandardTableau, ambient: usize) -> Result<Self> {
        let shapes = tableau.chain();
        let perms = shapes
            .iter()
            .map(|s| Permutation::dominant_from_partition(s, ambient))
            .collect::<Result<Vec<_>>>()?;
        let mut wires = Vec::with_capacity(tableau.size());
        let mut pairs = Vec::with_capacity(tableau.size());
        for m in 1..=tableau.size() {
            let wire = tableau.insertion_wire(m)?;
            let pair = wire_pair(&perms[m - 1], &perms[m])?;
            if pair.0 != wire {
                return Err(Error::Invariant(format!(
                    "step {m}: wire pair {pair:?} does not start at insertion wire {wire}"
                )));
            }
            wires.push(wire);
            pairs.push(pair);
        }
        Ok(Self {
            tableau: tableau.clone(),
            ambient,
            shapes,
            perms,
            wires,
            pairs,
        })
    }

    pub fn tableau(&self) -> &StandardTableau {
        &self.tableau
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// Number of steps `k = |λ|`.
    pub fn len(&self) -> usize {
        self.wires.len()
    }

    pub fn is_empty(&self) -> bool {
        self.wires.is_empty()
    }

    pub fn shape(&self, m: usize) -> &Partition {
        &self.shapes[m]
    }

    pub fn perm(&self, m: usize) -> &Permutation {
        &self.perms[m]
    }

    /// `i_m` for `1 <= m <= k`.
    pub fn wire(&self, m: usize) -> usize {
        self.wires[m - 1]
    }

    /// `{r_m, s_m}` for `1 <= m <= k`.
    pub fn pair(&self, m: usize) -> (usize, usize) {
        self.pairs[m - 1]
    }

    pub fn final_perm(&self) -> &Permutation {
        self.perms.last().expect("chain always has λ_0")
    }
}
