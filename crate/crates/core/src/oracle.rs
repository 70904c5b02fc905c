//! Brute-force ground truth: reduced-word enumeration, weights, reverse
//! plane partitions and the two weighted-count identities.
//!
//! Nothing here calls into the bump engine.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::tableau::Partition;
use crate::word::Word;

/// Longest permutation length [`enumerate_reduced`] accepts by default.
pub const MAX_ENUMERATION_LENGTH: usize = 12;
/// Largest shape the verifiers accept (`k!` for `k <= 20` fits in `u64`).
pub const MAX_VERIFY_CELLS: usize = 10;
/// Largest `x` for the reverse plane partition brute force.
pub const MAX_RPP_X: u64 = 8;

/// Every reduced word of `p`, sorted lexicographically.
///
/// Depth-first on the last letter: `h` can end a reduced word of `p` exactly
/// when `p(h) > p(h+1)`, and the rest is a reduced word of `p ∘ s_h`.
pub fn enumerate_reduced(p: &Permutation, max_length: usize) -> Result<Vec<Word>> {
    let len = p.length();
    if len > max_length {
        return Err(Error::BoundExceeded {
            what: "permutation length",
            value: len,
            bound: max_length,
        });
    }
    fn go(one_line: &mut Vec<usize>, suffix: &mut Vec<usize>, out: &mut Vec<Word>) {
        if one_line.windows(2).all(|w| w[0] < w[1]) {
            out.push(Word::new(suffix.iter().rev().copied().collect()));
            return;
        }
        for h in 1..one_line.len() {
            if one_line[h - 1] > one_line[h] {
                one_line.swap(h - 1, h);
                suffix.push(h);
                go(one_line, suffix, out);
                suffix.pop();
                one_line.swap(h - 1, h);
            }
        }
    }
    let mut out = Vec::new();
    go(&mut p.one_line().to_vec(), &mut Vec::new(), &mut out);
    out.sort();
    Ok(out)
}

/// `Π_t a_t`; the empty product is 1.
pub fn macdonald_weight(w: &Word) -> Result<u64> {
    fk_weight(w, 0)
}

/// `Π_t (x + a_t)`.
pub fn fk_weight(w: &Word, x: u64) -> Result<u64> {
    w.heights().iter().try_fold(1u64, |acc, &h| {
        acc.checked_mul(x + h as u64)
            .ok_or(Error::Overflow("word weight"))
    })
}

pub fn factorial(k: usize) -> Result<u64> {
    (1..=k as u64).try_fold(1u64, |acc, i| {
        acc.checked_mul(i).ok_or(Error::Overflow("factorial"))
    })
}

/// Number of fillings of `shape` by `0..=x`, weakly increasing along rows and
/// down columns.
pub fn rpp_count(shape: &Partition, x: u64) -> Result<u64> {
    if shape.size() > MAX_VERIFY_CELLS {
        return Err(Error::BoundExceeded {
            what: "shape size",
            value: shape.size(),
            bound: MAX_VERIFY_CELLS,
        });
    }
    if x > MAX_RPP_X {
        return Err(Error::BoundExceeded {
            what: "rpp entry bound",
            value: x as usize,
            bound: MAX_RPP_X as usize,
        });
    }
    let cells: Vec<(usize, usize)> = shape.cells().collect();
    let mut filling: Vec<Vec<u64>> = shape.parts().iter().map(|&l| vec![0; l]).collect();
    fn go(cells: &[(usize, usize)], idx: usize, x: u64, filling: &mut Vec<Vec<u64>>) -> u64 {
        let Some(&(r, c)) = cells.get(idx) else {
            return 1;
        };
        let left = if c > 1 { filling[r - 1][c - 2] } else { 0 };
        let up = if r > 1 { filling[r - 2][c - 1] } else { 0 };
        let mut total = 0;
        for v in left.max(up)..=x {
            filling[r - 1][c - 1] = v;
            total += go(cells, idx + 1, x, filling);
        }
        total
    }
    Ok(go(&cells, 0, x, &mut filling))
}

/// Outcome of checking one identity on one shape.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub shape: Partition,
    pub x: u64,
    pub lhs: u64,
    pub rhs: u64,
    pub pass: bool,
    /// Wall-clock seconds.
    pub elapsed: f64,
}

fn dominant_of(shape: &Partition) -> Result<Permutation> {
    if shape.size() > MAX_VERIFY_CELLS {
        return Err(Error::BoundExceeded {
            what: "shape size",
            value: shape.size(),
            bound: MAX_VERIFY_CELLS,
        });
    }
    Permutation::dominant_from_partition(shape, shape.min_ambient())
}

/// `Σ_{a ∈ Red(π_λ)} μ(a)` against `|λ|!`.
pub fn verify_macdonald(shape: &Partition) -> Result<VerificationReport> {
    let start = Instant::now();
    let perm = dominant_of(shape)?;
    let lhs = enumerate_reduced(&perm, MAX_VERIFY_CELLS)?
        .iter()
        .try_fold(0u64, |acc, w| {
            macdonald_weight(w)?
                .checked_add(acc)
                .ok_or(Error::Overflow("weight sum"))
        })?;
    let rhs = factorial(shape.size())?;
    Ok(VerificationReport {
        shape: shape.clone(),
        x: 0,
        lhs,
        rhs,
        pass: lhs == rhs,
        elapsed: start.elapsed().as_secs_f64(),
    })
}

/// `Σ_{a ∈ Red(π_λ)} Π (x + a_t)` against `|λ|! · rpp(λ, x)`.
pub fn verify_fk(shape: &Partition, x: u64) -> Result<VerificationReport> {
    let start = Instant::now();
    let perm = dominant_of(shape)?;
    let lhs = enumerate_reduced(&perm, MAX_VERIFY_CELLS)?
        .iter()
        .try_fold(0u64, |acc, w| {
            fk_weight(w, x)?
                .checked_add(acc)
                .ok_or(Error::Overflow("weight sum"))
        })?;
    let rhs = factorial(shape.size())?
        .checked_mul(rpp_count(shape, x)?)
        .ok_or(Error::Overflow("k! rpp"))?;
    Ok(VerificationReport {
        shape: shape.clone(),
        x,
        lhs,
        rhs,
        pass: lhs == rhs,
        elapsed: start.elapsed().as_secs_f64(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::{BTreeMap, HashSet};

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(
            enumerate_reduced(&p("21"), 12).unwrap(),
            vec![Word::from([1])]
        );
        assert_eq!(
            enumerate_reduced(&p("321"), 12).unwrap(),
            vec![Word::from([1, 2, 1]), Word::from([2, 1, 2])]
        );
        assert!(enumerate_reduced(&p("4213"), 12)
            .unwrap()
            .contains(&Word::from([3, 1, 2, 1])));
        assert!(enumerate_reduced(&Permutation::reverse(6), 12).is_err());
        assert_eq!(
            enumerate_reduced(&Permutation::identity(3), 12).unwrap(),
            vec![Word::empty()]
        );
    }

    /// Counts reduced words by walking up the weak order from the identity,
    /// a route that shares nothing with the depth-first enumeration.
    fn count_by_prefix(target: &Permutation) -> u64 {
        let n = target.n();
        let mut layer: BTreeMap<Vec<usize>, u64> = BTreeMap::new();
        layer.insert((1..=n).collect(), 1);
        for _ in 0..target.length() {
            let mut next = BTreeMap::new();
            for (perm, count) in layer {
                for h in 1..n {
                    // appending h multiplies by s_h on the right: swap positions h, h+1
                    if perm[h - 1] < perm[h] {
                        let mut q = perm.clone();
                        q.swap(h - 1, h);
                        *next.entry(q).or_insert(0) += count;
                    }
                }
            }
            layer = next;
        }
        layer.get(target.one_line()).copied().unwrap_or(0)
    }

    #[test]
    fn enumeration_sanity_exhaustive() {
        for n in 1..=5 {
            for perm in Permutation::all(n) {
                let words = enumerate_reduced(&perm, 12).unwrap();
                let distinct: HashSet<_> = words.iter().collect();
                assert_eq!(distinct.len(), words.len());
                for w in &words {
                    assert!(w.is_reduced());
                    assert_eq!(w.permutation_in(n).unwrap(), perm);
                }
                assert_eq!(words.len() as u64, count_by_prefix(&perm), "{perm}");
            }
        }
        // the longest element of S_5 has 768 reduced words
        assert_eq!(count_by_prefix(&Permutation::reverse(5)), 768);
    }

    #[test]
    fn weight_examples() {
        assert_eq!(macdonald_weight(&Word::from([3, 1, 2, 1])).unwrap(), 6);
        assert_eq!(macdonald_weight(&Word::empty()).unwrap(), 1);
        assert_eq!(macdonald_weight(&Word::from([1, 0])).unwrap(), 0);
        assert_eq!(fk_weight(&Word::from([1]), 5).unwrap(), 6);
        assert_eq!(fk_weight(&Word::from([2, 1]), 1).unwrap(), 6);
        assert!(macdonald_weight(&Word::new(vec![1000; 10])).is_err());
    }

    #[test]
    fn rpp_examples() {
        for x in 0..5 {
            assert_eq!(rpp_count(&part(&[1]), x).unwrap(), x + 1);
            assert_eq!(rpp_count(&Partition::empty(), x).unwrap(), 1);
        }
        assert_eq!(rpp_count(&part(&[2]), 1).unwrap(), 3);
        // (2,2) with entries 0..=1: 00/00, 00/01, 00/11, 01/01, 01/11, 11/11
        assert_eq!(rpp_count(&part(&[2, 2]), 1).unwrap(), 6);
        assert!(rpp_count(&part(&[2]), MAX_RPP_X + 1).is_err());
    }

    #[test]
    fn verification_examples() {
        let r = verify_macdonald(&part(&[2, 1])).unwrap();
        assert_eq!((r.lhs, r.rhs, r.pass), (6, 6, true));
        let r = verify_macdonald(&part(&[1])).unwrap();
        assert_eq!((r.lhs, r.rhs), (1, 1));
        let r = verify_macdonald(&part(&[2, 2, 1])).unwrap();
        assert_eq!((r.lhs, r.rhs), (120, 120));
        let r = verify_fk(&part(&[2]), 1).unwrap();
        assert_eq!((r.lhs, r.rhs, r.pass), (6, 6, true));
        let r = verify_fk(&part(&[2, 1]), 2).unwrap();
        assert!(r.pass, "{r:?}");
        let a = verify_fk(&part(&[2, 2]), 0).unwrap();
        let b = verify_macdonald(&part(&[2, 2])).unwrap();
        assert_eq!((a.lhs, a.rhs), (b.lhs, b.rhs));
    }

    #[test]
    fn report_json_shape() {
        let r = verify_fk(&part(&[2]), 1).unwrap();
        let v: serde_json::Value = serde_json::to_value(&r).unwrap();
        for key in ["shape", "x", "lhs", "rhs", "pass", "elapsed"] {
            assert!(v.get(key).is_some(), "{key}");
        }
        assert_eq!(v["shape"], serde_json::json!([2]));
    }
}
