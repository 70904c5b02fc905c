//! The ranked multigraph `Λ_T` of a tableau chain and its `x`-shifted variant,
//! built explicitly for small shapes.
//!
//! Rank `m` holds the reduced words of `π_m`. The edge from `a` to `a'` has
//! multiplicity `⟨a, BD(a', t_m)⟩`. Maximal paths from the empty word to `a`
//! are counted by `μ(a)` (or `μ_x(a)` in `Λ^x_T`).

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::bump::{bump_delete_traced, insert_bump_at};
use crate::error::{Error, Result};
use crate::tableau::{Chain, StandardTableau};
use crate::word::{FormalSum, Word};

/// Largest tableau the graph builders accept unless told otherwise.
pub const DEFAULT_MAX_CELLS: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Edge {
    /// Index into the lower rank.
    pub source: usize,
    /// Index into the upper rank.
    pub target: usize,
    pub multiplicity: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankedMultigraph {
    pub tableau: StandardTableau,
    pub x: u64,
    /// `ranks[m]` is sorted lexicographically.
    pub ranks: Vec<Vec<Word>>,
    /// `edges[m - 1]` joins rank `m - 1` to rank `m`, sorted by (source, target).
    pub edges: Vec<Vec<Edge>>,
}

/// One disagreement between the BD and IB incidence matrices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdjointnessViolation {
    pub rank: usize,
    pub source: Word,
    pub target: Word,
    pub bump_delete: u64,
    pub insert_bump: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdjointnessReport {
    pub tableau: StandardTableau,
    pub entries_checked: usize,
    pub violations: Vec<AdjointnessViolation>,
}

impl AdjointnessReport {
    pub fn pass(&self) -> bool {
        self.violations.is_empty()
    }
}

fn check_bound(tableau: &StandardTableau, max_cells: usize) -> Result<()> {
    if tableau.size() > max_cells {
        return Err(Error::BoundExceeded {
            what: "tableau size",
            value: tableau.size(),
            bound: max_cells,
        });
    }
    Ok(())
}

/// Where each gap of each rank-`(m-1)` word leads under insert-bump.
struct GapTable {
    /// `targets[m-1][i][g-1]` = (target word, wire `i_m` was on row 1 at gap `g`).
    targets: Vec<Vec<Vec<(Word, bool)>>>,
}

/// Vertices by insert-bump closure from the empty word, together with the
/// gap table used for adjointness and the top-gap rule.
fn closure(chain: &Chain) -> Result<(Vec<Vec<Word>>, GapTable)> {
    let mut ranks = vec![vec![Word::empty()]];
    let mut targets = Vec::with_capacity(chain.len());
    for m in 1..=chain.len() {
        let wire = chain.wire(m);
        let mut next = BTreeSet::new();
        let mut table = Vec::with_capacity(ranks[m - 1].len());
        for a in &ranks[m - 1] {
            let mut row = Vec::with_capacity(m);
            for gap in 1..=m {
                let trace = insert_bump_at(a, wire, gap, chain.ambient())?;
                next.insert(trace.word.clone());
                row.push((trace.word, trace.height == 1));
            }
            table.push(row);
        }
        ranks.push(next.into_iter().collect());
        targets.push(table);
    }
    Ok((ranks, GapTable { targets }))
}

fn index_of(rank: &[Word], w: &Word) -> Option<usize> {
    rank.binary_search(w).ok()
}

/// `BD(a', t_m)` for every rank-`m` word, as edges into rank `m - 1`.
fn bump_delete_edges(chain: &Chain, ranks: &[Vec<Word>], m: usize) -> Result<Vec<Edge>> {
    let mut edges = Vec::new();
    for (target, a) in ranks[m].iter().enumerate() {
        let t = a.find_crossing(chain.pair(m))?;
        let (sum, _) = bump_delete_traced(a, t)?;
        for (w, mult) in sum.iter() {
            let source = index_of(&ranks[m - 1], w).ok_or_else(|| {
                Error::Invariant(format!(
                    "BD({a}, {t}) has summand {w} outside rank {}",
                    m - 1
                ))
            })?;
            edges.push(Edge {
                source,
                target,
                multiplicity: mult,
            });
        }
    }
    edges.sort();
    Ok(edges)
}

/// `Λ_T` for tableaux of at most [`DEFAULT_MAX_CELLS`] cells.
pub fn build_lambda(tableau: &StandardTableau) -> Result<RankedMultigraph> {
    build_lambda_bounded(tableau, DEFAULT_MAX_CELLS)
}

pub fn build_lambda_bounded(
    tableau: &StandardTableau,
    max_cells: usize,
) -> Result<RankedMultigraph> {
    check_bound(tableau, max_cells)?;
    let chain = Chain::new(tableau)?;
    let (ranks, _) = closure(&chain)?;
    let edges = (1..=chain.len())
        .map(|m| bump_delete_edges(&chain, &ranks, m))
        .collect::<Result<_>>()?;
    Ok(RankedMultigraph {
        tableau: tableau.clone(),
        x: 0,
        ranks,
        edges,
    })
}

/// The `x`-shifted bump-delete. `shifted` is a word in the diagram with `x`
/// extra wires above; after the ordinary upward bump from `t` stops, the
/// final crossing keeps being pushed and deleted until it reaches row 0.
/// The last term, with a crossing on row 0, has weight zero and is dropped.
pub fn bd_x(shifted: &Word, t: usize, x: usize) -> Result<FormalSum> {
    let (mut sum, trace) = bump_delete_traced(shifted, t)?;
    let last = trace
        .last_pushed()
        .ok_or_else(|| Error::Invariant("empty bump".into()))?;
    let remaining = trace.terminal.height(last)?;
    if x > 0 && remaining != x {
        return Err(Error::Invariant(format!(
            "bump from {shifted} at {t} stopped on row {remaining}, expected {x}"
        )));
    }
    if x > 0 {
        sum.add(trace.terminal.delete_at(last)?, x as u64);
    }
    Ok(sum)
}

/// `Λ^x_T`, built from the top-gap rule: a gap at which wire `i_m` sits on
/// row 1 contributes `1 + x` to its edge instead of 1. The result is checked
/// edge by edge against the graph obtained directly from [`bd_x`].
pub fn build_lambda_x(tableau: &StandardTableau, x: u64) -> Result<RankedMultigraph> {
    build_lambda_x_bounded(tableau, x, DEFAULT_MAX_CELLS)
}

pub fn build_lambda_x_bounded(
    tableau: &StandardTableau,
    x: u64,
    max_cells: usize,
) -> Result<RankedMultigraph> {
    check_bound(tableau, max_cells)?;
    let chain = Chain::new(tableau)?;
    let (ranks, gaps) = closure(&chain)?;
    let mut all_edges = Vec::with_capacity(chain.len());
    for m in 1..=chain.len() {
        let mut rule: BTreeMap<(usize, usize), u64> = BTreeMap::new();
        for (source, row) in gaps.targets[m - 1].iter().enumerate() {
            for (word, top) in row {
                let target = index_of(&ranks[m], word).expect("closure contains its own targets");
                *rule.entry((source, target)).or_insert(0) += if *top { 1 + x } else { 1 };
            }
        }
        let direct = direct_x_edges(&chain, &ranks, m, x)?;
        if direct != rule {
            let detail = describe_mismatch(&ranks, m, &rule, &direct);
            return Err(Error::LambdaXMismatch { rank: m, detail });
        }
        all_edges.push(
            rule.into_iter()
                .map(|((source, target), multiplicity)| Edge {
                    source,
                    target,
                    multiplicity,
                })
                .collect(),
        );
    }
    Ok(RankedMultigraph {
        tableau: tableau.clone(),
        x,
        ranks,
        edges: all_edges,
    })
}

fn direct_x_edges(
    chain: &Chain,
    ranks: &[Vec<Word>],
    m: usize,
    x: u64,
) -> Result<BTreeMap<(usize, usize), u64>> {
    let shift = x as usize;
    let mut out = BTreeMap::new();
    for (target, a) in ranks[m].iter().enumerate() {
        let t = a.find_crossing(chain.pair(m))?;
        for (w, mult) in bd_x(&a.shifted(shift), t, shift)?.iter() {
            let source = w
                .unshifted(shift)
                .and_then(|u| index_of(&ranks[m - 1], &u))
                .ok_or_else(|| {
                    Error::Invariant(format!("bd_x summand {w} outside rank {}", m - 1))
                })?;
            *out.entry((source, target)).or_insert(0) += mult;
        }
    }
    Ok(out)
}

fn describe_mismatch(
    ranks: &[Vec<Word>],
    m: usize,
    rule: &BTreeMap<(usize, usize), u64>,
    direct: &BTreeMap<(usize, usize), u64>,
) -> String {
    let keys: BTreeSet<_> = rule.keys().chain(direct.keys()).collect();
    for &(s, t) in keys {
        let (r, d) = (
            rule.get(&(s, t)).copied().unwrap_or(0),
            direct.get(&(s, t)).copied().unwrap_or(0),
        );
        if r != d {
            return format!(
                "edge {} -> {}: top-gap rule gives {r}, bd_x gives {d}",
                ranks[m - 1][s].to_tuple_string(),
                ranks[m][t].to_tuple_string()
            );
        }
    }
    String::new()
}

/// Compare `⟨a, BD(a', t_m)⟩` with the number of gaps `g` such that
/// insert-bumping `a` at `g` gives `a'`, over every pair of adjacent ranks.
pub fn adjointness_matrix_check(tableau: &StandardTableau) -> Result<AdjointnessReport> {
    check_bound(tableau, DEFAULT_MAX_CELLS)?;
    let chain = Chain::new(tableau)?;
    let (ranks, gaps) = closure(&chain)?;
    let mut violations = Vec::new();
    let mut entries_checked = 0;
    for m in 1..=chain.len() {
        let mut ib: BTreeMap<(usize, usize), u64> = BTreeMap::new();
        for (source, row) in gaps.targets[m - 1].iter().enumerate() {
            for (word, _) in row {
                let target = index_of(&ranks[m], word).expect("closure contains its own targets");
                *ib.entry((source, target)).or_insert(0) += 1;
            }
        }
        // summands outside rank m-1 are violations too, so no early error here
        let mut bd: BTreeMap<(usize, usize), u64> = BTreeMap::new();
        for (target, a) in ranks[m].iter().enumerate() {
            let t = a.find_crossing(chain.pair(m))?;
            for (w, mult) in bump_delete_traced(a, t)?.0.iter() {
                match index_of(&ranks[m - 1], w) {
                    Some(source) => *bd.entry((source, target)).or_insert(0) += mult,
                    None => violations.push(AdjointnessViolation {
                        rank: m,
                        source: w.clone(),
                        target: a.clone(),
                        bump_delete: mult,
                        insert_bump: 0,
                    }),
                }
            }
        }
        entries_checked += ranks[m - 1].len() * ranks[m].len();
        let keys: BTreeSet<_> = ib.keys().chain(bd.keys()).copied().collect();
        for (s, t) in keys {
            let (b, i) = (
                bd.get(&(s, t)).copied().unwrap_or(0),
                ib.get(&(s, t)).copied().unwrap_or(0),
            );
            if b != i {
                violations.push(AdjointnessViolation {
                    rank: m,
                    source: ranks[m - 1][s].clone(),
                    target: ranks[m][t].clone(),
                    bump_delete: b,
                    insert_bump: i,
                });
            }
        }
    }
    Ok(AdjointnessReport {
        tableau: tableau.clone(),
        entries_checked,
        violations,
    })
}

#[derive(Serialize, Deserialize)]
struct Exported {
    tableau: StandardTableau,
    x: u64,
    ranks: Vec<Vec<Word>>,
    edges: Vec<Vec<Edge>>,
    path_counts: Vec<Vec<u64>>,
}

impl RankedMultigraph {
    /// Number of ranks minus one, i.e. `k`.
    pub fn top_rank(&self) -> usize {
        self.ranks.len() - 1
    }

    pub fn vertex_count(&self) -> usize {
        self.ranks.iter().map(Vec::len).sum()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.iter().map(Vec::len).sum()
    }

    pub fn index_of(&self, rank: usize, w: &Word) -> Option<usize> {
        self.ranks.get(rank).and_then(|r| index_of(r, w))
    }

    /// Multiplicity of the edge `a -> b`, where `b` sits one rank above `a`.
    pub fn multiplicity(&self, a: &Word, b: &Word) -> u64 {
        let rank = b.len();
        if rank == 0 || a.len() + 1 != rank {
            return 0;
        }
        match (self.index_of(rank - 1, a), self.index_of(rank, b)) {
            (Some(s), Some(t)) => self.edges[rank - 1]
                .iter()
                .filter(|e| e.source == s && e.target == t)
                .map(|e| e.multiplicity)
                .sum(),
            _ => 0,
        }
    }

    /// Total outgoing multiplicity of every vertex, by rank.
    pub fn out_degrees(&self) -> Vec<Vec<u64>> {
        let mut out: Vec<Vec<u64>> = self.ranks.iter().map(|r| vec![0; r.len()]).collect();
        for (m, edges) in self.edges.iter().enumerate() {
            for e in edges {
                out[m][e.source] += e.multiplicity;
            }
        }
        out
    }

    /// Paths from the empty word to every vertex, counted with multiplicity.
    pub fn path_counts(&self) -> Result<Vec<Vec<u64>>> {
        let mut counts: Vec<Vec<u64>> = self.ranks.iter().map(|r| vec![0; r.len()]).collect();
        counts[0][0] = 1;
        for (m, edges) in self.edges.iter().enumerate() {
            for e in edges {
                let add = counts[m][e.source]
                    .checked_mul(e.multiplicity)
                    .ok_or(Error::Overflow("path count"))?;
                let slot = &mut counts[m + 1][e.target];
                *slot = slot.checked_add(add).ok_or(Error::Overflow("path count"))?;
            }
        }
        Ok(counts)
    }

    /// Top-rank words with their path counts.
    pub fn top_path_counts(&self) -> Result<BTreeMap<Word, u64>> {
        let counts = self.path_counts()?;
        let k = self.top_rank();
        Ok(self.ranks[k]
            .iter()
            .cloned()
            .zip(counts[k].iter().copied())
            .collect())
    }

    pub fn to_json(&self) -> Result<String> {
        let exported = Exported {
            tableau: self.tableau.clone(),
            x: self.x,
            ranks: self.ranks.clone(),
            edges: self.edges.clone(),
            path_counts: self.path_counts()?,
        };
        serde_json::to_string_pretty(&exported).map_err(|e| Error::Parse(e.to_string()))
    }

    /// Reads [`RankedMultigraph::to_json`] output back, rejecting graphs whose
    /// edges or path counts do not fit their vertices.
    pub fn from_json(text: &str) -> Result<Self> {
        let e: Exported = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let g = RankedMultigraph {
            tableau: e.tableau,
            x: e.x,
            ranks: e.ranks,
            edges: e.edges,
        };
        g.check_structure()?;
        if g.path_counts()? != e.path_counts {
            return Err(Error::Parse("path counts do not match the edges".into()));
        }
        Ok(g)
    }

    fn check_structure(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::Parse(msg));
        if self.ranks.is_empty() || self.ranks[0] != [Word::empty()] {
            return bad("rank 0 must be the empty word".into());
        }
        if self.edges.len() + 1 != self.ranks.len() {
            return bad("one edge list per pair of adjacent ranks".into());
        }
        for (m, rank) in self.ranks.iter().enumerate() {
            if rank.windows(2).any(|w| w[0] >= w[1]) || rank.iter().any(|w| w.len() != m) {
                return bad(format!("rank {m} is not a sorted list of length-{m} words"));
            }
        }
        for (m, edges) in self.edges.iter().enumerate() {
            if edges
                .iter()
                .any(|e| e.source >= self.ranks[m].len() || e.target >= self.ranks[m + 1].len())
            {
                return bad(format!(
                    "edge index out of range between ranks {m} and {}",
                    m + 1
                ));
            }
        }
        Ok(())
    }

    /// Graphviz rendering. Vertices are labelled with their word and path
    /// count, edges with their multiplicity.
    pub fn to_dot(&self) -> Result<String> {
        let counts = self.path_counts()?;
        let mut out = String::new();
        let _ = writeln!(out, "digraph lambda {{");
        let _ = writeln!(out, "  rankdir=TB;");
        let _ = writeln!(out, "  node [shape=box, fontname=\"monospace\"];");
        for (m, rank) in self.ranks.iter().enumerate() {
            let ids: Vec<String> = (0..rank.len()).map(|i| format!("v{m}_{i}")).collect();
            for (i, w) in rank.iter().enumerate() {
                let label = if w.is_empty() {
                    "ε".to_string()
                } else {
                    w.to_tuple_string()
                };
                let _ = writeln!(out, "  {} [label=\"{label}\\n{}\"];", ids[i], counts[m][i]);
            }
            let _ = writeln!(out, "  {{ rank=same; {}; }}", ids.join("; "));
        }
        for (m, edges) in self.edges.iter().enumerate() {
            for e in edges {
                let _ = writeln!(
                    out,
                    "  v{m}_{} -> v{}_{} [label=\"{}\"];",
                    e.source,
                    m + 1,
                    e.target,
                    e.multiplicity
                );
            }
        }
        out.push_str("}\n");
        Ok(out)
    }
}
