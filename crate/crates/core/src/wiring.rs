//! Incrementally maintained wiring diagram.
//!
//! Every crossing stores the two wires it exchanges, and every wire keeps the
//! sorted list of positions where it crosses something. Changing the height
//! of crossing `t` only relabels the later crossings of the three wires on
//! the rows it touches, so a push costs `O(n)` rather than `O(k)`, and the
//! defect of a nearly-reduced word is found by intersecting two of the
//! per-wire lists.
//!
//! Positions are 0-based here; the public word API is 1-based.

use crate::error::{Error, Result};
use crate::word::Word;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Up,
    Down,
}

#[derive(Clone, Debug)]
pub struct WiringState {
    rows: usize,
    heights: Vec<usize>,
    upper: Vec<usize>,
    lower: Vec<usize>,
    by_wire: Vec<Vec<usize>>,
}

impl WiringState {
    /// An empty diagram on rows `0..=rows`.
    pub fn new(rows: usize) -> Self {
        Self {
            rows,
            heights: Vec::new(),
            upper: Vec::new(),
            lower: Vec::new(),
            by_wire: vec![Vec::new(); rows + 1],
        }
    }

    pub fn from_word(word: &Word, rows: usize) -> Result<Self> {
        let mut state = Self::new(rows);
        let mut occ: Vec<usize> = (0..=rows).collect();
        for (p, &h) in word.heights().iter().enumerate() {
            if h + 1 > rows {
                return Err(Error::HeightOutOfRange {
                    position: p + 1,
                    height: h,
                    n: rows,
                });
            }
            let (u, l) = (occ[h], occ[h + 1]);
            state.heights.push(h);
            state.upper.push(u);
            state.lower.push(l);
            state.by_wire[u].push(p);
            state.by_wire[l].push(p);
            occ.swap(h, h + 1);
        }
        Ok(state)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn len(&self) -> usize {
        self.heights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.heights.is_empty()
    }

    pub fn heights(&self) -> &[usize] {
        &self.heights
    }

    pub fn to_word(&self) -> Word {
        Word::new(self.heights.clone())
    }

    /// The word with position `t` removed.
    pub fn word_without(&self, t: usize) -> Word {
        let mut h = Vec::with_capacity(self.heights.len().saturating_sub(1));
        h.extend_from_slice(&self.heights[..t]);
        h.extend_from_slice(&self.heights[t + 1..]);
        Word::new(h)
    }

    /// Wires `(upper, lower)` exchanged by crossing `t`.
    pub fn wires_at(&self, t: usize) -> (usize, usize) {
        (self.upper[t], self.lower[t])
    }

    /// Wire on row `r` just before position `c`.
    pub fn occupant(&self, c: usize, r: usize) -> usize {
        for p in (0..c).rev() {
            let h = self.heights[p];
            if h == r {
                return self.lower[p];
            }
            if h + 1 == r {
                return self.upper[p];
            }
        }
        r
    }

    /// Row of `wire` just before position `c`.
    pub fn row_of(&self, wire: usize, c: usize) -> Result<usize> {
        let list = self.by_wire.get(wire).ok_or(Error::NoSuchWire(wire))?;
        let idx = list.partition_point(|&p| p < c);
        Ok(match idx.checked_sub(1).map(|i| list[i]) {
            None => wire,
            Some(p) if self.upper[p] == wire => self.heights[p] + 1,
            Some(p) => self.heights[p],
        })
    }

    /// Another position where the wires of crossing `t` cross, if any.
    pub fn partner(&self, t: usize) -> Option<usize> {
        let a = &self.by_wire[self.upper[t]];
        let b = &self.by_wire[self.lower[t]];
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    if a[i] != t {
                        return Some(a[i]);
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        None
    }

    /// Rename wires on every crossing after `t`: wire `from` becomes `to` for
    /// each `(from, to)` in `sigma`, which must permute its own domain.
    fn relabel_after(&mut self, t: usize, sigma: &[(usize, usize)]) {
        let in_domain = |w: usize| sigma.iter().any(|&(a, _)| a == w);
        let image = |w: usize| sigma.iter().find(|&&(a, _)| a == w).map_or(w, |&(_, b)| b);
        let mut tails: Vec<(usize, Vec<usize>)> = Vec::with_capacity(sigma.len());
        for &(w, _) in sigma {
            let list = &mut self.by_wire[w];
            let cut = list.partition_point(|&p| p <= t);
            tails.push((w, list.split_off(cut)));
        }
        // a crossing between two relabelled wires appears in two tails; touch it once
        let mut touched = Vec::new();
        for (w, tail) in &tails {
            for &p in tail {
                let (u, l) = (self.upper[p], self.lower[p]);
                if u == *w || (l == *w && !in_domain(u)) {
                    touched.push((p, image(u), image(l)));
                }
            }
        }
        for (p, u, l) in touched {
            self.upper[p] = u;
            self.lower[p] = l;
        }
        for (w, tail) in tails {
            self.by_wire[image(w)].extend(tail);
        }
    }

    fn remove_from_list(&mut self, wire: usize, p: usize) {
        let list = &mut self.by_wire[wire];
        if let Ok(i) = list.binary_search(&p) {
            list.remove(i);
        }
    }

    fn insert_into_list(&mut self, wire: usize, p: usize) {
        let list = &mut self.by_wire[wire];
        let i = list.partition_point(|&q| q < p);
        list.insert(i, p);
    }

    /// Move crossing `t` one row up or down.
    pub fn push(&mut self, t: usize, dir: Direction) -> Result<()> {
        let h = self.heights[t];
        let new_h = match dir {
            Direction::Up => h.checked_sub(1).ok_or(Error::PushAtZero(t + 1))?,
            Direction::Down => h + 1,
        };
        if new_h + 1 > self.rows {
            return Err(Error::HeightOutOfRange {
                position: t + 1,
                height: new_h,
                n: self.rows,
            });
        }
        let base = h.min(new_h);
        let mut occ = [0usize; 3];
        for (i, slot) in occ.iter_mut().enumerate() {
            let r = base + i;
            *slot = if r == h {
                self.upper[t]
            } else if r == h + 1 {
                self.lower[t]
            } else {
                self.occupant(t, r)
            };
        }
        let mut old_after = occ;
        old_after.swap(h - base, h + 1 - base);
        let mut new_after = occ;
        new_after.swap(new_h - base, new_h + 1 - base);
        let sigma: Vec<(usize, usize)> = old_after
            .iter()
            .zip(&new_after)
            .filter(|(a, b)| a != b)
            .map(|(&a, &b)| (a, b))
            .collect();
        self.relabel_after(t, &sigma);

        let (old_u, old_l) = (self.upper[t], self.lower[t]);
        let (new_u, new_l) = (occ[new_h - base], occ[new_h + 1 - base]);
        for w in [old_u, old_l] {
            if w != new_u && w != new_l {
                self.remove_from_list(w, t);
            }
        }
        for w in [new_u, new_l] {
            if w != old_u && w != old_l {
                self.insert_into_list(w, t);
            }
        }
        self.heights[t] = new_h;
        self.upper[t] = new_u;
        self.lower[t] = new_l;
        Ok(())
    }

    /// Insert a crossing at height `h` so that it becomes position `c`.
    pub fn insert(&mut self, c: usize, h: usize) -> Result<()> {
        if h + 1 > self.rows {
            return Err(Error::HeightOutOfRange {
                position: c + 1,
                height: h,
                n: self.rows,
            });
        }
        let upper = self.occupant(c, h);
        let lower = self.occupant(c, h + 1);
        for list in &mut self.by_wire {
            let i = list.partition_point(|&p| p < c);
            for p in &mut list[i..] {
                *p += 1;
            }
        }
        self.heights.insert(c, h);
        self.upper.insert(c, upper);
        self.lower.insert(c, lower);
        self.relabel_after(c, &[(upper, lower), (lower, upper)]);
        self.insert_into_list(upper, c);
        self.insert_into_list(lower, c);
        Ok(())
    }

    /// Rebuild from scratch and compare; used by tests.
    pub fn is_consistent(&self) -> bool {
        match WiringState::from_word(&self.to_word(), self.rows) {
            Ok(fresh) => {
                fresh.upper == self.upper
                    && fresh.lower == self.lower
                    && fresh.by_wire == self.by_wire
            }
            Err(_) => false,
        }
    }
}
