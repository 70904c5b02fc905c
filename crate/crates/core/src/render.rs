//! Statistics of a word's wiring diagram and text renderings of it: ASCII
//! and SVG wiring diagrams, permutation-matrix scatter plots, CSV dumps.
//!
//! Every renderer is a pure function of its input, so output is byte-stable.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::word::{WiringDiagram, Word};

/// Largest number of wires the ASCII renderer draws.
pub const MAX_ASCII_WIRES: usize = 40;

/// `π_t`: the permutation drawn by the first `t` crossings, in the ambient
/// group of the whole word.
pub fn partial_permutation(w: &Word, t: usize) -> Result<Permutation> {
    partial_permutation_in(w, t, w.min_ambient())
}

pub fn partial_permutation_in(w: &Word, t: usize, n: usize) -> Result<Permutation> {
    if t > w.len() {
        return Err(Error::PositionOutOfRange {
            position: t,
            len: w.len(),
        });
    }
    Word::new(w.heights()[..t].to_vec()).permutation_in(n)
}

/// The partial permutation after `⌊|w|/2⌋` crossings.
pub fn halfway_permutation(w: &Word) -> Result<Permutation> {
    partial_permutation(w, w.len() / 2)
}

/// Row of `wire` after each of `0..=|w|` crossings.
pub fn trajectory(w: &Word, wire: usize) -> Vec<usize> {
    WiringDiagram::new(w).trajectory(wire)
}

/// Crossing counts binned by position and height.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Histogram {
    pub position_bins: usize,
    pub height_bins: usize,
    /// Heights binned are `0..height_span`.
    pub height_span: usize,
    /// `counts[p][h]`.
    pub counts: Vec<Vec<u64>>,
}

impl Histogram {
    pub fn total(&self) -> u64 {
        self.counts.iter().flatten().sum()
    }

    /// `position,height,count` with one line per bin, bins numbered from 0.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("position,height,count\n");
        for (p, row) in self.counts.iter().enumerate() {
            for (h, c) in row.iter().enumerate() {
                let _ = writeln!(out, "{p},{h},{c}");
            }
        }
        out
    }
}

/// Bins positions `1..=|w|` into `position_bins` equal slices and heights
/// `0..=max_height` into `height_bins`.
pub fn crossing_histogram(w: &Word, position_bins: usize, height_bins: usize) -> Result<Histogram> {
    if position_bins == 0 || height_bins == 0 {
        return Err(Error::Invariant(
            "histogram needs at least one bin per axis".into(),
        ));
    }
    let len = w.len().max(1);
    let span = w.max_height() + 1;
    let mut counts = vec![vec![0u64; height_bins]; position_bins];
    for (i, &h) in w.heights().iter().enumerate() {
        let p = i * position_bins / len;
        let b = h * height_bins / span;
        counts[p][b] += 1;
    }
    Ok(Histogram {
        position_bins,
        height_bins,
        height_span: span,
        counts,
    })
}

/// `position,height` with one line per crossing.
pub fn crossings_csv(w: &Word) -> String {
    let mut out = String::from("position,height\n");
    for (i, h) in w.heights().iter().enumerate() {
        let _ = writeln!(out, "{},{h}", i + 1);
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WiringFormat {
    Ascii,
    Svg,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WiringOptions {
    /// Wires are `1..=n`; defaults to the smallest `n` that fits the word.
    pub wires: Option<usize>,
    /// Draw only these wires; `None` draws all.
    pub selected: Option<Vec<usize>>,
    /// Mark every crossing with a dot (SVG only).
    pub dots: bool,
    /// Pixels per position and per row (SVG only).
    pub scale: u32,
}

impl Default for WiringOptions {
    fn default() -> Self {
        Self {
            wires: None,
            selected: None,
            dots: true,
            scale: 10,
        }
    }
}

impl WiringOptions {
    fn is_selected(&self, wire: usize) -> bool {
        self.selected.as_ref().is_none_or(|s| s.contains(&wire))
    }
}

/// Number of wires to draw, checking that every height fits.
fn wire_count(w: &Word, options: &WiringOptions) -> Result<usize> {
    let needed = w.min_ambient();
    let n = options.wires.unwrap_or(needed).max(1);
    if n < needed {
        return Err(Error::AmbientTooSmall { n, needed });
    }
    if let Some(&bad) = options
        .selected
        .as_ref()
        .and_then(|s| s.iter().find(|&&x| x == 0 || x > n))
    {
        return Err(Error::NoSuchWire(bad));
    }
    Ok(n)
}

pub fn render_wiring(w: &Word, options: &WiringOptions, format: WiringFormat) -> Result<String> {
    match format {
        WiringFormat::Ascii => render_wiring_ascii(w, options),
        WiringFormat::Svg => render_wiring_svg(w, options),
    }
}

/// Text diagram, rows top to bottom. Each crossing takes three columns:
///
/// ```text
/// \ /
///  X
/// / \
/// ```
pub fn render_wiring_ascii(w: &Word, options: &WiringOptions) -> Result<String> {
    let n = wire_count(w, options)?;
    if n > MAX_ASCII_WIRES {
        return Err(Error::BoundExceeded {
            what: "wires for ASCII rendering",
            value: n,
            bound: MAX_ASCII_WIRES,
        });
    }
    if w.heights().contains(&0) {
        return Err(Error::HeightOutOfRange {
            position: w.heights().iter().position(|&h| h == 0).unwrap_or(0) + 1,
            height: 0,
            n,
        });
    }
    // lines[2(r-1)] is row r, lines[2r-1] lies between rows r and r+1
    let mut lines: Vec<String> = vec![String::new(); 2 * n - 1];
    let mut rows: Vec<usize> = (0..=n).collect();
    let on = |wire: usize, c: char| if options.is_selected(wire) { c } else { ' ' };
    for &h in w.heights() {
        let (upper, lower) = (rows[h], rows[h + 1]);
        for r in 1..=n {
            let line = &mut lines[2 * (r - 1)];
            if r == h {
                line.push(on(upper, '\\'));
                line.push(' ');
                line.push(on(lower, '/'));
            } else if r == h + 1 {
                line.push(on(lower, '/'));
                line.push(' ');
                line.push(on(upper, '\\'));
            } else {
                let c = on(rows[r], '-');
                line.extend([c, c, c]);
            }
            if r < n {
                let between = &mut lines[2 * r - 1];
                if r == h {
                    let mid = match (options.is_selected(upper), options.is_selected(lower)) {
                        (true, true) => 'X',
                        (true, false) => '\\',
                        (false, true) => '/',
                        (false, false) => ' ',
                    };
                    between.extend([' ', mid, ' ']);
                } else {
                    between.push_str("   ");
                }
            }
        }
        rows.swap(h, h + 1);
    }
    let width = n.to_string().len();
    let mut out = String::new();
    for (i, line) in lines.iter().enumerate() {
        if i % 2 == 0 {
            let r = i / 2 + 1;
            let (lead, tail) = (on(r, '-'), on(rows[r], '-'));
            let _ = writeln!(out, "{r:>width$} {lead}{line}{tail} {}", rows[r]);
        } else {
            let _ = writeln!(out, "{:width$}  {}", "", line.trim_end());
        }
    }
    // trailing spaces from unselected wires carry no information
    Ok(out
        .lines()
        .map(str::trim_end)
        .collect::<Vec<_>>()
        .join("\n")
        + "\n")
}

/// Corners of a wire's path as (position, row) pairs.
fn wire_corners(trajectory: &[usize]) -> Vec<(usize, usize)> {
    let mut pts = vec![(0, trajectory[0])];
    for t in 1..trajectory.len() {
        if trajectory[t] != trajectory[t - 1] {
            if pts.last() != Some(&(t - 1, trajectory[t - 1])) {
                pts.push((t - 1, trajectory[t - 1]));
            }
            pts.push((t, trajectory[t]));
        }
    }
    let last = trajectory.len() - 1;
    if pts.last() != Some(&(last, trajectory[last])) {
        pts.push((last, trajectory[last]));
    }
    pts
}

const PALETTE: [&str; 6] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf",
];

/// SVG 1.1 wiring diagram. Position `t` is column `t`, row `r` is `r` units
/// down the page; crossing `t` sits between columns `t-1` and `t`.
pub fn render_wiring_svg(w: &Word, options: &WiringOptions) -> Result<String> {
    let n = wire_count(w, options)?;
    let s = options.scale.max(1) as usize;
    let k = w.len();
    let (width, height) = ((k + 2) * s, (n + 1) * s);
    let x = |t: usize| (t + 1) * s;
    let y = |r: usize| r * s;
    let diagram = WiringDiagram::with_rows(w, n);
    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(
        out,
        r#"<rect width="{width}" height="{height}" fill="white"/>"#
    );
    let stroke = (s / 5).max(1);
    let selected: Vec<usize> = (1..=n).filter(|&wire| options.is_selected(wire)).collect();
    for (i, &wire) in selected.iter().enumerate() {
        let points: Vec<String> = wire_corners(&diagram.trajectory(wire))
            .into_iter()
            .map(|(t, r)| format!("{},{}", x(t), y(r)))
            .collect();
        let colour = if options.selected.is_some() {
            PALETTE[i % PALETTE.len()]
        } else {
            "black"
        };
        let _ = writeln!(
            out,
            r#"<polyline data-wire="{wire}" fill="none" stroke="{colour}" stroke-width="{stroke}" points="{}"/>"#,
            points.join(" ")
        );
    }
    if options.dots {
        let radius = (s / 4).max(1);
        let _ = writeln!(out, r#"<g fill="black">"#);
        for (i, &h) in w.heights().iter().enumerate() {
            // centre of the X: halfway between columns i and i+1, rows h and h+1
            let _ = writeln!(
                out,
                r#"<circle cx="{}" cy="{}" r="{radius}"/>"#,
                x(i) + s / 2,
                y(h) + s / 2
            );
        }
        let _ = writeln!(out, "</g>");
    }
    out.push_str("</svg>\n");
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScatterFormat {
    Svg,
    Csv,
}

/// One mark per matrix entry `(π(i), i)`, matrix coordinates (row down,
/// column across).
pub fn render_matrix_scatter(p: &Permutation, format: ScatterFormat, scale: u32) -> String {
    let marks = (1..=p.n()).map(|i| (p.apply(i), i));
    match format {
        ScatterFormat::Csv => {
            let mut out = String::from("row,col\n");
            for (r, c) in marks {
                let _ = writeln!(out, "{r},{c}");
            }
            out
        }
        ScatterFormat::Svg => {
            let s = scale.max(1) as usize;
            let size = (p.n() + 1) * s;
            let radius = (s / 3).max(1);
            let mut out = String::new();
            let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
            let _ = writeln!(
                out,
                r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size}" height="{size}" viewBox="0 0 {size} {size}">"#
            );
            let _ = writeln!(
                out,
                r#"<rect width="{size}" height="{size}" fill="white"/>"#
            );
            let _ = writeln!(out, r#"<g fill="black">"#);
            for (r, c) in marks {
                let _ = writeln!(
                    out,
                    r#"<circle data-row="{r}" data-col="{c}" cx="{}" cy="{}" r="{radius}"/>"#,
                    c * s,
                    r * s
                );
            }
            out.push_str("</g>\n</svg>\n");
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w<const N: usize>(v: [usize; N]) -> Word {
        Word::from(v)
    }

    #[test]
    fn partial_permutations() {
        let a = w([3, 1, 2, 1]);
        assert!(partial_permutation(&a, 0).unwrap().is_identity());
        assert_eq!(partial_permutation(&a, 4).unwrap(), "4213".parse().unwrap());
        // rows after (3,1): 2 1 4 3
        assert_eq!(partial_permutation(&a, 2).unwrap(), "2143".parse().unwrap());
        assert!(partial_permutation(&a, 5).is_err());
        assert_eq!(halfway_permutation(&a).unwrap(), "2143".parse().unwrap());
    }

    #[test]
    fn trajectories() {
        assert_eq!(trajectory(&Word::empty(), 1), vec![1]);
        assert_eq!(trajectory(&w([1]), 1), vec![1, 2]);
        assert_eq!(trajectory(&w([2, 1]), 2), vec![2, 3, 3]);
    }

    #[test]
    fn histograms() {
        let a = w([3, 1, 2, 1]);
        let h = crossing_histogram(&a, 1, 1).unwrap();
        assert_eq!(h.counts, vec![vec![4]]);
        let h = crossing_histogram(&a, 4, 4).unwrap();
        assert_eq!(h.total(), 4);
        assert_eq!(h.counts[0][3], 1);
        assert_eq!(h.counts[1][1], 1);
        assert_eq!(h.counts[2][2], 1);
        assert_eq!(h.counts[3][1], 1);
        assert!(h.to_csv().starts_with("position,height,count\n0,0,0\n"));
        assert!(crossing_histogram(&a, 0, 1).is_err());
        assert_eq!(crossings_csv(&a), "position,height\n1,3\n2,1\n3,2\n4,1\n");
    }

    #[test]
    fn ascii_example() {
        let text = render_wiring_ascii(&w([3, 1, 2, 1]), &WiringOptions::default()).unwrap();
        let expected = "\
1 ----\\ /---\\ /- 4
       X     X
2 ----/ \\\\ // \\- 2
          X
3 -\\ /---/ \\---- 1
    X
4 -/ \\---------- 3
";
        assert_eq!(text, expected);
        let empty = render_wiring_ascii(
            &Word::empty(),
            &WiringOptions {
                wires: Some(3),
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(empty, "1 -- 1\n\n2 -- 2\n\n3 -- 3\n");
    }

    #[test]
    fn ascii_selection_and_bounds() {
        let opts = WiringOptions {
            selected: Some(vec![1]),
            ..Default::default()
        };
        let text = render_wiring_ascii(&w([1]), &opts).unwrap();
        assert_eq!(text, "1 -\\    2\n    \\\n2    \\- 1\n");
        let big = Word::new(vec![41]);
        assert!(render_wiring_ascii(&big, &WiringOptions::default()).is_err());
    }

    #[test]
    fn svg_is_deterministic() {
        let a = w([3, 1, 2, 1]);
        let opts = WiringOptions {
            selected: Some(vec![1, 4]),
            ..Default::default()
        };
        let one = render_wiring_svg(&a, &opts).unwrap();
        assert_eq!(one, render_wiring_svg(&a, &opts).unwrap());
        assert_eq!(one.matches("<polyline").count(), 2);
        assert_eq!(one.matches("<circle").count(), 4);
        assert!(render_wiring_svg(
            &a,
            &WiringOptions {
                selected: Some(vec![9]),
                ..Default::default()
            }
        )
        .is_err());
    }

    #[test]
    fn corners() {
        assert_eq!(
            wire_corners(&[1, 1, 2, 2, 2]),
            vec![(0, 1), (1, 1), (2, 2), (4, 2)]
        );
        assert_eq!(wire_corners(&[3]), vec![(0, 3)]);
    }

    #[test]
    fn scatter() {
        let p: Permutation = "4213".parse().unwrap();
        assert_eq!(
            render_matrix_scatter(&p, ScatterFormat::Csv, 10),
            "row,col\n4,1\n2,2\n1,3\n3,4\n"
        );
        let id = render_matrix_scatter(&Permutation::identity(3), ScatterFormat::Csv, 10);
        assert_eq!(id, "row,col\n1,1\n2,2\n3,3\n");
        let svg = render_matrix_scatter(&p, ScatterFormat::Svg, 10);
        assert_eq!(svg.matches("<circle").count(), 4);
    }
}
