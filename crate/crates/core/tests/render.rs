mod common;

use common::all_reduced_words;
use redwords::render::{
    crossing_histogram, halfway_permutation, render_matrix_scatter, render_wiring, trajectory,
    ScatterFormat, WiringFormat, WiringOptions,
};
use redwords::{Chain, Partition, Sampler, StandardTableau};

#[test]
fn trajectories_end_where_the_permutation_says() {
    for n in 1..=4 {
        for (p, words) in all_reduced_words(n) {
            for w in words {
                for r in 1..=n {
                    let path = trajectory(&w, r);
                    assert_eq!(path[0], r);
                    assert_eq!(path.len(), w.len() + 1);
                    let end = *path.last().unwrap();
                    assert_eq!(p.apply(end), r, "{w} wire {r}");
                }
            }
        }
    }
}

#[test]
fn histogram_conserves_mass() {
    let chain = Chain::new(&StandardTableau::row_major(&Partition::staircase(12))).unwrap();
    let w = Sampler::new(&chain).sample(3).unwrap();
    for (p, h) in [(1, 1), (7, 3), (w.len(), 11), (200, 50)] {
        assert_eq!(
            crossing_histogram(&w, p, h).unwrap().total(),
            w.len() as u64
        );
    }
}

#[test]
fn svg_outputs_parse() {
    let chain = Chain::new(&StandardTableau::row_major(&Partition::staircase(15))).unwrap();
    let w = Sampler::new(&chain).sample(9).unwrap();
    let opts = WiringOptions {
        selected: Some(vec![1, 8, 15]),
        ..Default::default()
    };
    let svg = render_wiring(&w, &opts, WiringFormat::Svg).unwrap();
    assert_eq!(svg, render_wiring(&w, &opts, WiringFormat::Svg).unwrap());
    let doc = roxmltree::Document::parse(&svg).unwrap();
    assert_eq!(doc.root_element().tag_name().name(), "svg");
    let lines = doc
        .descendants()
        .filter(|n| n.has_tag_name("polyline"))
        .count();
    assert_eq!(lines, 3);

    let half = halfway_permutation(&w).unwrap();
    let scatter = render_matrix_scatter(&half, ScatterFormat::Svg, 4);
    let doc = roxmltree::Document::parse(&scatter).unwrap();
    assert_eq!(
        doc.descendants()
            .filter(|n| n.has_tag_name("circle"))
            .count(),
        15
    );

    let ascii = render_wiring(&w, &WiringOptions::default(), WiringFormat::Ascii).unwrap();
    assert_eq!(ascii.lines().count(), 2 * 15 - 1);
}
