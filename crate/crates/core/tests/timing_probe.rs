//! Ignored diagnostic: per-size timing of the dual-recognizer sweep.
//! Run with `cargo test --test timing_probe -- --ignored --nocapture`.

mod common;

use std::time::Instant;

use miug::classifier::{classify, ClassLabel};
use miug::pipeline::{recognize_with_options, PipelineOptions};

#[test]
#[ignore]
fn probe_crosscheck_cost() {
    for n in 1..=7 {
        let graphs = common::connected_graphs(n);
        let t0 = Instant::now();
        let mut members = 0;
        for g in &graphs {
            let label = classify(g).label;
            let out = recognize_with_options(g, &PipelineOptions::unchecked()).unwrap();
            assert_eq!(out.member, label >= ClassLabel::AlmostMixed, "{g}");
            members += usize::from(out.member);
        }
        println!(
            "n={n}: {} graphs, {members} members, {:?}",
            graphs.len(),
            t0.elapsed()
        );
    }
}
