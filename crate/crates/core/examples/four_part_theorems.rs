//! Four-part shapes: truncated staircases stay unimodal, arithmetic
//! progressions with step t >= 2 eventually do not.
//!
//! Run with `cargo run --release --example four_part_theorems`.

use shifted_rgf::verify::{self, triple_profile, AtConfig};

fn main() {
    println!("{}", verify::check_eq4(100).summary_line());
    println!("{}", verify::check_theorem_uni(100).summary_line());

    println!("coefficients (c_2n, c_2n-1, c_2n-2) of <n, n-t, n-2t, n-3t>:");
    for t in 1..=3 {
        for n in [10 * t, 10 * t + 1] {
            let p = triple_profile(t, n).unwrap();
            println!("  t={t} n={n}: ({}, {}, {}) dip={}", p.c2n, p.c2n1, p.c2n2, p.has_dip());
        }
    }

    let report = verify::check_theorem_at(AtConfig::default());
    for th in &report.thresholds {
        println!(
            "t={}: first nonunimodal n = {:?}; no dip at 2n-1 for n in {:?}; dip from n = {:?} on",
            th.t, th.min_nonunimodal_n, th.dip_gaps, th.dip_stable_from
        );
    }
    println!("{}", report.verdict.summary_line());
}
