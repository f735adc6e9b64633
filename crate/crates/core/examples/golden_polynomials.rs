//! Rank-generating functions of a few small shapes, with diagnostics.
//!
//! Run with `cargo run --example golden_polynomials`.

use shifted_rgf::genfun::{qanalog, qbinom, rgf_shifted, rgf_straight};
use shifted_rgf::{IntPoly, StraightShape, StrictShape};

fn show(label: &str, f: &IntPoly) {
    let d = f.diagnose().expect("nonzero");
    println!("{label}");
    println!("  {f}");
    println!(
        "  unimodal={} peaks={:?} symmetric={} log_concave={}",
        d.unimodal, d.peak_degrees, d.symmetric, d.log_concave
    );
}

fn main() {
    let shape: StrictShape = "4,2,1".parse().unwrap();
    show("F<4,2,1>", &rgf_shifted(&shape));

    let square: StraightShape = "3,3,3".parse().unwrap();
    show("G(3,3,3) = C(6,3)_q", &rgf_straight(&square));
    assert_eq!(rgf_straight(&square), qbinom(6, 3).unwrap());

    for (a, b) in [(5, 2), (6, 2), (9, 4), (10, 4)] {
        show(&format!("C({a},{b})^q"), &qanalog(a, b).unwrap());
    }
    // the smallest nonunimodal q-analog: 17, 16, 17 at degrees 16..=18
    let f = qanalog(10, 4).unwrap();
    println!("C(10,4)^q at 16..=18: {} {} {}", f.coeff(16), f.coeff(17), f.coeff(18));
}
