//! Shapes with at most three parts.
//!
//! Run with `cargo run --release --example three_part_shapes`.

use shifted_rgf::genfun::{rgf_shifted, rgf_straight};
use shifted_rgf::verify;
use shifted_rgf::{StraightShape, StrictShape};

fn main() {
    let g: StraightShape = "6,3,2".parse().unwrap();
    let f: StrictShape = "7,3,2".parse().unwrap();
    println!("G(6,3,2)  = {}", rgf_straight(&g));
    println!("F<7,3,2>  = {}", rgf_shifted(&f));

    for v in [
        verify::check_lemma_p1(25),
        verify::check_three_part_decomposition(25),
        verify::check_stanton_b3(25),
    ] {
        println!("{}", v.summary_line());
    }
}
