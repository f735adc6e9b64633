//! The specific shapes whose unimodality is known either way, plus the
//! symmetry characterization and an oracle cross-check.
//!
//! Run with `cargo run --release --example named_shapes`.

use shifted_rgf::verify;

fn main() {
    for v in verify::check_named_shapes() {
        println!("{}", v.summary_line());
        for w in &v.witnesses {
            println!("  {}", w.detail);
        }
    }
    println!("{}", verify::check_symmetry_characterization(15).summary_line());
    println!(
        "{}",
        verify::check_oracle_equivalence(12, 5, 500, 20260101).summary_line()
    );
}
