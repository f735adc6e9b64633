//! Resumable conjecture scans.
//!
//! Run with `cargo run --release --example conjecture_scan`. The scan is
//! interrupted after two chunks, then resumed from its checkpoint.

use shifted_rgf::explore::{run_scan, ScanFamily, ScanSpec};

fn main() -> shifted_rgf::Result<()> {
    let dir = std::env::temp_dir().join(format!("shifted-rgf-example-{}", std::process::id()));
    std::fs::create_dir_all(&dir)?;
    let spec = ScanSpec::new(ScanFamily::TruncatedStaircase { bmax: 7, nmax: 40 })
        .jobs(4)
        .chunk_size(32)
        .checkpoint(dir.join("truncated.json"));

    let partial = run_scan(&spec.clone().stop_after_chunks(2))?;
    println!(
        "after interruption: {:?} of {} cells",
        partial.completed_ranges, partial.total_cells
    );
    let report = run_scan(&spec)?;
    println!("{}", report.conclusion);
    for w in &report.notable {
        println!("  {}: {}", w.shape, w.detail);
    }

    // outside the conjectured region counterexamples appear at once
    let outside = run_scan(&ScanSpec::new(ScanFamily::Arith {
        amax: 12,
        complement: true,
    }))?;
    println!("{}", outside.conclusion);
    if let Some(c) = outside.counterexamples.first() {
        println!("  {} {}: {}", c.shape, c.params, c.coeffs.join(","));
    }
    std::fs::remove_dir_all(&dir)?;
    Ok(())
}
