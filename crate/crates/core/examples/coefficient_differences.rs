//! The table f(a, c) of differences of coefficients of C(a+4, 4)_q and the
//! bivariate series that generates it.
//!
//! Run with `cargo run --example coefficient_differences`.

use shifted_rgf::qstruct::{self, build_ftable, fac_series};

fn main() {
    let table = build_ftable(8);
    for a in 0..=8 {
        let row: Vec<String> = table.row(a).iter().map(ToString::to_string).collect();
        println!("a={a}: {}", row.join(" "));
    }

    // same numbers read off the rational function
    let series = fac_series(8, 16);
    assert!((0..=8).all(|a| (0..=16).all(|c| series.get(a, c) == table.get(a, c as i64))));

    for v in [
        qstruct::check_fac_a(40, 80),
        qstruct::check_fac_b(40),
        qstruct::check_fac_c(500),
        qstruct::check_fac_c_monotone(40),
        qstruct::check_ohara_recursion(30),
        qstruct::check_remark_coeff_formula(30, 60),
    ] {
        println!("{}", v.summary_line());
        for w in v.witnesses.iter().take(3) {
            println!("  {}: {}", w.shape, w.detail);
        }
    }
}
