//! Strict partitions inside <a-1, a-3, ...> as ballot words.
//!
//! Run with `cargo run --example ballot_bijection`.

use shifted_rgf::bijection::{count_ballot_words, from_word, qanalog_partitions, to_word};
use shifted_rgf::genfun::qanalog;

fn main() {
    let (a, b) = (7, 3);
    for mu in qanalog_partitions(a, b).unwrap().iter().take(12) {
        let w = to_word(mu, a).unwrap();
        assert_eq!(&from_word(&w).unwrap(), mu);
        println!("{:>10}  {w}", mu.to_string());
    }

    for a in [10, 20, 40, 80] {
        let b = a / 2;
        println!(
            "a={a} b={b}: ballot words {} = F(1) {}",
            count_ballot_words(a, b).unwrap(),
            qanalog(a, b).unwrap().eval_at_one()
        );
    }

    let bad = "1000".parse().unwrap();
    println!("1000 -> {}", from_word(&bad).unwrap_err());
}
