//! Acceptance run: thirteen criteria, each with a wall-clock budget.
//!
//! Runs without the libtest harness so every criterion prints exactly one
//! `criterion N: PASS|FAIL` line. Exits nonzero if any criterion fails.

use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_traits::One;

use shifted_rgf::bijection::{count_ballot_words, from_word, qanalog_partitions, to_word, BinaryWord};
use shifted_rgf::explore::{run_scan, ScanFamily, ScanReport, ScanSpec};
use shifted_rgf::genfun::{qanalog, rgf_shifted};
use shifted_rgf::qstruct;
use shifted_rgf::verify::{self, AtConfig};
use shifted_rgf::{ClaimVerdict, IntPoly, StrictShape};

type Outcome = Result<(), String>;
type Criterion = (u32, &'static str, u64, Box<dyn Fn() -> Outcome>);

fn verdicts(vs: impl IntoIterator<Item = ClaimVerdict>) -> Outcome {
    let bad: Vec<String> = vs
        .into_iter()
        .filter(|v| !v.holds)
        .map(|v| {
            let w: Vec<String> = v
                .witnesses
                .iter()
                .map(|w| format!("{}: {}", w.shape, w.detail))
                .collect();
            format!("{} | {}", v.summary_line(), w.join("; "))
        })
        .collect();
    if bad.is_empty() {
        Ok(())
    } else {
        Err(bad.join("\n    "))
    }
}

fn expect(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn strict(s: &str) -> StrictShape {
    s.parse().expect("valid shape")
}

fn golden() -> Outcome {
    let cases: [(IntPoly, &[i64]); 5] = [
        (rgf_shifted(&strict("4,2,1")), &[1, 1, 1, 2, 2, 2, 2, 1]),
        (qanalog(5, 2).unwrap(), &[1, 1, 1, 2, 2, 2, 1]),
        (qanalog(6, 2).unwrap(), &[1, 1, 1, 2, 2, 3, 2, 2, 1]),
        (
            qanalog(9, 4).unwrap(),
            &[1, 1, 1, 2, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 11, 11, 10, 7, 4, 1],
        ),
        (
            qanalog(10, 4).unwrap(),
            &[
                1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 9, 10, 12, 13, 15, 16, 17, 16, 17, 15, 14, 11, 7, 4, 1,
            ],
        ),
    ];
    for (got, want) in &cases {
        expect(*got == IntPoly::from_i64s(want), || format!("got {got}"))?;
    }
    let d = cases[4].0.diagnose().unwrap();
    expect(!d.unimodal && d.peak_count == 2 && d.first_dip == Some(17), || {
        format!("{d:?}")
    })
}

fn staircase_product() -> Outcome {
    let mut product = IntPoly::one();
    for b in 1..=20usize {
        product = &product * &(&IntPoly::one() + &IntPoly::monomial(b));
        let shape = StrictShape::new((1..=b).rev()).unwrap();
        expect(rgf_shifted(&shape) == product, || format!("b={b}"))?;
    }
    Ok(())
}

fn theorem_at() -> Outcome {
    let report = verify::check_theorem_at(AtConfig {
        tmax: 6,
        budget_multiplier: 40,
        law_tmax: 10,
    });
    for th in &report.thresholds {
        println!(
            "    t={}: least nonunimodal n = {:?}, n without dip after it = {:?}, dip holds from n = {:?} to {}",
            th.t, th.min_nonunimodal_n, th.dip_gaps, th.dip_stable_from, th.n_budget
        );
    }
    verdicts([report.verdict])
}

fn fac() -> Outcome {
    verdicts([
        qstruct::check_fac_a(40, 80),
        qstruct::check_fac_b(40),
        qstruct::check_fac_c(500),
    ])?;
    let table = qstruct::build_ftable(480);
    for k in 1..=80 {
        let (prev, cur) = (table.get(6 * (k - 1), 0), table.get(6 * k, 0));
        expect(prev < cur, || {
            format!("f({},0) = {cur} <= f({},0) = {prev}", 6 * k, 6 * (k - 1))
        })?;
    }
    Ok(())
}

fn remark() -> Outcome {
    verdicts([
        qstruct::check_ohara_recursion(30),
        qstruct::check_remark_coeff_formula(30, 60),
    ])
}

fn binomial(a: usize, b: usize) -> BigUint {
    (0..b).fold(BigUint::one(), |acc, i| acc * (a - i) / (i + 1))
}

fn ballot() -> Outcome {
    for a in 2..=24 {
        for b in 1..=a / 2 {
            let sum = qanalog(a, b).unwrap().eval_at_one();
            let words = count_ballot_words(a, b).unwrap();
            let want = binomial(a, b);
            expect(sum.to_biguint() == Some(want.clone()) && words == want, || {
                format!("a={a}, b={b}: sum {sum}, words {words}, binomial {want}")
            })?;
        }
    }
    for a in 2..=18usize {
        let b = a / 2;
        let inside = qanalog_partitions(a, b).unwrap();
        for mu in &inside {
            let w = to_word(mu, a).unwrap();
            expect(w.is_ballot() && from_word(&w).unwrap() == *mu, || {
                format!("a={a}: {mu}")
            })?;
        }
        let mut ballot_words = 0usize;
        for bits in 0u32..(1 << a) {
            let w = BinaryWord::new((0..a).map(|i| bits >> i & 1 == 1).collect());
            if !w.is_ballot() {
                expect(from_word(&w).is_err(), || format!("accepted {w}"))?;
                continue;
            }
            ballot_words += 1;
            let mu = from_word(&w).unwrap();
            expect(to_word(&mu, a).unwrap() == w, || format!("round trip of {w}"))?;
        }
        expect(ballot_words == inside.len(), || {
            format!("a={a}: {ballot_words} words, {} partitions", inside.len())
        })?;
    }
    Ok(())
}

fn run_pair(family: ScanFamily, dir: &std::path::Path) -> Result<ScanReport, String> {
    let straight = run_scan(&ScanSpec::new(family.clone()).jobs(4).chunk_size(16)).map_err(|e| e.to_string())?;
    let ckpt = dir.join(format!("{}.json", family.name()));
    let spec = ScanSpec::new(family).jobs(4).chunk_size(16).checkpoint(&ckpt);
    let partial = run_scan(&spec.clone().stop_after_chunks(1)).map_err(|e| e.to_string())?;
    let resumed = run_scan(&spec).map_err(|e| e.to_string())?;
    expect(!partial.finished || partial.total_cells <= 16, || {
        "interruption did not stop early".into()
    })?;
    expect(resumed == straight, || {
        format!("{}: resumed report differs", straight.spec.name())
    })?;
    Ok(straight)
}

fn scans() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let families = [
        ScanFamily::Centr { nmax: 14 },
        ScanFamily::Arith {
            amax: 40,
            complement: false,
        },
        ScanFamily::Arith3 { size_budget: 40 },
        ScanFamily::TruncatedStaircase { bmax: 7, nmax: 40 },
    ];
    for family in families {
        let report = run_pair(family, dir.path())?;
        println!("    {}: {}", report.spec.name(), report.conclusion);
        expect(report.finished && !report.has_counterexamples(), || {
            report.conclusion.clone()
        })?;
    }
    Ok(())
}

fn main() {
    let criteria: Vec<Criterion> = vec![
        (1, "golden polynomials", 1, Box::new(golden)),
        (2, "staircase product", 1, Box::new(staircase_product)),
        (
            3,
            "four-part decomposition",
            10,
            Box::new(|| verdicts([verify::check_eq4(100)])),
        ),
        (
            4,
            "truncated staircase unimodality",
            10,
            Box::new(|| verdicts([verify::check_theorem_uni(100)])),
        ),
        (5, "arithmetic progressions nonunimodal", 120, Box::new(theorem_at)),
        (6, "f(a,c) table", 30, Box::new(fac)),
        (7, "recursion and coefficient formula", 30, Box::new(remark)),
        (8, "ballot words", 30, Box::new(ballot)),
        (
            9,
            "three-part shapes",
            60,
            Box::new(|| {
                verdicts([
                    verify::check_lemma_p1(25),
                    verify::check_three_part_decomposition(25),
                    verify::check_stanton_b3(25),
                ])
            }),
        ),
        (
            10,
            "named shapes",
            10,
            Box::new(|| verdicts(verify::check_named_shapes())),
        ),
        (
            11,
            "oracle equivalence",
            60,
            Box::new(|| verdicts([verify::check_oracle_equivalence(12, 5, 500, 20260101)])),
        ),
        (
            12,
            "symmetry characterization",
            60,
            Box::new(|| verdicts([verify::check_symmetry_characterization(15)])),
        ),
        (13, "conjecture scans", 600, Box::new(scans)),
    ];

    let mut failed = 0;
    for (id, name, budget, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|()| {
            expect(elapsed < Duration::from_secs(budget), || {
                format!("took {elapsed:.2?}, budget {budget}s")
            })
        });
        match outcome {
            Ok(()) => println!("criterion {id}: PASS  {name} ({elapsed:.2?})"),
            Err(why) => {
                failed += 1;
                println!("criterion {id}: FAIL  {name} ({elapsed:.2?})\n    {why}");
            }
        }
    }
    if failed > 0 {
        println!("{failed} criterion/criteria failed");
        std::process::exit(1);
    }
}
