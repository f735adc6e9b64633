use shifted_rgf::explore::{run_scan, ScanFamily, ScanReport, ScanSpec};
use shifted_rgf::genfun::{oracle_rgf, Containment, DEFAULT_ORACLE_BUDGET};

fn families() -> Vec<ScanFamily> {
    vec![
        ScanFamily::Centr { nmax: 10 },
        ScanFamily::Arith {
            amax: 20,
            complement: false,
        },
        ScanFamily::Arith {
            amax: 14,
            complement: true,
        },
        ScanFamily::Arith2 {
            parts: 4,
            nmax: 24,
            tmax: 5,
            target_peaks: 2,
        },
        ScanFamily::Arith3 { size_budget: 24 },
        ScanFamily::TruncatedStaircase { bmax: 7, nmax: 20 },
        ScanFamily::OpenB5B7 { max_part: 10 },
    ]
}

fn once(family: &ScanFamily, jobs: usize) -> ScanReport {
    run_scan(&ScanSpec::new(family.clone()).jobs(jobs).chunk_size(8)).unwrap()
}

#[test]
fn reports_do_not_depend_on_jobs() {
    for family in families() {
        let one = once(&family, 1);
        assert!(one.finished);
        assert_eq!(
            one.to_json().unwrap(),
            once(&family, 4).to_json().unwrap(),
            "{}",
            family.name()
        );
    }
}

#[test]
fn interrupted_scans_resume_to_identical_reports() {
    let dir = tempfile::tempdir().unwrap();
    for (idx, family) in families().into_iter().enumerate() {
        let whole = once(&family, 3).to_json().unwrap();
        for stop in [1, 2, 5] {
            let path = dir.path().join(format!("{idx}-{}-{stop}.json", family.name()));
            let spec = ScanSpec::new(family.clone()).jobs(3).chunk_size(8).checkpoint(&path);
            let mut report = run_scan(&spec.clone().stop_after_chunks(stop)).unwrap();
            // keep interrupting until done
            while !report.finished {
                report = run_scan(&spec.clone().stop_after_chunks(stop)).unwrap();
            }
            assert_eq!(report.to_json().unwrap(), whole, "{} stop={stop}", family.name());
            assert_eq!(std::fs::read_to_string(&path).unwrap(), whole);
            // a finished checkpoint is returned as is
            assert_eq!(run_scan(&spec).unwrap().to_json().unwrap(), whole);
        }
    }
}

#[test]
fn checkpoint_for_another_family_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ck.json");
    run_scan(&ScanSpec::new(ScanFamily::Centr { nmax: 6 }).checkpoint(&path)).unwrap();
    let err = run_scan(&ScanSpec::new(ScanFamily::Centr { nmax: 7 }).checkpoint(&path)).unwrap_err();
    assert!(err.to_string().contains("checkpoint"), "{err}");
}

#[test]
fn counterexamples_reverify_under_oracle() {
    let report = once(
        &ScanFamily::Arith {
            amax: 14,
            complement: true,
        },
        2,
    );
    assert!(report.has_counterexamples());
    for c in &report.counterexamples {
        assert!(!c.diagnostics.unimodal);
        assert_eq!(c.oracle_confirmed, Some(true));
        let again = oracle_rgf(c.shape.parts(), Containment::Strict, DEFAULT_ORACLE_BUDGET).unwrap();
        assert_eq!(again.coeff_strings(), c.coeffs);
    }
    let shapes: Vec<String> = report.counterexamples.iter().map(|c| c.shape.to_string()).collect();
    assert!(shapes.contains(&"<9,7,5,3>".to_string()));
    assert!(report.conclusion.contains("counterexample"));
}

#[test]
fn peaks_scan_reports_two_peak_shapes_as_notable() {
    let report = once(
        &ScanFamily::Arith2 {
            parts: 4,
            nmax: 20,
            tmax: 3,
            target_peaks: 2,
        },
        2,
    );
    assert!(!report.has_counterexamples());
    assert_eq!(report.max_peak_count, 2);
    assert!(report.notable.iter().any(|w| w.shape == "9,7,5,3"));
}
