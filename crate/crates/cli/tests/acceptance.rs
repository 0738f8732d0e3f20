//! Acceptance suite: one check per release criterion, each printed as a
//! PASS/FAIL line. Run with `cargo test -p capflat-cli --test acceptance`
//! (add `-- --nocapture` to see the lines on success).

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use capflat_cli::{run_sweep, sweep::SweepReport, SweepConfig};
use capflat_core::{catalan, enumerate_arc_systems, flat_recursive, TallyProfile, WeightFunction};

struct Criteria {
    lines: Vec<(String, bool)>,
}

impl Criteria {
    fn new() -> Self {
        Self { lines: Vec::new() }
    }

    fn check(&mut self, label: &str, ok: bool, detail: String) {
        let line = format!(
            "criterion {label}: {} ({detail})",
            if ok { "PASS" } else { "FAIL" }
        );
        println!("{line}");
        self.lines.push((line, ok));
    }

    fn finish(self) {
        let failures: Vec<&String> = self
            .lines
            .iter()
            .filter(|(_, ok)| !ok)
            .map(|(line, _)| line)
            .collect();
        assert!(
            failures.is_empty(),
            "failed criteria:\n{}",
            failures
                .iter()
                .map(|s| s.as_str())
                .collect::<Vec<_>>()
                .join("\n")
        );
    }
}

fn wf(entries: &[i64]) -> WeightFunction {
    WeightFunction::new(entries.to_vec()).unwrap()
}

fn violations_named(report: &SweepReport, prefix: &str) -> usize {
    report
        .violations
        .iter()
        .filter(|v| v.check.starts_with(prefix))
        .count()
}

#[test]
fn acceptance() {
    let mut criteria = Criteria::new();

    // 1. Worked example: flat set of (2,4) with its decomposition sizes.
    let started = Instant::now();
    let d = flat_recursive(&wf(&[2, 4]));
    let elapsed = started.elapsed();
    let want: BTreeSet<WeightFunction> = [
        wf(&[1, 3]),
        wf(&[1, 4]),
        wf(&[1, 2]),
        wf(&[2, 4]),
        wf(&[2, 3]),
    ]
    .into();
    let sizes: Vec<usize> = d.counts().iter().map(|c| c.size).collect();
    criteria.check(
        "1 worked example",
        d.members() == &want && sizes == [2, 2, 1] && elapsed < Duration::from_millis(1),
        format!("5 members, piece sizes {sizes:?}, {elapsed:?}"),
    );

    // 2. Tally values of (1,2,3,7,9) on positions 0..=9.
    let started = Instant::now();
    let tally = TallyProfile::over_window(&wf(&[1, 2, 3, 7, 9]), 0..=9).unwrap();
    let values: Vec<i64> = (0..=9).map(|z| tally.value(z).unwrap()).collect();
    let elapsed = started.elapsed();
    criteria.check(
        "2 tally reproduction",
        values == [0, 1, 2, 3, 2, 1, 0, 1, 0, 1] && elapsed < Duration::from_millis(1),
        format!("values {values:?}, {elapsed:?}"),
    );

    // Sweeps shared by criteria 3-6 and 8-10 (window 2*rank + 6 throughout).
    let sweep_started = Instant::now();
    let reports: Vec<SweepReport> = (1..=5).map(|r| run_sweep(&SweepConfig::new(r))).collect();
    let sweep_elapsed = sweep_started.elapsed();

    // 3. Largest flat set per rank is the Catalan number, only at the
    // evenly spaced function.
    let want_max = [2u64, 5, 14, 42, 132];
    let mut ok3 = sweep_elapsed < Duration::from_secs(120);
    let mut detail3 = Vec::new();
    for (report, &bound) in reports.iter().zip(&want_max) {
        let r = report.rank as i64;
        let p: Vec<i64> = (1..=r).map(|i| 2 * i).collect();
        ok3 &= report.max_flat_size as u64 == bound
            && report.catalan_bound == bound
            && report.extremal == vec![p]
            && violations_named(report, "theorem1") == 0;
        detail3.push(format!("r{r}:{}", report.max_flat_size));
    }
    criteria.check(
        "3 catalan maximum",
        ok3,
        format!("{} in {sweep_elapsed:?}", detail3.join(" ")),
    );

    // 4. Move-count bound r+1, attained exactly on zigzags.
    let ok4 = reports
        .iter()
        .all(|rep| violations_named(rep, "prop1") == 0);
    criteria.check("4 move-count bound", ok4, "no prop1 violations".into());

    // 5. Lower bound r+1 for the flat set, attained exactly on consecutive runs.
    let mut ok5 = true;
    for report in &reports {
        let r = report.rank as i64;
        let q: Vec<i64> = (r + 1..=2 * r).collect();
        ok5 &= report.min_flat_size == report.rank_plus_one
            && report.minimal == vec![q]
            && violations_named(report, "exercise4") == 0;
    }
    criteria.check(
        "5 lower bound",
        ok5,
        "minimum r+1 exactly at the run".into(),
    );

    // 6. Recursion equals the brute-force oracle: everywhere up to rank 4,
    // on 200 seeded samples at rank 5.
    let mut ok6 = true;
    let mut detail6 = Vec::new();
    for report in &reports {
        let expected = if report.rank <= 4 { report.tested } else { 200 };
        ok6 &= report.oracle_checked == expected
            && violations_named(report, "oracle-equivalence") == 0;
        detail6.push(format!("r{}:{}", report.rank, report.oracle_checked));
    }
    criteria.check("6 oracle equivalence", ok6, detail6.join(" "));

    // 7. Catalan identities: the recurrence through n = 15 and the arc-system
    // enumeration through n = 8.
    let mut ok7 = true;
    for n in 0..=15usize {
        let sum: u64 = (1..=n + 1)
            .map(|i| catalan(n + 1 - i).unwrap() * catalan(i - 1).unwrap())
            .sum();
        ok7 &= catalan(n + 1).unwrap() == sum;
    }
    let started = Instant::now();
    for n in 0..=8usize {
        ok7 &= enumerate_arc_systems(n).len() as u64 == catalan(n).unwrap();
    }
    let enum_elapsed = started.elapsed();
    ok7 &= enum_elapsed < Duration::from_secs(1);
    criteria.check(
        "7 catalan identities",
        ok7,
        format!("1430 systems at n=8 in {enum_elapsed:?}"),
    );

    // 8. Local tally shapes partition marks from dots on [a_1 - 1, a_r).
    let ok8 = reports
        .iter()
        .filter(|rep| rep.rank <= 4)
        .all(|rep| violations_named(rep, "le1") == 0)
        && reports.iter().all(|rep| violations_named(rep, "le1") == 0);
    criteria.check("8 shape partition", ok8, "no le1 violations".into());

    // 9. Left/under factors stay within their Catalan bounds.
    let ok9 = reports
        .iter()
        .all(|rep| violations_named(rep, "lemma3") == 0 && violations_named(rep, "lemma2") == 0);
    criteria.check("9 factor bounds", ok9, "no lemma2/lemma3 violations".into());

    // 10. Widening the oracle window changes nothing (ranks 1-3).
    let mut ok10 = true;
    for report in reports.iter().filter(|rep| rep.rank <= 3) {
        ok10 &= report.stability_checked == report.tested
            && violations_named(report, "window-stability") == 0;
    }
    criteria.check(
        "10 window stability",
        ok10,
        "oracle unchanged under +5".into(),
    );

    // The sweeps must also be violation-free overall.
    for report in &reports {
        assert!(
            report.violations.is_empty(),
            "rank {} sweep has violations: {:?}",
            report.rank,
            report.violations
        );
    }

    criteria.finish();
}
