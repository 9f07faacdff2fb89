//! Acceptance criteria, one PASS/FAIL line each. Exits nonzero on any
//! failure except the irreducibility-outright part of criterion 4 at β = 5,
//! which no prime can satisfy (see the README).

use std::process::Command;
use std::time::{Duration, Instant};

use lemn::suites::{self, composition_pairs, SuiteReport, VerifyConfig};
use lemn_core::construct::{is_constructible, power_of_two_test};
use lemn_core::gaussint::normalized_odd_up_to;
use lemn_core::lemnatomic::{EvidenceStatus, LemnatomicTable};
use lemn_core::GaussInt;

struct Outcome {
    passed: bool,
    /// A failure that is a property of the mathematics rather than the code.
    known: bool,
    detail: String,
}

fn ok(passed: bool, detail: String) -> Outcome {
    Outcome {
        passed,
        known: false,
        detail,
    }
}

fn g(s: &str) -> GaussInt {
    s.parse().unwrap()
}

fn lemn(args: &[&str]) -> String {
    let o = Command::new(env!("CARGO_BIN_EXE_lemn"))
        .args(args)
        .env_remove("LEMN_DIGITS")
        .output()
        .expect("binary runs");
    assert!(o.status.success(), "lemn {args:?} failed");
    String::from_utf8(o.stdout).unwrap().trim_end().to_string()
}

fn suite_detail(r: &SuiteReport) -> String {
    let failed = r.failures().count();
    format!("{} checks, {} failed", r.checks.len(), failed)
}

fn timed<T>(limit: Duration, f: impl FnOnce() -> T) -> (T, Duration, bool) {
    let start = Instant::now();
    let v = f();
    let t = start.elapsed();
    (v, t, t < limit)
}

fn criterion_1() -> Outcome {
    let (res, t, fast) = timed(Duration::from_secs(1), || {
        let div = lemn(&["divpoly", "5"]);
        let lams: Vec<String> = ["1", "-1+2i", "-1-2i", "5"].iter().map(|b| lemn(&["lemnatomic", b])).collect();
        (div, lams)
    });
    let (div, lams) = res;
    let want_div = "x^25 + 50x^21 - 125x^17 + 300x^13 - 105x^9 - 62x^5 + 5x";
    let want = ["x", "x^4 + (-1+2i)", "x^4 + (-1-2i)", "x^16 + 52x^12 - 26x^8 - 12x^4 + 1"];
    let exact = div == want_div && lams.iter().zip(want).all(|(a, b)| a == b);
    ok(exact && fast, format!("exact {exact}, {t:.2?} (< 1s)"))
}

fn criterion_2(table: &mut LemnatomicTable) -> Outcome {
    let (r, t, fast) = timed(Duration::from_secs(120), || suites::structural(table, 200).unwrap());
    ok(r.passed && fast, format!("{}, {t:.2?} (< 2min)", suite_detail(&r)))
}

fn criterion_3(table: &mut LemnatomicTable) -> Outcome {
    let pairs = composition_pairs(200, 20);
    let mut good = 0;
    for (b, c) in &pairs {
        let cache = table.cm_cache();
        let outer = cache.mult_map(b).unwrap();
        let inner = cache.mult_map(c).unwrap();
        let whole = cache.mult_map(&(b * c)).unwrap();
        good += (outer.compose(&inner) == whole.as_ratfunc()) as usize;
    }
    ok(good == 20 && pairs.len() == 20, format!("{good}/{} pairs", pairs.len()))
}

fn criterion_4(table: &mut LemnatomicTable) -> Outcome {
    let mut mismatched = Vec::new();
    let mut count = 0;
    for b in normalized_odd_up_to(100).into_iter().filter(|b| !b.is_one()) {
        let ev = table.irreducibility_evidence(&b, 3).unwrap();
        count += 1;
        if ev.patterns.iter().any(|p| !p.matches()) || ev.patterns.len() != 3 {
            mismatched.push(b.to_string());
        }
    }
    let mut unproved = Vec::new();
    for b in ["-1+2i", "3", "-1-2i", "5"] {
        let ev = table.irreducibility_evidence(&g(b), 3).unwrap();
        if ev.status != EvidenceStatus::Proved {
            unproved.push(b);
        }
    }
    let detail = format!(
        "patterns: {}/{count} beta without mismatch; not proved outright: {unproved:?}",
        count - mismatched.len()
    );
    Outcome {
        passed: mismatched.is_empty() && unproved.is_empty(),
        // (O/5O)^× is C4 x C4, so no Frobenius has order 16
        known: mismatched.is_empty() && unproved == ["5"],
        detail,
    }
}

fn criterion_5(table: &mut LemnatomicTable) -> Outcome {
    let cfg = VerifyConfig::default();
    let (r, t, fast) = timed(Duration::from_secs(120), || suites::numeric(table, &cfg).unwrap());
    let worst: Vec<String> = r
        .tally()
        .into_iter()
        .map(|(name, _, _, res)| format!("{name} {:.1e}", res.unwrap_or(0.0)))
        .collect();
    ok(
        r.passed && fast && cfg.digits == 40,
        format!("{}; {}; {t:.2?} (< 2min)", suite_detail(&r), worst.join(", ")),
    )
}

fn criterion_6() -> Outcome {
    let (bad, t, fast) = timed(Duration::from_secs(10), || {
        (1..=100_000u64)
            .filter(|&n| is_constructible(n) != power_of_two_test(n >> n.trailing_zeros()).unwrap())
            .count()
    });
    let yes = [3, 4, 5, 6, 15, 16, 17].iter().all(|&n| is_constructible(n));
    let no = [7, 9, 11, 13, 21, 25].iter().all(|&n| !is_constructible(n));
    ok(
        bad == 0 && yes && no && fast,
        format!("{bad} disagreements up to 1e5, spot values {}, {t:.2?}", yes && no),
    )
}

fn criterion_7() -> Outcome {
    let (r, t, fast) = timed(Duration::from_secs(10), || suites::chebyshev().unwrap());
    ok(r.passed && fast, format!("{}, {t:.2?} (< 10s)", suite_detail(&r)))
}

fn main() {
    let mut table = LemnatomicTable::new();
    let results = [
        ("1 golden divpoly and lemnatomic factors of 5", criterion_1()),
        ("2 structural suite, N <= 200", criterion_2(&mut table)),
        ("3 composition of multiplication maps", criterion_3(&mut table)),
        ("4 Frobenius patterns and outright irreducibility", criterion_4(&mut table)),
        ("5 numeric suite at 40 digits", criterion_5(&mut table)),
        ("6 constructibility equivalence", criterion_6()),
        ("7 Chebyshev suite", criterion_7()),
    ];
    let mut exit = 0;
    for (name, o) in &results {
        let verdict = if o.passed { "PASS" } else { "FAIL" };
        let note = if !o.passed && o.known { " [unattainable: exponent of (O/5O)^x is 4 < 16]" } else { "" };
        println!("{verdict} criterion {name}: {}{note}", o.detail);
        if !o.passed && !o.known {
            exit = 1;
        }
    }
    std::process::exit(exit);
}
