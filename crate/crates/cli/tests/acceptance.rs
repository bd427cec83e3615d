//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails. Counts are compared exactly; runtime
//! budgets are listed with each criterion.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use parteq_core::counts::{verify_counts, CountIdentity};
use parteq_core::families::ColoredPart;
use parteq_core::qseries::{
    poch_infinite, poch_infinite_inv, verify_identity, Identity, QMonomial,
};
use parteq_core::{
    apply_g2, apply_h_inv, roundtrip_report, BicoloredPartition, Bijection, BijectionError,
    Enumerator,
};

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

struct Criterion {
    id: u32,
    name: &'static str,
    tolerance: &'static str,
    budget: Duration,
    check: fn() -> Outcome,
}

fn ped_prefix() -> Outcome {
    let order = 8;
    let num = poch_infinite(-QMonomial::q_power(2), 2, order).unwrap();
    let den = poch_infinite_inv(QMonomial::q_power(1), 2, order).unwrap();
    let series = num.mul(&den).unwrap();
    let got: Vec<String> = series
        .coefficients()
        .iter()
        .map(|c| c.to_string())
        .collect();
    let expected = ["1", "1", "2", "3", "4", "6", "9", "12"];
    outcome(got == expected, format!("coefficients {}", got.join(",")))
}

fn counts(identity: CountIdentity, n_max: usize) -> Outcome {
    let r = verify_counts(identity, n_max, &Enumerator::new()).unwrap();
    let first = r
        .mismatches
        .first()
        .map(|m| format!(" first mismatch {m:?}"))
        .unwrap_or_default();
    outcome(
        r.passed(),
        format!(
            "n<={n_max} cells={} objects={} mismatches={}{first}",
            r.cells_checked,
            r.objects,
            r.mismatches.len()
        ),
    )
}

fn distinct_even_refined() -> Outcome {
    counts(CountIdentity::DistinctEven, 30)
}

fn bijections_exhaustive() -> Outcome {
    let e = Enumerator::new();
    let mut passed = true;
    let mut notes = Vec::new();
    for (b, n_max) in [
        (Bijection::F1, 30),
        (Bijection::F2, 30),
        (Bijection::G1, 30),
        (Bijection::G2, 30),
        (Bijection::H, 22),
    ] {
        let r = roundtrip_report(b, n_max, &e).unwrap();
        passed &= r.passed();
        notes.push(format!("{b}:{}/{}", r.checked, r.failures.len()));
    }
    let mut length_changes = 0;
    for n in 0..=30 {
        for a in e.a(n, None).unwrap() {
            if apply_g2(&a).map(|s| s.positive_len()) != Ok(a.len()) {
                length_changes += 1;
            }
        }
    }
    passed &= length_changes == 0;
    outcome(
        passed,
        format!(
            "checked/failures {}; g2 part-count changes {length_changes}",
            notes.join(" ")
        ),
    )
}

fn labeled() -> Outcome {
    counts(CountIdentity::Labeled, 30)
}

fn bicolored() -> Outcome {
    let base = counts(CountIdentity::Bicolored, 22);
    let listed: Vec<BicoloredPartition> = [
        vec![ColoredPart::blue(4)],
        vec![ColoredPart::blue(3), ColoredPart::blue(1)],
        vec![ColoredPart::blue(2), ColoredPart::red(2)],
        vec![
            ColoredPart::blue(2),
            ColoredPart::blue(1),
            ColoredPart::red(1),
        ],
    ]
    .into_iter()
    .map(|entries| BicoloredPartition::new(entries).unwrap())
    .collect();
    let b4 = Enumerator::new().b(4, None).unwrap();
    let same = b4 == listed;
    let shown: Vec<String> = b4.iter().map(|b| b.to_string()).collect();
    outcome(
        base.passed && same,
        format!("{}; B(4) = {}", base.detail, shown.join(", ")),
    )
}

fn identities() -> Outcome {
    let mut passed = true;
    let mut notes = Vec::new();
    for identity in Identity::ALL {
        let r = verify_identity(identity, 200);
        passed &= r.equal;
        match r.first_mismatch {
            None => notes.push(identity.tag().to_string()),
            Some(m) => notes.push(format!("{identity}!q^{}", m.degree)),
        }
    }
    outcome(passed, format!("N=200 equal: {}", notes.join(" ")))
}

fn golden_table() -> Outcome {
    let run = Command::new(env!("CARGO_BIN_EXE_parteq"))
        .args(["table11", "--check"])
        .output()
        .expect("binary runs");
    let stdout = String::from_utf8_lossy(&run.stdout);
    let passed = run.status.code() == Some(0) && stdout.trim() == "38 rows match";
    outcome(
        passed,
        format!("exit {:?}, `{}`", run.status.code(), stdout.trim()),
    )
}

fn h_inverse_unique() -> Outcome {
    let e = Enumerator::new();
    let (mut checked, mut violations, mut other) = (0, 0, 0);
    for n in 0..=22 {
        for lambda in e.b(n, None).unwrap() {
            checked += 1;
            match apply_h_inv(&lambda) {
                Ok(_) => {}
                Err(BijectionError::BijectivityViolation(_)) => violations += 1,
                Err(_) => other += 1,
            }
        }
    }
    outcome(
        violations == 0 && other == 0,
        format!("checked={checked} violations={violations} other-errors={other}"),
    )
}

fn main() -> ExitCode {
    let criteria = [
        Criterion {
            id: 1,
            name: "generating-function prefix 1,1,2,3,4,6,9,12",
            tolerance: "exact",
            budget: Duration::from_secs(1),
            check: ped_prefix,
        },
        Criterion {
            id: 2,
            name: "ped(n,m,k) = F(n,m,k) = F-1(n,m,k), n <= 30",
            tolerance: "exact",
            budget: Duration::from_secs(120),
            check: distinct_even_refined,
        },
        Criterion {
            id: 3,
            name: "f1, f2, g1, g2 (n <= 30), h (n <= 22) round trips; g2 keeps part count",
            tolerance: "zero failures",
            budget: Duration::from_secs(300),
            check: bijections_exhaustive,
        },
        Criterion {
            id: 4,
            name: "V(n,k) = A(n,k) = A-1(n,k), sum_k V(n,k) = ped(n), n <= 30",
            tolerance: "exact",
            budget: Duration::from_secs(120),
            check: labeled,
        },
        Criterion {
            id: 5,
            name: "ped(n,k) = B(n,k), n <= 22; B(4) as listed",
            tolerance: "exact",
            budget: Duration::from_secs(120),
            check: bicolored,
        },
        Criterion {
            id: 6,
            name: "q-series identity catalog at order 200",
            tolerance: "exact polynomial coefficients",
            budget: Duration::from_secs(60),
            check: identities,
        },
        Criterion {
            id: 7,
            name: "table11 --check matches the 38 golden rows",
            tolerance: "byte-exact",
            budget: Duration::from_secs(10),
            check: golden_table,
        },
        Criterion {
            id: 8,
            name: "h inverse finds exactly one preimage on B(n), n <= 22",
            tolerance: "zero bijectivity violations",
            budget: Duration::from_secs(120),
            check: h_inverse_unique,
        },
    ];

    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let result = (c.check)();
        let elapsed = start.elapsed();
        let in_budget = elapsed <= c.budget;
        let passed = result.passed && in_budget;
        if !passed {
            failed += 1;
        }
        println!(
            "{} [{}] {} | {} | tolerance: {}, runtime {:.2?} <= {:?}{}",
            if passed { "PASS" } else { "FAIL" },
            c.id,
            c.name,
            result.detail,
            c.tolerance,
            elapsed,
            c.budget,
            if in_budget { "" } else { " (over budget)" },
        );
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
