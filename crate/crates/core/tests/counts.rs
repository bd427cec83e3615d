use parteq_core::counts::{verify_counts, CountIdentity};
use parteq_core::Enumerator;

#[test]
fn distinct_even_refined_through_30() {
    let report = verify_counts(CountIdentity::DistinctEven, 30, &Enumerator::new()).unwrap();
    assert!(report.passed(), "{:?}", report.mismatches);
}

#[test]
fn labeled_through_30() {
    let report = verify_counts(CountIdentity::Labeled, 30, &Enumerator::new()).unwrap();
    assert!(report.passed(), "{:?}", report.mismatches);
}

#[test]
fn bicolored_through_22() {
    let report = verify_counts(CountIdentity::Bicolored, 22, &Enumerator::new()).unwrap();
    assert!(report.passed(), "{:?}", report.mismatches);
}

#[test]
fn ped_totals_match_a_recursion() {
    // Independent count: each odd size any number of times, each even size
    // at most once, done with plain integers.
    let n_max = 30;
    let mut ways = vec![0u64; n_max + 1];
    ways[0] = 1;
    for part in 1..=n_max {
        if part % 2 == 1 {
            for w in part..=n_max {
                ways[w] += ways[w - part];
            }
        } else {
            for w in (part..=n_max).rev() {
                ways[w] += ways[w - part];
            }
        }
    }
    let e = Enumerator::new();
    for (n, &expected) in ways.iter().enumerate() {
        assert_eq!(
            e.ped(n, None, None).unwrap().len() as u64,
            expected,
            "n = {n}"
        );
    }
}
