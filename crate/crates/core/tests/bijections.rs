use parteq_core::membership::Family;
use parteq_core::{
    apply_h_inv, roundtrip_report, Bijection, BijectionError, Enumerator, FamilyValue,
};

fn exhaustive(bijection: Bijection, n_max: usize) {
    let report = roundtrip_report(bijection, n_max, &Enumerator::new()).unwrap();
    let shown = &report.failures[..report.failures.len().min(5)];
    assert!(
        report.passed(),
        "{bijection}: {} failures, first {shown:?}",
        report.failures.len()
    );
    assert_eq!(report.checked, report.checked_codomain);
    assert!(report.checked > 0);
}

#[test]
fn f1_through_30() {
    exhaustive(Bijection::F1, 30);
}

#[test]
fn f2_through_30() {
    exhaustive(Bijection::F2, 30);
}

#[test]
fn g1_through_30() {
    exhaustive(Bijection::G1, 30);
}

#[test]
fn g2_through_30() {
    exhaustive(Bijection::G2, 30);
}

#[test]
fn h_through_22() {
    exhaustive(Bijection::H, 22);
}

#[test]
fn g2_keeps_the_number_of_parts() {
    let e = Enumerator::new();
    for n in 0..=20 {
        for a in e.a(n, None).unwrap() {
            let s = parteq_core::apply_g2(&a).unwrap();
            assert_eq!(a.len(), s.positive_len(), "{a}");
        }
    }
}

#[test]
fn h_preimages_are_unique() {
    let e = Enumerator::new();
    let mut seen = 0usize;
    for n in 0..=22 {
        for lambda in e.b(n, None).unwrap() {
            seen += 1;
            match apply_h_inv(&lambda) {
                Ok(pair) => {
                    let back = Bijection::H.apply(&FamilyValue::Pair(pair), false).unwrap();
                    assert_eq!(back, FamilyValue::Bicolored(lambda));
                }
                Err(err @ BijectionError::BijectivityViolation(_)) => panic!("{lambda}: {err}"),
                Err(err) => panic!("{lambda}: {err}"),
            }
        }
    }
    assert_eq!(
        seen,
        (0..=22)
            .map(|n| e.family(Family::Ped, n, None, None).unwrap().len())
            .sum()
    );
}

#[test]
fn out_of_domain_inputs_are_rejected() {
    let not_ped = FamilyValue::Partition("2+2".parse().unwrap());
    for b in [Bijection::F1, Bijection::F2] {
        assert!(matches!(
            b.apply(&not_ped, false),
            Err(BijectionError::Domain(_))
        ));
    }
    let wrong_kind = FamilyValue::Partition("3".parse().unwrap());
    assert!(matches!(
        Bijection::H.apply(&wrong_kind, false),
        Err(BijectionError::Domain(_))
    ));
}
