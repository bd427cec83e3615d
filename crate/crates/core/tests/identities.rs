use parteq_core::qseries::{verify_identity, Identity};

#[test]
fn catalog_at_order_200() {
    for identity in Identity::ALL {
        let start = std::time::Instant::now();
        let report = verify_identity(identity, 200);
        println!(
            "{identity}: equal={} in {:?}",
            report.equal,
            start.elapsed()
        );
        assert!(report.equal, "{identity}: {:?}", report.first_mismatch);
        assert_eq!(
            report.enumerated_through,
            identity.default_enumeration_bound()
        );
    }
}
