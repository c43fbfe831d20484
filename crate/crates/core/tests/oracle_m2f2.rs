use ringinv_core::field::PrimeField;
use ringinv_core::oracle::{verify, Budget, Status, CATALOG};
use ringinv_core::ring::MatrixRing;
use ringinv_core::Involution;
use std::time::Instant;

#[test]
fn catalog_holds_on_m2f2() {
    let m = MatrixRing::new(PrimeField::new(2).unwrap(), 2, Involution::Transpose).unwrap();
    let mut failures = Vec::new();
    for case in CATALOG {
        let t = Instant::now();
        let rep = verify(&m, case.id, Budget::UNLIMITED).unwrap();
        eprintln!("{:<36} {:>8} cases {:>8.2?} {}", case.id, rep.cases_checked, t.elapsed(), rep.status.as_str());
        for n in &rep.notes {
            eprintln!("    note: {n}");
        }
        if !matches!(rep.status, Status::Pass) {
            failures.push((case.id, rep.counterexample));
        }
    }
    assert!(failures.is_empty(), "{failures:#?}");
}
