use num_bigint::BigInt;
use turan_core::checks::run_all;
use turan_core::jensen::jensen_window_report;
use turan_core::laguerre::laguerre_at_zero;
use turan_core::oracle::{count_partitions, count_plane_partitions};
use turan_core::seqcore::{
    load_sequence, partition_sequence, plane_partition_sequence, save_sequence, SequenceCache,
};
use turan_core::thresholds::{
    reproduce_table1, reproduce_table2, threshold_search, PredicateSpec, ThresholdStatus,
    REFERENCE_TABLE1, REFERENCE_TABLE2,
};
use turan_core::turan::{turan_iterate, turan_value, AnchorConvention};
use turan_core::{Provenance, Rational};

#[test]
fn generators_match_brute_force() {
    let p = partition_sequence(40);
    let pp = plane_partition_sequence(14).unwrap();
    for n in 0..=40 {
        assert_eq!(p.get(n).unwrap(), &Rational::from_integer(count_partitions(n).into()));
    }
    for n in 0..=14 {
        assert_eq!(pp.get(n).unwrap(), &Rational::from_integer(count_plane_partitions(n).into()));
    }
}

#[test]
fn cached_sequence_survives_a_file_roundtrip() {
    let dir = tempfile::tempdir().unwrap();
    let cache = SequenceCache::new(dir.path().join("c"));
    let a = cache
        .get_or_generate(&Provenance::Partition, 300, || Ok(partition_sequence(300)))
        .unwrap();
    let b = cache
        .get_or_generate(&Provenance::Partition, 300, || panic!("regenerated"))
        .unwrap();
    assert_eq!(a, b);
    let path = dir.path().join("p.seq");
    save_sequence(&a, &path).unwrap();
    let c = load_sequence(&path).unwrap();
    assert_eq!(c.terms(), a.terms());
    let t2 = |s| turan_value(s, 2, 26, AnchorConvention::Centered).unwrap();
    assert_eq!(t2(&a), t2(&c));
    assert_eq!(t2(&c), Rational::from_integer(BigInt::from(40516)));
}

#[test]
fn operator_families_agree_on_partitions() {
    let p = partition_sequence(260);
    // T2 centered at n+1 and L_1 at n share one value
    for n in 1..200 {
        let t = turan_value(&p, 2, n + 1, AnchorConvention::Centered).unwrap();
        assert_eq!(t, laguerre_at_zero(&p, 1, n).unwrap(), "n={n}");
    }
    let jensen = jensen_window_report(&p, 2, 1, 200).unwrap();
    let laguerre = threshold_search(PredicateSpec::laguerre(1), &p, 200).unwrap();
    assert_eq!(jensen.onset, Some(25));
    assert_eq!(laguerre.onset, Some(25));
    let it = turan_iterate(&p, 2, 2, AnchorConvention::Centered).unwrap();
    assert!(it.domain().0 >= 2);
}

#[test]
fn table_slices_reproduce() {
    let p = partition_sequence(800);
    let t1 = reproduce_table1(2, 2, 800, &p).unwrap();
    assert!(t1.all_match());
    assert_eq!(t1.cell(2, 2).unwrap().onset, Some(REFERENCE_TABLE1[1][1]));
    let t2 = reproduce_table2(3, 800, &p).unwrap();
    assert_eq!(t2.onsets(), REFERENCE_TABLE2[..3].iter().map(|&v| Some(v)).collect::<Vec<_>>());
}

#[test]
fn onset_reports_are_suffix_minimal() {
    let p = partition_sequence(500);
    let r = threshold_search(PredicateSpec::turan(3, 1), &p, 490).unwrap();
    assert_eq!(r.onset, Some(94));
    assert_eq!(r.status, ThresholdStatus::VerifiedWindow);
    let w = r.failure_witness.unwrap();
    assert_eq!(w.index, 93);
    assert!(w.value == "0" || w.value.starts_with('-'), "{}", w.value);
}

#[test]
fn property_suites_pass() {
    for suite in run_all(11).unwrap() {
        assert!(suite.passed(), "{}", suite.summary_line());
    }
}
