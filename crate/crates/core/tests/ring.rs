use prism::{catalog, FusionRing, PrismError};

#[test]
fn catalog_rings_pass_the_axioms() {
    for name in prism::catalog::names() {
        let r = catalog(name).unwrap();
        assert!(r.verify_axioms().passed(), "{name}");
    }
}

#[test]
fn f210_shape_and_dimensions() {
    let r = catalog("F210").unwrap();
    assert_eq!(r.rank(), 7);
    let fp = r.fpdim_data().unwrap();
    assert_eq!(fp.exact, Some(vec![1, 5, 5, 5, 6, 7, 7]));
    assert_eq!(fp.global_exact(), Some(210));
    assert_eq!(fp.type_string(), "[[1,1],[5,3],[6,1],[7,2]]");
    assert!(r.is_commutative());
    assert!((0..7).all(|i| r.is_self_dual(i)));
}

#[test]
fn f660_duality_swaps_the_five_dimensional_pair() {
    let r = catalog("F660").unwrap();
    assert_eq!(r.rank(), 8);
    let fp = r.fpdim_data().unwrap();
    assert_eq!(fp.global_exact(), Some(660));
    let swapped: Vec<usize> = (0..8).filter(|&i| !r.is_self_dual(i)).collect();
    assert_eq!(swapped.len(), 2);
    let (a, b) = (swapped[0], swapped[1]);
    assert_eq!(r.star(a), b);
    assert_eq!(fp.exact.as_ref().unwrap()[a], 5);
    assert_eq!(fp.exact.as_ref().unwrap()[b], 5);
}

#[test]
fn fibonacci_rule() {
    let r = catalog("Fib").unwrap();
    assert_eq!(r.matrix(1), vec![vec![0, 1], vec![1, 1]]);
    let fp = r.fpdim_data().unwrap();
    assert!((fp.dims[1] - (1.0 + 5f64.sqrt()) / 2.0).abs() < 1e-12);
    assert!(!fp.is_integral());
}

#[test]
fn vec_s3_is_not_commutative() {
    let r = catalog("VecS3").unwrap();
    assert!(!r.is_commutative());
    assert_eq!(r.fpdim_data().unwrap().global_exact(), Some(6));
}

#[test]
fn json_round_trip_is_exact() {
    for name in prism::catalog::names() {
        let doc = prism::catalog::document(name).unwrap();
        let again = FusionRing::from_json(doc).unwrap().to_json();
        assert_eq!(again, doc);
    }
}

#[test]
fn broken_ring_is_located() {
    // s t = s + t in Rep(S3) breaks Frobenius reciprocity.
    let r = catalog("RepS3").unwrap().with_coefficient(1, 2, 1, 1);
    let rep = r.verify_axioms();
    assert!(!rep.passed());
    assert!(!rep.frobenius.passed);
    assert!(rep.frobenius.failure.is_some());
    // A rank 2 ring is always associative, so g^2 = 1 + 2g is still valid.
    assert!(catalog("Fib").unwrap().with_coefficient(1, 1, 1, 2).verify_axioms().passed());
}

#[test]
fn malformed_documents_are_rejected() {
    let neg = r#"{"name":"x","rank":1,"labels":["1"],"N":[[[-1]]]}"#;
    assert!(matches!(FusionRing::from_json(neg), Err(PrismError::Negative { .. })));
    let shape = r#"{"name":"x","rank":2,"labels":["1","g"],"N":[[[1,0],[0,1]]]}"#;
    assert!(matches!(FusionRing::from_json(shape), Err(PrismError::NotSquare { .. })));
    let extra = r#"{"name":"x","rank":1,"labels":["1"],"N":[[[1]]],"colour":1}"#;
    assert!(FusionRing::from_json(extra).is_err());
}

#[test]
fn label_aliases() {
    let r = catalog("F210").unwrap();
    assert_eq!(r.index_of("5a").unwrap(), r.index_of("5_1").unwrap());
    assert_eq!(r.index_of("5c").unwrap(), r.index_of("5_3").unwrap());
    assert!(matches!(r.index_of("5z"), Err(PrismError::UnknownLabel(_))));
    assert_eq!(r.parse_labels("1, 5a ,7_2").unwrap(), vec![0, 1, 6]);
}

#[test]
fn small_rank_enumeration() {
    let rank2 = FusionRing::enumerate(2, 2);
    // g^2 = 1 + n g for n = 0, 1, 2.
    assert_eq!(rank2.len(), 3);
    let rank3 = FusionRing::enumerate(3, 1);
    assert!(rank3.len() >= 4);
    assert!(rank3.iter().all(|r| r.verify_axioms().passed()));
}
