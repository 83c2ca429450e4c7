use std::f64::consts::PI;

use prism::catalog;
use prism::chartab::{character_table, column_zero_property, lifting_verdict, Conclusion, ZERO_TOL};
use prism::PrismError;

/// The printed F210 table, with the cyclotomic sums written as cosines.
fn paper_f210() -> Vec<Vec<f64>> {
    let c7 = |k: f64| -2.0 * (2.0 * PI * k / 7.0).cos();
    let c5 = |k: f64| 2.0 * (2.0 * PI * k / 5.0).cos();
    let (a, b, c) = (c7(1.0), c7(2.0), c7(3.0));
    let (f, g) = (c5(1.0), c5(2.0));
    vec![
        vec![1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0],
        vec![5.0, -1.0, a, b, c, 0.0, 0.0],
        vec![5.0, -1.0, b, c, a, 0.0, 0.0],
        vec![5.0, -1.0, c, a, b, 0.0, 0.0],
        vec![6.0, 0.0, -1.0, -1.0, -1.0, 1.0, 1.0],
        vec![7.0, 1.0, 0.0, 0.0, 0.0, f, g],
        vec![7.0, 1.0, 0.0, 0.0, 0.0, g, f],
    ]
}

#[test]
fn reference_numerics() {
    let t = paper_f210();
    assert!((t[1][2] + 1.2469796).abs() < 1e-7);
    assert!((t[1][3] - 0.4450419).abs() < 1e-7);
    assert!((t[1][4] - 1.8019377).abs() < 1e-7);
    assert!((t[5][5] - 0.6180340).abs() < 1e-7);
    assert!((t[5][6] + 1.6180340).abs() < 1e-7);
}

#[test]
fn f210_table_matches_up_to_column_permutation() {
    let ring = catalog("F210").unwrap();
    let table = character_table(&ring, 1e-9).unwrap();
    assert!(table.residual < 1e-9);
    let paper = paper_f210();
    let close = |j: usize, pj: usize| (0..7).all(|i| (table.values[i][j] - paper[i][pj]).norm() < 1e-8);
    assert!(close(0, 0), "first column must be the Perron column");
    let mut used = [false; 7];
    for pj in 1..7 {
        let j = (1..7)
            .find(|&j| !used[j] && close(j, pj))
            .unwrap_or_else(|| panic!("paper column {pj} has no match"));
        used[j] = true;
    }
}

#[test]
fn f210_lifting_verdict() {
    let ring = catalog("F210").unwrap();
    let table = character_table(&ring, 1e-9).unwrap();
    assert!(column_zero_property(&table, ZERO_TOL));
    let v = lifting_verdict(&ring, &table, true).unwrap();
    assert_eq!(v.conclusion, Conclusion::NoPositiveCharPivotalCategorification);
    let primes: Vec<(u64, &str)> = v.primes.iter().map(|w| (w.prime, w.object.as_deref().unwrap())).collect();
    assert_eq!(primes, [(2, "6_1"), (3, "6_1"), (5, "5_1"), (7, "7_1")]);
    let unproven = lifting_verdict(&ring, &table, false).unwrap();
    assert_eq!(unproven.conclusion, Conclusion::Inconclusive);
    assert!(unproven.column_zero_ok && unproven.prime_cover_ok);
}

#[test]
fn rep_s3_has_a_zero_free_column() {
    let ring = catalog("RepS3").unwrap();
    let table = character_table(&ring, 1e-9).unwrap();
    // The sign character is never zero.
    assert!(!column_zero_property(&table, ZERO_TOL));
    let v = lifting_verdict(&ring, &table, true).unwrap();
    assert_eq!(v.conclusion, Conclusion::Inconclusive);
}

#[test]
fn non_commutative_and_non_integral_inputs() {
    let vec_s3 = catalog("VecS3").unwrap();
    assert!(matches!(character_table(&vec_s3, 1e-9), Err(PrismError::NotCommutative { .. })));
    let fib = catalog("Fib").unwrap();
    let table = character_table(&fib, 1e-9).unwrap();
    assert!(matches!(lifting_verdict(&fib, &table, true), Err(PrismError::NotIntegral)));
}
