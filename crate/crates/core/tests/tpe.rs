use std::collections::BTreeSet;

use polyforge::{groebner, GbConfig};
use prism::expr::{ring_over, Expr};
use prism::localizer::{extra_link, generate_full, Tag};
use prism::tpe::{
    a4_edge_perms, apply, localization_families, tpe_equation, tpe_system, IdMap, TetraKey, TpConfig, STARS,
};
use prism::{catalog, FusionRing, PrismError};

fn compose(a: &[usize; 6], b: &[usize; 6]) -> [usize; 6] {
    std::array::from_fn(|e| a[b[e]])
}

/// Monic normal forms of nonzero expressions, as strings.
fn monic(exprs: &[Expr]) -> BTreeSet<String> {
    let mut vars: Vec<String> = exprs.iter().flat_map(Expr::vars).collect();
    vars.sort();
    vars.dedup();
    if vars.is_empty() {
        return exprs.iter().filter(|e| !e.is_zero()).map(|_| "1".to_string()).collect();
    }
    let ring = ring_over(&vars).unwrap();
    exprs
        .iter()
        .filter(|e| !e.is_zero())
        .map(|e| e.to_polynomial(&ring).unwrap().monic().to_string())
        .collect()
}

#[test]
fn a4_is_a_group_preserving_vertex_stars() {
    let perms: BTreeSet<[usize; 6]> = a4_edge_perms().into_iter().collect();
    assert_eq!(perms.len(), 12);
    assert!(perms.contains(&[0, 1, 2, 3, 4, 5]));
    for a in &perms {
        for b in &perms {
            assert!(perms.contains(&compose(a, b)));
        }
        let stars: BTreeSet<BTreeSet<usize>> = STARS.iter().map(|s| s.iter().copied().collect()).collect();
        for s in STARS {
            let image: BTreeSet<usize> = s.iter().map(|&e| a[e]).collect();
            assert!(stars.contains(&image));
        }
    }
}

#[test]
fn canonical_form_is_constant_on_orbits() {
    let keys = [[1, 2, 3, 4, 5, 6], [0, 0, 1, 1, 2, 2], [3, 3, 3, 3, 3, 3], [1, 1, 2, 3, 3, 1]];
    for k in keys {
        let t = TetraKey(k);
        let c = t.canonical();
        let orbit = t.orbit();
        assert_eq!(12 % orbit.len(), 0);
        for s in a4_edge_perms() {
            assert_eq!(TetraKey(apply(&s, &k)).canonical(), c);
        }
        assert_eq!(orbit[0], c.0);
    }
    assert_eq!(TetraKey([1, 2, 3, 4, 5, 6]).orbit().len(), 12);
    assert_eq!(TetraKey([3; 6]).orbit().len(), 1);
}

fn f210_lk(ring: &FusionRing) -> (usize, usize, Vec<usize>) {
    (ring.index_of("5_1").unwrap(), ring.index_of("5_3").unwrap(), ring.parse_labels("1,5_1,5_3").unwrap())
}

#[test]
fn localization_families_reproduce_the_localizer() {
    let ring = catalog("F210").unwrap();
    let (k, l, s) = f210_lk(&ring);
    let idmap = IdMap::Localization { k, l: Some(l) };
    let (triple, mixed, link) = localization_families(&s, k, Some(l));
    let tpe: Vec<Expr> = triple
        .iter()
        .chain(&mixed)
        .map(|c| tpe_equation(&ring, c, idmap).unwrap().poly())
        .collect();
    let full = generate_full(&ring, k, &s, Tag::K).unwrap();
    assert_eq!(monic(&tpe), monic(&full.polys));

    let link_tpe = tpe_equation(&ring, &link.unwrap(), idmap).unwrap().poly();
    let link_ref = extra_link(&ring, k, l).unwrap();
    assert_eq!(monic(&[link_tpe]), monic(&[link_ref]));
}

#[test]
fn rotated_configurations_give_the_same_equation() {
    let ring = catalog("F210").unwrap();
    let (k, l, s) = f210_lk(&ring);
    let idmap = IdMap::Localization { k, l: Some(l) };
    let (triple, mixed, _) = localization_families(&s, k, Some(l));
    for c in triple.iter().chain(&mixed) {
        let p = tpe_equation(&ring, c, idmap).unwrap().poly();
        let r1 = c.rotate();
        assert_eq!(r1.rotate().rotate(), *c);
        for r in [r1, r1.rotate()] {
            match tpe_equation(&ring, &r, idmap) {
                Ok(e) => assert_eq!(monic(&[e.poly()]), monic(&[p.clone()])),
                // Some rotations leave the localization shapes.
                Err(PrismError::IdMapMiss(_)) => {}
                Err(e) => panic!("{e}"),
            }
        }
    }
    let fib = catalog("Fib").unwrap();
    let idmap = IdMap::Symmetric { symbolic_dims: true };
    let c = TpConfig([1, 1, 0, 1, 1, 1, 1, 1, 1]);
    let p = tpe_equation(&fib, &c, idmap).unwrap().poly();
    assert_eq!(tpe_equation(&fib, &c.rotate(), idmap).unwrap().poly(), p);
}

#[test]
fn all_unit_configuration_is_a_tautology() {
    let ring = catalog("F210").unwrap();
    let (k, l, _) = f210_lk(&ring);
    let e = tpe_equation(&ring, &TpConfig([0; 9]), IdMap::Localization { k, l: Some(l) }).unwrap();
    assert!(e.is_tautology());
}

#[test]
fn trivial_ring_has_no_equations() {
    let ring = catalog("trivial").unwrap();
    let sys = tpe_system(&ring, &[0], IdMap::symmetric()).unwrap();
    assert_eq!((sys.admissible, sys.classes), (1, 1));
    assert!(sys.equations.is_empty());
}

#[test]
fn fibonacci_all_tau_equation() {
    let fib = catalog("Fib").unwrap();
    let e = tpe_equation(&fib, &TpConfig([1; 9]), IdMap::Symmetric { symbolic_dims: true }).unwrap();
    let t = "t[tau,tau,tau,tau,tau,tau]";
    // Both channels 1 and tau contribute on the right.
    assert_eq!(e.lhs, Expr::var(t).pow(2));
    assert!(e.rhs.vars().contains(&"d[tau]".to_string()));
    assert!(e.rhs.vars().contains(&t.to_string()));
    assert!(!e.is_tautology());
}

#[test]
fn non_self_dual_labels_are_refused() {
    let z3 = FusionRing::enumerate(3, 1).into_iter().find(|r| !r.is_self_dual(1)).unwrap();
    assert!(matches!(
        tpe_equation(&z3, &TpConfig([1; 9]), IdMap::symmetric()),
        Err(PrismError::NotSelfDual(_))
    ));
}

fn fib_system() -> (Vec<String>, Vec<Expr>) {
    let fib = catalog("Fib").unwrap();
    let sys = tpe_system(&fib, &[0, 1], IdMap::Symmetric { symbolic_dims: true }).unwrap();
    assert!(sys.classes < sys.admissible);
    let mut polys = sys.polys();
    let d = Expr::var("d[tau]");
    polys.push(d.pow(2).sub(&d).sub(&Expr::int(1)));
    (sys.vars(), polys)
}

#[test]
fn fibonacci_system_is_consistent() {
    let (vars, polys) = fib_system();
    assert!(vars.contains(&"d[tau]".to_string()));
    let ring = ring_over(&vars).unwrap();
    let ps: Vec<_> = polys.iter().map(|p| p.to_polynomial(&ring).unwrap()).collect();
    let gb = groebner(&ring, &ps, &GbConfig::default()).unwrap();
    gb.verify(&ps).unwrap();
    assert!(!gb.is_trivial());
}

#[test]
fn fibonacci_system_has_a_point_with_nonzero_tetrahedra() {
    // The ideal also contains the all-zero point of the tetrahedra, so ask
    // for a solution where every tetrahedron is invertible.
    let (mut vars, mut polys) = fib_system();
    let product = vars
        .iter()
        .filter(|v| v.starts_with("t["))
        .fold(Expr::var("s"), |acc, v| acc.mul(&Expr::var(v.as_str())));
    polys.push(product.sub(&Expr::int(1)));
    vars.push("s".into());
    let ring = ring_over(&vars).unwrap();
    let ps: Vec<_> = polys.iter().map(|p| p.to_polynomial(&ring).unwrap()).collect();
    let gb = groebner(&ring, &ps, &GbConfig::default()).unwrap();
    assert!(!gb.is_trivial());
}
