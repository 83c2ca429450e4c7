use polyforge::{groebner, ideal_equal, AnySystem, FieldSpec, GbConfig, PolyError, QuotientDim};
use prism::expr::{rational, Expr};
use prism::localizer::{
    extra_link, generate_ek, generate_full, is_reduced_instance, localization_sets, two_parallel,
    two_parallel_plan, Tag,
};
use prism::{catalog, FusionRing, PrismError};

const E1: &str = include_str!("../data/paper/e1.sys");
const E2: &str = include_str!("../data/paper/e2.sys");

fn f210() -> FusionRing {
    catalog("F210").unwrap()
}

fn ids(ring: &FusionRing, csv: &str) -> Vec<usize> {
    ring.parse_labels(csv).unwrap()
}

fn labels(ring: &FusionRing, v: &[usize]) -> Vec<String> {
    v.iter().map(|&i| ring.label(i).to_string()).collect()
}

/// Whether the aliased system generates the same ideal as the file.
fn matches_paper(sys: &prism::localizer::LocalSystem, text: &str) -> bool {
    let AnySystem::Rational(paper) = AnySystem::parse(text).unwrap() else {
        panic!("paper systems are rational")
    };
    let ours: Vec<_> = sys
        .aliased_polys()
        .iter()
        .map(|p| p.to_polynomial(&paper.ring).unwrap())
        .collect();
    ideal_equal(&paper.ring, &ours, &paper.polys, &GbConfig::default()).unwrap()
}

#[test]
fn f210_localization_sets() {
    let r = f210();
    let k = localization_sets(&r, r.index_of("5_1").unwrap()).unwrap();
    assert_eq!(labels(&r, &k.s_k), ["1", "5_1", "5_3", "7_1", "7_2"]);
    let l = localization_sets(&r, r.index_of("5_3").unwrap()).unwrap();
    assert_eq!(labels(&r, &l.s_k), ["1", "5_2", "5_3", "7_1", "7_2"]);
    // Every simple object occurs once in the square of 6_1.
    let m = localization_sets(&r, r.index_of("6_1").unwrap()).unwrap();
    assert_eq!(m.s_k, (0..7).collect::<Vec<_>>());
}

#[test]
fn e_k_reproduces_the_paper_system() {
    let r = f210();
    let sys = generate_ek(&r, r.index_of("5_1").unwrap(), &ids(&r, "1,5_1,5_3"), Tag::K).unwrap();
    assert_eq!(sys.vars.len(), 10);
    assert_eq!(sys.polys.len(), 12);
    assert_eq!(sys.alias_of("x_k[5_3,5_3]"), Some("u0"));
    assert_eq!(sys.alias_of("y_k[5_1,7_2]"), Some("v5"));
    assert!(!sys.vars.iter().any(|v| v == "x_k[5_1,5_3]"));
    assert!(matches_paper(&sys, E1));
}

#[test]
fn e_l_reproduces_the_paper_system() {
    let r = f210();
    let sys = generate_ek(&r, r.index_of("5_3").unwrap(), &ids(&r, "1,5_2,5_3"), Tag::L).unwrap();
    assert_eq!((sys.vars.len(), sys.polys.len()), (10, 12));
    assert!(sys.aliases.iter().all(|a| a.starts_with('w') || a.starts_with('z')));
    assert!(matches_paper(&sys, E2));
}

#[test]
fn extra_link_is_exact() {
    let r = f210();
    let (k, l) = (r.index_of("5_1").unwrap(), r.index_of("5_3").unwrap());
    let link = extra_link(&r, k, l).unwrap();
    let plan = two_parallel_plan(&r, k, l, Some(&ids(&r, "1,5_1,5_3")), Some(&ids(&r, "1,5_2,5_3"))).unwrap();
    let alias = |v: &str| {
        plan.e_k
            .alias_of(v)
            .or_else(|| plan.e_l.alias_of(v))
            .unwrap_or_else(|| panic!("{v} has no alias"))
            .to_string()
    };
    let aliased = link.rename(alias);
    let v = Expr::var;
    let expected = v("u0")
        .mul(&v("z2"))
        .scale(&rational(5, 1))
        .add(&v("u1").mul(&v("z4")).scale(&rational(7, 1)))
        .add(&v("u2").mul(&v("z6")).scale(&rational(7, 1)))
        .sub(&v("u0"))
        .add(&Expr::constant(rational(1, 125)));
    assert_eq!(aliased, expected);
    assert_eq!(aliased.to_string(), "1/125 - u0 + 5*u0*z2 + 7*u1*z4 + 7*u2*z6");
    assert!(extra_link(&r, k, k).is_err());
}

#[test]
fn subset_order_is_irrelevant() {
    let r = f210();
    let k = r.index_of("5_1").unwrap();
    let a = generate_ek(&r, k, &ids(&r, "1,5_1,5_3"), Tag::K).unwrap();
    let b = generate_ek(&r, k, &ids(&r, "5_3,1,5_1"), Tag::K).unwrap();
    assert_eq!(a.vars, b.vars);
    assert_eq!(a.polys, b.polys);
}

#[test]
fn invalid_subsets_are_rejected() {
    let r = f210();
    let k = r.index_of("5_1").unwrap();
    assert!(matches!(generate_ek(&r, k, &ids(&r, "1,5_1,6_1"), Tag::K), Err(PrismError::InvalidSubset(_))));
}

#[test]
fn every_variable_occurs() {
    let r = f210();
    let sys = generate_ek(&r, r.index_of("5_1").unwrap(), &ids(&r, "1,5_1,5_3,7_1"), Tag::K).unwrap();
    for v in &sys.vars {
        assert!(sys.polys.iter().any(|p| p.vars().contains(v)), "{v} is unused");
    }
}

#[test]
fn reduced_instances_of_the_full_system_generate_e_k() {
    let r = f210();
    let k = r.index_of("5_1").unwrap();
    let s = ids(&r, "1,5_1,5_3");
    let ek = generate_ek(&r, k, &s, Tag::K).unwrap();
    let full = generate_full(&r, k, &s, Tag::K).unwrap();
    assert!(full.polys.len() > ek.polys.len());
    // Every reduced equation is a rescaled three-index instance.
    let (big, all) = full.polynomials(false).unwrap();
    let monic: Vec<String> = all.iter().map(|p| p.monic().to_string()).collect();
    for p in &ek.polys {
        let q = p.to_polynomial(&big).unwrap().monic().to_string();
        assert!(monic.contains(&q), "{q}");
    }
    // The instances the reduction draws on lie in the reduced ideal.
    let (ring, ours) = ek.polynomials(false).unwrap();
    let gb = groebner(&ring, &ours, &GbConfig::default()).unwrap();
    for (p, note) in full.polys.iter().zip(&full.notes) {
        if is_reduced_instance(note, &r) {
            assert!(gb.contains(&p.to_polynomial(&ring).unwrap()).unwrap(), "{note}");
        }
    }
}

#[test]
fn e_k_has_fourteen_solutions() {
    let r = f210();
    let sys = generate_ek(&r, r.index_of("5_1").unwrap(), &ids(&r, "1,5_1,5_3"), Tag::K).unwrap();
    let (ring, polys) = sys.polynomials(false).unwrap();
    let gb = groebner(&ring, &polys, &GbConfig::default()).unwrap();
    gb.verify(&polys).unwrap();
    assert_eq!(gb.quotient_dimension(), QuotientDim::Finite(14));
}

#[test]
fn characteristic_five_cannot_hold_the_constants() {
    let r = f210();
    let (k, l) = (r.index_of("5_1").unwrap(), r.index_of("5_3").unwrap());
    let plan = two_parallel_plan(&r, k, l, Some(&ids(&r, "1,5_1,5_3")), Some(&ids(&r, "1,5_2,5_3"))).unwrap();
    let err = two_parallel(&r, &plan, FieldSpec::prime(5).unwrap(), &GbConfig::default()).unwrap_err();
    assert!(matches!(err, PrismError::Poly(PolyError::NonInvertibleConstant { .. })), "{err}");
    let out = two_parallel(&r, &plan, FieldSpec::prime(11).unwrap(), &GbConfig::default()).unwrap();
    assert_eq!(out.field, "GF(11)");
}

#[test]
fn non_integral_rings_are_rejected() {
    let fib = catalog("Fib").unwrap();
    assert!(matches!(localization_sets(&fib, 1), Err(PrismError::NotIntegral)));
}
