use std::time::Instant;

use polyforge::{groebner, AnySystem, GbConfig, QuotientDim};

const E1: &str = "vars: u0 u1 u2 v0 v1 v2 v3 v4 v5 v6
field: Q
u0 + 7/5*u1 + 7/5*u2 - 4/125
5*v0 + 5*v1 + 7*v3 + 7*v5 + 1/5
25*v0^2 + 25*v1^2 + 35*v3^2 + 35*v5^2 - 4/5
5*v0^3 + 5*v1^3 + 7*v3^3 + 7*v5^3 - v0^2 + 1/125
5*v0*v1^2 + 5*v1*v2^2 + 7*v3*v4^2 + 7*v5*v6^2 + 1/125
5*u0*v1 - v1^2 + 7*u1*v3 + 7*u2*v5 + 1/125
5*v1 + 5*v2 + 7*v4 + 7*v6 + 1/5
25*v0*v1 + 25*v1*v2 + 35*v3*v4 + 35*v5*v6 + 1/5
5*v0^2*v1 + 5*v1^2*v2 + 7*v3^2*v4 + 7*v5^2*v6 - v1^2 + 1/125
25*v1^2 + 25*v2^2 + 35*v4^2 + 35*v6^2 - 4/5
5*v1^3 + 5*v2^3 + 7*v4^3 + 7*v6^3 - u0 + 1/125
5*u0*v2 - v2^2 + 7*u1*v4 + 7*u2*v6 + 1/125
";

#[test]
fn e1_has_fourteen_standard_monomials() {
    let AnySystem::Rational(sys) = AnySystem::parse(E1).unwrap() else { panic!() };
    let t = Instant::now();
    let gb = groebner(&sys.ring, &sys.polys, &GbConfig::default()).unwrap();
    eprintln!("E1: {} elements in {:?}, {:?}", gb.len(), t.elapsed(), gb.stats());
    assert_eq!(gb.quotient_dimension(), QuotientDim::Finite(14));
}
