//! Reduced Groebner bases over Q and GF(p): membership, quotient
//! dimension and an inconsistent system.
//!
//!     cargo run -p polyforge --example ideals

use polyforge::{groebner, parse_polynomial, specialize, AnySystem, GbConfig, PrimeField};

const CYCLIC3: &str = "vars: x y z
field: Q
x + y + z
x*y + y*z + z*x
x*y*z - 1
";

fn main() -> Result<(), polyforge::PolyError> {
    let AnySystem::Rational(sys) = AnySystem::parse(CYCLIC3)? else {
        unreachable!("the header says Q")
    };
    let cfg = GbConfig::default();
    let gb = groebner(&sys.ring, &sys.polys, &cfg)?;
    println!("cyclic-3 basis:");
    for p in gb.polys() {
        println!("  {p}");
    }
    println!("quotient dimension {:?}", gb.quotient_dimension());
    let f = parse_polynomial(&sys.ring, "x^3 - 1")?;
    println!("x^3 - 1 in the ideal: {}", gb.contains(&f)?);
    gb.verify(&sys.polys)?;

    // The same ideal modulo 7.
    let (ring7, polys7) = specialize(&sys.polys, PrimeField::new(7)?)?;
    let gb7 = groebner(&ring7, &polys7, &cfg)?;
    println!("over GF(7): {} elements, dimension {:?}", gb7.len(), gb7.quotient_dimension());

    let AnySystem::Rational(bad) = AnySystem::parse("vars: x y\nfield: Q\nx^2 + y^2 - 1\nx - y\nx*y - 1\n")? else {
        unreachable!()
    };
    println!("inconsistent system has basis [1]: {}", groebner(&bad.ring, &bad.polys, &cfg)?.is_trivial());
    Ok(())
}
