//! Triangular prism equations: the Fibonacci system with a symbolic
//! dimension, and one localization configuration of F210.
//!
//!     cargo run --example prism_equations

use polyforge::{groebner, GbConfig};
use prism::catalog;
use prism::expr::{ring_over, Expr};
use prism::tpe::{tpe_equation, tpe_system, IdMap, TpConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let fib = catalog("Fib")?;
    let sys = tpe_system(&fib, &[0, 1], IdMap::Symmetric { symbolic_dims: true })?;
    println!(
        "Fibonacci: {} admissible configurations, {} up to rotation, {} equations",
        sys.admissible,
        sys.classes,
        sys.equations.len()
    );
    for e in &sys.equations {
        println!("  {e}");
    }
    let d = Expr::var("d[tau]");
    let mut polys = sys.polys();
    polys.push(d.pow(2).sub(&d).sub(&Expr::int(1)));
    let ring = ring_over(&sys.vars())?;
    let ps = polys.iter().map(|p| p.to_polynomial(&ring)).collect::<Result<Vec<_>, _>>()?;
    let gb = groebner(&ring, &ps, &GbConfig::default())?;
    println!("with d^2 = d + 1 the basis is trivial: {}", gb.is_trivial());

    let f210 = catalog("F210")?;
    let (k, l) = (f210.index_of("5_1")?, f210.index_of("5_3")?);
    let link = TpConfig::parse(&f210, "5_1,5_1,5_3,5_1,5_3,5_3,5_1,5_3,5_3")?;
    let e = tpe_equation(&f210, &link, IdMap::Localization { k, l: Some(l) })?;
    println!("\nF210 link configuration: {e}");
    Ok(())
}
