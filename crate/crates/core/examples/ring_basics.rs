//! Load rings from the catalog and from JSON, check the axioms and print
//! Frobenius-Perron data.
//!
//!     cargo run --example ring_basics

use prism::{catalog, FusionRing};

fn main() -> Result<(), prism::PrismError> {
    for name in prism::catalog::names() {
        let ring = catalog(name)?;
        let report = ring.verify_axioms();
        let fp = ring.fpdim_data()?;
        println!(
            "{name:8} rank {} axioms {} type {} global {:.3}",
            ring.rank(),
            if report.passed() { "ok" } else { "FAILED" },
            fp.type_string(),
            fp.global,
        );
    }

    // A ring written by hand: Z/3 with g* = g^2.
    let doc = r#"{"name":"Z3","rank":3,"labels":["1","g","g2"],"N":[
        [[1,0,0],[0,1,0],[0,0,1]],
        [[0,1,0],[0,0,1],[1,0,0]],
        [[0,0,1],[1,0,0],[0,1,0]]]}"#;
    let z3 = FusionRing::from_json(doc)?;
    println!("\n{}: dual of g is {}", z3.name(), z3.label(z3.star(1)));

    // Breaking a coefficient is caught and located.
    let broken = catalog("RepS3")?.with_coefficient(1, 2, 1, 1);
    for check in broken.verify_axioms().checks() {
        if let Some(f) = &check.failure {
            println!("broken Rep(S3): {} fails at {:?} ({} != {})", check.axiom, f.indices, f.lhs, f.rhs);
        }
    }
    Ok(())
}
