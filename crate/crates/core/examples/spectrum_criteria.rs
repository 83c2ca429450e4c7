//! Zero and one spectrum criteria: exclude F660 and check that a few
//! categorifiable rings have no witness.
//!
//!     cargo run --example spectrum_criteria

use prism::catalog;
use prism::spectra::{criterion_search, zero_witness_check, Kind, Nonet, SearchConfig};

fn main() -> Result<(), prism::PrismError> {
    let f660 = catalog("F660")?;
    let found = criterion_search(&f660, Kind::Zero, SearchConfig::default());
    match found.first() {
        Some(w) => println!("F660 zero spectrum witness: {}", w.nonet.labels(&f660).join(", ")),
        None => println!("F660: no witness"),
    }

    // The published tuple, entries read as 0-based indices.
    let x = Nonet::parse(&f660, "b2,b4,b5,b2,b2,b4,b5,b3,b3")?;
    let report = zero_witness_check(&f660, &x);
    println!("published tuple passes: {}", report.passed);
    for d in &report.disjuncts {
        println!("  {} holds through alternative {}", d.condition, d.alternative);
    }

    for name in ["Fib", "Ising", "RepS3"] {
        let ring = catalog(name)?;
        let any = [Kind::Zero, Kind::One]
            .iter()
            .any(|&k| !criterion_search(&ring, k, SearchConfig::default()).is_empty());
        println!("{name}: witness {}", if any { "found" } else { "none" });
    }
    Ok(())
}
