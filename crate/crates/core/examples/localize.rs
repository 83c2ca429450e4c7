//! Build the localization system of F210 at 5_1 and count its solutions.
//!
//!     cargo run --release --example localize

use polyforge::{groebner, GbConfig};
use prism::catalog;
use prism::localizer::{generate_ek, localization_sets, Tag};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ring = catalog("F210")?;
    let k = ring.index_of("5_1")?;
    let sets = localization_sets(&ring, k)?;
    let names = |v: &[usize]| v.iter().map(|&i| ring.label(i)).collect::<Vec<_>>().join(", ");
    println!("S_k = {{{}}}", names(&sets.s_k));
    for c in &sets.candidates {
        println!("  multiplicity-free subset {{{}}}", names(c));
    }

    let sprime = ring.parse_labels("1,5_1,5_3")?;
    let sys = generate_ek(&ring, k, &sprime, Tag::K)?;
    print!("{}", sys.to_system(true)?.to_text());

    let (pring, polys) = sys.polynomials(false)?;
    let gb = groebner(&pring, &polys, &GbConfig::default())?;
    println!("basis of {} elements, quotient dimension {:?}", gb.len(), gb.quotient_dimension());
    Ok(())
}
