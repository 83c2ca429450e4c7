//! Rule out characteristic zero categorifications of F210 by combining the
//! localizations at 5_1 and 5_3 with their linking equation.
//!
//!     cargo run --release --example two_parallel

use polyforge::{FieldSpec, GbConfig};
use prism::catalog;
use prism::localizer::{two_parallel, two_parallel_plan};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ring = catalog("F210")?;
    let (k, l) = (ring.index_of("5_1")?, ring.index_of("5_3")?);
    let sk = ring.parse_labels("1,5_1,5_3")?;
    let sl = ring.parse_labels("1,5_2,5_3")?;
    let plan = two_parallel_plan(&ring, k, l, Some(&sk), Some(&sl))?;
    println!("link: {}", plan.link);

    let out = two_parallel(&ring, &plan, FieldSpec::Rationals, &GbConfig::default())?;
    println!("E_k: {} vars, {} equations, basis {}", out.vars_k, out.equations_k, out.basis_k);
    println!("E_l: {} vars, {} equations, basis {}", out.vars_l, out.equations_l, out.basis_l);
    println!("final basis {:?}: {:?}", out.final_basis, out.verdict);
    println!("timings (ms): {:?}", out.timings_ms);
    Ok(())
}
