//! The character table of F210 and the positive characteristic verdict.
//!
//!     cargo run --example character_table

use prism::catalog;
use prism::chartab::{character_table, column_zero_property, lifting_verdict, ZERO_TOL};

fn main() -> Result<(), prism::PrismError> {
    let ring = catalog("F210")?;
    let table = character_table(&ring, 1e-9)?;
    print!("{}", table.to_text(&ring));
    println!("residual {:.1e}", table.residual);
    println!("every non-Perron column has a zero: {}", column_zero_property(&table, ZERO_TOL));

    // Characteristic zero is excluded separately (see the two_parallel example).
    let verdict = lifting_verdict(&ring, &table, true)?;
    for w in &verdict.primes {
        println!("prime {} divides dim {}", w.prime, w.object.as_deref().unwrap_or("-"));
    }
    println!("conclusion: {:?}", verdict.conclusion);
    Ok(())
}
