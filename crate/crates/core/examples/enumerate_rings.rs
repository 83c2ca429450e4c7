//! Enumerate small fusion rings and run both spectrum criteria on each.
//!
//!     cargo run --example enumerate_rings

use prism::spectra::{criterion_search, Kind, SearchConfig};
use prism::FusionRing;

fn main() {
    for (rank, max) in [(2, 3), (3, 2)] {
        let rings = FusionRing::enumerate(rank, max);
        println!("rank {rank}, coefficients <= {max}: {} rings", rings.len());
        for ring in &rings {
            let hits: Vec<&str> = [(Kind::Zero, "zero"), (Kind::One, "one")]
                .iter()
                .filter(|(k, _)| !criterion_search(ring, *k, SearchConfig::default()).is_empty())
                .map(|(_, n)| *n)
                .collect();
            let dims = ring.fpdim_data().map(|fp| fp.type_string()).unwrap_or_default();
            println!("  {:16} {dims:24} {}", ring.name(), if hits.is_empty() { "-".into() } else { hits.join("+") });
        }
    }
}
