//! Built-in rings. The two rank 7 and 8 examples are transcribed from their
//! published fusion matrices; the rest are the standard small examples.

use crate::error::PrismError;
use crate::ring::FusionRing;

const ENTRIES: &[(&str, &str)] = &[
    ("trivial", include_str!("../data/rings/trivial.json")),
    ("Z2", include_str!("../data/rings/Z2.json")),
    ("Fib", include_str!("../data/rings/Fib.json")),
    ("Ising", include_str!("../data/rings/Ising.json")),
    ("RepS3", include_str!("../data/rings/RepS3.json")),
    ("VecS3", include_str!("../data/rings/VecS3.json")),
    ("F210", include_str!("../data/rings/F210.json")),
    ("F660", include_str!("../data/rings/F660.json")),
];

/// Names accepted by [`catalog`], in catalog order.
pub fn names() -> Vec<&'static str> {
    ENTRIES.iter().map(|(n, _)| *n).collect()
}

/// The JSON document of a built-in ring.
pub fn document(name: &str) -> Result<&'static str, PrismError> {
    ENTRIES
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, doc)| *doc)
        .ok_or_else(|| PrismError::UnknownRing(name.to_string()))
}

pub fn catalog(name: &str) -> Result<FusionRing, PrismError> {
    FusionRing::from_json(document(name)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_entry_parses_and_round_trips() {
        for name in names() {
            let doc = document(name).unwrap();
            let ring = catalog(name).unwrap();
            assert_eq!(ring.name(), name);
            assert_eq!(ring.to_json(), doc, "{name}");
        }
    }

    #[test]
    fn unknown_name() {
        assert!(matches!(catalog("nosuch"), Err(PrismError::UnknownRing(_))));
    }
}
