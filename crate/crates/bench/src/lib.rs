//! Shared inputs for the benchmarks.

use sombor_core::{generate_family, FamilySpec, Graph};

/// Named family members of increasing size.
pub fn fixtures() -> Vec<(String, Graph)> {
    [
        FamilySpec::Cycle { n: 12 },
        FamilySpec::Path { n: 40 },
        FamilySpec::CompleteBipartite { p: 20, q: 30 },
        FamilySpec::Nanotorus { p: 8, q: 8 },
        FamilySpec::ClosedFence { n: 30 },
    ]
    .into_iter()
    .map(|spec| {
        (
            spec.to_string(),
            generate_family(&spec).expect("valid fixture"),
        )
    })
    .collect()
}
