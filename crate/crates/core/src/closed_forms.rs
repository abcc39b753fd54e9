//! Closed-form values of the Sombor index and coindex for named families.
//!
//! The closed fence `C_n[K_2]` has two variants: the formula as it was
//! published, `5[2n(n-3)+4]√2`, and the value every brute-force evaluation
//! agrees with, `10√2·n(n-3)`. They differ by the constant `20√2`.

use std::f64::consts::SQRT_2;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{GraphError, Result};
use crate::family::FamilySpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Variant {
    AsPublished,
    #[default]
    Corrected,
}

impl Variant {
    pub fn as_str(&self) -> &'static str {
        match self {
            Self::AsPublished => "as_published",
            Self::Corrected => "corrected",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Variant {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "as_published" => Ok(Self::AsPublished),
            "corrected" => Ok(Self::Corrected),
            other => Err(GraphError::InvalidParameter(format!(
                "unknown variant {other:?}"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClosedFormResult {
    pub value: f64,
    pub variant: Variant,
    pub applicable: bool,
    /// Empty unless the two variants disagree for this family.
    pub note: String,
}

/// Gap between the published and corrected closed-fence values.
pub const FENCE_ERRATUM: f64 = 20.0 * SQRT_2;

/// Closed-form `SO` for the families that have a published formula.
pub fn closed_sombor_index(spec: &FamilySpec) -> Result<f64> {
    spec.validate()?;
    let value = match *spec {
        FamilySpec::Empty { .. } => 0.0,
        FamilySpec::Complete { n } => {
            let n = n as f64;
            n * (n - 1.0).powi(2) / SQRT_2
        }
        FamilySpec::Cycle { n } => 2.0 * SQRT_2 * n as f64,
        FamilySpec::Path { n: 1 } => 0.0,
        FamilySpec::Path { n: 2 } => SQRT_2,
        FamilySpec::Path { n } => 2.0 * (n as f64 - 3.0) * SQRT_2 + 2.0 * 5f64.sqrt(),
        _ => return Err(GraphError::NoClosedForm(format!("SO of {spec}"))),
    };
    Ok(value)
}

/// Closed-form `S̄O`. Only the closed fence distinguishes the two variants.
pub fn closed_sombor_coindex(spec: &FamilySpec, variant: Variant) -> Result<ClosedFormResult> {
    spec.validate()?;
    let mut note = String::new();
    let value = match *spec {
        FamilySpec::Empty { .. } | FamilySpec::Complete { .. } => 0.0,
        FamilySpec::Cycle { n } => {
            let n = n as f64;
            n * (n - 3.0) * SQRT_2
        }
        // P1 and P2 have no non-adjacent pair
        FamilySpec::Path { n } if n < 3 => 0.0,
        FamilySpec::Path { n } => {
            let n = n as f64;
            ((n - 4.0) * (n - 3.0) + 1.0) * SQRT_2 + 2.0 * (n - 3.0) * 5f64.sqrt()
        }
        FamilySpec::Star { n } => {
            let n = n as f64;
            (n - 1.0) * (n - 2.0) / SQRT_2
        }
        FamilySpec::CompleteBipartite { p, q } => {
            let (p, q) = (p as f64, q as f64);
            p * q * (p + q - 2.0) / SQRT_2
        }
        FamilySpec::Nanotorus { p, q } => {
            let pq = (p * q) as f64;
            2.0 * pq * (pq - 5.0) * SQRT_2
        }
        FamilySpec::ClosedFence { n } => {
            let n = n as f64;
            note = format!(
                "published formula 5[2n(n-3)+4]√2 exceeds the brute-force value 10√2·n(n-3) by 20√2 ≈ {FENCE_ERRATUM:.12}"
            );
            match variant {
                Variant::AsPublished => 5.0 * (2.0 * n * (n - 3.0) + 4.0) * SQRT_2,
                Variant::Corrected => 10.0 * SQRT_2 * n * (n - 3.0),
            }
        }
    };
    Ok(ClosedFormResult {
        value,
        variant,
        applicable: true,
        note,
    })
}

/// `S̄O` of any `r`-regular graph on `n` vertices: `nr(n-1-r)/√2`.
///
/// Computed even when `nr` is odd; see [`regular_graph_exists`].
pub fn regular_coindex(n: usize, r: usize) -> Result<f64> {
    if n == 0 || r >= n {
        return Err(GraphError::InvalidParameter(format!(
            "regular degree {r} must lie in 0..={}",
            n.saturating_sub(1)
        )));
    }
    let (nf, rf) = (n as f64, r as f64);
    Ok(nf * rf * (nf - 1.0 - rf) / SQRT_2)
}

/// An `r`-regular graph on `n` vertices exists iff `r < n` and `nr` is even.
pub fn regular_graph_exists(n: usize, r: usize) -> bool {
    r < n && (n * r).is_multiple_of(2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() <= 1e-9 * a.abs().max(b.abs()).max(1.0)
    }

    #[test]
    fn sombor_index_forms() {
        assert!(close(
            closed_sombor_index(&FamilySpec::Complete { n: 5 }).unwrap(),
            56.568542494924
        ));
        assert!(close(
            closed_sombor_index(&FamilySpec::Path { n: 2 }).unwrap(),
            SQRT_2
        ));
        assert_eq!(
            closed_sombor_index(&FamilySpec::Path { n: 1 }).unwrap(),
            0.0
        );
        assert_eq!(
            closed_sombor_index(&FamilySpec::Empty { n: 9 }).unwrap(),
            0.0
        );
    }

    #[test]
    fn sombor_index_rejects_unpublished_families() {
        for spec in [
            FamilySpec::Star { n: 4 },
            FamilySpec::CompleteBipartite { p: 2, q: 3 },
            FamilySpec::Nanotorus { p: 3, q: 3 },
            FamilySpec::ClosedFence { n: 4 },
        ] {
            assert!(matches!(
                closed_sombor_index(&spec),
                Err(GraphError::NoClosedForm(_))
            ));
        }
        assert!(matches!(
            closed_sombor_index(&FamilySpec::Cycle { n: 2 }),
            Err(GraphError::InvalidParameter(_))
        ));
    }

    #[test]
    fn coindex_forms() {
        let star = closed_sombor_coindex(&FamilySpec::Star { n: 5 }, Variant::Corrected).unwrap();
        assert!(close(star.value, 6.0 * SQRT_2));
        assert!(star.note.is_empty());

        let fence = FamilySpec::ClosedFence { n: 3 };
        let published = closed_sombor_coindex(&fence, Variant::AsPublished).unwrap();
        assert!(close(published.value, 28.284271247462));
        assert!(!published.note.is_empty());
        let corrected = closed_sombor_coindex(&fence, Variant::Corrected).unwrap();
        assert_eq!(corrected.value, 0.0);
    }

    #[test]
    fn variants_coincide_off_the_fence() {
        for spec in [
            FamilySpec::Cycle { n: 7 },
            FamilySpec::Path { n: 6 },
            FamilySpec::CompleteBipartite { p: 3, q: 5 },
            FamilySpec::Nanotorus { p: 4, q: 3 },
        ] {
            let a = closed_sombor_coindex(&spec, Variant::AsPublished).unwrap();
            let b = closed_sombor_coindex(&spec, Variant::Corrected).unwrap();
            assert_eq!(a.value, b.value);
            assert!(a.note.is_empty() && b.note.is_empty());
        }
    }

    #[test]
    fn short_paths_have_zero_coindex() {
        for n in [1, 2] {
            let r = closed_sombor_coindex(&FamilySpec::Path { n }, Variant::Corrected).unwrap();
            assert_eq!(r.value, 0.0);
        }
    }

    #[test]
    fn regular_forms() {
        assert!(close(regular_coindex(5, 2).unwrap(), 10.0 * SQRT_2));
        for n in 1..10 {
            assert_eq!(regular_coindex(n, n - 1).unwrap(), 0.0);
        }
        assert!(close(regular_coindex(9, 4).unwrap(), 101.823376490863));
        let torus =
            closed_sombor_coindex(&FamilySpec::Nanotorus { p: 3, q: 3 }, Variant::Corrected)
                .unwrap();
        assert!(close(regular_coindex(9, 4).unwrap(), torus.value));
        assert!(regular_coindex(4, 4).is_err());
        assert!(!regular_graph_exists(5, 3));
        assert!(regular_coindex(5, 3).is_ok());
    }
}
