//! Named graph families with canonical labellings.

use std::fmt;

use serde::Serialize;

use crate::error::{GraphError, Result};
use crate::graph::{cartesian_product, composition, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum FamilySpec {
    Empty {
        n: usize,
    },
    Complete {
        n: usize,
    },
    Path {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    /// `S_n = K_{1,n-1}`, centre 0.
    Star {
        n: usize,
    },
    CompleteBipartite {
        p: usize,
        q: usize,
    },
    /// `C_p □ C_q`.
    Nanotorus {
        p: usize,
        q: usize,
    },
    /// `C_n[K_2]`.
    ClosedFence {
        n: usize,
    },
}

pub const FAMILY_NAMES: [&str; 8] = [
    "empty",
    "complete",
    "path",
    "cycle",
    "star",
    "complete_bipartite",
    "nanotorus",
    "closed_fence",
];

impl FamilySpec {
    /// Builds a spec from a family name and its parameters. Single-parameter
    /// families read `n`; two-parameter families read `p` and `q`.
    pub fn from_parts(
        name: &str,
        n: Option<usize>,
        p: Option<usize>,
        q: Option<usize>,
    ) -> Result<Self> {
        let need = |v: Option<usize>, what: &str| {
            v.ok_or_else(|| GraphError::InvalidParameter(format!("{name} requires {what}")))
        };
        let spec = match name {
            "empty" => Self::Empty { n: need(n, "n")? },
            "complete" => Self::Complete { n: need(n, "n")? },
            "path" => Self::Path { n: need(n, "n")? },
            "cycle" => Self::Cycle { n: need(n, "n")? },
            "star" => Self::Star { n: need(n, "n")? },
            "closed_fence" => Self::ClosedFence { n: need(n, "n")? },
            "complete_bipartite" => Self::CompleteBipartite {
                p: need(p, "p")?,
                q: need(q, "q")?,
            },
            "nanotorus" => Self::Nanotorus {
                p: need(p, "p")?,
                q: need(q, "q")?,
            },
            other => {
                return Err(GraphError::InvalidParameter(format!(
                    "unknown family {other:?} (expected one of {})",
                    FAMILY_NAMES.join(", ")
                )))
            }
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn name(&self) -> &'static str {
        match self {
            Self::Empty { .. } => "empty",
            Self::Complete { .. } => "complete",
            Self::Path { .. } => "path",
            Self::Cycle { .. } => "cycle",
            Self::Star { .. } => "star",
            Self::CompleteBipartite { .. } => "complete_bipartite",
            Self::Nanotorus { .. } => "nanotorus",
            Self::ClosedFence { .. } => "closed_fence",
        }
    }

    /// Checks the family's minimum parameter values.
    pub fn validate(&self) -> Result<()> {
        let (ok, rule) = match *self {
            Self::Empty { n } | Self::Complete { n } | Self::Path { n } => (n >= 1, "n >= 1"),
            Self::Star { n } => (n >= 2, "n >= 2"),
            Self::Cycle { n } | Self::ClosedFence { n } => (n >= 3, "n >= 3"),
            Self::CompleteBipartite { p, q } => (p >= 1 && q >= 1, "p, q >= 1"),
            Self::Nanotorus { p, q } => (p >= 3 && q >= 3, "p, q >= 3"),
        };
        if ok {
            Ok(())
        } else {
            Err(GraphError::InvalidParameter(format!(
                "{self} requires {rule}"
            )))
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Self::Empty { n }
            | Self::Complete { n }
            | Self::Path { n }
            | Self::Cycle { n }
            | Self::Star { n }
            | Self::ClosedFence { n } => write!(f, "{}({n})", self.name()),
            Self::CompleteBipartite { p, q } | Self::Nanotorus { p, q } => {
                write!(f, "{}({p},{q})", self.name())
            }
        }
    }
}

/// Generates the family member with its canonical labelling.
pub fn generate_family(spec: &FamilySpec) -> Result<Graph> {
    spec.validate()?;
    match *spec {
        FamilySpec::Empty { n } => Graph::empty(n),
        FamilySpec::Complete { n } => Graph::from_fn(n, |_, _| true),
        FamilySpec::Path { n } => Graph::from_fn(n, |u, v| v == u + 1),
        FamilySpec::Cycle { n } => Graph::from_fn(n, |u, v| v == u + 1 || (u == 0 && v == n - 1)),
        FamilySpec::Star { n } => Graph::from_fn(n, |u, _| u == 0),
        FamilySpec::CompleteBipartite { p, q } => Graph::from_fn(p + q, |u, v| u < p && v >= p),
        FamilySpec::Nanotorus { p, q } => {
            let cp = generate_family(&FamilySpec::Cycle { n: p })?;
            let cq = generate_family(&FamilySpec::Cycle { n: q })?;
            Ok(cartesian_product(&cp, &cq))
        }
        FamilySpec::ClosedFence { n } => {
            let cn = generate_family(&FamilySpec::Cycle { n })?;
            let k2 = generate_family(&FamilySpec::Complete { n: 2 })?;
            Ok(composition(&cn, &k2))
        }
    }
}
