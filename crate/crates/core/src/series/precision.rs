use serde::{Deserialize, Serialize};

/// How much of a truncated Laurent series in `q` is known.
///
/// `Below(p)` means every exponent `< p` is exact and nothing is known from
/// `p` upward. `Unknown` means no exponent at all is trustworthy (window
/// underflow, or the top degree of a derivative).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Precision {
    Exact,
    Below(i64),
    Unknown,
}

impl Precision {
    pub fn min(self, other: Precision) -> Precision {
        use Precision::*;
        match (self, other) {
            (Unknown, _) | (_, Unknown) => Unknown,
            (Exact, p) | (p, Exact) => p,
            (Below(a), Below(b)) => Below(a.min(b)),
        }
    }

    /// Precision after multiplying by `q^k`.
    pub fn shift(self, k: i64) -> Precision {
        match self {
            Precision::Below(p) => Precision::Below(p + k),
            other => other,
        }
    }

    /// True when every exponent `<= q` is known.
    pub fn covers(self, q: i64) -> bool {
        match self {
            Precision::Exact => true,
            Precision::Below(p) => p > q,
            Precision::Unknown => false,
        }
    }

    /// Upper bound (exclusive) of the known exponents, if finite.
    pub fn bound(self) -> Option<i64> {
        match self {
            Precision::Below(p) => Some(p),
            _ => None,
        }
    }
}

impl std::fmt::Display for Precision {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Precision::Exact => write!(f, "exact"),
            Precision::Below(p) => write!(f, "O(q^{p})"),
            Precision::Unknown => write!(f, "unknown"),
        }
    }
}
