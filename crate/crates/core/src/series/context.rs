use serde::{Deserialize, Serialize};

use super::SeriesError;

/// Truncation window shared by every series taking part in one computation.
///
/// Coefficients of `x^0 ..= x^x_order` are retained; within each coefficient
/// only exponents of `q` in `q_min ..= q_max` are stored.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TruncationContext {
    pub x_order: usize,
    pub q_max: i64,
    pub q_min: i64,
}

impl TruncationContext {
    pub fn new(x_order: usize, q_max: i64, q_min: i64) -> Result<Self, SeriesError> {
        if q_min > 0 || q_max < 0 {
            return Err(SeriesError::InvalidContext { q_min, q_max });
        }
        Ok(Self { x_order, q_max, q_min })
    }

    /// Context for reporting coefficients up to `x^n` and `q^q`, with the
    /// low end of the window at `-(n+1)(n+2)/2 - q`.
    pub fn for_report(n: usize, q: i64) -> Self {
        let n = n as i64;
        Self { x_order: n as usize, q_max: q, q_min: -(n + 1) * (n + 2) / 2 - q }
    }

    /// Same window with a different retained x-degree.
    pub fn with_x_order(self, x_order: usize) -> Self {
        Self { x_order, ..self }
    }

    pub fn with_q_max(self, q_max: i64) -> Self {
        Self { q_max, ..self }
    }

    pub(crate) fn check_same(&self, other: &Self) -> Result<(), SeriesError> {
        if self == other {
            Ok(())
        } else {
            Err(SeriesError::ContextMismatch { left: *self, right: *other })
        }
    }
}

impl std::fmt::Display for TruncationContext {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "N={}, q in [{}, {}]", self.x_order, self.q_min, self.q_max)
    }
}
