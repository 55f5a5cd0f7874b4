//! Exact truncated series: Laurent series in `q` as coefficients of power
//! series in `x`, plus the q-Pochhammer family of building blocks.

mod context;
mod laurent;
mod precision;
mod qfunc;
mod xseries;

pub use context::TruncationContext;
pub use laurent::{QLaurent, Rational};
pub use precision::Precision;
pub use qfunc::{geom_factor, geometric, pochhammer, q_binomial, q_pochhammer};
pub use xseries::{Comparison, Discrepancy, XSeries};

pub(crate) use laurent::rat;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SeriesError {
    #[error("invalid truncation window: q_min={q_min}, q_max={q_max} (need q_min <= 0 <= q_max)")]
    InvalidContext { q_min: i64, q_max: i64 },
    #[error("series built under different contexts ({left}) vs ({right})")]
    ContextMismatch { left: TruncationContext, right: TruncationContext },
    #[error("not invertible: {detail}")]
    NotInvertible { detail: String },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
