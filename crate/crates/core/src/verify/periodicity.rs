//! Ultimate periodicity of single coefficients in `x`.
//!
//! The window only ever shows finitely many coefficients, so a check can
//! certify the period bound on the visible tail but never refute it: a
//! too-short violation-free tail is reported as inconclusive.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{shared_catalog, CheckId, CheckReport, Status};
use crate::catalog::{AuxName, Family, FamilyType, Variant};
use crate::series::{SeriesError, TruncationContext, XSeries};

/// A series whose `x^n` coefficients are claimed ultimately periodic in `q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PeriodicTarget {
    /// Alternating heaps over the `n`-point path.
    L,
    /// Self-dual alternating heaps.
    LI,
    /// Self-dual alternating heaps with an odd first column.
    LIodd,
    /// Self-dual alternating heaps with odd first and last columns.
    LIoddOdd,
    /// One of the affine types B̃, C̃, D̃.
    Affine(Family),
}

impl PeriodicTarget {
    fn series(self, ctx: TruncationContext) -> Result<std::sync::Arc<XSeries>, SeriesError> {
        let cat = shared_catalog(ctx);
        match self {
            PeriodicTarget::L => cat.aux(AuxName::L),
            PeriodicTarget::LI => cat.aux(AuxName::LI),
            PeriodicTarget::LIodd => cat.aux(AuxName::LIodd),
            PeriodicTarget::LIoddOdd => cat.aux(AuxName::LIoddOdd),
            PeriodicTarget::Affine(f) => cat.gf(f),
        }
    }
}

impl fmt::Display for PeriodicTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PeriodicTarget::L => f.write_str("L"),
            PeriodicTarget::LI => f.write_str("LI"),
            PeriodicTarget::LIodd => f.write_str("LIodd"),
            PeriodicTarget::LIoddOdd => f.write_str("LIoddOdd"),
            PeriodicTarget::Affine(fam) => write!(f, "{fam}"),
        }
    }
}

impl FromStr for PeriodicTarget {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "L" => return Ok(PeriodicTarget::L),
            "LI" => return Ok(PeriodicTarget::LI),
            "LIodd" => return Ok(PeriodicTarget::LIodd),
            "LIoddOdd" => return Ok(PeriodicTarget::LIoddOdd),
            _ => {}
        }
        let fam: Family = s.parse().map_err(|_| {
            format!("unknown periodic series '{s}', expected L, LI, LIodd, LIoddOdd or an affine family such as Btilde-inv")
        })?;
        match fam.ty {
            FamilyType::Btilde | FamilyType::Ctilde | FamilyType::Dtilde => Ok(PeriodicTarget::Affine(fam)),
            _ => Err(format!("{fam} has no periodicity claim")),
        }
    }
}

/// Claimed shape of the `x^n` coefficient.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PeriodBound {
    /// Coefficients ultimately periodic with period dividing `p`.
    Divides(usize),
    /// A polynomial in `q`.
    Polynomial,
}

/// Period bound for the coefficient of `x^n`.
pub fn period_bound(target: PeriodicTarget, n: usize) -> PeriodBound {
    use PeriodBound::*;
    match target {
        PeriodicTarget::L | PeriodicTarget::LI => Divides(n),
        PeriodicTarget::LIodd => Divides(2 * n),
        PeriodicTarget::LIoddOdd if n % 2 == 0 => Polynomial,
        PeriodicTarget::LIoddOdd => Divides(2 * n),
        PeriodicTarget::Affine(f) => match (f.ty, f.variant == Variant::Involutions) {
            (FamilyType::Btilde, false) => Divides(n * (2 * n - 1)),
            (FamilyType::Btilde, true) => Divides(2 * n * (2 * n - 1)),
            (_, false) => Divides(n),
            (FamilyType::Ctilde, true) if n % 2 == 0 => Divides(n),
            (_, true) => Divides(2 * n),
        },
    }
}

/// Window top used for the coefficient of `x^n`: six periods, at least 60.
pub fn default_window(target: PeriodicTarget, n: usize) -> i64 {
    let p = match period_bound(target, n) {
        PeriodBound::Divides(p) => p,
        PeriodBound::Polynomial => 2 * n,
    };
    (6 * p as i64).max(60)
}

/// The (target, x-degree) pairs of the standard run.
pub fn default_targets() -> Vec<(PeriodicTarget, usize)> {
    let mut out: Vec<_> = (1..=6).map(|n| (PeriodicTarget::L, n)).collect();
    for t in [PeriodicTarget::LI, PeriodicTarget::LIodd, PeriodicTarget::LIoddOdd] {
        out.extend((1..=5).map(|n| (t, n)));
    }
    for fam in [Family::all, Family::inv] {
        out.push((PeriodicTarget::Affine(fam(FamilyType::Btilde)), 3));
        for ty in [FamilyType::Ctilde, FamilyType::Dtilde] {
            out.extend([3, 4].map(|n| (PeriodicTarget::Affine(fam(ty)), n)));
        }
    }
    out
}

/// Extra q-window tried in turn when the coefficient is not known far enough.
const HEADROOM: [i64; 3] = [0, 32, 96];

/// Checks the period bound of the coefficient of `x^n` on `q^0 ..= q^q_max`.
pub fn run_periodicity(target: PeriodicTarget, n: usize, q_max: i64) -> CheckReport {
    let id = CheckId::Periodicity(target, n);
    let mut known = None;
    for extra in HEADROOM {
        let ctx = TruncationContext::for_report(n, q_max + extra);
        let series = match target.series(ctx) {
            Ok(s) => s,
            Err(e) => return CheckReport::with_status(id, Status::Fail, e.to_string()),
        };
        let c = series.coeff(n);
        if c.precision().covers(q_max) {
            let lo = c.valuation().unwrap_or(0).min(0);
            return match c.int_range(lo, q_max) {
                Some(seq) => {
                    let bound = period_bound(target, n);
                    // a polynomial must show the zero tail of two periods of 2n
                    let needed = match bound {
                        PeriodBound::Divides(p) => 2 * p,
                        PeriodBound::Polynomial => 4 * n,
                    };
                    certify(id, &seq, lo, bound, needed as i64)
                }
                None => CheckReport::with_status(id, Status::Fail, format!("coefficient of x^{n} is not integral")),
            };
        }
        known = c.precision().bound();
    }
    let known = known.map_or("not known".into(), |p| format!("known below q^{p}"));
    CheckReport::with_status(id, Status::Inconclusive, format!("coefficient of x^{n} {known}"))
}

/// Certifies `seq` (exponents from `lo`) against the bound once `needed`
/// consecutive exponents past the transient satisfy it.
fn certify(id: CheckId, seq: &[BigInt], lo: i64, bound: PeriodBound, needed: i64) -> CheckReport {
    let top = lo + seq.len() as i64 - 1;
    let (p, violation) = match bound {
        PeriodBound::Divides(p) => {
            let last = (0..seq.len().saturating_sub(p)).rev().find(|&k| seq[k + p] != seq[k]);
            (p, last)
        }
        PeriodBound::Polynomial => (0, (0..seq.len()).rev().find(|&k| !seq[k].is_zero())),
    };
    let k0 = violation.map_or(lo, |k| lo + k as i64 + 1);
    let clean = top - p as i64 - k0 + 1;
    let detail = match bound {
        PeriodBound::Divides(p) => format!("(1 - q^{p}) times the coefficient vanishes on q^{} ..= q^{top}", k0 + p as i64),
        PeriodBound::Polynomial => format!("coefficient vanishes on q^{k0} ..= q^{top}"),
    };
    if clean >= needed {
        CheckReport::pass(id).detail(detail)
    } else {
        CheckReport::with_status(
            id,
            Status::Inconclusive,
            format!("{detail}: {clean} clean exponents, {needed} needed to certify"),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| x.into()).collect()
    }

    #[test]
    fn transient_then_period() {
        let id = CheckId::Periodicity(PeriodicTarget::L, 2);
        let seq = ints(&[1, 5, 3, 1, 2, 1, 2, 1, 2, 1, 2]);
        let r = certify(id, &seq, 0, PeriodBound::Divides(2), 4);
        assert_eq!(r.status, Status::Pass, "{r:?}");
        assert!(r.detail.unwrap().contains("q^5 ..= q^10"));
        let r = certify(id, &seq[..6], 0, PeriodBound::Divides(2), 4);
        assert_eq!(r.status, Status::Inconclusive);
    }

    #[test]
    fn polynomial_needs_a_zero_tail() {
        let id = CheckId::Periodicity(PeriodicTarget::LIoddOdd, 2);
        assert_eq!(certify(id, &ints(&[0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0]), 0, PeriodBound::Polynomial, 8).status, Status::Pass);
        assert_eq!(certify(id, &ints(&[0, 1, 1, 0, 0, 0, 0, 1]), 0, PeriodBound::Polynomial, 8).status, Status::Inconclusive);
    }

    #[test]
    fn period_bounds() {
        let b = |t: &str, n| period_bound(t.parse().unwrap(), n);
        assert_eq!(b("Btilde", 3), PeriodBound::Divides(15));
        assert_eq!(b("Btilde-inv", 3), PeriodBound::Divides(30));
        assert_eq!(b("Ctilde-inv", 4), PeriodBound::Divides(4));
        assert_eq!(b("Ctilde-inv", 3), PeriodBound::Divides(6));
        assert_eq!(b("LIoddOdd", 4), PeriodBound::Polynomial);
        assert_eq!(default_window("Btilde-inv".parse().unwrap(), 3), 180);
        assert!("A".parse::<PeriodicTarget>().is_err());
    }

    #[test]
    fn two_point_path_is_eventually_constant() {
        // [1, 2, 2, 2, ...] over two points, period dividing 2
        let r = run_periodicity(PeriodicTarget::L, 2, 60);
        assert_eq!(r.status, Status::Pass, "{r:?}");
    }

    #[test]
    fn standard_run() {
        for (t, n) in default_targets() {
            let r = run_periodicity(t, n, default_window(t, n));
            assert_eq!(r.status, Status::Pass, "{r:?}");
        }
    }
}
