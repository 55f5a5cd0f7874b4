//! Values at `q = 1` of coefficients known to be Laurent polynomials.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::tables::{FINITE_INV_TABLE, FINITE_TABLE};
use super::{shared_catalog, CheckId, CheckReport, Status};
use crate::catalog::{AuxName, Family, FamilyType};
use crate::series::{Discrepancy, Precision, QLaurent, TruncationContext};

/// A claimed value at `q = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SpecialValue {
    /// The Laurent form of the type A series at `x^n` gives `C_{n+1}`.
    Catalan(usize),
    /// `4^m` fc involutions in `Ã_{2m}`.
    FourPower(usize),
    /// A finite-type coefficient at `q = 1` equals its printed row sum.
    RowSum(Family, usize),
}

impl SpecialValue {
    /// The standard run: Catalan up to `x^8`, `4^m` up to `m = 3`, every
    /// printed finite-type row.
    pub fn all() -> Vec<SpecialValue> {
        let mut out: Vec<_> = (0..=8).map(SpecialValue::Catalan).collect();
        out.extend((0..=3).map(SpecialValue::FourPower));
        out.extend(FINITE_TABLE.iter().chain(FINITE_INV_TABLE).map(|r| SpecialValue::RowSum(r.family, r.n)));
        out
    }

    fn x_degree(self) -> usize {
        match self {
            SpecialValue::Catalan(n) | SpecialValue::RowSum(_, n) => n,
            SpecialValue::FourPower(m) => 2 * m + 1,
        }
    }
}

impl fmt::Display for SpecialValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpecialValue::Catalan(n) => write!(f, "catalan:{n}"),
            SpecialValue::FourPower(m) => write!(f, "four-power:{m}"),
            SpecialValue::RowSum(fam, n) => write!(f, "row-sum:{fam}:{n}"),
        }
    }
}

impl FromStr for SpecialValue {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let bad = || format!("unknown value check '{s}', expected catalan:<n>, four-power:<m> or row-sum:<family>:<n>");
        let num = |t: &str| t.parse::<usize>().map_err(|_| bad());
        match s.split(':').collect::<Vec<_>>().as_slice() {
            ["catalan", n] => Ok(SpecialValue::Catalan(num(n)?)),
            ["four-power", m] => Ok(SpecialValue::FourPower(num(m)?)),
            ["row-sum", fam, n] => Ok(SpecialValue::RowSum(fam.parse()?, num(n)?)),
            _ => Err(bad()),
        }
    }
}

fn catalan(k: usize) -> BigInt {
    // C_k = binom(2k, k) / (k + 1)
    let mut c = BigInt::from(1);
    for i in 0..k {
        c = c * (2 * (2 * i + 1)) / (i + 2);
    }
    c
}

/// Window top for the value checks.
const Q_TOP: i64 = 60;

/// Sum of the coefficients once the coefficient is shown to be a Laurent
/// polynomial: exact, or known up to `top` with a zero tail at least as
/// long as its support.
fn value_at_one(c: &QLaurent, top: i64) -> Result<BigRational, String> {
    if c.precision() == Precision::Exact {
        return c.eval_at_one().ok_or_else(|| "exact coefficient without a value".to_string());
    }
    if !c.precision().covers(top) {
        return Err(format!("coefficient {} below q^{top}", c.precision()));
    }
    let lo = c.valuation().unwrap_or(0);
    let last = (lo..=top).rev().find(|&e| !c.coeff(e).is_zero()).unwrap_or(lo);
    if top - last <= last - lo {
        return Err(format!("support reaches q^{last}, no zero tail up to q^{top}"));
    }
    Ok((lo..=last).map(|e| c.coeff(e)).sum())
}

pub fn run_special_value(v: SpecialValue) -> CheckReport {
    let id = CheckId::SpecialValue(v);
    let n = v.x_degree();
    let ctx = TruncationContext::for_report(n, Q_TOP);
    let cat = shared_catalog(ctx);
    let (series, expected, what) = match v {
        SpecialValue::Catalan(n) => (cat.aux(AuxName::ANeg), catalan(n + 1), format!("C_{}", n + 1)),
        SpecialValue::FourPower(m) => (cat.gf(Family::inv(FamilyType::Atilde)), BigInt::from(4).pow(m as u32), format!("4^{m}")),
        SpecialValue::RowSum(fam, n) => {
            let row = FINITE_TABLE.iter().chain(FINITE_INV_TABLE).find(|r| r.family == fam && r.n == n);
            let Some(row) = row else {
                return CheckReport::with_status(id, Status::Skip, format!("no printed row for {fam} at x^{n}"));
            };
            (cat.gf(fam), row.coeffs.iter().sum::<i64>().into(), format!("printed row sum {}", row.printed()))
        }
    };
    let series = match series {
        Ok(s) => s,
        Err(e) => return CheckReport::with_status(id, Status::Fail, e.to_string()),
    };
    match value_at_one(series.coeff(n), Q_TOP) {
        Ok(got) if got == BigRational::from_integer(expected.clone()) => CheckReport::pass(id).detail(format!("{got} = {what}")),
        Ok(got) => CheckReport::fail(
            id,
            Discrepancy { x_degree: n, q_exponent: 0, expected: expected.to_string(), got: got.to_string() },
        )
        .detail(format!("value at q = 1 against {what}")),
        Err(why) => CheckReport::fail(
            id,
            Discrepancy { x_degree: n, q_exponent: Q_TOP, expected: "finite support".into(), got: why },
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalan_numbers() {
        let c: Vec<BigInt> = (0..8).map(catalan).collect();
        assert_eq!(c, [1, 1, 2, 5, 14, 42, 132, 429].map(BigInt::from));
    }

    #[test]
    fn infinite_support_is_rejected() {
        // 1/(1-q) known below q^21
        let geo = QLaurent::from_ints(0, &[1; 21]).with_precision(Precision::Below(21));
        assert!(value_at_one(&geo, 20).is_err());
        let poly = QLaurent::from_ints(0, &[1, 3]).with_precision(Precision::Below(21));
        assert_eq!(value_at_one(&poly, 20).unwrap(), BigRational::from_integer(4.into()));
    }

    #[test]
    fn names() {
        for v in SpecialValue::all() {
            assert_eq!(v.to_string().parse::<SpecialValue>().unwrap(), v);
        }
    }

    #[test]
    fn every_value_holds() {
        for v in SpecialValue::all() {
            let r = run_special_value(v);
            assert_eq!(r.status, Status::Pass, "{r:?}");
        }
    }
}
