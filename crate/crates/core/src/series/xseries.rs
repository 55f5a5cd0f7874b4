//! Truncated power series in `x` over [`QLaurent`] coefficients.

use std::ops::RangeInclusive;

use serde_json::{json, Map, Value};

use super::laurent::{rat, sum_of_products, Prepared};
use super::{Precision, QLaurent, Rational, SeriesError, TruncationContext};
use crate::exec::map_indices;

/// `sum_{n=0}^{N} c_n(q) x^n` under a fixed [`TruncationContext`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct XSeries {
    coeffs: Vec<QLaurent>,
    ctx: TruncationContext,
}

/// First coefficient at which two series were found to differ.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Discrepancy {
    pub x_degree: usize,
    pub q_exponent: i64,
    pub expected: String,
    pub got: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Comparison {
    Equal,
    Differ(Discrepancy),
    /// Agreement on everything known, but the coefficient of `x^x_degree`
    /// is only known below `q^known_below` (`None`: not at all).
    Insufficient { x_degree: usize, known_below: Option<i64> },
}

impl XSeries {
    pub fn zero(ctx: &TruncationContext) -> Self {
        Self { coeffs: vec![QLaurent::zero(); ctx.x_order + 1], ctx: *ctx }
    }

    pub fn one(ctx: &TruncationContext) -> Self {
        Self::constant(QLaurent::one(), ctx)
    }

    pub fn constant(c: QLaurent, ctx: &TruncationContext) -> Self {
        Self::monomial(0, c, ctx)
    }

    /// `c(q) x^n`; zero when `n` exceeds the retained degree.
    pub fn monomial(n: usize, c: QLaurent, ctx: &TruncationContext) -> Self {
        let mut out = Self::zero(ctx);
        if n <= ctx.x_order {
            out.coeffs[n] = c.truncate(ctx);
        }
        out
    }

    /// `c x^n q^e` with an integer `c`.
    pub fn term(c: i64, n: usize, e: i64, ctx: &TruncationContext) -> Self {
        Self::monomial(n, QLaurent::int_monomial(c, e), ctx)
    }

    /// Series from its first coefficients; missing degrees are exact zeros,
    /// extra degrees are dropped.
    pub fn from_coeffs(coeffs: Vec<QLaurent>, ctx: &TruncationContext) -> Self {
        let mut coeffs: Vec<QLaurent> = coeffs.into_iter().take(ctx.x_order + 1).map(|c| c.truncate(ctx)).collect();
        coeffs.resize(ctx.x_order + 1, QLaurent::zero());
        Self { coeffs, ctx: *ctx }
    }

    pub fn ctx(&self) -> &TruncationContext {
        &self.ctx
    }

    pub fn coeffs(&self) -> &[QLaurent] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &QLaurent {
        &self.coeffs[n]
    }

    pub fn x_order(&self) -> usize {
        self.ctx.x_order
    }

    /// Same data viewed in another context (degrees and window re-applied).
    pub fn recontext(&self, ctx: &TruncationContext) -> Self {
        Self::from_coeffs(self.coeffs.clone(), ctx)
    }

    fn map(&self, f: impl Fn(usize, &QLaurent) -> QLaurent) -> Self {
        Self { coeffs: self.coeffs.iter().enumerate().map(|(n, c)| f(n, c)).collect(), ctx: self.ctx }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, SeriesError> {
        self.ctx.check_same(&other.ctx)?;
        Ok(self.map(|n, c| c.add(&other.coeffs[n], &self.ctx)))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, SeriesError> {
        self.ctx.check_same(&other.ctx)?;
        Ok(self.map(|n, c| c.sub(&other.coeffs[n], &self.ctx)))
    }

    pub fn neg(&self) -> Self {
        self.map(|_, c| c.neg())
    }

    pub fn scale(&self, k: &Rational) -> Self {
        self.map(|_, c| c.scale(k))
    }

    pub fn scale_int(&self, k: i64) -> Self {
        self.scale(&rat(k))
    }

    /// Multiplication of every coefficient by the same Laurent series.
    pub fn mul_q(&self, c: &QLaurent) -> Self {
        self.map(|_, a| a.mul(c, &self.ctx))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, SeriesError> {
        self.ctx.check_same(&other.ctx)?;
        let a: Vec<Prepared<'_>> = self.coeffs.iter().map(QLaurent::prepare).collect();
        let b: Vec<Prepared<'_>> = other.coeffs.iter().map(QLaurent::prepare).collect();
        let ctx = self.ctx;
        let coeffs = map_indices(ctx.x_order + 1, |n| {
            let pairs: Vec<_> = (0..=n).map(|i| (&a[i], &b[n - i])).collect();
            sum_of_products(&pairs, &ctx)
        });
        Ok(Self { coeffs, ctx })
    }

    /// Multiplicative inverse; needs an invertible coefficient of `x^0`.
    pub fn invert(&self) -> Result<Self, SeriesError> {
        let ctx = self.ctx;
        let g0 = self.coeffs[0].inverse(&ctx).map_err(|e| match e {
            SeriesError::NotInvertible { detail } => {
                SeriesError::NotInvertible { detail: format!("coefficient of x^0: {detail}") }
            }
            other => other,
        })?;
        let f: Vec<Prepared<'_>> = self.coeffs.iter().map(QLaurent::prepare).collect();
        let mut g: Vec<QLaurent> = vec![g0.clone()];
        let g0_neg = g0.neg();
        for n in 1..=ctx.x_order {
            let gp: Vec<Prepared<'_>> = g.iter().map(QLaurent::prepare).collect();
            let pairs: Vec<_> = (1..=n).map(|k| (&f[k], &gp[n - k])).collect();
            let s = sum_of_products(&pairs, &ctx);
            let next = s.mul(&g0_neg, &ctx);
            drop(gp);
            g.push(next);
        }
        Ok(Self { coeffs: g, ctx })
    }

    pub fn try_div(&self, other: &Self) -> Result<Self, SeriesError> {
        self.try_mul(&other.invert()?)
    }

    /// `f(sign * x * q^k)`.
    pub fn subst_x(&self, sign: i64, k: i64) -> Self {
        assert!(sign == 1 || sign == -1, "sign must be +1 or -1");
        self.map(|n, c| {
            let s = c.shift(n as i64 * k, &self.ctx);
            if sign < 0 && n % 2 == 1 {
                s.neg()
            } else {
                s
            }
        })
    }

    /// Formal derivative in `x`; the top coefficient becomes unknown.
    pub fn deriv_x(&self) -> Self {
        let n_max = self.ctx.x_order;
        let mut coeffs: Vec<QLaurent> = (1..=n_max).map(|n| self.coeffs[n].scale(&rat(n as i64))).collect();
        coeffs.push(QLaurent::unknown());
        Self { coeffs, ctx: self.ctx }
    }

    /// `x d/dx`, which keeps every degree exact.
    pub fn theta(&self) -> Self {
        self.map(|n, c| c.scale(&rat(n as i64)))
    }

    pub fn even_part(&self) -> Self {
        self.map(|n, c| if n % 2 == 0 { c.clone() } else { QLaurent::zero() })
    }

    pub fn odd_part(&self) -> Self {
        self.map(|n, c| if n % 2 == 1 { c.clone() } else { QLaurent::zero() })
    }

    /// Multiplication by `x^k`. For negative `k` the dropped low
    /// coefficients must be exactly zero, and the vacated top degrees
    /// become unknown.
    pub fn shift_x(&self, k: i64) -> Result<Self, SeriesError> {
        let len = self.ctx.x_order + 1;
        if k >= 0 {
            let k = k as usize;
            let coeffs = (0..len).map(|n| if n < k { QLaurent::zero() } else { self.coeffs[n - k].clone() }).collect();
            return Ok(Self { coeffs, ctx: self.ctx });
        }
        let k = (-k) as usize;
        if let Some(n) = (0..k.min(len)).find(|&n| !self.coeffs[n].is_exact_zero()) {
            return Err(SeriesError::InvalidArgument(format!(
                "division by x^{k} with nonzero coefficient of x^{n}: {}",
                self.coeffs[n]
            )));
        }
        let coeffs = (0..len).map(|n| self.coeffs.get(n + k).cloned().unwrap_or_else(QLaurent::unknown)).collect();
        Ok(Self { coeffs, ctx: self.ctx })
    }

    /// Coefficient-wise comparison over `degrees`, up to `q^q_max`.
    pub fn compare(&self, other: &Self, degrees: RangeInclusive<usize>, q_max: i64) -> Comparison {
        let mut insufficient = None;
        for n in degrees {
            if n > self.ctx.x_order || n > other.ctx.x_order {
                insufficient.get_or_insert(Comparison::Insufficient { x_degree: n, known_below: None });
                continue;
            }
            let (a, b) = (&self.coeffs[n], &other.coeffs[n]);
            let prec = a.precision().min(b.precision());
            let lo = a.valuation().into_iter().chain(b.valuation()).min();
            if let Some(lo) = lo {
                let hi = match prec.bound() {
                    Some(p) => (p - 1).min(q_max),
                    None if prec == Precision::Unknown => lo - 1,
                    None => q_max,
                };
                for e in lo..=hi {
                    let (ca, cb) = (a.coeff(e), b.coeff(e));
                    if ca != cb {
                        return Comparison::Differ(Discrepancy {
                            x_degree: n,
                            q_exponent: e,
                            expected: ca.to_string(),
                            got: cb.to_string(),
                        });
                    }
                }
            }
            if !prec.covers(q_max) {
                insufficient.get_or_insert(Comparison::Insufficient { x_degree: n, known_below: prec.bound() });
            }
        }
        insufficient.unwrap_or(Comparison::Equal)
    }

    /// JSON form: one object per x-degree with exponent -> "p/q" entries.
    pub fn to_json(&self) -> Value {
        Value::Array(self.coeffs.iter().enumerate().map(|(n, c)| laurent_json(n, c)).collect())
    }
}

pub(crate) fn laurent_json(n: usize, c: &QLaurent) -> Value {
    let mut terms = Map::new();
    for (e, v) in c.terms() {
        terms.insert(e.to_string(), Value::String(format!("{}/{}", v.numer(), v.denom())));
    }
    json!({ "x_degree": n, "precision": c.precision(), "coeffs": terms })
}

impl Default for XSeries {
    fn default() -> Self {
        Self::zero(&TruncationContext::new(0, 0, 0).unwrap())
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $try:ident) => {
        impl std::ops::$tr<&XSeries> for &XSeries {
            type Output = XSeries;
            fn $m(self, rhs: &XSeries) -> XSeries {
                self.$try(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl std::ops::$tr<XSeries> for XSeries {
            type Output = XSeries;
            fn $m(self, rhs: XSeries) -> XSeries {
                (&self).$try(&rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl std::ops::$tr<&XSeries> for XSeries {
            type Output = XSeries;
            fn $m(self, rhs: &XSeries) -> XSeries {
                (&self).$try(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl std::ops::$tr<XSeries> for &XSeries {
            type Output = XSeries;
            fn $m(self, rhs: XSeries) -> XSeries {
                self.$try(&rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
    };
}

// Operator forms panic on a context mismatch; the `try_` methods report it.
binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl std::ops::Neg for XSeries {
    type Output = XSeries;
    fn neg(self) -> XSeries {
        XSeries::neg(&self)
    }
}

impl std::ops::Neg for &XSeries {
    type Output = XSeries;
    fn neg(self) -> XSeries {
        XSeries::neg(self)
    }
}

impl std::fmt::Display for XSeries {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_exact_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "({c}) x^{n}")?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(x^{})", self.ctx.x_order + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> TruncationContext {
        TruncationContext::new(6, 12, -12).unwrap()
    }

    fn geometric_x(ctx: &TruncationContext) -> XSeries {
        XSeries::from_coeffs(vec![QLaurent::one(); ctx.x_order + 1], ctx)
    }

    #[test]
    fn telescoping() {
        let c = ctx();
        let one_minus_x = XSeries::one(&c) - XSeries::term(1, 1, 0, &c);
        assert_eq!(&one_minus_x * &geometric_x(&c), XSeries::one(&c));
    }

    #[test]
    fn exponents_cancel() {
        let c = ctx();
        let p = XSeries::term(1, 1, -1, &c) * XSeries::term(1, 1, 1, &c);
        assert_eq!(p, XSeries::term(1, 2, 0, &c));
    }

    #[test]
    fn invert_one_minus_xq() {
        let c = ctx();
        let f = XSeries::one(&c) - XSeries::term(1, 1, 1, &c);
        let g = f.invert().unwrap();
        for n in 0..=6 {
            assert_eq!(g.coeff(n), &QLaurent::int_monomial(1, n as i64));
        }
    }

    #[test]
    fn invert_rejects_zero_constant() {
        let c = ctx();
        let f = XSeries::term(1, 1, 0, &c);
        assert!(matches!(f.invert(), Err(SeriesError::NotInvertible { .. })));
    }

    #[test]
    fn context_mismatch_is_reported() {
        let a = XSeries::one(&ctx());
        let b = XSeries::one(&TruncationContext::new(5, 12, -12).unwrap());
        assert!(matches!(a.try_add(&b), Err(SeriesError::ContextMismatch { .. })));
    }

    #[test]
    fn subst_examples() {
        let c = ctx();
        assert_eq!(XSeries::term(1, 1, 0, &c).subst_x(1, 2), XSeries::term(1, 1, 2, &c));
        assert_eq!(XSeries::term(1, 2, 1, &c).subst_x(1, -1), XSeries::term(1, 2, -1, &c));
        assert_eq!(XSeries::term(1, 3, 0, &c).subst_x(-1, 0), XSeries::term(-1, 3, 0, &c));
    }

    #[test]
    fn derivative_examples() {
        let c = ctx();
        let d = XSeries::term(1, 2, 0, &c).deriv_x();
        assert_eq!(d.coeff(1), &QLaurent::int_monomial(2, 0));
        assert!(d.coeff(6).is_unknown());
        let f = XSeries::from_coeffs((0..=6).map(|n| QLaurent::int_monomial(1, n)).collect(), &c);
        let d = f.deriv_x();
        for n in 0..6 {
            assert_eq!(d.coeff(n), &QLaurent::int_monomial(n as i64 + 1, n as i64 + 1));
        }
    }

    #[test]
    fn even_odd() {
        let c = ctx();
        let f = XSeries::term(1, 1, 0, &c) + XSeries::term(1, 2, 0, &c);
        assert_eq!(f.even_part(), XSeries::term(1, 2, 0, &c));
        assert_eq!(f.even_part() + f.odd_part(), f);
    }

    #[test]
    fn compare_reports_first_difference() {
        let c = ctx();
        let a = XSeries::term(1, 2, 3, &c);
        let b = XSeries::term(2, 2, 3, &c);
        match a.compare(&b, 0..=6, 12) {
            Comparison::Differ(d) => assert_eq!((d.x_degree, d.q_exponent), (2, 3)),
            other => panic!("{other:?}"),
        }
        assert_eq!(a.compare(&a, 0..=6, 12), Comparison::Equal);
    }

    #[test]
    fn divide_by_x() {
        let c = ctx();
        let f = XSeries::term(1, 1, 2, &c);
        let g = f.shift_x(-1).unwrap();
        assert_eq!(g.coeff(0), &QLaurent::int_monomial(1, 2));
        assert!(g.coeff(6).is_unknown());
        assert!(XSeries::one(&c).shift_x(-1).is_err());
    }
}
