//! q-Pochhammer symbols, Gaussian binomials and geometric factors.

use num_traits::Zero;

use super::laurent::rat;
use super::{Precision, QLaurent, Rational, SeriesError, TruncationContext, XSeries};

/// `prod_{j<n} (1 - sign * x^x_power * q^(a + t j))`.
pub fn pochhammer(sign: i64, x_power: usize, a: i64, t: i64, n: usize, ctx: &TruncationContext) -> XSeries {
    let mut acc = XSeries::one(ctx);
    for j in 0..n as i64 {
        let factor = XSeries::one(ctx) - XSeries::term(sign, x_power, a + t * j, ctx);
        acc = &acc * &factor;
    }
    acc
}

/// `prod_{j<n} (1 - sign * q^(a + t j))` as an exact Laurent polynomial.
pub fn q_pochhammer(sign: i64, a: i64, t: i64, n: usize) -> QLaurent {
    let mut terms: Vec<(i64, i64)> = vec![(0, 1)];
    for j in 0..n as i64 {
        let e = a + t * j;
        let mut next: Vec<(i64, i64)> = terms.clone();
        next.extend(terms.iter().map(|&(f, c)| (f + e, -sign * c)));
        terms = next;
    }
    QLaurent::from_terms(terms.into_iter().map(|(e, c)| (e, rat(c))))
}

/// Gaussian binomial in `q^step`, by exact division of q-factorials.
/// Out-of-range `i` gives 0.
pub fn q_binomial(k: i64, i: i64, step: i64) -> QLaurent {
    if i < 0 || i > k || k < 0 {
        return QLaurent::zero();
    }
    let fact = |m: i64| q_pochhammer(1, step, step, m as usize);
    let num = fact(k);
    let den = poly_mul(&fact(i), &fact(k - i));
    div_exact(&num, &den).expect("q-factorial quotient is a polynomial")
}

/// Truncated expansion of `1/(1 - q^k)`.
pub fn geom_factor(k: i64, ctx: &TruncationContext) -> Result<QLaurent, SeriesError> {
    if k <= 0 {
        return Err(SeriesError::InvalidArgument(format!("geometric factor needs k >= 1, got {k}")));
    }
    let terms = (0..=ctx.q_max / k).map(|j| (j * k, rat(1)));
    Ok(QLaurent::from_terms(terms).with_precision(Precision::Below(ctx.q_max + 1)))
}

/// Truncated expansion of `1/(1 - c x^a q^b)`.
pub fn geometric(c: i64, a: usize, b: i64, ctx: &TruncationContext) -> Result<XSeries, SeriesError> {
    if a == 0 {
        if b <= 0 || c == 0 {
            return Err(SeriesError::InvalidArgument(format!("1/(1 - {c} q^{b}) has no power series expansion")));
        }
        let mut coef = Rational::from_integer(1.into());
        let mut terms = Vec::new();
        let mut j = 0;
        while j * b <= ctx.q_max {
            terms.push((j * b, coef.clone()));
            coef *= rat(c);
            j += 1;
        }
        let q = QLaurent::from_terms(terms).with_precision(Precision::Below(ctx.q_max + 1));
        return Ok(XSeries::constant(q, ctx));
    }
    let mut coeffs = vec![QLaurent::zero(); ctx.x_order + 1];
    let mut coef = Rational::from_integer(1.into());
    for j in 0..=ctx.x_order / a {
        coeffs[j * a] = QLaurent::monomial(coef.clone(), b * j as i64);
        coef *= rat(c);
    }
    Ok(XSeries::from_coeffs(coeffs, ctx))
}

/// Product of two exact Laurent polynomials, without any window.
pub(crate) fn poly_mul(a: &QLaurent, b: &QLaurent) -> QLaurent {
    let mut terms = Vec::new();
    for (ea, ca) in a.terms() {
        for (eb, cb) in b.terms() {
            terms.push((ea + eb, ca * cb));
        }
    }
    QLaurent::from_terms(terms)
}

/// Quotient of exact Laurent polynomials when the division is exact.
pub(crate) fn div_exact(num: &QLaurent, den: &QLaurent) -> Option<QLaurent> {
    let (dv, dd) = (den.valuation()?, den.degree()?);
    let lead = den.coeff(dd);
    let mut rem: std::collections::BTreeMap<i64, Rational> = num.terms().map(|(e, c)| (e, c.clone())).collect();
    let mut quot = Vec::new();
    while let Some((&top, c)) = rem.iter().next_back() {
        if top - dd < num.valuation().unwrap_or(0) - dv {
            return None;
        }
        let k = c / &lead;
        let shift = top - dd;
        for (e, d) in den.terms() {
            let slot = rem.entry(e + shift).or_insert_with(Rational::zero);
            *slot -= &k * d;
            if slot.is_zero() {
                rem.remove(&(e + shift));
            }
        }
        quot.push((shift, k));
    }
    Some(QLaurent::from_terms(quot))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> TruncationContext {
        TruncationContext::new(4, 12, -12).unwrap()
    }

    #[test]
    fn pochhammer_examples() {
        let c = ctx();
        assert_eq!(pochhammer(1, 0, 1, 1, 2, &c).coeff(0), &QLaurent::from_ints(0, &[1, -1, -1, 1]));
        assert_eq!(pochhammer(-1, 0, 1, 1, 2, &c).coeff(0), &QLaurent::from_ints(0, &[1, 1, 1, 1]));
        assert_eq!(pochhammer(1, 1, 3, 2, 0, &c), XSeries::one(&c));
        assert_eq!(q_pochhammer(1, 1, 1, 2), QLaurent::from_ints(0, &[1, -1, -1, 1]));
    }

    #[test]
    fn gaussian_binomials() {
        assert_eq!(q_binomial(4, 2, 1), QLaurent::from_ints(0, &[1, 1, 2, 1, 1]));
        assert_eq!(q_binomial(7, 0, 1), QLaurent::one());
        assert_eq!(q_binomial(7, 7, 2), QLaurent::one());
        assert_eq!(q_binomial(3, 1, 2), QLaurent::from_ints(0, &[1, 0, 1, 0, 1]));
        assert!(q_binomial(3, 4, 1).is_exact_zero());
    }

    #[test]
    fn geometric_factor() {
        let c = ctx();
        let g = geom_factor(3, &c).unwrap();
        assert_eq!(g.terms().map(|t| t.0).collect::<Vec<_>>(), vec![0, 3, 6, 9, 12]);
        let back = g.mul(&QLaurent::from_ints(0, &[1, 0, 0, -1]), &c);
        assert_eq!(back.terms().count(), 1);
        assert!(geom_factor(0, &c).is_err());
    }

    #[test]
    fn geometric_in_x() {
        let c = ctx();
        let g = geometric(1, 1, 2, &c).unwrap();
        let f = XSeries::one(&c) - XSeries::term(1, 1, 2, &c);
        assert_eq!(&g * &f, XSeries::one(&c));
    }

    #[test]
    fn inexact_division() {
        let a = QLaurent::from_ints(0, &[1, 0, 1]);
        let b = QLaurent::from_ints(0, &[1, 1]);
        assert!(div_exact(&a, &b).is_none());
    }
}
