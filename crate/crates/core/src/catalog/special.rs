//! Defining sums of the named special series.

use super::{Catalog, SpecialName};
use crate::series::{geom_factor, geometric, q_pochhammer, rat, QLaurent, SeriesError, XSeries};

fn binom2(n: i64) -> i64 {
    n * (n - 1) / 2
}

impl Catalog {
    pub(super) fn build_special(&self, name: SpecialName) -> Result<XSeries, SeriesError> {
        use SpecialName::*;
        match name {
            J => self.alternating_sum(1),
            H => self.alternating_sum(0),
            K => self.k_sum(),
            JI => self.coefficientwise(|n| {
                let sign = if n.div_ceil(2) % 2 == 0 { 1 } else { -1 };
                let m = n / 2;
                Ok(QLaurent::int_monomial(sign, binom2(n as i64)).mul(&self.inv_double_fact(m)?, &self.ctx))
            }),
            KI => self.coefficientwise(|n| {
                let mut inner = QLaurent::zero();
                for k in 0..=n / 2 {
                    let t = self.inv_double_fact(k)?;
                    inner = if k % 2 == 0 { inner.add(&t, &self.ctx) } else { inner.sub(&t, &self.ctx) };
                }
                Ok(inner.shift(binom2(n as i64 + 1), &self.ctx))
            }),
            JIe => Ok(self.special(JI)?.even_part()),
            KIe => Ok(self.special(KI)?.even_part()),
            N => self.path_sum(|k| {
                let p = q_pochhammer(-1, 1, 1, k - 1);
                let sq = p.mul(&p, &self.ctx);
                Ok(sq.mul(&geom_factor(k as i64, &self.ctx)?, &self.ctx).shift(-binom2(k as i64), &self.ctx))
            }),
            S => self.path_sum(|k| {
                let p = q_pochhammer(-1, 1, 1, k - 1).mul(&q_pochhammer(-1, 1, 1, k), &self.ctx);
                Ok(p.shift(-binom2(k as i64 + 1), &self.ctx))
            }),
            NI => self.path_sum(|k| {
                let p = q_pochhammer(-1, 2, 2, k - 1);
                Ok(p.mul(&geom_factor(k as i64, &self.ctx)?, &self.ctx).shift(-binom2(k as i64), &self.ctx))
            }),
            SI => self.path_sum(|k| Ok(q_pochhammer(-1, 2, 2, k - 1).shift(-binom2(k as i64 + 1), &self.ctx))),
            Ntilde => self.path_sum(|k| {
                let p = q_pochhammer(-1, 2, 2, k - 1);
                let inv = QLaurent::from_terms([(0, rat(1)), (k as i64, rat(1))]).inverse(&self.ctx)?;
                Ok(p.mul(&inv, &self.ctx).shift(-binom2(k as i64), &self.ctx))
            }),
        }
    }

    fn coefficientwise(&self, f: impl Fn(usize) -> Result<QLaurent, SeriesError>) -> Result<XSeries, SeriesError> {
        let coeffs = (0..=self.ctx.x_order).map(f).collect::<Result<Vec<_>, _>>()?;
        Ok(XSeries::from_coeffs(coeffs, &self.ctx))
    }

    /// `sum_{k>=1} x^k c_k(q)`.
    fn path_sum(&self, f: impl Fn(usize) -> Result<QLaurent, SeriesError>) -> Result<XSeries, SeriesError> {
        self.coefficientwise(|k| if k == 0 { Ok(QLaurent::zero()) } else { f(k) })
    }

    /// `1/(q;q)_m`, truncated.
    fn inv_fact(&self, m: usize) -> Result<QLaurent, SeriesError> {
        let mut acc = QLaurent::one();
        for j in 1..=m as i64 {
            acc = acc.mul(&geom_factor(j, &self.ctx)?, &self.ctx);
        }
        Ok(acc)
    }

    /// `1/(q^2;q^2)_m`, truncated.
    fn inv_double_fact(&self, m: usize) -> Result<QLaurent, SeriesError> {
        let mut acc = QLaurent::one();
        for j in 1..=m as i64 {
            acc = acc.mul(&geom_factor(2 * j, &self.ctx)?, &self.ctx);
        }
        Ok(acc)
    }

    /// `sum_n (-x)^n q^C(n,2) / ((q)_n (x q^offset)_n)`: `J` for offset 1,
    /// `H` for offset 0.
    fn alternating_sum(&self, offset: i64) -> Result<XSeries, SeriesError> {
        let ctx = &self.ctx;
        let mut total = XSeries::zero(ctx);
        let mut x_part = XSeries::one(ctx);
        for n in 0..=ctx.x_order {
            if n > 0 {
                x_part = &x_part * &geometric(1, 1, offset + n as i64 - 1, ctx)?;
            }
            let sign = if n % 2 == 0 { 1 } else { -1 };
            let q_part = self.inv_fact(n)?.mul(&QLaurent::int_monomial(sign, binom2(n as i64)), ctx);
            let term = x_part.shift_x(n as i64)?.mul_q(&q_part);
            total = &total + &term;
        }
        Ok(total)
    }

    /// `sum_n x^n q^C(n+1,2) / (xq)_n * sum_{k<=n} (-1)^k / (q)_k`.
    fn k_sum(&self) -> Result<XSeries, SeriesError> {
        let ctx = &self.ctx;
        let mut total = XSeries::zero(ctx);
        let mut x_part = XSeries::one(ctx);
        let mut inner = QLaurent::zero();
        for n in 0..=ctx.x_order {
            if n > 0 {
                x_part = &x_part * &geometric(1, 1, n as i64, ctx)?;
            }
            let t = self.inv_fact(n)?;
            inner = if n % 2 == 0 { inner.add(&t, ctx) } else { inner.sub(&t, ctx) };
            let q_part = inner.shift(binom2(n as i64 + 1), ctx);
            total = &total + &x_part.shift_x(n as i64)?.mul_q(&q_part);
        }
        Ok(total)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::TruncationContext;

    fn cat() -> Catalog {
        Catalog::new(TruncationContext::new(5, 20, -30).unwrap())
    }

    #[test]
    fn j_starts_with_one() {
        let c = cat();
        assert!(c.special(SpecialName::J).unwrap().coeff(0).is_one());
        assert!(c.special(SpecialName::K).unwrap().coeff(0).is_one());
        assert!(c.special(SpecialName::H).unwrap().coeff(0).is_one());
    }

    #[test]
    fn s_first_coefficient() {
        // k = 1: q^-1 (-q)_0 (-q)_1 = q^-1 + 1
        let c = cat();
        assert_eq!(c.special(SpecialName::S).unwrap().coeff(1), &QLaurent::from_ints(-1, &[1, 1]));
    }

    #[test]
    fn ji_low_coefficients() {
        // n = 1: (-1)^1 q^0; n = 2: (-1)^1 q / (1 - q^2); n = 3: q^3 / (1 - q^2)
        let c = cat();
        let ji = c.special(SpecialName::JI).unwrap();
        assert_eq!(ji.coeff(1), &QLaurent::int_monomial(-1, 0));
        assert_eq!(ji.coeff(2).coeff(1), rat(-1));
        assert_eq!(ji.coeff(2).coeff(3), rat(-1));
        assert_eq!(ji.coeff(2).coeff(2), rat(0));
        assert_eq!(ji.coeff(3).coeff(3), rat(1));
        assert_eq!(ji.odd_part().coeff(1), &QLaurent::int_monomial(-1, 0));
    }

    #[test]
    fn h_matches_direct_product() {
        // only n = 1 reaches x^1: -x / ((1-q)(1-x))
        let c = cat();
        let h = c.special(SpecialName::H).unwrap();
        let x1 = h.coeff(1);
        for e in 0..=20 {
            assert_eq!(x1.coeff(e), rat(-1));
        }
    }
}
