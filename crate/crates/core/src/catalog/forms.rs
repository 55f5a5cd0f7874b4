//! Closed forms of the generating functions and auxiliary series.

use std::sync::Arc;

use super::{AuxName, Catalog, Family, FamilyType, Inner, SpecialName, Variant};
use crate::series::{geom_factor, geometric, q_binomial, rat, QLaurent, Rational, SeriesError, XSeries};

type R = Result<XSeries, SeriesError>;

fn half() -> Rational {
    Rational::new(1.into(), 2.into())
}

impl Catalog {
    fn sp(&self, name: SpecialName) -> Result<Arc<XSeries>, SeriesError> {
        self.special(name)
    }

    /// `1/(1 - c x^a q^b)`.
    fn geo(&self, c: i64, a: usize, b: i64) -> R {
        geometric(c, a, b, &self.ctx)
    }

    pub(super) fn build_inner(&self, which: Inner) -> R {
        use SpecialName::*;
        match which {
            Inner::JInv => self.sp(J)?.invert(),
            Inner::JShiftRatio => Ok(self.sp(J)?.subst_x(1, 1) * &*self.inner(Inner::JInv)?),
            Inner::JIInv => self.sp(JI)?.invert(),
            Inner::JIShiftRatio => Ok(self.sp(JI)?.subst_x(-1, 1) * &*self.inner(Inner::JIInv)?),
            Inner::KIeShiftOverJI => Ok(self.sp(KIe)?.subst_x(1, 1) * &*self.inner(Inner::JIInv)?),
            Inner::HLogDerivShifted => {
                let h = self.sp(H)?;
                Ok(h.theta().subst_x(1, 1) * h.subst_x(1, 1).invert()?)
            }
            Inner::JIeLogDerivShifted => {
                let je = self.sp(JIe)?;
                Ok(je.theta().subst_x(1, 1) * je.subst_x(1, 1).invert()?)
            }
            Inner::DivisorSum => {
                let coeffs = (0..=self.ctx.x_order)
                    .map(|n| match n {
                        0 => Ok(QLaurent::zero()),
                        n => Ok(geom_factor(n as i64, &self.ctx)?.shift(n as i64, &self.ctx)),
                    })
                    .collect::<Result<Vec<_>, SeriesError>>()?;
                Ok(XSeries::from_coeffs(coeffs, &self.ctx))
            }
            Inner::SIOddDiff => {
                let si = self.sp(SI)?;
                let d = si.odd_part() - si.even_part().subst_x(1, 1);
                d.shift_x(1)
            }
        }
    }

    pub(super) fn build_gf(&self, family: Family) -> R {
        use FamilyType::*;
        match (family.ty, family.variant) {
            (A, Variant::All) => Ok(self.geo(1, 1, 1)? * &*self.inner(Inner::JShiftRatio)?),
            (B, Variant::All) => {
                let ba = self.aux(AuxName::Ba)?;
                let pre = self.term(1, 1, 2) * (self.one() - self.term(1, 1, 0)) * self.geo(1, 1, 1)? * self.geo(1, 1, 2)?;
                let tail = self.term(1, 1, 2) * self.geo(1, 1, 2)?;
                Ok(&*ba + &(pre * &*self.inner(Inner::JShiftRatio)?) - tail)
            }
            (D, Variant::All) => {
                let ba = self.aux(AuxName::Ba)?;
                let num = self.term(1, 0, 1) - self.term(1, 1, 0) - self.term(1, 1, 1) + self.term(1, 2, 2);
                let pre = num * self.geo(1, 1, 1)? * self.geo(1, 1, 2)?;
                let tail = self.term(1, 0, 1) * self.geo(1, 1, 2)?;
                Ok(ba.scale_int(2) + pre * &*self.inner(Inner::JShiftRatio)? - tail - self.one())
            }
            (A, Variant::Involutions) => Ok((*self.inner(Inner::JIShiftRatio)?).clone()),
            (B, Variant::Involutions) => {
                let cba = self.aux(AuxName::CBa)?;
                let pre = self.term(1, 1, 2) * (self.one() - self.term(1, 1, 0)) * self.geo(1, 1, 2)?;
                let tail = self.term(1, 1, 2) * self.geo(1, 1, 2)?;
                Ok(&*cba + &(pre * &*self.inner(Inner::JIShiftRatio)?) - tail)
            }
            (D, Variant::Involutions) => {
                let odd = self.inner(Inner::KIeShiftOverJI)?.mul_q(&QLaurent::int_monomial(2, 1)).shift_x(1)?;
                let num = self.term(1, 0, 1) + self.term(1, 1, 0) - self.term(1, 1, 1) - self.term(1, 2, 2);
                let pre = num * self.geo(1, 1, 2)?;
                let tail = self.term(1, 0, 1) * self.geo(1, 1, 2)?;
                Ok(odd + pre * &*self.inner(Inner::JIShiftRatio)? - tail + self.one())
            }
            (Atilde, Variant::All) => {
                let j = self.sp(SpecialName::J)?;
                let log = j.theta() * &*self.inner(Inner::JInv)?;
                Ok(-log - &*self.inner(Inner::DivisorSum)?)
            }
            (Atilde, Variant::Involutions) => {
                let ji = self.sp(SpecialName::JI)?;
                Ok(-(ji.theta() * &*self.inner(Inner::JIInv)?))
            }
            (Btilde | Ctilde | Dtilde, _) => self.affine(family),
        }
    }

    pub(super) fn build_aux(&self, name: AuxName) -> R {
        use AuxName::*;
        use SpecialName as Sp;
        let x = |k: usize| self.term(1, k, 0);
        match name {
            Ba => Ok(&*self.sp(Sp::K)? * &*self.inner(Inner::JInv)?),
            Bna => {
                let pre = self.term(1, 1, 2) * self.geo(1, 1, 2)?;
                let inner = (self.one() - x(1)) * self.geo(1, 1, 1)? * &*self.inner(Inner::JShiftRatio)? - self.one();
                Ok(pre * inner)
            }
            BnaA => {
                let a = self.gf(Family::all(FamilyType::A))?;
                let pre = self.term(1, 1, 2) * self.geo(1, 1, 2)?;
                Ok(pre * ((self.one() - x(1)) * &*a - self.one()))
            }
            CBa => Ok(&*self.sp(Sp::KI)? * &*self.inner(Inner::JIInv)?),
            CBna => {
                let pre = self.term(1, 1, 2) * self.geo(1, 1, 2)?;
                Ok(pre * ((self.one() - x(1)) * &*self.inner(Inner::JIShiftRatio)? - self.one()))
            }
            CBaOdd => self.inner(Inner::KIeShiftOverJI)?.mul_q(&QLaurent::int_monomial(1, 1)).shift_x(1),
            L => {
                let s = self.sp(Sp::S)?.shift_x(1)?;
                Ok(&*self.sp(Sp::N)? - &(s * &*self.aux(Ba)?))
            }
            LI => {
                let si = self.sp(Sp::SI)?;
                let d = (&*si - &si.subst_x(1, 1)).shift_x(1)?;
                Ok(&*self.sp(Sp::NI)? - &(d * &*self.aux(CBa)?))
            }
            LIodd => {
                let sym = (&*self.sp(Sp::NI)? + &self.sp(Sp::Ntilde)?.subst_x(-1, 0)).scale(&half());
                Ok(sym - &*self.inner(Inner::SIOddDiff)? * &*self.aux(CBa)?)
            }
            LIoddOdd => {
                let odd = self.sp(Sp::NI)?.odd_part() + self.sp(Sp::Ntilde)?.odd_part();
                let sym = odd.subst_x(1, 1).scale(&half());
                Ok(sym - &*self.inner(Inner::SIOddDiff)? * &*self.aux(CBaOdd)?)
            }
            M => {
                let h = self.sp(Sp::H)?;
                Ok(h.subst_x(1, 1) * ((self.one() - x(1)) * &*h).invert()?)
            }
            Mstar => Ok(self.sp(Sp::H)?.subst_x(1, 1) * &*self.inner(Inner::JInv)?),
            MI => {
                let je = self.sp(Sp::JIe)?;
                Ok(je.subst_x(1, 1) * je.invert()?)
            }
            Ocheck => {
                let h = self.sp(Sp::H)?;
                let log = h.theta() * h.invert()?;
                Ok(self.geo(1, 1, 0)? - log + &*self.inner(Inner::HLogDerivShifted)?)
            }
            OcheckDef => self.m_defined(&*self.aux(M)?),
            OcheckStar => {
                let log = self.sp(Sp::J)?.theta() * &*self.inner(Inner::JInv)?;
                Ok(self.one() - log + &*self.inner(Inner::HLogDerivShifted)?)
            }
            OIcheck => {
                let je = self.sp(Sp::JIe)?;
                let log = je.theta() * je.invert()?;
                Ok(self.one() - log + &*self.inner(Inner::JIeLogDerivShifted)?)
            }
            OIcheckDef => self.m_defined(&*self.aux(MI)?),
            OIcheckStar => {
                let log = self.sp(Sp::JI)?.theta() * &*self.inner(Inner::JIInv)?;
                Ok(self.one() - log + &*self.inner(Inner::JIeLogDerivShifted)?)
            }
            OIcheckStarDef => {
                let mi = self.aux(MI)?;
                let base = self.m_defined(&mi)?;
                Ok(base * (self.one() - mi.shift_x(1)?).invert()?)
            }
            Ppoly => {
                let h = self.sp(Sp::H)?;
                let pre = self.term(1, 2, 1) * self.geo(1, 1, 1)?;
                Ok(pre * h.subst_x(1, 2) * h.subst_x(1, 1).invert()?)
            }
            PIpoly => {
                let je = self.sp(Sp::JIe)?;
                Ok(self.term(1, 2, 1) * je.subst_x(1, 2) * je.subst_x(1, 1).invert()?)
            }
            AtildeFull => Ok(-&*self.inner(Inner::HLogDerivShifted)? - &*self.inner(Inner::DivisorSum)?),
            ANeg => self.a_neg(),
            AInvNeg => self.a_inv_neg(),
            BaNeg => {
                let s = self.sp(Sp::S)?;
                let a = self.aux(ANeg)?;
                Ok(self.one() + s.subst_x(1, 1) - s.shift_x(1)? * &*a)
            }
            CBaNeg => {
                let si = self.sp(Sp::SI)?;
                let a = self.aux(AInvNeg)?;
                let d = (&*si - &si.subst_x(1, 1)).shift_x(1)?;
                Ok(self.one() + si.subst_x(1, 1) + si.subst_x(1, 2) - d * &*a)
            }
            CBaOddNeg => {
                let si = self.sp(Sp::SI)?;
                let a = self.aux(AInvNeg)?;
                let lead = si.even_part().subst_x(1, 1) + si.odd_part().subst_x(1, 2);
                Ok(lead - &*self.inner(Inner::SIOddDiff)? * &*a)
            }
        }
    }

    /// `F(x) (1 + x^2 q (d(xF)/dx)(xq))`, written with `x d/dx` so that no
    /// degree is lost.
    fn m_defined(&self, f: &XSeries) -> R {
        let xf = f.shift_x(1)?;
        let inner = xf.theta().subst_x(1, 1).shift_x(1)?;
        Ok(f * &(self.one() + inner))
    }

    /// Laurent form of the type A series: ratio of two q-binomial sums.
    fn a_neg(&self) -> R {
        let ctx = &self.ctx;
        let n_max = ctx.x_order as i64;
        let mut num = Vec::new();
        let mut den = Vec::new();
        for k in 0..=n_max {
            let mut a = QLaurent::zero();
            for i in 0..=k {
                let t = q_binomial(k, i, 1).mul(&q_binomial(k + 1, i + 1, 1), ctx).shift(-i * (k - i), ctx);
                a = a.add(&t, ctx);
            }
            num.push(a);
            let mut b = if k == 0 { QLaurent::one() } else { QLaurent::zero() };
            for i in 0..k {
                let t = q_binomial(k - 1, i, 1).mul(&q_binomial(k, i, 1), ctx).shift(-i * (k - i), ctx);
                b = b.add(&t, ctx);
            }
            den.push(b);
        }
        XSeries::from_coeffs(num, ctx).try_div(&XSeries::from_coeffs(den, ctx))
    }

    /// Laurent form of the type A involution series, with q^2-binomials.
    fn a_inv_neg(&self) -> R {
        let ctx = &self.ctx;
        let n_max = ctx.x_order as i64;
        let mut num = Vec::new();
        let mut den = Vec::new();
        for j in 0..=n_max {
            let h = j / 2;
            let odd = j % 2;
            num.push(q_binomial(j, h, 2).shift(-h * h + odd, ctx));
            den.push(if j == 0 {
                QLaurent::one()
            } else {
                let sign = if j % 2 == 0 { 1 } else { -1 };
                q_binomial(j - 1, h, 2).scale(&rat(sign)).shift(-h * h, ctx)
            });
        }
        XSeries::from_coeffs(num, ctx).try_div(&XSeries::from_coeffs(den, ctx))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::TruncationContext;

    fn poly(s: &XSeries, n: usize, len: i64) -> Vec<i64> {
        (0..len).map(|e| s.coeff(n).coeff(e).to_integer().try_into().unwrap()).collect()
    }

    #[test]
    fn finite_type_rows() {
        let c = Catalog::new(TruncationContext::new(4, 25, -20).unwrap());
        let a = c.gf(Family::all(FamilyType::A)).unwrap();
        assert_eq!(poly(&a, 4, 9), vec![1, 4, 9, 12, 10, 4, 2, 0, 0]);
        let ai = c.gf(Family::inv(FamilyType::A)).unwrap();
        assert_eq!(poly(&ai, 3, 6), vec![1, 3, 1, 0, 1, 0]);
        let b = c.gf(Family::all(FamilyType::B)).unwrap();
        assert_eq!(poly(&b, 3, 8), vec![1, 3, 5, 6, 5, 3, 1, 0]);
        let d = c.gf(Family::all(FamilyType::D)).unwrap();
        assert_eq!(poly(&d, 3, 8), vec![1, 4, 9, 13, 11, 7, 3, 0]);
        let di = c.gf(Family::inv(FamilyType::D)).unwrap();
        assert_eq!(poly(&di, 2, 6), vec![1, 3, 1, 0, 1, 0]);
    }

    #[test]
    fn path_series_low_degrees() {
        let c = Catalog::new(TruncationContext::new(3, 20, -20).unwrap());
        let l = c.aux(AuxName::L).unwrap();
        for e in 0..=10 {
            assert_eq!(l.coeff(1).coeff(e), rat(1));
        }
        assert_eq!(poly(&l, 2, 6), vec![1, 2, 2, 2, 2, 2]);
        let lioo = c.aux(AuxName::LIoddOdd).unwrap();
        for e in -10..=12 {
            assert_eq!(lioo.coeff(2).coeff(e), rat(0));
        }
        assert!(c.aux(AuxName::Ba).unwrap().coeff(0).is_one());
        assert!(c.aux(AuxName::Mstar).unwrap().coeff(0).is_one());
    }

    #[test]
    fn laurent_form_first_terms() {
        let c = Catalog::new(TruncationContext::new(3, 40, -20).unwrap());
        assert_eq!(c.aux(AuxName::ANeg).unwrap().coeff(1), &QLaurent::from_ints(0, &[1, 1]));
        assert_eq!(c.aux(AuxName::AInvNeg).unwrap().coeff(1), &QLaurent::from_ints(0, &[1, 1]));
    }
}
