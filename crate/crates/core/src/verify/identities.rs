//! The q-equations and two-expression agreements, each written as a pair of
//! sides that must agree to truncation.

use std::sync::Arc;

use super::{shared_catalog, Bounds, CheckId, CheckReport};
use crate::catalog::{AuxName, Catalog, Family, FamilyType, SpecialName};
use crate::series::{geometric, Comparison, SeriesError, TruncationContext, XSeries};

pub const IDENTITY_COUNT: u8 = 34;

/// One-line statement of identity `k`.
pub fn identity_title(k: u8) -> &'static str {
    match k {
        1 => "J(x) = (1-x) H(x) + x H(xq)",
        2 => "J(x) + x/(1-xq) J(xq) = H(xq)",
        3 => "H(x) = J(x) - x^2 J(xq) / ((1-x)(1-xq))",
        4 => "(1-x) H(x) - (1-2x) H(xq) + x^2 q/(1-xq) H(xq^2) = 0",
        5 => "(1-xq) J(x) - (1-x(1+q)) J(xq) + x^2 q^2/(1-xq^2) J(xq^2) = 0",
        6 => "K(x) - xq/(1-xq) K(xq) = H(xq)",
        7 => "K(x) - K(xq) + xq^2/(1-xq^2) K(xq^2) - x^3 q^6/((xq;q)_3) K(xq^3) = 0",
        8 => "(1-2xq) JI(x) - (1-x(1+q)) JI(xq) + x^2 q^2 (1-2x) JI(xq^2) = 0",
        9 => "(1-2x) JI(-xq) = 2 JI(x) - JI(xq)",
        10 => "JI(x) = JIe(x) - x JIe(xq)",
        11 => "JIe(x) - JIe(xq) + x^2 q JIe(xq^2) = 0",
        12 => "(1-2x)(KI(x) - xq KI(xq)) = JI(x) - x JI(xq) and KI(x) - xq KI(xq) = JI(x) + x JI(-xq)",
        13 => "KI(x) - (1+xq) KI(xq) + xq^2 (1+xq) KI(xq^2) - x^3 q^6 KI(xq^3) = 0",
        14 => "JI(x) = (1-x) KI(x) - qx KI(xq) + x^3 q^3 KI(xq^2)",
        15 => "KI(x) = KIe(x) + xq KIe(xq)",
        16 => "M*(x) = 1 + x M*(x) + xq (M*(x) - 1) M*(xq)",
        17 => "M (1 - x M*) = M*",
        18 => "Ocheck closed form = M (1 + x^2 q (xM)'(xq))",
        19 => "At(x) - At(xq) = Ocheck(xq) - 1 - 2xq/(1-xq) + Ocheck*(x) - Ocheck*(xq)",
        20 => "OIcheck closed form = MI (1 + x^2 q (x MI)'(xq))",
        21 => "OIcheck* closed form = OIcheck / (1 - x MI)",
        22 => "AIt(x) - AIt(xq) = OIcheck(xq) - 1 + OIcheck*(x) - OIcheck*(xq)",
        23 => "type A series = its Laurent form",
        24 => "Ba = 1 + S(xq) - x S(x) A",
        25 => "type A involution series = its Laurent form",
        26 => "cBa = 1 + SI(xq) + SI(xq^2) - x (SI(x) - SI(xq)) AI",
        27 => "cBaOdd = SIe(xq) + SIo(xq^2) - x (SIo(x) - SIe(xq)) AI",
        28 => "Bna = xq^2/(1-xq^2) ((1-x) A - 1)",
        29 => "S(x) = N(x/q) - N(xq)",
        30 => "SI(x) = NI(x/q) - NI(x)",
        31 => "x A (1 - x - P) = x + P",
        32 => "x AI (1 - x - PI) = x + PI",
        33 => "xq D = xq (2 Ba - 1 - x A) + Bna",
        34 => "xq DI = xq (2 cBaOdd + 1 + x AI) + cBna",
        _ => "unknown identity",
    }
}

struct Ctx<'a> {
    cat: &'a Catalog,
}

type Sides = (XSeries, XSeries);

impl Ctx<'_> {
    fn ctx(&self) -> &TruncationContext {
        self.cat.ctx()
    }

    fn sp(&self, name: SpecialName) -> Result<Arc<XSeries>, SeriesError> {
        self.cat.special(name)
    }

    fn aux(&self, name: AuxName) -> Result<Arc<XSeries>, SeriesError> {
        self.cat.aux(name)
    }

    fn gf(&self, ty: FamilyType, inv: bool) -> Result<Arc<XSeries>, SeriesError> {
        self.cat.gf(if inv { Family::inv(ty) } else { Family::all(ty) })
    }

    /// `c x^n q^e`.
    fn t(&self, c: i64, n: usize, e: i64) -> XSeries {
        XSeries::term(c, n, e, self.ctx())
    }

    fn one(&self) -> XSeries {
        XSeries::one(self.ctx())
    }

    fn zero(&self) -> XSeries {
        XSeries::zero(self.ctx())
    }

    /// `1/(1 - x q^b)`.
    fn geo(&self, b: i64) -> Result<XSeries, SeriesError> {
        geometric(1, 1, b, self.ctx())
    }

    /// Pairs of series that must agree; one pair except for identity 12.
    fn sides(&self, k: u8) -> Result<Vec<Sides>, SeriesError> {
        use SpecialName::*;
        let sh = |f: &XSeries, j: i64| f.subst_x(1, j);
        Ok(vec![match k {
            1 => {
                let (j, h) = (self.sp(J)?, self.sp(H)?);
                ((*j).clone(), (self.one() - self.t(1, 1, 0)) * &*h + self.t(1, 1, 0) * sh(&h, 1))
            }
            2 => {
                let (j, h) = (self.sp(J)?, self.sp(H)?);
                (&*j + &(self.t(1, 1, 0) * self.geo(1)? * sh(&j, 1)), sh(&h, 1))
            }
            3 => {
                let (j, h) = (self.sp(J)?, self.sp(H)?);
                ((*h).clone(), &*j - &(self.t(1, 2, 0) * sh(&j, 1) * self.geo(0)? * self.geo(1)?))
            }
            4 => {
                let h = self.sp(H)?;
                let lhs = (self.one() - self.t(1, 1, 0)) * &*h - (self.one() - self.t(2, 1, 0)) * sh(&h, 1)
                    + self.t(1, 2, 1) * self.geo(1)? * sh(&h, 2);
                (lhs, self.zero())
            }
            5 => {
                let j = self.sp(J)?;
                let lhs = (self.one() - self.t(1, 1, 1)) * &*j
                    - (self.one() - self.t(1, 1, 0) - self.t(1, 1, 1)) * sh(&j, 1)
                    + self.t(1, 2, 2) * self.geo(2)? * sh(&j, 2);
                (lhs, self.zero())
            }
            6 => {
                let (kk, h) = (self.sp(K)?, self.sp(H)?);
                (&*kk - &(self.t(1, 1, 1) * self.geo(1)? * sh(&kk, 1)), sh(&h, 1))
            }
            7 => {
                let kk = self.sp(K)?;
                let lhs = &*kk - &sh(&kk, 1) + self.t(1, 1, 2) * self.geo(2)? * sh(&kk, 2)
                    - self.t(1, 3, 6) * self.geo(1)? * self.geo(2)? * self.geo(3)? * sh(&kk, 3);
                (lhs, self.zero())
            }
            8 => {
                let j = self.sp(JI)?;
                let lhs = (self.one() - self.t(2, 1, 1)) * &*j
                    - (self.one() - self.t(1, 1, 0) - self.t(1, 1, 1)) * sh(&j, 1)
                    + self.t(1, 2, 2) * (self.one() - self.t(2, 1, 0)) * sh(&j, 2);
                (lhs, self.zero())
            }
            9 => {
                let j = self.sp(JI)?;
                ((self.one() - self.t(2, 1, 0)) * j.subst_x(-1, 1), j.scale_int(2) - sh(&j, 1))
            }
            10 => {
                let (j, je) = (self.sp(JI)?, self.sp(JIe)?);
                ((*j).clone(), &*je - &(self.t(1, 1, 0) * sh(&je, 1)))
            }
            11 => {
                let je = self.sp(JIe)?;
                (&*je - &sh(&je, 1) + self.t(1, 2, 1) * sh(&je, 2), self.zero())
            }
            12 => {
                let (kk, j) = (self.sp(KI)?, self.sp(JI)?);
                let diff = &*kk - &(self.t(1, 1, 1) * sh(&kk, 1));
                let first = (self.one() - self.t(2, 1, 0)) * &diff - (&*j - &(self.t(1, 1, 0) * sh(&j, 1)));
                let second = &diff - &(&*j + &(self.t(1, 1, 0) * j.subst_x(-1, 1)));
                return Ok(vec![(first, self.zero()), (second, self.zero())]);
            }
            13 => {
                let kk = self.sp(KI)?;
                let one_xq = self.one() + self.t(1, 1, 1);
                let lhs = &*kk - &(&one_xq * &sh(&kk, 1)) + self.t(1, 1, 2) * one_xq * sh(&kk, 2)
                    - self.t(1, 3, 6) * sh(&kk, 3);
                (lhs, self.zero())
            }
            14 => {
                let (kk, j) = (self.sp(KI)?, self.sp(JI)?);
                let rhs = (self.one() - self.t(1, 1, 0)) * &*kk - self.t(1, 1, 1) * sh(&kk, 1)
                    + self.t(1, 3, 3) * sh(&kk, 2);
                ((*j).clone(), rhs)
            }
            15 => {
                let (kk, ke) = (self.sp(KI)?, self.sp(KIe)?);
                ((*kk).clone(), &*ke + &(self.t(1, 1, 1) * sh(&ke, 1)))
            }
            16 => {
                let m = self.aux(AuxName::Mstar)?;
                let rhs = self.one() + self.t(1, 1, 0) * &*m + self.t(1, 1, 1) * (&*m - &self.one()) * sh(&m, 1);
                ((*m).clone(), rhs)
            }
            17 => {
                let (m, ms) = (self.aux(AuxName::M)?, self.aux(AuxName::Mstar)?);
                (&*m * &(self.one() - self.t(1, 1, 0) * &*ms), (*ms).clone())
            }
            18 => self.pair(AuxName::Ocheck, AuxName::OcheckDef)?,
            19 => {
                let at = self.gf(FamilyType::Atilde, false)?;
                let (o, os) = (self.aux(AuxName::Ocheck)?, self.aux(AuxName::OcheckStar)?);
                let rhs = sh(&o, 1) - self.one() - self.t(2, 1, 1) * self.geo(1)? + &*os - sh(&os, 1);
                (&*at - &sh(&at, 1), rhs)
            }
            20 => self.pair(AuxName::OIcheck, AuxName::OIcheckDef)?,
            21 => self.pair(AuxName::OIcheckStar, AuxName::OIcheckStarDef)?,
            22 => {
                let at = self.gf(FamilyType::Atilde, true)?;
                let (o, os) = (self.aux(AuxName::OIcheck)?, self.aux(AuxName::OIcheckStar)?);
                let rhs = sh(&o, 1) - self.one() + &*os - sh(&os, 1);
                (&*at - &sh(&at, 1), rhs)
            }
            23 => ((*self.gf(FamilyType::A, false)?).clone(), (*self.aux(AuxName::ANeg)?).clone()),
            24 => self.pair(AuxName::Ba, AuxName::BaNeg)?,
            25 => ((*self.gf(FamilyType::A, true)?).clone(), (*self.aux(AuxName::AInvNeg)?).clone()),
            26 => self.pair(AuxName::CBa, AuxName::CBaNeg)?,
            27 => self.pair(AuxName::CBaOdd, AuxName::CBaOddNeg)?,
            28 => self.pair(AuxName::Bna, AuxName::BnaA)?,
            29 => {
                let n = self.sp(N)?;
                ((*self.sp(S)?).clone(), sh(&n, -1) - sh(&n, 1))
            }
            30 => {
                let n = self.sp(NI)?;
                ((*self.sp(SI)?).clone(), sh(&n, -1) - (*n).clone())
            }
            31 => self.polyomino(false)?,
            32 => self.polyomino(true)?,
            33 => {
                let d = self.gf(FamilyType::D, false)?;
                let (ba, bna, a) = (self.aux(AuxName::Ba)?, self.aux(AuxName::Bna)?, self.gf(FamilyType::A, false)?);
                let inner = ba.scale_int(2) - self.one() - self.t(1, 1, 0) * &*a;
                (self.t(1, 1, 1) * &*d, self.t(1, 1, 1) * inner + &*bna)
            }
            34 => {
                let d = self.gf(FamilyType::D, true)?;
                let (bo, bna, a) = (self.aux(AuxName::CBaOdd)?, self.aux(AuxName::CBna)?, self.gf(FamilyType::A, true)?);
                let inner = bo.scale_int(2) + self.one() + self.t(1, 1, 0) * &*a;
                (self.t(1, 1, 1) * &*d, self.t(1, 1, 1) * inner + &*bna)
            }
            _ => return Err(SeriesError::InvalidArgument(format!("no identity {k}"))),
        }])
    }

    fn pair(&self, a: AuxName, b: AuxName) -> Result<Sides, SeriesError> {
        Ok(((*self.aux(a)?).clone(), (*self.aux(b)?).clone()))
    }

    /// `x W (1 - x - P) = x + P`, with `P` the staircase series of the
    /// family, cleared of the division by `x`.
    fn polyomino(&self, inv: bool) -> Result<Sides, SeriesError> {
        let w = self.gf(FamilyType::A, inv)?;
        let p = self.aux(if inv { AuxName::PIpoly } else { AuxName::Ppoly })?;
        let x = self.t(1, 1, 0);
        let lhs = &x * &*w * (self.one() - &x - &*p);
        Ok((lhs, x + &*p))
    }
}

/// Extra q-window tried in turn when a side is not known far enough.
const HEADROOM: [i64; 3] = [0, 24, 72];

/// Checks identity `k` under the identity bounds.
pub fn run_identity(k: u8, bounds: &Bounds) -> CheckReport {
    let id = CheckId::Identity(k);
    let mut last = None;
    for extra in HEADROOM {
        let ctx = TruncationContext {
            x_order: bounds.identity_x_order,
            q_max: bounds.identity_q_max + extra,
            q_min: bounds.identity_q_min,
        };
        let cat = shared_catalog(ctx);
        let pairs = match (Ctx { cat: &cat }).sides(k) {
            Ok(p) => p,
            Err(e) => return CheckReport::with_status(id, super::Status::Fail, e.to_string()),
        };
        let degrees = 0..=bounds.identity_x_order;
        let cmp = pairs
            .iter()
            .map(|(lhs, rhs)| lhs.compare(rhs, degrees.clone(), bounds.identity_q_max))
            .find(|c| *c != Comparison::Equal)
            .unwrap_or(Comparison::Equal);
        match cmp {
            Comparison::Insufficient { .. } => last = Some(cmp),
            other => return CheckReport::from_comparison(id, other).detail(identity_title(k)),
        }
    }
    CheckReport::from_comparison(id, last.expect("at least one attempt")).detail(identity_title(k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::Status;

    #[test]
    fn self_comparison_passes() {
        let cat = Catalog::new(TruncationContext::new(4, 20, -20).unwrap());
        let a = cat.gf(Family::all(FamilyType::A)).unwrap();
        assert_eq!(a.compare(&a, 0..=4, 20), Comparison::Equal);
    }

    #[test]
    fn small_window_identities() {
        let bounds = Bounds { identity_x_order: 4, identity_q_max: 16, identity_q_min: -20, ..Bounds::default() };
        for k in 1..=IDENTITY_COUNT {
            let r = run_identity(k, &bounds);
            assert_eq!(r.status, Status::Pass, "{r:?}");
        }
    }

    #[test]
    fn default_window_identities() {
        let bounds = Bounds::default();
        for k in 1..=IDENTITY_COUNT {
            let start = std::time::Instant::now();
            let r = run_identity(k, &bounds);
            eprintln!("I{k} {:?} {:?}", r.status, start.elapsed());
            assert_eq!(r.status, Status::Pass, "{r:?}");
        }
    }
}
