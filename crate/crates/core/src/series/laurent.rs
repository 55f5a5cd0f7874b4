//! Truncated Laurent series in `q` with exact rational coefficients.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{Precision, SeriesError, TruncationContext};

pub type Rational = BigRational;

/// A Laurent series `sum c_e q^e`, stored densely from its lowest nonzero
/// exponent, together with how far it is known.
///
/// Canonical form: no zero at either end of `coeffs`, nothing stored at or
/// beyond the precision bound, `lo == 0` when empty. Structural equality is
/// therefore value equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QLaurent {
    lo: i64,
    coeffs: Vec<Rational>,
    prec: Precision,
}

pub(crate) fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

fn rat128(n: i128) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

impl QLaurent {
    pub fn zero() -> Self {
        Self { lo: 0, coeffs: Vec::new(), prec: Precision::Exact }
    }

    pub fn one() -> Self {
        Self::monomial(rat(1), 0)
    }

    pub fn unknown() -> Self {
        Self { lo: 0, coeffs: Vec::new(), prec: Precision::Unknown }
    }

    pub fn monomial(c: Rational, e: i64) -> Self {
        Self::raw(e, vec![c], Precision::Exact)
    }

    pub fn int_monomial(c: i64, e: i64) -> Self {
        Self::monomial(rat(c), e)
    }

    /// Exact polynomial `sum_k coeffs[k] q^(lo+k)`.
    pub fn from_ints(lo: i64, coeffs: &[i64]) -> Self {
        Self::raw(lo, coeffs.iter().map(|&c| rat(c)).collect(), Precision::Exact)
    }

    /// Exact Laurent polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I: IntoIterator<Item = (i64, Rational)>>(terms: I) -> Self {
        let terms: Vec<_> = terms.into_iter().collect();
        if terms.is_empty() {
            return Self::zero();
        }
        let lo = terms.iter().map(|t| t.0).min().unwrap();
        let hi = terms.iter().map(|t| t.0).max().unwrap();
        let mut dense = vec![Rational::zero(); (hi - lo + 1) as usize];
        for (e, c) in terms {
            dense[(e - lo) as usize] += c;
        }
        Self::raw(lo, dense, Precision::Exact)
    }

    /// Canonicalizes without applying any window.
    fn raw(lo: i64, coeffs: Vec<Rational>, prec: Precision) -> Self {
        let mut out = Self { lo, coeffs, prec };
        out.trim();
        out
    }

    fn trim(&mut self) {
        if self.prec == Precision::Unknown {
            self.coeffs.clear();
        }
        if let Precision::Below(p) = self.prec {
            let keep = (p - self.lo).clamp(0, self.coeffs.len() as i64) as usize;
            self.coeffs.truncate(keep);
        }
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.lo += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.lo = 0;
        }
    }

    /// Builds a canonical value from dense data and applies the window of
    /// `ctx`: terms above `q_max` are dropped (capping the precision), and
    /// any nonzero term below `q_min` makes the whole value unknown.
    pub(crate) fn from_dense(lo: i64, coeffs: Vec<Rational>, prec: Precision, ctx: &TruncationContext) -> Self {
        let mut out = Self::raw(lo, coeffs, prec);
        out.apply_window(ctx);
        out
    }

    fn apply_window(&mut self, ctx: &TruncationContext) {
        if self.prec == Precision::Unknown {
            return;
        }
        if !self.coeffs.is_empty() && self.lo < ctx.q_min {
            *self = Self::unknown();
            return;
        }
        let cap = ctx.q_max + 1;
        let dropped = self.degree().is_some_and(|d| d > ctx.q_max);
        self.prec = match self.prec {
            Precision::Exact if !dropped => Precision::Exact,
            Precision::Exact => Precision::Below(cap),
            Precision::Below(p) => Precision::Below(p.min(cap)),
            Precision::Unknown => Precision::Unknown,
        };
        self.trim();
    }

    /// Re-applies the window of `ctx`.
    pub fn truncate(&self, ctx: &TruncationContext) -> Self {
        let mut out = self.clone();
        out.apply_window(ctx);
        out
    }

    /// Forgets everything from `q^p` upward.
    pub fn with_precision(&self, p: Precision) -> Self {
        Self::raw(self.lo, self.coeffs.clone(), self.prec.min(p))
    }

    pub fn precision(&self) -> Precision {
        self.prec
    }

    pub fn is_unknown(&self) -> bool {
        self.prec == Precision::Unknown
    }

    /// No stored terms (the value may still carry an unknown tail).
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.prec == Precision::Exact && self.coeffs.len() == 1 && self.lo == 0 && self.coeffs[0].is_one()
    }

    pub fn is_exact_zero(&self) -> bool {
        self.coeffs.is_empty() && self.prec == Precision::Exact
    }

    pub fn valuation(&self) -> Option<i64> {
        (!self.coeffs.is_empty()).then_some(self.lo)
    }

    pub fn degree(&self) -> Option<i64> {
        (!self.coeffs.is_empty()).then(|| self.lo + self.coeffs.len() as i64 - 1)
    }

    /// Lowest exponent that may be nonzero: the valuation, or the
    /// precision bound when nothing is stored.
    fn effective_valuation(&self) -> Option<i64> {
        match (self.valuation(), self.prec) {
            (Some(v), _) => Some(v),
            (None, Precision::Below(p)) => Some(p),
            _ => None,
        }
    }

    pub fn coeff(&self, e: i64) -> Rational {
        let idx = e - self.lo;
        if idx < 0 || idx >= self.coeffs.len() as i64 {
            Rational::zero()
        } else {
            self.coeffs[idx as usize].clone()
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(k, c)| (self.lo + k as i64, c))
    }

    /// Integer coefficients of `q^lo ..= q^hi`, if they are all integers.
    pub fn int_range(&self, lo: i64, hi: i64) -> Option<Vec<BigInt>> {
        (lo..=hi)
            .map(|e| {
                let c = self.coeff(e);
                c.is_integer().then(|| c.to_integer())
            })
            .collect()
    }

    /// Value at `q = 1`; only defined for an exactly known Laurent polynomial.
    pub fn eval_at_one(&self) -> Option<Rational> {
        (self.prec == Precision::Exact).then(|| self.coeffs.iter().fold(Rational::zero(), |a, c| a + c))
    }

    pub fn neg(&self) -> Self {
        Self { lo: self.lo, coeffs: self.coeffs.iter().map(|c| -c).collect(), prec: self.prec }
    }

    pub fn scale(&self, k: &Rational) -> Self {
        if k.is_zero() {
            return match self.prec {
                Precision::Unknown => Self::unknown(),
                _ => Self::zero(),
            };
        }
        Self { lo: self.lo, coeffs: self.coeffs.iter().map(|c| c * k).collect(), prec: self.prec }
    }

    /// Multiplication by `q^k`, then the window of `ctx`.
    pub fn shift(&self, k: i64, ctx: &TruncationContext) -> Self {
        let lo = if self.coeffs.is_empty() { 0 } else { self.lo + k };
        Self::from_dense(lo, self.coeffs.clone(), self.prec.shift(k), ctx)
    }

    pub fn add(&self, other: &Self, ctx: &TruncationContext) -> Self {
        let prec = self.prec.min(other.prec);
        if prec == Precision::Unknown {
            return Self::unknown();
        }
        if other.coeffs.is_empty() {
            return Self::from_dense(self.lo, self.coeffs.clone(), prec, ctx);
        }
        if self.coeffs.is_empty() {
            return Self::from_dense(other.lo, other.coeffs.clone(), prec, ctx);
        }
        let lo = self.lo.min(other.lo);
        let hi = self.degree().unwrap().max(other.degree().unwrap());
        let mut dense = vec![Rational::zero(); (hi - lo + 1) as usize];
        for (e, c) in self.terms().chain(other.terms()) {
            dense[(e - lo) as usize] += c;
        }
        Self::from_dense(lo, dense, prec, ctx)
    }

    pub fn sub(&self, other: &Self, ctx: &TruncationContext) -> Self {
        self.add(&other.neg(), ctx)
    }

    pub fn mul(&self, other: &Self, ctx: &TruncationContext) -> Self {
        let a = self.prepare();
        let b = other.prepare();
        sum_of_products(&[(&a, &b)], ctx)
    }

    /// Multiplicative inverse as a Laurent series in `q`.
    ///
    /// Requires a known lowest term; the result is exact only when `self` is
    /// an exact monomial.
    pub fn inverse(&self, ctx: &TruncationContext) -> Result<Self, SeriesError> {
        let v = match self.valuation() {
            Some(v) => v,
            None => return Err(SeriesError::NotInvertible { detail: format!("constant coefficient {self} has no known lowest term") }),
        };
        let lead_inv = self.coeffs[0].recip();
        if self.coeffs.len() == 1 && self.prec == Precision::Exact {
            return Ok(Self::from_dense(-v, vec![lead_inv], Precision::Exact, ctx));
        }
        // u = self / (c q^v) = 1 + u_1 q + ...; known below prec - v.
        let prec = match self.prec {
            Precision::Exact => Precision::Below(ctx.q_max + 1),
            Precision::Below(p) => Precision::Below(p - 2 * v),
            Precision::Unknown => unreachable!(),
        };
        let top = match prec {
            Precision::Below(p) => p.min(ctx.q_max + 1),
            _ => unreachable!(),
        };
        let len = (top + v).max(0) as usize;
        let u: Vec<Rational> = self.coeffs.iter().map(|c| c * &lead_inv).collect();
        let mut inv: Vec<Rational> = Vec::with_capacity(len);
        for k in 0..len {
            if k == 0 {
                inv.push(Rational::one());
                continue;
            }
            let mut acc = Rational::zero();
            for j in 1..=k.min(u.len().saturating_sub(1)) {
                if !u[j].is_zero() && !inv[k - j].is_zero() {
                    acc -= &u[j] * &inv[k - j];
                }
            }
            inv.push(acc);
        }
        let inv: Vec<Rational> = inv.into_iter().map(|c| c * &lead_inv).collect();
        Ok(Self::from_dense(-v, inv, prec, ctx))
    }

    pub(crate) fn prepare(&self) -> Prepared<'_> {
        let small = self
            .coeffs
            .iter()
            .map(|c| if c.is_integer() { c.numer().to_i64() } else { None })
            .collect::<Option<Vec<i64>>>();
        Prepared { src: self, small }
    }
}

/// A coefficient readied for repeated multiplication: integer data is
/// extracted once so convolutions can run on machine integers.
pub(crate) struct Prepared<'a> {
    pub(crate) src: &'a QLaurent,
    small: Option<Vec<i64>>,
}

/// Precision of a product, or `None` when the product is exactly zero.
fn product_precision(a: &QLaurent, b: &QLaurent) -> Option<Precision> {
    if a.is_exact_zero() || b.is_exact_zero() {
        return None;
    }
    if a.prec == Precision::Unknown || b.prec == Precision::Unknown {
        return Some(Precision::Unknown);
    }
    let (va, vb) = (a.effective_valuation().unwrap(), b.effective_valuation().unwrap());
    Some(a.prec.shift(vb).min(b.prec.shift(va)))
}

/// `sum a_k * b_k` over the given pairs, with precision tracking and the
/// window of `ctx` applied once at the end.
pub(crate) fn sum_of_products(pairs: &[(&Prepared<'_>, &Prepared<'_>)], ctx: &TruncationContext) -> QLaurent {
    let mut prec = Precision::Exact;
    let mut live = Vec::with_capacity(pairs.len());
    for &(a, b) in pairs {
        if let Some(p) = product_precision(a.src, b.src) {
            prec = prec.min(p);
            if !a.src.coeffs.is_empty() && !b.src.coeffs.is_empty() {
                live.push((a, b));
            }
        }
    }
    if prec == Precision::Unknown {
        return QLaurent::unknown();
    }
    if live.is_empty() {
        return QLaurent::from_dense(0, Vec::new(), prec, ctx);
    }
    let lo = live.iter().map(|(a, b)| a.src.lo + b.src.lo).min().unwrap();
    let mut hi = live.iter().map(|(a, b)| a.src.degree().unwrap() + b.src.degree().unwrap()).max().unwrap();
    hi = hi.min(ctx.q_max + 1);
    if let Precision::Below(p) = prec {
        hi = hi.min(p - 1);
    }
    if hi < lo {
        return QLaurent::from_dense(0, Vec::new(), prec, ctx);
    }
    let width = (hi - lo + 1) as usize;
    let dense = if live.iter().all(|(a, b)| a.small.is_some() && b.small.is_some()) {
        convolve_small(&live, lo, width)
    } else {
        None
    };
    let dense = dense.unwrap_or_else(|| convolve_big(&live, lo, width));
    QLaurent::from_dense(lo, dense, prec, ctx)
}

fn convolve_small(live: &[(&Prepared<'_>, &Prepared<'_>)], lo: i64, width: usize) -> Option<Vec<Rational>> {
    let mut acc = vec![0i128; width];
    for (a, b) in live {
        let (sa, sb) = (a.small.as_ref()?, b.small.as_ref()?);
        let base = a.src.lo + b.src.lo - lo;
        for (i, &x) in sa.iter().enumerate() {
            if x == 0 {
                continue;
            }
            let start = base + i as i64;
            if start >= width as i64 {
                break;
            }
            let avail = (width as i64 - start).min(sb.len() as i64) as usize;
            let row = &mut acc[start as usize..start as usize + avail];
            for (slot, &y) in row.iter_mut().zip(&sb[..avail]) {
                *slot = slot.checked_add(x as i128 * y as i128)?;
            }
        }
    }
    Some(acc.into_iter().map(rat128).collect())
}

fn convolve_big(live: &[(&Prepared<'_>, &Prepared<'_>)], lo: i64, width: usize) -> Vec<Rational> {
    let mut acc = vec![Rational::zero(); width];
    for (a, b) in live {
        for (ea, ca) in a.src.terms() {
            for (eb, cb) in b.src.terms() {
                let idx = ea + eb - lo;
                if idx >= width as i64 {
                    break;
                }
                acc[idx as usize] += ca * cb;
            }
        }
    }
    acc
}

impl std::fmt::Display for QLaurent {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.prec == Precision::Unknown {
            return write!(f, "?");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            let sign = if c.is_negative() { "-" } else if first { "" } else { "+" };
            let mag = c.abs();
            let body = match (e, mag.is_one()) {
                (0, _) => format!("{mag}"),
                (_, true) => format!("q^{e}"),
                (_, false) => format!("{mag}*q^{e}"),
            };
            if first {
                write!(f, "{sign}{body}")?;
            } else {
                write!(f, " {sign} {body}")?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        if let Precision::Below(p) = self.prec {
            write!(f, " + O(q^{p})")?;
        }
        Ok(())
    }
}
