//! Every named series and generating function, built exactly from its
//! defining sum or closed form under a given truncation context.

mod affine;
mod forms;
mod names;
mod special;

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

pub use affine::{affine_table, AffineTable, Atom, DenFactor, Entry, Fault, Mono, NumFactor, QSum, RationalEntry, Slot};
pub use names::{AuxName, Family, FamilyType, SpecialName, Variant};

use crate::series::{SeriesError, TruncationContext, XSeries};

/// Intermediate quotients shared by several formulas.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Inner {
    JInv,
    /// `J(xq)/J(x)`
    JShiftRatio,
    JIInv,
    /// `JI(-xq)/JI(x)`
    JIShiftRatio,
    /// `KIe(xq)/JI(x)`
    KIeShiftOverJI,
    /// `(x H'(x))(xq) / H(xq)`
    HLogDerivShifted,
    /// `(x JIe'(x))(xq) / JIe(xq)`
    JIeLogDerivShifted,
    /// `sum_{n>=1} x^n q^n / (1 - q^n)`
    DivisorSum,
    /// `x (S_o(x) - S_e(xq))` for the involution path series
    SIOddDiff,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Key {
    Special(SpecialName),
    Gf(Family),
    Aux(AuxName),
    Inner(Inner),
}

/// Builds series on demand under one context and memoizes them.
///
/// The cache is safe to share between threads; concurrent misses on the
/// same key may build the value twice, with identical results.
pub struct Catalog {
    ctx: TruncationContext,
    fault: Option<Fault>,
    cache: RwLock<HashMap<Key, Arc<XSeries>>>,
}

pub type CatalogResult = Result<Arc<XSeries>, SeriesError>;

impl Catalog {
    pub fn new(ctx: TruncationContext) -> Self {
        Self { ctx, fault: None, cache: RwLock::new(HashMap::new()) }
    }

    /// A catalog whose affine assembly uses a deliberately corrupted table.
    pub fn with_fault(ctx: TruncationContext, fault: Fault) -> Self {
        Self { ctx, fault: Some(fault), cache: RwLock::new(HashMap::new()) }
    }

    pub fn ctx(&self) -> &TruncationContext {
        &self.ctx
    }

    pub fn fault(&self) -> Option<&Fault> {
        self.fault.as_ref()
    }

    pub fn special(&self, name: SpecialName) -> CatalogResult {
        self.cached(Key::Special(name), || self.build_special(name))
    }

    pub fn gf(&self, family: Family) -> CatalogResult {
        self.cached(Key::Gf(family), || self.build_gf(family))
    }

    pub fn aux(&self, name: AuxName) -> CatalogResult {
        self.cached(Key::Aux(name), || self.build_aux(name))
    }

    fn inner(&self, which: Inner) -> CatalogResult {
        self.cached(Key::Inner(which), || self.build_inner(which))
    }

    fn cached(&self, key: Key, build: impl FnOnce() -> Result<XSeries, SeriesError>) -> CatalogResult {
        if let Some(hit) = self.cache.read().expect("catalog cache poisoned").get(&key) {
            return Ok(Arc::clone(hit));
        }
        let value = Arc::new(build()?);
        let mut cache = self.cache.write().expect("catalog cache poisoned");
        Ok(Arc::clone(cache.entry(key).or_insert(value)))
    }

    fn term(&self, c: i64, n: usize, e: i64) -> XSeries {
        XSeries::term(c, n, e, &self.ctx)
    }

    fn one(&self) -> XSeries {
        XSeries::one(&self.ctx)
    }
}
