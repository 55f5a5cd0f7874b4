//! Rational coefficient tables of the affine B, C, D generating functions,
//! kept in the factored shape in which they are printed so that single
//! coefficients can be corrupted on purpose.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{AuxName, Catalog, Family, FamilyType, Inner, Variant};
use crate::series::{geom_factor, geometric, QLaurent, SeriesError, XSeries};

/// `c x^x q^q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mono {
    pub c: i64,
    pub x: usize,
    pub q: i64,
}

const fn m(c: i64, x: usize, q: i64) -> Mono {
    Mono { c, x, q }
}

/// `(sum of monos)^pow`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NumFactor {
    pub monos: Vec<Mono>,
    pub pow: u32,
}

/// `(1 - c x^x q^q)^mult`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DenFactor {
    pub c: i64,
    pub x: usize,
    pub q: i64,
    pub mult: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalEntry {
    pub scalar: i64,
    pub num: Vec<NumFactor>,
    pub den: Vec<DenFactor>,
}

/// `scale * sum_{n>=start} x^n q^(e0 + e1 n) / (1 - q^(d0 + d1 n))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QSum {
    pub scale: i64,
    pub exp: (i64, i64),
    pub den: (i64, i64),
    pub start: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Entry {
    Zero,
    Rational(RationalEntry),
    Sum(QSum),
}

/// Position of an entry in the assembly
/// `R0 L0 + R Ke(xq)/J + R1 K/J + R2 J(+-xq)/J + R3 + S`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Slot {
    R0,
    R,
    R1,
    R2,
    R3,
    S,
}

impl Slot {
    pub const ALL: [Slot; 6] = [Slot::R0, Slot::R, Slot::R1, Slot::R2, Slot::R3, Slot::S];

    fn as_str(self) -> &'static str {
        match self {
            Slot::R0 => "R0",
            Slot::R => "R",
            Slot::R1 => "R1",
            Slot::R2 => "R2",
            Slot::R3 => "R3",
            Slot::S => "S",
        }
    }
}

/// One coefficient of an entry that a fault can negate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Atom {
    Num { factor: usize, mono: usize },
    Den(usize),
    Scalar,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AffineTable {
    pub family: Family,
    pub l0: AuxName,
    pub entries: Vec<(Slot, Entry)>,
}

impl AffineTable {
    pub fn entry(&self, slot: Slot) -> &Entry {
        self.entries.iter().find(|(s, _)| *s == slot).map(|(_, e)| e).unwrap_or(&Entry::Zero)
    }
}

impl Entry {
    /// Coefficients of this entry, in transcription order.
    pub fn atoms(&self) -> Vec<Atom> {
        match self {
            Entry::Zero => Vec::new(),
            Entry::Sum(_) => vec![Atom::Scalar],
            Entry::Rational(r) => {
                let mut out = Vec::new();
                for (f, factor) in r.num.iter().enumerate() {
                    for k in 0..factor.monos.len() {
                        out.push(Atom::Num { factor: f, mono: k });
                    }
                }
                out.extend((0..r.den.len()).map(Atom::Den));
                out.push(Atom::Scalar);
                out
            }
        }
    }

    fn flipped(&self, atom: Atom) -> Entry {
        let mut e = self.clone();
        match (&mut e, atom) {
            (Entry::Sum(s), Atom::Scalar) => s.scale = -s.scale,
            (Entry::Rational(r), Atom::Scalar) => r.scalar = -r.scalar,
            (Entry::Rational(r), Atom::Num { factor, mono }) => {
                let c = &mut r.num[factor].monos[mono].c;
                *c = -*c;
            }
            (Entry::Rational(r), Atom::Den(i)) => r.den[i].c = -r.den[i].c,
            _ => {}
        }
        e
    }
}

fn num(monos: &[Mono]) -> NumFactor {
    NumFactor { monos: monos.to_vec(), pow: 1 }
}

fn num_sq(monos: &[Mono]) -> NumFactor {
    NumFactor { monos: monos.to_vec(), pow: 2 }
}

const fn den(c: i64, x: usize, q: i64, mult: u32) -> DenFactor {
    DenFactor { c, x, q, mult }
}

fn rational(scalar: i64, num: Vec<NumFactor>, den: Vec<DenFactor>) -> Entry {
    Entry::Rational(RationalEntry { scalar, num, den })
}

fn constant(c: i64) -> Entry {
    rational(c, Vec::new(), Vec::new())
}

/// The printed coefficient table of an affine family.
pub fn affine_table(family: Family) -> Option<AffineTable> {
    use FamilyType::*;
    use Slot::*;
    // q - x - xq + x^2 q^2
    let qd: [Mono; 4] = [m(1, 0, 1), m(-1, 1, 0), m(-1, 1, 1), m(1, 2, 2)];
    // x + q(1 - x) - x^2 q^2
    let qi: [Mono; 4] = [m(1, 1, 0), m(1, 0, 1), m(-1, 1, 1), m(-1, 2, 2)];
    let one_minus_x = [m(1, 0, 0), m(-1, 1, 0)];
    let (l0, entries) = match (family.ty, family.variant) {
        (Btilde, Variant::All) => (
            AuxName::L,
            vec![
                (R0, constant(2)),
                (
                    R1,
                    rational(
                        -1,
                        vec![num(&[m(1, 1, 0), m(1, 1, 1), m(-1, 0, 1), m(1, 2, 2), m(-2, 1, 2)])],
                        vec![den(1, 1, 2, 1)],
                    ),
                ),
                (
                    R2,
                    rational(
                        1,
                        vec![num(&[m(1, 1, 2)]), num(&one_minus_x), num(&[m(1, 0, 1), m(-1, 1, 0), m(-1, 1, 1), m(1, 2, 2)])],
                        vec![den(1, 1, 1, 1), den(1, 1, 2, 2)],
                    ),
                ),
                (
                    R3,
                    rational(
                        1,
                        vec![
                            num(&[m(1, 3, 4)]),
                            num(&[
                                m(-3, 1, 6),
                                m(-2, 1, 5),
                                m(1, 1, 4),
                                m(4, 0, 4),
                                m(2, 0, 3),
                                m(-1, 1, 2),
                                m(-1, 0, 2),
                                m(1, 0, 1),
                                m(1, 0, 0),
                            ]),
                        ],
                        vec![den(1, 0, 1, 1), den(1, 1, 2, 2)],
                    ),
                ),
                (S, Entry::Sum(QSum { scale: 1, exp: (-2, 4), den: (-1, 2), start: 3 })),
            ],
        ),
        (Ctilde, Variant::All) => (
            AuxName::L,
            vec![
                (R0, constant(1)),
                (R1, rational(2, vec![num(&[m(1, 1, 2)]), num(&one_minus_x)], vec![den(1, 1, 2, 1)])),
                (R2, rational(1, vec![num(&[m(1, 2, 4)]), num_sq(&one_minus_x)], vec![den(1, 1, 1, 1), den(1, 1, 2, 2)])),
                (
                    R3,
                    rational(
                        1,
                        vec![
                            num(&[m(1, 3, 4)]),
                            num(&[m(1, 0, 0), m(1, 0, 1)]),
                            num(&[m(1, 0, 0), m(-3, 0, 1), m(4, 0, 2), m(2, 1, 3), m(-3, 1, 4)]),
                        ],
                        vec![den(1, 0, 1, 1), den(1, 1, 2, 2)],
                    ),
                ),
                (S, Entry::Zero),
            ],
        ),
        (Dtilde, Variant::All) => (
            AuxName::L,
            vec![
                (R0, constant(4)),
                (R1, rational(4, vec![num(&qd)], vec![den(1, 1, 2, 1)])),
                (R2, rational(1, vec![num_sq(&qd)], vec![den(1, 1, 1, 1), den(1, 1, 2, 2)])),
                (
                    R3,
                    rational(
                        1,
                        vec![
                            num(&[m(1, 3, 5)]),
                            num(&[m(-3, 1, 6), m(-3, 1, 5), m(4, 0, 4), m(3, 0, 3), m(-2, 1, 2), m(1, 0, 1), m(2, 0, 0)]),
                        ],
                        vec![den(1, 0, 1, 1), den(1, 1, 2, 2)],
                    ),
                ),
                (S, Entry::Sum(QSum { scale: 2, exp: (0, 3), den: (0, 1), start: 3 })),
            ],
        ),
        (Btilde, Variant::Involutions) => (
            AuxName::LIodd,
            vec![
                (R0, constant(2)),
                (R, rational(2, vec![num(&[m(1, 2, 3)]), num(&one_minus_x)], vec![den(1, 1, 2, 1)])),
                (R1, rational(1, vec![num(&qi)], vec![den(1, 1, 2, 1)])),
                (R2, rational(1, vec![num(&[m(1, 1, 2)]), num(&one_minus_x), num(&qi)], vec![den(1, 1, 2, 2)])),
                (
                    R3,
                    rational(
                        1,
                        vec![
                            num(&[m(1, 3, 4)]),
                            num(&[
                                m(1, 1, 2),
                                m(-2, 1, 3),
                                m(3, 1, 4),
                                m(-3, 1, 6),
                                m(-1, 0, 0),
                                m(3, 0, 1),
                                m(-5, 0, 2),
                                m(4, 0, 4),
                            ]),
                        ],
                        vec![den(1, 0, 1, 1), den(1, 1, 2, 2)],
                    ),
                ),
                (S, Entry::Sum(QSum { scale: 1, exp: (-2, 4), den: (-1, 2), start: 3 })),
            ],
        ),
        (Ctilde, Variant::Involutions) => (
            AuxName::LI,
            vec![
                (R0, constant(1)),
                (R, Entry::Zero),
                (R1, rational(2, vec![num(&[m(1, 1, 2)]), num(&one_minus_x)], vec![den(1, 1, 2, 1)])),
                (R2, rational(1, vec![num(&[m(1, 2, 4)]), num_sq(&one_minus_x)], vec![den(1, 1, 2, 2)])),
                (
                    R3,
                    rational(
                        1,
                        vec![
                            num(&[m(1, 3, 4)]),
                            num(&[
                                m(1, 0, 0),
                                m(-3, 0, 1),
                                m(-5, 0, 2),
                                m(2, 1, 3),
                                m(5, 0, 3),
                                m(3, 1, 4),
                                m(4, 0, 4),
                                m(-4, 1, 5),
                                m(-3, 1, 6),
                            ]),
                        ],
                        vec![den(1, 0, 2, 1), den(1, 1, 2, 2)],
                    ),
                ),
                (S, Entry::Zero),
            ],
        ),
        (Dtilde, Variant::Involutions) => (
            AuxName::LIoddOdd,
            vec![
                (R0, constant(4)),
                (R, rational(4, vec![num(&[m(1, 1, 1)]), num(&qi)], vec![den(1, 1, 2, 1)])),
                (R1, Entry::Zero),
                (R2, rational(1, vec![num_sq(&qi)], vec![den(1, 1, 2, 2)])),
                (
                    R3,
                    rational(
                        1,
                        vec![
                            num(&[m(1, 3, 5)]),
                            num(&[
                                m(2, 1, 2),
                                m(-2, 1, 3),
                                m(3, 1, 5),
                                m(-2, 1, 6),
                                m(-3, 1, 7),
                                m(-2, 0, 0),
                                m(3, 0, 1),
                                m(-1, 0, 2),
                                m(-5, 0, 3),
                                m(3, 0, 4),
                                m(4, 0, 5),
                            ]),
                        ],
                        vec![den(1, 0, 2, 1), den(1, 1, 2, 2)],
                    ),
                ),
                (S, Entry::Sum(QSum { scale: 2, exp: (0, 4), den: (0, 2), start: 3 })),
            ],
        ),
        _ => return None,
    };
    Some(AffineTable { family, l0, entries })
}

/// Negation of one transcribed coefficient of an affine table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Fault {
    pub family: Family,
    pub slot: Slot,
    pub atom: Atom,
}

impl Fault {
    /// Every single-coefficient fault of one family's table.
    pub fn all_for(family: Family) -> Vec<Fault> {
        let Some(table) = affine_table(family) else { return Vec::new() };
        table
            .entries
            .iter()
            .flat_map(|(slot, e)| e.atoms().into_iter().map(move |atom| Fault { family, slot: *slot, atom }))
            .collect()
    }
}

impl fmt::Display for Fault {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ty = match self.family.ty {
            FamilyType::Btilde => "B",
            FamilyType::Ctilde => "C",
            FamilyType::Dtilde => "D",
            _ => "?",
        };
        let inv = if self.family.variant == Variant::Involutions { "-inv" } else { "" };
        write!(f, "{}{}{}", self.slot.as_str(), ty, inv)?;
        if let Some(table) = affine_table(self.family) {
            if let Some(k) = table.entry(self.slot).atoms().iter().position(|a| *a == self.atom) {
                write!(f, ":{k}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Fault {
    type Err = String;

    /// `<slot><B|C|D>[-inv][:k]`, where `k` indexes the coefficients of the
    /// entry in transcription order (default 0), e.g. `R3B`, `R2D-inv:3`.
    fn from_str(s: &str) -> Result<Self, String> {
        let (head, k) = match s.split_once(':') {
            Some((h, k)) => (h, k.parse::<usize>().map_err(|e| format!("bad coefficient index in '{s}': {e}"))?),
            None => (s, 0),
        };
        let (head, variant) = match head.strip_suffix("-inv") {
            Some(h) => (h, Variant::Involutions),
            None => (head, Variant::All),
        };
        let ty = match head.chars().last() {
            Some('B') => FamilyType::Btilde,
            Some('C') => FamilyType::Ctilde,
            Some('D') => FamilyType::Dtilde,
            _ => return Err(format!("fault '{s}' must name an entry such as R3B, R1C or SD")),
        };
        let slot_name = &head[..head.len() - 1];
        let slot = Slot::ALL
            .into_iter()
            .find(|sl| sl.as_str() == slot_name)
            .ok_or_else(|| format!("unknown table entry '{slot_name}' in fault '{s}'"))?;
        let family = Family::new(ty, variant);
        let table = affine_table(family).expect("affine family");
        let atoms = table.entry(slot).atoms();
        let atom = *atoms
            .get(k)
            .ok_or_else(|| format!("entry {slot_name} of {family} has {} coefficients, index {k} out of range", atoms.len()))?;
        Ok(Fault { family, slot, atom })
    }
}

impl Catalog {
    pub(super) fn affine(&self, family: Family) -> Result<XSeries, SeriesError> {
        let mut table = affine_table(family).expect("affine family");
        if let Some(fault) = self.fault.as_ref().filter(|f| f.family == family) {
            for (slot, e) in table.entries.iter_mut() {
                if *slot == fault.slot {
                    *e = e.flipped(fault.atom);
                }
            }
        }
        let inv = family.variant == Variant::Involutions;
        let multiplicand = |slot: Slot| -> Result<Option<XSeries>, SeriesError> {
            Ok(match (slot, inv) {
                (Slot::R0, _) => Some((*self.aux(table.l0)?).clone()),
                (Slot::R, true) => Some((*self.inner(Inner::KIeShiftOverJI)?).clone()),
                (Slot::R, false) => None,
                (Slot::R1, false) => Some((*self.aux(AuxName::Ba)?).clone()),
                (Slot::R1, true) => Some((*self.aux(AuxName::CBa)?).clone()),
                (Slot::R2, false) => Some((*self.inner(Inner::JShiftRatio)?).clone()),
                (Slot::R2, true) => Some((*self.inner(Inner::JIShiftRatio)?).clone()),
                (Slot::R3 | Slot::S, _) => None,
            })
        };
        let mut total = XSeries::zero(&self.ctx);
        for (slot, entry) in &table.entries {
            let value = match entry {
                Entry::Zero => continue,
                Entry::Rational(r) => self.rational_entry(r)?,
                Entry::Sum(s) => self.q_sum(s)?,
            };
            total = match multiplicand(*slot)? {
                Some(f) => total + value * f,
                None => total + value,
            };
        }
        Ok(total)
    }

    fn rational_entry(&self, r: &RationalEntry) -> Result<XSeries, SeriesError> {
        let ctx = &self.ctx;
        let mut acc = XSeries::constant(QLaurent::int_monomial(r.scalar, 0), ctx);
        for factor in &r.num {
            let poly = factor.monos.iter().fold(XSeries::zero(ctx), |s, mono| s + XSeries::term(mono.c, mono.x, mono.q, ctx));
            for _ in 0..factor.pow {
                acc = &acc * &poly;
            }
        }
        for d in &r.den {
            let g = geometric(d.c, d.x, d.q, ctx)?;
            for _ in 0..d.mult {
                acc = &acc * &g;
            }
        }
        Ok(acc)
    }

    fn q_sum(&self, s: &QSum) -> Result<XSeries, SeriesError> {
        let ctx = &self.ctx;
        let coeffs = (0..=ctx.x_order)
            .map(|n| {
                if n < s.start {
                    return Ok(QLaurent::zero());
                }
                let n = n as i64;
                let g = geom_factor(s.den.0 + s.den.1 * n, ctx)?;
                Ok(g.mul(&QLaurent::int_monomial(s.scale, s.exp.0 + s.exp.1 * n), ctx))
            })
            .collect::<Result<Vec<_>, SeriesError>>()?;
        Ok(XSeries::from_coeffs(coeffs, ctx))
    }
}
