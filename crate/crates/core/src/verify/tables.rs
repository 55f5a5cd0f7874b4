//! The printed tables of length generating functions, and their
//! reproduction from the closed forms.
//!
//! Finite-type entries are polynomials and are compared coefficient by
//! coefficient. Affine entries are printed as rational functions; they are
//! checked by multiplying the expanded coefficient by the printed
//! denominator and comparing with the printed numerator.

use std::fmt;
use std::str::FromStr;

use num_traits::ToPrimitive;
use serde::Serialize;

use super::{shared_catalog, CheckId, CheckReport, Status};
use crate::catalog::{Family, FamilyType, Variant};
use crate::series::{Discrepancy, QLaurent, TruncationContext};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TableId {
    Finite,
    FiniteInv,
    Affine,
    AffineInv,
}

impl TableId {
    pub const ALL: [TableId; 4] = [TableId::Finite, TableId::FiniteInv, TableId::Affine, TableId::AffineInv];

    pub fn as_str(self) -> &'static str {
        match self {
            TableId::Finite => "finite",
            TableId::FiniteInv => "finite-inv",
            TableId::Affine => "affine",
            TableId::AffineInv => "affine-inv",
        }
    }

    pub fn title(self) -> &'static str {
        match self {
            TableId::Finite => "fc elements in finite Coxeter groups",
            TableId::FiniteInv => "fc involutions in finite Coxeter groups",
            TableId::Affine => "fc elements in affine Coxeter groups",
            TableId::AffineInv => "fc involutions in affine Coxeter groups",
        }
    }
}

impl fmt::Display for TableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TableId {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        TableId::ALL
            .into_iter()
            .find(|t| t.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown table '{s}', expected finite, finite-inv, affine or affine-inv"))
    }
}

/// A printed polynomial entry: the coefficient of `x^n` of one family.
#[derive(Clone, Copy, Debug)]
pub struct FiniteRow {
    pub family: Family,
    pub n: usize,
    pub coeffs: &'static [i64],
}

/// A polynomial factor raised to a (possibly negative) power.
#[derive(Clone, Copy, Debug)]
pub struct Factor {
    pub poly: &'static [i64],
    pub power: i32,
}

/// A printed rational entry `factors * list / denominator`.
#[derive(Clone, Copy, Debug)]
pub struct AffineRow {
    pub family: Family,
    pub n: usize,
    /// Extra factors in front of the bracket list.
    pub factors: &'static [Factor],
    pub list: &'static [i64],
    pub denominator: &'static [Factor],
}

const fn f(poly: &'static [i64], power: i32) -> Factor {
    Factor { poly, power }
}

const ONE_PLUS_Q: &[i64] = &[1, 1];

const fn one_minus(k: usize) -> &'static [i64] {
    match k {
        1 => &[1, -1],
        2 => &[1, 0, -1],
        3 => &[1, 0, 0, -1],
        4 => &[1, 0, 0, 0, -1],
        5 => &[1, 0, 0, 0, 0, -1],
        6 => &[1, 0, 0, 0, 0, 0, -1],
        7 => &[1, 0, 0, 0, 0, 0, 0, -1],
        8 => &[1, 0, 0, 0, 0, 0, 0, 0, -1],
        _ => panic!("no such factor"),
    }
}

const fn fin(ty: FamilyType, n: usize, coeffs: &'static [i64]) -> FiniteRow {
    FiniteRow { family: Family::all(ty), n, coeffs }
}

const fn fin_inv(ty: FamilyType, n: usize, coeffs: &'static [i64]) -> FiniteRow {
    FiniteRow { family: Family::inv(ty), n, coeffs }
}

pub const FINITE_TABLE: &[FiniteRow] = &[
    fin(FamilyType::A, 2, &[1, 2, 2]),
    fin(FamilyType::A, 3, &[1, 3, 5, 4, 1]),
    fin(FamilyType::A, 4, &[1, 4, 9, 12, 10, 4, 2]),
    fin(FamilyType::B, 2, &[1, 2, 2, 2]),
    fin(FamilyType::B, 3, &[1, 3, 5, 6, 5, 3, 1]),
    fin(FamilyType::B, 4, &[1, 4, 9, 14, 16, 15, 11, 7, 3, 2, 1]),
    fin(FamilyType::D, 2, &[1, 3, 5, 4, 1]),
    fin(FamilyType::D, 3, &[1, 4, 9, 13, 11, 7, 3]),
    fin(FamilyType::D, 4, &[1, 5, 14, 26, 34, 32, 25, 17, 7, 4, 2]),
];

pub const FINITE_INV_TABLE: &[FiniteRow] = &[
    fin_inv(FamilyType::A, 2, &[1, 2]),
    fin_inv(FamilyType::A, 3, &[1, 3, 1, 0, 1]),
    fin_inv(FamilyType::A, 4, &[1, 4, 3, 0, 2]),
    fin_inv(FamilyType::B, 2, &[1, 2, 0, 2]),
    fin_inv(FamilyType::B, 3, &[1, 3, 1, 2, 1, 1, 1]),
    fin_inv(FamilyType::B, 4, &[1, 4, 3, 2, 4, 1, 3, 1, 1, 0, 1]),
    fin_inv(FamilyType::D, 2, &[1, 3, 1, 0, 1]),
    fin_inv(FamilyType::D, 3, &[1, 4, 3, 1, 3, 1, 3]),
    fin_inv(FamilyType::D, 4, &[1, 5, 6, 2, 4, 2, 3, 1, 1]),
];

pub const AFFINE_TABLE: &[AffineRow] = &[
    AffineRow { family: Family::all(FamilyType::Atilde), n: 3, factors: &[], list: &[1, 2, 3], denominator: &[f(one_minus(1), 1)] },
    AffineRow {
        family: Family::all(FamilyType::Atilde),
        n: 4,
        factors: &[],
        list: &[1, 4, 9, 12, 8],
        denominator: &[f(one_minus(2), 1)],
    },
    AffineRow {
        family: Family::all(FamilyType::Btilde),
        n: 3,
        factors: &[f(ONE_PLUS_Q, 2)],
        list: &[1, 3, 7, 11, 14, 15, 12, 7, 2, 0, -3, -1, -1],
        denominator: &[f(&[1, 1, 1], 1), f(one_minus(5), 1)],
    },
    AffineRow {
        family: Family::all(FamilyType::Btilde),
        n: 4,
        factors: &[f(ONE_PLUS_Q, 1)],
        list: &[1, 4, 10, 18, 24, 29, 29, 27, 19, 12, 3, -3, -9, -8, -7, -3, -1, -1],
        denominator: &[f(one_minus(7), 1)],
    },
    AffineRow {
        family: Family::all(FamilyType::Ctilde),
        n: 3,
        factors: &[],
        list: &[1, 3, 5, 7, 6, 4, 2],
        denominator: &[f(one_minus(3), 1)],
    },
    AffineRow {
        family: Family::all(FamilyType::Ctilde),
        n: 4,
        factors: &[],
        list: &[1, 3, 5, 7, 6, 4, 2, -2, -2, -2],
        denominator: &[f(one_minus(1), 1)],
    },
    AffineRow {
        family: Family::all(FamilyType::Dtilde),
        n: 3,
        factors: &[f(ONE_PLUS_Q, 1)],
        list: &[1, 4, 10, 17, 17, 13, 4, -9, -5, -4],
        denominator: &[f(one_minus(3), 1)],
    },
    AffineRow {
        family: Family::all(FamilyType::Dtilde),
        n: 4,
        factors: &[],
        list: &[1, 6, 20, 46, 78, 100, 100, 78, 35, -14, -36, -44, -36, -16, -8, -4],
        denominator: &[f(one_minus(4), 1)],
    },
];

pub const AFFINE_INV_TABLE: &[AffineRow] = &[
    AffineRow { family: Family::inv(FamilyType::Atilde), n: 3, factors: &[], list: &[1, 3], denominator: &[] },
    AffineRow {
        family: Family::inv(FamilyType::Atilde),
        n: 4,
        factors: &[],
        list: &[1, 4, 2, 0, 3, -4],
        denominator: &[f(one_minus(4), 1)],
    },
    AffineRow {
        family: Family::inv(FamilyType::Btilde),
        n: 3,
        factors: &[],
        list: &[1, 5, 8, 11, 14, 16, 16, 11, 8, 3, 1, -5, -3, -4, -2, -2, -1, -1],
        denominator: &[f(one_minus(5), 1), f(one_minus(6), 1), f(one_minus(1), -1)],
    },
    AffineRow {
        family: Family::inv(FamilyType::Btilde),
        n: 4,
        factors: &[],
        list: &[1, 6, 11, 10, 12, 13, 13, 12, 6, -1, -2, -5, -6, -7, -6, -5, -4, -2, -1, -1],
        denominator: &[f(ONE_PLUS_Q, 1), f(one_minus(7), 1)],
    },
    AffineRow {
        family: Family::inv(FamilyType::Ctilde),
        n: 3,
        factors: &[],
        list: &[1, 4, 4, 4, 1, 2, 2],
        denominator: &[f(ONE_PLUS_Q, 1), f(one_minus(3), 1)],
    },
    AffineRow {
        family: Family::inv(FamilyType::Ctilde),
        n: 4,
        factors: &[],
        list: &[1, 4, 2, 0, 3, -2, 0, 4, 0, -4, -2],
        denominator: &[f(one_minus(2), 1)],
    },
    AffineRow {
        family: Family::inv(FamilyType::Dtilde),
        n: 3,
        factors: &[],
        list: &[1, 5, 6, 4, 7, 4, 12, -1, 0, -4, -1, -4, -1, -4],
        denominator: &[f(one_minus(6), 1)],
    },
    AffineRow {
        family: Family::inv(FamilyType::Dtilde),
        n: 4,
        factors: &[],
        list: &[1, 6, 10, 6, 7, 6, 8, 4, 5, -2, -8, -6, -5, -6, -6, -4, -2, -4],
        denominator: &[f(one_minus(8), 1)],
    },
];

pub fn finite_rows(table: TableId) -> &'static [FiniteRow] {
    match table {
        TableId::Finite => FINITE_TABLE,
        TableId::FiniteInv => FINITE_INV_TABLE,
        _ => &[],
    }
}

pub fn affine_rows(table: TableId) -> &'static [AffineRow] {
    match table {
        TableId::Affine => AFFINE_TABLE,
        TableId::AffineInv => AFFINE_INV_TABLE,
        _ => &[],
    }
}

/// `[a0, a1, ...]` with negative entries as `-a`.
pub fn bracket_list(coeffs: &[i64]) -> String {
    let items: Vec<String> = coeffs.iter().map(|c| c.to_string()).collect();
    format!("[{}]", items.join(", "))
}

/// A short polynomial in `q`, e.g. `1+q+q^2` or `1-q^5`.
fn poly_text(poly: &[i64]) -> String {
    let mut out = String::new();
    for (e, &c) in poly.iter().enumerate().filter(|(_, c)| **c != 0) {
        let sign = if c < 0 { "-" } else if out.is_empty() { "" } else { "+" };
        let mag = c.unsigned_abs();
        let var = match e {
            0 => String::new(),
            1 => "q".into(),
            _ => format!("q^{e}"),
        };
        let body = match (mag, var.is_empty()) {
            (_, true) => mag.to_string(),
            (1, false) => var,
            (_, false) => format!("{mag}{var}"),
        };
        out.push_str(sign);
        out.push_str(&body);
    }
    out
}

fn factors_text(factors: &[Factor]) -> String {
    factors
        .iter()
        .map(|fa| match fa.power {
            1 => format!("({})", poly_text(fa.poly)),
            p => format!("({})^{p}", poly_text(fa.poly)),
        })
        .collect()
}

impl FiniteRow {
    pub fn printed(&self) -> String {
        bracket_list(self.coeffs)
    }
}

impl AffineRow {
    /// The entry as printed, e.g. `(1+q)[1, 4, ...]/(1-q^3)`.
    pub fn printed(&self) -> String {
        let num = format!("{}{}", factors_text(self.factors), bracket_list(self.list));
        if self.denominator.is_empty() {
            num
        } else {
            format!("{num}/{}", factors_text(self.denominator))
        }
    }

    /// Both sides of `coefficient * left = right` as exact polynomials:
    /// denominator factors with positive powers go left, the numerator and
    /// the inverted factors go right.
    fn cleared(&self) -> (QLaurent, QLaurent) {
        let ctx = TruncationContext { x_order: 0, q_max: 1000, q_min: 0 };
        let poly = |p: &[i64]| QLaurent::from_ints(0, p);
        let mut left = QLaurent::one();
        let mut right = poly(self.list);
        for fa in self.factors {
            for _ in 0..fa.power {
                right = right.mul(&poly(fa.poly), &ctx);
            }
        }
        for fa in self.denominator {
            for _ in 0..fa.power.unsigned_abs() {
                if fa.power > 0 {
                    left = left.mul(&poly(fa.poly), &ctx);
                } else {
                    right = right.mul(&poly(fa.poly), &ctx);
                }
            }
        }
        (left, right)
    }
}

/// Group counted by the coefficient of `x^n`, e.g. `D_5` or `Btilde_3`.
pub fn group_label(family: Family, n: usize) -> String {
    let k = family.group_index(n).unwrap_or(0);
    match family.variant {
        Variant::All => format!("{}_{k}", family.ty),
        Variant::Involutions => format!("{}_{k} (involutions)", family.ty),
    }
}

fn as_text<S: serde::Serializer>(f: &Family, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(f)
}

/// One reproduced entry.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RowCheck {
    #[serde(serialize_with = "as_text")]
    pub family: Family,
    pub n: usize,
    pub group: String,
    pub printed: String,
    /// The expanded coefficient (finite types) or the coefficient times the
    /// printed denominator (affine types), up to the compared degree.
    pub computed: Vec<i64>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub discrepancy: Option<Discrepancy>,
}

/// Every row of one table with its verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableReproduction {
    pub table: TableId,
    pub rows: Vec<RowCheck>,
}

impl TableReproduction {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.status == Status::Pass)
    }

    pub fn report(&self) -> CheckReport {
        let id = CheckId::Table(self.table);
        let detail = format!("{} entries", self.rows.len());
        match self.rows.iter().find(|r| r.status != Status::Pass) {
            None => CheckReport::pass(id).detail(detail),
            Some(r) => match &r.discrepancy {
                Some(d) => CheckReport::fail(id, d.clone()).detail(format!("{} {}", r.group, r.printed)),
                None => CheckReport::with_status(id, r.status, format!("{} not known far enough", r.group)),
            },
        }
    }
}

/// Exponents past the printed degree also compared, to catch a tail the
/// printed entry does not have.
const TAIL: i64 = 30;

/// Compares `got` against the exact polynomial `want` on `lo ..= top`.
fn compare_poly(n: usize, got: &QLaurent, want: &QLaurent, top: i64) -> (Status, Option<Discrepancy>, Vec<i64>) {
    let lo = got.valuation().unwrap_or(0).min(0);
    let computed = (0..=top).map(|e| got.coeff(e).to_integer().to_i64().unwrap_or_default()).collect();
    for e in lo..=top {
        let (g, w) = (got.coeff(e), want.coeff(e));
        if !got.precision().covers(e) {
            return (Status::Inconclusive, None, computed);
        }
        if g != w {
            let d = Discrepancy { x_degree: n, q_exponent: e, expected: w.to_string(), got: g.to_string() };
            return (Status::Fail, Some(d), computed);
        }
    }
    (Status::Pass, None, computed)
}

/// Expands every entry of `table` from the closed forms and compares.
pub fn reproduce_table(table: TableId) -> TableReproduction {
    let mut rows = Vec::new();
    let window = |degree: usize| TruncationContext::for_report(4, degree as i64 + TAIL);
    for r in finite_rows(table) {
        let want = QLaurent::from_ints(0, r.coeffs);
        let top = r.coeffs.len() as i64 - 1 + TAIL;
        let ctx = window(r.coeffs.len());
        let got = shared_catalog(ctx).gf(r.family).map(|s| s.coeff(r.n).clone());
        rows.push(row(r.family, r.n, r.printed(), got, &want, top, |c| c));
    }
    for r in affine_rows(table) {
        let (left, right) = r.cleared();
        let top = right.degree().unwrap_or(0).max(left.degree().unwrap_or(0)) + TAIL;
        let ctx = window(top as usize);
        let got = shared_catalog(ctx).gf(r.family).map(|s| s.coeff(r.n).clone());
        rows.push(row(r.family, r.n, r.printed(), got, &right, top, |c| c.mul(&left, &ctx)));
    }
    TableReproduction { table, rows }
}

fn row(
    family: Family,
    n: usize,
    printed: String,
    got: Result<QLaurent, crate::series::SeriesError>,
    want: &QLaurent,
    top: i64,
    transform: impl FnOnce(QLaurent) -> QLaurent,
) -> RowCheck {
    let group = group_label(family, n);
    match got {
        Ok(c) => {
            let (status, discrepancy, computed) = compare_poly(n, &transform(c), want, top);
            RowCheck { family, n, group, printed, computed, status, discrepancy }
        }
        Err(e) => RowCheck {
            family,
            n,
            group,
            printed,
            computed: Vec::new(),
            status: Status::Fail,
            discrepancy: Some(Discrepancy { x_degree: n, q_exponent: 0, expected: "a series".into(), got: e.to_string() }),
        },
    }
}
