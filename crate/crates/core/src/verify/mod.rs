//! Executable checks: q-series identities, agreement between independent
//! expressions, closed forms against brute-force heap counts, values at
//! `q = 1`, ultimate periodicity and table reproduction.

mod crosscheck;
mod faults;
mod identities;
mod periodicity;
mod special_values;
mod tables;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};
use std::time::Instant;

use serde::{Serialize, Serializer};

use crate::catalog::{Catalog, Fault};
use crate::exec::map_slice;
use crate::series::{Comparison, Discrepancy, TruncationContext};

pub use crosscheck::{oracle_targets, run_oracle_check, OracleTarget};
pub use faults::{faultable_families, run_fault, run_fault_sweep, FaultOutcome};
pub use identities::{identity_title, run_identity, IDENTITY_COUNT};
pub use periodicity::{default_targets, default_window, period_bound, run_periodicity, PeriodBound, PeriodicTarget};
pub use tables::{
    affine_rows, bracket_list, finite_rows, group_label, reproduce_table, AffineRow, Factor, FiniteRow, RowCheck, TableId,
    TableReproduction, AFFINE_INV_TABLE, AFFINE_TABLE, FINITE_INV_TABLE, FINITE_TABLE,
};
pub use special_values::{run_special_value, SpecialValue};

/// Identifies one check. Ordering is the report order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CheckId {
    /// Identity number `1..=34`.
    Identity(u8),
    /// Closed form against heap counts at x-degree `n`.
    Oracle(OracleTarget, usize),
    /// Ultimate periodicity of the coefficient of `x^n`.
    Periodicity(PeriodicTarget, usize),
    SpecialValue(SpecialValue),
    Table(TableId),
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckId::Identity(i) => write!(f, "I{i}"),
            CheckId::Oracle(t, n) => write!(f, "X:{t}:{n}"),
            CheckId::Periodicity(t, n) => write!(f, "P:{t}:{n}"),
            CheckId::SpecialValue(v) => write!(f, "Q1:{v}"),
            CheckId::Table(t) => write!(f, "T:{t}"),
        }
    }
}

impl FromStr for CheckId {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let bad = || format!("unknown check '{s}' (expected I<k>, X:<target>:<n>, P:<target>:<n>, Q1:<name>:<k> or T:<table>)");
        let parts: Vec<&str> = s.split(':').collect();
        let degree = |p: &str| p.parse::<usize>().map_err(|_| bad());
        match parts.as_slice() {
            [i] if i.starts_with(['I', 'i']) => {
                let k: u8 = i[1..].parse().map_err(|_| bad())?;
                if (1..=IDENTITY_COUNT).contains(&k) {
                    Ok(CheckId::Identity(k))
                } else {
                    Err(format!("identity number must be in 1..={IDENTITY_COUNT}"))
                }
            }
            ["X", t, n] => Ok(CheckId::Oracle(t.parse()?, degree(n)?)),
            ["P", t, n] => Ok(CheckId::Periodicity(t.parse()?, degree(n)?)),
            ["Q1", rest @ ..] => Ok(CheckId::SpecialValue(rest.join(":").parse()?)),
            ["T", t] => Ok(CheckId::Table(t.parse()?)),
            _ => Err(bad()),
        }
    }
}

impl Serialize for CheckId {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Not run: the search exceeded its resource bound.
    Skip,
    /// The truncation window was too small to decide.
    Inconclusive,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Skip => "skip",
            Status::Inconclusive => "inconclusive",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub id: CheckId,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub discrepancy: Option<Discrepancy>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    pub runtime_millis: u64,
}

impl CheckReport {
    pub fn pass(id: CheckId) -> Self {
        Self { id, status: Status::Pass, discrepancy: None, detail: None, runtime_millis: 0 }
    }

    pub fn fail(id: CheckId, discrepancy: Discrepancy) -> Self {
        Self { id, status: Status::Fail, discrepancy: Some(discrepancy), detail: None, runtime_millis: 0 }
    }

    pub fn with_status(id: CheckId, status: Status, detail: impl Into<String>) -> Self {
        Self { id, status, discrepancy: None, detail: Some(detail.into()), runtime_millis: 0 }
    }

    /// Report for a series comparison.
    pub fn from_comparison(id: CheckId, cmp: Comparison) -> Self {
        match cmp {
            Comparison::Equal => Self::pass(id),
            Comparison::Differ(d) => Self::fail(id, d),
            Comparison::Insufficient { x_degree, known_below } => {
                let known = match known_below {
                    Some(p) => format!("known below q^{p}"),
                    None => "not known".to_string(),
                };
                Self::with_status(id, Status::Inconclusive, format!("coefficient of x^{x_degree} {known}"))
            }
        }
    }

    pub fn detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }

    /// Same report with the timing cleared, for byte-wise comparison.
    pub fn untimed(&self) -> Self {
        Self { runtime_millis: 0, ..self.clone() }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Runs `f` and records its wall-clock time in the report.
pub(crate) fn timed(f: impl FnOnce() -> CheckReport) -> CheckReport {
    let start = Instant::now();
    let mut report = f();
    report.runtime_millis = start.elapsed().as_millis() as u64;
    report
}

/// One catalog per context, shared by every check of the process.
pub(crate) fn shared_catalog(ctx: TruncationContext) -> Arc<Catalog> {
    static CACHE: OnceLock<Mutex<HashMap<TruncationContext, Arc<Catalog>>>> = OnceLock::new();
    let mut cache = CACHE.get_or_init(Default::default).lock().expect("catalog registry poisoned");
    Arc::clone(cache.entry(ctx).or_insert_with(|| Arc::new(Catalog::new(ctx))))
}

/// Groups of checks selectable together.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Identities,
    /// The identities comparing two independent expressions of one series.
    Agreements,
    Oracle,
    SpecialValues,
    Periodicity,
    Tables,
    All,
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "identities" => Suite::Identities,
            "agreements" => Suite::Agreements,
            "oracle" => Suite::Oracle,
            "q1" | "special-values" => Suite::SpecialValues,
            "periodicity" => Suite::Periodicity,
            "tables" => Suite::Tables,
            "all" => Suite::All,
            _ => {
                return Err(format!(
                    "unknown suite '{s}', expected identities, agreements, oracle, q1, periodicity, tables or all"
                ))
            }
        })
    }
}

/// Bounds for a verification run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Bounds {
    /// x-order of the identity checks.
    pub identity_x_order: usize,
    pub identity_q_max: i64,
    pub identity_q_min: i64,
    /// Largest graph handed to the heap enumerator.
    pub oracle_max_generators: usize,
    pub oracle_lmax: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Self { identity_x_order: 8, identity_q_max: 40, identity_q_min: -45, oracle_max_generators: 6, oracle_lmax: 9 }
    }
}

/// Bounds plus an optional corrupted affine table for the oracle checks.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Config {
    pub bounds: Bounds,
    pub fault: Option<Fault>,
}

/// Checks of a suite, in report order. `All` covers identities, oracle,
/// value and periodicity checks; table reproduction is run on its own.
pub fn checks_in(suite: Suite, bounds: &Bounds) -> Vec<CheckId> {
    let mut ids: Vec<CheckId> = match suite {
        Suite::Identities => (1..=IDENTITY_COUNT).map(CheckId::Identity).collect(),
        Suite::Agreements => (23..=27).map(CheckId::Identity).collect(),
        Suite::Oracle => oracle_targets(bounds.oracle_max_generators)
            .into_iter()
            .map(|(t, n)| CheckId::Oracle(t, n))
            .collect(),
        Suite::SpecialValues => SpecialValue::all().into_iter().map(CheckId::SpecialValue).collect(),
        Suite::Periodicity => default_targets().into_iter().map(|(t, n)| CheckId::Periodicity(t, n)).collect(),
        Suite::Tables => TableId::ALL.iter().copied().map(CheckId::Table).collect(),
        Suite::All => [Suite::Identities, Suite::Oracle, Suite::SpecialValues, Suite::Periodicity]
            .into_iter()
            .flat_map(|s| checks_in(s, bounds))
            .collect(),
    };
    ids.sort();
    ids
}

pub fn run_check(id: CheckId, config: &Config) -> CheckReport {
    let bounds = &config.bounds;
    timed(|| match id {
        CheckId::Identity(k) => run_identity(k, bounds),
        CheckId::Oracle(t, n) => run_oracle_check(t, n, bounds.oracle_lmax, config.fault),
        CheckId::Periodicity(t, n) => run_periodicity(t, n, default_window(t, n)),
        CheckId::SpecialValue(v) => run_special_value(v),
        CheckId::Table(t) => reproduce_table(t).report(),
    })
}

/// Runs the checks, in parallel when enabled, and returns the reports
/// sorted by id.
pub fn run_checks(ids: &[CheckId], config: &Config) -> Vec<CheckReport> {
    let mut reports = map_slice(ids, |&id| run_check(id, config));
    reports.sort_by_key(|r| r.id);
    reports
}

/// Counts of each status over a set of reports.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skip: usize,
    pub inconclusive: usize,
    pub runtime_millis: u64,
}

impl Summary {
    pub fn of(reports: &[CheckReport]) -> Self {
        let mut s = Summary::default();
        for r in reports {
            match r.status {
                Status::Pass => s.pass += 1,
                Status::Fail => s.fail += 1,
                Status::Skip => s.skip += 1,
                Status::Inconclusive => s.inconclusive += 1,
            }
            s.runtime_millis += r.runtime_millis;
        }
        s
    }

    /// Process exit status: 0 all passed, 1 any failure, 4 undecided, 3 skipped.
    pub fn exit_code(&self) -> i32 {
        if self.fail > 0 {
            1
        } else if self.inconclusive > 0 {
            4
        } else if self.skip > 0 {
            3
        } else {
            0
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{AuxName, Family, FamilyType};

    #[test]
    fn check_names_parse_back() {
        let ids = [
            CheckId::Identity(16),
            CheckId::Oracle(OracleTarget::Family(Family::inv(FamilyType::Ctilde)), 4),
            CheckId::Oracle(OracleTarget::Aux(AuxName::LIodd), 3),
            CheckId::Periodicity(PeriodicTarget::Affine(Family::all(FamilyType::Btilde)), 3),
            CheckId::SpecialValue(SpecialValue::RowSum(Family::inv(FamilyType::D), 4)),
            CheckId::Table(TableId::AffineInv),
        ];
        for id in ids {
            assert_eq!(id.to_string().parse::<CheckId>().unwrap(), id);
        }
        assert_eq!(CheckId::Identity(5).to_string(), "I5");
        assert!("I35".parse::<CheckId>().is_err());
        assert!("X:A".parse::<CheckId>().is_err());
    }

    #[test]
    fn suites_select_their_checks() {
        let b = Bounds::default();
        assert_eq!(checks_in(Suite::Identities, &b).len(), 34);
        assert_eq!(checks_in(Suite::Agreements, &b), (23..=27).map(CheckId::Identity).collect::<Vec<_>>());
        let all = checks_in(Suite::All, &b);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert!(!all.iter().any(|id| matches!(id, CheckId::Table(_))));
    }

    #[test]
    fn exit_codes() {
        let id = CheckId::Identity(1);
        let reports = |s: &[Status]| s.iter().map(|&st| CheckReport { status: st, ..CheckReport::pass(id) }).collect::<Vec<_>>();
        assert_eq!(Summary::of(&reports(&[Status::Pass])).exit_code(), 0);
        assert_eq!(Summary::of(&reports(&[Status::Pass, Status::Skip])).exit_code(), 3);
        assert_eq!(Summary::of(&reports(&[Status::Skip, Status::Inconclusive])).exit_code(), 4);
        assert_eq!(Summary::of(&reports(&[Status::Inconclusive, Status::Fail])).exit_code(), 1);
        assert_eq!(Summary::of(&[]), Summary::default());
    }

    #[test]
    fn injected_fault_fails_an_oracle_check() {
        let config = Config { fault: Some("R3B".parse().unwrap()), ..Config::default() };
        let ids: Vec<_> = checks_in(Suite::Oracle, &config.bounds)
            .into_iter()
            .filter(|id| matches!(id, CheckId::Oracle(OracleTarget::Family(f), _) if f.ty == FamilyType::Btilde))
            .collect();
        let summary = Summary::of(&run_checks(&ids, &config));
        assert!(summary.fail > 0);
    }
}
