//! Fault injection: a corrupted affine table must be caught by the oracle.

use serde::Serialize;

use super::crosscheck::{run_oracle_check, OracleTarget};
use super::{CheckReport, Status};
use crate::catalog::{Family, FamilyType, Fault};
use crate::exec::map_slice;
use crate::oracle::DESK_MAX_GENERATORS;

/// Result of one injected fault.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FaultOutcome {
    pub fault: String,
    /// First failing cross-check, if any.
    pub caught_by: Option<CheckReport>,
    /// Cross-checks run before the fault was caught (or in total).
    pub checks_run: usize,
}

impl FaultOutcome {
    pub fn caught(&self) -> bool {
        self.caught_by.is_some()
    }
}

/// The affine families whose tables can be corrupted.
pub fn faultable_families() -> Vec<Family> {
    [FamilyType::Btilde, FamilyType::Ctilde, FamilyType::Dtilde]
        .into_iter()
        .flat_map(|ty| [Family::all(ty), Family::inv(ty)])
        .collect()
}

/// Lengths tried in turn: the default bound, then the desk limit.
const LENGTHS: [usize; 2] = [9, 12];

/// Runs the oracle cross-checks of the faulted family, smallest first,
/// until one fails.
pub fn run_fault(fault: Fault) -> FaultOutcome {
    let target = OracleTarget::Family(fault.family);
    let mut checks_run = 0;
    for lmax in LENGTHS {
        let mut n = fault.family.first_degree();
        while fault.family.generators(n) <= DESK_MAX_GENERATORS {
            let r = run_oracle_check(target, n, lmax, Some(fault));
            checks_run += 1;
            if r.status == Status::Fail {
                return FaultOutcome { fault: fault.to_string(), caught_by: Some(r), checks_run };
            }
            n += 1;
        }
    }
    FaultOutcome { fault: fault.to_string(), caught_by: None, checks_run }
}

/// Every single-coefficient fault of the given families.
pub fn run_fault_sweep(families: &[Family]) -> Vec<FaultOutcome> {
    let faults: Vec<Fault> = families.iter().flat_map(|&f| Fault::all_for(f)).collect();
    map_slice(&faults, |&f| run_fault(f))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_fault_is_caught() {
        let out = run_fault("R3B".parse().unwrap());
        assert!(out.caught(), "{out:?}");
    }

    #[test]
    fn every_fault_is_caught() {
        let outcomes = run_fault_sweep(&faultable_families());
        assert!(!outcomes.is_empty());
        let missed: Vec<_> = outcomes.iter().filter(|o| !o.caught()).map(|o| o.fault.as_str()).collect();
        assert!(missed.is_empty(), "uncaught: {missed:?}");
    }
}
