//! Brute-force enumeration of heaps: fully commutative elements and
//! involutions of any Coxeter graph, and alternating heaps over paths and
//! cycles, counted by length.

mod enumerate;
mod graph;
mod trace;

use std::fmt;

use serde::Serialize;
use thiserror::Error;

pub use enumerate::{Column, Shape};
pub use graph::{graph, CoxeterGraph};
pub use trace::{canonical, class_words, is_alternating, is_canonical, is_fc_class, is_self_dual, Letter, TraceClass, Word};

use enumerate::{count, Filter, Kind};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("invalid constraint: {0}")]
    InvalidConstraint(String),
    #[error("search too large: {0}")]
    TooLarge(String),
}

/// Number of heaps of each length `0..=lmax`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct CountTable {
    counts: Vec<u64>,
}

impl CountTable {
    pub fn from_counts(counts: Vec<u64>) -> Self {
        Self { counts }
    }

    pub fn lmax(&self) -> usize {
        self.counts.len() - 1
    }

    /// Count at length `l`; zero beyond `lmax`.
    pub fn get(&self, l: usize) -> u64 {
        self.counts.get(l).copied().unwrap_or(0)
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.counts
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }
}

impl fmt::Display for CountTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, c) in self.counts.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}

/// Bounds under which a search finishes in well under a second.
pub const DESK_MAX_GENERATORS: usize = 7;
pub const DESK_MAX_LENGTH: usize = 12;

pub fn within_desk_scale(generators: usize, lmax: usize) -> bool {
    generators <= DESK_MAX_GENERATORS && lmax <= DESK_MAX_LENGTH
}

/// Fully commutative elements of each length.
pub fn fc_counts(g: &CoxeterGraph, lmax: usize) -> Result<CountTable, OracleError> {
    count(g, Kind::FullyCommutative, Filter::default(), lmax)
}

/// Fully commutative involutions of each length: the self-dual classes.
pub fn fc_involution_counts(g: &CoxeterGraph, lmax: usize) -> Result<CountTable, OracleError> {
    count(g, Kind::FullyCommutative, Filter { self_dual: true, ..Filter::default() }, lmax)
}

/// Alternating heaps over a path or a cycle.
///
/// On a path, `first` constrains the number of points labelled `0` and
/// `last` those labelled `n - 1`. Cycles admit no column constraint.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AlternatingQuery {
    pub shape: Shape,
    pub first: Column,
    pub last: Column,
    pub self_dual: bool,
    /// Keep only heaps using every generator.
    pub full_support: bool,
}

impl AlternatingQuery {
    pub fn new(shape: Shape) -> Self {
        Self { shape, first: Column::Any, last: Column::Any, self_dual: false, full_support: false }
    }

    pub fn columns(mut self, first: Column, last: Column) -> Self {
        self.first = first;
        self.last = last;
        self
    }

    pub fn self_dual(mut self, yes: bool) -> Self {
        self.self_dual = yes;
        self
    }

    pub fn full_support(mut self, yes: bool) -> Self {
        self.full_support = yes;
        self
    }

    pub fn count(&self, lmax: usize) -> Result<CountTable, OracleError> {
        if matches!(self.shape, Shape::Cycle(_)) && (self.first != Column::Any || self.last != Column::Any) {
            return Err(OracleError::InvalidConstraint("column constraints apply to paths only".into()));
        }
        let g = self.shape.graph()?;
        let filter = Filter { first: self.first, last: self.last, self_dual: self.self_dual, full_support: self.full_support };
        count(&g, Kind::Alternating, filter, lmax)
    }
}

/// Alternating heaps with the given column constraints and self-duality.
pub fn alternating_counts(
    shape: Shape,
    lmax: usize,
    first: Column,
    last: Column,
    self_dual: bool,
) -> Result<CountTable, OracleError> {
    AlternatingQuery::new(shape).columns(first, last).self_dual(self_dual).count(lmax)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::FamilyType;

    fn fc(ty: FamilyType, k: usize, lmax: usize) -> Vec<u64> {
        fc_counts(&graph(ty, k).unwrap(), lmax).unwrap().as_slice().to_vec()
    }

    fn inv(ty: FamilyType, k: usize, lmax: usize) -> Vec<u64> {
        fc_involution_counts(&graph(ty, k).unwrap(), lmax).unwrap().as_slice().to_vec()
    }

    #[test]
    fn finite_type_rows() {
        assert_eq!(fc(FamilyType::A, 3, 4), [1, 3, 5, 4, 1]);
        assert_eq!(fc(FamilyType::A, 4, 6), [1, 4, 9, 12, 10, 4, 2]);
        assert_eq!(fc(FamilyType::D, 4, 6), [1, 4, 9, 13, 11, 7, 3]);
        // beyond the longest fc element everything vanishes
        assert_eq!(fc(FamilyType::A, 3, 6), [1, 3, 5, 4, 1, 0, 0]);
    }

    #[test]
    fn involution_rows() {
        assert_eq!(inv(FamilyType::A, 3, 4), [1, 3, 1, 0, 1]);
        assert_eq!(inv(FamilyType::B, 3, 6), [1, 3, 1, 2, 1, 1, 1]);
    }

    #[test]
    fn every_generator_is_fc() {
        for (ty, k) in [(FamilyType::A, 5), (FamilyType::Btilde, 4), (FamilyType::Dtilde, 5)] {
            let g = graph(ty, k).unwrap();
            assert_eq!(fc_counts(&g, 1).unwrap().get(1), g.size() as u64);
        }
    }

    #[test]
    fn two_point_path_alternating() {
        let t = alternating_counts(Shape::Path(2), 5, Column::Any, Column::Any, false).unwrap();
        assert_eq!(t.as_slice(), &[1, 2, 2, 2, 2, 2]);
    }

    #[test]
    fn alternating_type_a_heaps_are_the_fc_elements() {
        for n in 1..=5 {
            let alt = alternating_counts(Shape::Path(n), 8, Column::AtMostOne, Column::AtMostOne, false).unwrap();
            assert_eq!(alt, fc_counts(&graph(FamilyType::A, n).unwrap(), 8).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn odd_columns_exclude_the_empty_heap() {
        let t = alternating_counts(Shape::Path(3), 4, Column::Odd, Column::Any, false).unwrap();
        assert_eq!(t.get(0), 0);
    }

    #[test]
    fn cycles_reject_column_constraints() {
        let err = alternating_counts(Shape::Cycle(3), 4, Column::AtMostOne, Column::Any, false);
        assert!(matches!(err, Err(OracleError::InvalidConstraint(_))));
    }

    #[test]
    fn search_agrees_with_class_exploration() {
        // every word, deduplicated by class, filtered by the class-wide test
        for (ty, k) in [(FamilyType::A, 3), (FamilyType::B, 3), (FamilyType::D, 4), (FamilyType::Atilde, 3), (FamilyType::Ctilde, 2)] {
            let g = graph(ty, k).unwrap();
            let n = g.size();
            let lmax = 6;
            let mut expected = vec![0u64; lmax + 1];
            let mut expected_inv = vec![0u64; lmax + 1];
            let mut word: Word = Vec::new();
            fn all_words(n: usize, len: usize, word: &mut Word, out: &mut Vec<Word>) {
                if word.len() == len {
                    out.push(word.clone());
                    return;
                }
                for s in 0..n {
                    word.push(s as Letter);
                    all_words(n, len, word, out);
                    word.pop();
                }
            }
            for len in 0..=lmax {
                let mut words = Vec::new();
                all_words(n, len, &mut word, &mut words);
                let classes: std::collections::HashSet<_> = words.iter().map(|w| TraceClass::new(w, &g)).collect();
                for c in classes {
                    if is_fc_class(c.canonical(), &g) {
                        expected[len] += 1;
                        if c.dual(&g) == c {
                            expected_inv[len] += 1;
                        }
                    }
                }
            }
            assert_eq!(fc_counts(&g, lmax).unwrap().as_slice(), expected.as_slice(), "{ty}_{k}");
            assert_eq!(fc_involution_counts(&g, lmax).unwrap().as_slice(), expected_inv.as_slice(), "{ty}_{k} involutions");
        }
    }

    #[test]
    fn hand_checked_alternating_heap() {
        // Over the 5-point path, column sizes 2, 3, 2, 1, 1. Reading the
        // normal form by hand: s1 is the only minimal point besides s4, and
        // s4 is postponed until s0, s2 and the second s1, s0 are placed.
        let p5 = CoxeterGraph::path(5).unwrap();
        let w: Word = vec![1, 0, 2, 4, 1, 3, 0, 2, 1];
        assert!(is_alternating(&w, &p5));
        let mut broken = w.clone();
        broken.swap(7, 8);
        assert!(!is_alternating(&broken, &p5));
        let c = TraceClass::new(&w, &p5);
        assert_eq!(c.canonical(), &[1, 0, 2, 1, 0, 4, 3, 2, 1]);
    }
}
