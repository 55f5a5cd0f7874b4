//! Depth-first generation of normal-form words, one per heap.
//!
//! Every counted family is closed under taking prefixes of the normal form
//! (fully commutative elements, alternating heaps, column bounds), so the
//! search only ever extends valid words. Filters that are not prefix-closed
//! (self-duality, odd columns, full support) are applied when counting.

use serde::{Deserialize, Serialize};

use super::trace::{is_self_dual, Letter, Word};
use super::{CountTable, CoxeterGraph, OracleError};
use crate::exec::map_indices;

/// Which heaps over the graph are generated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Kind {
    /// Reduced words of fully commutative elements.
    FullyCommutative,
    /// Heaps whose bonded columns alternate.
    Alternating,
}

/// Multiplicity constraint on an end column of a path.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Column {
    #[default]
    Any,
    AtMostOne,
    Odd,
}

impl std::str::FromStr for Column {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "any" => Ok(Column::Any),
            "at-most-one" | "atmostone" | "le1" => Ok(Column::AtMostOne),
            "odd" => Ok(Column::Odd),
            _ => Err(format!("unknown column constraint '{s}', expected any, at-most-one or odd")),
        }
    }
}

/// Underlying graph of an alternating-heap query.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Shape {
    Path(usize),
    Cycle(usize),
}

impl Shape {
    pub fn size(self) -> usize {
        match self {
            Shape::Path(n) | Shape::Cycle(n) => n,
        }
    }

    pub fn graph(self) -> Result<CoxeterGraph, OracleError> {
        match self {
            Shape::Path(n) => CoxeterGraph::path(n),
            Shape::Cycle(n) => CoxeterGraph::cycle(n),
        }
    }
}

/// Filters applied on top of the generated family.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub(crate) struct Filter {
    /// Constraint on generator `0`.
    pub first: Column,
    /// Constraint on the last generator.
    pub last: Column,
    pub self_dual: bool,
    pub full_support: bool,
}

impl Filter {
    fn accepts(&self, node: &Node, g: &CoxeterGraph) -> bool {
        let n = g.size();
        let ok = |c: Column, count: u32| match c {
            Column::Any | Column::AtMostOne => true,
            Column::Odd => count % 2 == 1,
        };
        if !ok(self.first, node.column[0]) || !ok(self.last, node.column[n - 1]) {
            return false;
        }
        if self.full_support && node.column.contains(&0) {
            return false;
        }
        !self.self_dual || is_self_dual(&node.word, g)
    }

    fn bound(c: Column) -> u32 {
        if c == Column::AtMostOne {
            1
        } else {
            u32::MAX
        }
    }
}

/// A heap under construction: its normal-form word plus, for each point,
/// the set of points below it.
#[derive(Clone)]
struct Node {
    word: Word,
    /// `below[i]` has bit `j` set iff point `j <= i` in the heap order.
    below: Vec<u64>,
    /// Position of the topmost point of each label.
    top: Vec<Option<usize>>,
    column: Vec<u32>,
}

impl Node {
    fn root(n: usize) -> Self {
        Self { word: Word::new(), below: Vec::new(), top: vec![None; n], column: vec![0; n] }
    }

    fn push(&mut self, s: usize, below: u64) {
        self.top[s] = Some(self.word.len());
        self.word.push(s as Letter);
        self.below.push(below);
        self.column[s] += 1;
    }

    /// Number of points `z` with `x <= z` among the points of `mask`.
    fn interval_size(&self, x: usize, mask: u64) -> u32 {
        let mut count = 0;
        let mut rest = mask;
        while rest != 0 {
            let z = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if z == self.below.len() || self.below[z] >> x & 1 == 1 {
                count += 1;
            }
        }
        count
    }
}

struct Search<'a> {
    g: &'a CoxeterGraph,
    kind: Kind,
    filter: Filter,
    lmax: usize,
}

impl Search<'_> {
    /// Downset of a new point labelled `s` on top of `node`, or `None` if
    /// appending `s` leaves the family.
    fn extend(&self, node: &Node, s: usize) -> Option<u64> {
        let g = self.g;
        // normal form: `s` must not commute down past a larger letter
        for &c in node.word.iter().rev() {
            let c = c as usize;
            if !g.commute(c, s) {
                break;
            }
            if c > s {
                return None;
            }
        }
        let last = g.size() - 1;
        if (s == 0 && node.column[0] >= Filter::bound(self.filter.first))
            || (s == last && node.column[last] >= Filter::bound(self.filter.last))
        {
            return None;
        }
        let p = node.word.len();
        let mut below = 1u64 << p;
        if let Some(j) = node.top[s] {
            below |= node.below[j];
        }
        for &t in g.neighbors(s) {
            if let Some(j) = node.top[t as usize] {
                below |= node.below[j];
            }
        }
        match self.kind {
            Kind::Alternating => {
                for &t in g.neighbors(s) {
                    if let Some(js) = node.top[s] {
                        if node.top[t as usize].is_none_or(|jt| jt < js) {
                            return None;
                        }
                    }
                }
            }
            Kind::FullyCommutative => {
                if let Some(x) = node.top[s] {
                    if node.interval_size(x, below) == 2 {
                        return None;
                    }
                }
                for &t in g.neighbors(s) {
                    if self.closes_braid(node, s, t as usize, below) {
                        return None;
                    }
                }
            }
        }
        Some(below)
    }

    /// Whether the new point `s` ends a convex chain `..t s` of alternating
    /// labels whose length is the bond label.
    fn closes_braid(&self, node: &Node, s: usize, t: usize, below: u64) -> bool {
        let m = self.g.m(s, t) as usize;
        let mut want = t;
        let mut found = 1;
        let mut first = None;
        for (i, &c) in node.word.iter().enumerate().rev() {
            let c = c as usize;
            if c != s && c != t {
                continue;
            }
            if c != want {
                return false;
            }
            found += 1;
            first = Some(i);
            if found == m {
                break;
            }
            want = if want == s { t } else { s };
        }
        match first {
            Some(x) if found == m => node.interval_size(x, below) == m as u32,
            _ => false,
        }
    }

    fn children(&self, node: &Node) -> Vec<Node> {
        if node.word.len() >= self.lmax {
            return Vec::new();
        }
        (0..self.g.size())
            .filter_map(|s| {
                self.extend(node, s).map(|below| {
                    let mut child = node.clone();
                    child.push(s, below);
                    child
                })
            })
            .collect()
    }

    fn visit(&self, node: &mut Node, counts: &mut [u64]) {
        if self.filter.accepts(node, self.g) {
            counts[node.word.len()] += 1;
        }
        if node.word.len() >= self.lmax {
            return;
        }
        for s in 0..self.g.size() {
            if let Some(below) = self.extend(node, s) {
                let saved_top = node.top[s];
                node.push(s, below);
                self.visit(node, counts);
                node.word.pop();
                node.below.pop();
                node.column[s] -= 1;
                node.top[s] = saved_top;
            }
        }
    }

    fn run(&self) -> CountTable {
        let mut counts = vec![0u64; self.lmax + 1];
        let root = Node::root(self.g.size());
        // split the tree two levels down and search the subtrees independently
        let mut frontier = Vec::new();
        for child in self.children(&root) {
            frontier.extend(self.children(&child));
            if self.filter.accepts(&child, self.g) {
                counts[1] += 1;
            }
        }
        if self.filter.accepts(&root, self.g) {
            counts[0] += 1;
        }
        let parts = map_indices(frontier.len(), |i| {
            let mut local = vec![0u64; self.lmax + 1];
            let mut node = frontier[i].clone();
            self.visit(&mut node, &mut local);
            local
        });
        for part in parts {
            for (c, p) in counts.iter_mut().zip(part) {
                *c += p;
            }
        }
        CountTable::from_counts(counts)
    }
}

pub(crate) fn count(g: &CoxeterGraph, kind: Kind, filter: Filter, lmax: usize) -> Result<CountTable, OracleError> {
    if lmax >= 64 {
        return Err(OracleError::TooLarge(format!("lmax {lmax} (heaps are tracked in 64-bit sets)")));
    }
    Ok(Search { g, kind, filter, lmax }.run())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::FamilyType;
    use crate::oracle::graph;

    #[test]
    fn two_level_split_counts_short_lengths() {
        let a1 = graph(FamilyType::A, 1).unwrap();
        let t = count(&a1, Kind::FullyCommutative, Filter::default(), 3).unwrap();
        assert_eq!(t.as_slice(), &[1, 1, 0, 0]);
        let t = count(&a1, Kind::Alternating, Filter::default(), 3).unwrap();
        assert_eq!(t.as_slice(), &[1, 1, 1, 1]);
    }
}
