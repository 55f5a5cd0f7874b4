use std::fmt;

use serde::Serialize;

use super::OracleError;
use crate::catalog::FamilyType;

/// Generator set with a symmetric bond matrix. `m(s, s) = 1`; `m(s, t) = 2`
/// means `s` and `t` commute; larger labels are drawn as edges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoxeterGraph {
    name: String,
    size: usize,
    bonds: Vec<u8>,
    #[serde(skip)]
    neighbors: Vec<Vec<u8>>,
}

impl CoxeterGraph {
    /// Builds a graph from its edge list; every pair not listed commutes.
    pub fn new(name: impl Into<String>, size: usize, edges: &[(usize, usize, u8)]) -> Result<Self, OracleError> {
        if size == 0 || size > 64 {
            return Err(OracleError::InvalidGraph(format!("{size} generators (supported: 1..=64)")));
        }
        let mut bonds = vec![2u8; size * size];
        for s in 0..size {
            bonds[s * size + s] = 1;
        }
        for &(s, t, m) in edges {
            if s >= size || t >= size || s == t {
                return Err(OracleError::InvalidGraph(format!("edge ({s}, {t}) on {size} generators")));
            }
            if m < 3 {
                return Err(OracleError::InvalidGraph(format!("edge ({s}, {t}) has label {m}")));
            }
            bonds[s * size + t] = m;
            bonds[t * size + s] = m;
        }
        let neighbors = (0..size)
            .map(|s| (0..size).filter(|&t| t != s && bonds[s * size + t] >= 3).map(|t| t as u8).collect())
            .collect();
        Ok(Self { name: name.into(), size, bonds, neighbors })
    }

    /// `s_0 - s_1 - ... - s_{n-1}`, all bonds 3.
    pub fn path(n: usize) -> Result<Self, OracleError> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i, 3)).collect();
        Self::new(format!("path{n}"), n, &edges)
    }

    /// Path closed into a cycle; needs at least 3 vertices.
    pub fn cycle(n: usize) -> Result<Self, OracleError> {
        if n < 3 {
            return Err(OracleError::InvalidGraph(format!("cycle of {n} vertices")));
        }
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i, 3)).collect();
        edges.push((n - 1, 0, 3));
        Self::new(format!("cycle{n}"), n, &edges)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn m(&self, s: usize, t: usize) -> u8 {
        self.bonds[s * self.size + t]
    }

    pub fn commute(&self, s: usize, t: usize) -> bool {
        self.m(s, t) == 2
    }

    /// Generators joined to `s` by an edge.
    pub fn neighbors(&self, s: usize) -> &[u8] {
        &self.neighbors[s]
    }

    /// Same graph with generator `i` renamed `n - 1 - i`.
    pub fn reflected(&self) -> Self {
        let n = self.size;
        let mut edges = Vec::new();
        for s in 0..n {
            for t in s + 1..n {
                if self.m(s, t) >= 3 {
                    edges.push((n - 1 - s, n - 1 - t, self.m(s, t)));
                }
            }
        }
        Self::new(format!("{}-reflected", self.name), n, &edges).expect("reflection of a valid graph")
    }
}

impl fmt::Display for CoxeterGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (", self.name)?;
        let mut first = true;
        for s in 0..self.size {
            for t in s + 1..self.size {
                if self.m(s, t) >= 3 {
                    if !first {
                        f.write_str(", ")?;
                    }
                    first = false;
                    write!(f, "{s}-{t}")?;
                    if self.m(s, t) > 3 {
                        write!(f, ":{}", self.m(s, t))?;
                    }
                }
            }
        }
        f.write_str(")")
    }
}

/// Coxeter graph of the group `X_k` of the given type.
///
/// Generator layout:
/// - `A_k`: path `0 - 1 - ... - k-1`.
/// - `B_k`: the same path with bond 4 between `0` (the `t` generator) and `1`.
/// - `D_k`: `0` and `1` both joined to `2`, then the path `2 - ... - k-1`.
/// - `Atilde_k`: cycle on `k + 1` generators.
/// - `Btilde_k`: fork `0, 1 -> 2`, path `2 - ... - k-1`, bond 4 between `k-1` and `k`.
/// - `Ctilde_k`: path `0 - ... - k` with bond 4 at both ends.
/// - `Dtilde_k`: forks `0, 1 -> 2` and `k-1, k -> k-2`, path between.
pub fn graph(ty: FamilyType, k: usize) -> Result<CoxeterGraph, OracleError> {
    let out_of_range = |min: usize| {
        if k < min {
            Err(OracleError::InvalidGraph(format!("{ty}_{k}: index must be at least {min}")))
        } else {
            Ok(())
        }
    };
    let path_edges = |from: usize, to: usize| (from + 1..=to).map(|i| (i - 1, i, 3u8)).collect::<Vec<_>>();
    let name = format!("{ty}_{k}");
    match ty {
        FamilyType::A => {
            out_of_range(1)?;
            CoxeterGraph::new(name, k, &path_edges(0, k - 1))
        }
        FamilyType::B => {
            out_of_range(2)?;
            let mut edges = path_edges(1, k - 1);
            edges.push((0, 1, 4));
            CoxeterGraph::new(name, k, &edges)
        }
        FamilyType::D => {
            out_of_range(3)?;
            let mut edges = path_edges(2, k - 1);
            edges.extend([(0, 2, 3), (1, 2, 3)]);
            CoxeterGraph::new(name, k, &edges)
        }
        FamilyType::Atilde => {
            out_of_range(2)?;
            let mut g = CoxeterGraph::cycle(k + 1)?;
            g.name = name;
            Ok(g)
        }
        FamilyType::Btilde => {
            out_of_range(3)?;
            let mut edges = path_edges(2, k - 1);
            edges.extend([(0, 2, 3), (1, 2, 3), (k - 1, k, 4)]);
            CoxeterGraph::new(name, k + 1, &edges)
        }
        FamilyType::Ctilde => {
            out_of_range(2)?;
            let mut edges = path_edges(1, k - 1);
            edges.extend([(0, 1, 4), (k - 1, k, 4)]);
            CoxeterGraph::new(name, k + 1, &edges)
        }
        FamilyType::Dtilde => {
            out_of_range(4)?;
            let mut edges = path_edges(2, k - 2);
            edges.extend([(0, 2, 3), (1, 2, 3), (k - 1, k - 2, 3), (k, k - 2, 3)]);
            CoxeterGraph::new(name, k + 1, &edges)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_graphs() {
        let a3 = graph(FamilyType::A, 3).unwrap();
        assert_eq!((a3.m(0, 1), a3.m(1, 2), a3.m(0, 2)), (3, 3, 2));
        let a1 = graph(FamilyType::A, 1).unwrap();
        assert_eq!(a1.size(), 1);
        assert!(a1.neighbors(0).is_empty());
    }

    #[test]
    fn affine_c_has_two_bond_four_ends() {
        let g = graph(FamilyType::Ctilde, 4).unwrap();
        assert_eq!(g.size(), 5);
        assert_eq!((g.m(0, 1), g.m(1, 2), g.m(2, 3), g.m(3, 4)), (4, 3, 3, 4));
    }

    #[test]
    fn forks() {
        let d4 = graph(FamilyType::D, 4).unwrap();
        assert_eq!(d4.neighbors(2), &[0, 1, 3]);
        let dt4 = graph(FamilyType::Dtilde, 4).unwrap();
        assert_eq!(dt4.neighbors(2), &[0, 1, 3, 4]);
        let bt3 = graph(FamilyType::Btilde, 3).unwrap();
        assert_eq!((bt3.m(0, 2), bt3.m(1, 2), bt3.m(2, 3), bt3.m(0, 1)), (3, 3, 4, 2));
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(graph(FamilyType::D, 2).is_err());
        assert!(graph(FamilyType::A, 0).is_err());
        assert!(CoxeterGraph::cycle(2).is_err());
    }

    #[test]
    fn reflection_reverses_bonds() {
        let b3 = graph(FamilyType::B, 3).unwrap().reflected();
        assert_eq!((b3.m(0, 1), b3.m(1, 2)), (3, 4));
    }
}
