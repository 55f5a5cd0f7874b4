//! Commutation classes of words: normal forms and the class-level
//! predicates used as ground truth.

use std::collections::{HashSet, VecDeque};

use super::CoxeterGraph;

/// A generator index.
pub type Letter = u8;

/// A word over the generators of some graph.
pub type Word = Vec<Letter>;

/// Commutation class held by its lexicographically least word.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TraceClass {
    canonical: Word,
}

impl TraceClass {
    pub fn new(word: &[Letter], g: &CoxeterGraph) -> Self {
        Self { canonical: canonical(word, g) }
    }

    pub fn canonical(&self) -> &[Letter] {
        &self.canonical
    }

    pub fn len(&self) -> usize {
        self.canonical.len()
    }

    pub fn is_empty(&self) -> bool {
        self.canonical.is_empty()
    }

    /// Class of the reversed word (the dual heap).
    pub fn dual(&self, g: &CoxeterGraph) -> Self {
        let rev: Word = self.canonical.iter().rev().copied().collect();
        Self::new(&rev, g)
    }
}

/// Lexicographically least word in the commutation class of `word`.
///
/// Repeatedly emits the smallest letter that can be commuted to the front
/// of what remains.
pub fn canonical(word: &[Letter], g: &CoxeterGraph) -> Word {
    let mut rest: Vec<Letter> = word.to_vec();
    let mut out = Word::with_capacity(word.len());
    while !rest.is_empty() {
        let mut best: Option<usize> = None;
        'candidates: for i in 0..rest.len() {
            let s = rest[i] as usize;
            if best.is_some_and(|b| rest[b] <= rest[i]) {
                continue;
            }
            for &earlier in &rest[..i] {
                if !g.commute(earlier as usize, s) {
                    continue 'candidates;
                }
            }
            best = Some(i);
        }
        let i = best.expect("the first letter is always available");
        out.push(rest.remove(i));
    }
    out
}

/// Whether `word` is its own normal form.
pub fn is_canonical(word: &[Letter], g: &CoxeterGraph) -> bool {
    canonical(word, g) == word
}

/// Every word of the commutation class of `word`.
pub fn class_words(word: &[Letter], g: &CoxeterGraph) -> HashSet<Word> {
    let mut seen = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(word.to_vec());
    queue.push_back(word.to_vec());
    while let Some(w) = queue.pop_front() {
        for i in 1..w.len() {
            if w[i - 1] != w[i] && g.commute(w[i - 1] as usize, w[i] as usize) {
                let mut v = w.clone();
                v.swap(i - 1, i);
                if seen.insert(v.clone()) {
                    queue.push_back(v);
                }
            }
        }
    }
    seen
}

/// Whether `word` contains `ss` or an alternating factor `sts...` of length
/// `m(s, t)` for some bonded pair.
fn has_forbidden_factor(word: &[Letter], g: &CoxeterGraph) -> bool {
    for i in 1..word.len() {
        let (s, t) = (word[i - 1] as usize, word[i] as usize);
        if s == t {
            return true;
        }
        let m = g.m(s, t) as usize;
        if m >= 3 && i + 1 >= m {
            let factor = &word[i + 1 - m..=i];
            let alternating = factor.iter().enumerate().all(|(j, &c)| {
                let want = if (m - 1 - j) % 2 == 0 { t } else { s };
                c as usize == want
            });
            if alternating {
                return true;
            }
        }
    }
    false
}

/// Whether the commutation class of `word` is a fully commutative element
/// written reduced: no word of the class contains a forbidden factor.
///
/// Explores the whole class; exponential in the worst case and meant as
/// an independent reference for the enumerators.
pub fn is_fc_class(word: &[Letter], g: &CoxeterGraph) -> bool {
    class_words(word, g).iter().all(|w| !has_forbidden_factor(w, g))
}

/// Whether, for every bonded pair `(s, t)`, the letters `s` and `t` strictly
/// alternate in `word`.
pub fn is_alternating(word: &[Letter], g: &CoxeterGraph) -> bool {
    for s in 0..g.size() {
        for &t in g.neighbors(s) {
            let t = t as usize;
            if t < s {
                continue;
            }
            let mut last = None;
            for &c in word {
                let c = c as usize;
                if c == s || c == t {
                    if last == Some(c) {
                        return false;
                    }
                    last = Some(c);
                }
            }
        }
    }
    true
}

/// Whether the class of `word` equals the class of its reversal.
pub fn is_self_dual(word: &[Letter], g: &CoxeterGraph) -> bool {
    let rev: Word = word.iter().rev().copied().collect();
    canonical(&rev, g) == canonical(word, g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::FamilyType;
    use crate::oracle::graph;

    #[test]
    fn canonical_swaps_commuting_letters() {
        let a3 = graph(FamilyType::A, 3).unwrap();
        assert_eq!(canonical(&[2, 0, 1], &a3), vec![0, 2, 1]);
        assert_eq!(canonical(&[2, 0], &a3), vec![0, 2]);
        let w = canonical(&[2, 1, 0, 2], &a3);
        assert_eq!(canonical(&w, &a3), w);
    }

    #[test]
    fn canonical_is_least_in_class() {
        let a4 = graph(FamilyType::A, 4).unwrap();
        let w = [3, 1, 0, 2, 3, 1];
        let least = class_words(&w, &a4).into_iter().min().unwrap();
        assert_eq!(canonical(&w, &a4), least);
    }

    #[test]
    fn forbidden_factors() {
        let a2 = graph(FamilyType::A, 2).unwrap();
        assert!(!is_fc_class(&[0, 1, 0], &a2));
        assert!(!is_fc_class(&[1, 1], &a2));
        let a3 = graph(FamilyType::A, 3).unwrap();
        assert!(is_fc_class(&[0, 2], &a3));
        // s1 s3 s2 s1 becomes s3 s1 s2 s1
        assert!(!is_fc_class(&[0, 2, 1, 0], &a3));
        let b2 = graph(FamilyType::B, 2).unwrap();
        assert!(!is_fc_class(&[0, 1, 0, 1], &b2));
        assert!(is_fc_class(&[0, 1, 0], &b2));
    }

    #[test]
    fn alternation() {
        let p2 = CoxeterGraph::path(2).unwrap();
        assert!(is_alternating(&[0, 1, 0, 1], &p2));
        assert!(!is_alternating(&[0, 0], &p2));
        let p1 = CoxeterGraph::path(1).unwrap();
        assert!(is_alternating(&[0, 0, 0], &p1));
    }

    #[test]
    fn single_letters_are_self_dual() {
        let a3 = graph(FamilyType::A, 3).unwrap();
        for s in 0..3 {
            assert!(is_self_dual(&[s], &a3));
        }
        assert!(is_self_dual(&[0, 1, 0], &a3));
        assert!(!is_self_dual(&[0, 1], &a3));
        assert!(is_self_dual(&[0, 2], &a3));
    }

    #[test]
    fn dual_class() {
        let a3 = graph(FamilyType::A, 3).unwrap();
        let c = TraceClass::new(&[1, 0, 2], &a3);
        assert_eq!(c.dual(&a3).canonical(), &[0, 2, 1]);
        assert_eq!(c.dual(&a3).dual(&a3), c);
    }
}
