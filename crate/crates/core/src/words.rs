//! Reducedness, braid moves, reduced-word enumeration and commutation
//! classes.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{CoxeterGraph, GroupElement, Word};
use crate::inversions::raw_root_sequence;

/// Default limit on the number of reduced words collected for one element.
pub const DEFAULT_WORD_CAP: usize = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MoveKind {
    /// `ij -> ji` with `m_ij = 2`.
    Short,
    /// `iji -> jij` with `m_ij = 3`.
    Long,
}

impl MoveKind {
    pub fn block_len(self) -> usize {
        match self {
            MoveKind::Short => 2,
            MoveKind::Long => 3,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct BraidMove {
    pub position: usize,
    pub kind: MoveKind,
}

impl fmt::Display for BraidMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}@{}", self.kind, self.position)
    }
}

/// True iff every entry of the root sequence of `w` is positive.
pub fn is_reduced(g: &CoxeterGraph, w: &Word) -> Result<bool> {
    g.check_word(w)?;
    Ok(raw_root_sequence(g, w)
        .iter()
        .all(|r| r.iter().all(|&c| c >= 0)))
}

fn short_at(g: &CoxeterGraph, l: &[usize], p: usize) -> bool {
    p + 1 < l.len() && g.commute(l[p], l[p + 1])
}

fn long_at(g: &CoxeterGraph, l: &[usize], p: usize) -> bool {
    p + 2 < l.len() && l[p] == l[p + 2] && g.is_edge(l[p], l[p + 1])
}

pub(crate) fn moves_unchecked(g: &CoxeterGraph, w: &Word) -> Vec<BraidMove> {
    let l = w.letters();
    let mut out = Vec::new();
    for position in 0..l.len() {
        if short_at(g, l, position) {
            out.push(BraidMove {
                position,
                kind: MoveKind::Short,
            });
        }
        if long_at(g, l, position) {
            out.push(BraidMove {
                position,
                kind: MoveKind::Long,
            });
        }
    }
    out
}

pub(crate) fn apply_unchecked(w: &Word, m: BraidMove) -> Word {
    let mut letters = w.0.clone();
    let p = m.position;
    match m.kind {
        MoveKind::Short => letters.swap(p, p + 1),
        MoveKind::Long => {
            let (i, j) = (letters[p], letters[p + 1]);
            letters[p] = j;
            letters[p + 1] = i;
            letters[p + 2] = j;
        }
    }
    Word(letters)
}

/// Every applicable braid move on a reduced word, left to right.
pub fn braid_moves(g: &CoxeterGraph, w: &Word) -> Result<Vec<BraidMove>> {
    if !is_reduced(g, w)? {
        return Err(Error::NotReduced);
    }
    Ok(moves_unchecked(g, w))
}

pub fn apply_move(g: &CoxeterGraph, w: &Word, m: BraidMove) -> Result<Word> {
    g.check_word(w)?;
    let l = w.letters();
    let ok = match m.kind {
        MoveKind::Short => short_at(g, l, m.position),
        MoveKind::Long => long_at(g, l, m.position),
    };
    if !ok {
        return Err(Error::MoveMismatch(m.to_string()));
    }
    Ok(apply_unchecked(w, m))
}

/// Closure of `start` under the moves accepted by `keep`, in BFS order.
fn closure(
    g: &CoxeterGraph,
    start: Word,
    cap: usize,
    keep: impl Fn(MoveKind) -> bool,
) -> Result<Vec<Word>> {
    let mut seen: HashSet<Word> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back(start);
    let mut order = Vec::new();
    while let Some(w) = queue.pop_front() {
        for m in moves_unchecked(g, &w) {
            if !keep(m.kind) {
                continue;
            }
            let next = apply_unchecked(&w, m);
            if seen.insert(next.clone()) {
                if seen.len() > cap {
                    return Err(Error::CapExceeded { cap });
                }
                queue.push_back(next);
            }
        }
        order.push(w);
    }
    Ok(order)
}

/// All reduced words equal in the group to the reduced word `start`, sorted.
pub fn reduced_words_from(g: &CoxeterGraph, start: &Word, cap: usize) -> Result<Vec<Word>> {
    if !is_reduced(g, start)? {
        return Err(Error::NotReduced);
    }
    if cap == 0 {
        return Err(Error::CapExceeded { cap });
    }
    let mut words = closure(g, start.clone(), cap, |_| true)?;
    words.sort();
    Ok(words)
}

/// The complete set of reduced expressions for `e`, sorted.
pub fn reduced_words(g: &CoxeterGraph, e: &GroupElement, cap: usize) -> Result<Vec<Word>> {
    reduced_words_from(g, &e.reduced_word(g), cap)
}

/// Partition of the reduced words of an element into commutation classes.
/// Each class is sorted, so its first word is the lexicographically least;
/// classes are ordered by representative.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CommutationClassSet {
    pub classes: Vec<Vec<Word>>,
}

impl CommutationClassSet {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn representatives(&self) -> impl Iterator<Item = &Word> {
        self.classes.iter().map(|c| &c[0])
    }

    /// Index of the class containing `w`.
    pub fn class_of(&self, w: &Word) -> Option<usize> {
        self.classes.iter().position(|c| c.binary_search(w).is_ok())
    }
}

/// Groups `words` (a braid-closed set) into short-move components. Returns
/// one class index per word plus the classes as sorted index lists.
pub(crate) fn short_move_components(
    g: &CoxeterGraph,
    words: &[Word],
) -> (Vec<usize>, Vec<Vec<usize>>) {
    let index: HashMap<&Word, usize> = words.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let mut class_of = vec![usize::MAX; words.len()];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for seed in 0..words.len() {
        if class_of[seed] != usize::MAX {
            continue;
        }
        let id = classes.len();
        let mut members = vec![seed];
        class_of[seed] = id;
        let mut cursor = 0;
        while cursor < members.len() {
            let w = &words[members[cursor]];
            cursor += 1;
            for m in moves_unchecked(g, w) {
                if m.kind != MoveKind::Short {
                    continue;
                }
                let next = apply_unchecked(w, m);
                if let Some(&k) = index.get(&next) {
                    if class_of[k] == usize::MAX {
                        class_of[k] = id;
                        members.push(k);
                    }
                }
            }
        }
        members.sort_unstable();
        classes.push(members);
    }
    (class_of, classes)
}

pub fn commutation_classes(
    g: &CoxeterGraph,
    e: &GroupElement,
    cap: usize,
) -> Result<CommutationClassSet> {
    let words = reduced_words(g, e, cap)?;
    let (_, classes) = short_move_components(g, &words);
    // `words` is sorted and each index list is sorted, so the classes come
    // out sorted and ordered by their least member.
    Ok(CommutationClassSet {
        classes: classes
            .into_iter()
            .map(|c| c.into_iter().map(|i| words[i].clone()).collect())
            .collect(),
    })
}

/// The commutation class of a single word (closure under short moves), sorted.
pub fn commutation_class_of(g: &CoxeterGraph, w: &Word, cap: usize) -> Result<Vec<Word>> {
    g.check_word(w)?;
    let mut words = closure(g, w.clone(), cap, |k| k == MoveKind::Short)?;
    words.sort();
    Ok(words)
}

/// True iff some contiguous block of `w` is `iji` with `m_ij = 3`.
pub fn has_iji_subword(g: &CoxeterGraph, w: &Word) -> bool {
    let l = w.letters();
    (0..l.len())
        .any(|p| p + 2 < l.len() && l[p] < g.rank() && l[p + 1] < g.rank() && long_at(g, l, p))
}

/// True iff no reduced expression of `e` contains an `iji` block.
pub fn is_fully_commutative(g: &CoxeterGraph, e: &GroupElement, cap: usize) -> Result<bool> {
    Ok(!reduced_words(g, e, cap)?
        .iter()
        .any(|w| has_iji_subword(g, w)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::enumerate_elements;

    fn w(l: &[usize]) -> Word {
        Word(l.to_vec())
    }

    #[test]
    fn reducedness() {
        let a2 = CoxeterGraph::type_a(2);
        assert!(is_reduced(&a2, &w(&[0, 1, 0])).unwrap());
        assert!(!is_reduced(&a2, &w(&[0, 1, 0, 1])).unwrap());
        assert!(is_reduced(&a2, &Word::empty()).unwrap());
        assert!(is_reduced(&CoxeterGraph::type_a(0), &Word::empty()).unwrap());
        assert!(!is_reduced(&a2, &w(&[1, 1])).unwrap());
    }

    #[test]
    fn move_listing() {
        let a2 = CoxeterGraph::type_a(2);
        let a3 = CoxeterGraph::type_a(3);
        assert_eq!(
            braid_moves(&a2, &w(&[0, 1, 0])).unwrap(),
            vec![BraidMove {
                position: 0,
                kind: MoveKind::Long
            }]
        );
        assert_eq!(
            braid_moves(&a3, &w(&[0, 2])).unwrap(),
            vec![BraidMove {
                position: 0,
                kind: MoveKind::Short
            }]
        );
        assert!(braid_moves(&a2, &w(&[0, 1])).unwrap().is_empty());
        assert_eq!(braid_moves(&a2, &w(&[0, 0])), Err(Error::NotReduced));
    }

    #[test]
    fn move_application() {
        let a3 = CoxeterGraph::type_a(3);
        let long = BraidMove {
            position: 0,
            kind: MoveKind::Long,
        };
        let short = BraidMove {
            position: 0,
            kind: MoveKind::Short,
        };
        let x = apply_move(&a3, &w(&[0, 1, 0]), long).unwrap();
        assert_eq!(x, w(&[1, 0, 1]));
        assert_eq!(apply_move(&a3, &x, long).unwrap(), w(&[0, 1, 0]));
        let y = apply_move(&a3, &w(&[0, 2, 1]), short).unwrap();
        assert_eq!(y, w(&[2, 0, 1]));
        assert_eq!(apply_move(&a3, &y, short).unwrap(), w(&[0, 2, 1]));
        assert!(matches!(
            apply_move(&a3, &w(&[0, 1]), short),
            Err(Error::MoveMismatch(_))
        ));
    }

    #[test]
    fn reduced_word_sets() {
        let a2 = CoxeterGraph::type_a(2);
        let w0 = a2.element_of(&w(&[0, 1, 0])).unwrap();
        assert_eq!(
            reduced_words(&a2, &w0, 10).unwrap(),
            vec![w(&[0, 1, 0]), w(&[1, 0, 1])]
        );
        assert_eq!(
            reduced_words(&a2, &a2.identity(), 10).unwrap(),
            vec![Word::empty()]
        );
        assert_eq!(
            reduced_words(&a2, &w0, 1),
            Err(Error::CapExceeded { cap: 1 })
        );
    }

    #[test]
    fn a3_longest_has_sixteen_words() {
        let a3 = CoxeterGraph::type_a(3);
        let w0 = a3.element_of(&w(&[0, 1, 0, 2, 1, 0])).unwrap();
        assert_eq!(w0.length(), 6);
        // Oracle: every word of length 6 over three letters, filtered by the
        // matrix representation.
        let mut oracle = Vec::new();
        for code in 0..3usize.pow(6) {
            let letters: Vec<usize> = (0..6).map(|k| (code / 3usize.pow(k)) % 3).collect();
            let candidate = Word(letters);
            if a3.element_of(&candidate).unwrap() == w0 {
                oracle.push(candidate);
            }
        }
        oracle.sort();
        assert_eq!(oracle.len(), 16);
        assert_eq!(reduced_words(&a3, &w0, 100).unwrap(), oracle);
    }

    #[test]
    fn class_examples() {
        let a2 = CoxeterGraph::type_a(2);
        let w0 = a2.element_of(&w(&[0, 1, 0])).unwrap();
        let classes = commutation_classes(&a2, &w0, 10).unwrap();
        assert_eq!(
            classes.classes,
            vec![vec![w(&[0, 1, 0])], vec![w(&[1, 0, 1])]]
        );
        let a3 = CoxeterGraph::type_a(3);
        let e = a3.element_of(&w(&[1, 0, 2, 1])).unwrap();
        let classes = commutation_classes(&a3, &e, 10).unwrap();
        assert_eq!(classes.len(), 1);
        assert_eq!(classes.classes[0], vec![w(&[1, 0, 2, 1]), w(&[1, 2, 0, 1])]);
        let id = commutation_classes(&a3, &a3.identity(), 10).unwrap();
        assert_eq!(id.classes, vec![vec![Word::empty()]]);
        assert_eq!(
            commutation_class_of(&a3, &w(&[0, 2, 1]), 10).unwrap(),
            vec![w(&[0, 2, 1]), w(&[2, 0, 1])]
        );
    }

    #[test]
    fn iji_blocks() {
        let a2 = CoxeterGraph::type_a(2);
        let a3 = CoxeterGraph::type_a(3);
        assert!(has_iji_subword(&a2, &w(&[0, 1, 0])));
        assert!(!has_iji_subword(&a3, &w(&[0, 2, 0])));
        assert!(!has_iji_subword(&a3, &w(&[1, 0, 2, 1])));
        assert!(!has_iji_subword(&a3, &w(&[0, 0, 0])));
    }

    #[test]
    fn full_commutativity_examples() {
        let a2 = CoxeterGraph::type_a(2);
        let w0 = a2.element_of(&w(&[0, 1, 0])).unwrap();
        assert!(!is_fully_commutative(&a2, &w0, 10).unwrap());
        assert!(is_fully_commutative(&a2, &a2.identity(), 10).unwrap());
        let a3 = CoxeterGraph::type_a(3);
        let e = a3.element_of(&w(&[1, 0, 2, 1])).unwrap();
        assert!(is_fully_commutative(&a3, &e, 10).unwrap());
    }

    #[test]
    fn fc_counts_match_321_avoiding_permutations() {
        // Oracle: in type A_{n-1} the group is the symmetric group S_n and the
        // fully commutative elements are the 321-avoiding permutations.
        fn permutations(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in permutations(n - 1) {
                for k in 0..n {
                    let mut q = p.clone();
                    q.insert(k, n - 1);
                    out.push(q);
                }
            }
            out
        }
        fn avoids_321(p: &[usize]) -> bool {
            let n = p.len();
            !(0..n).any(|a| (a + 1..n).any(|b| p[a] > p[b] && (b + 1..n).any(|c| p[b] > p[c])))
        }
        for n in 3..=5 {
            let oracle = permutations(n).iter().filter(|p| avoids_321(p)).count();
            let g = CoxeterGraph::type_a(n - 1);
            let count: usize = enumerate_elements(&g, n * (n - 1) / 2, 1000)
                .unwrap()
                .iter()
                .flatten()
                .filter(|e| is_fully_commutative(&g, e, 10_000).unwrap())
                .count();
            assert_eq!(count, oracle, "n = {n}");
        }
    }
}
