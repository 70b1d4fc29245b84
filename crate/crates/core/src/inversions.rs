//! Root sequences, inversion sets and inversion triples.
//!
//! The root sequence of a reduced word `i_1 … i_n` is `(r_1, …, r_n)` with
//! `r_1 = α_{i_n}` and `r_l = s_{i_n} ⋯ s_{i_{n-l+2}}(α_{i_{n-l+1}})`. Its
//! entries are exactly the inversion set of the element.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{CoxeterGraph, GroupElement, Root, Word};
use crate::profile::ElementProfile;
use crate::words::DEFAULT_WORD_CAP;

/// Root sequence entries as raw vectors, without any sign check.
pub(crate) fn raw_root_sequence(g: &CoxeterGraph, w: &Word) -> Vec<Vec<i64>> {
    let l = w.letters();
    let n = l.len();
    let mut out = Vec::with_capacity(n);
    for k in (0..n).rev() {
        let mut v = vec![0; g.rank()];
        v[l[k]] = 1;
        for &i in &l[k + 1..] {
            g.reflect_in_place(i, &mut v);
        }
        out.push(v);
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct RootSequence {
    pub roots: Vec<Root>,
    #[serde(skip)]
    pub source_word: Word,
}

impl RootSequence {
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn position(&self, r: &Root) -> Option<usize> {
        self.roots.iter().position(|x| x == r)
    }
}

/// The root sequence of a reduced word. Fails with `NotReduced` when some
/// entry is not positive.
pub fn root_sequence(g: &CoxeterGraph, w: &Word) -> Result<RootSequence> {
    g.check_word(w)?;
    let raw = raw_root_sequence(g, w);
    let mut roots = Vec::with_capacity(raw.len());
    for v in raw {
        if v.iter().any(|&c| c < 0) {
            return Err(Error::NotReduced);
        }
        roots.push(Root::from_coeffs_unchecked(v));
    }
    Ok(RootSequence {
        roots,
        source_word: w.clone(),
    })
}

/// Inverse of [`root_sequence`]: the last letter is the index of `r_1`, and
/// the remaining entries, reflected by that letter, form the root sequence
/// of the prefix.
pub fn word_from_root_sequence(g: &CoxeterGraph, roots: &[Root]) -> Result<Word> {
    let mut remaining: Vec<Vec<i64>> = Vec::with_capacity(roots.len());
    for r in roots {
        if r.rank() != g.rank() {
            return Err(Error::DimensionMismatch {
                expected: g.rank(),
                found: r.rank(),
            });
        }
        remaining.push(r.coeffs().to_vec());
    }
    let mut reversed = Vec::with_capacity(roots.len());
    let mut start = 0;
    while start < remaining.len() {
        let letter = Root::new(remaining[start].clone())
            .ok()
            .and_then(|r| r.simple_index())
            .ok_or(Error::NotRealizable)?;
        reversed.push(letter);
        start += 1;
        for v in &mut remaining[start..] {
            g.reflect_in_place(letter, v);
        }
    }
    reversed.reverse();
    Ok(Word(reversed))
}

/// A set `{a, b, a + b}` of positive roots, stored sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triple {
    roots: [Root; 3],
}

impl Triple {
    /// Accepts three positive roots of which one is the sum of the other two.
    pub fn new(a: Root, b: Root, c: Root) -> Option<Triple> {
        let mut roots = [a, b, c];
        roots.sort();
        if !roots.iter().all(Root::is_positive) {
            return None;
        }
        let t = Triple { roots };
        t.sum_index().map(|_| t)
    }

    fn sum_index(&self) -> Option<usize> {
        let [a, b, c] = &self.roots;
        let sums = |x: &Root, y: &Root, z: &Root| {
            x.coeffs()
                .iter()
                .zip(y.coeffs())
                .zip(z.coeffs())
                .all(|((p, q), r)| p + q == *r)
        };
        if sums(b, c, a) {
            Some(0)
        } else if sums(a, c, b) {
            Some(1)
        } else if sums(a, b, c) {
            Some(2)
        } else {
            None
        }
    }

    pub fn roots(&self) -> &[Root; 3] {
        &self.roots
    }

    /// The member equal to the sum of the other two.
    pub fn sum(&self) -> &Root {
        &self.roots[self.sum_index().expect("triple invariant")]
    }

    /// The two members that add up to the third, in sorted order.
    pub fn summands(&self) -> (&Root, &Root) {
        let s = self.sum_index().expect("triple invariant");
        let mut rest = (0..3).filter(|&k| k != s).map(|k| &self.roots[k]);
        (rest.next().unwrap(), rest.next().unwrap())
    }

    pub fn contains(&self, r: &Root) -> bool {
        self.roots.contains(r)
    }

    pub fn is_disjoint(&self, other: &Triple) -> bool {
        !self.roots.iter().any(|r| other.contains(r))
    }

    /// Canonical text key, e.g. `[[1,0],[1,1],[0,1]]` with roots sorted.
    pub fn key(&self) -> String {
        let parts: Vec<String> = self.roots.iter().map(|r| r.to_string()).collect();
        format!("[{}]", parts.join(",")).replace(' ', "")
    }

    /// The triple formed by three consecutive entries, if they form one.
    pub fn from_window(w: &[Root]) -> Option<Triple> {
        match w {
            [a, b, c] => Triple::new(a.clone(), b.clone(), c.clone()),
            _ => None,
        }
    }

    /// Applies a group action to each member.
    pub fn map(&self, f: impl Fn(&Root) -> Root) -> Option<Triple> {
        let [a, b, c] = &self.roots;
        Triple::new(f(a), f(b), f(c))
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.key())
    }
}

impl Serialize for Triple {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.roots.serialize(s)
    }
}

/// The inversion set as a sorted list.
pub fn inversion_set(g: &CoxeterGraph, e: &GroupElement) -> Vec<Root> {
    let mut roots = root_sequence(g, &e.reduced_word(g))
        .expect("greedy descent yields a reduced word")
        .roots;
    roots.sort();
    roots
}

/// All 3-subsets `{a, b, a + b}` of a root set, found by hashing pair sums.
pub fn triples_in(roots: &[Root]) -> Vec<Triple> {
    let set: HashSet<&Root> = roots.iter().collect();
    let mut out = BTreeSet::new();
    for (k, a) in roots.iter().enumerate() {
        for b in &roots[k + 1..] {
            if let Some(c) = a.checked_add(b) {
                if set.contains(&c) {
                    out.extend(Triple::new(a.clone(), b.clone(), c));
                }
            }
        }
    }
    out.into_iter().collect()
}

pub fn inversion_triples(g: &CoxeterGraph, e: &GroupElement) -> Vec<Triple> {
    triples_in(&inversion_set(g, e))
}

/// Whether `t` occurs consecutively in some root sequence of `e`.
pub fn is_contractible(g: &CoxeterGraph, e: &GroupElement, t: &Triple) -> Result<bool> {
    let profile = ElementProfile::new(g, e, DEFAULT_WORD_CAP)?;
    profile.is_contractible(t)
}

pub fn contractible_triples(g: &CoxeterGraph, e: &GroupElement) -> Result<Vec<Triple>> {
    Ok(ElementProfile::new(g, e, DEFAULT_WORD_CAP)?.contractible)
}

/// `N(w)`, the number of contractible inversion triples.
pub fn n_stat(g: &CoxeterGraph, e: &GroupElement) -> Result<usize> {
    Ok(contractible_triples(g, e)?.len())
}

/// True iff the contractible triples are pairwise disjoint.
pub fn is_freely_braided(g: &CoxeterGraph, e: &GroupElement) -> Result<bool> {
    Ok(pairwise_disjoint(&contractible_triples(g, e)?))
}

pub fn pairwise_disjoint(triples: &[Triple]) -> bool {
    triples
        .iter()
        .enumerate()
        .all(|(k, t)| triples[k + 1..].iter().all(|u| t.is_disjoint(u)))
}
