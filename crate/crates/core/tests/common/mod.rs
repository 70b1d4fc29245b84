//! Brute-force word filter used as an oracle: every word over the alphabet up
//! to a length is evaluated in the reflection representation, and elements,
//! reduced words, full commutativity and free braidedness are read off from
//! the raw word lists. Nothing here goes through braid moves.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use coxeter_core::CoxeterGraph;

pub type Vector = Vec<i64>;

/// Images of the simple roots, used as the element's identity.
pub type Key = Vec<Vector>;

/// `s_i(v) = v - 2B(α_i, v) α_i`.
fn reflect(g: &CoxeterGraph, i: usize, v: &mut [i64]) {
    let mut pairing = 2 * v[i];
    for (j, &c) in v.iter().enumerate() {
        if j != i && g.is_edge(i, j) {
            pairing -= c;
        }
    }
    v[i] -= pairing;
}

fn simple(n: usize, i: usize) -> Vector {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

/// `s_{w_0} s_{w_1} ... (v)`, applied right to left.
fn act(g: &CoxeterGraph, word: &[usize], v: &[i64]) -> Vector {
    let mut v = v.to_vec();
    for &i in word.iter().rev() {
        reflect(g, i, &mut v);
    }
    v
}

pub fn key(g: &CoxeterGraph, word: &[usize]) -> Key {
    let n = g.rank();
    (0..n).map(|j| act(g, word, &simple(n, j))).collect()
}

/// `r_k = s_{i_n} ... s_{i_{n-k+2}}(α_{i_{n-k+1}})`.
pub fn root_sequence(g: &CoxeterGraph, word: &[usize]) -> Vec<Vector> {
    let n = word.len();
    (0..n)
        .map(|k| {
            let i = word[n - 1 - k];
            let suffix: Vec<usize> = word[n - k..].iter().rev().copied().collect();
            act(g, &suffix, &simple(g.rank(), i))
        })
        .collect()
}

fn is_triple(window: &[Vector]) -> Option<[Vector; 3]> {
    let mut t = [window[0].clone(), window[1].clone(), window[2].clone()];
    t.sort_by_key(|v| (v.iter().sum::<i64>(), v.clone()));
    let sum: Vector = t[0].iter().zip(&t[1]).map(|(a, b)| a + b).collect();
    (sum == t[2]).then_some(t)
}

#[derive(Clone, Debug)]
pub struct OracleElement {
    pub length: usize,
    pub reduced_words: BTreeSet<Vec<usize>>,
}

impl OracleElement {
    pub fn fully_commutative(&self, g: &CoxeterGraph) -> bool {
        !self.reduced_words.iter().any(|w| {
            w.windows(3)
                .any(|b| b[0] == b[2] && b[0] != b[1] && g.is_edge(b[0], b[1]))
        })
    }

    pub fn contractible(&self, g: &CoxeterGraph) -> BTreeSet<[Vector; 3]> {
        self.reduced_words
            .iter()
            .flat_map(|w| {
                root_sequence(g, w)
                    .windows(3)
                    .filter_map(is_triple)
                    .collect::<Vec<_>>()
            })
            .collect()
    }

    pub fn freely_braided(&self, g: &CoxeterGraph) -> bool {
        let ts: Vec<_> = self.contractible(g).into_iter().collect();
        ts.iter()
            .enumerate()
            .all(|(a, s)| ts[a + 1..].iter().all(|t| s.iter().all(|r| !t.contains(r))))
    }
}

/// Every element of length at most `max_len`, with all of its reduced words.
pub fn brute_force(g: &CoxeterGraph, max_len: usize) -> BTreeMap<Key, OracleElement> {
    let n = g.rank();
    let mut out: BTreeMap<Key, OracleElement> = BTreeMap::new();
    let mut words: Vec<Vec<usize>> = vec![vec![]];
    for len in 0..=max_len {
        for w in &words {
            let entry = out.entry(key(g, w)).or_insert_with(|| OracleElement {
                length: len,
                reduced_words: BTreeSet::new(),
            });
            if entry.length == len {
                entry.reduced_words.insert(w.clone());
            }
        }
        if len == max_len || n == 0 {
            break;
        }
        words = words
            .iter()
            .flat_map(|w| {
                (0..n).map(move |i| {
                    let mut x = w.clone();
                    x.push(i);
                    x
                })
            })
            .collect();
    }
    out
}

/// Per-length (total, fully commutative, freely braided) counts.
pub fn counts_by_length(
    g: &CoxeterGraph,
    elements: &BTreeMap<Key, OracleElement>,
    max_len: usize,
) -> Vec<(usize, usize, usize)> {
    let mut rows = vec![(0, 0, 0); max_len + 1];
    for e in elements.values() {
        let row = &mut rows[e.length];
        row.0 += 1;
        row.1 += e.fully_commutative(g) as usize;
        row.2 += e.freely_braided(g) as usize;
    }
    rows
}
