//! Class orders on inversion sets and the signature map from commutation
//! classes to `{0,1}`-labellings of contractible triples.
//!
//! For a commutation class `C`, `≤_C` is the transitive closure of
//! `a < b` whenever `a` precedes `b` in some root sequence of `C` and
//! `B(a, b) != 0`. Given a total precedence `≼` on the inversion set, the
//! signature of `C` assigns to each contractible triple `{a, b, a + b}` the bit
//! `0` when `a` and `b` are ordered the same way by `≤_C` and `≼`, and `1`
//! otherwise.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};

use serde::ser::SerializeMap;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{CoxeterGraph, GroupElement, Root};
use crate::inversions::{RootSequence, Triple};
use crate::profile::ElementProfile;
use crate::words::DEFAULT_WORD_CAP;

/// A total order on a finite root set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Precedence {
    order: Vec<Root>,
    rank: HashMap<Root, usize>,
}

impl Precedence {
    /// Uses the given sequence as the order, first element least.
    pub fn from_order(order: Vec<Root>) -> Precedence {
        let rank = order
            .iter()
            .enumerate()
            .map(|(k, r)| (r.clone(), k))
            .collect();
        Precedence { order, rank }
    }

    pub fn order(&self) -> &[Root] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn reversed(&self) -> Precedence {
        let mut order = self.order.clone();
        order.reverse();
        Precedence::from_order(order)
    }

    /// `Some(true)` iff `a ≺ b`; `None` when either root is outside the domain.
    pub fn precedes(&self, a: &Root, b: &Root) -> Option<bool> {
        Some(self.rank.get(a)? < self.rank.get(b)?)
    }
}

/// Compares roots by their letter expansions: `α_1 + 2α_3` expands to the
/// index list `[1, 3, 3]`, and expansions are compared lexicographically.
/// This puts `α_1 ≺ α_1 + α_2 ≺ α_2`.
pub fn letter_expansion_cmp(a: &Root, b: &Root) -> Ordering {
    let expand = |r: &Root| -> Vec<usize> {
        r.coeffs()
            .iter()
            .enumerate()
            .flat_map(|(i, &c)| std::iter::repeat_n(i, c.unsigned_abs() as usize))
            .collect()
    };
    expand(a).cmp(&expand(b)).then_with(|| a.cmp(b))
}

/// The deterministic precedence used throughout: letter-expansion order.
pub fn default_precedence(roots: &[Root]) -> Precedence {
    let mut order: Vec<Root> = roots.to_vec();
    order.sort_by(letter_expansion_cmp);
    order.dedup();
    Precedence::from_order(order)
}

/// Strict partial order `<_C`, stored as a reachability matrix.
#[derive(Clone, Debug)]
pub struct ClassOrder {
    roots: Vec<Root>,
    index: HashMap<Root, usize>,
    reach: Vec<Vec<bool>>,
}

impl ClassOrder {
    /// `a <_C b`; false when either root is outside the domain.
    pub fn less(&self, a: &Root, b: &Root) -> bool {
        match (self.index.get(a), self.index.get(b)) {
            (Some(&x), Some(&y)) => self.reach[x][y],
            _ => false,
        }
    }

    pub fn comparable(&self, a: &Root, b: &Root) -> bool {
        self.less(a, b) || self.less(b, a)
    }

    /// All pairs `(a, b)` with `a <_C b`.
    pub fn pairs(&self) -> BTreeSet<(Root, Root)> {
        let mut out = BTreeSet::new();
        for (x, row) in self.reach.iter().enumerate() {
            for (y, &r) in row.iter().enumerate() {
                if r {
                    out.insert((self.roots[x].clone(), self.roots[y].clone()));
                }
            }
        }
        out
    }

    pub fn domain(&self) -> &[Root] {
        &self.roots
    }

    pub fn is_irreflexive(&self) -> bool {
        (0..self.roots.len()).all(|k| !self.reach[k][k])
    }
}

impl PartialEq for ClassOrder {
    fn eq(&self, other: &Self) -> bool {
        self.pairs() == other.pairs()
    }
}

/// Builds `≤_C` from every root sequence of a class.
pub fn class_order(g: &CoxeterGraph, class: &[RootSequence]) -> ClassOrder {
    let roots: Vec<Root> = class.first().map(|s| s.roots.clone()).unwrap_or_default();
    let index: HashMap<Root, usize> = roots
        .iter()
        .enumerate()
        .map(|(k, r)| (r.clone(), k))
        .collect();
    let n = roots.len();
    let mut reach = vec![vec![false; n]; n];
    for seq in class {
        let ids: Vec<usize> = seq.roots.iter().map(|r| index[r]).collect();
        for a in 0..n {
            for b in a + 1..n {
                if !g.orthogonal(&seq.roots[a], &seq.roots[b]) {
                    reach[ids[a]][ids[b]] = true;
                }
            }
        }
    }
    for k in 0..n {
        for a in 0..n {
            if reach[a][k] {
                let via = reach[k].clone();
                for (b, &r) in via.iter().enumerate() {
                    reach[a][b] |= r;
                }
            }
        }
    }
    ClassOrder {
        roots,
        index,
        reach,
    }
}

/// Closure of one root sequence under swaps of adjacent orthogonal entries,
/// which is how short braid moves act on root sequences.
pub fn sequence_class_closure(g: &CoxeterGraph, seq: &RootSequence) -> Vec<Vec<Root>> {
    let mut seen: HashSet<Vec<Root>> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(seq.roots.clone());
    queue.push_back(seq.roots.clone());
    let mut out = Vec::new();
    while let Some(s) = queue.pop_front() {
        for p in 0..s.len().saturating_sub(1) {
            if g.orthogonal(&s[p], &s[p + 1]) {
                let mut t = s.clone();
                t.swap(p, p + 1);
                if seen.insert(t.clone()) {
                    queue.push_back(t);
                }
            }
        }
        out.push(s);
    }
    out.sort();
    out
}

/// `≤_C` computed from one representative plus orthogonal-swap closure.
pub fn class_order_from_representative(g: &CoxeterGraph, seq: &RootSequence) -> ClassOrder {
    let class: Vec<RootSequence> = sequence_class_closure(g, seq)
        .into_iter()
        .map(|roots| RootSequence {
            roots,
            source_word: Default::default(),
        })
        .collect();
    class_order(g, &class)
}

/// Partitions root sequences into classes under adjacent orthogonal swaps.
pub fn root_sequence_classes(g: &CoxeterGraph, sequences: &[RootSequence]) -> Vec<Vec<Vec<Root>>> {
    let mut assigned: HashSet<Vec<Root>> = HashSet::new();
    let mut out = Vec::new();
    let mut all: Vec<&RootSequence> = sequences.iter().collect();
    all.sort_by(|a, b| a.roots.cmp(&b.roots));
    for seq in all {
        if assigned.contains(&seq.roots) {
            continue;
        }
        let class = sequence_class_closure(g, seq);
        assigned.extend(class.iter().cloned());
        out.push(class);
    }
    out
}

/// A labelling of the contractible triples of an element by bits.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FwSignature {
    pub bits: BTreeMap<Triple, u8>,
}

impl FwSignature {
    pub fn get(&self, t: &Triple) -> Option<u8> {
        self.bits.get(t).copied()
    }

    /// Restriction to a subset of the domain.
    pub fn restrict(&self, ts: &[Triple]) -> Vec<Option<u8>> {
        ts.iter().map(|t| self.get(t)).collect()
    }
}

impl Serialize for FwSignature {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.bits.len()))?;
        for (t, b) in &self.bits {
            map.serialize_entry(&t.key(), b)?;
        }
        map.end()
    }
}

/// Signature of one class from its order, the contractible triples and a
/// precedence.
pub fn signature_from_order(
    order: &ClassOrder,
    contractible: &[Triple],
    precedence: &Precedence,
) -> Result<FwSignature> {
    let mut bits = BTreeMap::new();
    for t in contractible {
        let (a, b) = t.summands();
        if !order.comparable(a, b) {
            return Err(Error::Invariant(format!(
                "summands of contractible triple {t} are incomparable in the class order"
            )));
        }
        let by_precedence = precedence
            .precedes(a, b)
            .ok_or_else(|| Error::Invariant(format!("precedence does not cover {t}")))?;
        let bit = if order.less(a, b) == by_precedence {
            0
        } else {
            1
        };
        bits.insert(t.clone(), bit);
    }
    Ok(FwSignature { bits })
}

/// The signature of the class `class` (root sequences of `e`) under `p`.
pub fn f_w(
    g: &CoxeterGraph,
    e: &GroupElement,
    class: &[RootSequence],
    p: &Precedence,
) -> Result<FwSignature> {
    let profile = ElementProfile::new(g, e, DEFAULT_WORD_CAP)?;
    signature_from_order(&class_order(g, class), &profile.contractible, p)
}

/// Signatures of every commutation class of an element.
#[derive(Clone, Debug, Serialize)]
pub struct SignatureImage {
    /// Number of contractible triples.
    pub n: usize,
    /// One signature per commutation class, in class order.
    pub per_class: Vec<FwSignature>,
    pub image: BTreeSet<FwSignature>,
}

impl SignatureImage {
    pub fn class_count(&self) -> usize {
        self.per_class.len()
    }

    pub fn is_injective(&self) -> bool {
        self.image.len() == self.per_class.len()
    }

    pub fn is_surjective(&self) -> bool {
        u32::try_from(self.n)
            .ok()
            .and_then(|n| 1usize.checked_shl(n))
            .is_some_and(|full| self.image.len() == full)
    }

    /// Whether every assignment of bits to `ts` is realized.
    pub fn separates(&self, ts: &[Triple]) -> bool {
        let restrictions: BTreeSet<Vec<Option<u8>>> =
            self.image.iter().map(|s| s.restrict(ts)).collect();
        u32::try_from(ts.len())
            .ok()
            .and_then(|n| 1usize.checked_shl(n))
            .is_some_and(|full| restrictions.len() == full)
    }
}

/// Signature image of a profiled element under a chosen precedence.
pub fn image_with(
    g: &CoxeterGraph,
    profile: &ElementProfile,
    p: &Precedence,
) -> Result<SignatureImage> {
    let per_class = (0..profile.class_count())
        .map(|c| {
            let order = class_order(g, &profile.class_sequences(c));
            signature_from_order(&order, &profile.contractible, p)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SignatureImage {
        n: profile.n(),
        image: per_class.iter().cloned().collect(),
        per_class,
    })
}

pub fn f_w_image(g: &CoxeterGraph, e: &GroupElement) -> Result<SignatureImage> {
    let profile = ElementProfile::new(g, e, DEFAULT_WORD_CAP)?;
    image_with(g, &profile, &default_precedence(&profile.inversion_set))
}

pub fn is_injective(g: &CoxeterGraph, e: &GroupElement) -> Result<bool> {
    Ok(f_w_image(g, e)?.is_injective())
}

pub fn is_surjective(g: &CoxeterGraph, e: &GroupElement) -> Result<bool> {
    Ok(f_w_image(g, e)?.is_surjective())
}

/// Whether every `{0,1}`-assignment on `ts` extends to a realized signature.
pub fn separates(g: &CoxeterGraph, e: &GroupElement, ts: &[Triple]) -> Result<bool> {
    let profile = ElementProfile::new(g, e, DEFAULT_WORD_CAP)?;
    for t in ts {
        if !profile.is_contractible(t).unwrap_or(false) {
            return Err(Error::NotContractibleTriple);
        }
    }
    let image = image_with(g, &profile, &default_precedence(&profile.inversion_set))?;
    Ok(image.separates(ts))
}
