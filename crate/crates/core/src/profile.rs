//! Per-element cache of everything derived from the full reduced-word set.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{CoxeterGraph, GroupElement, Root, Word};
use crate::inversions::{pairwise_disjoint, root_sequence, triples_in, RootSequence, Triple};
use crate::words::{reduced_words, short_move_components};

/// Reduced words, root sequences, commutation classes and triples of one
/// element. `words` is sorted; `sequences[k]` is the root sequence of
/// `words[k]`; `classes` lists word indices per commutation class, ordered by
/// least member.
#[derive(Clone, Debug)]
pub struct ElementProfile {
    pub element: GroupElement,
    pub words: Vec<Word>,
    pub sequences: Vec<RootSequence>,
    pub class_of: Vec<usize>,
    pub classes: Vec<Vec<usize>>,
    pub inversion_set: Vec<Root>,
    pub triples: Vec<Triple>,
    pub contractible: Vec<Triple>,
}

impl ElementProfile {
    pub fn new(g: &CoxeterGraph, e: &GroupElement, cap: usize) -> Result<ElementProfile> {
        let words = reduced_words(g, e, cap)?;
        let sequences = words
            .iter()
            .map(|w| root_sequence(g, w))
            .collect::<Result<Vec<_>>>()?;
        let (class_of, classes) = short_move_components(g, &words);
        let mut inversion_set = sequences[0].roots.clone();
        inversion_set.sort();
        let triples = triples_in(&inversion_set);
        let mut contractible = BTreeSet::new();
        for seq in &sequences {
            for window in seq.roots.windows(3) {
                contractible.extend(Triple::from_window(window));
            }
        }
        Ok(ElementProfile {
            element: e.clone(),
            words,
            sequences,
            class_of,
            classes,
            inversion_set,
            triples,
            contractible: contractible.into_iter().collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.contractible.len()
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn is_freely_braided(&self) -> bool {
        pairwise_disjoint(&self.contractible)
    }

    pub fn is_inversion_triple(&self, t: &Triple) -> bool {
        self.triples.binary_search(t).is_ok()
    }

    pub fn is_contractible(&self, t: &Triple) -> Result<bool> {
        if !self.is_inversion_triple(t) {
            return Err(Error::NotInversionTriple);
        }
        Ok(self.contractible.binary_search(t).is_ok())
    }

    /// Whether the simple root `α_i` lies in a contractible triple.
    pub fn simple_root_in_contractible(&self, g: &CoxeterGraph, i: usize) -> bool {
        let alpha = g.simple_root(i);
        self.contractible.iter().any(|t| t.contains(&alpha))
    }

    /// Root sequences of one commutation class.
    pub fn class_sequences(&self, class: usize) -> Vec<RootSequence> {
        self.classes[class]
            .iter()
            .map(|&k| self.sequences[k].clone())
            .collect()
    }

    pub fn class_words(&self, class: usize) -> Vec<Word> {
        self.classes[class]
            .iter()
            .map(|&k| self.words[k].clone())
            .collect()
    }

    pub fn word_index(&self, w: &Word) -> Option<usize> {
        self.words.binary_search(w).ok()
    }
}
