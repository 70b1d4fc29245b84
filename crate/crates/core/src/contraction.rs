//! Braid sequences, contracted reduced expressions, close words and the
//! deletion operator that projects freely braided elements onto fully
//! commutative ones.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{CoxeterGraph, GroupElement, Letter, Root, Word};
use crate::profile::ElementProfile;
use crate::words::{apply_unchecked, commutation_class_of, BraidMove, MoveKind, DEFAULT_WORD_CAP};

/// Disjoint `iji` blocks (with `m_ij = 3`) in a word, by start position.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct BraidSequence {
    pub blocks: Vec<usize>,
}

impl BraidSequence {
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Applies a long move inside each block.
    pub fn apply(&self, w: &Word) -> Word {
        self.blocks.iter().fold(w.clone(), |acc, &p| {
            apply_unchecked(
                &acc,
                BraidMove {
                    position: p,
                    kind: MoveKind::Long,
                },
            )
        })
    }

    /// Every sub-sequence, indexed by bitmask over `blocks`.
    pub fn subsequences(&self) -> Vec<BraidSequence> {
        let p = self.blocks.len();
        (0..1usize << p)
            .map(|mask| BraidSequence {
                blocks: (0..p)
                    .filter(|k| mask >> k & 1 == 1)
                    .map(|k| self.blocks[k])
                    .collect(),
            })
            .collect()
    }
}

fn block_starts(g: &CoxeterGraph, w: &Word) -> Vec<usize> {
    let l = w.letters();
    let n = g.rank();
    (0..l.len().saturating_sub(2))
        .filter(|&p| l[p] < n && l[p + 1] < n && l[p] == l[p + 2] && g.is_edge(l[p], l[p + 1]))
        .collect()
}

/// Every list of pairwise disjoint `iji` blocks, including the empty list,
/// in lexicographic order of start positions.
pub fn braid_sequences(g: &CoxeterGraph, w: &Word) -> Vec<BraidSequence> {
    fn extend(
        starts: &[usize],
        from: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<BraidSequence>,
    ) {
        out.push(BraidSequence {
            blocks: current.clone(),
        });
        for k in from..starts.len() {
            if current.last().is_some_and(|&last| starts[k] < last + 3) {
                continue;
            }
            current.push(starts[k]);
            extend(starts, k + 1, current, out);
            current.pop();
        }
    }
    let starts = block_starts(g, w);
    let mut out = Vec::new();
    extend(&starts, 0, &mut Vec::new(), &mut out);
    out
}

/// Largest number of disjoint `iji` blocks. Blocks all have length three,
/// so taking the leftmost compatible block each time is optimal.
pub fn max_braid_terms(g: &CoxeterGraph, w: &Word) -> usize {
    let mut count = 0;
    let mut free_from = 0;
    for p in block_starts(g, w) {
        if p >= free_from {
            count += 1;
            free_from = p + 3;
        }
    }
    count
}

fn braid_sequences_with_terms(g: &CoxeterGraph, w: &Word, terms: usize) -> Vec<BraidSequence> {
    braid_sequences(g, w)
        .into_iter()
        .filter(|s| s.len() == terms)
        .collect()
}

fn contracted_given(g: &CoxeterGraph, profile: &ElementProfile, w: &Word) -> bool {
    profile.word_index(w).is_some()
        && profile.is_freely_braided()
        && max_braid_terms(g, w) == profile.n()
}

/// Reduced, freely braided, and carrying a braid sequence with `N` terms.
pub fn is_contracted(g: &CoxeterGraph, w: &Word) -> Result<bool> {
    g.check_word(w)?;
    let e = g.element_of(w)?;
    if e.length() != w.len() {
        return Ok(false);
    }
    let profile = ElementProfile::new(g, &e, DEFAULT_WORD_CAP)?;
    Ok(contracted_given(g, &profile, w))
}

/// The unique braid sequence of `w` with `terms` blocks.
pub fn unique_braid_sequence(g: &CoxeterGraph, w: &Word, terms: usize) -> Result<BraidSequence> {
    let mut found = braid_sequences_with_terms(g, w, terms);
    if found.len() != 1 {
        return Err(Error::Invariant(format!(
            "word {w} has {} braid sequences with {terms} terms, expected exactly one",
            found.len()
        )));
    }
    Ok(found.remove(0))
}

pub(crate) fn contracted_rex_of(g: &CoxeterGraph, profile: &ElementProfile) -> Result<Word> {
    if !profile.is_freely_braided() {
        return Err(Error::NotFreelyBraided);
    }
    let n = profile.n();
    let w = profile
        .words
        .iter()
        .find(|w| max_braid_terms(g, w) == n)
        .cloned()
        .ok_or_else(|| {
            Error::Invariant("freely braided element without a contracted expression".into())
        })?;
    unique_braid_sequence(g, &w, n)?;
    Ok(w)
}

/// The lexicographically least contracted reduced expression of `e`.
pub fn contracted_rex(g: &CoxeterGraph, e: &GroupElement) -> Result<Word> {
    contracted_rex_of(g, &ElementProfile::new(g, e, DEFAULT_WORD_CAP)?)
}

/// Words obtained by long-moving every block of some braid sequence of `w`.
pub fn close_words(g: &CoxeterGraph, w: &Word) -> Vec<Word> {
    let mut out: Vec<Word> = braid_sequences(g, w).iter().map(|s| s.apply(w)).collect();
    out.sort();
    out.dedup();
    out
}

/// Words close to `w` via sub-sequences of `seq`, one per subset of blocks.
pub fn close_words_via(w: &Word, seq: &BraidSequence) -> Vec<Word> {
    seq.subsequences().iter().map(|s| s.apply(w)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeletionStep {
    pub word_before: Vec<Letter>,
    pub deleted_position: usize,
    pub word_after: Vec<Letter>,
    pub n_before: usize,
    pub n_after: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeletionTrace {
    pub steps: Vec<DeletionStep>,
    pub result: Word,
}

/// Applies the deletion operator `n` times to a contracted word, checking
/// after each step that the result is contracted with `N` one smaller.
pub fn delete_d_traced(g: &CoxeterGraph, w: &Word, n: usize, cap: usize) -> Result<DeletionTrace> {
    g.check_word(w)?;
    let e = g.element_of(w)?;
    if e.length() != w.len() {
        return Err(Error::NotContracted);
    }
    let mut profile = ElementProfile::new(g, &e, cap)?;
    if !contracted_given(g, &profile, w) {
        return Err(Error::NotContracted);
    }
    if n > 0 && profile.n() == 0 {
        return Err(Error::DeletionUndefined);
    }
    if n > profile.n() {
        return Err(Error::TooManyDeletions {
            requested: n,
            available: profile.n(),
        });
    }
    let mut current = w.clone();
    let mut steps = Vec::with_capacity(n);
    for _ in 0..n {
        let n_before = profile.n();
        let seq = unique_braid_sequence(g, &current, n_before)?;
        let last = *seq
            .blocks
            .last()
            .expect("N > 0 so the sequence is nonempty");
        let deleted_position = last + 2;
        let mut letters = current.0.clone();
        letters.remove(deleted_position);
        let next = Word(letters);
        let next_element = g.element_of(&next)?;
        if next_element.length() != next.len() {
            return Err(Error::Invariant(format!(
                "deleting position {deleted_position} of {current} gave a non-reduced word"
            )));
        }
        let next_profile = ElementProfile::new(g, &next_element, cap)?;
        if !contracted_given(g, &next_profile, &next) || next_profile.n() + 1 != n_before {
            return Err(Error::Invariant(format!(
                "deleting from {current} gave {next}, which is not contracted with N = {}",
                n_before - 1
            )));
        }
        steps.push(DeletionStep {
            word_before: current.0.clone(),
            deleted_position,
            word_after: next.0.clone(),
            n_before,
            n_after: next_profile.n(),
        });
        current = next;
        profile = next_profile;
    }
    Ok(DeletionTrace {
        steps,
        result: current,
    })
}

pub fn delete_d(g: &CoxeterGraph, w: &Word, n: usize) -> Result<Word> {
    Ok(delete_d_traced(g, w, n, DEFAULT_WORD_CAP)?.result)
}

/// `D^N(w)`, checked to be a reduced word for a fully commutative element.
pub fn fc_projection_traced(g: &CoxeterGraph, w: &Word, cap: usize) -> Result<DeletionTrace> {
    g.check_word(w)?;
    let e = g.element_of(w)?;
    if e.length() != w.len() {
        return Err(Error::NotContracted);
    }
    let n = ElementProfile::new(g, &e, cap)?.n();
    let trace = delete_d_traced(g, w, n, cap)?;
    let image = g.element_of(&trace.result)?;
    let profile = ElementProfile::new(g, &image, cap)?;
    if image.length() != trace.result.len() || profile.n() != 0 || profile.class_count() != 1 {
        return Err(Error::Invariant(format!(
            "projection {} of {w} is not a reduced word of a fully commutative element",
            trace.result
        )));
    }
    Ok(trace)
}

pub fn fc_projection(g: &CoxeterGraph, w: &Word) -> Result<Word> {
    Ok(fc_projection_traced(g, w, DEFAULT_WORD_CAP)?.result)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Up,
    Down,
}

/// Which case of the weak-order analysis applied.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum StepCase {
    /// Going up, `α_i` in no contractible triple of `w s_i`.
    UpSimpleRootFree,
    /// Going up, `α_i` in some contractible triple of `w s_i`.
    UpSimpleRootInTriple,
    /// Going down, `α_i` in a contractible triple of `w`.
    DownSimpleRootInTriple,
    /// Going down, `α_i` in no contractible triple of `w`.
    DownSimpleRootFree,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StepReport {
    pub letter: Letter,
    pub direction: Direction,
    pub case: StepCase,
    pub length_before: usize,
    pub length_after: usize,
    pub n_before: usize,
    pub n_after: usize,
    pub freely_braided_after: bool,
    /// `α_i` in a contractible triple of `w s_i` (up) or of `w` (down).
    pub simple_root_in_contractible: bool,
    pub violations: Vec<String>,
}

impl StepReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Compares the behaviour of `N` and free braidedness along the edge
/// `w -> w s_i` with what the theory predicts.
pub fn check_weak_order_step(g: &CoxeterGraph, e: &GroupElement, i: Letter) -> Result<StepReport> {
    g.check_letter(i)?;
    let before = ElementProfile::new(g, e, DEFAULT_WORD_CAP)?;
    weak_order_step_with(g, &before, i, DEFAULT_WORD_CAP)
}

pub(crate) fn weak_order_step_with(
    g: &CoxeterGraph,
    before: &ElementProfile,
    i: Letter,
    cap: usize,
) -> Result<StepReport> {
    if !before.is_freely_braided() {
        return Err(Error::NotFreelyBraided);
    }
    let e = &before.element;
    let next = e.times_generator(g, i);
    let after = ElementProfile::new(g, &next, cap)?;
    let alpha = g.simple_root(i);
    let mut violations = Vec::new();
    let n_before = before.n();
    let n_after = after.n();
    let fb_after = after.is_freely_braided();

    let (direction, case, in_triple) = if next.length() < e.length() {
        let in_triple = before.simple_root_in_contractible(g, i);
        if !fb_after {
            violations.push("down-step result is not freely braided".to_string());
        }
        let expected = if in_triple { n_before - 1 } else { n_before };
        if n_after != expected {
            violations.push(format!("down-step N is {n_after}, expected {expected}"));
        }
        let case = if in_triple {
            StepCase::DownSimpleRootInTriple
        } else {
            StepCase::DownSimpleRootFree
        };
        (Direction::Down, case, in_triple)
    } else {
        let in_triple = after.simple_root_in_contractible(g, i);
        if in_triple {
            check_up_in_triple(g, before, i, &mut violations, cap)?;
            (Direction::Up, StepCase::UpSimpleRootInTriple, true)
        } else {
            for seq in &after.sequences {
                let k = seq.position(&alpha).expect("α_i is an inversion of w s_i");
                if let Some(r) = seq.roots[..k].iter().find(|r| !g.orthogonal(r, &alpha)) {
                    violations.push(format!(
                        "root {r} precedes α_{i} in a root sequence of w s_i but is not orthogonal to it"
                    ));
                    break;
                }
            }
            let mut transported: Vec<_> = before
                .contractible
                .iter()
                .filter_map(|t| t.map(|r| reflect_root(g, i, r)))
                .collect();
            transported.sort();
            if transported != after.contractible {
                violations.push(
                    "contractible triples of w s_i are not the reflections of those of w"
                        .to_string(),
                );
            }
            if !fb_after || n_after != n_before {
                violations.push(format!(
                    "up-step should keep N = {n_before} and stay freely braided, got N = {n_after}, freely braided = {fb_after}"
                ));
            }
            (Direction::Up, StepCase::UpSimpleRootFree, false)
        }
    };

    Ok(StepReport {
        letter: i,
        direction,
        case,
        length_before: e.length(),
        length_after: next.length(),
        n_before,
        n_after,
        freely_braided_after: fb_after,
        simple_root_in_contractible: in_triple,
        violations,
    })
}

fn reflect_root(g: &CoxeterGraph, i: Letter, r: &Root) -> Root {
    let mut v = r.coeffs().to_vec();
    g.reflect_in_place(i, &mut v);
    Root::from_coeffs_unchecked(v)
}

/// Position `p` with `w = u i j v`: `w[p] = i`, `w[p+1] = j` adjacent to `i`,
/// and every letter of `v` commuting with `i`.
fn split_u_i_j_v(g: &CoxeterGraph, w: &Word, i: Letter) -> Option<Letter> {
    let l = w.letters();
    (0..l.len().saturating_sub(1)).find_map(|p| {
        (l[p] == i && g.is_edge(i, l[p + 1]) && l[p + 2..].iter().all(|&x| !g.is_edge(i, x)))
            .then_some(l[p + 1])
    })
}

/// `w = u' i v1 j v2` with all of `v1`, `v2` commuting with `i`.
fn has_u_i_v_j_v_form(g: &CoxeterGraph, w: &Word, i: Letter, j: Letter) -> bool {
    let l = w.letters();
    let Some(q) = l.iter().rposition(|&x| x == i) else {
        return false;
    };
    let blocking: Vec<Letter> = l[q + 1..]
        .iter()
        .copied()
        .filter(|&x| g.is_edge(i, x))
        .collect();
    blocking == [j]
}

fn check_up_in_triple(
    g: &CoxeterGraph,
    before: &ElementProfile,
    i: Letter,
    violations: &mut Vec<String>,
    cap: usize,
) -> Result<()> {
    let witnesses: Vec<(&Word, Letter)> = before
        .words
        .iter()
        .filter_map(|w| split_u_i_j_v(g, w, i).map(|j| (w, j)))
        .collect();
    if witnesses.is_empty() {
        violations.push(format!(
            "no reduced word of w has the form u {i} j v with j adjacent to {i} and v commuting with {i}"
        ));
    }
    for (w, j) in witnesses {
        for y in commutation_class_of(g, w, cap)? {
            if !has_u_i_v_j_v_form(g, &y, i, j) {
                violations.push(format!(
                    "{y} is commutation equivalent to {w} but not of the form u' {i} v1 {j} v2"
                ));
            }
        }
    }
    Ok(())
}
