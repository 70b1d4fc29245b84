//! Exhaustive verification of the structural laws over every element up to a
//! given length.
//!
//! Each check is evaluated per element. The first failing element in the
//! canonical order (length, then matrix entries) is kept as the
//! counterexample.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::contraction::{
    close_words, close_words_via, contracted_rex_of, delete_d_traced, fc_projection_traced,
    max_braid_terms, unique_braid_sequence, weak_order_step_with,
};
use crate::error::{Error, Result};
use crate::graph::{enumerate_elements, CoxeterGraph, GroupElement, Word};
use crate::inversions::{inversion_set, raw_root_sequence, Triple};
use crate::profile::ElementProfile;
use crate::signature::{
    class_order, class_order_from_representative, default_precedence, image_with,
    root_sequence_classes,
};
use crate::words::{
    apply_unchecked, has_iji_subword, is_reduced, moves_unchecked, reduced_words_from, MoveKind,
};

#[derive(Clone, Copy, Debug)]
pub struct Budgets {
    pub elements: usize,
    pub words: usize,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            elements: 1_000_000,
            words: 1_000_000,
        }
    }
}

macro_rules! checks {
    ($($variant:ident => $name:literal,)*) => {
        #[derive(Clone, Copy, Debug, PartialEq, Eq)]
        pub enum Check { $($variant,)* }

        impl Check {
            pub const ALL: &'static [Check] = &[$(Check::$variant,)*];

            pub fn name(self) -> &'static str {
                match self { $(Check::$variant => $name,)* }
            }
        }
    };
}

checks! {
    FormPreservation => "form-preservation",
    RootDichotomy => "root-dichotomy",
    ReflectionInvolution => "reflection-involution",
    LengthConsistency => "length-consistency",
    MatsumotoTits => "braid-move-connectivity",
    ShortMoveRootSwap => "short-move-root-swap",
    OrthogonalImpliesShort => "orthogonal-neighbours-imply-short-move",
    LongMoveRootSwap => "long-move-root-swap",
    SumImpliesIji => "sum-pattern-implies-iji-block",
    ConsecutiveTripleMiddle => "consecutive-triple-middle-is-sum",
    RepresentativeIndependence => "inversion-set-representative-independence",
    ClassCountBound => "class-count-bound",
    ClassCountEquality => "class-count-equality-iff-freely-braided",
    SignatureInjective => "signature-injective",
    SurjectivityPrecedence => "surjectivity-independent-of-precedence",
    ClassOrderWellDefined => "class-order-well-defined",
    WordSequenceClasses => "word-and-root-sequence-class-counts-agree",
    FullyCommutativeEquivalence => "fully-commutative-criteria-agree",
    FullyCommutativeFreelyBraided => "fully-commutative-implies-freely-braided",
    ContractedUniqueness => "contracted-expression-unique-braid-sequence",
    CloseWordsRepresentClasses => "close-words-represent-classes",
    ClosenessPreservesElement => "closeness-preserves-element",
    ClosenessPreservesContracted => "closeness-preserves-contractedness",
    WeakOrderStep => "weak-order-step",
    DeletionCloseWords => "deletion-close-words",
    DeletionContracted => "deletion-preserves-contractedness",
    ProjectionFullyCommutative => "projection-is-fully-commutative",
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Outcome {
    Pass,
    Fail(String),
    Budget,
    NotApplicable,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    BudgetExceeded,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub length: usize,
    pub word: Vec<String>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub status: Status,
    /// Elements on which the check applied and completed.
    pub elements: usize,
    pub counterexample: Option<Counterexample>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub max_len: usize,
    pub elements: usize,
    pub element_budget_exceeded: bool,
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn failed(&self) -> bool {
        self.checks.iter().any(|c| c.status == Status::Fail)
    }

    pub fn budget_exceeded(&self) -> bool {
        self.element_budget_exceeded
            || self
                .checks
                .iter()
                .any(|c| c.status == Status::BudgetExceeded)
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

struct Outcomes(Vec<Outcome>);

impl Outcomes {
    fn new() -> Self {
        Outcomes(vec![Outcome::NotApplicable; Check::ALL.len()])
    }

    fn set(&mut self, check: Check, outcome: Outcome) {
        self.0[check as usize] = outcome;
    }

    fn record(&mut self, check: Check, result: Result<Option<String>>) {
        let outcome = match result {
            Ok(None) => Outcome::Pass,
            Ok(Some(msg)) => Outcome::Fail(msg),
            Err(e) if e.is_budget() => Outcome::Budget,
            Err(e) => Outcome::Fail(e.to_string()),
        };
        self.set(check, outcome);
    }
}

fn fail_if(cond: bool, msg: impl FnOnce() -> String) -> Option<String> {
    cond.then(msg)
}

/// Runs every check on every element of length at most `max_len`.
pub fn verify_suite(g: &CoxeterGraph, max_len: usize, budgets: Budgets) -> VerifyReport {
    let layers = match enumerate_elements(g, max_len, budgets.elements) {
        Ok(layers) => layers,
        Err(_) => {
            return VerifyReport {
                max_len,
                elements: 0,
                element_budget_exceeded: true,
                checks: Check::ALL
                    .iter()
                    .map(|c| CheckResult {
                        name: c.name(),
                        status: Status::BudgetExceeded,
                        elements: 0,
                        counterexample: None,
                    })
                    .collect(),
            };
        }
    };
    let elements: Vec<&GroupElement> = layers.iter().flatten().collect();
    let per_element: Vec<Outcomes> = elements
        .par_iter()
        .map(|e| check_element(g, e, budgets.words))
        .collect();

    let checks = Check::ALL
        .iter()
        .map(|&check| {
            let mut result = CheckResult {
                name: check.name(),
                status: Status::Pass,
                elements: 0,
                counterexample: None,
            };
            for (e, outcomes) in elements.iter().zip(&per_element) {
                match &outcomes.0[check as usize] {
                    Outcome::Pass => result.elements += 1,
                    Outcome::Fail(detail) => {
                        result.elements += 1;
                        if result.counterexample.is_none() {
                            result.status = Status::Fail;
                            result.counterexample = Some(Counterexample {
                                length: e.length(),
                                word: g.word_names(&e.reduced_word(g)),
                                detail: detail.clone(),
                            });
                        }
                    }
                    Outcome::Budget => {
                        if result.status == Status::Pass {
                            result.status = Status::BudgetExceeded;
                        }
                    }
                    Outcome::NotApplicable => {}
                }
            }
            result
        })
        .collect();

    VerifyReport {
        max_len,
        elements: elements.len(),
        element_budget_exceeded: false,
        checks,
    }
}

fn check_element(g: &CoxeterGraph, e: &GroupElement, cap: usize) -> Outcomes {
    let mut out = Outcomes::new();
    out.record(Check::FormPreservation, Ok(form_preservation(g, e)));
    out.record(Check::RootDichotomy, Ok(root_dichotomy(g, e)));

    let profile = match ElementProfile::new(g, e, cap) {
        Ok(p) => p,
        Err(err) => {
            let outcome = if err.is_budget() {
                Outcome::Budget
            } else {
                Outcome::Fail(err.to_string())
            };
            for &c in &Check::ALL[2..] {
                out.set(c, outcome.clone());
            }
            return out;
        }
    };
    let p = &profile;
    out.record(Check::ReflectionInvolution, Ok(reflection_involution(g, p)));
    out.record(Check::LengthConsistency, length_consistency(g, p));
    out.record(Check::MatsumotoTits, matsumoto_tits(g, p, cap));
    out.record(Check::ShortMoveRootSwap, Ok(short_move_root_swap(g, p)));
    out.record(
        Check::OrthogonalImpliesShort,
        Ok(orthogonal_implies_short(g, p)),
    );
    out.record(Check::LongMoveRootSwap, Ok(long_move_root_swap(g, p)));
    out.record(Check::SumImpliesIji, Ok(sum_implies_iji(g, p)));
    out.record(
        Check::ConsecutiveTripleMiddle,
        Ok(consecutive_triple_middle(p)),
    );
    out.record(
        Check::RepresentativeIndependence,
        Ok(representative_independence(g, p)),
    );
    out.record(Check::ClassCountBound, Ok(class_count_bound(p)));
    out.record(Check::ClassCountEquality, Ok(class_count_equality(p)));
    out.record(Check::SignatureInjective, signature_injective(g, p));
    out.record(Check::SurjectivityPrecedence, surjectivity_precedence(g, p));
    out.record(
        Check::ClassOrderWellDefined,
        Ok(class_order_well_defined(g, p)),
    );
    out.record(Check::WordSequenceClasses, Ok(word_sequence_classes(g, p)));
    out.record(Check::FullyCommutativeEquivalence, Ok(fc_equivalence(g, p)));
    out.record(
        Check::FullyCommutativeFreelyBraided,
        Ok(fail_if(
            p.class_count() == 1 && !p.is_freely_braided(),
            || "fully commutative but not freely braided".into(),
        )),
    );
    out.record(
        Check::ClosenessPreservesElement,
        closeness_preserves_element(g, p),
    );

    if p.is_freely_braided() {
        out.record(Check::ContractedUniqueness, contracted_uniqueness(g, p));
        out.record(Check::CloseWordsRepresentClasses, close_words_classes(g, p));
        out.record(
            Check::ClosenessPreservesContracted,
            closeness_preserves_contracted(g, p, cap),
        );
        out.record(Check::WeakOrderStep, weak_order_steps(g, p, cap));
        out.record(Check::DeletionCloseWords, deletion_close_words(g, p, cap));
        out.record(Check::DeletionContracted, deletion_contracted(g, p, cap));
        out.record(Check::ProjectionFullyCommutative, projection_fc(g, p, cap));
    }
    out
}

fn form_preservation(g: &CoxeterGraph, e: &GroupElement) -> Option<String> {
    fail_if(!e.preserves_form(g), || {
        "matrix does not preserve the Coxeter form".into()
    })
}

fn root_dichotomy(g: &CoxeterGraph, e: &GroupElement) -> Option<String> {
    (0..g.rank()).find_map(|j| {
        let col = e.column(j);
        let ok = col.iter().all(|&c| c >= 0) || col.iter().all(|&c| c <= 0);
        fail_if(!ok, || format!("w(α_{j}) = {col:?} has mixed signs"))
    })
}

fn reflection_involution(g: &CoxeterGraph, p: &ElementProfile) -> Option<String> {
    for r in &p.inversion_set {
        for i in 0..g.rank() {
            let mut v = r.coeffs().to_vec();
            g.reflect_in_place(i, &mut v);
            g.reflect_in_place(i, &mut v);
            if v != r.coeffs() {
                return Some(format!("s_{i} s_{i} moves {r}"));
            }
        }
    }
    None
}

fn length_consistency(g: &CoxeterGraph, p: &ElementProfile) -> Result<Option<String>> {
    let e = &p.element;
    if p.inversion_set.len() != e.length() {
        return Ok(Some(format!(
            "length {} but {} inversions",
            e.length(),
            p.inversion_set.len()
        )));
    }
    if let Some(r) = p
        .inversion_set
        .iter()
        .find(|r| !e.apply_root(r).is_negative())
    {
        return Ok(Some(format!("inversion {r} is not sent negative")));
    }
    for w in &p.words {
        if g.element_of(w)?.length() != w.len() || !is_reduced(g, w)? {
            return Ok(Some(format!("reduced word {w} misjudged")));
        }
        for i in 0..g.rank() {
            let longer = w.with_suffix(i);
            let x = g.element_of(&longer)?;
            let reduced = is_reduced(g, &longer)?;
            if x.length() > longer.len() || (x.length() == longer.len()) != reduced {
                return Ok(Some(format!("word {longer} has length {}", x.length())));
            }
        }
    }
    Ok(None)
}

fn matsumoto_tits(g: &CoxeterGraph, p: &ElementProfile, cap: usize) -> Result<Option<String>> {
    let last = p.words.last().expect("at least one reduced word");
    let from_last = reduced_words_from(g, last, cap)?;
    Ok(fail_if(from_last != p.words, || {
        format!(
            "closure from {last} differs from closure from {}",
            p.words[0]
        )
    }))
}

fn short_move_root_swap(g: &CoxeterGraph, p: &ElementProfile) -> Option<String> {
    for (w, seq) in p.words.iter().zip(&p.sequences) {
        let n = w.len();
        for m in moves_unchecked(g, w) {
            if m.kind != MoveKind::Short {
                continue;
            }
            let moved = apply_unchecked(w, m);
            let Some(k) = p.word_index(&moved) else {
                return Some(format!("short move {m} on {w} leaves the reduced words"));
            };
            let other = &p.sequences[k].roots;
            let a = n - 2 - m.position;
            let mut expected = seq.roots.clone();
            expected.swap(a, a + 1);
            if *other != expected || !g.orthogonal(&seq.roots[a], &seq.roots[a + 1]) {
                return Some(format!("short move {m} on {w}"));
            }
        }
    }
    None
}

fn orthogonal_implies_short(g: &CoxeterGraph, p: &ElementProfile) -> Option<String> {
    for (w, seq) in p.words.iter().zip(&p.sequences) {
        let n = w.len();
        for a in 0..n.saturating_sub(1) {
            if g.orthogonal(&seq.roots[a], &seq.roots[a + 1]) {
                let pos = n - 2 - a;
                if !g.commute(w.letters()[pos], w.letters()[pos + 1]) {
                    return Some(format!("orthogonal entries {a},{} in {w}", a + 1));
                }
            }
        }
    }
    None
}

fn long_move_root_swap(g: &CoxeterGraph, p: &ElementProfile) -> Option<String> {
    for (w, seq) in p.words.iter().zip(&p.sequences) {
        let n = w.len();
        for m in moves_unchecked(g, w) {
            if m.kind != MoveKind::Long {
                continue;
            }
            let moved = apply_unchecked(w, m);
            let Some(k) = p.word_index(&moved) else {
                return Some(format!("long move {m} on {w} leaves the reduced words"));
            };
            let other = &p.sequences[k].roots;
            let a = n - 3 - m.position;
            let r = &seq.roots;
            let mut expected = r.clone();
            expected.swap(a, a + 2);
            let sum_ok = r[a].checked_add(&r[a + 2]).as_ref() == Some(&r[a + 1]);
            if *other != expected || !sum_ok {
                return Some(format!("long move {m} on {w}"));
            }
        }
    }
    None
}

fn sum_implies_iji(g: &CoxeterGraph, p: &ElementProfile) -> Option<String> {
    for (w, seq) in p.words.iter().zip(&p.sequences) {
        let n = w.len();
        let l = w.letters();
        for a in 0..n.saturating_sub(2) {
            let r = &seq.roots;
            if r[a].checked_add(&r[a + 2]).as_ref() == Some(&r[a + 1]) {
                let pos = n - 3 - a;
                if !(l[pos] == l[pos + 2] && g.is_edge(l[pos], l[pos + 1])) {
                    return Some(format!("sum pattern at {a} in {w} without an iji block"));
                }
            }
        }
    }
    None
}

fn consecutive_triple_middle(p: &ElementProfile) -> Option<String> {
    for seq in &p.sequences {
        for win in seq.roots.windows(3) {
            if let Some(t) = Triple::from_window(win) {
                if t.sum() != &win[1] {
                    return Some(format!("consecutive triple {t} with middle {}", win[1]));
                }
            }
        }
    }
    None
}

fn representative_independence(g: &CoxeterGraph, p: &ElementProfile) -> Option<String> {
    let reference = inversion_set(g, &p.element);
    for (w, seq) in p.words.iter().zip(&p.sequences) {
        let mut roots = seq.roots.clone();
        roots.sort();
        if roots != reference {
            return Some(format!("inversion set from {w} differs"));
        }
    }
    None
}

fn pow2(n: usize) -> Option<usize> {
    u32::try_from(n).ok().and_then(|n| 1usize.checked_shl(n))
}

fn class_count_bound(p: &ElementProfile) -> Option<String> {
    let bound = pow2(p.n());
    fail_if(bound.is_some_and(|b| p.class_count() > b), || {
        format!("{} classes exceed 2^{}", p.class_count(), p.n())
    })
}

fn class_count_equality(p: &ElementProfile) -> Option<String> {
    let equal = pow2(p.n()) == Some(p.class_count());
    fail_if(equal != p.is_freely_braided(), || {
        format!(
            "{} classes, N = {}, freely braided = {}",
            p.class_count(),
            p.n(),
            p.is_freely_braided()
        )
    })
}

fn signature_injective(g: &CoxeterGraph, p: &ElementProfile) -> Result<Option<String>> {
    let prec = default_precedence(&p.inversion_set);
    for (label, prec) in [("default", prec.clone()), ("reversed", prec.reversed())] {
        let image = image_with(g, p, &prec)?;
        if !image.is_injective() {
            return Ok(Some(format!(
                "{} classes but {} signatures under {label} precedence",
                image.class_count(),
                image.image.len()
            )));
        }
    }
    Ok(None)
}

fn surjectivity_precedence(g: &CoxeterGraph, p: &ElementProfile) -> Result<Option<String>> {
    let prec = default_precedence(&p.inversion_set);
    let forward = image_with(g, p, &prec)?.is_surjective();
    let backward = image_with(g, p, &prec.reversed())?.is_surjective();
    Ok(fail_if(
        forward != backward || forward != p.is_freely_braided(),
        || {
            format!(
                "surjective {forward} / {backward} under default / reversed, freely braided {}",
                p.is_freely_braided()
            )
        },
    ))
}

fn class_order_well_defined(g: &CoxeterGraph, p: &ElementProfile) -> Option<String> {
    for c in 0..p.class_count() {
        let seqs = p.class_sequences(c);
        let from_all = class_order(g, &seqs);
        if !from_all.is_irreflexive() {
            return Some(format!("class order of class {c} has a cycle"));
        }
        for s in &seqs {
            if class_order_from_representative(g, s) != from_all {
                return Some(format!(
                    "class order from {} differs from the one built on the whole class",
                    s.source_word
                ));
            }
        }
    }
    None
}

fn word_sequence_classes(g: &CoxeterGraph, p: &ElementProfile) -> Option<String> {
    let by_sequences = root_sequence_classes(g, &p.sequences);
    if by_sequences.len() != p.class_count() {
        return Some(format!(
            "{} word classes but {} root-sequence classes",
            p.class_count(),
            by_sequences.len()
        ));
    }
    for c in 0..p.class_count() {
        let mut mapped: Vec<_> = p.class_sequences(c).into_iter().map(|s| s.roots).collect();
        mapped.sort();
        if !by_sequences.contains(&mapped) {
            return Some(format!(
                "word class {c} does not map onto a root-sequence class"
            ));
        }
    }
    None
}

fn fc_equivalence(g: &CoxeterGraph, p: &ElementProfile) -> Option<String> {
    let criteria = [
        p.class_count() == 1,
        p.triples.is_empty(),
        p.contractible.is_empty(),
        !p.words.iter().any(|w| has_iji_subword(g, w)),
    ];
    fail_if(criteria.iter().any(|&c| c != criteria[0]), || {
        format!("criteria disagree: {criteria:?}")
    })
}

fn closeness_preserves_element(g: &CoxeterGraph, p: &ElementProfile) -> Result<Option<String>> {
    for w in &p.words {
        for x in close_words(g, w) {
            if g.element_of(&x)? != p.element {
                return Ok(Some(format!(
                    "{x} is close to {w} but differs in the group"
                )));
            }
        }
    }
    Ok(None)
}

fn contracted_words(g: &CoxeterGraph, p: &ElementProfile) -> Vec<Word> {
    p.words
        .iter()
        .filter(|w| max_braid_terms(g, w) == p.n())
        .cloned()
        .collect()
}

fn contracted_uniqueness(g: &CoxeterGraph, p: &ElementProfile) -> Result<Option<String>> {
    contracted_rex_of(g, p)?;
    for w in contracted_words(g, p) {
        if let Err(e) = unique_braid_sequence(g, &w, p.n()) {
            return Ok(Some(e.to_string()));
        }
    }
    Ok(None)
}

fn close_words_classes(g: &CoxeterGraph, p: &ElementProfile) -> Result<Option<String>> {
    let rex = contracted_rex_of(g, p)?;
    let seq = unique_braid_sequence(g, &rex, p.n())?;
    let close = close_words_via(&rex, &seq);
    if Some(close.len()) != pow2(p.n()) {
        return Ok(Some(format!(
            "{} close words, expected 2^{}",
            close.len(),
            p.n()
        )));
    }
    let mut hit = BTreeSet::new();
    for x in &close {
        let Some(k) = p.word_index(x) else {
            return Ok(Some(format!(
                "close word {x} is not a reduced word of the element"
            )));
        };
        if !hit.insert(p.class_of[k]) {
            return Ok(Some(format!("two close words of {rex} share a class")));
        }
    }
    Ok(fail_if(hit.len() != p.class_count(), || {
        format!("close words of {rex} miss a commutation class")
    }))
}

fn closeness_preserves_contracted(
    g: &CoxeterGraph,
    p: &ElementProfile,
    _cap: usize,
) -> Result<Option<String>> {
    for w in contracted_words(g, p) {
        for x in close_words(g, &w) {
            let contracted = p.word_index(&x).is_some() && max_braid_terms(g, &x) == p.n();
            if !contracted {
                return Ok(Some(format!(
                    "{x} is close to contracted {w} but not contracted"
                )));
            }
        }
    }
    Ok(None)
}

fn weak_order_steps(g: &CoxeterGraph, p: &ElementProfile, cap: usize) -> Result<Option<String>> {
    for i in 0..g.rank() {
        let report = weak_order_step_with(g, p, i, cap)?;
        if let Some(v) = report.violations.first() {
            return Ok(Some(format!("letter {}: {v}", g.name(i))));
        }
    }
    Ok(None)
}

/// Every word close to `D(w)` is `D(j)` for some `j` close to `w` via a
/// sub-sequence that leaves the last block alone.
fn deletion_close_words(
    g: &CoxeterGraph,
    p: &ElementProfile,
    cap: usize,
) -> Result<Option<String>> {
    if p.n() == 0 {
        return Ok(None);
    }
    for w in contracted_words(g, p) {
        let d = delete_d_traced(g, &w, 1, cap)?.result;
        let seq = unique_braid_sequence(g, &w, p.n())?;
        let mut head = seq.clone();
        head.blocks.pop();
        let images: BTreeSet<Word> = close_words_via(&w, &head)
            .iter()
            .map(|j| delete_d_traced(g, j, 1, cap).map(|t| t.result))
            .collect::<Result<_>>()?;
        for x in close_words(g, &d) {
            if !images.contains(&x) {
                return Ok(Some(format!(
                    "{x} is close to D({w}) = {d} but is not D(j)"
                )));
            }
        }
    }
    Ok(None)
}

fn deletion_contracted(g: &CoxeterGraph, p: &ElementProfile, cap: usize) -> Result<Option<String>> {
    for w in contracted_words(g, p) {
        match delete_d_traced(g, &w, p.n(), cap) {
            Ok(trace) => {
                if let Some(s) = trace.steps.iter().find(|s| s.n_after + 1 != s.n_before) {
                    return Ok(Some(format!("step {s:?} did not lower N by one")));
                }
            }
            Err(e) if e.is_budget() => return Err(e),
            Err(e) => return Ok(Some(format!("deleting from {w}: {e}"))),
        }
    }
    Ok(None)
}

fn projection_fc(g: &CoxeterGraph, p: &ElementProfile, cap: usize) -> Result<Option<String>> {
    for w in contracted_words(g, p) {
        match fc_projection_traced(g, &w, cap) {
            Ok(trace) => {
                let image = g.element_of(&trace.result)?;
                let raw = raw_root_sequence(g, &trace.result);
                let reduced = image.length() == trace.result.len()
                    && raw.iter().all(|r| r.iter().all(|&c| c >= 0));
                let q = ElementProfile::new(g, &image, cap)?;
                if !reduced || q.class_count() != 1 {
                    return Ok(Some(format!("projection of {w} is {}", trace.result)));
                }
            }
            Err(e) if e.is_budget() => return Err(e),
            Err(e) => return Ok(Some(format!("projecting {w}: {e}"))),
        }
    }
    Ok(None)
}

/// Exposes the error type for callers that want to re-run a single element.
pub fn element_checks(
    g: &CoxeterGraph,
    e: &GroupElement,
    cap: usize,
) -> Vec<(&'static str, std::result::Result<bool, Error>)> {
    let outcomes = check_element(g, e, cap);
    Check::ALL
        .iter()
        .zip(outcomes.0)
        .filter_map(|(c, o)| match o {
            Outcome::Pass => Some((c.name(), Ok(true))),
            Outcome::Fail(_) => Some((c.name(), Ok(false))),
            Outcome::Budget => Some((c.name(), Err(Error::CapExceeded { cap }))),
            Outcome::NotApplicable => None,
        })
        .collect()
}
