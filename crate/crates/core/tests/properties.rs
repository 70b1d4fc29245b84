mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;

use coxeter_core::analysis::{classify_graph, growth_probe, verify_suite, Budgets, Status};
use coxeter_core::contraction::{close_words, fc_projection, is_contracted, max_braid_terms};
use coxeter_core::inversions::{inversion_set, n_stat, root_sequence};
use coxeter_core::signature::root_sequence_classes;
use coxeter_core::words::{is_reduced, reduced_words, reduced_words_from, DEFAULT_WORD_CAP};
use coxeter_core::{enumerate_elements, CoxeterGraph, ElementProfile, GroupElement, Root, Word};

const CAP: usize = DEFAULT_WORD_CAP;

fn elements(g: &CoxeterGraph, max_len: usize) -> Vec<GroupElement> {
    enumerate_elements(g, max_len, 1_000_000)
        .unwrap()
        .into_iter()
        .flatten()
        .collect()
}

fn word_strategy(rank: usize, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0..rank, 0..=max_len).prop_map(Word::new)
}

/// Roots reachable from the simple roots in at most `depth` reflections.
fn orbit(g: &CoxeterGraph, depth: usize) -> Vec<Root> {
    let mut seen: BTreeSet<Root> = (0..g.rank()).map(|i| g.simple_root(i)).collect();
    let mut frontier: Vec<Root> = seen.iter().cloned().collect();
    for _ in 0..depth {
        let mut next = Vec::new();
        for r in &frontier {
            for i in 0..g.rank() {
                let s = g.reflect(i, r).unwrap();
                if seen.insert(s.clone()) {
                    next.push(s);
                }
            }
        }
        frontier = next;
    }
    seen.into_iter().collect()
}

proptest! {
    #[test]
    fn form_is_preserved_in_a3(w in word_strategy(3, 6)) {
        let g = CoxeterGraph::type_a(3);
        let e = g.element_of(&w).unwrap();
        let roots = orbit(&g, 2);
        for r in &roots {
            for s in &roots {
                let before = g.form_value(r, s).unwrap();
                let after = g.form_value(&e.apply_root(r), &e.apply_root(s)).unwrap();
                prop_assert_eq!(before, after);
            }
        }
    }

    #[test]
    fn length_matches_reducedness(w in word_strategy(4, 9), graph in 0usize..3) {
        let g = [CoxeterGraph::type_a(4), CoxeterGraph::type_d(4), CoxeterGraph::cycle(4)][graph].clone();
        let e = g.element_of(&w).unwrap();
        prop_assert!(e.length() <= w.len());
        prop_assert_eq!(e.length() == w.len(), is_reduced(&g, &w).unwrap());
        prop_assert_eq!(e.length() % 2, w.len() % 2);
    }

    #[test]
    fn reduced_word_represents_its_element(w in word_strategy(4, 10)) {
        let g = CoxeterGraph::type_d(4);
        let e = g.element_of(&w).unwrap();
        let rex = e.reduced_word(&g);
        prop_assert_eq!(rex.len(), e.length());
        prop_assert_eq!(g.element_of(&rex).unwrap(), e);
    }

    #[test]
    fn element_matches_brute_force_action(w in word_strategy(3, 8)) {
        let g = CoxeterGraph::cycle(3);
        let e = g.element_of(&w).unwrap();
        let key = common::key(&g, w.letters());
        for (j, col) in key.iter().enumerate() {
            prop_assert_eq!(&e.column(j), col);
        }
    }

    #[test]
    fn root_sequence_matches_brute_force(w in word_strategy(4, 8)) {
        let g = CoxeterGraph::type_d(4);
        prop_assume!(is_reduced(&g, &w).unwrap());
        let ours: Vec<Vec<i64>> = root_sequence(&g, &w)
            .unwrap()
            .roots
            .iter()
            .map(|r| r.coeffs().to_vec())
            .collect();
        prop_assert_eq!(ours, common::root_sequence(&g, w.letters()));
    }

    #[test]
    fn classifier_ignores_vertex_names(
        graph in 0usize..6,
        perm in Just((0..8).collect::<Vec<usize>>()).prop_shuffle(),
    ) {
        let g = [
            CoxeterGraph::type_a(6),
            CoxeterGraph::type_d(7),
            CoxeterGraph::type_e(8),
            CoxeterGraph::cycle(5),
            CoxeterGraph::type_e(6),
            CoxeterGraph::type_d(4),
        ][graph].clone();
        let n = g.rank();
        let order: Vec<usize> = perm.into_iter().filter(|&v| v < n).collect();
        let names: Vec<String> = order.iter().map(|&v| format!("v{}", g.name(v))).collect();
        let edges: Vec<(String, String)> = g
            .edges()
            .into_iter()
            .map(|(a, b)| (format!("v{}", g.name(a)), format!("v{}", g.name(b))))
            .collect();
        let relabeled = CoxeterGraph::new(&names, &edges).unwrap();
        let shape = |g: &CoxeterGraph| {
            let c = classify_graph(g);
            let mut labels: Vec<_> = c.components.iter().map(|t| (t.label, t.n)).collect();
            labels.sort();
            (labels, c.verdict)
        };
        prop_assert_eq!(shape(&g), shape(&relabeled));
    }
}

#[test]
fn reflections_are_involutions() {
    for g in [
        CoxeterGraph::type_a(3),
        CoxeterGraph::type_d(4),
        CoxeterGraph::cycle(3),
    ] {
        for r in orbit(&g, 4) {
            for i in 0..g.rank() {
                assert_eq!(g.reflect(i, &g.reflect(i, &r).unwrap()).unwrap(), r);
            }
        }
    }
}

#[test]
fn images_of_simple_roots_are_roots() {
    for g in [CoxeterGraph::type_a(3), CoxeterGraph::type_d(4)] {
        for e in elements(&g, 6) {
            for j in 0..g.rank() {
                let col = e.column(j);
                assert!(
                    col.iter().all(|&c| c >= 0) || col.iter().all(|&c| c <= 0),
                    "{col:?}"
                );
            }
        }
    }
}

#[test]
fn enumeration_agrees_with_brute_force() {
    for g in [
        CoxeterGraph::type_a(3),
        CoxeterGraph::type_d(4),
        CoxeterGraph::cycle(3),
    ] {
        let oracle = common::brute_force(&g, 5);
        let ours = elements(&g, 5);
        assert_eq!(ours.len(), oracle.len());
        for e in &ours {
            let key: common::Key = (0..g.rank()).map(|j| e.column(j)).collect();
            assert_eq!(oracle[&key].length, e.length());
        }
    }
}

#[test]
fn braid_closure_is_independent_of_the_start() {
    for g in [CoxeterGraph::type_a(3), CoxeterGraph::type_d(4)] {
        for e in elements(&g, 64) {
            let words = reduced_words(&g, &e, CAP).unwrap();
            let last = words.last().unwrap();
            assert_eq!(reduced_words_from(&g, last, CAP).unwrap(), words);
        }
    }
}

#[test]
fn inversion_set_does_not_depend_on_the_word() {
    for g in [CoxeterGraph::type_a(3), CoxeterGraph::type_d(4)] {
        for e in elements(&g, 64) {
            let expected = inversion_set(&g, &e);
            assert_eq!(expected.len(), e.length());
            for w in reduced_words(&g, &e, CAP).unwrap() {
                let mut roots = root_sequence(&g, &w).unwrap().roots;
                roots.sort();
                assert_eq!(roots, expected, "{w}");
            }
        }
    }
}

#[test]
fn word_classes_and_root_sequence_classes_correspond() {
    let g = CoxeterGraph::type_a(3);
    for e in elements(&g, 6) {
        let p = ElementProfile::new(&g, &e, CAP).unwrap();
        assert_eq!(
            root_sequence_classes(&g, &p.sequences).len(),
            p.class_count()
        );
    }
}

/// Contracted words of an element, read off one profile instead of calling
/// `is_contracted` per word.
fn contracted_words(g: &CoxeterGraph, p: &ElementProfile) -> Vec<Word> {
    if !p.is_freely_braided() {
        return Vec::new();
    }
    p.words
        .iter()
        .filter(|w| max_braid_terms(g, w) == p.n())
        .cloned()
        .collect()
}

#[test]
fn contracted_words_agree_with_is_contracted() {
    let g = CoxeterGraph::type_a(4);
    for e in elements(&g, 64) {
        let p = ElementProfile::new(&g, &e, CAP).unwrap();
        let fast: Vec<Word> = contracted_words(&g, &p);
        let slow: Vec<Word> = p
            .words
            .iter()
            .filter(|w| is_contracted(&g, w).unwrap())
            .cloned()
            .collect();
        assert_eq!(fast, slow);
    }
}

#[test]
fn closeness_keeps_element_and_contractedness() {
    for g in [CoxeterGraph::type_a(4), CoxeterGraph::type_d(4)] {
        for e in elements(&g, 64) {
            let p = ElementProfile::new(&g, &e, CAP).unwrap();
            let contracted: BTreeSet<Word> = contracted_words(&g, &p).into_iter().collect();
            for w in &p.words {
                for x in close_words(&g, w) {
                    assert_eq!(g.element_of(&x).unwrap(), e, "{x} close to {w}");
                    if contracted.contains(w) {
                        assert!(contracted.contains(&x), "{x} close to {w}");
                    }
                }
            }
        }
    }
}

#[test]
fn projection_lands_on_zero_triples() {
    for g in [CoxeterGraph::type_a(4), CoxeterGraph::type_d(4)] {
        for e in elements(&g, 64) {
            let p = ElementProfile::new(&g, &e, CAP).unwrap();
            for w in contracted_words(&g, &p) {
                let x = fc_projection(&g, &w).unwrap();
                assert_eq!(n_stat(&g, &g.element_of(&x).unwrap()).unwrap(), 0, "{w}");
            }
        }
    }
}

#[test]
fn growth_counts_are_nested_and_vanish_for_finite_types() {
    for (g, longest) in [
        (CoxeterGraph::type_a(2), 3),
        (CoxeterGraph::type_a(3), 6),
        (CoxeterGraph::type_d(4), 12),
    ] {
        let t = growth_probe(&g, longest + 1, 1_000_000, CAP).unwrap();
        for r in &t.rows {
            assert!(r.fully_commutative <= r.freely_braided && r.freely_braided <= r.total);
        }
        assert_eq!(t.rows[longest + 1].total, 0);
        assert_eq!(t.rows[longest].fully_commutative, 0);
    }
    let t = growth_probe(&CoxeterGraph::cycle(3), 8, 1_000_000, CAP).unwrap();
    assert!(t.rows[1..]
        .iter()
        .all(|r| r.fully_commutative > 0 && r.freely_braided > 0));
}

#[test]
fn verify_suite_passes_on_small_groups() {
    for (g, max_len) in [
        (CoxeterGraph::type_a(3), 6),
        (CoxeterGraph::type_a(4), 10),
        (CoxeterGraph::type_d(4), 12),
        (CoxeterGraph::cycle(3), 8),
        (CoxeterGraph::cycle(4), 6),
    ] {
        let report = verify_suite(&g, max_len, Budgets::default());
        for c in &report.checks {
            assert_eq!(
                c.status,
                Status::Pass,
                "{} on {}: {:?}",
                c.name,
                g.to_json(),
                c.counterexample
            );
        }
    }
}

#[test]
fn verify_report_is_deterministic() {
    let g = CoxeterGraph::type_d(4);
    let a = serde_json::to_string(&verify_suite(&g, 6, Budgets::default())).unwrap();
    let b = serde_json::to_string(&verify_suite(&g, 6, Budgets::default())).unwrap();
    assert_eq!(a, b);
}
