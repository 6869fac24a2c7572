mod common;

use std::collections::BTreeSet;

use common::*;
use piwtilt_core::coxeter::*;
use proptest::prelude::*;

/// An acyclic quiver on up to four vertices: arrows only go from smaller to
/// larger index, with multiplicity 0, 1 or 2 per pair.
fn quiver_strategy() -> impl Strategy<Value = Quiver> {
    (2usize..=4)
        .prop_flat_map(|n| (Just(n), proptest::collection::vec(0usize..3, n * (n - 1) / 2)))
        .prop_map(|(n, mult)| {
            let names: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
            let mut arrows = Vec::new();
            let mut k = 0;
            for i in 0..n {
                for j in i + 1..n {
                    for c in 0..mult[k] {
                        arrows.push((names[i].clone(), names[j].clone(), format!("a{i}{j}{c}")));
                    }
                    k += 1;
                }
            }
            Quiver::new(&names, &arrows).unwrap()
        })
}

/// Grows a reduced word letter by letter, skipping letters that would shorten it.
fn reduced_word(q: &Quiver, picks: &[usize]) -> Word {
    let ctx = CoxeterContext::new(q.clone());
    let mut letters = Vec::new();
    for &p in picks {
        let u = p % q.num_vertices();
        let w = Word::from_indices(letters.clone());
        if is_positive(&ctx.act(&w, &ctx.simple_root(u)).unwrap()) {
            letters.push(u);
        }
    }
    Word::from_indices(letters)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn generated_words_are_reduced(q in quiver_strategy(), picks in proptest::collection::vec(0usize..4, 0..12)) {
        let w = reduced_word(&q, &picks);
        prop_assert!(CoxeterContext::new(q.clone()).is_reduced(&w).unwrap());
    }

    #[test]
    fn greedy_subword_matches_exhaustive(q in quiver_strategy(), picks in proptest::collection::vec(0usize..4, 0..12)) {
        let w = reduced_word(&q, &picks);
        prop_assert_eq!(contains_coxeter_subword(&q, &w), contains_coxeter_subword_exhaustive(&q, &w));
    }

    #[test]
    fn c_ending_or_starting_gives_coxeter_subword(q in quiver_strategy(), picks in proptest::collection::vec(0usize..4, 0..12)) {
        let w = reduced_word(&q, &picks);
        let all: BTreeSet<usize> = (0..q.num_vertices()).collect();
        prop_assume!(w.stats(&q).support == all);
        if is_c_ending(&q, &w, &all) || is_c_starting(&q, &w, &all) {
            prop_assert!(contains_coxeter_subword(&q, &w));
        }
    }

    #[test]
    fn reflections_are_involutions(q in quiver_strategy(), u in 0usize..4, x in proptest::collection::vec(-5i64..5, 4)) {
        let ctx = CoxeterContext::new(q.clone());
        let u = u % q.num_vertices();
        let x = &x[..q.num_vertices()];
        prop_assert_eq!(ctx.reflect(u, &ctx.reflect(u, x).unwrap()).unwrap(), x.to_vec());
    }
}

#[test]
fn example_words_on_their_quivers() {
    let t = triangle();
    let all: BTreeSet<usize> = (0..3).collect();
    assert!(is_c_ending(&t, &word(&t, EXTILT_A), &all));
    assert!(is_c_starting(&t, &word(&t, EXTILT_B), &all));
    assert!(!satisfies_diamond(&t, &word(&t, EXNOTDIA)));
    assert!(contains_coxeter_subword(&t, &word(&t, EXNOTDIA)));
    let w = wild();
    let c = word(&w, EXTILT_C);
    let all: BTreeSet<usize> = (0..4).collect();
    assert!(!is_c_ending(&w, &c, &all) && !is_c_starting(&w, &c, &all));
    assert!(satisfies_diamond(&w, &c));
    assert!(contains_coxeter_subword(&w, &c));
    for (q, w) in reference_words() {
        assert!(CoxeterContext::new(q.clone()).is_reduced(&w).unwrap());
    }
}

#[test]
fn coxeter_element_words() {
    let t = triangle();
    for order in t.all_topological_orders() {
        let c = Word::from_indices(order);
        assert!(contains_coxeter_subword(&t, &c));
        assert!(CoxeterContext::new(t.clone()).is_reduced(&c).unwrap());
    }
    assert!(!contains_coxeter_subword(&t, &word(&t, "3,2,1")));
}
