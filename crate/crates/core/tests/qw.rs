mod common;

use std::collections::BTreeSet;

use common::*;
use piwtilt_core::coxeter::{CoxeterContext, Quiver, Word};
use piwtilt_core::qw::{build_qw, underline_qw, ArrowKind, DegAcyclic};

fn arrows(q: &Quiver, w: &str) -> BTreeSet<(usize, usize, u8)> {
    build_qw(q, &word(q, w)).unwrap().arrows.iter().map(|a| (a.from, a.to, a.deg)).collect()
}

#[test]
fn triangle_figure_has_fourteen_arrows() {
    let q = triangle();
    let got = arrows(&q, EXTILT_B);
    let want: BTreeSet<(usize, usize, u8)> = [
        (1, 2, 0),
        (1, 3, 0),
        (2, 5, 0),
        (2, 4, 1),
        (3, 4, 1),
        (4, 1, 0),
        (4, 5, 0),
        (4, 6, 0),
        (5, 3, 0),
        (5, 6, 1),
        (5, 7, 1),
        (6, 2, 0),
        (6, 7, 1),
        (7, 4, 0),
    ]
    .into_iter()
    .collect();
    assert_eq!(got, want);
    let qw = build_qw(&q, &word(&q, EXTILT_B)).unwrap();
    assert_eq!(qw.arrows.len(), 14);
    let degree_one: BTreeSet<(usize, usize)> = qw.arrows.iter().filter(|a| a.deg == 1).map(|a| (a.from, a.to)).collect();
    assert_eq!(degree_one, [(2, 4), (3, 4), (5, 6), (5, 7), (6, 7)].into_iter().collect());
}

#[test]
fn arrow_kinds_carry_their_degree() {
    let q = triangle();
    for (q, w) in reference_words() {
        for a in build_qw(&q, &w).unwrap().arrows {
            match a.kind {
                ArrowKind::Left => assert!(a.deg == 0 && a.to < a.from),
                ArrowKind::Q => assert!(a.deg == 0 && a.from < a.to),
                ArrowKind::Qstar => assert!(a.deg == 1 && a.from < a.to),
            }
        }
    }
    let qw = build_qw(&q, &word(&q, EXTILT_B)).unwrap();
    assert_eq!(qw.arrows.iter().filter(|a| a.kind == ArrowKind::Left).count(), 4);
}

#[test]
fn underline_drops_last_occurrences() {
    let q = triangle();
    let under = underline_qw(&q, &word(&q, EXTILT_B)).unwrap();
    assert_eq!(under.ids(), vec![1, 2, 3, 4]);
    let got: BTreeSet<(usize, usize, u8)> = under.arrows.iter().map(|a| (a.from, a.to, a.deg)).collect();
    assert_eq!(got, [(1, 2, 0), (1, 3, 0), (2, 4, 1), (3, 4, 1), (4, 1, 0)].into_iter().collect());
}

/// Arrow rules read off position by position, without the per-arrow scan.
fn qw_oracle(q: &Quiver, w: &Word) -> BTreeSet<(usize, usize, u8)> {
    let l = w.len();
    let u = |i: usize| w.letter(i);
    let mut out = BTreeSet::new();
    for i in 1..=l {
        let next = (i + 1..=l).find(|&j| u(j) == u(i)).unwrap_or(l + 1);
        if next <= l {
            out.insert((next, i, 0));
        }
        for j in i + 1..next {
            let later_same = (j + 1..next).any(|k| u(k) == u(j));
            if later_same {
                continue;
            }
            for a in q.arrows() {
                if a.from == u(i) && a.to == u(j) {
                    out.insert((i, j, 0));
                }
                if a.to == u(i) && a.from == u(j) {
                    out.insert((i, j, 1));
                }
            }
        }
    }
    out
}

#[test]
fn arrow_rules_agree_with_oracle_on_corpus() {
    for q in [a2(), triangle()] {
        for w in CoxeterContext::new(q.clone()).reduced_words(7).unwrap() {
            let got: BTreeSet<_> = build_qw(&q, &w).unwrap().arrows.iter().map(|a| (a.from, a.to, a.deg)).collect();
            assert_eq!(got, qw_oracle(&q, &w), "word {}", w.display(&q));
        }
    }
}

#[test]
fn underline_is_deg_acyclic_on_corpus() {
    let mut words = 0;
    for q in [a2(), triangle()] {
        for w in CoxeterContext::new(q.clone()).reduced_words(8).unwrap() {
            let under = underline_qw(&q, &w).unwrap();
            match under.is_deg_acyclic() {
                DegAcyclic::Order(o) => assert!(under.order_is_valid(&o), "word {}", w.display(&q)),
                DegAcyclic::Cycle(c) => panic!("word {} has a cycle {c:?}", w.display(&q)),
            }
            words += 1;
        }
    }
    assert!(words > 200);
    for (q, w) in reference_words() {
        assert!(underline_qw(&q, &w).unwrap().is_deg_acyclic().holds());
    }
}

#[test]
fn a2_longest_word_order() {
    // Q*: 1 -> 2, 3 -> 2 (reversed degree-1 arrow), 3 -> 1
    let q = a2();
    let full = build_qw(&q, &word(&q, "1,2,1")).unwrap();
    assert_eq!(full.star_quiver().into_iter().collect::<BTreeSet<_>>(), [(1, 2), (3, 2), (3, 1)].into_iter().collect());
    match full.is_deg_acyclic() {
        DegAcyclic::Order(o) => {
            assert_eq!(o, vec![2, 1, 3]);
            assert!(full.order_is_valid(&o));
            assert!(!full.order_is_valid(&[1, 2, 3]));
        }
        DegAcyclic::Cycle(c) => panic!("unexpected cycle {c:?}"),
    }
}

#[test]
fn exports() {
    let q = triangle();
    let qw = build_qw(&q, &word(&q, EXTILT_B)).unwrap();
    let dot = qw.to_dot("w");
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches("->").count(), 14);
    assert_eq!(dot.matches("style=dashed").count(), 5);
    let json = qw.to_json();
    assert_eq!(json["arrows"].as_array().unwrap().len(), 14);
    let first = &json["arrows"][0];
    for key in ["from", "to", "kind", "deg"] {
        assert!(first.get(key).is_some());
    }
}
