mod common;

use std::collections::HashMap;

use common::*;
use piwtilt_core::coxeter::{Quiver, Word};
use piwtilt_core::linalg::{Field, PrimeField, Rationals, Subspace};
use piwtilt_core::modules::Slot;
use piwtilt_core::preprojective::{preprojective_columns, preprojective_dims, Piw};

/// Raw paths of the double quiver with exactly `d` star arrows, modulo the
/// span of `p·ρ_v·q`. Returns `dim e_x Π_d e_v` keyed by `(x, v)`.
fn raw_path_dims(q: &Quiver, d: usize) -> HashMap<(usize, usize), usize> {
    let f = Rationals;
    let n = q.num_vertices();
    // double arrow k: (source, target, is_star)
    let arrows: Vec<(usize, usize, bool)> = q
        .arrows()
        .iter()
        .flat_map(|a| [(a.from, a.to, false), (a.to, a.from, true)])
        .collect();
    let max_len = d + (d + 1) * (n.max(1) - 1);
    // all paths with at most `d` stars and bounded length, grouped by star count
    let mut by_deg: Vec<Vec<(usize, usize, Vec<usize>)>> = vec![Vec::new(); d + 1];
    let mut stack: Vec<(usize, usize, Vec<usize>, usize)> = (0..n).map(|v| (v, v, Vec::new(), 0)).collect();
    while let Some((s, e, p, stars)) = stack.pop() {
        by_deg[stars].push((s, e, p.clone()));
        if p.len() == max_len {
            continue;
        }
        for (k, &(a, b, is_star)) in arrows.iter().enumerate() {
            if a != e {
                continue;
            }
            let st = stars + is_star as usize;
            if st > d {
                continue;
            }
            let mut np = p.clone();
            np.push(k);
            stack.push((s, b, np, st));
        }
    }
    let top = &by_deg[d];
    let index: HashMap<(usize, Vec<usize>), usize> =
        top.iter().enumerate().map(|(i, (s, _, p))| ((*s, p.clone()), i)).collect();
    let mut rows = Vec::new();
    if d >= 1 {
        for dp in 0..d {
            let dq = d - 1 - dp;
            for (ps, pe, p) in &by_deg[dp] {
                for (qs, _, qq) in &by_deg[dq] {
                    if qs != pe {
                        continue;
                    }
                    let v = *pe;
                    let mut row = vec![f.zero(); top.len()];
                    let mut ok = true;
                    for (i, a) in q.arrows().iter().enumerate() {
                        for (sign, mid) in [(1, a.from == v), (-1, a.to == v)] {
                            if !mid {
                                continue;
                            }
                            let pair = if sign == 1 { [2 * i, 2 * i + 1] } else { [2 * i + 1, 2 * i] };
                            let mut path = p.clone();
                            path.extend(pair);
                            path.extend(qq);
                            match index.get(&(*ps, path)) {
                                Some(&j) => row[j] = f.add(&row[j], &f.from_i64(sign)),
                                None => ok = false,
                            }
                        }
                    }
                    assert!(ok, "length bound too small for the relation oracle");
                    rows.push(row);
                }
            }
        }
    }
    let mut out = HashMap::new();
    for x in 0..n {
        for v in 0..n {
            let ids: Vec<usize> = top
                .iter()
                .enumerate()
                .filter(|(_, (s, e, _))| *s == x && *e == v)
                .map(|(i, _)| i)
                .collect();
            if ids.is_empty() {
                continue;
            }
            let block: Vec<Vec<_>> = rows
                .iter()
                .map(|r| ids.iter().map(|&i| r[i].clone()).collect::<Vec<_>>())
                .filter(|r: &Vec<_>| r.iter().any(|c| !f.is_zero(c)))
                .collect();
            let rank = Subspace::span(&f, ids.len(), block).dim();
            out.insert((x, v), ids.len() - rank);
        }
    }
    out
}

fn check_against_oracle(q: &Quiver, max_d: usize) {
    let cols = preprojective_columns(Rationals, q, max_d);
    for d in 0..=max_d {
        let oracle = raw_path_dims(q, d);
        for (v, c) in cols.iter().enumerate() {
            for x in 0..q.num_vertices() {
                let expect = oracle.get(&(x, v)).copied().unwrap_or(0);
                assert_eq!(c.dim(x, d as i32), expect, "e_{x} Π_{d} e_{v}");
            }
        }
    }
}

#[test]
fn tensor_construction_matches_raw_paths_a2() {
    check_against_oracle(&a2(), 3);
}

#[test]
fn tensor_construction_matches_raw_paths_triangle() {
    check_against_oracle(&triangle(), 3);
}

#[test]
fn tensor_construction_matches_raw_paths_wild() {
    check_against_oracle(&wild(), 2);
}

#[test]
fn a2_preprojective_dims() {
    assert_eq!(preprojective_dims(Rationals, &a2(), 3), vec![3, 1, 0, 0]);
}

#[test]
fn triangle_degree_zero_is_path_algebra() {
    assert_eq!(preprojective_dims(Rationals, &triangle(), 0), vec![7]);
}

#[test]
fn double_quiver_arrow_counts() {
    use piwtilt_core::preprojective::double_action_quiver;
    for (q, n) in [(a2(), 2), (triangle(), 6), (wild(), 12)] {
        let dq = double_action_quiver(&q);
        assert_eq!(dq.arrows.len(), n);
        assert_eq!(dq.arrows.iter().filter(|a| a.deg == 1).count(), n / 2);
    }
}

#[test]
fn preprojective_relation_acts_as_zero() {
    let q = triangle();
    let piw = Piw::build(Rationals, &q, &word(&q, "3,2,1,2,3,2"), 64).unwrap();
    for v in 0..3 {
        let m = piw.piw_column(v);
        assert!(relation_vanishes(&q, m));
    }
    for i in 1..=piw.len() {
        assert!(relation_vanishes(&q, &piw.module_m(i).unwrap()));
    }
}

#[test]
fn a2_hand_oracle_ideals() {
    let q = a2();
    // inside Π itself, I(s1 s2) = span{α*}: it lives in column 1 (α*: 2 -> 1 ends at 1), vertex 2, degree 1
    let piw = Piw::build_via_tensor(Rationals, &q, &word(&q, "1,2"), 64).unwrap();
    assert_eq!(piw.dim(), 3);
    assert_eq!(piw.degree_dims(), vec![3]);
    let mut total = 0;
    for v in 0..2 {
        for (s, sp) in piw.ideal(1, 2, v).unwrap() {
            total += sp.dim();
            if sp.dim() > 0 {
                assert_eq!((s, v), (Slot::new(1, 1), 0));
            }
        }
    }
    assert_eq!(total, 1);
    // Π(w)e_1 = S_1
    assert_eq!(piw.piw_column(0).total_dim(), 1);

    let piw = Piw::build_via_tensor(Rationals, &q, &word(&q, "1,2,1"), 64).unwrap();
    assert_eq!(piw.dim(), 4);
    for v in 0..2 {
        assert!(piw.ideal(1, 3, v).unwrap().values().all(|s| s.is_zero()));
    }
    // I_1 in degree 0 is span{e_2, α}
    let single = Piw::build_via_tensor(Rationals, &q, &word(&q, "1,2,1"), 64).unwrap();
    let i1: usize = (0..2)
        .map(|v| single.ideal(1, 1, v).unwrap().iter().filter(|(s, _)| s.degree == 0).map(|(_, sp)| sp.dim()).sum::<usize>())
        .sum();
    assert_eq!(i1, 2);
}

#[test]
fn ideal_iu_complements_one_idempotent() {
    let q = triangle();
    let piw = Piw::build(Rationals, &q, &word(&q, "1,2,3,1,2,1"), 64).unwrap();
    for k in 1..=piw.len() {
        let u = piw.word().letter(k);
        for v in 0..3 {
            let full = piw.pi_column(v);
            for (s, sp) in piw.ideal(k, k, v).unwrap() {
                let missing = full.dim(s) - sp.dim();
                let expect = usize::from(s.degree == 0 && s.vertex == u && v == u);
                assert_eq!(missing, expect, "I_u at {s:?} column {v}");
            }
        }
    }
}

#[test]
fn empty_word_gives_zero_algebra() {
    let q = triangle();
    let piw = Piw::build(Rationals, &q, &word(&q, ""), 64).unwrap();
    assert_eq!(piw.dim(), 0);
    assert_eq!(piw.horizon(), -1);
}

#[test]
fn non_reduced_word_is_rejected() {
    let q = a2();
    assert!(Piw::build(Rationals, &q, &word(&q, "1,1"), 64).is_err());
}

#[test]
fn exnottilting_column_one() {
    let q = triangle();
    let piw = Piw::build(Rationals, &q, &word(&q, "3,2,1,2,3,2"), 64).unwrap();
    let col = piw.piw_column(0);
    assert_eq!(col.total_dim(), 4);
    let layers: Vec<Vec<usize>> = col
        .radical_layers()
        .iter()
        .map(|l| l.iter().flat_map(|(s, d)| std::iter::repeat(s.vertex + 1).take(*d)).collect())
        .collect();
    assert_eq!(layers, vec![vec![1], vec![2, 3], vec![3]]);
    let m1 = piw.module_m(1).unwrap();
    assert_eq!(m1.total_dim(), 1);
    assert_eq!(m1.dim(Slot::new(2, 0)), 1);
    let m2 = piw.module_m(2).unwrap();
    assert_eq!(m2.total_dim(), 2);
    assert_eq!(m2.dim(Slot::new(1, 0)) + m2.dim(Slot::new(2, 0)) + m2.dim(Slot::new(2, 1)), 2);
}

#[test]
fn coxeter_element_keeps_path_algebra() {
    let q = triangle();
    let piw = Piw::build(Rationals, &q, &word(&q, "1,2,3"), 64).unwrap();
    assert_eq!(piw.degree_dims()[0], 7);
}

#[test]
fn last_occurrence_modules_are_the_projectives() {
    for (q, w) in reference_words() {
        let piw = Piw::build(Rationals, &q, &w, 64).unwrap();
        let stats = piw.stats();
        let mut sum = 0;
        for &u in &stats.support {
            let m = piw.module_m(stats.p(u).unwrap()).unwrap();
            assert_eq!(m.dim_table(), piw.piw_column(u).dim_table());
            sum += m.total_dim();
        }
        assert_eq!(sum, piw.dim());
    }
}

#[test]
fn expression_independence_over_braid_moves() {
    let q = triangle();
    let a = Piw::build(Rationals, &q, &word(&q, "3,2,1,2,3,2"), 64).unwrap();
    let b = Piw::build(Rationals, &q, &word(&q, "3,2,1,3,2,3"), 64).unwrap();
    assert_eq!(a.dim_table(), b.dim_table());
}

#[test]
fn prime_field_agrees_on_examples() {
    let p = PrimeField::new(7).unwrap();
    for (q, w) in reference_words() {
        let a = Piw::build(Rationals, &q, &w, 64).unwrap();
        let b = Piw::build(p, &q, &w, 64).unwrap();
        assert_eq!(a.dim_table(), b.dim_table());
    }
}

#[test]
fn degree_cap_is_reported() {
    let q = wild();
    let w = Word::parse(&q, "4,1,2,3,2,3,1,2,4").unwrap();
    match Piw::build(Rationals, &q, &w, 1) {
        Err(piwtilt_core::Error::DegreeCap { cap, partial }) => {
            assert_eq!(cap, 1);
            assert!(!partial.is_empty());
        }
        other => panic!("expected a degree cap error, got {:?}", other.map(|p| p.dim())),
    }
}

#[test]
fn bounded_and_tensor_routes_agree() {
    let q = triangle();
    let mut words = vec!["3,2,1,2,3,2", "3,2,1,3,2,3", "1,2,3,1,3,2,1", "3,1,2,3,1,3", "1,2,3", "2,1,3,2"];
    words.push("1,2");
    for s in words {
        let w = word(&q, s);
        let a = Piw::build(Rationals, &q, &w, 64).unwrap();
        let b = Piw::build_via_tensor(Rationals, &q, &w, 64).unwrap();
        assert_eq!(a.dim_table(), b.dim_table(), "{s}");
        assert_eq!(a.horizon(), b.horizon(), "{s}");
        for m in 1..=a.len() {
            for k in 1..=m {
                for v in 0..a.quiver().num_vertices() {
                    let quo = |p: &Piw<Rationals>| {
                        let full = p.pi_column(v);
                        p.ideal(k, m, v)
                            .unwrap()
                            .iter()
                            .map(|(s, sp)| (*s, full.dim(*s) - sp.dim()))
                            .filter(|(_, d)| *d > 0)
                            .collect::<Vec<_>>()
                    };
                    assert_eq!(quo(&a), quo(&b), "{s} I_{{{k},{m}}} column {v}");
                }
            }
        }
    }
    let q = a2();
    for s in ["1,2,1", "2,1", "1"] {
        let w = word(&q, s);
        let a = Piw::build(Rationals, &q, &w, 64).unwrap();
        let b = Piw::build_via_tensor(Rationals, &q, &w, 64).unwrap();
        assert_eq!(a.dim_table(), b.dim_table(), "{s}");
    }
}

#[test]
fn wild_example_builds() {
    let q = wild();
    let piw = Piw::build(Rationals, &q, &Word::parse(&q, "4,1,2,3,2,3,1,2,4").unwrap(), 64).unwrap();
    assert!(piw.dim() > 0);
    let stats = piw.stats();
    let sum: usize = stats.support.iter().map(|&u| piw.module_m(stats.p(u).unwrap()).unwrap().total_dim()).sum();
    assert_eq!(sum, piw.dim());
}
