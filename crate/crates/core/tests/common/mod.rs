#![allow(dead_code)]

use piwtilt_core::coxeter::{Quiver, Word};
use piwtilt_core::linalg::Field;
use piwtilt_core::modules::{Module, Slot};
use piwtilt_core::preprojective::{ordinary, star};

pub fn a2() -> Quiver {
    Quiver::new(&["1", "2"], &[("1", "2", "alpha")]).unwrap()
}

pub fn triangle() -> Quiver {
    Quiver::new(
        &["1", "2", "3"],
        &[("1", "2", "alpha"), ("2", "3", "beta"), ("1", "3", "gamma")],
    )
    .unwrap()
}

/// 1 ⇉ 2, 2 ⇉ 3, 2 ⇉ 4.
pub fn wild() -> Quiver {
    Quiver::new(
        &["1", "2", "3", "4"],
        &[
            ("1", "2", "a1"),
            ("1", "2", "a2"),
            ("2", "3", "b1"),
            ("2", "3", "b2"),
            ("2", "4", "c1"),
            ("2", "4", "c2"),
        ],
    )
    .unwrap()
}

pub fn word(q: &Quiver, s: &str) -> Word {
    Word::parse(q, s).unwrap()
}

pub const EXNOTTILTING: &str = "3,2,1,2,3,2";
pub const EXTILT_A: &str = "3,2,1,3,2,3";
pub const EXTILT_B: &str = "1,2,3,1,3,2,1";
pub const EXTILT_C: &str = "4,1,2,3,2,3,1,2,4";
pub const EXNOTDIA: &str = "3,1,2,3,1,3";

/// The worked examples, with the extilt(b) word also standing in for the
/// Q(w) figure.
pub fn reference_words() -> Vec<(Quiver, Word)> {
    let t = triangle();
    let w = wild();
    vec![
        (t.clone(), word(&t, EXNOTTILTING)),
        (t.clone(), word(&t, EXTILT_A)),
        (t.clone(), word(&t, EXTILT_B)),
        (w.clone(), word(&w, EXTILT_C)),
        (t.clone(), word(&t, EXNOTDIA)),
    ]
}

/// The preprojective relation at every vertex acts as zero.
pub fn relation_vanishes<F: Field>(q: &Quiver, m: &Module<F>) -> bool {
    let f = m.field();
    let Some((lo, hi)) = m.degree_range() else { return true };
    for d in lo..=hi {
        for x in 0..q.num_vertices() {
            let s = Slot::new(x, d);
            let n = m.dim(s);
            if n == 0 {
                continue;
            }
            let target = Slot::new(x, d + 1);
            let mut acc = vec![vec![f.zero(); n]; m.dim(target)];
            for (i, a) in q.arrows().iter().enumerate() {
                let (first, second, sign) = if a.from == x {
                    (star(i), ordinary(i), 1)
                } else if a.to == x {
                    (ordinary(i), star(i), -1)
                } else {
                    continue;
                };
                let mid = m.target(first, s);
                let prod = m.map_dense(second, mid).mul(f, &m.map_dense(first, s));
                for (r, row) in acc.iter_mut().enumerate() {
                    for (c, v) in row.iter_mut().enumerate() {
                        let t = prod.get(r, c);
                        *v = if sign == 1 { f.add(v, t) } else { f.sub(v, t) };
                    }
                }
            }
            if acc.iter().flatten().any(|v| !f.is_zero(v)) {
                return false;
            }
        }
    }
    true
}

pub fn word_modules(q: &Quiver, w: &str) -> piwtilt_core::tilting::WordModules<piwtilt_core::linalg::Rationals> {
    let p = piwtilt_core::preprojective::Piw::build(piwtilt_core::linalg::Rationals, q, &word(q, w), 64).unwrap();
    piwtilt_core::tilting::WordModules::new(p, 4).unwrap()
}

/// Paths of a quiver with monomial relations: `arrows` are `(from, to)` and a
/// relation `(x, y)` kills every path running through arrow `x` then `y`.
pub fn monomial_algebra_dim(vertices: usize, arrows: &[(usize, usize)], zero: &[(usize, usize)]) -> usize {
    let mut total = vertices;
    let mut layer: Vec<usize> = (0..arrows.len()).collect();
    while !layer.is_empty() {
        total += layer.len();
        let mut next = Vec::new();
        for &last in &layer {
            for (b, &(from, _)) in arrows.iter().enumerate() {
                if from == arrows[last].1 && !zero.contains(&(last, b)) {
                    next.push(b);
                }
            }
        }
        layer = next;
    }
    total
}
