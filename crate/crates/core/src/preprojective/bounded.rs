//! `Πe_v` modulo the paths that already lie in `I(w)`.
//!
//! A path of the double quiver lies in `I(w) = I_{u_1} ⋯ I_{u_l}` as soon as
//! it splits into `l` consecutive pieces with the `k`-th piece meeting a vertex
//! other than `u_k`. Reading the path from its start, pieces of length zero
//! absorb letters different from the current vertex and every arrow absorbs
//! one more letter. Only finitely many paths get stuck before the word runs
//! out, so the quotient below is finite dimensional and still surjects onto
//! `Π(w)e_v`.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::sync::Arc;

use crate::coxeter::Quiver;
use crate::linalg::{Field, Matrix, Subspace};
use crate::modules::{ActionQuiver, Module, Slot};

#[derive(Clone, Debug)]
struct Surviving {
    start: usize,
    end: usize,
    degree: usize,
    arrows: Vec<usize>,
}

/// Double quiver arrow `k` as a path step `(from, to)`: `2i` runs along `α_i`,
/// `2i + 1` runs back along `α_i*`.
fn steps(q: &Quiver) -> Vec<(usize, usize)> {
    q.arrows().iter().flat_map(|a| [(a.from, a.to), (a.to, a.from)]).collect()
}

/// Every path that is not absorbed by `word`.
fn surviving_paths(q: &Quiver, word: &[usize]) -> Vec<Surviving> {
    let steps = steps(q);
    let l = word.len();
    let settle = |x: usize, mut k: usize| {
        while k < l && word[k] != x {
            k += 1;
        }
        k
    };
    let mut out = Vec::new();
    let mut stack: Vec<(Surviving, usize)> = Vec::new();
    for x in 0..q.num_vertices() {
        let k = settle(x, 0);
        if k < l {
            stack.push((
                Surviving {
                    start: x,
                    end: x,
                    degree: 0,
                    arrows: Vec::new(),
                },
                k,
            ));
        }
    }
    while let Some((p, k)) = stack.pop() {
        for (i, &(a, b)) in steps.iter().enumerate() {
            if a != p.end {
                continue;
            }
            let k2 = settle(b, k + 1);
            if k2 < l {
                let mut arrows = p.arrows.clone();
                arrows.push(i);
                stack.push((
                    Surviving {
                        start: p.start,
                        end: b,
                        degree: p.degree + i % 2,
                        arrows,
                    },
                    k2,
                ));
            }
        }
        out.push(p);
    }
    out
}

struct Block<E> {
    paths: Vec<usize>,
    relations: Subspace<E>,
    free: Vec<usize>,
}

/// `Πe_v / J e_v` for every support vertex `v`, where `J ⊆ I(w)` is spanned by
/// the absorbed paths.
pub fn bounded_columns<F: Field>(field: &F, q: &Quiver, action: &Arc<ActionQuiver>, word: &[usize]) -> Vec<Module<F>> {
    let all = surviving_paths(q, word);
    (0..q.num_vertices())
        .map(|v| {
            let paths: Vec<&Surviving> = all.iter().filter(|p| p.end == v).collect();
            column(field, q, action, &paths)
        })
        .collect()
}

fn column<F: Field>(f: &F, q: &Quiver, action: &Arc<ActionQuiver>, paths: &[&Surviving]) -> Module<F> {
    let steps = steps(q);
    let lookup: HashMap<(usize, &[usize]), usize> = paths
        .iter()
        .enumerate()
        .map(|(i, p)| ((p.start, p.arrows.as_slice()), i))
        .collect();
    let mut blocks: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    let mut position = vec![0; paths.len()];
    for (i, p) in paths.iter().enumerate() {
        let b = blocks.entry((p.start, p.degree)).or_default();
        position[i] = b.len();
        b.push(i);
    }

    let mut rows: BTreeMap<(usize, usize), Vec<Vec<F::Elem>>> = BTreeMap::new();
    let mut seen: HashSet<(usize, Vec<usize>, Vec<usize>)> = HashSet::new();
    for p in paths {
        for i in 0..p.arrows.len().saturating_sub(1) {
            let (a, b) = (p.arrows[i], p.arrows[i + 1]);
            if a / 2 != b / 2 || a == b {
                continue;
            }
            let (pre, post) = (&p.arrows[..i], &p.arrows[i + 2..]);
            if !seen.insert((p.start, pre.to_vec(), post.to_vec())) {
                continue;
            }
            let x = steps[a].0;
            let key = (p.start, p.degree);
            let width = blocks[&key].len();
            let mut row = vec![f.zero(); width];
            for (j, arrow) in q.arrows().iter().enumerate() {
                for (pair, sign, hit) in [([2 * j, 2 * j + 1], 1, arrow.from == x), ([2 * j + 1, 2 * j], -1, arrow.to == x)] {
                    if !hit {
                        continue;
                    }
                    let mut term = pre.to_vec();
                    term.extend(pair);
                    term.extend(post);
                    if let Some(&t) = lookup.get(&(p.start, term.as_slice())) {
                        row[position[t]] = f.add(&row[position[t]], &f.from_i64(sign));
                    }
                }
            }
            if row.iter().any(|c| !f.is_zero(c)) {
                rows.entry(key).or_default().push(row);
            }
        }
    }

    let built: BTreeMap<(usize, usize), Block<F::Elem>> = blocks
        .into_iter()
        .map(|(key, ids)| {
            let relations = Subspace::span(f, ids.len(), rows.remove(&key).unwrap_or_default());
            let free = relations.free_columns();
            (
                key,
                Block {
                    paths: ids,
                    relations,
                    free,
                },
            )
        })
        .collect();

    let mut module = Module::new(f.clone(), action.clone());
    for (&(x, d), b) in &built {
        module.set_dim(Slot::new(x, d as i32), b.free.len());
    }
    for (&(x, d), b) in &built {
        if b.free.is_empty() {
            continue;
        }
        for (k, &(from, to)) in steps.iter().enumerate() {
            if to != x {
                continue;
            }
            let target = (from, d + k % 2);
            let Some(tb) = built.get(&target) else { continue };
            if tb.free.is_empty() {
                continue;
            }
            let columns: Vec<Vec<F::Elem>> = b
                .free
                .iter()
                .map(|&c| {
                    let p = paths[b.paths[c]];
                    let mut arrows = vec![k];
                    arrows.extend(&p.arrows);
                    let mut raw = vec![f.zero(); tb.paths.len()];
                    if let Some(&t) = lookup.get(&(from, arrows.as_slice())) {
                        raw[position[t]] = f.one();
                    }
                    let r = tb.relations.reduce(f, &raw);
                    tb.free.iter().map(|&i| r[i].clone()).collect()
                })
                .collect();
            module.set_map(k, Slot::new(x, d as i32), Matrix::from_columns(tb.free.len(), &columns, f.zero()));
        }
    }
    module
}
