//! The graded algebra `Π(w) = Π/I(w)`, the ideals `I_{k,m}` and the modules
//! `M^i`.

mod bounded;
mod column;
mod paths;

pub use bounded::bounded_columns;
pub use column::{double_action_quiver, ordinary, star, Column};
pub use paths::{Path, PathTable};

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use crate::coxeter::{CoxeterContext, Quiver, Word, WordStats};
use crate::error::Error;
use crate::linalg::{unit, Field, Subspace};
use crate::modules::{ActionQuiver, Algebra, Cyclic, Module, Slot, SlotSpaces};

pub const DEFAULT_MAX_DEGREE: usize = 64;

type Spaces<E> = BTreeMap<Slot, Arc<Subspace<E>>>;

/// Graded pieces of `Πe_v` for every vertex, without any quotient.
pub fn preprojective_columns<F: Field>(field: F, q: &Quiver, max_degree: usize) -> Vec<Column<F>> {
    let paths = Arc::new(PathTable::new(q));
    let action = Arc::new(double_action_quiver(q));
    (0..q.num_vertices())
        .map(|v| {
            let mut c = Column::new(field.clone(), q, paths.clone(), action.clone(), v);
            for _ in 0..max_degree {
                c.extend();
            }
            c
        })
        .collect()
}

/// `dim Π_d` for `d = 0..=max_degree`.
pub fn preprojective_dims<F: Field>(field: F, q: &Quiver, max_degree: usize) -> Vec<usize> {
    let cols = preprojective_columns(field, q, max_degree);
    (0..=max_degree as i32)
        .map(|d| cols.iter().map(|c| c.degree_dim(d)).sum())
        .collect()
}

/// `Π(w)` together with the ideal chains `I_{k,m} = I_{u_k} ⋯ I_{u_m}`.
#[derive(Clone, Debug)]
pub struct Piw<F: Field> {
    field: F,
    input: Quiver,
    quiver: Quiver,
    support: Vec<usize>,
    word: Word,
    action: Arc<ActionQuiver>,
    horizon: i32,
    columns: Vec<Module<F>>,
    // [column][(k, m)] for 1 <= k <= m <= l
    ideals: Vec<BTreeMap<(usize, usize), SlotSpaces<F::Elem>>>,
    algebra: Algebra<F>,
    piw_columns: Vec<Module<F>>,
}

struct Support {
    sub: Quiver,
    old: Vec<usize>,
    word: Word,
}

impl Support {
    fn new(q: &Quiver, w: &Word) -> Result<Self, Error> {
        CoxeterContext::new(q.clone()).require_reduced(w)?;
        let stats = w.stats(q);
        let (sub, old) = q.full_subquiver(&stats.support);
        let mut new_of = vec![usize::MAX; q.num_vertices()];
        for (i, &o) in old.iter().enumerate() {
            new_of[o] = i;
        }
        let word = Word::from_indices(w.letters().iter().map(|&u| new_of[u]).collect());
        Ok(Support { sub, old, word })
    }
}

impl<F: Field> Piw<F> {
    /// Builds `Π(w)` over the full subquiver on the support of `w`, starting
    /// from `Π` modulo the paths that lie in `I(w)` for combinatorial reasons.
    pub fn build(field: F, q: &Quiver, w: &Word, max_degree: usize) -> Result<Self, Error> {
        let s = Support::new(q, w)?;
        let action = Arc::new(double_action_quiver(&s.sub));
        let ambient = bounded_columns(&field, &s.sub, &action, s.word.letters());
        let n = s.sub.num_vertices();
        let top = ambient.iter().filter_map(|m| m.degree_range()).map(|r| r.1).max().unwrap_or(-1);
        let mut chains: Vec<BTreeMap<(usize, usize), Spaces<F::Elem>>> = vec![BTreeMap::new(); n];
        let mut partial = Vec::new();
        let mut horizon = -1;
        for d in 0..=top {
            let mut quotient_dim = 0;
            for v in 0..n {
                extend_chains(&ambient[v], &s.word, d, &mut chains[v]);
                quotient_dim += killed_gap(&ambient[v], &chains[v], s.word.len(), d);
            }
            if quotient_dim > 0 {
                horizon = d;
            }
            partial.push(quotient_dim);
        }
        if horizon > max_degree as i32 {
            partial.truncate(max_degree + 1);
            return Err(Error::DegreeCap { cap: max_degree, partial });
        }
        Ok(Self::assemble(field, q, s, action, ambient, chains, horizon))
    }

    /// Same algebra, built from the degreewise tensor construction of `Πe_v`
    /// without any combinatorial truncation. Only practical for small quivers.
    pub fn build_via_tensor(field: F, q: &Quiver, w: &Word, max_degree: usize) -> Result<Self, Error> {
        let s = Support::new(q, w)?;
        let l = s.word.len();
        let n = s.sub.num_vertices();
        let paths = Arc::new(PathTable::new(&s.sub));
        let action = Arc::new(double_action_quiver(&s.sub));
        let mut cols: Vec<Column<F>> = (0..n)
            .map(|v| Column::new(field.clone(), &s.sub, paths.clone(), action.clone(), v))
            .collect();
        let mut chains: Vec<BTreeMap<(usize, usize), Spaces<F::Elem>>> = vec![BTreeMap::new(); n];
        let mut partial = Vec::new();
        let mut d: i32 = 0;
        let horizon = loop {
            if d > 0 {
                for c in cols.iter_mut() {
                    c.extend();
                }
            }
            let mut quotient_dim = 0;
            for v in 0..n {
                extend_chains(cols[v].module(), &s.word, d, &mut chains[v]);
                quotient_dim += killed_gap(cols[v].module(), &chains[v], l, d);
            }
            if quotient_dim == 0 {
                break d - 1;
            }
            partial.push(quotient_dim);
            if d as usize >= max_degree {
                return Err(Error::DegreeCap {
                    cap: max_degree,
                    partial,
                });
            }
            d += 1;
        };
        let ambient = cols.iter().map(|c| c.module().clone()).collect();
        Ok(Self::assemble(field, q, s, action, ambient, chains, horizon))
    }

    fn assemble(
        field: F,
        q: &Quiver,
        s: Support,
        action: Arc<ActionQuiver>,
        ambient: Vec<Module<F>>,
        chains: Vec<BTreeMap<(usize, usize), Spaces<F::Elem>>>,
        horizon: i32,
    ) -> Self {
        let n = s.sub.num_vertices();
        let l = s.word.len();
        let keep = |s: Slot| s.degree <= horizon + 1;
        let all_arrows: Vec<usize> = (0..action.arrows.len()).collect();
        let columns: Vec<Module<F>> = ambient
            .iter()
            .map(|m| m.restrict(action.clone(), &all_arrows, keep))
            .collect();
        let ideals: Vec<BTreeMap<(usize, usize), SlotSpaces<F::Elem>>> = chains
            .into_iter()
            .enumerate()
            .map(|(v, ch)| {
                ch.into_iter()
                    .map(|(km, spaces)| {
                        let sp = columns[v]
                            .slots()
                            .map(|(s, dim)| {
                                let space = spaces.get(&s).map(|a| (**a).clone()).unwrap_or_else(|| Subspace::zero(dim));
                                (s, space)
                            })
                            .collect();
                        (km, sp)
                    })
                    .collect()
            })
            .collect();
        let mut piw = Piw {
            field: field.clone(),
            input: q.clone(),
            quiver: s.sub,
            support: s.old,
            word: s.word,
            action: action.clone(),
            horizon,
            columns,
            ideals,
            algebra: Algebra {
                field: field.clone(),
                quiver: action.clone(),
                projectives: Vec::new(),
            },
            piw_columns: Vec::new(),
        };
        let mut projectives = Vec::with_capacity(n);
        let mut piw_columns = Vec::with_capacity(n);
        for v in 0..n {
            let (m, gen) = piw.column_quotient(v, l);
            let g = Slot::new(v, 0);
            projectives.push(Cyclic::generated(&m, g, &gen));
            piw_columns.push(m);
        }
        piw.algebra.projectives = projectives;
        piw.piw_columns = piw_columns;
        piw
    }

    /// `(Πe_v)/I_{1,m}e_v` and the image of `e_v`.
    fn column_quotient(&self, v: usize, m: usize) -> (Module<F>, Vec<F::Elem>) {
        let zero = BTreeMap::new();
        let spaces = if m == 0 { &zero } else { &self.ideals[v][&(1, m)] };
        let (quo, proj) = self.columns[v].quotient(spaces);
        let g = Slot::new(v, 0);
        let gen = proj.apply(&self.field, g, &unit(&self.field, self.columns[v].dim(g), 0), quo.dim(g));
        (quo, gen)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    /// The input quiver.
    pub fn input_quiver(&self) -> &Quiver {
        &self.input
    }

    /// The full subquiver on the support; all vertex indices below refer to it.
    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    /// Input index of each support vertex.
    pub fn support(&self) -> &[usize] {
        &self.support
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn stats(&self) -> WordStats {
        self.word.stats(&self.quiver)
    }

    /// Positions `p_u` of last occurrences.
    pub fn last_occurrences(&self) -> BTreeSet<usize> {
        self.stats().last_positions()
    }

    pub fn action_quiver(&self) -> &Arc<ActionQuiver> {
        &self.action
    }

    /// Largest degree with `Π(w)_d ≠ 0`; `-1` for the zero algebra.
    pub fn horizon(&self) -> i32 {
        self.horizon
    }

    pub fn algebra(&self) -> &Algebra<F> {
        &self.algebra
    }

    /// The ambient column (a quotient of `Πe_v` by part of `I(w)e_v`)
    /// truncated above `horizon + 1`.
    pub fn pi_column(&self, v: usize) -> &Module<F> {
        &self.columns[v]
    }

    /// `Π(w)e_v`.
    pub fn piw_column(&self, v: usize) -> &Module<F> {
        &self.piw_columns[v]
    }

    pub fn dim(&self) -> usize {
        self.piw_columns.iter().map(|m| m.total_dim()).sum()
    }

    /// `dim Π(w)_d` for `d = 0..=horizon`.
    pub fn degree_dims(&self) -> Vec<usize> {
        (0..=self.horizon)
            .map(|d| self.piw_columns.iter().map(|m| m.dim_in_degree(d)).sum())
            .collect()
    }

    /// `dim e_x Π(w)_d e_v`, keyed by `(x, v, d)`.
    pub fn dim_table(&self) -> BTreeMap<(usize, usize, i32), usize> {
        let mut out = BTreeMap::new();
        for (v, m) in self.piw_columns.iter().enumerate() {
            for (s, d) in m.slots() {
                out.insert((s.vertex, v, s.degree), d);
            }
        }
        out
    }

    /// `I_{k,m}e_v` inside the ambient column; `k = m + 1` gives all of it.
    pub fn ideal(&self, k: usize, m: usize, v: usize) -> Result<SlotSpaces<F::Elem>, Error> {
        let l = self.len();
        if m > l || k == 0 || k > m + 1 {
            return Err(Error::IndexOutOfRange { index: k.max(m), len: l });
        }
        if k == m + 1 {
            return Ok(self.columns[v].full_spaces());
        }
        Ok(self.ideals[v][&(k, m)].clone())
    }

    /// `M^i = (Π/I_{1,i})e_{u_i}`.
    pub fn module_m(&self, i: usize) -> Result<Module<F>, Error> {
        if i == 0 || i > self.len() {
            return Err(Error::IndexOutOfRange { index: i, len: self.len() });
        }
        Ok(self.column_quotient(self.word.letter(i), i).0)
    }

    /// `(Π/I_{1,m})e_v`.
    pub fn quotient_column(&self, m: usize, v: usize) -> Result<Module<F>, Error> {
        if m > self.len() {
            return Err(Error::IndexOutOfRange { index: m, len: self.len() });
        }
        Ok(self.column_quotient(v, m).0)
    }
}

/// `dim (Πe_v/I(w)e_v)_d` as seen inside `ambient`.
fn killed_gap<F: Field>(ambient: &Module<F>, chains: &BTreeMap<(usize, usize), Spaces<F::Elem>>, l: usize, d: i32) -> usize {
    let n = ambient.quiver().vertices.len();
    (0..n)
        .map(|x| {
            let s = Slot::new(x, d);
            let total = ambient.dim(s);
            let killed = if l == 0 {
                total
            } else {
                chains[&(1, l)].get(&s).map_or(0, |sp| sp.dim())
            };
            total - killed
        })
        .sum()
}

/// Appends degree `d` to every chain `I_{k,m}e_v`.
fn extend_chains<F: Field>(m_: &Module<F>, word: &Word, d: i32, chains: &mut BTreeMap<(usize, usize), Spaces<F::Elem>>) {
    let f = m_.field();
    let n = m_.quiver().vertices.len();
    let l = word.len();
    let dim = |x: usize, d: i32| m_.dim(Slot::new(x, d));
    let full: Vec<Arc<Subspace<F::Elem>>> = (0..n).map(|x| Arc::new(Subspace::full(f, dim(x, d)))).collect();
    for m in 1..=l {
        for k in (1..=m).rev() {
            let u = word.letter(k);
            let mut level: Vec<Arc<Subspace<F::Elem>>> = (0..n)
                .map(|x| {
                    if k == m {
                        full[x].clone()
                    } else {
                        chains[&(k + 1, m)][&Slot::new(x, d)].clone()
                    }
                })
                .collect();
            let mut vectors = Vec::new();
            for (a, arrow) in m_.quiver().arrows_to(u) {
                let src = Slot::new(arrow.from, d - arrow.deg);
                if src.degree < 0 || m_.map(a, src).is_none() {
                    continue;
                }
                let lower;
                let space: &Subspace<F::Elem> = if k == m {
                    if src.degree == d {
                        &full[arrow.from]
                    } else {
                        lower = Subspace::full(f, dim(arrow.from, src.degree));
                        &lower
                    }
                } else {
                    &chains[&(k + 1, m)][&src]
                };
                for b in space.basis() {
                    vectors.push(m_.act(a, src, b));
                }
            }
            level[u] = Arc::new(Subspace::span(f, dim(u, d), vectors));
            let entry = chains.entry((k, m)).or_default();
            for (x, sp) in level.into_iter().enumerate() {
                entry.insert(Slot::new(x, d), sp);
            }
        }
    }
}
