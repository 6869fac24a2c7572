//! Degreewise construction of the left module `Πe_v`.
//!
//! Since the defining relation has degree one, `Π` is the tensor algebra over
//! `KQ` of its degree-one part, and
//!
//! `(Πe_v)_{d+1} = (KQ ⊗ span{α*} ⊗ (Πe_v)_d) / (KQ · ρ · (Πe_v)_d)`.
//!
//! A spanning element `p α* y` is stored as the triple `(p, α, y)` where `p`
//! is a path ending at `t(α)` and `y` is a basis vector of the previous
//! degree at `s(α)`.

use std::collections::HashMap;
use std::sync::Arc;

use super::paths::PathTable;
use crate::coxeter::Quiver;
use crate::linalg::{Field, Matrix, Subspace};
use crate::modules::{ActionArrow, ActionQuiver, Module, Slot};

/// Double quiver arrows as left actions: `2i` is the arrow `α_i` (degree 0),
/// `2i + 1` is `α_i*` (degree 1).
pub fn double_action_quiver(q: &Quiver) -> ActionQuiver {
    let mut arrows = Vec::with_capacity(2 * q.arrows().len());
    for a in q.arrows() {
        // e_s α e_t maps the component at t to the one at s
        arrows.push(ActionArrow {
            label: a.label.clone(),
            from: a.to,
            to: a.from,
            deg: 0,
        });
        arrows.push(ActionArrow {
            label: format!("{}*", a.label),
            from: a.from,
            to: a.to,
            deg: 1,
        });
    }
    ActionQuiver {
        vertices: q.vertices().to_vec(),
        arrows,
    }
}

pub fn ordinary(i: usize) -> usize {
    2 * i
}

pub fn star(i: usize) -> usize {
    2 * i + 1
}

#[derive(Clone, Debug)]
enum Basis<E> {
    Paths(Vec<usize>),
    Quotient {
        index: HashMap<(usize, usize, usize), usize>,
        relations: Subspace<E>,
        free: Vec<usize>,
        raw: Vec<(usize, usize, usize)>,
    },
}

/// `Πe_v` built one degree at a time.
#[derive(Clone, Debug)]
pub struct Column<F: Field> {
    vertex: usize,
    quiver: Quiver,
    paths: Arc<PathTable>,
    // [degree][vertex]
    bases: Vec<Vec<Basis<F::Elem>>>,
    module: Module<F>,
}

impl<F: Field> Column<F> {
    pub fn new(field: F, quiver: &Quiver, paths: Arc<PathTable>, action: Arc<ActionQuiver>, v: usize) -> Self {
        let n = quiver.num_vertices();
        let mut module = Module::new(field.clone(), action);
        let mut per_vertex = vec![Vec::new(); n];
        for p in paths.ending_at(v) {
            per_vertex[paths.get(p).start].push(p);
        }
        for (x, ps) in per_vertex.iter().enumerate() {
            module.set_dim(Slot::new(x, 0), ps.len());
        }
        let mut col = Column {
            vertex: v,
            quiver: quiver.clone(),
            paths,
            bases: vec![per_vertex.into_iter().map(Basis::Paths).collect()],
            module,
        };
        col.set_ordinary_actions(0);
        col
    }

    pub fn vertex(&self) -> usize {
        self.vertex
    }

    pub fn module(&self) -> &Module<F> {
        &self.module
    }

    /// Highest degree built so far.
    pub fn top(&self) -> i32 {
        self.bases.len() as i32 - 1
    }

    pub fn dim(&self, x: usize, d: i32) -> usize {
        self.module.dim(Slot::new(x, d))
    }

    pub fn degree_dim(&self, d: i32) -> usize {
        self.module.dim_in_degree(d)
    }

    fn field(&self) -> &F {
        self.module.field()
    }

    /// Coordinates of a combination of raw triples in block `x` of degree `d`.
    fn reduce(&self, d: usize, x: usize, raw: &[((usize, usize, usize), F::Elem)]) -> Vec<F::Elem> {
        let f = self.field();
        match &self.bases[d][x] {
            Basis::Paths(_) => unreachable!("degree 0 has no raw triples"),
            Basis::Quotient { index, relations, free, raw: all } => {
                let mut v = vec![f.zero(); all.len()];
                for (key, c) in raw {
                    let i = index[key];
                    v[i] = f.add(&v[i], c);
                }
                let r = relations.reduce(f, &v);
                free.iter().map(|&c| r[c].clone()).collect()
            }
        }
    }

    /// Adds the next degree.
    pub fn extend(&mut self) {
        let f = self.field().clone();
        let q = self.quiver.clone();
        let n = q.num_vertices();
        let prev = self.bases.len() as i32 - 1;
        let d = prev + 1;
        let mut blocks = Vec::with_capacity(n);
        for x in 0..n {
            let mut raw = Vec::new();
            for (ai, a) in q.arrows().iter().enumerate() {
                for p in self.paths.starting_at(x) {
                    if self.paths.get(p).end != a.to {
                        continue;
                    }
                    for y in 0..self.dim(a.from, prev) {
                        raw.push((p, ai, y));
                    }
                }
            }
            let index: HashMap<(usize, usize, usize), usize> =
                raw.iter().enumerate().map(|(i, k)| (*k, i)).collect();
            let mut rows = Vec::new();
            for p in self.paths.starting_at(x) {
                let w = self.paths.get(p).end;
                for y in 0..self.dim(w, prev) {
                    let mut row = vec![f.zero(); raw.len()];
                    for (ai, a) in q.arrows().iter().enumerate() {
                        if a.from == w {
                            let pa = self.paths.concat(p, self.paths.arrow(&q, ai)).expect("path extends");
                            let i = index[&(pa, ai, y)];
                            row[i] = f.add(&row[i], &f.one());
                        }
                        if a.to == w {
                            let img = self.module.act(ordinary(ai), Slot::new(w, prev), &crate::linalg::unit(&f, self.dim(w, prev), y));
                            for (yy, c) in img.iter().enumerate() {
                                if !f.is_zero(c) {
                                    let i = index[&(p, ai, yy)];
                                    row[i] = f.sub(&row[i], c);
                                }
                            }
                        }
                    }
                    if row.iter().any(|c| !f.is_zero(c)) {
                        rows.push(row);
                    }
                }
            }
            let relations = Subspace::span(&f, raw.len(), rows);
            let free = relations.free_columns();
            self.module.set_dim(Slot::new(x, d), free.len());
            blocks.push(Basis::Quotient {
                index,
                relations,
                free,
                raw,
            });
        }
        self.bases.push(blocks);
        self.set_ordinary_actions(d as usize);
        self.set_star_actions(d as usize);
    }

    fn set_ordinary_actions(&mut self, d: usize) {
        let f = self.field().clone();
        let q = self.quiver.clone();
        for (ai, a) in q.arrows().iter().enumerate() {
            let (src, dst) = (Slot::new(a.to, d as i32), Slot::new(a.from, d as i32));
            let (ns, nt) = (self.module.dim(src), self.module.dim(dst));
            if ns == 0 || nt == 0 {
                continue;
            }
            let apath = self.paths.arrow(&q, ai);
            let columns: Vec<Vec<F::Elem>> = match (&self.bases[d][a.to], &self.bases[d][a.from]) {
                (Basis::Paths(src_paths), Basis::Paths(dst_paths)) => src_paths
                    .iter()
                    .map(|&p| {
                        let ap = self.paths.concat(apath, p).expect("arrow composes");
                        let mut col = vec![f.zero(); nt];
                        col[dst_paths.iter().position(|&x| x == ap).expect("path listed")] = f.one();
                        col
                    })
                    .collect(),
                (Basis::Quotient { free, raw, .. }, _) => free
                    .iter()
                    .map(|&i| {
                        let (p, al, y) = raw[i];
                        let ap = self.paths.concat(apath, p).expect("arrow composes");
                        self.reduce(d, a.from, &[((ap, al, y), f.one())])
                    })
                    .collect(),
                _ => unreachable!("bases of one degree share a kind"),
            };
            self.module.set_map(ordinary(ai), src, Matrix::from_columns(nt, &columns, f.zero()));
        }
    }

    fn set_star_actions(&mut self, d: usize) {
        let f = self.field().clone();
        let q = self.quiver.clone();
        for (ai, a) in q.arrows().iter().enumerate() {
            let src = Slot::new(a.from, d as i32 - 1);
            let dst = Slot::new(a.to, d as i32);
            let (ns, nt) = (self.module.dim(src), self.module.dim(dst));
            if ns == 0 || nt == 0 {
                continue;
            }
            let e = self.paths.trivial(a.to);
            let columns: Vec<Vec<F::Elem>> = (0..ns)
                .map(|y| self.reduce(d, a.to, &[((e, ai, y), f.one())]))
                .collect();
            self.module.set_map(star(ai), src, Matrix::from_columns(nt, &columns, f.zero()));
        }
    }
}
