//! Graded (stable) endomorphism algebras of `M(w)` with their Gabriel quiver.
//!
//! Products follow the convention `x·y = y ∘ x`, so `e_i A e_j` holds the
//! maps `M^i -> M^j` and an arrow `i -> j` is an irreducible map
//! `M^i -> M^j(s)` of degree `s`.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use serde::Serialize;

use super::WordModules;
use crate::error::Error;
use crate::linalg::{unit, Field, Matrix, Subspace, Tracker};
use crate::modules::{
    compose_homs, global_dimension, hom, identity_coords, shift_window, stable_hom, ActionArrow, ActionQuiver, Algebra,
    Cyclic, GlobalDimension, Module, Presentation, Slot,
};
use crate::qw::QwQuiver;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shifts {
    /// Degree-0 maps only: the algebras `A(w)` and `A̲`.
    Zero,
    /// Every shift where maps can exist.
    All,
}

type Key = (usize, usize, i32);

#[derive(Clone, Debug)]
struct Block<E> {
    layout: Vec<(Slot, usize, usize)>,
    total: usize,
    basis: Vec<Vec<E>>,
    tracker: Tracker<E>,
    skip: usize,
}

/// `⊕_s Hom(M^i, M^j(s))` (or its stable quotient) over a set of summands.
#[derive(Clone, Debug)]
pub struct EndAlgebra<F: Field> {
    field: F,
    stable: bool,
    positions: Vec<usize>,
    alg: Algebra<F>,
    pres: Vec<Presentation<F>>,
    blocks: BTreeMap<Key, Block<F::Elem>>,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct EndArrow {
    pub from: usize,
    pub to: usize,
    pub deg: i32,
    pub count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuiverComparison {
    pub matches: bool,
    /// Arrows of the endomorphism algebra beyond those of the reference.
    pub surplus: Vec<EndArrow>,
    pub missing: Vec<EndArrow>,
}

impl<F: Field> EndAlgebra<F> {
    /// `stable` quotients by maps factoring through projectives; `positions`
    /// selects the summands `M^i`.
    pub fn new(ctx: &WordModules<F>, positions: &[usize], stable: bool, shifts: Shifts) -> Self {
        let f = ctx.field().clone();
        let alg = ctx.algebra().clone();
        let pres: Vec<Presentation<F>> = positions.iter().map(|&i| ctx.presentation(i).clone()).collect();
        let mut blocks = BTreeMap::new();
        for (a, pa) in pres.iter().enumerate() {
            for (b, pb) in pres.iter().enumerate() {
                let range = match shifts {
                    Shifts::Zero => Some((0, 0)),
                    Shifts::All => shift_window(&pa.module, &pb.module),
                };
                let Some((lo, hi)) = range else { continue };
                for s in lo..=hi {
                    let block = if stable {
                        let sh = stable_hom(&alg, pa, pb, s);
                        let (basis, tracker) = sh.quotient_basis(&f);
                        Block {
                            layout: sh.hom.layout.clone(),
                            total: sh.hom.total,
                            skip: sh.projective_part.dim(),
                            basis,
                            tracker,
                        }
                    } else {
                        let h = hom(&alg, pa, &pb.module, s);
                        let mut tracker = Tracker::new(h.total);
                        for v in h.space.basis() {
                            tracker.offer(&f, v);
                        }
                        Block {
                            layout: h.layout.clone(),
                            total: h.total,
                            skip: 0,
                            basis: h.space.basis().to_vec(),
                            tracker,
                        }
                    };
                    if block.total > 0 {
                        blocks.insert((a, b, s), block);
                    }
                }
            }
        }
        EndAlgebra {
            field: f,
            stable,
            positions: positions.to_vec(),
            alg,
            pres,
            blocks,
        }
    }

    pub fn is_stable(&self) -> bool {
        self.stable
    }

    /// Word positions of the summands, in index order.
    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    fn index_of(&self, position: usize) -> Option<usize> {
        self.positions.iter().position(|&p| p == position)
    }

    pub fn dim(&self) -> usize {
        self.blocks.values().map(|b| b.basis.len()).sum()
    }

    /// `dim` of maps `M^i -> M^j(s)`, keyed by positions.
    pub fn block_dims(&self) -> BTreeMap<(usize, usize, i32), usize> {
        self.blocks
            .iter()
            .filter(|(_, b)| !b.basis.is_empty())
            .map(|(&(a, b, s), blk)| ((self.positions[a], self.positions[b], s), blk.basis.len()))
            .collect()
    }

    pub fn block_dim(&self, from: usize, to: usize, shift: i32) -> usize {
        match (self.index_of(from), self.index_of(to)) {
            (Some(a), Some(b)) => self.blocks.get(&(a, b, shift)).map_or(0, |blk| blk.basis.len()),
            _ => 0,
        }
    }

    /// Dimension carried by negative shifts.
    pub fn negative_dim(&self) -> usize {
        self.blocks.iter().filter(|(k, _)| k.2 < 0).map(|(_, b)| b.basis.len()).sum()
    }

    fn combine(&self, key: Key, coords: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let blk = &self.blocks[&key];
        let mut v = vec![f.zero(); blk.total];
        for (c, b) in coords.iter().zip(&blk.basis) {
            if f.is_zero(c) {
                continue;
            }
            for (x, y) in v.iter_mut().zip(b) {
                *x = f.add(x, &f.mul(c, y));
            }
        }
        v
    }

    fn express(&self, key: Key, v: &[F::Elem]) -> Vec<F::Elem> {
        match self.blocks.get(&key) {
            None => {
                debug_assert!(v.iter().all(|c| self.field.is_zero(c)));
                Vec::new()
            }
            Some(blk) => {
                let c = blk.tracker.coords(&self.field, v).expect("composite lies in the hom space");
                c[blk.skip..].to_vec()
            }
        }
    }

    /// `x·y = y ∘ x` for `x` in block `(a, b, s)` and `y` in `(b, c, t)`;
    /// the result lies in `(a, c, s + t)`.
    fn mul(&self, kx: Key, x: &[F::Elem], ky: Key, y: &[F::Elem]) -> (Key, Vec<F::Elem>) {
        assert_eq!(kx.1, ky.0, "blocks do not compose");
        let key = (kx.0, ky.1, kx.2 + ky.2);
        let (a, b, c) = (kx.0, kx.1, ky.1);
        let xv = self.combine(kx, x);
        let yv = self.combine(ky, y);
        let comp = compose_homs(&self.alg, &self.pres[a], &self.pres[b], &self.pres[c].module, kx.2, &xv, ky.2, &yv);
        (key, self.express(key, &comp))
    }

    /// Basis coordinates of the identity of summand `a`.
    fn identity(&self, a: usize) -> Vec<F::Elem> {
        self.express((a, a, 0), &identity_coords(&self.pres[a]))
    }

    /// `rad A`, blockwise in basis coordinates. Summands are indecomposable
    /// with simple top, so an endomorphism is radical exactly when it sends
    /// the generators into the radical.
    pub fn radical(&self) -> BTreeMap<Key, Subspace<F::Elem>> {
        let f = &self.field;
        let mut out = BTreeMap::new();
        for (&key, blk) in &self.blocks {
            let n = blk.basis.len();
            let sp = if key.0 == key.1 && key.2 == 0 {
                let m = &self.pres[key.0].module;
                let rad = m.radical();
                // rows: coordinates of generator images outside the radical
                let mut rows: Vec<Vec<F::Elem>> = Vec::new();
                for (slot, off, dim) in &blk.layout {
                    let Some(r) = rad.get(slot) else { continue };
                    let free = r.free_columns();
                    let images: Vec<Vec<F::Elem>> = blk.basis.iter().map(|b| r.reduce(f, &b[*off..*off + *dim])).collect();
                    for c in free {
                        rows.push(images.iter().map(|v| v[c].clone()).collect());
                    }
                }
                crate::linalg::kernel_of_rows(f, rows, n)
            } else {
                Subspace::full(f, n)
            };
            out.insert(key, sp);
        }
        out
    }

    /// `rad² A`, blockwise.
    pub fn radical_squared(&self, rad: &BTreeMap<Key, Subspace<F::Elem>>) -> BTreeMap<Key, Subspace<F::Elem>> {
        let f = &self.field;
        let mut vecs: BTreeMap<Key, Vec<Vec<F::Elem>>> = BTreeMap::new();
        for (&kx, rx) in rad {
            for (&ky, ry) in rad.range((kx.1, 0, i32::MIN)..=(kx.1, usize::MAX, i32::MAX)) {
                for x in rx.basis() {
                    for y in ry.basis() {
                        let (key, v) = self.mul(kx, x, ky, y);
                        if !v.is_empty() {
                            vecs.entry(key).or_default().push(v);
                        }
                    }
                }
            }
        }
        self.blocks
            .iter()
            .map(|(&k, blk)| (k, Subspace::span(f, blk.basis.len(), vecs.remove(&k).unwrap_or_default())))
            .collect()
    }

    /// Arrows `rad / rad²`, with word positions as vertices.
    pub fn quiver(&self) -> Vec<EndArrow> {
        let rad = self.radical();
        let rad2 = self.radical_squared(&rad);
        let mut out = Vec::new();
        for (k, r) in &rad {
            let count = r.dim() - rad2[k].dim();
            if count > 0 {
                out.push(EndArrow {
                    from: self.positions[k.0],
                    to: self.positions[k.1],
                    deg: k.2,
                    count,
                });
            }
        }
        out.sort();
        out
    }

    /// Compares the arrows of this algebra with those of `reference`.
    pub fn compare_quiver(&self, reference: &QwQuiver) -> QuiverComparison {
        let mut want: BTreeMap<(usize, usize, i32), usize> = BTreeMap::new();
        for a in &reference.arrows {
            *want.entry((a.from, a.to, a.deg as i32)).or_default() += 1;
        }
        let have: BTreeMap<(usize, usize, i32), usize> =
            self.quiver().into_iter().map(|a| ((a.from, a.to, a.deg), a.count)).collect();
        let keys: BTreeSet<_> = want.keys().chain(have.keys()).copied().collect();
        let mut surplus = Vec::new();
        let mut missing = Vec::new();
        for k in keys {
            let (h, w) = (have.get(&k).copied().unwrap_or(0), want.get(&k).copied().unwrap_or(0));
            let arrow = |count| EndArrow {
                from: k.0,
                to: k.1,
                deg: k.2,
                count,
            };
            if h > w {
                surplus.push(arrow(h - w));
            } else if w > h {
                missing.push(arrow(w - h));
            }
        }
        QuiverComparison {
            matches: surplus.is_empty() && missing.is_empty(),
            surplus,
            missing,
        }
    }

    /// Products `x·y` with `x` ending and `y` starting at a summand in `via`
    /// (positions), blockwise: the ideal `A e_via A`.
    pub fn ideal_through(&self, via: &BTreeSet<usize>) -> BTreeMap<Key, Subspace<F::Elem>> {
        let f = &self.field;
        let mids: Vec<usize> = via.iter().filter_map(|&p| self.index_of(p)).collect();
        let mut vecs: BTreeMap<Key, Vec<Vec<F::Elem>>> = BTreeMap::new();
        for (&kx, bx) in &self.blocks {
            // blocks at a summand in `via` contain its identity
            if !mids.contains(&kx.1) || mids.contains(&kx.0) {
                continue;
            }
            for (&ky, by) in self.blocks.range((kx.1, 0, i32::MIN)..=(kx.1, usize::MAX, i32::MAX)) {
                if mids.contains(&ky.1) {
                    continue;
                }
                for i in 0..bx.basis.len() {
                    for j in 0..by.basis.len() {
                        let (key, v) = self.mul(kx, &unit(f, bx.basis.len(), i), ky, &unit(f, by.basis.len(), j));
                        if !v.is_empty() {
                            vecs.entry(key).or_default().push(v);
                        }
                    }
                }
            }
        }
        self.blocks
            .iter()
            .map(|(&k, blk)| {
                let n = blk.basis.len();
                let sp = if mids.contains(&k.0) || mids.contains(&k.1) {
                    Subspace::full(f, n)
                } else {
                    Subspace::span(f, n, vecs.remove(&k).unwrap_or_default())
                };
                (k, sp)
            })
            .collect()
    }

    /// The same subspaces as `ideal_through`, in the hom coordinates of
    /// `Hom(M^i, M^j(s))`.
    pub fn to_hom_coords(&self, spaces: &BTreeMap<Key, Subspace<F::Elem>>) -> BTreeMap<(usize, usize, i32), Subspace<F::Elem>> {
        spaces
            .iter()
            .map(|(&k, sp)| {
                let vecs = sp.basis().iter().map(|c| self.combine(k, c)).collect();
                (
                    (self.positions[k.0], self.positions[k.1], k.2),
                    Subspace::span(&self.field, self.blocks[&k].total, vecs),
                )
            })
            .collect()
    }

    /// The degree-0 part as an algebra given by its projectives `A e_j`, with
    /// lifts of `rad/rad²` as arrows. Vertex `a` is the summand index.
    pub fn to_algebra(&self) -> Result<(Algebra<F>, Vec<Module<F>>), Error> {
        let f = &self.field;
        let rad = self.radical();
        let rad2 = self.radical_squared(&rad);
        let mut arrows = Vec::new();
        let mut reps: Vec<(Key, Vec<F::Elem>)> = Vec::new();
        for (&k, r) in &rad {
            if k.2 != 0 {
                continue;
            }
            let mut t = Tracker::new(r.ambient());
            for v in rad2[&k].basis() {
                t.offer(f, v);
            }
            for v in r.basis() {
                if t.offer(f, v) {
                    // x : M^a -> M^b acts on e_b A e_j, landing in e_a A e_j
                    arrows.push(ActionArrow {
                        label: format!("x{}_{}_{}", self.positions[k.0], self.positions[k.1], reps.len()),
                        from: k.1,
                        to: k.0,
                        deg: 0,
                    });
                    reps.push((k, v.clone()));
                }
            }
        }
        let quiver = Arc::new(ActionQuiver {
            vertices: self.positions.iter().map(|p| p.to_string()).collect(),
            arrows,
        });
        let n = self.positions.len();
        let mut modules = Vec::with_capacity(n);
        let mut projectives = Vec::with_capacity(n);
        for j in 0..n {
            let mut m = Module::new(f.clone(), quiver.clone());
            for i in 0..n {
                m.set_dim(Slot::new(i, 0), self.blocks.get(&(i, j, 0)).map_or(0, |b| b.basis.len()));
            }
            for (ai, (kx, x)) in reps.iter().enumerate() {
                let (k, i) = (kx.0, kx.1);
                let Some(src) = self.blocks.get(&(i, j, 0)) else { continue };
                let nt = self.blocks.get(&(k, j, 0)).map_or(0, |b| b.basis.len());
                if src.basis.is_empty() || nt == 0 {
                    continue;
                }
                let cols: Vec<Vec<F::Elem>> = (0..src.basis.len())
                    .map(|c| self.mul(*kx, x, (i, j, 0), &unit(f, src.basis.len(), c)).1)
                    .collect();
                m.set_map(ai, Slot::new(i, 0), Matrix::from_columns(nt, &cols, f.zero()));
            }
            let id = self.identity(j);
            let p = Cyclic::generated(&m, Slot::new(j, 0), &id);
            if p.module.total_dim() != m.total_dim() {
                return Err(Error::Inconsistent(format!(
                    "arrows of the endomorphism algebra do not generate e_{}",
                    self.positions[j]
                )));
            }
            projectives.push(p);
            modules.push(m);
        }
        Ok((
            Algebra {
                field: f.clone(),
                quiver,
                projectives,
            },
            modules,
        ))
    }

    /// Global dimension of the degree-0 part.
    pub fn global_dimension(&self, cap: usize) -> Result<GlobalDimension, Error> {
        if self.positions.is_empty() {
            return Ok(GlobalDimension::Exact(0));
        }
        let (alg, _) = self.to_algebra()?;
        global_dimension(&alg, cap)
    }
}
